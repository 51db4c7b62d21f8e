//! `GL_q` and `Σ_q` actions on polynomials and divided powers, invariants of
//! cohit spaces and coinvariants of primitives.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::cohit::{kameko_matrix, CohitBasis, WeightSubquotient};
use crate::f2linalg::{echelonize, solve_modulo_quotients, BitMatrix, BitVector, ColumnOrder, QuotientBasis};
use crate::polyspace::{pairing, DualElement, DualMonomial, Monomial, Polynomial, WeightVector, MAX_VARS};
use crate::steenrod::HitOptions;
use crate::Error;

/// An invertible `q × q` matrix `σ` over F2.
///
/// Stored by columns: `column(r)` is the set of `i` with `σ_{i,r} = 1`, so
/// substitution sends `x_r` to `Σ σ_{i,r} x_i` and the dual action sends
/// `a_r` to `Σ σ_{i,r} a_i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct GlMatrix {
    q: u8,
    cols: [u8; MAX_VARS],
}

/// Which group the generators are taken from.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Group {
    Symmetric,
    General,
}

impl GlMatrix {
    #[must_use]
    pub fn identity(q: usize) -> Self {
        assert!((1..=MAX_VARS).contains(&q), "q = {q}");
        let mut cols = [0; MAX_VARS];
        for (r, c) in cols.iter_mut().enumerate().take(q) {
            *c = 1 << r;
        }
        Self { q: q as u8, cols }
    }

    /// From column bitmasks; bit `i` of `cols[r]` is `σ_{i,r}`.
    pub fn from_columns(cols: &[u8]) -> Result<Self, Error> {
        let q = cols.len();
        if !(1..=MAX_VARS).contains(&q) {
            return Err(Error::VariableCount { found: q });
        }
        if cols.iter().any(|&c| c >> q != 0) {
            return Err(Error::Invalid("matrix entry outside q x q"));
        }
        let mut s = Self { q: q as u8, cols: [0; MAX_VARS] };
        s.cols[..q].copy_from_slice(cols);
        if s.to_matrix().rank() != q {
            return Err(Error::SingularMatrix);
        }
        Ok(s)
    }

    /// Entry `(i, r)` of `m` is `σ_{i,r}`.
    pub fn from_matrix(m: &BitMatrix) -> Result<Self, Error> {
        if m.nrows() != m.ncols() {
            return Err(Error::Invalid("matrix is not square"));
        }
        let cols: Vec<u8> = (0..m.ncols())
            .map(|r| (0..m.nrows()).filter(|&i| m.get(i, r)).fold(0, |c, i| c | 1 << i))
            .collect();
        Self::from_columns(&cols)
    }

    /// `σ_j` for `1 <= j <= q`: the swap of `x_j, x_{j+1}` for `j < q`, and the
    /// transvection `x_1 -> x_1 + x_2` for `j = q`.
    pub fn generator(q: usize, j: usize) -> Result<Self, Error> {
        let mut s = Self::identity(q);
        if j == 0 || j > q || (j == q && q < 2) {
            return Err(Error::Invalid("generator index out of range"));
        }
        if j < q {
            s.cols.swap(j - 1, j);
        } else {
            s.cols[0] = 0b11;
        }
        Ok(s)
    }

    /// Generators `σ_1 .. σ_{q-1}` for `Σ_q`, plus `σ_q` for `GL_q`.
    #[must_use]
    pub fn generators(q: usize, group: Group) -> Vec<Self> {
        let top = match group {
            Group::Symmetric => q.saturating_sub(1),
            Group::General if q >= 2 => q,
            Group::General => 0,
        };
        (1..=top).map(|j| Self::generator(q, j).expect("in range")).collect()
    }

    #[must_use]
    pub fn q(&self) -> usize {
        self.q as usize
    }

    #[must_use]
    pub fn column(&self, r: usize) -> u8 {
        self.cols[r]
    }

    #[must_use]
    pub fn entry(&self, i: usize, r: usize) -> bool {
        self.cols[r] >> i & 1 == 1
    }

    #[must_use]
    pub fn to_matrix(&self) -> BitMatrix {
        let q = self.q();
        let mut m = BitMatrix::zeros(q, q);
        for r in 0..q {
            for i in 0..q {
                m.set(i, r, self.entry(i, r));
            }
        }
        m
    }

    #[must_use]
    pub fn transpose(&self) -> Self {
        let q = self.q();
        let mut t = Self { q: self.q, cols: [0; MAX_VARS] };
        for r in 0..q {
            for i in 0..q {
                if self.entry(i, r) {
                    t.cols[i] |= 1 << r;
                }
            }
        }
        t
    }

    /// The matrix acting as `self` followed by `other`:
    /// `substitute(a.then(&b), f) = substitute(&b, &substitute(&a, f))`.
    #[must_use]
    pub fn then(&self, other: &Self) -> Self {
        assert_eq!(self.q, other.q, "variable count mismatch");
        let mut out = Self { q: self.q, cols: [0; MAX_VARS] };
        for r in 0..self.q() {
            for i in 0..self.q() {
                if self.entry(i, r) {
                    out.cols[r] ^= other.cols[i];
                }
            }
        }
        out
    }
}

type Exps = [u32; MAX_VARS];

fn toggle(set: &mut BTreeSet<Exps>, e: Exps) {
    if !set.remove(&e) {
        set.insert(e);
    }
}

/// Terms of `(Σ_{i ∈ vars} x_i)^a`: each binary digit of `a` goes to one variable.
fn power_terms(vars: u8, a: u32) -> Vec<Exps> {
    let idx: Vec<usize> = (0..MAX_VARS).filter(|&i| vars >> i & 1 == 1).collect();
    let mut out = alloc::vec![[0; MAX_VARS]];
    for bit in (0..32).map(|b| 1u32 << b).filter(|b| a & b != 0) {
        out = out
            .iter()
            .flat_map(|e| {
                idx.iter().map(move |&i| {
                    let mut e = *e;
                    e[i] |= bit;
                    e
                })
            })
            .collect();
    }
    out
}

/// Right action `f -> fσ` by linear substitution.
#[must_use]
pub fn substitute(sigma: &GlMatrix, f: &Polynomial) -> Polynomial {
    let q = f.q();
    assert_eq!(q, sigma.q(), "variable count mismatch");
    let mut acc: BTreeSet<Exps> = BTreeSet::new();
    for m in f.terms() {
        let mut partial = BTreeSet::from([[0; MAX_VARS]]);
        for r in 0..q {
            let a = m.exponent(r);
            if a == 0 {
                continue;
            }
            let factor = power_terms(sigma.column(r), a);
            let mut next = BTreeSet::new();
            for p in &partial {
                for t in &factor {
                    let mut e = *p;
                    for i in 0..q {
                        e[i] += t[i];
                    }
                    toggle(&mut next, e);
                }
            }
            partial = next;
        }
        for e in partial {
            toggle(&mut acc, e);
        }
    }
    let terms = acc.into_iter().map(|e| Monomial::new(&e[..q]).expect("q <= MAX_VARS"));
    Polynomial::from_terms(q, f.degree(), terms).expect("substitution preserves degree")
}

/// Distributes `rest` over `vars[k..]` as divided powers multiplied into `cur`,
/// keeping only products with odd coefficient.
fn divided_terms(vars: &[usize], k: usize, rest: u32, cur: &mut Exps, out: &mut BTreeSet<Exps>) {
    let i = vars[k];
    let lo = cur[i];
    if k + 1 == vars.len() {
        if lo & rest == 0 {
            cur[i] = lo + rest;
            toggle(out, *cur);
            cur[i] = lo;
        }
        return;
    }
    for c in (0..=rest).filter(|c| lo & c == 0) {
        cur[i] = lo + c;
        divided_terms(vars, k + 1, rest - c, cur, out);
    }
    cur[i] = lo;
}

/// Left action `θ -> σθ` on divided powers.
#[must_use]
pub fn act_dual(sigma: &GlMatrix, theta: &DualElement) -> DualElement {
    let q = theta.q();
    assert_eq!(q, sigma.q(), "variable count mismatch");
    let mut acc: BTreeSet<Exps> = BTreeSet::new();
    for m in theta.terms() {
        let mut partial = BTreeSet::from([[0; MAX_VARS]]);
        for r in 0..q {
            let a = m.exponent(r);
            if a == 0 {
                continue;
            }
            let vars: Vec<usize> = (0..q).filter(|&i| sigma.entry(i, r)).collect();
            let mut next = BTreeSet::new();
            for p in &partial {
                divided_terms(&vars, 0, a, &mut p.clone(), &mut next);
            }
            partial = next;
        }
        for e in partial {
            toggle(&mut acc, e);
        }
    }
    let terms = acc.into_iter().map(|e| DualMonomial::new(&e[..q]).expect("q <= MAX_VARS"));
    DualElement::from_terms(q, theta.degree(), terms).expect("action preserves degree")
}

/// Invariant classes, as coordinate vectors over a list of basis monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantBasis {
    pub q: usize,
    pub n: u32,
    pub omega: Option<WeightVector>,
    pub group: Group,
    /// Monomials indexing the coordinates.
    pub basis: Vec<Monomial>,
    /// Reduced echelon basis of the invariant subspace.
    pub vectors: Vec<BitVector>,
}

impl InvariantBasis {
    #[must_use]
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    #[must_use]
    pub fn representatives(&self) -> Vec<Polynomial> {
        self.vectors.iter().map(|v| self.representative(v)).collect()
    }

    #[must_use]
    pub fn representative(&self, v: &BitVector) -> Polynomial {
        let terms = v.ones().map(|i| self.basis[i]);
        Polynomial::from_terms(self.q, self.n, terms).expect("basis is homogeneous")
    }
}

fn reduced_solutions(unknowns: usize, images: &[Vec<BitVector>]) -> Vec<BitVector> {
    let sols = solve_modulo_quotients(unknowns, images);
    if sols.is_empty() {
        return sols;
    }
    let e = echelonize(&BitMatrix::from_rows(unknowns, sols), &ColumnOrder::natural(unknowns));
    (0..e.rank()).map(|r| e.row(r)).collect()
}

/// Classes `[f]` of `Q_n` (or of the `omega` subquotient) with `σ_j f ≡ f` for every generator.
pub fn invariants(q: usize, n: u32, group: Group, omega: Option<&WeightVector>) -> Result<InvariantBasis, Error> {
    invariants_with(q, n, group, omega, HitOptions::default())
}

pub fn invariants_with(
    q: usize,
    n: u32,
    group: Group,
    omega: Option<&WeightVector>,
    opts: HitOptions,
) -> Result<InvariantBasis, Error> {
    let gens = GlMatrix::generators(q, group);
    let (basis, images) = match omega {
        None => {
            let cohit = CohitBasis::new(q, n, opts)?;
            let basis = cohit.admissible().to_vec();
            let images = gens
                .iter()
                .map(|s| basis.iter().map(|m| cohit.reduce(&moved(s, m))).collect())
                .collect::<Vec<Vec<_>>>();
            (basis, images)
        }
        Some(w) => {
            let sub = WeightSubquotient::new(q, n, w, opts.max_cols)?;
            let basis = sub.basis().to_vec();
            let images = gens
                .iter()
                .map(|s| basis.iter().map(|m| sub.reduce(&moved(s, m))).collect::<Result<Vec<_>, _>>())
                .collect::<Result<Vec<_>, _>>()?;
            (basis, images)
        }
    };
    let vectors = reduced_solutions(basis.len(), &images);
    Ok(InvariantBasis { q, n, omega: omega.cloned(), group, basis, vectors })
}

/// `(σ + 1) m`.
fn moved(sigma: &GlMatrix, m: &Monomial) -> Polynomial {
    let f = Polynomial::from(*m);
    substitute(sigma, &f).add(&f)
}

/// `GL_q`-invariants inside the kernel of the Kameko map `Q_source -> Q_{(source-q)/2}`.
///
/// Vectors are in admissible coordinates of `Q_source`.
pub fn kameko_kernel_invariants(q: usize, source: u32, opts: HitOptions) -> Result<InvariantBasis, Error> {
    let q32 = q as u32;
    if source < q32 || !(source - q32).is_multiple_of(2) {
        return Err(Error::Invalid("source degree must be 2n + q"));
    }
    let data = kameko_matrix(q, (source - q32) / 2, opts)?;
    let kernel = data.kernel();
    let cohit = &data.source;
    let reps: Vec<Polynomial> = kernel.iter().map(|v| cohit.representative(v)).collect();
    let images: Vec<Vec<BitVector>> = GlMatrix::generators(q, Group::General)
        .iter()
        .map(|s| reps.iter().map(|f| cohit.reduce(&substitute(s, f).add(f))).collect())
        .collect();
    let coeffs = reduced_solutions(kernel.len(), &images);
    let dim = cohit.dim();
    let vectors = coeffs
        .iter()
        .map(|c| c.ones().fold(BitVector::zeros(dim), |acc, i| acc.xor(&kernel[i])))
        .collect();
    Ok(InvariantBasis {
        q,
        n: source,
        omega: None,
        group: Group::General,
        basis: cohit.admissible().to_vec(),
        vectors,
    })
}

/// Which complement of the coinvariant relations supplies representatives.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum RepChoice {
    /// Earliest primitives in the order of their admissible duals.
    #[default]
    First,
    Last,
}

/// `P((P_q)_n^*)` modulo the span of `θ + σ_j θ`.
///
/// A primitive is recorded by its values on the admissible monomials, which
/// identify it as a functional on `Q_n`.
#[derive(Clone, Debug)]
pub struct CoinvariantBasis {
    q: usize,
    n: u32,
    admissible: Vec<Monomial>,
    quotient: QuotientBasis,
    representatives: Vec<DualElement>,
}

impl CoinvariantBasis {
    pub fn new(q: usize, n: u32, opts: HitOptions, choice: RepChoice) -> Result<Self, Error> {
        let cohit = CohitBasis::new(q, n, opts)?;
        let admissible = cohit.admissible().to_vec();
        let prims = cohit.hit_span().dual_basis();
        let dim = admissible.len();
        let values = |theta: &DualElement| {
            BitVector::from_ones(admissible.len(), (0..admissible.len()).filter(|&i| theta.contains(&admissible[i].dual())))
        };
        let mut relations = BitMatrix::new(dim);
        for s in GlMatrix::generators(q, Group::General) {
            for theta in &prims {
                let v = values(&act_dual(&s, theta).add(theta));
                if !v.is_zero() {
                    relations.push(v);
                }
            }
        }
        let order = match choice {
            RepChoice::First => ColumnOrder::reversed(dim),
            RepChoice::Last => ColumnOrder::natural(dim),
        };
        let quotient = echelonize(&relations, &order).into_quotient();
        let mut selected = quotient.selected_columns();
        selected.sort_unstable();
        let representatives = selected.into_iter().map(|c| prims[c].clone()).collect();
        Ok(Self { q, n, admissible, quotient, representatives })
    }

    #[must_use]
    pub fn q(&self) -> usize {
        self.q
    }

    #[must_use]
    pub fn degree(&self) -> u32 {
        self.n
    }

    #[must_use]
    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    /// Primitive representatives, one per class.
    #[must_use]
    pub fn representatives(&self) -> &[DualElement] {
        &self.representatives
    }

    /// Values of a primitive on the admissible monomials.
    #[must_use]
    pub fn values(&self, theta: &DualElement) -> BitVector {
        let adm = &self.admissible;
        BitVector::from_ones(adm.len(), (0..adm.len()).filter(|&i| theta.contains(&adm[i].dual())))
    }

    /// Class coordinates of a primitive, against the representatives.
    #[must_use]
    pub fn reduce(&self, theta: &DualElement) -> BitVector {
        let full = self.quotient.reduce(&self.values(theta));
        let cols = self.quotient.selected_columns();
        let mut order: Vec<usize> = (0..cols.len()).collect();
        order.sort_unstable_by_key(|&i| cols[i]);
        BitVector::from_ones(order.len(), (0..order.len()).filter(|&k| full.get(order[k])))
    }

    /// `<rep_r, f_c>` for coinvariant representatives against invariant classes.
    #[must_use]
    pub fn pairing_matrix(&self, inv: &InvariantBasis) -> BitMatrix {
        let fs = inv.representatives();
        let rows = self
            .representatives
            .iter()
            .map(|t| BitVector::from_ones(fs.len(), (0..fs.len()).filter(|&c| pairing(t, &fs[c]))))
            .collect();
        BitMatrix::from_rows(fs.len(), rows)
    }
}

pub fn coinvariants(q: usize, n: u32) -> Result<CoinvariantBasis, Error> {
    CoinvariantBasis::new(q, n, HitOptions::default(), RepChoice::First)
}
