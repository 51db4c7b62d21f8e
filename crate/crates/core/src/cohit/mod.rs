//! Cohit spaces, weight subquotients, Kameko maps and Singer pruning.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::f2linalg::{echelonize, kernel_of_images, BitMatrix, BitVector, ColumnOrder, EchelonForm, QuotientBasis};
use crate::polyspace::{enumerate_monomials, minimal_spike, mu, Monomial, Polynomial, WeightVector};
use crate::steenrod::{sq_monomial, HitOptions, HitSpan};
use crate::Error;

/// `Q^{(q)}_n` with its admissible basis.
#[derive(Clone, Debug)]
pub struct CohitBasis {
    hit: HitSpan,
    admissible: Vec<Monomial>,
}

impl CohitBasis {
    pub fn new(q: usize, n: u32, opts: HitOptions) -> Result<Self, Error> {
        let hit = HitSpan::new(q, n, opts)?;
        let admissible = hit.admissible();
        Ok(Self { hit, admissible })
    }

    #[must_use]
    pub fn q(&self) -> usize {
        self.hit.q()
    }

    #[must_use]
    pub fn degree(&self) -> u32 {
        self.hit.degree()
    }

    #[must_use]
    pub fn dim(&self) -> usize {
        self.admissible.len()
    }

    /// Admissible monomials in ascending order.
    #[must_use]
    pub fn admissible(&self) -> &[Monomial] {
        &self.admissible
    }

    #[must_use]
    pub fn hit_span(&self) -> &HitSpan {
        &self.hit
    }

    #[must_use]
    pub fn reduce(&self, f: &Polynomial) -> BitVector {
        self.hit.reduce(f)
    }

    #[must_use]
    pub fn is_hit(&self, f: &Polynomial) -> bool {
        self.hit.is_hit(f)
    }

    #[must_use]
    pub fn representative(&self, coords: &BitVector) -> Polynomial {
        assert_eq!(coords.len(), self.dim(), "length mismatch");
        Polynomial::from_terms(self.q(), self.degree(), coords.ones().map(|i| self.admissible[i]))
            .expect("admissible monomials are homogeneous")
    }
}

pub fn cohit_basis(q: usize, n: u32) -> Result<CohitBasis, Error> {
    CohitBasis::new(q, n, HitOptions::default())
}

/// Weight vectors of the monomials of degree `n` in `q` variables, ascending.
#[must_use]
pub fn weights_of_degree(q: usize, n: u32) -> Vec<WeightVector> {
    let set: BTreeSet<WeightVector> = enumerate_monomials(q, n).iter().map(Monomial::weight).collect();
    set.into_iter().collect()
}

/// `(Q_n)^omega = P^omega / ((hit ∩ P^omega) + P^{<omega})`, where `P^omega` is
/// spanned by the monomials of weight at most `omega`.
///
/// Built by eliminating over the monomials of weight at least `omega`, with
/// the heavier ones positioned first. Rows whose pivot lands on weight
/// exactly `omega` then span the image of `hit ∩ P^omega`.
#[derive(Clone, Debug)]
pub struct WeightSubquotient {
    q: usize,
    n: u32,
    omega: WeightVector,
    columns: Vec<Monomial>,
    index: Vec<(Monomial, usize)>,
    heavy: usize,
    quotient: QuotientBasis,
    basis: Vec<Monomial>,
    coord_of_free: Vec<Option<usize>>,
}

impl WeightSubquotient {
    pub fn new(q: usize, n: u32, omega: &WeightVector, max_cols: usize) -> Result<Self, Error> {
        if omega.degree() != n {
            return Err(Error::DegreeMismatch { expected: n, found: omega.degree() });
        }
        let mut heavy_cols = Vec::new();
        let mut exact = Vec::new();
        for m in enumerate_monomials(q, n) {
            match m.weight().cmp(omega) {
                core::cmp::Ordering::Greater => heavy_cols.push(m),
                core::cmp::Ordering::Equal => exact.push(m),
                core::cmp::Ordering::Less => {}
            }
        }
        heavy_cols.sort_unstable();
        exact.reverse();
        let heavy = heavy_cols.len();
        let mut columns = heavy_cols;
        columns.extend(exact);
        let width = columns.len();
        if width > max_cols {
            return Err(Error::ResourceCap { needed: width, cap: max_cols });
        }
        let mut index: Vec<(Monomial, usize)> = columns.iter().copied().zip(0..).collect();
        index.sort_unstable();
        let position = |m: &Monomial| index.binary_search_by(|(c, _)| c.cmp(m)).ok().map(|i| index[i].1);
        let mut echelon = EchelonForm::new(ColumnOrder::natural(width));
        if n > 0 && width > 0 {
            for t in (0..32).map(|i| 1u32 << i).take_while(|&t| t <= n) {
                for m in enumerate_monomials(q, n - t) {
                    let mut row = BitVector::zeros(width);
                    sq_monomial(t, &m, |y| {
                        if let Some(p) = position(&y) {
                            row.flip(p);
                        }
                    });
                    if !row.is_zero() {
                        echelon.insert_positioned(row);
                    }
                }
            }
        }
        let quotient = echelon.into_quotient();
        let mut basis = Vec::new();
        let mut coord_of_free = Vec::new();
        for &p in quotient.selected_positions() {
            if p >= heavy {
                coord_of_free.push(Some(basis.len()));
                basis.push(columns[p]);
            } else {
                coord_of_free.push(None);
            }
        }
        Ok(Self { q, n, omega: omega.clone(), columns, index, heavy, quotient, basis, coord_of_free })
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
    pub fn omega(&self) -> &WeightVector {
        &self.omega
    }

    #[must_use]
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Basis monomials, all of weight exactly `omega`, in descending order.
    #[must_use]
    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    /// Number of monomials of weight exactly `omega`.
    #[must_use]
    pub fn weight_monomials(&self) -> usize {
        self.columns.len() - self.heavy
    }

    /// Class of `f` modulo `omega`-hit polynomials. Terms below `omega` vanish.
    /// Fails with [`Error::WeightLeak`] when `f` is not congruent to an element of `P^omega`.
    pub fn reduce(&self, f: &Polynomial) -> Result<BitVector, Error> {
        let idx = &self.index;
        let cols = f.terms().filter_map(|m| idx.binary_search_by(|(c, _)| c.cmp(m)).ok().map(|i| idx[i].1));
        let full = self.quotient.reduce_columns(cols);
        let mut out = BitVector::zeros(self.dim());
        for i in full.ones() {
            match self.coord_of_free[i] {
                Some(c) => out.set(c, true),
                None => return Err(Error::WeightLeak),
            }
        }
        Ok(out)
    }

    #[must_use]
    pub fn representative(&self, coords: &BitVector) -> Polynomial {
        Polynomial::from_terms(self.q, self.n, coords.ones().map(|i| self.basis[i]))
            .expect("homogeneous")
    }
}

pub fn weight_subquotient(q: usize, n: u32, omega: &WeightVector) -> Result<WeightSubquotient, Error> {
    WeightSubquotient::new(q, n, omega, crate::steenrod::DEFAULT_MAX_COLS)
}

/// `Sq^0`-down: `x_1...x_q g^2 -> g`, zero on monomials with an even exponent.
#[must_use]
pub fn kameko_down(f: &Polynomial) -> Polynomial {
    let q = f.q();
    let n = f.degree().saturating_sub(q as u32) / 2;
    let mut out = Polynomial::zero(q, n);
    for m in f.terms() {
        if m.exponents().iter().all(|e| e % 2 == 1) {
            let half: Vec<u32> = m.exponents().iter().map(|e| (e - 1) / 2).collect();
            out.toggle(m.with_exponents(&half));
        }
    }
    out
}

/// `g -> x_1...x_q g^2`.
#[must_use]
pub fn kameko_up(g: &Polynomial) -> Polynomial {
    let q = g.q();
    let mut out = Polynomial::zero(q, 2 * g.degree() + q as u32);
    for m in g.terms() {
        let e: Vec<u32> = m.exponents().iter().map(|e| 2 * e + 1).collect();
        out.toggle(m.with_exponents(&e));
    }
    out
}

/// The map `Q_{2n+q} -> Q_n` induced by `Sq^0`-down, in admissible coordinates.
#[derive(Clone, Debug)]
pub struct KamekoData {
    pub source: CohitBasis,
    pub target: CohitBasis,
    /// Image of each source admissible monomial.
    pub images: Vec<BitVector>,
}

impl KamekoData {
    #[must_use]
    pub fn rank(&self) -> usize {
        let m = BitMatrix::from_rows(self.target.dim(), self.images.clone());
        m.rank()
    }

    /// Rows indexed by source coordinates, columns by target coordinates.
    #[must_use]
    pub fn matrix(&self) -> BitMatrix {
        BitMatrix::from_rows(self.target.dim(), self.images.clone())
    }

    /// Reduced echelon basis of the kernel, in source coordinates.
    #[must_use]
    pub fn kernel(&self) -> Vec<BitVector> {
        let k = kernel_of_images(&self.images);
        if k.is_empty() {
            return k;
        }
        let e = echelonize(&BitMatrix::from_rows(self.source.dim(), k), &ColumnOrder::natural(self.source.dim()));
        (0..e.rank()).map(|r| e.row(r)).collect()
    }

    /// Kernel basis as polynomials.
    #[must_use]
    pub fn kernel_representatives(&self) -> Vec<Polynomial> {
        self.kernel().iter().map(|v| self.source.representative(v)).collect()
    }
}

/// Kameko data for target degree `n` (source degree `2n + q`).
pub fn kameko_matrix(q: usize, n: u32, opts: HitOptions) -> Result<KamekoData, Error> {
    let source = CohitBasis::new(q, 2 * n + q as u32, opts)?;
    let target = CohitBasis::new(q, n, opts)?;
    let images = source
        .admissible()
        .iter()
        .map(|a| target.reduce(&kameko_down(&Polynomial::from(*a))))
        .collect();
    Ok(KamekoData { source, target, images })
}

/// Monomials split into those hit by Singer's weight criterion and the rest.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Pruned {
    pub known_hit: Vec<Monomial>,
    pub undecided: Vec<Monomial>,
}

/// A monomial of weight below the minimal spike's is hit; when `mu(n) > q` all are.
pub fn singer_prune(q: usize, n: u32, monomials: &[Monomial]) -> Result<Pruned, Error> {
    let mut out = Pruned::default();
    if n > 0 && mu(u64::from(n)) as usize > q {
        out.known_hit = monomials.to_vec();
        return Ok(out);
    }
    let floor = minimal_spike(q, n)?.weight();
    for m in monomials {
        if m.weight() < floor {
            out.known_hit.push(*m);
        } else {
            out.undecided.push(*m);
        }
    }
    Ok(out)
}

/// The weights of degree `n` at or above the Singer floor, ascending.
pub fn live_weights(q: usize, n: u32) -> Result<Vec<WeightVector>, Error> {
    if n > 0 && mu(u64::from(n)) as usize > q {
        return Ok(Vec::new());
    }
    let floor = minimal_spike(q, n)?.weight();
    Ok(weights_of_degree(q, n).into_iter().filter(|w| *w >= floor).collect())
}

#[cfg(test)]
mod tests;
