//! Steenrod squares on polynomials and divided powers, hit spans and primitives.

use alloc::vec;
use alloc::vec::Vec;

use crate::binom;
use crate::f2linalg::{BitVector, ColumnOrder, EchelonForm, QuotientBasis};
use crate::polyspace::{
    minimal_spike, mu, DualElement, DualMonomial, Monomial, MonomialBasis, Polynomial, WeightVector,
};
use crate::Error;

/// Default cap on the width of a full elimination.
pub const DEFAULT_MAX_COLS: usize = 1 << 21;

/// Calls `emit` with every `delta` such that `sum delta = t` and `ok(i, delta_i)`,
/// where `delta_i <= bound[i]`.
fn splits(
    bounds: &[u32],
    t: u32,
    ok: &dyn Fn(usize, u32) -> bool,
    emit: &mut dyn FnMut(&[u32]),
) {
    fn rec(
        i: usize,
        rest: u32,
        bounds: &[u32],
        ok: &dyn Fn(usize, u32) -> bool,
        cur: &mut [u32; 5],
        emit: &mut dyn FnMut(&[u32]),
    ) {
        if i == bounds.len() {
            if rest == 0 {
                emit(&cur[..bounds.len()]);
            }
            return;
        }
        let tail: u32 = bounds[i + 1..].iter().sum();
        let lo = rest.saturating_sub(tail);
        for d in lo..=rest.min(bounds[i]) {
            if ok(i, d) {
                cur[i] = d;
                rec(i + 1, rest - d, bounds, ok, cur, emit);
            }
        }
    }
    rec(0, t, bounds, ok, &mut [0; 5], emit);
}

/// Visits the monomials of `Sq^t(x)`; each appears once, coefficients are 1.
pub fn sq_monomial(t: u32, x: &Monomial, mut emit: impl FnMut(Monomial)) {
    let e = x.exponents();
    let mut out = [0u32; 5];
    splits(e, t, &|i, d| binom::odd(e[i], d), &mut |delta| {
        for (k, (&a, &d)) in e.iter().zip(delta).enumerate() {
            out[k] = a + d;
        }
        emit(x.with_exponents(&out[..e.len()]));
    });
}

/// `Sq^t(f)` via the Cartan formula: `Sq^t(x^e) = sum_{|delta|=t} prod C(e_i, delta_i) x^(e+delta)`.
#[must_use]
pub fn sq(t: u32, f: &Polynomial) -> Polynomial {
    let mut out = Polynomial::zero(f.q(), f.degree() + t);
    for x in f.terms() {
        sq_monomial(t, x, |y| out.toggle(y));
    }
    out
}

/// Visits the dual monomials of `(a^(d))Sq^t`.
pub fn sq_dual_monomial(t: u32, theta: &DualMonomial, mut emit: impl FnMut(DualMonomial)) {
    let d = theta.exponents();
    let halves: Vec<u32> = d.iter().map(|&x| x / 2).collect();
    let mut out = [0u32; 5];
    splits(&halves, t, &|i, k| binom::odd(d[i] - k, k), &mut |delta| {
        for (j, (&a, &k)) in d.iter().zip(delta).enumerate() {
            out[j] = a - k;
        }
        emit(theta.with_exponents(&out[..d.len()]));
    });
}

/// `(theta)Sq^t`, the right action on divided powers:
/// `(prod a_i^(d_i))Sq^t = sum_{|delta|=t} prod C(d_i - delta_i, delta_i) a_i^(d_i - delta_i)`.
///
/// Panics if `t` exceeds the degree.
#[must_use]
pub fn sq_dual(t: u32, theta: &DualElement) -> DualElement {
    let mut out = DualElement::zero(theta.q(), theta.degree().checked_sub(t).expect("t > degree"));
    for x in theta.terms() {
        sq_dual_monomial(t, x, |y| out.toggle(y));
    }
    out
}

/// `(theta)Sq^(2^i) = 0` for every `2^i <= deg theta`.
#[must_use]
pub fn is_annihilated(theta: &DualElement) -> bool {
    squares_up_to(theta.degree()).all(|t| sq_dual(t, theta).is_zero())
}

fn squares_up_to(n: u32) -> impl Iterator<Item = u32> {
    (0..32).map(|i| 1u32 << i).take_while(move |&t| t <= n)
}

/// Options for building a hit span.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HitOptions {
    /// Drop monomials of weight below the minimal spike's, which are hit.
    pub prune: bool,
    /// Use every `Sq^t`, `t > 0`, rather than only `Sq^(2^i)`.
    pub all_squares: bool,
    pub max_cols: usize,
}

impl Default for HitOptions {
    fn default() -> Self {
        Self { prune: true, all_squares: false, max_cols: DEFAULT_MAX_COLS }
    }
}

const NONE: u32 = u32::MAX;

/// The hit subspace of `(P_q)_n` and the induced cohit quotient.
///
/// Coordinates run over the columns kept after pruning, positioned in
/// descending monomial order, so every pivot is the leading term of a hit
/// relation and the surviving columns are the admissible monomials.
#[derive(Clone, Debug)]
pub struct HitSpan {
    basis: MonomialBasis,
    position: Vec<u32>,
    kept: usize,
    quotient: QuotientBasis,
}

impl HitSpan {
    pub fn new(q: usize, n: u32, opts: HitOptions) -> Result<Self, Error> {
        let basis = MonomialBasis::new(q, n);
        let keep: Vec<bool> = if n > 0 && mu(u64::from(n)) as usize > q {
            vec![false; basis.len()]
        } else if opts.prune && n > 0 {
            let floor = minimal_spike(q, n)?.weight();
            basis.monomials().iter().map(|m| m.weight() >= floor).collect()
        } else {
            vec![true; basis.len()]
        };
        let kept = keep.iter().filter(|&&k| k).count();
        if kept > opts.max_cols {
            return Err(Error::ResourceCap { needed: kept, cap: opts.max_cols });
        }
        let mut position = vec![NONE; basis.len()];
        let mut next = kept;
        for (i, &k) in keep.iter().enumerate() {
            if k {
                next -= 1;
                position[i] = next as u32;
            }
        }
        let mut echelon = EchelonForm::new(ColumnOrder::natural(kept));
        if kept > 0 && n > 0 {
            let ts: Vec<u32> = if opts.all_squares { (1..=n).collect() } else { squares_up_to(n).collect() };
            for t in ts {
                for m in crate::polyspace::enumerate_monomials(q, n - t) {
                    let mut row = BitVector::zeros(kept);
                    sq_monomial(t, &m, |y| {
                        let p = position[basis.index_of(&y)];
                        if p != NONE {
                            row.flip(p as usize);
                        }
                    });
                    if !row.is_zero() {
                        echelon.insert_positioned(row);
                    }
                }
            }
        }
        Ok(Self { basis, position, kept, quotient: echelon.into_quotient() })
    }

    #[must_use]
    pub fn q(&self) -> usize {
        self.basis.q()
    }

    #[must_use]
    pub fn degree(&self) -> u32 {
        self.basis.degree()
    }

    #[must_use]
    pub fn basis(&self) -> &MonomialBasis {
        &self.basis
    }

    /// Dimension of the cohit quotient.
    #[must_use]
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    /// Dimension of the hit subspace.
    #[must_use]
    pub fn rank(&self) -> usize {
        self.basis.len() - self.dim()
    }

    /// Number of monomials that entered the elimination.
    #[must_use]
    pub fn kept_columns(&self) -> usize {
        self.kept
    }

    /// Whether `x` was dropped as hit before any elimination.
    #[must_use]
    pub fn is_pruned(&self, x: &Monomial) -> bool {
        self.position[self.basis.index_of(x)] == NONE
    }

    /// Admissible monomials, ascending; coordinate `i` of [`HitSpan::reduce`] refers to entry `i`.
    #[must_use]
    pub fn admissible(&self) -> Vec<Monomial> {
        let d = self.dim();
        let mut out = vec![Monomial::one(self.q()); d];
        let sel = self.quotient.selected_positions();
        let mut by_pos = vec![NONE; self.kept];
        for (i, &p) in sel.iter().enumerate() {
            by_pos[p] = (d - 1 - i) as u32;
        }
        for (idx, &p) in self.position.iter().enumerate() {
            if p != NONE && by_pos[p as usize] != NONE {
                out[by_pos[p as usize] as usize] = self.basis.monomial(idx);
            }
        }
        out
    }

    fn flip(&self, v: BitVector) -> BitVector {
        let d = self.dim();
        BitVector::from_ones(d, v.ones().map(|i| d - 1 - i))
    }

    /// Class of a sum of monomials, in admissible coordinates. Repeats cancel.
    #[must_use]
    pub fn reduce_monomials<'a>(&self, xs: impl IntoIterator<Item = &'a Monomial>) -> BitVector {
        let ps = xs.into_iter().filter_map(|x| {
            let p = self.position[self.basis.index_of(x)];
            (p != NONE).then_some(p as usize)
        });
        self.flip(self.quotient.reduce_positions(ps))
    }

    #[must_use]
    pub fn reduce(&self, f: &Polynomial) -> BitVector {
        assert_eq!(f.degree(), self.degree(), "degree mismatch");
        self.reduce_monomials(f.terms())
    }

    /// Class of a coordinate vector over [`MonomialBasis`] indices.
    #[must_use]
    pub fn reduce_coords(&self, v: &BitVector) -> BitVector {
        let ps = v.ones().filter_map(|i| {
            let p = self.position[i];
            (p != NONE).then_some(p as usize)
        });
        self.flip(self.quotient.reduce_positions(ps))
    }

    #[must_use]
    pub fn is_hit(&self, f: &Polynomial) -> bool {
        self.reduce(f).is_zero()
    }

    /// Sum of the admissible monomials named by `coords`.
    #[must_use]
    pub fn representative(&self, coords: &BitVector) -> Polynomial {
        let adm = self.admissible();
        Polynomial::from_terms(self.q(), self.degree(), coords.ones().map(|i| adm[i]))
            .expect("admissible monomials are homogeneous")
    }

    /// The primitives dual to the admissible basis: element `i` pairs to 1
    /// with admissible monomial `i` and to 0 with the others.
    #[must_use]
    pub fn dual_basis(&self) -> Vec<DualElement> {
        let adm = self.admissible();
        let mut terms: Vec<Vec<DualMonomial>> = adm.iter().map(|m| vec![m.dual()]).collect();
        for (idx, x) in self.basis.monomials().iter().enumerate() {
            if self.position[idx] == NONE {
                continue;
            }
            let class = self.reduce_monomials([x]);
            if class.count_ones() == 1 && adm[class.first_one().unwrap()] == *x {
                continue;
            }
            for i in class.ones() {
                terms[i].push(x.dual());
            }
        }
        terms
            .into_iter()
            .map(|t| DualElement::from_terms(self.q(), self.degree(), t).expect("homogeneous"))
            .collect()
    }
}

/// The hit span with default options.
pub fn hit_span(q: usize, n: u32) -> Result<HitSpan, Error> {
    HitSpan::new(q, n, HitOptions::default())
}

/// Basis of the primitives `P((P_q)_n^*)`: the joint kernel of `(.)Sq^(2^i)`.
///
/// Built from the dual action alone. The kernel is taken with columns in
/// descending monomial order, so element `i` is the unique kernel vector
/// supported on one non-pivot column `c_i` plus pivot columns; elements are
/// listed by ascending `c_i`.
pub fn primitive_basis(q: usize, n: u32, max_cols: usize) -> Result<Vec<DualElement>, Error> {
    let basis = MonomialBasis::new(q, n);
    let width = basis.len();
    if width > max_cols {
        return Err(Error::ResourceCap { needed: width, cap: max_cols });
    }
    let mut echelon = EchelonForm::new(ColumnOrder::natural(width));
    for t in squares_up_to(n) {
        let target = MonomialBasis::new(q, n - t);
        let mut rows = vec![BitVector::zeros(width); target.len()];
        for (idx, x) in basis.monomials().iter().enumerate() {
            sq_dual_monomial(t, &x.dual(), |y| rows[target.index_of_dual(&y)].flip(width - 1 - idx));
        }
        for r in rows {
            if !r.is_zero() {
                echelon.insert_positioned(r);
            }
        }
    }
    let mut out: Vec<DualElement> = echelon
        .null_space()
        .into_iter()
        .map(|v| {
            let cols = v.ones().map(|p| width - 1 - p);
            DualElement::from_terms(q, n, cols.map(|i| basis.monomial(i).dual())).expect("homogeneous")
        })
        .collect();
    out.reverse();
    Ok(out)
}

/// The weight of the minimal spike, below which every monomial is hit.
pub fn singer_floor(q: usize, n: u32) -> Result<WeightVector, Error> {
    Ok(minimal_spike(q, n)?.weight())
}

#[cfg(test)]
mod tests;
