use alloc::vec;
use alloc::vec::Vec;

use super::monomial::{DualElement, DualMonomial, Monomial, Polynomial, MAX_VARS};
use super::weight::order_key;
use crate::f2linalg::BitVector;

/// `comp[k][s]`: compositions of `s` into `k` parts.
fn composition_counts(n: u32) -> Vec<Vec<u64>> {
    let n = n as usize;
    let mut comp = vec![vec![0u64; n + 1]; MAX_VARS + 2];
    comp[0][0] = 1;
    for k in 1..comp.len() {
        for s in 0..=n {
            comp[k][s] = comp[k - 1][s] + if s > 0 { comp[k][s - 1] } else { 0 };
        }
    }
    comp
}

/// Number of monomials of degree `n` in `q` variables, `C(n+q-1, q-1)`.
#[must_use]
pub fn monomial_count(q: usize, n: u32) -> usize {
    composition_counts(n)[q][n as usize] as usize
}

fn compositions(q: usize, n: u32) -> Vec<Monomial> {
    fn rec(q: usize, i: usize, rest: u32, cur: &mut [u32; MAX_VARS], out: &mut Vec<Monomial>) {
        if i + 1 == q {
            cur[i] = rest;
            out.push(Monomial::new(&cur[..q]).expect("q in range"));
            return;
        }
        for e in 0..=rest {
            cur[i] = e;
            rec(q, i + 1, rest - e, cur, out);
        }
    }
    let mut out = Vec::with_capacity(monomial_count(q, n));
    rec(q, 0, n, &mut [0; MAX_VARS], &mut out);
    out
}

/// All monomials of degree `n` in `q` variables, ascending in the weight-first order.
#[must_use]
pub fn enumerate_monomials(q: usize, n: u32) -> Vec<Monomial> {
    let mut all = compositions(q, n);
    all.sort_by_cached_key(order_key);
    all
}

/// The monomials of `(P_q)_n` with an O(q) index lookup.
///
/// Index `i` is the position in ascending weight-first order, which is also
/// the coordinate used for polynomial bit vectors.
#[derive(Clone, Debug)]
pub struct MonomialBasis {
    q: usize,
    n: u32,
    monomials: Vec<Monomial>,
    by_lex: Vec<u32>,
    comp: Vec<Vec<u64>>,
}

impl MonomialBasis {
    #[must_use]
    pub fn new(q: usize, n: u32) -> Self {
        assert!((1..=MAX_VARS).contains(&q), "q = {q}");
        let comp = composition_counts(n);
        let lex = compositions(q, n);
        let mut idx: Vec<u32> = (0..lex.len() as u32).collect();
        idx.sort_by_cached_key(|&i| order_key(&lex[i as usize]));
        let mut by_lex = vec![0u32; lex.len()];
        for (d, &l) in idx.iter().enumerate() {
            by_lex[l as usize] = d as u32;
        }
        let monomials = idx.iter().map(|&l| lex[l as usize]).collect();
        Self { q, n, monomials, by_lex, comp }
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
    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    #[must_use]
    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    #[must_use]
    pub fn monomial(&self, i: usize) -> Monomial {
        self.monomials[i]
    }

    /// Rank among compositions in exponent-lexicographic order.
    fn lex_rank(&self, exps: &[u32]) -> usize {
        let mut rank = 0u64;
        let mut rest = self.n as usize;
        for (i, &e) in exps[..self.q - 1].iter().enumerate() {
            let k = self.q - i - 1;
            let e = e as usize;
            rank += self.comp[k + 1][rest] - self.comp[k + 1][rest - e];
            rest -= e;
        }
        rank as usize
    }

    /// Index of `x` in the basis. Panics if `x` is of another shape.
    #[must_use]
    pub fn index_of(&self, x: &Monomial) -> usize {
        assert_eq!(x.q(), self.q, "variable count mismatch");
        assert_eq!(x.degree(), self.n, "degree mismatch");
        self.by_lex[self.lex_rank(x.exponents())] as usize
    }

    #[must_use]
    pub fn index_of_dual(&self, x: &DualMonomial) -> usize {
        self.index_of(&x.primal())
    }

    #[must_use]
    pub fn coords(&self, f: &Polynomial) -> BitVector {
        BitVector::from_ones(self.len(), f.terms().map(|m| self.index_of(m)))
    }

    #[must_use]
    pub fn dual_coords(&self, theta: &DualElement) -> BitVector {
        BitVector::from_ones(self.len(), theta.terms().map(|m| self.index_of_dual(m)))
    }

    #[must_use]
    pub fn polynomial(&self, v: &BitVector) -> Polynomial {
        Polynomial::from_terms(self.q, self.n, v.ones().map(|i| self.monomials[i]))
            .expect("basis monomials are homogeneous")
    }

    #[must_use]
    pub fn dual_element(&self, v: &BitVector) -> DualElement {
        DualElement::from_terms(self.q, self.n, v.ones().map(|i| self.monomials[i].dual()))
            .expect("basis monomials are homogeneous")
    }
}
