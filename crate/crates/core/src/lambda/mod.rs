//! The mod 2 lambda algebra: admissible bases, Adem reduction, the
//! differential, homology and the map `psi_q` from divided powers.
//!
//! Words are read left to right as printed, `λ_{j_1} ... λ_{j_q}`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::cell::RefCell;
use core::fmt;

use crate::binom::odd_signed;
use crate::f2linalg::{kernel_of_images, BitMatrix, BitVector, EchelonForm, Subquotient};
use crate::polyspace::{DualElement, DualMonomial};
use crate::steenrod::sq_dual;
use crate::Error;

/// Adjacent-pair convention for admissibility.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum Convention {
    /// `λ_a λ_b` admissible iff `a <= 2b`.
    #[default]
    LeftBounded,
    /// `λ_a λ_b` admissible iff `b <= 2a`; the opposite algebra, obtained by
    /// reversing every word.
    RelationOrder,
}

impl Convention {
    #[must_use]
    pub fn admissible_pair(self, a: u32, b: u32) -> bool {
        match self {
            Self::LeftBounded => a <= 2 * b,
            Self::RelationOrder => b <= 2 * a,
        }
    }

    #[must_use]
    pub fn name(self) -> &'static str {
        match self {
            Self::LeftBounded => "left-bounded",
            Self::RelationOrder => "relation-order",
        }
    }
}

/// A word `λ_{j_1} ... λ_{j_q}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LambdaMonomial(Vec<u32>);

impl LambdaMonomial {
    #[must_use]
    pub fn new(indices: &[u32]) -> Self {
        Self(indices.to_vec())
    }

    #[must_use]
    pub fn indices(&self) -> &[u32] {
        &self.0
    }

    #[must_use]
    pub fn length(&self) -> usize {
        self.0.len()
    }

    #[must_use]
    pub fn internal_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    #[must_use]
    pub fn is_admissible(&self, conv: Convention) -> bool {
        self.0.windows(2).all(|w| conv.admissible_pair(w[0], w[1]))
    }

    #[must_use]
    pub fn reversed(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }
}

impl From<Vec<u32>> for LambdaMonomial {
    fn from(v: Vec<u32>) -> Self {
        Self(v)
    }
}

impl fmt::Display for LambdaMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for j in &self.0 {
            write!(f, "λ_{j}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for LambdaMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A sum of words of one length and one internal degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LambdaElement {
    length: usize,
    degree: u32,
    terms: BTreeSet<LambdaMonomial>,
}

impl LambdaElement {
    #[must_use]
    pub fn zero(length: usize, degree: u32) -> Self {
        Self { length, degree, terms: BTreeSet::new() }
    }

    #[must_use]
    pub fn from_monomial(m: LambdaMonomial) -> Self {
        let mut e = Self::zero(m.length(), m.internal_degree());
        e.terms.insert(m);
        e
    }

    /// Fails on a term of another length or degree. Repeated terms cancel.
    pub fn from_terms(
        length: usize,
        degree: u32,
        terms: impl IntoIterator<Item = LambdaMonomial>,
    ) -> Result<Self, Error> {
        let mut e = Self::zero(length, degree);
        for t in terms {
            if t.length() != length {
                return Err(Error::Invalid("lambda terms of mixed length"));
            }
            if t.internal_degree() != degree {
                return Err(Error::DegreeMismatch { expected: degree, found: t.internal_degree() });
            }
            e.toggle(t);
        }
        Ok(e)
    }

    /// From index lists sharing a length and degree; at least one is needed.
    pub fn from_indices(rows: &[&[u32]]) -> Result<Self, Error> {
        let first = rows.first().ok_or(Error::Invalid("no terms"))?;
        let degree = first.iter().sum();
        Self::from_terms(first.len(), degree, rows.iter().map(|r| LambdaMonomial::new(r)))
    }

    #[must_use]
    pub fn length(&self) -> usize {
        self.length
    }

    #[must_use]
    pub fn internal_degree(&self) -> u32 {
        self.degree
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    #[must_use]
    pub fn contains(&self, m: &LambdaMonomial) -> bool {
        self.terms.contains(m)
    }

    pub fn terms(&self) -> impl ExactSizeIterator<Item = &LambdaMonomial> + Clone + '_ {
        self.terms.iter()
    }

    /// Adds one word, which must match the bidegree.
    pub fn toggle(&mut self, m: LambdaMonomial) {
        debug_assert_eq!(m.length(), self.length);
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        assert_eq!((self.length, self.degree), (other.length, other.degree), "bidegree mismatch");
        for t in &other.terms {
            self.toggle(t.clone());
        }
    }

    #[must_use]
    pub fn add(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.add_assign(other);
        s
    }

    #[must_use]
    pub fn is_admissible(&self, conv: Convention) -> bool {
        self.terms.iter().all(|t| t.is_admissible(conv))
    }

    fn reversed(&self) -> Self {
        Self { length: self.length, degree: self.degree, terms: self.terms.iter().map(LambdaMonomial::reversed).collect() }
    }
}

impl From<LambdaMonomial> for LambdaElement {
    fn from(m: LambdaMonomial) -> Self {
        Self::from_monomial(m)
    }
}

impl fmt::Display for LambdaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for LambdaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `λ_a λ_b = Σ λ_c λ_d` for an inadmissible pair `a > 2b` (default convention).
#[must_use]
pub fn pair_rewrite(a: u32, b: u32) -> Vec<(u32, u32)> {
    debug_assert!(a > 2 * b);
    let n = i64::from(a - 2 * b - 1);
    (0..=n)
        .filter(|&j| odd_signed(n - j - 1, j))
        .map(|j| (2 * b + 1 + j as u32, b + (n - j) as u32))
        .collect()
}

/// `d(λ_k) = Σ λ_c λ_d` (default convention).
#[must_use]
pub fn generator_differential(k: u32) -> Vec<(u32, u32)> {
    let k = i64::from(k);
    (1..=k)
        .filter(|&j| odd_signed(k - j, j))
        .map(|j| ((j - 1) as u32, (k - j) as u32))
        .collect()
}

/// Admissible words of length `q` and internal degree `n`, in lexicographic order.
#[must_use]
pub fn admissible_basis(conv: Convention, q: usize, n: u32) -> Vec<LambdaMonomial> {
    fn rec(conv: Convention, q: usize, rest: u32, cur: &mut Vec<u32>, out: &mut Vec<LambdaMonomial>) {
        if cur.len() == q {
            if rest == 0 {
                out.push(LambdaMonomial(cur.clone()));
            }
            return;
        }
        for j in 0..=rest {
            if cur.last().is_none_or(|&p| conv.admissible_pair(p, j)) {
                cur.push(j);
                rec(conv, q, rest - j, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    if q == 0 {
        if n == 0 {
            out.push(LambdaMonomial::default());
        }
        return out;
    }
    rec(conv, q, n, &mut Vec::with_capacity(q), &mut out);
    out
}

/// Which inadmissible pair a naive rewriter replaces first.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

const DEPTH_CAP: usize = 1024;
const NAIVE_STEP_CAP: usize = 10_000_000;

type Memo = BTreeMap<(u32, LambdaMonomial), Vec<LambdaMonomial>>;

/// Lambda algebra computations under one convention, with a reduction memo.
///
/// The memo uses interior mutability, so an instance is not shared across
/// threads; parallel jobs each own one.
#[derive(Debug, Default)]
pub struct Lambda {
    conv: Convention,
    memo: RefCell<Memo>,
}

fn toggle_into(set: &mut BTreeSet<LambdaMonomial>, m: LambdaMonomial) {
    if !set.remove(&m) {
        set.insert(m);
    }
}

impl Lambda {
    #[must_use]
    pub fn new(conv: Convention) -> Self {
        Self { conv, memo: RefCell::new(BTreeMap::new()) }
    }

    #[must_use]
    pub fn convention(&self) -> Convention {
        self.conv
    }

    /// `λ_a · m` for an admissible `m` (default convention), as admissible words.
    fn prepend(&self, a: u32, m: &LambdaMonomial, depth: usize) -> Result<Vec<LambdaMonomial>, Error> {
        let Some(&b) = m.0.first() else {
            return Ok(vec![LambdaMonomial(vec![a])]);
        };
        if a <= 2 * b {
            let mut w = Vec::with_capacity(m.0.len() + 1);
            w.push(a);
            w.extend_from_slice(&m.0);
            return Ok(vec![LambdaMonomial(w)]);
        }
        if depth > DEPTH_CAP {
            return Err(Error::ReductionCap);
        }
        let key = (a, m.clone());
        if let Some(v) = self.memo.borrow().get(&key) {
            return Ok(v.clone());
        }
        let rest = LambdaMonomial(m.0[1..].to_vec());
        let mut acc = BTreeSet::new();
        for (c, d) in pair_rewrite(a, b) {
            for t in self.prepend(d, &rest, depth + 1)? {
                for u in self.prepend(c, &t, depth + 1)? {
                    toggle_into(&mut acc, u);
                }
            }
        }
        let out: Vec<LambdaMonomial> = acc.into_iter().collect();
        self.memo.borrow_mut().insert(key, out.clone());
        Ok(out)
    }

    /// Default-convention reduction of one word.
    fn reduce_word(&self, w: &[u32], acc: &mut BTreeSet<LambdaMonomial>) -> Result<(), Error> {
        let Some((&last, init)) = w.split_last() else {
            toggle_into(acc, LambdaMonomial::default());
            return Ok(());
        };
        let mut cur = vec![LambdaMonomial(vec![last])];
        for &a in init.iter().rev() {
            let mut next = BTreeSet::new();
            for t in &cur {
                for u in self.prepend(a, t, 0)? {
                    toggle_into(&mut next, u);
                }
            }
            cur = next.into_iter().collect();
        }
        for u in cur {
            toggle_into(acc, u);
        }
        Ok(())
    }

    fn to_left_bounded(&self, e: &LambdaElement) -> LambdaElement {
        match self.conv {
            Convention::LeftBounded => e.clone(),
            Convention::RelationOrder => e.reversed(),
        }
    }

    /// The admissible form of `e`.
    pub fn adem_reduce(&self, e: &LambdaElement) -> Result<LambdaElement, Error> {
        let p = self.to_left_bounded(e);
        let mut acc = BTreeSet::new();
        for t in p.terms() {
            if t.is_admissible(Convention::LeftBounded) {
                toggle_into(&mut acc, t.clone());
            } else {
                self.reduce_word(&t.0, &mut acc)?;
            }
        }
        let out = LambdaElement { length: e.length, degree: e.degree, terms: acc };
        Ok(self.to_left_bounded(&out))
    }

    /// Reduction by repeatedly rewriting one inadmissible pair, without memo.
    pub fn reduce_naive(&self, e: &LambdaElement, strategy: Strategy) -> Result<LambdaElement, Error> {
        let mut work: BTreeSet<LambdaMonomial> = self.to_left_bounded(e).terms.clone();
        let mut done = BTreeSet::new();
        let mut steps = 0;
        while let Some(w) = work.pop_first() {
            let bad = w.0.windows(2).map(|p| p[0] > 2 * p[1]);
            let pos = match strategy {
                Strategy::Leftmost => bad.clone().position(|b| b),
                Strategy::Rightmost => bad.clone().rposition(|b| b),
            };
            let Some(i) = pos else {
                toggle_into(&mut done, w);
                continue;
            };
            steps += 1;
            if steps > NAIVE_STEP_CAP {
                return Err(Error::ReductionCap);
            }
            for (c, d) in pair_rewrite(w.0[i], w.0[i + 1]) {
                let mut v = w.0.clone();
                v[i] = c;
                v[i + 1] = d;
                let v = LambdaMonomial(v);
                if v.is_admissible(Convention::LeftBounded) {
                    toggle_into(&mut done, v);
                } else {
                    toggle_into(&mut work, v);
                }
            }
        }
        let out = LambdaElement { length: e.length, degree: e.degree, terms: done };
        Ok(self.to_left_bounded(&out))
    }

    /// Leibniz expansion of `d(e)` before reduction, in this instance's convention.
    #[must_use]
    pub fn differential_raw(&self, e: &LambdaElement) -> LambdaElement {
        let p = self.to_left_bounded(e);
        let mut out = LambdaElement::zero(e.length + 1, e.degree.saturating_sub(1));
        for t in p.terms() {
            for i in 0..t.length() {
                for (c, d) in generator_differential(t.0[i]) {
                    let mut w = Vec::with_capacity(t.length() + 1);
                    w.extend_from_slice(&t.0[..i]);
                    w.push(c);
                    w.push(d);
                    w.extend_from_slice(&t.0[i + 1..]);
                    out.toggle(LambdaMonomial(w));
                }
            }
        }
        self.to_left_bounded(&out)
    }

    /// `d(e)` in admissible form.
    pub fn differential(&self, e: &LambdaElement) -> Result<LambdaElement, Error> {
        self.adem_reduce(&self.differential_raw(e))
    }

    pub fn is_cycle(&self, e: &LambdaElement) -> Result<bool, Error> {
        Ok(self.differential(e)?.is_zero())
    }

    #[must_use]
    pub fn admissible_basis(&self, q: usize, n: u32) -> Vec<LambdaMonomial> {
        admissible_basis(self.conv, q, n)
    }

    /// Matrix of `d: Λ^{q,n} -> Λ^{q+1,n-1}`, rows indexed by the source basis.
    pub fn differential_matrix(&self, q: usize, n: u32) -> Result<BitMatrix, Error> {
        let source = self.admissible_basis(q, n);
        let target = if n == 0 { Vec::new() } else { self.admissible_basis(q + 1, n - 1) };
        let mut m = BitMatrix::new(target.len());
        for s in source {
            let d = self.differential(&LambdaElement::from(s))?;
            m.push(coords_in(&target, &d));
        }
        Ok(m)
    }

    /// The boundaries `d(Λ^{q-1,n+1})` inside `Λ^{q,n}`.
    pub fn boundary_space(&self, q: usize, n: u32) -> Result<EchelonForm, Error> {
        let dim = self.admissible_basis(q, n).len();
        let mut e = EchelonForm::natural(dim);
        if q > 1 {
            for row in self.differential_matrix(q - 1, n + 1)?.rows() {
                e.insert(row);
            }
        }
        Ok(e)
    }

    pub fn homology(&self, q: usize, n: u32) -> Result<HomologyBasis, Error> {
        let basis = self.admissible_basis(q, n);
        let dim = basis.len();
        let cycles = kernel_of_images(self.differential_matrix(q, n)?.rows());
        let boundaries: Vec<BitVector> =
            if q > 1 { self.differential_matrix(q - 1, n + 1)?.rows().to_vec() } else { Vec::new() };
        let sub = Subquotient::new(dim, boundaries, cycles);
        Ok(HomologyBasis { q, n, basis, sub })
    }

    /// `dim Ext_A^{q, q+n}`.
    pub fn ext_dim(&self, q: usize, n: u32) -> Result<usize, Error> {
        Ok(self.homology(q, n)?.dim())
    }

    /// `psi_q(θ)` as the unreduced sum of words produced by the recursion.
    #[must_use]
    pub fn psi_raw(&self, theta: &DualElement) -> LambdaElement {
        let q = theta.q();
        let mut out = LambdaElement::zero(q, theta.degree());
        for m in theta.terms() {
            psi_monomial(m, &mut |w| out.toggle(LambdaMonomial(w.to_vec())));
        }
        out
    }

    /// `psi_q(θ)` in admissible form.
    pub fn psi(&self, theta: &DualElement) -> Result<LambdaElement, Error> {
        self.adem_reduce(&self.psi_raw(theta))
    }

    /// Whether two cycles of one bidegree differ by a boundary. Non-cycles are rejected.
    pub fn classes_equal(&self, z1: &LambdaElement, z2: &LambdaElement) -> Result<bool, Error> {
        if (z1.length, z1.degree) != (z2.length, z2.degree) {
            return Err(Error::Invalid("classes of different bidegrees"));
        }
        let h = self.homology(z1.length, z1.degree)?;
        Ok(h.coordinates(self, z1)? == h.coordinates(self, z2)?)
    }
}

/// Calls `emit` with each word of `psi` on one dual monomial, with multiplicity.
///
/// The first variable is peeled off: `psi(a_1^(j) θ') = Σ_{k >= j} λ_k psi(θ' Sq^(k-j))`.
fn psi_monomial(m: &DualMonomial, emit: &mut dyn FnMut(&[u32])) {
    fn rec(theta: &DualElement, prefix: &mut Vec<u32>, emit: &mut dyn FnMut(&[u32])) {
        let q = theta.q();
        for m in theta.terms() {
            let e = m.exponents();
            if q == 1 {
                prefix.push(e[0]);
                emit(prefix);
                prefix.pop();
                continue;
            }
            let tail = DualElement::from(DualMonomial::new(&e[1..]).expect("q - 1 >= 1"));
            for t in 0..=tail.degree() {
                let down = sq_dual(t, &tail);
                if down.is_zero() {
                    continue;
                }
                prefix.push(e[0] + t);
                rec(&down, prefix, emit);
                prefix.pop();
            }
        }
    }
    rec(&DualElement::from(*m), &mut Vec::new(), emit);
}

fn coords_in(basis: &[LambdaMonomial], e: &LambdaElement) -> BitVector {
    let ones = e.terms().map(|t| basis.binary_search(t).expect("admissible term in basis"));
    BitVector::from_ones(basis.len(), ones)
}

/// `H^{q,n}(Λ)` with representatives drawn from the cycles.
#[derive(Clone, Debug)]
pub struct HomologyBasis {
    q: usize,
    n: u32,
    basis: Vec<LambdaMonomial>,
    sub: Subquotient,
}

impl HomologyBasis {
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
        self.sub.dim()
    }

    #[must_use]
    pub fn chain_dim(&self) -> usize {
        self.basis.len()
    }

    #[must_use]
    pub fn boundary_rank(&self) -> usize {
        self.sub.boundary_rank()
    }

    #[must_use]
    pub fn representatives(&self) -> Vec<LambdaElement> {
        let basis = &self.basis;
        self.sub
            .representatives()
            .iter()
            .map(|v| LambdaElement {
                length: self.q,
                degree: self.n,
                terms: v.ones().map(|i| basis[i].clone()).collect(),
            })
            .collect()
    }

    /// Class coordinates of a chain. Fails with [`Error::NotACycle`] otherwise.
    pub fn coordinates(&self, lambda: &Lambda, e: &LambdaElement) -> Result<BitVector, Error> {
        if (e.length, e.degree) != (self.q, self.n) {
            return Err(Error::Invalid("chain of another bidegree"));
        }
        let r = lambda.adem_reduce(e)?;
        let v = coords_in(&self.basis, &r);
        match self.sub.coordinates(&v) {
            Some(c) => Ok(c),
            None => Err(Error::NotACycle { boundary: lambda.differential(&r)? }),
        }
    }
}
