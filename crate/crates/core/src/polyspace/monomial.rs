use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use super::weight::WeightVector;
use crate::Error;

/// Largest supported number of variables.
pub const MAX_VARS: usize = 5;

fn pack(exps: &[u32]) -> Result<(u8, [u32; MAX_VARS]), Error> {
    if exps.is_empty() || exps.len() > MAX_VARS {
        return Err(Error::VariableCount { found: exps.len() });
    }
    let mut e = [0; MAX_VARS];
    e[..exps.len()].copy_from_slice(exps);
    Ok((exps.len() as u8, e))
}

macro_rules! exponent_vector {
    ($name:ident) => {
        impl $name {
            /// Fails unless `1 <= exps.len() <= 5`.
            pub fn new(exps: &[u32]) -> Result<Self, Error> {
                let (q, exps) = pack(exps)?;
                Ok(Self { q, exps })
            }

            /// The degree-zero element in `q` variables.
            #[must_use]
            pub fn one(q: usize) -> Self {
                assert!((1..=MAX_VARS).contains(&q), "q = {q}");
                Self { q: q as u8, exps: [0; MAX_VARS] }
            }

            #[inline]
            #[must_use]
            pub fn q(&self) -> usize {
                self.q as usize
            }

            #[inline]
            #[must_use]
            pub fn exponents(&self) -> &[u32] {
                &self.exps[..self.q as usize]
            }

            #[inline]
            #[must_use]
            pub fn exponent(&self, i: usize) -> u32 {
                self.exponents()[i]
            }

            #[inline]
            #[must_use]
            pub fn degree(&self) -> u32 {
                self.exps.iter().sum()
            }

            /// Same variable count, new exponents.
            #[must_use]
            pub fn with_exponents(&self, exps: &[u32]) -> Self {
                assert_eq!(exps.len(), self.q(), "variable count mismatch");
                let mut e = [0; MAX_VARS];
                e[..exps.len()].copy_from_slice(exps);
                Self { q: self.q, exps: e }
            }

            #[must_use]
            pub fn weight(&self) -> WeightVector {
                WeightVector::of_exponents(self.exponents())
            }
        }
    };
}

/// `x_1^{a_1} ... x_q^{a_q}`.
///
/// The derived `Ord` is plain exponent-lexicographic and only serves storage;
/// [`super::compare`] is the weight-first order used for bases.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    q: u8,
    exps: [u32; MAX_VARS],
}

/// `a_1^{(d_1)} ... a_q^{(d_q)}` in the divided power algebra.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DualMonomial {
    q: u8,
    exps: [u32; MAX_VARS],
}

exponent_vector!(Monomial);
exponent_vector!(DualMonomial);

impl Monomial {
    #[must_use]
    pub fn dual(&self) -> DualMonomial {
        DualMonomial { q: self.q, exps: self.exps }
    }

    #[must_use]
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.q, other.q, "variable count mismatch");
        let mut exps = self.exps;
        for (a, b) in exps.iter_mut().zip(other.exps) {
            *a += b;
        }
        Self { q: self.q, exps }
    }
}

impl DualMonomial {
    #[must_use]
    pub fn primal(&self) -> Monomial {
        Monomial { q: self.q, exps: self.exps }
    }
}

fn write_powers(f: &mut fmt::Formatter<'_>, sym: char, exps: &[u32], divided: bool) -> fmt::Result {
    if exps.iter().all(|&e| e == 0) && !divided {
        return f.write_str("1");
    }
    for (i, &e) in exps.iter().enumerate() {
        match (divided, e) {
            (true, _) => write!(f, "{sym}{}^({e})", i + 1)?,
            (false, 0) => {}
            (false, 1) => write!(f, "{sym}{}", i + 1)?,
            (false, _) => write!(f, "{sym}{}^{e}", i + 1)?,
        }
    }
    Ok(())
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_powers(f, 'x', self.exponents(), false)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for DualMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_powers(f, 'a', self.exponents(), true)
    }
}

impl fmt::Debug for DualMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! homogeneous_sum {
    ($name:ident, $term:ident, $sep:literal) => {
        /// A homogeneous F2-linear combination; adding a term twice cancels it.
        #[derive(Clone, PartialEq, Eq, Hash)]
        pub struct $name {
            q: u8,
            degree: u32,
            terms: BTreeSet<$term>,
        }

        impl $name {
            #[must_use]
            pub fn zero(q: usize, degree: u32) -> Self {
                assert!((1..=MAX_VARS).contains(&q), "q = {q}");
                Self { q: q as u8, degree, terms: BTreeSet::new() }
            }

            #[must_use]
            pub fn from_term(t: $term) -> Self {
                let mut s = Self::zero(t.q(), t.degree());
                s.terms.insert(t);
                s
            }

            /// Fails if some term has another degree or variable count.
            pub fn from_terms(
                q: usize,
                degree: u32,
                terms: impl IntoIterator<Item = $term>,
            ) -> Result<Self, Error> {
                if !(1..=MAX_VARS).contains(&q) {
                    return Err(Error::VariableCount { found: q });
                }
                let mut s = Self::zero(q, degree);
                for t in terms {
                    if t.q() != q {
                        return Err(Error::VariableCount { found: t.q() });
                    }
                    if t.degree() != degree {
                        return Err(Error::DegreeMismatch { expected: degree, found: t.degree() });
                    }
                    s.toggle(t);
                }
                Ok(s)
            }

            /// Builds from exponent tuples that all share a length and degree.
            pub fn from_exponents(rows: &[&[u32]]) -> Result<Self, Error> {
                let first = $term::new(rows.first().ok_or(Error::Invalid("no terms"))?)?;
                let terms = rows.iter().map(|r| $term::new(r)).collect::<Result<Vec<_>, _>>()?;
                Self::from_terms(first.q(), first.degree(), terms)
            }

            #[inline]
            #[must_use]
            pub fn q(&self) -> usize {
                self.q as usize
            }

            #[inline]
            #[must_use]
            pub fn degree(&self) -> u32 {
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
            pub fn contains(&self, t: &$term) -> bool {
                self.terms.contains(t)
            }

            pub fn terms(&self) -> impl ExactSizeIterator<Item = &$term> + Clone + '_ {
                self.terms.iter()
            }

            pub fn toggle(&mut self, t: $term) {
                debug_assert_eq!(t.degree(), self.degree, "inhomogeneous term {t}");
                if !self.terms.remove(&t) {
                    self.terms.insert(t);
                }
            }

            pub fn add_assign(&mut self, other: &Self) {
                assert_eq!(self.degree, other.degree, "degree mismatch");
                for t in &other.terms {
                    self.toggle(*t);
                }
            }

            #[must_use]
            pub fn add(&self, other: &Self) -> Self {
                let mut s = self.clone();
                s.add_assign(other);
                s
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                if self.terms.is_empty() {
                    return f.write_str("0");
                }
                for (i, t) in self.terms.iter().enumerate() {
                    if i > 0 {
                        f.write_str($sep)?;
                    }
                    write!(f, "{t}")?;
                }
                Ok(())
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                fmt::Display::fmt(self, f)
            }
        }
    };
}

homogeneous_sum!(Polynomial, Monomial, " + ");
homogeneous_sum!(DualElement, DualMonomial, " + ");

impl From<Monomial> for Polynomial {
    fn from(m: Monomial) -> Self {
        Self::from_term(m)
    }
}

impl From<DualMonomial> for DualElement {
    fn from(m: DualMonomial) -> Self {
        Self::from_term(m)
    }
}

/// `<theta, f>`: the parity of the number of shared exponent vectors.
#[must_use]
pub fn pairing(theta: &DualElement, f: &Polynomial) -> bool {
    assert_eq!(theta.q(), f.q(), "variable count mismatch");
    assert_eq!(theta.degree(), f.degree(), "degree mismatch");
    theta.terms().filter(|d| f.contains(&d.primal())).count() % 2 == 1
}
