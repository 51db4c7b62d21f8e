use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use super::monomial::Monomial;

/// `omega(x)`: entry `j` counts the exponents of `x` with bit `j` set.
///
/// Trailing zeros are trimmed, so the derived order on the entries is the
/// left-lexicographic order with zero padding.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct WeightVector(Vec<u32>);

impl WeightVector {
    #[must_use]
    pub fn new(mut entries: Vec<u32>) -> Self {
        while entries.last() == Some(&0) {
            entries.pop();
        }
        Self(entries)
    }

    #[must_use]
    pub fn of_exponents(exps: &[u32]) -> Self {
        let mut w = Vec::new();
        for bit in 0..32 {
            let c = exps.iter().filter(|&&e| e >> bit & 1 == 1).count() as u32;
            w.push(c);
        }
        Self::new(w)
    }

    #[must_use]
    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// `sum_j 2^(j-1) omega_j`.
    #[must_use]
    pub fn degree(&self) -> u32 {
        self.0.iter().enumerate().map(|(j, &w)| w << j).sum()
    }

    /// Parses `3,1,1`.
    #[must_use]
    pub fn parse(s: &str) -> Option<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Some(Self::default());
        }
        s.split(',').map(|t| t.trim().parse().ok()).collect::<Option<Vec<u32>>>().map(Self::new)
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, w) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{w}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Weight entries for bits `0..16`, fixed width so keys compare as arrays.
pub(crate) type WeightKey = [u8; 16];

pub(crate) fn weight_key(exps: &[u32]) -> WeightKey {
    let mut k = [0u8; 16];
    for &e in exps {
        debug_assert!(e < 1 << 16, "exponent {e} too large");
        let mut rest = e;
        while rest != 0 {
            let b = rest.trailing_zeros() as usize;
            k[b] += 1;
            rest &= rest - 1;
        }
    }
    k
}

/// Sort key realizing [`compare`].
pub(crate) fn order_key(x: &Monomial) -> (WeightKey, [u32; 5]) {
    let mut e = [0; 5];
    e[..x.q()].copy_from_slice(x.exponents());
    (weight_key(x.exponents()), e)
}

/// The monomial order: weight vectors first, then exponent vectors, both left-lexicographic.
///
/// Panics if the degrees differ.
#[must_use]
pub fn compare(x: &Monomial, y: &Monomial) -> Ordering {
    assert_eq!(x.degree(), y.degree(), "degree mismatch");
    assert_eq!(x.q(), y.q(), "variable count mismatch");
    order_key(x).cmp(&order_key(y))
}
