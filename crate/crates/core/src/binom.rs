//! Binomial coefficients mod 2.

/// `C(n, k) mod 2` by Lucas: odd iff the bits of `k` are a subset of the bits of `n`.
#[inline]
#[must_use]
pub fn odd(n: u32, k: u32) -> bool {
    k & !n == 0
}

/// `C(n, k) mod 2` for possibly negative `n`, treating negative tops as zero.
#[inline]
#[must_use]
pub fn odd_signed(n: i64, k: i64) -> bool {
    if n < 0 || k < 0 || k > n {
        return false;
    }
    k & !n == 0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pascal(n: u32, k: u32) -> bool {
        let mut row = alloc::vec![1u8];
        for _ in 0..n {
            let mut next = alloc::vec![1u8; row.len() + 1];
            for i in 1..row.len() {
                next[i] = row[i - 1] ^ row[i];
            }
            row = next;
        }
        row.get(k as usize).copied().unwrap_or(0) == 1
    }

    #[test]
    fn lucas_matches_pascal() {
        for n in 0..40 {
            for k in 0..45 {
                assert_eq!(odd(n, k) && k <= n, pascal(n, k), "C({n},{k})");
            }
        }
    }

    #[test]
    fn signed_rejects_negative_top() {
        assert!(!odd_signed(-1, 0));
        assert!(odd_signed(0, 0));
        assert!(!odd_signed(2, 3));
        assert!(odd_signed(5, 1));
    }
}
