use alloc::vec::Vec;

use super::monomial::Monomial;
use crate::Error;

/// Number of ones in the binary expansion.
#[must_use]
pub fn alpha(n: u64) -> u32 {
    n.count_ones()
}

/// `min { k : alpha(n + k) <= k }`.
#[must_use]
pub fn mu(n: u64) -> u32 {
    (0..).find(|&k| alpha(n + u64::from(k)) <= k).expect("alpha is bounded")
}

fn xi(e: u32) -> Option<u32> {
    (e + 1).is_power_of_two().then(|| (e + 1).trailing_zeros())
}

/// Every exponent is of the form `2^k - 1`.
#[must_use]
pub fn is_spike(x: &Monomial) -> bool {
    x.exponents().iter().all(|&e| xi(e).is_some())
}

/// A spike whose nonzero exponents `2^xi - 1` can be listed with
/// `xi_1 > xi_2 > ... > xi_(m-1) >= xi_m >= 1`.
#[must_use]
pub fn is_minimal_spike(x: &Monomial) -> bool {
    let Some(mut xs) = x.exponents().iter().map(|&e| xi(e)).collect::<Option<Vec<u32>>>() else {
        return false;
    };
    xs.retain(|&k| k > 0);
    xs.sort_unstable_by(|a, b| b.cmp(a));
    let m = xs.len();
    (1..m).all(|i| xs[i - 1] > xs[i] || i == m - 1)
}

/// The minimal spike of degree `n` in `q` variables, exponents decreasing from `x_1`.
pub fn minimal_spike(q: usize, n: u32) -> Result<Monomial, Error> {
    if !(1..=super::MAX_VARS).contains(&q) {
        return Err(Error::VariableCount { found: q });
    }
    if mu(u64::from(n)) as usize > q {
        return Err(Error::NoSpike { q, n });
    }
    let mut parts = Vec::new();
    if !search(n, q, u32::MAX, &mut parts) {
        return Err(Error::NoSpike { q, n });
    }
    let mut exps = [0u32; super::MAX_VARS];
    for (i, &k) in parts.iter().enumerate() {
        exps[i] = (1 << k) - 1;
    }
    let z = Monomial::new(&exps[..q])?;
    debug_assert!(is_minimal_spike(&z));
    Ok(z)
}

/// Strictly decreasing `xi`, except that the final two may tie.
fn search(rest: u32, slots: usize, below: u32, parts: &mut Vec<u32>) -> bool {
    if rest == 0 {
        return true;
    }
    if slots == 0 {
        return false;
    }
    let top = 31 - (rest + 1).leading_zeros();
    for k in (1..=top).rev() {
        let part = (1u32 << k) - 1;
        if k > below || (k == below && rest != part) {
            continue;
        }
        parts.push(k);
        if search(rest - part, slots - 1, k, parts) {
            return true;
        }
        parts.pop();
    }
    false
}

/// All `(r, s, v)` with `n = r(2^s - 1) + v 2^s`, `s >= 1` and `mu(v) < r < q`.
#[must_use]
pub fn generic_degree_decompositions(q: u32, n: u32) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    let mut s = 1;
    while (1u64 << s) - 1 <= u64::from(n) {
        let (low, high) = ((1u32 << s) - 1, 1u32 << s);
        for r in 1..q {
            let Some(rest) = n.checked_sub(r * low) else { break };
            if rest % high == 0 {
                let v = rest / high;
                if mu(u64::from(v)) < r {
                    out.push((r, s, v));
                }
            }
        }
        s += 1;
    }
    out
}
