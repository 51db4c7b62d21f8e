use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::*;

fn x(e: &[u32]) -> Monomial {
    Monomial::new(e).unwrap()
}

fn a(e: &[u32]) -> DualMonomial {
    DualMonomial::new(e).unwrap()
}

/// Minimal number of parts `2^k - 1` (k >= 1) summing to each `n`, by dynamic programming.
fn min_spike_parts(limit: usize) -> Vec<u32> {
    let mut best = vec![u32::MAX; limit + 1];
    best[0] = 0;
    for n in 1..=limit {
        let mut k = 1;
        while (1usize << k) - 1 <= n {
            let prev = best[n - ((1 << k) - 1)];
            if prev != u32::MAX {
                best[n] = best[n].min(prev + 1);
            }
            k += 1;
        }
    }
    best
}

#[test]
fn alpha_examples() {
    assert_eq!(alpha(0), 0);
    assert_eq!(alpha(7), 3);
    assert_eq!(alpha(96), 2);
    for n in 0..500u64 {
        assert_eq!(alpha(n) as usize, format!("{n:b}").matches('1').count());
    }
}

#[test]
fn mu_examples() {
    assert_eq!(mu(0), 0);
    assert_eq!(mu(9), 3);
    assert_eq!(mu(5), 3);
    let best = min_spike_parts(300);
    for n in 0..=300u64 {
        assert_eq!(mu(n), best[n as usize], "n = {n}");
    }
}

#[test]
fn weight_vector_examples() {
    assert_eq!(x(&[7, 1, 1, 0]).weight().entries(), [3, 1, 1]);
    assert!(x(&[0, 0, 0, 0]).weight().entries().is_empty());
    assert_eq!(x(&[3, 3, 3, 3]).weight().entries(), [4, 4]);
    assert_eq!(WeightVector::new(vec![3, 1, 1, 0]), WeightVector::new(vec![3, 1, 1]));
    assert_eq!(WeightVector::parse("3,1,1"), Some(WeightVector::new(vec![3, 1, 1])));
    assert_eq!(WeightVector::parse("(3,3)").unwrap().degree(), 9);
}

#[test]
fn weight_degree_matches_monomial_degree() {
    for q in 1..=4 {
        for n in 0..=20 {
            for m in enumerate_monomials(q, n) {
                assert_eq!(m.weight().degree(), n);
                assert!(m.weight().entries().iter().all(|&w| w as usize <= q));
            }
        }
    }
}

#[test]
fn compare_examples() {
    assert_eq!(compare(&x(&[1, 2]), &x(&[2, 1])), Ordering::Less);
    assert_eq!(compare(&x(&[2, 1]), &x(&[2, 1])), Ordering::Equal);
    // weight decides before exponents: (1,1) > (3) fails, (3,0..) vs (1,1)
    let lo = x(&[4, 0, 0]);
    let hi = x(&[1, 1, 2]);
    assert!(lo.weight() < hi.weight());
    assert_eq!(compare(&lo, &hi), Ordering::Less);
}

#[test]
#[should_panic(expected = "degree mismatch")]
fn compare_rejects_degree_mismatch() {
    let _ = compare(&x(&[1, 0]), &x(&[1, 1]));
}

#[test]
fn compare_is_a_total_order() {
    for n in 0..=8 {
        let ms = enumerate_monomials(3, n);
        for p in &ms {
            for r in &ms {
                let c = compare(p, r);
                assert_eq!(c == Ordering::Equal, p == r);
                assert_eq!(c.reverse(), compare(r, p));
                for s in &ms {
                    if c == Ordering::Less && compare(r, s) == Ordering::Less {
                        assert_eq!(compare(p, s), Ordering::Less);
                    }
                }
            }
        }
        assert!(ms.windows(2).all(|w| compare(&w[0], &w[1]) == Ordering::Less));
    }
}

#[test]
fn spike_examples() {
    assert!(is_spike(&x(&[7, 1, 1, 0])));
    assert!(is_minimal_spike(&x(&[7, 1, 1, 0])));
    assert!(is_spike(&x(&[3, 3, 3, 3])));
    assert!(!is_minimal_spike(&x(&[3, 3, 3, 3])));
    assert!(!is_spike(&x(&[2])));
    assert!(is_minimal_spike(&x(&[1, 0, 7, 3])));
    assert!(is_minimal_spike(&x(&[3, 3, 0])));
    assert!(!is_minimal_spike(&x(&[7, 3, 3, 3])));
}

#[test]
fn minimal_spike_examples() {
    assert_eq!(minimal_spike(4, 9).unwrap(), x(&[7, 1, 1, 0]));
    assert_eq!(minimal_spike(1, 31).unwrap(), x(&[31]));
    assert_eq!(minimal_spike(4, 17).unwrap(), x(&[15, 1, 1, 0]));
    assert_eq!(minimal_spike(2, 9), Err(crate::Error::NoSpike { q: 2, n: 9 }));
}

#[test]
fn degree_17_minimal_spikes_by_enumeration() {
    let found: BTreeSet<Vec<u32>> = enumerate_monomials(4, 17)
        .into_iter()
        .filter(|m| is_spike(m) && is_minimal_spike(m))
        .map(|m| {
            let mut e = m.exponents().to_vec();
            e.sort_unstable_by(|p, q| q.cmp(p));
            e
        })
        .collect();
    assert_eq!(found.into_iter().collect::<Vec<_>>(), [vec![15, 1, 1, 0]]);
}

#[test]
fn spike_existence_matches_mu() {
    let best = min_spike_parts(4096);
    for n in 0..=4096u32 {
        for q in 1..=5usize {
            let exists = best[n as usize] as usize <= q;
            assert_eq!(mu(u64::from(n)) as usize <= q, exists, "n = {n}, q = {q}");
            match minimal_spike(q, n) {
                Ok(z) => {
                    assert!(exists);
                    assert_eq!(z.degree(), n);
                    assert!(is_minimal_spike(&z));
                }
                Err(_) => assert!(!exists, "n = {n}, q = {q}"),
            }
        }
    }
}

#[test]
fn enumerate_examples() {
    assert_eq!(enumerate_monomials(4, 0), [Monomial::one(4)]);
    assert_eq!(enumerate_monomials(2, 2).len(), 3);
    assert_eq!(enumerate_monomials(4, 9).len(), 220);
    assert_eq!(monomial_count(4, 45), 17296);
}

#[test]
fn basis_index_round_trips() {
    for (q, n) in [(1, 5), (3, 7), (4, 9), (5, 6)] {
        let b = MonomialBasis::new(q, n);
        for (i, m) in b.monomials().iter().enumerate() {
            assert_eq!(b.index_of(m), i);
        }
        let f = Polynomial::from_terms(q, n, b.monomials().iter().step_by(3).copied()).unwrap();
        assert_eq!(b.polynomial(&b.coords(&f)), f);
    }
}

#[test]
fn pairing_examples() {
    let f = Polynomial::from(x(&[5]));
    assert!(pairing(&DualElement::from(a(&[5])), &f));
    let g = Polynomial::from(x(&[2, 1]));
    assert!(!pairing(&DualElement::from(a(&[1, 2])), &g));
    let theta = DualElement::from_exponents(&[&[2, 1], &[1, 2], &[3, 0]]).unwrap();
    let f = Polynomial::from_exponents(&[&[2, 1], &[1, 2]]).unwrap();
    assert!(!pairing(&theta, &f));
}

#[test]
fn pairing_is_perfect() {
    let ms = enumerate_monomials(3, 6);
    for (i, d) in ms.iter().enumerate() {
        for (j, m) in ms.iter().enumerate() {
            let p = pairing(&DualElement::from(d.dual()), &Polynomial::from(*m));
            assert_eq!(p, i == j);
        }
    }
}

#[test]
fn homogeneous_sums() {
    let bad = Polynomial::from_exponents(&[&[1, 0], &[1, 1]]);
    assert_eq!(bad, Err(crate::Error::DegreeMismatch { expected: 1, found: 2 }));
    let mut f = Polynomial::from_exponents(&[&[1, 1], &[2, 0]]).unwrap();
    f.toggle(x(&[1, 1]));
    assert_eq!(f, Polynomial::from(x(&[2, 0])));
    assert_eq!(format!("{}", x(&[7, 1, 0, 1])), "x1^7x2x4");
    assert_eq!(format!("{}", a(&[1, 0])), "a1^(1)a2^(0)");
}

#[test]
fn generic_degree_examples() {
    assert!(generic_degree_decompositions(4, 5).contains(&(3, 1, 1)));
    assert!(generic_degree_decompositions(4, 9).contains(&(3, 1, 3)));
    assert!(generic_degree_decompositions(4, 4).contains(&(2, 1, 1)));
    assert!(generic_degree_decompositions(4, 0).is_empty());
    for n in 0..200 {
        for (r, s, v) in generic_degree_decompositions(4, n) {
            assert_eq!(r * ((1 << s) - 1) + v * (1 << s), n);
            assert!(mu(u64::from(v)) < r && r < 4);
        }
    }
}
