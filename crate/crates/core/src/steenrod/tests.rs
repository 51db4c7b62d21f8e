use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::polyspace::{enumerate_monomials, is_spike, pairing};

fn x(e: &[u32]) -> Monomial {
    Monomial::new(e).unwrap()
}

fn poly(rows: &[&[u32]]) -> Polynomial {
    Polynomial::from_exponents(rows).unwrap()
}

fn dual(rows: &[&[u32]]) -> DualElement {
    DualElement::from_exponents(rows).unwrap()
}

fn zeta1() -> DualElement {
    dual(&[&[1, 3, 3, 2], &[1, 3, 4, 1], &[1, 5, 2, 1], &[1, 6, 1, 1]])
}

fn pascal_odd(n: u32, k: u32) -> bool {
    let mut row = vec![true];
    for _ in 0..n {
        let mut next = vec![true; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] ^ row[i];
        }
        row = next;
    }
    row.get(k as usize).copied().unwrap_or(false)
}

/// `Sq^t` on a monomial by splitting off one variable at a time (Cartan) with
/// binomials from Pascal's triangle.
fn cartan_oracle(t: u32, e: &[u32]) -> BTreeMap<Vec<u32>, bool> {
    let mut out = BTreeMap::new();
    if e.is_empty() {
        if t == 0 {
            out.insert(Vec::new(), true);
        }
        return out;
    }
    for k in 0..=t.min(e[0]) {
        if !pascal_odd(e[0], k) {
            continue;
        }
        for (rest, _) in cartan_oracle(t - k, &e[1..]).into_iter().filter(|(_, c)| *c) {
            let mut key = vec![e[0] + k];
            key.extend(rest);
            let c = out.entry(key).or_insert(false);
            *c = !*c;
        }
    }
    out.retain(|_, c| *c);
    out
}

fn random_poly(rng: &mut ChaCha8Rng, q: usize, n: u32) -> Polynomial {
    let ms = enumerate_monomials(q, n);
    Polynomial::from_terms(q, n, ms.into_iter().filter(|_| rng.gen_bool(0.3))).unwrap()
}

fn random_dual(rng: &mut ChaCha8Rng, q: usize, n: u32) -> DualElement {
    let ms = enumerate_monomials(q, n);
    DualElement::from_terms(q, n, ms.into_iter().filter(|_| rng.gen_bool(0.3)).map(|m| m.dual())).unwrap()
}

#[test]
fn sq_examples() {
    assert_eq!(sq(1, &poly(&[&[1]])), poly(&[&[2]]));
    let f = poly(&[&[1, 2, 0], &[3, 0, 0]]);
    assert_eq!(sq(0, &f), f);
    assert_eq!(sq(2, &poly(&[&[1, 2]])), poly(&[&[1, 4]]));
}

#[test]
fn sq_matches_cartan_oracle() {
    for n in 0..=9 {
        for m in enumerate_monomials(3, n) {
            for t in 0..=n + 1 {
                let got: Vec<Vec<u32>> = sq(t, &Polynomial::from(m)).terms().map(|y| y.exponents().to_vec()).collect();
                let want: Vec<Vec<u32>> = cartan_oracle(t, m.exponents()).into_keys().collect();
                assert_eq!(got, want, "Sq^{t}({m})");
            }
        }
    }
}

#[test]
fn instability() {
    for n in 0..=8 {
        for m in enumerate_monomials(3, n) {
            assert_eq!(sq(n, &Polynomial::from(m)), Polynomial::from(m.mul(&m)));
            assert!(sq(n + 1, &Polynomial::from(m)).is_zero());
        }
    }
}

#[test]
fn sq1_squares_to_zero() {
    for n in 0..=16 {
        for m in enumerate_monomials(4, n) {
            assert!(sq(1, &sq(1, &Polynomial::from(m))).is_zero(), "{m}");
        }
    }
}

#[test]
fn sq_dual_examples() {
    assert_eq!(sq_dual(1, &dual(&[&[2]])), dual(&[&[1]]));
    let th = random_dual(&mut ChaCha8Rng::seed_from_u64(2), 3, 6);
    assert_eq!(sq_dual(0, &th), th);
    assert!(sq_dual(1, &zeta1()).is_zero());
    assert!(sq_dual(2, &zeta1()).is_zero());
}

#[test]
fn adjointness() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..1000 {
        let q = rng.gen_range(1..=4);
        let n = rng.gen_range(0..=16);
        let t = rng.gen_range(0..=n.min(8));
        let theta = random_dual(&mut rng, q, n + t);
        let f = random_poly(&mut rng, q, n);
        assert_eq!(pairing(&sq_dual(t, &theta), &f), pairing(&theta, &sq(t, &f)));
    }
}

#[test]
fn annihilation_examples() {
    assert!(is_annihilated(&zeta1()));
    for s in 1..=3 {
        let m = (1 << (s + 1)) - 1;
        assert!(is_annihilated(&dual(&[&[0, m, m, m]])), "s = {s}");
    }
    assert!(!is_annihilated(&dual(&[&[2]])));
}

#[test]
fn hit_span_examples() {
    let h = hit_span(1, 2).unwrap();
    assert!(h.is_hit(&poly(&[&[2]])));
    let h = hit_span(2, 9).unwrap();
    assert_eq!(h.dim(), 0);
    assert!(h.is_pruned(&x(&[8, 1])));
    let h = HitSpan::new(2, 2, HitOptions { prune: false, ..HitOptions::default() }).unwrap();
    assert_eq!((h.basis().len(), h.rank(), h.dim()), (3, 2, 1));
    assert!(h.is_hit(&Polynomial::zero(2, 2)));
}

#[test]
fn spikes_are_never_hit() {
    for q in 1..=4 {
        for n in 1..=16 {
            let h = HitSpan::new(q, n, HitOptions { prune: false, ..HitOptions::default() }).unwrap();
            for m in enumerate_monomials(q, n).into_iter().filter(is_spike) {
                assert!(!h.is_hit(&Polynomial::from(m)), "{m}");
            }
        }
    }
}

#[test]
fn generator_squares_span_everything() {
    for q in 1..=3 {
        for n in 1..=10 {
            let base = HitOptions { prune: false, ..HitOptions::default() };
            let gen = HitSpan::new(q, n, base).unwrap();
            let all = HitSpan::new(q, n, HitOptions { all_squares: true, ..base }).unwrap();
            assert_eq!(gen.admissible(), all.admissible(), "q = {q}, n = {n}");
        }
    }
}

#[test]
fn pruning_agrees_with_full_elimination() {
    for n in 1..=16 {
        let full = HitSpan::new(4, n, HitOptions { prune: false, ..HitOptions::default() }).unwrap();
        let pruned = hit_span(4, n).unwrap();
        assert_eq!(full.admissible(), pruned.admissible(), "n = {n}");
        for m in full.basis().monomials() {
            if pruned.is_pruned(m) {
                assert!(full.is_hit(&Polynomial::from(*m)), "{m}");
            }
        }
    }
}

#[test]
fn reduce_represents_classes() {
    let h = hit_span(4, 9).unwrap();
    for (i, a) in h.admissible().iter().enumerate() {
        assert_eq!(h.reduce(&Polynomial::from(*a)), BitVector::unit(h.dim(), i));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..50 {
        let f = random_poly(&mut rng, 4, 9);
        let rep = h.representative(&h.reduce(&f));
        assert!(h.is_hit(&f.add(&rep)));
    }
}

#[test]
fn primitive_examples() {
    for k in 1..=5 {
        let p = primitive_basis(1, (1 << k) - 1, DEFAULT_MAX_COLS).unwrap();
        assert_eq!(p, [dual(&[&[(1 << k) - 1]])]);
    }
    assert_eq!(primitive_basis(3, 0, DEFAULT_MAX_COLS).unwrap().len(), 1);
    assert_eq!(primitive_basis(4, 9, DEFAULT_MAX_COLS).unwrap().len(), 46);
}

#[test]
fn primitives_are_annihilated_and_dual_to_admissibles() {
    for (q, n) in [(3, 7), (4, 9), (4, 10)] {
        let h = hit_span(q, n).unwrap();
        let prims = primitive_basis(q, n, DEFAULT_MAX_COLS).unwrap();
        assert_eq!(prims, h.dual_basis(), "q = {q}, n = {n}");
        let adm = h.admissible();
        for (i, th) in prims.iter().enumerate() {
            assert!(is_annihilated(th));
            for (j, a) in adm.iter().enumerate() {
                assert_eq!(pairing(th, &Polynomial::from(*a)), i == j);
            }
        }
    }
}

#[test]
fn primitive_dims_match_cohit_dims() {
    for q in 1..=4 {
        for n in 0..=20 {
            let p = primitive_basis(q, n, DEFAULT_MAX_COLS).unwrap().len();
            assert_eq!(p, hit_span(q, n).unwrap().dim(), "q = {q}, n = {n}");
        }
    }
}

#[test]
fn resource_cap_is_reported() {
    let opts = HitOptions { max_cols: 10, ..HitOptions::default() };
    assert!(matches!(HitSpan::new(4, 9, opts), Err(Error::ResourceCap { cap: 10, .. })));
}
