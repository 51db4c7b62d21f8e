use alloc::collections::BTreeSet;
use alloc::vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::polyspace::enumerate_monomials;
use crate::steenrod::{sq, DEFAULT_MAX_COLS};
use crate::transferlab::fixtures;

fn x(e: &[u32]) -> Monomial {
    Monomial::new(e).unwrap()
}

fn set_of(rows: &[[u32; 4]]) -> BTreeSet<Monomial> {
    rows.iter().map(|r| x(r)).collect()
}

fn unpruned() -> HitOptions {
    HitOptions { prune: false, ..HitOptions::default() }
}

#[test]
fn cohit_dimensions() {
    assert_eq!(cohit_basis(4, 9).unwrap().dim(), 46);
    assert_eq!(cohit_basis(4, 21).unwrap().dim(), 94);
    assert_eq!(cohit_basis(4, 45).unwrap().dim(), 105);
    assert_eq!(cohit_basis(4, 0).unwrap().dim(), 1);
}

#[test]
fn admissible_bases_match_printed_lists() {
    let b9 = cohit_basis(4, 9).unwrap();
    assert_eq!(b9.admissible().iter().copied().collect::<BTreeSet<_>>(), set_of(&fixtures::ADMISSIBLE_9));
    let b17 = cohit_basis(4, 17).unwrap();
    assert_eq!(b17.dim(), 87);
    assert_eq!(b17.admissible().iter().copied().collect::<BTreeSet<_>>(), set_of(&fixtures::ADMISSIBLE_17));
}

#[test]
fn weight_subquotients_at_9() {
    let w1 = weight_subquotient(4, 9, &WeightVector::new(vec![3, 1, 1])).unwrap();
    let w2 = weight_subquotient(4, 9, &WeightVector::new(vec![3, 3])).unwrap();
    assert_eq!(w1.dim() + w2.dim(), 46);
    assert!(w1.basis().iter().all(|m| m.weight() == *w1.omega()));
    let low = weight_subquotient(4, 9, &WeightVector::new(vec![1, 2, 1])).unwrap();
    assert!(low.omega() < &WeightVector::new(vec![3, 1, 1]));
    assert_eq!(low.dim(), 0);
    assert_eq!(live_weights(4, 9).unwrap(), [WeightVector::new(vec![3, 1, 1]), WeightVector::new(vec![3, 3])]);
}

#[test]
fn weight_subquotient_rejects_wrong_degree() {
    let e = weight_subquotient(4, 9, &WeightVector::new(vec![3, 3, 3])).unwrap_err();
    assert_eq!(e, Error::DegreeMismatch { expected: 9, found: 21 });
}

#[test]
fn weight_subquotients_at_21() {
    let w = weight_subquotient(4, 21, &WeightVector::new(vec![3, 3, 3])).unwrap();
    let total: usize = weights_of_degree(4, 21)
        .iter()
        .map(|w| weight_subquotient(4, 21, w).unwrap().dim())
        .sum();
    assert_eq!(total, 94);
    assert!(w.dim() > 0);
}

#[test]
fn weight_dims_sum_to_cohit_dim() {
    for q in 1..=4 {
        for n in 0..=21 {
            let total: usize =
                weights_of_degree(q, n).iter().map(|w| weight_subquotient(q, n, w).unwrap().dim()).sum();
            assert_eq!(total, cohit_basis(q, n).unwrap().dim(), "q = {q}, n = {n}");
        }
    }
}

#[test]
fn weight_reduction_agrees_with_admissibles() {
    let full = cohit_basis(4, 17).unwrap();
    for w in live_weights(4, 17).unwrap() {
        let sub = weight_subquotient(4, 17, &w).unwrap();
        let adm: BTreeSet<_> = full.admissible().iter().filter(|m| m.weight() == w).copied().collect();
        assert_eq!(sub.basis().iter().copied().collect::<BTreeSet<_>>(), adm, "{w}");
        for (i, b) in sub.basis().iter().enumerate() {
            assert_eq!(sub.reduce(&Polynomial::from(*b)).unwrap(), BitVector::unit(sub.dim(), i));
        }
    }
}

#[test]
fn kameko_maps() {
    let q = 4;
    assert_eq!(kameko_down(&Polynomial::from(x(&[1, 1, 1, 1]))), Polynomial::from(Monomial::one(4)));
    assert_eq!(kameko_down(&Polynomial::from(x(&[3, 3, 3, 3]))), Polynomial::from(x(&[1, 1, 1, 1])));
    assert!(kameko_down(&Polynomial::from(x(&[2, 1, 1, 1]))).is_zero());
    assert_eq!(kameko_up(&Polynomial::from(Monomial::one(q))), Polynomial::from(x(&[1, 1, 1, 1])));
    assert_eq!(kameko_up(&Polynomial::from(x(&[3, 0, 0, 0]))), Polynomial::from(x(&[7, 1, 1, 1])));
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..500 {
        let n = rng.gen_range(0..12);
        let ms = enumerate_monomials(q, n);
        let g = Polynomial::from_terms(q, n, ms.into_iter().filter(|_| rng.gen_bool(0.4))).unwrap();
        assert_eq!(kameko_down(&kameko_up(&g)), g);
    }
}

#[test]
fn kameko_kernel_in_degree_4() {
    let k = kameko_matrix(4, 0, HitOptions::default()).unwrap();
    assert_eq!(k.source.degree(), 4);
    let reps = k.kernel_representatives();
    assert_eq!(reps.len(), 20);
    let got: BTreeSet<Monomial> = reps
        .iter()
        .map(|p| {
            assert_eq!(p.len(), 1);
            *p.terms().next().unwrap()
        })
        .collect();
    assert_eq!(got, set_of(&fixtures::KAMEKO_KERNEL_4));
}

#[test]
fn kameko_rank_and_isomorphism() {
    let k = kameko_matrix(4, 3, HitOptions::default()).unwrap();
    assert_eq!(k.source.degree(), 10);
    let direct = cohit_basis(4, 3).unwrap().dim();
    assert_eq!(k.rank(), direct);
    for n in 0..=12u32 {
        let k = kameko_matrix(4, n, HitOptions::default()).unwrap();
        assert_eq!(k.source.dim(), k.kernel().len() + k.target.dim(), "n = {n}");
        assert_eq!(k.rank(), k.target.dim());
        if mu(u64::from(2 * n + 4)) == 4 {
            assert_eq!(k.source.dim(), k.target.dim(), "n = {n}");
            assert!(k.kernel().is_empty());
        }
    }
    assert!((0..=12u32).any(|n| mu(u64::from(2 * n + 4)) == 4));
}

#[test]
fn kameko_sends_hit_to_hit() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..60 {
        let q = rng.gen_range(1..=4usize);
        let n = rng.gen_range(0..=((20 - q as u32) / 2));
        let src = 2 * n + q as u32;
        let mut f = Polynomial::zero(q, src);
        for t in (0..5).map(|i| 1u32 << i).filter(|&t| t <= src) {
            let ms = enumerate_monomials(q, src - t);
            let g = Polynomial::from_terms(q, src - t, ms.into_iter().filter(|_| rng.gen_bool(0.2))).unwrap();
            f.add_assign(&sq(t, &g));
        }
        assert!(cohit_basis(q, src).unwrap().is_hit(&f));
        assert!(cohit_basis(q, n).unwrap().is_hit(&kameko_down(&f)), "q = {q}, n = {n}");
    }
}

#[test]
fn singer_prune_examples() {
    let ms = enumerate_monomials(4, 9);
    let p = singer_prune(4, 9, &ms).unwrap();
    assert!(p.undecided.contains(&x(&[7, 1, 1, 0])));
    assert!(ms.iter().filter(|m| m.weight().entries()[0] == 1).all(|m| p.known_hit.contains(m)));
    let all = singer_prune(2, 9, &enumerate_monomials(2, 9)).unwrap();
    assert!(all.undecided.is_empty());
    assert_eq!(all.known_hit.len(), 10);
}

#[test]
fn singer_prune_is_sound() {
    for n in 1..=16 {
        let full = CohitBasis::new(4, n, unpruned()).unwrap();
        let p = singer_prune(4, n, full.hit_span().basis().monomials()).unwrap();
        for m in &p.known_hit {
            assert!(full.is_hit(&Polynomial::from(*m)), "{m}");
        }
    }
}

#[test]
fn resource_caps() {
    let opts = HitOptions { max_cols: 5, ..HitOptions::default() };
    assert!(matches!(CohitBasis::new(4, 9, opts), Err(Error::ResourceCap { .. })));
    let w = WeightVector::new(vec![3, 3]);
    assert!(matches!(WeightSubquotient::new(4, 9, &w, 3), Err(Error::ResourceCap { .. })));
    assert!(WeightSubquotient::new(4, 9, &w, DEFAULT_MAX_COLS).is_ok());
}
