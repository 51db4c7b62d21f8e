use super::*;

#[test]
fn transfer_small_cases() {
    let r = verdict(4, 9).unwrap();
    assert_eq!((r.domain_dim, r.codomain_dim, r.rank), (1, 1, 1));
    assert!(r.iso);
    assert_eq!(r.matrix, BitMatrix::identity(1));
    let r = verdict(4, 21).unwrap();
    assert_eq!(r.matrix.nrows(), 0);
    assert!(r.mono);
    for q in 1..=4 {
        let r = verdict(q, 0).unwrap();
        assert_eq!(r.matrix, BitMatrix::identity(1));
    }
}

#[test]
fn rank_does_not_depend_on_representatives() {
    let lambda = Lambda::new(Convention::LeftBounded);
    for (q, n) in [(3, 8), (3, 15), (4, 9), (4, 17), (2, 6)] {
        let a = transfer_report(&lambda, q, n, HitOptions::default(), RepChoice::First).unwrap();
        let b = transfer_report(&lambda, q, n, HitOptions::default(), RepChoice::Last).unwrap();
        assert_eq!((a.rank, a.iso, a.mono, a.epi), (b.rank, b.iso, b.mono, b.epi), "q = {q}, n = {n}");
    }
}

#[test]
fn low_rank_transfers_are_isomorphisms() {
    for q in 1..=3 {
        for n in 0..=12 {
            let r = verdict(q, n).unwrap();
            assert!(r.iso, "q = {q}, n = {n}: {r:?}");
        }
    }
}

#[test]
fn non_primitive_rejected() {
    let lambda = Lambda::new(Convention::LeftBounded);
    let h = lambda.homology(1, 2).unwrap();
    let theta = DualElement::from(DualMonomial::new(&[2]).unwrap());
    assert!(matches!(transfer_classes(&lambda, &h, &[theta]), Err(Error::NotACycle { .. })));
}

#[test]
fn fast_suites_pass() {
    for name in ["remark26", "eq6", "dlc3"] {
        let r = verify_suite(name, HitOptions::default()).unwrap();
        assert!(r.passed(), "{r:?}");
    }
    assert!(verify_suite("nope", HitOptions::default()).is_err());
}

#[test]
fn capped_suite_is_partial() {
    let opts = HitOptions { max_cols: 10, ..HitOptions::default() };
    let r = verify_suite("dlc1", opts).unwrap();
    assert!(r.partial);
    assert!(!r.passed());
    assert!(!r.mismatched());
}
