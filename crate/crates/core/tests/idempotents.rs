use bwm_core::hecke::{project, symmetrizer_closed_form, antisymmetrizer_closed_form, Perm};
use bwm_core::idempotents::*;
use bwm_core::morphisms::{gamma, gamma_coeffs};
use bwm_core::*;

fn check_symmetrizer(n: usize) {
    let alg = Algebra::new(Exact::new(), n);
    let f = alg.field();
    let s = symmetrizer(&alg, n, VariantId::RightB).unwrap();
    for v in VariantId::ALL {
        assert_eq!(symmetrizer(&alg, n, v).unwrap(), s, "n={n} {v}");
    }
    assert_eq!(alg.mul(&s, &s).unwrap(), s);
    let qs = s.scale(f, &f.q());
    for i in 1..n {
        assert_eq!(alg.mul(&s, &alg.g(i).unwrap()).unwrap(), qs);
        assert_eq!(alg.mul(&alg.g(i).unwrap(), &s).unwrap(), qs);
        assert!(alg.mul(&s, &alg.e(i).unwrap()).unwrap().is_zero());
        assert!(alg.mul(&alg.e(i).unwrap(), &s).unwrap().is_zero());
    }
}

fn check_antisymmetrizer(n: usize) {
    let alg = Algebra::new(Exact::new(), n);
    let f = alg.field();
    let a = antisymmetrizer(&alg, n, VariantId::RightB).unwrap();
    for v in VariantId::ALL {
        assert_eq!(antisymmetrizer(&alg, n, v).unwrap(), a, "n={n} {v}");
    }
    assert_eq!(alg.mul(&a, &a).unwrap(), a);
    let qa = a.scale(f, &f.neg(&f.q_pow(-1)));
    for i in 1..n {
        assert_eq!(alg.mul(&a, &alg.g(i).unwrap()).unwrap(), qa);
        assert_eq!(alg.mul(&alg.g(i).unwrap(), &a).unwrap(), qa);
        assert!(alg.mul(&a, &alg.e(i).unwrap()).unwrap().is_zero());
    }
    let s = symmetrizer(&alg, n, VariantId::RightB).unwrap();
    assert_eq!(gamma(&alg, &s).unwrap(), a);
    if n >= 2 {
        assert!(alg.mul(&s, &a).unwrap().is_zero());
    }
}

#[test]
fn symmetrizer_up_to_four_strands() {
    for n in 1..=4 {
        check_symmetrizer(n);
    }
}

#[test]
fn antisymmetrizer_up_to_four_strands() {
    for n in 1..=4 {
        check_antisymmetrizer(n);
    }
}

#[test]
fn two_strand_formula() {
    let alg = Algebra::new(Exact::new(), 2);
    let s = symmetrizer(&alg, 2, VariantId::ShiftLeftA).unwrap();
    assert_eq!(s, symmetrizer_two(alg.field(), 2).unwrap());
    let a = antisymmetrizer(&alg, 2, VariantId::ShiftRightB).unwrap();
    assert_eq!(a, antisymmetrizer_two(alg.field(), 2).unwrap());
}

#[test]
fn minus_families_are_gamma_images() {
    let f = Exact::new();
    let n = 5;
    for fam in Family::ALL {
        for k in 0..n {
            let is: Vec<usize> = if fam.two_index() { (1..k).collect() } else { vec![0] };
            for i in is {
                let plus = family(&f, n, fam, Side::Plus, k, i).unwrap();
                let minus = family(&f, n, fam, Side::Minus, k, i).unwrap();
                assert_eq!(gamma_coeffs(&f, &plus).unwrap(), minus, "{fam} k={k} i={i}");
            }
        }
    }
}

#[test]
fn family_domains() {
    let f = Exact::new();
    for fam in Family::ALL {
        let err = family(&f, 3, fam, Side::Plus, 3, 3).unwrap_err();
        assert!(matches!(err, Error::IndexDomain { .. } | Error::RankMismatch { .. }), "{fam}");
    }
}

#[test]
fn lemma_up_to_four_strands() {
    let alg = Algebra::new(Exact::new(), 4);
    for n in 3..=4 {
        let prev = symmetrizer(&alg, n - 1, VariantId::RightB).unwrap();
        for k in 1..n {
            for l in 1..n {
                let (lhs, rhs, case) = lemma_sides_with(&alg, &prev, n, k, l).unwrap();
                assert_eq!(lhs, rhs, "n={n} k={k} l={l} {}", case.name());
            }
        }
    }
}

#[test]
fn hecke_images_match_closed_forms() {
    for n in 1..=4 {
        let alg = Algebra::new(Exact::new(), n);
        let f = alg.field();
        let s = symmetrizer(&alg, n, VariantId::RightB).unwrap();
        let hs = project(f, &s).unwrap();
        assert_eq!(hs, symmetrizer_closed_form(f, n).unwrap(), "n={n}");
        let a = antisymmetrizer(&alg, n, VariantId::RightB).unwrap();
        assert_eq!(project(f, &a).unwrap(), antisymmetrizer_closed_form(f, n).unwrap(), "n={n}");
    }
}

#[test]
fn projection_rejects_r_in_surviving_terms() {
    let alg = Algebra::new(Exact::new(), 2);
    let x = alg.g(1).unwrap().scale(alg.field(), &Scalar::r());
    assert!(matches!(project(alg.field(), &x), Err(Error::NonzeroRDegree { .. })));
    let y = alg.e(1).unwrap().scale(alg.field(), &Scalar::r());
    assert!(project(alg.field(), &y).unwrap().is_empty());
}

#[test]
fn projection_of_identity_word() {
    let alg = Algebra::new(Exact::new(), 3);
    let h = project(alg.field(), &alg.one()).unwrap();
    assert_eq!(h.len(), 1);
    assert!(h.coeff(&Perm::identity(3)).is_some());
}

/// The three worked cases at three strands, written out by hand.
#[test]
fn lemma_worked_examples() {
    let alg = Algebra::new(Exact::new(), 3);
    let f = alg.field();
    let s2 = symmetrizer(&alg, 2, VariantId::RightB).unwrap();
    let d = |k| family(f, 3, Family::Tail, Side::Plus, 3, k).unwrap();
    let e2 = alg.e(2).unwrap();
    let e2e1 = alg.mul(&e2, &alg.e(1).unwrap()).unwrap();
    let q = f.q();
    let combo = |parts: &[(Scalar, Element<Scalar>)]| {
        let mut x = alg.zero();
        for (c, y) in parts {
            x = x.add(f, &y.scale(f, c));
        }
        alg.mul(&s2, &x).unwrap()
    };
    let sides = |k, l| {
        let (lhs, rhs, _) = lemma_sides(&alg, 3, k, l).unwrap();
        assert_eq!(lhs, rhs);
        lhs
    };

    let c = f.neg(&f.mul(&f.mul(&q, &f.r_inv()), &f.qhat()));
    assert_eq!(sides(2, 1), combo(&[(q.clone(), d(2)), (c, e2e1.clone())]));

    assert_eq!(sides(1, 1), combo(&[(f.r_inv(), d(1))]));

    // l = k + 1: the trailing e-chain has a single factor.
    let lhs = sides(1, 2);
    assert_eq!(lhs, combo(&[(f.q_pow(-1), d(2)), (f.qhat(), d(1)), (f.neg(&q), e2)]));
    assert_ne!(lhs, combo(&[(f.q_pow(-1), d(2)), (f.qhat(), d(1)), (f.neg(&q), e2e1)]));
}
