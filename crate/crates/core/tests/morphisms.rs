use bwm_core::hecke::{project, HeckeElement};
use bwm_core::morphisms::*;
use bwm_core::*;
use proptest::prelude::*;
use std::sync::{Arc, OnceLock};

fn algebra() -> Algebra<Exact> {
    static RULES: OnceLock<Arc<rules::RuleSet<Scalar>>> = OnceLock::new();
    let rs = RULES.get_or_init(|| Arc::new(rules::RuleSet::complete(&Exact::new(), 4)));
    Algebra::with_rules(Exact::new(), rs.clone())
}

fn element() -> impl Strategy<Value = Element<Scalar>> {
    let tok = (any::<bool>(), 1usize..4).prop_map(|(g, i)| if g { GenTok::g(i) } else { GenTok::e(i) });
    let term = (prop::collection::vec(tok, 0..=4), (-2i64..=2, -2i32..=2, -1i32..=1));
    prop::collection::vec(term, 1..=3).prop_map(|ts| {
        let f = Exact::new();
        let mut x = Element::zero(4);
        for (toks, (c, a, b)) in ts {
            x.add_term(&f, Word::from_tokens(toks), Scalar::monomial(c, a, b));
        }
        x
    })
}

/// Random elements whose coefficients do not involve `r`.
fn r_free() -> impl Strategy<Value = Element<Scalar>> {
    element().prop_map(|x| x.map_coeffs(&Exact::new(), |c| if c.involves_r() { Scalar::q() } else { c.clone() }))
}

fn g_word() -> impl Strategy<Value = Element<Scalar>> {
    let tok = (1usize..4).prop_map(GenTok::g);
    let term = (prop::collection::vec(tok, 0..=5), (-2i64..=2, -2i32..=2));
    prop::collection::vec(term, 1..=3).prop_map(|ts| {
        let f = Exact::new();
        let mut x = Element::zero(4);
        for (toks, (c, a)) in ts {
            x.add_term(&f, Word::from_tokens(toks), Scalar::monomial(c, a, 0));
        }
        x
    })
}

#[test]
fn morphisms_preserve_relations() {
    let alg = algebra();
    for rel in rules::relations(4) {
        let x = rules::relation_element(alg.field(), 4, rel);
        assert!(alpha(&alg, &x).unwrap().is_zero(), "{rel}");
        assert!(beta(&alg, &x).unwrap().is_zero(), "{rel}");
        assert!(gamma(&alg, &x).unwrap().is_zero(), "{rel}");
    }
}

#[test]
fn gamma_needs_exact_coefficients() {
    let pt = PrimePoint::new(modular::DEFAULT_PRIME, 1234, 5678, 3).unwrap();
    let alg = Algebra::new(Modular::new(pt), 3);
    assert_eq!(gamma(&alg, &alg.g(1).unwrap()), Err(Error::GammaUnavailable));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn alpha_is_an_involutive_automorphism(a in element(), b in element()) {
        let alg = algebra();
        let ab = alg.mul(&a, &b).unwrap();
        let lhs = alpha(&alg, &ab).unwrap();
        let rhs = alg.mul(&alpha(&alg, &a).unwrap(), &alpha(&alg, &b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(alpha(&alg, &alpha(&alg, &a).unwrap()).unwrap(), alg.reduce(&a).unwrap());
    }

    #[test]
    fn beta_reverses_products(a in element(), b in element()) {
        let alg = algebra();
        let lhs = beta(&alg, &alg.mul(&a, &b).unwrap()).unwrap();
        let rhs = alg.mul(&beta(&alg, &b).unwrap(), &beta(&alg, &a).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(beta(&alg, &beta(&alg, &a).unwrap()).unwrap(), alg.reduce(&a).unwrap());
    }

    #[test]
    fn gamma_is_multiplicative(a in element(), b in element()) {
        let alg = algebra();
        let lhs = gamma(&alg, &alg.mul(&a, &b).unwrap()).unwrap();
        let rhs = alg.mul(&gamma(&alg, &a).unwrap(), &gamma(&alg, &b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn projection_is_multiplicative(a in r_free(), b in g_word()) {
        let alg = algebra();
        let f = alg.field();
        let lhs = project(f, &alg.mul(&a, &b).unwrap()).unwrap();
        let rhs: HeckeElement<Scalar> = project(f, &a).unwrap().mul(f, &project(f, &b).unwrap());
        prop_assert_eq!(lhs, rhs);
    }
}
