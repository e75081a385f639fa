use bwm_core::algebra::all_words;
use bwm_core::rules::{relation_element, relations, Strategy as Order};
use bwm_core::*;
use proptest::prelude::*;
use std::sync::{Arc, OnceLock};

/// Shared rule sets for the property tests, one per rank.
fn algebra(n: usize) -> Algebra<Exact> {
    static CACHE: [OnceLock<Arc<rules::RuleSet<Scalar>>>; 6] = [const { OnceLock::new() }; 6];
    let rs = CACHE[n].get_or_init(|| Arc::new(rules::RuleSet::complete(&Exact::new(), n)));
    Algebra::with_rules(Exact::new(), rs.clone())
}

fn wd(s: &str) -> Word {
    Word::parse(s).unwrap()
}

#[test]
fn small_reductions() {
    let alg = Algebra::new(Exact::new(), 3);
    let f = alg.field();
    let x = alg.reduce(&alg.word(wd("g1 e1")).unwrap()).unwrap();
    assert_eq!(x, alg.word(wd("e1")).unwrap().scale(f, &f.r_inv()));
    let x = alg.reduce(&alg.word(wd("e1 e1")).unwrap()).unwrap();
    assert_eq!(x, alg.word(wd("e1")).unwrap().scale(f, &f.delta()));
    let x = alg.mul(&alg.word(wd("g1 g2")).unwrap(), &alg.e(1).unwrap()).unwrap();
    assert_eq!(x, alg.word(wd("e2 e1")).unwrap());
    let v = alg
        .equals(&alg.word(wd("e1 g2 g1")).unwrap(), &alg.word(wd("e1 e2")).unwrap())
        .unwrap();
    assert!(v.is_equal());
    match alg.equals(&alg.g(1).unwrap(), &alg.g(2).unwrap()).unwrap() {
        Verdict::NotReducedToZero(d) => assert_eq!(d.len(), 2),
        Verdict::Equal => panic!("g1 and g2 are distinct"),
    }
}

#[test]
fn out_of_range_generators_are_rejected() {
    let alg = Algebra::new(Exact::new(), 3);
    assert!(matches!(alg.g(3), Err(Error::RankMismatch { .. })));
    let other = Algebra::new(Exact::new(), 2);
    assert!(alg.mul(&alg.g(1).unwrap(), &other.g(1).unwrap()).is_err());
}

#[test]
fn dimensions_are_odd_double_factorials() {
    for (n, dim) in [(1, 1), (2, 3), (3, 15), (4, 105)] {
        let alg = Algebra::new(Exact::new(), n);
        assert_eq!(alg.enumerate_irreducible().unwrap().len(), dim, "n = {n}");
    }
}

#[test]
fn defining_relations_reduce_to_zero() {
    for n in 2..=4 {
        let alg = Algebra::new(Exact::new(), n);
        for rel in relations(n) {
            let x = relation_element(alg.field(), n, rel);
            assert!(alg.reduce(&x).unwrap().is_zero(), "{rel}");
        }
    }
}

#[test]
fn inverse_of_a_generator() {
    let alg = Algebra::new(Exact::new(), 4);
    for i in 1..4 {
        let x = alg.mul(&alg.g(i).unwrap(), &alg.g_inv(i).unwrap()).unwrap();
        assert_eq!(x, alg.one());
        let y = alg.mul(&alg.g_inv(i).unwrap(), &alg.g(i).unwrap()).unwrap();
        assert_eq!(y, alg.one());
    }
}

#[test]
fn right_action_is_closed_on_the_basis() {
    let alg = Algebra::new(Exact::new(), 3);
    let basis = alg.enumerate_irreducible().unwrap();
    let m = alg.right_action_matrix(GenTok::e(1), &basis).unwrap();
    assert_eq!(m.len(), 15);
    let short = &basis[..3];
    assert!(matches!(
        alg.right_action_matrix(GenTok::g(2), short),
        Err(Error::ClosureUnstable { .. })
    ));
}

#[test]
fn budget_exhaustion_is_reported() {
    let alg = Algebra::new(Exact::new(), 4).with_budget(1);
    let x = alg.word(wd("g3 g2 g1 g3 g2 g1 g3 g2 g1")).unwrap();
    assert!(matches!(alg.reduce(&x), Err(Error::BudgetExhausted { .. })));
    assert!(matches!(
        alg.reduce_with(&x, Order::Leftmost, 2),
        Err(Error::BudgetExhausted { .. })
    ));
}

#[test]
fn every_word_of_length_three_reduces_both_ways() {
    let alg = Algebra::new(Exact::new(), 3);
    for w in all_words(3, 3) {
        let x = alg.word(w.clone()).unwrap();
        let a = alg.reduce_with(&x, Order::Leftmost, 1_000_000).unwrap();
        let b = alg.reduce_with(&x, Order::Rightmost, 1_000_000).unwrap();
        assert_eq!(a, b, "{w}");
        assert_eq!(alg.reduce(&x).unwrap(), a, "{w}");
    }
}

#[test]
fn modular_reduction_agrees_with_specialized_exact() {
    let pt = PrimePoint::new(modular::DEFAULT_PRIME, 123_457, 98_765, 4).unwrap();
    let m = Modular::new(pt);
    let exact = Algebra::new(Exact::new(), 4);
    let modular = Algebra::new(m.clone(), 4);
    for w in all_words(4, 3).into_iter().step_by(7) {
        let a = exact.reduce(&exact.word(w.clone()).unwrap()).unwrap();
        let b = modular.reduce(&modular.word(w.clone()).unwrap()).unwrap();
        assert_eq!(a.len(), b.len(), "{w}");
        for (u, c) in a.terms() {
            assert_eq!(m.specialize(c), b.coeff(u).copied(), "{w}");
        }
    }
}

fn token(n: usize) -> impl Strategy<Value = GenTok> {
    (any::<bool>(), 1..n).prop_map(|(g, i)| if g { GenTok::g(i) } else { GenTok::e(i) })
}

fn element(n: usize, max_terms: usize, max_len: usize) -> impl Strategy<Value = Element<Scalar>> {
    let term = (
        prop::collection::vec(token(n), 0..=max_len),
        (-3i64..=3, -2i32..=2, -1i32..=1),
    );
    prop::collection::vec(term, 1..=max_terms).prop_map(move |ts| {
        let f = Exact::new();
        let mut x = Element::zero(n);
        for (toks, (c, a, b)) in ts {
            x.add_term(&f, Word::from_tokens(toks), Scalar::monomial(c, a, b));
        }
        x
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn reduction_is_idempotent(x in element(4, 4, 6)) {
        let alg = algebra(4);
        let y = alg.reduce(&x).unwrap();
        prop_assert_eq!(alg.reduce(&y).unwrap(), y.clone());
        for (w, _) in y.terms() {
            prop_assert!(alg.rules().is_irreducible(w));
        }
    }

    #[test]
    fn multiplication_is_associative(
        a in element(4, 3, 4),
        b in element(4, 3, 4),
        c in element(4, 3, 4),
    ) {
        let alg = algebra(4);
        let left = alg.mul(&alg.mul(&a, &b).unwrap(), &c).unwrap();
        let right = alg.mul(&a, &alg.mul(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn strategies_agree(a in element(4, 2, 5), b in element(4, 2, 5)) {
        let alg = algebra(4);
        let f = Exact::new();
        let mut prod = Element::zero(4);
        for (u, c) in a.terms() {
            for (v, d) in b.terms() {
                prod.add_term(&f, u.concat(v), c.mul(d));
            }
        }
        let l = alg.reduce_with(&prod, Order::Leftmost, 1_000_000).unwrap();
        let r = alg.reduce_with(&prod, Order::Rightmost, 1_000_000).unwrap();
        prop_assert_eq!(&l, &r);
        prop_assert_eq!(alg.mul(&a, &b).unwrap(), l);
    }

    #[test]
    fn embedding_commutes_with_reduction(x in element(3, 3, 5)) {
        let small = algebra(3);
        let big = algebra(5);
        let a = small.reduce(&x).unwrap().embed(5).unwrap();
        let b = big.reduce(&x.embed(5).unwrap()).unwrap();
        prop_assert_eq!(a, b);
    }
}
