use bwm::expr;
use bwm::format::{element_from_json, element_json, element_text};
use bwm_core::{Algebra, Exact};
use proptest::prelude::*;
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    bwm::run(std::iter::once("bwm").chain(args.iter().copied()))
}

#[test]
fn reduce_prints_an_element_file() {
    let (code, out, _) = run(&["reduce", "--n", "2", "--expr", "g1*e1"]);
    assert_eq!(code, 0);
    assert_eq!(
        out.trim(),
        r#"{"rank":2,"terms":[{"word":["e1"],"coeff":{"num":[["1",0,-1]],"den":[["1",0,0]]}}]}"#
    );
}

#[test]
fn basis_count_in_text() {
    let (code, out, _) = run(&["basis", "--n", "4", "--format", "text"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next(), Some("count: 105"));
    assert_eq!(out.lines().count(), 106);
}

#[test]
fn verify_all_at_three_strands() {
    let (code, out, _) = run(&["verify", "--n", "3", "--suite", "all", "--backend", "exact"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["summary"]["status"], "pass");
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(|s| s.as_str()).collect();
    assert_eq!(keys, ["suite", "checks", "summary"]);
    let check = v["checks"][0].as_object().unwrap();
    let keys: Vec<&str> = check.keys().map(|s| s.as_str()).collect();
    assert_eq!(keys, ["identity", "n", "variant", "verdict", "wall_ms", "backend"]);
}

#[test]
fn modular_reports_are_labeled_as_evidence() {
    let (code, out, _) = run(&["verify", "--n", "3", "--suite", "lemma", "--backend", "modular", "--seed", "5"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    for c in v["checks"].as_array().unwrap() {
        assert_eq!(c["backend"], "modular-evidence");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["reduce", "--n", "2", "--expr", "g1 +"]).0, 3);
    assert_eq!(run(&["reduce", "--n", "2", "--expr", "g5"]).0, 3);
    assert_eq!(run(&["verify", "--n", "3", "--suite", "nonsense"]).0, 3);
    assert_eq!(run(&["sym", "--n", "3", "--variant", "sideways"]).0, 3);
    assert_eq!(run(&["frobnicate"]).0, 3);
    assert_eq!(run(&["--help"]).0, 0);
    let (code, _, err) = run(&["reduce", "--n", "4", "--budget", "1", "--expr", "S(4)"]);
    assert_eq!(code, 2, "{err}");
    assert_eq!(run(&["verify", "--n", "3", "--budget", "1", "--suite", "symmetrizer"]).0, 2);
    assert_eq!(run(&["reduce", "--n", "3", "--backend", "modular", "--prime", "1000", "--expr", "g1"]).0, 3);
}

#[test]
fn symmetrizer_variants_print_the_same_element() {
    let (_, a, _) = run(&["sym", "--n", "4", "--variant", "right-b"]);
    let (_, b, _) = run(&["sym", "--n", "4", "--variant", "telescoping"]);
    assert_eq!(a, b);
    let (_, c, _) = run(&["antisym", "--n", "3"]);
    assert_ne!(a, c);
}

#[test]
fn lemma_and_hecke_commands() {
    let (code, out, _) = run(&["lemma", "--n", "4", "--k", "2", "--l", "1", "--format", "text"]);
    assert_eq!(code, 0);
    assert!(out.contains("l<k"));
    assert_eq!(run(&["lemma", "--n", "2"]).0, 3);
    let (code, out, _) = run(&["hecke", "--n", "3"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["projection"]["terms"].as_array().unwrap().len(), 6);
    assert_eq!(v["matches_closed_form"], true);
}

#[test]
fn reports_are_deterministic_without_timing() {
    let args = ["verify", "--n", "3", "--suite", "all", "--seed", "11", "--no-timing"];
    let (_, a, _) = run(&args);
    let (_, b, _) = run(&args);
    assert_eq!(a, b);
    let (_, c, _) = run(&["verify", "--n", "3", "--suite", "all", "--seed", "11", "--no-timing", "--backend", "modular"]);
    let (_, d, _) = run(&["verify", "--n", "3", "--suite", "all", "--seed", "11", "--no-timing", "--backend", "modular"]);
    assert_eq!(c, d);
}

#[test]
fn out_flag_writes_a_file() {
    let dir = std::env::temp_dir().join(format!("bwm-out-{}", std::process::id()));
    let (code, out, _) = run(&["basis", "--n", "2", "--out", dir.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&dir).unwrap()).unwrap();
    assert_eq!(v["count"], 3);
    std::fs::remove_file(dir).ok();
}

#[test]
fn element_files_read_back() {
    let alg = Algebra::new(Exact::new(), 3);
    let x = expr::eval(&alg, &expr::parse("S(3) + 2*A(2)*g2 - r^-1*e1*e2").unwrap()).unwrap();
    let v = element_json(alg.field(), &x);
    assert_eq!(element_from_json(&v).unwrap(), x);
}

fn atom() -> impl Strategy<Value = String> {
    prop_oneof![
        (1usize..4).prop_map(|i| format!("g{i}")),
        (1usize..4).prop_map(|i| format!("e{i}")),
        (1usize..4).prop_map(|i| format!("g{i}^-1")),
        Just("q".to_string()),
        Just("r^-1".to_string()),
        (-3i64..=3).prop_map(|c| format!("({c})")),
        Just("S(2)".to_string()),
        Just("A(3)".to_string()),
        Just("bplus(2)".to_string()),
        Just("dminus_bar(3, 1)".to_string()),
    ]
}

fn expression() -> impl Strategy<Value = String> {
    atom().prop_recursive(3, 12, 3, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("({a} + {b})")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("({a} - {b})")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("{a} * {b}")),
            inner.prop_map(|a| format!("({a}) / (1 - q*r)")),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn text_and_json_round_trip(src in expression()) {
        let alg = Algebra::new(Exact::new(), 4);
        let x = expr::eval(&alg, &expr::parse(&src).unwrap()).unwrap();
        let text = element_text(alg.field(), &x);
        let y = expr::eval(&alg, &expr::parse(&text).unwrap()).unwrap();
        prop_assert!(alg.equals(&x, &y).unwrap().is_equal(), "{} -> {}", src, text);
        let z = element_from_json(&element_json(alg.field(), &x)).unwrap();
        prop_assert_eq!(z, x);
    }
}
