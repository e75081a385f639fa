//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p bwm --test acceptance`. The default harness is
//! off, so the lines print directly.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use serde_json::Value;

type Key = (u64, String, String);

struct Run {
    checks: Vec<(Key, String)>,
    elapsed: Duration,
    code: i32,
}

fn bwm(args: &[&str]) -> (i32, String, Duration) {
    let start = Instant::now();
    let (code, out, err) = bwm::run(std::iter::once("bwm").chain(args.iter().copied()));
    if code != 0 && !err.is_empty() {
        eprintln!("bwm {}: {}", args.join(" "), err.trim());
    }
    (code, out, start.elapsed())
}

fn verify(n: usize, suite: &str, backend: &str) -> Run {
    let n = n.to_string();
    let (code, out, elapsed) = bwm(&["verify", "--n", &n, "--suite", suite, "--backend", backend, "--seed", "1"]);
    let v: Value = serde_json::from_str(&out).unwrap_or(Value::Null);
    let checks = v["checks"]
        .as_array()
        .map(|cs| {
            cs.iter()
                .map(|c| {
                    let key = (
                        c["n"].as_u64().unwrap_or(0),
                        c["identity"].as_str().unwrap_or("").to_string(),
                        c["variant"].as_str().unwrap_or("").to_string(),
                    );
                    (key, c["verdict"].as_str().unwrap_or("").to_string())
                })
                .collect()
        })
        .unwrap_or_default();
    Run { checks, elapsed, code }
}

impl Run {
    fn all_equal(&self) -> bool {
        self.code == 0 && !self.checks.is_empty() && self.checks.iter().all(|(_, v)| v == "Equal")
    }

    fn failures(&self) -> Vec<String> {
        self.checks
            .iter()
            .filter(|(_, v)| v != "Equal")
            .map(|((n, id, var), v)| format!("n={n} {id} [{var}]: {v}"))
            .collect()
    }
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn secs(d: Duration) -> String {
    format!("{:.1}s", d.as_secs_f64())
}

/// Runs `suite` exactly at each rank and reports every check under `limit(n)`.
fn exact_suite(
    suite: &str,
    ranks: std::ops::RangeInclusive<usize>,
    limit: impl Fn(usize) -> Duration,
    equal: &mut BTreeSet<Key>,
) -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for n in ranks {
        let run = verify(n, suite, "exact");
        let ok = run.all_equal() && run.elapsed <= limit(n);
        pass &= ok;
        for (k, v) in &run.checks {
            if v == "Equal" {
                equal.insert(k.clone());
            }
        }
        let mut part = format!("n={n}: {} checks {}", run.checks.len(), secs(run.elapsed));
        if !ok {
            part.push_str(&format!(" {:?}", run.failures()));
        }
        parts.push(part);
    }
    Outcome {
        pass,
        detail: parts.join(", "),
    }
}

fn minutes(m: u64) -> Duration {
    Duration::from_secs(60 * m)
}

fn main() -> ExitCode {
    let mut equal = BTreeSet::new();
    let mut results: Vec<(&str, Outcome)> = Vec::new();

    results.push((
        "1 relations, n=2..5, exact, < 1 min each",
        exact_suite("relations", 2..=5, |_| minutes(1), &mut equal),
    ));

    results.push((
        "2 irreducible counts 3/15/105/945",
        exact_suite("basis", 2..=5, |n| if n < 5 { minutes(1) } else { minutes(10) }, &mut equal),
    ));

    results.push((
        "3 symmetrizer, n=2..5, exact",
        exact_suite("symmetrizer", 2..=5, |n| if n <= 4 { minutes(1) } else { minutes(10) }, &mut equal),
    ));

    let mut anti = exact_suite("antisymmetrizer", 2..=4, |_| minutes(10), &mut equal);
    let spot = verify(5, "antisymmetrizer", "modular");
    anti.pass &= spot.all_equal();
    anti.detail.push_str(&format!(
        ", n=5 modular: {} checks {}{}",
        spot.checks.len(),
        secs(spot.elapsed),
        if spot.all_equal() { String::new() } else { format!(" {:?}", spot.failures()) }
    ));
    results.push(("4 antisymmetrizer, exact n=2..4, modular n=5", anti));

    let mut lemma = exact_suite("lemma", 3..=5, |_| minutes(10), &mut equal);
    let cases: BTreeSet<String> = equal
        .iter()
        .filter(|(_, id, _)| id.starts_with("S(n-1) d(n,"))
        .map(|(_, _, var)| var.clone())
        .collect();
    let want: BTreeSet<String> = ["l<k", "l=k>1", "l=k=1", "l=k+1", "l>=k+2"].map(String::from).into();
    lemma.pass &= cases == want;
    lemma.detail.push_str(&format!(", cases {:?}", cases));
    results.push(("5 lemma, every (n,k,l) with n<=5", lemma));

    results.push((
        "6 hecke projection, n=2..5",
        exact_suite("hecke", 2..=5, |_| minutes(10), &mut equal),
    ));

    results.push((
        "7 morphisms, n=2..5",
        exact_suite("morphisms", 2..=5, |_| minutes(10), &mut equal),
    ));

    results.push((
        "8 uniqueness of the q-eigenvector, n=2,3",
        exact_suite("uniqueness", 2..=3, |_| minutes(10), &mut equal),
    ));

    // Modular re-check of every exact Equal verdict above.
    let mut modular = BTreeMap::new();
    let mut modular_time = Duration::ZERO;
    for (suite, ranks) in [
        ("relations", 2..=5),
        ("basis", 2..=5),
        ("symmetrizer", 2..=5),
        ("antisymmetrizer", 2..=4),
        ("lemma", 3..=5),
        ("hecke", 2..=5),
        ("morphisms", 2..=5),
        ("uniqueness", 2..=3),
    ] {
        for n in ranks {
            let run = verify(n, suite, "modular");
            modular_time += run.elapsed;
            modular.extend(run.checks);
        }
    }
    let mut missing = Vec::new();
    let mut disagree = Vec::new();
    for k in &equal {
        match modular.get(k) {
            Some(v) if v == "Equal" => {}
            Some(v) => disagree.push(format!("n={} {} [{}]: {v}", k.0, k.1, k.2)),
            None => missing.push(k),
        }
    }
    // Only the exact-only gamma morphism checks may be absent.
    let unexpected: Vec<_> = missing.iter().filter(|k| !k.1.starts_with("gamma(ab)") && !k.1.starts_with("gamma is")).collect();
    let six = verify(6, "symmetrizer", "modular");
    let pass = disagree.is_empty() && unexpected.is_empty() && six.all_equal() && six.elapsed <= minutes(5);
    results.push((
        "9 modular agreement at 3 points, n=6 symmetrizer < 5 min",
        Outcome {
            pass,
            detail: format!(
                "{} exact verdicts, {} rechecked in {}, {} exact-only (gamma on coefficients), n=6: {} checks {}{}{}",
                equal.len(),
                equal.len() - missing.len(),
                secs(modular_time),
                missing.len(),
                six.checks.len(),
                secs(six.elapsed),
                if disagree.is_empty() { String::new() } else { format!(" {disagree:?}") },
                if unexpected.is_empty() { String::new() } else { format!(" missing {unexpected:?}") },
            ),
        },
    ));

    let mut same = true;
    for backend in ["exact", "modular"] {
        let args = ["verify", "--n", "4", "--suite", "all", "--seed", "42", "--no-timing", "--backend", backend];
        let (_, a, _) = bwm(&args);
        let (_, b, _) = bwm(&args);
        same &= !a.is_empty() && a == b;
    }
    results.push((
        "10 determinism, same seed gives identical reports",
        Outcome {
            pass: same,
            detail: "verify --n 4 --suite all, exact and modular".into(),
        },
    ));

    let mut ok = true;
    for (name, o) in &results {
        ok &= o.pass;
        println!("{} {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
