//! Verification reports.

use std::fmt::Write as _;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Verdict {
    Equal,
    NotReducedToZero,
    Mismatch,
    Error,
    BudgetExhausted,
}

impl Verdict {
    pub fn passed(self) -> bool {
        self == Verdict::Equal
    }

    /// Combines results of the same identity at several points.
    pub fn and(self, other: Verdict) -> Verdict {
        self.max(other)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub identity: String,
    pub n: usize,
    pub variant: String,
    pub verdict: Verdict,
    /// Milliseconds; `None` when timing is suppressed.
    pub wall_ms: Option<f64>,
    pub backend: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Summary {
    pub total: usize,
    pub equal: usize,
    pub failed: usize,
    pub inconclusive: usize,
    pub status: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl Report {
    /// Sorts checks canonically and fills in the summary.
    pub fn new(suite: &str, mut checks: Vec<Check>) -> Self {
        checks.sort_by(|a, b| (a.n, &a.identity, &a.variant).cmp(&(b.n, &b.identity, &b.variant)));
        let mut s = Summary {
            total: checks.len(),
            ..Summary::default()
        };
        for c in &checks {
            match c.verdict {
                Verdict::Equal => s.equal += 1,
                Verdict::BudgetExhausted => s.inconclusive += 1,
                _ => s.failed += 1,
            }
        }
        s.status = if s.failed > 0 {
            "fail"
        } else if s.inconclusive > 0 {
            "inconclusive"
        } else {
            "pass"
        }
        .into();
        Report {
            suite: suite.into(),
            checks,
            summary: s,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.summary.status.as_str() {
            "pass" => 0,
            "inconclusive" => 2,
            _ => 1,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let width = self.checks.iter().map(|c| c.identity.len()).max().unwrap_or(8).max(8);
        let _ = writeln!(out, "suite: {}", self.suite);
        for c in &self.checks {
            let time = c.wall_ms.map_or_else(String::new, |t| format!("{t:>10.1} ms"));
            let _ = writeln!(
                out,
                "{:<w$}  n={:<2} {:<14} {:<17} {:<16}{}",
                c.identity,
                c.n,
                c.variant,
                format!("{:?}", c.verdict),
                c.backend,
                time,
                w = width
            );
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "{}: {} checks, {} equal, {} failed, {} inconclusive",
            s.status, s.total, s.equal, s.failed, s.inconclusive
        );
        out
    }
}
