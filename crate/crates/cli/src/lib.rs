//! Command-line front end: expressions, element files and verification
//! reports over the exact or the modular backend.

pub mod backend;
pub mod error;
pub mod expr;
pub mod format;
pub mod report;
pub mod suites;

use std::time::Instant;

use bwm_core::idempotents::{self, VariantId};
use bwm_core::modular::{is_prime, DEFAULT_PRIME, MIN_PRIME};
use bwm_core::{hecke, Algebra, Exact, Modular};
use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::backend::{random_points, Backend};
use crate::error::{CliError, Result};
use crate::report::{Check, Report};
use crate::suites::Suite;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BackendKind {
    Exact,
    Modular,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "bwm", version, about = "Arithmetic and identity checks in BMW algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value = "exact")]
    pub backend: BackendKind,
    /// Modulus for the modular backend.
    #[arg(long, global = true, default_value_t = DEFAULT_PRIME)]
    pub prime: u64,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Rule applications allowed per input term.
    #[arg(long, global = true, default_value_t = bwm_core::algebra::DEFAULT_BUDGET)]
    pub budget: u64,
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: OutputFormat,
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,
    /// Leave wall times out of reports so that runs compare byte for byte.
    #[arg(long, global = true)]
    pub no_timing: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Irreducible words of rank n.
    Basis {
        #[arg(long)]
        n: usize,
    },
    /// Normal form of an expression.
    Reduce {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        expr: String,
    },
    /// The symmetrizer.
    Sym {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "right-b")]
        variant: String,
    },
    /// The antisymmetrizer.
    Antisym {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "right-b")]
        variant: String,
    },
    /// The absorption identities for S(n-1) d(n,k) g_l.
    Lemma {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        l: Option<usize>,
    },
    /// Hecke image of the symmetrizer, compared with the closed form.
    Hecke {
        #[arg(long)]
        n: usize,
    },
    /// Runs an identity suite and prints a report.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Timings of the main stages.
    Bench {
        #[arg(long)]
        n: usize,
    },
}

/// What a command prints, and its exit status.
pub struct Output {
    pub text: String,
    pub code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn check_rank(n: usize) -> Result<()> {
    if !(1..=8).contains(&n) {
        return Err(usage("--n must be between 1 and 8"));
    }
    Ok(())
}

fn variant(s: &str) -> Result<VariantId> {
    VariantId::parse(s).ok_or_else(|| {
        let names: Vec<_> = VariantId::ALL.iter().map(|v| v.name()).collect();
        usage(format!("unknown variant {s}; expected one of {}", names.join(", ")))
    })
}

impl Cli {
    fn points(&self, n: usize, count: usize) -> Result<Vec<bwm_core::PrimePoint>> {
        if self.prime < MIN_PRIME || !is_prime(self.prime) {
            return Err(usage(format!("--prime must be a prime of at least {MIN_PRIME}")));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        Ok(random_points(&mut rng, self.prime, n, count))
    }

    fn render_element<B: Backend>(&self, f: &B, x: &backend::Elem<B>) -> String {
        match self.format {
            OutputFormat::Json => format::element_json(f, x).to_string(),
            OutputFormat::Text => format::element_text(f, x),
        }
    }

    fn render_report(&self, r: &Report) -> Output {
        let text = match self.format {
            OutputFormat::Json => r.to_json(),
            OutputFormat::Text => r.to_text(),
        };
        Output { text, code: r.exit_code() }
    }

    fn algebra<B: Backend>(&self, field: B, n: usize) -> Algebra<B> {
        Algebra::new(field, n).with_budget(self.budget)
    }
}

macro_rules! with_backend {
    ($cli:expr, $n:expr, |$alg:ident| $body:expr) => {
        match $cli.backend {
            BackendKind::Exact => {
                let $alg = $cli.algebra(Exact::new(), $n);
                $body
            }
            BackendKind::Modular => {
                let pt = $cli.points($n, 1)?[0];
                let $alg = $cli.algebra(Modular::new(pt), $n);
                $body
            }
        }
    };
}

fn basis_cmd<B: Backend>(cli: &Cli, alg: &Algebra<B>) -> Result<Output> {
    let words = alg.enumerate_irreducible()?;
    let text = match cli.format {
        OutputFormat::Json => {
            let ws: Vec<Vec<String>> = words.iter().map(|w| w.to_strings()).collect();
            json!({ "rank": alg.rank(), "count": words.len(), "words": ws }).to_string()
        }
        OutputFormat::Text => {
            let mut s = format!("count: {}\n", words.len());
            for w in &words {
                s.push_str(&w.to_string());
                s.push('\n');
            }
            s
        }
    };
    Ok(Output::ok(text))
}

fn lemma_cmd<B: Backend>(cli: &Cli, alg: &Algebra<B>, k: Option<usize>, l: Option<usize>) -> Result<Output> {
    let n = alg.rank();
    if n < 3 {
        return Err(usage("lemma needs --n of at least 3"));
    }
    let ks: Vec<usize> = k.map_or_else(|| (1..n).collect(), |k| vec![k]);
    let ls: Vec<usize> = l.map_or_else(|| (1..n).collect(), |l| vec![l]);
    if ks.iter().chain(&ls).any(|&x| x < 1 || x >= n) {
        return Err(usage("--k and --l must lie in 1..n-1"));
    }
    let prev = idempotents::symmetrizer(alg, n - 1, VariantId::RightB)?;
    let mut rec = suites::Recorder::new(n, alg.field().label(), !cli.no_timing);
    for &k in &ks {
        for &l in &ls {
            let case = idempotents::LemmaCase::of(k, l);
            rec.check(format!("S(n-1) d(n,{k}) g{l}"), case.name(), || {
                let (lhs, rhs, _) = idempotents::lemma_sides_with(alg, &prev, n, k, l)?;
                Ok(if alg.equals(&lhs, &rhs)?.is_equal() {
                    report::Verdict::Equal
                } else {
                    report::Verdict::NotReducedToZero
                })
            });
        }
    }
    Ok(cli.render_report(&Report::new("lemma", rec.checks)))
}

fn hecke_cmd<B: Backend>(cli: &Cli, alg: &Algebra<B>) -> Result<Output> {
    let n = alg.rank();
    let f = alg.field();
    let s = idempotents::symmetrizer(alg, n, VariantId::RightB)?;
    let h = hecke::project(f, &s)?;
    let matches = h == hecke::symmetrizer_closed_form(f, n)?;
    let text = match cli.format {
        OutputFormat::Json => json!({
            "projection": format::hecke_json(f, &h),
            "matches_closed_form": matches,
        })
        .to_string(),
        OutputFormat::Text => format!(
            "{}\nmatches closed form: {}\n",
            format::hecke_text(f, &h),
            if matches { "yes" } else { "no" }
        ),
    };
    Ok(Output {
        text,
        code: if matches { 0 } else { 1 },
    })
}

/// Runs a suite; the modular backend repeats it at three points and an
/// identity passes only if it holds at all of them.
pub fn verify(cli: &Cli, n: usize, suite: Suite) -> Result<Report> {
    let timing = !cli.no_timing;
    let checks = match cli.backend {
        BackendKind::Exact => suites::run(&cli.algebra(Exact::new(), n), suite, cli.seed, timing),
        BackendKind::Modular => {
            let mut merged: Option<Vec<Check>> = None;
            for pt in cli.points(n, 3)? {
                let part = suites::run(&cli.algebra(Modular::new(pt), n), suite, cli.seed, timing);
                merged = Some(match merged {
                    None => part,
                    Some(acc) => merge(acc, part),
                });
            }
            merged.unwrap_or_default()
        }
    };
    Ok(Report::new(suite.name(), checks))
}

fn merge(acc: Vec<Check>, part: Vec<Check>) -> Vec<Check> {
    acc.into_iter()
        .zip(part)
        .map(|(mut a, b)| {
            a.verdict = a.verdict.and(b.verdict);
            a.wall_ms = a.wall_ms.zip(b.wall_ms).map(|(x, y)| ((x + y) * 1e3).round() / 1e3);
            a
        })
        .collect()
}

fn bench_cmd(cli: &Cli, n: usize) -> Result<Output> {
    fn stages<B: Backend>(field: B, n: usize, budget: u64) -> Result<Vec<(String, f64, usize)>> {
        let mut out = Vec::new();
        let t = Instant::now();
        let alg = Algebra::new(field, n).with_budget(budget);
        out.push(("completion (rules)".into(), t.elapsed().as_secs_f64() * 1e3, alg.rules().len()));
        let t = Instant::now();
        let basis = alg.enumerate_irreducible()?;
        out.push(("irreducible words".into(), t.elapsed().as_secs_f64() * 1e3, basis.len()));
        for v in VariantId::ALL {
            let t = Instant::now();
            let s = idempotents::symmetrizer(&alg, n, v)?;
            out.push((format!("S by {v} (terms)"), t.elapsed().as_secs_f64() * 1e3, s.len()));
        }
        let t = Instant::now();
        let a = idempotents::antisymmetrizer(&alg, n, VariantId::RightB)?;
        out.push(("A by right-b (terms)".into(), t.elapsed().as_secs_f64() * 1e3, a.len()));
        Ok(out)
    }
    let rows = match cli.backend {
        BackendKind::Exact => stages(Exact::new(), n, cli.budget)?,
        BackendKind::Modular => stages(Modular::new(cli.points(n, 1)?[0]), n, cli.budget)?,
    };
    let text = match cli.format {
        OutputFormat::Json => {
            let v: Vec<_> = rows
                .iter()
                .map(|(s, ms, k)| json!({ "stage": s, "wall_ms": (ms * 1e3).round() / 1e3, "size": k }))
                .collect();
            json!({ "n": n, "stages": v }).to_string()
        }
        OutputFormat::Text => rows
            .iter()
            .map(|(s, ms, k)| format!("{s:<28} {k:>8} {ms:>12.1} ms\n"))
            .collect(),
    };
    Ok(Output::ok(text))
}

/// Executes a parsed command line.
pub fn execute(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Basis { n } => {
            check_rank(*n)?;
            with_backend!(cli, *n, |alg| basis_cmd(cli, &alg))
        }
        Command::Reduce { n, expr } => {
            check_rank(*n)?;
            let e = expr::parse(expr)?;
            with_backend!(cli, *n, |alg| Ok(Output::ok(cli.render_element(alg.field(), &expr::eval(&alg, &e)?))))
        }
        Command::Sym { n, variant: v } | Command::Antisym { n, variant: v } => {
            check_rank(*n)?;
            let v = variant(v)?;
            let sym = matches!(cli.command, Command::Sym { .. });
            with_backend!(cli, *n, |alg| {
                let x = if sym {
                    idempotents::symmetrizer(&alg, *n, v)?
                } else {
                    idempotents::antisymmetrizer(&alg, *n, v)?
                };
                Ok(Output::ok(cli.render_element(alg.field(), &x)))
            })
        }
        Command::Lemma { n, k, l } => {
            check_rank(*n)?;
            with_backend!(cli, *n, |alg| lemma_cmd(cli, &alg, *k, *l))
        }
        Command::Hecke { n } => {
            check_rank(*n)?;
            with_backend!(cli, *n, |alg| hecke_cmd(cli, &alg))
        }
        Command::Verify { n, suite } => {
            check_rank(*n)?;
            let s = Suite::parse(suite).ok_or_else(|| usage(format!("unknown suite {suite}")))?;
            Ok(cli.render_report(&verify(cli, *n, s)?))
        }
        Command::Bench { n } => {
            check_rank(*n)?;
            bench_cmd(cli, *n)
        }
    }
}

/// Parses `args` (program name first), runs, and returns the exit status
/// together with what goes to standard output and standard error.
pub fn run<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 3,
            };
            return if code == 0 {
                (0, e.to_string(), String::new())
            } else {
                (3, String::new(), e.to_string())
            };
        }
    };
    match execute(&cli) {
        Ok(out) => {
            let mut text = out.text;
            if !text.ends_with('\n') {
                text.push('\n');
            }
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &text) {
                    return (3, String::new(), CliError::from(e).to_string());
                }
                return (out.code, String::new(), String::new());
            }
            (out.code, text, String::new())
        }
        Err(e) => (e.exit_code(), String::new(), format!("error: {e}\n")),
    }
}
