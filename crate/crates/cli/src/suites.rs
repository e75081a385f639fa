//! Identity suites. Every check is an equation decided by the engine.

use std::time::Instant;

use bwm_core::algebra::Algebra;
use bwm_core::hecke::{self, HeckeElement};
use bwm_core::idempotents::{self, Family, LemmaCase, Side, VariantId};
use bwm_core::rules::{self, Strategy};
use bwm_core::{linalg, morphisms};
use bwm_core::{Coefficients, Element, Error, GenTok, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::backend::{Backend, Elem};
use crate::report::{Check, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Relations,
    Basis,
    Symmetrizer,
    Antisymmetrizer,
    Lemma,
    Hecke,
    Morphisms,
    Uniqueness,
    All,
}

impl Suite {
    pub const EACH: [Suite; 8] = [
        Suite::Relations,
        Suite::Basis,
        Suite::Symmetrizer,
        Suite::Antisymmetrizer,
        Suite::Lemma,
        Suite::Hecke,
        Suite::Morphisms,
        Suite::Uniqueness,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::Basis => "basis",
            Suite::Symmetrizer => "symmetrizer",
            Suite::Antisymmetrizer => "antisymmetrizer",
            Suite::Lemma => "lemma",
            Suite::Hecke => "hecke",
            Suite::Morphisms => "morphisms",
            Suite::Uniqueness => "uniqueness",
            Suite::All => "all",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::EACH.into_iter().chain([Suite::All]).find(|x| x.name() == s)
    }

    fn members(self) -> Vec<Suite> {
        match self {
            Suite::All => Self::EACH.to_vec(),
            s => vec![s],
        }
    }
}

/// Collects checks for one rank and backend.
pub struct Recorder {
    pub checks: Vec<Check>,
    n: usize,
    backend: String,
    timing: bool,
}

impl Recorder {
    pub fn new(n: usize, backend: &str, timing: bool) -> Self {
        Recorder {
            checks: Vec::new(),
            n,
            backend: backend.into(),
            timing,
        }
    }

    pub fn check(&mut self, identity: impl Into<String>, variant: &str, body: impl FnOnce() -> Result<Verdict, Error>) {
        let start = Instant::now();
        let verdict = match body() {
            Ok(v) => v,
            Err(Error::BudgetExhausted { .. }) => Verdict::BudgetExhausted,
            Err(_) => Verdict::Error,
        };
        let ms = start.elapsed().as_secs_f64() * 1e3;
        self.checks.push(Check {
            identity: identity.into(),
            n: self.n,
            variant: variant.into(),
            verdict,
            wall_ms: self.timing.then_some((ms * 1e3).round() / 1e3),
            backend: self.backend.clone(),
        });
    }
}

fn eq<F: Coefficients>(alg: &Algebra<F>, a: &Elem<F>, b: &Elem<F>) -> Result<Verdict, Error> {
    Ok(if alg.equals(a, b)?.is_equal() {
        Verdict::Equal
    } else {
        Verdict::NotReducedToZero
    })
}

fn zero<F: Coefficients>(alg: &Algebra<F>, a: &Elem<F>) -> Result<Verdict, Error> {
    eq(alg, a, &alg.zero())
}

fn holds(b: bool) -> Verdict {
    if b {
        Verdict::Equal
    } else {
        Verdict::Mismatch
    }
}

/// Runs `body` on each input and keeps the worst verdict.
fn all_of<T>(items: &[T], mut body: impl FnMut(&T) -> Result<Verdict, Error>) -> Result<Verdict, Error> {
    let mut acc = Verdict::Equal;
    for x in items {
        acc = acc.and(body(x)?);
    }
    Ok(acc)
}

/// A random element given by words and monomials `c q^a r^b`, so the same
/// draw can be built over any field.
#[derive(Clone, Debug)]
pub struct Sample {
    pub rank: usize,
    pub terms: Vec<(Word, i64, i32, i32)>,
}

impl Sample {
    pub fn build<F: Coefficients>(&self, f: &F) -> Elem<F> {
        let mut x = Element::zero(self.rank);
        for (w, c, a, b) in &self.terms {
            let coeff = f.mul(&f.from_int(*c), &f.mul(&f.q_pow(*a), &f.pow(&f.r(), *b)));
            x.add_term(f, w.clone(), f.normalize(coeff));
        }
        x
    }
}

pub fn random_word(rng: &mut ChaCha8Rng, n: usize, max_len: usize, with_e: bool) -> Word {
    let len = rng.gen_range(0..=max_len);
    let mut toks = Vec::with_capacity(len);
    if n < 2 {
        return Word::empty();
    }
    for _ in 0..len {
        let i = rng.gen_range(1..n);
        toks.push(if with_e && rng.gen_bool(0.5) { GenTok::e(i) } else { GenTok::g(i) });
    }
    Word::from_tokens(toks)
}

pub fn random_sample(rng: &mut ChaCha8Rng, n: usize, max_terms: usize, max_len: usize, with_r: bool) -> Sample {
    let k = rng.gen_range(1..=max_terms);
    let terms = (0..k)
        .map(|_| {
            let w = random_word(rng, n, max_len, true);
            let mut c = rng.gen_range(-3..=3);
            if c == 0 {
                c = 1;
            }
            let b = if with_r { rng.gen_range(-1..=1) } else { 0 };
            (w, c, rng.gen_range(-2..=2), b)
        })
        .collect();
    Sample { rank: n, terms }
}

fn suite_rng(seed: u64, suite: Suite, n: usize) -> ChaCha8Rng {
    let tag = Suite::EACH.iter().position(|s| *s == suite).unwrap_or(0) as u64;
    ChaCha8Rng::seed_from_u64(seed ^ (tag << 32) ^ ((n as u64) << 48))
}

/// Runs `suite` at rank `alg.rank()`.
pub fn run<B: Backend>(alg: &Algebra<B>, suite: Suite, seed: u64, timing: bool) -> Vec<Check> {
    let n = alg.rank();
    let mut rec = Recorder::new(n, alg.field().label(), timing);
    for s in suite.members() {
        let mut rng = suite_rng(seed, s, n);
        match s {
            Suite::Relations => relations(alg, &mut rec, &mut rng),
            Suite::Basis => basis(alg, &mut rec),
            Suite::Symmetrizer => symmetrizer(alg, &mut rec, &mut rng),
            Suite::Antisymmetrizer => antisymmetrizer(alg, &mut rec),
            Suite::Lemma => lemma(alg, &mut rec),
            Suite::Hecke => hecke_suite(alg, &mut rec, &mut rng),
            Suite::Morphisms => morphisms_suite(alg, &mut rec, &mut rng),
            Suite::Uniqueness => uniqueness(alg, &mut rec),
            Suite::All => unreachable!(),
        }
    }
    rec.checks
}

fn relations<B: Backend>(alg: &Algebra<B>, rec: &mut Recorder, rng: &mut ChaCha8Rng) {
    let n = alg.rank();
    let f = alg.field();
    for rel in rules::relations(n) {
        rec.check(format!("relation {rel}"), "-", || zero(alg, &rules::relation_element(f, n, rel)));
    }
    rec.check("rule certificates replay", "-", || {
        Ok(holds(alg.rules().replay_all(f).is_empty()))
    });
    for i in 1..n {
        rec.check(format!("g{i} * inverse = 1"), "-", || {
            eq(alg, &alg.mul(&alg.g(i)?, &alg.g_inv(i)?)?, &alg.one())
        });
    }
    let pairs: Vec<(Sample, Sample)> = (0..100)
        .map(|_| (random_sample(rng, n, 2, 4, true), random_sample(rng, n, 2, 4, true)))
        .collect();
    rec.check("leftmost and rightmost rewriting agree (100 products)", "-", || {
        all_of(&pairs, |(a, b)| {
            let (a, b) = (a.build(f), b.build(f));
            let mut prod = Element::zero(n);
            for (u, c) in a.terms() {
                for (v, d) in b.terms() {
                    prod.add_term(f, u.concat(v), f.mul(c, d));
                }
            }
            let budget = alg.budget().saturating_mul(prod.len().max(1) as u64);
            let l = alg.reduce_with(&prod, Strategy::Leftmost, budget)?;
            let r = alg.reduce_with(&prod, Strategy::Rightmost, budget)?;
            Ok(holds(l == r && alg.mul(&a, &b)? == l))
        })
    });
    let singles: Vec<Sample> = (0..50).map(|_| random_sample(rng, n, 4, 6, true)).collect();
    rec.check("reduction is idempotent (50 elements)", "-", || {
        all_of(&singles, |x| {
            let y = alg.reduce(&x.build(f))?;
            Ok(holds(alg.reduce(&y)? == y))
        })
    });
    let triples: Vec<[Sample; 3]> = (0..50)
        .map(|_| std::array::from_fn(|_| random_sample(rng, n, 1, 4, true)))
        .collect();
    rec.check("associativity (50 triples)", "-", || {
        all_of(&triples, |[a, b, c]| {
            let (a, b, c) = (a.build(f), b.build(f), c.build(f));
            eq(alg, &alg.mul(&alg.mul(&a, &b)?, &c)?, &alg.mul(&a, &alg.mul(&b, &c)?)?)
        })
    });
    if n >= 3 {
        let small = Algebra::with_rules(f.clone(), std::sync::Arc::new(rules::RuleSet::complete(f, n - 1)));
        let pairs: Vec<(Sample, Sample)> = (0..20)
            .map(|_| (random_sample(rng, n - 1, 2, 4, true), random_sample(rng, n - 1, 2, 4, true)))
            .collect();
        rec.check("embedding respects products (20 pairs)", "-", || {
            all_of(&pairs, |(a, b)| {
                let (a, b) = (a.build(f), b.build(f));
                let low = small.mul(&a, &b)?.embed(n)?;
                eq(alg, &low, &alg.mul(&a.embed(n)?, &b.embed(n)?)?)
            })
        });
    }
}

/// `(2n - 1)!!`
pub fn expected_dimension(n: usize) -> usize {
    (1..n).map(|k| 2 * k + 1).product()
}

fn basis<B: Backend>(alg: &Algebra<B>, rec: &mut Recorder) {
    let n = alg.rank();
    let want = expected_dimension(n);
    rec.check(format!("irreducible word count = {want}"), "-", || {
        Ok(holds(alg.enumerate_irreducible()?.len() == want))
    });
}

struct Eigen {
    /// Name used in identity strings.
    name: &'static str,
    side: Side,
}

const PLUS: Eigen = Eigen { name: "S", side: Side::Plus };
const MINUS: Eigen = Eigen { name: "A", side: Side::Minus };

fn build<B: Backend>(alg: &Algebra<B>, which: &Eigen, v: VariantId) -> Result<Elem<B>, Error> {
    let n = alg.rank();
    match which.side {
        Side::Plus => idempotents::symmetrizer(alg, n, v),
        Side::Minus => idempotents::antisymmetrizer(alg, n, v),
    }
}

/// Variant agreement, idempotence and the eigen-relations.
fn idempotent_checks<B: Backend>(alg: &Algebra<B>, rec: &mut Recorder, which: &Eigen) -> Option<Elem<B>> {
    let n = alg.rank();
    let f = alg.field();
    let x = which.name;
    let mut base = None;
    rec.check(format!("{x} is built"), VariantId::RightB.name(), || {
        base = Some(build(alg, which, VariantId::RightB)?);
        Ok(Verdict::Equal)
    });
    let base = base?;
    for v in &VariantId::ALL[1..] {
        rec.check(format!("{x} variant = right-b"), v.name(), || eq(alg, &build(alg, which, *v)?, &base));
    }
    rec.check(format!("{x}^2 = {x}"), "-", || eq(alg, &alg.mul(&base, &base)?, &base));
    let (label, lambda) = match which.side {
        Side::Plus => ("q", f.q()),
        Side::Minus => ("-q^-1", f.neg(&f.q_pow(-1))),
    };
    let scaled = base.scale(f, &lambda);
    for i in 1..n {
        rec.check(format!("{x} g{i} = {label} {x}"), "-", || eq(alg, &alg.mul(&base, &alg.g(i)?)?, &scaled));
        rec.check(format!("g{i} {x} = {label} {x}"), "-", || eq(alg, &alg.mul(&alg.g(i)?, &base)?, &scaled));
        rec.check(format!("{x} e{i} = 0"), "-", || zero(alg, &alg.mul(&base, &alg.e(i)?)?));
        rec.check(format!("e{i} {x} = 0"), "-", || zero(alg, &alg.mul(&alg.e(i)?, &base)?));
    }
    Some(base)
}

fn symmetrizer<B: Backend>(alg: &Algebra<B>, rec: &mut Recorder, rng: &mut ChaCha8Rng) {
    let n = alg.rank();
    let Some(s) = idempotent_checks(alg, rec, &PLUS) else {
        return;
    };
    let words: Vec<Word> = (0..20).map(|_| random_word(rng, n, 6, true)).collect();
    rec.check("S w = w S (20 random words)", "-", || {
        all_of(&words, |w| {
            let x = alg.word(w.clone())?;
            eq(alg, &alg.mul(&s, &x)?, &alg.mul(&x, &s)?)
        })
    });
    if n == 2 {
        rec.check("S = two-strand closed form, term by term", "-", || {
            Ok(holds(s == idempotents::symmetrizer_two(alg.field(), 2)?))
        });
    }
}

fn family_indices(fam: Family, n: usize) -> Vec<(usize, usize)> {
    if fam.two_index() {
        (2..=n.min(5)).flat_map(|k| (1..k).map(move |i| (k, i))).collect()
    } else {
        (0..n.min(5)).map(|k| (k, 0)).collect()
    }
}

fn antisymmetrizer<B: Backend>(alg: &Algebra<B>, rec: &mut Recorder) {
    let n = alg.rank();
    let f = alg.field();
    let Some(a) = idempotent_checks(alg, rec, &MINUS) else {
        return;
    };
    rec.check("gamma(S) = A", "-", || {
        let img = B::gamma_of(alg, &|view| idempotents::symmetrizer(view, n, VariantId::RightB))?;
        eq(alg, &img, &a)
    });
    if n >= 2 {
        rec.check("S A = 0", "-", || {
            zero(alg, &alg.mul(&idempotents::symmetrizer(alg, n, VariantId::RightB)?, &a)?)
        });
    }
    if n == 2 {
        rec.check("A = two-strand closed form, term by term", "-", || {
            Ok(holds(a == idempotents::antisymmetrizer_two(f, 2)?))
        });
    }
    for fam in Family::ALL {
        let idx = family_indices(fam, n);
        rec.check(format!("minus {fam} = gamma(plus {fam}), k <= 4"), "-", || {
            all_of(&idx, |&(k, i)| {
                let minus = idempotents::family(f, n, fam, Side::Minus, k, i)?;
                let img = B::gamma_of(alg, &|view| idempotents::family(view.field(), n, fam, Side::Plus, k, i))?;
                eq(alg, &img, &minus)
            })
        });
    }
}

fn lemma<B: Backend>(alg: &Algebra<B>, rec: &mut Recorder) {
    let n = alg.rank();
    if n < 3 {
        return;
    }
    let mut prev = None;
    rec.check("S(n-1) is built", "-", || {
        prev = Some(idempotents::symmetrizer(alg, n - 1, VariantId::RightB)?);
        Ok(Verdict::Equal)
    });
    let Some(prev) = prev else { return };
    for k in 1..n {
        for l in 1..n {
            let case = LemmaCase::of(k, l);
            rec.check(format!("S(n-1) d(n,{k}) g{l}"), case.name(), || {
                let (lhs, rhs, _) = idempotents::lemma_sides_with(alg, &prev, n, k, l)?;
                eq(alg, &lhs, &rhs)
            });
        }
    }
}

fn hecke_eigen<F: Coefficients>(f: &F, x: &HeckeElement<F::Elem>, lambda: &F::Elem) -> bool {
    let n = x.degree();
    (1..n).all(|i| {
        let mut want = HeckeElement::zero(n);
        for (w, c) in x.terms() {
            want.add_term(f, w.clone(), f.mul(c, lambda));
        }
        x.times_simple(f, i) == want
    })
}

fn hecke_suite<B: Backend>(alg: &Algebra<B>, rec: &mut Recorder, rng: &mut ChaCha8Rng) {
    let n = alg.rank();
    let f = alg.field();
    let hv = |h: Result<bool, Error>| h.map(holds);
    let perms: usize = (1..=n).product();
    rec.check(format!("project(S) = closed form with {perms} terms"), "-", || {
        let s = idempotents::symmetrizer(alg, n, VariantId::RightB)?;
        let h = hecke::project(f, &s)?;
        hv(Ok(h.len() == perms && h == hecke::symmetrizer_closed_form(f, n)?))
    });
    rec.check("project(A) = closed form", "-", || {
        let a = idempotents::antisymmetrizer(alg, n, VariantId::RightB)?;
        hv(Ok(hecke::project(f, &a)? == hecke::antisymmetrizer_closed_form(f, n)?))
    });
    rec.check("identity coefficient of project(S)", "-", || {
        let s = idempotents::symmetrizer(alg, n, VariantId::RightB)?;
        let h = hecke::project(f, &s)?;
        let top = (n * (n - 1) / 2) as i32;
        let want = f.div(&f.q_pow(-top), &f.qfact(n as u32)).ok_or(Error::ParameterSingular)?;
        let got = h.coeff(&hecke::Perm::identity(n)).cloned().unwrap_or_else(|| f.zero());
        hv(Ok(f.is_zero(&f.sub(&got, &want))))
    });
    rec.check("closed form S: idempotent, T_i eigenvalue q", "-", || {
        let h = hecke::symmetrizer_closed_form(f, n)?;
        hv(Ok(h.mul(f, &h) == h && hecke_eigen(f, &h, &f.q())))
    });
    rec.check("closed form A: idempotent, T_i eigenvalue -q^-1", "-", || {
        let h = hecke::antisymmetrizer_closed_form(f, n)?;
        hv(Ok(h.mul(f, &h) == h && hecke_eigen(f, &h, &f.neg(&f.q_pow(-1)))))
    });
    let pairs: Vec<(Sample, Sample)> = (0..50)
        .map(|_| (random_sample(rng, n, 3, 4, false), random_sample(rng, n, 3, 4, false)))
        .collect();
    rec.check("project is multiplicative (50 pairs)", "-", || {
        all_of(&pairs, |(a, b)| {
            let (a, b) = (a.build(f), b.build(f));
            let lhs = hecke::project(f, &alg.mul(&a, &b)?)?;
            let rhs = hecke::project(f, &a)?.mul(f, &hecke::project(f, &b)?);
            Ok(holds(lhs == rhs))
        })
    });
}

fn morphisms_suite<B: Backend>(alg: &Algebra<B>, rec: &mut Recorder, rng: &mut ChaCha8Rng) {
    let n = alg.rank();
    let f = alg.field();
    let pairs: Vec<(Sample, Sample)> = (0..50)
        .map(|_| (random_sample(rng, n, 3, 4, true), random_sample(rng, n, 3, 4, true)))
        .collect();
    rec.check("alpha(ab) = alpha(a) alpha(b) (50 pairs)", "-", || {
        all_of(&pairs, |(a, b)| {
            let (a, b) = (a.build(f), b.build(f));
            let lhs = morphisms::alpha(alg, &alg.mul(&a, &b)?)?;
            eq(alg, &lhs, &alg.mul(&morphisms::alpha(alg, &a)?, &morphisms::alpha(alg, &b)?)?)
        })
    });
    rec.check("beta(ab) = beta(b) beta(a) (50 pairs)", "-", || {
        all_of(&pairs, |(a, b)| {
            let (a, b) = (a.build(f), b.build(f));
            let lhs = morphisms::beta(alg, &alg.mul(&a, &b)?)?;
            eq(alg, &lhs, &alg.mul(&morphisms::beta(alg, &b)?, &morphisms::beta(alg, &a)?)?)
        })
    });
    rec.check("alpha and beta are involutions (50 elements)", "-", || {
        all_of(&pairs, |(a, _)| {
            let a = a.build(f);
            let x = morphisms::alpha(alg, &morphisms::alpha(alg, &a)?)?;
            let y = morphisms::beta(alg, &morphisms::beta(alg, &a)?)?;
            Ok(eq(alg, &x, &a)?.and(eq(alg, &y, &a)?))
        })
    });
    if f.subst_gamma(&f.q()).is_some() {
        rec.check("gamma(ab) = gamma(a) gamma(b) (50 pairs)", "-", || {
            all_of(&pairs, |(a, b)| {
                let (a, b) = (a.build(f), b.build(f));
                let lhs = morphisms::gamma(alg, &alg.mul(&a, &b)?)?;
                eq(alg, &lhs, &alg.mul(&morphisms::gamma(alg, &a)?, &morphisms::gamma(alg, &b)?)?)
            })
        });
        rec.check("gamma is an involution (50 elements)", "-", || {
            all_of(&pairs, |(a, _)| {
                let a = a.build(f);
                eq(alg, &morphisms::gamma(alg, &morphisms::gamma(alg, &a)?)?, &a)
            })
        });
    }
    let ks: Vec<usize> = (1..n.min(5)).collect();
    rec.check("flip of b(k,1) at rank k+1 = b(1,k), k <= 4", "-", || {
        all_of(&ks, |&k| {
            let b = idempotents::family(f, k + 1, Family::RightDown, Side::Plus, k, 0)?;
            let flipped = morphisms::flip_words(f, &b).embed(n)?;
            let want = idempotents::family(f, n, Family::RightUp, Side::Plus, k, 0)?;
            eq(alg, &flipped, &want)
        })
    });
    for (from, to) in [(Family::RightDown, Family::LeftUp), (Family::RightUp, Family::LeftDown)] {
        rec.check(format!("beta({from}) = {to}, k <= 4"), "-", || {
            all_of(&ks, |&k| {
                let b = idempotents::family(f, n, from, Side::Plus, k, 0)?;
                let want = idempotents::family(f, n, to, Side::Plus, k, 0)?;
                eq(alg, &morphisms::beta(alg, &b)?, &want)
            })
        });
    }
}

fn uniqueness<B: Backend>(alg: &Algebra<B>, rec: &mut Recorder) {
    let n = alg.rank();
    if n > 3 {
        return;
    }
    let f = alg.field();
    rec.check("{v : v g_i = q v} has dimension 1 and contains S", "-", || {
        let basis = alg.enumerate_irreducible()?;
        let mats = (1..n)
            .map(|i| alg.right_action_matrix(GenTok::g(i), &basis))
            .collect::<Result<Vec<_>, _>>()?;
        let dim = if mats.is_empty() {
            basis.len()
        } else {
            linalg::common_left_eigenspace_dim(f, &mats, &f.q())
        };
        let s = idempotents::symmetrizer(alg, n, VariantId::RightB)?;
        let coords: Vec<B::Elem> = basis.iter().map(|w| s.coeff(w).cloned().unwrap_or_else(|| f.zero())).collect();
        let inside = mats.iter().all(|m| {
            (0..basis.len()).all(|c| {
                let mut acc = f.neg(&f.mul(&coords[c], &f.q()));
                for (j, row) in m.iter().enumerate() {
                    acc = f.add(&acc, &f.mul(&coords[j], &row[c]));
                }
                f.is_zero(&f.normalize(acc))
            })
        });
        Ok(holds(dim == 1 && inside && coords.iter().any(|c| !f.is_zero(c))))
    });
}
