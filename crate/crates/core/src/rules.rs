//! Oriented rewrite rules for the rank-`n` algebra.
//!
//! The rule set is obtained by completing the defining relations under the
//! degree-lexicographic word order. Every rule produced along the way is
//! logged together with the data needed to recompute it (which relation,
//! which overlap of two earlier rules, or which retired rule it replaces) and
//! the scalar by which the recomputed polynomial must match it. Replaying a
//! log entry only uses rules that were created strictly before it, so the
//! log is a well-founded derivation of every rule from the relations.

use alloc::collections::{BTreeMap, BinaryHeap};
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::fmt;

use hashbrown::HashMap;

use crate::element::{add_to, Element};
use crate::field::Coefficients;
use crate::normal::{Rewriter, RightMemo, RuleLookup};
use crate::word::{GenTok, Kind, Word};

pub(crate) type Poly<E> = BTreeMap<Word, E>;

/// A defining relation, identified by its shape and smallest index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Relation {
    /// `g_i^2 = 1 + qhat g_i - r^{-1} qhat e_i`
    Quadratic(usize),
    /// `g_i e_i = r^{-1} e_i`
    AbsorbLeft(usize),
    /// `e_i g_i = r^{-1} e_i`
    AbsorbRight(usize),
    /// `g_i g_j = g_j g_i` for `i > j + 1`
    Commute(usize, usize),
    /// `g_{i+1} g_i g_{i+1} = g_i g_{i+1} g_i`
    Braid(usize),
    /// `g_i g_{i+1} e_i = e_{i+1} e_i`
    Tangle(usize),
    /// `g_{i+1} g_i e_{i+1} = e_i e_{i+1}`
    TangleMirror(usize),
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Relation::Quadratic(i) => write!(f, "quadratic[{i}]"),
            Relation::AbsorbLeft(i) => write!(f, "absorb-left[{i}]"),
            Relation::AbsorbRight(i) => write!(f, "absorb-right[{i}]"),
            Relation::Commute(i, j) => write!(f, "commute[{i},{j}]"),
            Relation::Braid(i) => write!(f, "braid[{i}]"),
            Relation::Tangle(i) => write!(f, "tangle[{i}]"),
            Relation::TangleMirror(i) => write!(f, "tangle-mirror[{i}]"),
        }
    }
}

/// All defining relations of rank `n`, in a fixed order.
pub fn relations(n: usize) -> Vec<Relation> {
    let mut out = Vec::new();
    for i in 1..n {
        out.push(Relation::Quadratic(i));
        out.push(Relation::AbsorbLeft(i));
        out.push(Relation::AbsorbRight(i));
    }
    for i in 1..n {
        for j in 1..i.saturating_sub(1) {
            out.push(Relation::Commute(i, j));
        }
    }
    for i in 1..n.saturating_sub(1) {
        out.push(Relation::Braid(i));
        out.push(Relation::Tangle(i));
        out.push(Relation::TangleMirror(i));
    }
    out
}

fn w(toks: &[GenTok]) -> Word {
    Word::from_tokens(toks.to_vec())
}

/// The two sides of a relation as `(lhs word, rhs terms)`; lhs is the
/// degree-lexicographic leading word.
pub fn relation_sides<F: Coefficients>(f: &F, rel: Relation) -> (Word, Vec<(Word, F::Elem)>) {
    use GenTok as T;
    let qhat = f.qhat();
    let rinv = f.r_inv();
    match rel {
        Relation::Quadratic(i) => (
            w(&[T::g(i), T::g(i)]),
            alloc::vec![
                (Word::empty(), f.one()),
                (w(&[T::g(i)]), qhat.clone()),
                (w(&[T::e(i)]), f.neg(&f.mul(&rinv, &qhat))),
            ],
        ),
        Relation::AbsorbLeft(i) => (w(&[T::g(i), T::e(i)]), alloc::vec![(w(&[T::e(i)]), rinv)]),
        Relation::AbsorbRight(i) => (w(&[T::e(i), T::g(i)]), alloc::vec![(w(&[T::e(i)]), rinv)]),
        Relation::Commute(i, j) => (w(&[T::g(i), T::g(j)]), alloc::vec![(w(&[T::g(j), T::g(i)]), f.one())]),
        Relation::Braid(i) => (
            w(&[T::g(i + 1), T::g(i), T::g(i + 1)]),
            alloc::vec![(w(&[T::g(i), T::g(i + 1), T::g(i)]), f.one())],
        ),
        Relation::Tangle(i) => (
            w(&[T::g(i), T::g(i + 1), T::e(i)]),
            alloc::vec![(w(&[T::e(i + 1), T::e(i)]), f.one())],
        ),
        Relation::TangleMirror(i) => (
            w(&[T::g(i + 1), T::g(i), T::e(i + 1)]),
            alloc::vec![(w(&[T::e(i), T::e(i + 1)]), f.one())],
        ),
    }
}

/// A relation as the element `lhs - rhs` of rank `n`.
pub fn relation_element<F: Coefficients>(f: &F, n: usize, rel: Relation) -> Element<F::Elem> {
    let (lhs, rhs) = relation_sides(f, rel);
    let mut e = Element::word(f, n, lhs);
    for (u, c) in rhs {
        e.add_term(f, u, f.neg(&c));
    }
    e
}

/// Where a logged rule came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    Relation(Relation),
    /// The overlap `lhs(left) = X Y`, `lhs(right) = Y Z` with `|Y| = shared`,
    /// resolved both ways on the word `X Y Z`.
    Overlap { left: usize, right: usize, shared: usize },
    /// The polynomial `lhs - rhs` of a rule retired because its lhs became reducible.
    Requeued(usize),
}

/// One entry of the completion log.
#[derive(Clone, Debug)]
pub struct Derivation<E> {
    pub id: usize,
    pub lhs: Word,
    /// Right side as first produced, before inter-reduction.
    pub raw_rhs: Vec<(Word, E)>,
    pub source: Source,
    /// The source polynomial reduces to `scale * (lhs - raw_rhs)`.
    pub scale: E,
    /// The rule whose insertion made this one redundant.
    pub retired_by: Option<usize>,
}

impl<E> Derivation<E> {
    /// Whether this rule could be used while deriving rule `t`.
    fn active_at(&self, t: usize) -> bool {
        self.id < t && self.retired_by.map_or(true, |r| r >= t)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Soundness {
    /// Literally a defining relation.
    Defining(Relation),
    /// Certified by the completion log entry with this id.
    Derived(usize),
}

/// The familiar rule shapes get short names `R1`..`R10`; the rest are
/// numbered by their log id.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RuleName {
    Named(u8),
    Completion(usize),
}

impl fmt::Display for RuleName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleName::Named(k) => write!(f, "R{k}"),
            RuleName::Completion(id) => write!(f, "C{id}"),
        }
    }
}

fn shape_name(lhs: &Word) -> Option<u8> {
    let t = lhs.tokens();
    let k = |x: GenTok| x.kind();
    let i = |x: GenTok| x.index();
    let adjacent = |a: usize, b: usize| a + 1 == b || b + 1 == a;
    match t {
        [a, b] if i(*a) == i(*b) => Some(match (k(*a), k(*b)) {
            (Kind::G, Kind::G) => 1,
            (Kind::G, Kind::E) => 2,
            (Kind::E, Kind::G) => 3,
            (Kind::E, Kind::E) => 4,
        }),
        [a, b] if i(*a) > i(*b) + 1 => Some(5),
        [a, b, c] => {
            let (ka, kb, kc) = (k(*a), k(*b), k(*c));
            let (ia, ib, ic) = (i(*a), i(*b), i(*c));
            match (ka, kb, kc) {
                (Kind::G, Kind::G, Kind::G) if ia == ic && ia == ib + 1 => Some(6),
                (Kind::G, Kind::G, Kind::E) if ia == ic && adjacent(ia, ib) => Some(7),
                (Kind::E, Kind::G, Kind::G) if ia == ic && adjacent(ia, ib) => Some(8),
                (Kind::E, Kind::E, Kind::E) if ia == ic && adjacent(ia, ib) => Some(9),
                (Kind::E, Kind::G, Kind::E) if ia == ic && adjacent(ia, ib) => Some(10),
                _ => None,
            }
        }
        _ => None,
    }
}

#[derive(Clone, Debug)]
pub struct Rule<E> {
    pub name: RuleName,
    pub lhs: Word,
    /// Fully reduced right side.
    pub rhs: Vec<(Word, E)>,
    pub soundness: Soundness,
    /// Log id of the derivation.
    pub id: usize,
}

/// Rewriting strategy: which occurrence of a left side is replaced first.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// Leftmost start position, shortest left side first.
    #[default]
    Leftmost,
    /// Rightmost start position, shortest left side first.
    Rightmost,
}

/// Finds a factor of `word` accepted by `lookup`.
pub(crate) fn find_with<R>(
    word: &[GenTok],
    max_len: usize,
    strategy: Strategy,
    lookup: impl Fn(&[GenTok]) -> Option<R>,
) -> Option<(usize, usize, R)> {
    let n = word.len();
    let try_at = |s: usize| {
        for l in 1..=max_len.min(n - s) {
            if let Some(r) = lookup(&word[s..s + l]) {
                return Some((s, l, r));
            }
        }
        None
    };
    match strategy {
        Strategy::Leftmost => (0..n).find_map(try_at),
        Strategy::Rightmost => (0..n).rev().find_map(try_at),
    }
}

/// Reduces a polynomial, largest word first. `lookup` maps a factor to the
/// right side of the rule with that left side. On budget exhaustion the
/// offending word is returned.
pub(crate) fn reduce_poly<'a, F: Coefficients>(
    f: &F,
    mut work: Poly<F::Elem>,
    max_len: usize,
    strategy: Strategy,
    budget: u64,
    lookup: impl Fn(&[GenTok]) -> Option<&'a [(Word, F::Elem)]>,
) -> Result<Poly<F::Elem>, Word>
where
    F::Elem: 'a,
{
    let mut out = Poly::new();
    let mut steps = 0u64;
    while let Some((word, c)) = work.pop_last() {
        let c = f.normalize(c);
        if f.is_zero(&c) {
            continue;
        }
        match find_with(word.tokens(), max_len, strategy, &lookup) {
            None => {
                out.insert(word, c);
            }
            Some((pos, len, rhs)) => {
                steps += 1;
                if steps > budget {
                    return Err(word);
                }
                let t = word.tokens();
                scaled_terms(f, rhs, &t[..pos], &t[pos + len..], &c, &mut work);
            }
        }
    }
    Ok(out)
}

fn scaled_terms<F: Coefficients>(
    f: &F,
    terms: &[(Word, F::Elem)],
    prefix: &[GenTok],
    suffix: &[GenTok],
    sign: &F::Elem,
    into: &mut Poly<F::Elem>,
) {
    for (u, c) in terms {
        let mut v = Vec::with_capacity(prefix.len() + u.len() + suffix.len());
        v.extend_from_slice(prefix);
        v.extend_from_slice(u.tokens());
        v.extend_from_slice(suffix);
        add_to(f, into, Word::from_tokens(v), f.mul(c, sign));
    }
}

/// The completed rule set of one rank.
#[derive(Clone, Debug)]
pub struct RuleSet<E> {
    rank: usize,
    rules: Vec<Rule<E>>,
    index: HashMap<Vec<GenTok>, usize>,
    max_lhs: usize,
    log: Vec<Derivation<E>>,
}

fn contains(hay: &[GenTok], pat: &[GenTok]) -> bool {
    pat.len() <= hay.len() && hay.windows(pat.len()).any(|x| x == pat)
}

/// The polynomial a log entry was formed from, before reduction.
fn source_poly<F: Coefficients>(f: &F, log: &[Derivation<F::Elem>], source: Source) -> Poly<F::Elem> {
    let mut p = Poly::new();
    let one = f.one();
    let minus_one = f.from_int(-1);
    match source {
        Source::Relation(rel) => {
            let (lhs, rhs) = relation_sides(f, rel);
            add_to(f, &mut p, lhs, one);
            scaled_terms(f, &rhs, &[], &[], &minus_one, &mut p);
        }
        Source::Overlap { left, right, shared } => {
            let (a, b) = (&log[left], &log[right]);
            let prefix = &a.lhs.tokens()[..a.lhs.len() - shared];
            let suffix = &b.lhs.tokens()[shared..];
            scaled_terms(f, &a.raw_rhs, &[], suffix, &one, &mut p);
            scaled_terms(f, &b.raw_rhs, prefix, &[], &minus_one, &mut p);
        }
        Source::Requeued(x) => {
            let d = &log[x];
            add_to(f, &mut p, d.lhs.clone(), one);
            scaled_terms(f, &d.raw_rhs, &[], &[], &minus_one, &mut p);
        }
    }
    p
}

/// The rules active during completion.
struct ActiveRules<'a, E> {
    active: &'a HashMap<Vec<GenTok>, usize>,
    log: &'a [Derivation<E>],
}

impl<E> RuleLookup<E> for ActiveRules<'_, E> {
    fn rhs(&self, x: &[GenTok]) -> Option<&[(Word, E)]> {
        self.active.get(x).map(|&id| self.log[id].raw_rhs.as_slice())
    }
}

/// The rules that were active when log entry `time` was created.
struct RulesAt<'a, E> {
    by_lhs: &'a HashMap<&'a [GenTok], Vec<usize>>,
    log: &'a [Derivation<E>],
    time: usize,
}

impl<E> RuleLookup<E> for RulesAt<'_, E> {
    fn rhs(&self, x: &[GenTok]) -> Option<&[(Word, E)]> {
        self.by_lhs
            .get(x)?
            .iter()
            .find(|&&k| self.log[k].active_at(self.time))
            .map(|&k| self.log[k].raw_rhs.as_slice())
    }
}

impl<E> RuleLookup<E> for RuleSet<E> {
    fn rhs(&self, x: &[GenTok]) -> Option<&[(Word, E)]> {
        self.index.get(x).map(|&k| self.rules[k].rhs.as_slice())
    }
}

struct Completion<'f, F: Coefficients> {
    f: &'f F,
    log: Vec<Derivation<F::Elem>>,
    active: HashMap<Vec<GenTok>, usize>,
    max_lhs: usize,
    heap: BinaryHeap<Reverse<(usize, usize)>>,
    pending: Vec<Source>,
    memo: RightMemo<F::Elem>,
}

impl<F: Coefficients> Completion<'_, F> {
    fn push(&mut self, len: usize, s: Source) {
        self.heap.push(Reverse((len, self.pending.len())));
        self.pending.push(s);
    }

    fn reduce(&mut self, p: Poly<F::Elem>) -> Poly<F::Elem> {
        let table = ActiveRules {
            active: &self.active,
            log: &self.log,
        };
        let rw = Rewriter {
            f: self.f,
            rules: &table,
            max_len: self.max_lhs,
        };
        rw.reduce(&mut self.memo, &p).expect("unbounded reduction")
    }

    /// Chain criterion: if some left side occurs in the overlap word without
    /// touching either end, the overlap splits into two shorter ones (or
    /// disjoint occurrences), all of which were already resolved because
    /// pending work is processed by increasing word length.
    fn internally_reducible(&self, a: usize, b: usize, shared: usize) -> bool {
        let (la, lb) = (self.log[a].lhs.tokens(), self.log[b].lhs.tokens());
        let mut w = Vec::with_capacity(la.len() + lb.len() - shared);
        w.extend_from_slice(la);
        w.extend_from_slice(&lb[shared..]);
        let n = w.len();
        for p in 1..n - 1 {
            for l in 1..=self.max_lhs.min(n - 1 - p) {
                if self.active.contains_key(&w[p..p + l]) {
                    return true;
                }
            }
        }
        false
    }

    fn overlaps(&mut self, a: usize, b: usize) {
        let (la, lb) = (self.log[a].lhs.len(), self.log[b].lhs.len());
        for k in 1..la.min(lb) {
            if self.log[a].lhs.tokens()[la - k..] == self.log[b].lhs.tokens()[..k] {
                self.push(la + lb - k, Source::Overlap { left: a, right: b, shared: k });
            }
        }
    }

    fn insert(&mut self, mut p: Poly<F::Elem>, source: Source) {
        let f = self.f;
        let (lead, c) = p.pop_last().expect("nonzero polynomial");
        let cinv = f.inv(&c).expect("leading coefficient is invertible");
        let minus = f.neg(&cinv);
        let raw_rhs: Vec<(Word, F::Elem)> = p
            .into_iter()
            .rev()
            .map(|(u, v)| (u, f.normalize(f.mul(&v, &minus))))
            .collect();
        let id = self.log.len();
        let mut victims: Vec<usize> = self
            .active
            .iter()
            .filter(|(l, _)| contains(l, lead.tokens()))
            .map(|(_, &v)| v)
            .collect();
        victims.sort_unstable();
        for v in victims {
            self.active.remove(self.log[v].lhs.tokens());
            self.log[v].retired_by = Some(id);
            let len = self.log[v].lhs.len();
            self.push(len, Source::Requeued(v));
        }
        self.memo.clear();
        self.max_lhs = self.max_lhs.max(lead.len());
        self.active.insert(lead.tokens().to_vec(), id);
        self.log.push(Derivation {
            id,
            lhs: lead,
            raw_rhs,
            source,
            scale: c,
            retired_by: None,
        });
        let mut others: Vec<usize> = self.active.values().copied().collect();
        others.sort_unstable();
        for m in others {
            self.overlaps(id, m);
            if m != id {
                self.overlaps(m, id);
            }
        }
    }

    fn run(&mut self) {
        while let Some(Reverse((_, seq))) = self.heap.pop() {
            let source = self.pending[seq];
            if let Source::Overlap { left, right, shared } = source {
                if self.log[left].retired_by.is_some() || self.log[right].retired_by.is_some() {
                    continue;
                }
                if self.internally_reducible(left, right, shared) {
                    continue;
                }
            }
            let p = self.reduce(source_poly(self.f, &self.log, source));
            if !p.is_empty() {
                self.insert(p, source);
            }
        }
    }
}

impl<E: Clone + fmt::Debug + PartialEq> RuleSet<E> {
    /// Completes the defining relations of rank `n`.
    ///
    /// Pending polynomials are processed in order of the length of the word
    /// they were formed on, which keeps intermediate rules short.
    pub fn complete<F: Coefficients<Elem = E>>(f: &F, n: usize) -> Self {
        assert!(n >= 1, "rank must be positive");
        let mut c = Completion {
            f,
            log: Vec::new(),
            active: HashMap::new(),
            max_lhs: 0,
            heap: BinaryHeap::new(),
            pending: Vec::new(),
            memo: RightMemo::new(n),
        };
        for rel in relations(n) {
            let (lhs, _) = relation_sides(f, rel);
            c.push(lhs.len(), Source::Relation(rel));
        }
        c.run();
        let mut finals: Vec<(Word, usize)> = c
            .active
            .values()
            .map(|&id| (c.log[id].lhs.clone(), id))
            .collect();
        finals.sort();
        let mut rules = Vec::with_capacity(finals.len());
        for (lhs, id) in finals {
            let d = c.log[id].clone();
            let mut raw = Poly::new();
            scaled_terms(f, &d.raw_rhs, &[], &[], &f.one(), &mut raw);
            let rhs: Vec<(Word, E)> = c.reduce(raw).into_iter().rev().collect();
            let soundness = match d.source {
                Source::Relation(rel) if f.is_zero(&f.sub(&d.scale, &f.one())) && {
                    let (l0, r0) = relation_sides(f, rel);
                    l0 == d.lhs && same_terms(f, &r0, &d.raw_rhs)
                } =>
                {
                    Soundness::Defining(rel)
                }
                _ => Soundness::Derived(id),
            };
            let name = shape_name(&lhs).map_or(RuleName::Completion(id), RuleName::Named);
            rules.push(Rule {
                name,
                lhs,
                rhs,
                soundness,
                id,
            });
        }
        let index = rules
            .iter()
            .enumerate()
            .map(|(k, r)| (r.lhs.tokens().to_vec(), k))
            .collect();
        RuleSet {
            rank: n,
            rules,
            index,
            max_lhs: c.max_lhs,
            log: c.log,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Rules ordered by left side.
    pub fn rules(&self) -> &[Rule<E>] {
        &self.rules
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn max_lhs_len(&self) -> usize {
        self.max_lhs
    }

    /// The completion log, indexed by derivation id.
    pub fn log(&self) -> &[Derivation<E>] {
        &self.log
    }

    pub fn get(&self, lhs: &Word) -> Option<&Rule<E>> {
        self.index.get(lhs.tokens()).map(|&k| &self.rules[k])
    }

    /// Rules carrying the short name `R<k>`.
    pub fn named(&self, k: u8) -> impl Iterator<Item = &Rule<E>> {
        self.rules.iter().filter(move |r| r.name == RuleName::Named(k))
    }

    /// The first occurrence of a left side in `word` under `strategy`.
    pub fn find(&self, word: &Word, strategy: Strategy) -> Option<(usize, &Rule<E>)> {
        find_with(word.tokens(), self.max_lhs, strategy, |x| self.index.get(x).map(|&k| &self.rules[k]))
            .map(|(pos, _, r)| (pos, r))
    }

    pub fn is_irreducible(&self, word: &Word) -> bool {
        self.find(word, Strategy::Leftmost).is_none()
    }

    pub(crate) fn reduce_poly<F: Coefficients<Elem = E>>(
        &self,
        f: &F,
        p: Poly<E>,
        strategy: Strategy,
        budget: u64,
    ) -> Result<Poly<E>, Word> {
        reduce_poly(f, p, self.max_lhs, strategy, budget, |x| {
            self.index.get(x).map(|&k| self.rules[k].rhs.as_slice())
        })
    }

    /// Recomputes log entry `id` from its source using only the rules that
    /// were active before it was created, and checks the result.
    pub fn replay<F: Coefficients<Elem = E>>(&self, f: &F, id: usize) -> bool {
        let mut by_lhs: HashMap<&[GenTok], Vec<usize>> = HashMap::new();
        for d in &self.log {
            by_lhs.entry(d.lhs.tokens()).or_default().push(d.id);
        }
        self.replay_with(f, id, &by_lhs)
    }

    /// Replays every log entry; returns the ids that fail.
    pub fn replay_all<F: Coefficients<Elem = E>>(&self, f: &F) -> Vec<usize> {
        let mut by_lhs: HashMap<&[GenTok], Vec<usize>> = HashMap::new();
        for d in &self.log {
            by_lhs.entry(d.lhs.tokens()).or_default().push(d.id);
        }
        (0..self.log.len()).filter(|&id| !self.replay_with(f, id, &by_lhs)).collect()
    }

    fn replay_with<F: Coefficients<Elem = E>>(&self, f: &F, id: usize, by_lhs: &HashMap<&[GenTok], Vec<usize>>) -> bool {
        let d = &self.log[id];
        let max_len = self.log[..id].iter().map(|x| x.lhs.len()).max().unwrap_or(0);
        let table = RulesAt {
            by_lhs,
            log: &self.log,
            time: id,
        };
        let rw = Rewriter {
            f,
            rules: &table,
            max_len,
        };
        let mut memo = RightMemo::new(self.rank);
        let reduced = rw.reduce(&mut memo, &source_poly(f, &self.log, d.source)).expect("unbounded reduction");
        let mut expect = Poly::new();
        add_to(f, &mut expect, d.lhs.clone(), d.scale.clone());
        scaled_terms(f, &d.raw_rhs, &[], &[], &f.neg(&d.scale), &mut expect);
        same_poly(f, &reduced, &expect)
    }
}

fn same_terms<F: Coefficients>(f: &F, a: &[(Word, F::Elem)], b: &[(Word, F::Elem)]) -> bool {
    let mut pa = Poly::new();
    let mut pb = Poly::new();
    scaled_terms(f, a, &[], &[], &f.one(), &mut pa);
    scaled_terms(f, b, &[], &[], &f.one(), &mut pb);
    same_poly(f, &pa, &pb)
}

fn same_poly<F: Coefficients>(f: &F, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> bool {
    let mut d = a.clone();
    for (w, c) in b {
        add_to(f, &mut d, w.clone(), f.neg(c));
    }
    d.values().all(|c| f.is_zero(&f.normalize(c.clone())))
}
