//! Normal forms by memoized right multiplication.
//!
//! For an irreducible word `u` and a generator `t`, the normal form of `u t`
//! is cached. Since every proper factor of `u` is irreducible, a left side
//! can only match a suffix of `u t`, and the rewritten terms are again
//! products of an irreducible prefix with a few generators. Normal forms of
//! arbitrary polynomials are then folds over their words, sharing common
//! prefixes.

use alloc::rc::Rc;
use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;

use crate::element::add_to;
use crate::field::Coefficients;
use crate::rules::{find_with, Poly, Strategy};
use crate::word::{GenTok, Word};

pub(crate) type Terms<E> = Rc<[(Word, E)]>;

/// Cache of `NF(u t)` keyed by `u`, one slot per generator.
#[derive(Clone, Debug)]
pub(crate) struct RightMemo<E> {
    slots: usize,
    table: HashMap<Word, Vec<Option<Terms<E>>>>,
    /// Rule applications since the last [`RightMemo::start`].
    steps: u64,
    budget: u64,
}

fn slot(t: GenTok) -> usize {
    2 * (t.index() - 1) + (t.kind() as usize)
}

impl<E: Clone> RightMemo<E> {
    pub fn new(rank: usize) -> Self {
        RightMemo {
            slots: 2 * rank.max(1),
            table: HashMap::new(),
            steps: 0,
            budget: u64::MAX,
        }
    }

    pub fn clear(&mut self) {
        self.table.clear();
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    /// Resets the step counter and sets the budget for the next operation.
    pub fn start(&mut self, budget: u64) {
        self.steps = 0;
        self.budget = budget;
    }
}

/// A rule table: the right side of the rule whose left side is exactly `x`.
pub(crate) trait RuleLookup<E> {
    fn rhs(&self, x: &[GenTok]) -> Option<&[(Word, E)]>;
}

/// Rewrite context over a rule table.
pub(crate) struct Rewriter<'a, F: Coefficients, L> {
    pub f: &'a F,
    pub rules: &'a L,
    pub max_len: usize,
}

impl<F: Coefficients, L: RuleLookup<F::Elem>> Rewriter<'_, F, L> {
    /// `NF(u t)` for irreducible `u`.
    pub fn times_token(&self, memo: &mut RightMemo<F::Elem>, u: &Word, t: GenTok) -> Result<Terms<F::Elem>, Word> {
        let s = slot(t);
        if let Some(v) = memo.table.get(u).and_then(|row| row.get(s)).and_then(|x| x.as_ref()) {
            return Ok(v.clone());
        }
        let f = self.f;
        let mut w = u.clone();
        w.push(t);
        let res: Terms<F::Elem> = match find_with(w.tokens(), self.max_len, Strategy::Leftmost, |x| self.rules.rhs(x)) {
            None => Rc::from(vec![(w, f.one())]),
            Some((pos, len, rhs)) => {
                memo.steps += 1;
                if memo.steps > memo.budget {
                    return Err(w);
                }
                let prefix = w.slice(0, pos);
                let tail = &w.tokens()[pos + len..];
                let mut acc = Poly::new();
                for (v, d) in rhs {
                    let mut cur = Poly::new();
                    cur.insert(prefix.clone(), f.one());
                    for tok in v.tokens().iter().chain(tail) {
                        cur = self.vec_times(memo, &cur, *tok)?;
                        if cur.is_empty() {
                            break;
                        }
                    }
                    for (x, c) in cur {
                        add_to(f, &mut acc, x, f.mul(&c, d));
                    }
                }
                acc.into_iter()
                    .map(|(x, c)| (x, f.normalize(c)))
                    .filter(|(_, c)| !f.is_zero(c))
                    .collect::<Vec<_>>()
                    .into()
            }
        };
        let slots = memo.slots.max(s + 1);
        let row = memo.table.entry(u.clone()).or_insert_with(|| vec![None; slots]);
        if row.len() <= s {
            row.resize(s + 1, None);
        }
        row[s] = Some(res.clone());
        Ok(res)
    }

    /// `NF(v t)` for a combination `v` of irreducible words.
    pub fn vec_times(&self, memo: &mut RightMemo<F::Elem>, v: &Poly<F::Elem>, t: GenTok) -> Result<Poly<F::Elem>, Word> {
        let f = self.f;
        let mut out = Poly::new();
        for (u, c) in v {
            for (x, d) in self.times_token(memo, u, t)?.iter() {
                add_to(f, &mut out, x.clone(), f.mul(c, d));
            }
        }
        Ok(out)
    }

    /// `NF(a w)` for a combination `a` of irreducible words and each word
    /// `w` of `b`, summed with the coefficients of `b`.
    pub fn right_mul(
        &self,
        memo: &mut RightMemo<F::Elem>,
        a: &Poly<F::Elem>,
        b: &Poly<F::Elem>,
    ) -> Result<Poly<F::Elem>, Word> {
        let f = self.f;
        let mut words: Vec<(&Word, &F::Elem)> = b.iter().collect();
        words.sort_by(|x, y| x.0.tokens().cmp(y.0.tokens()));
        let mut stack: Vec<Poly<F::Elem>> = vec![a.clone()];
        let mut prev: &[GenTok] = &[];
        let mut out = Poly::new();
        for (w, c) in words {
            let t = w.tokens();
            let common = prev.iter().zip(t).take_while(|(x, y)| x == y).count();
            stack.truncate(common + 1);
            for d in common..t.len() {
                let next = if stack[d].is_empty() {
                    Poly::new()
                } else {
                    self.vec_times(memo, &stack[d], t[d])?
                };
                stack.push(next);
            }
            for (x, v) in stack.last().unwrap() {
                add_to(f, &mut out, x.clone(), f.mul(c, v));
            }
            prev = t;
        }
        Ok(out
            .into_iter()
            .map(|(x, c)| (x, f.normalize(c)))
            .filter(|(_, c)| !f.is_zero(c))
            .collect())
    }

    /// Normal form of an arbitrary combination.
    pub fn reduce(&self, memo: &mut RightMemo<F::Elem>, p: &Poly<F::Elem>) -> Result<Poly<F::Elem>, Word> {
        let mut one = Poly::new();
        one.insert(Word::empty(), self.f.one());
        self.right_mul(memo, &one, p)
    }
}
