//! The rank-`n` algebra: products, normal forms and equality verdicts.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::rc::Rc;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cell::RefCell;

use crate::element::Element;
use crate::error::Error;
use crate::field::Coefficients;
use crate::normal::{Rewriter, RightMemo};
use crate::rules::{RuleSet, Strategy};
use crate::word::{GenTok, Kind, Word};

/// Default number of rule applications allowed per input term.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// Outcome of an equality test.
///
/// `Equal` is a proof: the difference was rewritten to zero by sound rules.
/// `NotReducedToZero` carries the reduced difference.
#[derive(Clone, Debug, PartialEq)]
pub enum Verdict<E> {
    Equal,
    NotReducedToZero(Element<E>),
}

impl<E> Verdict<E> {
    pub fn is_equal(&self) -> bool {
        matches!(self, Verdict::Equal)
    }
}

/// Arithmetic in the algebra of one rank over one coefficient field.
///
/// Normal forms of `word * generator` products are cached. The cache is
/// per instance and not shared across threads; clones made by
/// [`Algebra::view`] share it.
#[derive(Clone)]
pub struct Algebra<F: Coefficients> {
    field: F,
    rules: Arc<RuleSet<F::Elem>>,
    memo: Rc<RefCell<RightMemo<F::Elem>>>,
    budget: u64,
}

impl<F: Coefficients> Algebra<F> {
    /// Builds the rule set for rank `n` by completion.
    pub fn new(field: F, n: usize) -> Self {
        let rules = Arc::new(RuleSet::complete(&field, n));
        Self::with_rules(field, rules)
    }

    pub fn with_rules(field: F, rules: Arc<RuleSet<F::Elem>>) -> Self {
        let memo = Rc::new(RefCell::new(RightMemo::new(rules.rank())));
        Algebra {
            field,
            rules,
            memo,
            budget: DEFAULT_BUDGET,
        }
    }

    /// The same rules and cache over another field. The rule coefficients
    /// must mean the same thing in `field`; this holds for [`Coefficients::gamma`]
    /// because every rule coefficient is a function of `qhat` and `r` only.
    pub fn view(&self, field: F) -> Self {
        Algebra {
            field,
            rules: self.rules.clone(),
            memo: self.memo.clone(),
            budget: self.budget,
        }
    }

    /// The algebra at parameter `-q^{-1}`.
    pub fn gamma_view(&self) -> Self {
        self.view(self.field.gamma())
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget.max(1);
        self
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rank(&self) -> usize {
        self.rules.rank()
    }

    pub fn rules(&self) -> &Arc<RuleSet<F::Elem>> {
        &self.rules
    }

    /// Number of cached `word * generator` products.
    pub fn cache_len(&self) -> usize {
        self.memo.borrow().len()
    }

    pub fn zero(&self) -> Element<F::Elem> {
        Element::zero(self.rank())
    }

    pub fn one(&self) -> Element<F::Elem> {
        Element::one(&self.field, self.rank())
    }

    pub fn scalar(&self, c: F::Elem) -> Element<F::Elem> {
        Element::scalar(&self.field, self.rank(), c)
    }

    fn check_token(&self, t: GenTok) -> Result<(), Error> {
        if t.index() >= self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found: t.index() + 1,
            });
        }
        Ok(())
    }

    pub fn generator(&self, t: GenTok) -> Result<Element<F::Elem>, Error> {
        self.check_token(t)?;
        Ok(Element::generator(&self.field, self.rank(), t))
    }

    pub fn g(&self, i: usize) -> Result<Element<F::Elem>, Error> {
        self.generator(GenTok::g(i))
    }

    pub fn e(&self, i: usize) -> Result<Element<F::Elem>, Error> {
        self.generator(GenTok::e(i))
    }

    /// `g_i^{-1} = g_i - qhat + qhat e_i`.
    pub fn g_inv(&self, i: usize) -> Result<Element<F::Elem>, Error> {
        let f = &self.field;
        let qhat = f.qhat();
        let mut x = self.g(i)?;
        x.add_term(f, Word::empty(), f.neg(&qhat));
        x.add_term(f, Word::from_tokens(alloc::vec![GenTok::e(i)]), qhat);
        Ok(x)
    }

    pub fn word(&self, w: Word) -> Result<Element<F::Elem>, Error> {
        for t in w.tokens() {
            self.check_token(*t)?;
        }
        Ok(Element::word(&self.field, self.rank(), w))
    }

    fn check(&self, x: &Element<F::Elem>) -> Result<(), Error> {
        if x.rank() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found: x.rank(),
            });
        }
        x.check_rank()
    }

    fn with_rewriter<T>(
        &self,
        budget: u64,
        body: impl FnOnce(&Rewriter<'_, F, RuleSet<F::Elem>>, &mut RightMemo<F::Elem>) -> Result<T, Word>,
    ) -> Result<T, Error> {
        let rw = Rewriter {
            f: &self.field,
            rules: &*self.rules,
            max_len: self.rules.max_lhs_len(),
        };
        let mut memo = self.memo.borrow_mut();
        memo.start(budget);
        body(&rw, &mut memo).map_err(|word| Error::BudgetExhausted { word })
    }

    fn op_budget(&self, terms: usize) -> u64 {
        self.budget.saturating_mul(terms.max(1) as u64)
    }

    /// Normal form.
    pub fn reduce(&self, x: &Element<F::Elem>) -> Result<Element<F::Elem>, Error> {
        self.check(x)?;
        let out = self.with_rewriter(self.op_budget(x.len()), |rw, memo| rw.reduce(memo, x.map()))?;
        Ok(Element::from_map(self.rank(), out))
    }

    /// Normal form by plain rewriting under an explicit strategy and total
    /// step budget, bypassing the product cache.
    pub fn reduce_with(&self, x: &Element<F::Elem>, strategy: Strategy, budget: u64) -> Result<Element<F::Elem>, Error> {
        self.check(x)?;
        let out = self
            .rules
            .reduce_poly(&self.field, x.map().clone(), strategy, budget)
            .map_err(|word| Error::BudgetExhausted { word })?;
        Ok(Element::from_map(self.rank(), out))
    }

    /// Reduced product `a b`.
    pub fn mul(&self, a: &Element<F::Elem>, b: &Element<F::Elem>) -> Result<Element<F::Elem>, Error> {
        self.check(a)?;
        self.check(b)?;
        let budget = self.op_budget(a.len() + b.len());
        let out = self.with_rewriter(budget, |rw, memo| {
            let left = rw.reduce(memo, a.map())?;
            rw.right_mul(memo, &left, b.map())
        })?;
        Ok(Element::from_map(self.rank(), out))
    }

    /// Reduced product of a sequence; the empty product is one.
    pub fn product(&self, xs: &[&Element<F::Elem>]) -> Result<Element<F::Elem>, Error> {
        let mut acc = self.one();
        for x in xs {
            acc = self.mul(&acc, x)?;
        }
        Ok(acc)
    }

    pub fn equals(&self, a: &Element<F::Elem>, b: &Element<F::Elem>) -> Result<Verdict<F::Elem>, Error> {
        self.check(a)?;
        self.check(b)?;
        let d = self.reduce(&a.sub(&self.field, b))?;
        Ok(if d.is_zero() {
            Verdict::Equal
        } else {
            Verdict::NotReducedToZero(d)
        })
    }

    /// All irreducible words reachable from the identity by right
    /// multiplication with generators, in word order.
    pub fn enumerate_irreducible(&self) -> Result<Vec<Word>, Error> {
        let n = self.rank();
        let gens: Vec<GenTok> = (1..n).flat_map(|i| [GenTok::e(i), GenTok::g(i)]).collect();
        let budget = self.op_budget(1).saturating_mul(gens.len().max(1) as u64);
        self.with_rewriter(budget, |rw, memo| {
            let mut seen: BTreeSet<Word> = BTreeSet::new();
            seen.insert(Word::empty());
            let mut queue = VecDeque::from([Word::empty()]);
            while let Some(u) = queue.pop_front() {
                for &t in &gens {
                    for (w, _) in rw.times_token(memo, &u, t)?.iter() {
                        if seen.insert(w.clone()) {
                            queue.push_back(w.clone());
                        }
                    }
                }
            }
            Ok(seen.into_iter().collect())
        })
    }

    /// Row `j` holds the coordinates of `basis[j] * t` in `basis`.
    pub fn right_action_matrix(&self, t: GenTok, basis: &[Word]) -> Result<Vec<Vec<F::Elem>>, Error> {
        self.check_token(t)?;
        let pos: BTreeMap<&Word, usize> = basis.iter().enumerate().map(|(k, w)| (w, k)).collect();
        let mut rows = Vec::with_capacity(basis.len());
        for w in basis {
            let x = self.mul(&self.word(w.clone())?, &self.generator(t)?)?;
            let mut row = alloc::vec![self.field.zero(); basis.len()];
            for (u, c) in x.terms() {
                let k = *pos.get(u).ok_or_else(|| Error::ClosureUnstable { word: u.clone() })?;
                row[k] = c.clone();
            }
            rows.push(row);
        }
        Ok(rows)
    }

    /// Random-free helper used by tests and suites: the element `sum c_w w`.
    pub fn from_terms(&self, terms: impl IntoIterator<Item = (Word, F::Elem)>) -> Result<Element<F::Elem>, Error> {
        let mut x = self.zero();
        for (w, c) in terms {
            for t in w.tokens() {
                self.check_token(*t)?;
            }
            x.add_term(&self.field, w, c);
        }
        Ok(x)
    }
}

/// Words of length `len` in the generators of rank `n`, in word order.
pub fn all_words(n: usize, len: usize) -> Vec<Word> {
    let gens: Vec<GenTok> = (1..n)
        .flat_map(|i| [GenTok::new(Kind::E, i), GenTok::new(Kind::G, i)])
        .collect();
    let mut out = alloc::vec![Word::empty()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(out.len() * gens.len());
        for w in &out {
            for &t in &gens {
                let mut v = w.clone();
                v.push(t);
                next.push(v);
            }
        }
        out = next;
    }
    out
}
