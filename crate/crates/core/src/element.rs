//! Sparse linear combinations of words.

use alloc::collections::btree_map::{BTreeMap, Entry};
use alloc::vec::Vec;

use crate::error::Error;
use crate::field::Coefficients;
use crate::word::{GenTok, Word};

/// A member of the rank-`n` algebra: a map from words to nonzero coefficients.
///
/// Terms iterate in degree-lexicographic word order.
#[derive(Clone, Debug, PartialEq)]
pub struct Element<E> {
    rank: usize,
    terms: BTreeMap<Word, E>,
}

/// Adds `c` to the coefficient of `w`, dropping it if the sum vanishes.
pub(crate) fn add_to<F: Coefficients>(f: &F, map: &mut BTreeMap<Word, F::Elem>, w: Word, c: F::Elem) {
    if f.is_zero(&c) {
        return;
    }
    match map.entry(w) {
        Entry::Occupied(mut o) => {
            let s = f.add(o.get(), &c);
            if f.is_zero(&s) {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
        Entry::Vacant(v) => {
            v.insert(c);
        }
    }
}

impl<E: Clone> Element<E> {
    pub fn zero(rank: usize) -> Self {
        Element {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_map(rank: usize, terms: BTreeMap<Word, E>) -> Self {
        Element { rank, terms }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &E)> {
        self.terms.iter()
    }

    pub fn map(&self) -> &BTreeMap<Word, E> {
        &self.terms
    }

    pub fn into_map(self) -> BTreeMap<Word, E> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> Option<&E> {
        self.terms.get(w)
    }

    pub fn words(&self) -> Vec<Word> {
        self.terms.keys().cloned().collect()
    }

    pub fn max_index(&self) -> usize {
        self.terms.keys().map(|w| w.max_index()).max().unwrap_or(0)
    }

    pub fn monomial<F: Coefficients<Elem = E>>(f: &F, rank: usize, w: Word, c: E) -> Self {
        let mut e = Self::zero(rank);
        add_to(f, &mut e.terms, w, c);
        e
    }

    pub fn one<F: Coefficients<Elem = E>>(f: &F, rank: usize) -> Self {
        Self::monomial(f, rank, Word::empty(), f.one())
    }

    pub fn scalar<F: Coefficients<Elem = E>>(f: &F, rank: usize, c: E) -> Self {
        Self::monomial(f, rank, Word::empty(), c)
    }

    pub fn word<F: Coefficients<Elem = E>>(f: &F, rank: usize, w: Word) -> Self {
        Self::monomial(f, rank, w, f.one())
    }

    pub fn generator<F: Coefficients<Elem = E>>(f: &F, rank: usize, t: GenTok) -> Self {
        Self::word(f, rank, Word::from_tokens(alloc::vec![t]))
    }

    pub fn add_term<F: Coefficients<Elem = E>>(&mut self, f: &F, w: Word, c: E) {
        add_to(f, &mut self.terms, w, c);
    }

    pub fn add<F: Coefficients<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        assert_eq!(self.rank, other.rank, "rank mismatch in addition");
        let mut out = self.clone();
        for (w, c) in &other.terms {
            add_to(f, &mut out.terms, w.clone(), c.clone());
        }
        out
    }

    pub fn sub<F: Coefficients<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        assert_eq!(self.rank, other.rank, "rank mismatch in subtraction");
        let mut out = self.clone();
        for (w, c) in &other.terms {
            add_to(f, &mut out.terms, w.clone(), f.neg(c));
        }
        out
    }

    pub fn scale<F: Coefficients<Elem = E>>(&self, f: &F, c: &E) -> Self {
        if f.is_zero(c) {
            return Self::zero(self.rank);
        }
        Element {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(w, x)| (w.clone(), f.normalize(f.mul(x, c))))
                .filter(|(_, x)| !f.is_zero(x))
                .collect(),
        }
    }

    pub fn neg<F: Coefficients<Elem = E>>(&self, f: &F) -> Self {
        self.scale(f, &f.from_int(-1))
    }

    /// Applies a coefficient map; terms whose image vanishes are dropped.
    pub fn map_coeffs<F: Coefficients<Elem = E>>(&self, f: &F, g: impl Fn(&E) -> E) -> Self {
        let mut out = Self::zero(self.rank);
        for (w, c) in &self.terms {
            add_to(f, &mut out.terms, w.clone(), g(c));
        }
        out
    }

    /// Applies a word map and re-collects terms.
    pub fn map_words<F: Coefficients<Elem = E>>(&self, f: &F, rank: usize, g: impl Fn(&Word) -> Word) -> Self {
        let mut out = Self::zero(rank);
        for (w, c) in &self.terms {
            add_to(f, &mut out.terms, g(w), c.clone());
        }
        out
    }

    /// The same element viewed in a larger algebra.
    pub fn embed(&self, n_target: usize) -> Result<Self, Error> {
        if n_target < self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found: n_target,
            });
        }
        Ok(Element {
            rank: n_target,
            terms: self.terms.clone(),
        })
    }

    /// Checks that every token index is below the rank.
    pub fn check_rank(&self) -> Result<(), Error> {
        let m = self.max_index();
        if m >= self.rank.max(1) && m > 0 {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found: m + 1,
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Exact;
    use crate::scalar::Scalar;

    #[test]
    fn zero_pruning_is_eager() {
        let f = Exact::new();
        let g1 = Element::generator(&f, 3, GenTok::g(1));
        let d = g1.sub(&f, &g1);
        assert!(d.is_zero());
        let x = g1.scale(&f, &Scalar::q()).add(&f, &g1.scale(&f, &Scalar::q().neg()));
        assert!(x.is_zero());
    }

    #[test]
    fn embed_respects_rank() {
        let f = Exact::new();
        let g1 = Element::generator(&f, 2, GenTok::g(1));
        assert_eq!(g1.embed(4).unwrap().rank(), 4);
        assert_eq!(g1.embed(2).unwrap(), g1);
        assert!(g1.embed(1).is_err());
        let bad = Element::generator(&f, 2, GenTok::g(2));
        assert!(bad.check_rank().is_err());
    }
}
