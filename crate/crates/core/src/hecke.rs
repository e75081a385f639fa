//! The Hecke quotient, where every `e_i` maps to zero.
//!
//! Elements are keyed by permutations in one-line notation; `T_w` is
//! written with the reduced word `c_2 c_3 .. c_n`, where each `c_k` is a
//! descending chain `g_{k-1} .. g_i` or empty.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::element::Element;
use crate::error::Error;
use crate::field::Coefficients;
use crate::word::{chain, Kind, Word};

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((1..=n as u8).collect())
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let v = &self.0;
        (0..v.len())
            .map(|a| (a + 1..v.len()).filter(|&b| v[a] > v[b]).count())
            .sum()
    }

    /// Right multiplication by the simple transposition `s_i`.
    pub fn times_simple(&self, i: usize) -> Self {
        let mut v = self.0.clone();
        v.swap(i - 1, i);
        Perm(v)
    }

    /// Whether `l(w s_i) > l(w)`.
    pub fn ascent(&self, i: usize) -> bool {
        self.0[i - 1] < self.0[i]
    }

    /// The permutation of a word in the `g_i`; `None` if it contains an `e`.
    pub fn of_word(w: &Word, n: usize) -> Option<Self> {
        let mut p = Perm::identity(n);
        for t in w.tokens() {
            if t.kind() == Kind::E {
                return None;
            }
            p = p.times_simple(t.index());
        }
        Some(p)
    }

    /// The reduced word `c_2 .. c_n`.
    pub fn normal_word(&self) -> Word {
        let mut cur = self.0.clone();
        let mut chains = Vec::new();
        for k in (2..=cur.len()).rev() {
            let top = k as u8;
            let pos = cur.iter().position(|&x| x == top).unwrap() + 1;
            chains.push(chain(Kind::G, k - 1, k - pos, true));
            cur.remove(pos - 1);
        }
        let mut w = Word::empty();
        for c in chains.iter().rev() {
            w = w.concat(c);
        }
        w
    }

    /// All permutations of degree `n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = alloc::vec![Perm::identity(n)];
        loop {
            let mut v = out.last().unwrap().0.clone();
            let Some(a) = (1..v.len()).rev().find(|&a| v[a - 1] < v[a]) else {
                return out;
            };
            let b = (a..v.len()).rev().find(|&b| v[b] > v[a - 1]).unwrap();
            v.swap(a - 1, b);
            v[a..].reverse();
            out.push(Perm(v));
        }
    }
}

/// `sum c_w T_w` over permutations of degree `n`.
#[derive(Clone, Debug, PartialEq)]
pub struct HeckeElement<E> {
    degree: usize,
    terms: BTreeMap<Perm, E>,
}

impl<E: Clone> HeckeElement<E> {
    pub fn zero(degree: usize) -> Self {
        HeckeElement {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis<F: Coefficients<Elem = E>>(f: &F, w: Perm) -> Self {
        let mut x = Self::zero(w.degree());
        x.add_term(f, w, f.one());
        x
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Perm, &E)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Perm) -> Option<&E> {
        self.terms.get(w)
    }

    pub fn add_term<F: Coefficients<Elem = E>>(&mut self, f: &F, w: Perm, c: E) {
        let s = match self.terms.get(&w) {
            Some(old) => f.normalize(f.add(old, &c)),
            None => f.normalize(c),
        };
        if f.is_zero(&s) {
            self.terms.remove(&w);
        } else {
            self.terms.insert(w, s);
        }
    }

    pub fn sub<F: Coefficients<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(f, w.clone(), f.neg(c));
        }
        out
    }

    /// `x T_{s_i}`.
    pub fn times_simple<F: Coefficients<Elem = E>>(&self, f: &F, i: usize) -> Self {
        let qhat = f.qhat();
        let mut out = Self::zero(self.degree);
        for (w, c) in &self.terms {
            out.add_term(f, w.times_simple(i), c.clone());
            if !w.ascent(i) {
                out.add_term(f, w.clone(), f.mul(c, &qhat));
            }
        }
        out
    }

    /// `x T_w` for a word `w` in the `g_i`.
    fn times_word<F: Coefficients<Elem = E>>(&self, f: &F, w: &Word) -> Self {
        let mut out = self.clone();
        for t in w.tokens() {
            out = out.times_simple(f, t.index());
        }
        out
    }

    pub fn mul<F: Coefficients<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree, "degree mismatch in Hecke product");
        let mut out = Self::zero(self.degree);
        for (v, d) in &other.terms {
            for (w, c) in self.times_word(f, &v.normal_word()).terms {
                out.add_term(f, w, f.mul(&c, d));
            }
        }
        out
    }
}

/// The image of `x` under `g_i -> T_{s_i}`, `e_i -> 0`. With exact
/// coefficients a surviving coefficient involving `r` is an error.
pub fn project<F: Coefficients>(f: &F, x: &Element<F::Elem>) -> Result<HeckeElement<F::Elem>, Error> {
    let n = x.rank().max(1);
    let one = HeckeElement::basis(f, Perm::identity(n));
    let mut out = HeckeElement::zero(n);
    for (w, c) in x.terms() {
        if w.has_e() {
            continue;
        }
        for (p, d) in one.times_word(f, w).terms {
            out.add_term(f, p, f.mul(c, &d));
        }
    }
    if let Some((p, _)) = out.terms().find(|(_, c)| f.involves_r(c)) {
        return Err(Error::NonzeroRDegree { word: p.normal_word() });
    }
    Ok(out)
}

/// `q^{-n(n-1)/2} / [n]! * sum_w q^{l(w)} T_w`.
pub fn symmetrizer_closed_form<F: Coefficients>(f: &F, n: usize) -> Result<HeckeElement<F::Elem>, Error> {
    let n = n.max(1);
    let top = (n * (n - 1) / 2) as i32;
    let pre = f
        .div(&f.q_pow(-top), &f.qfact(n as u32))
        .ok_or(Error::ParameterSingular)?;
    let mut out = HeckeElement::zero(n);
    for w in Perm::all(n) {
        let c = f.mul(&pre, &f.q_pow(w.length() as i32));
        out.add_term(f, w, c);
    }
    Ok(out)
}

/// The closed form at parameter `-q^{-1}`:
/// `q^{n(n-1)/2} / [n]! * sum_w (-q)^{-l(w)} T_w`.
pub fn antisymmetrizer_closed_form<F: Coefficients>(f: &F, n: usize) -> Result<HeckeElement<F::Elem>, Error> {
    symmetrizer_closed_form(&f.gamma(), n)
}
