//! Laurent polynomials in `q` and `r` with integer coefficients.

use alloc::collections::btree_map::{BTreeMap, Entry};
use alloc::vec::Vec;
use core::fmt;

use crate::int::Int;

/// Exponent pair `(a, b)` of the monomial `q^a r^b`. Ordered lexicographically.
pub type Exp = (i32, i32);

/// A Laurent polynomial `sum c * q^a * r^b`.
///
/// Terms are kept sorted by exponent (lexicographic, `a` then `b`) and no
/// stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LaurentPoly {
    terms: Vec<(Exp, Int)>,
}

fn add_exp(x: Exp, y: Exp) -> Exp {
    (x.0 + y.0, x.1 + y.1)
}

fn sub_exp(x: Exp, y: Exp) -> Exp {
    (x.0 - y.0, x.1 - y.1)
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(Int::ONE, (0, 0))
    }

    pub fn constant(c: Int) -> Self {
        Self::monomial(c, (0, 0))
    }

    pub fn monomial(c: Int, e: Exp) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly {
                terms: alloc::vec![(e, c)],
            }
        }
    }

    pub fn q() -> Self {
        Self::monomial(Int::ONE, (1, 0))
    }

    pub fn r() -> Self {
        Self::monomial(Int::ONE, (0, 1))
    }

    /// Builds a polynomial from arbitrary (possibly repeated, unsorted) terms.
    pub fn from_terms(mut raw: Vec<(Exp, Int)>) -> Self {
        raw.sort_by(|x, y| x.0.cmp(&y.0));
        let mut terms: Vec<(Exp, Int)> = Vec::with_capacity(raw.len());
        for (e, c) in raw {
            match terms.last_mut() {
                Some((le, lc)) if *le == e => {
                    *lc = &*lc + &c;
                    if lc.is_zero() {
                        terms.pop();
                    }
                }
                _ => {
                    if !c.is_zero() {
                        terms.push((e, c));
                    }
                }
            }
        }
        LaurentPoly { terms }
    }

    pub fn terms(&self) -> &[(Exp, Int)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == (0, 0) && self.terms[0].1.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Lexicographically largest term.
    pub fn leading(&self) -> Option<&(Exp, Int)> {
        self.terms.last()
    }

    /// Lexicographically smallest term.
    pub fn trailing(&self) -> Option<&(Exp, Int)> {
        self.terms.first()
    }

    /// Componentwise minimum of the exponents (`(0, 0)` for zero).
    pub fn min_exponents(&self) -> Exp {
        let mut it = self.terms.iter();
        let Some(first) = it.next() else {
            return (0, 0);
        };
        it.fold(first.0, |m, (e, _)| (m.0.min(e.0), m.1.min(e.1)))
    }

    pub fn max_exponents(&self) -> Exp {
        let mut it = self.terms.iter();
        let Some(first) = it.next() else {
            return (0, 0);
        };
        it.fold(first.0, |m, (e, _)| (m.0.max(e.0), m.1.max(e.1)))
    }

    /// Whether any term carries a nonzero `r` exponent.
    pub fn involves_r(&self) -> bool {
        self.terms.iter().any(|(e, _)| e.1 != 0)
    }

    /// Multiplies by `q^a r^b`.
    pub fn shift(&self, by: Exp) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (add_exp(*e, by), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Int) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                out.push((b[j].0, c));
                j += 1;
            } else {
                let c = if negate {
                    &a[i].1 - &b[j].1
                } else {
                    &a[i].1 + &b[j].1
                };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        LaurentPoly { terms: out }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if other.is_monomial() {
            let (e, c) = &other.terms[0];
            return self.shift(*e).scale(c);
        }
        if self.is_monomial() {
            return other.mul(self);
        }
        let mut raw = Vec::with_capacity(self.len() * other.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                raw.push((add_exp(*ea, *eb), ca * cb));
            }
        }
        Self::from_terms(raw)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Gcd of the integer coefficients (non-negative; zero for the zero polynomial).
    pub fn content(&self) -> Int {
        let mut g = Int::ZERO;
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides every coefficient by `c`, which must divide all of them.
    pub fn div_int_exact(&self, c: &Int) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, x)| (*e, x.div_exact(c).expect("inexact integer division")))
                .collect(),
        }
    }

    /// Exact quotient `self / d` in the Laurent ring over the integers.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.is_monomial() {
            let (e, c) = &d.terms[0];
            let mut out = Vec::with_capacity(self.len());
            for (x, v) in &self.terms {
                out.push((sub_exp(*x, *e), v.div_exact(c)?));
            }
            return Some(LaurentPoly { terms: out });
        }
        if self.len() < d.len() {
            return None;
        }
        let (d_lead_e, d_lead_c) = d.terms.last().unwrap().clone();
        // quotient exponents lie in the box [min(self) - min(d), max(self) - max(d)]
        let low = sub_exp(self.min_exponents(), d.min_exponents());
        let high = sub_exp(self.max_exponents(), d.max_exponents());
        let mut rem: BTreeMap<Exp, Int> = self.terms.iter().cloned().collect();
        let mut quot = Vec::new();
        while let Some((re, rc)) = rem.pop_last() {
            let qe = sub_exp(re, d_lead_e);
            if qe.0 < low.0 || qe.1 < low.1 || qe.0 > high.0 || qe.1 > high.1 {
                return None;
            }
            let qc = rc.div_exact(&d_lead_c)?;
            for (de, dc) in &d.terms[..d.terms.len() - 1] {
                let e = add_exp(*de, qe);
                let t = dc * &qc;
                match rem.entry(e) {
                    Entry::Occupied(mut o) => {
                        let v = o.get() - &t;
                        if v.is_zero() {
                            o.remove();
                        } else {
                            *o.get_mut() = v;
                        }
                    }
                    Entry::Vacant(v) => {
                        v.insert(-t);
                    }
                }
            }
            quot.push((qe, qc));
        }
        quot.reverse();
        Some(LaurentPoly { terms: quot })
    }

    /// Substitution `q -> -q^{-1}`, `r` fixed.
    pub fn subst_gamma(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(e, c)| {
                    let c = if e.0.rem_euclid(2) == 1 { -c } else { c.clone() };
                    ((-e.0, e.1), c)
                })
                .collect(),
        )
    }

    /// Evaluation modulo `p` at `q = q0`, `r = r0`; the inverses must be supplied.
    pub fn eval_mod(&self, p: u64, q0: u64, q0_inv: u64, r0: u64, r0_inv: u64) -> u64 {
        let mut acc = 0u64;
        for ((a, b), c) in &self.terms {
            let qa = if *a >= 0 {
                pow_mod(q0, *a as u64, p)
            } else {
                pow_mod(q0_inv, a.unsigned_abs() as u64, p)
            };
            let rb = if *b >= 0 {
                pow_mod(r0, *b as u64, p)
            } else {
                pow_mod(r0_inv, b.unsigned_abs() as u64, p)
            };
            let t = mul_mod(mul_mod(c.mod_u64(p), qa, p), rb, p);
            acc = add_mod(acc, t, p);
        }
        acc
    }

    /// Univariate polynomial in `q` from ascending integer coefficients.
    pub fn from_q_coeffs(coeffs: &[i64]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| ((i as i32, 0), Int::from(*c)))
                .collect(),
        )
    }
}

pub(crate) fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, ((a, b), c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = *a != 0 || *b != 0;
            if !abs.is_one() || !mono {
                write!(f, "{abs}")?;
                if mono {
                    write!(f, "*")?;
                }
            }
            let mut first = true;
            for (sym, e) in [("q", *a), ("r", *b)] {
                if e == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                if e == 1 {
                    write!(f, "{sym}")?;
                } else {
                    write!(f, "{sym}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    fn p(terms: &[(i32, i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(a, b, c)| ((a, b), Int::from(c))).collect())
    }

    #[test]
    fn exact_division_recovers_factor() {
        let a = p(&[(1, 1, 1), (0, 0, -1)]); // q r - 1
        let b = p(&[(2, 0, 1), (-1, 3, 2), (0, 0, 5)]);
        let prod = a.mul(&b);
        assert_eq!(prod.exact_div(&a), Some(b.clone()));
        assert_eq!(prod.exact_div(&b), Some(a));
        let c = p(&[(1, 0, 1), (0, 0, 1)]);
        assert_eq!(b.exact_div(&c), None);
    }

    #[test]
    fn gamma_is_involutive() {
        let a = p(&[(3, 1, 2), (-2, 0, -7), (1, -1, 1)]);
        assert_eq!(a.subst_gamma().subst_gamma(), a);
        assert_eq!(LaurentPoly::q().subst_gamma(), p(&[(-1, 0, -1)]));
    }

    #[test]
    fn display_is_readable() {
        let a = p(&[(2, 0, 1), (0, 0, -1), (-1, 1, 3)]);
        assert_eq!(format!("{a}"), "q^2 - 1 + 3*q^-1*r");
    }
}
