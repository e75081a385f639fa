//! The coefficient field `Q(q, r)` of rational functions in two invertible
//! variables, plus the quantum-integer helpers.
//!
//! A [`Scalar`] is stored as a Laurent-polynomial numerator over a factored
//! denominator: a positive integer times a product of "atoms", each atom a
//! primitive polynomial with non-negative exponents, minimal exponents zero
//! and positive lexicographically leading coefficient. Sums only need the
//! least common multiple of two such products, which is a max-merge of
//! multiplicities, so no multivariate gcd is ever computed. Cancellation is
//! trial division of the numerator by the denominator atoms and is done by
//! [`Scalar::normalize`].

use alloc::vec::Vec;
use core::fmt;

use crate::int::Int;
use crate::laurent::{Exp, LaurentPoly};

/// Element of `Q(q, r)`.
#[derive(Clone)]
pub struct Scalar {
    num: LaurentPoly,
    den_int: Int,
    atoms: Vec<(LaurentPoly, u32)>,
}

/// The denominator of a scalar vanished at a specialization point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DenominatorVanishes;

/// Splits `p` as `sign * content * q^a r^b * prim` with `prim` primitive,
/// minimal exponents zero and positive leading coefficient.
fn split_unit(p: &LaurentPoly) -> (Int, Exp, LaurentPoly) {
    let shift = p.min_exponents();
    let mut prim = p.shift((-shift.0, -shift.1));
    let mut c = prim.content();
    if prim.leading().map_or(false, |(_, lc)| lc.is_negative()) {
        c = -c;
    }
    if !c.is_one() {
        prim = prim.div_int_exact(&c);
    }
    (c, shift, prim)
}

fn merge_atoms(
    a: &[(LaurentPoly, u32)],
    b: &[(LaurentPoly, u32)],
    combine: impl Fn(u32, u32) -> u32,
) -> Vec<(LaurentPoly, u32)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push((a[i].0.clone(), combine(a[i].1, 0)));
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0.clone(), combine(0, b[j].1)));
            j += 1;
        } else {
            out.push((a[i].0.clone(), combine(a[i].1, b[j].1)));
            i += 1;
            j += 1;
        }
    }
    out
}

/// Cyclotomic polynomials `Phi_1 .. Phi_max` in `q`.
fn cyclotomics(max: usize) -> Vec<LaurentPoly> {
    let mut out: Vec<LaurentPoly> = Vec::with_capacity(max);
    for d in 1..=max {
        let mut coeffs = alloc::vec![0i64; d + 1];
        coeffs[0] = -1;
        coeffs[d] = 1;
        let mut p = LaurentPoly::from_q_coeffs(&coeffs);
        for e in 1..d {
            if d % e == 0 {
                p = p.exact_div(&out[e - 1]).expect("cyclotomic division");
            }
        }
        out.push(p);
    }
    out
}

/// Factors a primitive polynomial with trial divisors that cover every
/// denominator this crate produces: cyclotomic polynomials in `q` and the
/// binomials `q^k r +- 1`, `q^k +- r`. Whatever is left over is returned as a
/// single (possibly reducible) factor.
fn factor_primitive(p: &LaurentPoly) -> Vec<(LaurentPoly, u32)> {
    let mut rest = p.clone();
    let mut found: Vec<(LaurentPoly, u32)> = Vec::new();
    let mut try_divisor = |rest: &mut LaurentPoly, d: &LaurentPoly| {
        let mut m = 0;
        while rest.len() >= d.len() {
            match rest.exact_div(d) {
                Some(quo) => {
                    *rest = quo;
                    m += 1;
                }
                None => break,
            }
        }
        if m > 0 {
            found.push((d.clone(), m));
        }
    };
    let span = {
        let (lo, hi) = (rest.min_exponents(), rest.max_exponents());
        ((hi.0 - lo.0) as usize, (hi.1 - lo.1) as usize)
    };
    if span.0 > 0 {
        let cyc = cyclotomics(4 * span.0 + 4);
        for phi in &cyc {
            let deg = phi.max_exponents().0 as usize;
            if deg <= span.0 {
                try_divisor(&mut rest, phi);
            }
        }
    }
    if span.1 > 0 {
        for k in 0..=span.0 as i32 {
            for (a, b) in [((k, 1), (0, 0)), ((k, 0), (0, 1))] {
                for sign in [Int::ONE, -Int::ONE] {
                    let raw = LaurentPoly::from_terms(alloc::vec![(a, Int::ONE), (b, sign.clone())]);
                    if raw.len() < 2 {
                        continue;
                    }
                    let (_, _, atom) = split_unit(&raw);
                    try_divisor(&mut rest, &atom);
                }
            }
        }
    }
    let (c, _, prim) = split_unit(&rest);
    debug_assert!(c.abs().is_one());
    if !prim.is_monomial() {
        found.push((prim, 1));
    }
    found.sort_by(|x, y| x.0.cmp(&y.0));
    let mut merged: Vec<(LaurentPoly, u32)> = Vec::new();
    for (a, m) in found {
        match merged.last_mut() {
            Some((la, lm)) if *la == a => *lm += m,
            _ => merged.push((a, m)),
        }
    }
    merged
}

impl Scalar {
    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(LaurentPoly::constant(Int::from(c)))
    }

    pub fn from_poly(num: LaurentPoly) -> Self {
        Scalar {
            num,
            den_int: Int::ONE,
            atoms: Vec::new(),
        }
    }

    /// `c q^a r^b`.
    pub fn monomial(c: i64, a: i32, b: i32) -> Self {
        Self::from_poly(LaurentPoly::monomial(Int::from(c), (a, b)))
    }

    pub fn q() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn r() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn q_pow(k: i32) -> Self {
        Self::monomial(1, k, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Whether the value is a Laurent polynomial (trivial denominator).
    pub fn is_laurent(&self) -> bool {
        self.atoms.is_empty() && self.den_int.is_one()
    }

    fn same_denominator(&self, other: &Self) -> bool {
        self.den_int == other.den_int && self.atoms == other.atoms
    }

    fn den_product(atoms: &[(LaurentPoly, u32)], den_int: &Int) -> LaurentPoly {
        let mut acc = LaurentPoly::constant(den_int.clone());
        for (a, m) in atoms {
            acc = acc.mul(&a.pow(*m));
        }
        acc
    }

    /// Numerator after [`Scalar::normalize`].
    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    /// Expanded denominator.
    pub fn denominator(&self) -> LaurentPoly {
        Self::den_product(&self.atoms, &self.den_int)
    }

    pub fn neg(&self) -> Self {
        Scalar {
            num: self.num.neg(),
            den_int: self.den_int.clone(),
            atoms: self.atoms.clone(),
        }
    }

    /// Brings both operands over the common denominator and combines the numerators.
    fn combine(&self, other: &Self, f: impl Fn(&LaurentPoly, &LaurentPoly) -> LaurentPoly) -> Self {
        if self.same_denominator(other) {
            let num = f(&self.num, &other.num);
            if num.is_zero() {
                return Self::zero();
            }
            return Scalar {
                num,
                den_int: self.den_int.clone(),
                atoms: self.atoms.clone(),
            };
        }
        let atoms = merge_atoms(&self.atoms, &other.atoms, |x, y| x.max(y));
        let g = self.den_int.gcd(&other.den_int);
        let den_int = &self.den_int.div_exact(&g).unwrap() * &other.den_int;
        let lift = |s: &Scalar| -> LaurentPoly {
            let mut n = s.num.scale(&den_int.div_exact(&s.den_int).unwrap());
            let mut j = 0;
            for (a, m) in &atoms {
                let have = match s.atoms.get(j) {
                    Some((sa, sm)) if sa == a => {
                        j += 1;
                        *sm
                    }
                    _ => 0,
                };
                if *m > have {
                    n = n.mul(&a.pow(m - have));
                }
            }
            n
        };
        let num = f(&lift(self), &lift(other));
        if num.is_zero() {
            return Self::zero();
        }
        Scalar {
            num,
            den_int,
            atoms,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        self.combine(other, |a, b| a.add(b))
    }

    pub fn sub(&self, other: &Self) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.neg();
        }
        self.combine(other, |a, b| a.sub(b))
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let num = self.num.mul(&other.num);
        if self.is_laurent() {
            return Scalar {
                num,
                den_int: other.den_int.clone(),
                atoms: other.atoms.clone(),
            };
        }
        if other.is_laurent() {
            return Scalar {
                num,
                den_int: self.den_int.clone(),
                atoms: self.atoms.clone(),
            };
        }
        Scalar {
            num,
            den_int: &self.den_int * &other.den_int,
            atoms: merge_atoms(&self.atoms, &other.atoms, |x, y| x + y),
        }
    }

    pub fn pow(&self, k: i32) -> Self {
        let base = if k < 0 {
            self.inv().expect("negative power of zero")
        } else {
            self.clone()
        };
        let mut acc = Self::one();
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc.normalize()
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let (c, shift, prim) = split_unit(&self.num);
        let atoms = if prim.is_monomial() {
            Vec::new()
        } else {
            factor_primitive(&prim)
        };
        let mut num = Self::den_product(&self.atoms, &self.den_int).shift((-shift.0, -shift.1));
        let mut den_int = c;
        if den_int.is_negative() {
            den_int = -den_int;
            num = num.neg();
        }
        Some(
            Scalar {
                num,
                den_int,
                atoms,
            }
            .normalize(),
        )
    }

    pub fn div(&self, other: &Self) -> Option<Self> {
        Some(self.mul(&other.inv()?).normalize())
    }

    /// Cancels denominator atoms and integer content against the numerator.
    pub fn normalize(mut self) -> Self {
        if self.num.is_zero() {
            return Self::zero();
        }
        let mut kept = Vec::with_capacity(self.atoms.len());
        for (a, mut m) in core::mem::take(&mut self.atoms) {
            while m > 0 {
                match self.num.exact_div(&a) {
                    Some(quo) => {
                        self.num = quo;
                        m -= 1;
                    }
                    None => break,
                }
            }
            if m > 0 {
                kept.push((a, m));
            }
        }
        self.atoms = kept;
        if !self.den_int.is_one() {
            let g = self.num.content().gcd(&self.den_int);
            if !g.is_one() {
                self.num = self.num.div_int_exact(&g);
                self.den_int = self.den_int.div_exact(&g).unwrap();
            }
        }
        self
    }

    /// Substitution `q -> -q^{-1}` with `r` fixed; a ring automorphism and an involution.
    pub fn subst_gamma(&self) -> Self {
        let mut num = self.num.subst_gamma();
        let mut atoms = Vec::with_capacity(self.atoms.len());
        for (a, m) in &self.atoms {
            let (c, shift, prim) = split_unit(&a.subst_gamma());
            // a(-1/q) = c q^shift prim, so 1/a^m = (c q^shift)^{-m} / prim^m
            for _ in 0..*m {
                num = num.shift((-shift.0, -shift.1));
                if c.is_negative() {
                    num = num.neg();
                }
            }
            debug_assert!(c.abs().is_one());
            atoms.push((prim, *m));
        }
        atoms.sort_by(|x, y| x.0.cmp(&y.0));
        Scalar {
            num,
            den_int: self.den_int.clone(),
            atoms,
        }
        .normalize()
    }

    /// Whether the (normalized) value depends on `r`.
    pub fn involves_r(&self) -> bool {
        let n = self.clone().normalize();
        n.num.involves_r() || n.atoms.iter().any(|(a, _)| a.involves_r())
    }

    /// Image under `q -> q0`, `r -> r0` in the prime field of order `p`.
    pub fn eval_mod(&self, p: u64, q0: u64, q0_inv: u64, r0: u64, r0_inv: u64) -> Result<u64, DenominatorVanishes> {
        let n = self.num.eval_mod(p, q0, q0_inv, r0, r0_inv);
        let d = Self::den_product(&self.atoms, &self.den_int).eval_mod(p, q0, q0_inv, r0, r0_inv);
        if d == 0 {
            return Err(DenominatorVanishes);
        }
        Ok(crate::laurent::mul_mod(n, crate::modular::inv_mod(d, p), p))
    }

    /// Builds `num / den` from two Laurent polynomials.
    pub fn from_fraction(num: LaurentPoly, den: &LaurentPoly) -> Option<Self> {
        Scalar::from_poly(num).div(&Scalar::from_poly(den.clone()))
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        if self.same_denominator(other) {
            return self.num == other.num;
        }
        self.sub(other).is_zero()
    }
}

impl Eq for Scalar {}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.clone().normalize();
        if s.is_laurent() {
            return write!(f, "{}", s.num);
        }
        if s.num.len() > 1 {
            write!(f, "({})", s.num)?;
        } else {
            write!(f, "{}", s.num)?;
        }
        write!(f, "/(")?;
        let mut first = true;
        if !s.den_int.is_one() {
            write!(f, "{}", s.den_int)?;
            first = false;
        }
        for (a, m) in &s.atoms {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if *m == 1 {
                write!(f, "({a})")?;
            } else {
                write!(f, "({a})^{m}")?;
            }
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `q - q^{-1}`.
pub fn qhat() -> Scalar {
    Scalar::from_poly(LaurentPoly::from_terms(alloc::vec![
        ((1, 0), Int::ONE),
        ((-1, 0), -Int::ONE)
    ]))
}

/// Quantum integer `[k] = (q^k - q^{-k}) / (q - q^{-1})`.
pub fn qint(k: i64) -> Scalar {
    if k == 0 {
        return Scalar::zero();
    }
    let m = k.unsigned_abs() as i32;
    let terms = (0..m).map(|j| ((m - 1 - 2 * j, 0), Int::ONE)).collect();
    let v = Scalar::from_poly(LaurentPoly::from_terms(terms));
    if k < 0 {
        v.neg()
    } else {
        v
    }
}

/// Quantum factorial `[1][2]...[k]`.
pub fn qfact(k: u32) -> Scalar {
    (1..=k as i64).fold(Scalar::one(), |acc, j| acc.mul(&qint(j)))
}

/// Loop value `delta = 1 + (r - r^{-1}) / qhat`, the scalar with `e_i^2 = delta e_i`.
///
/// Multiplying `g_i^2 = 1 + qhat g_i - r^{-1} qhat e_i` on the right by `e_i`
/// and using `g_i e_i = r^{-1} e_i` twice gives
/// `r^{-2} e_i = e_i + qhat r^{-1} e_i - r^{-1} qhat e_i^2`, hence the formula.
pub fn delta() -> Scalar {
    let r_minus = Scalar::r().sub(&Scalar::monomial(1, 0, -1));
    Scalar::one().add(&r_minus.div(&qhat()).unwrap()).normalize()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qint_values() {
        assert_eq!(qint(1), Scalar::one());
        assert_eq!(qint(2), Scalar::q().add(&Scalar::q_pow(-1)));
        // [3] = q^2 + 1 + q^-2, checked by clearing the denominator q - q^-1
        let three = Scalar::q_pow(2).add(&Scalar::one()).add(&Scalar::q_pow(-2));
        assert_eq!(qint(3), three);
        assert_eq!(qint(3).mul(&qhat()), Scalar::q_pow(3).sub(&Scalar::q_pow(-3)));
        assert_eq!(qint(-4), qint(4).neg());
        assert!(qint(0).is_zero());
    }

    #[test]
    fn qfact_recursion() {
        assert_eq!(qfact(0), Scalar::one());
        for k in 1..=8 {
            assert_eq!(qfact(k), qfact(k - 1).mul(&qint(k as i64)));
        }
    }

    #[test]
    fn delta_closed_form() {
        // delta = (qhat + r - r^-1) / qhat
        let rhs = qhat()
            .add(&Scalar::r())
            .sub(&Scalar::monomial(1, 0, -1))
            .div(&qhat())
            .unwrap();
        assert_eq!(delta(), rhs);
        // and it factors as (r + q)(q r - 1) / (r (q^2 - 1))
        let num = Scalar::r().add(&Scalar::q()).mul(&Scalar::monomial(1, 1, 1).sub(&Scalar::one()));
        let den = Scalar::r().mul(&Scalar::q_pow(2).sub(&Scalar::one()));
        assert_eq!(delta(), num.div(&den).unwrap());
    }

    #[test]
    fn gamma_of_simple_values() {
        assert_eq!(Scalar::q().subst_gamma(), Scalar::monomial(-1, -1, 0));
        assert_eq!(qhat().subst_gamma(), qhat());
        let one_minus_qr = Scalar::one().sub(&Scalar::monomial(1, 1, 1));
        let one_plus = Scalar::one().add(&Scalar::monomial(1, -1, 1));
        assert_eq!(
            one_minus_qr.inv().unwrap().subst_gamma(),
            one_plus.inv().unwrap()
        );
    }

    #[test]
    fn inverse_and_cancellation() {
        let a = Scalar::one().sub(&Scalar::monomial(1, 3, 1));
        let b = qint(4);
        let x = a.mul(&b).div(&b.mul(&a)).unwrap();
        assert!(x.is_laurent());
        assert_eq!(x, Scalar::one());
        let y = Scalar::from_int(6).div(&Scalar::from_int(4)).unwrap();
        assert_eq!(alloc::format!("{y}"), "3/(2)");
    }

    #[test]
    fn reducible_leftover_is_still_exact() {
        // q^2 + q r + 1 is not in the trial-divisor families
        let odd = Scalar::from_poly(LaurentPoly::from_terms(alloc::vec![
            ((2, 0), Int::ONE),
            ((1, 1), Int::ONE),
            ((0, 0), Int::ONE)
        ]));
        let x = odd.mul(&odd).inv().unwrap();
        assert_eq!(x.mul(&odd).mul(&odd).normalize(), Scalar::one());
    }
}
