//! Coefficient fields with the distinguished parameters `q` and `r`.
//!
//! Everything above the scalar layer is generic over [`Coefficients`], so the
//! same kernel runs on exact rational functions ([`Exact`]) and on a prime
//! field specialization ([`Modular`]).

use core::fmt::Debug;

use crate::laurent::{add_mod, mul_mod};
use crate::modular::{inv_mod, PrimePoint};
use crate::scalar::{self, Scalar};

pub trait Coefficients: Clone {
    type Elem: Clone + Debug + PartialEq;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, v: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// Canonicalizes a value after a batch of ring operations.
    fn normalize(&self, a: Self::Elem) -> Self::Elem {
        a
    }

    /// The parameter `q`.
    fn q(&self) -> Self::Elem;
    /// The parameter `r`.
    fn r(&self) -> Self::Elem;

    /// The same field with `q` replaced by `-q^{-1}`.
    fn gamma(&self) -> Self;

    /// Coefficient substitution `q -> -q^{-1}`, when the field can express it
    /// on values (only the symbolic field can).
    fn subst_gamma(&self, _a: &Self::Elem) -> Option<Self::Elem> {
        None
    }

    /// Whether a value depends on `r`; always `false` when undecidable.
    fn involves_r(&self, _a: &Self::Elem) -> bool {
        false
    }

    fn backend(&self) -> &'static str;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        Some(self.mul(a, &self.inv(b)?))
    }

    fn pow(&self, a: &Self::Elem, k: i32) -> Self::Elem {
        let base = if k < 0 {
            self.inv(a).expect("negative power of zero")
        } else {
            a.clone()
        };
        let mut acc = self.one();
        for _ in 0..k.unsigned_abs() {
            acc = self.mul(&acc, &base);
        }
        self.normalize(acc)
    }

    fn q_pow(&self, k: i32) -> Self::Elem {
        self.pow(&self.q(), k)
    }

    fn r_inv(&self) -> Self::Elem {
        self.inv(&self.r()).expect("r is invertible")
    }

    /// `q - q^{-1}`.
    fn qhat(&self) -> Self::Elem {
        self.normalize(self.sub(&self.q(), &self.q_pow(-1)))
    }

    /// `[k] = (q^k - q^{-k}) / (q - q^{-1})`.
    fn qint(&self, k: i64) -> Self::Elem {
        let k = k as i32;
        let num = self.sub(&self.q_pow(k), &self.q_pow(-k));
        self.normalize(self.div(&num, &self.qhat()).expect("qhat is invertible"))
    }

    fn qfact(&self, k: u32) -> Self::Elem {
        let mut acc = self.one();
        for j in 1..=k {
            acc = self.mul(&acc, &self.qint(j as i64));
        }
        self.normalize(acc)
    }

    /// `delta = 1 + (r - r^{-1}) / qhat`.
    fn delta(&self) -> Self::Elem {
        let num = self.sub(&self.r(), &self.r_inv());
        let x = self.div(&num, &self.qhat()).expect("qhat is invertible");
        self.normalize(self.add(&self.one(), &x))
    }
}

/// The field `Q(q, r)`; with `gamma` set, the distinguished `q` is `-q^{-1}`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Exact {
    pub gamma: bool,
}

impl Exact {
    pub fn new() -> Self {
        Exact { gamma: false }
    }
}

impl Coefficients for Exact {
    type Elem = Scalar;

    fn zero(&self) -> Scalar {
        Scalar::zero()
    }
    fn one(&self) -> Scalar {
        Scalar::one()
    }
    fn from_int(&self, v: i64) -> Scalar {
        Scalar::from_int(v)
    }
    fn is_zero(&self, a: &Scalar) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        a.add(b)
    }
    fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        a.sub(b)
    }
    fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        a.mul(b)
    }
    fn neg(&self, a: &Scalar) -> Scalar {
        a.neg()
    }
    fn inv(&self, a: &Scalar) -> Option<Scalar> {
        a.inv()
    }
    fn normalize(&self, a: Scalar) -> Scalar {
        a.normalize()
    }
    fn q(&self) -> Scalar {
        if self.gamma {
            Scalar::monomial(-1, -1, 0)
        } else {
            Scalar::q()
        }
    }
    fn r(&self) -> Scalar {
        Scalar::r()
    }
    fn gamma(&self) -> Self {
        Exact { gamma: !self.gamma }
    }
    fn subst_gamma(&self, a: &Scalar) -> Option<Scalar> {
        Some(a.subst_gamma())
    }
    fn involves_r(&self, a: &Scalar) -> bool {
        a.involves_r()
    }
    fn backend(&self) -> &'static str {
        "exact"
    }
    fn q_pow(&self, k: i32) -> Scalar {
        if self.gamma {
            let s = if k.rem_euclid(2) == 1 { -1 } else { 1 };
            Scalar::monomial(s, -k, 0)
        } else {
            Scalar::q_pow(k)
        }
    }
    fn qhat(&self) -> Scalar {
        scalar::qhat()
    }
    fn qint(&self, k: i64) -> Scalar {
        if self.gamma && k % 2 == 0 {
            scalar::qint(k).neg()
        } else {
            scalar::qint(k)
        }
    }
    fn delta(&self) -> Scalar {
        scalar::delta()
    }
}

/// The prime field `F_p` with `q`, `r` specialized at a [`PrimePoint`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Modular {
    pub point: PrimePoint,
}

impl Modular {
    pub fn new(point: PrimePoint) -> Self {
        Modular { point }
    }

    fn p(&self) -> u64 {
        self.point.p
    }

    /// Image of an exact scalar; `None` when its denominator vanishes here.
    pub fn specialize(&self, s: &Scalar) -> Option<u64> {
        let pt = &self.point;
        s.eval_mod(pt.p, pt.q0, pt.q_inv(), pt.r0, pt.r_inv()).ok()
    }
}

impl Coefficients for Modular {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_int(&self, v: i64) -> u64 {
        (v as i128).rem_euclid(self.p() as i128) as u64
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        add_mod(*a, *b, self.p())
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        add_mod(*a, self.p() - b, self.p())
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mul_mod(*a, *b, self.p())
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p() - a
        }
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            Some(inv_mod(*a, self.p()))
        }
    }
    fn q(&self) -> u64 {
        self.point.q0
    }
    fn r(&self) -> u64 {
        self.point.r0
    }
    fn gamma(&self) -> Self {
        let mut point = self.point;
        point.q0 = self.neg(&inv_mod(point.q0, point.p));
        Modular { point }
    }
    fn backend(&self) -> &'static str {
        "modular"
    }
}
