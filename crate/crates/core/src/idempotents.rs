//! The symmetrizer `S_n`, the antisymmetrizer `A_n`, and the element
//! families their recursions are built from.
//!
//! Family constructors return literal, unreduced sums of words. The
//! recursions multiply and reduce inside one algebra whose rank may exceed
//! `n`; `S_n` then lives on the first `n - 1` generators.

use alloc::vec::Vec;
use core::fmt;

use crate::algebra::Algebra;
use crate::element::Element;
use crate::error::Error;
use crate::field::Coefficients;
use crate::morphisms::shift;
use crate::word::{chain, Kind, Word};

type Elem<F> = Element<<F as Coefficients>::Elem>;

/// Eigenvalue side: `Plus` builds pieces of `S_n` (`g_i -> q`),
/// `Minus` pieces of `A_n` (`g_i -> -q^{-1}`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Plus,
    Minus,
}

/// The eight families. `Tail*` are the two-index pieces `d`, the others
/// take one index `k` and are the factors of the recursions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `e_{k-1}..e_i` then descending `g` from `g_{i-1}`.
    Tail,
    /// `e_1..e_{k-i}` then ascending `g` from `g_{k+1-i}`.
    TailFlipped,
    /// Ascending `g` ending at `g_{i-1}`, then `e_i..e_{k-1}`.
    TailReversed,
    /// Descending `g` ending at `g_{k-i+1}`, then `e_{k-i}..e_1`.
    TailFlippedReversed,
    /// Right factor `b_{k,1}`: descending `g` chains from `g_k`.
    RightDown,
    /// Right factor `b_{1,k}`: ascending `g` chains from `g_1`.
    RightUp,
    /// Left factor `a_{k,1}`: ascending `g` chains ending at `g_k`.
    LeftUp,
    /// Left factor `a_{1,k}`: descending `g` chains ending at `g_1`.
    LeftDown,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::Tail,
        Family::TailFlipped,
        Family::TailReversed,
        Family::TailFlippedReversed,
        Family::RightDown,
        Family::RightUp,
        Family::LeftUp,
        Family::LeftDown,
    ];

    /// Whether the family takes the second index `i`.
    pub fn two_index(self) -> bool {
        matches!(
            self,
            Family::Tail | Family::TailFlipped | Family::TailReversed | Family::TailFlippedReversed
        )
    }

    pub fn label(self) -> &'static str {
        match self {
            Family::Tail => "d",
            Family::TailFlipped => "d'",
            Family::TailReversed => "dbar",
            Family::TailFlippedReversed => "dbar'",
            Family::RightDown => "b(k,1)",
            Family::RightUp => "b(1,k)",
            Family::LeftUp => "a(k,1)",
            Family::LeftDown => "a(1,k)",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Which recursion produced an idempotent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VariantId {
    /// `X_{n-1} * right factor (k,1)`.
    RightB,
    /// `X_{n-1}[1] * right factor (1,k)`.
    ShiftRightB,
    /// `left factor (k,1) * X_{n-1}`.
    LeftA,
    /// `left factor (1,k) * X_{n-1}[1]`.
    ShiftLeftA,
    /// `X_2` times the right factors `(2,1) .. (n-1,1)`.
    Telescoping,
}

impl VariantId {
    pub const ALL: [VariantId; 5] = [
        VariantId::RightB,
        VariantId::ShiftRightB,
        VariantId::LeftA,
        VariantId::ShiftLeftA,
        VariantId::Telescoping,
    ];

    pub fn name(self) -> &'static str {
        match self {
            VariantId::RightB => "right-b",
            VariantId::ShiftRightB => "shift-right-b",
            VariantId::LeftA => "left-a",
            VariantId::ShiftLeftA => "shift-left-a",
            VariantId::Telescoping => "telescoping",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|v| v.name() == s)
    }
}

impl fmt::Display for VariantId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `q^j` or `(-q)^{-j}`.
fn chain_coeff<F: Coefficients>(f: &F, side: Side, j: usize) -> F::Elem {
    let j = j as i32;
    match side {
        Side::Plus => f.q_pow(j),
        Side::Minus => {
            let x = f.q_pow(-j);
            if j % 2 == 1 {
                f.neg(&x)
            } else {
                x
            }
        }
    }
}

/// Prefactor of the correction sum of a one-index family at `k`:
/// `qhat / (1 - q^{2k-1} r)` or `-qhat / (1 + q^{1-2k} r)`.
fn correction_prefactor<F: Coefficients>(f: &F, side: Side, k: usize) -> Result<F::Elem, Error> {
    let k = k as i32;
    let qr = match side {
        Side::Plus => f.neg(&f.mul(&f.q_pow(2 * k - 1), &f.r())),
        Side::Minus => f.mul(&f.q_pow(1 - 2 * k), &f.r()),
    };
    let den = f.normalize(f.add(&f.one(), &qr));
    let x = f.div(&f.qhat(), &den).ok_or(Error::ParameterSingular)?;
    Ok(f.normalize(match side {
        Side::Plus => x,
        Side::Minus => f.neg(&x),
    }))
}

/// Weight of the `i`-th correction term: `q^{2k-2i+1}` or `q^{2i-2k-1}`.
fn correction_weight<F: Coefficients>(f: &F, side: Side, k: usize, i: usize) -> F::Elem {
    let e = 2 * k as i32 - 2 * i as i32 + 1;
    match side {
        Side::Plus => f.q_pow(e),
        Side::Minus => f.q_pow(-e),
    }
}

fn domain(family: Family, k: usize, i: usize) -> Error {
    Error::IndexDomain {
        family: family.label(),
        k,
        i,
    }
}

fn check_top(n: usize, top: usize) -> Result<(), Error> {
    if top >= n.max(1) && top > 0 {
        return Err(Error::RankMismatch {
            expected: n,
            found: top + 1,
        });
    }
    Ok(())
}

/// The two-index pieces; `1 <= i < k`, indices up to `k - 1`.
fn tail<F: Coefficients>(f: &F, n: usize, fam: Family, side: Side, k: usize, i: usize) -> Result<Elem<F>, Error> {
    if i < 1 || i >= k {
        return Err(domain(fam, k, i));
    }
    check_top(n, k - 1)?;
    let mut out = Element::zero(n);
    for j in 0..i {
        let w = match fam {
            Family::Tail => chain(Kind::E, k - 1, k - i, true).concat(&chain(Kind::G, i - 1, j, true)),
            Family::TailFlipped => chain(Kind::E, 1, k - i, false).concat(&chain(Kind::G, k + 1 - i, j, false)),
            Family::TailReversed => chain(Kind::G, i - j, j, false).concat(&chain(Kind::E, i, k - i, false)),
            Family::TailFlippedReversed => {
                chain(Kind::G, k - i + j, j, true).concat(&chain(Kind::E, k - i, k - i, true))
            }
            _ => unreachable!(),
        };
        out.add_term(f, w, chain_coeff(f, side, j));
    }
    Ok(out)
}

/// The one-index factors; `0 <= k < n`.
fn factor<F: Coefficients>(f: &F, n: usize, fam: Family, side: Side, k: usize) -> Result<Elem<F>, Error> {
    if k >= n.max(1) {
        return Err(domain(fam, k, 1));
    }
    let mut out = Element::zero(n);
    for i in 0..=k {
        let w = match fam {
            Family::RightDown => chain(Kind::G, k, i, true),
            Family::RightUp => chain(Kind::G, 1, i, false),
            Family::LeftUp => chain(Kind::G, k + 1 - i, i, false),
            Family::LeftDown => chain(Kind::G, i, i, true),
            _ => unreachable!(),
        };
        out.add_term(f, w, chain_coeff(f, side, i));
    }
    if k == 0 {
        return Ok(out);
    }
    let piece = match fam {
        Family::RightDown => Family::Tail,
        Family::RightUp => Family::TailFlipped,
        Family::LeftUp => Family::TailReversed,
        _ => Family::TailFlippedReversed,
    };
    let pre = correction_prefactor(f, side, k)?;
    for i in 1..=k {
        let c = f.normalize(f.mul(&pre, &correction_weight(f, side, k, i)));
        let d = tail(f, n, piece, side, k + 1, i)?;
        out = out.add(f, &d.scale(f, &c));
    }
    Ok(out)
}

/// A family member as a literal element of rank `n`. One-index families
/// ignore `i`.
pub fn family<F: Coefficients>(f: &F, n: usize, fam: Family, side: Side, k: usize, i: usize) -> Result<Elem<F>, Error> {
    if fam.two_index() {
        tail(f, n, fam, side, k, i)
    } else {
        factor(f, n, fam, side, k)
    }
}

/// `(1 / (q [2])) (1 + q g_1 + q qhat / (1 - q r) e_1)` in rank `n >= 2`.
pub fn symmetrizer_two<F: Coefficients>(f: &F, n: usize) -> Result<Elem<F>, Error> {
    let q = f.q();
    let den = f.normalize(f.sub(&f.one(), &f.mul(&q, &f.r())));
    let ce = f.div(&f.mul(&q, &f.qhat()), &den).ok_or(Error::ParameterSingular)?;
    let scale = f.inv(&f.mul(&q, &f.qint(2))).ok_or(Error::ParameterSingular)?;
    literal_two(f, n, [f.one(), q, ce], &scale)
}

/// `(1 / [2]) (q - g_1 - qhat / (1 + q^{-1} r) e_1)` in rank `n >= 2`.
pub fn antisymmetrizer_two<F: Coefficients>(f: &F, n: usize) -> Result<Elem<F>, Error> {
    let den = f.normalize(f.add(&f.one(), &f.mul(&f.q_pow(-1), &f.r())));
    let ce = f.neg(&f.div(&f.qhat(), &den).ok_or(Error::ParameterSingular)?);
    let scale = f.inv(&f.qint(2)).ok_or(Error::ParameterSingular)?;
    literal_two(f, n, [f.q(), f.from_int(-1), ce], &scale)
}

fn literal_two<F: Coefficients>(f: &F, n: usize, c: [F::Elem; 3], scale: &F::Elem) -> Result<Elem<F>, Error> {
    check_top(n, 1)?;
    let [c1, cg, ce] = c;
    let mut x = Element::zero(n);
    x.add_term(f, Word::empty(), c1);
    x.add_term(f, chain(Kind::G, 1, 1, true), cg);
    x.add_term(f, chain(Kind::E, 1, 1, true), ce);
    Ok(x.scale(f, scale))
}

/// Normalizing scalar of step `n`: `1 / (q^{n-1} [n])` or `q^{n-1} / [n]`.
fn step_scale<F: Coefficients>(f: &F, side: Side, n: usize) -> Result<F::Elem, Error> {
    let qn = f.q_pow(n as i32 - 1);
    let qi = f.qint(n as i64);
    f.normalize_opt(match side {
        Side::Plus => f.inv(&f.mul(&qn, &qi)),
        Side::Minus => f.div(&qn, &qi),
    })
}

trait NormalizeOpt: Coefficients {
    fn normalize_opt(&self, x: Option<Self::Elem>) -> Result<Self::Elem, Error> {
        x.map(|v| self.normalize(v)).ok_or(Error::ParameterSingular)
    }
}

impl<F: Coefficients> NormalizeOpt for F {}

fn idempotent<F: Coefficients>(alg: &Algebra<F>, side: Side, n: usize, variant: VariantId) -> Result<Elem<F>, Error> {
    let f = alg.field();
    let rank = alg.rank();
    if n > rank.max(1) {
        return Err(Error::RankMismatch {
            expected: rank,
            found: n,
        });
    }
    if n <= 1 {
        return Ok(alg.one());
    }
    let (down, up, left_up, left_down) = (Family::RightDown, Family::RightUp, Family::LeftUp, Family::LeftDown);
    let x = match variant {
        VariantId::Telescoping => {
            let mut acc = match side {
                Side::Plus => symmetrizer_two(f, rank)?,
                Side::Minus => antisymmetrizer_two(f, rank)?,
            };
            acc = alg.reduce(&acc)?;
            for k in 2..n {
                acc = alg.mul(&acc, &factor(f, rank, down, side, k)?)?;
                acc = acc.scale(f, &step_scale(f, side, k + 1)?);
            }
            return Ok(acc);
        }
        VariantId::RightB => {
            let prev = idempotent(alg, side, n - 1, variant)?;
            alg.mul(&prev, &factor(f, rank, down, side, n - 1)?)?
        }
        VariantId::ShiftRightB => {
            let prev = shift(&idempotent(alg, side, n - 1, variant)?, 1, rank)?;
            alg.mul(&prev, &factor(f, rank, up, side, n - 1)?)?
        }
        VariantId::LeftA => {
            let prev = idempotent(alg, side, n - 1, variant)?;
            alg.mul(&factor(f, rank, left_up, side, n - 1)?, &prev)?
        }
        VariantId::ShiftLeftA => {
            let prev = shift(&idempotent(alg, side, n - 1, variant)?, 1, rank)?;
            alg.mul(&factor(f, rank, left_down, side, n - 1)?, &prev)?
        }
    };
    Ok(x.scale(f, &step_scale(f, side, n)?))
}

/// `S_n` in the algebra of `alg`, reduced; needs `n <= alg.rank()`.
pub fn symmetrizer<F: Coefficients>(alg: &Algebra<F>, n: usize, variant: VariantId) -> Result<Elem<F>, Error> {
    idempotent(alg, Side::Plus, n, variant)
}

/// `A_n` in the algebra of `alg`, reduced; needs `n <= alg.rank()`.
pub fn antisymmetrizer<F: Coefficients>(alg: &Algebra<F>, n: usize, variant: VariantId) -> Result<Elem<F>, Error> {
    idempotent(alg, Side::Minus, n, variant)
}

/// Which right side the absorption identity takes for `(k, l)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LemmaCase {
    /// `l < k`
    Below,
    /// `l = k > 1`
    Diagonal,
    /// `l = k = 1`
    Corner,
    /// `l = k + 1`
    Above,
    /// `l >= k + 2`
    Far,
}

impl LemmaCase {
    pub fn of(k: usize, l: usize) -> Self {
        if l < k {
            LemmaCase::Below
        } else if l == k {
            if k == 1 {
                LemmaCase::Corner
            } else {
                LemmaCase::Diagonal
            }
        } else if l == k + 1 {
            LemmaCase::Above
        } else {
            LemmaCase::Far
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            LemmaCase::Below => "l<k",
            LemmaCase::Diagonal => "l=k>1",
            LemmaCase::Corner => "l=k=1",
            LemmaCase::Above => "l=k+1",
            LemmaCase::Far => "l>=k+2",
        }
    }
}

/// Both sides of `S_{n-1} d_{n,k} g_l = ...`, reduced, plus the case.
pub fn lemma_sides<F: Coefficients>(
    alg: &Algebra<F>,
    n: usize,
    k: usize,
    l: usize,
) -> Result<(Elem<F>, Elem<F>, LemmaCase), Error> {
    let prev = symmetrizer(alg, n.saturating_sub(1), VariantId::RightB)?;
    lemma_sides_with(alg, &prev, n, k, l)
}

/// [`lemma_sides`] with `S_{n-1}` supplied.
pub fn lemma_sides_with<F: Coefficients>(
    alg: &Algebra<F>,
    prev: &Elem<F>,
    n: usize,
    k: usize,
    l: usize,
) -> Result<(Elem<F>, Elem<F>, LemmaCase), Error> {
    let f = alg.field();
    let rank = alg.rank();
    if n < 2 || n > rank || k < 1 || k >= n || l < 1 || l >= n {
        return Err(Error::IndexDomain {
            family: "lemma",
            k,
            i: l,
        });
    }
    let d = |kk: usize| tail(f, rank, Family::Tail, Side::Plus, n, kk);
    let lhs = alg.product(&[prev, &d(k)?, &alg.g(l)?])?;
    let e_chain = Element::word(f, rank, chain(Kind::E, n - 1, n - l, true));
    let q = f.q();
    let case = LemmaCase::of(k, l);
    let parts: Vec<(F::Elem, Elem<F>)> = match case {
        LemmaCase::Below => {
            let c = f.neg(&f.mul(&f.mul(&q, &f.r_inv()), &f.qhat()));
            alloc::vec![(q, d(k)?), (c, e_chain)]
        }
        LemmaCase::Diagonal => alloc::vec![(q, d(k - 1)?), (f.r_inv(), e_chain)],
        LemmaCase::Corner => alloc::vec![(f.r_inv(), d(k)?)],
        LemmaCase::Above => alloc::vec![
            (f.q_pow(-1), d(k + 1)?),
            (f.qhat(), d(k)?),
            (f.neg(&f.q_pow(2 * k as i32 - 1)), e_chain),
        ],
        LemmaCase::Far => alloc::vec![(q, d(k)?)],
    };
    let mut comb = Element::zero(rank);
    for (c, x) in parts {
        comb = comb.add(f, &x.scale(f, &f.normalize(c)));
    }
    let rhs = alg.mul(prev, &comb)?;
    Ok((lhs, rhs, case))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Exact;
    use crate::scalar::Scalar;

    fn wd(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn tail_words() {
        let f = Exact::new();
        let d = family(&f, 4, Family::Tail, Side::Plus, 4, 2).unwrap();
        let words: Vec<_> = d.words();
        assert!(words.contains(&wd("e3 e2")));
        assert!(words.contains(&wd("e3 e2 g1")));
        assert_eq!(d.coeff(&wd("e3 e2 g1")), Some(&Scalar::q()));
        let m = family(&f, 4, Family::Tail, Side::Minus, 4, 2).unwrap();
        assert_eq!(m.coeff(&wd("e3 e2 g1")), Some(&Scalar::monomial(-1, -1, 0)));
        assert!(family(&f, 4, Family::Tail, Side::Plus, 3, 3).is_err());
        assert!(family(&f, 4, Family::Tail, Side::Plus, 3, 0).is_err());
    }

    #[test]
    fn reversed_and_flipped_tails() {
        let f = Exact::new();
        let w = |fam| family(&f, 5, fam, Side::Plus, 4, 3).unwrap().words();
        assert!(w(Family::TailFlipped).contains(&wd("e1 g2 g3")));
        assert!(w(Family::TailReversed).contains(&wd("g1 g2 e3")));
        assert!(w(Family::TailFlippedReversed).contains(&wd("g3 g2 e1")));
    }

    #[test]
    fn first_right_factor_is_the_two_strand_symmetrizer() {
        let f = Exact::new();
        let b = family(&f, 2, Family::RightDown, Side::Plus, 1, 0).unwrap();
        let s = symmetrizer_two(&f, 2).unwrap();
        let scale = f.inv(&f.mul(&f.q(), &f.qint(2))).unwrap();
        assert_eq!(b.scale(&f, &scale), s);
        assert!(family(&f, 2, Family::RightDown, Side::Plus, 2, 0).is_err());
    }

    #[test]
    fn two_strand_idempotents() {
        let alg = Algebra::new(Exact::new(), 2);
        let s = symmetrizer(&alg, 2, VariantId::RightB).unwrap();
        assert_eq!(s, symmetrizer_two(alg.field(), 2).unwrap());
        assert_eq!(alg.mul(&s, &s).unwrap(), s);
        let a = antisymmetrizer(&alg, 2, VariantId::LeftA).unwrap();
        assert_eq!(alg.mul(&a, &a).unwrap(), a);
        assert!(alg.mul(&s, &a).unwrap().is_zero());
    }

    #[test]
    fn lemma_case_tags() {
        assert_eq!(LemmaCase::of(2, 1), LemmaCase::Below);
        assert_eq!(LemmaCase::of(2, 2), LemmaCase::Diagonal);
        assert_eq!(LemmaCase::of(1, 1), LemmaCase::Corner);
        assert_eq!(LemmaCase::of(1, 2), LemmaCase::Above);
        assert_eq!(LemmaCase::of(1, 3), LemmaCase::Far);
    }

    #[test]
    fn lemma_holds_at_three_strands() {
        let alg = Algebra::new(Exact::new(), 3);
        for k in 1..3 {
            for l in 1..3 {
                let (lhs, rhs, case) = lemma_sides(&alg, 3, k, l).unwrap();
                assert_eq!(lhs, rhs, "k={k} l={l} {}", case.name());
            }
        }
    }
}
