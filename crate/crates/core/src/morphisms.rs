//! Index flip, word reversal, the parameter change `q -> -q^{-1}`, and shifts.

use crate::algebra::Algebra;
use crate::element::Element;
use crate::error::Error;
use crate::field::Coefficients;

type Elem<F> = Element<<F as Coefficients>::Elem>;

/// `g_i -> g_{n-i}`, `e_i -> e_{n-i}` without reduction; `n` is the rank of `x`.
pub fn flip_words<F: Coefficients>(f: &F, x: &Elem<F>) -> Elem<F> {
    let n = x.rank();
    x.map_words(f, n, |w| w.map_indices(|i| n - i))
}

/// Word reversal without reduction.
pub fn reverse_words<F: Coefficients>(f: &F, x: &Elem<F>) -> Elem<F> {
    x.map_words(f, x.rank(), |w| w.reversed())
}

/// The automorphism `g_i -> g_{n-i}`, `e_i -> e_{n-i}`, reduced.
pub fn alpha<F: Coefficients>(alg: &Algebra<F>, x: &Elem<F>) -> Result<Elem<F>, Error> {
    x.check_rank()?;
    alg.reduce(&flip_words(alg.field(), x))
}

/// The antiautomorphism fixing every generator, reduced.
pub fn beta<F: Coefficients>(alg: &Algebra<F>, x: &Elem<F>) -> Result<Elem<F>, Error> {
    alg.reduce(&reverse_words(alg.field(), x))
}

/// Coefficient substitution `q -> -q^{-1}` on every term, without reduction.
pub fn gamma_coeffs<F: Coefficients>(f: &F, x: &Elem<F>) -> Result<Elem<F>, Error> {
    let mut out = Element::zero(x.rank());
    for (w, c) in x.terms() {
        out.add_term(f, w.clone(), f.subst_gamma(c).ok_or(Error::GammaUnavailable)?);
    }
    Ok(out)
}

/// The isomorphism onto the algebra at parameter `-q^{-1}`: generators are
/// fixed and coefficients substituted. The rules only involve `qhat` and
/// `r`, which the substitution fixes, so the target reuses the same rules.
pub fn gamma<F: Coefficients>(alg: &Algebra<F>, x: &Elem<F>) -> Result<Elem<F>, Error> {
    alg.reduce(&gamma_coeffs(alg.field(), x)?)
}

/// Raises every index by `k` and places the result in rank `n_target`.
pub fn shift<E: Clone>(x: &Element<E>, k: usize, n_target: usize) -> Result<Element<E>, Error> {
    let top = x.max_index();
    if top > 0 && top + k >= n_target {
        return Err(Error::RankMismatch {
            expected: n_target,
            found: top + k + 1,
        });
    }
    let mut terms = alloc::collections::BTreeMap::new();
    for (w, c) in x.terms() {
        terms.insert(w.map_indices(|i| i + k), c.clone());
    }
    Ok(Element::from_map(n_target, terms))
}
