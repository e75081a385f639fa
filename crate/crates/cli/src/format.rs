//! Element files and text renderings.

use bwm_core::hecke::HeckeElement;
use bwm_core::int::Int;
use bwm_core::laurent::LaurentPoly;
use bwm_core::{Element, Exact, GenTok, Scalar, Word};
use serde_json::{json, Value};

use crate::backend::{Backend, Elem};
use crate::error::{CliError, Result};

fn word_json(w: &Word) -> Value {
    Value::Array(w.tokens().iter().map(|t| Value::String(t.to_string())).collect())
}

/// `{"rank": n, "terms": [{"word": [...], "coeff": {...}}]}` in word order.
pub fn element_json<B: Backend>(f: &B, x: &Elem<B>) -> Value {
    let terms: Vec<Value> = x
        .terms()
        .map(|(w, c)| json!({ "word": word_json(w), "coeff": f.coeff_json(c) }))
        .collect();
    json!({ "rank": x.rank(), "terms": terms })
}

/// Hecke elements use the element schema with the normal word of each `T_w`.
pub fn hecke_json<B: Backend>(f: &B, x: &HeckeElement<B::Elem>) -> Value {
    let mut terms: Vec<(Word, Value)> = x
        .terms()
        .map(|(p, c)| (p.normal_word(), f.coeff_json(c)))
        .collect();
    terms.sort_by(|a, b| a.0.cmp(&b.0));
    let terms: Vec<Value> = terms
        .into_iter()
        .map(|(w, c)| json!({ "word": word_json(&w), "coeff": c }))
        .collect();
    json!({ "rank": x.degree(), "terms": terms })
}

/// A sum of `(coeff)*word` terms that [`crate::expr::parse`] reads back.
pub fn element_text<B: Backend>(f: &B, x: &Elem<B>) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let parts: Vec<String> = x
        .terms()
        .map(|(w, c)| {
            let c = f.coeff_text(c);
            if w.is_empty() {
                format!("({c})")
            } else {
                format!("({c})*{w}")
            }
        })
        .collect();
    parts.join(" + ")
}

pub fn hecke_text<B: Backend>(f: &B, x: &HeckeElement<B::Elem>) -> String {
    let mut terms: Vec<(Word, String)> = x.terms().map(|(p, c)| (p.normal_word(), f.coeff_text(c))).collect();
    terms.sort_by(|a, b| a.0.cmp(&b.0));
    let parts: Vec<String> = terms
        .into_iter()
        .map(|(w, c)| if w.is_empty() { format!("({c})*T()") } else { format!("({c})*T({w})") })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

fn bad(msg: impl Into<String>) -> CliError {
    CliError::Format(msg.into())
}

fn poly_from(v: &Value) -> Result<LaurentPoly> {
    let arr = v.as_array().ok_or_else(|| bad("polynomial must be an array"))?;
    let mut terms = Vec::with_capacity(arr.len());
    for t in arr {
        let (c, a, b) = match t.as_array().map(|x| x.as_slice()) {
            Some([c, a, b]) => (c, a, b),
            _ => return Err(bad("monomial must be [coefficient, q-exponent, r-exponent]")),
        };
        let c = c.as_str().and_then(Int::parse).ok_or_else(|| bad("coefficient must be a decimal string"))?;
        let exp = |x: &Value| x.as_i64().and_then(|v| i32::try_from(v).ok()).ok_or_else(|| bad("bad exponent"));
        terms.push(((exp(a)?, exp(b)?), c));
    }
    Ok(LaurentPoly::from_terms(terms))
}

/// Reads an exact element file.
pub fn element_from_json(v: &Value) -> Result<Element<Scalar>> {
    let f = Exact::new();
    let rank = v["rank"].as_u64().ok_or_else(|| bad("missing rank"))? as usize;
    let terms = v["terms"].as_array().ok_or_else(|| bad("missing terms"))?;
    let mut x = Element::zero(rank);
    for t in terms {
        let toks = t["word"].as_array().ok_or_else(|| bad("missing word"))?;
        let mut w = Vec::with_capacity(toks.len());
        for s in toks {
            let tok = s.as_str().and_then(GenTok::parse).ok_or_else(|| bad("bad token"))?;
            w.push(tok);
        }
        let num = poly_from(&t["coeff"]["num"])?;
        let den = poly_from(&t["coeff"]["den"])?;
        let c = Scalar::from_fraction(num, &den).ok_or_else(|| bad("zero denominator"))?;
        x.add_term(&f, Word::from_tokens(w), c);
    }
    x.check_rank()?;
    Ok(x)
}
