//! The two coefficient backends behind one interface.

use bwm_core::morphisms;
use bwm_core::{Algebra, Coefficients, Element, Error, Exact, Modular, PrimePoint};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

pub type Elem<B> = Element<<B as Coefficients>::Elem>;

pub trait Backend: Coefficients + 'static {
    /// `"exact"`, or a label marking modular results as evidence.
    fn label(&self) -> &'static str;

    /// Coefficient in the `{num, den}` schema.
    fn coeff_json(&self, c: &Self::Elem) -> Value;

    /// Text form that the expression parser reads back.
    fn coeff_text(&self, c: &Self::Elem) -> String;

    /// `gamma` of the element produced by `build`. Backends that cannot
    /// substitute into values rebuild the element at parameter `-q^{-1}`.
    fn gamma_of(
        alg: &Algebra<Self>,
        build: &dyn Fn(&Algebra<Self>) -> Result<Elem<Self>, Error>,
    ) -> Result<Elem<Self>, Error>;
}

fn poly_json(p: &bwm_core::laurent::LaurentPoly) -> Value {
    Value::Array(
        p.terms()
            .iter()
            .map(|((a, b), c)| json!([c.to_string(), a, b]))
            .collect(),
    )
}

impl Backend for Exact {
    fn label(&self) -> &'static str {
        "exact"
    }

    fn coeff_json(&self, c: &Self::Elem) -> Value {
        let c = c.clone().normalize();
        json!({ "num": poly_json(c.numerator()), "den": poly_json(&c.denominator()) })
    }

    fn coeff_text(&self, c: &Self::Elem) -> String {
        c.to_string()
    }

    fn gamma_of(
        alg: &Algebra<Self>,
        build: &dyn Fn(&Algebra<Self>) -> Result<Elem<Self>, Error>,
    ) -> Result<Elem<Self>, Error> {
        morphisms::gamma(alg, &build(alg)?)
    }
}

impl Backend for Modular {
    fn label(&self) -> &'static str {
        "modular-evidence"
    }

    fn coeff_json(&self, c: &u64) -> Value {
        json!({ "num": [[c.to_string(), 0, 0]], "den": [["1", 0, 0]] })
    }

    fn coeff_text(&self, c: &u64) -> String {
        c.to_string()
    }

    fn gamma_of(
        alg: &Algebra<Self>,
        build: &dyn Fn(&Algebra<Self>) -> Result<Elem<Self>, Error>,
    ) -> Result<Elem<Self>, Error> {
        build(&alg.gamma_view())
    }
}

/// `count` specialization points for rank `n`, drawn from `rng`.
pub fn random_points(rng: &mut ChaCha8Rng, prime: u64, n: usize, count: usize) -> Vec<PrimePoint> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let q0 = rng.gen_range(2..prime - 1);
        let r0 = rng.gen_range(2..prime - 1);
        if let Ok(pt) = PrimePoint::new(prime, q0, r0, n as u32) {
            out.push(pt);
        }
    }
    out
}
