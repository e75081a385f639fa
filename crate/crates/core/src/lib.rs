//! Arithmetic in Birman-Murakami-Wenzl algebras over `Q(q, r)`.
//!
//! The kernel is a complete rewriting system per rank, obtained by
//! completing the defining relations under the degree-lexicographic order.
//! Reduction to normal words is then a canonical form, and equality of
//! elements is decided by reducing their difference.

#![no_std]

extern crate alloc;

pub mod algebra;
pub mod element;
pub mod error;
pub mod field;
pub mod hecke;
pub mod idempotents;
pub mod int;
pub mod laurent;
pub mod linalg;
pub mod rules;
pub mod modular;
pub mod morphisms;
mod normal;
pub mod scalar;
pub mod word;

pub use algebra::{Algebra, Verdict};
pub use element::Element;
pub use error::Error;
pub use field::{Coefficients, Exact, Modular};
pub use modular::PrimePoint;
pub use scalar::Scalar;
pub use word::{GenTok, Kind, Word};
