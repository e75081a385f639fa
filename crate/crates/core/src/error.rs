use core::fmt;

use crate::word::Word;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Operands live in algebras of different rank, or an index exceeds the rank.
    RankMismatch { expected: usize, found: usize },
    /// Reduction did not finish within the step budget.
    BudgetExhausted { word: Word },
    /// A family constructor was called outside its index domain.
    IndexDomain { family: &'static str, k: usize, i: usize },
    /// A product left the span of the supplied basis.
    ClosureUnstable { word: Word },
    /// A denominator of a constructor vanished at the specialization point.
    ParameterSingular,
    /// A coefficient surviving the Hecke projection still involves `r`.
    NonzeroRDegree { word: Word },
    /// The coefficient field cannot apply `q -> -q^{-1}` to values.
    GammaUnavailable,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::RankMismatch { expected, found } => {
                write!(f, "rank mismatch: expected {expected}, found {found}")
            }
            Error::BudgetExhausted { word } => {
                write!(f, "reduction budget exhausted while rewriting {word}")
            }
            Error::IndexDomain { family, k, i } => {
                write!(f, "index ({k}, {i}) outside the domain of {family}")
            }
            Error::ClosureUnstable { word } => {
                write!(f, "product {word} is not in the span of the basis")
            }
            Error::ParameterSingular => write!(f, "a denominator vanishes at this parameter point"),
            Error::NonzeroRDegree { word } => {
                write!(f, "coefficient of {word} in the Hecke quotient involves r")
            }
            Error::GammaUnavailable => {
                write!(f, "this backend cannot substitute q -> -1/q in coefficients")
            }
        }
    }
}

impl core::error::Error for Error {}
