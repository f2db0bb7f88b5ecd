use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("no image assigned to variable `{0}`")]
    MissingAssignment(String),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("divisor does not divide the dividend")]
    NotDivisible,
    #[error("expected univariate input: {0}")]
    NotUnivariate(String),
    #[error("Groebner basis computation exceeded the step budget of {budget} pair reductions")]
    BudgetExceeded { budget: u64 },
    #[error("derivation is not triangular")]
    NotTriangular,
    #[error("nilpotency certificate does not match the derivation: {0}")]
    InvalidCertificate(String),
    #[error("{0}")]
    InvalidInput(String),
    #[error("degenerate tower step: {0}")]
    DegenerateStep(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub fn is_budget_exceeded(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UndeclaredVariable(String),
    NegativeExponent,
    Malformed(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    /// Byte offset into the input where the problem was detected.
    pub position: usize,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::UndeclaredVariable(v) => {
                write!(f, "undeclared variable `{}` at offset {}", v, self.position)
            }
            ParseErrorKind::NegativeExponent => {
                write!(f, "negative exponent at offset {}", self.position)
            }
            ParseErrorKind::Malformed(msg) => write!(f, "{} at offset {}", msg, self.position),
        }
    }
}

impl std::error::Error for ParseError {}
