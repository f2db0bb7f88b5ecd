//! Sparse multivariate polynomials with exact rational coefficients.

mod monomial;
mod ops;
mod order;
mod parse;
mod polynomial;
mod ring;

pub use monomial::Monomial;
pub use ops::univariate_gcd;
pub use order::MonomialOrder;
pub use parse::{parse_rational, render_rational};
pub use polynomial::Polynomial;
pub use ring::PolyRing;

/// Coefficient field. Always kept in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;
