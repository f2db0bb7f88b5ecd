//! Exact polynomial algebra over the rationals, Buchberger-based ideal
//! computations, and certificates for locally nilpotent derivations.
//!
//! The crate is organised bottom-up:
//!
//! * [`poly`]: sparse multivariate polynomials with rational coefficients,
//!   monomial orders, a small expression parser and a canonical renderer.
//! * [`groebner`]: reduced Gröbner bases, normal forms, elimination, kernels of
//!   ring maps and subalgebra membership.
//! * [`derivation`]: derivations given by their values on variables, nilpotency
//!   certificates, exponential maps, Dixmier maps and kernel certification.
//! * [`construction`]: implicitization of parametrized curves, the
//!   `X1^m*Y - F(Z,T)` counterexample factory, Winkelmann's derivation and
//!   single tower steps.

pub mod construction;
pub mod derivation;
pub mod error;
pub mod groebner;
pub mod poly;
pub mod report;

pub use error::{Error, ParseError, ParseErrorKind, Result};
pub use poly::{Monomial, MonomialOrder, PolyRing, Polynomial, Rational};
