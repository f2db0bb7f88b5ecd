use num_bigint::BigInt;
use num_traits::One;

use super::{Derivation, NilpotencyCertificate};
use crate::error::{Error, Result};
use crate::poly::{Polynomial, Rational};

/// `numerator / base^c_power`, an element of the localization `R[1/base]`.
///
/// Kept in lowest terms: when `c_power > 0`, `base` does not divide
/// `numerator`. With that normalization structural equality is equality in
/// the localization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalizedPoly {
    numerator: Polynomial,
    base: Polynomial,
    c_power: u32,
}

impl LocalizedPoly {
    pub fn new(numerator: Polynomial, base: Polynomial, c_power: u32) -> Result<Self> {
        if base.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if numerator.ring() != base.ring() {
            return Err(Error::RingMismatch);
        }
        let mut numerator = numerator;
        let mut c_power = c_power;
        if numerator.is_zero() {
            c_power = 0;
        }
        while c_power > 0 {
            match numerator.try_divide(&base)? {
                Some(q) => {
                    numerator = q;
                    c_power -= 1;
                }
                None => break,
            }
        }
        Ok(LocalizedPoly {
            numerator,
            base,
            c_power,
        })
    }

    pub fn from_polynomial(p: Polynomial, base: Polynomial) -> Result<Self> {
        Self::new(p, base, 0)
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn base(&self) -> &Polynomial {
        &self.base
    }

    pub fn c_power(&self) -> u32 {
        self.c_power
    }

    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        (self.c_power == 0).then_some(&self.numerator)
    }

    /// `base^k * self`, which is a polynomial when `k >= c_power`.
    pub fn cleared(&self, k: u32) -> Option<Polynomial> {
        let extra = k.checked_sub(self.c_power)?;
        Some(&self.numerator * &self.base.pow(extra))
    }
}

impl Derivation {
    /// Dixmier map `pi(p) = sum_i (-s)^i D^i(p) / (i! c^i)` for the local
    /// slice `s` with `c = D(s)` in the kernel. `pi` is a ring homomorphism
    /// onto `ker(D)[1/c]` that kills `s` and fixes the kernel.
    pub fn dixmier_map(
        &self,
        cert: &NilpotencyCertificate,
        slice: &str,
        p: &Polynomial,
    ) -> Result<LocalizedPoly> {
        let s = self.ring().var(slice)?;
        let c = self.apply(&s)?;
        if c.is_zero() {
            return Err(Error::InvalidInput(format!("D({}) is zero", slice)));
        }
        if !self.apply(&c)?.is_zero() {
            return Err(Error::InvalidInput(format!(
                "D({}) = {} is not in the kernel",
                slice, c
            )));
        }
        let orbit = self.orbit(cert, p)?;
        if orbit.is_empty() {
            return LocalizedPoly::from_polynomial(self.ring().zero(), c);
        }
        let top = orbit.len() - 1;
        let minus_s = -&s;
        let mut parts = Vec::with_capacity(orbit.len());
        let mut factorial = BigInt::one();
        for (i, q) in orbit.iter().enumerate() {
            if i > 0 {
                factorial *= BigInt::from(i);
            }
            let scale = Rational::new(BigInt::one(), factorial.clone());
            let term = &(&minus_s.pow(i as u32) * &c.pow((top - i) as u32)) * q;
            parts.push(term.scale(&scale));
        }
        let numerator = Polynomial::sum(self.ring(), parts.iter());
        LocalizedPoly::new(numerator, c, top as u32)
    }

    /// The Dixmier map applied to an element of the localization. Since
    /// `pi(c) = c`, `pi(a / c^k) = pi(a) / c^k`.
    pub fn dixmier_map_localized(
        &self,
        cert: &NilpotencyCertificate,
        slice: &str,
        value: &LocalizedPoly,
    ) -> Result<LocalizedPoly> {
        let image = self.dixmier_map(cert, slice, value.numerator())?;
        if image.base() != value.base() {
            return Err(Error::InvalidInput(
                "localized value uses a different denominator".into(),
            ));
        }
        LocalizedPoly::new(
            image.numerator().clone(),
            image.base().clone(),
            image.c_power() + value.c_power(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::PolyRing;

    fn example_d() -> Derivation {
        let r = PolyRing::grevlex(&["X1", "X2", "X3", "X4"]).unwrap();
        Derivation::from_exprs(&r, &[("X2", "X1"), ("X3", "2*X2"), ("X4", "3*X2^2 + 1")]).unwrap()
    }

    #[test]
    fn dixmier_examples() {
        let d = example_d();
        let r = d.ring().clone();
        let cert = d.certify_triangular().unwrap();
        let x1 = r.parse("X1").unwrap();

        let pi3 = d.dixmier_map(&cert, "X2", &r.parse("X3").unwrap()).unwrap();
        assert_eq!(pi3.c_power(), 1);
        let z = r.parse("X2^2 - X1*X3").unwrap();
        assert_eq!(pi3.cleared(1).unwrap(), -&z);

        let pi1 = d.dixmier_map(&cert, "X2", &x1).unwrap();
        assert_eq!(pi1.as_polynomial(), Some(&x1));
        let pi2 = d.dixmier_map(&cert, "X2", &r.parse("X2").unwrap()).unwrap();
        assert!(pi2.numerator().is_zero());
        assert_eq!(pi2.c_power(), 0);
    }

    #[test]
    fn slice_preconditions() {
        let d = example_d();
        let r = d.ring().clone();
        let cert = d.certify_triangular().unwrap();
        let p = r.parse("X3").unwrap();
        assert!(d.dixmier_map(&cert, "X1", &p).is_err());
        assert!(d.dixmier_map(&cert, "X3", &p).is_err());
    }

    #[test]
    fn localized_normalisation() {
        let r = PolyRing::grevlex(&["a", "b"]).unwrap();
        let a = r.parse("a").unwrap();
        let l = LocalizedPoly::new(r.parse("a^3*b + a^2").unwrap(), a.clone(), 3).unwrap();
        assert_eq!(l.numerator(), &r.parse("a*b + 1").unwrap());
        assert_eq!(l.c_power(), 1);
        assert_eq!(l.cleared(0), None);
        assert_eq!(l.cleared(2).unwrap(), r.parse("a^2*b + a").unwrap());
        assert_eq!(
            LocalizedPoly::new(a.clone(), r.zero(), 1),
            Err(Error::DivisionByZero)
        );
    }
}
