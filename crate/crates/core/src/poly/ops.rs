use std::collections::HashMap;

use num_traits::{One, Zero};

use super::{Monomial, PolyRing, Polynomial, Rational};
use crate::error::{Error, Result};

impl Polynomial {
    pub fn partial_derivative(&self, var: &str) -> Result<Polynomial> {
        Ok(self.derivative_at(self.ring().var_index(var)?))
    }

    pub fn derivative_at(&self, index: usize) -> Polynomial {
        let terms = self
            .terms()
            .iter()
            .filter(|(m, _)| m.exponent(index) > 0)
            .map(|(m, c)| {
                let e = m.exponent(index);
                let mut d = m.clone();
                d.set_exponent(index, e - 1);
                (d, c * Rational::from_integer(e.into()))
            })
            .collect();
        // Lowering one exponent can reorder terms under grevlex/block orders.
        Polynomial::from_terms(self.ring(), terms)
    }

    /// Ring homomorphism sending variable `i` to `images[i]`. All images must
    /// live in one target ring.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ring().nvars() {
            return Err(Error::InvalidInput(format!(
                "substitution needs {} images, got {}",
                self.ring().nvars(),
                images.len()
            )));
        }
        let target = match images.first() {
            Some(p) => p.ring().clone(),
            None => unreachable!("rings have at least one variable"),
        };
        if images.iter().any(|p| *p.ring() != target) {
            return Err(Error::RingMismatch);
        }
        Ok(self.substitute_into(&target, |i| &images[i]))
    }

    /// Substitution by variable name. Every variable that occurs in `self`
    /// must be assigned; each image must live in `target`.
    pub fn substitute_named(
        &self,
        target: &PolyRing,
        assignment: &[(&str, &Polynomial)],
    ) -> Result<Polynomial> {
        let ring = self.ring();
        let mut images: Vec<Option<&Polynomial>> = vec![None; ring.nvars()];
        for (name, image) in assignment {
            let i = ring.var_index(name)?;
            if image.ring() != target {
                return Err(Error::RingMismatch);
            }
            images[i] = Some(image);
        }
        for i in self.support() {
            if images[i].is_none() {
                return Err(Error::MissingAssignment(ring.vars()[i].clone()));
            }
        }
        let zero = target.zero();
        Ok(self.substitute_into(target, |i| images[i].unwrap_or(&zero)))
    }

    fn substitute_into<'a, F>(&self, target: &PolyRing, image: F) -> Polynomial
    where
        F: Fn(usize) -> &'a Polynomial,
    {
        let n = self.ring().nvars();
        // powers[i][e] = image(i)^e, built lazily
        let mut powers: Vec<Vec<Polynomial>> = vec![Vec::new(); n];
        for (m, _) in self.terms() {
            for (i, &e) in m.exponents().iter().enumerate() {
                let cache = &mut powers[i];
                if cache.is_empty() {
                    cache.push(target.one());
                }
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap() * image(i);
                    cache.push(next);
                }
            }
        }
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in self.terms() {
            let mut term = target.constant(c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    term = &term * &powers[i][e as usize];
                }
            }
            for (tm, tc) in term.into_terms() {
                *acc.entry(tm).or_insert_with(Rational::zero) += tc;
            }
        }
        Polynomial::from_map(target, acc)
    }

    /// Multivariate division by a single polynomial: returns `(q, r)` with
    /// `self = q*divisor + r` and no term of `r` divisible by the leading
    /// monomial of `divisor`.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        if self.ring() != divisor.ring() {
            return Err(Error::RingMismatch);
        }
        let (lm, lc) = divisor.leading_term().ok_or(Error::DivisionByZero)?;
        let lc_inv = lc.recip();
        let ring = self.ring();
        let mut rest = self.clone();
        let mut quot: Vec<(Monomial, Rational)> = Vec::new();
        let mut rem: Vec<(Monomial, Rational)> = Vec::new();
        while let Some((m, c)) = rest.leading_term().cloned() {
            match m.checked_div(lm) {
                Some(shift) => {
                    let factor = &c * &lc_inv;
                    rest = &rest - &divisor.mul_term(&shift, &factor);
                    quot.push((shift, factor));
                }
                None => {
                    rest = &rest - &Polynomial::monomial(ring, m.clone(), c.clone());
                    rem.push((m, c));
                }
            }
        }
        Ok((
            Polynomial::from_terms(ring, quot),
            Polynomial::from_terms(ring, rem),
        ))
    }

    /// `self / divisor`, provided the division is exact.
    pub fn exact_divide(&self, divisor: &Polynomial) -> Result<Polynomial> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotDivisible)
        }
    }

    /// `Some(self / divisor)` when `divisor` divides `self`.
    pub fn try_divide(&self, divisor: &Polynomial) -> Result<Option<Polynomial>> {
        match self.exact_divide(divisor) {
            Ok(q) => Ok(Some(q)),
            Err(Error::NotDivisible) => Ok(None),
            Err(e) => Err(e),
        }
    }
}

/// Monic gcd of two polynomials that involve at most one (common) variable.
/// `gcd(0, 0) = 0`.
pub fn univariate_gcd(p: &Polynomial, q: &Polynomial) -> Result<Polynomial> {
    if p.ring() != q.ring() {
        return Err(Error::RingMismatch);
    }
    let mut support = p.support();
    support.extend(q.support());
    support.sort_unstable();
    support.dedup();
    if support.len() > 1 {
        let names: Vec<_> = support
            .iter()
            .map(|&i| p.ring().vars()[i].as_str())
            .collect();
        return Err(Error::NotUnivariate(format!(
            "gcd operands involve {}",
            names.join(", ")
        )));
    }
    let ring = p.ring();
    let var = support.first().copied().unwrap_or(0);
    let mut a = dense(p, var);
    let mut b = dense(q, var);
    while !b.is_empty() {
        let r = dense_rem(&a, &b);
        a = b;
        b = r;
    }
    if a.is_empty() {
        return Ok(ring.zero());
    }
    let lc = a.last().unwrap().clone();
    let terms = a
        .into_iter()
        .enumerate()
        .map(|(e, c)| (Monomial::variable(ring.nvars(), var, e as u32), c / &lc))
        .collect();
    Ok(Polynomial::from_terms(ring, terms))
}

/// Coefficients by ascending degree, trailing zeros trimmed.
fn dense(p: &Polynomial, var: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); p.degree_in(var) as usize + 1];
    for (m, c) in p.terms() {
        out[m.exponent(var) as usize] = c.clone();
    }
    trim(&mut out);
    out
}

fn trim(v: &mut Vec<Rational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn dense_rem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead_inv = Rational::one() / &b[db];
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let f = &r[r.len() - 1] * &lead_inv;
        for (k, c) in b.iter().enumerate() {
            r[shift + k] -= &f * c;
        }
        r.pop();
        trim(&mut r);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(vars: &[&str]) -> PolyRing {
        PolyRing::grevlex(vars).unwrap()
    }

    #[test]
    fn partial_derivatives() {
        let w = ring(&["W"]);
        assert_eq!(
            w.parse("W^3").unwrap().partial_derivative("W").unwrap(),
            w.parse("3*W^2").unwrap()
        );
        let zt = ring(&["Z", "T"]);
        assert!(zt
            .parse("T")
            .unwrap()
            .partial_derivative("Z")
            .unwrap()
            .is_zero());
        let f = zt.parse("Z*(Z+1)^2 - T^2").unwrap();
        assert_eq!(
            f.partial_derivative("T").unwrap(),
            zt.parse("-2*T").unwrap()
        );
        assert!(matches!(
            f.partial_derivative("Q"),
            Err(Error::UnknownVariable(_))
        ));
    }

    #[test]
    fn substitution_into_parametrisations() {
        let zt = ring(&["Z", "T"]);
        let w = ring(&["W"]);
        let cusp = zt.parse("Z^3 - T^2").unwrap();
        let images = [w.parse("W^2").unwrap(), w.parse("W^3").unwrap()];
        assert!(cusp.substitute(&images).unwrap().is_zero());

        let nodal = zt.parse("Z*(Z+1)^2 - T^2").unwrap();
        let images = [w.parse("W^2").unwrap(), w.parse("W*(W^2+1)").unwrap()];
        assert!(nodal.substitute(&images).unwrap().is_zero());

        assert_eq!(nodal.substitute(&zt.gens()).unwrap(), nodal);
    }

    #[test]
    fn named_substitution_errors() {
        let zt = ring(&["Z", "T"]);
        let w = ring(&["W"]);
        let p = zt.parse("Z + T").unwrap();
        let a = w.parse("W").unwrap();
        assert_eq!(
            p.substitute_named(&w, &[("Z", &a)]),
            Err(Error::MissingAssignment("T".into()))
        );
        let stray = zt.parse("Z").unwrap();
        assert_eq!(
            p.substitute_named(&w, &[("Z", &a), ("T", &stray)]),
            Err(Error::RingMismatch)
        );
        assert_eq!(
            p.substitute_named(&w, &[("Z", &a), ("T", &a)]).unwrap(),
            w.parse("2*W").unwrap()
        );
    }

    #[test]
    fn exact_division() {
        let r = ring(&["X1", "Z", "T"]);
        let p = r.parse("X1*Z").unwrap();
        assert_eq!(
            p.exact_divide(&r.parse("X1").unwrap()).unwrap(),
            r.parse("Z").unwrap()
        );
        let q = r
            .parse("Z^2 - T^2")
            .unwrap()
            .exact_divide(&r.parse("Z - T").unwrap())
            .unwrap();
        assert_eq!(q, r.parse("Z + T").unwrap());
        assert_eq!(
            r.parse("Z^2 + T")
                .unwrap()
                .exact_divide(&r.parse("Z").unwrap()),
            Err(Error::NotDivisible)
        );
        assert_eq!(p.exact_divide(&r.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn gcd_examples() {
        let w = ring(&["W"]);
        let g = univariate_gcd(&w.parse("2*W").unwrap(), &w.parse("3*W^2 + 1").unwrap()).unwrap();
        assert_eq!(g, w.one());
        let p = w.parse("2*W^2 + 4").unwrap();
        assert_eq!(
            univariate_gcd(&p, &w.zero()).unwrap(),
            w.parse("W^2 + 2").unwrap()
        );
        let g = univariate_gcd(&w.parse("W^2 - 1").unwrap(), &w.parse("W - 1").unwrap()).unwrap();
        assert_eq!(g, w.parse("W - 1").unwrap());
        assert!(univariate_gcd(&w.zero(), &w.zero()).unwrap().is_zero());
        let zt = ring(&["Z", "T"]);
        assert!(matches!(
            univariate_gcd(&zt.parse("Z").unwrap(), &zt.parse("T").unwrap()),
            Err(Error::NotUnivariate(_))
        ));
    }
}
