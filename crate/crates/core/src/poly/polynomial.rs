use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Monomial, PolyRing, Rational};
use crate::error::{Error, Result};

/// An element of a [`PolyRing`].
///
/// Terms are kept sorted in descending order under the ring's monomial order
/// and never carry a zero coefficient, so structural equality is equality of
/// polynomials. The zero polynomial has no terms.
#[derive(Clone)]
pub struct Polynomial {
    ring: PolyRing,
    terms: Vec<(Monomial, Rational)>,
}

impl Polynomial {
    pub fn zero(ring: &PolyRing) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    /// Builds a polynomial from arbitrary terms: like terms are combined,
    /// zeros dropped, and the result sorted.
    pub fn from_terms(ring: &PolyRing, terms: Vec<(Monomial, Rational)>) -> Self {
        let mut acc: HashMap<Monomial, Rational> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            assert_eq!(
                m.nvars(),
                ring.nvars(),
                "monomial arity does not match ring"
            );
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        Self::from_map(ring, acc)
    }

    pub(crate) fn from_map(ring: &PolyRing, acc: HashMap<Monomial, Rational>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let order = ring.order();
        terms.sort_by(|a, b| order.compare(&b.0, &a.0));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Caller guarantees `terms` are sorted descending and free of zeros.
    pub(crate) fn from_sorted_terms(ring: &PolyRing, terms: Vec<(Monomial, Rational)>) -> Self {
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order().compare(&w[0].0, &w[1].0) == Ordering::Greater));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn monomial(ring: &PolyRing, m: Monomial, c: Rational) -> Self {
        if c.is_zero() {
            return Self::zero(ring);
        }
        Polynomial {
            ring: ring.clone(),
            terms: vec![(m, c)],
        }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Rational)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// The constant value, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Rational)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.first().map(|t| &t.1)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Degree in one variable; 0 for the zero polynomial.
    pub fn degree_in(&self, index: usize) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.exponent(index))
            .max()
            .unwrap_or(0)
    }

    /// Indices of the variables that actually occur, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.ring.nvars())
            .filter(|&i| self.terms.iter().any(|(m, _)| m.exponent(i) > 0))
            .collect()
    }

    pub fn uses_var(&self, index: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exponent(index) > 0)
    }

    /// Coefficient of `m` (zero when absent).
    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Multiplies by the single term `c * m`. Monomial orders are
    /// multiplicative, so the term order is preserved.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            Some(lc) if !lc.is_one() => self.scale(&lc.recip()),
            _ => self.clone(),
        }
    }

    /// Scales to integer coefficients with content 1 and a positive leading
    /// coefficient.
    pub fn primitive(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let denom_lcm = self
            .terms
            .iter()
            .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let numer_gcd = self
            .terms
            .iter()
            .map(|(_, c)| (c * Rational::from_integer(denom_lcm.clone())).to_integer())
            .fold(BigInt::zero(), |acc, n| acc.gcd(&n));
        let mut factor = Rational::new(denom_lcm, numer_gcd);
        if self.terms[0].1.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Re-expresses the polynomial in `target`, matching variables by name.
    /// Fails if a variable that occurs here is missing from `target`.
    pub fn to_ring(&self, target: &PolyRing) -> Result<Polynomial> {
        if *target == self.ring {
            return Ok(self.clone());
        }
        let mut map = Vec::with_capacity(self.ring.nvars());
        for (i, name) in self.ring.vars().iter().enumerate() {
            match target.index_of(name) {
                Some(j) => map.push(Some(j)),
                None if self.uses_var(i) => return Err(Error::UnknownVariable(name.clone())),
                None => map.push(None),
            }
        }
        Ok(self.remap(target, &map))
    }

    /// Moves every term along the variable map `map[i] = Some(j)` (variable
    /// `i` of this ring becomes variable `j` of `target`). Variables mapped to
    /// `None` must not occur.
    pub(crate) fn remap(&self, target: &PolyRing, map: &[Option<usize>]) -> Polynomial {
        let n = target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut out = Monomial::one(n);
                for (i, e) in m.exponents().iter().enumerate() {
                    if *e > 0 {
                        let j = map[i].expect("remapped variable must have an image");
                        out.set_exponent(j, out.exponent(j) + e);
                    }
                }
                (out, c.clone())
            })
            .collect();
        Polynomial::from_terms(target, terms)
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut result = self.ring.one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        result
    }

    fn merge(&self, other: &Polynomial, subtract: bool) -> Polynomial {
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match order.compare(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if subtract { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if subtract {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(
            b[j..]
                .iter()
                .map(|(m, c)| (m.clone(), if subtract { -c } else { c.clone() })),
        );
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        if other.terms.len() == 1 {
            return self.mul_term(&other.terms[0].0, &other.terms[0].1);
        }
        if self.terms.len() == 1 {
            return other.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        Polynomial::from_map(&self.ring, acc)
    }

    /// Sum of many polynomials of the same ring, accumulated in one pass.
    pub fn sum<'a, I: IntoIterator<Item = &'a Polynomial>>(
        ring: &PolyRing,
        items: I,
    ) -> Polynomial {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for p in items {
            assert!(p.ring == *ring, "polynomials live in different rings");
            for (m, c) in &p.terms {
                *acc.entry(m.clone()).or_insert_with(Rational::zero) += c;
            }
        }
        Polynomial::from_map(ring, acc)
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {:?}", self.render(), self.ring)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            /// Panics if the operands live in different rings; use the
            /// `checked_*` methods to get an error instead.
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs)
                    .expect("polynomials live in different rings")
            }
        }
        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl $trait<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MonomialOrder;

    fn zt() -> PolyRing {
        PolyRing::grevlex(&["Z", "T"]).unwrap()
    }

    #[test]
    fn identities() {
        let r = zt();
        let p = r.parse("Z^2 - 3*Z*T + 1/2").unwrap();
        assert_eq!(&p + &r.zero(), p);
        assert_eq!(&p * &r.one(), p);
        assert!((&p - &p).is_zero());
        let diff = r.parse("Z - T").unwrap() * r.parse("Z + T").unwrap();
        assert_eq!(diff, r.parse("Z^2 - T^2").unwrap());
    }

    #[test]
    fn pow_matches_repeated_multiplication() {
        let r = zt();
        let p = r.parse("Z + 1").unwrap();
        let mut expected = r.one();
        for _ in 0..3 {
            expected = &expected * &p;
        }
        assert_eq!(p.pow(3), expected);
        assert_eq!(p.pow(3), r.parse("Z^3 + 3*Z^2 + 3*Z + 1").unwrap());
        assert_eq!(p.pow(0), r.one());
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = zt().parse("Z").unwrap();
        let b = PolyRing::grevlex(&["W"]).unwrap().parse("W").unwrap();
        assert_eq!(a.checked_add(&b), Err(Error::RingMismatch));
        let lex = a.to_ring(&zt().with_order(MonomialOrder::Lex)).unwrap();
        assert_eq!(a.checked_mul(&lex), Err(Error::RingMismatch));
    }

    #[test]
    fn primitive_normalisation() {
        let r = zt();
        let p = r.parse("-1/2*Z^2 + 3/4*T").unwrap();
        assert_eq!(p.primitive(), r.parse("2*Z^2 - 3*T").unwrap());
        assert!(r.zero().primitive().is_zero());
    }

    #[test]
    fn to_ring_matches_names() {
        let r = zt();
        let big = PolyRing::grevlex(&["W", "T", "Z"]).unwrap();
        let p = r.parse("Z^2*T + T").unwrap();
        let q = p.to_ring(&big).unwrap();
        assert_eq!(q, big.parse("Z^2*T + T").unwrap());
        assert_eq!(q.to_ring(&r).unwrap(), p);
        let w = big.parse("W").unwrap();
        assert_eq!(w.to_ring(&r), Err(Error::UnknownVariable("W".into())));
    }
}
