use std::fmt;
use std::sync::Arc;

use num_traits::One;

use super::{Monomial, MonomialOrder, Polynomial, Rational};
use crate::error::{Error, Result};

#[derive(Debug, PartialEq, Eq, Hash)]
struct RingData {
    vars: Vec<String>,
    order: MonomialOrder,
}

/// A polynomial ring `Q[v1, ..., vn]` together with the monomial order its
/// elements are sorted by. Cheap to clone; two rings are equal when they have
/// the same variables in the same order and the same monomial order.
#[derive(Clone)]
pub struct PolyRing(Arc<RingData>);

impl PolyRing {
    pub fn new<S: AsRef<str>>(vars: &[S], order: MonomialOrder) -> Result<Self> {
        if vars.is_empty() {
            return Err(Error::InvalidRing(
                "a ring needs at least one variable".into(),
            ));
        }
        let mut names: Vec<String> = Vec::with_capacity(vars.len());
        for v in vars {
            let v = v.as_ref();
            if !is_identifier(v) {
                return Err(Error::InvalidRing(format!(
                    "`{}` is not a valid variable name",
                    v
                )));
            }
            if names.iter().any(|n| n == v) {
                return Err(Error::InvalidRing(format!("duplicate variable `{}`", v)));
            }
            names.push(v.to_string());
        }
        Ok(PolyRing(Arc::new(RingData { vars: names, order })))
    }

    /// Ring with the default (grevlex) order.
    pub fn grevlex<S: AsRef<str>>(vars: &[S]) -> Result<Self> {
        Self::new(vars, MonomialOrder::GrevLex)
    }

    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.0.order
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn with_order(&self, order: MonomialOrder) -> PolyRing {
        if *self.order() == order {
            return self.clone();
        }
        PolyRing(Arc::new(RingData {
            vars: self.0.vars.clone(),
            order,
        }))
    }

    /// True when both rings have the same variables (the order may differ).
    pub fn same_variables(&self, other: &PolyRing) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.vars == other.0.vars
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(self)
    }

    pub fn one(&self) -> Polynomial {
        self.constant(Rational::one())
    }

    pub fn constant(&self, c: Rational) -> Polynomial {
        Polynomial::from_terms(self, vec![(Monomial::one(self.nvars()), c)])
    }

    pub fn int(&self, c: i64) -> Polynomial {
        self.constant(Rational::from_integer(c.into()))
    }

    pub fn var(&self, name: &str) -> Result<Polynomial> {
        Ok(self.var_at(self.var_index(name)?))
    }

    pub fn var_at(&self, index: usize) -> Polynomial {
        Polynomial::from_terms(
            self,
            vec![(Monomial::variable(self.nvars(), index, 1), Rational::one())],
        )
    }

    /// All variables as polynomials, in ring order.
    pub fn gens(&self) -> Vec<Polynomial> {
        (0..self.nvars()).map(|i| self.var_at(i)).collect()
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        Polynomial::parse(text, self)
    }
}

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for PolyRing {}

impl fmt::Debug for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{}; {}]", self.0.vars.join(","), self.0.order.name())
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{}]", self.0.vars.join(", "))
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_variable_lists() {
        assert!(PolyRing::grevlex::<&str>(&[]).is_err());
        assert!(PolyRing::grevlex(&["Z", "Z"]).is_err());
        assert!(PolyRing::grevlex(&["2x"]).is_err());
        assert!(PolyRing::grevlex(&["X1", "x_2"]).is_ok());
    }

    #[test]
    fn equality_is_structural() {
        let a = PolyRing::grevlex(&["Z", "T"]).unwrap();
        let b = PolyRing::grevlex(&["Z", "T"]).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, a.with_order(MonomialOrder::Lex));
        assert!(a.same_variables(&a.with_order(MonomialOrder::Lex)));
        assert_ne!(a, PolyRing::grevlex(&["T", "Z"]).unwrap());
    }
}
