//! Derivations of polynomial rings given by their values on the variables.
//!
//! A derivation `D` of `Q[X1..Xn]` is determined by `D(Xi)`; it extends to the
//! whole ring by linearity and the Leibniz rule, i.e.
//! `D(p) = sum_i dp/dXi * D(Xi)`. This module applies and iterates such maps,
//! certifies local nilpotency, builds the exponential `exp(sD)` and the
//! Dixmier map of a local slice, and certifies kernel presentations.

mod certify;
mod dixmier;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use crate::report::{Check, CheckStatus, VerificationReport};
pub use certify::verify_kernel_presentation;
pub use dixmier::LocalizedPoly;

use crate::error::{Error, Result};
use crate::groebner::{GroebnerConfig, Ideal};
use crate::poly::{PolyRing, Polynomial, Rational};

/// Upper bound on iterations used while computing per-variable indices of a
/// triangular derivation. Only reachable for absurdly large exponents.
const INDEX_SEARCH_LIMIT: usize = 1 << 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    ring: PolyRing,
    images: Vec<Polynomial>,
}

/// Outcome of [`Derivation::nilpotency_index`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NilpotencyIndex {
    /// Least `s` with `D^s(p) = 0`.
    Index(usize),
    CapExceeded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertificateKind {
    /// `D(Xi)` only involves variables earlier in `order` (ring indices).
    Triangular { order: Vec<usize> },
    /// Every variable was observed to be nilpotent. Nilpotent elements of a
    /// derivation form a subring, so this also certifies local nilpotency.
    PerVariable,
}

/// Witness that a derivation is locally nilpotent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilpotencyCertificate {
    ring: PolyRing,
    kind: CertificateKind,
    indices: Vec<usize>,
}

impl NilpotencyCertificate {
    pub fn kind(&self) -> &CertificateKind {
        &self.kind
    }

    /// `indices()[i]` is the least `s` with `D^s(Xi) = 0`.
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn max_index(&self) -> usize {
        self.indices.iter().copied().max().unwrap_or(0)
    }

    /// Variable names in triangular order, if triangular.
    pub fn order_names(&self) -> Option<Vec<&str>> {
        match &self.kind {
            CertificateKind::Triangular { order } => Some(
                order
                    .iter()
                    .map(|&i| self.ring.vars()[i].as_str())
                    .collect(),
            ),
            CertificateKind::PerVariable => None,
        }
    }

    /// Upper bound on the nilpotency index of any polynomial of total
    /// degree `d`: `D^a f = 0` and `D^b g = 0` imply `D^(a+b-1)(fg) = 0`.
    pub fn bound_for_degree(&self, d: u32) -> usize {
        (d as usize) * self.max_index().saturating_sub(1) + 1
    }
}

impl Derivation {
    pub fn new(ring: &PolyRing, images: Vec<Polynomial>) -> Result<Self> {
        if images.len() != ring.nvars() {
            return Err(Error::InvalidInput(format!(
                "derivation needs {} images, got {}",
                ring.nvars(),
                images.len()
            )));
        }
        if images.iter().any(|p| p.ring() != ring) {
            return Err(Error::RingMismatch);
        }
        Ok(Derivation {
            ring: ring.clone(),
            images,
        })
    }

    /// Parses `(variable, image)` pairs; unlisted variables map to zero.
    pub fn from_exprs(ring: &PolyRing, images: &[(&str, &str)]) -> Result<Self> {
        let mut out = vec![ring.zero(); ring.nvars()];
        for (var, expr) in images {
            out[ring.var_index(var)?] = ring.parse(expr)?;
        }
        Self::new(ring, out)
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    pub fn image(&self, var: &str) -> Result<&Polynomial> {
        Ok(&self.images[self.ring.var_index(var)?])
    }

    /// The same derivation on a ring with additional variables, which are
    /// sent to zero.
    pub fn extend_to(&self, ring: &PolyRing) -> Result<Derivation> {
        let mut images = vec![ring.zero(); ring.nvars()];
        for (name, img) in self.ring.vars().iter().zip(&self.images) {
            images[ring.var_index(name)?] = img.to_ring(ring)?;
        }
        Derivation::new(ring, images)
    }

    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        if p.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        Ok(self.apply_unchecked(p))
    }

    fn apply_unchecked(&self, p: &Polynomial) -> Polynomial {
        let parts: Vec<Polynomial> = p
            .support()
            .into_iter()
            .filter(|&i| !self.images[i].is_zero())
            .map(|i| &p.derivative_at(i) * &self.images[i])
            .collect();
        Polynomial::sum(&self.ring, parts.iter())
    }

    /// `D^k(p)`.
    pub fn iterate(&self, p: &Polynomial, k: usize) -> Result<Polynomial> {
        let mut q = self.apply(p)?;
        if k == 0 {
            return Ok(p.clone());
        }
        for _ in 1..k {
            if q.is_zero() {
                break;
            }
            q = self.apply_unchecked(&q);
        }
        Ok(q)
    }

    /// Least `s <= cap` with `D^s(p) = 0`; zero for `p = 0`.
    pub fn nilpotency_index(&self, p: &Polynomial, cap: usize) -> Result<NilpotencyIndex> {
        if p.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        let mut q = p.clone();
        for s in 0..=cap {
            if q.is_zero() {
                return Ok(NilpotencyIndex::Index(s));
            }
            if s < cap {
                q = self.apply_unchecked(&q);
            }
        }
        Ok(NilpotencyIndex::CapExceeded)
    }

    pub fn kernel_membership(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.apply(p)?.is_zero())
    }

    /// Searches for a triangular variable order: `D(Xi)` may only involve
    /// variables placed before `Xi`. Among valid orders the one that always
    /// picks the smallest available ring index is returned.
    pub fn certify_triangular(&self) -> Option<NilpotencyCertificate> {
        let n = self.ring.nvars();
        let deps: Vec<Vec<usize>> = self.images.iter().map(|p| p.support()).collect();
        if deps.iter().enumerate().any(|(i, d)| d.contains(&i)) {
            return None;
        }
        let mut placed = vec![false; n];
        let mut order = Vec::with_capacity(n);
        while order.len() < n {
            let next = (0..n).find(|&i| !placed[i] && deps[i].iter().all(|&j| placed[j]))?;
            placed[next] = true;
            order.push(next);
        }
        let indices = self.variable_indices(INDEX_SEARCH_LIMIT)?;
        Some(NilpotencyCertificate {
            ring: self.ring.clone(),
            kind: CertificateKind::Triangular { order },
            indices,
        })
    }

    /// Certificate from per-variable nilpotency indices, each found within
    /// `cap` applications. Works for non-triangular derivations too.
    pub fn certify_by_variable_indices(&self, cap: usize) -> Option<NilpotencyCertificate> {
        let indices = self.variable_indices(cap)?;
        Some(NilpotencyCertificate {
            ring: self.ring.clone(),
            kind: CertificateKind::PerVariable,
            indices,
        })
    }

    fn variable_indices(&self, cap: usize) -> Option<Vec<usize>> {
        (0..self.ring.nvars())
            .map(|i| match self.nilpotency_index(&self.ring.var_at(i), cap) {
                Ok(NilpotencyIndex::Index(s)) => Some(s),
                _ => None,
            })
            .collect()
    }

    fn check_certificate(&self, cert: &NilpotencyCertificate) -> Result<()> {
        if cert.ring != self.ring {
            return Err(Error::InvalidCertificate(
                "certificate is for another ring".into(),
            ));
        }
        for (i, &s) in cert.indices.iter().enumerate() {
            let x = self.ring.var_at(i);
            if !self.iterate(&x, s)?.is_zero() {
                return Err(Error::InvalidCertificate(format!(
                    "D^{}({}) is not zero",
                    s,
                    self.ring.vars()[i]
                )));
            }
        }
        Ok(())
    }

    /// `[p, D p, D^2 p, ...]` up to the last nonzero iterate, checked
    /// against the certificate's bound.
    fn orbit(&self, cert: &NilpotencyCertificate, p: &Polynomial) -> Result<Vec<Polynomial>> {
        if p.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        self.check_certificate(cert)?;
        let bound = cert.bound_for_degree(p.degree().unwrap_or(0));
        let mut out = Vec::new();
        let mut q = p.clone();
        while !q.is_zero() {
            if out.len() >= bound {
                return Err(Error::InvalidCertificate(format!(
                    "iterates of {} outlive the certified bound {}",
                    p, bound
                )));
            }
            let next = self.apply_unchecked(&q);
            out.push(q);
            q = next;
        }
        Ok(out)
    }

    /// `exp(sD)(p) = sum_i s^i D^i(p) / i!` in `Q[X, s]`, where `s` is a
    /// fresh variable appended to the ring.
    pub fn exp_map(
        &self,
        cert: &NilpotencyCertificate,
        param: &str,
        p: &Polynomial,
    ) -> Result<Polynomial> {
        if self.ring.index_of(param).is_some() {
            return Err(Error::InvalidInput(format!(
                "parameter `{}` is already a ring variable",
                param
            )));
        }
        let mut names = self.ring.vars().to_vec();
        names.push(param.to_string());
        let extended = PolyRing::new(&names, self.ring.order().clone())?;
        let s = extended.var_at(self.ring.nvars());
        let orbit = self.orbit(cert, p)?;
        let mut acc = Vec::with_capacity(orbit.len());
        let mut factorial = BigInt::one();
        for (i, q) in orbit.iter().enumerate() {
            if i > 0 {
                factorial *= BigInt::from(i);
            }
            let coeff = Rational::new(BigInt::one(), factorial.clone());
            acc.push(&q.to_ring(&extended)?.scale(&coeff) * &s.pow(i as u32));
        }
        Ok(Polynomial::sum(&extended, acc.iter()))
    }

    /// True when the images `D(Xi)` generate the unit ideal.
    pub fn fixed_point_free(&self, config: &GroebnerConfig) -> Result<bool> {
        if self
            .images
            .iter()
            .any(|p| p.as_constant().is_some_and(|c| !c.is_zero()))
        {
            return Ok(true);
        }
        let ideal = Ideal::new(&self.ring, self.images.clone())?;
        if ideal.is_zero() {
            return Ok(false);
        }
        Ok(ideal.groebner(config)?.is_unit())
    }
}
