use super::{buchberger, GroebnerBasis, GroebnerConfig};
use crate::error::{Error, Result};
use crate::poly::{MonomialOrder, PolyRing, Polynomial};

/// Ideal given by generators. Zero generators are dropped, so the zero ideal
/// has an empty generator list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    ring: PolyRing,
    generators: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(ring: &PolyRing, generators: Vec<Polynomial>) -> Result<Self> {
        let mut gens = Vec::with_capacity(generators.len());
        for g in generators {
            if g.ring() != ring {
                return Err(Error::RingMismatch);
            }
            if !g.is_zero() {
                gens.push(g);
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            generators: gens,
        })
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Reduced Gröbner basis under the ring's own order.
    pub fn groebner(&self, config: &GroebnerConfig) -> Result<GroebnerBasis> {
        buchberger(self, self.ring.order(), config)
    }

    /// The ideal generated by `self` together with `extra`.
    pub fn extended(&self, extra: &[Polynomial]) -> Result<Ideal> {
        let mut gens = self.generators.clone();
        gens.extend_from_slice(extra);
        Ideal::new(&self.ring, gens)
    }
}

pub fn normal_form(p: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    gb.normal_form(p)
}

/// `p ∈ ideal`, decided with a grevlex basis.
pub fn ideal_membership(p: &Polynomial, ideal: &Ideal, config: &GroebnerConfig) -> Result<bool> {
    if p.ring() != ideal.ring() {
        return Err(Error::RingMismatch);
    }
    if p.is_zero() {
        return Ok(true);
    }
    buchberger(ideal, &MonomialOrder::GrevLex, config)?.contains(p)
}

/// Reduced grevlex Gröbner basis of `ideal ∩ Q[keep]`, living in a ring on
/// the `keep` variables (kept in their original relative order).
pub fn elimination_basis(
    ideal: &Ideal,
    keep: &[&str],
    config: &GroebnerConfig,
) -> Result<GroebnerBasis> {
    let ring = ideal.ring();
    for k in keep {
        ring.var_index(k)?;
    }
    let kept: Vec<&str> = ring
        .vars()
        .iter()
        .map(String::as_str)
        .filter(|v| keep.contains(v))
        .collect();
    if kept.is_empty() {
        return Err(Error::InvalidInput(
            "elimination must keep at least one variable".into(),
        ));
    }
    let eliminated: Vec<&str> = ring
        .vars()
        .iter()
        .map(String::as_str)
        .filter(|v| !keep.contains(v))
        .collect();
    let mut names = eliminated.clone();
    names.extend(kept.iter());
    let block = PolyRing::new(&names, MonomialOrder::Block(eliminated.len()))?;
    let moved = Ideal::new(
        &block,
        ideal
            .generators()
            .iter()
            .map(|g| g.to_ring(&block))
            .collect::<Result<_>>()?,
    )?;
    let gb = moved.groebner(config)?;

    let target = PolyRing::new(&kept, MonomialOrder::GrevLex)?;
    let n_elim = eliminated.len();
    let basis: Vec<Polynomial> = gb
        .basis()
        .iter()
        .filter(|g| (0..n_elim).all(|i| !g.uses_var(i)))
        .map(|g| g.to_ring(&target))
        .collect::<Result<_>>()?;
    let contracted = Ideal::new(&target, basis.clone())?;
    Ok(GroebnerBasis::from_parts(contracted, target, basis))
}

/// Generators of `ideal ∩ Q[keep]`.
pub fn elimination_ideal(ideal: &Ideal, keep: &[&str], config: &GroebnerConfig) -> Result<Ideal> {
    Ok(elimination_basis(ideal, keep, config)?.ideal().clone())
}
