//! Ring-map kernels and subalgebra membership via tag variables.
//!
//! For generators `g_1..g_k` of a subalgebra of `Q[X]`, adjoin tags
//! `T_1..T_k` and take the ideal `(T_i - g_i)` in `Q[X, T]` under a block
//! order with the `X` block on top. Its Gröbner basis answers both questions:
//! the elements free of `X` generate the relations among the `g_i`, and a
//! polynomial `p(X)` lies in `Q[g]` exactly when its normal form is free of
//! `X`, in which case the normal form is a witness `P(T)` with `P(g) = p`.

use super::{GroebnerBasis, GroebnerConfig, Ideal};
use crate::error::{Error, Result};
use crate::poly::{MonomialOrder, PolyRing, Polynomial};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    /// Member; the witness lives in the tag ring and evaluates to the input.
    Yes(Polynomial),
    No,
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Yes(_))
    }

    pub fn witness(&self) -> Option<&Polynomial> {
        match self {
            Membership::Yes(w) => Some(w),
            Membership::No => None,
        }
    }
}

/// Homomorphism `source -> target` determined by the images of the source
/// variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingMap {
    source: PolyRing,
    target: PolyRing,
    images: Vec<Polynomial>,
}

impl RingMap {
    pub fn new(source: &PolyRing, target: &PolyRing, images: Vec<Polynomial>) -> Result<Self> {
        if images.len() != source.nvars() {
            return Err(Error::InvalidInput(format!(
                "ring map needs {} images, got {}",
                source.nvars(),
                images.len()
            )));
        }
        if images.iter().any(|p| p.ring() != target) {
            return Err(Error::RingMismatch);
        }
        Ok(RingMap {
            source: source.clone(),
            target: target.clone(),
            images,
        })
    }

    pub fn source(&self) -> &PolyRing {
        &self.source
    }

    pub fn target(&self) -> &PolyRing {
        &self.target
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        if p.ring() != &self.source {
            return Err(Error::RingMismatch);
        }
        p.substitute(&self.images)
    }
}

/// Extra structure imposed on the ambient ring before tagging.
enum Twist<'a> {
    None,
    /// Work in `Q[X]/(c)`.
    Modulo(&'a Polynomial),
    /// Adjoin `1/c`; the last tag variable stands for it.
    Invert(&'a Polynomial),
}

/// Precomputed tag-variable Gröbner basis for a finitely generated subalgebra.
#[derive(Clone, Debug)]
pub struct Subalgebra {
    ambient: PolyRing,
    generators: Vec<Polynomial>,
    tags: PolyRing,
    combined: PolyRing,
    gb: GroebnerBasis,
}

impl Subalgebra {
    /// Tags are named `T1, T2, ...`.
    pub fn new(generators: &[Polynomial], config: &GroebnerConfig) -> Result<Self> {
        let names: Vec<String> = (1..=generators.len()).map(|i| format!("T{}", i)).collect();
        let tags = PolyRing::grevlex(&names)?;
        Self::with_tags(generators, &tags, config)
    }

    /// `tags` has one variable per generator, in order.
    pub fn with_tags(
        generators: &[Polynomial],
        tags: &PolyRing,
        config: &GroebnerConfig,
    ) -> Result<Self> {
        Self::build(generators, tags, Twist::None, config)
    }

    /// Presentation of the image of `Q[tags] -> Q[X]/(c)`.
    pub fn modulo(
        generators: &[Polynomial],
        tags: &PolyRing,
        c: &Polynomial,
        config: &GroebnerConfig,
    ) -> Result<Self> {
        Self::build(generators, tags, Twist::Modulo(c), config)
    }

    fn build(
        generators: &[Polynomial],
        tags: &PolyRing,
        twist: Twist<'_>,
        config: &GroebnerConfig,
    ) -> Result<Self> {
        let ambient = match generators.first() {
            Some(g) => g.ring().clone(),
            None => {
                return Err(Error::InvalidInput(
                    "a subalgebra needs at least one generator".into(),
                ))
            }
        };
        if generators.iter().any(|g| g.ring() != &ambient) {
            return Err(Error::RingMismatch);
        }
        let inverted = matches!(twist, Twist::Invert(_));
        let expected_tags = generators.len() + usize::from(inverted);
        if tags.nvars() != expected_tags {
            return Err(Error::InvalidInput(format!(
                "expected {} tag variables, got {}",
                expected_tags,
                tags.nvars()
            )));
        }
        match twist {
            Twist::Modulo(c) | Twist::Invert(c) if c.ring() != &ambient => {
                return Err(Error::RingMismatch)
            }
            _ => {}
        }

        let n = ambient.nvars();
        let mut names: Vec<String> = ambient.vars().to_vec();
        for t in tags.vars() {
            let mut name = t.clone();
            while names.contains(&name) {
                name.insert(0, '_');
            }
            names.push(name);
        }
        let combined = PolyRing::new(&names, MonomialOrder::Block(n))?;
        let lift: Vec<Option<usize>> = (0..n).map(Some).collect();

        let mut relations = Vec::with_capacity(expected_tags + 1);
        for (k, g) in generators.iter().enumerate() {
            let tag = combined.var_at(n + k);
            relations.push(&tag - &g.remap(&combined, &lift));
        }
        match twist {
            Twist::None => {}
            Twist::Modulo(c) => relations.push(c.remap(&combined, &lift)),
            Twist::Invert(c) => {
                if c.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                let w = combined.var_at(n + generators.len());
                relations.push(&(&c.remap(&combined, &lift) * &w) - &combined.one());
            }
        }
        let gb = Ideal::new(&combined, relations)?.groebner(config)?;
        Ok(Subalgebra {
            ambient,
            generators: generators.to_vec(),
            tags: tags.clone(),
            combined,
            gb,
        })
    }

    pub fn ambient(&self) -> &PolyRing {
        &self.ambient
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn tags(&self) -> &PolyRing {
        &self.tags
    }

    pub fn membership(&self, p: &Polynomial) -> Result<Membership> {
        if p.ring() != &self.ambient {
            return Err(Error::RingMismatch);
        }
        let n = self.ambient.nvars();
        let lift: Vec<Option<usize>> = (0..n).map(Some).collect();
        let nf = self.gb.normal_form(&p.remap(&self.combined, &lift))?;
        if (0..n).any(|i| nf.uses_var(i)) {
            return Ok(Membership::No);
        }
        Ok(Membership::Yes(self.to_tags(&nf)))
    }

    /// Reduced grevlex basis of the relation ideal in the tag ring.
    pub fn relations(&self) -> GroebnerBasis {
        let n = self.ambient.nvars();
        let basis: Vec<Polynomial> = self
            .gb
            .basis()
            .iter()
            .filter(|g| (0..n).all(|i| !g.uses_var(i)))
            .map(|g| self.to_tags(g))
            .collect();
        let ideal = Ideal::new(&self.tags, basis.clone()).expect("tag ring is consistent");
        GroebnerBasis::from_parts(ideal, self.tags.clone(), basis)
    }

    fn to_tags(&self, p: &Polynomial) -> Polynomial {
        let n = self.ambient.nvars();
        let map: Vec<Option<usize>> = (0..self.combined.nvars())
            .map(|i| i.checked_sub(n))
            .collect();
        p.remap(&self.tags, &map)
    }
}

/// Generators of `ker(map)` in the source ring.
pub fn ringmap_kernel(map: &RingMap, config: &GroebnerConfig) -> Result<Ideal> {
    let sub = Subalgebra::with_tags(map.images(), map.source(), config)?;
    Ok(sub.relations().ideal().clone())
}

/// Decides `p ∈ Q[gens]`.
pub fn subalgebra_membership(
    p: &Polynomial,
    gens: &[Polynomial],
    config: &GroebnerConfig,
) -> Result<Membership> {
    Subalgebra::new(gens, config)?.membership(p)
}

/// Decides `p ∈ Q[gens][1/c]` by adjoining a tag `w` with `c*w = 1`. The
/// witness lives in `Q[T1, ..., Tk, w]`. With `c` in `Q[gens]` (the intended
/// use) this is the localization of the subalgebra at `c`.
pub fn localized_subalgebra_membership(
    p: &Polynomial,
    gens: &[Polynomial],
    c: &Polynomial,
    config: &GroebnerConfig,
) -> Result<Membership> {
    if c.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if p.ring() != c.ring() {
        return Err(Error::RingMismatch);
    }
    let mut names: Vec<String> = (1..=gens.len()).map(|i| format!("T{}", i)).collect();
    names.push("w".into());
    let tags = PolyRing::grevlex(&names)?;
    let sub = Subalgebra::build(gens, &tags, Twist::Invert(c), config)?;
    sub.membership(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> GroebnerConfig {
        GroebnerConfig::default()
    }

    #[test]
    fn injective_map_has_zero_kernel() {
        let y = PolyRing::grevlex(&["Y"]).unwrap();
        let w = PolyRing::grevlex(&["W"]).unwrap();
        let map = RingMap::new(&y, &w, vec![w.parse("W^2").unwrap()]).unwrap();
        assert!(ringmap_kernel(&map, &cfg()).unwrap().is_zero());
    }

    #[test]
    fn cusp_kernel() {
        let zt = PolyRing::grevlex(&["Z", "T"]).unwrap();
        let w = PolyRing::grevlex(&["W"]).unwrap();
        let map = RingMap::new(
            &zt,
            &w,
            vec![w.parse("W^2").unwrap(), w.parse("W^3").unwrap()],
        )
        .unwrap();
        let k = ringmap_kernel(&map, &cfg()).unwrap();
        assert_eq!(k.generators(), &[zt.parse("Z^3 - T^2").unwrap()]);
        for g in k.generators() {
            assert!(map.apply(g).unwrap().is_zero());
        }
    }

    #[test]
    fn shared_variable_names_are_kept_apart() {
        // X -> X^2 on Q[X]: injective, the tag must not be confused with X.
        let x = PolyRing::grevlex(&["X"]).unwrap();
        let map = RingMap::new(&x, &x, vec![x.parse("X^2").unwrap()]).unwrap();
        assert!(ringmap_kernel(&map, &cfg()).unwrap().is_zero());
        let map = RingMap::new(&x, &x, vec![x.zero()]).unwrap();
        assert_eq!(
            ringmap_kernel(&map, &cfg()).unwrap().generators(),
            &[x.parse("X").unwrap()]
        );
    }

    #[test]
    fn subalgebra_witnesses() {
        let r = PolyRing::grevlex(&["X1", "X2"]).unwrap();
        let x1 = r.parse("X1").unwrap();
        let m = subalgebra_membership(&x1, std::slice::from_ref(&x1), &cfg()).unwrap();
        let t = PolyRing::grevlex(&["T1"]).unwrap();
        assert_eq!(m, Membership::Yes(t.parse("T1").unwrap()));

        let gens = [r.parse("X1^2").unwrap(), r.parse("X1*X2 + X2^3").unwrap()];
        let p = r.parse("X1^4 - 2*X1^3*X2 - 2*X1^2*X2^3").unwrap();
        let sub = Subalgebra::new(&gens, &cfg()).unwrap();
        let w = sub.membership(&p).unwrap();
        let witness = w.witness().expect("member");
        assert_eq!(witness.substitute(&gens).unwrap(), p);
        assert_eq!(
            sub.membership(&r.parse("X2").unwrap()).unwrap(),
            Membership::No
        );
    }

    #[test]
    fn localized_membership() {
        let r = PolyRing::grevlex(&["X1", "X2"]).unwrap();
        let x1 = r.parse("X1").unwrap();
        let gens = [x1.clone(), r.parse("X1*X2").unwrap()];
        // X2 = (X1*X2)/X1
        let yes =
            localized_subalgebra_membership(&r.parse("X2").unwrap(), &gens, &x1, &cfg()).unwrap();
        assert!(yes.is_member());
        let no = localized_subalgebra_membership(
            &r.parse("X2").unwrap(),
            std::slice::from_ref(&x1),
            &x1,
            &cfg(),
        )
        .unwrap();
        assert_eq!(no, Membership::No);
        assert_eq!(
            localized_subalgebra_membership(&x1, std::slice::from_ref(&x1), &r.zero(), &cfg()),
            Err(Error::DivisionByZero)
        );
    }
}
