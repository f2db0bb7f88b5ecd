use crate::error::{Error, Result};
use crate::groebner::{GroebnerConfig, Ideal, Membership, RingMap, Subalgebra};
use crate::poly::{PolyRing, Polynomial};

/// Presentation data for `A[V]/(tV - h)` over `A = Q[base_gens]`.
#[derive(Clone, Debug)]
pub struct TowerStep {
    /// `Q[tags, V]`: one tag per base generator followed by the new variable.
    pub tags: PolyRing,
    /// `t` and `h` written in the tags.
    pub t_tag: Polynomial,
    pub h_tag: Polynomial,
    /// `V * t_tag - h_tag`.
    pub relation: Polynomial,
    /// The relation together with the relations among the base generators.
    pub presentation: Ideal,
    /// `h / t` when it is a polynomial of the ambient ring.
    pub new_generator: Option<Polynomial>,
    /// When `h / t` exists, whether `presentation` is the full kernel of
    /// `Q[tags, V] -> ambient`, `V -> h / t`.
    pub matches_kernel: Option<bool>,
}

fn tag_names(base: &[Polynomial]) -> Vec<String> {
    let bare: Vec<Option<String>> = base
        .iter()
        .map(|g| {
            let support = g.support();
            let is_var = g.len() == 1
                && support.len() == 1
                && g.degree() == Some(1)
                && g.leading_coeff()
                    .is_some_and(|c| *c == num_traits::One::one());
            is_var.then(|| g.ring().vars()[support[0]].clone())
        })
        .collect();
    let mut names: Vec<String> = bare
        .iter()
        .enumerate()
        .map(|(i, b)| b.clone().unwrap_or_else(|| format!("T{}", i + 1)))
        .collect();
    let mut seen = std::collections::HashSet::new();
    if !names.iter().all(|n| seen.insert(n.clone())) {
        names = (1..=base.len()).map(|i| format!("T{}", i)).collect();
    }
    names
}

fn fresh_name(taken: &[String]) -> String {
    std::iter::once("V".to_string())
        .chain((1..).map(|i| format!("V{}", i)))
        .find(|n| !taken.contains(n))
        .expect("unbounded supply of names")
}

/// One step `A -> A[h/t]` of a tower of subalgebras.
///
/// `t` and `h` must lie in `A = Q[base_gens]`. The step is rejected with
/// [`Error::DegenerateStep`] when `h` lies in `tA`.
pub fn tower_step(
    base_gens: &[Polynomial],
    t: &Polynomial,
    h: &Polynomial,
    config: &GroebnerConfig,
) -> Result<TowerStep> {
    let ambient = base_gens
        .first()
        .map(|g| g.ring().clone())
        .ok_or_else(|| Error::InvalidInput("empty base".into()))?;
    if t.ring() != &ambient || h.ring() != &ambient {
        return Err(Error::RingMismatch);
    }
    if t.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let mut names = tag_names(base_gens);
    let base_tags = PolyRing::grevlex(&names)?;
    let sub = Subalgebra::with_tags(base_gens, &base_tags, config)?;
    let witness = |p: &Polynomial, what: &str| match sub.membership(p)? {
        Membership::Yes(w) => Ok(w),
        Membership::No => Err(Error::InvalidInput(format!(
            "{} = {} is not in the base algebra",
            what, p
        ))),
    };
    let t_base = witness(t, "t")?;
    let h_base = witness(h, "h")?;

    let quotient = h.try_divide(t)?;
    if let Some(q) = &quotient {
        if sub.membership(q)?.is_member() {
            return Err(Error::DegenerateStep(format!(
                "h = ({}) * t with the cofactor in the base algebra",
                q
            )));
        }
    }

    names.push(fresh_name(&names));
    let tags = PolyRing::grevlex(&names)?;
    let v = tags.var_at(names.len() - 1);
    let t_tag = t_base.to_ring(&tags)?;
    let h_tag = h_base.to_ring(&tags)?;
    let relation = &(&v * &t_tag) - &h_tag;
    let mut gens = vec![relation.clone()];
    for r in sub.relations().basis() {
        gens.push(r.to_ring(&tags)?);
    }
    let presentation = Ideal::new(&tags, gens)?;

    let matches_kernel = match &quotient {
        Some(q) => {
            let mut images = base_gens.to_vec();
            images.push(q.clone());
            let map = RingMap::new(&tags, &ambient, images)?;
            let kernel = Subalgebra::with_tags(map.images(), map.source(), config)?.relations();
            let ours = presentation.groebner(config)?;
            Some(ours.basis() == kernel.basis())
        }
        None => None,
    };

    Ok(TowerStep {
        tags,
        t_tag,
        h_tag,
        relation,
        presentation,
        new_generator: quotient,
        matches_kernel,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> GroebnerConfig {
        GroebnerConfig::default()
    }

    #[test]
    fn adjoins_cusp_quotient() {
        let r = PolyRing::grevlex(&["X", "Z", "T"]).unwrap();
        let step = tower_step(
            &r.gens(),
            &r.parse("X").unwrap(),
            &r.parse("Z^3 - T^2").unwrap(),
            &cfg(),
        )
        .unwrap();
        assert_eq!(step.tags.vars(), ["X", "Z", "T", "V"]);
        assert_eq!(step.relation, step.tags.parse("X*V - Z^3 + T^2").unwrap());
        assert_eq!(step.presentation.generators().len(), 1);
        assert!(step.new_generator.is_none());
        assert!(step.matches_kernel.is_none());
    }

    #[test]
    fn rejects_multiple_of_t() {
        let r = PolyRing::grevlex(&["X", "Z", "T"]).unwrap();
        let err = tower_step(
            &r.gens(),
            &r.parse("X").unwrap(),
            &r.parse("X*Z").unwrap(),
            &cfg(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::DegenerateStep(_)));
    }

    #[test]
    fn rejects_elements_outside_base() {
        let r = PolyRing::grevlex(&["X", "Z"]).unwrap();
        let base = vec![r.parse("X^2").unwrap()];
        let err = tower_step(
            &base,
            &r.parse("X^2").unwrap(),
            &r.parse("Z").unwrap(),
            &cfg(),
        );
        assert!(matches!(err, Err(Error::InvalidInput(_))));
    }

    #[test]
    fn tag_names_fall_back_on_clash() {
        let r = PolyRing::grevlex(&["T2", "X"]).unwrap();
        let gens = vec![r.parse("T2").unwrap(), r.parse("X^2").unwrap()];
        assert_eq!(tag_names(&gens), ["T1", "T2"]);
        let gens = vec![r.parse("X").unwrap(), r.parse("X^2").unwrap()];
        assert_eq!(tag_names(&gens), ["X", "T2"]);
    }
}
