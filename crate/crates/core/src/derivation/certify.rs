//! Certification that a list of kernel elements generates the whole kernel.
//!
//! Let `A = Q[g_1..g_k] ⊆ A0 = ker D` with `c` among the `g_i`. Then `A = A0`
//! as soon as `A[1/c] = A0[1/c]` and `A/cA -> A0/cA0` is injective. The first
//! condition is witnessed through the Dixmier map of a local slice, whose
//! images generate `A0[1/c]`; the second follows from injectivity of
//! `A/cA -> B/cB`, i.e. from the equality of relation ideals
//! `ker(Q[T] -> B/cB) = ker(Q[T] -> B) + (T_c)`.

use super::{Derivation, NilpotencyCertificate};
use crate::error::{Error, Result};
use crate::groebner::{localized_subalgebra_membership, GroebnerBasis, GroebnerConfig, Subalgebra};
use crate::poly::{PolyRing, Polynomial};
use crate::report::VerificationReport;

pub const CHECK_IN_KERNEL: &str = "candidates_in_kernel";
pub const CHECK_LOCALIZED: &str = "localized_equality";
pub const CHECK_MOD_C: &str = "mod_c_injectivity";

/// Runs the three checks and reports each; `overall` certifies
/// `ker D = Q[candidates]`.
///
/// `D` must be triangular and `c` must be one of the candidates and lie in
/// the kernel.
pub fn verify_kernel_presentation(
    d: &Derivation,
    candidates: &[Polynomial],
    c: &Polynomial,
    config: &GroebnerConfig,
) -> Result<VerificationReport> {
    let cert = d.certify_triangular().ok_or(Error::NotTriangular)?;
    if candidates.iter().any(|g| g.ring() != d.ring()) || c.ring() != d.ring() {
        return Err(Error::RingMismatch);
    }
    let c_index = candidates
        .iter()
        .position(|g| g == c)
        .ok_or_else(|| Error::InvalidInput(format!("{} is not among the candidates", c)))?;
    if c.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if !d.kernel_membership(c)? {
        return Err(Error::InvalidInput(format!("{} is not in the kernel", c)));
    }

    let mut report = VerificationReport::new();

    let outside: Vec<String> = candidates
        .iter()
        .filter(|g| !d.kernel_membership(g).unwrap_or(false))
        .map(|g| g.render())
        .collect();
    report.record(
        CHECK_IN_KERNEL,
        outside.is_empty(),
        if outside.is_empty() {
            format!("D annihilates all {} candidates", candidates.len())
        } else {
            format!("not annihilated: {}", outside.join("; "))
        },
    );

    let tag_names: Vec<String> = (1..=candidates.len()).map(|i| format!("T{}", i)).collect();
    let tags = PolyRing::grevlex(&tag_names)?;
    let sub = Subalgebra::with_tags(candidates, &tags, config)?;

    let (ok, detail) = localized_equality(d, &cert, &sub, c, config)?;
    report.record(CHECK_LOCALIZED, ok, detail);

    let (ok, detail) = mod_c_injectivity(&sub, c, c_index, config)?;
    report.record(CHECK_MOD_C, ok, detail);

    Ok(report)
}

/// A variable `s` with `D(s) = lambda * c^j` for a nonzero constant
/// `lambda`, so that localizing at `D(s)` is localizing at `c`.
fn find_slice(d: &Derivation, c: &Polynomial) -> Result<Option<(usize, u32)>> {
    for (i, image) in d.images().iter().enumerate() {
        if image.is_zero() || !d.kernel_membership(image)? {
            continue;
        }
        let mut rest = image.clone();
        let mut j = 0;
        if !c.is_constant() {
            while let Some(q) = rest.try_divide(c)? {
                rest = q;
                j += 1;
            }
        }
        if rest.is_constant() {
            return Ok(Some((i, j)));
        }
    }
    Ok(None)
}

fn localized_equality(
    d: &Derivation,
    cert: &NilpotencyCertificate,
    sub: &Subalgebra,
    c: &Polynomial,
    config: &GroebnerConfig,
) -> Result<(bool, String)> {
    let ring = d.ring();
    let Some((slice, power)) = find_slice(d, c)? else {
        return Ok((
            false,
            format!(
                "no variable s with D(s) a constant multiple of a power of {}",
                c
            ),
        ));
    };
    let slice_name = ring.vars()[slice].clone();
    let mut via_localization = Vec::new();
    let mut missing = Vec::new();
    for (i, x) in ring.gens().iter().enumerate() {
        let image = d.dixmier_map(cert, &slice_name, x)?;
        let numerator = image.numerator();
        if sub.membership(numerator)?.is_member() {
            continue;
        }
        if localized_subalgebra_membership(numerator, sub.generators(), c, config)?.is_member() {
            via_localization.push(ring.vars()[i].clone());
        } else {
            missing.push(ring.vars()[i].clone());
        }
    }
    let mut detail = format!(
        "slice {} with D({}) = {} (power {} of c = {})",
        slice_name,
        slice_name,
        d.images()[slice],
        power,
        c
    );
    if missing.is_empty() {
        detail.push_str("; every cleared Dixmier image lies in Q[candidates]");
        if !via_localization.is_empty() {
            detail.push_str(&format!(
                " after inverting c (needed for {})",
                via_localization.join(", ")
            ));
        }
    } else {
        detail.push_str(&format!(
            "; Dixmier images outside Q[candidates][1/c]: {}",
            missing.join(", ")
        ));
    }
    Ok((missing.is_empty(), detail))
}

fn mod_c_injectivity(
    sub: &Subalgebra,
    c: &Polynomial,
    c_index: usize,
    config: &GroebnerConfig,
) -> Result<(bool, String)> {
    let tags = sub.tags();
    let relations = sub.relations();
    let lifted = relations.ideal().extended(&[tags.var_at(c_index)])?;
    let expected = lifted.groebner(config)?;
    let reduced = Subalgebra::modulo(sub.generators(), tags, c, config)?.relations();

    let forward = all_in(reduced.basis(), &expected)?;
    let backward = all_in(expected.basis(), &reduced)?;
    let ok = forward && backward;
    let detail = format!(
        "relations mod c: ({}); relations + ({}): ({}){}",
        render_list(reduced.basis()),
        tags.vars()[c_index],
        render_list(expected.basis()),
        if ok { "; equal" } else { "; differ" }
    );
    Ok((ok, detail))
}

fn all_in(polys: &[Polynomial], gb: &GroebnerBasis) -> Result<bool> {
    for p in polys {
        if !gb.contains(p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn render_list(polys: &[Polynomial]) -> String {
    if polys.is_empty() {
        return "0".into();
    }
    polys
        .iter()
        .map(|p| p.render())
        .collect::<Vec<_>>()
        .join(", ")
}
