use crate::derivation::Derivation;
use crate::error::Result;
use crate::groebner::GroebnerConfig;
use crate::poly::{PolyRing, Polynomial};
use crate::report::VerificationReport;

/// Winkelmann's derivation of `Q[X, Y, U, V, Z]`: `DX = DY = 0`, `DU = Y`,
/// `DV = X`, `DZ = 1 + XU - YV`, with kernel generators
/// `f = XU - YV`, `g = YZ - (1+f)U`, `h = XZ - (1+f)V`.
#[derive(Clone, Debug)]
pub struct Winkelmann {
    pub derivation: Derivation,
    pub f: Polynomial,
    pub g: Polynomial,
    pub h: Polynomial,
}

impl Winkelmann {
    pub fn new() -> Result<Self> {
        let ring = PolyRing::grevlex(&["X", "Y", "U", "V", "Z"])?;
        let derivation =
            Derivation::from_exprs(&ring, &[("U", "Y"), ("V", "X"), ("Z", "1 + X*U - Y*V")])?;
        Ok(Winkelmann {
            f: ring.parse("X*U - Y*V")?,
            g: ring.parse("Y*Z - (1 + X*U - Y*V)*U")?,
            h: ring.parse("X*Z - (1 + X*U - Y*V)*V")?,
            derivation,
        })
    }

    /// `Y*h - X*g - (1+f)*f`, which vanishes identically.
    pub fn relation_residual(&self) -> Polynomial {
        let ring = self.f.ring();
        let x = ring.var_at(0);
        let y = ring.var_at(1);
        let one_f = &ring.one() + &self.f;
        &(&(&y * &self.h) - &(&x * &self.g)) - &(&one_f * &self.f)
    }
}

/// Checks that `D` is triangular, annihilates `f, g, h`, that the relation
/// `YH - XG - (1+F)F` holds for `(f, g, h)`, and that `D` is fixed point free.
pub fn winkelmann_check(config: &GroebnerConfig) -> Result<VerificationReport> {
    let w = Winkelmann::new()?;
    let d = &w.derivation;
    let mut report = VerificationReport::new();

    match d.certify_triangular() {
        Some(cert) => report.record(
            "triangular",
            true,
            format!(
                "order {}",
                cert.order_names().unwrap_or_default().join(", ")
            ),
        ),
        None => report.record("triangular", false, "no triangular order"),
    }
    for (name, p) in [("f", &w.f), ("g", &w.g), ("h", &w.h)] {
        let image = d.apply(p)?;
        report.record(
            format!("D({}) = 0", name),
            image.is_zero(),
            format!("D({}) = {}", name, image),
        );
    }
    let residual = w.relation_residual();
    report.record(
        "relation_residual",
        residual.is_zero(),
        format!("residual {}", residual),
    );
    let fpf = d.fixed_point_free(config)?;
    report.record(
        "fixed_point_free",
        fpf,
        if fpf {
            "1 lies in (X, Y, 1 + XU - YV)"
        } else {
            "images generate a proper ideal"
        },
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_checks_pass() {
        let report = winkelmann_check(&GroebnerConfig::default()).unwrap();
        assert!(report.overall(), "{}", report);
        assert_eq!(report.checks().len(), 6);
        assert_eq!(
            report.check("relation_residual").unwrap().detail,
            "residual 0"
        );
    }

    #[test]
    fn f_generates_kernel_element() {
        let w = Winkelmann::new().unwrap();
        assert!(w.derivation.apply(&w.f).unwrap().is_zero());
        assert!(w.relation_residual().is_zero());
    }
}
