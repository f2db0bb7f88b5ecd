use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::curve::{implicitize, is_smooth_curve, map_degree, plane_ring, CurveParam};
use crate::derivation::{verify_kernel_presentation, Derivation};
use crate::error::{Error, Result};
use crate::groebner::GroebnerConfig;
use crate::poly::{univariate_gcd, PolyRing, Polynomial};
use crate::report::{Check, VerificationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BundleFlags {
    /// `gcd(alpha', beta') = 1`.
    pub fpf: bool,
    /// The images of `D` generate the unit ideal.
    pub fpf_ideal: bool,
    pub curve_singular: bool,
    pub kernel_certified: bool,
    /// The parametrization has map degree 1.
    pub birational: bool,
}

/// The ring `B = Q[X1, X2, X3, X4]`, the derivation
/// `D = X1^m d/dX2 + alpha'(X2) d/dX3 + beta'(X2) d/dX4` and the elements
/// `x1 = X1`, `z = alpha(X2) - X1^m X3`, `t = beta(X2) - X1^m X4`,
/// `y = F(z, t) / X1^m` of its kernel.
#[derive(Clone, Debug)]
pub struct CounterexampleBundle {
    m: u32,
    param: CurveParam,
    f: Polynomial,
    derivation: Derivation,
    x1: Polynomial,
    z: Polynomial,
    t: Polynomial,
    y: Polynomial,
    flags: BundleFlags,
    map_degree: u32,
    warnings: Vec<String>,
    report: VerificationReport,
}

pub const CHECK_IMPLICIT: &str = "implicit_equation";
pub const CHECK_EXACT_DIVISION: &str = "exact_division";
pub const CHECK_FPF: &str = "fpf_cross_check";
pub const CHECK_CLOSED_FORM: &str = "closed_form_derivation";
pub const CHECK_EQUATION: &str = "reference_equation";
pub const CHECK_IDENTITY: &str = "parametrization_identity";

fn ambient_ring() -> PolyRing {
    PolyRing::grevlex(&["X1", "X2", "X3", "X4"]).expect("valid ring")
}

/// Builds the bundle for `A = Q[X1, Y, Z, T]/(X1^m Y - F(Z, T))`.
pub fn build_counterexample(
    m: u32,
    param: &CurveParam,
    config: &GroebnerConfig,
) -> Result<CounterexampleBundle> {
    if m == 0 {
        return Err(Error::InvalidInput("m must be positive".into()));
    }
    let f = implicitize(param, config)?;
    let mut report = VerificationReport::new();

    let on_curve = f.substitute(&[param.alpha().clone(), param.beta().clone()])?;
    report.record(
        CHECK_IMPLICIT,
        on_curve.is_zero(),
        format!("F = {}; F(alpha, beta) = {}", f, on_curve),
    );

    let b = ambient_ring();
    let x1 = b.var_at(0);
    let x2 = b.var_at(1);
    let x1m = x1.pow(m);
    let in_x2 = |p: &Polynomial| p.substitute(std::slice::from_ref(&x2));
    let alpha = in_x2(param.alpha())?;
    let beta = in_x2(param.beta())?;
    let z = &alpha - &(&x1m * &b.var_at(2));
    let t = &beta - &(&x1m * &b.var_at(3));
    let f_zt = f.substitute(&[z.clone(), t.clone()])?;
    let y = f_zt
        .exact_divide(&x1m)
        .map_err(|e| Error::Internal(format!("F(z, t) is not divisible by X1^{}: {}", m, e)))?;
    report.record(CHECK_EXACT_DIVISION, true, format!("F(z, t) = {} * y", x1m));

    let alpha_d = param.alpha().derivative_at(0);
    let beta_d = param.beta().derivative_at(0);
    let derivation = Derivation::new(
        &b,
        vec![b.zero(), x1m.clone(), in_x2(&alpha_d)?, in_x2(&beta_d)?],
    )?;

    let gcd = univariate_gcd(&alpha_d, &beta_d)?;
    let fpf = gcd.is_one();
    let fpf_ideal = derivation.fixed_point_free(config)?;
    report.record(
        CHECK_FPF,
        fpf == fpf_ideal,
        format!(
            "gcd(alpha', beta') = {} ({}); unit ideal of images: {}",
            gcd,
            if fpf {
                "fixed point free"
            } else {
                "has fixed points"
            },
            fpf_ideal
        ),
    );

    let curve_singular = !is_smooth_curve(&f, config)?;
    let degree = map_degree(param, config)?;
    let mut warnings = Vec::new();
    if degree > 1 {
        warnings.push(format!(
            "parametrization is not injective: map degree {}",
            degree
        ));
    }

    let kernel = verify_kernel_presentation(
        &derivation,
        &[x1.clone(), z.clone(), t.clone(), y.clone()],
        &x1,
        config,
    )?;
    let kernel_certified = kernel.overall();
    report.extend(kernel);

    Ok(CounterexampleBundle {
        m,
        param: param.clone(),
        f,
        derivation,
        x1,
        z,
        t,
        y,
        flags: BundleFlags {
            fpf,
            fpf_ideal,
            curve_singular,
            kernel_certified,
            birational: degree == 1,
        },
        map_degree: degree,
        warnings,
        report,
    })
}

/// `m = 1`, `alpha = W^n`, `beta = W(W^n + 1)`, so `F = Z(Z+1)^n - T^n` up to
/// sign. Adds checks comparing against these closed forms.
pub fn example_5_5(n: u32, config: &GroebnerConfig) -> Result<CounterexampleBundle> {
    if n < 2 {
        return Err(Error::InvalidInput(format!(
            "n must be at least 2, got {}",
            n
        )));
    }
    let param = CurveParam::parse("W", &format!("W^{n}"), &format!("W*(W^{n} + 1)"))?;
    let mut bundle = build_counterexample(1, &param, config)?;

    let b = bundle.derivation.ring().clone();
    let expected = Derivation::from_exprs(
        &b,
        &[
            ("X2", "X1"),
            ("X3", &format!("{n}*X2^{}", n - 1)),
            ("X4", &format!("{}*X2^{n} + 1", n + 1)),
        ],
    )?;
    bundle.report.record(
        CHECK_CLOSED_FORM,
        expected == bundle.derivation,
        format!("D = {}", describe(&bundle.derivation)),
    );

    let reference = plane_ring().parse(&format!("Z*(Z + 1)^{n} - T^{n}"))?;
    let matches = bundle.f == reference || bundle.f == -&reference;
    bundle.report.record(
        CHECK_EQUATION,
        matches,
        format!("F = {} against Z(Z+1)^{n} - T^{n}", bundle.f),
    );

    let a = bundle.param.alpha();
    let identity = &(a * &(a + &a.ring().one()).pow(n)) - &bundle.param.beta().pow(n);
    bundle.report.record(
        CHECK_IDENTITY,
        identity.is_zero(),
        format!("alpha(alpha+1)^{n} - beta^{n} = {}", identity),
    );
    Ok(bundle)
}

fn describe(d: &Derivation) -> String {
    let ring = d.ring();
    let parts: Vec<String> = d
        .images()
        .iter()
        .enumerate()
        .filter(|(_, p)| !p.is_zero())
        .map(|(i, p)| format!("({})*d/d{}", p, ring.vars()[i]))
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

impl CounterexampleBundle {
    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn param(&self) -> &CurveParam {
        &self.param
    }

    /// The curve equation in `Q[Z, T]`.
    pub fn f(&self) -> &Polynomial {
        &self.f
    }

    pub fn derivation(&self) -> &Derivation {
        &self.derivation
    }

    pub fn x1(&self) -> &Polynomial {
        &self.x1
    }

    pub fn z(&self) -> &Polynomial {
        &self.z
    }

    pub fn t(&self) -> &Polynomial {
        &self.t
    }

    pub fn y(&self) -> &Polynomial {
        &self.y
    }

    /// `[x1, z, t, y]`.
    pub fn generators(&self) -> [&Polynomial; 4] {
        [&self.x1, &self.z, &self.t, &self.y]
    }

    pub fn flags(&self) -> BundleFlags {
        self.flags
    }

    pub fn map_degree(&self) -> u32 {
        self.map_degree
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    pub fn report(&self) -> &VerificationReport {
        &self.report
    }

    pub fn to_document(&self) -> BundleDocument {
        let ring = self.derivation.ring();
        BundleDocument {
            variables: ring.vars().to_vec(),
            m: self.m,
            parameter: self.param.variable().to_string(),
            alpha: self.param.alpha().render(),
            beta: self.param.beta().render(),
            f: self.f.render(),
            derivation: ring
                .vars()
                .iter()
                .zip(self.derivation.images())
                .map(|(v, p)| (v.clone(), p.render()))
                .collect(),
            generators: GeneratorStrings {
                x1: self.x1.render(),
                z: self.z.render(),
                t: self.t.render(),
                y: self.y.render(),
            },
            flags: self.flags,
            map_degree: self.map_degree,
            warnings: self.warnings.clone(),
            checks: self.report.checks().to_vec(),
            overall: self.report.overall(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorStrings {
    pub x1: String,
    pub z: String,
    pub t: String,
    pub y: String,
}

/// Serialized form of a [`CounterexampleBundle`]. Polynomials are stored in
/// the textual grammar accepted by [`PolyRing::parse`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BundleDocument {
    pub variables: Vec<String>,
    pub m: u32,
    pub parameter: String,
    pub alpha: String,
    pub beta: String,
    #[serde(rename = "F")]
    pub f: String,
    pub derivation: BTreeMap<String, String>,
    pub generators: GeneratorStrings,
    pub flags: BundleFlags,
    pub map_degree: u32,
    pub warnings: Vec<String>,
    pub checks: Vec<Check>,
    pub overall: bool,
}

impl BundleDocument {
    /// Parses every polynomial field back in its ring, keyed by a path such
    /// as `"alpha"`, `"derivation.X2"` or `"generators.y"`.
    pub fn polynomials(&self) -> Result<Vec<(String, Polynomial)>> {
        let w = PolyRing::grevlex(&[self.parameter.as_str()])?;
        let zt = plane_ring();
        let b = PolyRing::grevlex(&self.variables)?;
        let mut out = vec![
            ("alpha".to_string(), w.parse(&self.alpha)?),
            ("beta".to_string(), w.parse(&self.beta)?),
            ("F".to_string(), zt.parse(&self.f)?),
        ];
        for (var, expr) in &self.derivation {
            out.push((format!("derivation.{}", var), b.parse(expr)?));
        }
        let g = &self.generators;
        for (name, expr) in [("x1", &g.x1), ("z", &g.z), ("t", &g.t), ("y", &g.y)] {
            out.push((format!("generators.{}", name), b.parse(expr)?));
        }
        Ok(out)
    }

    /// The polynomial strings in the same order as [`Self::polynomials`].
    pub fn polynomial_strings(&self) -> Vec<&str> {
        let mut out = vec![self.alpha.as_str(), self.beta.as_str(), self.f.as_str()];
        out.extend(self.derivation.values().map(String::as_str));
        let g = &self.generators;
        out.extend([g.x1.as_str(), g.z.as_str(), g.t.as_str(), g.y.as_str()]);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::CheckStatus;

    fn cfg() -> GroebnerConfig {
        GroebnerConfig::default()
    }

    fn param(a: &str, b: &str) -> CurveParam {
        CurveParam::parse("W", a, b).unwrap()
    }

    #[test]
    fn cusp_bundle_has_fixed_points() {
        let bundle = build_counterexample(1, &param("W^2", "W^3"), &cfg()).unwrap();
        let b = bundle.derivation().ring().clone();
        let expected =
            Derivation::from_exprs(&b, &[("X2", "X1"), ("X3", "2*X2"), ("X4", "3*X2^2")]).unwrap();
        assert_eq!(bundle.derivation(), &expected);
        let flags = bundle.flags();
        assert!(!flags.fpf);
        assert!(!flags.fpf_ideal);
        assert!(flags.curve_singular);
        assert!(bundle.report().status_of(CHECK_FPF) == Some(CheckStatus::Pass));
    }

    #[test]
    fn example_bundle_n2() {
        let bundle = example_5_5(2, &cfg()).unwrap();
        let flags = bundle.flags();
        assert!(flags.fpf && flags.fpf_ideal && flags.curve_singular && flags.kernel_certified);
        assert!(bundle.report().overall(), "{}", bundle.report());
        assert_eq!(bundle.map_degree(), 1);
        assert!(bundle.warnings().is_empty());
    }

    #[test]
    fn rectifiable_case() {
        let bundle = build_counterexample(2, &param("W", "W"), &cfg()).unwrap();
        assert_eq!(bundle.f().render(), "Z - T");
        let flags = bundle.flags();
        assert!(!flags.curve_singular);
        assert!(flags.kernel_certified, "{}", bundle.report());
    }

    #[test]
    fn bundle_identities() {
        let bundle = build_counterexample(2, &param("W^2", "W^3 + W"), &cfg()).unwrap();
        let d = bundle.derivation();
        for g in bundle.generators() {
            assert!(d.apply(g).unwrap().is_zero());
        }
        let lhs = bundle
            .f()
            .substitute(&[bundle.z().clone(), bundle.t().clone()])
            .unwrap();
        assert_eq!(lhs, bundle.x1().pow(2) * bundle.y());
    }

    #[test]
    fn non_injective_parametrization_warns() {
        let bundle = build_counterexample(1, &param("W^2", "W^4"), &cfg()).unwrap();
        assert_eq!(bundle.map_degree(), 2);
        assert_eq!(bundle.warnings().len(), 1);
        assert!(!bundle.flags().birational);
    }

    #[test]
    fn document_round_trip() {
        let bundle = example_5_5(2, &cfg()).unwrap();
        let doc = bundle.to_document();
        let json = serde_json::to_string_pretty(&doc).unwrap();
        let back: BundleDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(back, doc);
        let rendered: Vec<String> = back
            .polynomials()
            .unwrap()
            .iter()
            .map(|(_, p)| p.render())
            .collect();
        assert_eq!(rendered, back.polynomial_strings());
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        for key in [
            "variables",
            "m",
            "alpha",
            "beta",
            "F",
            "derivation",
            "generators",
            "flags",
            "checks",
        ] {
            assert!(value.get(key).is_some(), "missing {}", key);
        }
    }

    #[test]
    fn rejects_small_n_and_zero_m() {
        assert!(example_5_5(1, &cfg()).is_err());
        assert!(build_counterexample(0, &param("W", "W"), &cfg()).is_err());
    }
}
