use crate::error::{Error, Result};
use crate::groebner::{GroebnerConfig, Ideal, RingMap, Subalgebra};
use crate::poly::{PolyRing, Polynomial};

/// A polynomial curve `W -> (alpha(W), beta(W))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveParam {
    alpha: Polynomial,
    beta: Polynomial,
}

impl CurveParam {
    /// Both polynomials must live in the same one-variable ring and not both
    /// be constant.
    pub fn new(alpha: Polynomial, beta: Polynomial) -> Result<Self> {
        if alpha.ring() != beta.ring() {
            return Err(Error::RingMismatch);
        }
        if alpha.ring().nvars() != 1 {
            return Err(Error::NotUnivariate(format!(
                "parametrization must live in a one-variable ring, got {}",
                alpha.ring()
            )));
        }
        if alpha.is_constant() && beta.is_constant() {
            return Err(Error::InvalidInput(
                "alpha and beta are both constant".into(),
            ));
        }
        Ok(CurveParam { alpha, beta })
    }

    /// Parses `alpha` and `beta` in `Q[var]`.
    pub fn parse(var: &str, alpha: &str, beta: &str) -> Result<Self> {
        let ring = PolyRing::grevlex(&[var])?;
        Self::new(ring.parse(alpha)?, ring.parse(beta)?)
    }

    pub fn ring(&self) -> &PolyRing {
        self.alpha.ring()
    }

    pub fn variable(&self) -> &str {
        &self.ring().vars()[0]
    }

    pub fn alpha(&self) -> &Polynomial {
        &self.alpha
    }

    pub fn beta(&self) -> &Polynomial {
        &self.beta
    }
}

/// `Q[Z, T]` with grevlex, `Z > T`.
pub(crate) fn plane_ring() -> PolyRing {
    PolyRing::grevlex(&["Z", "T"]).expect("valid ring")
}

/// Generator of the kernel of `Q[Z, T] -> Q[W]`, `Z -> alpha`, `T -> beta`,
/// scaled to integer coefficients with content 1 and a positive grevlex
/// leading coefficient.
pub fn implicitize(param: &CurveParam, config: &GroebnerConfig) -> Result<Polynomial> {
    let plane = plane_ring();
    let map = RingMap::new(
        &plane,
        param.ring(),
        vec![param.alpha.clone(), param.beta.clone()],
    )?;
    let kernel = Subalgebra::with_tags(map.images(), map.source(), config)?.relations();
    match kernel.basis() {
        [f] => Ok(f.primitive()),
        other => Err(Error::Internal(format!(
            "kernel of a curve parametrization should be principal, got {} generators",
            other.len()
        ))),
    }
}

/// Degree of `Q(alpha, beta) ⊆ Q(W)`; 1 means the parametrization is
/// birational onto its image.
pub fn map_degree(param: &CurveParam, config: &GroebnerConfig) -> Result<u32> {
    if param.alpha.is_constant() {
        return Ok(param.beta.degree_in(0));
    }
    let f = implicitize(param, config)?;
    // [Q(W):Q(alpha)] = deg alpha and [Q(alpha,beta):Q(alpha)] = deg_T F.
    let (deg_param, deg_f) = (param.alpha.degree_in(0), f.degree_in(1));
    if deg_f == 0 || deg_param % deg_f != 0 {
        return Err(Error::Internal(format!(
            "parameter degree {} is not a multiple of the curve degree {}",
            deg_param, deg_f
        )));
    }
    Ok(deg_param / deg_f)
}

/// Affine Jacobian criterion: the curve `F = 0` is smooth iff `F` and its
/// partial derivatives generate the unit ideal.
pub fn is_smooth_curve(f: &Polynomial, config: &GroebnerConfig) -> Result<bool> {
    if f.is_constant() {
        return Err(Error::InvalidInput(
            "a curve needs a nonconstant equation".into(),
        ));
    }
    let ring = f.ring();
    let mut gens = vec![f.clone()];
    gens.extend((0..ring.nvars()).map(|i| f.derivative_at(i)));
    Ok(Ideal::new(ring, gens)?.groebner(config)?.is_unit())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> GroebnerConfig {
        GroebnerConfig::default()
    }

    #[test]
    fn implicit_equations() {
        let zt = plane_ring();
        let cusp = CurveParam::parse("W", "W^2", "W^3").unwrap();
        assert_eq!(
            implicitize(&cusp, &cfg()).unwrap(),
            zt.parse("Z^3 - T^2").unwrap()
        );
        let diag = CurveParam::parse("W", "W", "W").unwrap();
        assert_eq!(
            implicitize(&diag, &cfg()).unwrap(),
            zt.parse("Z - T").unwrap()
        );
        for n in 2..=3 {
            let p = CurveParam::parse("W", &format!("W^{n}"), &format!("W*(W^{n}+1)")).unwrap();
            let expected = zt.parse(&format!("Z*(Z+1)^{n} - T^{n}")).unwrap();
            let f = implicitize(&p, &cfg()).unwrap();
            assert!(f == expected || f == -&expected, "n = {}: {}", n, f);
        }
    }

    #[test]
    fn degrees_of_parametrizations() {
        let deg =
            |a: &str, b: &str| map_degree(&CurveParam::parse("W", a, b).unwrap(), &cfg()).unwrap();
        assert_eq!(deg("W^2", "W^3"), 1);
        assert_eq!(deg("W", "W"), 1);
        assert_eq!(deg("W^2", "W^4"), 2);
        assert_eq!(deg("3", "W^2 + W"), 2);
        assert_eq!(deg("3", "W"), 1);
        assert_eq!(deg("7", "W^2"), 2);
    }

    #[test]
    fn smoothness() {
        let zt = plane_ring();
        let smooth = |s: &str| is_smooth_curve(&zt.parse(s).unwrap(), &cfg()).unwrap();
        assert!(!smooth("Z^3 - T^2"));
        assert!(smooth("Z"));
        assert!(!smooth("Z*(Z+1)^2 - T^2"));
        assert!(smooth("Z^2 + T^2 - 1"));
        assert!(is_smooth_curve(&zt.int(3), &cfg()).is_err());
    }

    #[test]
    fn parametrization_validation() {
        assert!(CurveParam::parse("W", "1", "2").is_err());
        let r = PolyRing::grevlex(&["A", "B"]).unwrap();
        assert!(CurveParam::new(r.parse("A").unwrap(), r.parse("B").unwrap()).is_err());
        assert!(matches!(
            CurveParam::parse("W", "Q", "W"),
            Err(Error::Parse(_))
        ));
    }
}
