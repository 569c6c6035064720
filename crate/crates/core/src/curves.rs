//! Unit-speed spacelike curves on H² and S₁².
//!
//! A timelike-cone slope surface is generated by a curve on the upper sheet
//! of the hyperboloid `<f, f> = -1`, a spacelike-cone surface by a curve on
//! the de Sitter pseudo-sphere `<g, g> = 1`. In both cases the curve must be
//! parametrized by arclength with a spacelike tangent, and its derivative is
//! supplied analytically rather than estimated.

use std::f64::consts::TAU;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::Vec3M;
use crate::diff::central_diff5;
use crate::error::{domain, Error, Result};

/// Tolerance on the quadric, unit-speed and tangency residuals.
pub const CURVE_EPS: f64 = 1e-9;
/// Tolerance on the finite-difference derivative check, relative to `max(1, ‖c′‖_∞)`.
pub const CURVE_FD_EPS: f64 = 1e-6;
const FD_STEP: f64 = 1e-3;

/// Names accepted by [`builtin_curve`].
pub const BUILTIN_CURVES: [&str; 2] = ["h2-geodesic", "s12-circle"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AmbientQuadric {
    /// Upper sheet of `<x, x> = -1`, `x.e1 > 0`.
    H2,
    /// `<x, x> = +1`.
    S12,
}

impl AmbientQuadric {
    /// Value of `<x, x>` on the quadric.
    pub fn level(self) -> f64 {
        match self {
            AmbientQuadric::H2 => -1.0,
            AmbientQuadric::S12 => 1.0,
        }
    }

    pub fn residual(self, p: Vec3M) -> f64 {
        (p.metric_square() - self.level()).abs()
    }
}

impl fmt::Display for AmbientQuadric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AmbientQuadric::H2 => "H2",
            AmbientQuadric::S12 => "S12",
        })
    }
}

type CurveFn = Arc<dyn Fn(f64) -> Vec3M + Send + Sync>;

/// A parametrized curve on one of the ambient quadrics, with its derivative.
#[derive(Clone)]
pub struct SlopeCurve {
    name: String,
    quadric: AmbientQuadric,
    domain: (f64, f64),
    eval: CurveFn,
    derivative: CurveFn,
}

impl SlopeCurve {
    pub fn new<F, D>(
        name: impl Into<String>,
        quadric: AmbientQuadric,
        domain: (f64, f64),
        eval: F,
        derivative: D,
    ) -> Self
    where
        F: Fn(f64) -> Vec3M + Send + Sync + 'static,
        D: Fn(f64) -> Vec3M + Send + Sync + 'static,
    {
        Self {
            name: name.into(),
            quadric,
            domain,
            eval: Arc::new(eval),
            derivative: Arc::new(derivative),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn quadric(&self) -> AmbientQuadric {
        self.quadric
    }

    pub fn domain(&self) -> (f64, f64) {
        self.domain
    }

    pub fn point(&self, v: f64) -> Vec3M {
        (self.eval)(v)
    }

    pub fn tangent(&self, v: f64) -> Vec3M {
        (self.derivative)(v)
    }

    /// `c(v) ∧ c′(v)`. Unit spacelike on H², unit timelike on S₁².
    pub fn binormal(&self, v: f64) -> Vec3M {
        self.point(v).cross(self.tangent(v))
    }
}

impl fmt::Debug for SlopeCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SlopeCurve")
            .field("name", &self.name)
            .field("quadric", &self.quadric)
            .field("domain", &self.domain)
            .finish_non_exhaustive()
    }
}

/// Looks up one of the builtin curves.
///
/// * `h2-geodesic`: `f(v) = (cosh v, 0, sinh v)` on H².
/// * `s12-circle`: `g(v) = (0, cos v, sin v)` on S₁².
///
/// Both default to the parameter interval `[0, 2π]`.
pub fn builtin_curve(name: &str) -> Result<SlopeCurve> {
    match name {
        "h2-geodesic" => Ok(SlopeCurve::new(
            name,
            AmbientQuadric::H2,
            (0.0, TAU),
            |v: f64| Vec3M::new(v.cosh(), 0.0, v.sinh()),
            |v: f64| Vec3M::new(v.sinh(), 0.0, v.cosh()),
        )),
        "s12-circle" => Ok(SlopeCurve::new(
            name,
            AmbientQuadric::S12,
            (0.0, TAU),
            |v: f64| {
                let (s, c) = v.sin_cos();
                Vec3M::new(0.0, c, s)
            },
            |v: f64| {
                let (s, c) = v.sin_cos();
                Vec3M::new(0.0, -s, c)
            },
        )),
        other => Err(Error::UnknownCurve(other.to_string())),
    }
}

/// Maximum residual of each curve invariant over a sample of the domain.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CurveReport {
    pub curve: String,
    pub samples: usize,
    /// `|<c, c> - level|`.
    pub on_quadric: f64,
    /// `|<c′, c′> - 1|`.
    pub unit_speed: f64,
    /// `|<c, c′>|`.
    pub tangency: f64,
    /// `‖Δc - c′‖_∞ / max(1, ‖c′‖_∞)` with a five-point stencil.
    pub derivative_consistency: f64,
    /// H² curves must stay on the sheet `e1 > 0`. Always true for S₁².
    pub upper_sheet: bool,
}

impl CurveReport {
    pub fn on_quadric_ok(&self) -> bool {
        self.on_quadric <= CURVE_EPS && self.upper_sheet
    }

    pub fn unit_speed_ok(&self) -> bool {
        self.unit_speed <= CURVE_EPS
    }

    pub fn tangency_ok(&self) -> bool {
        self.tangency <= CURVE_EPS
    }

    pub fn derivative_ok(&self) -> bool {
        self.derivative_consistency <= CURVE_FD_EPS
    }

    pub fn pass(&self) -> bool {
        self.on_quadric_ok() && self.unit_speed_ok() && self.tangency_ok() && self.derivative_ok()
    }
}

/// Checks the curve contract at `sample_count` uniformly spaced parameters,
/// endpoints included. Failures are reported, not raised.
pub fn validate_curve(curve: &SlopeCurve, sample_count: usize) -> Result<CurveReport> {
    if sample_count < 2 {
        return domain(format!("sample_count must be at least 2, got {sample_count}"));
    }
    let (a, b) = curve.domain();
    let mut report = CurveReport {
        curve: curve.name().to_string(),
        samples: sample_count,
        on_quadric: 0.0,
        unit_speed: 0.0,
        tangency: 0.0,
        derivative_consistency: 0.0,
        upper_sheet: true,
    };
    for k in 0..sample_count {
        let v = lerp(a, b, k, sample_count);
        let c = curve.point(v);
        let d = curve.tangent(v);
        report.on_quadric = report.on_quadric.max(curve.quadric().residual(c));
        report.unit_speed = report.unit_speed.max((d.metric_square() - 1.0).abs());
        report.tangency = report.tangency.max(c.dot(d).abs());
        let fd = central_diff5(|t| curve.point(t), v, FD_STEP);
        let rel = (fd - d).max_abs() / d.max_abs().max(1.0);
        report.derivative_consistency = report.derivative_consistency.max(rel);
        if curve.quadric() == AmbientQuadric::H2 && c.e1 <= 0.0 {
            report.upper_sheet = false;
        }
    }
    Ok(report)
}

/// `k`-th of `n` uniformly spaced points on `[a, b]`, hitting `b` exactly.
pub fn lerp(a: f64, b: f64, k: usize, n: usize) -> f64 {
    if k + 1 == n {
        b
    } else {
        a + (b - a) * (k as f64) / ((n - 1) as f64)
    }
}
