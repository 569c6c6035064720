//! Spacelike constant slope surfaces in Minkowski 3-space.
//!
//! For a unit-speed spacelike curve `c` on H² (timelike cone) or S₁²
//! (spacelike cone), angle `θ > 0` and `u > 0`, the surface is
//!
//! ```text
//! x(u, v) = h(u) (cosh ξ(u) c(v) + sinh ξ(u) c(v) ∧ c′(v))
//! ```
//!
//! with `h(u) = u sinh θ`, `ξ(u) = coth θ ln u` on the timelike cone and
//! `h(u) = u cosh θ`, `ξ(u) = tanh θ ln u` on the spacelike cone.
//!
//! The same point is produced three ways:
//!
//! * [`Construction::Direct`]: the formula above.
//! * [`Construction::Quaternion`]: the split-quaternion product
//!   `Q₁ × Q₂` with `Q₁ = cosh ξ - sinh ξ c′` and `Q₂ = h c`.
//! * [`Construction::Homothetic`]: `h(u) R_Q c(v)`, where `R_Q` is the
//!   rotation matrix of the half-angle quaternion `cosh(ξ/2) - sinh(ξ/2) c′`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{SplitQuaternion, Vec3M};
use crate::curves::{lerp, AmbientQuadric, SlopeCurve};
use crate::diff::central_diff5;
use crate::error::{domain, Error, Result};
use crate::rotation::{rotation_about_axis, slope_quaternion, AngleConvention, LorentzRotation};

/// Relative step for the `u` partial, `h_u = PARTIAL_STEP · max(1, u)`.
pub const PARTIAL_STEP: f64 = 1e-3;
/// Bound on `|S(Q₁ × Q₂)| / h(u)` before the product is declared non-pure.
pub const PURE_PRODUCT_EPS: f64 = 1e-10;
const DEGENERATE_NORMAL_EPS: f64 = 1e-18;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ConeKind {
    /// `<x, x> < 0`; generated by curves on H².
    TimelikeCone,
    /// `<x, x> > 0`; generated by curves on S₁².
    SpacelikeCone,
}

impl ConeKind {
    pub fn quadric(self) -> AmbientQuadric {
        match self {
            ConeKind::TimelikeCone => AmbientQuadric::H2,
            ConeKind::SpacelikeCone => AmbientQuadric::S12,
        }
    }

    pub fn for_quadric(q: AmbientQuadric) -> Self {
        match q {
            AmbientQuadric::H2 => ConeKind::TimelikeCone,
            AmbientQuadric::S12 => ConeKind::SpacelikeCone,
        }
    }

    /// `coth θ` or `tanh θ`.
    pub fn xi_rate(self, theta: f64) -> f64 {
        match self {
            ConeKind::TimelikeCone => 1.0 / theta.tanh(),
            ConeKind::SpacelikeCone => theta.tanh(),
        }
    }

    /// `sinh θ` or `cosh θ`, so that `h(u) = u · scale_factor(θ)`.
    pub fn scale_factor(self, theta: f64) -> f64 {
        match self {
            ConeKind::TimelikeCone => theta.sinh(),
            ConeKind::SpacelikeCone => theta.cosh(),
        }
    }

    /// `ξ(u)` without the `coth 7 ≈ 1` shortcut.
    pub fn exact_xi(self, theta: f64, u: f64) -> Result<f64> {
        check_theta(theta)?;
        check_u(u)?;
        Ok(self.xi_rate(theta) * u.ln())
    }

    /// Sign of `<x, x>` on this cone.
    pub fn position_sign(self) -> f64 {
        match self {
            ConeKind::TimelikeCone => -1.0,
            ConeKind::SpacelikeCone => 1.0,
        }
    }
}

impl fmt::Display for ConeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConeKind::TimelikeCone => "timelike",
            ConeKind::SpacelikeCone => "spacelike",
        })
    }
}

/// How `ξ(u)` is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum XiMode {
    /// `coth θ ln u` or `tanh θ ln u`.
    #[default]
    Exact,
    /// `ln u`, i.e. `coth θ` and `tanh θ` rounded to 1; accurate to ~1e-6
    /// at θ = 7.
    PaperApprox,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Construction {
    Direct,
    Quaternion,
    Homothetic,
}

impl Construction {
    pub const ALL: [Construction; 3] = [
        Construction::Direct,
        Construction::Quaternion,
        Construction::Homothetic,
    ];
}

fn check_theta(theta: f64) -> Result<()> {
    if !(theta > 0.0 && theta.is_finite()) {
        return domain(format!("theta must be positive and finite, got {theta}"));
    }
    Ok(())
}

fn check_u(u: f64) -> Result<()> {
    if !(u > 0.0 && u.is_finite()) {
        return domain(format!("u must be positive and finite, got {u}"));
    }
    Ok(())
}

/// `‖a - b‖_∞ / ‖b‖_∞`.
pub fn relative_error(a: Vec3M, b: Vec3M) -> f64 {
    let scale = b.max_abs();
    let diff = (a - b).max_abs();
    if scale == 0.0 {
        diff
    } else {
        diff / scale
    }
}

/// A constant slope surface: angle, cone, generating curve and `ξ` mode.
#[derive(Debug, Clone)]
pub struct SlopeSurfaceConfig {
    theta: f64,
    cone: ConeKind,
    curve: SlopeCurve,
    xi_mode: XiMode,
}

impl SlopeSurfaceConfig {
    /// Fails if `θ ≤ 0` or the curve does not live on the quadric matching `cone`.
    pub fn new(theta: f64, cone: ConeKind, curve: SlopeCurve, xi_mode: XiMode) -> Result<Self> {
        check_theta(theta)?;
        if curve.quadric() != cone.quadric() {
            return domain(format!(
                "curve `{}` lies on {} but the {} cone needs a curve on {}",
                curve.name(),
                curve.quadric(),
                cone,
                cone.quadric()
            ));
        }
        Ok(Self {
            theta,
            cone,
            curve,
            xi_mode,
        })
    }

    /// Cone inferred from the curve's quadric.
    pub fn for_curve(theta: f64, curve: SlopeCurve, xi_mode: XiMode) -> Result<Self> {
        let cone = ConeKind::for_quadric(curve.quadric());
        Self::new(theta, cone, curve, xi_mode)
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn cone(&self) -> ConeKind {
        self.cone
    }

    pub fn curve(&self) -> &SlopeCurve {
        &self.curve
    }

    pub fn xi_mode(&self) -> XiMode {
        self.xi_mode
    }

    pub fn with_xi_mode(&self, xi_mode: XiMode) -> Self {
        Self {
            xi_mode,
            ..self.clone()
        }
    }

    pub fn xi(&self, u: f64) -> Result<f64> {
        match self.xi_mode {
            XiMode::Exact => self.cone.exact_xi(self.theta, u),
            XiMode::PaperApprox => {
                check_u(u)?;
                Ok(u.ln())
            }
        }
    }

    /// Homothetic scale `h(u)`.
    pub fn scale(&self, u: f64) -> Result<f64> {
        check_u(u)?;
        Ok(u * self.cone.scale_factor(self.theta))
    }

    pub fn motion(&self) -> HomotheticMotion<'_> {
        HomotheticMotion { config: self }
    }

    pub fn surface_direct(&self, u: f64, v: f64) -> Result<Vec3M> {
        let xi = self.xi(u)?;
        let h = self.scale(u)?;
        let c = self.curve.point(v);
        let b = self.curve.binormal(v);
        Ok((c * xi.cosh() + b * xi.sinh()) * h)
    }

    /// Vector part of `Q₁(u, v) × Q₂(u, v)`. The scalar part vanishes because
    /// `<c′, c> = 0`; a violation signals a broken curve.
    pub fn surface_quaternion(&self, u: f64, v: f64) -> Result<Vec3M> {
        let motion = self.motion();
        let h = motion.scale(u)?;
        let q1 = motion.rotation(u, v)?;
        let q2 = (self.curve.point(v) * h).to_pure();
        let x = q1 * q2;
        if x.w.abs() > PURE_PRODUCT_EPS * h {
            return Err(Error::NonPureProduct { scalar: x.w });
        }
        Ok(x.vector())
    }

    /// `h(u) R_Q c(v)`.
    pub fn surface_homothetic(&self, u: f64, v: f64) -> Result<Vec3M> {
        self.motion().apply(u, v, self.curve.point(v))
    }

    pub fn surface(&self, u: f64, v: f64, construction: Construction) -> Result<Vec3M> {
        match construction {
            Construction::Direct => self.surface_direct(u, v),
            Construction::Quaternion => self.surface_quaternion(u, v),
            Construction::Homothetic => self.surface_homothetic(u, v),
        }
    }

    /// Partial derivatives `(x_u, x_v)` of the direct construction by
    /// five-point central differences, `h_u = 1e-3 · max(1, u)` and `h_v = 1e-3`.
    pub fn surface_partials(&self, u: f64, v: f64) -> Result<(Vec3M, Vec3M)> {
        check_u(u)?;
        let hu = PARTIAL_STEP * u.max(1.0);
        if u - 2.0 * hu <= 0.0 {
            return domain(format!("u = {u} is too close to 0 for the difference step {hu}"));
        }
        let surface = |s: f64, t: f64| {
            self.surface_direct(s, t)
                .expect("parameters checked above")
        };
        let xu = central_diff5(|s| surface(s, v), u, hu);
        let xv = central_diff5(|t| surface(u, t), v, PARTIAL_STEP);
        Ok((xu, xv))
    }

    /// `|<x, n>| / (sqrt|<x, x>| sqrt|<n, n>|)` with `n = x_u ∧ x_v`.
    ///
    /// On the timelike cone `x` and `n` are both timelike and the value is the
    /// hyperbolic cosine of the angle between them; it equals `cosh θ`. On the
    /// spacelike cone it equals `sinh θ`.
    pub fn slope_measure(&self, u: f64, v: f64) -> Result<f64> {
        let (xu, xv) = self.surface_partials(u, v)?;
        let x = self.surface_direct(u, v)?;
        let n = xu.cross(xv);
        let nn = n.metric_square();
        if nn.abs() <= DEGENERATE_NORMAL_EPS * n.max_abs().powi(2) || n == Vec3M::ZERO {
            return Err(Error::DegenerateNormal { metric: nn });
        }
        Ok(x.dot(n).abs() / (x.norm() * nn.abs().sqrt()))
    }

    /// First fundamental form and causal flags at `(u, v)`.
    pub fn classify_point(&self, u: f64, v: f64) -> Result<PointReport> {
        let (xu, xv) = self.surface_partials(u, v)?;
        let position = self.surface_direct(u, v)?;
        let position_square = position.metric_square();
        let (e, f, g) = (xu.metric_square(), xu.dot(xv), xv.metric_square());
        Ok(PointReport {
            position,
            position_square,
            e,
            f,
            g,
            spacelike: e > 0.0 && e * g - f * f > 0.0,
            cone_correct: position_square * self.cone.position_sign() > 0.0,
            future_pointing: position.e1 > 0.0,
        })
    }

    /// Samples the surface on a uniform `nu × nv` grid, row-major with `u` outer.
    pub fn sample_grid(
        &self,
        u_range: (f64, f64),
        v_range: (f64, f64),
        nu: usize,
        nv: usize,
        construction: Construction,
    ) -> Result<SurfaceSampleGrid> {
        let (u0, u1) = u_range;
        let (v0, v1) = v_range;
        if !(u0 > 0.0 && u0.is_finite() && u1.is_finite()) {
            return domain(format!("u range must lie in (0, ∞), got [{u0}, {u1}]"));
        }
        if u0 >= u1 {
            return domain(format!("u range must be ascending, got [{u0}, {u1}]"));
        }
        if !(v0.is_finite() && v1.is_finite()) || v0 >= v1 {
            return domain(format!("v range must be finite and ascending, got [{v0}, {v1}]"));
        }
        if nu < 2 || nv < 2 {
            return domain(format!("grid needs at least 2 samples per direction, got {nu}×{nv}"));
        }
        let u_values: Vec<f64> = (0..nu).map(|i| lerp(u0, u1, i, nu)).collect();
        let v_values: Vec<f64> = (0..nv).map(|j| lerp(v0, v1, j, nv)).collect();
        let mut points = Vec::with_capacity(nu * nv);
        for &u in &u_values {
            for &v in &v_values {
                let p = self.surface(u, v, construction)?;
                if !p.is_finite() {
                    return domain(format!("surface point at (u, v) = ({u}, {v}) is not finite"));
                }
                points.push(p);
            }
        }
        Ok(SurfaceSampleGrid {
            u_values,
            v_values,
            points,
            construction,
        })
    }
}

/// The rotational homothetic motion `X = h(u) A(u, v) X₀` (no translation).
#[derive(Debug, Clone, Copy)]
pub struct HomotheticMotion<'a> {
    config: &'a SlopeSurfaceConfig,
}

impl HomotheticMotion<'_> {
    pub fn scale(&self, u: f64) -> Result<f64> {
        self.config.scale(u)
    }

    /// Full-angle `Q₁(u, v) = cosh ξ - sinh ξ c′(v)`.
    pub fn rotation(&self, u: f64, v: f64) -> Result<SplitQuaternion> {
        let xi = self.config.xi(u)?;
        slope_quaternion(xi, self.config.curve.tangent(v), AngleConvention::Full)
    }

    /// `Q̃(u, v) = h(u) Q₁(u, v)`.
    pub fn scaled_rotation(&self, u: f64, v: f64) -> Result<SplitQuaternion> {
        Ok(self.rotation(u, v)? * self.scale(u)?)
    }

    /// The matrix `A` rotating through `ξ(u)` about `c′(v)`.
    pub fn rotation_matrix(&self, u: f64, v: f64) -> Result<LorentzRotation> {
        let xi = self.config.xi(u)?;
        rotation_about_axis(xi, self.config.curve.tangent(v))
    }

    pub fn translation(&self) -> Vec3M {
        Vec3M::ZERO
    }

    pub fn apply(&self, u: f64, v: f64, x0: Vec3M) -> Result<Vec3M> {
        let h = self.scale(u)?;
        Ok(self.rotation_matrix(u, v)?.apply(x0) * h + self.translation())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PointReport {
    pub position: Vec3M,
    /// `<x, x>`.
    pub position_square: f64,
    pub e: f64,
    pub f: f64,
    pub g: f64,
    /// `E > 0` and `EG - F² > 0`.
    pub spacelike: bool,
    /// Sign of `<x, x>` matches the cone.
    pub cone_correct: bool,
    /// `x.e1 > 0`; reported, not required.
    pub future_pointing: bool,
}

/// Surface points on a uniform parameter grid.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SurfaceSampleGrid {
    pub u_values: Vec<f64>,
    pub v_values: Vec<f64>,
    /// Row-major, `points[i * nv + j]` is the point at `(u_values[i], v_values[j])`.
    pub points: Vec<Vec3M>,
    pub construction: Construction,
}

impl SurfaceSampleGrid {
    pub fn dims(&self) -> (usize, usize) {
        (self.u_values.len(), self.v_values.len())
    }

    pub fn point(&self, i: usize, j: usize) -> Vec3M {
        self.points[i * self.v_values.len() + j]
    }

    /// `(u, v, x)` in storage order.
    pub fn samples(&self) -> impl Iterator<Item = (f64, f64, Vec3M)> + '_ {
        let nv = self.v_values.len();
        self.points
            .iter()
            .enumerate()
            .map(move |(k, &p)| (self.u_values[k / nv], self.v_values[k % nv], p))
    }

    /// Largest [`relative_error`] between matching points of two grids.
    pub fn max_relative_difference(&self, other: &SurfaceSampleGrid) -> f64 {
        assert_eq!(self.dims(), other.dims(), "grids must have the same shape");
        self.points
            .iter()
            .zip(&other.points)
            .map(|(&a, &b)| relative_error(a, b))
            .fold(0.0, f64::max)
    }
}
