//! Lorentz rotations generated by unit timelike split quaternions.

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::algebra::{compensated_dot, SplitQuaternion, Vec3M};
use crate::error::{domain, Error, Result};
use crate::surfaces::ConeKind;

/// `|I_p - 1|` allowed for a quaternion accepted as a rotation.
pub const UNIT_TIMELIKE_EPS: f64 = 1e-9;
/// `|<a, a> - 1|` allowed for a rotation axis.
pub const AXIS_EPS: f64 = 1e-9;
/// Bound on `max|RᵀεR - ε|` and `|det R - 1|` for Lorentz group membership.
pub const LORENTZ_EPS: f64 = 1e-9;

/// Signature matrix `ε = diag(-1, 1, 1)`.
pub const SIGNATURE: [f64; 3] = [-1.0, 1.0, 1.0];

/// A 3×3 matrix acting on column vectors `(e1, e2, e3)`, row-major.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LorentzRotation {
    m: [[f64; 3]; 3],
}

impl LorentzRotation {
    pub const IDENTITY: LorentzRotation = LorentzRotation {
        m: [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]],
    };

    /// Wraps raw entries without checking group membership.
    pub fn from_rows(m: [[f64; 3]; 3]) -> Self {
        Self { m }
    }

    pub fn rows(&self) -> [[f64; 3]; 3] {
        self.m
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.m[i][j]
    }

    pub fn apply(&self, w: Vec3M) -> Vec3M {
        let row = |i: usize| self.m[i][0] * w.e1 + self.m[i][1] * w.e2 + self.m[i][2] * w.e3;
        Vec3M::new(row(0), row(1), row(2))
    }

    pub fn transpose(&self) -> Self {
        let mut t = [[0.0; 3]; 3];
        for (i, row) in self.m.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                t[j][i] = x;
            }
        }
        Self { m: t }
    }

    /// Cofactor expansion with compensated minors and sum. Large boosts make
    /// the products cancel by orders of magnitude.
    pub fn determinant(&self) -> f64 {
        let m = &self.m;
        let minor = |a: usize, b: usize| compensated_dot([m[1][a], -m[1][b]], [m[2][b], m[2][a]]);
        compensated_dot([m[0][0], -m[0][1], m[0][2]], [minor(1, 2), minor(0, 2), minor(0, 1)])
    }

    pub fn max_abs(&self) -> f64 {
        self.m.iter().flatten().fold(0.0, |acc, x| acc.max(x.abs()))
    }

    /// Residuals of `RᵀεR = ε` and `det R = 1`.
    pub fn check(&self) -> LorentzCheck {
        is_lorentz_orthogonal(self)
    }
}

impl Mul for LorentzRotation {
    type Output = LorentzRotation;
    fn mul(self, o: LorentzRotation) -> LorentzRotation {
        let mut m = [[0.0; 3]; 3];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                *x = (0..3).map(|k| self.m[i][k] * o.m[k][j]).sum();
            }
        }
        LorentzRotation { m }
    }
}

impl Mul<Vec3M> for LorentzRotation {
    type Output = Vec3M;
    fn mul(self, w: Vec3M) -> Vec3M {
        self.apply(w)
    }
}

impl fmt::Display for LorentzRotation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.m {
            writeln!(f, "[{:.16e}, {:.16e}, {:.16e}]", row[0], row[1], row[2])?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LorentzCheck {
    /// `max_ij |(RᵀεR - ε)_ij|`.
    pub metric_residual: f64,
    /// `|det R - 1|`.
    pub det_residual: f64,
    pub orthogonal: bool,
}

/// Checks `RᵀεR = ε` and `det R = 1` to [`LORENTZ_EPS`].
pub fn is_lorentz_orthogonal(r: &LorentzRotation) -> LorentzCheck {
    let m = &r.m;
    let mut metric_residual: f64 = 0.0;
    for i in 0..3 {
        for j in 0..3 {
            let g: f64 = (0..3).map(|k| m[k][i] * SIGNATURE[k] * m[k][j]).sum();
            let target = if i == j { SIGNATURE[i] } else { 0.0 };
            metric_residual = metric_residual.max((g - target).abs());
        }
    }
    let det_residual = (r.determinant() - 1.0).abs();
    LorentzCheck {
        metric_residual,
        det_residual,
        orthogonal: metric_residual <= LORENTZ_EPS && det_residual <= LORENTZ_EPS,
    }
}

fn require_unit_timelike(p: SplitQuaternion) -> Result<()> {
    let c = p.characteristic();
    if (c - 1.0).abs() > UNIT_TIMELIKE_EPS || !c.is_finite() {
        return Err(Error::NotUnitTimelike { characteristic: c });
    }
    Ok(())
}

/// Rotation matrix of a unit timelike quaternion, read off from
/// `p × V_q × p⁻¹`:
///
/// ```text
/// | p1²+p2²+p3²+p4²   2p1p4 - 2p2p3     -2p1p3 - 2p2p4  |
/// | 2p2p3 + 2p4p1     p1²-p2²-p3²+p4²   -2p3p4 - 2p2p1  |
/// | 2p2p4 - 2p3p1     2p2p1 - 2p3p4     p1²-p2²+p3²-p4² |
/// ```
///
/// `p` and `-p` give the same matrix.
pub fn rotation_matrix(p: SplitQuaternion) -> Result<LorentzRotation> {
    require_unit_timelike(p)?;
    let [p1, p2, p3, p4] = p.to_array();
    let (s1, s2, s3, s4) = (p1 * p1, p2 * p2, p3 * p3, p4 * p4);
    Ok(LorentzRotation {
        m: [
            [
                s1 + s2 + s3 + s4,
                2.0 * (p1 * p4 - p2 * p3),
                -2.0 * (p1 * p3 + p2 * p4),
            ],
            [
                2.0 * (p2 * p3 + p4 * p1),
                s1 - s2 - s3 + s4,
                -2.0 * (p3 * p4 + p2 * p1),
            ],
            [
                2.0 * (p2 * p4 - p3 * p1),
                2.0 * (p2 * p1 - p3 * p4),
                s1 - s2 + s3 - s4,
            ],
        ],
    })
}

/// Vector part of `p × w × p⁻¹` for a unit timelike `p`, using `p⁻¹ = p̄`.
///
/// Dividing by the computed `I_p` would rescale the result by the rounding
/// error of `p` itself, which for large `p` is far above one ulp of `w`.
pub fn sandwich(p: SplitQuaternion, w: Vec3M) -> Result<Vec3M> {
    require_unit_timelike(p)?;
    Ok((p * w.to_pure() * p.conjugate()).vector())
}

/// Whether [`slope_quaternion`] uses the half angle `ξ/2` or the full angle `ξ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AngleConvention {
    /// `cosh(ξ/2) - sinh(ξ/2) a`: the sandwich operand whose matrix rotates by `ξ`.
    Half,
    /// `cosh ξ - sinh ξ a`: the left factor in the surface product.
    Full,
}

/// `cosh s - sinh s · axis` with `s = ξ/2` or `s = ξ`. The axis must be unit
/// spacelike, which makes the result unit timelike with spacelike vector part.
pub fn slope_quaternion(xi: f64, axis: Vec3M, angle: AngleConvention) -> Result<SplitQuaternion> {
    let metric = axis.metric_square();
    if (metric - 1.0).abs() > AXIS_EPS || !metric.is_finite() {
        return Err(Error::AxisNotUnitSpacelike { metric });
    }
    if !xi.is_finite() {
        return domain(format!("hyperbolic angle must be finite, got {xi}"));
    }
    let s = match angle {
        AngleConvention::Half => 0.5 * xi,
        AngleConvention::Full => xi,
    };
    Ok(SplitQuaternion::from_parts(s.cosh(), axis * -s.sinh()))
}

/// Rotation through the hyperbolic angle `ξ` about a unit spacelike axis.
pub fn rotation_about_axis(xi: f64, axis: Vec3M) -> Result<LorentzRotation> {
    rotation_matrix(slope_quaternion(xi, axis, AngleConvention::Half)?)
}

/// The slope-surface rotation `R_Q` at parameter `u`, for the axis `c′(v)`.
///
/// `ξ(u) = coth θ · ln u` on the timelike cone, `tanh θ · ln u` on the
/// spacelike cone.
pub fn slope_rotation(theta: f64, u: f64, curve_derivative: Vec3M, cone: ConeKind) -> Result<LorentzRotation> {
    let xi = cone.exact_xi(theta, u)?;
    rotation_about_axis(xi, curve_derivative)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_mat_close(a: &LorentzRotation, b: [[f64; 3]; 3], eps: f64) {
        for (i, row) in b.iter().enumerate() {
            for (j, &want) in row.iter().enumerate() {
                assert!(
                    (a.entry(i, j) - want).abs() <= eps,
                    "entry ({i},{j}): {} vs {want}",
                    a.entry(i, j)
                );
            }
        }
    }

    #[test]
    fn identity_quaternion() {
        let r = rotation_matrix(SplitQuaternion::ONE).unwrap();
        assert_eq!(r, LorentzRotation::IDENTITY);
        let c = r.check();
        assert_eq!((c.metric_residual, c.det_residual, c.orthogonal), (0.0, 0.0, true));
    }

    #[test]
    fn boost_about_j() {
        let a: f64 = 0.8;
        let r = rotation_matrix(SplitQuaternion::new(a.cosh(), 0.0, a.sinh(), 0.0)).unwrap();
        let (c, s) = ((2.0 * a).cosh(), (2.0 * a).sinh());
        assert_mat_close(&r, [[c, 0.0, -s], [0.0, 1.0, 0.0], [-s, 0.0, c]], 1e-14);
        let w = sandwich(SplitQuaternion::new(a.cosh(), 0.0, a.sinh(), 0.0), Vec3M::E1).unwrap();
        assert!((w - Vec3M::new(c, 0.0, -s)).max_abs() < 1e-14);
    }

    #[test]
    fn circular_rotation_about_i() {
        let a: f64 = 0.6;
        let r = rotation_matrix(SplitQuaternion::new(a.cos(), a.sin(), 0.0, 0.0)).unwrap();
        let (c, s) = ((2.0 * a).cos(), (2.0 * a).sin());
        assert_mat_close(&r, [[1.0, 0.0, 0.0], [0.0, c, -s], [0.0, s, c]], 1e-15);
    }

    #[test]
    fn sandwich_identity() {
        let w = Vec3M::new(0.3, -1.0, 2.0);
        assert_eq!(sandwich(SplitQuaternion::ONE, w).unwrap(), w);
    }

    #[test]
    fn non_unit_rejected() {
        let p = SplitQuaternion::new(2.0, 0.0, 0.0, 0.0);
        assert!(matches!(rotation_matrix(p), Err(Error::NotUnitTimelike { .. })));
        assert!(matches!(sandwich(SplitQuaternion::J, Vec3M::E1), Err(Error::NotUnitTimelike { .. })));
    }

    #[test]
    fn double_cover() {
        let p = SplitQuaternion::new(1.25, 0.75, 0.75, 0.75);
        assert!((p.characteristic() - 1.0).abs() < 1e-15);
        assert_eq!(rotation_matrix(p).unwrap(), rotation_matrix(-p).unwrap());
    }

    #[test]
    fn slope_quaternion_examples() {
        let q = slope_quaternion(0.0, Vec3M::E3, AngleConvention::Half).unwrap();
        assert_eq!(q, SplitQuaternion::ONE);
        let a: f64 = 0.9;
        let q = slope_quaternion(2.0 * a, Vec3M::E3, AngleConvention::Half).unwrap();
        assert_eq!(q, SplitQuaternion::new(a.cosh(), 0.0, 0.0, -a.sinh()));
        assert!(matches!(
            slope_quaternion(1.0, Vec3M::E1, AngleConvention::Full),
            Err(Error::AxisNotUnitSpacelike { .. })
        ));
    }

    #[test]
    fn slope_rotation_examples() {
        let r = slope_rotation(1.0, 1.0, Vec3M::E3, ConeKind::TimelikeCone).unwrap();
        assert_eq!(r, LorentzRotation::IDENTITY);

        // f′(0) = (0, 0, 1) for the h2 geodesic
        let u = std::f64::consts::E;
        let theta: f64 = 1.0;
        let xi = 1.0 / theta.tanh();
        let r = slope_rotation(theta, u, Vec3M::E3, ConeKind::TimelikeCone).unwrap();
        let (c, s) = (xi.cosh(), xi.sinh());
        assert_mat_close(&r, [[c, -s, 0.0], [-s, c, 0.0], [0.0, 0.0, 1.0]], 1e-14);

        assert!(matches!(
            slope_rotation(1.0, 0.0, Vec3M::E3, ConeKind::TimelikeCone),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            slope_rotation(1.0, -2.0, Vec3M::E3, ConeKind::SpacelikeCone),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn constructed_violation() {
        let mut m = LorentzRotation::IDENTITY.rows();
        m[0][0] = 1.1;
        let c = is_lorentz_orthogonal(&LorentzRotation::from_rows(m));
        assert!(!c.orthogonal);
        assert!(c.metric_residual > 0.2);
    }
}
