//! Split quaternions and vectors of Minkowski 3-space.
//!
//! A split quaternion is stored as `(w, x, y, z)`, the coefficients of
//! `1, i, j, k`, with the multiplication table
//!
//! ```text
//! i² = -1,  j² = k² = 1,  ij = -ji = k,  jk = -kj = -i,  ki = -ik = j
//! ```
//!
//! The vector part `(x, y, z)` is identified with a [`Vec3M`] in E₁³, whose
//! first component `e1` is the timelike direction. The metric is
//! `<a, b> = -a1 b1 + a2 b2 + a3 b3`.
//!
//! Every bilinear form in this module is evaluated with a compensated
//! (fma two-product) sum. Points on the surfaces built downstream can have
//! components of order 10³ while their Minkowski square is of order 1.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Base of the causal classification tolerance `τ = CAUSAL_EPS · max(1, ‖p‖²_∞)`.
pub const CAUSAL_EPS: f64 = 1e-12;

/// A quaternion is reported unit when `|N_p - 1|` is at most this.
pub const UNIT_EPS: f64 = 1e-12;

#[inline]
fn two_product(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

/// `Σ x_i y_i` accurate to about one rounding of the result plus eps² of the
/// condition number (Ogita, Rump and Oishi's `Dot2`).
pub(crate) fn compensated_dot<const N: usize>(x: [f64; N], y: [f64; N]) -> f64 {
    let (mut p, mut s) = two_product(x[0], y[0]);
    for i in 1..N {
        let (h, r) = two_product(x[i], y[i]);
        let (q, e) = two_sum(p, h);
        p = q;
        s += e + r;
    }
    p + s
}

/// Causal character of a vector in E₁³ or of a split quaternion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CausalCharacter {
    Spacelike,
    Timelike,
    Lightlike,
}

/// A vector in Minkowski 3-space with signature `(-, +, +)`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Vec3M {
    pub e1: f64,
    pub e2: f64,
    pub e3: f64,
}

impl Vec3M {
    pub const ZERO: Vec3M = Vec3M::new(0.0, 0.0, 0.0);
    /// Timelike basis vector, identified with `i`.
    pub const E1: Vec3M = Vec3M::new(1.0, 0.0, 0.0);
    /// Spacelike basis vector, identified with `j`.
    pub const E2: Vec3M = Vec3M::new(0.0, 1.0, 0.0);
    /// Spacelike basis vector, identified with `k`.
    pub const E3: Vec3M = Vec3M::new(0.0, 0.0, 1.0);

    pub const fn new(e1: f64, e2: f64, e3: f64) -> Self {
        Self { e1, e2, e3 }
    }

    pub fn from_array(a: [f64; 3]) -> Self {
        Self::new(a[0], a[1], a[2])
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.e1, self.e2, self.e3]
    }

    /// Lorentzian scalar product `-a1 b1 + a2 b2 + a3 b3`.
    pub fn dot(self, other: Vec3M) -> f64 {
        compensated_dot(
            [-self.e1, self.e2, self.e3],
            [other.e1, other.e2, other.e3],
        )
    }

    /// Lorentzian cross product, the vector part of the determinant
    ///
    /// ```text
    /// | -i  j  k  |
    /// | a1  a2 a3 |
    /// | b1  b2 b3 |
    /// ```
    ///
    /// so that for pure split quaternions `a × b = <a, b> + a ∧ b`.
    pub fn cross(self, other: Vec3M) -> Vec3M {
        let (a, b) = (self, other);
        Vec3M::new(
            compensated_dot([a.e3, -a.e2], [b.e2, b.e3]),
            compensated_dot([a.e3, -a.e1], [b.e1, b.e3]),
            compensated_dot([a.e1, -a.e2], [b.e2, b.e1]),
        )
    }

    /// `<w, w>`.
    pub fn metric_square(self) -> f64 {
        self.dot(self)
    }

    /// `sqrt(|<w, w>|)`.
    pub fn norm(self) -> f64 {
        self.metric_square().abs().sqrt()
    }

    pub fn max_abs(self) -> f64 {
        self.e1.abs().max(self.e2.abs()).max(self.e3.abs())
    }

    pub fn is_finite(self) -> bool {
        self.e1.is_finite() && self.e2.is_finite() && self.e3.is_finite()
    }

    /// Classification tolerance for this vector, `1e-12 · max(1, ‖w‖²_∞)`.
    pub fn causal_tolerance(self) -> f64 {
        CAUSAL_EPS * self.max_abs().powi(2).max(1.0)
    }

    /// The zero vector counts as spacelike.
    pub fn causal_character(self) -> CausalCharacter {
        let m = self.metric_square();
        let tau = self.causal_tolerance();
        if self == Vec3M::ZERO || m > tau {
            CausalCharacter::Spacelike
        } else if m < -tau {
            CausalCharacter::Timelike
        } else {
            CausalCharacter::Lightlike
        }
    }

    /// Embeds the vector as the pure split quaternion `(0, e1, e2, e3)`.
    pub fn to_pure(self) -> SplitQuaternion {
        SplitQuaternion::new(0.0, self.e1, self.e2, self.e3)
    }
}

/// Free-function form of [`Vec3M::dot`].
pub fn minkowski_dot(a: Vec3M, b: Vec3M) -> f64 {
    a.dot(b)
}

/// Free-function form of [`Vec3M::cross`].
pub fn lorentz_cross(a: Vec3M, b: Vec3M) -> Vec3M {
    a.cross(b)
}

impl Add for Vec3M {
    type Output = Vec3M;
    fn add(self, o: Vec3M) -> Vec3M {
        Vec3M::new(self.e1 + o.e1, self.e2 + o.e2, self.e3 + o.e3)
    }
}

impl AddAssign for Vec3M {
    fn add_assign(&mut self, o: Vec3M) {
        *self = *self + o;
    }
}

impl Sub for Vec3M {
    type Output = Vec3M;
    fn sub(self, o: Vec3M) -> Vec3M {
        Vec3M::new(self.e1 - o.e1, self.e2 - o.e2, self.e3 - o.e3)
    }
}

impl Neg for Vec3M {
    type Output = Vec3M;
    fn neg(self) -> Vec3M {
        Vec3M::new(-self.e1, -self.e2, -self.e3)
    }
}

impl Mul<f64> for Vec3M {
    type Output = Vec3M;
    fn mul(self, s: f64) -> Vec3M {
        Vec3M::new(self.e1 * s, self.e2 * s, self.e3 * s)
    }
}

impl Mul<Vec3M> for f64 {
    type Output = Vec3M;
    fn mul(self, v: Vec3M) -> Vec3M {
        v * self
    }
}

impl Div<f64> for Vec3M {
    type Output = Vec3M;
    fn div(self, s: f64) -> Vec3M {
        Vec3M::new(self.e1 / s, self.e2 / s, self.e3 / s)
    }
}

impl fmt::Display for Vec3M {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.e1, self.e2, self.e3)
    }
}

/// An element `w + x i + y j + z k` of the split-quaternion algebra.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct SplitQuaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl SplitQuaternion {
    pub const ZERO: SplitQuaternion = SplitQuaternion::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: SplitQuaternion = SplitQuaternion::new(1.0, 0.0, 0.0, 0.0);
    pub const I: SplitQuaternion = SplitQuaternion::new(0.0, 1.0, 0.0, 0.0);
    pub const J: SplitQuaternion = SplitQuaternion::new(0.0, 0.0, 1.0, 0.0);
    pub const K: SplitQuaternion = SplitQuaternion::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Self { w, x, y, z }
    }

    pub fn from_parts(scalar: f64, vector: Vec3M) -> Self {
        Self::new(scalar, vector.e1, vector.e2, vector.e3)
    }

    pub fn scalar(self) -> f64 {
        self.w
    }

    pub fn vector(self) -> Vec3M {
        Vec3M::new(self.x, self.y, self.z)
    }

    pub fn to_array(self) -> [f64; 4] {
        [self.w, self.x, self.y, self.z]
    }

    pub fn is_pure(self) -> bool {
        self.w == 0.0
    }

    pub fn max_abs(self) -> f64 {
        self.w.abs().max(self.vector().max_abs())
    }

    pub fn is_finite(self) -> bool {
        self.w.is_finite() && self.vector().is_finite()
    }

    /// `I_p = w² + x² - y² - z²`.
    pub fn characteristic(self) -> f64 {
        compensated_dot(
            [self.w, self.x, -self.y, -self.z],
            [self.w, self.x, self.y, self.z],
        )
    }

    /// `N_p = sqrt(|I_p|)`.
    pub fn norm(self) -> f64 {
        self.characteristic().abs().sqrt()
    }

    /// Classification tolerance `τ = 1e-12 · max(1, ‖p‖²_∞)`.
    pub fn causal_tolerance(self) -> f64 {
        CAUSAL_EPS * self.max_abs().powi(2).max(1.0)
    }

    /// Spacelike when `I_p < -τ`, timelike when `I_p > τ`, lightlike otherwise.
    pub fn causal_character(self) -> CausalCharacter {
        let c = self.characteristic();
        let tau = self.causal_tolerance();
        if c < -tau {
            CausalCharacter::Spacelike
        } else if c > tau {
            CausalCharacter::Timelike
        } else {
            CausalCharacter::Lightlike
        }
    }

    pub fn is_unit(self) -> bool {
        (self.norm() - 1.0).abs() <= UNIT_EPS
    }

    pub fn conjugate(self) -> Self {
        Self::new(self.w, -self.x, -self.y, -self.z)
    }

    /// `p̄ / I_p`. Lightlike quaternions are zero divisors and have no inverse.
    pub fn inverse(self) -> Result<Self> {
        if self.causal_character() == CausalCharacter::Lightlike {
            return Err(Error::LightlikeNoInverse {
                characteristic: self.characteristic(),
            });
        }
        Ok(self.conjugate() / self.characteristic())
    }

    /// `p0 = p / N_p`.
    pub fn normalized(self) -> Result<Self> {
        if self.causal_character() == CausalCharacter::Lightlike {
            return Err(Error::DegenerateQuaternion);
        }
        Ok(self / self.norm())
    }

    /// Lie bracket `[a, b] = a × b - b × a`.
    pub fn commutator(self, other: Self) -> Self {
        self * other - other * self
    }

    /// Decomposes `p` into one of the three polar forms.
    ///
    /// The vector part is classified against its own scale,
    /// `|<V, V>| ≤ 1e-12 · ‖V‖²_∞`, so that small but clearly timelike or
    /// spacelike vector parts still reconstruct to full accuracy.
    ///
    /// A timelike `p` with zero vector part is `N` times `±1`: `+N` gives
    /// `TimelikeSpacelikeAxis` with `θ = 0` and the default axis `j`,
    /// `-N` gives `TimelikeTimelikeAxis` with `θ = π` and axis `i`.
    pub fn polar_decompose(self) -> Result<PolarForm> {
        let n = self.norm();
        let v = self.vector();
        match self.causal_character() {
            CausalCharacter::Lightlike => Err(Error::DegenerateQuaternion),
            CausalCharacter::Spacelike => {
                // <V,V> = w² + N² > 0
                let vn = v.norm();
                Ok(PolarForm {
                    kind: PolarKind::SpacelikeForm,
                    magnitude: n,
                    angle: (self.w / n).asinh(),
                    axis: v / vn,
                })
            }
            CausalCharacter::Timelike => {
                if v == Vec3M::ZERO {
                    return Ok(if self.w > 0.0 {
                        PolarForm {
                            kind: PolarKind::TimelikeSpacelikeAxis,
                            magnitude: n,
                            angle: 0.0,
                            axis: PolarForm::DEFAULT_AXIS,
                        }
                    } else {
                        PolarForm {
                            kind: PolarKind::TimelikeTimelikeAxis,
                            magnitude: n,
                            angle: std::f64::consts::PI,
                            axis: Vec3M::E1,
                        }
                    });
                }
                let vv = v.metric_square();
                let tol = CAUSAL_EPS * v.max_abs().powi(2);
                if vv > tol {
                    if self.w <= 0.0 {
                        return Err(Error::NegativeScalarPart);
                    }
                    let vn = vv.sqrt();
                    Ok(PolarForm {
                        kind: PolarKind::TimelikeSpacelikeAxis,
                        magnitude: n,
                        angle: (vn / n).asinh(),
                        axis: v / vn,
                    })
                } else if vv < -tol {
                    let vn = (-vv).sqrt();
                    Ok(PolarForm {
                        kind: PolarKind::TimelikeTimelikeAxis,
                        magnitude: n,
                        angle: vn.atan2(self.w),
                        axis: v / vn,
                    })
                } else {
                    Err(Error::LightlikeVectorPart)
                }
            }
        }
    }
}

/// Free-function form of the split-quaternion product.
pub fn sq_product(p: SplitQuaternion, q: SplitQuaternion) -> SplitQuaternion {
    p * q
}

impl Mul for SplitQuaternion {
    type Output = SplitQuaternion;

    /// `p × q = p1 q1 + <V_p, V_q> + p1 V_q + q1 V_p + V_p ∧ V_q`.
    fn mul(self, q: SplitQuaternion) -> SplitQuaternion {
        let p = self;
        SplitQuaternion::new(
            compensated_dot([p.w, -p.x, p.y, p.z], [q.w, q.x, q.y, q.z]),
            compensated_dot([p.w, q.w, p.z, -p.y], [q.x, p.x, q.y, q.z]),
            compensated_dot([p.w, q.w, p.z, -p.x], [q.y, p.y, q.x, q.z]),
            compensated_dot([p.w, q.w, p.x, -p.y], [q.z, p.z, q.y, q.x]),
        )
    }
}

impl Mul<f64> for SplitQuaternion {
    type Output = SplitQuaternion;
    fn mul(self, s: f64) -> SplitQuaternion {
        SplitQuaternion::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }
}

impl Mul<SplitQuaternion> for f64 {
    type Output = SplitQuaternion;
    fn mul(self, q: SplitQuaternion) -> SplitQuaternion {
        q * self
    }
}

impl Div<f64> for SplitQuaternion {
    type Output = SplitQuaternion;
    fn div(self, s: f64) -> SplitQuaternion {
        SplitQuaternion::new(self.w / s, self.x / s, self.y / s, self.z / s)
    }
}

impl Add for SplitQuaternion {
    type Output = SplitQuaternion;
    fn add(self, o: SplitQuaternion) -> SplitQuaternion {
        SplitQuaternion::new(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for SplitQuaternion {
    type Output = SplitQuaternion;
    fn sub(self, o: SplitQuaternion) -> SplitQuaternion {
        SplitQuaternion::new(self.w - o.w, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for SplitQuaternion {
    type Output = SplitQuaternion;
    fn neg(self) -> SplitQuaternion {
        SplitQuaternion::new(-self.w, -self.x, -self.y, -self.z)
    }
}

impl From<Vec3M> for SplitQuaternion {
    fn from(v: Vec3M) -> Self {
        v.to_pure()
    }
}

impl fmt::Display for SplitQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}i + {}j + {}k", self.w, self.x, self.y, self.z)
    }
}

/// Which of the three polar forms a quaternion takes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PolarKind {
    /// Spacelike `p = N (sinh θ + v cosh θ)`, `v` unit spacelike.
    SpacelikeForm,
    /// Timelike `p = N (cosh θ + v sinh θ)`, `v` unit spacelike.
    TimelikeSpacelikeAxis,
    /// Timelike `p = N (cos θ + v sin θ)`, `v` unit timelike.
    TimelikeTimelikeAxis,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PolarForm {
    pub kind: PolarKind,
    pub magnitude: f64,
    pub angle: f64,
    pub axis: Vec3M,
}

impl PolarForm {
    /// Axis reported when the vector part vanishes.
    pub const DEFAULT_AXIS: Vec3M = Vec3M::E2;

    pub fn reconstruct(&self) -> SplitQuaternion {
        let (s, c) = match self.kind {
            PolarKind::SpacelikeForm => (self.angle.cosh(), self.angle.sinh()),
            PolarKind::TimelikeSpacelikeAxis => (self.angle.sinh(), self.angle.cosh()),
            PolarKind::TimelikeTimelikeAxis => self.angle.sin_cos(),
        };
        SplitQuaternion::from_parts(c, self.axis * s) * self.magnitude
    }
}
