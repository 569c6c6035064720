//! Random unit axes and unit timelike quaternions built from polar forms,
//! so every sample is unit to working precision by construction.

use std::f64::consts::TAU;

use rand::Rng;

use crate::algebra::{SplitQuaternion, Vec3M};

/// Polar angles are drawn from `[-MAX_ANGLE, MAX_ANGLE]`.
pub const MAX_ANGLE: f64 = 3.0;
/// Hyperbolic tilt of random axes is drawn from `[-MAX_TILT, MAX_TILT]`.
pub const MAX_TILT: f64 = 1.0;

/// `(sinh a, cosh a cos φ, cosh a sin φ)`.
pub fn unit_spacelike_axis<R: Rng + ?Sized>(rng: &mut R) -> Vec3M {
    let a: f64 = rng.gen_range(-MAX_TILT..=MAX_TILT);
    let phi: f64 = rng.gen_range(0.0..TAU);
    let (s, c) = phi.sin_cos();
    Vec3M::new(a.sinh(), a.cosh() * c, a.cosh() * s)
}

/// `±(cosh a, sinh a cos φ, sinh a sin φ)`.
pub fn unit_timelike_axis<R: Rng + ?Sized>(rng: &mut R) -> Vec3M {
    let a: f64 = rng.gen_range(-MAX_TILT..=MAX_TILT);
    let phi: f64 = rng.gen_range(0.0..TAU);
    let (s, c) = phi.sin_cos();
    let v = Vec3M::new(a.cosh(), a.sinh() * c, a.sinh() * s);
    if rng.gen_bool(0.5) {
        v
    } else {
        -v
    }
}

/// `cosh θ + v sinh θ` (spacelike `v`) or `cos θ + v sin θ` (timelike `v`),
/// each with probability 1/2.
pub fn unit_timelike_quaternion<R: Rng + ?Sized>(rng: &mut R) -> SplitQuaternion {
    let angle: f64 = rng.gen_range(-MAX_ANGLE..=MAX_ANGLE);
    if rng.gen_bool(0.5) {
        let v = unit_spacelike_axis(rng);
        SplitQuaternion::from_parts(angle.cosh(), v * angle.sinh())
    } else {
        let v = unit_timelike_axis(rng);
        SplitQuaternion::from_parts(angle.cos(), v * angle.sin())
    }
}

/// Components uniform in `[-r, r]`.
pub fn uniform_vector<R: Rng + ?Sized>(rng: &mut R, r: f64) -> Vec3M {
    Vec3M::new(rng.gen_range(-r..=r), rng.gen_range(-r..=r), rng.gen_range(-r..=r))
}

/// Components uniform in `[-r, r]`.
pub fn uniform_quaternion<R: Rng + ?Sized>(rng: &mut R, r: f64) -> SplitQuaternion {
    SplitQuaternion::from_parts(rng.gen_range(-r..=r), uniform_vector(rng, r))
}
