use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use slope_core::algebra::Vec3M;
use slope_core::rotation::{rotation_matrix, sandwich, slope_quaternion, slope_rotation, AngleConvention, LorentzRotation};
use slope_core::sampling::{uniform_vector, unit_spacelike_axis, unit_timelike_quaternion};
use slope_core::{builtin_curve, ConeKind};

const CASES: usize = 1000;

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x0707_2024)
}

fn matrix_rel_diff(a: &LorentzRotation, b: &LorentzRotation) -> f64 {
    let mut d: f64 = 0.0;
    for i in 0..3 {
        for j in 0..3 {
            d = d.max((a.entry(i, j) - b.entry(i, j)).abs());
        }
    }
    d / b.max_abs().max(1.0)
}

#[test]
fn matrix_agrees_with_sandwich() {
    let mut rng = rng();
    for _ in 0..CASES {
        let p = unit_timelike_quaternion(&mut rng);
        let w = uniform_vector(&mut rng, 1.0);
        let err = (rotation_matrix(p).unwrap().apply(w) - sandwich(p, w).unwrap()).max_abs();
        assert!(err <= 1e-12, "{p}: {err:e}");
    }
}

#[test]
fn homomorphism() {
    let mut rng = rng();
    for _ in 0..CASES {
        let (p, q) = (unit_timelike_quaternion(&mut rng), unit_timelike_quaternion(&mut rng));
        let lhs = rotation_matrix(p * q).unwrap();
        let rhs = rotation_matrix(p).unwrap() * rotation_matrix(q).unwrap();
        assert!(matrix_rel_diff(&lhs, &rhs) <= 1e-10, "{p} {q}");
    }
}

#[test]
fn rotations_are_lorentz_and_preserve_the_metric() {
    let mut rng = rng();
    for _ in 0..CASES {
        let p = unit_timelike_quaternion(&mut rng);
        let r = rotation_matrix(p).unwrap();
        let c = r.check();
        assert!(c.orthogonal, "{p}: {c:?}");
        assert_eq!(r, rotation_matrix(-p).unwrap());
        let (w, w2) = (uniform_vector(&mut rng, 1.0), uniform_vector(&mut rng, 1.0));
        let before = w.dot(w2);
        let after = r.apply(w).dot(r.apply(w2));
        let scale = before.abs().max(w.max_abs() * w2.max_abs());
        assert!((after - before).abs() <= 1e-10 * scale, "{p}: {before} vs {after}");
    }
}

#[test]
fn half_angle_bridge() {
    let mut rng = rng();
    for _ in 0..CASES {
        let xi: f64 = rng.gen_range(-2.0..2.0);
        let v = unit_spacelike_axis(&mut rng);
        let w = uniform_vector(&mut rng, 1.0);
        let w = w - v * w.dot(v);
        let full = slope_quaternion(xi, v, AngleConvention::Full).unwrap() * w.to_pure();
        assert!(full.w.abs() <= 1e-12, "scalar part {}", full.w);
        let half = slope_quaternion(xi, v, AngleConvention::Half).unwrap();
        let err = (full.vector() - sandwich(half, w).unwrap()).max_abs();
        assert!(err <= 1e-12, "xi={xi} v={v}: {err:e}");
    }
}

#[test]
fn slope_quaternions_are_unit() {
    let mut rng = rng();
    for _ in 0..CASES {
        let xi: f64 = rng.gen_range(-4.0..4.0);
        let q = slope_quaternion(xi, unit_spacelike_axis(&mut rng), AngleConvention::Half).unwrap();
        assert!((q.characteristic() - 1.0).abs() <= 1e-12 * q.max_abs().powi(2));
    }
}

/// Expanded half-angle matrix for an axis with ⟨f′, f′⟩ = 1, entry by entry.
fn expanded_timelike(xi: f64, f: Vec3M) -> LorentzRotation {
    let (f1, f2, f3) = (f.e1, f.e2, f.e3);
    let c2 = (xi / 2.0).cosh().powi(2);
    let s2 = (xi / 2.0).sinh().powi(2);
    let s = xi.sinh();
    LorentzRotation::from_rows([
        [
            c2 + s2 * (f1 * f1 + f2 * f2 + f3 * f3),
            -2.0 * s2 * f1 * f2 - s * f3,
            -2.0 * s2 * f1 * f3 + s * f2,
        ],
        [
            2.0 * s2 * f1 * f2 - s * f3,
            c2 + s2 * (-f1 * f1 - f2 * f2 + f3 * f3),
            -2.0 * s2 * f2 * f3 + s * f1,
        ],
        [
            2.0 * s2 * f1 * f3 + s * f2,
            -2.0 * s2 * f2 * f3 - s * f1,
            c2 + s2 * (-f1 * f1 + f2 * f2 - f3 * f3),
        ],
    ])
}

/// Same expansion for the spacelike-cone axis. Entry (1, 2) carries `g′₃` in
/// the sine term; `g′₁` there is a common slip.
fn expanded_spacelike(xi: f64, g: Vec3M) -> LorentzRotation {
    let mut r = expanded_timelike(xi, g).rows();
    let (g1, g2) = (g.e1, g.e2);
    r[0][1] = -2.0 * (xi / 2.0).sinh().powi(2) * g1 * g2 - xi.sinh() * g.e3;
    LorentzRotation::from_rows(r)
}

#[test]
fn timelike_cone_matches_expanded_matrix() {
    let curve = builtin_curve("h2-geodesic").unwrap();
    let mut rng = rng();
    for _ in 0..100 {
        let theta: f64 = rng.gen_range(0.2..8.0);
        let u: f64 = rng.gen_range(0.5..2.0);
        let v: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
        let fp = curve.tangent(v);
        let r = slope_rotation(theta, u, fp, ConeKind::TimelikeCone).unwrap();
        let xi = u.ln() / theta.tanh();
        let d = matrix_rel_diff(&r, &expanded_timelike(xi, fp));
        assert!(d <= 1e-12, "theta={theta} u={u} v={v}: {d:e}");
    }
}

#[test]
fn spacelike_cone_matches_expanded_matrix() {
    let curve = builtin_curve("s12-circle").unwrap();
    let mut rng = rng();
    for _ in 0..100 {
        let theta: f64 = rng.gen_range(0.2..8.0);
        let u: f64 = rng.gen_range(0.5..2.0);
        let v: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
        let gp = curve.tangent(v);
        let r = slope_rotation(theta, u, gp, ConeKind::SpacelikeCone).unwrap();
        let xi = theta.tanh() * u.ln();
        let d = matrix_rel_diff(&r, &expanded_spacelike(xi, gp));
        assert!(d <= 1e-12, "theta={theta} u={u} v={v}: {d:e}");
    }
}

#[test]
fn expanded_matrices_hold_for_arbitrary_axes() {
    // g′₁ vanishes along the circle, so exercise every term with general axes.
    let mut rng = rng();
    for _ in 0..CASES {
        let xi: f64 = rng.gen_range(-1.5..1.5);
        let a = unit_spacelike_axis(&mut rng);
        let q = slope_quaternion(xi, a, AngleConvention::Half).unwrap();
        let r = rotation_matrix(q).unwrap();
        assert!(matrix_rel_diff(&r, &expanded_spacelike(xi, a)) <= 1e-12);
        assert!(matrix_rel_diff(&r, &expanded_timelike(xi, a)) <= 1e-12);
    }
}

#[test]
fn spacelike_entry_with_g1_is_wrong() {
    let (xi, a) = (0.7, Vec3M::new(0.0, 0.6, 0.8));
    let r = rotation_matrix(slope_quaternion(xi, a, AngleConvention::Half).unwrap()).unwrap();
    let slip = -2.0 * (xi / 2.0f64).sinh().powi(2) * a.e1 * a.e2 - xi.sinh() * a.e1;
    assert!((r.entry(0, 1) - slip).abs() > 0.5);
}

#[test]
fn geodesic_and_circle_matrices() {
    // H² geodesic, ξ = ln u: row 2 is
    // (-sinh(ln u) cosh v, cosh(ln u), sinh(ln u) sinh v).
    let f = builtin_curve("h2-geodesic").unwrap();
    let g = builtin_curve("s12-circle").unwrap();
    for (u, v) in [(0.5, 0.3), (1.7, 2.0), (2.0, 5.5)] {
        let l: f64 = f64::ln(u);
        let q = slope_quaternion(l, f.tangent(v), AngleConvention::Half).unwrap();
        let r = rotation_matrix(q).unwrap();
        let row = [-l.sinh() * v.cosh(), l.cosh(), l.sinh() * v.sinh()];
        let col = [-l.sinh() * v.cosh(), l.cosh(), -l.sinh() * v.sinh()];
        let h2 = (l / 2.0).sinh().powi(2);
        let corner = [(l / 2.0).cosh().powi(2) + h2 * (2.0 * v).cosh(), -h2 * (2.0 * v).sinh()];
        for k in 0..3 {
            assert!((r.entry(1, k) - row[k]).abs() <= 1e-12 * v.cosh().powi(2));
            assert!((r.entry(k, 1) - col[k]).abs() <= 1e-12 * v.cosh().powi(2));
        }
        assert!((r.entry(0, 0) - corner[0]).abs() <= 1e-12 * v.cosh().powi(2));
        assert!((r.entry(0, 2) - corner[1]).abs() <= 1e-12 * v.cosh().powi(2));

        // S¹₁ circle
        let q = slope_quaternion(l, g.tangent(v), AngleConvention::Half).unwrap();
        let r = rotation_matrix(q).unwrap();
        let expected = [
            [l.cosh(), -l.sinh() * v.cos(), -l.sinh() * v.sin()],
            [-l.sinh() * v.cos(), (l / 2.0).cosh().powi(2) + h2 * (2.0 * v).cos(), h2 * (2.0 * v).sin()],
            [-l.sinh() * v.sin(), h2 * (2.0 * v).sin(), (l / 2.0).cosh().powi(2) - h2 * (2.0 * v).cos()],
        ];
        for (i, row) in expected.iter().enumerate() {
            for (k, &want) in row.iter().enumerate() {
                assert!((r.entry(i, k) - want).abs() <= 1e-12, "({i},{k}) at u={u} v={v}");
            }
        }
    }
}
