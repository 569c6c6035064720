//! Surfaces against closed forms worked out by hand for the two builtin curves.
//!
//! Timelike cone, `c(v) = (cosh v, 0, sinh v)`, `ξ = coth θ ln u`:
//!   x   = u sinh θ (cosh ξ cosh v, -sinh ξ, cosh ξ sinh v)
//!   x_u ∧ x_v = u sinh²θ cosh ξ (B cosh v, -A, B sinh v)
//!   A = cosh ξ + coth θ sinh ξ,  B = sinh ξ + coth θ cosh ξ
//!
//! Spacelike cone, `c(v) = (0, cos v, sin v)`, `ξ = tanh θ ln u`:
//!   x   = u cosh θ (-sinh ξ, cosh ξ cos v, cosh ξ sin v)
//!   x_u ∧ x_v = u cosh²θ cosh ξ (-Q, P cos v, P sin v)
//!   P = sinh ξ + tanh θ cosh ξ,  Q = cosh ξ + tanh θ sinh ξ

use std::f64::consts::TAU;

use slope_core::algebra::Vec3M;
use slope_core::validation::std_dev;
use slope_core::{builtin_curve, relative_error, ConeKind, Construction, SlopeSurfaceConfig, XiMode};

fn config(theta: f64, curve: &str, mode: XiMode) -> SlopeSurfaceConfig {
    SlopeSurfaceConfig::for_curve(theta, builtin_curve(curve).unwrap(), mode).unwrap()
}

fn grid(n: usize) -> impl Iterator<Item = (f64, f64)> {
    (0..n).flat_map(move |i| {
        (0..n).map(move |j| (0.5 + 1.5 * i as f64 / (n - 1) as f64, TAU * j as f64 / (n - 1) as f64))
    })
}

fn timelike_oracle(theta: f64, u: f64, v: f64) -> (Vec3M, Vec3M) {
    let xi = u.ln() / theta.tanh();
    let (c, s) = (xi.cosh(), xi.sinh());
    let coth = 1.0 / theta.tanh();
    let (a, b) = (c + coth * s, s + coth * c);
    let x = Vec3M::new(c * v.cosh(), -s, c * v.sinh()) * (u * theta.sinh());
    let n = Vec3M::new(b * v.cosh(), -a, b * v.sinh()) * (u * theta.sinh().powi(2) * c);
    (x, n)
}

fn spacelike_oracle(theta: f64, u: f64, v: f64) -> (Vec3M, Vec3M) {
    let xi = theta.tanh() * u.ln();
    let (c, s) = (xi.cosh(), xi.sinh());
    let t = theta.tanh();
    let (p, q) = (s + t * c, c + t * s);
    let x = Vec3M::new(-s, c * v.cos(), c * v.sin()) * (u * theta.cosh());
    let n = Vec3M::new(-q, p * v.cos(), p * v.sin()) * (u * theta.cosh().powi(2) * c);
    (x, n)
}

/// Direct and Quaternion match closed forms to rounding. The Homothetic
/// matrix has entries of order sinh²(ξ/2) cosh 2v that cancel down to |c(v)|,
/// so it only matches to the construction-equivalence tolerance.
fn tolerance(construction: Construction) -> f64 {
    match construction {
        Construction::Homothetic => 1e-9,
        _ => 1e-12,
    }
}

fn measure(x: Vec3M, n: Vec3M) -> f64 {
    x.dot(n).abs() / (x.norm() * n.norm())
}

#[test]
fn oracle_measure_is_cosh_theta_and_sinh_theta() {
    for theta in [0.5, 1.0] {
        for (u, v) in grid(9) {
            let (x, n) = timelike_oracle(theta, u, v);
            assert!((measure(x, n) - theta.cosh()).abs() <= 1e-9 * theta.cosh(), "θ={theta} u={u} v={v}");
            let (x, n) = spacelike_oracle(theta, u, v);
            assert!((measure(x, n) - theta.sinh()).abs() <= 1e-9 * theta.sinh(), "θ={theta} u={u} v={v}");
        }
    }
}

#[test]
fn surface_points_match_oracle() {
    for theta in [0.5, 1.0, 7.0] {
        let t = config(theta, "h2-geodesic", XiMode::Exact);
        let s = config(theta, "s12-circle", XiMode::Exact);
        for (u, v) in grid(16) {
            for construction in Construction::ALL {
                let tol = tolerance(construction);
                let e = relative_error(t.surface(u, v, construction).unwrap(), timelike_oracle(theta, u, v).0);
                assert!(e <= tol, "{construction:?} θ={theta} u={u} v={v}: {e:e}");
                let e = relative_error(s.surface(u, v, construction).unwrap(), spacelike_oracle(theta, u, v).0);
                assert!(e <= tol, "{construction:?} θ={theta} u={u} v={v}: {e:e}");
            }
        }
    }
}

// The H² binormal c ∧ c′ = (0, sinh²v − cosh²v, 0) carries ~eps·cosh²v of
// rounding noise, which the v-difference divides by the step.
#[test]
fn finite_difference_normal_matches_oracle() {
    for theta in [0.5, 1.0] {
        for (curve, oracle) in [
            ("h2-geodesic", timelike_oracle as fn(f64, f64, f64) -> (Vec3M, Vec3M)),
            ("s12-circle", spacelike_oracle),
        ] {
            let cfg = config(theta, curve, XiMode::Exact);
            for (u, v) in grid(12) {
                let (xu, xv) = cfg.surface_partials(u, v).unwrap();
                let e = relative_error(xu.cross(xv), oracle(theta, u, v).1);
                assert!(e <= 1e-7, "{curve} θ={theta} u={u} v={v}: {e:e}");
            }
        }
    }
}

#[test]
fn slope_measure_is_constant_and_equals_cosh_theta() {
    for theta in [0.5, 1.0] {
        let cfg = config(theta, "h2-geodesic", XiMode::Exact);
        let values: Vec<f64> = grid(64).map(|(u, v)| cfg.slope_measure(u, v).unwrap()).collect();
        let sd = std_dev(&values);
        assert!(sd <= 1e-6, "θ={theta}: std-dev {sd:e}");
        for m in &values {
            assert!((m - theta.cosh()).abs() <= 1e-5, "θ={theta}: {m}");
        }
    }
}

#[test]
fn spacelike_cone_measure_is_sinh_theta() {
    for theta in [0.5, 1.0] {
        let cfg = config(theta, "s12-circle", XiMode::Exact);
        let values: Vec<f64> = grid(64).map(|(u, v)| cfg.slope_measure(u, v).unwrap()).collect();
        assert!(std_dev(&values) <= 1e-6);
        assert!(values.iter().all(|m| (m - theta.sinh()).abs() <= 1e-5));
    }
}

#[test]
fn surfaces_are_spacelike_and_on_the_right_cone() {
    for theta in [0.5, 1.0, 7.0] {
        for curve in ["h2-geodesic", "s12-circle"] {
            let cfg = config(theta, curve, XiMode::Exact);
            for (u, v) in grid(16) {
                let p = cfg.classify_point(u, v).unwrap();
                assert!(p.spacelike && p.cone_correct, "{curve} θ={theta} u={u} v={v}: {p:?}");
                if cfg.cone() == ConeKind::TimelikeCone {
                    assert!(p.future_pointing);
                }
            }
        }
    }
}

#[test]
fn position_norm_law() {
    for theta in [0.5, 1.0, 7.0] {
        for curve in ["h2-geodesic", "s12-circle"] {
            let cfg = config(theta, curve, XiMode::Exact);
            for (u, v) in grid(64) {
                let h = cfg.scale(u).unwrap();
                let x = cfg.surface_direct(u, v).unwrap();
                let e = (x.norm() - h).abs() / h;
                assert!(e <= 1e-10, "{curve} θ={theta} u={u} v={v}: {e:e}");
            }
        }
    }
}

#[test]
fn examples_closed_forms() {
    let s7 = 7.0f64.sinh();
    let c7 = 7.0f64.cosh();
    for mode in [XiMode::PaperApprox, XiMode::Exact] {
        let exact = mode == XiMode::Exact;
        let f = config(7.0, "h2-geodesic", mode);
        let g = config(7.0, "s12-circle", mode);
        for (u, v) in grid(64) {
            let l = u.ln();
            let ex15 = Vec3M::new(u * s7 * l.cosh() * v.cosh(), -u * s7 * l.sinh(), u * s7 * l.cosh() * v.sinh());
            let ex16 = Vec3M::new(-u * c7 * l.sinh(), u * c7 * l.cosh() * v.cos(), u * c7 * l.cosh() * v.sin());
            for construction in Construction::ALL {
                let tol = if exact { 5e-5 } else { tolerance(construction) };
                let e = relative_error(f.surface(u, v, construction).unwrap(), ex15);
                assert!(e <= tol, "{mode:?} {construction:?} u={u} v={v}: {e:e}");
                let e = relative_error(g.surface(u, v, construction).unwrap(), ex16);
                assert!(e <= tol, "{mode:?} {construction:?} u={u} v={v}: {e:e}");
            }
        }
    }
    let x = config(7.0, "h2-geodesic", XiMode::PaperApprox).surface_direct(1.0, 0.0).unwrap();
    assert_eq!(x, Vec3M::new(s7, 0.0, 0.0));
    let x = config(7.0, "s12-circle", XiMode::PaperApprox).surface_direct(1.0, 0.0).unwrap();
    assert_eq!(x, Vec3M::new(0.0, c7, 0.0));
}
