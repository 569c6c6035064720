//! The invariant suite: curve contracts, Lorentz group membership,
//! construction equivalence and the surface laws, aggregated into one
//! JSON-serializable report.

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::curves::{builtin_curve, validate_curve, SlopeCurve, CURVE_EPS, CURVE_FD_EPS};
use crate::error::{domain, Result};
use crate::rotation::{rotation_matrix, sandwich, slope_rotation, LORENTZ_EPS};
use crate::sampling::{uniform_vector, unit_timelike_quaternion};
use crate::surfaces::{relative_error, ConeKind, Construction, SlopeSurfaceConfig, XiMode};

pub const SCHEMA_VERSION: u32 = 1;

pub const SANDWICH_EPS: f64 = 1e-12;
pub const CONSTRUCTION_EPS: f64 = 1e-9;
pub const POSITION_NORM_EPS: f64 = 1e-10;
pub const CONSTANT_ANGLE_EPS: f64 = 1e-6;
pub const SLOPE_VALUE_EPS: f64 = 1e-5;

/// Fixed seed of the default suite.
pub const DEFAULT_SEED: u64 = 0x5107_E5EE_D000_0001;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    /// `null` in JSON if a case could not be evaluated.
    pub max_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub worst_case: Option<String>,
}

/// `{"schema": 1, "<check>": {...}, ...}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValidationReport {
    pub schema: u32,
    #[serde(flatten)]
    pub checks: BTreeMap<String, CheckResult>,
}

impl ValidationReport {
    pub fn pass(&self) -> bool {
        self.checks.values().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &str> {
        self.checks.iter().filter(|(_, c)| !c.pass).map(|(k, _)| k.as_str())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is always serializable")
    }
}

#[derive(Debug, Clone)]
pub struct SuiteOptions {
    pub curves: Vec<SlopeCurve>,
    pub thetas: Vec<f64>,
    pub xi_mode: XiMode,
    pub u_range: (f64, f64),
    /// Defaults to each curve's domain.
    pub v_range: Option<(f64, f64)>,
    pub nu: usize,
    pub nv: usize,
    pub curve_samples: usize,
    pub rotation_samples: usize,
    pub seed: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self {
            curves: crate::curves::BUILTIN_CURVES
                .iter()
                .map(|n| builtin_curve(n).expect("builtin"))
                .collect(),
            thetas: vec![0.5, 1.0, 7.0],
            xi_mode: XiMode::Exact,
            u_range: (0.5, 2.0),
            v_range: None,
            nu: 64,
            nv: 64,
            curve_samples: 1000,
            rotation_samples: 1000,
            seed: DEFAULT_SEED,
        }
    }
}

/// Running maximum of one check.
struct Check {
    max: f64,
    tolerance: f64,
    worst: Option<String>,
    failed: bool,
}

impl Check {
    fn new(tolerance: f64) -> Self {
        Self {
            max: 0.0,
            tolerance,
            worst: None,
            failed: false,
        }
    }

    fn record(&mut self, residual: f64, case: impl FnOnce() -> String) {
        if (residual.is_nan() || residual > self.max) && !self.max.is_nan() {
            self.max = residual;
            self.worst = Some(case());
        }
        if residual.is_nan() || residual > self.tolerance {
            self.failed = true;
        }
    }

    fn error(&mut self, case: String) {
        self.max = f64::NAN;
        self.worst = Some(case);
        self.failed = true;
    }

    fn finish(self) -> CheckResult {
        CheckResult {
            max_residual: self.max,
            tolerance: self.tolerance,
            pass: !self.failed,
            worst_case: self.worst,
        }
    }
}

/// Population standard deviation.
pub fn std_dev(values: &[f64]) -> f64 {
    if values.is_empty() {
        return 0.0;
    }
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    (values.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / n).sqrt()
}

/// The value the slope measure should take: `cosh θ` on the timelike cone,
/// `sinh θ` on the spacelike cone.
pub fn expected_slope_measure(cone: ConeKind, theta: f64) -> f64 {
    match cone {
        ConeKind::TimelikeCone => theta.cosh(),
        ConeKind::SpacelikeCone => theta.sinh(),
    }
}

/// Runs every check. Evaluation failures inside a check are reported as a
/// failing entry; only invalid options return `Err`.
pub fn run_suite(opts: &SuiteOptions) -> Result<ValidationReport> {
    if opts.curves.is_empty() || opts.thetas.is_empty() {
        return domain("validation needs at least one curve and one theta");
    }
    if opts.nu < 2 || opts.nv < 2 {
        return domain(format!("grid needs at least 2 samples per direction, got {}×{}", opts.nu, opts.nv));
    }
    let mut checks = BTreeMap::new();
    curve_checks(opts, &mut checks)?;
    rotation_checks(opts, &mut checks);
    surface_checks(opts, &mut checks)?;
    Ok(ValidationReport {
        schema: SCHEMA_VERSION,
        checks,
    })
}

fn curve_checks(opts: &SuiteOptions, out: &mut BTreeMap<String, CheckResult>) -> Result<()> {
    let mut on_quadric = Check::new(CURVE_EPS);
    let mut unit_speed = Check::new(CURVE_EPS);
    let mut tangency = Check::new(CURVE_EPS);
    let mut derivative = Check::new(CURVE_FD_EPS);
    let mut sheet = Check::new(0.0);
    for curve in &opts.curves {
        let r = validate_curve(curve, opts.curve_samples)?;
        let name = || curve.name().to_string();
        on_quadric.record(r.on_quadric, name);
        unit_speed.record(r.unit_speed, name);
        tangency.record(r.tangency, name);
        derivative.record(r.derivative_consistency, name);
        sheet.record(if r.upper_sheet { 0.0 } else { 1.0 }, name);
    }
    out.insert("curve_on_quadric".into(), on_quadric.finish());
    out.insert("curve_unit_speed".into(), unit_speed.finish());
    out.insert("curve_tangency".into(), tangency.finish());
    out.insert("curve_derivative_consistency".into(), derivative.finish());
    out.insert("curve_upper_sheet".into(), sheet.finish());
    Ok(())
}

fn rotation_checks(opts: &SuiteOptions, out: &mut BTreeMap<String, CheckResult>) {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut metric = Check::new(LORENTZ_EPS);
    let mut det = Check::new(LORENTZ_EPS);
    let mut agree = Check::new(SANDWICH_EPS);
    for k in 0..opts.rotation_samples {
        let q = unit_timelike_quaternion(&mut rng);
        let w = uniform_vector(&mut rng, 1.0);
        let case = || format!("sample {k}: q = {q}");
        let (r, s) = match (rotation_matrix(q), sandwich(q, w)) {
            (Ok(r), Ok(s)) => (r, s),
            (Err(e), _) | (_, Err(e)) => {
                metric.error(format!("sample {k}: {e}"));
                continue;
            }
        };
        let c = r.check();
        metric.record(c.metric_residual, case);
        det.record(c.det_residual, case);
        agree.record((r.apply(w) - s).max_abs(), case);
    }

    // Slope rotations along each curve: entries grow like e^ξ cosh v, so the
    // residual is scaled by max(1, ‖R‖²) to measure backward error.
    let mut slope = Check::new(LORENTZ_EPS);
    for curve in &opts.curves {
        let cone = ConeKind::for_quadric(curve.quadric());
        let (v0, v1) = opts.v_range.unwrap_or(curve.domain());
        for &theta in &opts.thetas {
            for i in 0..opts.nu {
                let u = crate::curves::lerp(opts.u_range.0, opts.u_range.1, i, opts.nu);
                for j in 0..opts.nv {
                    let v = crate::curves::lerp(v0, v1, j, opts.nv);
                    let case = || format!("{} theta={theta} u={u} v={v}", curve.name());
                    match slope_rotation(theta, u, curve.tangent(v), cone) {
                        Ok(r) => {
                            let scale = r.max_abs().max(1.0).powi(2);
                            slope.record(r.check().metric_residual / scale, case);
                        }
                        Err(e) => slope.error(format!("{}: {e}", case())),
                    }
                }
            }
        }
    }

    out.insert("lorentz_orthogonality".into(), metric.finish());
    out.insert("lorentz_determinant".into(), det.finish());
    out.insert("rotation_sandwich_agreement".into(), agree.finish());
    out.insert("slope_rotation_orthogonality".into(), slope.finish());
}

fn surface_checks(opts: &SuiteOptions, out: &mut BTreeMap<String, CheckResult>) -> Result<()> {
    let mut equivalence = Check::new(CONSTRUCTION_EPS);
    let mut position = Check::new(POSITION_NORM_EPS);
    let mut cone_membership = Check::new(0.0);
    let mut spacelike = Check::new(0.0);
    let mut constant_angle = Check::new(CONSTANT_ANGLE_EPS);
    let mut angle_value = Check::new(SLOPE_VALUE_EPS);

    for curve in &opts.curves {
        let v_range = opts.v_range.unwrap_or(curve.domain());
        for &theta in &opts.thetas {
            let cfg = SlopeSurfaceConfig::for_curve(theta, curve.clone(), opts.xi_mode)?;
            let label = format!("{} theta={theta}", curve.name());
            let grids: Vec<_> = Construction::ALL
                .iter()
                .map(|&c| cfg.sample_grid(opts.u_range, v_range, opts.nu, opts.nv, c))
                .collect::<Result<_>>()?;
            let direct = &grids[0];
            for other in &grids[1..] {
                for (k, (&a, &b)) in other.points.iter().zip(&direct.points).enumerate() {
                    let (u, v) = (direct.u_values[k / opts.nv], direct.v_values[k % opts.nv]);
                    equivalence.record(relative_error(a, b), || {
                        format!("{label} u={u} v={v} {:?} vs Direct", other.construction)
                    });
                }
            }

            let mut bad_cone = 0usize;
            let mut not_spacelike = 0usize;
            let mut measures = Vec::with_capacity(opts.nu * opts.nv);
            let expected = expected_slope_measure(cfg.cone(), theta);
            for (u, v, x) in direct.samples() {
                let h = cfg.scale(u)?;
                let norm_err = (x.metric_square().abs().sqrt() - h).abs() / h;
                position.record(norm_err, || format!("{label} u={u} v={v}"));
                match cfg.classify_point(u, v) {
                    Ok(p) => {
                        bad_cone += usize::from(!p.cone_correct);
                        not_spacelike += usize::from(!p.spacelike);
                    }
                    Err(e) => spacelike.error(format!("{label} u={u} v={v}: {e}")),
                }
                match cfg.slope_measure(u, v) {
                    Ok(m) => {
                        angle_value.record((m - expected).abs() / expected, || format!("{label} u={u} v={v}"));
                        measures.push(m);
                    }
                    Err(e) => constant_angle.error(format!("{label} u={u} v={v}: {e}")),
                }
            }
            cone_membership.record(bad_cone as f64, || label.clone());
            spacelike.record(not_spacelike as f64, || label.clone());
            constant_angle.record(std_dev(&measures), || label.clone());
        }
    }

    out.insert("construction_equivalence".into(), equivalence.finish());
    out.insert("position_norm".into(), position.finish());
    out.insert("cone_membership".into(), cone_membership.finish());
    out.insert("spacelike_surface".into(), spacelike.finish());
    out.insert("constant_angle".into(), constant_angle.finish());
    out.insert("slope_measure_value".into(), angle_value.finish());
    Ok(())
}
