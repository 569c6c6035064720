//! `slope`: sample, validate and inspect spacelike constant slope surfaces.
//!
//! Exit codes: 0 success, 1 validation failure, 2 bad configuration,
//! 3 I/O failure.

mod args;

use std::fs;
use std::io::{self, Write};
use std::path::Path;
use std::process::ExitCode;

use clap::Parser;
use slope_core::export::{format_f64, write_csv, write_obj};
use slope_core::validation::{run_suite, SuiteOptions};
use slope_core::{builtin_curve, slope_rotation, ConeKind, SlopeCurve, SlopeSurfaceConfig};

use args::{Cli, Command, CurveArg, Format, RotmatArgs, ShapeArgs, SurfaceArgs, ValidateArgs};

#[derive(Debug)]
enum Failure {
    Config(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Config(_) => 2,
            Failure::Io(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Config(m) | Failure::Io(m) => m,
        }
    }
}

fn config(msg: impl Into<String>) -> Failure {
    Failure::Config(msg.into())
}

fn core_error(flag: &str) -> impl Fn(slope_core::Error) -> Failure + '_ {
    move |e| Failure::Config(format!("{flag}: {e}"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Surface(a) => cmd_surface(&a).map(|()| 0),
        Command::Validate(a) => cmd_validate(&a),
        Command::Rotmat(a) => cmd_rotmat(&a).map(|()| 0),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

/// Cone and curve from whichever of `--cone` / `--curve` were given.
fn resolve_shape(shape: &ShapeArgs) -> Result<(ConeKind, SlopeCurve), Failure> {
    let cone = match (shape.cone, shape.curve) {
        (Some(c), _) => c.into(),
        (None, Some(CurveArg::S12Circle)) => ConeKind::SpacelikeCone,
        (None, _) => ConeKind::TimelikeCone,
    };
    let curve_arg = shape.curve.unwrap_or(CurveArg::for_cone(cone));
    let curve = builtin_curve(curve_arg.name()).map_err(core_error("--curve"))?;
    if curve.quadric() != cone.quadric() {
        return Err(config(format!(
            "--curve {} lies on {} but --cone {cone} needs a curve on {}",
            curve_arg.name(),
            curve.quadric(),
            cone.quadric()
        )));
    }
    Ok((cone, curve))
}

fn emit(output: Option<&Path>, bytes: &[u8]) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, bytes).map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(bytes)
                .and_then(|()| out.flush())
                .map_err(|e| Failure::Io(format!("cannot write to stdout: {e}")))
        }
    }
}

fn cmd_surface(a: &SurfaceArgs) -> Result<(), Failure> {
    let (cone, curve) = resolve_shape(&a.shape)?;
    if a.u.min <= 0.0 {
        return Err(config(format!("--u: range must lie in (0, ∞), got {}", a.u)));
    }
    let cfg = SlopeSurfaceConfig::new(a.shape.theta, cone, curve, a.xi_mode.into()).map_err(core_error("--theta"))?;
    let grid = cfg
        .sample_grid(a.u.range(), a.v.range(), a.u.count, a.v.count, a.construction.into())
        .map_err(core_error("--u/--v"))?;
    let mut buf = Vec::new();
    match a.format {
        Format::Obj => write_obj(&grid, &mut buf),
        Format::Csv => write_csv(&grid, &mut buf),
    }
    .map_err(|e| Failure::Io(e.to_string()))?;
    emit(a.output.as_deref(), &buf)
}

fn cmd_validate(a: &ValidateArgs) -> Result<u8, Failure> {
    let mut opts = SuiteOptions {
        xi_mode: a.xi_mode.into(),
        rotation_samples: a.rotations,
        ..SuiteOptions::default()
    };
    if let Some(c) = a.curve {
        opts.curves = vec![builtin_curve(c.name()).map_err(core_error("--curve"))?];
    }
    if let Some(theta) = a.theta {
        opts.thetas = vec![theta];
    }
    if let Some(u) = a.u {
        if u.min <= 0.0 {
            return Err(config(format!("--u: range must lie in (0, ∞), got {u}")));
        }
        opts.u_range = u.range();
        opts.nu = u.count;
    }
    if let Some(v) = a.v {
        opts.v_range = Some(v.range());
        opts.nv = v.count;
    }
    if let Some(seed) = a.seed {
        opts.seed = seed;
    }
    let report = run_suite(&opts).map_err(|e| config(e.to_string()))?;
    let mut json = report.to_json();
    json.push('\n');
    emit(a.output.as_deref(), json.as_bytes())?;
    if report.pass() {
        Ok(0)
    } else {
        let failed: Vec<&str> = report.failures().collect();
        eprintln!("validate: {} check(s) failed: {}", failed.len(), failed.join(", "));
        Ok(1)
    }
}

fn cmd_rotmat(a: &RotmatArgs) -> Result<(), Failure> {
    let (cone, curve) = resolve_shape(&a.shape)?;
    if !(a.u > 0.0 && a.u.is_finite()) {
        return Err(config(format!("--u must be positive, got {}", a.u)));
    }
    if !a.v.is_finite() {
        return Err(config(format!("--v must be finite, got {}", a.v)));
    }
    let r = slope_rotation(a.shape.theta, a.u, curve.tangent(a.v), cone).map_err(core_error("--u/--v"))?;
    let check = r.check();
    let mut text = String::new();
    for row in r.rows() {
        let cells: Vec<String> = row.iter().map(|&x| format_f64(x + 0.0)).collect();
        text.push_str(&cells.join(" "));
        text.push('\n');
    }
    text.push_str(&format!("metric_residual {}\n", format_f64(check.metric_residual)));
    text.push_str(&format!("det_residual {}\n", format_f64(check.det_residual)));
    emit(None, text.as_bytes())
}
