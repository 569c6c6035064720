use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use slope_core::{ConeKind, Construction, XiMode};

#[derive(Debug, Parser)]
#[command(name = "slope", version, about = "Spacelike constant slope surfaces in Minkowski 3-space")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample a surface and write it as an OBJ mesh or CSV table.
    Surface(SurfaceArgs),
    /// Run the invariant suite and print a JSON report.
    Validate(ValidateArgs),
    /// Print the slope rotation matrix at one parameter point.
    Rotmat(RotmatArgs),
}

#[derive(Debug, Args)]
pub struct SurfaceArgs {
    #[command(flatten)]
    pub shape: ShapeArgs,
    /// `min:max:count`, min > 0.
    #[arg(long = "u", default_value = "0.5:2:64", value_name = "MIN:MAX:COUNT", allow_hyphen_values = true)]
    pub u: GridSpec,
    /// `min:max:count`, radians.
    #[arg(long = "v", default_value = "0:6.283185307179586:64", value_name = "MIN:MAX:COUNT", allow_hyphen_values = true)]
    pub v: GridSpec,
    #[arg(long, value_enum, default_value_t = ConstructionArg::Direct)]
    pub construction: ConstructionArg,
    #[arg(long, value_enum, default_value_t = XiModeArg::Exact)]
    pub xi_mode: XiModeArg,
    #[arg(long, value_enum, default_value_t = Format::Obj)]
    pub format: Format,
    /// Output file; stdout if omitted.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    /// Restrict to one builtin curve (default: both).
    #[arg(long, value_enum)]
    pub curve: Option<CurveArg>,
    /// Restrict to one angle (default: 0.5, 1 and 7).
    #[arg(long, value_parser = parse_theta, allow_negative_numbers = true)]
    pub theta: Option<f64>,
    #[arg(long = "u", value_name = "MIN:MAX:COUNT", allow_hyphen_values = true)]
    pub u: Option<GridSpec>,
    #[arg(long = "v", value_name = "MIN:MAX:COUNT", allow_hyphen_values = true)]
    pub v: Option<GridSpec>,
    #[arg(long, value_enum, default_value_t = XiModeArg::Exact)]
    pub xi_mode: XiModeArg,
    /// Number of random rotations.
    #[arg(long, default_value_t = 1000)]
    pub rotations: usize,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Report file; stdout if omitted.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RotmatArgs {
    #[command(flatten)]
    pub shape: ShapeArgs,
    #[arg(long = "u", value_name = "U", allow_negative_numbers = true)]
    pub u: f64,
    #[arg(long = "v", value_name = "V", allow_negative_numbers = true)]
    pub v: f64,
}

#[derive(Debug, Args)]
pub struct ShapeArgs {
    /// Defaults to the cone of the curve's quadric.
    #[arg(long, value_enum)]
    pub cone: Option<ConeArg>,
    /// Slope angle θ > 0, hyperbolic radians.
    #[arg(long, value_parser = parse_theta, allow_negative_numbers = true)]
    pub theta: f64,
    /// Defaults to the builtin curve of the cone.
    #[arg(long, value_enum)]
    pub curve: Option<CurveArg>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConeArg {
    Timelike,
    Spacelike,
}

impl From<ConeArg> for ConeKind {
    fn from(c: ConeArg) -> Self {
        match c {
            ConeArg::Timelike => ConeKind::TimelikeCone,
            ConeArg::Spacelike => ConeKind::SpacelikeCone,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CurveArg {
    H2Geodesic,
    S12Circle,
}

impl CurveArg {
    pub fn name(self) -> &'static str {
        match self {
            CurveArg::H2Geodesic => "h2-geodesic",
            CurveArg::S12Circle => "s12-circle",
        }
    }

    pub fn for_cone(cone: ConeKind) -> Self {
        match cone {
            ConeKind::TimelikeCone => CurveArg::H2Geodesic,
            ConeKind::SpacelikeCone => CurveArg::S12Circle,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConstructionArg {
    Direct,
    Quaternion,
    Homothetic,
}

impl From<ConstructionArg> for Construction {
    fn from(c: ConstructionArg) -> Self {
        match c {
            ConstructionArg::Direct => Construction::Direct,
            ConstructionArg::Quaternion => Construction::Quaternion,
            ConstructionArg::Homothetic => Construction::Homothetic,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum XiModeArg {
    Exact,
    PaperApprox,
}

impl From<XiModeArg> for XiMode {
    fn from(m: XiModeArg) -> Self {
        match m {
            XiModeArg::Exact => XiMode::Exact,
            XiModeArg::PaperApprox => XiMode::PaperApprox,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Obj,
    Csv,
}

/// `min:max:count`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub min: f64,
    pub max: f64,
    pub count: usize,
}

impl GridSpec {
    pub fn range(&self) -> (f64, f64) {
        (self.min, self.max)
    }
}

impl FromStr for GridSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        let [min, max, count] = parts[..] else {
            return Err(format!("expected MIN:MAX:COUNT, got `{s}`"));
        };
        let real = |t: &str| {
            t.trim()
                .parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .ok_or_else(|| format!("`{t}` is not a finite number"))
        };
        let (min, max) = (real(min)?, real(max)?);
        let count: usize = count
            .trim()
            .parse()
            .map_err(|_| format!("`{count}` is not a sample count"))?;
        if min >= max {
            return Err(format!("range must be ascending, got {min}:{max}"));
        }
        if count < 2 {
            return Err(format!("need at least 2 samples, got {count}"));
        }
        Ok(GridSpec { min, max, count })
    }
}

impl fmt::Display for GridSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.min, self.max, self.count)
    }
}

fn parse_theta(s: &str) -> Result<f64, String> {
    let theta: f64 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    if !(theta > 0.0 && theta.is_finite()) {
        return Err(format!("theta must be positive and finite, got {s}"));
    }
    Ok(theta)
}
