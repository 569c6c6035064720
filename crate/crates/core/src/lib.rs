//! Split-quaternion algebra in Minkowski 3-space and spacelike constant
//! slope surfaces.
//!
//! * [`algebra`]: split quaternions, vectors of E₁³, causal character, polar forms.
//! * [`rotation`]: Lorentz rotations from unit timelike quaternions.
//! * [`curves`]: unit-speed spacelike generating curves on H² and S₁².
//! * [`surfaces`]: constant slope surfaces built three equivalent ways.
//! * [`validation`]: the invariant suite behind `slope validate`.
//! * [`export`]: OBJ and CSV output.

pub mod algebra;
pub mod curves;
pub mod diff;
pub mod error;
pub mod export;
pub mod rotation;
pub mod sampling;
pub mod surfaces;
pub mod validation;

pub use algebra::{
    lorentz_cross, minkowski_dot, sq_product, CausalCharacter, PolarForm, PolarKind, SplitQuaternion, Vec3M,
};
pub use curves::{builtin_curve, validate_curve, AmbientQuadric, CurveReport, SlopeCurve, BUILTIN_CURVES};
pub use error::{Error, Result};
pub use rotation::{
    is_lorentz_orthogonal, rotation_matrix, sandwich, slope_quaternion, slope_rotation, AngleConvention,
    LorentzCheck, LorentzRotation,
};
pub use surfaces::{
    relative_error, ConeKind, Construction, HomotheticMotion, PointReport, SlopeSurfaceConfig, SurfaceSampleGrid,
    XiMode,
};
