use thiserror::Error;

/// Errors raised by the algebra, rotation and surface routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("lightlike split quaternion has no inverse (characteristic {characteristic:e})")]
    LightlikeNoInverse { characteristic: f64 },

    #[error("split quaternion is lightlike or zero, no polar form exists")]
    DegenerateQuaternion,

    #[error("timelike split quaternion with a lightlike vector part has no polar form")]
    LightlikeVectorPart,

    #[error("timelike split quaternion with spacelike vector part and negative scalar part has no polar form with nonnegative magnitude")]
    NegativeScalarPart,

    #[error("split quaternion is not unit timelike (characteristic {characteristic})")]
    NotUnitTimelike { characteristic: f64 },

    #[error("rotation axis is not unit spacelike (<a,a> = {metric})")]
    AxisNotUnitSpacelike { metric: f64 },

    #[error("product of slope quaternions has scalar part {scalar:e}, expected a pure quaternion")]
    NonPureProduct { scalar: f64 },

    #[error("surface normal is degenerate (<n,n> = {metric:e})")]
    DegenerateNormal { metric: f64 },

    #[error("unknown curve `{0}`")]
    UnknownCurve(String),

    #[error("{0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
