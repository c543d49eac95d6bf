//! Reconstruction of a radial density (or a harmonic mode weight) from its
//! reduced spherical mean data, by assembling the weighted-derivative
//! operator as a linear ODE in s = 1 - t and marching from zero initial
//! conditions outside the support down to the requested inner radius.

mod ode;
mod rhs;
mod solve;

pub use ode::{assemble_ode, OdeSystem};
pub use rhs::{build_rhs_harmonic, build_rhs_radial, RhsProfile};
pub use solve::{
    round_trip_harmonic, round_trip_radial, solve_harmonic, solve_radial, InversionResult,
};

use profiles::ProfileError;
use transforms::TransformError;

#[derive(Debug, thiserror::Error)]
pub enum InversionError {
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("data does not vanish near t = 0: {0}")]
    DataDoesNotVanishNearOne(String),
    #[error("ODE step failure: {0}")]
    OdeStepFailure(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("coefficient table: {0}")]
    Coefficient(String),
    #[error(transparent)]
    Profile(#[from] ProfileError),
    #[error(transparent)]
    Transform(#[from] TransformError),
}

impl From<coefficients::CoeffError> for InversionError {
    fn from(e: coefficients::CoeffError) -> Self {
        InversionError::Coefficient(e.to_string())
    }
}
