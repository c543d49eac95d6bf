//! Numeric forward models for the spherical mean transform on the unit ball
//! with centers on the boundary sphere: the radial reduction to a weighted
//! 1-D integral, the harmonic-mode reduction, a direct 3-D sphere-mean
//! oracle, and the scaling between measured means and the reduced data.

mod data_profile;
mod dims;
mod forward;
mod harmonics;
pub mod quad;

pub use data_profile::ReducedDataProfile;
pub use dims::{sphere_area, DimensionParams, OmegaConvention};
pub use forward::{
    convention_experiment, direct_sphere_mean_3d, fit_degree, forward_harmonic,
    forward_radial, scale_data_to_hk, ConventionReport,
};
pub use harmonics::{dimension_of_harmonics, HarmonicMode};

use profiles::ProfileError;

#[derive(Debug, thiserror::Error)]
pub enum TransformError {
    #[error("quadrature did not stabilize to 1e-12 relative by order {max_order} (last change {last_change:.3e})")]
    QuadratureNotConverged { max_order: usize, last_change: f64 },
    #[error("dimension n = {n} is not supported here; {detail}")]
    DimensionUnsupported { n: u32, detail: String },
    #[error("harmonic index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error(transparent)]
    Profile(#[from] ProfileError),
}
