//! Numeric range checkers for reduced sphere-mean data: the odd-dimension
//! differential condition (equality of a weighted derivative operator across
//! the reflection t -> 2 - t), the integral condition with the quartic
//! weight, the antiderivative construction that turns general-mode data into
//! check-ready form, and the experiment that exercises both conditions on
//! the same data (they pass together on true data and fail together on
//! perturbed data).

mod differential;
mod experiment;
mod integral;
mod phi;

pub use differential::{check_differential, CheckDetail};
pub use experiment::{
    check_sampled_data, co_failure_family, equivalence_experiment, necessity_family,
    ExperimentCase, Perturbation,
};
pub use integral::{check_integral, check_integral_q_form};
pub use phi::construct_phi;

use profiles::ProfileError;
use transforms::TransformError;

#[derive(Debug, thiserror::Error)]
pub enum RangeError {
    #[error(transparent)]
    Transform(#[from] TransformError),
    #[error(transparent)]
    Profile(#[from] ProfileError),
    #[error("coefficient table: {0}")]
    Coefficient(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

/// Joint outcome of both range checks on one data set. Residuals are maxima
/// over the t grid of |LHS - RHS| divided by the respective normalization
/// (the largest two-sided magnitude, floored at 1e-12 times the data scale).
#[derive(Debug, Clone, serde::Serialize)]
pub struct RangeReport {
    pub differential_residual: f64,
    pub integral_residual: f64,
    pub t_grid: Vec<f64>,
    /// Absolute two-sided differences per grid point, differential condition.
    pub per_t_differential: Vec<f64>,
    /// Absolute two-sided differences per grid point, integral condition.
    pub per_t_integral: Vec<f64>,
    pub normalization_differential: f64,
    pub normalization_integral: f64,
}

impl RangeReport {
    pub fn passes(&self, tol: f64) -> bool {
        self.differential_residual <= tol && self.integral_residual <= tol
    }
}

/// Default evaluation grid for the conditions: the open interval with the
/// outermost hundredths excluded, where both conditions are stated.
pub fn default_t_grid() -> Vec<f64> {
    (1..=98).map(|i| i as f64 / 100.0).collect()
}
