//! Smooth radial profiles with derivative jets, plus the numeric tooling the
//! transform layer is built on: compactly supported bumps, Chebyshev fits of
//! sampled data, and the weighted-derivative operator applied to profiles.
//!
//! Everything here works with derivative *values*: a jet of order `d` at `x`
//! is the vector `[f(x), f'(x), ..., f^(d)(x)]`.

mod bump;
mod cheb;
mod combinators;
mod dnum;
mod jet;
mod poly;
mod sampled;

pub use bump::{bump_profile, window_bump, WindowBump};
pub use cheb::{cheb_fit, ChebProfile};
pub use combinators::{MonomialTimesProfile, ScaledProfile, SumProfile};
pub use dnum::{apply_d_numeric, DProfile};
pub use poly::PolyProfile;
pub use sampled::SampledProfile;

use std::sync::Arc;

#[derive(Debug, thiserror::Error)]
pub enum ProfileError {
    #[error("support [{lo}, {hi}] must lie strictly inside (0, 1)")]
    SupportOutsideBall { lo: f64, hi: f64 },
    #[error("jet order {requested} exceeds the profile's maximum order {available}")]
    InsufficientOrder { requested: usize, available: usize },
    #[error("least squares fit is ill conditioned (condition estimate {cond:.3e})")]
    IllConditionedFit { cond: f64 },
    #[error("invalid profile data: {0}")]
    InvalidData(String),
    #[error("profile io: {0}")]
    Io(String),
}

/// A smooth function of one variable that vanishes, with all derivatives,
/// outside its support interval.
pub trait SmoothProfile: Send + Sync {
    /// Closed interval outside of which the profile is identically zero.
    fn support(&self) -> (f64, f64);

    /// Highest derivative order `jet` can produce.
    fn max_order(&self) -> usize;

    /// Derivative values `[f(x), f'(x), ..., f^(order)(x)]`.
    fn jet(&self, x: f64, order: usize) -> Result<Vec<f64>, ProfileError>;

    fn eval(&self, x: f64) -> f64 {
        self.jet(x, 0).map(|j| j[0]).unwrap_or(0.0)
    }
}

impl<T: SmoothProfile + ?Sized> SmoothProfile for Arc<T> {
    fn support(&self) -> (f64, f64) {
        (**self).support()
    }
    fn max_order(&self) -> usize {
        (**self).max_order()
    }
    fn jet(&self, x: f64, order: usize) -> Result<Vec<f64>, ProfileError> {
        (**self).jet(x, order)
    }
}
