//! Exact-arithmetic substrate for the spherical-mean verification suite:
//! big rationals, Laurent polynomials in one variable, bivariate polynomials
//! in (t, u), and the handful of calculus operations the identity checks
//! need (d/dt, D = (1/t)d/dt, affine composition, integration in u).
//!
//! Everything here is exact; any nonzero discrepancy reported upstream is a
//! real discrepancy, not roundoff.

pub mod binomial;
pub mod bivariate;
pub mod laurent;
pub mod rational;

pub use binomial::binomial_extended;
pub use bivariate::{integrate_in_u, q_kernel, q_power, BivariatePoly, UBound};
pub use laurent::{rational_to_f64, LaurentPoly};
pub use rational::{factorial, int, pow2, rat, ratio, BigInt, BigRational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("affine composition needs a true polynomial; found exponent {exponent}")]
    NegativeExponentComposition { exponent: i64 },
    #[error("evaluation at zero with negative exponent {exponent}")]
    NegativeExponentAtZero { exponent: i64 },
}
