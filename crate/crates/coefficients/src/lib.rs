//! Combinatorial coefficient families behind the spherical-mean range and
//! inversion identities: the operator weights for L_k and D^r, the two
//! closed forms for the expansion coefficients C_{k,j,r}, the independent
//! family B_{k,j,r}, and the bridge polynomials P_{k,j}, Q_{k,j} built from
//! them. All values are exact rationals.

mod families;
mod weights;

pub use families::{b_coeff, c_coeff_first_form, c_coeff_simplified, p_polynomial, q_polynomial, CoeffTriple};
pub use weights::{d_power_weights, lk_weight};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoeffError {
    #[error("index out of range: {what}")]
    IndexOutOfRange { what: String },
}
