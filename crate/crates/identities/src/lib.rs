//! Exact verification of the operator identities linking the weighted
//! spherical-mean integrals H^L, H^R, G (left, right, interior pieces of
//! the u-integral against the quartic kernel Q^k) with the differential
//! operator L_k. Every check runs in exact rational arithmetic on
//! polynomial data, so `holds` means identically zero discrepancy.

mod builders;
mod sweep;
mod verifiers;

pub use builders::{apply_lk, build_g, build_hl, build_hr, ddt_d2k};
pub use sweep::{find_sweep, random_polynomial, registry, IdentitySweep, SweepCell};
pub use verifiers::{
    verify_g_triple_sum, verify_hl_expansion, verify_lk_bridge, verify_lk_expansion,
    verify_reflection_relations, verify_shifted_order,
};

use exact_core::LaurentPoly;

/// Outcome of one identity check on one polynomial datum.
#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub identity_name: String,
    pub k: u32,
    /// Harmonic order for shifted checks; 0 for the radial ones.
    pub m: u32,
    pub g_description: String,
    pub holds: bool,
    /// LHS - RHS after clearing; zero iff holds.
    pub discrepancy: LaurentPoly,
}

impl IdentityReport {
    fn new(name: &str, k: u32, m: u32, g_description: &str, discrepancy: LaurentPoly) -> Self {
        Self {
            identity_name: name.to_string(),
            k,
            m,
            g_description: g_description.to_string(),
            holds: discrepancy.is_zero(),
            discrepancy,
        }
    }
}
