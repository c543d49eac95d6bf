use exact_core::{ratio, LaurentPoly};
use rand::Rng;

use crate::verifiers::{
    verify_g_triple_sum, verify_hl_expansion, verify_lk_bridge, verify_lk_expansion,
    verify_reflection_relations, verify_shifted_order,
};
use crate::IdentityReport;

/// One grid point of a sweep. m is ignored by the radial identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepCell {
    pub k: u32,
    pub m: u32,
}

/// A named identity check that can run over sweep cells. Implementations
/// are registered in `registry` and selected by name at runtime.
pub trait IdentitySweep: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    fn default_max_k(&self) -> u32;
    fn uses_m(&self) -> bool {
        false
    }
    fn run(&self, cell: SweepCell, g: &LaurentPoly) -> IdentityReport;
}

macro_rules! radial_sweep {
    ($ty:ident, $name:literal, $desc:literal, $max_k:literal, $f:ident) => {
        struct $ty;
        impl IdentitySweep for $ty {
            fn name(&self) -> &'static str {
                $name
            }
            fn description(&self) -> &'static str {
                $desc
            }
            fn default_max_k(&self) -> u32 {
                $max_k
            }
            fn run(&self, cell: SweepCell, g: &LaurentPoly) -> IdentityReport {
                $f(g, cell.k)
            }
        }
    };
}

radial_sweep!(
    ReflectionRelations,
    "reflection-relations",
    "derivative of the left integral against interior and reflected right integrals",
    4,
    verify_reflection_relations
);
radial_sweep!(
    LkBridge,
    "lk-bridge",
    "left-integral derivative equals the scaled L_k of the weighted density at 1-t",
    4,
    verify_lk_bridge
);
radial_sweep!(
    HlExpansion,
    "hl-expansion",
    "left-integral derivative expanded through the P bridge polynomials",
    4,
    verify_hl_expansion
);
radial_sweep!(
    LkExpansion,
    "lk-expansion",
    "L_k at 1-t expanded through the Q bridge polynomials for arbitrary h",
    4,
    verify_lk_expansion
);
radial_sweep!(
    GTripleSum,
    "g-triple-sum",
    "interior-integral derivative as the explicit triple sum over g-derivatives",
    3,
    verify_g_triple_sum
);

struct ShiftedOrder;
impl IdentitySweep for ShiftedOrder {
    fn name(&self) -> &'static str {
        "shifted-order"
    }
    fn description(&self) -> &'static str {
        "bridge and reflection relations rerun at order m + k"
    }
    fn default_max_k(&self) -> u32 {
        4
    }
    fn uses_m(&self) -> bool {
        true
    }
    fn run(&self, cell: SweepCell, g: &LaurentPoly) -> IdentityReport {
        verify_shifted_order(g, cell.m, cell.k)
    }
}

pub fn registry() -> Vec<Box<dyn IdentitySweep>> {
    vec![
        Box::new(ReflectionRelations),
        Box::new(LkBridge),
        Box::new(HlExpansion),
        Box::new(LkExpansion),
        Box::new(GTripleSum),
        Box::new(ShiftedOrder),
    ]
}

pub fn find_sweep(name: &str) -> Option<Box<dyn IdentitySweep>> {
    registry().into_iter().find(|s| s.name() == name)
}

/// Dense random polynomial of the sweep family: exponents 0..=max_degree,
/// numerators in [-9, 9], denominators in {1, 2, 3}.
pub fn random_polynomial<R: Rng>(rng: &mut R, max_degree: u32) -> LaurentPoly {
    LaurentPoly::from_terms((0..=i64::from(max_degree)).map(|e| {
        let num = rng.gen_range(-9..=9);
        let den = rng.gen_range(1..=3);
        (e, ratio(num, den))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn registry_names_are_unique_and_resolvable() {
        let names: Vec<_> = registry().iter().map(|s| s.name()).collect();
        let mut dedup = names.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(names.len(), dedup.len());
        for name in names {
            assert!(find_sweep(name).is_some());
        }
        assert!(find_sweep("no-such-check").is_none());
    }

    #[test]
    fn random_polynomial_is_reproducible() {
        let mut a = ChaCha8Rng::seed_from_u64(42);
        let mut b = ChaCha8Rng::seed_from_u64(42);
        assert_eq!(random_polynomial(&mut a, 8), random_polynomial(&mut b, 8));
        assert!(random_polynomial(&mut a, 8).max_exp().unwrap_or(0) <= 8);
    }
}
