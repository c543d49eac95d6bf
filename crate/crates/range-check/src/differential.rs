use crate::RangeError;
use coefficients::lk_weight;
use profiles::{apply_d_numeric, SmoothProfile};
use std::sync::Arc;

/// Result of a single two-sided condition check.
#[derive(Debug, Clone)]
pub struct CheckDetail {
    /// max_t |LHS - RHS| / normalization.
    pub residual: f64,
    /// Absolute |LHS - RHS| per grid point.
    pub per_t: Vec<f64>,
    /// max_t (|LHS| + |RHS|), floored at 1e-12 times the data scale.
    pub normalization: f64,
}

impl CheckDetail {
    pub(crate) fn from_sides(sides: &[(f64, f64)], data_scale: f64) -> CheckDetail {
        let per_t: Vec<f64> = sides.iter().map(|(a, b)| (a - b).abs()).collect();
        let two_sided = sides
            .iter()
            .fold(0.0f64, |m, (a, b)| m.max(a.abs() + b.abs()));
        let floor = (1e-12 * data_scale).max(1e-300);
        let normalization = two_sided.max(floor);
        let residual = per_t.iter().fold(0.0f64, |m, d| m.max(*d)) / normalization;
        CheckDetail {
            residual,
            per_t,
            normalization,
        }
    }
}

/// Odd-dimension differential range condition: the order-k weighted
/// derivative operator sum_l lk_weight(k,l) (1-x)^{k-l} D^{k-l} applied to
/// the data, evaluated at 1-t, must equal its value at 1+t. Derivatives come
/// from the profile's own jets (so pass fitted data, not raw samples).
pub fn check_differential(
    h: Arc<dyn SmoothProfile>,
    k: u32,
    t_grid: &[f64],
) -> Result<CheckDetail, RangeError> {
    if t_grid.iter().any(|t| !(*t >= 0.0 && *t <= 1.0)) {
        return Err(RangeError::InvalidInput(
            "differential condition grid must lie in [0, 1]".into(),
        ));
    }
    // D^{k-l} h for each operator term, plus the plain profile for l = k.
    let mut powers = Vec::with_capacity(k as usize + 1);
    for l in 0..=k {
        powers.push(apply_d_numeric(h.clone(), (k - l) as usize)?);
    }
    let weights: Vec<f64> = (0..=k)
        .map(|l| {
            lk_weight(k, l)
                .map(|w| exact_core::rational_to_f64(&w))
                .map_err(|e| RangeError::Coefficient(e.to_string()))
        })
        .collect::<Result<_, _>>()?;

    let apply_at = |x: f64| -> f64 {
        let mut acc = 0.0;
        for l in 0..=k as usize {
            let power = (k as usize) - l;
            acc += weights[l] * (1.0 - x).powi(power as i32) * powers[l].eval(x);
        }
        acc
    };

    let sides: Vec<(f64, f64)> = t_grid
        .iter()
        .map(|t| (apply_at(1.0 - t), apply_at(1.0 + t)))
        .collect();
    let data_scale = t_grid.iter().fold(0.0f64, |m, t| {
        m.max(h.eval(1.0 - t).abs()).max(h.eval(1.0 + t).abs())
    });
    Ok(CheckDetail::from_sides(&sides, data_scale))
}

#[cfg(test)]
mod tests {
    use super::*;
    use profiles::{window_bump, PolyProfile};

    #[test]
    fn symmetric_data_passes_at_order_zero() {
        // Condition at k = 0 is plain symmetry about 1.
        let h: Arc<dyn SmoothProfile> = Arc::new(window_bump(1.0, 0.5, 1.0, 8).unwrap());
        let grid: Vec<f64> = (1..50).map(|i| i as f64 / 50.0).collect();
        let detail = check_differential(h, 0, &grid).unwrap();
        assert!(detail.residual <= 1e-14, "residual {}", detail.residual);
    }

    #[test]
    fn linear_data_fails_with_unit_relative_residual() {
        // h(t) = t: |(1-t) - (1+t)| = 2t, normalization (1-t)+(1+t) = 2,
        // so the max relative residual over (0,1) approaches 1.
        let h: Arc<dyn SmoothProfile> = Arc::new(PolyProfile::new(vec![0.0, 1.0], (1e-9, 2.0)));
        let grid: Vec<f64> = (1..=99).map(|i| i as f64 / 100.0).collect();
        let detail = check_differential(h, 0, &grid).unwrap();
        assert!((detail.residual - 0.99).abs() < 1e-12);
        assert!((detail.per_t[0] - 0.02).abs() < 1e-12);
        assert!((detail.normalization - 2.0).abs() < 1e-12);
    }

    #[test]
    fn zero_data_hits_the_floor_not_nan() {
        let h: Arc<dyn SmoothProfile> = Arc::new(PolyProfile::constant(0.0, (0.1, 1.9)));
        let detail = check_differential(h, 1, &[0.2, 0.5]).unwrap();
        assert_eq!(detail.residual, 0.0);
        assert!(detail.normalization > 0.0);
    }

    #[test]
    fn order_exceeding_jet_budget_errors() {
        let h: Arc<dyn SmoothProfile> = Arc::new(window_bump(1.0, 0.5, 1.0, 2).unwrap());
        assert!(check_differential(h, 4, &[0.5]).is_err());
    }
}
