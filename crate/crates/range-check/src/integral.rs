use crate::differential::CheckDetail;
use crate::RangeError;
use profiles::SmoothProfile;
use transforms::quad::integrate_adaptive_with_floor;

/// The quartic weight ((1+u)^2 - t^2)((1-u)^2 - t^2), positive on both
/// integration domains u < 1 - t and u > 1 + t.
fn w_weight(t: f64, u: f64) -> f64 {
    let a = (1.0 + u) * (1.0 + u) - t * t;
    let b = (1.0 - u) * (1.0 - u) - t * t;
    a * b
}

fn w_power(t: f64, u: f64, mu: f64) -> f64 {
    let w = w_weight(t, u);
    let rounded = mu.round();
    if (mu - rounded).abs() < 1e-12 {
        w.powi(rounded as i32)
    } else {
        w.powf(mu)
    }
}

fn one_side(
    g: &dyn SmoothProfile,
    t: f64,
    lo: f64,
    hi: f64,
    weight: &dyn Fn(f64, f64) -> f64,
    abs_floor: f64,
) -> Result<f64, RangeError> {
    let (s_lo, s_hi) = g.support();
    let a = lo.max(s_lo);
    let b = hi.min(s_hi);
    Ok(integrate_adaptive_with_floor(
        &|u| u * g.eval(u) * weight(t, u),
        a,
        b,
        abs_floor,
    )?)
}

fn check_with_weight(
    g: &dyn SmoothProfile,
    mu: f64,
    t_grid: &[f64],
    weight: &dyn Fn(f64, f64) -> f64,
) -> Result<CheckDetail, RangeError> {
    if t_grid.iter().any(|t| !(*t > 0.0 && *t < 1.0)) {
        return Err(RangeError::InvalidInput(
            "integral condition grid must lie in (0, 1)".into(),
        ));
    }
    if mu < 0.0 {
        return Err(RangeError::InvalidInput(format!(
            "weight exponent must be nonnegative, got {mu}"
        )));
    }
    let data_scale = t_grid.iter().fold(0.0f64, |m, t| {
        m.max(g.eval(1.0 - t).abs()).max(g.eval(1.0 + t).abs())
    });
    // Mass integrals below this floor are invisible next to the data; this
    // keeps tail slivers from spinning the quadrature forever.
    let abs_floor = 1e-13 * data_scale;
    let mut sides = Vec::with_capacity(t_grid.len());
    for &t in t_grid {
        let left = one_side(g, t, 0.0, 1.0 - t, weight, abs_floor)?;
        let right = one_side(g, t, 1.0 + t, 2.0, weight, abs_floor)?;
        sides.push((left, right));
    }
    Ok(CheckDetail::from_sides(&sides, data_scale))
}

/// Integral range condition: the weighted mass of the data below 1 - t must
/// equal its mass above 1 + t, with weight W^mu. The exponent is mu = k for
/// the radial case in odd dimension 2k + 3 (half-integers belong to even
/// dimensions), and m + k for degree-m modes after the antiderivative
/// construction.
pub fn check_integral(
    g: &dyn SmoothProfile,
    mu: f64,
    t_grid: &[f64],
) -> Result<CheckDetail, RangeError> {
    check_with_weight(g, mu, t_grid, &|t, u| w_power(t, u, mu))
}

/// Same condition computed through the other quartic's integer power,
/// (-1)^k Q(t,u)^k with the roles of t and u swapped relative to the
/// differential side. Equals `check_integral` with mu = k identically; kept
/// as an independent route for the consistency test.
pub fn check_integral_q_form(
    g: &dyn SmoothProfile,
    k: u32,
    t_grid: &[f64],
) -> Result<CheckDetail, RangeError> {
    let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
    let weight = move |t: f64, u: f64| {
        let q = ((1.0 + t) * (1.0 + t) - u * u) * (u * u - (1.0 - t) * (1.0 - t));
        sign * q.powi(k as i32)
    };
    check_with_weight(g, k as f64, t_grid, &weight)
}

#[cfg(test)]
mod tests {
    use super::*;
    use profiles::PolyProfile;

    #[test]
    fn constant_data_fails_with_hand_computed_sides() {
        // g = 1, mu = 0: left = (1-t)^2/2, right = (3 - 2t - t^2)/2.
        let g = PolyProfile::constant(1.0, (1e-12, 2.0));
        let grid = [0.01, 0.25, 0.5];
        let detail = check_integral(&g, 0.0, &grid).unwrap();
        for (i, t) in grid.iter().enumerate() {
            let left = (1.0 - t) * (1.0 - t) / 2.0;
            let right = (3.0 - 2.0 * t - t * t) / 2.0;
            assert!(
                (detail.per_t[i] - (left - right).abs()).abs() < 1e-12,
                "t={t}"
            );
        }
        // Near t = 0 the absolute gap is 1 and the normalization 2.
        assert!((detail.per_t[0] - 1.0).abs() < 0.05);
        assert!(detail.residual > 0.45);
    }

    #[test]
    fn one_sided_support_shows_left_mass_only() {
        // Supported in (0, 0.5): right integral empty for every t, so the
        // difference equals the left mass.
        let g = PolyProfile::constant(2.0, (0.1, 0.5));
        let detail = check_integral(&g, 0.0, &[0.3]).unwrap();
        // Left: 2 * (u^2/2) from 0.1 to 0.5 = 0.25 - 0.01 = 0.24.
        assert!((detail.per_t[0] - 0.24).abs() < 1e-12);
    }

    #[test]
    fn q_form_equals_w_form_for_integer_exponents() {
        let g = PolyProfile::new(vec![0.3, 1.0, -0.5], (0.05, 1.95));
        let grid: Vec<f64> = (1..=19).map(|i| i as f64 / 20.0).collect();
        for k in 0..=3u32 {
            let w = check_integral(&g, k as f64, &grid).unwrap();
            let q = check_integral_q_form(&g, k, &grid).unwrap();
            for (a, b) in w.per_t.iter().zip(&q.per_t) {
                assert!((a - b).abs() <= 1e-12 * a.abs().max(1.0), "k={k}");
            }
        }
    }

    #[test]
    fn grid_outside_open_interval_is_rejected() {
        let g = PolyProfile::constant(1.0, (0.1, 1.9));
        assert!(check_integral(&g, 0.0, &[0.0]).is_err());
        assert!(check_integral(&g, 0.0, &[1.0]).is_err());
        assert!(check_integral(&g, -1.0, &[0.5]).is_err());
    }
}
