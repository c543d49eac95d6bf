use crate::InversionError;
use coefficients::{d_power_weights, lk_weight};
use exact_core::{rat, rational_to_f64, LaurentPoly};

/// The order-K operator F -> sum_l lk_weight(K,l) (1-s)^{K-l} D^{K-l} F,
/// expanded in ordinary derivatives: sum_j a_j(s) F^(j). Coefficients are
/// exact Laurent polynomials in s; the leading one is (1-s)^K / s^K, which
/// stays away from zero on (0, 1), so the equation never degenerates inside
/// the march interval.
pub struct OdeSystem {
    order: u32,
    coeffs: Vec<LaurentPoly>,
    coeffs_f64: Vec<Vec<(i64, f64)>>,
}

impl OdeSystem {
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeff(&self, j: usize) -> &LaurentPoly {
        &self.coeffs[j]
    }

    pub fn coeff_value(&self, j: usize, s: f64) -> f64 {
        self.coeffs_f64[j]
            .iter()
            .fold(0.0, |acc, (e, c)| acc + c * s.powi(*e as i32))
    }

    /// sum_j a_j(s) jet[j], the operator applied to a derivative stack.
    pub fn apply(&self, jet: &[f64], s: f64) -> f64 {
        jet.iter()
            .enumerate()
            .take(self.order as usize + 1)
            .map(|(j, v)| self.coeff_value(j, s) * v)
            .sum()
    }
}

pub fn assemble_ode(order: u32) -> Result<OdeSystem, InversionError> {
    if order > 5 {
        return Err(InversionError::IndexOutOfRange(format!(
            "operator order budget is K <= 5, got K = {order}"
        )));
    }
    let one_minus_s = LaurentPoly::from_terms([(0, rat(1)), (1, rat(-1))]);
    let mut coeffs = vec![LaurentPoly::zero(); order as usize + 1];
    // The l = K term is the identity contribution; D^{K-l} for l < K expands
    // over derivative orders j = 1 .. K-l with weights w_j s^{-(2(K-l)-j)}.
    coeffs[0] = LaurentPoly::constant(lk_weight(order, order)?);
    for l in 0..order {
        let r = order - l;
        let outer = lk_weight(order, l)?;
        let envelope = one_minus_s.pow(r).scale(&outer);
        for (j, w) in d_power_weights(r)? {
            let shift = -(2 * i64::from(r) - i64::from(j));
            let term = envelope.scale(&w).shift_exp(shift);
            coeffs[j as usize] = &coeffs[j as usize] + &term;
        }
    }
    let coeffs_f64 = coeffs
        .iter()
        .map(|p| p.iter().map(|(e, c)| (e, rational_to_f64(c))).collect())
        .collect();
    Ok(OdeSystem {
        order,
        coeffs,
        coeffs_f64,
    })
}

const RK_SAFETY: f64 = 0.9;
const RK_MAX_STEPS: usize = 2_000_000;

/// One Dormand-Prince 5(4) step from (s, y) with step h; returns the
/// fifth-order state and the embedded error estimate.
fn dopri5_step(
    deriv: &dyn Fn(f64, &[f64]) -> Vec<f64>,
    s: f64,
    y: &[f64],
    h: f64,
) -> (Vec<f64>, Vec<f64>) {
    const C: [f64; 6] = [1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0, 1.0];
    const A: [&[f64]; 6] = [
        &[1.0 / 5.0],
        &[3.0 / 40.0, 9.0 / 40.0],
        &[44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0],
        &[
            19372.0 / 6561.0,
            -25360.0 / 2187.0,
            64448.0 / 6561.0,
            -212.0 / 729.0,
        ],
        &[
            9017.0 / 3168.0,
            -355.0 / 33.0,
            46732.0 / 5247.0,
            49.0 / 176.0,
            -5103.0 / 18656.0,
        ],
        &[
            35.0 / 384.0,
            0.0,
            500.0 / 1113.0,
            125.0 / 192.0,
            -2187.0 / 6784.0,
            11.0 / 84.0,
        ],
    ];
    // Difference between the fifth-order weights (row 6 of A) and the
    // embedded fourth-order weights gives the error directly.
    const E: [f64; 7] = [
        35.0 / 384.0 - 5179.0 / 57600.0,
        0.0,
        500.0 / 1113.0 - 7571.0 / 16695.0,
        125.0 / 192.0 - 393.0 / 640.0,
        -2187.0 / 6784.0 + 92097.0 / 339200.0,
        11.0 / 84.0 - 187.0 / 2100.0,
        -1.0 / 40.0,
    ];
    let dim = y.len();
    let mut k: Vec<Vec<f64>> = Vec::with_capacity(7);
    k.push(deriv(s, y));
    for stage in 0..6 {
        let mut ys = y.to_vec();
        for (i, ki) in k.iter().enumerate() {
            let a = A[stage][i];
            if a != 0.0 {
                for d in 0..dim {
                    ys[d] += h * a * ki[d];
                }
            }
        }
        k.push(deriv(s + C[stage] * h, &ys));
    }
    // Stage 7 used the fifth-order weights, so k[6]'s input is the result.
    let mut y5 = y.to_vec();
    for (i, ki) in k.iter().take(6).enumerate() {
        let a = A[5][i];
        for d in 0..dim {
            y5[d] += h * a * ki[d];
        }
    }
    let mut err = vec![0.0; dim];
    for (i, ki) in k.iter().enumerate() {
        for d in 0..dim {
            err[d] += h * E[i] * ki[d];
        }
    }
    (y5, err)
}

/// Marches y' = deriv(s, y) from `from` through every point of `stops`
/// (monotone, in march order), recording the state at each stop. Error
/// control is relative with a caller-supplied magnitude floor so that
/// scaling the whole problem rescales the solution exactly.
pub(crate) fn march(
    deriv: &dyn Fn(f64, &[f64]) -> Vec<f64>,
    from: f64,
    stops: &[f64],
    y0: Vec<f64>,
    rel_tol: f64,
    y_floor: f64,
) -> Result<Vec<Vec<f64>>, InversionError> {
    let dim = y0.len();
    let mut out = Vec::with_capacity(stops.len());
    let mut s = from;
    let mut y = y0;
    let span = stops
        .last()
        .map(|e| (e - from).abs())
        .unwrap_or(0.0)
        .max(1e-12);
    let mut h_mag = span / 64.0;
    let mut steps = 0usize;
    for &stop in stops {
        let dir = (stop - s).signum();
        while (stop - s) * dir > 1e-15 * span {
            steps += 1;
            if steps > RK_MAX_STEPS {
                return Err(InversionError::OdeStepFailure(format!(
                    "step budget exhausted at s = {s}"
                )));
            }
            let h = dir * h_mag.min((stop - s) * dir);
            let (y_next, err) = dopri5_step(deriv, s, &y, h);
            let mut err_norm = 0.0f64;
            for d in 0..dim {
                let scale = rel_tol * (y[d].abs().max(y_next[d].abs()).max(y_floor));
                err_norm = err_norm.max(err[d].abs() / scale);
            }
            if !err_norm.is_finite() {
                return Err(InversionError::OdeStepFailure(format!(
                    "non-finite error estimate at s = {s}"
                )));
            }
            if err_norm <= 1.0 {
                s += h;
                y = y_next;
            }
            let factor = if err_norm > 0.0 {
                (RK_SAFETY * err_norm.powf(-0.2)).clamp(0.2, 5.0)
            } else {
                5.0
            };
            h_mag = (h_mag * factor).min(span);
            if h_mag < 1e-14 * span {
                return Err(InversionError::OdeStepFailure(format!(
                    "step size underflow at s = {s} (error norm {err_norm:.3e})"
                )));
            }
        }
        if y.iter().any(|v| !v.is_finite()) {
            return Err(InversionError::OdeStepFailure(format!(
                "non-finite state at s = {s}"
            )));
        }
        out.push(y.clone());
    }
    Ok(out)
}
