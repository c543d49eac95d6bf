use crate::InversionError;
use coefficients::d_power_weights;
use exact_core::rational::neg_one_pow;
use exact_core::{factorial, pow2, rational_to_f64, BigRational};
use profiles::{cheb_fit, ChebProfile, ProfileError, SampledProfile, SmoothProfile};
use transforms::{fit_degree, DimensionParams, HarmonicMode};

/// Fit at the highest degree the sample distribution can pay for. Dense
/// Chebyshev-style grids carry the full half-count budget; distributions
/// that trip the conditioning gate fall down the ladder until it holds.
fn fit_to_data(h: &SampledProfile, hull: (f64, f64)) -> Result<ChebProfile, ProfileError> {
    let mut degree = ((h.grid().len() - 1) / 2).clamp(1, 256);
    loop {
        match cheb_fit(h, hull, degree) {
            Err(ProfileError::IllConditionedFit { .. }) if degree > 20 => {
                degree = degree * 2 / 3;
            }
            other => return other,
        }
    }
}

/// [d/dt D^r h](t) from a fitted profile's jets: differentiating
/// D^r = sum_j w_j t^{-(2r-j)} d^j/dt^j once more in t gives, per term,
/// -(2r-j) t^{-(2r-j)-1} h^(j) + t^{-(2r-j)} h^(j+1). Needs jets to r+1.
fn data_derivative(
    fit: &ChebProfile,
    weights: &[(u32, f64)],
    r: u32,
    t: f64,
) -> Result<f64, ProfileError> {
    let jet = fit.jet(t, r as usize + 1)?;
    if r == 0 {
        return Ok(jet[1]);
    }
    let mut acc = 0.0;
    for (j, w) in weights {
        let p = i64::from(2 * r - j);
        acc += w
            * (-(p as f64) * t.powi(-(p as i32) - 1) * jet[*j as usize]
                + t.powi(-(p as i32)) * jet[*j as usize + 1]);
    }
    Ok(acc)
}

/// Right-hand side of the reconstruction ODE as a function of s = 1 - t:
/// t^{2K} / c times [d/dt D^R] of the fitted data, which by the inversion
/// identity equals [L_K(s^{2K+1} f)](s).
pub struct RhsProfile {
    fit: ChebProfile,
    weights: Vec<(u32, f64)>,
    data_order: u32,
    t_power: i32,
    constant: f64,
    support: (f64, f64),
}

impl RhsProfile {
    fn new(
        h: &SampledProfile,
        data_order: u32,
        t_power: i32,
        constant: f64,
    ) -> Result<Self, InversionError> {
        let grid = h.grid();
        let hull = (grid[0], grid[grid.len() - 1]);
        let fit = fit_to_data(h, hull)?;
        let weights = if data_order >= 1 {
            d_power_weights(data_order)?
                .into_iter()
                .map(|(j, w)| (j, rational_to_f64(&w)))
                .collect()
        } else {
            Vec::new()
        };
        Ok(RhsProfile {
            fit,
            weights,
            data_order,
            t_power,
            constant,
            support: ((1.0 - hull.1).max(0.0), (1.0 - hull.0).min(1.0)),
        })
    }

    pub fn value(&self, s: f64) -> Result<f64, InversionError> {
        let t = 1.0 - s;
        if t <= 0.0 {
            return Ok(0.0);
        }
        let d = data_derivative(&self.fit, &self.weights, self.data_order, t)?;
        Ok(t.powi(self.t_power) / self.constant * d)
    }
}

impl SmoothProfile for RhsProfile {
    fn support(&self) -> (f64, f64) {
        self.support
    }

    // Values only: derivatives in s would need one more data derivative per
    // order, and the marcher never asks for them.
    fn max_order(&self) -> usize {
        0
    }

    fn jet(&self, s: f64, order: usize) -> Result<Vec<f64>, ProfileError> {
        if order > 0 {
            return Err(ProfileError::InsufficientOrder {
                requested: order,
                available: 0,
            });
        }
        let v = self
            .value(s)
            .map_err(|e| ProfileError::InvalidData(e.to_string()))?;
        Ok(vec![v])
    }
}

fn signed_constant(sign_order: u32, k: u32, two_power: i64) -> f64 {
    let c = neg_one_pow(i64::from(sign_order))
        * BigRational::from_integer(factorial(k))
        * pow2(two_power);
    rational_to_f64(&c)
}

/// RHS for the radial reconstruction: s -> (t^{2k} / ((-1)^k k! 2^{3k}))
/// [d/dt D^{2k} h](t) at t = 1 - s, the target value of [L_k(t^{2k+1} f)](s).
pub fn build_rhs_radial(
    h: &SampledProfile,
    dims: &DimensionParams,
) -> Result<RhsProfile, InversionError> {
    let k = dims.k();
    RhsProfile::new(
        h,
        2 * k,
        2 * k as i32,
        signed_constant(k, k, 3 * i64::from(k)),
    )
}

/// RHS for a degree-m mode: s -> (t^{2(m+k)} / ((-1)^{m+k} k! 2^k))
/// [d/dt D^{m+2k} h_{m,l}](t) at t = 1 - s.
pub fn build_rhs_harmonic(
    h_ml: &SampledProfile,
    mode: &HarmonicMode,
    dims: &DimensionParams,
) -> Result<RhsProfile, InversionError> {
    let m = mode.m();
    let k = dims.k();
    if m + k > 4 {
        return Err(InversionError::IndexOutOfRange(format!(
            "mode solve budget is m + k <= 4, got m + k = {}",
            m + k
        )));
    }
    RhsProfile::new(
        h_ml,
        m + 2 * k,
        2 * (m + k) as i32,
        signed_constant(m + k, k, i64::from(k)),
    )
}
