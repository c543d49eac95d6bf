use crate::quad::integrate_adaptive;
use crate::{DimensionParams, HarmonicMode, TransformError};
use profiles::{cheb_fit, SampledProfile, SmoothProfile};

/// The quartic weight ((1+t)^2 - u^2)(u^2 - (1-t)^2), nonnegative on the
/// integration range |1-t| <= u <= 1+t.
fn q_weight(t: f64, u: f64) -> f64 {
    let a = (1.0 + t) * (1.0 + t) - u * u;
    let b = u * u - (1.0 - t) * (1.0 - t);
    a * b
}

fn validate_grid(t_grid: &[f64]) -> Result<(), TransformError> {
    if t_grid.is_empty() {
        return Err(TransformError::InvalidGrid("empty t grid".into()));
    }
    if t_grid.iter().any(|t| !(*t > 0.0 && *t < 2.0)) {
        return Err(TransformError::InvalidGrid(
            "sphere radii must lie in (0, 2)".into(),
        ));
    }
    Ok(())
}

fn reduced_integral(
    f: &dyn SmoothProfile,
    exponent: u32,
    t: f64,
) -> Result<f64, TransformError> {
    let (lo_s, hi_s) = f.support();
    let lo = (1.0 - t).abs().max(lo_s);
    let hi = hi_s.min(1.0);
    integrate_adaptive(
        &|u| u * f.eval(u) * q_weight(t, u).powi(exponent as i32),
        lo,
        hi,
    )
}

/// Reduced radial data h_k(t) = integral over u in (|1-t|, 1) of
/// u f(u) Q(t,u)^k. For t < 1 this is the weighted integral over the spherical
/// cap the radius-t sphere cuts from the support; the |1-t| lower limit
/// extends it to radii t in (1, 2), where spheres around a boundary center
/// still meet the ball.
pub fn forward_radial(
    f: &dyn SmoothProfile,
    dims: &DimensionParams,
    t_grid: &[f64],
) -> Result<SampledProfile, TransformError> {
    validate_grid(t_grid)?;
    let mut values = Vec::with_capacity(t_grid.len());
    for &t in t_grid {
        values.push(reduced_integral(f, dims.k(), t)?);
    }
    Ok(SampledProfile::new(t_grid.to_vec(), values)?)
}

/// Harmonic-mode forward model: the mode weight f_tilde = f_{m,l} / r^m goes
/// through the same reduced integral with exponent m + k, and the mode data
/// h_{m,l} follows by m applications of D = (1/t) d/dt and a constant.
/// Returns both the raw integral phi and the data h on the grid.
pub fn forward_harmonic(
    f_tilde: &dyn SmoothProfile,
    mode: &HarmonicMode,
    dims: &DimensionParams,
    t_grid: &[f64],
) -> Result<(SampledProfile, SampledProfile), TransformError> {
    validate_grid(t_grid)?;
    let m = mode.m();
    let k = dims.k();
    if m + k > 5 {
        return Err(TransformError::IndexOutOfRange(format!(
            "derivative budget: m + k = {} exceeds 5",
            m + k
        )));
    }
    let mut phi_values = Vec::with_capacity(t_grid.len());
    for &t in t_grid {
        phi_values.push(reduced_integral(f_tilde, m + k, t)?);
    }
    let phi = SampledProfile::new(t_grid.to_vec(), phi_values)?;

    // h = k! / (2^m 4^{m+k} (m+k)!) * D^m phi.
    let prefactor = {
        let num = exact_core::BigRational::from_integer(exact_core::factorial(k));
        let den = exact_core::pow2((m + 2 * (m + k)) as i64)
            * exact_core::BigRational::from_integer(exact_core::factorial(m + k));
        exact_core::rational_to_f64(&(num / den))
    };
    let h_values: Vec<f64> = if m == 0 {
        phi.values().iter().map(|v| prefactor * v).collect()
    } else {
        let (a, b) = (t_grid[0], t_grid[t_grid.len() - 1]);
        let degree = fit_degree(t_grid.len());
        let fit = cheb_fit(&phi, (a, b), degree)?;
        let dm = profiles::apply_d_numeric(std::sync::Arc::new(fit), m as usize)?;
        t_grid.iter().map(|t| prefactor * dm.eval(*t)).collect()
    };
    let h = SampledProfile::new(t_grid.to_vec(), h_values)?;
    Ok((phi, h))
}

/// Fit degree for data grids: half the sample count, capped where the
/// conditioning gate starts to bite.
pub fn fit_degree(samples: usize) -> usize {
    ((samples - 1) / 2).clamp(1, 120)
}

/// Direct 3-D sphere mean of a radial function around a boundary point:
/// (1 / 4 pi) times the surface integral over the unit sphere of directions.
/// Radial symmetry reduces it to the polar-angle integral
/// (1/2) integral over c in [-1, 1] of f(sqrt(1 + t^2 + 2 t c)).
/// This is the measurement-side oracle the omega-convention experiment
/// compares against; it never touches the reduced integrals.
pub fn direct_sphere_mean_3d(
    f: &dyn SmoothProfile,
    p: [f64; 3],
    t: f64,
    dims: &DimensionParams,
) -> Result<f64, TransformError> {
    if dims.n() != 3 {
        return Err(TransformError::DimensionUnsupported {
            n: dims.n(),
            detail: "the direct sphere-mean oracle is 3-D only".into(),
        });
    }
    let rho = (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt();
    if (rho - 1.0).abs() > 1e-12 {
        return Err(TransformError::InvalidGrid(format!(
            "center must lie on the unit sphere, |p| = {rho}"
        )));
    }
    let mean = integrate_adaptive(
        &|c| f.eval((rho * rho + t * t + 2.0 * rho * t * c).sqrt()),
        -1.0,
        1.0,
    )?;
    Ok(0.5 * mean)
}

/// Converts measured sphere means into the reduced radial data:
/// h_k(t) = 4^k * omega(2k+3) / omega(2k+2) * t^{2k+1} * mean(t), with the
/// omega symbols read under the configured convention.
pub fn scale_data_to_hk(sphere_means: &SampledProfile, dims: &DimensionParams) -> SampledProfile {
    let k = dims.k();
    let constant =
        4f64.powi(k as i32) * dims.omega(2 * k + 3) / dims.omega(2 * k + 2);
    sphere_means.map_values(|t, v| constant * t.powi(2 * k as i32 + 1) * v)
}

/// Outcome of the omega-convention experiment: relative disagreement between
/// scaled direct sphere means and the reduced integral, per convention.
#[derive(Debug, Clone)]
pub struct ConventionReport {
    pub err_sphere_in_rm: f64,
    pub err_sphere_sm: f64,
    pub winner: Option<crate::OmegaConvention>,
}

/// Decides which reading of the sphere-area symbols makes the data scaling
/// consistent with actual 3-D sphere means, by measuring both on a grid.
/// A convention wins when it matches to `tol` and the other does not.
pub fn convention_experiment(
    f: &dyn SmoothProfile,
    grid_points: usize,
    tol: f64,
) -> Result<ConventionReport, TransformError> {
    use crate::OmegaConvention::{SphereInRm, SphereSm};
    let t_grid: Vec<f64> = (0..grid_points)
        .map(|i| 0.05 + 0.9 * (i as f64 + 0.5) / grid_points as f64)
        .collect();
    let mut errs = [0.0f64; 2];
    for (slot, convention) in [(0, SphereInRm), (1, SphereSm)] {
        let dims = DimensionParams::new(3, convention)?;
        let mut means = Vec::with_capacity(t_grid.len());
        for &t in &t_grid {
            means.push(direct_sphere_mean_3d(f, [0.0, 0.0, 1.0], t, &dims)?);
        }
        let scaled = scale_data_to_hk(&SampledProfile::new(t_grid.clone(), means)?, &dims);
        let reduced = forward_radial(f, &dims, &t_grid)?;
        let scale = reduced.max_abs().max(1e-300);
        let err = scaled
            .values()
            .iter()
            .zip(reduced.values())
            .fold(0.0f64, |m, (a, b)| m.max((a - b).abs()));
        errs[slot] = err / scale;
    }
    let winner = match (errs[0] <= tol, errs[1] <= tol) {
        (true, false) => Some(SphereInRm),
        (false, true) => Some(SphereSm),
        _ => None,
    };
    Ok(ConventionReport {
        err_sphere_in_rm: errs[0],
        err_sphere_sm: errs[1],
        winner,
    })
}
