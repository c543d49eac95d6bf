use crate::{check_differential, check_integral, construct_phi, RangeError, RangeReport};
use profiles::{
    cheb_fit, window_bump, MonomialTimesProfile, SampledProfile, SmoothProfile, SumProfile,
    WindowBump,
};
use std::sync::Arc;
use transforms::{fit_degree, DimensionParams, OmegaConvention, ReducedDataProfile};

/// Additive perturbation: a bump added to the checked datum, typically parked
/// beyond radius 1 where true data of a ball-supported density cannot carry
/// isolated mass. For radial modes it perturbs g (the integral-condition
/// datum); for m >= 1 it perturbs phi, the antiderivative both conditions
/// constrain.
#[derive(Debug, Clone, Copy)]
pub struct Perturbation {
    pub center: f64,
    pub width: f64,
    pub amplitude: f64,
}

impl Perturbation {
    /// The fixed out-of-range perturbation the co-failure family uses.
    pub fn standard() -> Self {
        Perturbation {
            center: 1.5,
            width: 0.2,
            amplitude: 0.1,
        }
    }

    fn bump(&self) -> Result<WindowBump, RangeError> {
        Ok(window_bump(self.center, self.width, self.amplitude, 12)?)
    }
}

/// One run of the joint range check: a mode weight, a dimension, and an
/// optional perturbation.
pub struct ExperimentCase {
    pub label: String,
    pub f_tilde: Arc<dyn SmoothProfile>,
    pub n: u32,
    pub m: u32,
    pub perturbation: Option<Perturbation>,
}

/// Runs both range conditions against the same datum and reports the two
/// residuals side by side.
///
/// The datum is the reduced forward integral with weight exponent m + k,
/// carried as a profile with exact t-derivatives, so both checks run at
/// quadrature accuracy with no fitting step:
///   - differential condition at operator order m + k on the datum;
///   - integral condition with exponent m + k on datum / u^(2(m+k)+1).
/// For m = 0 the datum is h = t^(2k+1) g; for m >= 1 it is the
/// antiderivative phi with D^m phi proportional to the mode data.
pub fn equivalence_experiment(case: &ExperimentCase) -> Result<RangeReport, RangeError> {
    let dims = DimensionParams::new(case.n, OmegaConvention::SphereInRm)?;
    let k = dims.k();
    let m = case.m;
    let q = m + k;
    if q > 5 {
        return Err(RangeError::InvalidInput(format!(
            "derivative budget: m + k = {q} exceeds 5"
        )));
    }
    let data: Arc<dyn SmoothProfile> =
        Arc::new(ReducedDataProfile::new(case.f_tilde.clone(), q));
    let diff_obj: Arc<dyn SmoothProfile> = match &case.perturbation {
        None => data,
        Some(p) => {
            let bump: Arc<dyn SmoothProfile> = Arc::new(p.bump()?);
            // g-space for radial modes means the h-side picks up t^(2k+1).
            let added: Arc<dyn SmoothProfile> = if m == 0 {
                Arc::new(MonomialTimesProfile::new(2 * k as i32 + 1, bump))
            } else {
                bump
            };
            Arc::new(SumProfile::new(data, added))
        }
    };
    let int_obj = MonomialTimesProfile::new(-(2 * q as i32) - 1, diff_obj.clone());

    let t_grid = crate::default_t_grid();
    let diff = check_differential(diff_obj, q, &t_grid)?;
    let integ = check_integral(&int_obj, q as f64, &t_grid)?;
    Ok(RangeReport {
        differential_residual: diff.residual,
        integral_residual: integ.residual,
        t_grid,
        per_t_differential: diff.per_t,
        per_t_integral: integ.per_t,
        normalization_differential: diff.normalization,
        normalization_integral: integ.normalization,
    })
}

/// Same pair of checks for externally sampled data (the CSV path): the data
/// is fitted before checking, so residuals bottom out at the fit error
/// rather than at quadrature accuracy.
///
/// `data` carries the radial datum h for m = 0, or the mode data h_{m,l}
/// for m >= 1 (which is antidifferentiated back to phi first).
pub fn check_sampled_data(
    data: &SampledProfile,
    n: u32,
    m: u32,
) -> Result<RangeReport, RangeError> {
    let dims = DimensionParams::new(n, OmegaConvention::SphereInRm)?;
    let k = dims.k();
    let q = m + k;
    if q > 5 {
        return Err(RangeError::InvalidInput(format!(
            "derivative budget: m + k = {q} exceeds 5"
        )));
    }
    let window = (data.grid()[0], data.grid()[data.len() - 1]);
    let t_grid = crate::default_t_grid();
    let (diff, integ) = if m == 0 {
        let h_fit = cheb_fit(data, window, fit_degree(data.len()))?;
        let diff = check_differential(Arc::new(h_fit), k, &t_grid)?;
        let g_data = data.map_values(|t, v| v / t.powi(2 * k as i32 + 1));
        let g_fit = cheb_fit(&g_data, window, fit_degree(g_data.len()))?;
        let integ = check_integral(&g_fit, k as f64, &t_grid)?;
        (diff, integ)
    } else {
        let (phi_hat, _defect) = construct_phi(data, m)?;
        let diff = check_differential(Arc::new(phi_hat.clone()), q, &t_grid)?;
        let cap_values: Vec<f64> = data
            .grid()
            .iter()
            .map(|t| phi_hat.eval(*t) / t.powi(2 * q as i32 + 1))
            .collect();
        let cap_data = SampledProfile::new(data.grid().to_vec(), cap_values)?;
        let cap_fit = cheb_fit(&cap_data, window, fit_degree(cap_data.len()))?;
        let integ = check_integral(&cap_fit, q as f64, &t_grid)?;
        (diff, integ)
    };
    Ok(RangeReport {
        differential_residual: diff.residual,
        integral_residual: integ.residual,
        t_grid,
        per_t_differential: diff.per_t,
        per_t_integral: integ.per_t,
        normalization_differential: diff.normalization,
        normalization_integral: integ.normalization,
    })
}

/// The fixed in-range family: three bumps, three odd dimensions, modes 0
/// and 1. Both residuals must be small on every member.
pub fn necessity_family() -> Result<Vec<ExperimentCase>, RangeError> {
    let bumps = [(0.5, 0.2, 1.0), (0.4, 0.15, 0.8), (0.62, 0.18, 1.3)];
    let mut cases = Vec::new();
    for (c, w, a) in bumps {
        for n in [3u32, 5, 7] {
            for m in [0u32, 1] {
                cases.push(ExperimentCase {
                    label: format!("bump({c},{w},{a}) n={n} m={m}"),
                    f_tilde: Arc::new(profiles::bump_profile(c, w, a, 12)?),
                    n,
                    m,
                    perturbation: None,
                });
            }
        }
    }
    Ok(cases)
}

/// The same family with the standard perturbation added to each datum. Both
/// residuals must be large on every member.
pub fn co_failure_family() -> Result<Vec<ExperimentCase>, RangeError> {
    let mut cases = necessity_family()?;
    for case in &mut cases {
        case.label = format!("{} + bump(1.5,0.2,0.1)", case.label);
        case.perturbation = Some(Perturbation::standard());
    }
    Ok(cases)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn radial_case(perturbation: Option<Perturbation>) -> ExperimentCase {
        ExperimentCase {
            label: "bump n=3 m=0".into(),
            f_tilde: Arc::new(profiles::bump_profile(0.5, 0.2, 1.0, 12).unwrap()),
            n: 3,
            m: 0,
            perturbation,
        }
    }

    #[test]
    fn in_range_radial_data_passes_both_checks() {
        let report = equivalence_experiment(&radial_case(None)).unwrap();
        assert!(
            report.differential_residual <= 1e-8,
            "differential {:.3e}",
            report.differential_residual
        );
        assert!(
            report.integral_residual <= 1e-8,
            "integral {:.3e}",
            report.integral_residual
        );
    }

    #[test]
    fn perturbed_radial_data_fails_both_checks() {
        let report =
            equivalence_experiment(&radial_case(Some(Perturbation::standard()))).unwrap();
        assert!(
            report.differential_residual >= 1e-3,
            "differential {:.3e}",
            report.differential_residual
        );
        assert!(
            report.integral_residual >= 1e-3,
            "integral {:.3e}",
            report.integral_residual
        );
    }

    #[test]
    fn zero_data_is_normalized_by_the_floor() {
        // A mode weight of zero gives zero data; residuals must come out 0,
        // not NaN.
        let case = ExperimentCase {
            label: "zero".into(),
            f_tilde: Arc::new(profiles::PolyProfile::constant(0.0, (0.3, 0.7))),
            n: 3,
            m: 0,
            perturbation: None,
        };
        let report = equivalence_experiment(&case).unwrap();
        assert_eq!(report.differential_residual, 0.0);
        assert_eq!(report.integral_residual, 0.0);
    }

    #[test]
    fn sampled_route_flags_the_same_perturbation() {
        // Forward data sampled on a grid, perturbed in g-space, checked
        // through the fitting path a CSV consumer takes.
        let dims = DimensionParams::new(3, OmegaConvention::SphereInRm).unwrap();
        let f = profiles::bump_profile(0.5, 0.2, 1.0, 12).unwrap();
        let grid: Vec<f64> = (0..257)
            .map(|i| {
                let theta = std::f64::consts::PI * i as f64 / 256.0;
                1.0 - 0.995 * theta.cos()
            })
            .collect();
        let h = transforms::forward_radial(&f, &dims, &grid).unwrap();
        let bump = Perturbation::standard().bump().unwrap();
        let perturbed = h.map_values(|t, v| v + t * bump.eval(t));
        let report = check_sampled_data(&perturbed, 3, 0).unwrap();
        assert!(
            report.differential_residual >= 1e-4,
            "differential {:.3e}",
            report.differential_residual
        );
        assert!(
            report.integral_residual >= 1e-4,
            "integral {:.3e}",
            report.integral_residual
        );
    }
}
