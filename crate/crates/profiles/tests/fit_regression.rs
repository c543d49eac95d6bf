use profiles::{bump_profile, cheb_fit, SampledProfile, SmoothProfile};

/// Chebyshev-distributed sample points: the natural choice when the caller
/// controls the grid, and what keeps a high-degree least squares fit stable
/// with a modest sample count.
fn cheb_samples(f: &dyn SmoothProfile, a: f64, b: f64, n: usize) -> SampledProfile {
    let mut grid: Vec<f64> = (0..n)
        .map(|i| {
            let theta = std::f64::consts::PI * i as f64 / (n - 1) as f64;
            0.5 * (a + b) - 0.5 * (b - a) * theta.cos()
        })
        .collect();
    grid.sort_by(|x, y| x.partial_cmp(y).unwrap());
    let values = grid.iter().map(|t| f.eval(*t)).collect();
    SampledProfile::new(grid, values).unwrap()
}

fn max_fit_error(fit: &dyn SmoothProfile, truth: &dyn SmoothProfile, a: f64, b: f64) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..=4000 {
        let x = a + (b - a) * i as f64 / 4000.0;
        worst = worst.max((fit.eval(x) - truth.eval(x)).abs());
    }
    worst
}

// Convergence of the 257-point fit on the bump's own support, measured once
// and frozen. The flat support endpoints make this the slowest-converging
// profile in the suite, so these bounds are the pessimistic ones: degree 80
// floors near 2.7e-9 and the first degree reaching 1e-10 is about 110.
#[test]
fn bump_fit_regression_bounds() {
    let bump = bump_profile(0.5, 0.2, 1.0, 8).unwrap();
    let data = cheb_samples(&bump, 0.3, 0.7, 257);

    let fit80 = cheb_fit(&data, (0.3, 0.7), 80).unwrap();
    let err80 = max_fit_error(&fit80, &bump, 0.3, 0.7);
    assert!(err80 <= 1e-8, "degree-80 fit error {err80:.3e} exceeds 1e-8");

    let fit112 = cheb_fit(&data, (0.3, 0.7), 112).unwrap();
    let err112 = max_fit_error(&fit112, &bump, 0.3, 0.7);
    assert!(
        err112 <= 1e-10,
        "degree-112 fit error {err112:.3e} exceeds 1e-10"
    );
}

#[test]
fn fitted_first_derivative_tracks_jet() {
    let bump = bump_profile(0.5, 0.2, 1.0, 8).unwrap();
    let data = cheb_samples(&bump, 0.3, 0.7, 257);
    let fit = cheb_fit(&data, (0.3, 0.7), 112).unwrap();
    let mut worst = 0.0f64;
    let mut scale = 0.0f64;
    for i in 0..=400 {
        let x = 0.32 + 0.36 * i as f64 / 400.0;
        let exact = bump.jet(x, 1).unwrap()[1];
        let fitted = fit.jet(x, 1).unwrap()[1];
        worst = worst.max((fitted - exact).abs());
        scale = scale.max(exact.abs());
    }
    assert!(
        worst <= 1e-8 * scale,
        "derivative error {worst:.3e} vs scale {scale:.3e}"
    );
}

#[test]
fn narrow_data_cannot_support_high_degree() {
    let bump = bump_profile(0.5, 0.2, 1.0, 8).unwrap();
    let data = cheb_samples(&bump, 0.45, 0.55, 40);
    // Only 40 points fall inside the requested window.
    assert!(cheb_fit(&data, (0.3, 0.7), 60).is_err());
}
