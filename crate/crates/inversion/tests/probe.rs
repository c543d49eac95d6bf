use profiles::{cheb_fit, SampledProfile, SmoothProfile};
use transforms::{forward_radial, DimensionParams, OmegaConvention};

fn cheb_pts(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let (c, r) = (0.5 * (lo + hi), 0.5 * (hi - lo));
    (0..n)
        .map(|i| {
            let theta = std::f64::consts::PI * (n - 1 - i) as f64 / (n - 1) as f64;
            c + r * theta.cos()
        })
        .collect()
}

#[test]
fn probe_fit_floor_n3() {
    let f = profiles::bump_profile(0.5, 0.2, 1.0, 12).unwrap();
    let dims = DimensionParams::new(3, OmegaConvention::SphereInRm).unwrap();
    // window from the scout logic: rise at t = 0.3, two cells margin
    let start = 0.29;
    let grid = cheb_pts(start, 1.0 - 1e-4, 257);
    let h = forward_radial(&f, &dims, &grid).unwrap();
    let hull = (grid[0], grid[grid.len() - 1]);
    let scale = h.max_abs();

    for degree in [80usize, 120, 180, 256] {
        let fit = cheb_fit(&h, hull, degree).unwrap();
        // residual at the sample points
        let mut res = 0.0f64;
        for (t, v) in h.grid().iter().zip(h.values()) {
            res = res.max((fit.eval(*t) - v).abs());
        }
        // independent check points between samples
        let dense = cheb_pts(start + 1e-3, 1.0 - 2e-4, 511);
        let h2 = forward_radial(&f, &dims, &dense).unwrap();
        let mut mid = 0.0f64;
        let mut midd = 0.0f64;
        for (t, v) in h2.grid().iter().zip(h2.values()) {
            mid = mid.max((fit.eval(*t) - v).abs());
            let s = 1.0 - *t;
            let truth_d = s * f.eval(s);
            midd = midd.max((fit.jet(*t, 1).unwrap()[1] - truth_d).abs());
        }
        println!(
            "deg {degree}: sample res {:.3e}, dense err {:.3e}, deriv err {:.3e} (scale {scale:.3e})",
            res / scale,
            mid / scale,
            midd
        );
    }
}
