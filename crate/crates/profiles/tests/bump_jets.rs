use profiles::{bump_profile, SmoothProfile};

/// Central difference with one Richardson refinement applied to the (d-1)-th
/// derivative values, giving an O(h^4) estimate of the d-th derivative.
fn fd_estimate(f: &dyn SmoothProfile, x: f64, d: usize, h: f64) -> f64 {
    let slope = |step: f64| {
        let hi = f.jet(x + step, d - 1).unwrap()[d - 1];
        let lo = f.jet(x - step, d - 1).unwrap()[d - 1];
        (hi - lo) / (2.0 * step)
    };
    (4.0 * slope(h / 2.0) - slope(h)) / 3.0
}

#[test]
fn jet_orders_one_through_eight_agree_with_finite_differences() {
    let bump = bump_profile(0.5, 0.2, 1.0, 8).unwrap();
    let points = [0.41, 0.46, 0.5, 0.53, 0.59];
    for d in 1..=8usize {
        let mut scale = 0.0f64;
        let mut worst = 0.0f64;
        for &x in &points {
            let exact = bump.jet(x, d).unwrap()[d];
            let approx = fd_estimate(&bump, x, d, 1e-4);
            scale = scale.max(exact.abs());
            worst = worst.max((exact - approx).abs());
        }
        assert!(
            worst <= 1e-6 * scale,
            "order {d}: fd disagreement {worst:.3e} vs scale {scale:.3e}"
        );
    }
}

#[test]
fn jets_scale_linearly_in_amplitude() {
    let unit = bump_profile(0.5, 0.15, 1.0, 8).unwrap();
    let tripled = bump_profile(0.5, 0.15, 3.0, 8).unwrap();
    for &x in &[0.4, 0.5, 0.62] {
        let a = unit.jet(x, 8).unwrap();
        let b = tripled.jet(x, 8).unwrap();
        for (u, t) in a.iter().zip(&b) {
            assert!((3.0 * u - t).abs() <= 1e-12 * t.abs().max(1e-300));
        }
    }
}
