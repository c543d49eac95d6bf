use crate::quad::{integrate_adaptive_with_floor, integrate_fixed};
use profiles::{ProfileError, SmoothProfile};
use std::sync::Arc;

/// Falling factorial p (p-1) ... (p-r+1); zero once the factors cross zero.
fn falling(p: i64, r: usize) -> f64 {
    let mut acc = 1.0;
    for i in 0..r as i64 {
        acc *= (p - i) as f64;
    }
    acc
}

fn factorial_f64(n: u32) -> f64 {
    (1..=n).map(|i| i as f64).product()
}

/// r-th t-derivative of Q(t,u)^q where
/// Q(t,u) = ((1+t)^2 - u^2)(u^2 - (1-t)^2) = -t^4 + 2(u^2+1)t^2 - (u^2-1)^2.
/// Expanding the q-th power by the trinomial theorem makes every term an
/// explicit power of t, so the derivative is exact.
fn q_weight_t_derivative(t: f64, u: f64, q: u32, r: usize) -> f64 {
    let a = u * u + 1.0;
    let b = u * u - 1.0;
    let b2 = b * b;
    let mut total = 0.0;
    for i in 0..=q {
        for j in 0..=(q - i) {
            let l = q - i - j;
            let p = (4 * i + 2 * j) as i64;
            if (p as usize) < r {
                continue;
            }
            let sign = if (i + l) % 2 == 0 { 1.0 } else { -1.0 };
            let coef = factorial_f64(q)
                / (factorial_f64(i) * factorial_f64(j) * factorial_f64(l))
                * sign
                * (2.0 * a).powi(j as i32)
                * b2.powi(l as i32);
            total += coef * falling(p, r) * t.powi((p - r as i64) as i32);
        }
    }
    total
}

/// Reduced forward data as a smooth function of the sphere radius, with exact
/// t-derivatives up to the weight exponent.
///
/// Values agree with `forward_radial` / the phi column of `forward_harmonic`:
/// integral over u in (|1-t|, 1) of u f(u) Q(t,u)^exponent. Derivatives in t
/// go under the integral sign, which is valid through order `exponent`
/// because Q vanishes to that order on the moving limit u = |1-t|; higher
/// orders would pick up boundary terms, so `max_order` stops there.
pub struct ReducedDataProfile {
    f: Arc<dyn SmoothProfile>,
    exponent: u32,
    support: (f64, f64),
    abs_floor: f64,
}

impl ReducedDataProfile {
    pub fn new(f: Arc<dyn SmoothProfile>, exponent: u32) -> Self {
        let (lo, hi_raw) = f.support();
        let hi = hi_raw.min(1.0);
        // Overall data magnitude, from the full-range integral at t = 1 with
        // the integrand in absolute value. A coarse fixed rule is enough: this
        // only sets the scale below which quadrature contributions are noise.
        // Without an absolute floor, integrals over thin slivers of a decaying
        // tail (t near the support edge) stall the adaptive rule and the jet
        // errors out, which leaves jumps in anything integrating this profile.
        let scale = if lo < hi {
            integrate_fixed(
                &|u| (u * f.eval(u) * q_weight_t_derivative(1.0, u, exponent, 0)).abs(),
                lo,
                hi,
                64,
            )
        } else {
            0.0
        };
        ReducedDataProfile {
            f,
            exponent,
            support: (1.0 - hi, 1.0 + hi),
            abs_floor: 1e-15 * scale,
        }
    }
}

impl SmoothProfile for ReducedDataProfile {
    fn support(&self) -> (f64, f64) {
        self.support
    }

    fn max_order(&self) -> usize {
        self.exponent as usize
    }

    fn jet(&self, t: f64, order: usize) -> Result<Vec<f64>, ProfileError> {
        if order > self.max_order() {
            return Err(ProfileError::InsufficientOrder {
                requested: order,
                available: self.max_order(),
            });
        }
        let (lo_s, hi_s) = self.f.support();
        let lo = (1.0 - t).abs().max(lo_s);
        let hi = hi_s.min(1.0);
        if t < self.support.0 || t > self.support.1 || lo >= hi {
            return Ok(vec![0.0; order + 1]);
        }
        let q = self.exponent;
        let mut out = Vec::with_capacity(order + 1);
        for r in 0..=order {
            let value = integrate_adaptive_with_floor(
                &|u| u * self.f.eval(u) * q_weight_t_derivative(t, u, q, r),
                lo,
                hi,
                self.abs_floor,
            )
            .map_err(|e| ProfileError::InvalidData(format!("reduced data jet: {e}")))?;
            out.push(value);
        }
        Ok(out)
    }
}
