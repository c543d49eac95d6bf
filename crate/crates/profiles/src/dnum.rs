use crate::{ProfileError, SmoothProfile};
use coefficients::d_power_weights;
use std::sync::Arc;

/// Profile representing `(D^r f)(x)` where `D = (1/x) d/dx`, evaluated via the
/// weighted-derivative expansion `D^r = sum_j w_{r,j} x^{j - 2r} d^j/dx^j`.
pub struct DProfile {
    base: Arc<dyn SmoothProfile>,
    r: usize,
    /// `(j, w_{r,j})` pairs with the weights converted to f64.
    weights: Vec<(usize, f64)>,
}

pub fn apply_d_numeric(
    base: Arc<dyn SmoothProfile>,
    r: usize,
) -> Result<DProfile, ProfileError> {
    if r > base.max_order() {
        return Err(ProfileError::InsufficientOrder {
            requested: r,
            available: base.max_order(),
        });
    }
    let weights = if r == 0 {
        Vec::new()
    } else {
        d_power_weights(r as u32)
            .expect("positive power")
            .into_iter()
            .map(|(j, w)| (j as usize, exact_core::rational_to_f64(&w)))
            .collect()
    };
    Ok(DProfile { base, r, weights })
}

pub(crate) fn binom_f64(n: usize, k: usize) -> f64 {
    let mut acc = 1.0;
    for i in 0..k {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    acc
}

/// Falling factorial `a (a-1) ... (a-m+1)` for integer `a`.
pub(crate) fn falling(a: i64, m: usize) -> f64 {
    let mut acc = 1.0;
    for i in 0..m as i64 {
        acc *= (a - i) as f64;
    }
    acc
}

impl SmoothProfile for DProfile {
    fn support(&self) -> (f64, f64) {
        self.base.support()
    }

    fn max_order(&self) -> usize {
        self.base.max_order() - self.r
    }

    fn jet(&self, x: f64, order: usize) -> Result<Vec<f64>, ProfileError> {
        if order > self.max_order() {
            return Err(ProfileError::InsufficientOrder {
                requested: order,
                available: self.max_order(),
            });
        }
        if self.r == 0 {
            let mut j = self.base.jet(x, order)?;
            j.truncate(order + 1);
            return Ok(j);
        }
        let (lo, hi) = self.support();
        if x < lo || x > hi {
            return Ok(vec![0.0; order + 1]);
        }
        let base_jet = self.base.jet(x, order + self.r)?;
        let mut out = vec![0.0; order + 1];
        for d in 0..=order {
            let mut val = 0.0;
            for &(j, w) in &self.weights {
                // d-th derivative of w x^{-(2r-j)} f^(j)(x) by the product rule.
                let q = 2 * self.r as i64 - j as i64;
                for i in 0..=d {
                    val += w
                        * binom_f64(d, i)
                        * falling(-q, d - i)
                        * x.powi((-q - (d - i) as i64) as i32)
                        * base_jet[j + i];
                }
            }
            out[d] = val;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::PolyProfile;

    #[test]
    fn first_power_is_scaled_derivative() {
        // D(x^4) = 4 x^2 on any support window.
        let p = Arc::new(PolyProfile::new(vec![0.0, 0.0, 0.0, 0.0, 1.0], (0.5, 1.5)));
        let d = apply_d_numeric(p, 1).unwrap();
        for x in [0.6, 1.0, 1.4] {
            assert!((d.eval(x) - 4.0 * x * x).abs() < 1e-12);
        }
    }

    #[test]
    fn zero_power_passes_through() {
        let p = Arc::new(PolyProfile::new(vec![1.0, 2.0], (0.0, 1.0)));
        let d = apply_d_numeric(p.clone(), 0).unwrap();
        assert_eq!(d.jet(0.5, 1).unwrap(), p.jet(0.5, 1).unwrap());
    }

    #[test]
    fn order_budget_is_consumed() {
        let b = Arc::new(crate::window_bump(0.5, 0.2, 1.0, 6).unwrap());
        let d = apply_d_numeric(b, 4).unwrap();
        assert_eq!(d.max_order(), 2);
        assert!(d.jet(0.5, 2).is_ok());
        assert!(matches!(
            d.jet(0.5, 3),
            Err(ProfileError::InsufficientOrder { .. })
        ));
        let b2 = Arc::new(crate::window_bump(0.5, 0.2, 1.0, 6).unwrap());
        assert!(matches!(
            apply_d_numeric(b2, 7),
            Err(ProfileError::InsufficientOrder { .. })
        ));
    }
}
