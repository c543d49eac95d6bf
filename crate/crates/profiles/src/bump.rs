use crate::{jet, ProfileError, SmoothProfile};

/// Compactly supported mollifier `amplitude * exp(-1 / (1 - y^2))` with
/// `y = (x - center) / width`, identically zero for `|y| >= 1`. The peak value
/// at the center is `amplitude / e`.
#[derive(Debug, Clone)]
pub struct WindowBump {
    center: f64,
    width: f64,
    amplitude: f64,
    max_order: usize,
}

/// Bump supported in `(center - width, center + width)` without any placement
/// constraint. Used for data-space perturbations where the support may sit
/// anywhere on the transform side.
pub fn window_bump(
    center: f64,
    width: f64,
    amplitude: f64,
    max_order: usize,
) -> Result<WindowBump, ProfileError> {
    if !(width > 0.0) || !center.is_finite() || !amplitude.is_finite() {
        return Err(ProfileError::InvalidData(format!(
            "bump parameters must be finite with width > 0, got center={center}, width={width}"
        )));
    }
    if max_order > 12 {
        return Err(ProfileError::InsufficientOrder {
            requested: max_order,
            available: 12,
        });
    }
    Ok(WindowBump {
        center,
        width,
        amplitude,
        max_order,
    })
}

/// Bump constrained to sit strictly inside the unit interval, as required for
/// radial profiles on the ball.
pub fn bump_profile(
    center: f64,
    width: f64,
    amplitude: f64,
    max_order: usize,
) -> Result<WindowBump, ProfileError> {
    let (lo, hi) = (center - width, center + width);
    if !(lo > 0.0 && hi < 1.0) {
        return Err(ProfileError::SupportOutsideBall { lo, hi });
    }
    window_bump(center, width, amplitude, max_order)
}

impl SmoothProfile for WindowBump {
    fn support(&self) -> (f64, f64) {
        (self.center - self.width, self.center + self.width)
    }

    fn max_order(&self) -> usize {
        self.max_order
    }

    fn jet(&self, x: f64, order: usize) -> Result<Vec<f64>, ProfileError> {
        if order > self.max_order {
            return Err(ProfileError::InsufficientOrder {
                requested: order,
                available: self.max_order,
            });
        }
        let y0 = (x - self.center) / self.width;
        let s0 = 1.0 - y0 * y0;
        // So close to the support edge that exp(-1/s) underflows along with
        // every derivative; returning the exact limit avoids overflowing the
        // intermediate reciprocal jets.
        if s0 <= 0.0 || 1.0 / s0 > 700.0 {
            return Ok(vec![0.0; order + 1]);
        }
        let y = jet::affine(x, self.center, self.width, order);
        let s = jet::add_const(&jet::neg(&jet::mul(&y, &y)), 1.0);
        let u = jet::neg(&jet::recip(&s));
        let e = jet::exp(&u);
        let scaled: Vec<f64> = e.iter().map(|c| c * self.amplitude).collect();
        Ok(jet::derivative_values(&scaled))
    }
}
