use crate::{ProfileError, SmoothProfile};

/// Polynomial in the monomial basis, clipped to a support window. Mostly a
/// test fixture: its jets are exact, which makes it the reference point for
/// the numeric operators.
#[derive(Debug, Clone)]
pub struct PolyProfile {
    /// `coeffs[i]` multiplies `x^i`.
    coeffs: Vec<f64>,
    support: (f64, f64),
}

impl PolyProfile {
    pub fn new(coeffs: Vec<f64>, support: (f64, f64)) -> Self {
        assert!(support.1 > support.0);
        assert!(!coeffs.is_empty());
        PolyProfile { coeffs, support }
    }

    pub fn constant(value: f64, support: (f64, f64)) -> Self {
        PolyProfile::new(vec![value], support)
    }
}

impl SmoothProfile for PolyProfile {
    fn support(&self) -> (f64, f64) {
        self.support
    }

    fn max_order(&self) -> usize {
        64
    }

    fn jet(&self, x: f64, order: usize) -> Result<Vec<f64>, ProfileError> {
        if order > self.max_order() {
            return Err(ProfileError::InsufficientOrder {
                requested: order,
                available: self.max_order(),
            });
        }
        if x < self.support.0 || x > self.support.1 {
            return Ok(vec![0.0; order + 1]);
        }
        let mut out = Vec::with_capacity(order + 1);
        let mut c = self.coeffs.clone();
        for _ in 0..=order {
            out.push(c.iter().rev().fold(0.0, |acc, k| acc * x + k));
            c = c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, k)| i as f64 * k)
                .collect();
            if c.is_empty() {
                c.push(0.0);
            }
        }
        Ok(out)
    }
}
