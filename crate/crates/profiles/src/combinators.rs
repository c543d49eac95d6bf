use crate::dnum::{binom_f64, falling};
use crate::{ProfileError, SmoothProfile};
use std::sync::Arc;

/// `c * f(x)`.
pub struct ScaledProfile {
    c: f64,
    base: Arc<dyn SmoothProfile>,
}

impl ScaledProfile {
    pub fn new(c: f64, base: Arc<dyn SmoothProfile>) -> Self {
        ScaledProfile { c, base }
    }
}

impl SmoothProfile for ScaledProfile {
    fn support(&self) -> (f64, f64) {
        self.base.support()
    }

    fn max_order(&self) -> usize {
        self.base.max_order()
    }

    fn jet(&self, x: f64, order: usize) -> Result<Vec<f64>, ProfileError> {
        let mut j = self.base.jet(x, order)?;
        j.truncate(order + 1);
        for v in &mut j {
            *v *= self.c;
        }
        Ok(j)
    }
}

/// `f(x) + g(x)`. The support is the hull of the two supports; each summand
/// already reports zero jets outside its own.
pub struct SumProfile {
    a: Arc<dyn SmoothProfile>,
    b: Arc<dyn SmoothProfile>,
}

impl SumProfile {
    pub fn new(a: Arc<dyn SmoothProfile>, b: Arc<dyn SmoothProfile>) -> Self {
        SumProfile { a, b }
    }
}

impl SmoothProfile for SumProfile {
    fn support(&self) -> (f64, f64) {
        let (alo, ahi) = self.a.support();
        let (blo, bhi) = self.b.support();
        (alo.min(blo), ahi.max(bhi))
    }

    fn max_order(&self) -> usize {
        self.a.max_order().min(self.b.max_order())
    }

    fn jet(&self, x: f64, order: usize) -> Result<Vec<f64>, ProfileError> {
        if order > self.max_order() {
            return Err(ProfileError::InsufficientOrder {
                requested: order,
                available: self.max_order(),
            });
        }
        let ja = self.a.jet(x, order)?;
        let jb = self.b.jet(x, order)?;
        Ok((0..=order).map(|i| ja[i] + jb[i]).collect())
    }
}

/// `x^p f(x)` for integer p, negative powers included. Callers evaluating a
/// negative power must stay at x > 0; every grid in this toolkit lives in
/// (0, 2).
pub struct MonomialTimesProfile {
    power: i32,
    base: Arc<dyn SmoothProfile>,
}

impl MonomialTimesProfile {
    pub fn new(power: i32, base: Arc<dyn SmoothProfile>) -> Self {
        MonomialTimesProfile { power, base }
    }
}

impl SmoothProfile for MonomialTimesProfile {
    fn support(&self) -> (f64, f64) {
        self.base.support()
    }

    fn max_order(&self) -> usize {
        self.base.max_order()
    }

    fn jet(&self, x: f64, order: usize) -> Result<Vec<f64>, ProfileError> {
        let (lo, hi) = self.support();
        if x < lo || x > hi {
            return Ok(vec![0.0; order + 1]);
        }
        let bj = self.base.jet(x, order)?;
        let p = self.power as i64;
        let mut out = vec![0.0; order + 1];
        for (d, slot) in out.iter_mut().enumerate() {
            let mut val = 0.0;
            for i in 0..=d {
                val += binom_f64(d, i)
                    * falling(p, d - i)
                    * x.powi((p - (d - i) as i64) as i32)
                    * bj[i];
            }
            *slot = val;
        }
        Ok(out)
    }
}
