use crate::{ProfileError, SampledProfile, SmoothProfile};
use nalgebra::{DMatrix, DVector};

const MAX_DERIVATIVE_TABLES: usize = 12;
const CONDITION_LIMIT: f64 = 1e13;

/// Chebyshev series on an interval `[a, b]`, with precomputed coefficient
/// tables for its derivatives. Evaluation outside `[a, b]` returns zero, so a
/// fitted profile behaves like the compactly supported function it models.
#[derive(Debug, Clone)]
pub struct ChebProfile {
    a: f64,
    b: f64,
    /// `tables[d]` holds the series coefficients of the d-th derivative.
    tables: Vec<Vec<f64>>,
}

/// Series coefficients of the derivative, on the same interval.
/// Plain convention (no halved leading coefficient): descending recurrence
/// `d_j = d_{j+2} + 2 (j+1) c_{j+1}` followed by halving `d_0`, then the
/// chain-rule factor `2 / (b - a)`.
fn derivative_coeffs(c: &[f64], a: f64, b: f64) -> Vec<f64> {
    let n = c.len();
    if n <= 1 {
        return vec![0.0];
    }
    let mut d = vec![0.0; n - 1];
    for j in (0..n - 1).rev() {
        let above = if j + 2 < n - 1 { d[j + 2] } else { 0.0 };
        d[j] = above + 2.0 * (j as f64 + 1.0) * c[j + 1];
    }
    d[0] *= 0.5;
    let scale = 2.0 / (b - a);
    for v in &mut d {
        *v *= scale;
    }
    d
}

fn clenshaw(c: &[f64], xm: f64) -> f64 {
    let mut b1 = 0.0;
    let mut b2 = 0.0;
    for &ck in c.iter().skip(1).rev() {
        let t = 2.0 * xm * b1 - b2 + ck;
        b2 = b1;
        b1 = t;
    }
    c[0] + xm * b1 - b2
}

impl ChebProfile {
    /// Build from series coefficients, preparing derivative tables up to
    /// `max_order` (capped at the series degree and at 12).
    pub fn from_coeffs(coeffs: Vec<f64>, support: (f64, f64), max_order: usize) -> Self {
        let (a, b) = support;
        assert!(b > a, "support must be a nondegenerate interval");
        assert!(!coeffs.is_empty());
        let order = max_order.min(MAX_DERIVATIVE_TABLES).min(coeffs.len() - 1);
        let mut tables = Vec::with_capacity(order + 1);
        tables.push(coeffs);
        for d in 0..order {
            tables.push(derivative_coeffs(&tables[d], a, b));
        }
        ChebProfile { a, b, tables }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.tables[0]
    }

    pub fn degree(&self) -> usize {
        self.tables[0].len() - 1
    }

    fn map(&self, x: f64) -> f64 {
        (2.0 * x - self.a - self.b) / (self.b - self.a)
    }

    /// Evaluate the d-th derivative without the outside-support cutoff.
    /// Needed at support endpoints where the fitted series is still defined.
    pub fn eval_derivative_unclipped(&self, x: f64, d: usize) -> f64 {
        clenshaw(&self.tables[d], self.map(x))
    }

    /// Values of the series and its first `order` derivatives at the right
    /// support endpoint.
    pub fn right_end_values(&self, order: usize) -> Vec<f64> {
        (0..=order.min(self.tables.len() - 1))
            .map(|d| self.eval_derivative_unclipped(self.b, d))
            .collect()
    }

    /// Antiderivative on the same interval, normalized to vanish at the left
    /// endpoint. Carries one more derivative table than `self`.
    pub fn antiderivative(&self) -> ChebProfile {
        let c = &self.tables[0];
        let n = c.len();
        let beta = (self.b - self.a) / 2.0;
        let mut big = vec![0.0; n + 1];
        if n >= 1 {
            big[1] += c[0];
        }
        if n >= 2 {
            big[2] += c[1] / 4.0;
            big[0] += c[1] / 4.0;
        }
        for (k, &ck) in c.iter().enumerate().skip(2) {
            big[k + 1] += ck / (2.0 * (k as f64 + 1.0));
            big[k - 1] -= ck / (2.0 * (k as f64 - 1.0));
        }
        for v in &mut big {
            *v *= beta;
        }
        // Fix the constant so the antiderivative vanishes at x = a (xm = -1).
        let at_left: f64 = big
            .iter()
            .enumerate()
            .map(|(j, v)| if j % 2 == 0 { *v } else { -*v })
            .sum();
        big[0] -= at_left;
        ChebProfile::from_coeffs(big, (self.a, self.b), self.tables.len())
    }

    /// Multiply the series by the identity map `x`.
    pub fn multiply_by_x(&self) -> ChebProfile {
        let c = &self.tables[0];
        let n = c.len();
        let alpha = (self.a + self.b) / 2.0;
        let beta = (self.b - self.a) / 2.0;
        let mut out = vec![0.0; n + 1];
        for (j, &cj) in c.iter().enumerate() {
            out[j] += alpha * cj;
            if j == 0 {
                out[1] += beta * cj;
            } else {
                out[j + 1] += beta * cj / 2.0;
                out[j - 1] += beta * cj / 2.0;
            }
        }
        ChebProfile::from_coeffs(out, (self.a, self.b), self.tables.len() - 1)
    }
}

impl SmoothProfile for ChebProfile {
    fn support(&self) -> (f64, f64) {
        (self.a, self.b)
    }

    fn max_order(&self) -> usize {
        self.tables.len() - 1
    }

    fn jet(&self, x: f64, order: usize) -> Result<Vec<f64>, ProfileError> {
        if order >= self.tables.len() {
            return Err(ProfileError::InsufficientOrder {
                requested: order,
                available: self.tables.len() - 1,
            });
        }
        if x < self.a || x > self.b {
            return Ok(vec![0.0; order + 1]);
        }
        Ok((0..=order)
            .map(|d| self.eval_derivative_unclipped(x, d))
            .collect())
    }
}

/// Least squares Chebyshev fit of sampled values over `support`. Samples
/// outside the interval are ignored. Fails when the design matrix is rank
/// deficient or its condition estimate exceeds 1e13.
pub fn cheb_fit(
    data: &SampledProfile,
    support: (f64, f64),
    degree: usize,
) -> Result<ChebProfile, ProfileError> {
    let (a, b) = support;
    if !(b > a) || !a.is_finite() || !b.is_finite() {
        return Err(ProfileError::InvalidData(format!(
            "fit interval [{a}, {b}] is not a nondegenerate finite interval"
        )));
    }
    let pairs: Vec<(f64, f64)> = data
        .grid()
        .iter()
        .zip(data.values())
        .filter(|(t, _)| **t >= a && **t <= b)
        .map(|(t, v)| (*t, *v))
        .collect();
    if pairs.len() <= degree {
        return Err(ProfileError::InvalidData(format!(
            "{} samples inside the fit interval cannot determine degree {degree}",
            pairs.len()
        )));
    }
    let rows = pairs.len();
    let cols = degree + 1;
    let mut design = DMatrix::zeros(rows, cols);
    let mut rhs = DVector::zeros(rows);
    for (i, (t, v)) in pairs.iter().enumerate() {
        let xm = (2.0 * t - a - b) / (b - a);
        let mut prev = 1.0;
        let mut cur = xm;
        design[(i, 0)] = 1.0;
        if cols > 1 {
            design[(i, 1)] = xm;
        }
        for j in 2..cols {
            let next = 2.0 * xm * cur - prev;
            design[(i, j)] = next;
            prev = cur;
            cur = next;
        }
        rhs[i] = *v;
    }
    let svd = design.svd(true, true);
    let smax = svd.singular_values.max();
    let smin = svd.singular_values.min();
    let cond = if smin > 0.0 { smax / smin } else { f64::INFINITY };
    if !cond.is_finite() || cond > CONDITION_LIMIT {
        return Err(ProfileError::IllConditionedFit { cond });
    }
    let sol = svd
        .solve(&rhs, 0.0)
        .map_err(|e| ProfileError::InvalidData(e.to_string()))?;
    Ok(ChebProfile::from_coeffs(
        sol.iter().copied().collect(),
        support,
        MAX_DERIVATIVE_TABLES,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sampled(f: impl Fn(f64) -> f64, a: f64, b: f64, n: usize) -> SampledProfile {
        let grid: Vec<f64> = (0..n)
            .map(|i| a + (b - a) * i as f64 / (n - 1) as f64)
            .collect();
        let values = grid.iter().map(|t| f(*t)).collect();
        SampledProfile::new(grid, values).unwrap()
    }

    #[test]
    fn derivative_recurrence_on_t3() {
        // (T_3)' = 3 T_0 + 6 T_2 ... actually 12x^2 - 3 = 4.5 T_0? Check on
        // [-1, 1] numerically instead of by table.
        let p = ChebProfile::from_coeffs(vec![0.0, 0.0, 0.0, 1.0], (-1.0, 1.0), 2);
        for x in [-0.9, -0.3, 0.0, 0.4, 0.8] {
            let j = p.jet(x, 2).unwrap();
            let expect0 = 4.0 * x * x * x - 3.0 * x;
            let expect1 = 12.0 * x * x - 3.0;
            let expect2 = 24.0 * x;
            assert!((j[0] - expect0).abs() < 1e-13);
            assert!((j[1] - expect1).abs() < 1e-13);
            assert!((j[2] - expect2).abs() < 1e-13);
        }
    }

    #[test]
    fn fit_recovers_cubic_exactly() {
        let data = sampled(|t| 2.0 * t * t * t - t + 0.5, 0.2, 1.4, 24);
        let fit = cheb_fit(&data, (0.2, 1.4), 3).unwrap();
        for x in [0.25, 0.7, 1.1, 1.39] {
            assert!((fit.eval(x) - (2.0 * x * x * x - x + 0.5)).abs() < 1e-12);
            let j = fit.jet(x, 2).unwrap();
            assert!((j[1] - (6.0 * x * x - 1.0)).abs() < 1e-11);
            assert!((j[2] - 12.0 * x).abs() < 1e-10);
        }
    }

    #[test]
    fn antiderivative_of_square_is_cubic_over_three() {
        let data = sampled(|t| t * t, 0.0, 1.0, 16);
        let fit = cheb_fit(&data, (0.0, 1.0), 4).unwrap();
        let anti = fit.antiderivative();
        for x in [0.0, 0.3, 0.5, 0.9, 1.0] {
            assert!((anti.eval_derivative_unclipped(x, 0) - x * x * x / 3.0).abs() < 1e-13);
        }
        // Normalized at the left endpoint.
        assert!(anti.eval_derivative_unclipped(0.0, 0).abs() < 1e-14);
    }

    #[test]
    fn multiply_by_x_shifts_monomials() {
        let data = sampled(|t| t * t - 1.0, 0.5, 1.5, 16);
        let fit = cheb_fit(&data, (0.5, 1.5), 3).unwrap();
        let xed = fit.multiply_by_x();
        for x in [0.5, 0.8, 1.2, 1.5] {
            assert!((xed.eval_derivative_unclipped(x, 0) - x * (x * x - 1.0)).abs() < 1e-13);
        }
    }

    #[test]
    fn zero_outside_support() {
        let data = sampled(|t| t, 0.3, 0.7, 8);
        let fit = cheb_fit(&data, (0.3, 0.7), 2).unwrap();
        assert_eq!(fit.eval(0.2), 0.0);
        assert_eq!(fit.eval(0.8), 0.0);
        assert_eq!(fit.jet(0.1, 2).unwrap(), vec![0.0; 3]);
        // The order cap applies even where the profile vanishes.
        assert!(fit.jet(0.1, 3).is_err());
    }

    #[test]
    fn underdetermined_fit_is_rejected() {
        let data = sampled(|t| t, 0.0, 1.0, 5);
        assert!(matches!(
            cheb_fit(&data, (0.0, 1.0), 5),
            Err(ProfileError::InvalidData(_))
        ));
    }

    #[test]
    fn right_end_values_reach_past_clip() {
        let data = sampled(|t| t * t, 0.0, 2.0, 12);
        let fit = cheb_fit(&data, (0.0, 2.0), 2).unwrap();
        let ends = fit.right_end_values(2);
        assert!((ends[0] - 4.0).abs() < 1e-12);
        assert!((ends[1] - 4.0).abs() < 1e-12);
        assert!((ends[2] - 2.0).abs() < 1e-11);
    }
}
