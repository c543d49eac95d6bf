//! Truncated Taylor series arithmetic on fixed-length coefficient vectors.
//!
//! A jet of order `n` is stored as `n + 1` Taylor coefficients `c[i] =
//! f^(i)(x0) / i!`. All binary ops require equal lengths.

pub(crate) fn constant(value: f64, order: usize) -> Vec<f64> {
    let mut c = vec![0.0; order + 1];
    c[0] = value;
    c
}

/// Taylor coefficients of `x ↦ (x - center) / width` expanded at `x0`.
pub(crate) fn affine(x0: f64, center: f64, width: f64, order: usize) -> Vec<f64> {
    let mut c = constant((x0 - center) / width, order);
    if order >= 1 {
        c[1] = 1.0 / width;
    }
    c
}

pub(crate) fn add_const(a: &[f64], value: f64) -> Vec<f64> {
    let mut c = a.to_vec();
    c[0] += value;
    c
}

pub(crate) fn neg(a: &[f64]) -> Vec<f64> {
    a.iter().map(|x| -x).collect()
}

pub(crate) fn mul(a: &[f64], b: &[f64]) -> Vec<f64> {
    debug_assert_eq!(a.len(), b.len());
    let n = a.len();
    let mut c = vec![0.0; n];
    for i in 0..n {
        for j in 0..n - i {
            c[i + j] += a[i] * b[j];
        }
    }
    c
}

/// Reciprocal of a jet with nonzero constant term.
pub(crate) fn recip(a: &[f64]) -> Vec<f64> {
    let n = a.len();
    let mut c = vec![0.0; n];
    c[0] = 1.0 / a[0];
    for i in 1..n {
        let mut acc = 0.0;
        for j in 1..=i {
            acc += a[j] * c[i - j];
        }
        c[i] = -acc / a[0];
    }
    c
}

/// exp of a jet via the derivative recurrence `n e_n = sum_{i=1..n} i u_i e_{n-i}`.
pub(crate) fn exp(a: &[f64]) -> Vec<f64> {
    let n = a.len();
    let mut c = vec![0.0; n];
    c[0] = a[0].exp();
    for i in 1..n {
        let mut acc = 0.0;
        for j in 1..=i {
            acc += (j as f64) * a[j] * c[i - j];
        }
        c[i] = acc / i as f64;
    }
    c
}

/// Convert Taylor coefficients to derivative values (multiply by `i!`).
pub(crate) fn derivative_values(taylor: &[f64]) -> Vec<f64> {
    let mut fact = 1.0;
    taylor
        .iter()
        .enumerate()
        .map(|(i, c)| {
            if i > 0 {
                fact *= i as f64;
            }
            c * fact
        })
        .collect()
}
