use exact_core::rational::neg_one_pow;
use exact_core::{factorial, pow2, BigRational};

use crate::CoeffError;

/// Weight of (1-t)^{k-l} D^{k-l} inside L_k: (k+l)! / ((k-l)! l! 2^l).
pub fn lk_weight(k: u32, l: u32) -> Result<BigRational, CoeffError> {
    if l > k {
        return Err(CoeffError::IndexOutOfRange {
            what: format!("lk_weight needs l <= k, got k={k} l={l}"),
        });
    }
    let num = BigRational::from(factorial(k + l));
    let den = BigRational::from(factorial(k - l))
        * BigRational::from(factorial(l))
        * pow2(i64::from(l));
    Ok(num / den)
}

/// Expansion of D^r = ((1/t) d/dt)^r in ordinary derivatives:
/// D^r = sum_j w_j t^{-(2r-j)} d^j/dt^j, returned as (j, w_j) for j = 1..r.
pub fn d_power_weights(r: u32) -> Result<Vec<(u32, BigRational)>, CoeffError> {
    if r < 1 {
        return Err(CoeffError::IndexOutOfRange {
            what: format!("d_power_weights needs r >= 1, got r={r}"),
        });
    }
    let mut out = Vec::with_capacity(r as usize);
    for j in 1..=r {
        let num = BigRational::from(factorial(2 * r - 1 - j));
        let den = pow2(i64::from(r - j))
            * BigRational::from(factorial(r - j))
            * BigRational::from(factorial(j - 1));
        let w = neg_one_pow(i64::from(r - j)) * num / den;
        out.push((j, w));
    }
    Ok(out)
}
