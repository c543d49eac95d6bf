use num_traits::{One, Zero};

use crate::rational::{int, BigInt};

/// Binomial coefficient extended to all integer arguments:
/// 0 for b < 0; the usual value for a >= b >= 0; 0 for 0 <= a < b;
/// and a(a-1)...(a-b+1)/b! when a < 0 <= b.
///
/// The running product acc * (a-i) is divisible by i+1 at every step (each
/// partial product is itself an extended binomial), so the integer division
/// below is exact.
pub fn binomial_extended(a: i64, b: i64) -> BigInt {
    if b < 0 {
        return BigInt::zero();
    }
    if a >= 0 && a < b {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..b {
        acc *= int(a - i);
        acc /= int(i + 1);
    }
    acc
}
