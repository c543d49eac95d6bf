pub use num::bigint::BigInt;
pub use num::rational::BigRational;
use num_traits::One;

pub fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

pub fn rat(v: i64) -> BigRational {
    BigRational::from_integer(int(v))
}

/// num/den as an exact rational. den must be nonzero.
pub fn ratio(num: i64, den: i64) -> BigRational {
    assert!(den != 0, "zero denominator");
    BigRational::new(int(num), int(den))
}

pub fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=i64::from(n) {
        acc *= int(i);
    }
    acc
}

/// 2^e for any integer e, including negative.
pub fn pow2(e: i64) -> BigRational {
    let mag = BigInt::from(2).pow(e.unsigned_abs() as u32);
    if e >= 0 {
        BigRational::from_integer(mag)
    } else {
        BigRational::new(BigInt::one(), mag)
    }
}

/// (-1)^e as a rational.
pub fn neg_one_pow(e: i64) -> BigRational {
    if e.rem_euclid(2) == 0 {
        rat(1)
    } else {
        rat(-1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorial_small() {
        assert_eq!(factorial(0), int(1));
        assert_eq!(factorial(1), int(1));
        assert_eq!(factorial(5), int(120));
        assert_eq!(factorial(10), int(3628800));
    }

    #[test]
    fn pow2_negative_exponent() {
        assert_eq!(pow2(3), rat(8));
        assert_eq!(pow2(0), rat(1));
        assert_eq!(pow2(-2), ratio(1, 4));
    }

    #[test]
    fn neg_one_pow_parity() {
        assert_eq!(neg_one_pow(0), rat(1));
        assert_eq!(neg_one_pow(7), rat(-1));
        assert_eq!(neg_one_pow(-1), rat(-1));
        assert_eq!(neg_one_pow(-4), rat(1));
    }
}
