use exact_core::rational::neg_one_pow;
use exact_core::{binomial_extended, factorial, pow2, BigRational, LaurentPoly};
use num_traits::Zero;

use crate::CoeffError;

/// Validated index (k, j, r) with 1 <= j <= k and 0 <= r <= 2(k-j).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoeffTriple {
    k: u32,
    j: u32,
    r: u32,
}

impl CoeffTriple {
    pub fn new(k: u32, j: u32, r: u32) -> Result<Self, CoeffError> {
        if j < 1 || j > k || r > 2 * (k - j) {
            return Err(CoeffError::IndexOutOfRange {
                what: format!("coefficient triple needs 1 <= j <= k, r <= 2(k-j); got k={k} j={j} r={r}"),
            });
        }
        Ok(Self { k, j, r })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn j(&self) -> u32 {
        self.j
    }

    pub fn r(&self) -> u32 {
        self.r
    }
}

fn bin(a: i64, b: i64) -> BigRational {
    BigRational::from(binomial_extended(a, b))
}

/// C_{k,j,r} as it falls out of expanding the iterated derivative of the
/// left integral: a double sum over l and p with alternating powers of two.
pub fn c_coeff_first_form(idx: &CoeffTriple) -> BigRational {
    let (k, j, r) = (i64::from(idx.k), i64::from(idx.j), i64::from(idx.r));
    let mut sum = BigRational::zero();
    for l in 0..=(k - j) {
        let mut inner = BigRational::zero();
        for p in 0..=(k - j - l) {
            inner += pow2(-p)
                * bin(2 * k - j - p - 1, k + l - 1)
                * bin(k - l + p, p)
                * bin(p, r + j - k + l);
        }
        sum += pow2(k - l) * bin(k + l, l) * inner;
    }
    let pref = BigRational::from(factorial(idx.k)) / BigRational::from(factorial(idx.j));
    neg_one_pow(r) * pref * sum
}

/// C_{k,j,r} after resummation: the same value through a reorganized double
/// sum whose bounds depend on r instead of k. The (-1)^{r+p} comes from the
/// binomial series of (2+z)^{-(r+j+1)} in the residue that produces the
/// p-sum; it cancels the global (-1)^r into (-2)^p.
pub fn c_coeff_simplified(idx: &CoeffTriple) -> BigRational {
    let (k, j, r) = (i64::from(idx.k), i64::from(idx.j), i64::from(idx.r));
    let mut sum = BigRational::zero();
    for l in 0..=(r + j) {
        for p in 0..=(2 * k + l - j) {
            sum += pow2(p)
                * neg_one_pow(r + p)
                * bin(r + j, l)
                * bin(2 * k - l, k - l)
                * bin(2 * k + l - j, p)
                * bin(2 * l - j - p, 2 * l - 2 * j - r - p);
        }
    }
    let pref = BigRational::from(factorial(idx.k)) * pow2(j) / BigRational::from(factorial(idx.j));
    neg_one_pow(r) * pref * sum
}

/// B_{k,j,r}: the coefficient family read off from expanding L_k in ordinary
/// derivatives. On the valid domain 2k - 2l - j >= j >= 1, so the divisor
/// never vanishes.
pub fn b_coeff(idx: &CoeffTriple) -> BigRational {
    let (k, j, r) = (i64::from(idx.k), i64::from(idx.j), i64::from(idx.r));
    let mut sum = BigRational::zero();
    let base = BigRational::from(factorial(idx.k)) * pow2(j)
        / BigRational::from(factorial(idx.j - 1));
    for l in 0..=(k - j) {
        let divisor = 2 * k - 2 * l - j;
        sum += &base / exact_core::rat(divisor)
            * bin(k + l, l)
            * bin(divisor, k - l)
            * bin(2 * l, r + j - k + l);
    }
    neg_one_pow(r) * sum
}

/// P_{k,j}(t) = sum_r C_{k,j,r} t^{2k-j-r}. For j = 0 the polynomial
/// collapses to the constant (2k)!/k!.
pub fn p_polynomial(k: u32, j: u32) -> Result<LaurentPoly, CoeffError> {
    bridge_polynomial(k, j, c_coeff_first_form)
}

/// Q_{k,j}(t) = sum_r B_{k,j,r} t^{2k-j-r}, same shape and same j = 0 case.
pub fn q_polynomial(k: u32, j: u32) -> Result<LaurentPoly, CoeffError> {
    bridge_polynomial(k, j, b_coeff)
}

fn bridge_polynomial(
    k: u32,
    j: u32,
    coeff: impl Fn(&CoeffTriple) -> BigRational,
) -> Result<LaurentPoly, CoeffError> {
    if j > k {
        return Err(CoeffError::IndexOutOfRange {
            what: format!("bridge polynomial needs j <= k, got k={k} j={j}"),
        });
    }
    if j == 0 {
        let c = BigRational::from(factorial(2 * k)) / BigRational::from(factorial(k));
        return Ok(LaurentPoly::constant(c));
    }
    let mut p = LaurentPoly::zero();
    for r in 0..=(2 * (k - j)) {
        let idx = CoeffTriple::new(k, j, r).expect("r stays within 2(k-j)");
        let e = i64::from(2 * k - j - r);
        p = &p + &LaurentPoly::monomial(e, coeff(&idx));
    }
    Ok(p)
}
