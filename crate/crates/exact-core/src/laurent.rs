use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::binomial::binomial_extended;
use crate::rational::{neg_one_pow, rat, BigRational};
use crate::ExactError;

/// Laurent polynomial in one variable t with exact rational coefficients.
/// Invariant: no stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(0, c)
    }

    pub fn one() -> Self {
        Self::constant(rat(1))
    }

    /// The variable t.
    pub fn var() -> Self {
        Self::monomial(1, rat(1))
    }

    pub fn monomial(exp: i64, coeff: BigRational) -> Self {
        let mut p = Self::zero();
        p.insert_add(exp, coeff);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, BigRational)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.insert_add(e, c);
        }
        p
    }

    fn insert_add(&mut self, exp: i64, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigRational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigRational {
        self.terms.get(&exp).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &BigRational)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Coefficient list (exponent, "num/den"), lowest exponent first.
    pub fn coeff_list(&self) -> Vec<(i64, String)> {
        self.iter().map(|(e, c)| (e, c.to_string())).collect()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    /// Multiply by t^delta.
    pub fn shift_exp(&self, delta: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, v)| (e + delta, v.clone())).collect(),
        }
    }

    /// (t^a * self, a) with a = max(0, -min_exp), so the first component is a
    /// true polynomial.
    pub fn cleared(&self) -> (Self, i64) {
        let a = self.min_exp().map_or(0, |e| (-e).max(0));
        (self.shift_exp(a), a)
    }

    /// d/dt, termwise: c t^e -> e c t^{e-1}.
    pub fn differentiate(&self) -> Self {
        let mut out = Self::zero();
        for (&e, c) in &self.terms {
            out.insert_add(e - 1, c * rat(e));
        }
        out
    }

    pub fn differentiate_n(&self, n: u32) -> Self {
        let mut out = self.clone();
        for _ in 0..n {
            out = out.differentiate();
        }
        out
    }

    /// D = (1/t) d/dt, termwise: c t^e -> e c t^{e-2}.
    pub fn apply_d(&self) -> Self {
        let mut out = Self::zero();
        for (&e, c) in &self.terms {
            out.insert_add(e - 2, c * rat(e));
        }
        out
    }

    pub fn apply_d_n(&self, n: u32) -> Self {
        let mut out = self.clone();
        for _ in 0..n {
            out = out.apply_d();
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// p(shift + sign * t). Defined for true polynomials only; a negative
    /// exponent is an error (callers clear first and restore afterwards).
    pub fn compose_affine(&self, sign: i64, shift: &BigRational) -> Result<Self, ExactError> {
        assert!(sign == 1 || sign == -1, "sign must be +1 or -1");
        if let Some(e) = self.min_exp() {
            if e < 0 {
                return Err(ExactError::NegativeExponentComposition { exponent: e });
            }
        }
        let max_e = self.max_exp().unwrap_or(0).max(0);
        let mut shift_pows = Vec::with_capacity(max_e as usize + 1);
        shift_pows.push(BigRational::one());
        for i in 1..=max_e {
            let prev = shift_pows[(i - 1) as usize].clone();
            shift_pows.push(prev * shift);
        }
        let mut out = Self::zero();
        for (&e, c) in &self.terms {
            for i in 0..=e {
                let coeff = BigRational::from(binomial_extended(e, i))
                    * &shift_pows[(e - i) as usize]
                    * neg_one_pow(if sign == -1 { i } else { 0 })
                    * c;
                out.insert_add(i, coeff);
            }
        }
        Ok(out)
    }

    /// p(-t). Clearing t^a makes the core a true polynomial; the restore
    /// multiplies by (-1)^a t^{-a}, exact for every term.
    pub fn reflect(&self) -> Self {
        let (cleared, a) = self.cleared();
        let composed = cleared
            .compose_affine(-1, &BigRational::zero())
            .expect("cleared polynomial has no negative exponents");
        let out = composed.shift_exp(-a);
        if a % 2 != 0 {
            -&out
        } else {
            out
        }
    }

    /// Exact evaluation. x = 0 with negative exponents present is an error.
    pub fn eval(&self, x: &BigRational) -> Result<BigRational, ExactError> {
        if x.is_zero() {
            if let Some(e) = self.min_exp() {
                if e < 0 {
                    return Err(ExactError::NegativeExponentAtZero { exponent: e });
                }
            }
        }
        let mut acc = BigRational::zero();
        for (&e, c) in &self.terms {
            acc += c * rat_pow(x, e);
        }
        Ok(acc)
    }

    /// Evaluate as f64 (for handing exact data to numeric layers).
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.terms
            .iter()
            .map(|(&e, c)| rational_to_f64(c) * x.powi(e as i32))
            .sum()
    }
}

fn rat_pow(x: &BigRational, e: i64) -> BigRational {
    let mag = e.unsigned_abs() as u32;
    let mut acc = BigRational::one();
    for _ in 0..mag {
        acc *= x;
    }
    if e < 0 {
        acc.recip()
    } else {
        acc
    }
}

pub fn rational_to_f64(c: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    c.to_f64().unwrap_or(f64::NAN)
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.insert_add(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.insert_add(e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.insert_add(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, c) in &self.terms {
            if first {
                first = false;
            } else {
                write!(f, " + ")?;
            }
            match e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*t")?,
                _ => write!(f, "{c}*t^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn t() -> LaurentPoly {
        LaurentPoly::var()
    }

    #[test]
    fn apply_d_monomial_rule() {
        // D(c t^e) = e c t^{e-2}
        let p = LaurentPoly::monomial(4, rat(3));
        assert_eq!(p.apply_d(), LaurentPoly::monomial(2, rat(12)));
        // constants die
        assert_eq!(LaurentPoly::one().apply_d(), LaurentPoly::zero());
        // negative exponents keep sliding down
        let q = LaurentPoly::monomial(-1, rat(1));
        assert_eq!(q.apply_d(), LaurentPoly::monomial(-3, rat(-1)));
    }

    #[test]
    fn d_squared_of_t4_is_8() {
        let p = LaurentPoly::monomial(4, rat(1));
        assert_eq!(p.apply_d_n(2), LaurentPoly::constant(rat(8)));
    }

    #[test]
    fn differentiate_basic() {
        let p = LaurentPoly::from_terms([(2, rat(1)), (0, rat(5)), (-1, rat(2))]);
        let expect = LaurentPoly::from_terms([(1, rat(2)), (-2, rat(-2))]);
        assert_eq!(p.differentiate(), expect);
    }

    #[test]
    fn compose_affine_one_minus_t() {
        // t^2 at 1 - t: 1 - 2t + t^2
        let p = t().pow(2);
        let got = p.compose_affine(-1, &rat(1)).unwrap();
        let expect = LaurentPoly::from_terms([(0, rat(1)), (1, rat(-2)), (2, rat(1))]);
        assert_eq!(got, expect);
    }

    #[test]
    fn compose_affine_rejects_negative_exponents() {
        let p = LaurentPoly::monomial(-1, rat(1));
        let err = p.compose_affine(1, &rat(1)).unwrap_err();
        assert_eq!(err, ExactError::NegativeExponentComposition { exponent: -1 });
    }

    #[test]
    fn reflect_handles_laurent_terms() {
        // (t^{-1} + t)(-t) = -t^{-1} - t
        let p = LaurentPoly::from_terms([(-1, rat(1)), (1, rat(1))]);
        let expect = LaurentPoly::from_terms([(-1, rat(-1)), (1, rat(-1))]);
        assert_eq!(p.reflect(), expect);
        // even exponents are fixed
        let q = LaurentPoly::from_terms([(-2, rat(3)), (4, ratio(1, 2))]);
        assert_eq!(q.reflect(), q);
    }

    #[test]
    fn eval_exact_and_zero_guard() {
        let p = LaurentPoly::from_terms([(2, rat(1)), (0, rat(-1))]);
        assert_eq!(p.eval(&rat(3)).unwrap(), rat(8));
        let q = LaurentPoly::monomial(-2, rat(1));
        assert_eq!(q.eval(&ratio(1, 2)).unwrap(), rat(4));
        assert!(q.eval(&rat(0)).is_err());
    }

    #[test]
    fn mul_and_cancellation_keep_invariant() {
        let p = &(&t() + &LaurentPoly::one()) * &(&t() - &LaurentPoly::one());
        assert_eq!(p, LaurentPoly::from_terms([(2, rat(1)), (0, rat(-1))]));
        let z = &p - &p;
        assert!(z.is_zero());
        assert_eq!(z.num_terms(), 0);
    }
}
