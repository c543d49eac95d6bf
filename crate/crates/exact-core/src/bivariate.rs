use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::binomial::binomial_extended;
use crate::laurent::LaurentPoly;
use crate::rational::{neg_one_pow, pow2, rat, ratio, BigRational};

/// Polynomial in (t, u) with exact rational coefficients and nonnegative
/// exponents. Key order is (t_exp, u_exp); no stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BivariatePoly {
    terms: BTreeMap<(i64, i64), BigRational>,
}

impl BivariatePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, rat(1))
    }

    pub fn monomial(t_exp: i64, u_exp: i64, coeff: BigRational) -> Self {
        assert!(t_exp >= 0 && u_exp >= 0, "bivariate exponents must be nonnegative");
        let mut p = Self::zero();
        p.insert_add(t_exp, u_exp, coeff);
        p
    }

    fn insert_add(&mut self, t_exp: i64, u_exp: i64, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self
            .terms
            .entry((t_exp, u_exp))
            .or_insert_with(BigRational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&(t_exp, u_exp));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, t_exp: i64, u_exp: i64) -> BigRational {
        self.terms
            .get(&(t_exp, u_exp))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = ((i64, i64), &BigRational)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Exact evaluation at rational (t, u).
    pub fn eval(&self, t: &BigRational, u: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (&(et, eu), c) in &self.terms {
            let mut term = c.clone();
            for _ in 0..et {
                term *= t;
            }
            for _ in 0..eu {
                term *= u;
            }
            acc += term;
        }
        acc
    }
}

impl Add for &BivariatePoly {
    type Output = BivariatePoly;
    fn add(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = self.clone();
        for (&(et, eu), c) in &rhs.terms {
            out.insert_add(et, eu, c.clone());
        }
        out
    }
}

impl Sub for &BivariatePoly {
    type Output = BivariatePoly;
    fn sub(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = self.clone();
        for (&(et, eu), c) in &rhs.terms {
            out.insert_add(et, eu, -c.clone());
        }
        out
    }
}

impl Mul for &BivariatePoly {
    type Output = BivariatePoly;
    fn mul(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = BivariatePoly::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.insert_add(a1 + a2, b1 + b2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &BivariatePoly {
    type Output = BivariatePoly;
    fn neg(self) -> BivariatePoly {
        BivariatePoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c.clone())).collect(),
        }
    }
}

impl fmt::Debug for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BivariatePoly[")?;
        let mut first = true;
        for (&(et, eu), c) in &self.terms {
            if first {
                first = false;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{c}*t^{et}*u^{eu}")?;
        }
        write!(f, "]")
    }
}

/// The quadratic kernel ((1+t)^2 - u^2)(u^2 - (1-t)^2), expanded.
pub fn q_kernel() -> BivariatePoly {
    // (2 + 2t^2)u^2 - u^4 - (1 - 2t^2 + t^4)
    let mut p = BivariatePoly::zero();
    p.insert_add(0, 2, rat(2));
    p.insert_add(2, 2, rat(2));
    p.insert_add(0, 4, rat(-1));
    p.insert_add(0, 0, rat(-1));
    p.insert_add(2, 0, rat(2));
    p.insert_add(4, 0, rat(-1));
    p
}

pub fn q_power(k: u32) -> BivariatePoly {
    q_kernel().pow(k)
}

/// Integration bounds available to integrate_in_u, as functions of t.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum UBound {
    Zero,
    OneMinusT,
    One,
    OnePlusT,
    Two,
}

/// Integral over u of u^weight_degree * p(t, u) between the given bounds,
/// as an exact polynomial in t. The u-antiderivative is evaluated termwise;
/// every u-power at the bounds expands through the binomial theorem.
pub fn integrate_in_u(
    p: &BivariatePoly,
    weight_degree: u32,
    lower: UBound,
    upper: UBound,
) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for (&(et, eu), c) in &p.terms {
        let m = eu + i64::from(weight_degree) + 1; // u-power after integration, >= 1
        let coeff = c * ratio(1, m);
        out = &out + &bound_eval(upper, et, m, &coeff);
        out = &out - &bound_eval(lower, et, m, &coeff);
    }
    out
}

/// coeff * t^et * bound(t)^m as a polynomial in t.
fn bound_eval(bound: UBound, et: i64, m: i64, coeff: &BigRational) -> LaurentPoly {
    match bound {
        UBound::Zero => LaurentPoly::zero(),
        UBound::One => LaurentPoly::monomial(et, coeff.clone()),
        UBound::Two => LaurentPoly::monomial(et, coeff * pow2(m)),
        UBound::OneMinusT | UBound::OnePlusT => {
            let mut out = LaurentPoly::zero();
            for i in 0..=m {
                let mut c = coeff * BigRational::from(binomial_extended(m, i));
                if bound == UBound::OneMinusT {
                    c *= neg_one_pow(i);
                }
                out = &out + &LaurentPoly::monomial(et + i, c);
            }
            out
        }
    }
}
