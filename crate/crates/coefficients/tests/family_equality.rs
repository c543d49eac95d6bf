use coefficients::{b_coeff, c_coeff_first_form, c_coeff_simplified, p_polynomial, q_polynomial, CoeffTriple};
use exact_core::rational::neg_one_pow;
use exact_core::{binomial_extended, factorial, pow2, BigRational, LaurentPoly};
use num_traits::Zero;

fn bin(a: i64, b: i64) -> BigRational {
    BigRational::from(binomial_extended(a, b))
}

#[test]
fn three_forms_agree_up_to_k_six() {
    for k in 1..=6u32 {
        for j in 1..=k {
            for r in 0..=(2 * (k - j)) {
                let idx = CoeffTriple::new(k, j, r).unwrap();
                let first = c_coeff_first_form(&idx);
                let simplified = c_coeff_simplified(&idx);
                let b = b_coeff(&idx);
                assert_eq!(first, simplified, "first vs simplified at k={k} j={j} r={r}");
                assert_eq!(first, b, "first form vs b at k={k} j={j} r={r}");
            }
        }
    }
}

#[test]
fn bridge_polynomials_agree_up_to_k_six() {
    for k in 0..=6u32 {
        for j in 0..=k {
            assert_eq!(
                p_polynomial(k, j).unwrap(),
                q_polynomial(k, j).unwrap(),
                "P vs Q at k={k} j={j}"
            );
        }
        let constant = p_polynomial(k, 0).unwrap();
        let expect = BigRational::from(factorial(2 * k)) / BigRational::from(factorial(k));
        assert_eq!(constant, LaurentPoly::constant(expect));
    }
}

/// Rewritten first form whose terms vanish on their own once the indices
/// leave the nominal domain: the two binomial products are replaced by
/// equal ones whose lower index goes negative outside it. Widening the
/// summation bounds must then leave the value unchanged; this guards the
/// nominal bounds against off-by-one truncation.
fn c_first_form_widened(k: i64, j: i64, r: i64, widen: i64) -> BigRational {
    let mut sum = BigRational::zero();
    for l in 0..=(k - j + widen) {
        for p in 0..=((k - j - l).max(0) + widen) {
            sum += pow2(k - l - p)
                * bin(k + l, l)
                * bin(2 * k - j - p - 1, k - j - l - p)
                * bin(k - l + p, r + j)
                * bin(r + j, k - l);
        }
    }
    let pref = BigRational::from(factorial(k as u32)) / BigRational::from(factorial(j as u32));
    neg_one_pow(r) * pref * sum
}

/// Same guard for B: the divided binomial is replaced by the equal
/// difference of two binomials, which vanishes for l beyond k - j.
fn b_widened(k: i64, j: i64, r: i64, widen: i64) -> BigRational {
    let mut sum = BigRational::zero();
    for l in 0..=(k - j + widen) {
        let diff = bin(2 * k - 2 * l - j - 1, k - j - l) - bin(2 * k - 2 * l - j - 1, k - j - l - 1);
        sum += diff * bin(k + l, l) * bin(2 * l, r + j - k + l);
    }
    let pref = BigRational::from(factorial(k as u32)) * pow2(j)
        / BigRational::from(factorial(j as u32));
    neg_one_pow(r) * pref * sum
}

/// The simplified form vanishes beyond its own bounds as written.
fn c_simplified_widened(k: i64, j: i64, r: i64, widen: i64) -> BigRational {
    let mut sum = BigRational::zero();
    for l in 0..=(r + j + widen) {
        for p in 0..=(2 * k + l - j + widen) {
            sum += pow2(p)
                * neg_one_pow(r + p)
                * bin(r + j, l)
                * bin(2 * k - l, k - l)
                * bin(2 * k + l - j, p)
                * bin(2 * l - j - p, 2 * l - 2 * j - r - p);
        }
    }
    let pref = BigRational::from(factorial(k as u32)) * pow2(j)
        / BigRational::from(factorial(j as u32));
    neg_one_pow(r) * pref * sum
}

#[test]
fn widened_bounds_do_not_change_values() {
    for k in 1..=4u32 {
        for j in 1..=k {
            for r in 0..=(2 * (k - j)) {
                let idx = CoeffTriple::new(k, j, r).unwrap();
                let (ki, ji, ri) = (i64::from(k), i64::from(j), i64::from(r));
                let reference = c_coeff_first_form(&idx);
                assert_eq!(
                    c_first_form_widened(ki, ji, ri, 0),
                    reference,
                    "rewritten first form must match at k={k} j={j} r={r}"
                );
                assert_eq!(
                    c_first_form_widened(ki, ji, ri, 3),
                    reference,
                    "first form bounds leak at k={k} j={j} r={r}"
                );
                assert_eq!(
                    c_simplified_widened(ki, ji, ri, 3),
                    c_coeff_simplified(&idx),
                    "simplified form bounds leak at k={k} j={j} r={r}"
                );
                assert_eq!(
                    b_widened(ki, ji, ri, 3),
                    b_coeff(&idx),
                    "b bounds leak at k={k} j={j} r={r}"
                );
            }
        }
    }
}
