use coefficients::{p_polynomial, q_polynomial};
use exact_core::rational::neg_one_pow;
use exact_core::{binomial_extended, factorial, pow2, rat, BigRational, LaurentPoly};

use crate::builders::{apply_lk, build_g, build_hl, build_hr, ddt_d2k};
use crate::IdentityReport;

fn one_minus_t() -> LaurentPoly {
    LaurentPoly::from_terms([(0, rat(1)), (1, rat(-1))])
}

fn at_one_minus_t(p: &LaurentPoly) -> LaurentPoly {
    p.compose_affine(-1, &rat(1))
        .expect("composition requires a true polynomial")
}

/// d/dt D^{2k} applied to H^L, G, H^R of the same g must satisfy
/// lhs = -interior and lhs = right(-t). Both are checked; the first
/// nonzero difference becomes the discrepancy.
pub fn verify_reflection_relations(g: &LaurentPoly, k: u32) -> IdentityReport {
    let d_hl = ddt_d2k(&build_hl(g, k), k);
    let d_g = ddt_d2k(&build_g(g, k), k);
    let d_hr = ddt_d2k(&build_hr(g, k), k);
    let against_interior = &d_hl + &d_g;
    let against_right = &d_hl - &d_hr.reflect();
    let discrepancy = if !against_interior.is_zero() {
        against_interior
    } else {
        against_right
    };
    IdentityReport::new("reflection-relations", k, 0, &g.to_string(), discrepancy)
}

/// t^{2k} d/dt D^{2k} H^L_k = (-1)^{k+1} k! 8^k [L_k h](1-t) with
/// h = t^{2k+1} g. Both sides are true polynomials, so the comparison is
/// a plain subtraction.
pub fn verify_lk_bridge(g: &LaurentPoly, k: u32) -> IdentityReport {
    let ki = i64::from(k);
    let h = g.shift_exp(2 * ki + 1);
    let lk_h = apply_lk(&h, k);
    let c = neg_one_pow(ki + 1) * BigRational::from(factorial(k)) * pow2(3 * ki);
    let rhs = at_one_minus_t(&lk_h).scale(&c);
    let lhs = ddt_d2k(&build_hl(g, k), k).shift_exp(2 * ki);
    IdentityReport::new("lk-bridge", k, 0, &g.to_string(), &lhs - &rhs)
}

/// t^{2k}(1-t)^{2k} d/dt D^{2k} H^L_k expanded through the P_{k,j} bridge
/// polynomials against the derivatives of h = t^{2k+1} g at 1-t.
pub fn verify_hl_expansion(g: &LaurentPoly, k: u32) -> IdentityReport {
    let ki = i64::from(k);
    let omt = one_minus_t();
    let raw = ddt_d2k(&build_hl(g, k), k).shift_exp(2 * ki);
    let lhs = &raw * &omt.pow(2 * k);

    let h = g.shift_exp(2 * ki + 1);
    let c0 = BigRational::from(factorial(2 * k)) / BigRational::from(factorial(k));
    let mut bracket = (&at_one_minus_t(&h) * &omt.pow(2 * k)).scale(&c0);
    for j in 1..=k {
        let hj = at_one_minus_t(&h.differentiate_n(j));
        let pkj = p_polynomial(k, j).expect("1 <= j <= k");
        let weighted = &pkj * &omt.pow(j);
        bracket = &bracket + &(&weighted * &hj);
    }
    let c4 = neg_one_pow(ki + 1) * BigRational::from(factorial(k)) * pow2(2 * ki);
    IdentityReport::new("hl-expansion", k, 0, &g.to_string(), &lhs - &bracket.scale(&c4))
}

/// (1-t)^{2k} 2^k [L_k h](1-t) expanded through the Q_{k,j} bridge
/// polynomials, for an arbitrary true polynomial h (not weighted by
/// t^{2k+1}). L_k h picks up negative powers, so the left side clears
/// t^a first and moves (1-t)^a across.
pub fn verify_lk_expansion(h: &LaurentPoly, k: u32) -> IdentityReport {
    assert!(
        h.min_exp().map_or(true, |e| e >= 0),
        "expansion check needs a true polynomial"
    );
    let ki = i64::from(k);
    let omt = one_minus_t();
    let (cleared, a) = apply_lk(h, k).cleared();
    assert!(a <= 2 * ki, "clearing exponent {a} exceeds 2k");
    let qc = at_one_minus_t(&cleared);
    let lhs = (&qc * &omt.pow((2 * ki - a) as u32)).scale(&pow2(ki));

    let c0 = BigRational::from(factorial(2 * k)) / BigRational::from(factorial(k));
    let mut rhs = (&at_one_minus_t(h) * &omt.pow(2 * k)).scale(&c0);
    for j in 1..=k {
        let hj = at_one_minus_t(&h.differentiate_n(j));
        let qkj = q_polynomial(k, j).expect("1 <= j <= k");
        let weighted = &qkj * &omt.pow(j);
        rhs = &rhs + &(&weighted * &hj);
    }
    IdentityReport::new("lk-expansion", k, 0, &h.to_string(), &lhs - &rhs)
}

/// -t^{2k} d/dt D^{2k} G_k written as the explicit triple sum over
/// derivatives of g at 1-t.
pub fn verify_g_triple_sum(g: &LaurentPoly, k: u32) -> IdentityReport {
    let ki = i64::from(k);
    let omt = one_minus_t();
    let lhs = -&ddt_d2k(&build_g(g, k), k).shift_exp(2 * ki);

    let mut sum = LaurentPoly::zero();
    for m in 0..=k {
        let gm = at_one_minus_t(&g.differentiate_n(m));
        let mi = i64::from(m);
        for n in m..=k {
            let ni = i64::from(n);
            for l in n..=k {
                let li = i64::from(l);
                let c = pow2(li + mi - ni)
                    * BigRational::from(factorial(2 * k - l))
                    / (BigRational::from(factorial(k - l)) * BigRational::from(factorial(m)))
                    * BigRational::from(binomial_extended(li + 1, ni + 1))
                    * BigRational::from(binomial_extended(li + ni - mi, ni - mi));
                let t_pow = 2 * ki - li - (ni - mi);
                let shell = &LaurentPoly::monomial(t_pow, c) * &omt.pow(n + 1);
                sum = &sum + &(&shell * &gm);
            }
        }
    }
    let c4 = neg_one_pow(ki + 1) * BigRational::from(factorial(k)) * pow2(2 * ki);
    IdentityReport::new("g-triple-sum", k, 0, &g.to_string(), &lhs - &sum.scale(&c4))
}

/// The bridge and reflection relations rerun at the shifted order m + k:
/// this is the radial machinery applied to the harmonic factor, so both
/// subchecks must hold verbatim with k replaced by m + k.
pub fn verify_shifted_order(g: &LaurentPoly, m: u32, k: u32) -> IdentityReport {
    let order = m + k;
    let bridge = verify_lk_bridge(g, order);
    let reflection = verify_reflection_relations(g, order);
    let discrepancy = if !bridge.discrepancy.is_zero() {
        bridge.discrepancy
    } else {
        reflection.discrepancy
    };
    IdentityReport::new("shifted-order", k, m, &g.to_string(), discrepancy)
}
