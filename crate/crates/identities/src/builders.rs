use coefficients::lk_weight;
use exact_core::{integrate_in_u, q_power, rat, BivariatePoly, LaurentPoly, UBound};

fn embed_in_u(g: &LaurentPoly) -> BivariatePoly {
    assert!(
        g.min_exp().map_or(true, |e| e >= 0),
        "integral builders need a true polynomial"
    );
    let mut out = BivariatePoly::zero();
    for (e, c) in g.iter() {
        out = &out + &BivariatePoly::monomial(0, e, c.clone());
    }
    out
}

/// H^L_k(t) = int_0^{1-t} u g(u) Q^k(t,u) du.
pub fn build_hl(g: &LaurentPoly, k: u32) -> LaurentPoly {
    let integrand = &embed_in_u(g) * &q_power(k);
    integrate_in_u(&integrand, 1, UBound::Zero, UBound::OneMinusT)
}

/// H^R_k(t) = int_{1+t}^{2} u g(u) Q^k(t,u) du.
pub fn build_hr(g: &LaurentPoly, k: u32) -> LaurentPoly {
    let integrand = &embed_in_u(g) * &q_power(k);
    integrate_in_u(&integrand, 1, UBound::OnePlusT, UBound::Two)
}

/// G_k(t) = int_{1-t}^{1} u g(u) Q^k(t,u) du.
pub fn build_g(g: &LaurentPoly, k: u32) -> LaurentPoly {
    let integrand = &embed_in_u(g) * &q_power(k);
    integrate_in_u(&integrand, 1, UBound::OneMinusT, UBound::One)
}

/// d/dt D^{2k} p with D = (1/t) d/dt.
pub fn ddt_d2k(p: &LaurentPoly, k: u32) -> LaurentPoly {
    p.apply_d_n(2 * k).differentiate()
}

/// L_k h = sum_{l=0}^{k} (k+l)!/((k-l)! l! 2^l) (1-t)^{k-l} D^{k-l} h.
pub fn apply_lk(h: &LaurentPoly, k: u32) -> LaurentPoly {
    let one_minus_t = LaurentPoly::from_terms([(0, rat(1)), (1, rat(-1))]);
    let mut out = LaurentPoly::zero();
    for l in 0..=k {
        let w = lk_weight(k, l).expect("l <= k");
        let term = &one_minus_t.pow(k - l) * &h.apply_d_n(k - l);
        out = &out + &term.scale(&w);
    }
    out
}
