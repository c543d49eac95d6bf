use exact_core::{
    binomial_extended, integrate_in_u, rat, ratio, BivariatePoly, LaurentPoly, UBound,
};
use proptest::prelude::*;

fn laurent_strategy(min_exp: i64, max_exp: i64) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((min_exp..=max_exp, -9i64..=9, 1i64..=3), 0..8)
        .prop_map(|terms| {
            LaurentPoly::from_terms(terms.into_iter().map(|(e, n, d)| (e, ratio(n, d))))
        })
}

fn bivariate_strategy() -> impl Strategy<Value = BivariatePoly> {
    prop::collection::vec((0i64..=4, 0i64..=4, -9i64..=9, 1i64..=3), 0..8).prop_map(|terms| {
        terms.into_iter().fold(BivariatePoly::zero(), |acc, (et, eu, n, d)| {
            &acc + &BivariatePoly::monomial(et, eu, ratio(n, d))
        })
    })
}

proptest! {
    #[test]
    fn pascal_rule_all_integer_arguments(a in -30i64..=30, b in -30i64..=30) {
        let lhs = binomial_extended(a, b);
        let rhs = binomial_extended(a - 1, b) + binomial_extended(a - 1, b - 1);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn compose_affine_identity_is_identity(p in laurent_strategy(0, 8)) {
        let composed = p.compose_affine(1, &rat(0)).unwrap();
        prop_assert_eq!(composed, p);
    }

    #[test]
    fn compose_one_minus_t_is_involutive(p in laurent_strategy(0, 8)) {
        let once = p.compose_affine(-1, &rat(1)).unwrap();
        let twice = once.compose_affine(-1, &rat(1)).unwrap();
        prop_assert_eq!(twice, p);
    }

    #[test]
    fn integration_adds_over_adjacent_intervals(p in bivariate_strategy(), w in 0u32..=3) {
        let left = integrate_in_u(&p, w, UBound::Zero, UBound::OneMinusT);
        let right = integrate_in_u(&p, w, UBound::OneMinusT, UBound::One);
        let whole = integrate_in_u(&p, w, UBound::Zero, UBound::One);
        prop_assert_eq!(&left + &right, whole);
    }

    #[test]
    fn integration_upper_interval_also_adds(p in bivariate_strategy(), w in 0u32..=3) {
        let a = integrate_in_u(&p, w, UBound::One, UBound::OnePlusT);
        let b = integrate_in_u(&p, w, UBound::OnePlusT, UBound::Two);
        let whole = integrate_in_u(&p, w, UBound::One, UBound::Two);
        prop_assert_eq!(&a + &b, whole);
    }

    #[test]
    fn product_evaluation_is_multiplicative(
        p in laurent_strategy(-3, 5),
        q in laurent_strategy(-3, 5),
        x_num in 1i64..=7,
        x_den in 1i64..=4,
    ) {
        let x = ratio(x_num, x_den);
        let prod = (&p * &q).eval(&x).unwrap();
        let sep = p.eval(&x).unwrap() * q.eval(&x).unwrap();
        prop_assert_eq!(prod, sep);
    }
}

#[test]
fn integration_weight_shifts_consistently() {
    // u * (u^2 p) integrated == u^3 p integrated with weight 0 handled as weight 3
    let p = BivariatePoly::monomial(1, 0, rat(2));
    let shifted = BivariatePoly::monomial(1, 2, rat(2));
    let a = integrate_in_u(&shifted, 1, UBound::Zero, UBound::One);
    let b = integrate_in_u(&p, 3, UBound::Zero, UBound::One);
    assert_eq!(a, b);
}

#[test]
fn clearing_restores_exactly() {
    let p = LaurentPoly::from_terms([(-3, ratio(5, 2)), (0, rat(1)), (2, rat(-4))]);
    let (cleared, a) = p.cleared();
    assert_eq!(a, 3);
    assert_eq!(cleared.min_exp(), Some(0));
    assert_eq!(cleared.shift_exp(-a), p);
    let (already, zero) = plain_poly().cleared();
    assert_eq!(zero, 0);
    assert_eq!(already, plain_poly());
}

fn plain_poly() -> LaurentPoly {
    LaurentPoly::from_terms([(0, rat(1)), (4, rat(2))])
}
