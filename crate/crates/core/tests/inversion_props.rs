mod common;

use common::*;
use fps_core::elementary::{
    series_arcsin, series_arctan, series_cos, series_exp, series_log1p, series_sin, series_tan,
};
use fps_core::inversion::{lagrange_inverse, newton_inverse, verify_inverse};
use fps_core::theorem::random_regular;
use fps_core::{PowerSeries, Rational};
use proptest::prelude::*;

#[test]
fn catalan_reversion_matches_recurrence() {
    let f = PowerSeries::x(12).sub(&PowerSeries::monomial(2, 12));
    let inv = lagrange_inverse(&f).unwrap();
    let c = catalan(11);
    assert_eq!(&inv.coeffs()[1..], &c[..]);
    assert_eq!(newton_inverse(&f).unwrap(), inv);
}

#[test]
fn brute_force_inverses() {
    for f in [
        s("[0, 1, 1, 0, 0, 0, 0, 0, 0]"),
        s("[0, 1, 0, 1, 0, 0, 0, 0, 0]"),
        series_sin(9),
        series_tan(9),
    ] {
        assert_eq!(vec_of(&lagrange_inverse(&f).unwrap()), naive_inverse(f.coeffs()));
    }
    assert!(!verify_inverse(&s("[0, 1, -1, 0]"), &s("[0, 1, 1, 0]")).unwrap());
}

#[test]
fn arcsin_closed_form_and_inverse_pairs() {
    for n in 1..=32 {
        let asin = series_arcsin(n);
        let atan = series_arctan(n);
        assert_eq!(lagrange_inverse(&series_sin(n)).unwrap(), asin, "sin at {n}");
        assert_eq!(lagrange_inverse(&series_tan(n)).unwrap(), atan, "tan at {n}");
        assert_eq!(lagrange_inverse(&asin).unwrap(), series_sin(n), "arcsin at {n}");
        assert_eq!(lagrange_inverse(&atan).unwrap(), series_tan(n), "arctan at {n}");
    }
    let asin = series_arcsin(15);
    for k in 0..=7u64 {
        let expected = binomial(2 * k, k) / (Rational::from(4i64.pow(k as u32)) * Rational::from(2 * k + 1));
        assert_eq!(asin.coefficient(2 * k as usize + 1).unwrap(), &expected);
    }
}

#[test]
fn elementary_odes_and_parity() {
    let n = 20;
    let sin = series_sin(n);
    assert_eq!(
        sin.derivative().unwrap().derivative().unwrap(),
        sin.neg().truncate(n - 2).unwrap()
    );
    let exp = series_exp(n);
    assert_eq!(exp.derivative().unwrap(), exp.truncate(n - 1).unwrap());
    let one_plus_x = PowerSeries::one(n - 1).add(&PowerSeries::x(n - 1));
    assert_eq!(series_log1p(n).derivative().unwrap(), one_plus_x.reciprocal().unwrap());
    let one_plus_x2 = PowerSeries::one(n - 1).add(&PowerSeries::monomial(2, n - 1));
    assert_eq!(
        series_arctan(n).derivative().unwrap(),
        one_plus_x2.reciprocal().unwrap()
    );
    let tan = series_tan(n);
    assert_eq!(vec_of(&tan), tan_by_ode(n));
    for (i, c) in series_cos(n).coeffs().iter().enumerate() {
        if i % 2 == 1 {
            assert!(c.is_zero());
        }
    }
    for f in [series_sin(n), series_tan(n), series_arcsin(n), series_arctan(n)] {
        assert!(f.coeffs().iter().step_by(2).all(Rational::is_zero));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn lagrange_equals_newton(f in arb_regular(12)) {
        let lag = lagrange_inverse(&f).unwrap();
        prop_assert_eq!(&lag, &newton_inverse(&f).unwrap());
        prop_assert!(verify_inverse(&f, &lag).unwrap());
        prop_assert!(verify_inverse(&lag, &f).unwrap());
    }

    #[test]
    fn lagrange_matches_undetermined_coefficients(f in arb_regular(7)) {
        prop_assert_eq!(vec_of(&lagrange_inverse(&f).unwrap()), naive_inverse(f.coeffs()));
    }

    #[test]
    fn inverse_is_an_involution(f in arb_regular(9)) {
        let inv = lagrange_inverse(&f).unwrap();
        prop_assert_eq!(lagrange_inverse(&inv).unwrap(), f);
    }

    #[test]
    fn coefficient_n_depends_only_on_a_up_to_n(
        f in arb_regular(10),
        n in 1usize..10,
        noise in proptest::collection::vec(arb_rational(9), 10),
    ) {
        let mut altered = f.coeffs().to_vec();
        for (m, c) in altered.iter_mut().enumerate().skip(n + 1) {
            *c = &*c + &noise[m - 1];
        }
        let g = series_of(altered);
        let (fi, gi) = (lagrange_inverse(&f).unwrap(), lagrange_inverse(&g).unwrap());
        prop_assert_eq!(&fi.coeffs()[..=n], &gi.coeffs()[..=n]);
    }

    #[test]
    fn perturbing_a_k_shifts_inverse_by_minus_delta(
        seed in any::<u64>(),
        k in 2usize..=12,
        delta in arb_nonzero_rational(9),
    ) {
        let f = random_regular(seed, 12, 9);
        let mut coeffs = f.coeffs().to_vec();
        coeffs[k] = &coeffs[k] + &delta;
        let g = series_of(coeffs);
        let (fi, gi) = (lagrange_inverse(&f).unwrap(), lagrange_inverse(&g).unwrap());
        prop_assert_eq!(&fi.coeffs()[..k], &gi.coeffs()[..k]);
        prop_assert_eq!(gi.coefficient(k).unwrap() - fi.coefficient(k).unwrap(), -delta);
    }
}
