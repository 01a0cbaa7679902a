//! Exact Taylor series at 0 of the elementary functions used by the
//! expression language.

use num_bigint::BigInt;
use num_traits::One;

use crate::rational::Rational;
use crate::series::PowerSeries;

fn build(precision: usize, coeff: impl Fn(usize) -> Rational) -> PowerSeries {
    PowerSeries::from_coeffs((0..=precision).map(coeff).collect()).expect("precision + 1 coefficients")
}

/// `1/n!` for `n = 0..=max`.
fn inverse_factorials(max: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(max + 1);
    let mut fact = BigInt::one();
    out.push(Rational::one());
    for n in 1..=max {
        fact *= n;
        out.push(Rational::new(1, fact.clone()));
    }
    out
}

fn alternating(k: usize, c: Rational) -> Rational {
    if k.is_multiple_of(2) {
        c
    } else {
        -c
    }
}

pub fn series_sin(precision: usize) -> PowerSeries {
    let inv_fact = inverse_factorials(precision);
    build(precision, |n| {
        if n % 2 == 1 {
            alternating(n / 2, inv_fact[n].clone())
        } else {
            Rational::zero()
        }
    })
}

pub fn series_cos(precision: usize) -> PowerSeries {
    let inv_fact = inverse_factorials(precision);
    build(precision, |n| {
        if n % 2 == 0 {
            alternating(n / 2, inv_fact[n].clone())
        } else {
            Rational::zero()
        }
    })
}

pub fn series_exp(precision: usize) -> PowerSeries {
    PowerSeries::from_coeffs(inverse_factorials(precision)).expect("nonempty")
}

/// `log(1 + x)`.
pub fn series_log1p(precision: usize) -> PowerSeries {
    build(precision, |n| {
        if n == 0 {
            Rational::zero()
        } else {
            alternating(n - 1, Rational::new(1, n as u64))
        }
    })
}

pub fn series_arctan(precision: usize) -> PowerSeries {
    build(precision, |n| {
        if n % 2 == 1 {
            alternating(n / 2, Rational::new(1, n as u64))
        } else {
            Rational::zero()
        }
    })
}

/// `sin(x) * sec(x)`.
pub fn series_tan(precision: usize) -> PowerSeries {
    let sec = series_cos(precision).reciprocal().expect("cos has constant term 1");
    series_sin(precision).mul(&sec)
}

/// Binomial closed form: `[x^(2k+1)] = C(2k, k) / (4^k (2k+1))`.
pub fn series_arcsin(precision: usize) -> PowerSeries {
    let mut coeffs = vec![Rational::zero(); precision + 1];
    // central binomial C(2k, k), updated as C(2k+2, k+1) = C(2k, k) (2k+1)(2k+2) / (k+1)^2
    let mut central = BigInt::one();
    let mut four_pow = BigInt::one();
    let mut k: usize = 0;
    while 2 * k < precision {
        let n = 2 * k + 1;
        coeffs[n] = Rational::new(central.clone(), &four_pow * BigInt::from(n));
        central = central * BigInt::from((2 * k + 1) * (2 * k + 2)) / BigInt::from((k + 1) * (k + 1));
        four_pow *= 4;
        k += 1;
    }
    PowerSeries::from_coeffs(coeffs).expect("nonempty")
}
