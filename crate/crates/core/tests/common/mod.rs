//! Brute-force reference computations on plain coefficient vectors. Nothing
//! here calls into the series engine, so agreement is an independent check.

#![allow(dead_code)]

use fps_core::{PowerSeries, Rational};
use proptest::prelude::*;

pub fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

pub fn s(text: &str) -> PowerSeries {
    text.parse().unwrap()
}

pub fn vec_of(p: &PowerSeries) -> Vec<Rational> {
    p.coeffs().to_vec()
}

pub fn series_of(v: Vec<Rational>) -> PowerSeries {
    PowerSeries::from_coeffs(v).unwrap()
}

/// Schoolbook product through x^n.
pub fn naive_mul(a: &[Rational], b: &[Rational], n: usize) -> Vec<Rational> {
    (0..=n)
        .map(|k| {
            (0..=k)
                .filter(|&i| i < a.len() && k - i < b.len())
                .map(|i| &a[i] * &b[k - i])
                .sum()
        })
        .collect()
}

/// f(g) as sum of a_k g^k with explicit powers of g.
pub fn naive_compose(f: &[Rational], g: &[Rational], n: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); n + 1];
    let mut g_pow = vec![Rational::zero(); n + 1];
    g_pow[0] = Rational::one();
    for a in f.iter().take(n + 1) {
        for (o, p) in out.iter_mut().zip(&g_pow) {
            *o += &(a * p);
        }
        g_pow = naive_mul(&g_pow, g, n);
    }
    out
}

/// Inverse of a regular f by undetermined coefficients: g_n is fixed by
/// requiring [x^n] f(g) = 0 for n >= 2.
pub fn naive_inverse(f: &[Rational]) -> Vec<Rational> {
    let n = f.len() - 1;
    let a1 = f[1].clone();
    let mut g = vec![Rational::zero(); n + 1];
    g[1] = a1.recip().unwrap();
    for k in 2..=n {
        let c = naive_compose(f, &g, k)[k].clone();
        g[k] = -(c / &a1);
    }
    g
}

/// Catalan numbers C_0..=C_{n} from C_{m+1} = sum C_i C_{m-i}.
pub fn catalan(n: usize) -> Vec<Rational> {
    let mut c = vec![Rational::one()];
    for m in 0..n {
        let next = (0..=m).map(|i| &c[i] * &c[m - i]).sum();
        c.push(next);
    }
    c
}

/// tan through x^n from tan' = 1 + tan^2, integrating term by term.
pub fn tan_by_ode(n: usize) -> Vec<Rational> {
    let mut t = vec![Rational::zero(); n + 1];
    for k in 0..n {
        let sq = naive_mul(&t, &t, k);
        let rhs = if k == 0 {
            Rational::one() + &sq[0]
        } else {
            sq[k].clone()
        };
        t[k + 1] = rhs / &Rational::from(k as i64 + 1);
    }
    t
}

pub fn factorial(n: u64) -> Rational {
    (1..=n).map(Rational::from).product()
}

pub fn binomial(n: u64, k: u64) -> Rational {
    factorial(n) / (factorial(k) * factorial(n - k))
}

// ---- proptest strategies ----

pub fn arb_rational(bound: i64) -> impl Strategy<Value = Rational> {
    (-bound..=bound, 1..=bound).prop_map(|(p, q)| Rational::new(p, q))
}

pub fn arb_nonzero_rational(bound: i64) -> impl Strategy<Value = Rational> {
    (1..=bound, 1..=bound, any::<bool>()).prop_map(|(p, q, neg)| Rational::new(if neg { -p } else { p }, q))
}

pub fn arb_series(precision: usize) -> impl Strategy<Value = PowerSeries> {
    proptest::collection::vec(arb_rational(9), precision + 1).prop_map(series_of)
}

pub fn arb_series_no_constant(precision: usize) -> impl Strategy<Value = PowerSeries> {
    proptest::collection::vec(arb_rational(9), precision).prop_map(|mut v| {
        v.insert(0, Rational::zero());
        series_of(v)
    })
}

pub fn arb_unit(precision: usize) -> impl Strategy<Value = PowerSeries> {
    (
        arb_nonzero_rational(9),
        proptest::collection::vec(arb_rational(9), precision),
    )
        .prop_map(|(c0, mut v)| {
            v.insert(0, c0);
            series_of(v)
        })
}

/// Regular series with arbitrary nonzero slope.
pub fn arb_regular(precision: usize) -> impl Strategy<Value = PowerSeries> {
    (
        arb_nonzero_rational(9),
        proptest::collection::vec(arb_rational(9), precision - 1),
    )
        .prop_map(|(a1, rest)| {
            let mut v = vec![Rational::zero(), a1];
            v.extend(rest);
            series_of(v)
        })
}
