//! Compositional inverse (reversion) of regular series.
//!
//! [`lagrange_inverse`] reads each coefficient of the inverse off a power of
//! `x/f(x)`:
//!
//! ```text
//! [x^n] f^<-1> = (1/n) * [x^(n-1)] (x / f(x))^n,   n >= 1
//! ```
//!
//! [`newton_inverse`] solves `f(g) = x` by precision-doubling Newton steps
//! and shares nothing with the Lagrange path beyond the ring operations, so
//! the two can check each other.

use crate::error::{Result, SeriesError};
use crate::rational::Rational;
use crate::series::PowerSeries;

fn require_regular(f: &PowerSeries) -> Result<()> {
    if f.is_regular()? {
        Ok(())
    } else {
        Err(SeriesError::NotRegular)
    }
}

/// Inverse of a regular series via the Lagrange inversion formula.
///
/// The result has the same precision `N` as `f` and every coefficient
/// `1..=N` is computed; `[x^0]` of the inverse is zero by regularity.
pub fn lagrange_inverse(f: &PowerSeries) -> Result<PowerSeries> {
    require_regular(f)?;
    let n_max = f.precision();
    // x/f(x) = 1 / (f/x); f/x has constant term [x^1]f != 0.
    let h = f.shift_down(1)?.reciprocal()?;
    let mut coeffs = Vec::with_capacity(n_max + 1);
    coeffs.push(Rational::zero());
    let mut h_pow = h.clone();
    for n in 1..=n_max {
        if n > 1 {
            h_pow = h_pow.mul(&h);
        }
        let c = h_pow.coefficient(n - 1)? / &Rational::from(n as u64);
        coeffs.push(c);
    }
    PowerSeries::from_coeffs(coeffs)
}

/// Inverse of a regular series via Newton iteration
/// `g <- g - (f(g) - x) / f'(g)`, doubling the precision each step.
pub fn newton_inverse(f: &PowerSeries) -> Result<PowerSeries> {
    require_regular(f)?;
    let target = f.precision();
    let slope_inv = f.coefficient(1)?.recip().ok_or(SeriesError::NotRegular)?;
    let mut g = PowerSeries::from_coeffs(vec![Rational::zero(), slope_inv])?;
    let mut prec = 1;
    while prec < target {
        prec = (2 * prec).min(target);
        // the current iterate, read as a series known through x^prec
        let mut coeffs = g.into_coeffs();
        coeffs.resize(prec + 1, Rational::zero());
        let g_ext = PowerSeries::from_coeffs(coeffs)?;

        // residual f(g) - x vanishes through x^1, so dividing it by x and
        // multiplying by 1/f'(g) known through x^(prec-1) is enough.
        let residual = f.truncate(prec)?.compose(&g_ext)?.sub(&PowerSeries::x(prec));
        let fprime_at_g = f.truncate(prec)?.derivative()?.compose(&g_ext.truncate(prec - 1)?)?;
        let step = residual.shift_down(1)?.mul(&fprime_at_g.reciprocal()?).shift_up(1);
        g = g_ext.sub(&step);
    }
    Ok(g)
}

/// Checks `f(g(x)) = g(f(x)) = x` through `x^N`.
///
/// Series that are not composable (nonzero constant term) are reported as
/// not inverse to each other.
pub fn verify_inverse(f: &PowerSeries, g: &PowerSeries) -> Result<bool> {
    if f.precision() != g.precision() {
        return Err(SeriesError::MalformedInput(format!(
            "precision mismatch: {} vs {}",
            f.precision(),
            g.precision()
        )));
    }
    let x = PowerSeries::x(f.precision());
    let one_way = match f.compose(g) {
        Ok(fg) => fg == x,
        Err(SeriesError::NotComposable { .. }) => return Ok(false),
        Err(e) => return Err(e),
    };
    if !one_way {
        return Ok(false);
    }
    match g.compose(f) {
        Ok(gf) => Ok(gf == x),
        Err(SeriesError::NotComposable { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}
