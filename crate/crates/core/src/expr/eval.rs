use thiserror::Error;

use super::ast::{Expr, FuncName};
use super::parser::{parse, ParseError};
use crate::elementary;
use crate::error::SeriesError;
use crate::inversion::lagrange_inverse;
use crate::series::PowerSeries;
use crate::theorem::ord_lead;

/// Largest precision accepted by [`eval`]. Coefficient sizes grow quickly
/// with nested compositions.
pub const MAX_PRECISION: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("precision {requested} is outside 1..={max}")]
    PrecisionOutOfRange { requested: usize, max: usize },
    #[error("cannot apply {func} to a series with constant term {constant}")]
    ComposeNonzeroConstant { func: FuncName, constant: String },
    #[error("inverse() needs a regular series ([x^0] = 0, [x^1] != 0)")]
    InverseOfNonRegular,
    #[error("division does not give a power series: numerator has order {numerator_order} < {denominator_order}")]
    DivisionOrder {
        numerator_order: usize,
        denominator_order: usize,
    },
    #[error("denominator is zero through x^{precision}")]
    ZeroDenominator { precision: usize },
    #[error("numerator is known only through x^{precision}, too short to divide by x^{shift}")]
    InsufficientPrecision { precision: usize, shift: usize },
}

impl ExprError {
    /// Errors that may disappear when the same expression is evaluated at a
    /// higher precision.
    pub fn is_precision_limited(&self) -> bool {
        matches!(
            self,
            ExprError::ZeroDenominator { .. }
                | ExprError::InsufficientPrecision { .. }
                | ExprError::Series(SeriesError::PrecisionExceeded { .. })
        )
    }
}

/// Taylor series at 0 of `func`.
pub fn generator(func: FuncName, precision: usize) -> PowerSeries {
    match func {
        FuncName::Sin => elementary::series_sin(precision),
        FuncName::Cos => elementary::series_cos(precision),
        FuncName::Tan => elementary::series_tan(precision),
        FuncName::Asin => elementary::series_arcsin(precision),
        FuncName::Atan => elementary::series_arctan(precision),
        FuncName::Exp => elementary::series_exp(precision),
        FuncName::Log1p => elementary::series_log1p(precision),
    }
}

/// Evaluates `e` to a series known through `x^precision`.
///
/// Division `a/b` shifts both operands down by `s = ord(b)` before taking
/// the reciprocal, so the result is known only through `x^(precision - s)`.
/// Operations downstream of a division inherit that lower precision.
pub fn eval(e: &Expr, precision: usize) -> Result<PowerSeries, ExprError> {
    if precision == 0 || precision > MAX_PRECISION {
        return Err(ExprError::PrecisionOutOfRange {
            requested: precision,
            max: MAX_PRECISION,
        });
    }
    eval_at(e, precision)
}

/// Parses and evaluates.
pub fn eval_str(input: &str, precision: usize) -> Result<PowerSeries, ExprError> {
    eval(&parse(input)?, precision)
}

fn eval_at(e: &Expr, n: usize) -> Result<PowerSeries, ExprError> {
    Ok(match e {
        Expr::Const(c) => PowerSeries::constant(c.clone(), n),
        Expr::Var => PowerSeries::x(n),
        Expr::Neg(a) => eval_at(a, n)?.neg(),
        Expr::Add(a, b) => eval_at(a, n)?.add(&eval_at(b, n)?),
        Expr::Sub(a, b) => eval_at(a, n)?.sub(&eval_at(b, n)?),
        Expr::Mul(a, b) => eval_at(a, n)?.mul(&eval_at(b, n)?),
        Expr::Pow(a, k) => eval_at(a, n)?.pow(u64::from(*k)),
        Expr::Div(a, b) => divide(&eval_at(a, n)?, &eval_at(b, n)?)?,
        Expr::Apply(func, a) => {
            let inner = eval_at(a, n)?;
            generator(*func, inner.precision())
                .compose(&inner)
                .map_err(|err| match err {
                    SeriesError::NotComposable { constant } => {
                        ExprError::ComposeNonzeroConstant { func: *func, constant }
                    }
                    other => other.into(),
                })?
        }
        Expr::Inverse(a) => lagrange_inverse(&eval_at(a, n)?).map_err(|err| match err {
            SeriesError::NotRegular => ExprError::InverseOfNonRegular,
            other => other.into(),
        })?,
    })
}

fn divide(num: &PowerSeries, den: &PowerSeries) -> Result<PowerSeries, ExprError> {
    let shift = ord_lead(den)
        .map_err(|_| ExprError::ZeroDenominator {
            precision: den.precision(),
        })?
        .order;
    if shift > num.precision() {
        return Err(ExprError::InsufficientPrecision {
            precision: num.precision(),
            shift,
        });
    }
    let num = num.shift_down(shift).map_err(|_| ExprError::DivisionOrder {
        numerator_order: ord_lead(num).map(|o| o.order).unwrap_or(0),
        denominator_order: shift,
    })?;
    let den = den.shift_down(shift)?;
    Ok(num.mul(&den.reciprocal()?))
}
