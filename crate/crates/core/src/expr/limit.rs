use std::fmt;

use serde::Serialize;

use super::ast::Expr;
use super::eval::{eval, ExprError, MAX_PRECISION};
use crate::rational::Rational;
use crate::theorem::{ord_lead, OrdLead};

/// Value of `lim_{x -> 0} num(x) / den(x)` read off the two series.
///
/// With `k = ord(den) - ord(num) > 0` the quotient behaves like
/// `c / x^k`: for even `k` both one-sided limits are the same signed
/// infinity, for odd `k` they have opposite signs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LimitResult {
    Finite {
        value: Rational,
    },
    SignedInfinity {
        sign: i8,
        gap: usize,
    },
    TwoSidedDivergence {
        gap: usize,
    },
    /// One of the series was still zero (or undefined) at the largest
    /// precision tried.
    UndeterminedAtPrecision {
        reached_order: usize,
    },
}

impl LimitResult {
    fn classify(num: &OrdLead, den: &OrdLead) -> Self {
        if num.order > den.order {
            LimitResult::Finite {
                value: Rational::zero(),
            }
        } else if num.order == den.order {
            LimitResult::Finite {
                value: &num.leading / &den.leading,
            }
        } else {
            let gap = den.order - num.order;
            if gap.is_multiple_of(2) {
                let sign = num.leading.signum() * den.leading.signum();
                LimitResult::SignedInfinity { sign, gap }
            } else {
                LimitResult::TwoSidedDivergence { gap }
            }
        }
    }
}

impl fmt::Display for LimitResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LimitResult::Finite { value } => write!(f, "{value}"),
            LimitResult::SignedInfinity { sign, gap } => {
                let s = if *sign > 0 { "+" } else { "-" };
                write!(f, "{s}infinity (order gap {gap})")
            }
            LimitResult::TwoSidedDivergence { gap } => {
                write!(f, "diverges with opposite signs on each side (order gap {gap})")
            }
            LimitResult::UndeterminedAtPrecision { reached_order } => {
                write!(f, "undetermined through x^{reached_order}")
            }
        }
    }
}

/// Evaluates `num` and `den` at precisions `start, 2*start, ...` (capped at
/// `max`) until both have a nonzero coefficient, then compares orders and
/// leading coefficients.
///
/// Evaluation errors that only reflect a too-small precision (a division
/// whose denominator is still zero, for instance) trigger escalation; all
/// others propagate.
pub fn limit_ratio(num: &Expr, den: &Expr, start: usize, max: usize) -> Result<LimitResult, ExprError> {
    if start == 0 || start > max || max > MAX_PRECISION {
        return Err(ExprError::PrecisionOutOfRange {
            requested: if start == 0 { start } else { max },
            max: MAX_PRECISION,
        });
    }
    let mut precision = start;
    loop {
        match resolve_at(num, den, precision) {
            Ok(Some(result)) => return Ok(result),
            Ok(None) => {}
            Err(e) if e.is_precision_limited() => {}
            Err(e) => return Err(e),
        }
        if precision == max {
            return Ok(LimitResult::UndeterminedAtPrecision { reached_order: max });
        }
        precision = (2 * precision).min(max);
    }
}

fn resolve_at(num: &Expr, den: &Expr, precision: usize) -> Result<Option<LimitResult>, ExprError> {
    let n = eval(num, precision)?;
    let d = eval(den, precision)?;
    Ok(match (ord_lead(&n), ord_lead(&d)) {
        (Ok(a), Ok(b)) => Some(LimitResult::classify(&a, &b)),
        _ => None,
    })
}
