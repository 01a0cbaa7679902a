//! Expression language over the series engine: parsing, evaluation to a
//! truncated series, and ratio limits at 0.

mod ast;
mod eval;
mod limit;
mod parser;

pub use ast::{Expr, FuncName};
pub use eval::{eval, eval_str, generator, ExprError, MAX_PRECISION};
pub use limit::{limit_ratio, LimitResult};
pub use parser::{parse, ParseError, ParseErrorKind};
