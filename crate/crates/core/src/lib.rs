//! Exact formal power series over the rationals: ring operations,
//! compositional inversion by Lagrange's formula (with a Newton-iteration
//! cross-check), the order/leading-coefficient identity for inverse
//! differences, and an expression language for evaluating ratio limits at 0.
//!
//! ```
//! use fps_core::{elementary, inversion, PowerSeries};
//!
//! let sin = elementary::series_sin(7);
//! let asin = inversion::lagrange_inverse(&sin).unwrap();
//! assert_eq!(asin, elementary::series_arcsin(7));
//! assert_eq!(sin.compose(&asin).unwrap(), PowerSeries::x(7));
//! ```

pub mod cli;
pub mod elementary;
pub mod error;
pub mod expr;
pub mod inversion;
pub mod rational;
pub mod series;
pub mod theorem;

pub use error::SeriesError;
pub use rational::Rational;
pub use series::PowerSeries;
