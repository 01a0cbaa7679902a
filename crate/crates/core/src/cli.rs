//! Command-line front end.
//!
//! Exit status: 0 on success, 1 for evaluation errors or a failed check,
//! 2 for usage errors.

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Parser, Subcommand};
use serde::Serialize;
use thiserror::Error;

use crate::expr::{self, limit_ratio, ExprError, LimitResult, MAX_PRECISION};
use crate::inversion::lagrange_inverse;
use crate::rational::Rational;
use crate::series::PowerSeries;
use crate::theorem::{ord_lead, run_theorem2_trials};

pub const DEFAULT_ORDER: usize = 16;
pub const ARNOLD_NUMERATOR: &str = "sin(tan(x)) - tan(sin(x))";
pub const ARNOLD_DENOMINATOR: &str = "asin(atan(x)) - atan(asin(x))";

#[derive(Debug, Parser)]
#[command(name = "fps", version, about = "Exact formal power series and limits at 0")]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the series of EXPR at 0.
    Series {
        expr: String,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
    },
    /// Evaluate lim_{x->0} NUM/DEN.
    Limit {
        num: String,
        den: String,
        /// Starting precision, doubled until the limit resolves [default: 16,
        /// or --max-order if smaller].
        #[arg(long)]
        order: Option<usize>,
        #[arg(long, default_value_t = MAX_PRECISION)]
        max_order: usize,
    },
    /// Print the compositional inverse of EXPR.
    Inverse {
        expr: String,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
    },
    /// Check ord/leading-coefficient agreement of f - g and g^-1 - f^-1 on
    /// random unit-slope pairs.
    #[command(name = "check-theorem2")]
    CheckTheorem2 {
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        order: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 9)]
        coeff_bound: u32,
    },
    /// Reproduce (sin tan x - tan sin x) / (asin atan x - atan asin x) -> 1.
    Arnold {
        #[arg(long, default_value_t = 8)]
        order: usize,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Eval(#[from] ExprError),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl From<expr::ParseError> for CliError {
    fn from(e: expr::ParseError) -> Self {
        CliError::Eval(e.into())
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    2
                }
            };
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn check_order(order: usize) -> Result<(), CliError> {
    if order == 0 || order > MAX_PRECISION {
        return Err(CliError::Usage(format!(
            "--order must be in 1..={MAX_PRECISION}, got {order}"
        )));
    }
    Ok(())
}

fn print_json(out: &mut dyn Write, value: &impl Serialize) -> Result<(), CliError> {
    let text = serde_json::to_string(value).map_err(io::Error::from)?;
    writeln!(out, "{text}")?;
    Ok(())
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    match &cli.command {
        Command::Series { expr, order } => {
            check_order(*order)?;
            let s = expr::eval_str(expr, *order)?;
            print_series(out, cli.json, &s)?;
            Ok(0)
        }
        Command::Inverse { expr, order } => {
            check_order(*order)?;
            let s = expr::eval_str(expr, *order)?;
            let inv = lagrange_inverse(&s).map_err(|e| match e {
                crate::SeriesError::NotRegular => ExprError::InverseOfNonRegular,
                other => other.into(),
            })?;
            print_series(out, cli.json, &inv)?;
            Ok(0)
        }
        Command::Limit {
            num,
            den,
            order,
            max_order,
        } => {
            let order = &order.unwrap_or(DEFAULT_ORDER.min(*max_order));
            check_order(*order)?;
            check_order(*max_order)?;
            if order > max_order {
                return Err(CliError::Usage(format!(
                    "--order {order} exceeds --max-order {max_order}"
                )));
            }
            let result = limit_ratio(&expr::parse(num)?, &expr::parse(den)?, *order, *max_order)?;
            if cli.json {
                print_json(out, &result)?;
            } else {
                writeln!(out, "{result}")?;
            }
            Ok(0)
        }
        Command::CheckTheorem2 {
            trials,
            order,
            seed,
            coeff_bound,
        } => {
            check_order(*order)?;
            if *order < 2 {
                return Err(CliError::Usage(
                    "--order must be at least 2 to draw distinct unit-slope series".into(),
                ));
            }
            if *coeff_bound == 0 {
                return Err(CliError::Usage("--coeff-bound must be at least 1".into()));
            }
            let summary = run_theorem2_trials(*trials, *order, *seed, *coeff_bound).map_err(ExprError::from)?;
            if cli.json {
                #[derive(Serialize)]
                struct Failure<'a> {
                    trial: usize,
                    f: &'a PowerSeries,
                    g: &'a PowerSeries,
                }
                #[derive(Serialize)]
                struct Summary<'a> {
                    trials: usize,
                    held: usize,
                    failures: Vec<Failure<'a>>,
                }
                let failures = summary
                    .failures
                    .iter()
                    .map(|(trial, f, g)| Failure { trial: *trial, f, g })
                    .collect();
                print_json(
                    out,
                    &Summary {
                        trials: summary.trials,
                        held: summary.held,
                        failures,
                    },
                )?;
            } else {
                for (i, f, g) in &summary.failures {
                    writeln!(out, "trial {i}: FAILED for f = {f}, g = {g}")?;
                }
                writeln!(out, "{}/{} hold", summary.held, summary.trials)?;
            }
            Ok(if summary.all_hold() { 0 } else { 1 })
        }
        Command::Arnold { order } => arnold(out, cli.json, *order),
    }
}

fn print_series(out: &mut dyn Write, json: bool, s: &PowerSeries) -> Result<(), CliError> {
    if json {
        print_json(out, s)
    } else {
        writeln!(out, "{s}")?;
        Ok(())
    }
}

fn arnold(out: &mut dyn Write, json: bool, order: usize) -> Result<i32, CliError> {
    check_order(order)?;
    let num = expr::parse(ARNOLD_NUMERATOR)?;
    let den = expr::parse(ARNOLD_DENOMINATOR)?;
    let num_series = expr::eval(&num, order)?;
    let den_series = expr::eval(&den, order)?;
    let limit = limit_ratio(&num, &den, order, MAX_PRECISION)?;

    let expected_lead = Rational::new(-1, 30);
    let leads_match = [&num_series, &den_series]
        .iter()
        .all(|s| ord_lead(s).is_ok_and(|ol| ol.order == 7 && ol.leading == expected_lead));
    let reproduced = leads_match && limit == LimitResult::Finite { value: Rational::one() };

    if json {
        #[derive(Serialize)]
        struct Report<'a> {
            numerator: &'a PowerSeries,
            denominator: &'a PowerSeries,
            limit: &'a LimitResult,
            reproduced: bool,
        }
        print_json(
            out,
            &Report {
                numerator: &num_series,
                denominator: &den_series,
                limit: &limit,
                reproduced,
            },
        )?;
    } else {
        for (text, s) in [(ARNOLD_NUMERATOR, &num_series), (ARNOLD_DENOMINATOR, &den_series)] {
            writeln!(out, "{text} = {s}")?;
            match ord_lead(s) {
                Ok(ol) => writeln!(out, "  leading term: {} x^{}", ol.leading, ol.order)?,
                Err(_) => writeln!(out, "  leading term: none through x^{}", s.precision())?,
            }
        }
        writeln!(out, "limit = {limit}")?;
    }
    Ok(if reproduced { 0 } else { 1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("fps").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn series_and_inverse() {
        assert_eq!(
            run_args(&["series", "sin(x)", "--order", "5"]).1,
            "[0, 1, 0, -1/6, 0, 1/120]\n"
        );
        assert_eq!(
            run_args(&["inverse", "x - x^2", "--order", "5"]).1,
            "[0, 1, 1, 2, 5, 14]\n"
        );
        let (code, _, err) = run_args(&["inverse", "cos(x)", "--order", "5"]);
        assert_eq!(code, 1);
        assert!(err.contains("regular"));
    }

    #[test]
    fn limit_text() {
        assert_eq!(run_args(&["limit", "sin(x)", "x"]), (0, "1\n".into(), String::new()));
        assert_eq!(
            run_args(&["limit", "1", "x"]).1,
            "diverges with opposite signs on each side (order gap 1)\n"
        );
    }

    #[test]
    fn arnold_default() {
        let (code, out, _) = run_args(&["arnold"]);
        assert_eq!(code, 0);
        assert_eq!(out.matches("-1/30 x^7").count(), 2);
        assert!(out.ends_with("limit = 1\n"));
        // too short to see the x^7 terms
        assert_eq!(run_args(&["arnold", "--order", "6"]).0, 1);
    }

    #[test]
    fn usage_and_eval_errors() {
        assert_eq!(run_args(&[]).0, 2);
        assert_eq!(run_args(&["series"]).0, 2);
        assert_eq!(run_args(&["series", "x", "--order", "0"]).0, 2);
        assert_eq!(run_args(&["series", "x", "--order", "65"]).0, 2);
        assert_eq!(run_args(&["series", "x", "--order", "abc"]).0, 2);
        assert_eq!(run_args(&["limit", "x", "x", "--order", "9", "--max-order", "8"]).0, 2);
        assert_eq!(
            run_args(&["check-theorem2", "--trials", "3", "--order", "1", "--seed", "1"]).0,
            2
        );
        let (code, _, err) = run_args(&["series", "sin[x]"]);
        assert_eq!(code, 1);
        assert!(err.contains("offset 3"), "{err}");
        assert_eq!(run_args(&["--help"]).0, 0);
    }

    #[test]
    fn theorem_harness() {
        let (code, out, _) = run_args(&["check-theorem2", "--trials", "25", "--order", "8", "--seed", "3"]);
        assert_eq!((code, out.as_str()), (0, "25/25 hold\n"));
    }
}
