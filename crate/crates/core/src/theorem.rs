//! Order and leading coefficient of a series, and the checker for the
//! inverse-difference identity: for distinct regular `f`, `g` with unit
//! slope,
//!
//! ```text
//! ord(f - g) = ord(g^<-1> - f^<-1>)   and   m(f - g) = m(g^<-1> - f^<-1>)
//! ```
//!
//! where `m` is the leading coefficient.
//!
//! [`random_regular`] draws test series from a ChaCha8 stream seeded with a
//! `u64`, so a seed fully determines the series on every platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Result, SeriesError};
use crate::inversion::lagrange_inverse;
use crate::rational::Rational;
use crate::series::PowerSeries;

/// `(ord f, m(f))` of a series that is nonzero at its precision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrdLead {
    pub order: usize,
    pub leading: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem2Report {
    /// Order of `f - g`.
    pub k_direct: usize,
    pub m_direct: Rational,
    /// Order of `g^<-1> - f^<-1>`.
    pub k_inverse: usize,
    pub m_inverse: Rational,
    pub holds: bool,
}

pub fn ord_lead(f: &PowerSeries) -> Result<OrdLead> {
    f.coeffs()
        .iter()
        .enumerate()
        .find(|(_, c)| !c.is_zero())
        .map(|(order, c)| OrdLead {
            order,
            leading: c.clone(),
        })
        .ok_or(SeriesError::ZeroAtPrecision {
            precision: f.precision(),
        })
}

/// Compares the order and leading coefficient of `f - g` against those of
/// `g^<-1> - f^<-1>`, each computed from scratch.
///
/// `f == g` through the common precision is reported as
/// [`SeriesError::ZeroAtPrecision`]: truncation cannot tell whether the
/// underlying series differ.
pub fn check_theorem2(f: &PowerSeries, g: &PowerSeries) -> Result<Theorem2Report> {
    if f.precision() != g.precision() {
        return Err(SeriesError::MalformedInput(format!(
            "precision mismatch: {} vs {}",
            f.precision(),
            g.precision()
        )));
    }
    for s in [f, g] {
        if !s.is_regular()? {
            return Err(SeriesError::NotRegular);
        }
        if !s.coefficient(1)?.is_one() {
            return Err(SeriesError::Precondition(format!(
                "[x^1] must be 1, found {}",
                s.coefficient(1)?
            )));
        }
    }

    let direct = ord_lead(&f.sub(g))?;
    let f_inv = lagrange_inverse(f)?;
    let g_inv = lagrange_inverse(g)?;
    let inverse = ord_lead(&g_inv.sub(&f_inv))?;

    let holds = direct == inverse;
    Ok(Theorem2Report {
        k_direct: direct.order,
        m_direct: direct.leading,
        k_inverse: inverse.order,
        m_inverse: inverse.leading,
        holds,
    })
}

/// Deterministic unit-slope regular series `x + a_2 x^2 + ... + a_N x^N`.
///
/// Each `a_n` is `p/q` with `p` uniform in `[-bound, bound]` and `q` uniform
/// in `[1, bound]`, drawn in order from `ChaCha8Rng::seed_from_u64(seed)`.
///
/// # Panics
///
/// Panics if `precision == 0` or `coeff_bound == 0`.
pub fn random_regular(seed: u64, precision: usize, coeff_bound: u32) -> PowerSeries {
    assert!(precision >= 1, "random_regular needs precision >= 1");
    assert!(coeff_bound >= 1, "random_regular needs coeff_bound >= 1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bound = i64::from(coeff_bound);
    let mut coeffs = vec![Rational::zero(), Rational::one()];
    for _ in 2..=precision {
        let p = rng.gen_range(-bound..=bound);
        let q = rng.gen_range(1..=bound);
        coeffs.push(Rational::new(p, q));
    }
    PowerSeries::from_coeffs(coeffs).expect("nonempty")
}

/// Outcome of a batch of seeded inverse-difference trials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HarnessSummary {
    pub trials: usize,
    pub held: usize,
    /// `(trial index, f, g)` for every trial whose report did not hold.
    pub failures: Vec<(usize, PowerSeries, PowerSeries)>,
}

impl HarnessSummary {
    pub fn all_hold(&self) -> bool {
        self.held == self.trials
    }
}

/// Draws a pair of distinct unit-slope regular series for trial `index` of
/// the stream keyed by `seed`. Pairs that coincide through `precision` are
/// redrawn.
///
/// # Panics
///
/// Panics if `precision < 2`: all unit-slope series agree through `x^1`.
pub fn random_distinct_pair(seed: u64, index: u64, precision: usize, coeff_bound: u32) -> (PowerSeries, PowerSeries) {
    assert!(precision >= 2, "distinct unit-slope pairs need precision >= 2");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    loop {
        let f = random_regular(rng.gen(), precision, coeff_bound);
        let g = random_regular(rng.gen(), precision, coeff_bound);
        if f != g {
            return (f, g);
        }
    }
}

/// Runs `trials` seeded inverse-difference checks at a fixed precision, in parallel
/// across threads. The summary does not depend on scheduling.
pub fn run_theorem2_trials(trials: usize, precision: usize, seed: u64, coeff_bound: u32) -> Result<HarnessSummary> {
    let workers = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
        .min(trials.max(1));
    let outcomes: Vec<Result<Option<(usize, PowerSeries, PowerSeries)>>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                scope.spawn(move || {
                    (w..trials)
                        .step_by(workers)
                        .map(|i| {
                            let (f, g) = random_distinct_pair(seed, i as u64, precision, coeff_bound);
                            let report = check_theorem2(&f, &g)?;
                            Ok((i, report.holds, f, g))
                        })
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        let mut all: Vec<_> = handles
            .into_iter()
            .flat_map(|h| h.join().expect("trial worker panicked"))
            .collect();
        all.sort_by_key(|r| match r {
            Ok((i, ..)) => *i,
            Err(_) => usize::MAX,
        });
        all.into_iter()
            .map(|r| r.map(|(i, holds, f, g)| (!holds).then_some((i, f, g))))
            .collect()
    });

    let mut failures = Vec::new();
    for outcome in outcomes {
        if let Some(failure) = outcome? {
            failures.push(failure);
        }
    }
    Ok(HarnessSummary {
        trials,
        held: trials - failures.len(),
        failures,
    })
}
