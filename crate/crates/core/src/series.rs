//! Truncated formal power series over the rationals.
//!
//! A [`PowerSeries`] stores the exact coefficients of `x^0 ..= x^N`, where
//! `N` is its precision; everything from `x^(N+1)` on is unknown. Binary
//! operations return a result at the smaller of the two operand precisions,
//! and reading a coefficient beyond the precision is an error rather than
//! an implicit zero.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::{Result, SeriesError};
use crate::rational::Rational;

/// Coefficients `[x^0]f ..= [x^N]f` of a formal power series, known exactly
/// through `x^N`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PowerSeries {
    // Invariant: nonempty; len == precision + 1.
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    /// Series whose precision is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(SeriesError::MalformedInput(
                "a series needs at least one coefficient".into(),
            ));
        }
        Ok(PowerSeries { coeffs })
    }

    /// Convenience constructor for integer coefficients.
    pub fn from_integers(coeffs: &[i64]) -> Result<Self> {
        Self::from_coeffs(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn zero(precision: usize) -> Self {
        PowerSeries {
            coeffs: vec![Rational::zero(); precision + 1],
        }
    }

    pub fn constant(c: Rational, precision: usize) -> Self {
        let mut s = Self::zero(precision);
        s.coeffs[0] = c;
        s
    }

    pub fn one(precision: usize) -> Self {
        Self::constant(Rational::one(), precision)
    }

    /// `x^k` known through `x^precision`. Collapses to zero when `k > precision`.
    pub fn monomial(k: usize, precision: usize) -> Self {
        let mut s = Self::zero(precision);
        if k <= precision {
            s.coeffs[k] = Rational::one();
        }
        s
    }

    /// The identity series `x`.
    pub fn x(precision: usize) -> Self {
        Self::monomial(1, precision)
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// `[x^n]f`.
    pub fn coefficient(&self, n: usize) -> Result<&Rational> {
        self.coeffs.get(n).ok_or(SeriesError::PrecisionExceeded {
            index: n,
            precision: self.precision(),
        })
    }

    /// True when every known coefficient is zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// Drops the coefficients above `x^precision`.
    pub fn truncate(&self, precision: usize) -> Result<Self> {
        if precision > self.precision() {
            return Err(SeriesError::PrecisionExceeded {
                index: precision,
                precision: self.precision(),
            });
        }
        Ok(PowerSeries {
            coeffs: self.coeffs[..=precision].to_vec(),
        })
    }

    /// `f / x^s`, requiring `[x^0]f ..= [x^(s-1)]f` to vanish. Precision drops by `s`.
    pub fn shift_down(&self, s: usize) -> Result<Self> {
        if s > self.precision() {
            return Err(SeriesError::PrecisionExceeded {
                index: s,
                precision: self.precision(),
            });
        }
        if let Some(i) = self.coeffs[..s].iter().position(|c| !c.is_zero()) {
            return Err(SeriesError::Precondition(format!(
                "cannot divide by x^{s}: coefficient of x^{i} is nonzero"
            )));
        }
        Ok(PowerSeries {
            coeffs: self.coeffs[s..].to_vec(),
        })
    }

    /// `x^s * f`. Precision rises by `s`.
    pub fn shift_up(&self, s: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); s];
        coeffs.extend_from_slice(&self.coeffs);
        PowerSeries { coeffs }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn neg(&self) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    fn zip_with(&self, other: &Self, op: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| op(a, b)).collect(),
        }
    }

    /// Cauchy product, truncated at the smaller precision.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.precision().min(other.precision());
        let mut coeffs = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs[..=n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += &(a * b);
                }
            }
        }
        PowerSeries { coeffs }
    }

    /// Multiplicative inverse `1/f`, defined when `[x^0]f != 0`.
    pub fn reciprocal(&self) -> Result<Self> {
        let inv_a0 = self.coeffs[0].recip().ok_or(SeriesError::NotInvertible)?;
        let neg_inv_a0 = -&inv_a0;
        let mut out: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        out.push(inv_a0);
        for n in 1..self.coeffs.len() {
            let mut acc = Rational::zero();
            for i in 1..=n {
                let a = &self.coeffs[i];
                if !a.is_zero() {
                    acc += &(a * &out[n - i]);
                }
            }
            out.push(acc * &neg_inv_a0);
        }
        Ok(PowerSeries { coeffs: out })
    }

    /// `f(g(x))`, defined when `[x^0]g = 0`. Horner evaluation, truncating
    /// every intermediate at the smaller precision.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        let c0 = &inner.coeffs[0];
        if !c0.is_zero() {
            return Err(SeriesError::NotComposable {
                constant: c0.to_string(),
            });
        }
        let n = self.precision().min(inner.precision());
        let inner = inner.truncate(n)?;
        let mut acc = Self::constant(self.coeffs[n].clone(), n);
        for a in self.coeffs[..n].iter().rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] += a;
        }
        Ok(acc)
    }

    /// Formal derivative. Precision drops by one.
    pub fn derivative(&self) -> Result<Self> {
        if self.precision() == 0 {
            return Err(SeriesError::PrecisionExceeded { index: 1, precision: 0 });
        }
        Ok(PowerSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(n, c)| c * &Rational::from(n as u64))
                .collect(),
        })
    }

    /// Antiderivative with zero constant term. Precision rises by one.
    pub fn integrate(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| c / &Rational::from(n as u64 + 1)),
        );
        PowerSeries { coeffs }
    }

    /// `f^k` by repeated squaring.
    pub fn pow(&self, mut k: u64) -> Self {
        let mut result = Self::one(self.precision());
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// `[x^0]f = 0` and `[x^1]f != 0`.
    pub fn is_regular(&self) -> Result<bool> {
        let a1 = self.coefficient(1)?;
        Ok(self.coeffs[0].is_zero() && !a1.is_zero())
    }
}

impl fmt::Display for PowerSeries {
    /// Coefficient list, lowest degree first: `[0, 1, 0, -1/6]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} + O(x^{})", self.precision() + 1)
    }
}

/// `{"precision": N, "coeffs": ["0", "1", ...]}`.
impl serde::Serialize for PowerSeries {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("PowerSeries", 2)?;
        st.serialize_field("precision", &self.precision())?;
        st.serialize_field("coeffs", &self.coeffs)?;
        st.end()
    }
}

impl FromStr for PowerSeries {
    type Err = SeriesError;

    /// Parses the coefficient-list text form, brackets optional.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t.strip_prefix('[').unwrap_or(t);
        let t = t.strip_suffix(']').unwrap_or(t);
        if t.trim().is_empty() {
            return Err(SeriesError::MalformedInput("empty coefficient list".into()));
        }
        let coeffs = t
            .split(',')
            .map(|c| {
                c.parse::<Rational>()
                    .map_err(|e| SeriesError::MalformedInput(e.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_coeffs(coeffs)
    }
}

macro_rules! series_binop {
    ($Trait:ident, $method:ident) => {
        impl<'a> $Trait<&'a PowerSeries> for &'a PowerSeries {
            type Output = PowerSeries;
            fn $method(self, rhs: &'a PowerSeries) -> PowerSeries {
                PowerSeries::$method(self, rhs)
            }
        }
    };
}

series_binop!(Add, add);
series_binop!(Sub, sub);
series_binop!(Mul, mul);

impl Neg for &PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        PowerSeries::neg(self)
    }
}
