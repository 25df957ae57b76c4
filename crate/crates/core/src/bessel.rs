//! Modified Bessel functions of the first kind, `I_n(x)`, for integer orders.
//!
//! Values come from the defining power series
//! `I_n(x) = sum_m (x/2)^(2m+n) / (m! (m+n)!)`, summed with the term ratio
//! `(x/2)^2 / ((m+1)(m+n+1))` so no factorial is ever formed. The series is
//! the whole story here: the operating range is `x <= 2`, `n <= 64`, where it
//! converges in a few dozen terms. There is no asymptotic branch and no
//! backward recurrence.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::interval::Interval;
use crate::scalar::{lift, MpFloat, Real};

/// Non-negative integer order of a Bessel function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Order(u32);

impl Order {
    pub const fn new(n: u32) -> Self {
        Self(n)
    }

    pub const fn get(self) -> u32 {
        self.0
    }
}

impl TryFrom<i64> for Order {
    type Error = Error;

    fn try_from(n: i64) -> Result<Self> {
        u32::try_from(n)
            .map(Order)
            .map_err(|_| domain(format!("order must be a non-negative integer, got {n}")))
    }
}

impl From<u32> for Order {
    fn from(n: u32) -> Self {
        Self(n)
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Truncation control for the double-precision series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalPrecision {
    rel_tol: f64,
    max_terms: usize,
}

impl EvalPrecision {
    pub fn new(rel_tol: f64, max_terms: usize) -> Result<Self> {
        if !(rel_tol > 0.0 && rel_tol < 1.0) {
            return Err(domain(format!("rel_tol must lie in (0, 1), got {rel_tol}")));
        }
        if max_terms == 0 {
            return Err(domain("max_terms must be at least 1"));
        }
        Ok(Self { rel_tol, max_terms })
    }

    pub fn rel_tol(&self) -> f64 {
        self.rel_tol
    }

    pub fn max_terms(&self) -> usize {
        self.max_terms
    }
}

impl Default for EvalPrecision {
    fn default() -> Self {
        Self {
            rel_tol: 1e-15,
            max_terms: 200,
        }
    }
}

/// Exact rational `num / den`, used for the closed-form ratio bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rational {
    pub num: u64,
    pub den: u64,
}

impl Rational {
    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

/// Which upper bound on `I_{n+1}(x) / I_n(x)` to return.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatioForm {
    /// `cosh(x) x / (2(n+1))`, valid for every `x > 0`.
    Cosh,
    /// `4 / (5(n+1))`, the `x = 1` form with `cosh(1) < 8/5` substituted.
    SharpenedAtOne,
}

fn check_positive(x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(domain(format!(
            "argument must be positive and finite, got {x}"
        )))
    }
}

/// `(x/2)^n / n!` followed by the series in `m`, summed until the next term
/// drops below `tol * sum`. Returns the sum and the number of terms used.
fn power_series<S: Real>(n: u32, x: &S, tol: &S, max_terms: usize) -> Result<(S, usize)> {
    let half = x.clone() / x.int_like(2);
    let mut term = x.int_like(1);
    for k in 1..=n {
        term = term * &half / half.int_like(k as i64);
    }
    let q = half.clone() * &half;
    let mut sum = term.clone();
    let mut used = 1;
    for m in 0u64.. {
        let denom = ((m + 1) * (m + n as u64 + 1)) as i64;
        if used == max_terms {
            break;
        }
        term = term * &q / q.int_like(denom);
        sum = sum + &term;
        used += 1;
        if term < tol.clone() * &sum {
            return Ok((sum, used));
        }
    }
    Err(Error::NonConvergence {
        order: n,
        x: x.nearest_f64(),
        max_terms,
    })
}

/// `I_n(x)` in double precision.
pub fn bessel_i(n: Order, x: f64, prec: &EvalPrecision) -> Result<f64> {
    check_positive(x)?;
    let (sum, _) = power_series(n.0, &x, &prec.rel_tol, prec.max_terms)?;
    if sum <= 0.0 {
        return Err(Error::Range(format!("I_{n}({x}) underflows f64")));
    }
    Ok(sum)
}

/// `I_n(x)` carried to `bits` of precision; `x` is taken exactly.
pub fn bessel_i_precise(n: Order, x: f64, bits: usize) -> Result<MpFloat> {
    check_positive(x)?;
    let xs = lift(x, bits)?;
    let tol = xs.int_like(1) >> (bits as isize + 8);
    // Terms shrink at least geometrically once m exceeds x^2/4, so the budget
    // scales with the precision rather than with a fixed cap.
    let max_terms = 64 + bits;
    power_series(n.0, &xs, &tol, max_terms).map(|(s, _)| s)
}

/// Two-sided enclosure `[(x/2)^n / n!, cosh(x) (x/2)^n / n!]` of `I_n(x)`.
///
/// The endpoints are widened by a few ulps to cover the rounding of the
/// product that forms them.
pub fn bessel_i_enclosure(n: Order, x: f64) -> Result<Interval> {
    check_positive(x)?;
    let mut lead = 1.0;
    for k in 1..=n.0 {
        lead = lead * (0.5 * x) / k as f64;
    }
    let slack = f64::EPSILON * (n.0 as f64 + 6.0);
    let lo = lead * (1.0 - slack);
    let hi = x.cosh() * lead * (1.0 + slack);
    Interval::new(lo, hi)
}

/// Upper bound on `I_{n+1}(x) / I_n(x)`.
pub fn bessel_ratio_bound(n: Order, x: f64, form: RatioForm) -> Result<f64> {
    check_positive(x)?;
    match form {
        RatioForm::Cosh => Ok(x.cosh() * x / (2.0 * (n.0 as f64 + 1.0))),
        RatioForm::SharpenedAtOne if x == 1.0 => Ok(sharpened_ratio_bound(n).to_f64()),
        RatioForm::SharpenedAtOne => Err(domain(format!(
            "the sharpened ratio bound holds at x = 1 only, got {x}"
        ))),
    }
}

/// `4 / (5(n+1))` as an exact rational: an upper bound on `I_{n+1}(1) / I_n(1)`.
pub fn sharpened_ratio_bound(n: Order) -> Rational {
    Rational {
        num: 4,
        den: 5 * (n.0 as u64 + 1),
    }
}

/// `|n I_n(x) - (x/2)(I_{n-1}(x) - I_{n+1}(x))|`.
///
/// The three-term identity is `I_{n-1} - I_{n+1} = (2n/x) I_n`; the residual is
/// a consistency diagnostic on the series values.
pub fn recurrence_residual(n: Order, x: f64, prec: &EvalPrecision) -> Result<f64> {
    if n.0 == 0 {
        return Err(domain("recurrence residual needs order n >= 1"));
    }
    check_positive(x)?;
    let below = bessel_i(Order(n.0 - 1), x, prec)?;
    let here = bessel_i(n, x, prec)?;
    let above = bessel_i(Order(n.0 + 1), x, prec)?;
    Ok((n.0 as f64 * here - 0.5 * x * (below - above)).abs())
}
