//! Scalar abstraction shared by the double-precision and multiprecision paths.
//!
//! Polynomial algebra in [`crate::cheb`] is generic over [`Real`], so the same
//! Clenshaw and basis-conversion code runs on `f64` and on [`MpFloat`]. The
//! multiprecision type is needed wherever a certified comparison has to resolve
//! gaps far below one `f64` ulp: near `x = -1` the distance between a degree-32
//! partial sum and `e^x` is about `1e-41`.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use dashu_float::round::mode::{Down, HalfEven, Up};
use dashu_float::FBig;

use crate::error::{domain, Result};

/// Binary multiprecision float, round-half-to-even.
pub type MpFloat = FBig<HalfEven, 2>;

/// Bits carried beyond what the series truncation itself requires.
pub const GUARD_BITS: usize = 96;

pub trait Real:
    Clone
    + Debug
    + PartialOrd
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    /// The integer `n` at the working precision of `self`.
    fn int_like(&self, n: i64) -> Self;

    /// `x` (exactly) at the working precision of `self`.
    fn f64_like(&self, x: f64) -> Self;

    fn abs(&self) -> Self;

    fn is_finite(&self) -> bool;

    /// Nearest `f64`.
    fn nearest_f64(&self) -> f64;

    fn zero_like(&self) -> Self {
        self.int_like(0)
    }
}

impl Real for f64 {
    fn int_like(&self, n: i64) -> Self {
        n as f64
    }

    fn f64_like(&self, x: f64) -> Self {
        x
    }

    fn abs(&self) -> Self {
        f64::abs(*self)
    }

    fn is_finite(&self) -> bool {
        f64::is_finite(*self)
    }

    fn nearest_f64(&self) -> f64 {
        *self
    }
}

impl Real for MpFloat {
    fn int_like(&self, n: i64) -> Self {
        MpFloat::from(n).with_precision(self.precision()).value()
    }

    fn f64_like(&self, x: f64) -> Self {
        MpFloat::try_from(x)
            .expect("finite f64")
            .with_precision(self.precision())
            .value()
    }

    fn abs(&self) -> Self {
        dashu_float::ops::Abs::abs(self.clone())
    }

    fn is_finite(&self) -> bool {
        !self.repr().is_infinite()
    }

    fn nearest_f64(&self) -> f64 {
        MpFloat::to_f64(self).value()
    }
}

/// Lift a finite `f64` into a multiprecision value carrying `bits` of precision.
pub fn lift(x: f64, bits: usize) -> Result<MpFloat> {
    if !x.is_finite() {
        return Err(domain(format!("{x} is not finite")));
    }
    let v = MpFloat::try_from(x).map_err(|_| domain(format!("{x} is not finite")))?;
    Ok(v.with_precision(bits).value())
}

/// The integer `n` carried at `bits` of precision.
pub fn int(n: i64, bits: usize) -> MpFloat {
    MpFloat::from(n).with_precision(bits).value()
}

/// Largest `f64` that is certainly `<= v`.
///
/// Rounds toward negative infinity and then steps one more ulp down, which
/// absorbs the (far smaller) error already present in `v`.
pub fn f64_below(v: &MpFloat) -> f64 {
    v.clone()
        .with_rounding::<Down>()
        .to_f64()
        .value()
        .next_down()
}

/// Smallest `f64` that is certainly `>= v`.
pub fn f64_above(v: &MpFloat) -> f64 {
    v.clone().with_rounding::<Up>().to_f64().value().next_up()
}

/// `floor(log2 |v|)`, or `None` for zero.
pub fn log2_magnitude(v: &MpFloat) -> Option<isize> {
    let repr = v.repr();
    if repr.significand().is_zero() {
        return None;
    }
    Some(repr.exponent() + repr.digits() as isize - 1)
}

/// Working precision, in bits, that resolves the degree-`degree` truncation
/// error of the Chebyshev expansion of `e^x` against values of order one.
///
/// The first neglected coefficient is `a_{d+1} = 2 I_{d+1}(1) ~ 2^{-d} / (d+1)!`,
/// so the precision grows like `log2((d+1)!) + d`.
pub fn working_bits(degree: usize) -> usize {
    let d = degree as f64 + 1.0;
    let log2_fact: f64 = (1..=degree + 1).map(|k| (k as f64).log2()).sum();
    let needed = (d + log2_fact).ceil() as usize;
    needed.max(64) + GUARD_BITS
}
