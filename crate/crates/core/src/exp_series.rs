//! The Chebyshev expansion of `e^x` on `[-1, 1]`, the Taylor baseline, and
//! two-sided enclosures of `e^x` built from partial sums.
//!
//! The expansion is `e^x = I_0(1) + 2 sum_{n>=1} I_n(1) T_n(x)`. On
//! `(-inf, -1)` partial sums of odd degree lie below `e^x` and partial sums of
//! even degree lie above it, so the pair of degrees `(2N-1, 2N)` brackets the
//! exponential there. The same holds for Taylor polynomials of degrees
//! `(N, N+1)`, `N` odd, on `(-inf, 0)`.
//!
//! Enclosures are evaluated in multiprecision and rounded outward to `f64`.
//! Near `x = -1` the gap between a partial sum and `e^x` falls far below one
//! ulp (about `1e-41` at degree 32), so a plain `f64` Clenshaw sum cannot tell
//! the two sides apart.

use serde::{Deserialize, Serialize};

use crate::bessel::{bessel_i, bessel_i_precise, EvalPrecision, Order};
use crate::cheb::ChebSeries;
use crate::error::{domain, Result};
use crate::grid;
use crate::scalar::{f64_above, f64_below, lift, log2_magnitude, working_bits, MpFloat, Real};

/// Coefficients `a_0 = I_0(1)`, `a_n = 2 I_n(1)` of the expansion of `e^x`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpChebCoeffs {
    a: Vec<f64>,
}

impl ExpChebCoeffs {
    pub fn degree(&self) -> usize {
        self.a.len() - 1
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.a
    }

    pub fn to_series(&self) -> ChebSeries {
        ChebSeries::new(self.a.clone()).expect("Bessel values are finite")
    }
}

/// A certified bracket `lower <= e^x <= upper`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Enclosure {
    pub x: f64,
    pub lower: f64,
    pub upper: f64,
    pub lower_degree: usize,
    pub upper_degree: usize,
}

impl Enclosure {
    pub fn contains(&self, y: f64) -> bool {
        self.lower <= y && y <= self.upper
    }

    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }
}

pub fn exp_cheb_coefficients(n: usize, prec: &EvalPrecision) -> Result<ExpChebCoeffs> {
    let a = (0..=n)
        .map(|k| {
            let i = bessel_i(order(k)?, 1.0, prec)?;
            Ok(if k == 0 { i } else { 2.0 * i })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ExpChebCoeffs { a })
}

/// [`exp_cheb_coefficients`] carried to `bits` of precision.
pub fn exp_cheb_coefficients_precise(n: usize, bits: usize) -> Result<Vec<MpFloat>> {
    (0..=n)
        .map(|k| {
            let i = bessel_i_precise(order(k)?, 1.0, bits)?;
            Ok(if k == 0 { i } else { i.clone() + &i })
        })
        .collect()
}

fn order(k: usize) -> Result<Order> {
    u32::try_from(k)
        .map(Order::new)
        .map_err(|_| domain(format!("degree {k} is too large")))
}

/// The degree-`n` partial sum `f_n = sum_{k<=n} a_k T_k` in double precision.
pub fn partial_sum(n: usize) -> Result<ChebSeries> {
    Ok(exp_cheb_coefficients(n, &EvalPrecision::default())?.to_series())
}

/// The degree-`n` partial sum with coefficients carried to `bits`.
pub fn partial_sum_precise(n: usize, bits: usize) -> Result<ChebSeries<MpFloat>> {
    ChebSeries::new(exp_cheb_coefficients_precise(n, bits)?)
}

/// `sum_{k<=n} x^k / k!` by Horner's rule.
pub fn taylor_eval(n: usize, x: f64) -> f64 {
    let mut acc = 1.0;
    for k in (1..=n).rev() {
        acc = 1.0 + acc * x / k as f64;
    }
    acc
}

/// `sum_{k<=n} x^k / k!` and `sum_{k<=n} |x|^k / k!`, both at the precision of `x`.
pub fn taylor_eval_precise(n: usize, x: &MpFloat) -> (MpFloat, MpFloat) {
    let ax = x.abs();
    let mut term = x.int_like(1);
    let mut abs_term = x.int_like(1);
    let mut sum = term.clone();
    let mut abs_sum = abs_term.clone();
    for k in 1..=n {
        let kk = x.int_like(k as i64);
        term = term * x / kk.clone();
        abs_term = abs_term * &ax / kk;
        sum += &term;
        abs_sum += &abs_term;
    }
    (sum, abs_sum)
}

/// Bound on the rounding error of a value built from terms of total
/// magnitude `scale` with at most `ops` roundings, each relative `2^-bits`.
fn allowance(scale: &MpFloat, bits: usize, ops: usize) -> MpFloat {
    (scale.clone() * scale.int_like(ops as i64 + 1)) >> bits as isize
}

/// Whether `err` is at least 64 bits below `value`, so widening by it moves
/// the outward-rounded `f64` by at most an ulp.
fn settled(value: &MpFloat, err: &MpFloat) -> bool {
    match (log2_magnitude(value), log2_magnitude(err)) {
        (_, None) => true,
        (Some(v), Some(e)) => e + 64 <= v,
        (None, Some(_)) => false,
    }
}

/// Precision beyond which an unsettled value is returned with its full
/// allowance instead of being refined further.
const MAX_BITS: usize = 1 << 13;

fn outward(
    x: f64,
    lo: (MpFloat, MpFloat),
    hi: (MpFloat, MpFloat),
    degrees: (usize, usize),
) -> Enclosure {
    Enclosure {
        x,
        lower: f64_below(&(lo.0 - &lo.1)),
        upper: f64_above(&(hi.0 + &hi.1)),
        lower_degree: degrees.0,
        upper_degree: degrees.1,
    }
}

/// Taylor sandwich `T_n(x) <= e^x <= T_{n+1}(x)` for odd `n` and `x < 0`.
pub fn taylor_sandwich(n: usize, x: f64) -> Result<Enclosure> {
    if n.is_multiple_of(2) {
        return Err(domain(format!(
            "the Taylor sandwich needs an odd degree, got {n}"
        )));
    }
    if !(x < 0.0 && x.is_finite()) {
        return Err(domain(format!(
            "the Taylor sandwich holds for x < 0, got {x}"
        )));
    }
    let mut bits = 128;
    loop {
        let xs = lift(x, bits)?;
        let (lo, lo_scale) = taylor_eval_precise(n, &xs);
        let (hi, hi_scale) = taylor_eval_precise(n + 1, &xs);
        let lo_err = allowance(&lo_scale, bits, 3 * n + 3);
        let hi_err = allowance(&hi_scale, bits, 3 * n + 6);
        if bits >= MAX_BITS || (settled(&lo, &lo_err) && settled(&hi, &hi_err)) {
            return Ok(outward(x, (lo, lo_err), (hi, hi_err), (n, n + 1)));
        }
        bits *= 2;
    }
}

/// Multiprecision coefficients of the expansion up to a fixed degree, shared
/// by every evaluation that needs partial sums at that degree or below.
#[derive(Debug, Clone)]
pub struct ExpExpansion {
    coeffs: Vec<MpFloat>,
    bits: usize,
}

impl ExpExpansion {
    /// Coefficients through `max_degree` at [`working_bits`]`(max_degree)`.
    pub fn new(max_degree: usize) -> Result<Self> {
        Self::with_bits(max_degree, working_bits(max_degree))
    }

    pub fn with_bits(max_degree: usize, bits: usize) -> Result<Self> {
        Ok(Self {
            coeffs: exp_cheb_coefficients_precise(max_degree, bits)?,
            bits,
        })
    }

    pub fn max_degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn bits(&self) -> usize {
        self.bits
    }

    pub fn coeffs(&self) -> &[MpFloat] {
        &self.coeffs
    }

    pub fn lift(&self, x: f64) -> Result<MpFloat> {
        lift(x, self.bits)
    }

    /// The partial sum of degree `degree` as a series.
    pub fn series(&self, degree: usize) -> Result<ChebSeries<MpFloat>> {
        self.check_degree(degree)?;
        ChebSeries::new(self.coeffs[..=degree].to_vec())
    }

    fn check_degree(&self, degree: usize) -> Result<()> {
        if degree > self.max_degree() {
            return Err(domain(format!(
                "degree {degree} exceeds the precomputed maximum {}",
                self.max_degree()
            )));
        }
        Ok(())
    }

    /// `f_degree(x)` and its magnitude scale `sum_k a_k |T_k(x)|`.
    pub fn partial_sum_at(&self, degree: usize, x: &MpFloat) -> Result<(MpFloat, MpFloat)> {
        let s = self.series(degree)?;
        Ok((s.eval(x), s.abs_sum(x)))
    }

    /// The pair `(f_{2n-1}(x), f_{2n}(x))` at this expansion's precision.
    pub fn sandwich_precise(&self, n: usize, x: f64) -> Result<(MpFloat, MpFloat)> {
        check_cheb_domain(n, x)?;
        let xs = self.lift(x)?;
        let (lo, _) = self.partial_sum_at(2 * n - 1, &xs)?;
        let (hi, _) = self.partial_sum_at(2 * n, &xs)?;
        Ok((lo, hi))
    }

    /// Outward-rounded enclosure of `e^x` from partial sums of degrees `2n-1`
    /// and `2n`.
    pub fn enclose(&self, n: usize, x: f64) -> Result<Enclosure> {
        check_cheb_domain(n, x)?;
        let xs = self.lift(x)?;
        let (lo, lo_scale) = self.partial_sum_at(2 * n - 1, &xs)?;
        let (hi, hi_scale) = self.partial_sum_at(2 * n, &xs)?;
        let ops = 4 * (2 * n + 1) * (2 * n + 1);
        let lo_err = allowance(&lo_scale, self.bits, ops);
        let hi_err = allowance(&hi_scale, self.bits, ops);
        if self.bits < MAX_BITS && !(settled(&lo, &lo_err) && settled(&hi, &hi_err)) {
            return Self::with_bits(2 * n, 2 * self.bits)?.enclose(n, x);
        }
        Ok(outward(x, (lo, lo_err), (hi, hi_err), (2 * n - 1, 2 * n)))
    }

    /// `f_n(-1) - e^{-1}` at this expansion's precision.
    pub fn endpoint_gap_precise(&self, n: usize) -> Result<MpFloat> {
        self.check_degree(n)?;
        let mut sum = self.coeffs[0].zero_like();
        for (k, a) in self.coeffs[..=n].iter().enumerate() {
            sum = if k % 2 == 0 { sum + a } else { sum - a };
        }
        let e = (-self.coeffs[0].int_like(1)).exp();
        Ok(sum - &e)
    }

    /// Maximum errors of `f_n` and of the degree-`n` Taylor polynomial against
    /// `e^x` over `points` equally spaced nodes of `[-1, 1]`, for every degree
    /// `0..=max_degree()`.
    pub fn sup_errors(&self, points: usize) -> Result<Vec<SupError>> {
        if points < 100 {
            return Err(domain(format!(
                "the error grid needs at least 100 points, got {points}"
            )));
        }
        let top = self.max_degree();
        let zero = self.coeffs[0].zero_like();
        let mut cheb = vec![zero.clone(); top + 1];
        let mut taylor = vec![zero; top + 1];
        for x in grid::uniform(-1.0, 1.0, points)? {
            let xs = self.lift(x)?;
            let e = xs.exp();
            let two_x = xs.clone() + &xs;
            let (mut t_prev, mut t_cur) = (xs.int_like(1), xs.clone());
            let mut f = self.coeffs[0].clone();
            let mut term = xs.int_like(1);
            let mut p = term.clone();
            for k in 0..=top {
                if k >= 1 {
                    if k >= 2 {
                        let next = two_x.clone() * &t_cur - &t_prev;
                        t_prev = std::mem::replace(&mut t_cur, next);
                    }
                    f += &(self.coeffs[k].clone() * &t_cur);
                    term = term * &xs / xs.int_like(k as i64);
                    p += &term;
                }
                let ec = (f.clone() - &e).abs();
                let et = (p.clone() - &e).abs();
                if ec > cheb[k] {
                    cheb[k] = ec;
                }
                if et > taylor[k] {
                    taylor[k] = et;
                }
            }
        }
        Ok(cheb
            .iter()
            .zip(&taylor)
            .enumerate()
            .map(|(degree, (c, t))| SupError {
                degree,
                cheb: c.nearest_f64(),
                taylor: t.nearest_f64(),
            })
            .collect())
    }
}

/// Grid sup-norm errors of the two degree-`degree` approximations on `[-1, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SupError {
    pub degree: usize,
    pub cheb: f64,
    pub taylor: f64,
}

fn check_cheb_domain(n: usize, x: f64) -> Result<()> {
    if n == 0 {
        return Err(domain("the Chebyshev sandwich needs N >= 1"));
    }
    if !(x < -1.0 && x.is_finite()) {
        return Err(domain(format!(
            "the Chebyshev sandwich is certified on (-inf, -1) only, got x = {x}"
        )));
    }
    Ok(())
}

/// `f_{2n-1}(x) <= e^x <= f_{2n}(x)` for `n >= 1`, `x < -1`, outward-rounded.
///
/// Builds the coefficients on every call; use [`ExpExpansion::enclose`] when
/// evaluating many points.
pub fn cheb_sandwich(n: usize, x: f64) -> Result<Enclosure> {
    check_cheb_domain(n, x)?;
    ExpExpansion::new(2 * n)?.enclose(n, x)
}

/// `g_n(-1) = f_n(-1) - e^{-1}`: non-negative for even `n`, non-positive for odd `n`.
pub fn endpoint_gap(n: usize) -> Result<f64> {
    Ok(ExpExpansion::new(n)?.endpoint_gap_precise(n)?.nearest_f64())
}

/// `(max |f_n - e^x|, max |taylor_n - e^x|)` over `grid_points` nodes of `[-1, 1]`.
pub fn sup_error_comparison(n: usize, grid_points: usize) -> Result<(f64, f64)> {
    let row = ExpExpansion::new(n)?.sup_errors(grid_points)?[n];
    Ok((row.cheb, row.taylor))
}

#[cfg(test)]
mod tests {
    use super::*;

    const I0_1: f64 = 1.266_065_877_752_008_3;
    const A1: f64 = 1.130_318_207_984_97;
    const A2: f64 = 0.271_495_339_534_076_56;

    #[test]
    fn coefficient_examples() {
        let p = EvalPrecision::default();
        let c0 = exp_cheb_coefficients(0, &p).unwrap();
        assert_eq!(c0.degree(), 0);
        assert!((c0.as_slice()[0] - I0_1).abs() < 1e-15);
        let c2 = exp_cheb_coefficients(2, &p).unwrap();
        for (got, want) in c2.as_slice().iter().zip([I0_1, A1, A2]) {
            assert!((got - want).abs() < 1e-15);
        }
        let c = exp_cheb_coefficients(30, &p).unwrap();
        assert!(c.as_slice().iter().all(|&a| a > 0.0));
        assert!(c.as_slice()[1..].windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn partial_sum_examples() {
        assert!((partial_sum(1).unwrap().eval(&-2.0) - -0.994_570_538_217_931_8).abs() < 1e-14);
        assert!((partial_sum(2).unwrap().eval(&-2.0) - 0.905_896_838_520_604_2).abs() < 1e-14);
        assert!((partial_sum(0).unwrap().eval(&-17.0) - I0_1).abs() < 1e-15);
    }

    #[test]
    fn taylor_examples() {
        assert_eq!(taylor_eval(1, -0.5), 0.5);
        assert!((taylor_eval(3, -1.0) - 1.0 / 3.0).abs() < 1e-16);
        assert_eq!(taylor_eval(0, 123.0), 1.0);
    }

    #[test]
    fn taylor_sandwich_examples() {
        let e = taylor_sandwich(1, -1.0).unwrap();
        assert!(e.lower <= 0.0 && e.lower > -1e-15);
        assert!(e.upper >= 0.5 && e.upper < 0.5 + 1e-15);
        assert!(e.contains((-1.0f64).exp()));

        let e = taylor_sandwich(3, -2.0).unwrap();
        assert!((e.lower + 1.0 / 3.0).abs() < 1e-15 && (e.upper - 1.0 / 3.0).abs() < 1e-15);
        assert!(e.contains((-2.0f64).exp()));

        let e = taylor_sandwich(5, -1.0).unwrap();
        assert!((e.width() - 1.0 / 720.0).abs() < 1e-15);
        assert!(e.contains((-1.0f64).exp()));
        assert_eq!((e.lower_degree, e.upper_degree), (5, 6));

        assert!(taylor_sandwich(2, -1.0).is_err());
        assert!(taylor_sandwich(3, 0.0).is_err());
    }

    #[test]
    fn cheb_sandwich_examples() {
        let e = cheb_sandwich(1, -2.0).unwrap();
        assert!((e.lower - -0.994_570_538_217_931_8).abs() < 1e-15);
        assert!((e.upper - 0.905_896_838_520_604_2).abs() < 1e-15);
        assert!(e.contains((-2.0f64).exp()));
        assert_eq!((e.lower_degree, e.upper_degree), (1, 2));

        assert!(cheb_sandwich(3, -1.5).unwrap().contains((-1.5f64).exp()));
        let far = cheb_sandwich(10, -30.0).unwrap();
        assert!(far.lower < 0.0 && far.upper > 1e10);
        assert!(far.contains((-30.0f64).exp()));
    }

    #[test]
    fn cheb_sandwich_rejects_outside_domain() {
        assert!(cheb_sandwich(1, -1.0).is_err());
        assert!(cheb_sandwich(1, 0.5).is_err());
        assert!(cheb_sandwich(0, -2.0).is_err());
        assert!(cheb_sandwich(1, f64::NEG_INFINITY).is_err());
    }

    #[test]
    fn endpoint_gap_signs() {
        assert!((endpoint_gap(0).unwrap() - 0.898_186_436_580_566).abs() < 1e-14);
        assert!(endpoint_gap(1).unwrap() <= 0.0);
        let ex = ExpExpansion::new(40).unwrap();
        for n in 0..=40 {
            let g = ex.endpoint_gap_precise(n).unwrap();
            let zero = g.zero_like();
            if n % 2 == 0 {
                assert!(g > zero, "n = {n}");
            } else {
                assert!(g < zero, "n = {n}");
            }
        }
        assert!(endpoint_gap(30).unwrap().abs() < 1e-30);
    }

    #[test]
    fn sup_error_examples() {
        let (c0, t0) = sup_error_comparison(0, 1000).unwrap();
        assert!((t0 - (std::f64::consts::E - 1.0)).abs() < 1e-12);
        assert!(c0 <= t0);
        let (c1, t1) = sup_error_comparison(1, 1000).unwrap();
        assert!(c1 < t1);
        let (c5, t5) = sup_error_comparison(5, 1000).unwrap();
        assert!(c5 < t5 && t5 < 2e-3 && c5 < 1e-4);
        assert!(sup_error_comparison(3, 99).is_err());
    }

    #[test]
    fn sup_error_decreases_with_degree() {
        let rows = ExpExpansion::new(16).unwrap().sup_errors(1000).unwrap();
        assert!(rows.windows(2).all(|w| w[1].cheb < w[0].cheb));
        assert!(rows.iter().all(|r| r.cheb <= r.taylor));
    }

    #[test]
    fn enclosure_escalates_precision_when_needed() {
        let coarse = ExpExpansion::with_bits(8, 80).unwrap();
        let e = coarse.enclose(4, -1.000_001).unwrap();
        assert!(e.contains((-1.000_001f64).exp()));
    }
}
