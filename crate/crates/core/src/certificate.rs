//! Mechanical re-verification of the sign argument behind the sandwich.
//!
//! At any critical point `y` of `g_N = f_N - e^x` we have `g_N(y) = G_N(y)`
//! with `G_N = f_N - f_N'`, because `e^x` is its own derivative. Working the
//! Bessel recurrence through the `T`-basis derivative collapses this to
//!
//! ```text
//! G_N = I_N(1) U_N + I_{N+1}(1) U_{N-1}.
//! ```
//!
//! If `(-1)^N G_N > 0` on `(-inf, -1)`, every critical point of `g_N` there
//! has the sign of `(-1)^N`, which together with the sign of `g_N(-1)` pins the
//! sign of `g_N` on the whole half-line.
//!
//! The positivity argument is an algebraic split of a related polynomial,
//! [`g_proof_form`] = `I_{N+1} U_{N-1} + I_N U_{N-2} - I_N + I_N T_N`, after the
//! substitution `x = -cosh t`. That polynomial differs from `G_N` by
//! `I_N (T_N + 1)`, and on `x < -1` this difference has the sign `(-1)^N`, so
//! the positivity of `(-1)^N g_proof_form` carries over to `(-1)^N G_N`. The
//! split holds when the ratio `r = I_{N+1}(1) / I_N(1)` satisfies three
//! inequalities; [`sign_certificate`] checks them exactly using the closed-form
//! bound `r <= 4 / (5(N+1))`.

use serde::{Deserialize, Serialize};

use crate::bessel::{
    bessel_i, bessel_i_precise, sharpened_ratio_bound, EvalPrecision, Order, Rational,
};
use crate::cheb::{eval_t, eval_u, u_to_t_like, ChebSeries};
use crate::error::{domain, Error, Result};
use crate::exp_series::{partial_sum, partial_sum_precise};
use crate::grid;
use crate::scalar::{lift, working_bits, MpFloat, Real};

/// Closest grid point to `-1` in [`grid_sign_scan`].
pub const SCAN_NEAR_END: f64 = -1.0 - 1e-6;

/// Precision used for the multiprecision constructions of `G_N`.
pub fn g_bits(n: usize) -> usize {
    working_bits(n + 1)
}

fn order(n: usize) -> Result<Order> {
    u32::try_from(n)
        .map(Order::new)
        .map_err(|_| domain(format!("degree {n} is too large")))
}

/// `f_N - f_N'` from the partial sum and its `T`-basis derivative.
pub fn g_via_reduction(n: usize) -> Result<ChebSeries> {
    let f = partial_sum(n)?;
    Ok(&f - &f.derivative())
}

/// [`g_via_reduction`] in multiprecision.
///
/// The low coefficients are differences of `O(1)` numbers that cancel down to
/// `2 I_{N+1}(1)` or `2 I_N(1)`, so the double-precision version loses all
/// relative accuracy for `N` beyond about 8.
pub fn g_via_reduction_precise(n: usize, bits: usize) -> Result<ChebSeries<MpFloat>> {
    let f = partial_sum_precise(n, bits)?;
    Ok(&f - &f.derivative())
}

fn closed_form<S: Real>(n: usize, i_n: &S, i_next: &S) -> ChebSeries<S> {
    let lead = u_to_t_like(n, i_n).scaled(i_n);
    if n == 0 {
        return lead;
    }
    &lead + &u_to_t_like(n - 1, i_next).scaled(i_next)
}

/// `I_N(1) U_N + I_{N+1}(1) U_{N-1}` in the `T` basis.
pub fn g_closed_form(n: usize) -> Result<ChebSeries> {
    let p = EvalPrecision::default();
    let i_n = bessel_i(order(n)?, 1.0, &p)?;
    let i_next = bessel_i(order(n + 1)?, 1.0, &p)?;
    Ok(closed_form(n, &i_n, &i_next))
}

/// [`g_closed_form`] in multiprecision.
pub fn g_closed_form_precise(n: usize, bits: usize) -> Result<ChebSeries<MpFloat>> {
    let i_n = bessel_i_precise(order(n)?, 1.0, bits)?;
    let i_next = bessel_i_precise(order(n + 1)?, 1.0, bits)?;
    Ok(closed_form(n, &i_n, &i_next))
}

/// `I_{N+1}(1) U_{N-1} + I_N(1) U_{N-2} - I_N(1) + I_N(1) T_N` in the `T` basis,
/// the polynomial whose transformed form the five-piece split applies to.
pub fn g_proof_form(n: usize) -> Result<ChebSeries> {
    if n == 0 {
        return Err(domain("the split polynomial is defined for N >= 1"));
    }
    let p = EvalPrecision::default();
    let i_n = bessel_i(order(n)?, 1.0, &p)?;
    let i_next = bessel_i(order(n + 1)?, 1.0, &p)?;
    let mut s = u_to_t_like(n - 1, &i_next).scaled(&i_next);
    if n >= 2 {
        s = &s + &u_to_t_like(n - 2, &i_n).scaled(&i_n);
    }
    let mut t_n = vec![0.0; n + 1];
    t_n[0] = -i_n;
    t_n[n] = i_n;
    Ok(&s + &ChebSeries::new(t_n)?)
}

/// `|(f_N - f_N')(x) - G_N(x)|` relative to `I_N |U_N(x)| + I_{N+1} |U_{N-1}(x)|`.
///
/// The left side goes through the partial sum, its derivative and Clenshaw;
/// `G_N` is evaluated straight from the `U` recurrence. Both are carried out
/// in multiprecision and the ratio is returned as `f64`.
pub fn reduction_identity_residual(n: usize, x: f64) -> Result<f64> {
    reduction_identity_residuals(n, &[x]).map(|r| r[0])
}

/// [`reduction_identity_residual`] at each of `xs`, sharing the setup.
pub fn reduction_identity_residuals(n: usize, xs: &[f64]) -> Result<Vec<f64>> {
    let bits = g_bits(n);
    let f = partial_sum_precise(n, bits)?;
    let df = f.derivative();
    let i_n = bessel_i_precise(order(n)?, 1.0, bits)?;
    let i_next = bessel_i_precise(order(n + 1)?, 1.0, bits)?;
    xs.iter()
        .map(|&x| {
            let xs = lift(x, bits)?;
            let lhs = f.eval(&xs) - &df.eval(&xs);
            let u_n = eval_u(n as i64, &xs)?;
            let u_prev = eval_u(n as i64 - 1, &xs)?;
            let g = i_n.clone() * &u_n + &(i_next.clone() * &u_prev);
            let scale = i_n.clone() * u_n.abs() + &(i_next.clone() * u_prev.abs());
            Ok(((lhs - &g).abs() / scale).nearest_f64())
        })
        .collect()
}

/// Whether `(-1)^N G_N(x) > 0` at every node of a grid from `x_min` to
/// [`SCAN_NEAR_END`], log-spaced in the distance from `-1`.
///
/// `G_N` comes from [`g_via_reduction_precise`]. A node only counts as
/// positive when the computed value clears its rounding-error bound.
pub fn grid_sign_scan(n: usize, x_min: f64, points: usize) -> Result<bool> {
    if n == 0 {
        return Err(domain("the sign scan needs N >= 1"));
    }
    if points < 10 {
        return Err(domain(format!(
            "the sign scan needs at least 10 points, got {points}"
        )));
    }
    if !(x_min < SCAN_NEAR_END) {
        return Err(domain(format!(
            "the sign scan needs x_min < -1 - 1e-6, got {x_min}"
        )));
    }
    let bits = g_bits(n);
    let f = partial_sum_precise(n, bits)?;
    let df = f.derivative();
    let g = &f - &df;
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    for x in grid::log_spaced_below_minus_one(x_min, SCAN_NEAR_END, points)? {
        let xs = lift(x, bits)?;
        let v = g.eval(&xs) * &xs.int_like(sign);
        let slack = (f.abs_sum(&xs) + &df.abs_sum(&xs)) >> (bits as isize - 16);
        if v <= slack {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `a2 u^2 + a1 u + a0`, a quadratic in `u = e^t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadraticInE {
    pub a2: f64,
    pub a1: f64,
    pub a0: f64,
}

impl QuadraticInE {
    pub fn eval(&self, u: f64) -> f64 {
        (self.a2 * u + self.a1) * u + self.a0
    }

    pub fn discriminant(&self) -> f64 {
        self.a1 * self.a1 - 4.0 * self.a2 * self.a0
    }
}

/// Split parameters `(a, b, c, d)` with `a + b = c + d = 2(-1)^N`.
///
/// For `N >= 2` these are `a = d = 2r`, `b = c = 2(-1)^N - 2r`. At `N = 1` the
/// slots of the `B` and `E` pieces (`k = N+1` and `k = N-2`) fall outside
/// `0..2N`, so those pieces are empty and `a = d = 0` leaves the whole
/// correction to `C` and `D`.
pub fn split_parameters(n: usize, r: f64) -> [f64; 4] {
    let s = if n.is_multiple_of(2) { 2.0 } else { -2.0 };
    if n >= 2 {
        [2.0 * r, s - 2.0 * r, s - 2.0 * r, 2.0 * r]
    } else {
        [0.0, s, s, 0.0]
    }
}

/// The five quadratics multiplying the pieces `A..E`.
pub fn split_quadratics(n: usize, r: f64) -> [QuadraticInE; 5] {
    let [a, b, c, d] = split_parameters(n, r);
    let q = |a2, a1, a0| QuadraticInE { a2, a1, a0 };
    [
        q(1.0, -2.0 * r, 1.0),
        q(1.0, -2.0 * r, 1.0 - a),
        q(1.0, -2.0 * r - b, 1.0),
        q(1.0, -2.0 * r - c, 1.0),
        q(1.0 - d, -2.0 * r, 1.0),
    ]
}

/// Both sides of the five-piece identity at one `(N, t)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Decomposition {
    pub n: usize,
    pub t: f64,
    /// `4 (-1)^N G(-cosh t) sinh(t) e^{(N+1)t} / (I_N(1) (e^t - 1))` with
    /// `G` = [`g_proof_form`].
    pub lhs: f64,
    /// `A, B, C, D, E`.
    pub pieces: [f64; 5],
    pub rhs: f64,
    /// `|lhs - rhs| / max(1, |rhs|)`.
    pub residual: f64,
}

/// Smallest `t` accepted by [`decompose`]; below it `e^t - 1` cancels too badly.
pub const MIN_T: f64 = 1e-6;

pub fn decompose(n: usize, t: f64) -> Result<Decomposition> {
    if n == 0 {
        return Err(domain("the split needs N >= 1"));
    }
    if !(t >= MIN_T) {
        return Err(Error::Range(format!(
            "t = {t} is below the supported minimum {MIN_T}"
        )));
    }
    let top = (2 * n + 2) as f64 * t;
    if !(top < 700.0) {
        return Err(Error::Overflow(format!(
            "e^({top}) leaves the f64 range (N = {n}, t = {t})"
        )));
    }
    let p = EvalPrecision::default();
    let i_n = bessel_i(order(n)?, 1.0, &p)?;
    let i_next = bessel_i(order(n + 1)?, 1.0, &p)?;
    let r = i_next / i_n;

    let x = -t.cosh();
    let below = if n >= 2 {
        eval_u(n as i64 - 2, &x)?
    } else {
        0.0
    };
    let g = i_next * eval_u(n as i64 - 1, &x)? + i_n * below - i_n + i_n * eval_t(n, &x);
    let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    let lhs = 4.0 * sign * g * t.sinh() * ((n + 1) as f64 * t).exp() / (i_n * t.exp_m1());

    let u = t.exp();
    let pow = |k: usize| (k as f64 * t).exp();
    let quads = split_quadratics(n, r);
    let special = [n + 1, n, n - 1, n.wrapping_sub(2)];
    let a_piece: f64 = (0..2 * n)
        .filter(|k| !special.contains(k))
        .map(|k| pow(k) * quads[0].eval(u))
        .fold(0.0, |acc, v| acc + v);
    let mut pieces = [a_piece, 0.0, 0.0, 0.0, 0.0];
    for (slot, &k) in special.iter().enumerate() {
        if k < 2 * n {
            pieces[slot + 1] = pow(k) * quads[slot + 1].eval(u);
        }
    }
    let rhs: f64 = pieces.iter().sum();
    if !lhs.is_finite() || !rhs.is_finite() {
        return Err(Error::Overflow(format!(
            "non-finite split at N = {n}, t = {t}"
        )));
    }
    let residual = (lhs - rhs).abs() / rhs.abs().max(1.0);
    Ok(Decomposition {
        n,
        t,
        lhs,
        pieces,
        rhs,
        residual,
    })
}

/// Relative residual of the five-piece identity; see [`decompose`].
pub fn decomposition_check(n: usize, t: f64) -> Result<f64> {
    decompose(n, t).map(|d| d.residual)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Accepted,
    Rejected,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conditions {
    /// `4 r^2 - 4 < 0`.
    pub unit_quadratic: bool,
    /// `4 r^2 - 4 (1 - 2r) < 0`.
    pub shifted_quadratic: bool,
    /// `1 - 2r > 0`.
    pub leading_positive: bool,
}

impl Conditions {
    /// Exact evaluation for the rational ratio bound `r = num / den`.
    pub fn for_ratio(r: Rational) -> Self {
        let (p, q) = (r.num as i128, r.den as i128);
        Self {
            unit_quadratic: p * p < q * q,
            shifted_quadratic: p * p + 2 * p * q - q * q < 0,
            leading_positive: q > 2 * p,
        }
    }

    pub fn all(&self) -> bool {
        self.unit_quadratic && self.shifted_quadratic && self.leading_positive
    }
}

/// Outcome of the discriminant checks for one `N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub n: u32,
    pub ratio_bound: Rational,
    pub conditions: Conditions,
    pub verdict: Verdict,
}

impl Certificate {
    pub fn accepted(&self) -> bool {
        self.verdict == Verdict::Accepted
    }
}

/// Checks the three split conditions at `r = 4 / (5(N+1))` in exact integer
/// arithmetic. Acceptance certifies `(-1)^N G_N > 0` on `(-inf, -1)`.
pub fn sign_certificate(n: u32) -> Result<Certificate> {
    if n == 0 {
        return Err(domain("the sign certificate is defined for N >= 1"));
    }
    let ratio_bound = sharpened_ratio_bound(Order::new(n));
    let conditions = Conditions::for_ratio(ratio_bound);
    let verdict = if conditions.all() {
        Verdict::Accepted
    } else {
        Verdict::Rejected
    };
    Ok(Certificate {
        n,
        ratio_bound,
        conditions,
        verdict,
    })
}

/// Certificates for every `N` in `lo..=hi`.
pub fn certify_range(lo: u32, hi: u32) -> Result<Vec<Certificate>> {
    if lo == 0 || lo > hi {
        return Err(domain(format!("invalid certificate range {lo}..{hi}")));
    }
    (lo..=hi).map(sign_certificate).collect()
}
