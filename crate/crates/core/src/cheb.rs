//! Chebyshev polynomials of the first and second kind on the whole real line,
//! and series in the `T` basis.
//!
//! Everything evaluates through the three-term recurrences, which are exact
//! algebra for any real argument. The hyperbolic forms
//! `T_n(cosh t) = cosh(nt)` and `U_n(cosh t) = sinh((n+1)t) / sinh(t)` appear
//! only in tests, as oracles.

use std::ops::{Add, Sub};

use crate::error::{domain, Result};
use crate::scalar::Real;

/// `T_n(x)`.
pub fn eval_t<S: Real>(n: usize, x: &S) -> S {
    let mut prev = x.int_like(1);
    if n == 0 {
        return prev;
    }
    let two_x = x.clone() + x;
    let mut cur = x.clone();
    for _ in 1..n {
        let next = two_x.clone() * &cur - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `U_n(x)` for `n >= -1`, with `U_{-1} = 0`.
pub fn eval_u<S: Real>(n: i64, x: &S) -> Result<S> {
    if n < -1 {
        return Err(domain(format!("U_n is defined for n >= -1, got {n}")));
    }
    if n == -1 {
        return Ok(x.zero_like());
    }
    let two_x = x.clone() + x;
    let mut prev = x.zero_like();
    let mut cur = x.int_like(1);
    for _ in 0..n {
        let next = two_x.clone() * &cur - &prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Finite series `sum_j c_j T_j(x)`.
///
/// Always holds at least one coefficient; the degree is `len - 1` whether or
/// not the top coefficient vanishes.
#[derive(Debug, Clone, PartialEq)]
pub struct ChebSeries<S = f64> {
    coeffs: Vec<S>,
}

impl<S: Real> ChebSeries<S> {
    pub fn new(coeffs: Vec<S>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(domain("a Chebyshev series needs at least one coefficient"));
        }
        if let Some(j) = coeffs.iter().position(|c| !c.is_finite()) {
            return Err(domain(format!("coefficient {j} is not finite")));
        }
        Ok(Self { coeffs })
    }

    /// `c T_0` for the constant `c`.
    pub fn constant(c: S) -> Self {
        Self { coeffs: vec![c] }
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<S> {
        self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Clenshaw evaluation.
    pub fn eval(&self, x: &S) -> S {
        clenshaw_eval(self, x)
    }

    /// `sum_j |c_j| |T_j(x)|`, the magnitude scale that rounding errors in
    /// [`ChebSeries::eval`] are measured against.
    pub fn abs_sum(&self, x: &S) -> S {
        let two_x = x.clone() + x;
        let mut prev = x.int_like(1);
        let mut cur = x.clone();
        let mut acc = self.coeffs[0].abs();
        for (j, c) in self.coeffs.iter().enumerate().skip(1) {
            if j > 1 {
                let next = two_x.clone() * &cur - &prev;
                prev = cur;
                cur = next;
            }
            acc = acc + &(c.abs() * cur.abs());
        }
        acc
    }

    pub fn scaled(&self, k: &S) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c.clone() * k).collect(),
        }
    }

    /// Converts every coefficient with `f`.
    pub fn map<T: Real>(&self, f: impl Fn(&S) -> T) -> ChebSeries<T> {
        ChebSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn derivative(&self) -> Self {
        differentiate(self)
    }

    fn zip_with(&self, other: &Self, op: impl Fn(S, &S) -> S) -> Self {
        let zero = self.coeffs[0].zero_like();
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|j| {
                let a = self.coeffs.get(j).cloned().unwrap_or_else(|| zero.clone());
                let b = other.coeffs.get(j).unwrap_or(&zero);
                op(a, b)
            })
            .collect();
        Self { coeffs }
    }
}

impl<S: Real> Add for &ChebSeries<S> {
    type Output = ChebSeries<S>;

    fn add(self, rhs: Self) -> ChebSeries<S> {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl<S: Real> Sub for &ChebSeries<S> {
    type Output = ChebSeries<S>;

    fn sub(self, rhs: Self) -> ChebSeries<S> {
        self.zip_with(rhs, |a, b| a - b)
    }
}

/// `sum_j c_j T_j(x)` by the Clenshaw backward recurrence.
pub fn clenshaw_eval<S: Real>(s: &ChebSeries<S>, x: &S) -> S {
    let c = &s.coeffs;
    let two_x = x.clone() + x;
    let mut b1 = x.zero_like();
    let mut b2 = x.zero_like();
    for ck in c[1..].iter().rev() {
        let b0 = two_x.clone() * &b1 - &b2 + ck;
        b2 = b1;
        b1 = b0;
    }
    x.clone() * &b1 - &b2 + &c[0]
}

/// Integer `T`-basis coefficients of `U_n`: 2 on every index of the same
/// parity as `n`, except that the constant term of an even `U_n` is 1.
fn u_to_t_weights(n: usize) -> Vec<i64> {
    let mut w = vec![0; n + 1];
    for j in (n % 2..=n).step_by(2) {
        w[j] = 2;
    }
    if n.is_multiple_of(2) {
        w[0] = 1;
    }
    w
}

/// `U_n` written in the `T` basis.
pub fn u_to_t(n: usize) -> ChebSeries<f64> {
    u_to_t_like(n, &1.0)
}

/// [`u_to_t`] at the precision of `like`.
pub fn u_to_t_like<S: Real>(n: usize, like: &S) -> ChebSeries<S> {
    ChebSeries {
        coeffs: u_to_t_weights(n)
            .into_iter()
            .map(|w| like.int_like(w))
            .collect(),
    }
}

/// Derivative of a `T`-basis series, again in the `T` basis.
///
/// Uses `T_j' = j U_{j-1}` and expands each `U_{j-1}` with [`u_to_t`]. A
/// constant differentiates to the zero series of degree 0.
pub fn differentiate<S: Real>(s: &ChebSeries<S>) -> ChebSeries<S> {
    let zero = s.coeffs[0].zero_like();
    let n = s.degree();
    if n == 0 {
        return ChebSeries::constant(zero);
    }
    let mut out = vec![zero; n];
    for (j, c) in s.coeffs.iter().enumerate().skip(1) {
        let cj = c.clone() * &c.int_like(j as i64);
        for (k, w) in u_to_t_weights(j - 1).into_iter().enumerate() {
            if w != 0 {
                out[k] = out[k].clone() + &(cj.clone() * &c.int_like(w));
            }
        }
    }
    ChebSeries { coeffs: out }
}
