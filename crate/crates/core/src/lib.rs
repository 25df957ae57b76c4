//! Chebyshev series of `e^x` on `[-1, 1]` and certified two-sided bounds on
//! `(-inf, -1)`.
//!
//! The coefficients are `a_0 = I_0(1)` and `a_k = 2 I_k(1)`, with `I_k` the
//! modified Bessel functions of the first kind. Writing `f_N` for the partial
//! sum of degree `N`, for every `n >= 1` and `x < -1`
//!
//! ```text
//! f_{2n-1}(x) <= e^x <= f_{2n}(x).
//! ```
//!
//! [`exp_series::cheb_sandwich`] evaluates both sides in multiprecision and
//! rounds outward, so the returned `f64` pair brackets `e^x` even where the
//! gap is far below double resolution. [`certificate`] re-checks the sign
//! argument behind the bound.
//!
//! ```
//! let e = chebexp::cheb_sandwich(2, -3.0).unwrap();
//! assert!(e.lower <= (-3.0f64).exp() && (-3.0f64).exp() <= e.upper);
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bessel;
pub mod certificate;
pub mod cheb;
pub mod cli;
pub mod error;
pub mod exp_series;
pub mod grid;
pub mod interval;
pub mod scalar;

pub use bessel::{
    bessel_i, bessel_i_enclosure, bessel_ratio_bound, recurrence_residual, EvalPrecision, Order,
};
pub use certificate::{
    decomposition_check, grid_sign_scan, sign_certificate, Certificate, Verdict,
};
pub use cheb::{eval_t, eval_u, ChebSeries};
pub use error::{Error, Result};
pub use exp_series::{
    cheb_sandwich, endpoint_gap, exp_cheb_coefficients, taylor_eval, taylor_sandwich, Enclosure,
};
pub use interval::Interval;
