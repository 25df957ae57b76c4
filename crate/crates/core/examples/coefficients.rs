//! Chebyshev coefficients of e^x on [-1, 1] and how fast they fall off.
//!
//! ```text
//! cargo run --example coefficients -- 12
//! ```

use chebexp::bessel::EvalPrecision;
use chebexp::exp_cheb_coefficients;

fn main() -> chebexp::Result<()> {
    let n = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(12);
    let a = exp_cheb_coefficients(n, &EvalPrecision::default())?;
    println!("{:>3}  {:>24}  {:>12}", "k", "a_k", "a_k / a_{k-1}");
    for (k, c) in a.as_slice().iter().enumerate() {
        let ratio = if k >= 2 {
            format!("{:.6}", c / a.as_slice()[k - 1])
        } else {
            String::new()
        };
        println!("{k:>3}  {c:>24.17e}  {ratio:>12}");
    }
    Ok(())
}
