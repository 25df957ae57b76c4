//! Uniform error on [-1, 1] of the truncated Chebyshev series against the
//! Taylor polynomial of the same degree.

use chebexp::exp_series::ExpExpansion;

fn main() -> chebexp::Result<()> {
    let rows = ExpExpansion::new(16)?.sup_errors(1000)?;
    println!(
        "{:>6}  {:>12}  {:>12}  {:>8}",
        "degree", "chebyshev", "taylor", "ratio"
    );
    for r in &rows[1..] {
        println!(
            "{:>6}  {:>12.4e}  {:>12.4e}  {:>8.1}",
            r.degree,
            r.cheb,
            r.taylor,
            r.taylor / r.cheb
        );
    }
    Ok(())
}
