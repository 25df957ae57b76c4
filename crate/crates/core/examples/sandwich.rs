//! Certified brackets f_{2n-1}(x) <= e^x <= f_{2n}(x) for x < -1.
//!
//! The gap collapses towards x = -1 far below double resolution; the bounds
//! stay ordered because both partial sums are formed in multiprecision and
//! rounded outward.

use chebexp::exp_series::ExpExpansion;

fn main() -> chebexp::Result<()> {
    for n in [1, 2, 4, 8] {
        let ex = ExpExpansion::new(2 * n)?;
        println!(
            "n = {n} (degrees {} and {}, {} bits)",
            2 * n - 1,
            2 * n,
            ex.bits()
        );
        for x in [-1.000_001, -1.1, -2.0, -5.0, -50.0] {
            let e = ex.enclose(n, x)?;
            println!(
                "  x = {x:<9} {:>+.17e} <= {:.17e} <= {:+.17e}",
                e.lower,
                x.exp(),
                e.upper
            );
        }
    }
    Ok(())
}
