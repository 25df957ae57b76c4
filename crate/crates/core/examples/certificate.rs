//! The sign certificate behind the bounds, checked three ways: exactly from
//! the ratio bound, by splitting the transformed polynomial into five
//! non-negative pieces, and by sampling G_N on a grid.

use chebexp::certificate::{decompose, grid_sign_scan, sign_certificate};

fn main() -> chebexp::Result<()> {
    for n in [1u32, 2, 3, 10, 64] {
        let c = sign_certificate(n)?;
        println!(
            "N = {n:<3} r <= {}/{}  {:?}  -> {:?}",
            c.ratio_bound.num, c.ratio_bound.den, c.conditions, c.verdict
        );
    }

    println!();
    for n in [1, 2, 5] {
        for t in [1e-3, 0.5, 2.0] {
            let d = decompose(n, t)?;
            let pieces: Vec<String> = d.pieces.iter().map(|p| format!("{p:.3e}")).collect();
            println!(
                "N = {n} t = {t:<6} lhs {:>12.6e}  A..E [{}]  residual {:.1e}",
                d.lhs,
                pieces.join(", "),
                d.residual
            );
        }
    }

    println!();
    for n in 1..=8 {
        println!(
            "N = {n}: (-1)^N G_N > 0 on the grid: {}",
            grid_sign_scan(n, -1e4, 200)?
        );
    }
    Ok(())
}
