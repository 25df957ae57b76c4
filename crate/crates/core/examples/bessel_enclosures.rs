//! I_n(x) from its power series next to the elementary two-sided estimate.

use chebexp::bessel::{bessel_ratio_bound, sharpened_ratio_bound, EvalPrecision, RatioForm};
use chebexp::{bessel_i, bessel_i_enclosure, Order};

fn main() -> chebexp::Result<()> {
    let p = EvalPrecision::default();
    for x in [0.1, 0.5, 1.0, 2.0] {
        println!("x = {x}");
        for n in [0u32, 1, 2, 5, 10, 20] {
            let v = bessel_i(Order::new(n), x, &p)?;
            let e = bessel_i_enclosure(Order::new(n), x)?;
            println!("  I_{n:<2} = {v:.15e}  in [{:.6e}, {:.6e}]", e.lo(), e.hi());
        }
    }

    println!("\nI_(n+1)(1) / I_n(1) against its bounds");
    for n in 0u32..=10 {
        let r = bessel_i(Order::new(n + 1), 1.0, &p)? / bessel_i(Order::new(n), 1.0, &p)?;
        let cosh = bessel_ratio_bound(Order::new(n), 1.0, RatioForm::Cosh)?;
        let sharp = sharpened_ratio_bound(Order::new(n));
        println!(
            "  n = {n:<2} ratio {r:.6}  cosh bound {cosh:.6}  {}/{} = {:.6}",
            sharp.num,
            sharp.den,
            sharp.to_f64()
        );
    }
    Ok(())
}
