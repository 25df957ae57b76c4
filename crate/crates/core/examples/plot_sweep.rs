//! CSV of the bracket and of e^x over a range of x, ready for plotting.
//!
//! ```text
//! cargo run --example plot_sweep > sweep.csv
//! ```

use chebexp::cli::{fmt_f64, sweep_rows, SweepArgs, SWEEP_HEADER};

fn main() -> chebexp::Result<()> {
    let args = SweepArgs {
        n: 2,
        x_min: -4.0,
        x_max: -1.01,
        points: 60,
        with_taylor: true,
        log_grid: false,
    };
    println!("{}", SWEEP_HEADER.join(","));
    for r in sweep_rows(&args)? {
        let opt = |v: Option<f64>| v.map(fmt_f64).unwrap_or_default();
        println!(
            "{},{},{},{},{},{}",
            fmt_f64(r.x),
            fmt_f64(r.lower),
            fmt_f64(r.upper),
            fmt_f64(r.exp_ref),
            opt(r.taylor_lower),
            opt(r.taylor_upper)
        );
    }
    Ok(())
}
