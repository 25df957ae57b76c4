//! f_N - f_N' collapses to I_N(1) U_N + I_{N+1}(1) U_{N-1}.

use chebexp::certificate::{
    g_bits, g_closed_form_precise, g_proof_form, g_via_reduction_precise,
    reduction_identity_residuals,
};
use chebexp::scalar::Real;

fn main() -> chebexp::Result<()> {
    for n in [1, 2, 3, 6] {
        let bits = g_bits(n);
        let red = g_via_reduction_precise(n, bits)?;
        let closed = g_closed_form_precise(n, bits)?;
        let show = |c: &[chebexp::scalar::MpFloat]| {
            c.iter()
                .map(|v| format!("{:+.6e}", v.nearest_f64()))
                .collect::<Vec<_>>()
                .join(" ")
        };
        println!("N = {n}");
        println!("  f_N - f_N'   {}", show(red.coeffs()));
        println!("  closed form  {}", show(closed.coeffs()));
        let proof: Vec<String> = g_proof_form(n)?
            .coeffs()
            .iter()
            .map(|v| format!("{v:+.6e}"))
            .collect();
        println!("  split form   {}", proof.join(" "));
        let xs = [-10.0, -2.0, -1.0, 0.0, 0.5, 3.0];
        let worst = reduction_identity_residuals(n, &xs)?
            .into_iter()
            .fold(0.0, f64::max);
        println!("  max relative residual at {xs:?}: {worst:.1e}");
    }
    Ok(())
}
