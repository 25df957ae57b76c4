//! Acceptance criteria, one PASS/FAIL line each. Tolerances and runtime limits
//! are fixed here; a criterion fails if it is violated or runs over its limit.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod common;

use std::time::{Duration, Instant};

use chebexp::bessel::{bessel_i, bessel_i_enclosure, recurrence_residual, EvalPrecision, Order};
use chebexp::certificate::{decompose, grid_sign_scan, reduction_identity_residuals, Certificate};
use chebexp::exp_series::{taylor_eval, taylor_sandwich, ExpExpansion};
use chebexp::grid;
use common::{exp_bounds, mp_rational, rational};

type Outcome = Result<String, String>;

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
    check: fn() -> Outcome,
}

fn run_cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("chebexp").chain(args.iter().copied());
    let code = chebexp::cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn sandwich_reproduction() -> Outcome {
    const X_MIN: f64 = -1e4;
    const X_MAX: f64 = -1.0 - 1e-6;
    const POINTS: usize = 400;
    let xs = grid::log_spaced_below_minus_one(X_MIN, X_MAX, POINTS).map_err(|e| e.to_string())?;
    let refs: Vec<_> = xs.iter().map(|&x| exp_bounds(x)).collect();
    let mut checked = 0;
    let mut violations = Vec::new();
    for n in 1..=16 {
        let ex = ExpExpansion::new(2 * n).map_err(|e| e.to_string())?;
        for (&x, (e_lo, e_hi)) in xs.iter().zip(&refs) {
            let enc = ex.enclose(n, x).map_err(|e| e.to_string())?;
            let (lo, hi) = ex.sandwich_precise(n, x).map_err(|e| e.to_string())?;
            let ok = rational(enc.lower) <= *e_lo
                && *e_hi <= rational(enc.upper)
                && mp_rational(&lo) < *e_lo
                && *e_hi < mp_rational(&hi);
            if !ok {
                violations.push(format!("N={n} x={x:e}"));
            }
            checked += 1;
        }
    }
    if violations.is_empty() {
        Ok(format!("{checked} (N, x) pairs bracketed, 0 violations"))
    } else {
        Err(format!(
            "{} violations, first: {}",
            violations.len(),
            violations[0]
        ))
    }
}

fn certificate_completeness() -> Outcome {
    let (code, out, err) = run_cli(&["certify", "--range", "1..64"]);
    let certs: Vec<Certificate> =
        serde_json::from_str(&out).map_err(|e| format!("{e}; stderr: {err}"))?;
    let accepted = certs.iter().filter(|c| c.accepted()).count();
    if code == 0 && certs.len() == 64 && accepted == 64 {
        Ok("64 of 64 accepted, exit 0".into())
    } else {
        Err(format!(
            "{accepted} of {} accepted, exit {code}",
            certs.len()
        ))
    }
}

fn reduction_identity() -> Outcome {
    const TOL: f64 = 1e-12;
    let xs = grid::uniform(-10.0, 10.0, 50).map_err(|e| e.to_string())?;
    let mut worst = 0.0f64;
    for n in 0..=32 {
        let rs = reduction_identity_residuals(n, &xs).map_err(|e| e.to_string())?;
        for (&x, &r) in xs.iter().zip(&rs) {
            if !(r <= TOL) {
                return Err(format!("residual {r:e} at N={n}, x={x}"));
            }
            worst = worst.max(r);
        }
    }
    Ok(format!("max relative residual {worst:.1e} <= {TOL:e}"))
}

fn bessel_estimates() -> Outcome {
    let p = EvalPrecision::default();
    for n in 0..=30u32 {
        for x in [0.1, 0.5, 1.0, 2.0] {
            let v = bessel_i(Order::new(n), x, &p).map_err(|e| e.to_string())?;
            let enc = bessel_i_enclosure(Order::new(n), x).map_err(|e| e.to_string())?;
            if !enc.contains_strictly(v) {
                return Err(format!(
                    "I_{n}({x}) = {v:e} not inside [{:e}, {:e}]",
                    enc.lo(),
                    enc.hi()
                ));
            }
        }
        let here = bessel_i(Order::new(n), 1.0, &p).map_err(|e| e.to_string())?;
        let next = bessel_i(Order::new(n + 1), 1.0, &p).map_err(|e| e.to_string())?;
        if !(5.0 * (n as f64 + 1.0) * next <= 4.0 * here) {
            return Err(format!("I_{}(1)/I_{n}(1) exceeds 4/(5({n}+1))", n + 1));
        }
    }
    Ok("124 enclosures strict, 31 ratio bounds hold".into())
}

fn recurrence() -> Outcome {
    const TOL: f64 = 1e-12;
    let p = EvalPrecision::default();
    let mut worst = 0.0f64;
    for n in 1..=30u32 {
        let res = recurrence_residual(Order::new(n), 1.0, &p).map_err(|e| e.to_string())?;
        let scale = n as f64 * bessel_i(Order::new(n), 1.0, &p).map_err(|e| e.to_string())?;
        let rel = res / scale;
        if !(rel <= TOL) {
            return Err(format!("relative residual {rel:e} at n={n}"));
        }
        worst = worst.max(rel);
    }
    Ok(format!("max relative residual {worst:.1e} <= {TOL:e}"))
}

fn sign_law() -> Outcome {
    for n in 1..=16 {
        if !grid_sign_scan(n, -1e4, 500).map_err(|e| e.to_string())? {
            return Err(format!("(-1)^N G_N not positive on the grid for N={n}"));
        }
    }
    Ok("(-1)^N G_N > 0 at 500 points for N = 1..16".into())
}

fn decomposition_identity() -> Outcome {
    const TOL: f64 = 1e-9;
    let mut cases = 0;
    let mut worst = 0.0f64;
    for n in 1..=16usize {
        for t in [1e-3, 0.1, 0.5, 1.0, 2.0, 5.0] {
            if (n + 1) as f64 * t > 40.0 {
                continue;
            }
            let d = decompose(n, t).map_err(|e| e.to_string())?;
            if !(d.residual <= TOL) {
                return Err(format!("residual {:e} at N={n}, t={t}", d.residual));
            }
            if let Some(k) = d.pieces.iter().position(|&p| !(p >= 0.0)) {
                return Err(format!(
                    "piece {} = {:e} < 0 at N={n}, t={t}",
                    "ABCDE".as_bytes()[k] as char,
                    d.pieces[k]
                ));
            }
            worst = worst.max(d.residual);
            cases += 1;
        }
    }
    Ok(format!(
        "{cases} (N, t) cases, max residual {worst:.1e}, all pieces >= 0"
    ))
}

fn near_minimax() -> Outcome {
    let (code, out, err) = run_cli(&["compare", "--n", "10", "--points", "1000"]);
    if code != 0 {
        return Err(format!("exit {code}: {err}"));
    }
    let mut reader = csv::Reader::from_reader(out.as_bytes());
    let mut rows = 0;
    for rec in reader.records() {
        let rec = rec.map_err(|e| e.to_string())?;
        let cheb: f64 = rec[1].parse().map_err(|_| "bad number".to_string())?;
        let taylor: f64 = rec[2].parse().map_err(|_| "bad number".to_string())?;
        if !(cheb <= taylor) {
            return Err(format!(
                "degree {}: cheb {cheb:e} > taylor {taylor:e}",
                &rec[0]
            ));
        }
        rows += 1;
    }
    if rows == 10 {
        Ok("10 rows, Chebyshev sup error <= Taylor sup error in each".into())
    } else {
        Err(format!("expected 10 rows, got {rows}"))
    }
}

fn taylor_baseline() -> Outcome {
    let xs = grid::uniform(-10.0, -1e-3, 200).map_err(|e| e.to_string())?;
    let mut unordered_doubles = 0;
    for &x in &xs {
        let (e_lo, e_hi) = exp_bounds(x);
        for n in (1..=15).step_by(2) {
            let s = taylor_sandwich(n, x).map_err(|e| e.to_string())?;
            if !(rational(s.lower) <= e_lo && e_hi <= rational(s.upper)) {
                return Err(format!("T_{n}({x}) <= e^x <= T_{}({x}) violated", n + 1));
            }
            let (lo, hi) = (taylor_eval(n, x), taylor_eval(n + 1, x));
            let horner_err = 64.0 * f64::EPSILON * (-x).exp();
            if !((lo - s.lower).abs() <= horner_err && (hi - s.upper).abs() <= horner_err) {
                return Err(format!(
                    "double-precision Taylor values disagree with the bracket at N={n}, x={x}"
                ));
            }
            if !(rational(lo) <= e_lo && e_hi <= rational(hi)) {
                unordered_doubles += 1;
            }
        }
    }
    Ok(format!(
        "1600 certified brackets, 0 violations ({unordered_doubles} pairs closer than the rounding of plain doubles)"
    ))
}

fn main() {
    let criteria = [
        Criterion {
            id: 1,
            name: "sandwich reproduction",
            limit: Duration::from_secs(10),
            check: sandwich_reproduction,
        },
        Criterion {
            id: 2,
            name: "certificate completeness",
            limit: Duration::from_secs(1),
            check: certificate_completeness,
        },
        Criterion {
            id: 3,
            name: "reduction identity",
            limit: Duration::from_secs(5),
            check: reduction_identity,
        },
        Criterion {
            id: 4,
            name: "Bessel estimates",
            limit: Duration::from_secs(1),
            check: bessel_estimates,
        },
        Criterion {
            id: 5,
            name: "Bessel recurrence",
            limit: Duration::from_secs(1),
            check: recurrence,
        },
        Criterion {
            id: 6,
            name: "sign law",
            limit: Duration::from_secs(5),
            check: sign_law,
        },
        Criterion {
            id: 7,
            name: "decomposition identity",
            limit: Duration::from_secs(2),
            check: decomposition_identity,
        },
        Criterion {
            id: 8,
            name: "near-minimax superiority",
            limit: Duration::from_secs(2),
            check: near_minimax,
        },
        Criterion {
            id: 9,
            name: "Taylor sandwich baseline",
            limit: Duration::from_secs(1),
            check: taylor_baseline,
        },
    ];
    let filter: Vec<String> = std::env::args()
        .skip(1)
        .filter(|a| !a.starts_with('-'))
        .collect();
    let mut failed = 0;
    for c in &criteria {
        if !filter.is_empty() && !filter.iter().any(|f| c.name.contains(f.as_str())) {
            continue;
        }
        let start = Instant::now();
        let outcome = (c.check)();
        let took = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if took <= c.limit => (true, d),
            Ok(d) => (false, format!("{d}; over the time limit")),
            Err(d) => (false, d),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "{} [{}] {}: {} ({:.3} s, limit {} s)",
            if ok { "PASS" } else { "FAIL" },
            c.id,
            c.name,
            detail,
            took.as_secs_f64(),
            c.limit.as_secs()
        );
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
