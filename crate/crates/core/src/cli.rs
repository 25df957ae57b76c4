//! The `chebexp` command line.
//!
//! Data goes to standard output or `--output`; diagnostics go to the error
//! stream. Exit codes: 0 on success, 1 when `certify` rejects some degree, 2 on
//! invalid input. CSV numbers carry 17 significant digits; JSON numbers use the
//! shortest representation that parses back to the same `f64`.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::bessel::EvalPrecision;
use crate::certificate::{certify_range, Certificate};
use crate::error::{domain, Error, Result};
use crate::exp_series::{
    exp_cheb_coefficients, taylor_sandwich, Enclosure, ExpExpansion, SupError,
};
use crate::grid;

/// Largest `x_max` accepted by `sweep`.
pub const SWEEP_X_MAX: f64 = -1.0 - 1e-6;

/// Header of the `sweep` CSV.
pub const SWEEP_HEADER: [&str; 6] = ["x", "lower", "upper", "exp", "taylor_lower", "taylor_upper"];

#[derive(Debug, Parser)]
#[command(
    name = "chebexp",
    version,
    about = "Certified Chebyshev bounds for e^x on (-inf, -1)"
)]
pub struct Cli {
    /// Output format; `certify` defaults to json, everything else to csv.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write data here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Chebyshev coefficients a_0..a_n of e^x on [-1, 1].
    Coeffs {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
    },
    /// Certified bracket f_{2n-1}(x) <= e^x <= f_{2n}(x) for x < -1.
    Enclose {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
    },
    /// Brackets over a grid of x, optionally with the Taylor baseline.
    Sweep(SweepArgs),
    /// Exact check of the sign-certificate conditions.
    Certify {
        #[arg(
            long,
            allow_negative_numbers = true,
            conflicts_with = "range",
            required_unless_present = "range"
        )]
        n: Option<i64>,
        /// Inclusive degree range `lo..hi`.
        #[arg(long)]
        range: Option<String>,
    },
    /// Grid sup errors of the Chebyshev and Taylor polynomials on [-1, 1].
    Compare {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, allow_negative_numbers = true)]
        points: i64,
    },
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub n: i64,
    #[arg(long, allow_negative_numbers = true)]
    pub x_min: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub x_max: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub points: i64,
    /// Add the Taylor sandwich of degrees 2n-1 and 2n.
    #[arg(long)]
    pub with_taylor: bool,
    /// Space the grid geometrically in the distance from -1.
    #[arg(long)]
    pub log_grid: bool,
}

/// One line of the `sweep` output.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub x: f64,
    pub lower: f64,
    pub upper: f64,
    #[serde(rename = "exp")]
    pub exp_ref: f64,
    pub taylor_lower: Option<f64>,
    pub taylor_upper: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CoeffRow {
    pub index: usize,
    pub coefficient: f64,
}

fn degree(n: i64, min: i64, what: &str) -> Result<usize> {
    if n < min {
        return Err(domain(format!("{what} must be at least {min}, got {n}")));
    }
    usize::try_from(n).map_err(|_| domain(format!("{what} = {n} is too large")))
}

/// Degree range `lo..hi`, inclusive at both ends.
pub fn parse_range(s: &str) -> Result<(u32, u32)> {
    let bad = || domain(format!("expected a range lo..hi, got {s:?}"));
    let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
    let lo: u32 = lo.trim().parse().map_err(|_| bad())?;
    let hi: u32 = hi.trim().parse().map_err(|_| bad())?;
    if lo == 0 || lo > hi {
        return Err(domain(format!(
            "the range needs 1 <= lo <= hi, got {lo}..{hi}"
        )));
    }
    Ok((lo, hi))
}

/// 17 significant digits in scientific notation.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map(fmt_f64).unwrap_or_default()
}

fn csv_table<I>(header: &[&str], rows: I) -> Result<String>
where
    I: IntoIterator<Item = Vec<String>>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Domain(e.to_string());
    w.write_record(header).map_err(io)?;
    for row in rows {
        w.write_record(&row).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Domain(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is ASCII"))
}

fn json<T: Serialize + ?Sized>(v: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(v).map_err(|e| Error::Domain(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

pub fn sweep_rows(args: &SweepArgs) -> Result<Vec<SweepRow>> {
    let n = degree(args.n, 1, "n")?;
    let points = degree(args.points, 2, "points")?;
    if !(args.x_max <= SWEEP_X_MAX) {
        return Err(domain(format!(
            "the bounds are certified on (-inf, -1) only; x_max must be <= -1 - 1e-6, got {}",
            args.x_max
        )));
    }
    if !(args.x_min < args.x_max && args.x_min.is_finite()) {
        return Err(domain(format!(
            "need x_min < x_max, got {} and {}",
            args.x_min, args.x_max
        )));
    }
    let xs = if args.log_grid {
        grid::log_spaced_below_minus_one(args.x_min, args.x_max, points)?
    } else {
        grid::uniform(args.x_min, args.x_max, points)?
    };
    let expansion = ExpExpansion::new(2 * n)?;
    xs.into_iter()
        .map(|x| {
            let e = expansion.enclose(n, x)?;
            let exp_ref = expansion.lift(x)?.exp();
            let taylor = if args.with_taylor {
                Some(taylor_sandwich(2 * n - 1, x)?)
            } else {
                None
            };
            Ok(SweepRow {
                x,
                lower: e.lower,
                upper: e.upper,
                exp_ref: crate::scalar::Real::nearest_f64(&exp_ref),
                taylor_lower: taylor.map(|t| t.lower),
                taylor_upper: taylor.map(|t| t.upper),
            })
        })
        .collect()
}

/// Parses `sweep` CSV back into rows.
pub fn parse_sweep_csv(text: &str) -> Result<Vec<SweepRow>> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    r.deserialize()
        .map(|row| row.map_err(|e| Error::Domain(e.to_string())))
        .collect()
}

pub fn coeff_rows(n: i64) -> Result<Vec<CoeffRow>> {
    let n = degree(n, 0, "n")?;
    let c = exp_cheb_coefficients(n, &EvalPrecision::default())?;
    Ok(c.as_slice()
        .iter()
        .enumerate()
        .map(|(index, &coefficient)| CoeffRow { index, coefficient })
        .collect())
}

pub fn enclosure(n: i64, x: f64) -> Result<Enclosure> {
    let n = degree(n, 1, "n")?;
    crate::exp_series::cheb_sandwich(n, x)
}

pub fn certificates(n: Option<i64>, range: Option<&str>) -> Result<Vec<Certificate>> {
    let (lo, hi) = match (n, range) {
        (Some(n), None) => {
            let n = u32::try_from(degree(n, 1, "n")?).map_err(|_| domain("n is too large"))?;
            (n, n)
        }
        (None, Some(r)) => parse_range(r)?,
        _ => return Err(domain("give exactly one of --n and --range")),
    };
    certify_range(lo, hi)
}

pub fn compare_rows(n: i64, points: i64) -> Result<Vec<SupError>> {
    let n = degree(n, 1, "n")?;
    let points = degree(points, 100, "points")?;
    let mut rows = ExpExpansion::new(n)?.sup_errors(points)?;
    rows.remove(0);
    Ok(rows)
}

/// Renders the command's data and reports whether it succeeded.
fn render(cmd: &Command, format: Option<Format>) -> Result<(String, bool)> {
    let csv_out = |f: Format| f == Format::Csv;
    let f = format.unwrap_or(Format::Csv);
    let text = match cmd {
        Command::Coeffs { n } => {
            let rows = coeff_rows(*n)?;
            if csv_out(f) {
                csv_table(
                    &["index", "coefficient"],
                    rows.iter()
                        .map(|r| vec![r.index.to_string(), fmt_f64(r.coefficient)]),
                )?
            } else {
                json(&rows)?
            }
        }
        Command::Enclose { n, x } => {
            let e = enclosure(*n, *x)?;
            if csv_out(f) {
                csv_table(
                    &["x", "lower", "upper", "lower_degree", "upper_degree"],
                    [vec![
                        fmt_f64(e.x),
                        fmt_f64(e.lower),
                        fmt_f64(e.upper),
                        e.lower_degree.to_string(),
                        e.upper_degree.to_string(),
                    ]],
                )?
            } else {
                json(&e)?
            }
        }
        Command::Sweep(args) => {
            let rows = sweep_rows(args)?;
            if csv_out(f) {
                csv_table(
                    &SWEEP_HEADER,
                    rows.iter().map(|r| {
                        vec![
                            fmt_f64(r.x),
                            fmt_f64(r.lower),
                            fmt_f64(r.upper),
                            fmt_f64(r.exp_ref),
                            fmt_opt(r.taylor_lower),
                            fmt_opt(r.taylor_upper),
                        ]
                    }),
                )?
            } else {
                json(&rows)?
            }
        }
        Command::Certify { n, range } => {
            let certs = certificates(*n, range.as_deref())?;
            let ok = certs.iter().all(Certificate::accepted);
            let text = if format.unwrap_or(Format::Json) == Format::Json {
                json(&certs)?
            } else {
                let mut s = String::new();
                csv_table(
                    &[
                        "n",
                        "num",
                        "den",
                        "unit_quadratic",
                        "shifted_quadratic",
                        "leading_positive",
                        "verdict",
                    ],
                    certs.iter().map(|c| {
                        vec![
                            c.n.to_string(),
                            c.ratio_bound.num.to_string(),
                            c.ratio_bound.den.to_string(),
                            c.conditions.unit_quadratic.to_string(),
                            c.conditions.shifted_quadratic.to_string(),
                            c.conditions.leading_positive.to_string(),
                            if c.accepted() { "accepted" } else { "rejected" }.to_string(),
                        ]
                    }),
                )
                .map(|t| s.push_str(&t))?;
                s
            };
            return Ok((text, ok));
        }
        Command::Compare { n, points } => {
            let rows = compare_rows(*n, *points)?;
            if csv_out(f) {
                csv_table(
                    &["degree", "cheb_sup_err", "taylor_sup_err"],
                    rows.iter()
                        .map(|r| vec![r.degree.to_string(), fmt_f64(r.cheb), fmt_f64(r.taylor)]),
                )?
            } else {
                json(&rows)?
            }
        }
    };
    Ok((text, true))
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let (text, ok) = match render(&cli.command, cli.format) {
        Ok(out) => out,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return 2;
        }
    };
    let written = match &cli.output {
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => stdout.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(msg) = written {
        let _ = writeln!(stderr, "error: {msg}");
        return 2;
    }
    if ok {
        0
    } else {
        let mut msg = String::from("error: some degrees were rejected:");
        if let Command::Certify { n, range } = &cli.command {
            for c in certificates(*n, range.as_deref()).unwrap_or_default() {
                if !c.accepted() {
                    let _ = write!(msg, " {}", c.n);
                }
            }
        }
        let _ = writeln!(stderr, "{msg}");
        1
    }
}
