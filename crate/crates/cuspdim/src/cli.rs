//! Command-line front end over the library solvers.
//!
//! Every command loads a presentation from `--config` (a JSON path or
//! `preset:NAME`), runs one solver and emits CSV or JSON. Rows are
//! formatted into a single buffer written in one call, so identical
//! invocations produce byte-identical files. Reals print with 17
//! significant digits; counts print bare.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::parallel::Parallelism;
use crate::pressure::{gibbs_stats, pressure, PotentialParams, TransferSystem};
use crate::schottky::GroupPresentation;
use crate::spectrum::{
    brute_force_oracle, distortion_exponent, hausdorff_dim, solve_spectrum_point, spectrum_grid,
    SpectrumPoint,
};

/// Parses `argv`, runs the selected command and returns the process exit
/// code: 0 success, 1 validation failure, 2 numerical non-convergence,
/// 3 usage error. Diagnostics go to stderr as a single line.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) if matches!(err.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{err}");
            return 0;
        }
        Err(err) => {
            let rendered = err.to_string();
            let line = rendered
                .lines()
                .find(|l| !l.trim().is_empty())
                .unwrap_or("malformed arguments");
            eprintln!("usage error: {}", line.trim_start_matches("error: "));
            return 3;
        }
    };
    match dispatch(cli) {
        Ok(()) => 0,
        Err(err) => {
            let msg = err.to_string().replace('\n', " | ");
            eprintln!("error: {msg}");
            err.exit_code()
        }
    }
}

#[derive(Parser)]
#[command(
    name = "cuspdim",
    version,
    about = "Hausdorff dimension and cusp-winding spectra of generalized Schottky groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a group configuration and print its validation report.
    Validate(ValidateArgs),
    /// Hausdorff dimension of the conical limit set (Bowen root).
    Dim(DimArgs),
    /// Pressure and Gibbs statistics at one parameter point (q, b, alpha).
    Pressure(PressureArgs),
    /// Spectrum points b(alpha) for one target or a grid of targets.
    Spectrum(SpectrumArgs),
    /// Power-law fit of the parabolic distortion, one row per cusp.
    Distortion(DistortionArgs),
    /// Grid-scan localization of a spectrum point, as a cross-check.
    Oracle(OracleArgs),
}

#[derive(Args)]
struct Common {
    /// Group configuration: path to a JSON file, or `preset:NAME`.
    #[arg(long, value_name = "PATH|preset:NAME")]
    config: String,
    /// Truncation: largest parabolic power kept in the alphabet.
    #[arg(long = "L", value_name = "N", default_value_t = 100)]
    l: u32,
    /// Write output to this file instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct ValidateArgs {
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct DimArgs {
    #[command(flatten)]
    common: Common,
    /// Bisection bracket width at which the root search stops.
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
}

#[derive(Args)]
struct PressureArgs {
    #[command(flatten)]
    common: Common,
    /// Cusp weights, comma-separated, one per cusp.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    q: Vec<f64>,
    /// Geometric weight on -log|f~'|.
    #[arg(long, allow_hyphen_values = true)]
    b: f64,
    /// Winding offsets, comma-separated; defaults to zeros.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    alpha: Option<Vec<f64>>,
}

#[derive(Args)]
struct SpectrumArgs {
    #[command(flatten)]
    common: Common,
    /// Newton residual tolerance.
    #[arg(long = "newton-tol", default_value_t = 1e-10)]
    newton_tol: f64,
    /// One target alpha, comma-separated over cusps.
    #[arg(long, value_delimiter = ',', conflicts_with = "alpha_grid")]
    alpha: Option<Vec<f64>>,
    /// Axis specs `start:stop:step` joined by `x`, one axis per cusp.
    #[arg(long = "alpha-grid", value_name = "SPEC")]
    alpha_grid: Option<String>,
}

#[derive(Args)]
struct DistortionArgs {
    #[command(flatten)]
    common: Common,
    /// Cusp index; omitted means every cusp.
    #[arg(long)]
    cusp: Option<usize>,
    /// Smallest block length in the fit.
    #[arg(long = "l-lo", default_value_t = 20)]
    l_lo: u32,
    /// Largest block length in the fit.
    #[arg(long = "l-hi", default_value_t = 200)]
    l_hi: u32,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    common: Common,
    /// Target alpha, comma-separated over cusps.
    #[arg(long, value_delimiter = ',', required = true)]
    alpha: Vec<f64>,
    /// Newton tolerance for the centering solve when grids are omitted.
    #[arg(long = "newton-tol", default_value_t = 1e-10)]
    newton_tol: f64,
    /// q grid axes `start:stop:step` joined by `x`; defaults to a grid of
    /// step 0.05 centered on the Newton solution.
    #[arg(long = "q-grid", value_name = "SPEC")]
    q_grid: Option<String>,
    /// b grid, a single `start:stop:step` axis; same default.
    #[arg(long = "b-grid", value_name = "SPEC")]
    b_grid: Option<String>,
}

fn dispatch(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Validate(args) => cmd_validate(&args),
        Command::Dim(args) => cmd_dim(&args),
        Command::Pressure(args) => cmd_pressure(&args),
        Command::Spectrum(args) => cmd_spectrum(&args),
        Command::Distortion(args) => cmd_distortion(&args),
        Command::Oracle(args) => cmd_oracle(&args),
    }
}

fn load_config(spec: &str) -> Result<GroupPresentation> {
    match spec.strip_prefix("preset:") {
        Some(name) => GroupPresentation::preset(name),
        None => GroupPresentation::load_path(std::path::Path::new(spec)),
    }
}

/// Expands a grid spec into points: per-axis `start:stop:step` joined by
/// `x`, Cartesian product in row-major order (last axis fastest). The
/// endpoint is included when step divides the span to within 1e-12.
pub fn parse_grid(spec: &str) -> Result<Vec<Vec<f64>>> {
    let axes: Vec<Vec<f64>> = spec.split('x').map(parse_axis).collect::<Result<_>>()?;
    let mut points: Vec<Vec<f64>> = vec![Vec::new()];
    for axis in &axes {
        let mut next = Vec::with_capacity(points.len() * axis.len());
        for stem in &points {
            for &v in axis {
                let mut row = stem.clone();
                row.push(v);
                next.push(row);
            }
        }
        points = next;
    }
    Ok(points)
}

fn parse_axis(axis: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = axis.split(':').collect();
    if parts.len() != 3 {
        return Err(Error::Usage(format!(
            "grid axis '{axis}' is not of the form start:stop:step"
        )));
    }
    let num = |s: &str| -> Result<f64> {
        s.trim()
            .parse::<f64>()
            .map_err(|_| Error::Usage(format!("'{s}' is not a number in grid axis '{axis}'")))
    };
    let (start, stop, step) = (num(parts[0])?, num(parts[1])?, num(parts[2])?);
    if !(start.is_finite() && stop.is_finite() && step.is_finite()) {
        return Err(Error::Usage(format!("grid axis '{axis}' must be finite")));
    }
    if step <= 0.0 {
        return Err(Error::Usage(format!(
            "grid step must be positive in '{axis}'"
        )));
    }
    if start > stop {
        return Err(Error::Usage(format!(
            "grid start exceeds stop in '{axis}'"
        )));
    }
    let quotient = (stop - start) / step;
    let count = if (quotient - quotient.round()).abs() <= 1e-12 * quotient.abs().max(1.0) {
        quotient.round() as usize
    } else {
        quotient.floor() as usize
    };
    Ok((0..=count).map(|k| start + step * k as f64).collect())
}

fn fmt_real(v: f64) -> String {
    format!("{v:.16e}")
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn json_text<T: Serialize>(records: &T) -> String {
    let mut text = serde_json::to_string_pretty(records).expect("records serialize");
    text.push('\n');
    text
}

fn cmd_validate(args: &ValidateArgs) -> Result<()> {
    // Load without the validity gate so a failing config still yields a
    // full report; schema errors remain fatal.
    let presentation = match args.common.config.strip_prefix("preset:") {
        Some(name) => GroupPresentation::preset(name)?,
        None => {
            let json = std::fs::read_to_string(&args.common.config)?;
            match GroupPresentation::load(&json) {
                Ok(p) => p,
                Err(Error::Validation { report }) => {
                    emit(&args.common.out, &format!("{report}\n"))?;
                    return Err(Error::Validation {
                        report: "see report".into(),
                    });
                }
                Err(other) => return Err(other),
            }
        }
    };
    let report = presentation.validate();
    let text = match args.common.format {
        Format::Csv => {
            let mut buf = String::new();
            buf.push_str("check,passed,detail\n");
            for item in &report.items {
                let _ = writeln!(
                    buf,
                    "{},{},{}",
                    item.label,
                    item.passed,
                    item.detail.replace(',', ";")
                );
            }
            buf
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Item<'a> {
                check: &'a str,
                passed: bool,
                detail: &'a str,
            }
            let items: Vec<Item> = report
                .items
                .iter()
                .map(|i| Item {
                    check: &i.label,
                    passed: i.passed,
                    detail: &i.detail,
                })
                .collect();
            json_text(&items)
        }
    };
    emit(&args.common.out, &text)
}

fn cmd_dim(args: &DimArgs) -> Result<()> {
    let presentation = load_config(&args.common.config)?;
    let dim = hausdorff_dim(&presentation, args.common.l, args.tol)?;
    let text = match args.common.format {
        Format::Csv => format!(
            "s,low,high,L,residual\n{},{},{},{},{}\n",
            fmt_real(dim.s),
            fmt_real(dim.bracket.0),
            fmt_real(dim.bracket.1),
            dim.l,
            fmt_real(dim.residual)
        ),
        Format::Json => {
            #[derive(Serialize)]
            struct Record {
                s: f64,
                low: f64,
                high: f64,
                #[serde(rename = "L")]
                l: u32,
                residual: f64,
                widened: bool,
            }
            json_text(&Record {
                s: dim.s,
                low: dim.bracket.0,
                high: dim.bracket.1,
                l: dim.l,
                residual: dim.residual,
                widened: dim.widened,
            })
        }
    };
    emit(&args.common.out, &text)
}

fn cmd_pressure(args: &PressureArgs) -> Result<()> {
    let presentation = load_config(&args.common.config)?;
    let m = presentation.m();
    let alpha = args.alpha.clone().unwrap_or_else(|| vec![0.0; m]);
    let params = PotentialParams::new(args.q.clone(), args.b, alpha)?;
    let system = TransferSystem::build(&presentation, args.common.l, Parallelism::Parallel)?;
    let result = pressure(&system, &params)?;
    let stats = gibbs_stats(&system, &params)?;

    let text = match args.common.format {
        Format::Csv => {
            let mut buf = String::from("value");
            for i in 1..=m {
                let _ = write!(buf, ",a_int_{i}");
            }
            buf.push_str(",lambda,entropy,distortion_bound,tail_estimate,L,iters\n");
            let _ = write!(buf, "{}", fmt_real(result.value));
            for a in &stats.a_integrals {
                let _ = write!(buf, ",{}", fmt_real(*a));
            }
            let _ = writeln!(
                buf,
                ",{},{},{},{},{},{}",
                fmt_real(stats.lyapunov),
                fmt_real(stats.entropy),
                fmt_real(result.distortion_bound),
                fmt_real(result.tail_estimate.unwrap_or(f64::NAN)),
                result.l,
                result.iterations
            );
            buf
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Record<'a> {
                value: f64,
                a_int: &'a [f64],
                lambda: f64,
                entropy: f64,
                distortion_bound: f64,
                tail_estimate: Option<f64>,
                #[serde(rename = "L")]
                l: u32,
                iters: u64,
            }
            json_text(&Record {
                value: result.value,
                a_int: &stats.a_integrals,
                lambda: stats.lyapunov,
                entropy: stats.entropy,
                distortion_bound: result.distortion_bound,
                tail_estimate: result.tail_estimate,
                l: result.l,
                iters: result.iterations as u64,
            })
        }
    };
    emit(&args.common.out, &text)
}

fn spectrum_header(m: usize) -> String {
    let mut head = String::new();
    for i in 1..=m {
        let _ = write!(head, "alpha_{i},");
    }
    for i in 1..=m {
        let _ = write!(head, "q_{i},");
    }
    head.push_str("b,residual_p,residual_grad_max,lambda,entropy,L,iters\n");
    head
}

fn grad_max(point: &SpectrumPoint) -> f64 {
    point.residual_grad.iter().fold(0.0f64, |acc, g| acc.max(*g))
}

fn spectrum_row(point: &SpectrumPoint) -> String {
    let mut row = String::new();
    for a in &point.alpha {
        let _ = write!(row, "{},", fmt_real(*a));
    }
    for q in &point.q {
        let _ = write!(row, "{},", fmt_real(*q));
    }
    let _ = writeln!(
        row,
        "{},{},{},{},{},{},{}",
        fmt_real(point.b),
        fmt_real(point.residual_p),
        fmt_real(grad_max(point)),
        fmt_real(point.lyapunov),
        fmt_real(point.entropy),
        point.l,
        point.newton_iterations
    );
    row
}

#[derive(Serialize)]
struct SpectrumRecord<'a> {
    alpha: &'a [f64],
    q: &'a [f64],
    b: f64,
    residual_p: f64,
    residual_grad_max: f64,
    lambda: f64,
    entropy: f64,
    #[serde(rename = "L")]
    l: u32,
    iters: u32,
}

fn cmd_spectrum(args: &SpectrumArgs) -> Result<()> {
    let presentation = load_config(&args.common.config)?;
    let m = presentation.m();
    let targets: Vec<Vec<f64>> = match (&args.alpha, &args.alpha_grid) {
        (Some(alpha), None) => vec![alpha.clone()],
        (None, Some(spec)) => {
            let points = parse_grid(spec)?;
            if points.first().map(Vec::len) != Some(m) {
                return Err(Error::Usage(format!(
                    "alpha grid needs {m} axes joined by 'x', one per cusp"
                )));
            }
            points
        }
        _ => {
            return Err(Error::Usage(
                "spectrum needs exactly one of --alpha or --alpha-grid".into(),
            ))
        }
    };

    let results = spectrum_grid(
        &presentation,
        &targets,
        args.common.l,
        args.newton_tol,
        Parallelism::Parallel,
    )?;

    let solved: Vec<&SpectrumPoint> = results
        .iter()
        .zip(&targets)
        .filter_map(|(res, alpha)| match res {
            Ok(point) => Some(point),
            Err(err) => {
                eprintln!("warning: alpha = {alpha:?} skipped: {err}");
                None
            }
        })
        .collect();

    let text = match args.common.format {
        Format::Csv => {
            let mut buf = spectrum_header(m);
            for point in &solved {
                buf.push_str(&spectrum_row(point));
            }
            buf
        }
        Format::Json => {
            let records: Vec<SpectrumRecord> = solved
                .iter()
                .map(|p| SpectrumRecord {
                    alpha: &p.alpha,
                    q: &p.q,
                    b: p.b,
                    residual_p: p.residual_p,
                    residual_grad_max: grad_max(p),
                    lambda: p.lyapunov,
                    entropy: p.entropy,
                    l: p.l,
                    iters: p.newton_iterations,
                })
                .collect();
            json_text(&records)
        }
    };
    emit(&args.common.out, &text)
}

fn cmd_distortion(args: &DistortionArgs) -> Result<()> {
    let presentation = load_config(&args.common.config)?;
    let m = presentation.m();
    let cusps: Vec<usize> = match args.cusp {
        Some(c) if c >= m => {
            return Err(Error::Usage(format!(
                "cusp {c} out of range for {m} cusp(s)"
            )))
        }
        Some(c) => vec![c],
        None => (0..m).collect(),
    };
    let fits: Vec<_> = cusps
        .iter()
        .map(|&c| distortion_exponent(&presentation, c, args.l_lo, args.l_hi).map(|f| (c, f)))
        .collect::<Result<_>>()?;

    let text = match args.common.format {
        Format::Csv => {
            let mut buf = String::from("cusp,slope,intercept,l_lo,l_hi\n");
            for (c, fit) in &fits {
                let _ = writeln!(
                    buf,
                    "{},{},{},{},{}",
                    c,
                    fmt_real(fit.slope),
                    fmt_real(fit.intercept),
                    args.l_lo,
                    args.l_hi
                );
            }
            buf
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Record {
                cusp: usize,
                slope: f64,
                intercept: f64,
                l_lo: u32,
                l_hi: u32,
            }
            let records: Vec<Record> = fits
                .iter()
                .map(|(c, f)| Record {
                    cusp: *c,
                    slope: f.slope,
                    intercept: f.intercept,
                    l_lo: args.l_lo,
                    l_hi: args.l_hi,
                })
                .collect();
            json_text(&records)
        }
    };
    emit(&args.common.out, &text)
}

/// Inclusive arange used for the auto-centered oracle grids.
fn centered_axis(lo: f64, hi: f64, step: f64) -> Vec<f64> {
    let mut axis = Vec::new();
    let mut k = 0u32;
    loop {
        let v = lo + step * f64::from(k);
        if v > hi + 1e-12 {
            break;
        }
        axis.push(v);
        k += 1;
    }
    axis
}

fn cmd_oracle(args: &OracleArgs) -> Result<()> {
    let presentation = load_config(&args.common.config)?;
    let m = presentation.m();
    let (q_grid, b_grid) = match (&args.q_grid, &args.b_grid) {
        (Some(q_spec), Some(b_spec)) => {
            let q_points = parse_grid(q_spec)?;
            if q_points.first().map(Vec::len) != Some(m) {
                return Err(Error::Usage(format!(
                    "q grid needs {m} axes joined by 'x', one per cusp"
                )));
            }
            let b_points = parse_grid(b_spec)?;
            if b_points.first().map(Vec::len) != Some(1) {
                return Err(Error::Usage("b grid must be a single axis".into()));
            }
            (q_points, b_points.into_iter().map(|p| p[0]).collect())
        }
        (None, None) => {
            let center = solve_spectrum_point(
                &presentation,
                &args.alpha,
                args.common.l,
                args.newton_tol,
            )?;
            let axes: Vec<Vec<f64>> = center
                .q
                .iter()
                .map(|&q| centered_axis((q - 0.5).max(0.05), q + 0.5, 0.05))
                .collect();
            let mut q_points: Vec<Vec<f64>> = vec![Vec::new()];
            for axis in &axes {
                let mut next = Vec::with_capacity(q_points.len() * axis.len());
                for stem in &q_points {
                    for &v in axis {
                        let mut row = stem.clone();
                        row.push(v);
                        next.push(row);
                    }
                }
                q_points = next;
            }
            let b_axis = centered_axis(
                (center.b - 0.25).max(0.05),
                (center.b + 0.25).min(0.995),
                0.05,
            );
            (q_points, b_axis)
        }
        _ => {
            return Err(Error::Usage(
                "give both --q-grid and --b-grid, or neither for auto-centering".into(),
            ))
        }
    };

    let oracle = brute_force_oracle(
        &presentation,
        &args.alpha,
        &q_grid,
        &b_grid,
        args.common.l,
        Parallelism::Parallel,
    )?;

    let text = match args.common.format {
        Format::Csv => {
            let mut head = String::from("b_low,b_high");
            for i in 1..=m {
                let _ = write!(head, ",q_low_{i}");
            }
            for i in 1..=m {
                let _ = write!(head, ",q_high_{i}");
            }
            head.push_str(",L\n");
            let mut buf = head;
            let _ = write!(buf, "{},{}", fmt_real(oracle.b_low), fmt_real(oracle.b_high));
            for q in &oracle.q_argmin_low {
                let _ = write!(buf, ",{}", fmt_real(*q));
            }
            for q in &oracle.q_argmin_high {
                let _ = write!(buf, ",{}", fmt_real(*q));
            }
            let _ = writeln!(buf, ",{}", args.common.l);
            buf
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Record<'a> {
                b_low: f64,
                b_high: f64,
                q_argmin_low: &'a [f64],
                q_argmin_high: &'a [f64],
                min_pressures: &'a [f64],
                b_grid: &'a [f64],
                #[serde(rename = "L")]
                l: u32,
            }
            json_text(&Record {
                b_low: oracle.b_low,
                b_high: oracle.b_high,
                q_argmin_low: &oracle.q_argmin_low,
                q_argmin_high: &oracle.q_argmin_high,
                min_pressures: &oracle.min_pressures,
                b_grid: &oracle.b_grid,
                l: args.common.l,
            })
        }
    };
    emit(&args.common.out, &text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_single_axis_inclusive_endpoint() {
        assert_eq!(parse_grid("1:3:1").unwrap(), vec![vec![1.0], vec![2.0], vec![3.0]]);
        assert_eq!(parse_grid("0.5:0.5:0.5").unwrap(), vec![vec![0.5]]);
    }

    #[test]
    fn grid_cartesian_row_major() {
        let pts = parse_grid("1:2:1x1:2:1").unwrap();
        assert_eq!(
            pts,
            vec![
                vec![1.0, 1.0],
                vec![1.0, 2.0],
                vec![2.0, 1.0],
                vec![2.0, 2.0]
            ]
        );
    }

    #[test]
    fn grid_endpoint_dropped_when_step_misses() {
        assert_eq!(parse_grid("1:2.5:1").unwrap(), vec![vec![1.0], vec![2.0]]);
        // 0.5 steps over [0.5, 8] land on the endpoint despite rounding.
        assert_eq!(parse_grid("0.5:8:0.5").unwrap().len(), 16);
    }

    #[test]
    fn grid_rejects_bad_axes() {
        assert!(parse_grid("1:3:0").is_err());
        assert!(parse_grid("1:3:-1").is_err());
        assert!(parse_grid("3:1:1").is_err());
        assert!(parse_grid("1:3").is_err());
        assert!(parse_grid("a:3:1").is_err());
    }

    #[test]
    fn real_formatting_has_17_significant_digits() {
        assert_eq!(fmt_real(0.5), "5.0000000000000000e-1");
        assert_eq!(fmt_real(-0.75), "-7.5000000000000000e-1");
        // 17 significant digits round-trip any f64 exactly.
        let v = 0.7215189712645304_f64;
        assert_eq!(fmt_real(v).parse::<f64>().unwrap().to_bits(), v.to_bits());
    }

    #[test]
    fn centered_axis_hits_both_ends() {
        let axis = centered_axis(0.55, 0.85, 0.05);
        assert_eq!(axis.len(), 7);
        assert!((axis[0] - 0.55).abs() < 1e-15);
        assert!((axis[6] - 0.85).abs() < 1e-12);
    }

    #[test]
    fn run_maps_usage_failures_to_exit_3() {
        assert_eq!(run(["cuspdim", "frobnicate"]), 3);
        assert_eq!(run(["cuspdim", "dim"]), 3);
        assert_eq!(
            run(["cuspdim", "dim", "--config", "preset:no_such", "--L", "5"]),
            3
        );
    }

    #[test]
    fn run_help_exits_cleanly() {
        assert_eq!(run(["cuspdim", "--help"]), 0);
        assert_eq!(run(["cuspdim", "spectrum", "--help"]), 0);
    }
}
