//! The `isokit` command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 invalid input, 3 I/O.

mod input;
mod report;
mod svg;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

pub use input::{InputDocument, Preset, TriangleArgs, TriangleInputSpec};
pub use report::*;
pub use svg::render as render_svg;

use crate::containers::{all_special_containers, first_kind, second_kind, third_kind, SpecialContainer};
use crate::geometry::{canonicalize, CanonicalTriangle, Tolerances};
use crate::minimum::{Minimizer, DEFAULT_ROOT_TOL};
use crate::oracle::{DEFAULT_COARSE_STEP_DEG, DEFAULT_REFINE_ITERS};
use crate::sampling::AngleMargins;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("verification failed: {0}")]
    VerificationFailed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Io { .. } => EXIT_IO,
            CliError::VerificationFailed(_) => EXIT_VERIFY,
        }
    }
}

impl From<crate::Error> for CliError {
    fn from(e: crate::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(name = "isokit", version, about = "Minimum-area isosceles containers of triangles")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List every special isosceles container.
    Containers {
        #[command(flatten)]
        triangle: TriangleArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Closed-form minimum isosceles container(s).
    Min {
        #[command(flatten)]
        triangle: TriangleArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Compare the closed form against the brute-force oracle on random triangles.
    Verify {
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        #[arg(long, env = "ISOKIT_SEED", default_value_t = 0)]
        seed: u64,
        /// Coarse grid step of the oracle, in degrees.
        #[arg(long, default_value_t = DEFAULT_COARSE_STEP_DEG)]
        step: f64,
        /// Refinement levels of the oracle.
        #[arg(long, default_value_t = DEFAULT_REFINE_ITERS)]
        refine: u32,
        /// Smallest sampled angle, in degrees.
        #[arg(long, default_value_t = AngleMargins::default().min_angle_deg)]
        min_angle: f64,
        /// Smallest gap between sampled angles, in degrees.
        #[arg(long, default_value_t = AngleMargins::default().scalene_margin_deg)]
        scalene_margin: f64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Extremal scans: the two ratio suprema and the three-way tie angle.
    Extremal {
        #[arg(value_enum)]
        mode: ExtremalMode,
        /// Root bracket width.
        #[arg(long, default_value_t = DEFAULT_ROOT_TOL)]
        tol: f64,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Write an SVG figure of the triangle and its containers.
    Svg {
        #[command(flatten)]
        triangle: TriangleArgs,
        #[arg(long, value_enum, default_value_t = Which::All)]
        which: Which,
        #[arg(long)]
        out: PathBuf,
        /// Tie tolerance used to pick minimizers.
        #[arg(long)]
        tol: Option<f64>,
    },
}

#[derive(Debug, Clone, clap::Args)]
pub struct OutputArgs {
    /// Write the JSON report to PATH; `-` prints it instead of the table.
    #[arg(long)]
    pub json: Option<PathBuf>,
    /// Tie tolerance for comparing container areas.
    #[arg(long)]
    pub tol: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    First,
    Second,
    Third,
    All,
    Min,
}

fn tolerances(tie: Option<f64>) -> Result<Tolerances, CliError> {
    let mut tol = Tolerances::default();
    if let Some(t) = tie {
        if !(t.is_finite() && t > 0.0) {
            return Err(CliError::Input(format!("--tol must be positive and finite, got {t}")));
        }
        tol.eps_tie = t;
    }
    Ok(tol)
}

fn load(args: &TriangleArgs, tol: &Tolerances) -> Result<CanonicalTriangle, CliError> {
    Ok(canonicalize(&args.triangle()?, tol)?)
}

fn io_err(path: &std::path::Path) -> impl FnOnce(std::io::Error) -> CliError + '_ {
    move |source| CliError::Io { path: path.to_path_buf(), source }
}

/// Writes JSON to `path`, or to `out` when `path` is `-`. Returns true when
/// the document went to `out`.
fn emit_json<T: serde::Serialize>(
    value: &T,
    path: Option<&PathBuf>,
    out: &mut dyn Write,
) -> Result<bool, CliError> {
    let Some(path) = path else { return Ok(false) };
    let text = serde_json::to_string_pretty(value).expect("reports serialize") + "\n";
    if path.as_os_str() == "-" {
        out.write_all(text.as_bytes()).map_err(io_err(path))?;
        Ok(true)
    } else {
        std::fs::write(path, text).map_err(io_err(path))?;
        Ok(false)
    }
}

fn stdout_err(e: std::io::Error) -> CliError {
    CliError::Io { path: "<stdout>".into(), source: e }
}

fn write_triangle_header(out: &mut dyn Write, ct: &CanonicalTriangle) -> std::io::Result<()> {
    writeln!(
        out,
        "triangle: sides a={:.6} b={:.6} c={:.6}, angles {:.4}° {:.4}° {:.4}°, area {:.6} ({})",
        ct.a,
        ct.b,
        ct.c,
        ct.alpha.to_degrees(),
        ct.beta.to_degrees(),
        ct.gamma.to_degrees(),
        ct.area,
        shape_label(ct.shape_class)
    )
}

fn write_container_table(out: &mut dyn Write, list: &[SpecialContainer]) -> std::io::Result<()> {
    writeln!(out, "{:<6} {:<7} {:>14} {:>10}  vertices", "name", "kind", "area", "ratio")?;
    for s in list {
        let v = s.tri.vertices();
        writeln!(
            out,
            "{:<6} {:<7} {:>14.6} {:>10.6}  ({:.4}, {:.4}) ({:.4}, {:.4}) ({:.4}, {:.4})",
            s.variant.label(),
            format!("{:?}", s.kind).to_lowercase(),
            s.area,
            s.ratio,
            v[0].x,
            v[0].y,
            v[1].x,
            v[1].y,
            v[2].x,
            v[2].y
        )?;
    }
    Ok(())
}

fn cmd_containers(triangle: &TriangleArgs, output: &OutputArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let tol = tolerances(output.tol)?;
    let ct = load(triangle, &tol)?;
    let report = containers_report(&ct, &tol);
    if emit_json(&report, output.json.as_ref(), out)? {
        return Ok(EXIT_OK);
    }
    (|| {
        write_triangle_header(out, &ct)?;
        if report.self_container {
            return writeln!(out, "isosceles: self-container");
        }
        writeln!(out, "{} special containers", report.containers.len())?;
        if report.near_right_angle {
            writeln!(out, "note: largest angle is within tolerance of a right angle")?;
        }
        write_container_table(out, &report.containers)
    })()
    .map_err(stdout_err)?;
    Ok(EXIT_OK)
}

fn cmd_min(triangle: &TriangleArgs, output: &OutputArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let tol = tolerances(output.tol)?;
    let ct = load(triangle, &tol)?;
    let report = min_report(&ct, &tol);
    if emit_json(&report, output.json.as_ref(), out)? {
        return Ok(EXIT_OK);
    }
    let r = &report.result;
    (|| {
        write_triangle_header(out, &ct)?;
        if !ct.is_scalene() {
            writeln!(out, "isosceles: self-container")?;
        }
        let names: Vec<&str> = r.minimizers.iter().map(Minimizer::label).collect();
        writeln!(out, "minimizer: {}", names.join(", "))?;
        writeln!(out, "area {:.9}, ratio {:.9}, count {}", r.min_area, r.min_ratio, r.count)?;
        if !r.candidates.is_empty() {
            writeln!(out, "candidates:")?;
            write_container_table(out, &r.candidates)?;
        }
        Ok(())
    })()
    .map_err(stdout_err)?;
    Ok(EXIT_OK)
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    samples: u64,
    seed: u64,
    step: f64,
    refine: u32,
    min_angle: f64,
    scalene_margin: f64,
    output: &OutputArgs,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let tolerances = tolerances(output.tol)?;
    if !(step.is_finite() && step > 0.0) {
        return Err(CliError::Input(format!("--step must be positive, got {step}")));
    }
    let margins = AngleMargins {
        min_angle_deg: min_angle,
        scalene_margin_deg: scalene_margin,
    };
    margins.validate()?;
    let config = VerifyConfig {
        seed,
        samples: samples as usize,
        step_deg: step,
        refine,
        margins,
        tolerances,
    };
    let summary = verify_summary(&config)?;
    if !emit_json(&summary, output.json.as_ref(), out)? {
        (|| {
            writeln!(out, "samples {}, seed {}, grid {}°, refine {}", samples, seed, step, refine)?;
            writeln!(
                out,
                "margins: min angle {}°, scalene margin {}°",
                margins.min_angle_deg, margins.scalene_margin_deg
            )?;
            writeln!(
                out,
                "relative gap: max {:.3e}, min {:.3e} (tolerance {:.0e})",
                summary.max_relative_gap, summary.min_relative_gap, summary.gap_tolerance
            )?;
            writeln!(out, "boundary invariants: {:.2}%", 100.0 * summary.boundary_pass_rate)?;
            writeln!(out, "shared side and angle: {:.2}%", 100.0 * summary.side_angle_pass_rate)?;
            writeln!(out, "max min-ratio: {:.9} (must be below √2)", summary.max_min_ratio)?;
            writeln!(out, "failures: {}", summary.failures)?;
            writeln!(out, "{}", if summary.passed { "PASS" } else { "FAIL" })
        })()
        .map_err(stdout_err)?;
    }
    if summary.passed {
        Ok(EXIT_OK)
    } else {
        Err(CliError::VerificationFailed(format!(
            "{} of {} samples failed, max min-ratio {:.9}",
            summary.failures, samples, summary.max_min_ratio
        )))
    }
}

fn cmd_extremal(mode: ExtremalMode, root_tol: f64, json: Option<&PathBuf>, out: &mut dyn Write) -> Result<i32, CliError> {
    let report = extremal_report(mode, root_tol, &Tolerances::default())?;
    if !emit_json(&report, json, out)? {
        (|| match &report.body {
            ExtremalBody::AlphaStar(a) => {
                writeln!(out, "alpha* = {:.10}° ({:.12} rad)", a.alpha_deg, a.alpha)?;
                writeln!(out, "residual {:.3e}, bracket width {:.3e}", a.residual, a.bracket_width)?;
                let [x, y, z] = a.t_star_angles.map(f64::to_degrees);
                writeln!(out, "T* angles {x:.10}° {y:.10}° {z:.10}°")?;
                let [p, q, r] = a.t_star_sides;
                writeln!(out, "T* sides (unit circumdiameter) {p:.6} : {q:.6} : {r:.6}")?;
                writeln!(out, "T* minimizers: {}", a.t_star_minimizers)
            }
            ExtremalBody::Sqrt2 { supremum, max_observed, rows, .. } => {
                writeln!(out, "{:>10} {:>12} {:>14} {:>14} {:>12}", "beta°", "alpha°", "crossing", "min ratio", "cos resid")?;
                for r in rows {
                    writeln!(
                        out,
                        "{:>10.4} {:>12.6} {:>14.10} {:>14.10} {:>12.2e}",
                        r.beta.to_degrees(),
                        r.crossing.to_degrees(),
                        r.crossing_ratio,
                        r.min_ratio,
                        r.cosine_identity_residual
                    )?;
                }
                writeln!(out, "max {:.10}, supremum √2 = {:.10}", max_observed, supremum)
            }
            ExtremalBody::Golden { supremum, max_observed, rows, .. } => {
                writeln!(out, "{:>14} {:>14} {:>14} {:>14}", "b", "c = b²", "first-kind", "min ratio")?;
                for r in rows {
                    writeln!(
                        out,
                        "{:>14.10} {:>14.10} {:>14.10} {:>14.10}",
                        r.b, r.c, r.first_kind_ratio, r.min_ratio
                    )?;
                }
                writeln!(out, "max {:.10}, supremum φ = {:.10}", max_observed, supremum)
            }
        })()
        .map_err(stdout_err)?;
    }
    if report.ok() {
        Ok(EXIT_OK)
    } else {
        Err(CliError::VerificationFailed("sweep reached its supremum".into()))
    }
}

fn selected(ct: &CanonicalTriangle, which: Which, tol: &Tolerances) -> Result<Vec<SpecialContainer>, CliError> {
    if !ct.is_scalene() {
        return Ok(Vec::new());
    }
    let list = match which {
        Which::First => first_kind(ct)?.to_vec(),
        Which::Second => second_kind(ct)?.to_vec(),
        Which::Third => third_kind(ct, tol)?.containers,
        Which::All => all_special_containers(ct, tol)?,
        Which::Min => crate::minimum::minimum_isosceles_container(ct, tol)
            .minimizers
            .into_iter()
            .filter_map(|m| match m {
                Minimizer::Special(s) => Some(s),
                Minimizer::Itself => None,
            })
            .collect(),
    };
    Ok(list)
}

fn cmd_svg(triangle: &TriangleArgs, which: Which, path: &PathBuf, tie: Option<f64>) -> Result<i32, CliError> {
    let tol = tolerances(tie)?;
    let ct = load(triangle, &tol)?;
    let list = selected(&ct, which, &tol)?;
    let title = format!(
        "{} container(s), {}",
        format!("{which:?}").to_lowercase(),
        shape_label(ct.shape_class)
    );
    std::fs::write(path, render_svg(&ct, &list, &title)).map_err(io_err(path))?;
    Ok(EXIT_OK)
}

/// Runs one parsed command, writing human or JSON output to `out`.
pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    match &cli.command {
        Command::Containers { triangle, output } => cmd_containers(triangle, output, out),
        Command::Min { triangle, output } => cmd_min(triangle, output, out),
        Command::Verify {
            samples,
            seed,
            step,
            refine,
            min_angle,
            scalene_margin,
            output,
        } => cmd_verify(*samples, *seed, *step, *refine, *min_angle, *scalene_margin, output, out),
        Command::Extremal { mode, tol, json } => cmd_extremal(*mode, *tol, json.as_ref(), out),
        Command::Svg { triangle, which, out: path, tol } => cmd_svg(triangle, *which, path, *tol),
    }
}

/// Parses `args` (including the program name) and runs. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        // Reader went away (`| head`); nothing left to report.
        Err(CliError::Io { source, .. }) if source.kind() == std::io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "isokit: {e}");
            e.exit_code()
        }
    }
}

pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock());
    let _ = std::io::stdout().flush();
    code
}
