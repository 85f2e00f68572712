//! Command-line front end: verification suites, the isosceles example,
//! scatter-figure emission, the conjecture search, and ad-hoc distance
//! queries on vectors supplied in JSON files.
//!
//! Exit codes: 0 on success, 1 on runtime or suite failure, 2 on usage or
//! parse errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cpsimplex::experiments::{conjecture_search, run_figure};
use cpsimplex::projective::{regular_c_for_abs_det, regular_d_min};
use cpsimplex::verify;
use cpsimplex::{
    check_inequalities, fs_point_distance, make_isosceles, normalize, Error, IsoscelesParams,
    ProjPoint, Simplex,
};

use cpsimplex_cli::config::{InputConfig, Mode, Payload};
use cpsimplex_cli::csvio::{self, format_real};
use cpsimplex_cli::svg;

#[derive(Parser)]
#[command(
    name = "cpsimplex",
    version,
    about = "Projective simplices in CP^n: distances, determinant bounds, and experiments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the randomized verification suites and report worst residuals.
    Verify {
        /// Largest projective dimension to exercise (n = 1..=max-n).
        #[arg(long = "max-n", default_value_t = 4)]
        max_n: usize,
        /// Random cases per suite.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Diagnostic: multiply every suite tolerance by this factor.
        #[arg(long = "tolerance-scale", default_value_t = 1.0)]
        tolerance_scale: f64,
    },
    /// Report the isosceles triangle with side parameter s.
    Example {
        #[arg(long)]
        s: f64,
    },
    /// Write scatter data for d_min versus |D| (CSV, optional SVG).
    Figure {
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Number of random simplices.
        #[arg(long, default_value_t = 2000)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output CSV path.
        #[arg(long)]
        out: PathBuf,
        /// Optional output SVG path.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Search for the largest d_min at a fixed determinant modulus.
    Conjecture {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long = "target-det")]
        target_det: f64,
        #[arg(long, default_value_t = 20)]
        restarts: usize,
        /// Objective evaluations per restart.
        #[arg(long, default_value_t = 6000)]
        budget: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Distance report for vectors read from a JSON config file.
    Distance {
        /// Path to the JSON input (mode + [re, im] vector rows).
        #[arg(long)]
        config: PathBuf,
    },
}

enum CmdError {
    Usage(String),
    Runtime(String),
}

impl CmdError {
    fn exit_code(&self) -> u8 {
        match self {
            CmdError::Usage(_) => 2,
            CmdError::Runtime(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            CmdError::Usage(m) | CmdError::Runtime(m) => m,
        }
    }
}

fn usage(msg: impl Into<String>) -> CmdError {
    CmdError::Usage(msg.into())
}

fn runtime(msg: impl Into<String>) -> CmdError {
    CmdError::Runtime(msg.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(command: Command) -> Result<(), CmdError> {
    match command {
        Command::Verify {
            max_n,
            samples,
            seed,
            tolerance_scale,
        } => cmd_verify(max_n, samples, seed, tolerance_scale),
        Command::Example { s } => cmd_example(s),
        Command::Figure {
            n,
            count,
            seed,
            out,
            svg,
        } => cmd_figure(n, count, seed, &out, svg.as_deref()),
        Command::Conjecture {
            n,
            target_det,
            restarts,
            budget,
            seed,
        } => cmd_conjecture(n, target_det, restarts, budget, seed),
        Command::Distance { config } => cmd_distance(&config),
    }
}

fn cmd_verify(max_n: usize, samples: usize, seed: u64, scale: f64) -> Result<(), CmdError> {
    if max_n < 1 {
        return Err(usage("--max-n must be at least 1"));
    }
    if samples < 1 {
        return Err(usage("--samples must be at least 1"));
    }
    if !(scale > 0.0 && scale.is_finite()) {
        return Err(usage("--tolerance-scale must be positive and finite"));
    }
    println!("verification suites: max_n = {max_n}, samples = {samples}, seed = {seed}");
    let reports = verify::run_all_scaled(max_n, samples, seed, scale);
    let mut failed = 0usize;
    for r in &reports {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        println!(
            "  {:<12} cases={:<6} failures={:<4} worst residual {:>10.3e} (seed {}) tol {:.1e}  {status}",
            r.name, r.cases, r.failures, r.worst_residual, r.worst_seed, r.tolerance
        );
        if !r.passed() {
            failed += 1;
        }
    }
    if failed == 0 {
        println!("all suites passed");
        Ok(())
    } else {
        Err(runtime(format!("{failed} suite(s) failed")))
    }
}

fn cmd_example(s: f64) -> Result<(), CmdError> {
    let params =
        IsoscelesParams::new(s).map_err(|e| usage(format!("invalid --s: {e}")))?;
    let sx = make_isosceles(&params).map_err(|e| runtime(e.to_string()))?;
    let points: Vec<ProjPoint> = sx
        .generators()
        .iter()
        .map(|g| ProjPoint::new(g.clone()).expect("unit generator"))
        .collect();
    let sides = [
        fs_point_distance(&points[1], &points[2]),
        fs_point_distance(&points[0], &points[1]),
        fs_point_distance(&points[0], &points[2]),
    ];

    println!("isosceles triangle with side parameter s = {s}");
    println!("  |D|   = {}", format_real(sx.abs_det()));
    for (j, d) in sx.dists().iter().enumerate() {
        println!("  d_{j}   = {}", format_real(*d));
    }
    println!("  d_min = {}", format_real(sx.d_min()));
    println!(
        "  sides = {}, {}, {}",
        format_real(sides[0]),
        format_real(sides[1]),
        format_real(sides[2])
    );
    let dev = (sx.abs_det() - s).abs().max((sx.d_min() - s).abs());
    if dev <= 1e-12 {
        println!("confirmed: |D| = d_min = s (within 1e-12)");
        Ok(())
    } else {
        Err(runtime(format!(
            "|D| = d_min = s violated by {dev:.3e}"
        )))
    }
}

fn cmd_figure(
    n: usize,
    count: usize,
    seed: u64,
    out: &std::path::Path,
    svg_path: Option<&std::path::Path>,
) -> Result<(), CmdError> {
    if n < 1 {
        return Err(usage("--n must be at least 1"));
    }
    if count < 1 {
        return Err(usage("--count must be at least 1"));
    }
    let records = run_figure(n, count, seed).map_err(|e| runtime(e.to_string()))?;
    fs::write(out, csvio::format_records(&records))
        .map_err(|e| runtime(format!("cannot write {}: {e}", out.display())))?;
    println!("wrote {} records to {}", records.len(), out.display());
    if let Some(path) = svg_path {
        fs::write(path, svg::render(&records, n))
            .map_err(|e| runtime(format!("cannot write {}: {e}", path.display())))?;
        println!("wrote scatter SVG to {}", path.display());
    }
    Ok(())
}

fn cmd_conjecture(
    n: usize,
    target_det: f64,
    restarts: usize,
    budget: usize,
    seed: u64,
) -> Result<(), CmdError> {
    if n < 1 {
        return Err(usage("--n must be at least 1"));
    }
    if !(target_det > 0.0 && target_det <= 1.0) {
        return Err(usage("--target-det must lie in (0, 1]"));
    }
    if restarts < 1 {
        return Err(usage("--restarts must be at least 1"));
    }
    println!(
        "conjecture search: n = {n}, target |D| = {target_det}, restarts = {restarts}, \
         budget = {budget}, seed = {seed}"
    );
    let c = regular_c_for_abs_det(n, target_det).map_err(|e| usage(e.to_string()))?;
    let reference = regular_d_min(n, c);

    match conjecture_search(n, target_det, restarts, budget, seed) {
        Ok(result) => {
            let gap = result.best_d_min - reference;
            println!("  best d_min   = {}", format_real(result.best_d_min));
            println!("  achieved |D| = {}", format_real(result.achieved_det));
            println!("  evaluations  = {}", result.evaluations);
            println!(
                "  regular-simplex reference at |D| = {target_det}: c = {c:.12}, d_min = {}",
                format_real(reference)
            );
            println!("  gap (best - reference) = {gap:+.6e}");
            if gap > 1e-3 {
                println!(
                    "  counter-signal: best d_min exceeds the regular-simplex reference by {gap:.3e}"
                );
            }
            println!("  best generators:");
            for g in &result.best_generators {
                let row: Vec<String> = g
                    .coeffs()
                    .iter()
                    .map(|c| format!("{:+.6}{:+.6}i", c.re, c.im))
                    .collect();
                println!("    [{}]", row.join(", "));
            }
            Ok(())
        }
        Err(Error::SearchFailure { best, gap }) => Err(runtime(format!(
            "no feasible configuration: best attempt reached |D| = {} (gap {gap:.3e}) with d_min = {}",
            format_real(best.achieved_det),
            format_real(best.best_d_min)
        ))),
        Err(e @ Error::Parameter { .. }) => Err(usage(e.to_string())),
        Err(e) => Err(runtime(e.to_string())),
    }
}

fn cmd_distance(path: &std::path::Path) -> Result<(), CmdError> {
    let text = fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let payload = InputConfig::parse(&text)
        .and_then(InputConfig::validate)
        .map_err(usage)?;
    match payload {
        Payload::Pair { rows } => {
            let points: Vec<ProjPoint> = rows
                .iter()
                .map(|r| {
                    normalize(r)
                        .and_then(ProjPoint::new)
                        .map_err(|e| usage(format!("config violates precondition: {e}")))
                })
                .collect::<Result<_, _>>()?;
            println!("rows scaled to unit Hermitian norm");
            println!(
                "point-point Fubini-Study distance = {}",
                format_real(fs_point_distance(&points[0], &points[1]))
            );
            Ok(())
        }
        Payload::Simplex { mode, rows } => {
            let unit_rows: Vec<_> = rows
                .iter()
                .map(|r| {
                    normalize(r)
                        .map_err(|e| usage(format!("config violates precondition: {e}")))
                })
                .collect::<Result<_, _>>()?;
            let sx = match mode {
                Mode::Vertices => Simplex::from_vertices(unit_rows),
                Mode::Faces => Simplex::from_faces(unit_rows),
            }
            .map_err(|e| usage(format!("config violates precondition: {e}")))?;
            let report = check_inequalities(&sx);
            println!("rows scaled to unit Hermitian norm");
            println!(
                "simplex report (mode {}, n = {})",
                match mode {
                    Mode::Vertices => "vertices",
                    Mode::Faces => "faces",
                },
                sx.n()
            );
            println!(
                "  D     = {} + {} i",
                format_real(sx.det().re),
                format_real(sx.det().im)
            );
            println!("  |D|   = {}", format_real(sx.abs_det()));
            for (j, d) in sx.dists().iter().enumerate() {
                println!("  d_{j}   = {}", format_real(*d));
            }
            println!("  d_min = {}", format_real(sx.d_min()));
            println!(
                "  lower margin (|D| - d_min^n) = {}",
                format_real(report.lower_margin)
            );
            println!(
                "  upper margin (d_min - |D|)   = {}",
                format_real(report.upper_margin)
            );
            println!(
                "  distances tied with d_min    = {}",
                report.near_equality_count
            );
            Ok(())
        }
    }
}
