//! `cechml`: exact Čech cohomology, Riemann-Roch on ℙ¹, and
//! constructive Mittag-Leffler solvers from the command line.
//!
//! Exit codes: 0 success, 2 schema violation, 3 mathematical failure,
//! 4 I/O failure.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cechml::commands;
use cechml::config::Numerics;
use cechml::error::CliError;

#[derive(Parser)]
#[command(name = "cechml", version, about = "Constructive complex analysis on desk-scale instances")]
struct Cli {
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// JSON config file overriding the numerical defaults
    /// (window, stages, rho, q_samples, periodicity_samples, tolerance).
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Print every effective numerical default as JSON and exit.
    #[arg(long, global = true)]
    explain: bool,

    #[command(subcommand)]
    cmd: Option<Cmd>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Čech cohomology of a finite cover given as a nerve with section
    /// dimensions and restriction matrices over ℚ(i).
    Cech {
        /// Input document (inline JSON or @path).
        #[arg(long)]
        input: String,
        /// Also emit an exact cocycle basis modulo coboundaries.
        #[arg(long)]
        representatives: bool,
    },
    /// Cohomology of O(D) on ℙ¹ and the Riemann-Roch identity for one
    /// divisor, e.g. --divisor '{"inf": 3}'.
    P1 {
        /// Divisor document {"<point>": order} (inline JSON or @path).
        #[arg(long)]
        divisor: String,
        /// Truncation window override for the section spaces.
        #[arg(long)]
        window: Option<i64>,
    },
    /// CSV sweep of Riemann-Roch over random divisors on a fixed support.
    RrSweep {
        /// Comma-separated support points, e.g. "0,1,-1,i,2,inf".
        #[arg(long, default_value = "0,1,-1,i,2,inf")]
        points: String,
        /// Smallest coefficient.
        #[arg(long, default_value_t = -3, allow_hyphen_values = true)]
        min: i64,
        /// Largest coefficient.
        #[arg(long, default_value_t = 3)]
        max: i64,
        /// Number of sampled divisors.
        #[arg(long, default_value_t = 100)]
        samples: u64,
        /// RNG seed; identical seeds give identical tables.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Exact Mittag-Leffler solver on ℙ¹: obstruction class, solution,
    /// and Laurent re-expansion check.
    MlP1 {
        /// Parts document [{"pole": "<point>", "coeffs": {"j": "<c>"}}]
        /// (inline JSON or @path).
        #[arg(long)]
        parts: String,
    },
    /// Certified Mittag-Leffler constructor on a plane domain; emits a
    /// stage report (JSON) or an evaluation grid (CSV).
    PlaneMl {
        /// Domain document, e.g. '{"kind": "plane"}' (inline JSON or @path).
        #[arg(long)]
        domain: String,
        /// Poles document [{"a": <complex>, "coeffs": {"j": <complex>}}]
        /// (inline JSON or @path).
        #[arg(long)]
        poles: String,
        /// Truncation stage N (default: last pole-bearing stage).
        #[arg(long)]
        stages: Option<u32>,
        /// Evaluation grid "x0:x1:nx,y0:y1:ny"; selects CSV output.
        #[arg(long, allow_hyphen_values = true)]
        grid: Option<String>,
        /// Re-extract every principal part by contour integration.
        #[arg(long)]
        verify: bool,
    },
    /// Genus-1 residue criterion and Weierstrass ζ/℘ solution on ℂ/Λ.
    TorusMl {
        /// Lattice generators "w1,w2", e.g. "2,0.5+1.5i".
        #[arg(long, allow_hyphen_values = true)]
        lattice: String,
        /// Parts document as in plane-ml; poles are reduced mod Λ.
        #[arg(long)]
        parts: String,
        /// Also measure double-periodicity of the construction.
        #[arg(long)]
        check: bool,
    },
    /// Betti and Hodge reference tables for ℙⁿ.
    Tables {
        #[arg(long)]
        n: u32,
    },
}

/// Inline value or `@path` indirection for document arguments.
fn load_arg(arg: &str) -> Result<String, CliError> {
    match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(CliError::io),
        None => Ok(arg.to_string()),
    }
}

fn run(cli: &Cli) -> Result<String, CliError> {
    let mut numerics = Numerics::default();
    if let Some(path) = &cli.config {
        let text = std::fs::read_to_string(path).map_err(CliError::io)?;
        numerics.merge_config(&text)?;
    }
    if cli.explain {
        return Ok(numerics.explain());
    }
    let Some(cmd) = &cli.cmd else {
        return Err(CliError::schema("no subcommand given; see --help"));
    };
    match cmd {
        Cmd::Cech {
            input,
            representatives,
        } => commands::cmd_cech(&load_arg(input)?, *representatives),
        Cmd::P1 { divisor, window } => {
            let mut numerics = numerics.clone();
            if window.is_some() {
                numerics.window = *window;
            }
            commands::cmd_p1(&load_arg(divisor)?, &numerics)
        }
        Cmd::RrSweep {
            points,
            min,
            max,
            samples,
            seed,
        } => commands::cmd_rr_sweep(points, *min, *max, *samples, *seed),
        Cmd::MlP1 { parts } => commands::cmd_ml_p1(&load_arg(parts)?),
        Cmd::PlaneMl {
            domain,
            poles,
            stages,
            grid,
            verify,
        } => commands::cmd_plane_ml(
            &load_arg(domain)?,
            &load_arg(poles)?,
            *stages,
            grid.as_deref(),
            *verify,
            &numerics,
        ),
        Cmd::TorusMl {
            lattice,
            parts,
            check,
        } => commands::cmd_torus_ml(lattice, &load_arg(parts)?, *check, &numerics),
        Cmd::Tables { n } => commands::cmd_tables(*n),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(output) => {
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, output) {
                    eprintln!("io error: {e}");
                    return ExitCode::from(4);
                }
            } else {
                print!("{output}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
