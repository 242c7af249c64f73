//! Command-line front end: exact convex geometry and normalized volumes of
//! toric singularities.
//!
//! Exit codes: 0 success (all verified bounds hold), 1 I/O or validation
//! error, 2 a verify suite found a violated asserted bound.

use clap::{Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;
use toricvol::bounds::{self, suite_violated, Suite, VerifyInput};
use toricvol::enumerate::{self, EnumerationJob};
use toricvol::io as tvio;
use toricvol::rat::{parse_decimal, rat_to_f64};
use toricvol::{santalo, toric, Error};

#[derive(Parser)]
#[command(
    name = "toricvol",
    version,
    about = "Normalized volumes of toric singularities via exact convex geometry"
)]
struct Cli {
    /// Seed for randomized auxiliary sampling (reserved; outputs are
    /// deterministic).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Convex hull of a point list (polytope JSON in, polytope JSON out).
    Hull {
        input: PathBuf,
        #[arg(long)]
        float: bool,
    },
    /// Polar dual of a polytope with the origin interior.
    Dual {
        input: PathBuf,
        #[arg(long)]
        float: bool,
    },
    /// Exact Euclidean and lattice volume.
    Volume {
        input: PathBuf,
        #[arg(long)]
        float: bool,
    },
    /// Santaló point, dual volume, Mahler volume, residual certificate.
    Santalo {
        input: PathBuf,
        /// Residual tolerance on the dual barycenter.
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long)]
        float: bool,
    },
    /// Normalized volume of a Q-Gorenstein toric cone.
    Normvol {
        input: PathBuf,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// Cross-check against brute-force grid minimization of the
        /// truncated-cone volume.
        #[arg(long)]
        cross_check: bool,
        #[arg(long)]
        float: bool,
    },
    /// Radon partitions of n+2 points.
    Radon { input: PathBuf },
    /// Inequality suites over a cone or polytope input.
    Verify {
        input: PathBuf,
        /// all|bs|rdp|mahler|euler|c1|thm35
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        csv: bool,
        /// Relative tolerance for equality flags.
        #[arg(long, default_value_t = 1e-7)]
        tol: f64,
    },
    /// Enumerate singularity classes with normalized volume above epsilon.
    Enumerate {
        #[arg(long)]
        dim: u32,
        /// Exact decimal or rational threshold, e.g. 0.5 or 1/2.
        #[arg(long)]
        epsilon: String,
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
        /// Worker threads (0 = rayon default).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Also run the doubled-box saturation check.
        #[arg(long)]
        saturate: bool,
        /// Output CSV path (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Distinct-value volume spectrum with multiplicities and gaps.
    Spectrum {
        #[arg(long)]
        dim: u32,
        #[arg(long)]
        epsilon: String,
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    // Exit 2 is reserved for violated bounds; argument errors are exit 1.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e)
            if matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            ) =>
        {
            print!("{}", e);
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprintln!("error[Usage]: {}", e.to_string().lines().next().unwrap_or("bad arguments"));
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error[{}]: {}", e.code(), e);
            ExitCode::from(1)
        }
    }
}

fn read(path: &PathBuf) -> toricvol::Result<String> {
    Ok(std::fs::read_to_string(path)?)
}

fn write_out(out: &Option<PathBuf>, content: &str) -> toricvol::Result<()> {
    match out {
        Some(path) => std::fs::write(path, content)?,
        None => print!("{}", content),
    }
    Ok(())
}

fn run(cli: Cli) -> toricvol::Result<ExitCode> {
    match cli.command {
        Command::Hull { input, float } => {
            let p = tvio::polytope_from_json(&read(&input)?)?;
            emit(&tvio::polytope_to_json(&p, float));
        }
        Command::Dual { input, float } => {
            let p = tvio::polytope_from_json(&read(&input)?)?;
            let d = p.polar_dual()?;
            emit(&tvio::polytope_to_json(&d, float));
        }
        Command::Volume { input, float } => {
            let p = tvio::polytope_from_json(&read(&input)?)?;
            emit(&tvio::volume_to_json(&p, float));
        }
        Command::Santalo { input, tol, float } => {
            let p = tvio::polytope_from_json(&read(&input)?)?;
            let r = santalo::santalo_point(&p, tol)?;
            let mut doc = tvio::santalo_to_json(&r, float);
            doc.as_object_mut()
                .unwrap()
                .insert("generator".into(), serde_json::json!(format!("toricvol {}", env!("CARGO_PKG_VERSION"))));
            emit(&doc);
        }
        Command::Normvol {
            input,
            tol,
            cross_check,
            float,
        } => {
            let cone = tvio::cone_from_json(&read(&input)?)?;
            let r = toric::normalized_volume(&cone, tol)?;
            let mut doc = tvio::normvol_to_json(&r, float);
            if cross_check {
                let (_, grid_min) = toric::grid_minimize_truncated(&cone, 10)?;
                let grid_f = rat_to_f64(&grid_min);
                let slack = (r.value_bracket.1 - r.value_bracket.0) + 1e-3 * r.value;
                let agrees =
                    grid_f >= r.value_bracket.0 - slack && grid_f <= r.value_bracket.1 + slack;
                doc.as_object_mut().unwrap().insert(
                    "cross_check".into(),
                    serde_json::json!({
                        "grid_min": grid_f,
                        "agrees": agrees,
                    }),
                );
                if !agrees {
                    emit(&doc);
                    return Ok(ExitCode::from(2));
                }
            }
            emit(&doc);
        }
        Command::Radon { input } => {
            let (_, points) = tvio::points_from_json(&read(&input)?)?;
            let parts = bounds::radon_partitions(&points)?;
            emit(&tvio::radon_to_json(&parts));
        }
        Command::Verify {
            input,
            suite,
            csv,
            tol,
        } => {
            let suite = Suite::parse(&suite)
                .ok_or_else(|| Error::Parse(format!("unknown suite '{}'", suite)))?;
            let vin: VerifyInput = tvio::detect_input(&read(&input)?)?;
            let reports = bounds::run_suite(&vin, suite, tol)?;
            if csv {
                print!("{}", tvio::reports_to_csv(&reports));
            } else {
                emit(&tvio::reports_to_json(&reports));
            }
            if suite_violated(&reports) {
                return Ok(ExitCode::from(2));
            }
        }
        Command::Enumerate {
            dim,
            epsilon,
            budget,
            jobs,
            saturate,
            out,
        } => {
            let eps = parse_decimal(&epsilon)
                .ok_or_else(|| Error::Parse(format!("invalid epsilon '{}'", epsilon)))?;
            let job = EnumerationJob::derive(dim, eps, budget, jobs, 1)?;
            let entries = enumerate::enumerate_singularities(&job)?;
            if saturate && !enumerate::saturation_check(&job)? {
                eprintln!("error[Saturation]: doubled search box found new classes");
                return Ok(ExitCode::from(2));
            }
            write_out(&out, &tvio::entries_to_csv(&entries))?;
            eprintln!("# {} classes; pruning: {}", entries.len(), job.audit.formula);
        }
        Command::Spectrum {
            dim,
            epsilon,
            budget,
            jobs,
            out,
        } => {
            let eps = parse_decimal(&epsilon)
                .ok_or_else(|| Error::Parse(format!("invalid epsilon '{}'", epsilon)))?;
            let job = EnumerationJob::derive(dim, eps, budget, jobs, 1)?;
            let entries = enumerate::enumerate_singularities(&job)?;
            let rows = enumerate::volume_spectrum(&entries);
            write_out(&out, &tvio::spectrum_to_csv(&rows))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn emit(doc: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(doc).unwrap());
}
