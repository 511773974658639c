//! Front end for the `conelift` binary.

pub mod format;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use conelift::apps::{decompose, dual_cone, hilbert_from_generators, improve_binary, magic_system, Improvement};
use conelift::{
    extreme_rays, integer_kernel, minimal_generators_with, Bounds, Engine, HilbertOptions, IntMatrix, Strategy,
};
use thiserror::Error;

use crate::format::{read_matrix, read_vector, write_rows, FormatError};

#[derive(Debug, Parser)]
#[command(
    name = "conelift",
    version,
    about = "Hilbert bases and extreme rays of lattice cones"
)]
pub struct Cli {
    /// Write the result here instead of standard output.
    #[arg(short = 'o', long = "output", global = true, value_name = "FILE")]
    pub output: Option<PathBuf>,
    /// Do not print the summary line on standard error.
    #[arg(short, long, global = true)]
    pub quiet: bool,
    /// Worker threads for candidate generation. Output does not depend on it.
    #[arg(long, global = true, default_value_t = 1, value_name = "K")]
    pub threads: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct LatticeInput {
    /// Rows generate the lattice.
    #[arg(long, value_name = "FILE")]
    pub lattice: Option<PathBuf>,
    /// The lattice is the integer kernel of this matrix.
    #[arg(long, value_name = "FILE")]
    pub kernel: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Minimal generating set of the lattice points in the nonnegative orthant.
    Hilbert {
        #[command(flatten)]
        input: LatticeInput,
        /// Upper bounds, comma separated; `inf` leaves a coordinate unbounded.
        #[arg(long, value_name = "V1,...,VN")]
        bounds: Option<String>,
        #[arg(long, default_value = "input-order", value_name = "NAME")]
        strategy: String,
        #[arg(long, default_value = "graded", value_name = "NAME")]
        engine: String,
    },
    /// Extreme rays of the span intersected with the nonnegative orthant.
    Rays {
        #[command(flatten)]
        input: LatticeInput,
    },
    /// Facet normals and Hilbert basis of the dual of the cone generated by the rows.
    Dual { generators: PathBuf },
    /// Hilbert basis of the cone generated by the rows.
    HilbertFromGens { generators: PathBuf },
    /// Writes a kernel vector as a sum of Hilbert basis elements.
    Decompose {
        #[arg(long, value_name = "FILE")]
        kernel: PathBuf,
        #[arg(long, value_name = "FILE")]
        target: PathBuf,
    },
    /// One improvement step for a 0-1 program `Az = b`, minimizing `c·z`.
    Improve {
        #[arg(long, value_name = "FILE")]
        matrix: PathBuf,
        #[arg(long, value_name = "FILE")]
        rhs: PathBuf,
        #[arg(long, value_name = "FILE")]
        cost: PathBuf,
        #[arg(long, value_name = "FILE")]
        start: PathBuf,
    },
    /// Equations of N x N magic squares.
    MagicSystem {
        n: usize,
        #[arg(long)]
        no_diagonals: bool,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Format { path: String, source: FormatError },
    #[error(transparent)]
    Compute(#[from] conelift::Error),
    #[error("cannot write output: {0}")]
    Output(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Format { .. } => 1,
            CliError::Compute(conelift::Error::Argument(_) | conelift::Error::Config(_)) => 1,
            CliError::Compute(conelift::Error::Resource(_)) => 3,
            CliError::Compute(_) | CliError::Output(_) => 2,
        }
    }
}

fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

fn load_matrix(path: &Path) -> Result<IntMatrix, CliError> {
    read_matrix(&read_text(path)?).map_err(|source| CliError::Format {
        path: path.display().to_string(),
        source,
    })
}

fn load_vector(path: &Path) -> Result<conelift::IntVector, CliError> {
    read_vector(&read_text(path)?).map_err(|source| CliError::Format {
        path: path.display().to_string(),
        source,
    })
}

fn load_lattice(input: &LatticeInput) -> Result<IntMatrix, CliError> {
    match (&input.lattice, &input.kernel) {
        (Some(path), None) => load_matrix(path),
        (None, Some(path)) => Ok(integer_kernel(&load_matrix(path)?)),
        _ => Err(CliError::Usage("give exactly one of --lattice and --kernel".into())),
    }
}

/// The rendered output and a one-line summary.
struct Report {
    text: String,
    summary: String,
}

fn execute(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Hilbert {
            input,
            bounds,
            strategy,
            engine,
        } => {
            let gens = load_lattice(input)?;
            let n = gens.num_cols();
            let bounds = bounds
                .as_deref()
                .map(|b| b.parse::<Bounds>())
                .transpose()
                .map_err(|e| CliError::Usage(format!("--bounds: {e}")))?;
            if let Some(b) = &bounds {
                if b.dim() != n {
                    return Err(CliError::Usage(format!(
                        "--bounds has {} entries, lattice has dimension {n}",
                        b.dim()
                    )));
                }
            }
            let opts = HilbertOptions {
                bounds,
                strategy: strategy.parse::<Strategy>()?,
                engine: engine.parse::<Engine>()?,
                threads: cli.threads,
            };
            let h = minimal_generators_with(&gens, &opts)?;
            Ok(Report {
                summary: format!("{} Hilbert basis elements", h.len()),
                text: write_rows(n, &h),
            })
        }
        Command::Rays { input } => {
            let gens = load_lattice(input)?;
            let r = extreme_rays(&gens)?;
            Ok(Report {
                summary: format!("{} extreme rays", r.len()),
                text: write_rows(gens.num_cols(), &r),
            })
        }
        Command::Dual { generators } => {
            let p = load_matrix(generators)?;
            let d = dual_cone(&p)?;
            let n = p.num_cols();
            Ok(Report {
                summary: format!("{} rays, {} Hilbert basis elements", d.rays.len(), d.hilbert.len()),
                text: format!(
                    "# rays\n{}# hilbert\n{}",
                    write_rows(n, &d.rays),
                    write_rows(n, &d.hilbert)
                ),
            })
        }
        Command::HilbertFromGens { generators } => {
            let p = load_matrix(generators)?;
            let h = hilbert_from_generators(&p)?;
            Ok(Report {
                summary: format!("{} Hilbert basis elements", h.len()),
                text: write_rows(p.num_cols(), &h),
            })
        }
        Command::Decompose { kernel, target } => {
            let a = load_matrix(kernel)?;
            let u = load_vector(target)?;
            let d = decompose(&a, &u)?;
            let rows: Vec<conelift::IntVector> = d
                .terms
                .iter()
                .map(|(v, k)| conelift::IntVector::new(std::iter::once(k.clone()).chain(v.iter().cloned()).collect()))
                .collect();
            Ok(Report {
                summary: format!("{} distinct terms", rows.len()),
                text: format!("# multiplicity, vector\n{}", write_rows(a.num_cols() + 1, &rows)),
            })
        }
        Command::Improve {
            matrix,
            rhs,
            cost,
            start,
        } => {
            let a = load_matrix(matrix)?;
            let b = load_vector(rhs)?;
            let c = load_vector(cost)?;
            let z0 = load_vector(start)?;
            let n = a.num_cols();
            let (head, z, summary) = match improve_binary(&a, &b, &c, &z0)? {
                Improvement::Improved { z, cost } => {
                    let old = c.dot(&z0);
                    (
                        format!("# improved cost {cost}"),
                        z,
                        format!("improved cost {old} -> {cost}"),
                    )
                }
                Improvement::Optimal => ("# optimal".to_string(), z0.clone(), "no improving step".to_string()),
            };
            Ok(Report {
                text: format!("{head}\n{}", write_rows(n, &[z])),
                summary,
            })
        }
        Command::MagicSystem { n, no_diagonals } => {
            if *n == 0 {
                return Err(CliError::Usage("side length must be at least 1".into()));
            }
            let m = magic_system(*n, !no_diagonals);
            Ok(Report {
                summary: format!("{} equations in {} variables", m.num_rows(), m.num_cols()),
                text: write_rows(m.num_cols(), m.rows()),
            })
        }
    }
}

fn init_logging() {
    let _ = env_logger::Builder::from_env(env_logger::Env::new().filter_or("CONELIFT_LOG", "error"))
        .format_timestamp(None)
        .try_init();
}

/// Runs the tool on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    init_logging();
    let result = execute(&cli).and_then(|report| {
        match &cli.output {
            Some(path) => fs::write(path, &report.text)?,
            None => stdout.write_all(report.text.as_bytes())?,
        }
        Ok(report.summary)
    });
    match result {
        Ok(summary) => {
            if !cli.quiet {
                let _ = writeln!(stderr, "{summary}");
            }
            0
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
