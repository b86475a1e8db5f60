//! `dyckroots`: tables, polynomials, roots and exact certification reports for
//! the UD/UUD factor polynomials `W_{n,k}(x)` of Dyck paths.

mod generate;
mod range;
mod report;
mod verify;

use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::panic;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dyckroots_core::dyck::Provenance;
use dyckroots_core::Error as CoreError;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use crate::range::IndexRange;
use crate::report::Status;

/// Largest semilength accepted for enumeration without `--unsafe-no-cap`.
pub const ORACLE_CAP: u32 = 16;

/// Largest `n` accepted by every other source without `--unsafe-no-cap`.
pub const GENERAL_CAP: u32 = 200;

#[derive(Debug, Parser)]
#[command(
    name = "dyckroots",
    version,
    about = "Exact W_{n,k}(x) tables and root certification"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Global {
    /// Output format; tables default to csv, reports and roots to json.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,

    /// Worker threads for independent (n, k) items.
    #[arg(long, global = true, value_name = "N")]
    pub jobs: Option<usize>,

    /// Shuffle the evaluation order of work items; output order is unaffected.
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// Lift the size caps (enumeration stays bounded by the packed-path limit).
    #[arg(long, global = true)]
    pub unsafe_no_cap: bool,

    /// Add elapsed wall time to JSON reports.
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Source {
    Oracle,
    Formula,
    RecK,
    RecN,
}

impl From<Source> for Provenance {
    fn from(s: Source) -> Provenance {
        match s {
            Source::Oracle => Provenance::Oracle,
            Source::Formula => Provenance::Formula,
            Source::RecK => Provenance::RecFixedK,
            Source::RecN => Provenance::RecFixedN,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit the numbers w_{n,k,m} for one n as rows n,k,m,value.
    Triangle {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "formula")]
        source: Source,
    },
    /// Emit the coefficients of W_{n,k}(x).
    Poly {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value = "formula")]
        source: Source,
    },
    /// Isolate the real roots of W_{n,k}(x) exactly.
    Roots {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
    },
    /// List Dyck paths of semilength n with their UD and UUD counts.
    Paths {
        #[arg(long)]
        n: u32,
        /// Keep only paths with this many UD-factors.
        #[arg(long)]
        k: Option<u32>,
        /// Keep only paths with this many UUD-factors.
        #[arg(long)]
        m: Option<u32>,
        /// Stop after this many paths.
        #[arg(long)]
        limit: Option<u64>,
    },
    /// Certify a property over a range and emit a JSON report.
    Verify {
        #[command(subcommand)]
        target: Target,
    },
}

#[derive(Debug, Clone, Subcommand)]
pub enum Target {
    /// Every W_{n,k} with 0 <= k <= n has only real zeros.
    Realroots {
        #[arg(long, default_value_t = 0)]
        n_min: u32,
        #[arg(long)]
        n_max: u32,
    },
    /// W_{n,k} and W_{n,n-k} have the same zeros for 1 <= k <= n-1.
    Samezeros {
        #[arg(long, default_value_t = 1)]
        n_min: u32,
        #[arg(long)]
        n_max: u32,
    },
    /// w_{2k+1,k,m} = w_{2k+1,k,k+1-m} for 1 <= m <= k.
    Symmetry {
        #[arg(long, default_value_t = 1)]
        k_min: u32,
        #[arg(long)]
        k_max: u32,
    },
    /// W_{k,k}, W_{k+1,k}, ..., W_{n_max,k} interlace pairwise.
    SturmK {
        #[arg(long)]
        k: IndexRange,
        #[arg(long)]
        n_max: u32,
    },
    /// W_{n,1}, ..., W_{n,n} interlace up to a peak and down after it.
    UnimodalN {
        #[arg(long)]
        n: IndexRange,
    },
    /// Recurrence-criterion hypotheses for the fixed-k sequence.
    LiuWangK {
        #[arg(long)]
        k: IndexRange,
        #[arg(long)]
        n_max: u32,
    },
    /// Recurrence-criterion hypotheses for the rising half of the fixed-n row.
    LiuWangN {
        #[arg(long)]
        n: IndexRange,
    },
    /// Both recurrences reproduce the closed formula for n <= n_max.
    RecAgree {
        #[arg(long, default_value_t = 0)]
        n_min: u32,
        #[arg(long)]
        n_max: u32,
    },
    /// Path enumeration reproduces the closed formula for n <= n_max.
    OracleAgree {
        #[arg(long, default_value_t = 0)]
        n_min: u32,
        #[arg(long)]
        n_max: u32,
    },
}

/// Failures that stop a command before it produces its normal output.
#[derive(Debug)]
pub enum CliError {
    /// Bad arguments or a refused size; exit 2.
    Usage(String),
    /// A broken internal invariant; exit 3.
    Internal(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "error: {m}"),
            CliError::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> CliError {
        if e.is_internal() {
            CliError::Internal(e.to_string())
        } else {
            CliError::Usage(e.to_string())
        }
    }
}

/// What a command produced: the text to emit and the exit code it earned.
pub struct Output {
    pub text: String,
    pub code: u8,
}

impl Global {
    pub fn cap(&self, limit: u32, what: &str, n: u32) -> Result<(), CliError> {
        if !self.unsafe_no_cap && n > limit {
            return Err(CliError::Usage(format!(
                "{what} n = {n} exceeds the cap {limit}; pass --unsafe-no-cap to run it anyway"
            )));
        }
        Ok(())
    }

    pub fn oracle_cap(&self) -> u32 {
        if self.unsafe_no_cap {
            dyckroots_core::dyck::HARD_LIMIT
        } else {
            ORACLE_CAP
        }
    }

    pub fn source_cap(&self, source: Source, n: u32) -> Result<(), CliError> {
        match source {
            Source::Oracle => self.cap(ORACLE_CAP, "oracle", n),
            _ => self.cap(GENERAL_CAP, source_name(source), n),
        }
    }

    /// The order in which `len` work items are evaluated.
    pub fn schedule(&self, len: usize) -> Vec<usize> {
        let mut order: Vec<usize> = (0..len).collect();
        if let Some(seed) = self.seed {
            order.shuffle(&mut StdRng::seed_from_u64(seed));
        }
        order
    }
}

pub fn source_name(s: Source) -> &'static str {
    Provenance::from(s).as_str()
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    let g = &cli.global;
    let start = Instant::now();
    match &cli.command {
        Command::Triangle { n, source } => generate::triangle(g, *n, *source),
        Command::Poly { n, k, source } => generate::poly(g, *n, *k, *source),
        Command::Roots { n, k } => generate::roots(g, *n, *k),
        Command::Paths { n, k, m, limit } => generate::paths(g, *n, *k, *m, *limit),
        Command::Verify { target } => {
            if g.format == Some(Format::Csv) {
                return Err(CliError::Usage("verification reports are JSON only".into()));
            }
            let mut report = verify::run(g, target)?;
            if g.timing {
                report.timing_ms = Some(start.elapsed().as_millis() as u64);
            }
            let code = match report.status {
                Status::Pass => 0,
                Status::Fail => 1,
                Status::Error => 3,
            };
            let text = serde_json::to_string_pretty(&report).map_err(|e| CliError::Internal(e.to_string()))?;
            Ok(Output {
                text: text + "\n",
                code,
            })
        }
    }
}

fn emit(g: &Global, text: &str) -> io::Result<()> {
    match &g.out {
        Some(path) => fs::write(path, text),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.global.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("internal error: {e}");
            return ExitCode::from(3);
        }
    }
    let result = match panic::catch_unwind(|| run(&cli)) {
        Ok(r) => r,
        Err(_) => Err(CliError::Internal("panic during evaluation".into())),
    };
    match result {
        Ok(out) => {
            if let Err(e) = emit(&cli.global, &out.text) {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(match e {
                CliError::Usage(_) => 2,
                CliError::Internal(_) => 3,
            })
        }
    }
}
