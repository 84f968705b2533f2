//! The `sphex` command line. [`run`] is the whole program; `main` only
//! forwards the process arguments and streams.

mod cache;
mod commands;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::chartab::ChartabError;
use crate::exclusion::{ExclusionError, Mode, Scope, TraceError, DEFAULT_SCAN_MAX};
use crate::group::{GroupError, DEFAULT_ORDER_CAP};
use crate::lattice::LatticeError;
use crate::oliver::WitnessError;

pub use cache::{cache_dir, lattice_cache_key, load_or_build_lattice, CACHE_ENV};

/// Exit status for a successful run.
pub const EXIT_OK: i32 = 0;
/// Exit status for bad arguments or unreadable input.
pub const EXIT_USAGE: i32 = 1;
/// Exit status when a computed object fails its independent check.
pub const EXIT_VERIFY: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Verification(_) => EXIT_VERIFY,
        }
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<LatticeError> for CliError {
    fn from(e: LatticeError) -> Self {
        match e {
            LatticeError::Incomplete(_) => CliError::Verification(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<ChartabError> for CliError {
    fn from(e: ChartabError) -> Self {
        match e {
            ChartabError::Parse(_)
            | ChartabError::ClassMismatch(_)
            | ChartabError::UnknownCharacter(_) => CliError::Usage(e.to_string()),
            other => CliError::Verification(other.to_string()),
        }
    }
}

impl From<ExclusionError> for CliError {
    fn from(e: ExclusionError) -> Self {
        match e {
            ExclusionError::Chartab(c) => c.into(),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<TraceError> for CliError {
    fn from(e: TraceError) -> Self {
        CliError::Verification(e.to_string())
    }
}

impl From<WitnessError> for CliError {
    fn from(e: WitnessError) -> Self {
        CliError::Verification(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "sphex",
    version,
    about = "Fixed-point dimensions, Oliver verdicts and exclusion of fixed-point actions on spheres"
)]
pub struct Cli {
    #[command(flatten)]
    pub config: ConfigArgs,
    #[command(subcommand)]
    pub command: Command,
}

/// Options shared by every subcommand.
#[derive(Debug, Args)]
pub struct ConfigArgs {
    /// Group file, or `sl25c2` / `s5` for the bundled groups.
    #[arg(long, global = true, default_value = "sl25c2")]
    pub group: String,
    /// Complex character table file; defaults to the bundled table when the
    /// group is `sl25c2`.
    #[arg(long, global = true)]
    pub chartab: Option<PathBuf>,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Largest group order accepted.
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER_CAP,
          value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(1..))]
    pub max_order: usize,
    /// Largest dimension visited by `exclude --scan`.
    #[arg(long, global = true, default_value_t = DEFAULT_SCAN_MAX,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub max_dim: u64,
    /// Neither read nor write the lattice cache.
    #[arg(long, global = true)]
    pub no_cache: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Conjugacy classes of elements.
    Classes,
    /// Complex and real character tables with Frobenius-Schur indicators.
    Chartab,
    /// Subgroup classes and covering relations.
    Lattice,
    /// Fixed-point dimension of a real module on a subgroup class.
    Fpdim(FpdimArgs),
    /// Oliver verdict with a verified witness chain.
    Oliver(OliverArgs),
    /// Run the exclusion rules on candidate tangent modules.
    Exclude(ExcludeArgs),
}

#[derive(Debug, Args)]
pub struct FpdimArgs {
    /// Real module such as `U6` or `U6+2*W8_1`.
    #[arg(long, required_unless_present = "all", conflicts_with = "all")]
    pub module: Option<String>,
    /// Subgroup class label; `trivial` names the trivial subgroup.
    #[arg(long, required_unless_present = "all", conflicts_with = "all")]
    pub class: Option<String>,
    /// Every real irreducible against every subgroup class.
    #[arg(long)]
    pub all: bool,
}

#[derive(Debug, Args)]
pub struct OliverArgs {
    /// Subgroup class label; every class is listed when omitted.
    #[arg(long)]
    pub subgroup: Option<String>,
}

#[derive(Debug, Args)]
pub struct ExcludeArgs {
    /// Dimension of the sphere.
    #[arg(long, required_unless_present = "scan", conflicts_with = "scan")]
    pub dim: Option<u64>,
    /// `one` or `odd` global fixed points.
    #[arg(long)]
    pub mode: Mode,
    /// `homology` or `standard` spheres.
    #[arg(long)]
    pub scope: Scope,
    /// Only faithful modules.
    #[arg(long)]
    pub effective: bool,
    /// Bound on fixed-point dimensions of nontrivial subgroups.
    #[arg(long)]
    pub pseudofree: Option<u64>,
    /// Emit and independently verify the rule applications.
    #[arg(long)]
    pub trace: bool,
    /// Every dimension from 0 to `--max-dim`.
    #[arg(long)]
    pub scan: bool,
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit status. Diagnostics go to `err` as one line.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
            } else {
                let _ = out.write_all(text.as_bytes());
            }
            return code;
        }
    };
    match commands::dispatch(&cli, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "sphex: {e}");
            e.exit_code()
        }
    }
}
