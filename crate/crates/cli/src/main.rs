//! Command-line front end: root system dumps, group statistics,
//! special involution classification, reference-table reproduction,
//! diagram output, and the verification suite coupling the
//! induced-character formulas to both oracles.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use coxarr::rootsys::CoxeterType;
use serde::Deserialize;

/// Exit codes: 0 success, 1 verification failure, 2 usage or unknown
/// type, 3 cap or budget exceeded.
#[derive(Debug)]
pub enum AppError {
    Usage(String),
    CheckFailed(String),
    Budget(String),
    Io(String),
}

impl AppError {
    fn exit_code(&self) -> u8 {
        match self {
            AppError::CheckFailed(_) | AppError::Io(_) => 1,
            AppError::Usage(_) => 2,
            AppError::Budget(_) => 3,
        }
    }
}

impl std::fmt::Display for AppError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AppError::Usage(m) => write!(f, "usage error: {m}"),
            AppError::CheckFailed(m) => write!(f, "verification failed: {m}"),
            AppError::Budget(m) => write!(f, "cap or budget exceeded: {m}"),
            AppError::Io(m) => write!(f, "io error: {m}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// Enumerate the group (default when the order fits the cap).
    Full,
    /// Root-level computations only; no element enumeration.
    Rootspace,
    /// Pick `full` when the group order fits under the cap.
    Auto,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Dot,
    Text,
}

const DEFAULT_ORDER_CAP: u64 = 2_000_000;
const DEFAULT_BUDGET_SECONDS: u64 = 1800;

/// Defaults loadable from the JSON file named by `COXARR_CONFIG`.
#[derive(Debug, Default, Deserialize)]
struct FileConfig {
    mode: Option<String>,
    order_cap: Option<u64>,
    budget_seconds: Option<u64>,
    format: Option<String>,
}

#[derive(Args, Debug)]
struct CommonOpts {
    /// Coxeter type, e.g. A3, B4, D5, E7, F4, H3, I2(7).
    #[arg(long = "type", value_name = "TYPE", global = true)]
    ctype: Option<String>,
    /// full, rootspace or auto.
    #[arg(long, value_enum, global = true)]
    mode: Option<Mode>,
    /// Refuse to enumerate groups larger than this.
    #[arg(long, value_name = "N", global = true)]
    order_cap: Option<u64>,
    /// Time budget for the expensive checks, in seconds.
    #[arg(long, value_name = "SECONDS", global = true)]
    budget_seconds: Option<u64>,
    /// json, csv, dot or text (each command has a natural default).
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,
    /// Write the report here instead of stdout.
    #[arg(long, value_name = "PATH", global = true)]
    out: Option<PathBuf>,
}

#[derive(Parser, Debug)]
#[command(
    name = "coxarr",
    about = "Coxeter groups, reflection arrangements and the cohomology of their complements, in exact arithmetic",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: CommonOpts,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Emit the root system as coefficient lists.
    Roots,
    /// Group statistics: order, conjugacy class count and sizes.
    Group {
        #[arg(long)]
        stats: bool,
    },
    /// The special involution classes with their eigenspace data.
    Special,
    /// Reproduce the reference table of special-class counts.
    #[command(name = "table-xg")]
    TableXg,
    /// Poincaré polynomial of the quotient, from the special set and
    /// (full mode) from the invariant subspace of the algebra.
    Poincare,
    /// Diagrams of the nontrivial special involution classes, with the
    /// `-1`-eigenspace nodes filled.
    Graphs,
    /// Arrangement algebra data: Betti numbers and exponents.
    Os {
        #[arg(long)]
        betti: bool,
    },
    /// Verification suites (exit 0 only when every check passes).
    Verify {
        #[command(subcommand)]
        what: VerifyWhat,
    },
}

#[derive(Subcommand, Clone, Copy, Debug)]
pub enum VerifyWhat {
    /// Standard-action character formula against the algebra traces.
    F1,
    /// Twisted-action character formula against the algebra traces.
    F2,
    /// Fixed-set Euler characteristics against characters and orders.
    Lefschetz,
    /// Symmetrized generator products: nonzero, spanning the invariants.
    Conjecture,
    /// Everything applicable in the selected mode.
    All,
}

/// Resolved run configuration.
pub struct RunConfig {
    pub ctype: CoxeterType,
    pub mode: Mode,
    pub order_cap: u64,
    pub budget_seconds: u64,
    pub format: Format,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    /// `full` unless the order cap forces rootspace.
    pub fn effective_full(&self) -> bool {
        match self.mode {
            Mode::Full => true,
            Mode::Rootspace => false,
            Mode::Auto => self.ctype.order() <= self.order_cap,
        }
    }
}

fn load_file_config() -> Result<FileConfig, AppError> {
    let Some(path) = std::env::var_os("COXARR_CONFIG") else {
        return Ok(FileConfig::default());
    };
    let text = std::fs::read_to_string(&path)
        .map_err(|e| AppError::Io(format!("config {}: {e}", path.to_string_lossy())))?;
    serde_json::from_str(&text)
        .map_err(|e| AppError::Usage(format!("config {}: {e}", path.to_string_lossy())))
}

fn parse_mode(s: &str) -> Result<Mode, AppError> {
    match s {
        "full" => Ok(Mode::Full),
        "rootspace" => Ok(Mode::Rootspace),
        "auto" => Ok(Mode::Auto),
        other => Err(AppError::Usage(format!("unknown mode `{other}` in config"))),
    }
}

fn parse_format(s: &str) -> Result<Format, AppError> {
    match s {
        "json" => Ok(Format::Json),
        "csv" => Ok(Format::Csv),
        "dot" => Ok(Format::Dot),
        "text" => Ok(Format::Text),
        other => Err(AppError::Usage(format!("unknown format `{other}` in config"))),
    }
}

fn resolve_config(
    common: &CommonOpts,
    default_format: Format,
    needs_type: bool,
) -> Result<RunConfig, AppError> {
    let file = load_file_config()?;
    let ctype = match (&common.ctype, needs_type) {
        (Some(s), _) => CoxeterType::parse(s).map_err(|e| AppError::Usage(e.to_string()))?,
        (None, true) => return Err(AppError::Usage("--type is required".into())),
        // placeholder for the table command, which iterates its own list
        (None, false) => CoxeterType::parse("A1").unwrap(),
    };
    let mode = match common.mode {
        Some(m) => m,
        None => match &file.mode {
            Some(s) => parse_mode(s)?,
            None => Mode::Auto,
        },
    };
    let format = match common.format {
        Some(f) => f,
        None => match &file.format {
            Some(s) => parse_format(s)?,
            None => default_format,
        },
    };
    Ok(RunConfig {
        ctype,
        mode,
        order_cap: common.order_cap.or(file.order_cap).unwrap_or(DEFAULT_ORDER_CAP),
        budget_seconds: common
            .budget_seconds
            .or(file.budget_seconds)
            .unwrap_or(DEFAULT_BUDGET_SECONDS),
        format,
        out: common.out.clone(),
    })
}

fn emit(config: &RunConfig, text: &str) -> Result<(), AppError> {
    match &config.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| AppError::Io(format!("{}: {e}", path.to_string_lossy()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn run() -> Result<(), AppError> {
    let cli = Cli::parse();
    match cli.command {
        Command::Roots => {
            let config = resolve_config(&cli.common, Format::Json, true)?;
            let text = commands::roots(&config)?;
            emit(&config, &text)
        }
        Command::Group { stats: _ } => {
            let config = resolve_config(&cli.common, Format::Json, true)?;
            let text = commands::group_stats(&config)?;
            emit(&config, &text)
        }
        Command::Special => {
            let config = resolve_config(&cli.common, Format::Json, true)?;
            let text = commands::special(&config)?;
            emit(&config, &text)
        }
        Command::TableXg => {
            let config = resolve_config(&cli.common, Format::Csv, false)?;
            let (text, pass) = commands::table_xg(&config, cli.common.ctype.as_deref())?;
            emit(&config, &text)?;
            if pass {
                Ok(())
            } else {
                Err(AppError::CheckFailed("special-class counts differ from the table".into()))
            }
        }
        Command::Poincare => {
            let config = resolve_config(&cli.common, Format::Json, true)?;
            let (text, pass) = commands::poincare(&config)?;
            emit(&config, &text)?;
            if pass {
                Ok(())
            } else {
                Err(AppError::CheckFailed("Poincaré polynomial mismatch".into()))
            }
        }
        Command::Graphs => {
            let config = resolve_config(&cli.common, Format::Dot, true)?;
            let text = commands::graphs(&config)?;
            emit(&config, &text)
        }
        Command::Os { betti: _ } => {
            let config = resolve_config(&cli.common, Format::Json, true)?;
            let text = commands::os_betti(&config)?;
            emit(&config, &text)
        }
        Command::Verify { what } => {
            let config = resolve_config(&cli.common, Format::Text, true)?;
            let (text, pass) = commands::verify(&config, what)?;
            emit(&config, &text)?;
            if pass {
                Ok(())
            } else {
                Err(AppError::CheckFailed("one or more checks failed".into()))
            }
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("coxarr: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
