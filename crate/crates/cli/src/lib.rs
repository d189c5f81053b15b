//! Command-line surface over `cameral-core`: root data, folding, Prym
//! lattices and the verification suites.

pub mod commands;
pub mod report;
pub mod suites;

use std::path::PathBuf;
use std::time::Instant;

use cameral_core::oracle::DEFAULT_CAP;
use cameral_core::rootdatum::LatticeForm;
use clap::{Parser, Subcommand, ValueEnum};

pub use commands::UsageError;
pub use report::{Check, Format, Report, Status};
pub use suites::Suite;

#[derive(Parser, Debug)]
#[command(name = "cameral", version, about = "Exact lattices of generic Hitchin fibers")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Worker threads for `verify` (defaults to the available parallelism).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormArg {
    Adjoint,
    Sc,
}

impl From<FormArg> for LatticeForm {
    fn from(f: FormArg) -> Self {
        match f {
            FormArg::Adjoint => LatticeForm::Adjoint,
            FormArg::Sc => LatticeForm::SimplyConnected,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Root count, degrees, center and Langlands dual of a type.
    Rootdata {
        /// Type such as A3 or G2.
        #[arg(long = "type", value_name = "TYPE")]
        ty: Option<String>,
        #[arg(value_name = "TYPE", conflicts_with = "ty")]
        positional: Option<String>,
    },
    /// Fold an ADE type by a diagram symmetry group.
    Fold {
        #[arg(long = "type", value_name = "TYPE")]
        ty: Option<String>,
        /// Z2 or S3.
        #[arg(long)]
        group: Option<String>,
        #[arg(value_name = "ARGS", num_args = 0..=2)]
        positional: Vec<String>,
    },
    /// Prym lattice of the generic fiber.
    Prym {
        #[arg(long = "type", value_name = "TYPE")]
        ty: String,
        #[arg(long, value_enum, default_value_t = FormArg::Adjoint)]
        form: FormArg,
        #[arg(long, default_value_t = 2)]
        genus: usize,
        /// JSON plan: {"orbits": [{"label": "1,0", "count": 4}, ...], "handles": [[...], ...]}.
        #[arg(long, value_name = "FILE")]
        plan: Option<PathBuf>,
        /// Cross-check the rank through the induced module on the cameral cover.
        #[arg(long)]
        oracle: bool,
        /// Largest Weyl group the oracle enumerates.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        oracle_cap: usize,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        oracle_cap: usize,
    },
}

fn required(v: Option<String>, what: &str) -> Result<String, UsageError> {
    v.ok_or_else(|| UsageError::Parse(format!("missing {what}")))
}

/// Runs the parsed command and stamps the wall time.
pub fn execute(cfg: RunConfig) -> Result<Report, UsageError> {
    let start = Instant::now();
    let jobs = cfg
        .jobs
        .unwrap_or_else(|| std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1));
    let mut report = match cfg.command {
        Command::Rootdata { ty, positional } => commands::rootdata(&required(ty.or(positional), "type")?)?,
        Command::Fold { ty, group, positional } => {
            let mut pos = positional.into_iter();
            let ty = required(ty.or_else(|| pos.next()), "type")?;
            let group = required(group.or_else(|| pos.next()), "group")?;
            if pos.next().is_some() {
                return Err(UsageError::Parse("too many arguments".into()));
            }
            commands::fold(&ty, &group)?
        }
        Command::Prym { ty, form, genus, plan, oracle, oracle_cap } => commands::prym(&commands::PrymArgs {
            ty,
            form: form.into(),
            genus,
            plan,
            oracle,
            oracle_cap,
        })?,
        Command::Verify { suite, oracle_cap } => commands::verify(suite, jobs, oracle_cap),
    };
    report.wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(report)
}
