use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod input;

use pcs_core::Error;

#[derive(Parser)]
#[command(
    name = "pcs",
    version,
    about = "Periodic complementary sequences and supplementary difference sets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    common: Common,
}

#[derive(Args, Clone)]
pub struct Common {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write the result here instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Verify SDS, PCS, ACS, Golay or base-sequence files (kind read from the header).
    Verify {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Print periodic and aperiodic autocorrelations of every row.
    Corr { file: PathBuf },
    /// Convert an SDS file to a PCS file or back.
    Convert { file: PathBuf },
    /// Search for SDS witnesses.
    Search(commands::SearchArgs),
    /// Print the existence table.
    Table {
        #[arg(long, default_value_t = 12)]
        pmax: usize,
        #[arg(long, default_value_t = 50)]
        nmax: usize,
        /// Catalog directory to load instead of the built-in one.
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
    /// List catalog entries, or show one cell with its witness.
    Catalog {
        /// Show only this p.
        #[arg(long)]
        p: Option<usize>,
        /// Show only this N.
        #[arg(long)]
        n: Option<usize>,
        /// Print witnesses as well.
        #[arg(long)]
        witness: bool,
        #[arg(long)]
        dir: Option<PathBuf>,
    },
}

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::BudgetRefused { .. } => 3,
        Error::ClosureContradiction { .. } => 4,
        Error::Parse { .. }
        | Error::InvalidEntry { .. }
        | Error::EmptySequence
        | Error::EmptyFamily
        | Error::LengthMismatch { .. }
        | Error::ShiftOutOfRange { .. }
        | Error::ResidueOutOfRange { .. }
        | Error::DuplicateResidue { .. }
        | Error::ModulusMismatch { .. }
        | Error::OutOfRange { .. }
        | Error::Config(_)
        | Error::Io(_)
        | Error::Json(_) => 2,
        Error::Degenerate(_)
        | Error::NotPcs { .. }
        | Error::NotSds(_)
        | Error::OrderCondition { .. }
        | Error::InvalidBase(_)
        | Error::InvalidGolay(_)
        | Error::Infeasible(_)
        | Error::Asset { .. }
        | Error::Catalog(_) => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify { files } => commands::verify(&files, &cli.common),
        Command::Corr { file } => commands::corr(&file, &cli.common),
        Command::Convert { file } => commands::convert(&file, &cli.common),
        Command::Search(args) => commands::search(&args, &cli.common),
        Command::Table { pmax, nmax, catalog } => commands::table(pmax, nmax, catalog.as_deref(), &cli.common),
        Command::Catalog { p, n, witness, dir } => commands::catalog(p, n, witness, dir.as_deref(), &cli.common),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("pcs: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
