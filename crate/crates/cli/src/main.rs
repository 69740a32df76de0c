//! `mcomp`: inspect and verify the m-step competition graph sequence of a
//! multipartite tournament.

mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exit statuses.
pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_MISMATCH: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "mcomp", version, about = "Limits and periods of m-step competition graphs of multipartite tournaments")]
struct Cli {
    /// Step budget for period detection.
    #[arg(long, global = true, env = "TD_BUDGET", default_value_t = mcomp_core::oracle::DEFAULT_BUDGET,
          value_parser = positive())]
    budget: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Structural analysis and predicted eventual graphs of one instance.
    Classify(ClassifyArgs),
    /// Print C^m(D) for m = 1..=m_max and the detected period.
    Simulate(SimulateArgs),
    /// Compare predictions with brute force on a seeded random corpus.
    Verify(VerifyArgs),
    /// Emit a seeded random multipartite tournament.
    Generate(GenerateArgs),
    /// Convert an instance to another format.
    Export(ExportArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Json,
    Matrix,
    #[value(name = "dot-in", alias = "dot")]
    DotIn,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Matrix,
    Dot,
}

#[derive(Args, Debug)]
pub struct InputArgs {
    /// Instance file, or `-` for standard input.
    pub file: PathBuf,
    /// Input format; guessed from the content when omitted.
    #[arg(long, value_enum)]
    pub format: Option<InputFormat>,
}

#[derive(Args, Debug)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Machine-readable output.
    #[arg(long)]
    pub json: bool,
    /// Also run the oracle and check the prediction against it.
    #[arg(long)]
    pub certify: bool,
}

#[derive(Args, Debug)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, default_value_t = 8, value_parser = positive())]
    pub m_max: usize,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 1000)]
    pub count: u64,
    #[arg(long, default_value_t = 12)]
    pub max_n: usize,
    /// Number of partite sets, `K` or a range `MIN-MAX`.
    #[arg(long, default_value = "2-5")]
    pub parts: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Where counterexamples are written when any are found.
    #[arg(long, default_value = "counterexamples.json")]
    pub dump: PathBuf,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct GenerateArgs {
    /// Comma-separated partite set sizes, e.g. `2,3,1`.
    #[arg(long)]
    pub parts: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value = "json")]
    pub to: OutputFormat,
}

#[derive(Args, Debug)]
pub struct ExportArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum)]
    pub to: OutputFormat,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match &cli.command {
        Command::Classify(a) => commands::classify(a, cli.budget),
        Command::Simulate(a) => commands::simulate(a, cli.budget),
        Command::Verify(a) => commands::verify(a, cli.budget),
        Command::Generate(a) => commands::generate(a),
        Command::Export(a) => commands::export(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("mcomp: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn positive() -> clap::builder::RangedU64ValueParser<usize> {
    clap::builder::RangedU64ValueParser::<usize>::new().range(1..)
}
