//! Batch command line for the whole toolchain: parse raw hand histories,
//! generate synthetic corpora, run the decomposition analysis, decompose a
//! single distribution, and re-emit stored reports as flat tables.
//!
//! Every artifact-producing run writes its resolved configuration and the
//! tool version next to (or inside) the data it produces, so any output file
//! can be traced back to the exact invocation that made it.

mod artifacts;
mod commands;

use clap::{Parser, Subcommand};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "holdem-pid",
    version,
    about = "Information decomposition of betting in heads-up hold'em"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse raw hand-history text into a normalized record stream.
    Parse(commands::ParseArgs),
    /// Generate a synthetic corpus with a known information structure.
    Simulate(commands::SimulateArgs),
    /// Run the level-by-level decomposition over normalized records.
    Analyze(commands::AnalyzeArgs),
    /// Decompose one distribution given in the cell exchange format.
    Decompose(commands::DecomposeArgs),
    /// Re-emit the flat CSV tables from a stored analysis report.
    Report(commands::ReportArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let run = match cli.command {
        Command::Parse(args) => commands::cmd_parse(args),
        Command::Simulate(args) => commands::cmd_simulate(args),
        Command::Analyze(args) => commands::cmd_analyze(args),
        Command::Decompose(args) => commands::cmd_decompose(args),
        Command::Report(args) => commands::cmd_report(args),
    };
    match run {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::FAILURE
        }
    }
}
