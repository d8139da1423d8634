//! `anticentrifugal`: tables of effective potentials, the two-dimensional
//! bound-state wave function, node statistics of `J_m`/`Y_m`, delta-potential
//! bound states and a self-verification report, as CSV or JSON.
//!
//! Units are dimensionless (`ħ = M = 1`). Lengths are measured as `ρ = kr`
//! when `k = 1`, so the dimensionless energy eigenvalue is unity.
//!
//! Exit codes: 0 success, 2 invalid input, 3 a verification suite failed.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod report;

use commands::{
    BoundstateArgs, Invalid, NodesArgs, Outcome, PotentialArgs, VerifyArgs, WavefunctionArgs,
};

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Csv,
    Json,
}

#[derive(Parser, Debug)]
#[command(
    name = "anticentrifugal",
    version,
    about = "Free-particle radial physics in N dimensions"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    format: Format,
    /// Write to this file instead of stdout
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Effective potential V(r) on a radial grid
    Potential(PotentialArgs),
    /// Φ⁽²⁾(r) and W⁽²⁾(r) of the two-dimensional bound state
    Wavefunction(WavefunctionArgs),
    /// Zero spacings Δ_m(n) and densities g_m(n) of J_0, Y_0, J_1, Y_1
    Nodes(NodesArgs),
    /// Delta-potential bound state in one, two or three dimensions
    Boundstate(BoundstateArgs),
    /// Run every verification suite
    Verify(VerifyArgs),
}

const EXIT_INVALID: u8 = 2;
const EXIT_VERIFICATION: u8 = 3;

fn dispatch(command: &Command) -> Result<Outcome> {
    match command {
        Command::Potential(a) => commands::potential(a),
        Command::Wavefunction(a) => commands::wavefunction(a),
        Command::Nodes(a) => commands::nodes(a),
        Command::Boundstate(a) => commands::boundstate(a),
        Command::Verify(a) => commands::verify(a),
    }
}

fn emit(cli: &Cli, outcome: &Outcome) -> Result<()> {
    let sink: Box<dyn Write> = match &cli.output {
        Some(path) => Box::new(
            File::create(path).with_context(|| format!("cannot create {}", path.display()))?,
        ),
        None => Box::new(io::stdout().lock()),
    };
    let mut sink = BufWriter::new(sink);
    match cli.format {
        Format::Csv => {
            outcome.report.write_csv(&mut sink)?;
            for note in &outcome.notes {
                eprintln!("{note}");
            }
        }
        Format::Json => outcome.report.write_json(&mut sink)?,
    }
    sink.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match dispatch(&cli.command) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            let validation = e.downcast_ref::<Invalid>().is_some()
                || e.downcast_ref::<anticentrifugal::Error>().is_some();
            return ExitCode::from(if validation { EXIT_INVALID } else { 1 });
        }
    };
    if let Err(e) = emit(&cli, &outcome) {
        eprintln!("error: {e:#}");
        return ExitCode::FAILURE;
    }
    if outcome.verified {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VERIFICATION)
    }
}
