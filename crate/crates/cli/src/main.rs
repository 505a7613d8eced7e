//! `rotorlab`: classify rotors, run compressors, enumerate universality
//! tables and simulate rotor-router networks.
//!
//! Exit codes: 0 on success, 1 when an asserted expectation or internal
//! check fails, 2 on unparseable or out-of-domain input.

mod args;
mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use commands::{CliError, Report};

fn run(cli: &Cli) -> Result<Report, CliError> {
    let format = cli.global.format;
    match &cli.command {
        Command::Classify { rotor } => commands::classify(rotor, format),
        Command::Compress { rotor, variant, .. } => {
            commands::compress(rotor, variant, &cli.global.algorithm(), format)
        }
        Command::Enumerate { lengths, expect } => {
            let lengths: Vec<usize> = lengths.iter().map(|&n| n as usize).collect();
            commands::enumerate(&lengths, *expect, &cli.global)
        }
        Command::Simulate { file, steps } => commands::simulate(file, *steps, format),
        Command::Decompose { rotor } => commands::decompose(rotor, format),
        Command::Reduce { rotor } => commands::reduce(rotor, format),
        Command::Model { rotor, out } => commands::model(rotor, out.as_deref(), format),
        Command::FixedCycles { max_period } => commands::fixed_cycles(*max_period as usize, format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let mut stdout = std::io::stdout().lock();
            // A closed pipe is not worth a panic.
            let _ = stdout.write_all(report.output.as_bytes());
            let _ = stdout.flush();
            if report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
