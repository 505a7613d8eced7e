use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rotorlab::compressor::CompressorVariant;
use rotorlab::universality::{AlgorithmConfig, DEFAULT_SEED};
use rotorlab::RotorType;

#[derive(Debug, Parser)]
#[command(
    name = "rotorlab",
    version,
    about = "Rotor-router universality toolkit"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Output format. JSON is the stable machine-readable contract.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Master seed for the randomized compressor algorithm.
    #[arg(long, env = "ROTORLAB_SEED", default_value_t = DEFAULT_SEED, global = true)]
    pub seed: u64,
    /// Worker threads for enumeration (default: all cores).
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    /// Random compressor applications per attempt.
    #[arg(long, default_value_t = 200, global = true)]
    pub max_apps: usize,
    /// Restarts from the balanced rotor after the first attempt.
    #[arg(long, default_value_t = 50, global = true)]
    pub max_restarts: usize,
}

impl GlobalOpts {
    pub fn algorithm(&self) -> AlgorithmConfig {
        AlgorithmConfig {
            max_apps: self.max_apps,
            max_restarts: self.max_restarts,
            seed: self.seed,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Expectation {
    /// Undecided counts at most the published table values.
    Table1,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a rotor type (boppiness, class label, balance degrees).
    Classify {
        #[arg(value_parser = parse_rotor)]
        rotor: RotorType,
    },
    /// Apply compressor maps, or run the randomized compressor algorithm.
    Compress {
        #[arg(value_parser = parse_rotor)]
        rotor: RotorType,
        /// Apply these maps in order (comma-separated, e.g. UD,UU).
        #[arg(long, value_delimiter = ',', value_parser = parse_variant, conflicts_with = "auto")]
        variant: Vec<CompressorVariant>,
        /// Run the randomized algorithm (the default without --variant).
        #[arg(long)]
        auto: bool,
    },
    /// Run the compressor algorithm on every two-state string of the given
    /// lengths.
    Enumerate {
        #[arg(required = true, num_args = 1.., value_parser = clap::value_parser!(u64).range(2..=40))]
        lengths: Vec<u64>,
        #[arg(long, value_enum)]
        expect: Option<Expectation>,
    },
    /// Hitting sequence of a network file.
    Simulate {
        file: PathBuf,
        /// Also list the first k hits.
        #[arg(long)]
        steps: Option<usize>,
    },
    /// Maximal balanced run decomposition, uniform decompositions, BURD
    /// verdict and monovariants of a balanced rotor.
    Decompose {
        #[arg(value_parser = parse_rotor)]
        rotor: RotorType,
    },
    /// All merges and deletions of a rotor, with an unboppy witness.
    Reduce {
        #[arg(value_parser = parse_rotor)]
        rotor: RotorType,
    },
    /// Build a network of 12 rotors whose hitting sequence has the given
    /// type, and verify it by simulation.
    Model {
        #[arg(value_parser = parse_rotor)]
        rotor: RotorType,
        /// Write the network file here instead of printing it.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Fixed cycles of the compressor maps on balanced rotors of even period
    /// up to N, with their BURD verdicts.
    FixedCycles {
        #[arg(value_parser = clap::value_parser!(u64).range(2..=24))]
        max_period: u64,
    },
}

fn parse_rotor(text: &str) -> Result<RotorType, String> {
    text.parse()
        .map_err(|e: rotorlab::RotorError| e.to_string())
}

fn parse_variant(text: &str) -> Result<CompressorVariant, String> {
    text.parse()
        .map_err(|e: rotorlab::RotorError| e.to_string())
}
