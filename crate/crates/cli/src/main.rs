//! `scottlab`: check finite posets, sweep corpora, and verify certificates
//! and witnesses for the named infinite families.

mod assets;
mod commands;
mod report;

use std::env;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use scottlab_core::limits;

#[derive(Debug, Parser)]
#[command(
    name = "scottlab",
    version,
    about = "Scott topologies on finite posets and on a few infinite families"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Print the structured report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write a Hasse diagram in DOT format.
    #[arg(long, global = true, value_name = "FILE")]
    pub dot: Option<PathBuf>,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads for corpus sweeps (0 picks one per core).
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check properties of the Scott space (or another topology) of a poset file.
    Check {
        /// Poset document, or `@name` for a bundled one.
        file: String,
        /// Comma-separated property ids; `all` runs every check.
        #[arg(default_value = commands::DEFAULT_CHECKS)]
        properties: String,
        #[arg(long, value_enum, default_value_t = Topology::Scott)]
        topology: Topology,
    },
    /// Verify a named fact about one of the infinite families.
    Family {
        /// johnstone, johnstone+x:<n>, jia, l428, nchain or flat:<n>.
        name: String,
        /// k-formula, non-wf-witness, intersection, not-coherent or ideals-countable.
        fact: String,
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
        depth: u32,
    },
    /// Sweep all posets of a size, or a random sample.
    Corpus {
        size: usize,
        #[arg(long, value_enum, default_value_t = Mode::Exhaustive)]
        mode: Mode,
        /// Number of posets in random mode.
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value = commands::DEFAULT_CHECKS)]
        checks: String,
    },
    /// Verify a c-poset certificate and the claims built on it.
    Cert {
        file: String,
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
        depth: u32,
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u64).range(1..))]
        nmax: u64,
    },
    /// Verify a witness that property R fails.
    Witness {
        file: String,
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u64).range(1..=20))]
        subfamily: u64,
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(1..))]
        depth: u32,
    },
    /// Print a poset document: a family truncation or a poset file.
    Export {
        /// Family name, poset file, or `@name`.
        source: String,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
        depth: u32,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Topology {
    Scott,
    Alexandroff,
    Upper,
    Lower,
    Lawson,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Mode {
    Exhaustive,
    Random,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(v) = env::var("SCOTTLAB_MAX_SIZE") {
        match v.parse::<usize>() {
            Ok(n) if n >= 1 => limits::override_caps(n),
            _ => {
                eprintln!("error: SCOTTLAB_MAX_SIZE must be a positive integer, got `{v}`");
                return ExitCode::from(2);
            }
        }
    }
    match commands::run(&cli) {
        Ok(commands::Output::Report(r)) => {
            if cli.json {
                println!("{}", r.to_json());
            } else {
                print!("{}", r.to_table());
            }
            ExitCode::from(if r.passed { 0 } else { 1 })
        }
        Ok(commands::Output::Text(t)) => {
            print!("{t}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
