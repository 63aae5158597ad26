//! `nbhd`: batch front end for neighbourhood structures on finite distributive lattices.
//!
//! Exit codes: 0 success, 1 a reported check failed, 2 input error.

mod commands;
mod output;
mod spec;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use nbhd_core::StructureClass;

use output::Output;
use spec::{Catalog, Input, InputError};

#[derive(Debug, Clone, Copy)]
pub struct Caps {
    pub set: usize,
    pub lattice: usize,
    pub frame: usize,
}

#[derive(Parser)]
#[command(
    name = "nbhd",
    version,
    about = "Neighbourhood structures on finite distributive lattices"
)]
struct Cli {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Largest finite set accepted.
    #[arg(long, global = true, default_value_t = 6)]
    cap_set: usize,
    /// Largest lattice on which structures are enumerated.
    #[arg(long, global = true, default_value_t = 8)]
    cap_lattice: usize,
    /// Largest frame whose sublocales are computed.
    #[arg(long, global = true, default_value_t = 8)]
    cap_frame: usize,
    /// Include wall-clock time in the report.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Inputs {
    /// Spec files: each holds one spec object or an array of them.
    #[arg(required = true)]
    files: Vec<PathBuf>,
    /// Name of the spec to act on, when the inputs hold several candidates.
    #[arg(long)]
    target: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Facet {
    Nbhd,
    Pfs,
    Kuratowski,
}

impl Facet {
    pub fn name(self) -> &'static str {
        match self {
            Facet::Nbhd => "nbhd",
            Facet::Pfs => "pfs",
            Facet::Kuratowski => "kuratowski",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Prenbhd,
    Pseudoopen,
    Frobenius,
    Ppj,
}

#[derive(Clone, Copy)]
pub enum ReflectTarget {
    Weak,
    Nbhd,
    Top,
}

fn parse_class(s: &str) -> Result<StructureClass, String> {
    StructureClass::parse(s)
        .ok_or_else(|| format!("unknown class {s:?}; expected Pre, Weak, Nbhd or Topology"))
}

#[derive(Subcommand)]
enum Command {
    /// Classify a preneighbourhood and show its opens and interiors.
    Classify {
        #[command(flatten)]
        inputs: Inputs,
        /// Fail unless the class is exactly this.
        #[arg(long, value_parser = parse_class)]
        expect: Option<StructureClass>,
    },
    /// Convert between neighbourhoods, pseudo-frame sets and Kuratowski interiors.
    Convert {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long, value_enum)]
        to: Facet,
        /// Convert back and check the original is recovered.
        #[arg(long)]
        round_trip: bool,
    },
    /// Enumerate the structures of a class on a lattice.
    Enumerate {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long, value_parser = parse_class, default_value = "Pre")]
        class: StructureClass,
        #[arg(long)]
        count_only: bool,
    },
    /// Reflect a structure into a stronger class.
    Reflect {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long, group = "into", required = true)]
        weak: bool,
        #[arg(long, group = "into")]
        nbhd: bool,
        #[arg(long, group = "into")]
        top: bool,
    },
    /// Check properties of a morphism bundle.
    Morphism {
        #[command(flatten)]
        inputs: Inputs,
        /// Checks to run; all when omitted.
        #[arg(long = "check", value_enum)]
        checks: Vec<Check>,
    },
    /// Decide whether a finite-set morphism is a regular epimorphism.
    Regepi {
        #[command(flatten)]
        inputs: Inputs,
        /// Also compute hereditariness both ways.
        #[arg(long)]
        hereditary: bool,
        /// Also check the neighbourhood-space statements.
        #[arg(long)]
        nhd: bool,
    },
    /// Natural topology on the sublocales of a frame, and the right-inverse check.
    Locale {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long)]
        natural_topology: bool,
        /// Check every supplied localic map, or every map between the supplied frames.
        #[arg(long)]
        right_inverse: bool,
    },
}

fn run(cli: &Cli) -> Input<Output> {
    let caps = Caps {
        set: cli.cap_set,
        lattice: cli.cap_lattice,
        frame: cli.cap_frame,
    };
    let load = |inputs: &Inputs| -> Input<Catalog> { Catalog::load(&inputs.files, caps) };
    match &cli.command {
        Command::Classify { inputs, expect } => {
            commands::classify(&load(inputs)?, inputs.target.as_deref(), *expect)
        }
        Command::Convert {
            inputs,
            to,
            round_trip,
        } => commands::convert(&load(inputs)?, inputs.target.as_deref(), *to, *round_trip),
        Command::Enumerate {
            inputs,
            class,
            count_only,
        } => commands::enumerate(
            &load(inputs)?,
            inputs.target.as_deref(),
            *class,
            *count_only,
            caps,
        ),
        Command::Reflect {
            inputs, weak, nbhd, ..
        } => {
            let to = if *weak {
                ReflectTarget::Weak
            } else if *nbhd {
                ReflectTarget::Nbhd
            } else {
                ReflectTarget::Top
            };
            commands::reflect(&load(inputs)?, inputs.target.as_deref(), to, caps)
        }
        Command::Morphism { inputs, checks } => {
            commands::morphism(&load(inputs)?, inputs.target.as_deref(), checks, caps)
        }
        Command::Regepi {
            inputs,
            hereditary,
            nhd,
        } => commands::regepi(&load(inputs)?, inputs.target.as_deref(), *hereditary, *nhd),
        Command::Locale {
            inputs,
            natural_topology,
            right_inverse,
        } => commands::locale(
            &load(inputs)?,
            inputs.target.as_deref(),
            *natural_topology,
            *right_inverse,
            caps,
        ),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(&cli) {
        Ok(mut out) => {
            if cli.timing {
                out.timing_ms = Some(start.elapsed().as_secs_f64() * 1e3);
            }
            if cli.json {
                println!("{}", out.to_json());
            } else {
                print!("{}", out.to_text());
            }
            if out.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
