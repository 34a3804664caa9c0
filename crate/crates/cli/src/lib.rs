//! Command-line front end for the `triadic` library.

pub mod payload;
pub mod text;

use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use payload::{Document, EnumerateDoc, PlrSubgroup};
use triadic::topos::TopologyName;
use triadic::{AffineMap, Chord, PcSet};

#[derive(Parser, Debug)]
#[command(
    name = "triadic",
    version,
    about = "Dual groups, sub-dual systems and upgrades of the triadic monoid on Z12"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GroupArg {
    #[value(name = "PL")]
    Pl,
    #[value(name = "PR")]
    Pr,
    #[value(name = "PLR")]
    Plr,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SystemsArg {
    #[value(name = "PL")]
    Pl,
    #[value(name = "PR")]
    Pr,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Composition table of the triadic monoid.
    Monoid,
    /// Left ideals of the monoid and its action on them.
    Omega,
    /// The six Lawvere-Tierney topologies and the upgrades of C.
    Topologies,
    /// Characteristic morphism of a closed pitch-class set.
    Chi {
        /// Comma-separated pitch classes, e.g. 0,4,7.
        #[arg(long)]
        set: PcSet,
        /// Conjugate the action by a T/I element, e.g. T5 or I0.
        #[arg(long, default_value = "T0")]
        conjugate: AffineMap,
    },
    /// Upgrade of a closed pitch-class set along a topology.
    Upgrade {
        #[arg(long)]
        set: PcSet,
        /// T, P, L, R, chromatic1 or chromatic2.
        #[arg(long)]
        topology: TopologyName,
        #[arg(long, default_value = "T0")]
        conjugate: AffineMap,
    },
    /// Orbit of a seed chord under a PLR-subgroup and its T/I partner.
    Dual {
        #[arg(long, value_enum)]
        group: GroupArg,
        #[arg(long)]
        seed: Chord,
    },
    /// Every sub-dual system of a PLR-subgroup, one per orbit.
    Systems {
        #[arg(long, value_enum)]
        group: SystemsArg,
        /// Defaults to Eb for PL and C for PR.
        #[arg(long)]
        seed: Option<Chord>,
    },
    /// Closed covered carriers with a simply transitive PLR-subgroup.
    Enumerate,
    /// Replay of the case analysis behind the enumeration.
    Audit,
    /// Recheck the rows of `enumerate --format json` output.
    Verify {
        /// JSON file; reads stdin when omitted.
        input: Option<PathBuf>,
    },
}

/// A failed invocation: message for stderr and the process exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn refused(error: impl std::fmt::Display) -> Self {
        Failure {
            code: 1,
            message: format!("error: {error}"),
        }
    }

    fn usage(error: impl std::fmt::Display) -> Self {
        Failure {
            code: 2,
            message: format!("error: {error}"),
        }
    }
}

fn emit<T: Serialize>(
    format: Format,
    command: &str,
    payload: T,
    render: fn(&T) -> String,
) -> String {
    match format {
        Format::Text => render(&payload),
        Format::Json => {
            let doc = Document {
                command: command.to_string(),
                payload,
            };
            let mut out = serde_json::to_string_pretty(&doc).expect("payloads serialize");
            out.push('\n');
            out
        }
    }
}

fn read_input(input: Option<&PathBuf>) -> Result<String, Failure> {
    let mut buffer = String::new();
    match input {
        Some(path) => {
            buffer = std::fs::read_to_string(path)
                .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
        }
        None => {
            std::io::stdin()
                .read_to_string(&mut buffer)
                .map_err(Failure::usage)?;
        }
    }
    Ok(buffer)
}

/// Runs a parsed command and returns what goes to stdout.
pub fn run(cli: &Cli) -> Result<String, Failure> {
    let f = cli.format;
    let out = match &cli.command {
        Command::Monoid => emit(f, "monoid", payload::monoid(), text::monoid),
        Command::Omega => emit(f, "omega", payload::omega(), text::omega),
        Command::Topologies => emit(
            f,
            "topologies",
            payload::topologies().map_err(Failure::refused)?,
            text::topologies,
        ),
        Command::Chi { set, conjugate } => {
            let doc = payload::chi(*set, *conjugate).map_err(Failure::refused)?;
            emit(f, "chi", doc, text::chi)
        }
        Command::Upgrade {
            set,
            topology,
            conjugate,
        } => {
            let doc =
                payload::upgrade_doc(*set, *topology, *conjugate).map_err(Failure::refused)?;
            emit(f, "upgrade", doc, text::upgrade)
        }
        Command::Dual { group, seed } => {
            let group = match group {
                GroupArg::Pl => PlrSubgroup::Pl,
                GroupArg::Pr => PlrSubgroup::Pr,
                GroupArg::Plr => PlrSubgroup::Plr,
            };
            let doc = payload::dual(group, *seed).map_err(Failure::refused)?;
            emit(f, "dual", doc, text::dual)
        }
        Command::Systems { group, seed } => {
            let (group, default_seed) = match group {
                SystemsArg::Pl => (PlrSubgroup::Pl, "Eb"),
                SystemsArg::Pr => (PlrSubgroup::Pr, "C"),
            };
            let seed = seed.unwrap_or_else(|| default_seed.parse().expect("valid chord"));
            let doc = payload::systems(group, seed).map_err(Failure::refused)?;
            emit(f, "systems", doc, text::systems)
        }
        Command::Enumerate => emit(f, "enumerate", payload::enumerate(), text::enumerate),
        Command::Audit => emit(f, "audit", payload::audit(), text::audit),
        Command::Verify { input } => {
            let raw = read_input(input.as_ref())?;
            let doc: Document<EnumerateDoc> = serde_json::from_str(&raw)
                .map_err(|e| Failure::usage(format!("not an enumerate document: {e}")))?;
            let report = payload::verify(&doc.payload);
            let ok = report.all_ok;
            let out = emit(f, "verify", report, text::verify);
            if !ok {
                print!("{out}");
                return Err(Failure::refused("some rows failed verification"));
            }
            out
        }
    };
    Ok(out)
}
