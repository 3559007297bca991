//! soberscope: check sobriety properties, derive SI-topologies, build
//! sobrifications and sup-quotients, and replay the counterexample
//! scenarios, over finite spaces given as JSON documents and over the
//! built-in symbolic families.

mod commands;
mod document;
mod output;
mod pool;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{CmdError, Ctx};
use document::{parse_map, parse_space, ParsedMap, ParsedSpace};
use output::{Emitter, Format};

#[derive(Parser)]
#[command(name = "soberscope")]
#[command(about = "Mechanical checks for sobriety hierarchies and irreducibly-derived topologies")]
#[command(version)]
struct Cli {
    /// Output format for check records.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,

    /// Enable slow definitional cross-checks on small inputs.
    #[arg(long, global = true)]
    oracle: bool,

    /// Parameter bound for symbolic (bounded) verifications.
    #[arg(long, global = true, default_value_t = 40)]
    bound: u64,

    /// Seed for all sampled sweeps.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a property of a space.
    Check {
        /// Path to a space document (`-` for stdin).
        space: PathBuf,
        /// t0 | sober | bounded-sober | k-bounded-sober | qk-bounded-sober | prop-2-6
        #[arg(long)]
        property: String,
    },
    /// Compute the irreducibly-derived topology of a space.
    DeriveSi {
        space: PathBuf,
    },
    /// Build a derived space.
    Construct {
        #[command(subcommand)]
        what: ConstructCommand,
    },
    /// Check continuity, sup preservation and embedding status of a map.
    MapCheck {
        /// Path to a map document.
        map: PathBuf,
    },
    /// Run the reflection of a space into k-bounded sober spaces along a map.
    Reflector {
        map: PathBuf,
    },
    /// Replay a named counterexample scenario.
    Paper {
        /// thm3.3-case1 | thm3.3-case2 | prop3.9 | ex3.6 | ex4.4 | ex4.6
        #[arg(long)]
        scenario: String,
    },
    /// Sweep a property over seeded random finite spaces.
    Fuzz {
        #[arg(long, default_value_t = 5)]
        carrier_max: usize,
        #[arg(long, default_value_t = 100)]
        samples: u64,
        /// prop-2-6 | prop-2-4 | prop-2-8 | sobriety-collapse |
        /// irreducibles-are-point-closures | quotient-homeomorphism |
        /// reflector-laws
        #[arg(long)]
        property: String,
    },
}

#[derive(Subcommand)]
enum ConstructCommand {
    /// The space of sup-bounded irreducible closed sets with its co-topology.
    Kb { space: PathBuf },
    /// Its quotient by equal suprema, homeomorphic to the SI-space.
    Quotient { space: PathBuf },
    /// The sobrification.
    Sobrify { space: PathBuf },
    /// The product of finite spaces.
    Product { spaces: Vec<PathBuf> },
}

fn read_space(path: &PathBuf) -> Result<ParsedSpace, CmdError> {
    let text = read_input(path)?;
    parse_space(&text).map_err(|diags| {
        CmdError(
            diags
                .iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join("; "),
        )
    })
}

fn read_map(path: &PathBuf) -> Result<ParsedMap, CmdError> {
    let text = read_input(path)?;
    parse_map(&text).map_err(|diags| {
        CmdError(
            diags
                .iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join("; "),
        )
    })
}

fn read_input(path: &PathBuf) -> Result<String, CmdError> {
    if path.as_os_str() == "-" {
        use std::io::Read;
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CmdError(format!("stdin: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| CmdError(format!("{}: {e}", path.display())))
    }
}

fn run(cli: &Cli) -> Result<bool, CmdError> {
    let ctx = Ctx {
        emitter: Emitter::new(cli.format),
        oracle: cli.oracle,
    };
    match &cli.command {
        Command::Check { space, property } => {
            let space = read_space(space)?;
            commands::cmd_check(&ctx, &space, property, cli.bound, cli.seed)
        }
        Command::DeriveSi { space } => {
            let space = read_space(space)?;
            commands::cmd_derive_si(&ctx, &space, cli.bound, cli.seed)
        }
        Command::Construct { what } => match what {
            ConstructCommand::Kb { space } => {
                let space = read_space(space)?;
                commands::cmd_construct_kb(&ctx, &space, cli.bound, cli.seed)
            }
            ConstructCommand::Quotient { space } => {
                let space = read_space(space)?;
                commands::cmd_construct_quotient(&ctx, &space, cli.bound, cli.seed)
            }
            ConstructCommand::Sobrify { space } => {
                let space = read_space(space)?;
                commands::cmd_construct_sobrify(&ctx, &space)
            }
            ConstructCommand::Product { spaces } => {
                let parsed: Result<Vec<ParsedSpace>, CmdError> =
                    spaces.iter().map(read_space).collect();
                commands::cmd_construct_product(&ctx, &parsed?)
            }
        },
        Command::MapCheck { map } => {
            let map = read_map(map)?;
            commands::cmd_map_check(&ctx, &map, cli.bound, cli.seed)
        }
        Command::Reflector { map } => {
            let map = read_map(map)?;
            commands::cmd_reflector(&ctx, &map, cli.bound, cli.seed)
        }
        Command::Paper { scenario } => commands::cmd_paper(&ctx, scenario, cli.bound, cli.seed),
        Command::Fuzz {
            carrier_max,
            samples,
            property,
        } => commands::cmd_fuzz(&ctx, *carrier_max, *samples, cli.seed, property),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::from(0),
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
