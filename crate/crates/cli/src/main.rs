// SPDX-License-Identifier: Apache-2.0

use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ttpack_cli::commands::{self, exit, Format, Outcome};
use ttpack_core::{MotifKind, Strategy};

/// Packings and decompositions of transitive tournaments into chains,
/// colliders and forks.
///
/// Exit codes: 0 valid decomposition (oracle: MATCH), 1 invalid (MISMATCH),
/// 2 usage error, 3 valid packing with unused arcs (INCONCLUSIVE).
#[derive(Parser)]
#[command(name = "ttpack", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a collection with one of the constructions and verify it.
    Decompose {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_enum, default_value_t = StrategyArg::Mixed)]
        strategy: StrategyArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// Closed-form counts for TT_n.
    Counts {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// Verify a JSON collection document read from --input or stdin.
    Verify {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// Exact maximum packing by branch and bound, compared with the formula.
    Oracle {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        /// Node-expansion cap; 0 removes the cap.
        #[arg(long, default_value_t = ttpack_core::oracle::DEFAULT_MAX_NODES)]
        max_nodes: u64,
        /// Wall-clock cap in seconds.
        #[arg(long)]
        max_time: Option<f64>,
        /// Print the best packing found.
        #[arg(long)]
        witness: bool,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Mixed,
    ChainMax,
    ColliderMax,
    ForkMax,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Mixed => Strategy::Mixed,
            StrategyArg::ChainMax => Strategy::ChainMax,
            StrategyArg::ColliderMax => Strategy::ColliderMax,
            StrategyArg::ForkMax => Strategy::ForkMax,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Chain,
    Collider,
    Fork,
}

impl From<KindArg> for MotifKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Chain => MotifKind::Chain,
            KindArg::Collider => MotifKind::Collider,
            KindArg::Fork => MotifKind::Fork,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Text,
    Diagram,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Text => Format::Text,
            FormatArg::Diagram => Format::Diagram,
        }
    }
}

fn order(n: u64) -> Result<usize, Outcome> {
    usize::try_from(n).map_err(|_| Outcome {
        stderr: format!("error: --n {n} is too large\n"),
        code: exit::USAGE,
        ..Outcome::default()
    })
}

fn read_input(path: Option<PathBuf>) -> Result<String, Outcome> {
    let mut text = String::new();
    let res = match &path {
        Some(p) => std::fs::read_to_string(p).map(|s| text = s),
        None => io::stdin().read_to_string(&mut text).map(|_| ()),
    };
    res.map(|_| text).map_err(|e| Outcome {
        stderr: format!("error: cannot read input: {e}\n"),
        code: exit::USAGE,
        ..Outcome::default()
    })
}

fn run(cli: Cli) -> Result<Outcome, Outcome> {
    Ok(match cli.command {
        Command::Decompose { n, strategy, format } => commands::decompose(order(n)?, strategy.into(), format.into()),
        Command::Counts { n, format } => commands::counts(order(n)?, format.into()),
        Command::Verify { input, format } => commands::verify_document(&read_input(input)?, format.into()),
        Command::Oracle { kind, n, max_nodes, max_time, witness, format } => {
            commands::oracle(kind.into(), order(n)?, Some(max_nodes), max_time, witness, format.into())
        }
    })
}

fn main() -> ExitCode {
    let outcome = run(Cli::parse()).unwrap_or_else(|e| e);
    let _ = io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
