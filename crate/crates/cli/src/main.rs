use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

mod commands;
mod report;

use report::{Outcome, RunReport};

#[derive(Debug, Parser)]
#[command(
    name = "wreathkit",
    version,
    about = "Wreath products of finite monoids with transformation semigroups"
)]
struct Cli {
    /// Report format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "lowercase")]
enum Command {
    /// Count idempotents of M≀T_n or M≀Sing_n.
    Idempotents(commands::IdempotentsArgs),
    /// Certify a presentation against the semigroup it should define.
    Verify(commands::VerifyArgs),
    /// Rank and idempotent rank of M≀Sing_n.
    Rank(commands::RankArgs),
    /// Decide whether a set of ε_ij, or of transformations, generates Sing_n.
    Gens(commands::GensArgs),
    /// Print a presentation.
    Emit(commands::EmitArgs),
    /// Count the classes of a presentation read from a file.
    Tc(commands::TcArgs),
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Idempotents(_) => "idempotents",
            Command::Verify(_) => "verify",
            Command::Rank(_) => "rank",
            Command::Gens(_) => "gens",
            Command::Emit(_) => "emit",
            Command::Tc(_) => "tc",
        }
    }

    fn run(&self) -> anyhow::Result<Outcome> {
        match self {
            Command::Idempotents(a) => commands::idempotents(a),
            Command::Verify(a) => commands::verify(a),
            Command::Rank(a) => commands::rank(a),
            Command::Gens(a) => commands::gens(a),
            Command::Emit(a) => commands::emit(a),
            Command::Tc(a) => commands::tc(a),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let outcome = cli.command.run();
    let parameters = serde_json::to_value(&cli.command)
        .ok()
        .and_then(|v| v.as_object().and_then(|o| o.values().next().cloned()))
        .unwrap_or_default();
    let report = RunReport::new(cli.command.name(), parameters, outcome, start.elapsed());
    let text = report.render(cli.format);
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(report.exit_code)
}
