use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use a6ext_core::pipeline::{exit_code, run_stage, Stage};
use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "a6ext", version, about = "Certificate chain for A6.mu4 acting on a K3 surface")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Log progress to stderr (repeat for more detail).
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    verbose: u8,
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum Command {
    /// Run every stage and report the verdict.
    All,
    /// Projective groups, overgroups of A6 and the four extensions.
    Groups,
    /// Character table of A6 and its comparison with the reference.
    Chartab,
    /// Invariant rank and the decomposition of S(X).
    Decompose,
    /// Sign-case analysis excluding three of the four extensions.
    Exclude,
    /// Gram matrix checks.
    Lattice,
}

impl From<Command> for Stage {
    fn from(c: Command) -> Stage {
        match c {
            Command::All => Stage::All,
            Command::Groups => Stage::Groups,
            Command::Chartab => Stage::Chartab,
            Command::Decompose => Stage::Decompose,
            Command::Exclude => Stage::Exclude,
            Command::Lattice => Stage::Lattice,
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

fn run(cli: &Cli) -> anyhow::Result<i32> {
    let stage = Stage::from(cli.command);
    let report = run_stage(stage).with_context(|| format!("stage {} failed", stage.name()))?;
    let rendered = match cli.format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json(),
    };
    match &cli.out {
        Some(path) => fs::write(path, &rendered)
            .with_context(|| format!("writing {}", path.display()))?,
        None => std::io::stdout().write_all(rendered.as_bytes())?,
    }
    Ok(exit_code(stage, &report))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = match cli.verbose {
        0 => log::LevelFilter::Warn,
        1 => log::LevelFilter::Info,
        _ => log::LevelFilter::Debug,
    };
    env_logger::Builder::new().filter_level(level).init();
    match run(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
