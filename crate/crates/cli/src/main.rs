//! `respoly`: reports and verification for residue spaces of level graphs.

mod commands;
mod output;
mod verify;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Counts, level components, summits and special components.
    Info,
    /// Flag dimensions, the five dimension identities and the per-component table.
    Dims,
    /// Canonical bases of the four flag spaces over the arrow coordinates.
    Basis,
    /// The table of projected dimensions of the residue space.
    Gamma,
    /// Vertices and inequalities of the base polytope of the table.
    Polytope,
    /// The face of the residue polytope cut out by every ordered partition.
    Faces,
    /// Degenerate the input's residue space along a finer level structure.
    Degenerate,
    /// Run the full verification suite.
    Verify,
}

/// Run configuration shared by all commands.
#[derive(Debug, Parser)]
#[command(
    name = "respoly",
    version,
    about = "Residue spaces, residue polytopes and their degenerations"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Graph document (JSON); `verify` without it runs on the shipped fixtures.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    /// A shipped fixture by name (FIG1, FIG2, K4, C3, LOOP1), instead of --input.
    #[arg(long, global = true, conflicts_with = "input")]
    pub fixture: Option<String>,
    /// Level map of the finer structure, for `degenerate`.
    #[arg(long, global = true)]
    pub fine: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Vertex bound for exhaustive sweeps over ordered partitions.
    #[arg(long, global = true, default_value_t = 6)]
    pub max_vertices: usize,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Number of random graphs in the verification suite.
    #[arg(long, global = true, default_value_t = 25)]
    pub random_cases: usize,
}

fn main() -> ExitCode {
    let cfg = match RunConfig::try_parse() {
        Ok(cfg) => cfg,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if cfg.max_vertices > respoly::polymat::DEFAULT_VERTEX_BOUND {
        eprintln!(
            "error: --max-vertices may be at most {}",
            respoly::polymat::DEFAULT_VERTEX_BOUND
        );
        return ExitCode::from(2);
    }
    match commands::run(&cfg) {
        Ok(outcome) => {
            let body = match cfg.format {
                Format::Json => {
                    serde_json::to_string_pretty(&outcome.json).expect("serializable") + "\n"
                }
                Format::Text => outcome.text,
            };
            // A closed pipe downstream is not an error of ours.
            let _ = std::io::stdout().lock().write_all(body.as_bytes());
            if outcome.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
