//! `spined`: classify semigroup tables, search for adequate transversals,
//! run the verification suite and build spined products from the shell.
//!
//! Exit status is 0 on success, 1 when a verification has failing rows and
//! 2 for usage or input errors.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "spined", version, about = "Adequate transversals and spined products of finite semigroups")]
pub struct Cli {
    /// Output format for reports.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a semigroup and list its starred Green classes.
    Analyze { file: PathBuf },
    /// List the adequate transversals among subsemigroups with few generators.
    Transversals {
        file: PathBuf,
        /// Largest generating set tried.
        #[arg(long, default_value_t = 2)]
        max_gen: usize,
        /// Try every subset instead (orders up to 12 only).
        #[arg(long)]
        all_subsets: bool,
        /// Keep one transversal per isomorphism type and flag combination.
        #[arg(long)]
        dedup_iso: bool,
    },
    /// Run the full verification suite; exit 0 iff every row passes.
    Verify {
        file: PathBuf,
        /// Transversal elements such as `0,3,7`; defaults to the document's
        /// `transversal` subset.
        #[arg(long)]
        transversal: Option<String>,
    },
    /// Rebuild S as the spined product of its parts and print T with its
    /// diagonal `T0` and the isomorphism `phi`.
    Spined {
        file: PathBuf,
        #[arg(long)]
        transversal: Option<String>,
    },
    /// Chen's construction. The document is the core with maps `act`,
    /// `proj` and `star`; without them it must carry a transversal of a left
    /// adequate semigroup, which is rebuilt. With `--band` the core is
    /// combined with a left normal band.
    Chen {
        file: PathBuf,
        #[arg(long)]
        transversal: Option<String>,
        /// Left normal band document.
        #[arg(long, requires = "embed")]
        band: Option<PathBuf>,
        /// Band elements receiving the core idempotents, in increasing order.
        #[arg(long, requires = "band")]
        embed: Option<String>,
    },
    /// Print a generated family as a document, e.g. `rectangular_band(2,3)`.
    Generate { spec: String },
    /// The built-in corpus.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum CorpusAction {
    /// Run every check on every corpus instance and sample; print a summary.
    Run {
        #[arg(long, default_value_t = 2)]
        max_gen: usize,
        /// Print every report, not only the summary and failures.
        #[arg(long)]
        verbose: bool,
    },
    /// List the corpus family specs.
    List,
    /// Write each corpus semigroup as a canonical document into DIR.
    Write { dir: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
