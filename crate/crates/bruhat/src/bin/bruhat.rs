//! Command line for the bruhat crate. Results go to stdout; timing and
//! errors go to stderr, so stdout stays byte-deterministic per command
//! line.

use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use bruhat::cli::{self, CommandKind, CommandRequest};
use bruhat::weyl::DEFAULT_ELEMENT_BUDGET;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

impl From<Format> for cli::OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Table => cli::OutputFormat::Table,
            Format::Json => cli::OutputFormat::Json,
            Format::Csv => cli::OutputFormat::Csv,
        }
    }
}

/// Exact Weyl group combinatorics, Bruhat cell tables, and homotopy
/// bookkeeping for simply-laced diagrams.
///
/// Diagrams are named (A<n>, D<n>, E<n>, any rank) or read from a matrix
/// file; node sets are 1-based lists like `1-8,10`.
#[derive(Parser)]
#[command(name = "bruhat", version, max_term_width = 100)]
struct Args {
    /// Output format for results on stdout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Cap on enumerated group elements per computation.
    #[arg(long, global = true, default_value_t = DEFAULT_ELEMENT_BUDGET)]
    budget: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count Weyl group elements by length.
    Growth {
        /// Diagram name or matrix file path.
        diagram: String,
        /// Largest length to enumerate.
        #[arg(long, default_value_t = 10)]
        max_len: usize,
    },
    /// Count minimal coset representatives by length.
    Cosets {
        /// Diagram name or matrix file path.
        diagram: String,
        /// Parabolic node set, 1-based; defaults to all but the last node.
        #[arg(long)]
        sub: Option<String>,
        /// Largest length to enumerate.
        #[arg(long, default_value_t = 8)]
        max_len: usize,
        /// Also print the canonical reduced word of each representative.
        #[arg(long)]
        words: bool,
    },
    /// Tabulate Bruhat cells of a flag quotient by dimension.
    Cells {
        /// Diagram name or matrix file path.
        diagram: String,
        /// Parabolic node set, 1-based; defaults to all but the last node.
        #[arg(long)]
        sub: Option<String>,
        /// Largest cell dimension to tabulate.
        #[arg(long, default_value_t = 8)]
        max_dim: usize,
        /// Lift the table through a cover with this many sheets.
        #[arg(long, default_value_t = 1)]
        sheets: u64,
    },
    /// Compare two cell tables dimension by dimension.
    Compare {
        /// Left diagram name or matrix file path.
        left: String,
        /// Right diagram name or matrix file path.
        right: String,
        /// Parabolic node sets for the two sides, 1-based.
        #[arg(long, num_args = 2, value_names = ["LEFT_SUB", "RIGHT_SUB"])]
        subs: Option<Vec<String>>,
        /// Largest cell dimension to compare.
        #[arg(long, default_value_t = 8)]
        max_dim: usize,
    },
    /// Deduce low-degree homotopy of the compact form of E_n.
    #[command(name = "homotopy-en")]
    HomotopyEn {
        /// Rank of the diagram, at least 8.
        #[arg(long)]
        n: usize,
        /// Largest degree to report, at most 6.
        #[arg(long, default_value_t = 6)]
        max_k: usize,
    },
    /// Build the Whitehead tower of a named space.
    Tower {
        /// One of O(n), SO(n), or K(En).
        space: String,
        /// Largest tracked degree.
        #[arg(long, default_value_t = 6)]
        max_k: usize,
    },
    /// Print the stable homotopy table of the orthogonal family.
    Bott {
        /// Largest degree to print.
        #[arg(long, default_value_t = 15)]
        max_k: usize,
    },
}

fn main() {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let args = Args::parse();
    let kind = match args.command {
        Command::Growth { diagram, max_len } => CommandKind::Growth { diagram, max_len },
        Command::Cosets { diagram, sub, max_len, words } => {
            CommandKind::Cosets { diagram, sub, max_len, words }
        }
        Command::Cells { diagram, sub, max_dim, sheets } => {
            CommandKind::Cells { diagram, sub, max_dim, sheets }
        }
        Command::Compare { left, right, subs, max_dim } => {
            let subs = subs.map(|mut v| {
                let b = v.pop().expect("clap enforces two values");
                let a = v.pop().expect("clap enforces two values");
                (a, b)
            });
            CommandKind::Compare { left, right, subs, max_dim }
        }
        Command::HomotopyEn { n, max_k } => CommandKind::HomotopyEn { n, max_k },
        Command::Tower { space, max_k } => CommandKind::Tower { space, max_k },
        Command::Bott { max_k } => CommandKind::Bott { max_k },
    };
    let request = CommandRequest {
        kind,
        format: args.format.into(),
        budget: args.budget,
        argv,
    };
    let start = Instant::now();
    match cli::run(&request) {
        Ok(report) => {
            print!("{}", cli::render(&report, request.format));
            eprintln!("elapsed: {} ms", start.elapsed().as_millis());
        }
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(err.exit_code());
        }
    }
}
