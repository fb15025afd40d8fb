//! Command-line front end for `ncframe-core`: algebra files, classification,
//! implication tables, model generation and the theorem harness.

pub mod commands;
pub mod format;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use ncframe_core::Hand;

pub use commands::{CliError, Report};

#[derive(Debug, Parser)]
#[command(
    name = "ncframe",
    version,
    about = "Finite skew lattices, noncommutative Heyting algebras and frames"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum MethodArg {
    Nh,
    Sup,
    Both,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum HandArg {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum CorpusArg {
    Default,
    Pfn1,
    Empty,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum MutateArg {
    Pfn1,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the skew lattice axioms (and zero/t when present).
    Validate { path: PathBuf },
    /// Property profile, D-classes, quotient, top class and lattice sections.
    Classify {
        path: PathBuf,
        /// Largest commuting subset checked for join completeness.
        #[arg(long, default_value_t = 12)]
        cap: usize,
    },
    /// Implication table relative to a top-class element `t`.
    Imp {
        path: PathBuf,
        #[arg(long)]
        t: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Nh)]
        method: MethodArg,
        #[arg(long, default_value_t = 12)]
        cap: usize,
    },
    /// Print a model as an algebra file.
    #[command(subcommand)]
    Model(ModelCommand),
    /// Run the theorem harness over a corpus and/or algebra files.
    Verify {
        /// Built-in corpus; defaults to `default` when no paths are given.
        #[arg(long, value_enum)]
        corpus: Option<CorpusArg>,
        /// Add P(4) to the corpus.
        #[arg(long)]
        p4: bool,
        /// Add seeded random subalgebras.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 20)]
        random_count: usize,
        /// Run the single-cell mutants instead of a corpus.
        #[arg(long, value_enum)]
        mutate: Option<MutateArg>,
        /// Tab-separated records: theorem, instance, pass|fail|skip, detail.
        #[arg(long)]
        machine: bool,
        /// Largest commuting subset enumerated.
        #[arg(long, default_value_t = 12)]
        cap: usize,
        /// Enumerate commuting subsets of every size.
        #[arg(long, conflicts_with = "cap")]
        no_cap: bool,
        paths: Vec<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum ModelCommand {
    /// Partial functions from an m-set to {0,1}.
    Pfn {
        #[arg(long)]
        m: usize,
    },
    /// Rectangular band.
    Rect {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = HandArg::Left)]
        hand: HandArg,
    },
    Chain {
        #[arg(long)]
        n: usize,
        /// Include the Heyting implication, zero and top.
        #[arg(long)]
        heyting: bool,
    },
    /// Subsets of a k-set.
    Bool {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        heyting: bool,
    },
    /// Direct product of two algebra files.
    Product { left: PathBuf, right: PathBuf },
}

pub fn run(cli: Cli) -> Result<Report, CliError> {
    use commands::*;
    match cli.command {
        Command::Validate { path } => cmd_validate(&path),
        Command::Classify { path, cap } => cmd_classify(&path, Some(cap)),
        Command::Imp {
            path,
            t,
            method,
            cap,
        } => {
            let method = match method {
                MethodArg::Nh => Method::Nh,
                MethodArg::Sup => Method::Sup,
                MethodArg::Both => Method::Both,
            };
            cmd_imp(&path, t, method, Some(cap))
        }
        Command::Model(m) => {
            let kind = match m {
                ModelCommand::Pfn { m } => ModelKind::Pfn { arity: m },
                ModelCommand::Rect { n, hand } => ModelKind::Rect {
                    n,
                    hand: match hand {
                        HandArg::Left => Hand::Left,
                        HandArg::Right => Hand::Right,
                    },
                },
                ModelCommand::Chain { n, heyting } => ModelKind::Chain { n, heyting },
                ModelCommand::Bool { k, heyting } => ModelKind::Bool { k, heyting },
                ModelCommand::Product { left, right } => ModelKind::Product { left, right },
            };
            cmd_model(&kind)
        }
        Command::Verify {
            corpus,
            p4,
            seed,
            random_count,
            mutate,
            machine,
            cap,
            no_cap,
            paths,
        } => cmd_verify(&VerifyOptions {
            corpus: corpus.map(|c| match c {
                CorpusArg::Default => CorpusChoice::Default,
                CorpusArg::Pfn1 => CorpusChoice::Pfn1,
                CorpusArg::Empty => CorpusChoice::Empty,
            }),
            p4,
            seed,
            random_count,
            mutate_pfn1: mutate.is_some(),
            machine,
            cap: (!no_cap).then_some(cap),
            paths,
        }),
    }
}
