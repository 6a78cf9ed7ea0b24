use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "aeu",
    version,
    about = "Algebraic expected utility: evaluation, comparison and axiom checks"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a lottery under a utility assignment.
    Eval {
        #[arg(long)]
        lottery: PathBuf,
        #[arg(long)]
        utility: PathBuf,
        /// Evaluate compound lotteries by backward induction instead of
        /// reducing first.
        #[arg(long)]
        fold: bool,
    },
    /// Compare two lotteries under a utility assignment.
    Compare {
        #[arg(long)]
        lottery: PathBuf,
        #[arg(long)]
        lottery2: PathBuf,
        #[arg(long)]
        utility: PathBuf,
    },
    /// Reduce a lottery to its simple form.
    Reduce {
        #[arg(long)]
        lottery: PathBuf,
    },
    /// The autodual measure <Pl(A), Pl(not A)> of an event.
    Sigma {
        #[arg(long)]
        measure: PathBuf,
        /// Comma-separated state names; empty for the empty event.
        #[arg(long, allow_hyphen_values = true)]
        event: String,
    },
    /// The binary lottery equivalent to a sure consequence.
    Elicit {
        #[arg(long)]
        utility: PathBuf,
        #[arg(long)]
        consequence: String,
    },
    /// Run a checker suite.
    Check(CheckArgs),
    /// Recover a utility assignment from a preference table.
    Synthesize {
        #[arg(long)]
        table: PathBuf,
    },
    /// The lottery an act induces through a plausibility measure.
    Induce {
        #[arg(long)]
        measure: PathBuf,
        #[arg(long)]
        act: PathBuf,
        /// Takes the consequence space from this utility file when the act
        /// file has none.
        #[arg(long)]
        utility: Option<PathBuf>,
    },
    /// Re-serialize any input file in canonical form.
    Format {
        #[arg(long)]
        file: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Semiring,
    Order,
    CAxioms,
    DAxioms,
    Solvability,
    Lemma1,
    Lemma2,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    /// Exhaustive when the universe fits the cap, sampled otherwise.
    Auto,
    Exhaustive,
    Sampled,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(long, value_enum)]
    pub suite: Suite,
    /// Semiring descriptor, e.g. prob, qualposs:3, kappa, lexprob:2, product:prob:prob.
    #[arg(long)]
    pub semiring: String,
    /// Utility for the axiom suites; a seeded random one is drawn otherwise.
    #[arg(long)]
    pub utility: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = ModeArg::Auto)]
    pub mode: ModeArg,
    #[arg(long, default_value_t = 3)]
    pub consequences: usize,
    #[arg(long, default_value_t = 2)]
    pub depth: usize,
    #[arg(long, default_value_t = 3)]
    pub branches: usize,
    #[arg(long, default_value_t = 500)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 8)]
    pub denominator_bound: u64,
    #[arg(long, default_value_t = 32)]
    pub kappa_ceiling: u64,
    #[arg(long, default_value_t = 200)]
    pub transitivity_threshold: usize,
    #[arg(long, default_value_t = 2_000_000)]
    pub max_universe: usize,
}
