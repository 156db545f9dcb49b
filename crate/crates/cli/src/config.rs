use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use homjordan::SpaceKind;

/// Exact checks for finite-dimensional Hom-Jordan algebras.
#[derive(Debug, Clone, Parser)]
#[command(name = "homjordan", version, about)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Algebra JSON file, or a directory of them (read in file-name order).
    #[arg(long, short, global = true)]
    pub input: Option<PathBuf>,

    /// Write the JSON report here instead of stdout (atomically).
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    /// Largest twist power `k` to solve for.
    #[arg(long = "max-power", short = 'k', global = true, default_value_t = 3)]
    pub max_power: usize,

    /// Comma-separated space kinds for `spaces` (default: all six).
    #[arg(long, global = true, value_delimiter = ',', value_parser = parse_kind)]
    pub kinds: Vec<SpaceKind>,

    /// Seed for generated random algebras.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Also run checks whose preconditions fail and record the outcome.
    #[arg(long, global = true)]
    pub explore: bool,
}

fn parse_kind(s: &str) -> Result<SpaceKind, String> {
    s.parse()
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Check commutativity, the Hom-Jordan identity and multiplicativity.
    Validate,
    /// Solve for the derivation-type operator spaces.
    Spaces,
    /// Run a verification suite.
    Theorems {
        #[arg(long, value_enum, default_value_t = SuiteSel::Section3)]
        suite: SuiteSel,
        /// Read the multiplication algebra as the composition envelope.
        #[arg(long)]
        envelope: bool,
    },
    /// Build the degree-two extension and run its checks.
    Extend,
    /// Centroid structure, with an optional subset or ideal to test.
    Centroid {
        /// Basis rows as JSON (inline or a file path).
        #[arg(long)]
        ideal: Option<String>,
        #[arg(long)]
        envelope: bool,
    },
    /// Quotient by an ideal and check the induced maps.
    Quotient {
        /// Basis rows as JSON (inline or a file path).
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        envelope: bool,
    },
    /// Emit example algebras.
    Gen {
        #[arg(long, value_enum, default_value_t = GenKind::Corpus)]
        kind: GenKind,
        /// Dimension for `abelian` and `random`.
        #[arg(long, default_value_t = 2)]
        dim: usize,
        /// Twist parameter for `yau`.
        #[arg(long, default_value_t = 2)]
        lambda: i64,
        /// Base algebra for `yau`.
        #[arg(long, value_enum, default_value_t = YauBase::Dual)]
        base: YauBase,
        /// Diagonal twist entries for `plus`.
        #[arg(long, value_delimiter = ',', default_values_t = [1i64, 2])]
        diag: Vec<i64>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteSel {
    Section3,
    Section4,
    Section5,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    /// The full named corpus plus seeded random members.
    Corpus,
    Abelian,
    Unital,
    Dual,
    Poly3,
    Sym2,
    Peirce3,
    Yau,
    Plus,
    Random,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum YauBase {
    Dual,
    Poly3,
}
