use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "sturmian",
    version,
    about = "Refinements of Sturmian-measurable partitions under irrational rotation"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Rotation angle: `golden`, `silver` or an AlphaSpec JSON object.
    /// Overrides the angle given in input files.
    #[arg(long, global = true)]
    pub alpha: Option<String>,
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Largest refinement power computed.
    #[arg(long, global = true, default_value_t = 5000, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_power: u64,
    /// Largest number of cutpoints in an intermediate partition.
    #[arg(long, global = true, default_value_t = 100_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_cuts: u64,
    /// Largest number of words enumerated for one language.
    #[arg(long, global = true, default_value_t = 1 << 24, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_words: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Ascii,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Continued fraction expansion and convergent table.
    Cf {
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..=256))]
        depth: u64,
    },
    #[command(subcommand)]
    Partition(PartitionCommand),
    #[command(subcommand)]
    Towers(TowersCommand),
    /// Sliding block codes on the Sturmian subshift and on full shifts.
    #[command(subcommand)]
    Sbc(SbcCommand),
    #[command(subcommand)]
    Demo(DemoCommand),
    #[command(subcommand)]
    Experiment(ExperimentCommand),
}

#[derive(Debug, Subcommand)]
pub enum PartitionCommand {
    /// The refinement `R^n`.
    Refine {
        file: PathBuf,
        #[arg(long)]
        n: usize,
    },
    /// Least `k` with `R^k = T^{−ℓ}P^m`, searched up to `--max-power`.
    VerifyThm1 { file: PathBuf },
    /// Checks `R^K = T^{−ℓ}P^M` at the explicit bound.
    VerifyThm2 { file: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum TowersCommand {
    /// The two towers whose levels are the arcs of `P^{r_k−1}`.
    Show {
        #[arg(long)]
        k: usize,
        /// Partition whose code letters are written next to the levels.
        #[arg(long)]
        partition: Option<PathBuf>,
    },
    /// Tower codes `u`, `v`, the words built from them and the `Per`
    /// diagnostics.
    Codes {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        partition: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum SbcCommand {
    /// Minimality, first-letter dependence and injectivity of a rule.
    Analyze {
        file: PathBuf,
        /// Largest code length scanned for injectivity.
        #[arg(long, default_value_t = 12)]
        n_max: usize,
    },
    /// Least `n` with an injective code, for rules on the Sturmian language.
    MinimalN { file: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum DemoCommand {
    /// The rule `ψ(11) = ψ(10) = 0, ψ(01) = 1, ψ(00) = 2` on the full shift.
    Example1 {
        #[arg(long, default_value_t = 12)]
        n_max: usize,
        /// Longest word length for the prefix-determination check.
        #[arg(long, default_value_t = 14)]
        prefix_len: usize,
    },
    /// Partitions invariant under a rational rotation never become
    /// interval partitions.
    Symmetric {
        #[arg(long, default_value_t = 30)]
        max_n: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum ExperimentCommand {
    /// Checks the refinement bound on random coarsenings of `P^n`.
    Random {
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 8)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        labels: usize,
    },
}
