use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::random::DEFAULT_SEED;

/// Exact teaching-dimension solvers and gadget verification.
///
/// Exit codes: 0 ok, 1 a checked claim failed or a solver disagreed with its
/// oracle, 2 usage or I/O error, 3 parse error, 4 size or horizon bound
/// exceeded, 5 internal error.
#[derive(Debug, Parser)]
#[command(name = "teachdim", version)]
pub struct Cli {
    #[command(flatten)]
    pub config: Config,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Config {
    /// Largest domain accepted (class files, generated gadgets; random
    /// classes in `oracle`, where it defaults to 6).
    #[arg(long, global = true, env = "TEACHDIM_MAX_DOMAIN")]
    pub max_domain: Option<u32>,
    /// Overrides a gadget's derived stage horizon.
    #[arg(long, global = true, env = "TEACHDIM_STAGE_HORIZON")]
    pub stage_horizon: Option<u32>,
    /// Overrides a gadget's derived column horizon.
    #[arg(long, global = true, env = "TEACHDIM_COLUMN_HORIZON")]
    pub column_horizon: Option<u32>,
    #[arg(long, global = true, env = "TEACHDIM_SEED", default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Print one JSON document instead of `key: value` lines.
    #[arg(long, global = true, env = "TEACHDIM_MACHINE")]
    pub machine: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute a dimension of the class in FILE.
    Dimension {
        file: PathBuf,
        #[arg(long, value_enum)]
        measure: Measure,
        /// One row per concept (td, tdplus).
        #[arg(long)]
        all: bool,
    },
    /// Build a gadget and write it as a class file.
    Gadget {
        #[arg(value_enum)]
        gadget: Tag,
        #[command(flatten)]
        params: GadgetParams,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check a gadget's finite-scale claims.
    Verify {
        #[arg(value_enum)]
        gadget: Tag,
        #[command(flatten)]
        params: GadgetParams,
    },
    /// Compare a solver with its brute-force oracle on random classes.
    Oracle {
        #[arg(long, value_enum)]
        measure: Measure,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 5)]
        max_concepts: usize,
    },
    /// Try to refute every positive teaching set of size at most BUDGET.
    Probe {
        file: PathBuf,
        #[arg(long)]
        concept: String,
        #[arg(long)]
        budget: u32,
    },
    /// Validate a teaching sequence file against a class file.
    SequenceValidate {
        class: PathBuf,
        sequence: PathBuf,
        /// Positive examples only (RTD⁺ sequences).
        #[arg(long)]
        positive: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Measure {
    Td,
    Tdplus,
    Xtd,
    Xtdplus,
    Rtd,
    RtdplusSeq,
    Rtd1plus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Tag {
    Acds,
    T1,
    TdplusForall,
    Xtdplus,
    Lk,
    Gan,
    RtdReduction,
}

impl Tag {
    pub fn name(self) -> &'static str {
        match self {
            Tag::Acds => "acds",
            Tag::T1 => "t1",
            Tag::TdplusForall => "tdplus-forall",
            Tag::Xtdplus => "xtdplus",
            Tag::Lk => "lk",
            Tag::Gan => "gan",
            Tag::RtdReduction => "rtd-reduction",
        }
    }
}

impl Measure {
    pub fn name(self) -> &'static str {
        match self {
            Measure::Td => "td",
            Measure::Tdplus => "tdplus",
            Measure::Xtd => "xtd",
            Measure::Xtdplus => "xtdplus",
            Measure::Rtd => "rtd",
            Measure::RtdplusSeq => "rtdplus-seq",
            Measure::Rtd1plus => "rtd1plus",
        }
    }
}

/// Gadget parameters; each tag reads the ones it needs.
#[derive(Debug, Clone, Args)]
pub struct GadgetParams {
    /// Set descriptor W (acds, t1, tdplus-forall, xtdplus), e.g. `cofinite:{3}`.
    #[arg(long)]
    pub w: Option<String>,
    /// Set descriptor a (gan, rtd-reduction) or the tag element a (tdplus-forall).
    #[arg(long)]
    pub a: Option<String>,
    #[arg(long, default_value_t = 2)]
    pub k: u32,
    #[arg(long, default_value_t = 3)]
    pub mult: u32,
    #[arg(long, default_value_t = 1)]
    pub n: u32,
    /// Column tag c of H_{c,i} (t1).
    #[arg(long, default_value_t = 0)]
    pub tag: u32,
    /// Longest σ realized (gan).
    #[arg(long, default_value_t = 2)]
    pub max_len: usize,
    /// Random subfamilies checked (verify lk).
    #[arg(long, default_value_t = 20)]
    pub subfamilies: usize,
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn parses_global_flags_after_the_verb() {
        let cli = Cli::try_parse_from(["teachdim", "oracle", "--measure", "rtdplus-seq", "--seed", "9"]).unwrap();
        assert_eq!(cli.config.seed, 9);
        assert!(matches!(cli.command, Command::Oracle { measure: Measure::RtdplusSeq, .. }));
    }
}
