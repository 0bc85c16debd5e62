use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "nsg", version, about = "Numerical semigroup invariants, constructions and verification")]
pub struct Cli {
    /// Emit JSON instead of plain `key: value` lines.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Invariants of an arbitrary semigroup.
    Analyze {
        #[arg(long, value_delimiter = ',', required = true, allow_negative_numbers = true)]
        gens: Vec<i64>,
    },
    /// A member of one of the parametric families.
    Family {
        #[command(subcommand)]
        kind: FamilyKind,
    },
    /// Gluing `<lambda*S1, mu*S2>`.
    Glue {
        #[arg(long, value_delimiter = ',', required = true)]
        s1: Vec<i64>,
        #[arg(long, value_delimiter = ',', required = true)]
        s2: Vec<i64>,
        #[arg(long)]
        lambda: i64,
        #[arg(long)]
        mu: i64,
    },
    /// Numerical duplication `2S ∪ (2E + d)`.
    Dup {
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<i64>,
        /// `S`, `S*`, or a comma-separated list of ideal generators.
        #[arg(long)]
        ideal: String,
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
    },
    /// Compare closed forms against the oracle and write JSON-lines reports.
    Verify(VerifyArgs),
    /// Tabulate invariants over a parameter range as CSV.
    Sweep {
        #[command(subcommand)]
        kind: SweepKind,
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum FamilyKind {
    Gas {
        #[arg(long)]
        n0: i64,
        #[arg(long)]
        s: i64,
        #[arg(long)]
        d: i64,
        #[arg(long)]
        p: i64,
    },
    Bresinsky {
        #[arg(long)]
        h: i64,
    },
    Backelin {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        r: i64,
    },
    UniformType {
        #[arg(long)]
        r: i64,
    },
    Staircase {
        #[arg(long)]
        r: i64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GridArg {
    Smoke,
    Small,
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    #[value(name = "AsStated")]
    AsStated,
    #[value(name = "AsProof")]
    AsProof,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Claim id such as `thm-3.8`, or `all`.
    pub claim: String,
    #[arg(long, value_enum, default_value = "small")]
    pub grid: GridArg,
    #[arg(long)]
    pub h_max: Option<i64>,
    #[arg(long, value_enum)]
    pub mode: Option<ModeArg>,
    /// Write reports here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum SweepKind {
    DupSelf {
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<i64>,
        #[arg(long)]
        d_range: String,
    },
    DupStar {
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<i64>,
        #[arg(long)]
        d_range: String,
    },
    UniformType {
        #[arg(long)]
        r_range: String,
    },
    Staircase {
        #[arg(long)]
        r_range: String,
    },
    Gas {
        #[arg(long)]
        n0_range: String,
        #[arg(long)]
        s_range: String,
        #[arg(long)]
        d_range: String,
        #[arg(long)]
        p_range: String,
    },
    Bresinsky {
        #[arg(long)]
        h_range: String,
    },
    Backelin {
        #[arg(long)]
        n_range: String,
        #[arg(long)]
        r_range: String,
    },
}
