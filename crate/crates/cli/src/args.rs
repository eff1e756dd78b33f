use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "strata",
    version,
    about = "Fixed-point types, strata dimensions and rank-3 Simpson limits"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format [default: table on a terminal, json otherwise]
    #[arg(long, global = true, value_enum, env = "STRATA_FORMAT")]
    pub format: Option<Format>,

    /// Write the report here instead of standard output
    #[arg(long, short, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Args)]
pub struct RankGenus {
    #[arg(long, short)]
    pub rank: i64,
    #[arg(long, short)]
    pub genus: i64,
}

#[derive(Debug, Args)]
pub struct TypeArgs {
    /// Comma-separated ranks, e.g. 1,2
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub ranks: Option<Vec<i64>>,
    /// Comma-separated degrees, e.g. 2,-2
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub degrees: Option<Vec<i64>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Shape {
    Line,
    Plane,
    Full,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List every admissible VHS type of the given rank
    Enumerate(RankGenus),
    /// Check admissibility of one type, or of every type in a JSON file
    CheckType {
        #[command(flatten)]
        ty: TypeArgs,
        /// JSON file holding a list of {"ranks": [...], "degrees": [...]}
        #[arg(long, conflicts_with_all = ["ranks", "degrees"])]
        file: Option<PathBuf>,
        #[arg(long, short)]
        genus: i64,
    },
    /// Dimension of the fixed-point component of one type
    Dims {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, short)]
        genus: i64,
    },
    /// Dimension table over every admissible type of the given rank
    Strata(RankGenus),
    /// Global dimensions of the de Rham moduli space and the oper stratum
    Moduli(RankGenus),
    /// Extreme component dimensions and where they are attained
    Extremal(RankGenus),
    /// Limit of a rank-3 flat bundle from its Harder-Narasimhan data
    Simpson3 {
        #[arg(long, value_enum)]
        shape: Shape,
        #[arg(long, allow_hyphen_values = true)]
        d: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        l: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        a1: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        a2: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        deg_i: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        deg_n: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        deg_j: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        deg_m: Option<i64>,
        #[arg(long, short)]
        genus: i64,
    },
    /// One step of the destabilizing iteration on graded types read from JSON
    IterateStep {
        /// JSON file holding {"graded": [[r, d], ...], "destabilizer": [[h, e], ...]}
        /// or a list of such objects
        #[arg(long)]
        file: PathBuf,
    },
}
