use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tspread_oracle::sweep::Suite;

#[derive(Debug, Parser)]
#[command(name = "tspread", version, about = "t-spread monomials, Borel shadows, Betti tables and extremal Betti realization")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct AmbientArgs {
    /// Number of variables.
    #[arg(long)]
    pub n: usize,
    /// Spread: consecutive indices differ by at least t.
    #[arg(long)]
    pub t: usize,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct CornerArgs {
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub l: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ListFormat {
    /// JSON array of index arrays.
    Json,
    /// One comma-separated index list per line.
    Text,
    /// `x_1*x_4`-style products, comma-separated.
    M2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BettiFormat {
    Table,
    Json,
    M2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Quick,
    Full,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Quick => Suite::Quick,
            SuiteArg::Full => Suite::Full,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List M_{n,d,t} (with --d) or A^t(k,l) (with --k and --l), slex-descending.
    Enumerate {
        #[command(flatten)]
        amb: AmbientArgs,
        #[arg(long, conflicts_with_all = ["k", "l"], required_unless_present_all = ["k", "l"])]
        d: Option<usize>,
        #[arg(long, requires = "l")]
        k: Option<usize>,
        #[arg(long, requires = "k")]
        l: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: ListFormat,
    },
    /// Position of a monomial in A^t(k,l), counting from the slex-greatest.
    Rank {
        #[command(flatten)]
        amb: AmbientArgs,
        #[command(flatten)]
        corner: CornerArgs,
        /// Comma-separated indices, e.g. 4,9,13,16.
        #[arg(long)]
        monomial: String,
        /// Also print the binomial terms of the rank.
        #[arg(long)]
        terms: bool,
    },
    /// The next monomial of A^t(k,l) in decreasing slex order.
    Successor {
        #[command(flatten)]
        amb: AmbientArgs,
        #[command(flatten)]
        corner: CornerArgs,
        #[arg(long)]
        monomial: String,
        #[arg(long, value_enum, default_value = "json")]
        format: ListFormat,
    },
    /// Borel closure B_t{gens} of monomials of one degree.
    Closure {
        #[command(flatten)]
        amb: AmbientArgs,
        /// JSON file with an array of index arrays, or the array itself.
        #[arg(long)]
        gens: String,
        /// Print only the minimal generators of the ideal generated by the closure.
        #[arg(long)]
        minimal: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: ListFormat,
    },
    /// Iterated t-shadow of a set of monomials of one degree.
    Shadow {
        #[command(flatten)]
        amb: AmbientArgs,
        #[arg(long)]
        gens: String,
        #[arg(long, default_value_t = 1)]
        s: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: ListFormat,
    },
    /// Borel t-shadow of a set at the corner (k2, l2).
    Bshad {
        #[command(flatten)]
        amb: AmbientArgs,
        #[arg(long)]
        gens: String,
        #[arg(long)]
        k2: usize,
        #[arg(long)]
        l2: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: ListFormat,
    },
    /// Slex-minimum of a Borel t-shadow, in closed form.
    MinBshad {
        #[command(flatten)]
        amb: AmbientArgs,
        /// A single monomial.
        #[arg(long, conflicts_with = "gens", required_unless_present = "gens")]
        monomial: Option<String>,
        /// A set of monomials, as for closure.
        #[arg(long)]
        gens: Option<String>,
        #[arg(long)]
        k2: usize,
        #[arg(long)]
        l2: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: ListFormat,
    },
    /// Graded Betti numbers of a t-spread strongly stable ideal.
    Betti {
        /// Ideal JSON: {"n":..,"t":..,"generators":{"2":[[1,4],..]}}.
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long, value_enum, default_value = "table")]
        format: BettiFormat,
    },
    /// Corner sequence and corner values of an ideal.
    Corners {
        #[arg(long)]
        ideal: PathBuf,
    },
    /// Decide whether corners and values are realizable, and build an ideal.
    Solve {
        /// Spec JSON: {"n":..,"t":..,"corners":[{"k":..,"l":..,"a":..}]}.
        #[arg(long)]
        spec: PathBuf,
        /// Write the full report here instead of standard output.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Write the constructed ideal here when the spec is feasible.
        #[arg(long)]
        emit_ideal: Option<PathBuf>,
    },
    /// Compare every closed form with its brute-force twin.
    Verify {
        #[arg(long, value_enum, default_value = "quick")]
        suite: SuiteArg,
    },
    /// Upper bound on the number of corners for initial degree l1.
    MaxCorners {
        #[command(flatten)]
        amb: AmbientArgs,
        #[arg(long)]
        l1: usize,
    },
}
