use std::path::PathBuf;

use clap::{Args as ClapArgs, Parser, Subcommand, ValueEnum};
use setrep::Category;

#[derive(Debug, Parser)]
#[command(
    name = "setrep",
    version,
    about = "Minimum set representations of line graphs"
)]
pub struct Args {
    /// Emit JSON instead of a table.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CategoryArg {
    Sd,
    Sa,
    Sdu,
    All,
}

impl CategoryArg {
    pub fn categories(self) -> Vec<Category> {
        match self {
            CategoryArg::Sd => vec![Category::Sd],
            CategoryArg::Sa => vec![Category::Sa],
            CategoryArg::Sdu => vec![Category::Sdu],
            CategoryArg::All => vec![Category::Sd, Category::Sa, Category::Sdu],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OracleCategory {
    S,
    D,
    A,
    U,
    Sd,
    Sa,
    Sdu,
}

impl From<OracleCategory> for Category {
    fn from(c: OracleCategory) -> Self {
        match c {
            OracleCategory::S => Category::S,
            OracleCategory::D => Category::D,
            OracleCategory::A => Category::A,
            OracleCategory::U => Category::U,
            OracleCategory::Sd => Category::Sd,
            OracleCategory::Sa => Category::Sa,
            OracleCategory::Sdu => Category::Sdu,
        }
    }
}

#[derive(Debug, Clone, ClapArgs)]
pub struct Budget {
    /// Largest universe size to try.
    #[arg(long)]
    pub max_universe: Option<usize>,

    /// Wall-clock limit in seconds.
    #[arg(long)]
    pub time_limit: Option<f64>,

    /// Search node limit.
    #[arg(long)]
    pub node_limit: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a graph and report θ, τ of its line graph.
    Analyze {
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "all")]
        category: CategoryArg,
        /// Run the oracle when no closed form gives θ.
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        budget: Budget,
    },
    /// Print the line graph of a graph.
    Linegraph { graph: PathBuf },
    /// Print a minimum representation of the line graph.
    Witness {
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "sd")]
        category: CategoryArg,
        /// Emit one representation per isomorphism class.
        #[arg(long)]
        variants: bool,
    },
    /// Check a representation against a graph.
    Verify {
        graph: PathBuf,
        representation: PathBuf,
    },
    /// Exhaustive search for θ and τ.
    Oracle {
        /// Graph to represent.
        #[arg(
            required_unless_present = "line_graph_of",
            conflicts_with = "line_graph_of"
        )]
        graph: Option<PathBuf>,
        /// Represent the line graph of this graph instead.
        #[arg(long)]
        line_graph_of: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "sd")]
        category: OracleCategory,
        #[command(flatten)]
        budget: Budget,
    },
    /// Emit a projective plane, optionally punctured.
    Planes {
        #[arg(long, default_value_t = 2)]
        order: u32,
        /// Remove this many points (at most 2).
        #[arg(long)]
        puncture: Option<usize>,
    },
    /// Convert between clique covers and set representations.
    Egp {
        file: PathBuf,
        #[arg(
            long,
            conflicts_with = "to_cover",
            required_unless_present = "to_cover"
        )]
        to_set: bool,
        #[arg(long)]
        to_cover: bool,
        /// Graph for --to-cover when the representation does not name one.
        #[arg(long)]
        graph: Option<PathBuf>,
    },
    /// Check the minimum size of nontrivial clique partitions of K_n.
    Dbe {
        #[arg(long)]
        n: usize,
        /// Allow n = 7, which takes minutes.
        #[arg(long)]
        long: bool,
    },
}
