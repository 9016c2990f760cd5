use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::commands::{Command, Format, GenParams, Options};

#[derive(Debug, Parser)]
#[command(name = "qmst", version, about = "Linearizability of quadratic minimum spanning tree costs")]
pub struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Refuse to enumerate more spanning trees than this.
    #[arg(long, global = true, default_value_t = qmst::DEFAULT_MAX_TREES)]
    pub max_trees: u64,
    /// Leave the elapsed time out of the report.
    #[arg(long, global = true)]
    pub no_timing: bool,
    #[command(subcommand)]
    pub command: Sub,
}

#[derive(Debug, Subcommand)]
pub enum Sub {
    /// Decide linearizability and print certificates or witnesses.
    Check { file: PathBuf },
    /// Like `check`, writing the linearization to a file.
    Linearize {
        file: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Compare a linear cost vector against Q on every spanning tree.
    Verify {
        file: PathBuf,
        #[arg(long = "c")]
        c: PathBuf,
    },
    /// Find a minimum-cost spanning tree.
    Solve { file: PathBuf },
    /// Decide linearizability by exhaustive enumeration.
    Oracle { file: PathBuf },
    /// Generate an instance file.
    Gen(GenArgs),
    /// Linear-time recognition for factored (rank-2) costs.
    FactoredCheck { file: PathBuf },
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// weak-sum, cycle-random, random-dense, k2n-counterexample,
    /// degree2-counterexample or subset-sum-mmstp.
    pub family: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Block chain such as K4, K3,3, C5 or K3+K2+K4+K2.
    #[arg(long)]
    pub graph: Option<String>,
    /// Cycle length.
    #[arg(long)]
    pub n: Option<usize>,
    /// Size of the large side of K_{2,n2}.
    #[arg(long)]
    pub n2: Option<usize>,
    /// Diagonal cost of the K_{2,n2} family.
    #[arg(long, allow_hyphen_values = true)]
    pub diag: Option<String>,
    /// Base clique size of the degree-2 family.
    #[arg(long)]
    pub k: Option<usize>,
    /// Comma-separated subset-sum values.
    #[arg(long)]
    pub a: Option<String>,
    /// Subset-sum target.
    #[arg(long)]
    pub target: Option<String>,
    /// Shift one symmetric off-diagonal pair of a weak-sum instance.
    #[arg(long)]
    pub perturb: bool,
    #[arg(short, long)]
    pub out: PathBuf,
}

impl Cli {
    pub fn options(&self) -> Options {
        Options {
            max_trees: self.max_trees,
        }
    }

    pub fn to_command(&self) -> Command {
        match &self.command {
            Sub::Check { file } => Command::Check { file: file.clone() },
            Sub::Linearize { file, out } => Command::Linearize {
                file: file.clone(),
                out: out.clone(),
            },
            Sub::Verify { file, c } => Command::Verify {
                file: file.clone(),
                c: c.clone(),
            },
            Sub::Solve { file } => Command::Solve { file: file.clone() },
            Sub::Oracle { file } => Command::Oracle { file: file.clone() },
            Sub::FactoredCheck { file } => Command::FactoredCheck { file: file.clone() },
            Sub::Gen(g) => Command::Gen {
                family: g.family.clone(),
                params: GenParams {
                    seed: g.seed,
                    graph: g.graph.clone(),
                    n: g.n,
                    n2: g.n2,
                    diag: g.diag.clone(),
                    k: g.k,
                    a: g.a.clone(),
                    target: g.target.clone(),
                    perturb: g.perturb,
                },
                out: g.out.clone(),
            },
        }
    }
}
