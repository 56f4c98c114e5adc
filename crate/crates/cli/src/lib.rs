//! Command-line front end: argument parsing, command dispatch and reports.
//!
//! Every command renders into a [`Outcome`] so the binary stays a thin
//! wrapper and the commands can be driven from tests.

pub mod commands;
pub mod report;
pub mod verify;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "degtree", version, about = "Exact spanning-tree counts for loopless multigraphs")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Print only the essential result.
    #[arg(long, global = true)]
    pub quiet: bool,

    /// Maximum number of distinct monomials kept while expanding F.
    #[arg(long, global = true, default_value_t = degtree::algebra::DEFAULT_TERM_BUDGET)]
    pub budget: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count spanning trees with one or more methods.
    Count(CountArgs),
    /// Generate a graph family and report its closed-form count.
    Family(FamilyArgs),
    /// Cross-validate every method on seeded random multigraphs.
    Verify(VerifyArgs),
    /// Evaluate both sides of the weighted subtree identity.
    Identity(IdentityArgs),
    /// Expand F(G) and read off matchings and edge covers.
    Fpoly(FpolyArgs),
    /// Degree-product upper bound on the spanning-tree count.
    Bound(BoundArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    MatrixTree,
    DelCon,
    Degree,
    DegreeDirect,
    Enum,
    All,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    pub file: PathBuf,
    #[arg(long, value_enum, default_value_t = Method::All)]
    pub method: Method,
    /// Root for the degree methods; defaults to the vertex with the smallest bound.
    #[arg(long)]
    pub root: Option<usize>,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    /// complete N | multipartite N1 N2 ... | hypercube D | wheel R | multiwheel R
    #[arg(required = true, num_args = 1..)]
    pub spec: Vec<String>,
    /// Write the graph here instead of stdout.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 7)]
    pub n: usize,
    #[arg(long, default_value_t = 12)]
    pub m: usize,
    /// Probability that an added edge duplicates an existing one.
    #[arg(long, default_value_t = 0.3)]
    pub p: f64,
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Draw each trial's n from 1..=N and m from n-1..=M.
    #[arg(long)]
    pub vary: bool,
    /// Weight points per graph for the identity check.
    #[arg(long, default_value_t = 5)]
    pub weight_points: usize,
    /// Also probe the degree formula and identity on disconnected inputs.
    #[arg(long)]
    pub allow_disconnected: bool,
}

#[derive(Debug, Args)]
pub struct IdentityArgs {
    pub file: PathBuf,
    #[arg(long)]
    pub root: Option<usize>,
    /// `ones`, `random:<seed>`, or an inline list `1,2,3`.
    #[arg(long, default_value = "ones", conflicts_with = "weights_file")]
    pub weights: String,
    /// File with one weight per line.
    #[arg(long)]
    pub weights_file: Option<PathBuf>,
    /// Number of points for `random:<seed>`.
    #[arg(long, default_value_t = 1)]
    pub trials: usize,
}

#[derive(Debug, Args)]
pub struct FpolyArgs {
    pub file: PathBuf,
    /// Print every term as `2:{doubled} 1:{single} c:<coefficient>`.
    #[arg(long)]
    pub dump: bool,
    /// Vertex limit for the expansion.
    #[arg(long, default_value_t = degtree::fpoly::DEFAULT_MAX_VERTICES)]
    pub max_vertices: usize,
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    pub file: PathBuf,
    #[arg(long, conflicts_with = "best")]
    pub root: Option<usize>,
    /// Use the root minimising the bound (the default).
    #[arg(long)]
    pub best: bool,
}

/// Rendered result of a command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    pub fn ok(stdout: String) -> Self {
        Outcome { stdout, stderr: String::new(), code: EXIT_OK }
    }

    pub fn fail(code: i32, stderr: String) -> Self {
        Outcome { stdout: String::new(), stderr, code }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() { Outcome::fail(EXIT_USAGE, text) } else { Outcome::ok(text) };
        }
    };
    commands::dispatch(&cli)
}
