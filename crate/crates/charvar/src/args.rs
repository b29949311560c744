use clap::{Args, Parser, Subcommand, ValueEnum};

/// Seed used by the random oracles unless `--seed` is given.
pub const DEFAULT_SEED: u64 = 0x5eed_2b1d;

#[derive(Debug, Parser)]
#[command(name = "charvar", version, about = "Verification reports for SL2 character varieties and the quantum torus")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args, Clone)]
pub struct Common {
    /// Emit one JSON document instead of a table.
    #[arg(long, global = true)]
    pub json: bool,
    /// Tolerance for the floating-point checks.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol: f64,
    /// Seed for the random oracles.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Φ, Γ and the structural checks for one two-bridge knot b(p, m).
    Twobridge {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        m: u32,
        /// Skip the leading-term check (the slow part for large p).
        #[arg(long)]
        no_leading_terms: bool,
    },
    /// P, Q_n and every check for the (-2, 3, 2n+1)-pretzel knot.
    Pretzel {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
    /// Quantum torus demonstrations.
    Qtorus {
        #[command(subcommand)]
        demo: QtorusDemo,
    },
    /// Trace polynomial of a word in a, b (e.g. "a b^-1").
    Trace {
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Run a verification suite; defaults reproduce the acceptance ranges.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Restrict the pretzel checks to n in [A, B].
        #[arg(long, num_args = 2, value_names = ["A", "B"], allow_hyphen_values = true)]
        n_range: Option<Vec<i64>>,
        /// Largest p for the two-bridge sweep.
        #[arg(long, default_value_t = 45)]
        p_max: u32,
    },
}

#[derive(Debug, Subcommand)]
pub enum QtorusDemo {
    /// The unknot: recurrence, L - 1 divisibility, σ-symmetry.
    DemoUnknot {
        #[arg(long, num_args = 2, value_names = ["A", "B"], allow_hyphen_values = true)]
        range: Option<Vec<i64>>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Twobridge,
    Pretzel,
    Qtorus,
    Trace,
}
