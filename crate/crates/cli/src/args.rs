use clap::{Args, Parser, Subcommand, ValueEnum};

/// Colorings of the positive integers, monochromatic polynomial sumset
/// search and bad-set audits.
///
/// Coloring specs have the form `kind[:params][@file]`, for example
/// `power2:1,2`, `geo3:1,2,l=4,x=3,y=8/5`, `case2:n^2,n^2+n`,
/// `recursive:n^2,n^3`, `periodic:1122`, `random:seed=7,k=3` or
/// `file@coloring.rl`.
///
/// Materialized windows are capped at SUMSET_RAMSEY_NMAX (default 10^7).
#[derive(Parser, Debug)]
#[command(name = "sumset-ramsey", version)]
pub struct Cli {
    /// Seed for random colorings that do not name one.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Write a window of a coloring as a run-length file, JSON or text.
    Color(ColorArgs),
    /// Search a coloring window for a monochromatic configuration.
    Search(SearchArgs),
    /// Bad sets {m <= M : n + P(m) has color i for every P}.
    Audit(AuditArgs),
    /// Longest arithmetic progression in a set of positive integers.
    Ap(ApArgs),
    /// Return sets, gaps, densities and the two-word dichotomy test.
    Dynamics(DynamicsArgs),
    /// Build witness sets (B, C) and check their sumset identities.
    Witness(WitnessArgs),
}

#[derive(Args, Debug)]
pub struct ColorArgs {
    /// Coloring spec; alternative to --kind with per-parameter flags.
    #[arg(long, conflicts_with = "kind", required_unless_present = "kind")]
    pub coloring: Option<String>,
    /// power2, geo3, triple, case2, recursive, periodic, explicit, random or file.
    #[arg(long)]
    pub kind: Option<String>,
    #[arg(long)]
    pub a: Option<u64>,
    #[arg(long)]
    pub b: Option<u64>,
    #[arg(long)]
    pub c: Option<u64>,
    /// Rational `p/q`.
    #[arg(long)]
    pub l: Option<String>,
    /// Rational `p/q`.
    #[arg(long)]
    pub x: Option<String>,
    /// Rational `p/q`.
    #[arg(long)]
    pub y: Option<String>,
    /// Polynomial P, e.g. `n^2`.
    #[arg(long = "P")]
    pub p: Option<String>,
    /// Polynomial Q, e.g. `n^2+n`.
    #[arg(long = "Q")]
    pub q: Option<String>,
    #[arg(long)]
    pub a0: Option<u64>,
    /// Materialization window of the recursive coloring (default: the cap).
    #[arg(long)]
    pub window: Option<u64>,
    /// Periodic pattern, e.g. `1122`.
    #[arg(long)]
    pub pattern: Option<String>,
    /// Explicit colors of 1, 2, ...; color 1 afterwards.
    #[arg(long)]
    pub colors: Option<String>,
    /// Palette size of a random coloring.
    #[arg(long)]
    pub k: Option<u64>,
    /// Run-length file of a `file` coloring.
    #[arg(long)]
    pub path: Option<String>,
    /// Window length.
    #[arg(long = "N")]
    pub n: u64,
    #[arg(long, value_enum, default_value_t = ColorFormat::Runlength)]
    pub out: ColorFormat,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColorFormat {
    Runlength,
    Json,
    Text,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Greedy,
    Exhaustive,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[arg(long)]
    pub coloring: String,
    /// Comma-separated polynomials.
    #[arg(long, default_value = "n,2n")]
    pub polys: String,
    /// Required size of B.
    #[arg(long, default_value_t = 3)]
    pub r: usize,
    /// Largest |C| the greedy search tries for.
    #[arg(long, default_value_t = 10)]
    pub max_c: usize,
    /// Exact |C| for the exhaustive search.
    #[arg(long, default_value_t = 1)]
    pub size_c: usize,
    /// Window length.
    #[arg(long = "N")]
    pub n: u64,
    #[arg(long, value_enum, default_value_t = Strategy::Greedy)]
    pub strategy: Strategy,
    /// Step between greedy candidates c.
    #[arg(long, default_value_t = 1)]
    pub stride: u64,
    /// Cap on the number of greedy candidates.
    #[arg(long)]
    pub max_candidates: Option<usize>,
    /// Worker threads (0: one per core).
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Json,
    Csv,
}

#[derive(Args, Debug)]
pub struct AuditArgs {
    #[arg(long)]
    pub coloring: String,
    /// Comma-separated polynomials.
    #[arg(long)]
    pub polys: String,
    /// Audit every n in 1..=n-max.
    #[arg(long, conflicts_with = "n", required_unless_present = "n")]
    pub n_max: Option<u64>,
    /// Comma-separated list of n to audit.
    #[arg(long)]
    pub n: Option<String>,
    /// Horizon M.
    #[arg(long = "M")]
    pub m: u64,
    #[arg(long, value_enum, default_value_t = TableFormat::Json)]
    pub format: TableFormat,
    /// CSV growth curves sample M/steps, 2M/steps, ..., M.
    #[arg(long, default_value_t = 10)]
    pub steps: u64,
    /// Worker threads (0: one per core).
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
}

#[derive(Args, Debug)]
pub struct ApArgs {
    /// Comma- or whitespace-separated positive integers.
    #[arg(long, conflicts_with = "input", required_unless_present = "input")]
    pub set: Option<String>,
    /// File holding the set in the same format.
    #[arg(long)]
    pub input: Option<String>,
    /// Also report the density threshold for k-term progressions at N = max S.
    #[arg(long)]
    pub gowers_k: Option<u32>,
}

#[derive(Args, Debug)]
pub struct DynamicsArgs {
    #[command(subcommand)]
    pub op: DynamicsOp,
}

#[derive(Subcommand, Debug)]
pub enum DynamicsOp {
    /// Return set {n <= M : x(h + an) = x(h + bn)}, its largest gap and
    /// sliding-window densities.
    Returns {
        /// Coloring spec whose first N colors form the word.
        #[arg(long)]
        word: String,
        #[arg(long = "N")]
        n: u64,
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
        #[arg(long, default_value_t = 0)]
        h: u64,
        #[arg(long = "M")]
        m: u64,
        /// Comma-separated window widths.
        #[arg(long)]
        widths: Option<String>,
    },
    /// Smallest d <= D with y(d) != z(d) and y, z constant along the
    /// progressions d + a(b-a)k and d + b(b-a)k, k <= K.
    Dichotomy {
        #[arg(long)]
        y: String,
        #[arg(long)]
        z: String,
        #[arg(long = "N")]
        n: u64,
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
        #[arg(long = "D")]
        d: u64,
        #[arg(long = "K")]
        k: u64,
    },
}

#[derive(Args, Debug)]
pub struct WitnessArgs {
    /// Full parameter descriptor, e.g. `kind=stepI;a=1;b=2;r=2;s=1;t=1;d=10,20`.
    #[arg(long, conflicts_with = "variant", required_unless_present = "variant")]
    pub params: Option<String>,
    /// stepI, caseI, situationI or situationII.
    #[arg(long)]
    pub variant: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub r: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub shift: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub s: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub t: Option<String>,
    /// Comma-separated integers.
    #[arg(long, allow_hyphen_values = true)]
    pub d: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub e: Option<String>,
    /// Comma-separated integers.
    #[arg(long, allow_hyphen_values = true)]
    pub v: Option<String>,
    /// Comma-separated anchor indices paired with --d.
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub j: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub l0: Option<String>,
    /// Comma-separated integers.
    #[arg(long, allow_hyphen_values = true)]
    pub offsets: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub xi: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    /// Check this B instead of the constructed one.
    #[arg(long = "B")]
    pub b_set: Option<String>,
    /// Check this C instead of the constructed one.
    #[arg(long = "C")]
    pub c_set: Option<String>,
    /// Exit 1 unless both sumset identities hold.
    #[arg(long)]
    pub check: bool,
}
