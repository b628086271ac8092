use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "cmseq", version, about = "Completely multiplicative ±1 sequences, their generating functions and constants")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Default precision in bits for commands that take one.
    #[arg(long, global = true, env = "CMSEQ_PRECISION", default_value_t = 64)]
    pub precision: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Values f(1), …, f(N) of a sequence.
    Seq(SeqArgs),
    /// Certified binary digits of a bit-number constant.
    Digits(DigitsArgs),
    /// Enclosure of a generating function at a rational point.
    Eval(EvalArgs),
    /// Functional-equation (or telescoped, with --m) residual; must contain 0.
    Residual(ResidualArgs),
    /// Enclosures of the named constants and their affine cross-checks.
    Constants(ConstantsArgs),
    /// Certify the hypotheses of the Mahler method for an instance.
    Mahler(MahlerArgs),
    /// Witness against eventual k-periodicity after index M.
    Period(PeriodArgs),
    /// Descriptive statistics: +1 frequency, block counts, partial-sum walk.
    Stats(StatsArgs),
    /// Resultant in u of a functional equation's A and B.
    Resultant(ResultantArgs),
}

/// Selects a generating function by family, or by sequence.
#[derive(Args, Debug, Clone)]
pub struct FamilyArgs {
    /// G (Gaussian Liouville), T (mod 3) or F (character-like, needs --p).
    #[arg(long, value_enum, conflicts_with = "sequence")]
    pub family: Option<FamilyName>,

    /// Sequence selector: liouville | gaussian | mod3 | char:P:EPS[:trivial].
    #[arg(long)]
    pub sequence: Option<String>,

    /// Odd prime for family F.
    #[arg(long)]
    pub p: Option<u64>,

    /// f(p) for family F: +1 or -1.
    #[arg(long, default_value = "+1", allow_hyphen_values = true)]
    pub eps: String,

    /// Values on nonzero residues for family F.
    #[arg(long, value_enum, default_value_t = RuleName::Legendre)]
    pub rule: RuleName,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    #[value(name = "G")]
    G,
    #[value(name = "T")]
    T,
    #[value(name = "F")]
    F,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum RuleName {
    Legendre,
    Trivial,
}

#[derive(Args, Debug)]
pub struct SeqArgs {
    #[arg(long, default_value = "liouville")]
    pub sequence: String,
    /// Number of terms.
    #[arg(long)]
    pub n: u64,
}

#[derive(Args, Debug)]
pub struct DigitsArgs {
    /// l, gamma-bits, tau-bits or phi-bits-P-{plus|minus}[-trivial].
    #[arg(long)]
    pub constant: String,
    #[arg(long)]
    pub n: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Route {
    Direct,
    Closed,
    Both,
}

#[derive(Args, Debug)]
pub struct EvalArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Evaluation point "p/q" with |z| < 1.
    #[arg(long, allow_hyphen_values = true)]
    pub z: String,
    #[arg(long, value_enum, default_value_t = Route::Both)]
    pub route: Route,
    /// Terms for the direct route (default: enough for --precision).
    #[arg(long)]
    pub terms: Option<u64>,
    /// Levels for the closed route (default: enough for --precision).
    #[arg(long)]
    pub levels: Option<u32>,
}

#[derive(Args, Debug)]
pub struct ResidualArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub z: String,
    /// Telescope m steps with direct-route sums instead of one closed-form step.
    #[arg(long)]
    pub m: Option<u32>,
}

#[derive(Args, Debug)]
pub struct ConstantsArgs {
    /// Restrict to one constant; default is the whole catalogue.
    #[arg(long)]
    pub name: Option<String>,
}

#[derive(Args, Debug)]
pub struct MahlerArgs {
    /// G, T, F, degenerate-vanishing or degenerate-degree.
    #[arg(long)]
    pub instance: String,
    #[arg(long, default_value = "1/2", allow_hyphen_values = true)]
    pub alpha: String,
    #[arg(long, default_value_t = 64)]
    pub kmax: u32,
    /// Odd prime for instance F.
    #[arg(long, default_value_t = 3)]
    pub p: u64,
    #[arg(long, default_value = "+1", allow_hyphen_values = true)]
    pub eps: String,
}

#[derive(Args, Debug)]
pub struct PeriodArgs {
    #[arg(long, default_value = "liouville")]
    pub sequence: String,
    /// Claimed period.
    #[arg(long)]
    pub k: u64,
    /// Claimed preperiod.
    #[arg(long, default_value_t = 0)]
    pub m: u64,
    #[arg(long, default_value_t = 1_000_000)]
    pub limit: u64,
}

#[derive(Args, Debug)]
pub struct StatsArgs {
    #[arg(long, default_value = "liouville")]
    pub sequence: String,
    #[arg(long)]
    pub n: u64,
    /// Count blocks of this length instead.
    #[arg(long, conflicts_with = "walk")]
    pub blocks: Option<usize>,
    /// Emit the partial-sum walk sampled every STRIDE indices instead.
    #[arg(long, value_name = "STRIDE")]
    pub walk: Option<u64>,
}

#[derive(Args, Debug)]
pub struct ResultantArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// A as coefficient lists in z, lowest first, separated by ';' per power of u.
    #[arg(long, requires = "b", allow_hyphen_values = true)]
    pub a: Option<String>,
    #[arg(long, requires = "a", allow_hyphen_values = true)]
    pub b: Option<String>,
}
