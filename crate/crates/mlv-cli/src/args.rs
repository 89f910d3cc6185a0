//! Command-line grammar.

use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exact relation ranks, identity checks and numeric evaluation for
/// multiple L-values at roots of unity.
#[derive(Debug, Parser)]
#[command(name = "mlv", version, about)]
pub struct Cli {
    /// Global options.
    #[command(flatten)]
    pub global: Global,
    /// What to do.
    #[command(subcommand)]
    pub command: Command,
}

/// Options shared by every subcommand.
#[derive(Debug, Args)]
pub struct Global {
    /// Modulus r: labels are r-th roots of unity.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..=64))]
    pub r: u32,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the output to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

/// Output encodings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Comma-separated values with a header row.
    Csv,
    /// Pretty-printed JSON.
    Json,
}

/// Subcommands.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Ranks of the relation families over a range of weights.
    Tables(TablesArgs),
    /// Dump the relation rows of one family at one weight.
    Relations(RelationsArgs),
    /// Run randomized identity suites.
    Verify(VerifyArgs),
    /// Numeric value of an MLV by direct summation.
    Eval(EvalArgs),
    /// Evaluate the Newton series of a truncated MLV at a complex point.
    Newton(NewtonArgs),
}

/// Family selector for `tables`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    /// Derivation relations.
    Deriv,
    /// Extended derivation relations.
    Ext,
    /// Linear part of the quadratic relations.
    Lin,
    /// All three.
    All,
}

/// A weight range `A..B` (inclusive) or a single weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeightRange {
    /// First weight.
    pub start: usize,
    /// Last weight (inclusive).
    pub end: usize,
}

impl FromStr for WeightRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("`{t}` is not a weight"));
        let (start, end) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
            None => {
                let w = parse(s)?;
                (w, w)
            }
        };
        if start < 1 || end < start {
            return Err(format!("`{s}` is not a non-empty range of positive weights"));
        }
        Ok(WeightRange { start, end })
    }
}

/// Resource-cap options.
#[derive(Debug, Args)]
pub struct Caps {
    /// Refuse cells with more basis columns than this.
    #[arg(long, default_value_t = 1500)]
    pub max_columns: usize,
    /// Refuse cells with more generated rows than this.
    #[arg(long, default_value_t = 50_000)]
    pub max_rows: usize,
    /// Ignore the resource caps.
    #[arg(long)]
    pub force: bool,
}

/// `tables` options.
#[derive(Debug, Args)]
pub struct TablesArgs {
    /// Weights, e.g. `3..8`.
    #[arg(long)]
    pub weights: WeightRange,
    /// Which families.
    #[arg(long, value_enum, default_value_t = FamilyArg::All)]
    pub family: FamilyArg,
    /// Compare every cell with the bundled published ranks; exit 1 on any
    /// disagreement.
    #[arg(long)]
    pub check: bool,
    /// Resource caps.
    #[command(flatten)]
    pub caps: Caps,
}

/// Family selector for `relations` (one family).
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SingleFamily {
    /// Derivation relations.
    Deriv,
    /// Extended derivation relations.
    Ext,
    /// Linear part of the quadratic relations.
    Lin,
}

/// `relations` options.
#[derive(Debug, Args)]
pub struct RelationsArgs {
    /// Weight N.
    #[arg(long)]
    pub weight: usize,
    /// Family.
    #[arg(long, value_enum)]
    pub family: SingleFamily,
    /// Resource caps.
    #[command(flatten)]
    pub caps: Caps,
}

/// `verify` options.
#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Suite name, or `all`.
    #[arg(long, default_value = "all")]
    pub suite: String,
    /// Cases per property.
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
    pub cases: u64,
}

/// MLV type for `eval`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    /// Shuffle type.
    Sh,
    /// Harmonic type.
    Ast,
}

/// Acceleration for `eval` and `newton`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AccelArg {
    /// Plain partial sums.
    None,
    /// Aitken extrapolation.
    Aitken,
}

/// `eval` options.
#[derive(Debug, Args)]
pub struct EvalArgs {
    /// Index string `k1:e1,k2:e2,...` with labels `ζ_r^e`.
    #[arg(long)]
    pub word: String,
    /// Truncation point.
    #[arg(long, default_value_t = 1_000_000)]
    pub m: usize,
    /// Which MLV.
    #[arg(long, value_enum, default_value_t = KindArg::Sh)]
    pub kind: KindArg,
    /// Acceleration.
    #[arg(long, value_enum, default_value_t = AccelArg::Aitken)]
    pub accel: AccelArg,
}

/// Sequence interpolated by `newton`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum NewtonKindArg {
    /// Outer index pinned to m.
    Pinned,
    /// Outer index at most m.
    Cumulative,
}

/// `newton` options.
#[derive(Debug, Args)]
pub struct NewtonArgs {
    /// Index string `k1:e1,k2:e2,...` with labels `ζ_r^e`.
    #[arg(long)]
    pub word: String,
    /// Real part of the evaluation point.
    #[arg(long, allow_hyphen_values = true)]
    pub z: f64,
    /// Imaginary part of the evaluation point.
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    pub z_im: f64,
    /// Number of series terms.
    #[arg(long, default_value_t = 2000)]
    pub terms: usize,
    /// Which truncated sequence.
    #[arg(long, value_enum, default_value_t = NewtonKindArg::Pinned)]
    pub kind: NewtonKindArg,
    /// Acceleration.
    #[arg(long, value_enum, default_value_t = AccelArg::Aitken)]
    pub accel: AccelArg,
    /// Read each `e_i` as a rational label value `p/q` instead of an
    /// exponent of `ζ_r`.
    #[arg(long)]
    pub rational: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn grammar_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn weight_ranges() {
        assert_eq!("3..8".parse::<WeightRange>().unwrap(), WeightRange { start: 3, end: 8 });
        assert_eq!("3..=8".parse::<WeightRange>().unwrap(), WeightRange { start: 3, end: 8 });
        assert_eq!("5".parse::<WeightRange>().unwrap(), WeightRange { start: 5, end: 5 });
        assert!("8..3".parse::<WeightRange>().is_err());
        assert!("x..3".parse::<WeightRange>().is_err());
    }
}
