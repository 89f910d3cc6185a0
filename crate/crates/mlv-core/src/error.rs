//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors raised by the algebra, the linear maps and the evaluators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A word string did not match the `k1:e1,k2:e2,...` grammar.
    #[error("malformed word `{text}`: {reason}")]
    Parse { text: String, reason: String },
    /// Two operands (or an operand and an operator) use different label domains.
    #[error("mixed label domains: {0}")]
    MixedDomains(String),
    /// An operator needing `1 - s` was handed a root-of-unity label.
    #[error("operator `{0}` needs exact complex-rational labels, found a root-of-unity label")]
    CyclicLabel(&'static str),
    /// A label that must be non-zero (a `y` subscript, a multiplier) was zero.
    #[error("label must be non-zero in `{0}`")]
    ZeroLabel(&'static str),
    /// Input to an operator defined only on `A^1` had a word ending in `x`.
    #[error("operator `{op}` is defined on A^1 only; offending word `{word}`")]
    NotInA1 { op: &'static str, word: String },
    /// Input to an operator defined only on admissible words was not admissible.
    #[error("`{op}` needs admissible words; offending word `{word}`")]
    NotAdmissible { op: &'static str, word: String },
    /// A linear-map argument is outside the operator's domain.
    #[error("invalid argument to `{op}`: {reason}")]
    InvalidArgument { op: &'static str, reason: String },
    /// The truncation weight is smaller than the input weight.
    #[error("weight cap {cap} is below the input weight {weight}")]
    WeightCap { cap: usize, weight: usize },
    /// Binomial transforms of float sequences are refused beyond this index.
    #[error("float binomial transform refused at index {0} (cancellation); use exact labels")]
    FloatNabla(usize),
}

/// Convenience alias.
pub type Result<T> = std::result::Result<T, Error>;
