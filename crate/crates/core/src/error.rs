use thiserror::Error;

/// Everything that can go wrong in this crate.
///
/// Mathematical verdicts (an ideal is not good, a cell is labelled `X`) are
/// never errors; only malformed input, violated preconditions and internal
/// invariant breaches are.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("monomials need at least one variable")]
    ZeroDimension,

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("colon by the zero ideal is undefined")]
    ZeroDivisor,

    #[error("ideal is not primary to the maximal ideal: no pure power of variable {variable} lies in it")]
    NotPrimary { variable: usize },

    #[error("reduction is not contained in the ideal (generator {generator} lies outside)")]
    ReductionNotContained { generator: String },

    #[error("parameter ideal: {0}")]
    ParameterIdeal(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("internal invariant violated: {0}")]
    InvariantBreach(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg()))
    }
}
