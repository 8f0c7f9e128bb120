use thiserror::Error;

/// Errors reported by fallible operations. Contract violations inside the
/// exact-arithmetic kernel (negative shifts, order mismatches) panic instead:
/// they are programming errors, not data errors.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid profile: {0}")]
    InvalidProfile(String),

    #[error("invalid move: {0}")]
    InvalidMove(String),

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("enumeration budget of {budget} states exceeded")]
    BudgetExceeded { budget: u64 },

    #[error("invalid sum spec `{name}`: {reason}")]
    InvalidSumSpec { name: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
