use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a generalized Cartan matrix: {0}")]
    NotGcm(String),

    #[error("Cartan matrix is not symmetrizable: {0}")]
    NotSymmetrizable(String),

    #[error("simple index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("expected {expected} coordinates, got {got}")]
    RankMismatch { expected: usize, got: usize },

    #[error("budget of {budget} exceeded: {context}")]
    BudgetExceeded { budget: usize, context: String },

    #[error("weight is singular: {0}")]
    Singular(String),

    #[error("operation requires a finite-type Cartan matrix")]
    NotFiniteType,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown Cartan preset or unreadable file: {0}")]
    UnknownGcm(String),
}

impl Error {
    /// Stable machine-readable code, used in CLI error objects.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotGcm(_) => "not_gcm",
            Error::NotSymmetrizable(_) => "not_symmetrizable",
            Error::IndexOutOfRange { .. } => "index_out_of_range",
            Error::RankMismatch { .. } => "rank_mismatch",
            Error::BudgetExceeded { .. } => "budget_exceeded",
            Error::Singular(_) => "singular",
            Error::NotFiniteType => "not_finite_type",
            Error::Parse(_) => "parse",
            Error::UnknownGcm(_) => "unknown_gcm",
        }
    }
}
