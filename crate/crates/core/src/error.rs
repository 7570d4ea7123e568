use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polygon order must be at least 3, got {0}")]
    InvalidOrder(u64),

    #[error("rank index must lie in [-1, {max}], got {got}")]
    InvalidRankIndex { got: i64, max: i64 },

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("representation has both coefficients zero")]
    DegenerateRepresentation,

    #[error("value classes of {0} are infinite (a coefficient is zero)")]
    InfiniteClass(String),

    #[error("invalid admissible path: {0}")]
    InvalidPath(String),

    #[error("{what} needs {needed} entries, over the budget of {budget}")]
    Budget {
        what: &'static str,
        needed: u128,
        budget: u64,
    },

    #[error("graph value bound must be at least 3, got {0}")]
    GraphBound(u64),

    #[error("malformed graph document: {0}")]
    Document(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
