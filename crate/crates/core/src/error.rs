use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("variable x{index} is out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },

    #[error("the number of variables must be positive")]
    NoVariables,

    #[error("mixed number of variables: expected {expected}, found {found}")]
    MixedNvars { expected: usize, found: usize },

    #[error("operation requires a nonzero ideal")]
    ZeroIdeal,

    #[error("operation requires a proper ideal, got the unit ideal")]
    UnitIdeal,

    #[error("ideal is not generated in a single degree")]
    NotSingleDegree,

    #[error("exponent overflow")]
    ExponentOverflow,

    #[error("invalid Veronese parameters: {0}")]
    InvalidVeronese(String),

    #[error("not a minimal generating set: {0}")]
    NotMinimal(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("characteristic {0} is neither 0 nor a prime")]
    BadCharacteristic(u64),

    #[error("resource budget exceeded: {what} ({size} > {limit})")]
    Budget {
        what: String,
        size: usize,
        limit: usize,
    },

    #[error("theorem violation: {0}")]
    TheoremViolation(String),
}

impl Error {
    pub(crate) fn budget(what: impl Into<String>, size: usize, limit: usize) -> Self {
        Error::Budget {
            what: what.into(),
            size,
            limit,
        }
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, Error::Budget { .. })
    }
}

/// Resource limits shared by the expensive operations. Exceeding any of them
/// produces [`Error::Budget`] instead of a partial answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct Limits {
    /// Maximal size of an lcm lattice handed to the Betti computation.
    pub max_lattice: usize,
    /// Maximal number of generators accepted by the linear-quotients search.
    pub max_lq_gens: usize,
    /// Maximal number of candidate monomials tried when validating an
    /// associated prime.
    pub max_witness_search: usize,
    /// Maximal number of candidate generator sets in an exhaustive scan.
    pub max_enumeration: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_lattice: 50_000,
            max_lq_gens: 20,
            max_witness_search: 1_000_000,
            max_enumeration: 20_000_000,
        }
    }
}
