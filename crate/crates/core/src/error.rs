use alloc::string::String;

/// Errors raised by constructors, solvers and checkers.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("instance mismatch: value {value} does not belong to {expected}")]
    InstanceMismatch { expected: String, value: String },
    #[error("semiring mismatch: {left} vs {right}")]
    SemiringMismatch { left: String, right: String },
    #[error("<{first}, {second}> is not on the binary scale (components must sum to one)")]
    NotBinary { first: String, second: String },
    #[error("{what} is not normalized: total is {total}")]
    NotNormalized { what: &'static str, total: String },
    #[error("unknown consequence `{0}`")]
    UnknownConsequence(String),
    #[error("unknown state `{0}`")]
    UnknownState(String),
    #[error("duplicate name `{0}`")]
    DuplicateName(String),
    #[error("invalid consequence space: {0}")]
    InvalidSpace(String),
    #[error("arity mismatch: expected {expected} consequences, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("invalid lottery: {0}")]
    InvalidLottery(String),
    #[error("invalid sub-lottery path {0}")]
    InvalidPath(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("cannot parse {what} from `{text}`")]
    Parse { what: &'static str, text: String },
    #[error("invalid budget: {0}")]
    Budget(String),
    #[error("inconsistent preference table: {0}")]
    InconsistentTable(String),
}
