use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid field spec: {0}")]
    FieldSpec(String),

    #[error("dimension mismatch: expected {expected} coordinates, got {found}")]
    Dimension { expected: usize, found: usize },

    #[error("range error in row {row}: {detail}")]
    Range { row: usize, detail: String },

    #[error("contradictory data: row {row} repeats the input of row {first} with a different output")]
    ContradictoryData { row: usize, first: usize },

    #[error("validation error: {0}")]
    Validation(String),

    #[error("points must differ to form a generator")]
    EmptyMonomial,

    #[error("ideal contains the unit monomial")]
    UnitIdeal,

    #[error("diagonal is undefined for fewer than two points")]
    UndefinedDiagonal,

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("parse error at line {line}: {detail}")]
    Parse { line: usize, detail: String },

    #[error("format error: {0}")]
    Format(String),

    #[error("i/o error: {0}")]
    Io(String),

    #[error("oracle mismatch: {0}")]
    OracleMismatch(String),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Capacity(_) => 3,
            Error::OracleMismatch(_) => 4,
            Error::Io(_) => 1,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
