use std::fmt;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid order {0}: a ring needs at least two elements")]
    InvalidOrder(u64),
    #[error("invalid characteristic {0}: not a prime")]
    InvalidCharacteristic(u64),
    #[error("polynomial modulus must be monic with degree at least 1")]
    NonMonicModulus,
    #[error("a ring product needs at least one factor")]
    EmptyProduct,
    #[error("invalid matrix dimension {0}: must be at least 1")]
    InvalidDimension(usize),
    #[error("matrix entries must come from a commutative ring")]
    NoncommutativeBase,
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    #[error("quotient requires a proper ideal")]
    InvalidQuotient,
    #[error("budget exceeded while computing {0}")]
    BudgetExceeded(&'static str),
    #[error("malformed operation table: {0}")]
    BadTable(String),
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("unknown export format `{0}` (expected dot or json)")]
    UnknownFormat(String),
}

/// Ring-expression parse failure, with the byte offset of the offending token.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    Syntax {
        offset: usize,
        expected: Vec<&'static str>,
        found: String,
    },
    Semantic {
        offset: usize,
        message: String,
    },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match self {
            ParseError::Syntax { offset, .. } | ParseError::Semantic { offset, .. } => *offset,
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Syntax {
                offset,
                expected,
                found,
            } => write!(
                f,
                "syntax error at byte {offset}: expected {}, found {found}",
                expected.join(" | ")
            ),
            ParseError::Semantic { offset, message } => {
                write!(f, "semantic error at byte {offset}: {message}")
            }
        }
    }
}

impl std::error::Error for ParseError {}
