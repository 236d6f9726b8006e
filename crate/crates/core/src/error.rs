use std::fmt;

use thiserror::Error;

use crate::verify::VerificationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Location and cause of a failure to read the matrix text format.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Empty,
    BadToken(String),
    Ragged { expected: usize, found: usize },
    OutOfRange { value: usize, n: usize },
    RowCount { expected: usize, found: usize },
    TooLarge(usize),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::Empty => write!(f, "no matrix rows found"),
            ParseErrorKind::BadToken(tok) => write!(f, "malformed entry {tok:?}"),
            ParseErrorKind::Ragged { expected, found } => {
                write!(f, "ragged row: expected {expected} entries, found {found}")
            }
            ParseErrorKind::OutOfRange { value, n } => {
                write!(f, "entry {value} outside 1..={n}")
            }
            ParseErrorKind::RowCount { expected, found } => {
                write!(f, "expected {expected} rows, found {found}")
            }
            ParseErrorKind::TooLarge(n) => {
                write!(
                    f,
                    "order {n} exceeds the supported maximum {}",
                    crate::MAX_ORDER
                )
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("order must be at least 1")]
    ZeroOrder,
    #[error("order {0} exceeds the supported maximum {max}", max = crate::MAX_ORDER)]
    OrderTooLarge(usize),
    #[error("matrix must be square with {n} entries per row")]
    NotSquare { n: usize },
    #[error("entry {value} at row {row}, column {column} is outside 1..={n}")]
    EntryOutOfRange {
        row: usize,
        column: usize,
        value: usize,
        n: usize,
    },
    #[error("diagonal is not a permutation of 1..={n}; racks have no standard form")]
    DiagonalNotPermutation { n: usize },
    #[error("element {index} outside 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("not a quandle matrix: {0}")]
    NotAQuandle(VerificationReport),
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u64),
    #[error("polynomial must be monic of degree at least 1")]
    NotMonic,
    #[error("t is not invertible: constant term {constant} is not a unit mod {modulus}")]
    TNotInvertible { constant: u64, modulus: u64 },
    #[error("Alexander quandle would have {0} elements")]
    AlexanderTooLarge(u128),
    #[error("conjugation needs at least one element")]
    EmptyElementSet,
    #[error("elements {first} and {second} are equal")]
    DuplicateElement { first: usize, second: usize },
    #[error("set is not closed: conjugating element {a} by element {b} leaves the set")]
    NotClosed { a: usize, b: usize },
    #[error("permutation set is not closed under composition")]
    GroupNotClosed,
    #[error("bad constructor spec {spec:?}: {reason}")]
    ConstructorSpec { spec: String, reason: String },
    #[error("determinant of order {0} matrix overflows 128-bit integers")]
    DeterminantOverflow(usize),
    #[error(
        "search aborted after {placements} column placements ({found} quandle matrices found so far)"
    )]
    ResourceCap { placements: u64, found: usize },
}
