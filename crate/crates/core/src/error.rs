use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Why a candidate Cayley table was rejected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("table is empty or not square (row {row} has {len} entries)")]
    NotSquare { row: usize, len: usize },
    #[error("entry {value} at ({row}, {col}) is out of range")]
    OutOfRange {
        row: usize,
        col: usize,
        value: usize,
    },
    #[error("not a Latin square: {line} {index} repeats value {value}")]
    NotLatinSquare {
        line: Line,
        index: usize,
        value: usize,
    },
    #[error("index 0 is not a two-sided identity (fails at element {element})")]
    IdentityLaw { element: usize },
    #[error("element {element} has no two-sided inverse")]
    MissingInverse { element: usize },
    #[error("associativity fails for ({a}, {b}, {c})")]
    Associativity { a: usize, b: usize, c: usize },
    #[error("declared order {declared} but the table has {rows} rows")]
    OrderMismatch { declared: usize, rows: usize },
    #[error("expected {expected} labels, found {found}")]
    LabelCount { expected: usize, found: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Line {
    Row,
    Column,
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Line::Row => f.write_str("row"),
            Line::Column => f.write_str("column"),
        }
    }
}

impl TableError {
    pub fn code(&self) -> &'static str {
        match self {
            TableError::NotSquare { .. } => "not_square",
            TableError::OutOfRange { .. } => "out_of_range",
            TableError::NotLatinSquare { .. } => "not_latin_square",
            TableError::IdentityLaw { .. } => "identity_law",
            TableError::MissingInverse { .. } => "missing_inverse",
            TableError::Associativity { .. } => "associativity",
            TableError::OrderMismatch { .. } => "order_mismatch",
            TableError::LabelCount { .. } => "label_count",
        }
    }

    pub fn witness(&self) -> Vec<usize> {
        match *self {
            TableError::NotSquare { row, len } => vec![row, len],
            TableError::OutOfRange { row, col, value } => vec![row, col, value],
            TableError::NotLatinSquare { index, value, .. } => vec![index, value],
            TableError::IdentityLaw { element } => vec![element],
            TableError::MissingInverse { element } => vec![element],
            TableError::Associativity { a, b, c } => vec![a, b, c],
            TableError::OrderMismatch { declared, rows } => vec![declared, rows],
            TableError::LabelCount { expected, found } => vec![expected, found],
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("group order {order} exceeds the order cap {cap}")]
    OrderCap { order: u128, cap: usize },
    #[error("rank {rank} exceeds the rank cap {cap}")]
    RankCap { rank: usize, cap: usize },
    #[error("generator {index} is not a permutation of 0..{degree}")]
    MalformedPermutation { index: usize, degree: usize },
    #[error("invalid Cayley table: {0}")]
    Table(#[from] TableError),
    #[error("group order {order} exceeds the subgroup enumeration cap {cap}")]
    LatticeCap { order: usize, cap: usize },
    #[error("subgroups belong to groups of different orders ({left} vs {right})")]
    ParentMismatch { left: usize, right: usize },
    #[error("elements of {prime}-power order are not closed: {a} * {b} leaves the set")]
    NotClosed { prime: u64, a: usize, b: usize },
    #[error("group is not abelian: {a} and {b} do not commute")]
    NotAbelian { a: usize, b: usize },
    #[error("group is not Hamiltonian")]
    NotHamiltonian,
    #[error("2-primary part is abelian; no non-commuting pair exists")]
    NoNonCommutingPair,
    #[error("subgroup is not elementary abelian of exponent 2")]
    NotElementaryAbelian,
    #[error("element {0} is not a non-identity member of the subgroup")]
    NotInSubgroup(usize),
    #[error("decomposition invariant failed: {0}")]
    Decomposition(String),
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Machine-readable error object used by the loader and the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ErrorObject {
    pub error: String,
    pub witness: Vec<usize>,
    pub message: String,
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidParameter(_) => "invalid_parameter",
            Error::OrderCap { .. } => "order_cap",
            Error::RankCap { .. } => "rank_cap",
            Error::MalformedPermutation { .. } => "malformed_permutation",
            Error::Table(t) => t.code(),
            Error::LatticeCap { .. } => "lattice_cap",
            Error::ParentMismatch { .. } => "parent_mismatch",
            Error::NotClosed { .. } => "not_closed",
            Error::NotAbelian { .. } => "not_abelian",
            Error::NotHamiltonian => "not_hamiltonian",
            Error::NoNonCommutingPair => "no_non_commuting_pair",
            Error::NotElementaryAbelian => "not_elementary_abelian",
            Error::NotInSubgroup(_) => "not_in_subgroup",
            Error::Decomposition(_) => "decomposition",
            Error::Syntax { .. } => "syntax",
            Error::Io(_) => "io",
            Error::Json(_) => "parse",
        }
    }

    pub fn to_object(&self) -> ErrorObject {
        let witness = match self {
            Error::Table(t) => t.witness(),
            Error::NotClosed { a, b, .. } | Error::NotAbelian { a, b } => vec![*a, *b],
            Error::MalformedPermutation { index, .. } => vec![*index],
            Error::NotInSubgroup(x) => vec![*x],
            Error::Syntax { offset, .. } => vec![*offset],
            _ => Vec::new(),
        };
        ErrorObject {
            error: self.code().to_string(),
            witness,
            message: self.to_string(),
        }
    }
}
