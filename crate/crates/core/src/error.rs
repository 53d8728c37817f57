use alloc::string::String;
use core::fmt;

use crate::signed::Sign;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Input that cannot be read as the requested object at all.
    MalformedInput(String),
    /// A tree (or tree-shaped input) breaks one of the tree invariants.
    InvalidTree(String),
    /// A parameter outside the supported range.
    Domain(String),
    /// Matrix handed to the eigensolver is not symmetric.
    NotSymmetric { row: usize, col: usize },
    /// Jacobi sweeps hit the cap before the off-diagonal norm fell below tolerance.
    NoConvergence { sweeps: usize, off_norm: f64 },
    /// A rotation names an edge whose current sign is not the one the move requires.
    SignMismatch { u: usize, v: usize, expected: Sign },
    /// The supplied vector is not a top eigenvector of the graph it is checked against.
    StaleEigenvector { residual: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::MalformedInput(msg) => write!(f, "malformed input: {msg}"),
            Error::InvalidTree(msg) => write!(f, "invalid tree: {msg}"),
            Error::Domain(msg) => write!(f, "parameter out of range: {msg}"),
            Error::NotSymmetric { row, col } => {
                write!(f, "matrix is not symmetric at ({row}, {col})")
            }
            Error::NoConvergence { sweeps, off_norm } => write!(
                f,
                "Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})"
            ),
            Error::SignMismatch { u, v, expected } => {
                write!(f, "edge {u}-{v} is not {expected} as the move requires")
            }
            Error::StaleEigenvector { residual } => write!(
                f,
                "vector is not a top eigenvector of this graph (residual {residual:e})"
            ),
        }
    }
}

impl core::error::Error for Error {}
