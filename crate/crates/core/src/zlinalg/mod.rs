//! Exact integer linear algebra: Smith normal form, homology of complexes
//! of free abelian groups, and Gaussian elimination of such complexes.

mod complex;
mod group;
mod matrix;
mod smith;

use thiserror::Error;

pub use complex::{complex_homology, homology_at, FreeChainComplex};
pub use group::AbGroup;
pub use matrix::IntMatrix;
pub use smith::{invariant_factors, smith_normal_form, SmithDecomposition};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("incoming differential has {incoming_rows} rows but outgoing has {outgoing_cols} columns")]
    DimensionMismatch { incoming_rows: usize, outgoing_cols: usize },
    #[error("composite of consecutive differentials is nonzero")]
    NotAComplex,
    #[error("composite of differentials out of position {position} is nonzero")]
    SquareNonZero { position: i64 },
    #[error("complex has no positions")]
    EmptyComplex,
    #[error("{positions} positions need {} differentials, got {differentials}", positions - 1)]
    DifferentialCount { positions: usize, differentials: usize },
    #[error("differential out of position {position} should be {expected:?}, found {found:?}")]
    DifferentialShape { position: i64, expected: (usize, usize), found: (usize, usize) },
    #[error("no differential out of position {0}")]
    PositionOutOfRange(i64),
    #[error("entry ({row}, {col}) is outside the differential")]
    EntryOutOfRange { row: usize, col: usize },
    #[error("entry ({row}, {col}) is {value}, not a unit")]
    NotAUnit { row: usize, col: usize, value: String },
}
