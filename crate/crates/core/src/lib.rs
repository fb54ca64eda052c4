//! Exact integral sl(N) homology of the torus links `T(2,m)`.
//!
//! Two independent pipelines compute the bigraded homology: SNF of the full
//! reduced twist complex ([`knotcomplex::build_torus_complex`]) and a sum
//! over its direct-sum decomposition ([`knotcomplex::decompose_summands`]).
//! Both are checked against the cohomology of the SU(N) representation
//! space ([`repspace`]), whose circle-bundle piece is computed by two Gysin
//! sequences ([`cohomring`]), and against the skein evaluation of the sl(N)
//! polynomial ([`moy`]).

mod bigint_serde;
pub mod cli;
pub mod cohomring;
pub mod knotcomplex;
pub mod laurent;
pub mod moy;
pub mod repspace;
pub mod zlinalg;

use thiserror::Error;

pub use laurent::LaurentError;
pub use zlinalg::LinalgError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("N must be at least 2, got {0}")]
    RankTooSmall(usize),
    #[error("twist count m must be at least 1, got {0}")]
    TwistTooSmall(i64),
    #[error("class is not homogeneous")]
    Inhomogeneous,
    #[error("element has {found} coefficients, ring has rank {expected}")]
    ElementLength { expected: usize, found: usize },
    #[error("differential out of position {position} does not preserve q-degree")]
    NotHomogeneous { position: i64 },
    #[error("tensor product with torsion on both sides")]
    TorsionTensor,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
