//! Exact arithmetic over Q and Q(q), and the sparse linear algebra needed to
//! compute ranks, kernels and quotients of finite-dimensional operators.

mod echelon;
mod poly;
mod scalar;
mod sparse;

pub use echelon::{
    charpoly, column_space, kernel_basis, membership, quotient_by, quotient_projection, rank,
    EchelonBuilder, QuotientProjection, SubspaceBasis,
};
pub use poly::QPoly;
pub use scalar::{RatFun, Scalar};
pub use sparse::{SparseMatrix, SparseVector};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("shape mismatch: {left:?} vs {right:?}")]
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("matrix is {0}x{1}, not square")]
    NotSquare(usize, usize),
    #[error("cannot parse scalar `{0}`")]
    Parse(String),
}
