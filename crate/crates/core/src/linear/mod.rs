//! Exact linear algebra over ℚ.

pub mod echelon;
pub mod eigen;
pub mod matrix;
pub mod quadform;
pub mod scalar;
pub mod span;
pub mod subspace;

pub use echelon::{inverse, rank, rref, solve, Echelon, SparseRow};
pub use matrix::{combine, dot, unit_vec, vec_add, vec_is_zero, vec_scale, vec_sub, MatrixQ};
pub use quadform::{signature, QuadFormQ, Signature};
pub use scalar::{q, Scalar};
pub use span::MatrixSpan;
pub use subspace::Subspace;

/// Null space of `m` as a canonical subspace.
pub fn kernel(m: &MatrixQ) -> Subspace {
    Subspace::kernel_of(m)
}
