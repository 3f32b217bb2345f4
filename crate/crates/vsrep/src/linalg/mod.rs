//! Dense linear algebra over small finite fields.
//!
//! Conventions, fixed once for the whole crate:
//!
//! * vectors are **row** vectors `v = (v_0, …, v_{n-1})`;
//! * an operator matrix `a` acts on the column `vᵀ`, i.e. the image of `v`
//!   under `a` is the row vector `(a·vᵀ)ᵀ` (see [`Matrix::act`]);
//! * `vec(X)` flattens a matrix row-major, and the Kronecker product indexes
//!   `(i₁,i₂) ↦ i₁·rows(b) + i₂`, so conjugation `X ↦ a·X·a⁻¹` acts on
//!   `vec(X)` as the matrix `a ⊗ (a⁻¹)ᵀ`;
//! * the canonical form of a subspace is the reduced row-echelon basis, which
//!   makes subspace equality a byte comparison.
//!
//! GF(2) matrices are stored one bit per entry with word-parallel row
//! operations; all other fields use one byte per entry with table-driven
//! arithmetic. The representation is not visible in the API.

mod matrix;
mod poly;
mod subspace;

pub use matrix::{Matrix, Rref, RrefAug};
pub use poly::{minpoly_of_matrix, Poly};
pub use subspace::{Echelon, QuotientMap, Subspace};

use thiserror::Error;

/// Errors raised by matrix and subspace operations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("operands live over different fields")]
    FieldMismatch,
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is singular")]
    Singular,
    #[error("subspaces have different ambient dimensions")]
    AmbientMismatch,
    #[error("vector does not lie in the subspace")]
    NotInSubspace,
    #[error("candidate rows do not complement the subspace")]
    BadComplement,
    #[error("subspace is not invariant under the operator")]
    NotInvariant,
}
