//! Exact linear algebra over the coefficient fields and the polynomial ring.

mod bareiss;
mod dense;
mod sparse;

pub use bareiss::{bareiss, determinant, poly_rank, BareissResult};
pub use dense::{kernel, rank, rref, solve};
pub use sparse::{sparse_rank, SparseEliminator};
