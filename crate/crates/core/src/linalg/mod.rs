//! Exact linear algebra over the Gaussian rationals Q(i).

mod elim;
mod invariant;
mod matrix;
mod pinv;
mod scalar;
mod subspace;

pub use elim::{inverse, rank, rref};
pub use invariant::{is_invariant, largest_invariant_subspace};
pub use matrix::Matrix;
pub use pinv::{full_rank_factorization, is_moore_penrose_inverse, pinv};
pub use scalar::Scalar;
pub use subspace::{col_space, null_space, row_space, Subspace};
