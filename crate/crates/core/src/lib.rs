//! Star-order calculus on the Rickart *-ring of square matrices over the
//! Gaussian rationals, with exact arithmetic throughout.
//!
//! The ring is `M_n(Q(i))` with conjugate transpose as involution. Matrices
//! act on column vectors: `x'` projects onto `ker x` and `x''` onto the row
//! space (the range of `x*`).
//!
//! - [`linalg`]: scalars, matrices, subspaces, pseudoinverse, invariant subspaces
//! - [`ring`]: annihilator projections, *-orthogonality, commutants
//! - [`lattice`]: the orthomodular lattice of projections
//! - [`star`]: the star order and its variants
//! - [`order`]: meets and joins under the star order, coherence, star-minus
//! - [`gen`], [`harness`]: instance generators and property suites
//! - [`format`]: the JSON matrix file format

mod error;
pub mod format;
pub mod gen;
pub mod harness;
pub mod lattice;
pub mod linalg;
pub mod order;
pub mod ring;
pub mod star;

pub use error::Error;
pub use linalg::{Matrix, Scalar, Subspace};
pub use ring::{Projection, RingContext};
