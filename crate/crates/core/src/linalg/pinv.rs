//! Full-rank factorization and the Moore-Penrose inverse.

use super::elim::{inverse, rref};
use super::Matrix;

/// `A = F G` with `F` the pivot columns of `A` (`m x r`) and `G` the nonzero
/// rows of `rref(A)` (`r x n`). A zero matrix gives `m x 0` and `0 x n` factors.
pub fn full_rank_factorization(a: &Matrix) -> (Matrix, Matrix) {
    let (r, pivots) = rref(a);
    let keep: Vec<usize> = (0..pivots.len()).collect();
    (a.select_columns(&pivots), r.select_rows(&keep))
}

/// `A† = G* (G G*)^-1 (F* F)^-1 F* = G* (F* A G*)^-1 F*`.
///
/// `F* A G* = (F* F)(G G*)` is a product of Gram matrices of independent
/// vectors, hence invertible (`v* v = 0` forces `v = 0` over Q(i)).
pub fn pinv(a: &Matrix) -> Matrix {
    let (f, g) = full_rank_factorization(a);
    if g.rows() == 0 {
        return Matrix::zeros(a.cols(), a.rows());
    }
    let gs = g.adjoint();
    let fs = f.adjoint();
    let core = inverse(&(&(&fs * a) * &gs)).expect("F* A G* is invertible");
    &(&gs * &core) * &fs
}

/// All four Penrose equations, checked exactly.
pub fn is_moore_penrose_inverse(a: &Matrix, candidate: &Matrix) -> bool {
    if candidate.shape() != (a.cols(), a.rows()) {
        return false;
    }
    let ax = a * candidate;
    let xa = candidate * a;
    &ax * a == *a && &xa * candidate == *candidate && ax.is_self_adjoint() && xa.is_self_adjoint()
}
