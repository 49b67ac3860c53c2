//! Meets and joins under the star order.
//!
//! Pairs with a common upper bound `x` have `a ∧* b = x (a'' ∧ b'')` and
//! `a ∨* b = x (a'' ∨ b'')`, independent of `x`. Every pair has a meet in
//! finite dimension: its right projection is the largest projection `m`
//! commuting with `a*a` and `b*b` under `a'' ∧ b'' ∧ (a - b)'`, and the meet
//! is `a m = b m`.

use serde::Serialize;

use crate::lattice::{join_all, projector_of, range_of};
use crate::linalg::{largest_invariant_subspace, null_space, pinv, Matrix};
use crate::ring::{right_ann, right_proj, Projection};
use crate::star::star_leq;
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MeetResult {
    pub meet: Matrix,
    /// Right projection of the meet; the greatest projection usable as `u''`
    /// for a common lower bound `u`.
    pub m: Projection,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JoinResult {
    pub join: Matrix,
}

fn require_bound(a: &Matrix, b: &Matrix, x: &Matrix) -> Result<(), Error> {
    if !star_leq(a, x) || !star_leq(b, x) {
        return Err(Error::precondition("x is not a common upper bound of a and b"));
    }
    Ok(())
}

/// `x (a'' ∧ b'')` for a common upper bound `x`.
pub fn meet_bounded(a: &Matrix, b: &Matrix, x: &Matrix) -> Result<Matrix, Error> {
    require_bound(a, b, x)?;
    Ok(x * right_proj(a).meet(&right_proj(b)).matrix())
}

/// `x (a'' ∨ b'')` for a common upper bound `x`.
pub fn join_bounded(a: &Matrix, b: &Matrix, x: &Matrix) -> Result<Matrix, Error> {
    require_bound(a, b, x)?;
    Ok(x * right_proj(a).join(&right_proj(b)).matrix())
}

/// Decides whether `a` and `b` have a common upper bound and, if so, returns
/// their join.
///
/// Any upper bound `c` satisfies `c a'' = a` and `c b'' = b`, so the least one
/// is the map agreeing with `a` on `ran a''`, with `b` on `ran b''`, and
/// vanishing on the orthocomplement of their sum. If those constraints are
/// inconsistent, or the glued map is not above both, no bound exists.
pub fn least_upper_bound(a: &Matrix, b: &Matrix) -> Option<JoinResult> {
    let n = a.cols();
    let ra = range_of(&right_proj(a));
    let rb = range_of(&right_proj(b));
    let rest = ra.sum(&rb).expect("same size").orthocomplement();
    let (ba, bb, br) = (ra.basis_columns(), rb.basis_columns(), rest.basis_columns());
    let domain = ba.hstack(&bb).and_then(|m| m.hstack(&br)).expect("same rows");
    let target = (a * &ba)
        .hstack(&(b * &bb))
        .and_then(|m| m.hstack(&Matrix::zeros(a.rows(), br.cols())))
        .expect("same rows");
    debug_assert_eq!(domain.rows(), n);
    let c = &target * &pinv(&domain);
    if &c * &domain != target || !star_leq(a, &c) || !star_leq(b, &c) {
        return None;
    }
    Some(JoinResult { join: c })
}

/// Greatest lower bound of any pair.
pub fn meet(a: &Matrix, b: &Matrix) -> MeetResult {
    let under = range_of(&right_proj(a).meet(&right_proj(b)))
        .intersect(&null_space(&(a - b)))
        .expect("same size");
    let ops = [&a.adjoint() * a, &b.adjoint() * b];
    let v = largest_invariant_subspace(&under, &ops).expect("square operators of matching size");
    let m = projector_of(&v);
    MeetResult { meet: a * m.matrix(), m }
}

/// Left fold of pairwise meets.
pub fn glb_set(elements: &[Matrix]) -> Result<Matrix, Error> {
    let (first, rest) = elements.split_first().ok_or(Error::EmptyInput)?;
    Ok(rest.iter().fold(first.clone(), |acc, x| meet(&acc, x).meet))
}

/// `x ⋁ a''` over the set, for a common upper bound `x`.
pub fn lub_bounded_set(elements: &[Matrix], x: &Matrix) -> Result<Matrix, Error> {
    if elements.is_empty() {
        return Err(Error::EmptyInput);
    }
    if elements.iter().any(|a| !star_leq(a, x)) {
        return Err(Error::precondition("x is not an upper bound of every element"));
    }
    let projs: Vec<Projection> = elements.iter().map(right_proj).collect();
    Ok(x * join_all(x.cols(), &projs).matrix())
}

/// `a*b = b*a` and `a b'' = b a''`.
pub fn is_coherent(a: &Matrix, b: &Matrix) -> bool {
    &a.adjoint() * b == &b.adjoint() * a && a * right_proj(b).matrix() == b * right_proj(a).matrix()
}

/// `a + b a'` for a coherent pair; equal to `b + a b'` and to the join.
pub fn coherent_join(a: &Matrix, b: &Matrix) -> Result<JoinResult, Error> {
    if !is_coherent(a, b) {
        return Err(Error::precondition("a and b are not coherent"));
    }
    Ok(JoinResult { join: a + &(b * right_ann(a).matrix()) })
}

/// `x ∖ y = x (x ∧* y)'`.
pub fn star_minus(x: &Matrix, y: &Matrix) -> Matrix {
    let m = meet(x, y).m;
    x * m.ortho().matrix()
}
