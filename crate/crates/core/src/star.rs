//! The star order `a ⩽* b`: `a*a = a*b` and `a a* = b a*`.
//!
//! Equivalently `b = a + c` with `c ⊥ a`, or `b a'' = a = (a*)'' b`.

use serde::Serialize;

use crate::gen::{GenConfig, Generator};
use crate::linalg::{rank, Matrix};
use crate::ring::{left_proj, right_ann, right_proj, star_orthogonal, Projection};
use crate::Error;

pub fn star_leq(a: &Matrix, b: &Matrix) -> bool {
    let ad = a.adjoint();
    &ad * a == &ad * b && a * &ad == b * &ad
}

/// Certificate for `a ⩽* b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderWitness {
    /// `c = b - a`, with `c ⊥ a`.
    pub complement: Matrix,
    /// `e = a''`, so `b e = a`.
    pub right: Projection,
    /// `f = (a*)''`, so `f b = a`.
    pub left: Projection,
}

/// Returns the witness when `a ⩽* b`, `Ok(None)` when not.
///
/// Every witness equation is re-checked; a failure means a bug and is
/// reported as [`Error::Invariant`].
pub fn star_leq_certificate(a: &Matrix, b: &Matrix) -> Result<Option<OrderWitness>, Error> {
    if !star_leq(a, b) {
        return Ok(None);
    }
    let complement = b - a;
    let right = right_proj(a);
    let left = left_proj(a);
    if !star_orthogonal(&complement, a) {
        return Err(Error::Invariant("star-order complement is not *-orthogonal".into()));
    }
    if b * right.matrix() != *a || left.matrix() * b != *a {
        return Err(Error::Invariant("b a'' = a = (a*)'' b fails for a comparable pair".into()));
    }
    Ok(Some(OrderWitness { complement, right, left }))
}

/// On self-adjoint elements the order reduces to `a^2 = a b`.
pub fn star_leq_hermitian(a: &Matrix, b: &Matrix) -> Result<bool, Error> {
    if !a.is_self_adjoint() || !b.is_self_adjoint() {
        return Err(Error::precondition("hermitian variant needs self-adjoint arguments"));
    }
    Ok(a * a == a * b)
}

/// Left-star order: `a a* = b a*` and `a'' ≤ b''`.
pub fn left_star_leq(a: &Matrix, b: &Matrix) -> bool {
    let ad = a.adjoint();
    a * &ad == b * &ad && right_proj(a).leq(&right_proj(b))
}

/// Right-star order: `a*a = a*b` and `(a*)'' ≤ (b*)''`.
pub fn right_star_leq(a: &Matrix, b: &Matrix) -> bool {
    let ad = a.adjoint();
    &ad * a == &ad * b && left_proj(a).leq(&left_proj(b))
}

/// `b' ≤ a'` and `a'' ≤ b''`, which must hold whenever `a ⩽* b`.
pub fn rp_monotonicity_check(a: &Matrix, b: &Matrix) -> Result<bool, Error> {
    if !star_leq(a, b) {
        return Err(Error::precondition("monotonicity check needs a ⩽* b"));
    }
    Ok(right_ann(b).leq(&right_ann(a)) && right_proj(a).leq(&right_proj(b)))
}

/// Randomized search for a strict upper bound of an invertible `a`.
///
/// Candidates are `a + w` with `w ⊥ a` drawn from the generator (the only
/// shape an upper bound can take) and unstructured perturbations `a + r`.
/// Returns `Ok(false)` if some `z ≠ a` with `a ⩽* z` turns up.
pub fn maximality_check(a: &Matrix, cfg: &GenConfig) -> Result<bool, Error> {
    if !a.is_square() || rank(a) != a.rows() {
        return Err(Error::precondition("maximality check needs an invertible element"));
    }
    let mut gen = Generator::new(cfg);
    for _ in 0..cfg.trials {
        let n = a.rows();
        let w = gen.orthogonal_to(a);
        let r = gen.matrix(n);
        for z in [a + &w, a + &r] {
            if z != *a && star_leq(a, &z) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
