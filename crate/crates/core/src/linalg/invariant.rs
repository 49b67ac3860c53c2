use super::{Matrix, Subspace};
use crate::Error;

/// Largest subspace `V ⊆ w` with `T V ⊆ V` for every `T` in `ops`.
///
/// Descending fixpoint `V_0 = w`, `V_{k+1} = V_k ∩ ⋂_T T^-1(V_k)`; the
/// dimension drops at every non-final step, so at most `n` rounds run.
pub fn largest_invariant_subspace(w: &Subspace, ops: &[Matrix]) -> Result<Subspace, Error> {
    let n = w.ambient_dim();
    if let Some(t) = ops.iter().find(|t| t.shape() != (n, n)) {
        return Err(Error::AmbientMismatch(t.rows().max(t.cols()), n));
    }
    let mut current = w.clone();
    loop {
        let mut next = current.clone();
        for t in ops {
            next = next.intersect(&current.preimage(t)?)?;
        }
        if next.dim() == current.dim() {
            return Ok(current);
        }
        current = next;
    }
}

pub fn is_invariant(v: &Subspace, t: &Matrix) -> Result<bool, Error> {
    v.contains(&v.image(t)?)
}
