//! Orthomodular lattice of projections, realized through the subspace lattice.

use crate::linalg::{col_space, inverse, Matrix, Subspace};
use crate::ring::Projection;

/// Orthogonal projector onto `u`: `C (C* C)^-1 C*` for a column basis `C`.
pub fn projector_of(u: &Subspace) -> Projection {
    let n = u.ambient_dim();
    if u.is_zero() {
        return Projection::zero(n);
    }
    let c = u.basis_columns();
    let cs = c.adjoint();
    let gram = inverse(&(&cs * &c)).expect("basis Gram matrix is invertible");
    Projection::trusted(&(&c * &gram) * &cs)
}

pub fn range_of(e: &Projection) -> Subspace {
    col_space(e.matrix())
}

impl Projection {
    /// `e ≤ f` iff `e f = e`.
    pub fn leq(&self, other: &Projection) -> bool {
        self.matrix() * other.matrix() == *self.matrix()
    }

    /// `e' = I - e`.
    pub fn ortho(&self) -> Projection {
        Projection::trusted(&Matrix::identity(self.dim()) - self.matrix())
    }

    /// Projection onto the intersection of the ranges.
    pub fn meet(&self, other: &Projection) -> Projection {
        let r = range_of(self).intersect(&range_of(other)).expect("projections of equal size");
        projector_of(&r)
    }

    /// Projection onto the sum of the ranges.
    pub fn join(&self, other: &Projection) -> Projection {
        let r = range_of(self).sum(&range_of(other)).expect("projections of equal size");
        projector_of(&r)
    }

    pub fn commutes_with(&self, other: &Projection) -> bool {
        self.matrix() * other.matrix() == other.matrix() * self.matrix()
    }

    pub fn is_orthogonal_to(&self, other: &Projection) -> bool {
        (self.matrix() * other.matrix()).is_zero()
    }
}

pub fn proj_leq(e: &Projection, f: &Projection) -> bool {
    e.leq(f)
}

pub fn proj_meet(e: &Projection, f: &Projection) -> Projection {
    e.meet(f)
}

pub fn proj_join(e: &Projection, f: &Projection) -> Projection {
    e.join(f)
}

pub fn proj_ortho(e: &Projection) -> Projection {
    e.ortho()
}

/// Join of a finite family; the empty join is `0`.
pub fn join_all<'a>(n: usize, es: impl IntoIterator<Item = &'a Projection>) -> Projection {
    let mut acc = Subspace::zero(n);
    for e in es {
        acc = acc.sum(&range_of(e)).expect("projections of equal size");
    }
    projector_of(&acc)
}
