use super::elim::rref;
use super::{Matrix, Scalar};
use crate::Error;

/// A linear subspace of the column space Q(i)^n.
///
/// The basis is stored as the nonzero rows of a reduced row echelon form, so
/// `==` on `Subspace` is equality of subspaces.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
}

impl Subspace {
    /// Span of the rows of `spanning` (each row a vector of Q(i)^n).
    pub fn from_spanning_rows(spanning: &Matrix) -> Self {
        let n = spanning.cols();
        let (r, pivots) = rref(spanning);
        let keep: Vec<usize> = (0..pivots.len()).collect();
        Subspace { ambient_dim: n, basis: r.select_rows(&keep) }
    }

    /// Span of the given column vectors.
    pub fn span(ambient_dim: usize, vectors: &[Vec<Scalar>]) -> Self {
        let m = Matrix::from_fn(vectors.len(), ambient_dim, |i, j| vectors[i][j].clone());
        Subspace::from_spanning_rows(&m)
    }

    pub fn zero(n: usize) -> Self {
        Subspace { ambient_dim: n, basis: Matrix::zeros(0, n) }
    }

    pub fn full(n: usize) -> Self {
        Subspace { ambient_dim: n, basis: Matrix::identity(n) }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    /// Canonical basis, one vector per row.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    /// Canonical basis as an `n x dim` matrix of columns.
    pub fn basis_columns(&self) -> Matrix {
        self.basis.transpose()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    fn check(&self, other: &Subspace) -> Result<(), Error> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::AmbientMismatch(self.ambient_dim, other.ambient_dim));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, Error> {
        self.check(other)?;
        Ok(Subspace::from_spanning_rows(&self.basis.vstack(&other.basis)?))
    }

    /// Orthogonal complement under `<u, v> = sum conj(u_j) v_j`.
    pub fn orthocomplement(&self) -> Subspace {
        null_space(&self.basis.conj())
    }

    /// `U ∩ V = (U⊥ + V⊥)⊥`; exact because the Hermitian form is definite on Q(i)^n.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, Error> {
        self.check(other)?;
        Ok(self.orthocomplement().sum(&other.orthocomplement())?.orthocomplement())
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool, Error> {
        self.check(other)?;
        Ok(self.sum(other)?.dim() == self.dim())
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient_dim, "vector length");
        let row = Matrix::from_fn(1, v.len(), |_, j| v[j].clone());
        Subspace::from_spanning_rows(&self.basis.vstack(&row).expect("same width")).dim() == self.dim()
    }

    /// `{T v : v ∈ self}`.
    pub fn image(&self, t: &Matrix) -> Result<Subspace, Error> {
        if t.cols() != self.ambient_dim {
            return Err(Error::AmbientMismatch(t.cols(), self.ambient_dim));
        }
        Ok(col_space(&t.try_mul(&self.basis_columns())?))
    }

    /// `{v : T v ∈ self}` for a square `T`.
    pub fn preimage(&self, t: &Matrix) -> Result<Subspace, Error> {
        if !t.is_square() || t.rows() != self.ambient_dim {
            return Err(Error::AmbientMismatch(t.rows(), self.ambient_dim));
        }
        // T v ∈ U  iff  conj(W) T v = 0 for a basis W of U⊥
        let constraints = self.orthocomplement().basis.conj();
        Ok(null_space(&constraints.try_mul(t)?))
    }
}

pub fn row_space(a: &Matrix) -> Subspace {
    Subspace::from_spanning_rows(a)
}

pub fn col_space(a: &Matrix) -> Subspace {
    Subspace::from_spanning_rows(&a.transpose())
}

/// `{v : A v = 0}`.
pub fn null_space(a: &Matrix) -> Subspace {
    let n = a.cols();
    let (r, pivots) = rref(a);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let basis = Matrix::from_fn(free.len(), n, |k, j| {
        let f = free[k];
        if j == f {
            Scalar::one()
        } else if let Some(i) = pivots.iter().position(|&p| p == j) {
            -r.get(i, f)
        } else {
            Scalar::zero()
        }
    });
    Subspace::from_spanning_rows(&basis)
}
