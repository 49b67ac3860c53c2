//! The Rickart *-ring structure of `M_n(Q(i))`.
//!
//! For every `x` the right annihilator `{y : x y = 0}` is generated by the
//! projection `x' = I - x†x`, so `x y = 0` exactly when `x' y = y`. The
//! complementary projection `x'' = x†x` is the right projection of `x`, and
//! the left-hand versions come from `x*`: `(x*)' = I - x x†`, `(x*)'' = x x†`.

use std::fmt;

use serde::Serialize;

use crate::linalg::{inverse, rref, Matrix};
use crate::Error;

/// The ambient ring `M_n(Q(i))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RingContext {
    n: usize,
}

impl RingContext {
    pub fn new(n: usize) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::precondition("ring dimension must be positive"));
        }
        Ok(RingContext { n })
    }

    /// Context for a square matrix.
    pub fn of(x: &Matrix) -> Result<Self, Error> {
        if !x.is_square() {
            return Err(Error::Dimension { expected: x.rows(), found: x.shape() });
        }
        RingContext::new(x.rows())
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn check(&self, x: &Matrix) -> Result<(), Error> {
        if x.shape() != (self.n, self.n) {
            return Err(Error::Dimension { expected: self.n, found: x.shape() });
        }
        Ok(())
    }

    pub fn check_all<'a>(&self, xs: impl IntoIterator<Item = &'a Matrix>) -> Result<(), Error> {
        xs.into_iter().try_for_each(|x| self.check(x))
    }

    pub fn zero(&self) -> Matrix {
        Matrix::zeros(self.n, self.n)
    }

    pub fn one(&self) -> Matrix {
        Matrix::identity(self.n)
    }
}

/// A self-adjoint idempotent matrix.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Projection(Matrix);

impl Projection {
    /// Validates `P = P* = P^2` exactly.
    pub fn new(mat: Matrix) -> Result<Self, Error> {
        if !mat.is_projection() {
            return Err(Error::NotProjection);
        }
        Ok(Projection(mat))
    }

    /// Wraps a matrix that is a projection by construction.
    pub(crate) fn trusted(mat: Matrix) -> Self {
        debug_assert!(mat.is_projection(), "not a projection: {mat:?}");
        Projection(mat)
    }

    pub fn zero(n: usize) -> Self {
        Projection(Matrix::zeros(n, n))
    }

    pub fn identity(n: usize) -> Self {
        Projection(Matrix::identity(n))
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix {
        self.0
    }
}

impl AsRef<Matrix> for Projection {
    fn as_ref(&self) -> &Matrix {
        &self.0
    }
}

impl fmt::Debug for Projection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Projection({:?})", self.0)
    }
}

/// `x' = I - x†x`, the projection generating the right annihilator of `x`.
pub fn right_ann(x: &Matrix) -> Projection {
    right_proj(x).ortho()
}

/// `x'' = x†x`, the right projection of `x`.
///
/// Computed as the projector `G* (G G*)^-1 G` onto the span of the rows `G`
/// of `rref(x)`, which is the range of `x†x` without forming `x†`.
pub fn right_proj(x: &Matrix) -> Projection {
    let (r, pivots) = rref(x);
    if pivots.is_empty() {
        return Projection::zero(x.cols());
    }
    let keep: Vec<usize> = (0..pivots.len()).collect();
    let g = r.select_rows(&keep);
    let gs = g.adjoint();
    let gram = inverse(&(&g * &gs)).expect("rows of rref are independent");
    Projection::trusted(&(&gs * &gram) * &g)
}

/// `(x*)' = I - x x†`.
pub fn left_ann(x: &Matrix) -> Projection {
    left_proj(x).ortho()
}

/// `(x*)'' = x x†`.
pub fn left_proj(x: &Matrix) -> Projection {
    right_proj(&x.adjoint())
}

/// `x ⊥ y`: `x y* = 0 = x* y`.
pub fn star_orthogonal(x: &Matrix, y: &Matrix) -> bool {
    (x * &y.adjoint()).is_zero() && (&x.adjoint() * y).is_zero()
}

/// `e ∈ C(x)`: `e x = x e`.
pub fn commutant_contains(x: &Matrix, e: &Projection) -> bool {
    e.matrix() * x == x * e.matrix()
}

/// `e ∈ K_x = C(x* x)`.
pub fn kx_contains(x: &Matrix, e: &Projection) -> bool {
    commutant_contains(&(&x.adjoint() * x), e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Scalar;

    fn nil() -> Matrix {
        Matrix::from_int_rows(&[[0, 1], [0, 0]])
    }

    #[test]
    fn annihilators() {
        assert_eq!(right_ann(&Matrix::diag_int(&[1, 0])).matrix(), &Matrix::diag_int(&[0, 1]));
        assert_eq!(right_ann(&Matrix::zeros(3, 3)), Projection::identity(3));
        let n = nil();
        let na = right_ann(&n);
        assert_eq!(na.matrix(), &Matrix::diag_int(&[1, 0]));
        assert!((&n * na.matrix()).is_zero());
    }

    #[test]
    fn right_projections() {
        assert_eq!(right_proj(&Matrix::identity(2)), Projection::identity(2));
        assert_eq!(right_proj(&Matrix::diag_int(&[1, 2, 0])).matrix(), &Matrix::diag_int(&[1, 1, 0]));
        assert_eq!(right_proj(&nil()).matrix(), &Matrix::diag_int(&[0, 1]));
        assert_eq!(&nil() * right_proj(&nil()).matrix(), nil());
    }

    #[test]
    fn left_projections() {
        assert_eq!(left_proj(&nil()).matrix(), &Matrix::diag_int(&[1, 0]));
        assert_eq!(left_ann(&Matrix::identity(2)), Projection::zero(2));
        let x = Matrix::from_rows(vec![
            vec![Scalar::i(), Scalar::from_int(2)],
            vec![Scalar::from_int(1), Scalar::gaussian(0, 1, -2, 1)],
        ])
        .unwrap();
        assert_eq!(left_proj(&x), right_proj(&x.adjoint()));
        assert!((left_ann(&x).matrix() * &x).is_zero());
    }

    #[test]
    fn orthogonality() {
        assert!(star_orthogonal(&Matrix::diag_int(&[1, 0]), &Matrix::diag_int(&[0, 2])));
        assert!(!star_orthogonal(&Matrix::diag_int(&[1, 0]), &Matrix::diag_int(&[2, 0])));
        assert!(star_orthogonal(&Matrix::zeros(2, 2), &Matrix::zeros(2, 2)));
        assert!(!star_orthogonal(&nil(), &nil()));
    }

    #[test]
    fn commutants() {
        let e = Projection::new(Matrix::diag_int(&[1, 0])).unwrap();
        assert!(commutant_contains(&nil(), &Projection::identity(2)));
        assert!(!commutant_contains(&nil(), &e));
        assert!(commutant_contains(&Matrix::diag_int(&[3, 5]), &e));
        assert!(kx_contains(&Matrix::diag_int(&[2, 3]), &e));
        let half = Scalar::from_ratio(1, 2);
        let diag_line = Projection::new(Matrix::from_rows(vec![vec![half.clone(); 2]; 2]).unwrap()).unwrap();
        assert!(!kx_contains(&Matrix::diag_int(&[1, 2]), &diag_line));
        assert!(kx_contains(&nil(), &right_proj(&nil())));
    }

    #[test]
    fn projection_validation() {
        assert!(Projection::new(Matrix::diag_int(&[1, 2])).is_err());
        assert!(Projection::new(Matrix::from_int_rows(&[[1, 1], [0, 0]])).is_err());
        assert!(Projection::new(Matrix::diag_int(&[0, 1])).is_ok());
    }

    #[test]
    fn ring_context_checks() {
        let ctx = RingContext::new(2).unwrap();
        assert!(ctx.check(&Matrix::identity(2)).is_ok());
        assert!(ctx.check(&Matrix::identity(3)).is_err());
        assert!(RingContext::new(0).is_err());
        assert!(RingContext::of(&Matrix::zeros(2, 3)).is_err());
        assert_eq!(right_ann(&ctx.zero()).matrix(), &ctx.one());
    }
}
