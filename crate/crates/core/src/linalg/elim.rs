//! Gauss-Jordan elimination over Q(i).

use super::scalar::DotSum;
use super::{Matrix, Scalar};

/// Reduced row echelon form and its pivot columns.
///
/// The form is unique, so two matrices with the same row space have the
/// same nonzero RREF rows.
pub fn rref(a: &Matrix) -> (Matrix, Vec<usize>) {
    let (m, n) = a.shape();
    let mut rows: Vec<Vec<Scalar>> = (0..m).map(|i| a.row(i).to_vec()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        if !inv.is_one() {
            for x in rows[r][c..].iter_mut() {
                *x = &*x * &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                if !p.is_zero() {
                    let mut acc = DotSum::starting_at(std::mem::take(x));
                    acc.sub_product(&factor, p);
                    *x = acc.finish();
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let out = Matrix::from_fn(m, n, |i, j| rows[i][j].clone());
    (out, pivots)
}

pub fn rank(a: &Matrix) -> usize {
    rref(a).1.len()
}

/// Inverse of a square matrix, `None` when singular.
pub fn inverse(a: &Matrix) -> Option<Matrix> {
    if !a.is_square() {
        return None;
    }
    let n = a.rows();
    let aug = a.hstack(&Matrix::identity(n)).expect("same row count");
    let (r, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    let cols: Vec<usize> = (n..2 * n).collect();
    Some(r.select_columns(&cols))
}

#[cfg(test)]
mod tests {
    use super::*;

    // Leibniz determinant; exponential but independent of elimination.
    fn det(a: &Matrix) -> Scalar {
        let n = a.rows();
        if n == 0 {
            return Scalar::one();
        }
        let mut total = Scalar::zero();
        for j in 0..n {
            if a.get(0, j).is_zero() {
                continue;
            }
            let rest: Vec<usize> = (0..n).filter(|&c| c != j).collect();
            let rows: Vec<usize> = (1..n).collect();
            let minor = a.select_rows(&rows).select_columns(&rest);
            let term = a.get(0, j) * &det(&minor);
            total = if j % 2 == 0 { total + term } else { total - term };
        }
        total
    }

    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        (0u32..(1 << n))
            .filter(|m| m.count_ones() as usize == k)
            .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
            .collect()
    }

    fn rank_by_minors(a: &Matrix) -> usize {
        (1..=a.rows().min(a.cols()))
            .rev()
            .find(|&k| {
                subsets(a.rows(), k).iter().any(|rs| {
                    subsets(a.cols(), k).iter().any(|cs| !det(&a.select_rows(rs).select_columns(cs)).is_zero())
                })
            })
            .unwrap_or(0)
    }

    #[test]
    fn scaling_row() {
        let (r, p) = rref(&Matrix::from_int_rows(&[[2, 0], [0, 0]]));
        assert_eq!(r, Matrix::from_int_rows(&[[1, 0], [0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn identity_is_fixed() {
        let (r, p) = rref(&Matrix::identity(3));
        assert_eq!(r, Matrix::identity(3));
        assert_eq!(p, vec![0, 1, 2]);
    }

    #[test]
    fn rank_one_ones() {
        let a = Matrix::from_int_rows(&[[1, 1], [1, 1]]);
        let (r, p) = rref(&a);
        assert_eq!(r, Matrix::from_int_rows(&[[1, 1], [0, 0]]));
        assert_eq!(p, vec![0]);
        assert_eq!(rank_by_minors(&a), 1);
    }

    #[test]
    fn rank_agrees_with_minors() {
        let a = Matrix::from_rows(vec![
            vec![Scalar::i(), Scalar::from_int(2), Scalar::from_ratio(1, 3)],
            vec![Scalar::from_int(-1), Scalar::gaussian(0, 1, 2, 1), Scalar::gaussian(0, 1, 1, 3)],
            vec![Scalar::from_int(0), Scalar::from_int(1), Scalar::from_int(4)],
        ])
        .unwrap();
        // row 2 is i * row 1
        assert_eq!(rank(&a), rank_by_minors(&a));
        assert_eq!(rank(&a), 2);
        assert!(inverse(&a).is_none());
    }

    #[test]
    fn inverse_round_trip() {
        let a = Matrix::from_rows(vec![
            vec![Scalar::gaussian(1, 1, 1, 1), Scalar::from_int(2)],
            vec![Scalar::from_ratio(1, 2), Scalar::i()],
        ])
        .unwrap();
        let inv = inverse(&a).unwrap();
        assert_eq!(&a * &inv, Matrix::identity(2));
        assert_eq!(&inv * &a, Matrix::identity(2));
    }
}
