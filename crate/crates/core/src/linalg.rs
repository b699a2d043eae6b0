//! Exact Gaussian elimination over any [`Field`].
//!
//! Matrices are row-major `Vec<Vec<Scalar>>`. Pivots are chosen as the first
//! nonzero entry in a column, so results are deterministic.

use crate::scalars::{Field, Scalar};

pub type Matrix = Vec<Vec<Scalar>>;

/// Reduced row echelon form. Returns the nonzero rows and their pivot columns.
pub fn rref(mut rows: Matrix, ncols: usize) -> (Matrix, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].inv().expect("pivot is nonzero");
        if !inv.is_one() {
            for x in rows[r].iter_mut() {
                *x = &*x * &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x = &*x - &(&f * p);
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

pub fn rank(rows: &[Vec<Scalar>], ncols: usize) -> usize {
    rref(rows.to_vec(), ncols).1.len()
}

/// Basis of `{x : M x = 0}` for `M` with `ncols` columns. Each basis vector
/// sets one free variable to 1 and the others to 0.
pub fn kernel(field: &Field, rows: &[Vec<Scalar>], ncols: usize) -> Matrix {
    let (r, pivots) = rref(rows.to_vec(), ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![field.zero(); ncols];
            v[f] = field.one();
            for (row, &pc) in r.iter().zip(&pivots) {
                v[pc] = -&row[f];
            }
            v
        })
        .collect()
}

/// One solution of `M x = b`, or `None` when the system is inconsistent.
pub fn solve(field: &Field, rows: &[Vec<Scalar>], rhs: &[Scalar], ncols: usize) -> Option<Vec<Scalar>> {
    assert_eq!(rows.len(), rhs.len());
    let aug: Matrix = rows
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let (r, pivots) = rref(aug, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![field.zero(); ncols];
    for (row, &pc) in r.iter().zip(&pivots) {
        x[pc] = row[ncols].clone();
    }
    Some(x)
}

pub fn transpose(m: &[Vec<Scalar>], nrows: usize, ncols: usize) -> Matrix {
    (0..ncols)
        .map(|j| (0..nrows).map(|i| m[i][j].clone()).collect())
        .collect()
}

/// Coordinates of `v` with respect to the vectors `span` (which are taken
/// as columns). `None` when `v` is outside their span.
pub fn coordinates(field: &Field, span: &[Vec<Scalar>], v: &[Scalar]) -> Option<Vec<Scalar>> {
    let n = v.len();
    if span.is_empty() {
        return v.iter().all(Scalar::is_zero).then(Vec::new);
    }
    let cols = transpose(span, span.len(), n);
    solve(field, &cols, v, span.len())
}

pub fn in_span(field: &Field, span: &[Vec<Scalar>], v: &[Scalar]) -> bool {
    coordinates(field, span, v).is_some()
}

/// Echelon basis of the row space spanned by `vectors`.
pub fn row_basis(vectors: &[Vec<Scalar>], ncols: usize) -> Matrix {
    rref(vectors.to_vec(), ncols).0
}

pub fn identity(field: &Field, n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { field.one() } else { field.zero() }).collect())
        .collect()
}

pub fn mat_mul(field: &Field, a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> Matrix {
    let inner = b.len();
    let ncols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..ncols)
                .map(|j| {
                    let mut acc = field.zero();
                    for k in 0..inner {
                        if !row[k].is_zero() && !b[k][j].is_zero() {
                            acc = &acc + &(&row[k] * &b[k][j]);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

pub fn mat_vec(field: &Field, a: &[Vec<Scalar>], v: &[Scalar]) -> Vec<Scalar> {
    a.iter()
        .map(|row| {
            let mut acc = field.zero();
            for (x, y) in row.iter().zip(v) {
                if !x.is_zero() && !y.is_zero() {
                    acc = &acc + &(x * y);
                }
            }
            acc
        })
        .collect()
}

/// Inverse of a square matrix, `None` when singular.
pub fn inverse(field: &Field, m: &[Vec<Scalar>]) -> Option<Matrix> {
    let n = m.len();
    let aug: Matrix = m
        .iter()
        .zip(identity(field, n))
        .map(|(row, id)| row.iter().cloned().chain(id).collect())
        .collect();
    let (r, pivots) = rref(aug, 2 * n);
    if pivots.len() < n || (n > 0 && pivots[n - 1] != n - 1) {
        return None;
    }
    Some(r.into_iter().map(|row| row[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[i64]]) -> Matrix {
        rows.iter()
            .map(|r| r.iter().map(|&x| Scalar::rational(x, 1)).collect())
            .collect()
    }

    #[test]
    fn kernel_of_rank_one() {
        let f = Field::Rational;
        let k = kernel(&f, &q(&[&[1, 2, 3], &[2, 4, 6]]), 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(mat_vec(&f, &q(&[&[1, 2, 3]]), v)[0].is_zero());
        }
    }

    #[test]
    fn inverse_round_trip() {
        let f = Field::Rational;
        let m = q(&[&[2, 1], &[7, 4]]);
        let inv = inverse(&f, &m).unwrap();
        assert_eq!(mat_mul(&f, &m, &inv), identity(&f, 2));
        assert!(inverse(&f, &q(&[&[1, 2], &[2, 4]])).is_none());
    }

    #[test]
    fn solve_over_f5() {
        let f = Field::prime(5).unwrap();
        let m = vec![vec![f.from_integer(3)]];
        let x = solve(&f, &m, &[f.from_integer(1)], 1).unwrap();
        assert_eq!(x[0], f.from_integer(2));
    }

    #[test]
    fn inconsistent_system() {
        let f = Field::Rational;
        let m = q(&[&[1, 1], &[1, 1]]);
        let b = vec![Scalar::rational(1, 1), Scalar::rational(2, 1)];
        assert!(solve(&f, &m, &b, 2).is_none());
    }

    #[test]
    fn coordinates_in_span() {
        let f = Field::Rational;
        let span = q(&[&[1, 0, 1], &[0, 1, 1]]);
        let c = coordinates(&f, &span, &q(&[&[2, 3, 5]])[0]).unwrap();
        assert_eq!(c, q(&[&[2, 3]])[0]);
        assert!(!in_span(&f, &span, &q(&[&[0, 0, 1]])[0]));
    }
}
