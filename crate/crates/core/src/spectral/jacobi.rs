//! Cyclic Jacobi eigensolver for dense real symmetric matrices.
//!
//! Graphs here stay small (a few hundred vertices at most), where plane
//! rotations are robust and accurate to near machine precision.

use ndarray::Array2;

use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 64;

/// Sum of squares of the off-diagonal entries.
fn off_diagonal_mass(a: &Array2<f64>) -> f64 {
    let n = a.nrows();
    let mut s = 0.0;
    for p in 0..n {
        for q in (p + 1)..n {
            s += 2.0 * a[(p, q)] * a[(p, q)];
        }
    }
    s
}

/// Full eigendecomposition of a symmetric matrix by cyclic Jacobi sweeps.
///
/// Returns eigenvalues in ascending order with matching eigenvector columns
/// (orthonormal). Convergence: off-diagonal Frobenius mass below
/// `1e-14 * ||A||_F`.
pub fn jacobi_eigh(a: &Array2<f64>) -> Result<(Vec<f64>, Array2<f64>)> {
    let n = a.nrows();
    if n != a.ncols() {
        return Err(Error::InvalidParameter("matrix must be square".into()));
    }
    let mut m = a.clone();
    let mut v = Array2::<f64>::eye(n);
    let norm = m.iter().map(|x| x * x).sum::<f64>().sqrt();
    let tol = 1e-14 * norm.max(f64::MIN_POSITIVE);

    let mut sweeps = 0;
    while off_diagonal_mass(&m).sqrt() > tol {
        if sweeps >= MAX_SWEEPS {
            return Err(Error::NumericFailure {
                reason: "Jacobi iteration did not converge".into(),
                iterations: sweeps,
                off_mass: off_diagonal_mass(&m).sqrt(),
            });
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                // rotation annihilating (p, q)
                let tau = (m[(q, q)] - m[(p, p)]) / (2.0 * apq);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for k in 0..n {
                    let mkp = m[(k, p)];
                    let mkq = m[(k, q)];
                    m[(k, p)] = c * mkp - s * mkq;
                    m[(k, q)] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let mpk = m[(p, k)];
                    let mqk = m[(q, k)];
                    m[(p, k)] = c * mpk - s * mqk;
                    m[(q, k)] = s * mpk + c * mqk;
                }
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = c * vkp - s * vkq;
                    v[(k, q)] = s * vkp + c * vkq;
                }
            }
        }
        sweeps += 1;
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[(i, i)].partial_cmp(&m[(j, j)]).unwrap());
    let eigenvalues: Vec<f64> = order.iter().map(|&i| m[(i, i)]).collect();
    let mut vectors = Array2::<f64>::zeros((n, n));
    for (new, &old) in order.iter().enumerate() {
        for k in 0..n {
            vectors[(k, new)] = v[(k, old)];
        }
    }
    Ok((eigenvalues, vectors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;

    #[test]
    fn two_by_two_path_laplacian() {
        let a = array![[1.0, -1.0], [-1.0, 1.0]];
        let (vals, vecs) = jacobi_eigh(&a).unwrap();
        assert!((vals[0] - 0.0).abs() < 1e-12);
        assert!((vals[1] - 2.0).abs() < 1e-12);
        // reconstruct
        for i in 0..2 {
            for j in 0..2 {
                let mut s = 0.0;
                for k in 0..2 {
                    s += vals[k] * vecs[(i, k)] * vecs[(j, k)];
                }
                assert!((s - a[(i, j)]).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn rejects_non_square() {
        let a = Array2::<f64>::zeros((2, 3));
        assert!(jacobi_eigh(&a).is_err());
    }

    #[test]
    fn zero_matrix_is_instant() {
        let a = Array2::<f64>::zeros((3, 3));
        let (vals, _) = jacobi_eigh(&a).unwrap();
        assert_eq!(vals, vec![0.0; 3]);
    }
}
