//! Closed-form spectra for the two supported families.
//!
//! Path eigenvalues follow the classical indexing `mu_0 = 0`,
//! `mu_r = 2 + 2cos(r*pi/n)` for `r = 1..n-1`, which is *decreasing* in
//! `r`; decompositions store them sorted ascending, so the sorted position
//! `k >= 1` holds `mu_{n-k}`. Support partitions and relation lattices for
//! paths use the classical index throughout.

use ndarray::Array2;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::SpectralDecomposition;
use crate::error::{Error, Result};
use crate::exact::poly::CubicFactorization;
use crate::exact::{
    cubic_reducibility, double_star_cubic, isolate_cubic_roots, refine_root_interval,
    AlgebraicNumber,
};

/// Path eigenvalue in the classical indexing: `r = 0` gives 0, otherwise
/// `2 + 2cos(r*pi/n)`.
pub fn path_eigenvalue_f64(n: usize, r: usize) -> f64 {
    assert!(r < n, "eigenvalue index out of range");
    if r == 0 {
        0.0
    } else {
        2.0 + 2.0 * (r as f64 * std::f64::consts::PI / n as f64).cos()
    }
}

/// Eigenvector entry `phi_r(j)` of the path Laplacian, classical index `r`,
/// vertex `j` (1-based).
fn path_eigenvector_entry(n: usize, r: usize, j: usize) -> f64 {
    if r == 0 {
        return 1.0;
    }
    let pi = std::f64::consts::PI;
    let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
    sign * (((2 * j - 1) * r) as f64 * pi / (2 * n) as f64).sin()
        * (r as f64 * pi / (2 * n) as f64).cos()
}

/// Exact spectral decomposition of the path on `n` vertices. All
/// eigenvalues are simple; sorted position `k >= 1` carries the classical
/// eigenvalue `mu_{n-k}`, stored exactly as the cyclotomic element
/// `2 + w^{n-k} + w^{n+k}` of order `2n`.
pub fn path_spectrum(n: usize) -> Result<SpectralDecomposition> {
    if n == 0 {
        return Err(Error::InvalidParameter("path needs at least one vertex".into()));
    }
    let mut eigenvalues = Vec::with_capacity(n);
    let mut projectors = Vec::with_capacity(n);
    let mut exact = Vec::with_capacity(n);
    for k in 0..n {
        let r = if k == 0 { 0 } else { n - k };
        eigenvalues.push(path_eigenvalue_f64(n, r));
        let phi: Vec<f64> = (1..=n).map(|j| path_eigenvector_entry(n, r, j)).collect();
        let norm2: f64 = phi.iter().map(|x| x * x).sum();
        let e = Array2::from_shape_fn((n, n), |(i, j)| phi[i] * phi[j] / norm2);
        projectors.push(e);
        exact.push(if r == 0 {
            AlgebraicNumber::from_integer(0)
        } else {
            AlgebraicNumber::path_eigenvalue(n, r)
        });
    }
    Ok(SpectralDecomposition::new(eigenvalues, projectors, Some(exact)))
}

/// Which double-star spectrum to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DoubleStarShape {
    /// `S(m, m)`, spectrum around the two centers.
    Balanced,
    /// `S(m, 2)`, spectrum around the pendant pair on the degree-3 center.
    PendantPair,
}

/// Exact spectral decomposition of a double star.
///
/// Balanced `S(m,m)`: eigenvalues `0`, `1` (absent for `m = 1`), `m + 1`
/// and the conjugate surds `(m + 3 +- sqrt(m^2 + 6m + 1)) / 2`.
/// Pendant-pair `S(m,2)`: eigenvalues `0`, `1` and the three roots of the
/// cubic `x^3 - (m+6)x^2 + (4m+9)x - (m+4)`; irrational roots are stored
/// via their minimal polynomial plus isolating rational intervals.
///
/// Vertex order matches [`crate::graph::Graph::double_star`].
pub fn double_star_spectrum(m: usize, shape: DoubleStarShape) -> Result<SpectralDecomposition> {
    if m == 0 {
        return Err(Error::InvalidParameter(
            "double star needs at least one pendant on each center".into(),
        ));
    }
    match shape {
        DoubleStarShape::Balanced => balanced_spectrum(m),
        DoubleStarShape::PendantPair => pendant_pair_spectrum(m),
    }
}

fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn balanced_spectrum(m: usize) -> Result<SpectralDecomposition> {
    let n = 2 * m + 2;
    let mi = m as i64;
    let disc = (mi * mi + 6 * mi + 1) as u64;
    let sqrt_disc = (disc as f64).sqrt();
    let mu_minus = ((m as f64) + 3.0 - sqrt_disc) / 2.0;
    let mu_plus = ((m as f64) + 3.0 + sqrt_disc) / 2.0;

    // vertices: pendants of u = 0..m-1, u = m, v = m+1, pendants of v = m+2..
    let antisym_vector = |mu: f64| -> Vec<f64> {
        let beta = 1.0 - mu;
        let mut w = vec![0.0; n];
        for p in 0..m {
            w[p] = 1.0;
            w[m + 2 + p] = -1.0;
        }
        w[m] = beta;
        w[m + 1] = -beta;
        w
    };
    let rank_one = |w: &[f64]| -> Array2<f64> {
        let norm2: f64 = w.iter().map(|x| x * x).sum();
        Array2::from_shape_fn((n, n), |(i, j)| w[i] * w[j] / norm2)
    };

    let e0 = Array2::from_elem((n, n), 1.0 / n as f64);
    let e_minus = rank_one(&antisym_vector(mu_minus));
    let e_plus = rank_one(&antisym_vector(mu_plus));
    let center_vec: Vec<f64> = (0..n)
        .map(|i| {
            if i == m || i == m + 1 {
                -(m as f64)
            } else {
                1.0
            }
        })
        .collect();
    let e_center = rank_one(&center_vec);

    let surd = |sign: i64| {
        AlgebraicNumber::surd(rational(mi + 3, 2), rational(sign, 2), disc)
    };

    let mut eigenvalues = vec![0.0, mu_minus];
    let mut projectors = vec![e0, e_minus];
    let mut exact = vec![AlgebraicNumber::from_integer(0), surd(-1)];
    if m >= 2 {
        // pendant differences on both sides
        let mut e1 = Array2::<f64>::zeros((n, n));
        for (base, _) in [(0usize, ()), (m + 2, ())] {
            for i in 0..m {
                for j in 0..m {
                    let delta = if i == j { 1.0 } else { 0.0 };
                    e1[(base + i, base + j)] = delta - 1.0 / m as f64;
                }
            }
        }
        eigenvalues.push(1.0);
        projectors.push(e1);
        exact.push(AlgebraicNumber::from_integer(1));
    }
    eigenvalues.push((m + 1) as f64);
    projectors.push(e_center);
    exact.push(AlgebraicNumber::from_integer(mi + 1));
    eigenvalues.push(mu_plus);
    projectors.push(e_plus);
    exact.push(surd(1));

    Ok(SpectralDecomposition::new(eigenvalues, projectors, Some(exact)))
}

fn pendant_pair_spectrum(m: usize) -> Result<SpectralDecomposition> {
    let n = m + 4;
    let mi = m as i64;
    let cubic = double_star_cubic(m as u64);

    // exact roots in increasing order
    let roots: Vec<AlgebraicNumber> = match cubic_reducibility(m as u64) {
        CubicFactorization::Factor { root, quadratic } => {
            // only m = 2: quadratic x^2 - 5x + 2 with roots (5 +- sqrt(17))/2
            debug_assert_eq!(quadratic.coeff(1), BigInt::from(-5));
            let root_val = root.to_i64().expect("small integer root");
            let mut rs = vec![
                AlgebraicNumber::from_integer(root_val),
                AlgebraicNumber::surd(rational(5, 2), rational(-1, 2), 17),
                AlgebraicNumber::surd(rational(5, 2), rational(1, 2), 17),
            ];
            rs.sort_by(|x, y| x.approx_f64().partial_cmp(&y.approx_f64()).unwrap());
            rs
        }
        CubicFactorization::Irreducible => isolate_cubic_roots(&cubic)
            .into_iter()
            .map(|(lo, hi)| AlgebraicNumber::cubic_root(cubic.clone(), lo, hi))
            .collect(),
    };
    let theta: Vec<f64> = roots
        .iter()
        .map(|r| match r {
            AlgebraicNumber::CubicRoot { poly, lo, hi } => {
                let eps = rational(1, 1_000_000_000_000_000);
                let (lo, hi) = refine_root_interval(poly, lo.clone(), hi.clone(), &eps);
                ((lo + hi) / rational(2, 1)).to_f64().unwrap()
            }
            other => other.approx_f64(),
        })
        .collect();

    // vertices: a = 0, b = 1, u = 2 (degree 3), v = 3, pendants of v = 4..
    let rank_one = |w: &[f64]| -> Array2<f64> {
        let norm2: f64 = w.iter().map(|x| x * x).sum();
        Array2::from_shape_fn((n, n), |(i, j)| w[i] * w[j] / norm2)
    };
    let cubic_vector = |t: f64| -> Vec<f64> {
        let quad = t * t - 4.0 * t + 1.0;
        let mut w = vec![0.0; n];
        w[0] = 1.0;
        w[1] = 1.0;
        w[2] = 1.0 - t;
        w[3] = quad;
        for p in 4..n {
            w[p] = quad / (1.0 - t);
        }
        w
    };

    let e0 = Array2::from_elem((n, n), 1.0 / n as f64);
    // eigenvalue 1: the pendant-pair difference plus differences among the
    // m pendants of v
    let mut e1 = Array2::<f64>::zeros((n, n));
    e1[(0, 0)] = 0.5;
    e1[(1, 1)] = 0.5;
    e1[(0, 1)] = -0.5;
    e1[(1, 0)] = -0.5;
    for i in 0..m {
        for j in 0..m {
            let delta = if i == j { 1.0 } else { 0.0 };
            e1[(4 + i, 4 + j)] = delta - 1.0 / m as f64;
        }
    }

    // theta_1 < 1 < theta_2 < theta_3 always, so this order is sorted
    debug_assert!(theta[0] > 0.0 && theta[0] < 1.0 && theta[1] > 1.0, "m = {mi}");
    let eigenvalues = vec![0.0, theta[0], 1.0, theta[1], theta[2]];
    let projectors = vec![
        e0,
        rank_one(&cubic_vector(theta[0])),
        e1,
        rank_one(&cubic_vector(theta[1])),
        rank_one(&cubic_vector(theta[2])),
    ];
    let exact = vec![
        AlgebraicNumber::from_integer(0),
        roots[0].clone(),
        AlgebraicNumber::from_integer(1),
        roots[1].clone(),
        roots[2].clone(),
    ];

    Ok(SpectralDecomposition::new(eigenvalues, projectors, Some(exact)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::spectral::{eigendecompose, DEFAULT_DEDUP_TOL};

    fn assert_spectra_agree(a: &SpectralDecomposition, b: &SpectralDecomposition, tol: f64) {
        assert_eq!(a.num_distinct(), b.num_distinct());
        for (x, y) in a.eigenvalues().iter().zip(b.eigenvalues()) {
            assert!((x - y).abs() < tol, "{x} vs {y}");
        }
        for (p, q) in a.projectors().iter().zip(b.projectors()) {
            let diff = p - q;
            let worst = diff.iter().fold(0.0f64, |m, x| m.max(x.abs()));
            assert!(worst < tol, "projector mismatch {worst}");
        }
    }

    #[test]
    fn path_spectrum_small_closed_forms() {
        // n = 3: classical mu_1 = 3, mu_2 = 1
        assert!((path_eigenvalue_f64(3, 1) - 3.0).abs() < 1e-12);
        assert!((path_eigenvalue_f64(3, 2) - 1.0).abs() < 1e-12);
        // n = 6 sorted spectrum
        let sd = path_spectrum(6).unwrap();
        let s3 = 3f64.sqrt();
        let expected = [0.0, 2.0 - s3, 1.0, 2.0, 3.0, 2.0 + s3];
        for (got, want) in sd.eigenvalues().iter().zip(expected) {
            assert!((got - want).abs() < 1e-12);
        }
    }

    #[test]
    fn path_spectrum_matches_numeric_oracle() {
        for n in [1usize, 2, 3, 5, 8, 13, 24] {
            let exact = path_spectrum(n).unwrap();
            let numeric =
                eigendecompose(&Graph::path(n).unwrap().laplacian(), DEFAULT_DEDUP_TOL).unwrap();
            assert_spectra_agree(&exact, &numeric, 1e-9);
        }
    }

    #[test]
    fn balanced_star_matches_numeric_oracle() {
        for m in 1..=8 {
            let exact = double_star_spectrum(m, DoubleStarShape::Balanced).unwrap();
            let numeric = eigendecompose(
                &Graph::double_star(m, m).unwrap().laplacian(),
                DEFAULT_DEDUP_TOL,
            )
            .unwrap();
            assert_spectra_agree(&exact, &numeric, 1e-9);
        }
    }

    #[test]
    fn pendant_pair_matches_numeric_oracle() {
        for m in 1..=8 {
            let exact = double_star_spectrum(m, DoubleStarShape::PendantPair).unwrap();
            let numeric = eigendecompose(
                &Graph::double_star(m, 2).unwrap().laplacian(),
                DEFAULT_DEDUP_TOL,
            )
            .unwrap();
            assert_spectra_agree(&exact, &numeric, 1e-9);
        }
    }

    #[test]
    fn balanced_m2_surd_pair() {
        let sd = double_star_spectrum(2, DoubleStarShape::Balanced).unwrap();
        let s17 = 17f64.sqrt();
        let expected = [0.0, (5.0 - s17) / 2.0, 1.0, 3.0, (5.0 + s17) / 2.0];
        for (got, want) in sd.eigenvalues().iter().zip(expected) {
            assert!((got - want).abs() < 1e-12);
        }
    }

    #[test]
    fn pendant_pair_m2_includes_three() {
        let sd = double_star_spectrum(2, DoubleStarShape::PendantPair).unwrap();
        let s17 = 17f64.sqrt();
        let expected = [0.0, (5.0 - s17) / 2.0, 1.0, 3.0, (5.0 + s17) / 2.0];
        for (got, want) in sd.eigenvalues().iter().zip(expected) {
            assert!((got - want).abs() < 1e-12);
        }
    }
}
