//! Spectral decompositions of Laplacians and the walk matrix `U(t)`.
//!
//! Distinct eigenvalues are kept strictly increasing, each with its
//! orthogonal eigenprojector; closed-form spectra for the supported
//! families additionally carry exact algebraic eigenvalues.

pub mod families;
pub mod jacobi;

use ndarray::Array2;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::exact::AlgebraicNumber;
use crate::graph::Laplacian;

pub use families::{double_star_spectrum, path_eigenvalue_f64, path_spectrum, DoubleStarShape};
pub use jacobi::jacobi_eigh;

/// Default tolerance for merging nearly equal numeric eigenvalues into one
/// projector. Exposed because double stars carry a genuinely repeated
/// eigenvalue 1.
pub const DEFAULT_DEDUP_TOL: f64 = 1e-8;

/// Spectral decomposition `L = sum_r mu_r E_r` over distinct eigenvalues
/// `mu_0 < mu_1 < ... < mu_d`.
#[derive(Debug, Clone)]
pub struct SpectralDecomposition {
    eigenvalues: Vec<f64>,
    projectors: Vec<Array2<f64>>,
    exact: Option<Vec<AlgebraicNumber>>,
}

impl SpectralDecomposition {
    pub(crate) fn new(
        eigenvalues: Vec<f64>,
        projectors: Vec<Array2<f64>>,
        exact: Option<Vec<AlgebraicNumber>>,
    ) -> Self {
        debug_assert_eq!(eigenvalues.len(), projectors.len());
        debug_assert!(eigenvalues.windows(2).all(|w| w[0] < w[1]));
        SpectralDecomposition {
            eigenvalues,
            projectors,
            exact,
        }
    }

    /// Matrix order (number of vertices).
    pub fn order(&self) -> usize {
        self.projectors.first().map_or(0, Array2::nrows)
    }

    /// Number of distinct eigenvalues.
    pub fn num_distinct(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn projectors(&self) -> &[Array2<f64>] {
        &self.projectors
    }

    pub fn exact_values(&self) -> Option<&[AlgebraicNumber]> {
        self.exact.as_deref()
    }

    /// Smallest gap between consecutive distinct eigenvalues, if any.
    pub fn min_gap(&self) -> Option<f64> {
        self.eigenvalues
            .windows(2)
            .map(|w| w[1] - w[0])
            .fold(None, |acc, g| Some(acc.map_or(g, |a: f64| a.min(g))))
    }

    /// `sum_r mu_r E_r`, for reconstruction checks.
    pub fn reconstruct(&self) -> Array2<f64> {
        let n = self.order();
        let mut out = Array2::<f64>::zeros((n, n));
        for (mu, e) in self.eigenvalues.iter().zip(&self.projectors) {
            out += &(e * *mu);
        }
        out
    }
}

/// Numeric spectral decomposition of a Laplacian.
///
/// Eigenvalues closer than `dedup_tol` are clustered into a single
/// projector, built by summing outer products of the orthonormal
/// eigenbasis of the cluster.
pub fn eigendecompose(lap: &Laplacian, dedup_tol: f64) -> Result<SpectralDecomposition> {
    if dedup_tol <= 0.0 {
        return Err(Error::InvalidParameter("dedup_tol must be positive".into()));
    }
    if !lap.is_symmetric() {
        return Err(Error::InvalidParameter("Laplacian must be symmetric".into()));
    }
    let a = lap.to_f64();
    let (vals, vecs) = jacobi_eigh(&a)?;
    let n = vals.len();
    let mut eigenvalues = Vec::new();
    let mut projectors = Vec::new();
    let mut start = 0usize;
    while start < n {
        let mut end = start + 1;
        while end < n && vals[end] - vals[end - 1] <= dedup_tol {
            end += 1;
        }
        let cluster = &vals[start..end];
        let mu = cluster.iter().sum::<f64>() / cluster.len() as f64;
        let mut e = Array2::<f64>::zeros((n, n));
        for k in start..end {
            for i in 0..n {
                for j in 0..n {
                    e[(i, j)] += vecs[(i, k)] * vecs[(j, k)];
                }
            }
        }
        eigenvalues.push(mu);
        projectors.push(e);
        start = end;
    }
    Ok(SpectralDecomposition::new(eigenvalues, projectors, None))
}

/// The walk matrix at one time.
#[derive(Debug, Clone)]
pub struct WalkSnapshot {
    time: f64,
    matrix: Array2<Complex64>,
}

impl WalkSnapshot {
    pub fn time(&self) -> f64 {
        self.time
    }

    pub fn matrix(&self) -> &Array2<Complex64> {
        &self.matrix
    }

    /// `max |(U U* - I)_{ij}|`.
    pub fn unitarity_defect(&self) -> f64 {
        let n = self.matrix.nrows();
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                let mut s = Complex64::new(0.0, 0.0);
                for k in 0..n {
                    s += self.matrix[(i, k)] * self.matrix[(j, k)].conj();
                }
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((s - target).norm());
            }
        }
        worst
    }
}

/// `U(t) = exp(-itL) = sum_r exp(-it mu_r) E_r` (forward phase `e^{-it mu}`).
pub fn transition_matrix(sd: &SpectralDecomposition, t: f64) -> WalkSnapshot {
    let n = sd.order();
    let mut m = Array2::<Complex64>::zeros((n, n));
    for (mu, e) in sd.eigenvalues.iter().zip(&sd.projectors) {
        let phase = Complex64::from_polar(1.0, -t * mu);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] += phase * e[(i, j)];
            }
        }
    }
    WalkSnapshot { time: t, matrix: m }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn max_abs(a: &Array2<f64>) -> f64 {
        a.iter().fold(0.0f64, |m, x| m.max(x.abs()))
    }

    #[test]
    fn p2_projectors() {
        let sd = eigendecompose(&Graph::path(2).unwrap().laplacian(), DEFAULT_DEDUP_TOL).unwrap();
        assert_eq!(sd.num_distinct(), 2);
        assert!((sd.eigenvalues()[0] - 0.0).abs() < 1e-12);
        assert!((sd.eigenvalues()[1] - 2.0).abs() < 1e-12);
        // E_0 = J/2
        for i in 0..2 {
            for j in 0..2 {
                assert!((sd.projectors()[0][(i, j)] - 0.5).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn p3_eigenvalues() {
        let sd = eigendecompose(&Graph::path(3).unwrap().laplacian(), DEFAULT_DEDUP_TOL).unwrap();
        let expected = [0.0, 1.0, 3.0];
        for (got, want) in sd.eigenvalues().iter().zip(expected) {
            assert!((got - want).abs() < 1e-10);
        }
    }

    #[test]
    fn s22_eigenvalues_and_multiplicity() {
        let sd =
            eigendecompose(&Graph::double_star(2, 2).unwrap().laplacian(), DEFAULT_DEDUP_TOL)
                .unwrap();
        let s17 = 17f64.sqrt();
        let expected = [0.0, (5.0 - s17) / 2.0, 1.0, 3.0, (5.0 + s17) / 2.0];
        assert_eq!(sd.num_distinct(), 5);
        for (got, want) in sd.eigenvalues().iter().zip(expected) {
            assert!((got - want).abs() < 1e-9, "{got} vs {want}");
        }
        // eigenvalue 1 has multiplicity 2: trace of its projector
        let tr: f64 = (0..6).map(|i| sd.projectors()[2][(i, i)]).sum();
        assert!((tr - 2.0).abs() < 1e-9);
    }

    #[test]
    fn projector_algebra_on_a_path() {
        let sd = eigendecompose(&Graph::path(9).unwrap().laplacian(), DEFAULT_DEDUP_TOL).unwrap();
        let n = sd.order();
        let mut sum = Array2::<f64>::zeros((n, n));
        for e in sd.projectors() {
            sum += e;
            let diff = e.dot(e) - e;
            assert!(max_abs(&diff) < 1e-10);
        }
        let eye = Array2::<f64>::eye(n);
        assert!(max_abs(&(&sum - &eye)) < 1e-10);
        let rec = sd.reconstruct() - Graph::path(9).unwrap().laplacian().to_f64();
        assert!(max_abs(&rec) < 1e-9);
    }

    #[test]
    fn transition_matrix_basics() {
        let sd = eigendecompose(&Graph::path(2).unwrap().laplacian(), DEFAULT_DEDUP_TOL).unwrap();
        let u0 = transition_matrix(&sd, 0.0);
        for i in 0..2 {
            for j in 0..2 {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((u0.matrix()[(i, j)] - want).norm() < 1e-12);
            }
        }
        // perfect state transfer on the edge at t = pi/2
        let u = transition_matrix(&sd, std::f64::consts::FRAC_PI_2);
        assert!((u.matrix()[(0, 1)].norm() - 1.0).abs() < 1e-12);
        assert!(u.unitarity_defect() < 1e-9);
    }

    #[test]
    fn rejects_bad_tolerance() {
        let lap = Graph::path(2).unwrap().laplacian();
        assert!(eigendecompose(&lap, 0.0).is_err());
    }
}
