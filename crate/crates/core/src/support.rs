//! Strong cospectrality detection, eigenvalue support partitions and exact
//! relation lattices over the supported eigenvalues.
//!
//! A partition assigns each distinct eigenvalue index a sign: `0` when both
//! projector columns vanish at the pair, `+1` when `E_r e_a = E_r e_b != 0`,
//! `-1` when `E_r e_a = -E_r e_b != 0`. For paths the indices are the
//! classical ones (`mu_r = 2 + 2cos(r*pi/n)`); for double stars and numeric
//! decompositions they are positions in the ascending eigenvalue list.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{
    divides, exact_linear_combination, integer_kernel, relation_poly, AlgebraicNumber, IntMatrix,
    IntPolynomial,
};
use crate::spectral::{double_star_spectrum, DoubleStarShape, SpectralDecomposition};

/// Default tolerance for the numeric strong-cospectrality classifier.
pub const DEFAULT_SC_TOL: f64 = 1e-8;

/// Signs of the projector action at a vertex pair, one entry per distinct
/// eigenvalue index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportPartition {
    pair: (usize, usize),
    signs: Vec<i8>,
}

impl SupportPartition {
    pub fn new(pair: (usize, usize), signs: Vec<i8>) -> Self {
        debug_assert!(signs.iter().all(|s| (-1..=1).contains(s)));
        SupportPartition { pair, signs }
    }

    /// The vertex pair (1-based labels).
    pub fn pair(&self) -> (usize, usize) {
        self.pair
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn sign(&self, r: usize) -> i8 {
        self.signs[r]
    }

    pub fn num_eigenvalues(&self) -> usize {
        self.signs.len()
    }

    fn indices_with(&self, s: i8) -> Vec<usize> {
        (0..self.signs.len()).filter(|&r| self.signs[r] == s).collect()
    }

    pub fn phi_zero(&self) -> Vec<usize> {
        self.indices_with(0)
    }

    pub fn phi_plus(&self) -> Vec<usize> {
        self.indices_with(1)
    }

    pub fn phi_minus(&self) -> Vec<usize> {
        self.indices_with(-1)
    }

    /// Indices entering the relation lattice: sign nonzero, eigenvalue
    /// nonzero (index 0 always carries the eigenvalue 0 here).
    pub fn support_indices(&self) -> Vec<usize> {
        (1..self.signs.len()).filter(|&r| self.signs[r] != 0).collect()
    }
}

/// Numeric strong-cospectrality test on a spectral decomposition.
///
/// Classifies every projector by comparing `E_r e_a` against `+-E_r e_b`
/// (inf-norms, tolerance scaled by `max(1, ||E_r||_inf)`); returns `None`
/// as soon as one projector fits no class. Vertices are 1-based.
pub fn strong_cospectral(
    sd: &SpectralDecomposition,
    a: usize,
    b: usize,
    tol: f64,
) -> Result<Option<SupportPartition>> {
    let n = sd.order();
    if a == b {
        return Err(Error::InvalidParameter("vertices must differ".into()));
    }
    if a < 1 || a > n || b < 1 || b > n {
        return Err(Error::InvalidParameter(format!(
            "vertex pair ({a},{b}) out of range 1..={n}"
        )));
    }
    let (ai, bi) = (a - 1, b - 1);
    let mut signs = Vec::with_capacity(sd.num_distinct());
    for e in sd.projectors() {
        let col = |v: usize, i: usize| e[(i, v)];
        let norm_a = (0..n).map(|i| col(ai, i).abs()).fold(0.0, f64::max);
        let norm_b = (0..n).map(|i| col(bi, i).abs()).fold(0.0, f64::max);
        let scale = e.iter().fold(1.0f64, |m, x| m.max(x.abs()));
        if norm_a < tol && norm_b < tol {
            signs.push(0);
            continue;
        }
        let diff = (0..n)
            .map(|i| (col(ai, i) - col(bi, i)).abs())
            .fold(0.0, f64::max);
        let sum = (0..n)
            .map(|i| (col(ai, i) + col(bi, i)).abs())
            .fold(0.0, f64::max);
        if diff < tol * scale {
            signs.push(1);
        } else if sum < tol * scale {
            signs.push(-1);
        } else {
            return Ok(None);
        }
    }
    Ok(Some(SupportPartition::new((a, b), signs)))
}

/// Exact support partition for the mirror pair `(a, n+1-a)` of the path on
/// `n` vertices, in the classical eigenvalue indexing.
///
/// Even `n`: odd indices fall in the minus class; even indices fall in the
/// plus class unless `2n | (2a-1)r`, which silences them. Odd `n` swaps the
/// parity roles. Index 0 (eigenvalue 0) is always plus.
pub fn path_support_partition(n: usize, a: usize) -> Result<SupportPartition> {
    if a < 1 || a > n {
        return Err(Error::InvalidParameter(format!(
            "vertex {a} out of range 1..={n}"
        )));
    }
    let b = n + 1 - a;
    if a == b {
        return Err(Error::InvalidParameter(
            "centre vertex of an odd path has no mirror partner".into(),
        ));
    }
    let mut signs = vec![0i8; n];
    signs[0] = 1;
    for r in 1..n {
        let odd = r % 2 == 1;
        let silenced = ((2 * a - 1) * r) % (2 * n) == 0;
        let sign = if n % 2 == 0 {
            if odd {
                -1
            } else if silenced {
                0
            } else {
                1
            }
        } else if odd {
            1
        } else if silenced {
            0
        } else {
            -1
        };
        signs[r] = sign;
    }
    Ok(SupportPartition::new((a, b), signs))
}

/// Exact support partition of the designated strongly cospectral pair of a
/// double star, in the sorted index space of [`double_star_spectrum`].
pub fn double_star_support_partition(m: usize, shape: DoubleStarShape) -> SupportPartition {
    match shape {
        DoubleStarShape::Balanced => {
            let pair = (m + 1, m + 2);
            if m == 1 {
                // eigenvalues [0, mu-, 2, mu+]
                SupportPartition::new(pair, vec![1, -1, 1, -1])
            } else {
                // eigenvalues [0, mu-, 1, m+1, mu+]
                SupportPartition::new(pair, vec![1, -1, 0, 1, -1])
            }
        }
        // eigenvalues [0, theta1, 1, theta2, theta3]
        DoubleStarShape::PendantPair => SupportPartition::new((1, 2), vec![1, 1, -1, 1, 1]),
    }
}

/// Which exact machinery verifies a relation lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeFamily {
    /// Path on `n` vertices; relations are divisibility by the `2n`-th
    /// cyclotomic polynomial.
    PathCyclotomic { n: usize },
    /// Balanced double star `S(m,m)`; relations live in the field of
    /// `sqrt(m^2+6m+1)`.
    BalancedStar { m: usize },
    /// `S(m,2)` around the cubic `x^3-(m+6)x^2+(4m+9)x-(m+4)`.
    PendantStar { m: usize },
}

/// Integer basis of all relations `sum(l_j mu_j) = 0` over the supported
/// eigenvalues of a pair, in Hermite normal form. Coordinates follow
/// `support_indices` order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationLattice {
    support_indices: Vec<usize>,
    basis: IntMatrix,
    family: LatticeFamily,
}

impl RelationLattice {
    pub fn support_indices(&self) -> &[usize] {
        &self.support_indices
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn family(&self) -> LatticeFamily {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    /// Exact eigenvalues at the support coordinates.
    pub fn support_values(&self) -> Vec<AlgebraicNumber> {
        match self.family {
            LatticeFamily::PathCyclotomic { n } => self
                .support_indices
                .iter()
                .map(|&r| AlgebraicNumber::path_eigenvalue(n, r))
                .collect(),
            LatticeFamily::BalancedStar { m } => {
                let sd = double_star_spectrum(m, DoubleStarShape::Balanced)
                    .expect("valid balanced star");
                let exact = sd.exact_values().expect("closed form carries exact values");
                self.support_indices.iter().map(|&r| exact[r].clone()).collect()
            }
            LatticeFamily::PendantStar { m } => {
                let sd = double_star_spectrum(m, DoubleStarShape::PendantPair)
                    .expect("valid pendant-pair star");
                let exact = sd.exact_values().expect("closed form carries exact values");
                self.support_indices.iter().map(|&r| exact[r].clone()).collect()
            }
        }
    }

    /// Re-verifies every basis row by exact arithmetic: cyclotomic
    /// divisibility for paths, exact linear combination otherwise.
    pub fn verify(&self) -> Result<()> {
        match self.family {
            LatticeFamily::PathCyclotomic { n } => {
                let psi = crate::exact::cyclotomic(2 * n);
                for i in 0..self.basis.rows() {
                    let full = self.full_coefficients(i, n);
                    let poly = relation_poly(n, &full);
                    if !divides(&psi, &poly) {
                        return Err(Error::InternalInconsistency(format!(
                            "lattice row {i} is not a path eigenvalue relation"
                        )));
                    }
                }
                Ok(())
            }
            LatticeFamily::BalancedStar { .. } | LatticeFamily::PendantStar { .. } => {
                let values = self.support_values();
                for i in 0..self.basis.rows() {
                    let row = self.basis.row(i).to_vec();
                    let combo = exact_linear_combination(&values, &row)?;
                    if !combo.is_zero() {
                        return Err(Error::InternalInconsistency(format!(
                            "lattice row {i} is not an eigenvalue relation"
                        )));
                    }
                }
                Ok(())
            }
        }
    }

    /// Expands basis row `i` to a coefficient vector over all classical
    /// indices `1..n-1` of a path (zeros off the support).
    pub fn full_coefficients(&self, i: usize, n: usize) -> Vec<BigInt> {
        let mut full = vec![BigInt::zero(); n - 1];
        for (pos, &r) in self.support_indices.iter().enumerate() {
            full[r - 1] = self.basis[(i, pos)].clone();
        }
        full
    }

    /// Exact test of whether a coefficient vector over the support
    /// coordinates is an eigenvalue relation.
    pub fn is_relation(&self, v: &[BigInt]) -> Result<bool> {
        if v.len() != self.support_indices.len() {
            return Err(Error::InvalidParameter(
                "coefficient vector does not match the support".into(),
            ));
        }
        match self.family {
            LatticeFamily::PathCyclotomic { n } => {
                let mut full = vec![BigInt::zero(); n - 1];
                for (pos, &r) in self.support_indices.iter().enumerate() {
                    full[r - 1] = v[pos].clone();
                }
                let psi = crate::exact::cyclotomic(2 * n);
                Ok(divides(&psi, &relation_poly(n, &full)))
            }
            _ => {
                let values = self.support_values();
                Ok(exact_linear_combination(&values, v)?.is_zero())
            }
        }
    }
}

/// Exact relation lattice of a path support partition.
///
/// Each supported index `j` is sent to the residue of `2 + x^j + x^(2n-j)`
/// modulo the `2n`-th cyclotomic polynomial; the lattice is the integer
/// kernel of the stacked residues (a relation holds exactly when the
/// combined polynomial is divisible by the cyclotomic).
pub fn relation_lattice_path(n: usize, sp: &SupportPartition) -> Result<RelationLattice> {
    if sp.num_eigenvalues() != n {
        return Err(Error::InvalidParameter(
            "partition does not match a path of this order".into(),
        ));
    }
    let support = sp.support_indices();
    let psi = crate::exact::cyclotomic(2 * n);
    let phi = psi.degree().expect("cyclotomic is nonzero");
    let rows: Vec<Vec<BigInt>> = support
        .iter()
        .map(|&j| {
            let mut coeffs = vec![BigInt::zero(); 2 * n];
            coeffs[0] = BigInt::from(2);
            coeffs[j] += BigInt::one();
            coeffs[2 * n - j] += BigInt::one();
            let (_, rem) = crate::exact::poly_divmod(&IntPolynomial::from_coeffs(coeffs), &psi)
                .expect("monic modulus");
            let mut row = vec![BigInt::zero(); phi];
            for (i, c) in rem.coeffs().iter().enumerate() {
                row[i] = c.clone();
            }
            row
        })
        .collect();
    let basis = if support.is_empty() {
        IntMatrix::zero(0, 0)
    } else {
        integer_kernel(&IntMatrix::from_rows(rows))
    };
    let rl = RelationLattice {
        support_indices: support,
        basis,
        family: LatticeFamily::PathCyclotomic { n },
    };
    rl.verify()?;
    Ok(rl)
}

/// Exact relation lattice of a double-star support partition.
///
/// Balanced stars express the supported eigenvalues in the basis
/// `{1, sqrt(m^2+6m+1)}` and take an integer kernel; so does `S(2,2)` in
/// the basis `{1, sqrt(17)}`. For `S(m,2)` with irreducible cubic the
/// Galois orbit argument pins the lattice to the single generator with
/// equal root coefficients; the generator is additionally verified by the
/// exact rational trace and by a certified interval evaluation at 1e-20.
pub fn relation_lattice_double_star(
    m: usize,
    shape: DoubleStarShape,
    sp: &SupportPartition,
) -> Result<RelationLattice> {
    let support = sp.support_indices();
    let (family, basis) = match shape {
        DoubleStarShape::Balanced => {
            let mi = m as i64;
            // coordinates of twice the eigenvalue in {1, sqrt(disc)}
            let mut rows = Vec::new();
            for &r in &support {
                // sorted order: m = 1 -> [0, mu-, m+1, mu+], else [0, mu-, 1, m+1, mu+]
                let row = match (m, r) {
                    (1, 1) => vec![BigInt::from(4), BigInt::from(-1)],
                    (1, 2) => vec![BigInt::from(4), BigInt::zero()],
                    (1, 3) => vec![BigInt::from(4), BigInt::one()],
                    (_, 1) => vec![BigInt::from(mi + 3), BigInt::from(-1)],
                    (_, 3) => vec![BigInt::from(2 * mi + 2), BigInt::zero()],
                    (_, 4) => vec![BigInt::from(mi + 3), BigInt::one()],
                    _ => {
                        return Err(Error::InvalidParameter(
                            "unexpected support index for a balanced star".into(),
                        ))
                    }
                };
                rows.push(row);
            }
            (
                LatticeFamily::BalancedStar { m },
                integer_kernel(&IntMatrix::from_rows(rows)),
            )
        }
        DoubleStarShape::PendantPair => {
            if m == 2 {
                // eigenvalues (theta1, 1, theta2, theta3) = ((5-s17)/2, 1, 3, (5+s17)/2),
                // doubled coordinates in {1, sqrt(17)}
                let rows = vec![
                    vec![BigInt::from(5), BigInt::from(-1)],
                    vec![BigInt::from(2), BigInt::zero()],
                    vec![BigInt::from(6), BigInt::zero()],
                    vec![BigInt::from(5), BigInt::one()],
                ];
                (
                    LatticeFamily::PendantStar { m },
                    integer_kernel(&IntMatrix::from_rows(rows)),
                )
            } else {
                use crate::exact::CubicFactorization;
                if crate::exact::cubic_reducibility(m as u64) != CubicFactorization::Irreducible {
                    return Err(Error::InternalInconsistency(format!(
                        "cubic for S({m},2) reducible although m != 2"
                    )));
                }
                // support order (theta1, 1, theta2, theta3); a relation
                // r*1 + l1 t1 + l2 t2 + l3 t3 = 0 over the conjugate roots
                // forces l1 = l2 = l3, hence one generator
                let g: Vec<BigInt> = vec![
                    BigInt::one(),
                    BigInt::from(-(m as i64) - 6),
                    BigInt::one(),
                    BigInt::one(),
                ];
                verify_pendant_generator(m)?;
                (
                    LatticeFamily::PendantStar { m },
                    IntMatrix::from_rows(vec![g]),
                )
            }
        }
    };
    let rl = RelationLattice {
        support_indices: support,
        basis,
        family,
    };
    rl.verify()?;
    Ok(rl)
}

/// Checks `theta1 + theta2 + theta3 = m + 6` twice: exactly by the trace
/// (negated quadratic coefficient of the monic cubic) and by a certified
/// rational enclosure of width below 1e-20 around the root sum.
fn verify_pendant_generator(m: usize) -> Result<()> {
    let cubic = crate::exact::double_star_cubic(m as u64);
    let trace = -cubic.coeff(2);
    if trace != BigInt::from(m as i64 + 6) {
        return Err(Error::InternalInconsistency(
            "cubic trace does not equal m + 6".into(),
        ));
    }
    let eps = BigRational::new(BigInt::one(), BigInt::from(10u64).pow(21));
    let mut lo_sum = BigRational::zero();
    let mut hi_sum = BigRational::zero();
    for (lo, hi) in crate::exact::isolate_cubic_roots(&cubic) {
        let (lo, hi) = crate::exact::refine_root_interval(&cubic, lo, hi, &eps);
        lo_sum += lo;
        hi_sum += hi;
    }
    let target = BigRational::from_integer(BigInt::from(m as i64 + 6));
    let width_ok =
        (&hi_sum - &lo_sum) < BigRational::new(BigInt::one(), BigInt::from(10u64).pow(20));
    if !(lo_sum <= target && target <= hi_sum && width_ok) {
        return Err(Error::InternalInconsistency(
            "interval verification of the root sum failed".into(),
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::solve_in_lattice;
    use crate::graph::Graph;
    use crate::spectral::{eigendecompose, path_spectrum, DEFAULT_DEDUP_TOL};

    #[test]
    fn path_partition_examples() {
        // n = 3, a = 1: plus {0, 1}, minus {2}
        let sp = path_support_partition(3, 1).unwrap();
        assert_eq!(sp.phi_plus(), vec![0, 1]);
        assert_eq!(sp.phi_minus(), vec![2]);
        assert!(sp.phi_zero().is_empty());

        // n = 6, a = 2: zero {4}, plus {0, 2}, minus {1, 3, 5}
        let sp = path_support_partition(6, 2).unwrap();
        assert_eq!(sp.phi_zero(), vec![4]);
        assert_eq!(sp.phi_plus(), vec![0, 2]);
        assert_eq!(sp.phi_minus(), vec![1, 3, 5]);

        // n = 6, a = 1: no zero class
        let sp = path_support_partition(6, 1).unwrap();
        assert!(sp.phi_zero().is_empty());
        assert_eq!(sp.phi_plus(), vec![0, 2, 4]);
        assert_eq!(sp.phi_minus(), vec![1, 3, 5]);

        assert!(path_support_partition(9, 5).is_err());
        assert!(path_support_partition(6, 7).is_err());
    }

    #[test]
    fn numeric_detection_on_paths() {
        let sd = eigendecompose(&Graph::path(5).unwrap().laplacian(), DEFAULT_DEDUP_TOL).unwrap();
        assert!(strong_cospectral(&sd, 1, 5, DEFAULT_SC_TOL)
            .unwrap()
            .is_some());
        assert!(strong_cospectral(&sd, 1, 4, DEFAULT_SC_TOL)
            .unwrap()
            .is_none());
        assert!(strong_cospectral(&sd, 2, 2, DEFAULT_SC_TOL).is_err());
    }

    #[test]
    fn numeric_matches_exact_partition_up_to_index_order() {
        for n in [4usize, 6, 9, 12] {
            for a in 1..=(n / 2) {
                let exact = path_support_partition(n, a).unwrap();
                let sd = path_spectrum(n).unwrap();
                let numeric = strong_cospectral(&sd, a, n + 1 - a, DEFAULT_SC_TOL)
                    .unwrap()
                    .expect("mirror pairs are strongly cospectral");
                for r in 0..n {
                    let sorted_idx = if r == 0 { 0 } else { n - r };
                    assert_eq!(
                        exact.sign(r),
                        numeric.sign(sorted_idx),
                        "n={n} a={a} r={r}"
                    );
                }
            }
        }
    }

    #[test]
    fn balanced_star_partition_matches_numeric() {
        for m in [1usize, 2, 3, 5] {
            let exact = double_star_support_partition(m, DoubleStarShape::Balanced);
            let sd = double_star_spectrum(m, DoubleStarShape::Balanced).unwrap();
            let (a, b) = exact.pair();
            let numeric = strong_cospectral(&sd, a, b, DEFAULT_SC_TOL)
                .unwrap()
                .expect("centers are strongly cospectral");
            assert_eq!(exact.signs(), numeric.signs());
        }
    }

    #[test]
    fn pendant_pair_partition_matches_numeric() {
        for m in [1usize, 2, 3, 7] {
            let exact = double_star_support_partition(m, DoubleStarShape::PendantPair);
            let sd = double_star_spectrum(m, DoubleStarShape::PendantPair).unwrap();
            let numeric = strong_cospectral(&sd, 1, 2, DEFAULT_SC_TOL)
                .unwrap()
                .expect("pendant pair is strongly cospectral");
            assert_eq!(exact.signs(), numeric.signs());
        }
    }

    #[test]
    fn path_lattice_n6_contains_known_relation() {
        // -mu_2 + mu_3 + mu_4 = 0 lies in the a=1 lattice of the 6-path
        let sp = path_support_partition(6, 1).unwrap();
        let rl = relation_lattice_path(6, &sp).unwrap();
        assert_eq!(rl.support_indices(), &[1, 2, 3, 4, 5]);
        assert_eq!(rl.rank(), 3);
        let v: Vec<BigInt> = [0i64, -1, 1, 1, 0].iter().map(|&x| x.into()).collect();
        assert!(solve_in_lattice(rl.basis(), &v).is_some());
    }

    #[test]
    fn path_lattice_n4_single_relation() {
        let sp = path_support_partition(4, 1).unwrap();
        let rl = relation_lattice_path(4, &sp).unwrap();
        assert_eq!(rl.rank(), 1);
        let row = rl.basis().row(0);
        let expected: Vec<BigInt> = [1i64, -2, 1].iter().map(|&x| x.into()).collect();
        assert_eq!(row, expected.as_slice());
    }

    #[test]
    fn path_lattice_n2_is_trivial() {
        let sp = path_support_partition(2, 1).unwrap();
        let rl = relation_lattice_path(2, &sp).unwrap();
        assert_eq!(rl.support_indices(), &[1]);
        assert_eq!(rl.rank(), 0);
    }

    #[test]
    fn s22_pendant_lattice_contains_reference_witness() {
        let sp = double_star_support_partition(2, DoubleStarShape::PendantPair);
        let rl = relation_lattice_double_star(2, DoubleStarShape::PendantPair, &sp).unwrap();
        assert_eq!(rl.rank(), 2);
        // coordinates (theta1, 1, theta2, theta3) = (mu-, 1, 3, mu+);
        // the witness 1*1 + 3*3 - 2*mu+ - 2*mu- reads (-2, 1, 3, -2)
        let w: Vec<BigInt> = [-2i64, 1, 3, -2].iter().map(|&x| x.into()).collect();
        assert!(solve_in_lattice(rl.basis(), &w).is_some());
    }

    #[test]
    fn pendant_lattice_generator_for_irreducible_cubics() {
        for m in [1usize, 3, 7] {
            let sp = double_star_support_partition(m, DoubleStarShape::PendantPair);
            let rl = relation_lattice_double_star(m, DoubleStarShape::PendantPair, &sp).unwrap();
            assert_eq!(rl.rank(), 1);
            let row = rl.basis().row(0);
            let expected: Vec<BigInt> = [1i64, -(m as i64) - 6, 1, 1]
                .iter()
                .map(|&x| x.into())
                .collect();
            assert_eq!(row, expected.as_slice());
        }
    }

    #[test]
    fn balanced_lattice_generator() {
        // S(3,3): coordinates (mu-, m+1, mu+), generator (2, -3, 2)
        let sp = double_star_support_partition(3, DoubleStarShape::Balanced);
        let rl = relation_lattice_double_star(3, DoubleStarShape::Balanced, &sp).unwrap();
        assert_eq!(rl.rank(), 1);
        let expected: Vec<BigInt> = [2i64, -3, 2].iter().map(|&x| x.into()).collect();
        assert_eq!(rl.basis().row(0), expected.as_slice());
    }
}
