//! Integer polynomials with big coefficients: exact division, cyclotomic
//! polynomials, and the relation polynomial that encodes integer relations
//! among path eigenvalues.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense integer polynomial, coefficients in ascending degree.
/// The zero polynomial is the empty coefficient list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial::from_coeffs(vec![BigInt::one()])
    }

    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPolynomial::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `x^k - 1`.
    pub fn x_pow_minus_one(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[0] = -BigInt::one();
        coeffs[k] = BigInt::one();
        IntPolynomial::from_coeffs(coeffs)
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        matches!(self.leading(), Some(c) if c.is_one())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        IntPolynomial::from_coeffs(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] -= c;
        }
        IntPolynomial::from_coeffs(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(out)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        IntPolynomial::from_coeffs(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Exact evaluation at an integer point.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact evaluation at a rational point.
    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Sign of the value at a rational point: -1, 0 or +1.
    pub fn sign_at(&self, x: &BigRational) -> i8 {
        let v = self.eval_rational(x);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }
}

/// Exact division with remainder: `f = g*q + r`, `deg r < deg g`.
///
/// Works over the integers; a division step that would need a fractional
/// quotient coefficient is rejected (cannot happen for monic `g`).
pub fn poly_divmod(f: &IntPolynomial, g: &IntPolynomial) -> Result<(IntPolynomial, IntPolynomial)> {
    let gd = g
        .degree()
        .ok_or_else(|| Error::InvalidParameter("division by the zero polynomial".into()))?;
    let lead = g.leading().expect("nonzero divisor").clone();
    let mut rem = f.coeffs.to_vec();
    if rem.len() <= gd {
        return Ok((IntPolynomial::zero(), f.clone()));
    }
    let qlen = rem.len() - gd;
    let mut quot = vec![BigInt::zero(); qlen];
    for i in (0..qlen).rev() {
        let top = rem[i + gd].clone();
        if top.is_zero() {
            continue;
        }
        if !(&top % &lead).is_zero() {
            return Err(Error::InvalidParameter(
                "non-monic divisor with non-integral quotient".into(),
            ));
        }
        let q = &top / &lead;
        for (j, gc) in g.coeffs.iter().enumerate() {
            let t = &q * gc;
            rem[i + j] -= t;
        }
        quot[i] = q;
    }
    Ok((
        IntPolynomial::from_coeffs(quot),
        IntPolynomial::from_coeffs(rem),
    ))
}

/// True iff `g` divides `f` exactly.
pub fn divides(g: &IntPolynomial, f: &IntPolynomial) -> bool {
    match poly_divmod(f, g) {
        Ok((_, r)) => r.is_zero(),
        Err(_) => false,
    }
}

/// The `k`-th cyclotomic polynomial, by recursive division of `x^k - 1`
/// by the cyclotomics of the proper divisors of `k`.
pub fn cyclotomic(k: usize) -> IntPolynomial {
    assert!(k >= 1, "cyclotomic order must be positive");
    let mut num = IntPolynomial::x_pow_minus_one(k);
    for d in 1..k {
        if k % d == 0 {
            let psi_d = cyclotomic(d);
            let (q, r) = poly_divmod(&num, &psi_d).expect("cyclotomic division is exact");
            debug_assert!(r.is_zero());
            num = q;
        }
    }
    num
}

/// The polynomial `2*sum(l_j) + sum(l_j x^j) + sum(l_j x^(2n-j))` whose
/// divisibility by the `2n`-th cyclotomic decides whether
/// `sum(l_j mu_j) = 0` over the path eigenvalues `mu_j = 2 + w^j + w^(2n-j)`.
///
/// `l` is indexed by `j = 1..n-1` (so `l.len() == n - 1`).
pub fn relation_poly(n: usize, l: &[BigInt]) -> IntPolynomial {
    assert_eq!(l.len(), n.saturating_sub(1), "coefficient vector length");
    let mut coeffs = vec![BigInt::zero(); 2 * n];
    for (idx, lj) in l.iter().enumerate() {
        let j = idx + 1;
        coeffs[0] += 2 * lj;
        coeffs[j] += lj;
        coeffs[2 * n - j] += lj;
    }
    IntPolynomial::from_coeffs(coeffs)
}

/// The characteristic cubic of the double star `S(m,2)` restricted to the
/// non-trivial eigenvalues: `x^3 - (m+6)x^2 + (4m+9)x - (m+4)`.
pub fn double_star_cubic(m: u64) -> IntPolynomial {
    IntPolynomial::from_coeffs(vec![
        BigInt::from(-(m as i64) - 4),
        BigInt::from(4 * (m as i64) + 9),
        BigInt::from(-(m as i64) - 6),
        BigInt::one(),
    ])
}

/// Outcome of the rational-root test on [`double_star_cubic`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CubicFactorization {
    Irreducible,
    Factor {
        root: BigInt,
        quadratic: IntPolynomial,
    },
}

/// Decides reducibility of `double_star_cubic(m)` over the integers.
///
/// A monic integer cubic is reducible over the rationals iff it has an
/// integer root, which must divide the constant term `m+4`.
pub fn cubic_reducibility(m: u64) -> CubicFactorization {
    let p = double_star_cubic(m);
    let c0 = m + 4;
    let mut divisors: Vec<u64> = Vec::new();
    let mut d = 1u64;
    while d * d <= c0 {
        if c0 % d == 0 {
            divisors.push(d);
            divisors.push(c0 / d);
        }
        d += 1;
    }
    divisors.sort_unstable();
    divisors.dedup();
    for &cand in &divisors {
        for root in [BigInt::from(cand), -BigInt::from(cand)] {
            if p.eval(&root).is_zero() {
                let linear =
                    IntPolynomial::from_coeffs(vec![-root.clone(), BigInt::one()]);
                let (quadratic, r) = poly_divmod(&p, &linear).expect("monic divisor");
                debug_assert!(r.is_zero());
                return CubicFactorization::Factor { root, quadratic };
            }
        }
    }
    CubicFactorization::Irreducible
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divmod_basics() {
        let f = IntPolynomial::from_i64(&[-1, 0, 1]); // x^2 - 1
        let g = IntPolynomial::from_i64(&[1, 1]); // x + 1
        let (q, r) = poly_divmod(&f, &g).unwrap();
        assert_eq!(q, IntPolynomial::from_i64(&[-1, 1]));
        assert!(r.is_zero());

        let f = IntPolynomial::from_i64(&[0, 0, 0, 1]); // x^3
        let g = IntPolynomial::from_i64(&[1, 0, 1]); // x^2 + 1
        let (q, r) = poly_divmod(&f, &g).unwrap();
        assert_eq!(q, IntPolynomial::from_i64(&[0, 1]));
        assert_eq!(r, IntPolynomial::from_i64(&[0, -1]));
    }

    #[test]
    fn divmod_rejects_fractional_quotient() {
        let f = IntPolynomial::from_i64(&[0, 1]); // x
        let g = IntPolynomial::from_i64(&[0, 2]); // 2x
        assert!(poly_divmod(&f, &g).is_err());
        // but exact non-monic division is fine
        let f = IntPolynomial::from_i64(&[0, 4]);
        let (q, r) = poly_divmod(&f, &g).unwrap();
        assert_eq!(q, IntPolynomial::from_i64(&[2]));
        assert!(r.is_zero());
    }

    #[test]
    fn cyclotomic_small_orders() {
        assert_eq!(cyclotomic(1), IntPolynomial::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic(2), IntPolynomial::from_i64(&[1, 1]));
        assert_eq!(cyclotomic(6), IntPolynomial::from_i64(&[1, -1, 1]));
        assert_eq!(cyclotomic(8), IntPolynomial::from_i64(&[1, 0, 0, 0, 1]));
        assert_eq!(cyclotomic(12), IntPolynomial::from_i64(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn cyclotomic_at_minus_one_is_p_for_twice_odd_prime_powers() {
        // Psi_{2p^l}(-1) = p for odd prime powers p^l.
        let minus_one = BigInt::from(-1);
        for (k, p) in [(6, 3), (10, 5), (18, 3), (54, 3), (50, 5), (14, 7)] {
            assert_eq!(cyclotomic(k).eval(&minus_one), BigInt::from(p));
        }
    }

    #[test]
    fn relation_poly_example_n6() {
        // l encodes -mu_2 + mu_3 + mu_4 = 0 for the 6-vertex path.
        let l: Vec<BigInt> = [0i64, -1, 1, 1, 0].iter().map(|&c| c.into()).collect();
        let p = relation_poly(6, &l);
        assert_eq!(p.coeff(0), BigInt::from(2));
        let support: Vec<usize> = (1..12).filter(|&i| !p.coeff(i).is_zero()).collect();
        assert_eq!(support, vec![2, 3, 4, 8, 9, 10]);
        assert!(divides(&cyclotomic(12), &p));
    }

    #[test]
    fn relation_poly_nondivisible_case() {
        // mu_1 alone is nonzero on the 4-vertex path: 2 + x + x^7.
        let l: Vec<BigInt> = [1i64, 0, 0].iter().map(|&c| c.into()).collect();
        let p = relation_poly(4, &l);
        assert_eq!(p, IntPolynomial::from_i64(&[2, 1, 0, 0, 0, 0, 0, 1]));
        assert!(!divides(&cyclotomic(8), &p));
    }

    #[test]
    fn relation_poly_zero_vector() {
        let l = vec![BigInt::zero(); 5];
        assert!(relation_poly(6, &l).is_zero());
    }

    #[test]
    fn double_star_cubic_values() {
        // p_1 = x^3 - 7x^2 + 13x - 5, irreducible.
        assert_eq!(
            double_star_cubic(1),
            IntPolynomial::from_i64(&[-5, 13, -7, 1])
        );
        assert_eq!(cubic_reducibility(1), CubicFactorization::Irreducible);
        // p_2 = (x - 3)(x^2 - 5x + 2).
        match cubic_reducibility(2) {
            CubicFactorization::Factor { root, quadratic } => {
                assert_eq!(root, BigInt::from(3));
                assert_eq!(quadratic, IntPolynomial::from_i64(&[2, -5, 1]));
            }
            other => panic!("expected factor, got {other:?}"),
        }
        assert_eq!(cubic_reducibility(3), CubicFactorization::Irreducible);
    }
}
