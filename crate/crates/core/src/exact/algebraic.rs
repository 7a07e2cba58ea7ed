//! Exact algebraic numbers: rationals, quadratic surds `a + b*sqrt(D)`,
//! elements of cyclotomic fields, and real roots of irreducible integer
//! cubics kept as (minimal polynomial, isolating rational interval).
//!
//! Equality and zero tests are exact. Real values also expose certified
//! rational enclosures of any requested width, refined by interval
//! bisection, so "numeric" verification at 1e-20 or tighter stays exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::numtheory::square_free_part;
use crate::exact::poly::{cyclotomic, poly_divmod, IntPolynomial};

/// Euler's totient, by trial-division factorization.
pub fn euler_phi(k: usize) -> usize {
    let mut phi = 1usize;
    for (p, e) in crate::exact::numtheory::factorize(k as u64) {
        phi *= (p.pow(e - 1) * (p - 1)) as usize;
    }
    phi
}

/// Exact algebraic number in one of the closed representations used by the
/// spectra in this crate.
#[derive(Debug, Clone, PartialEq)]
pub enum AlgebraicNumber {
    Rational(BigRational),
    /// `a + b*sqrt(d)` with `d > 1` square-free and `b != 0`.
    Surd {
        a: BigRational,
        b: BigRational,
        d: u64,
    },
    /// Element of the cyclotomic field of the given order, stored as the
    /// residue modulo the corresponding cyclotomic polynomial
    /// (rational coefficients, degree below phi(order)).
    Cyclotomic {
        order: usize,
        residue: Vec<BigRational>,
    },
    /// The unique real root of `poly` (irreducible monic cubic, all roots
    /// real) inside the isolating interval `(lo, hi)`, where the sign of
    /// `poly` differs at the endpoints.
    CubicRoot {
        poly: IntPolynomial,
        lo: BigRational,
        hi: BigRational,
    },
    /// Value `coeffs[0] + coeffs[1]*t1 + coeffs[2]*t2 + coeffs[3]*t3` over
    /// the increasing roots `t1 < t2 < t3` of `poly`, with not all root
    /// coefficients equal (otherwise the value would be rational and is
    /// normalized away). Such a value is never zero.
    CubicCombination {
        poly: IntPolynomial,
        coeffs: [BigRational; 4],
    },
}

impl AlgebraicNumber {
    pub fn from_integer(v: i64) -> Self {
        AlgebraicNumber::Rational(BigRational::from_integer(BigInt::from(v)))
    }

    /// Builds `a + b*sqrt(d)` and normalizes: the square part of `d` is
    /// folded into `b`, and degenerate cases collapse to `Rational`.
    pub fn surd(a: BigRational, b: BigRational, d: u64) -> Self {
        if b.is_zero() || d == 0 {
            return AlgebraicNumber::Rational(a);
        }
        let (s, rest) = square_free_part(d);
        if rest == 1 {
            return AlgebraicNumber::Rational(a + b * BigRational::from_integer(BigInt::from(s)));
        }
        AlgebraicNumber::Surd {
            a,
            b: b * BigRational::from_integer(BigInt::from(s)),
            d: rest,
        }
    }

    /// Reduces an integer polynomial in the primitive root of unity of the
    /// given order into the cyclotomic field.
    pub fn cyclotomic_element(order: usize, value: &IntPolynomial) -> Self {
        let psi = cyclotomic(order);
        let (_, rem) = poly_divmod(value, &psi).expect("cyclotomic moduli are monic");
        let phi = euler_phi(order);
        let mut residue = vec![BigRational::zero(); phi];
        for (i, c) in rem.coeffs().iter().enumerate() {
            residue[i] = BigRational::from_integer(c.clone());
        }
        normalize_cyclotomic(order, residue)
    }

    /// The path eigenvalue `mu_j = 2 + w^j + w^(2n-j)` as an element of the
    /// cyclotomic field of order `2n` (`w` a primitive `2n`-th root of unity).
    pub fn path_eigenvalue(n: usize, j: usize) -> Self {
        assert!(j >= 1 && j < n, "path eigenvalue index out of range");
        let mut coeffs = vec![BigInt::zero(); 2 * n];
        coeffs[0] = BigInt::from(2);
        coeffs[j] += BigInt::one();
        coeffs[2 * n - j] += BigInt::one();
        AlgebraicNumber::cyclotomic_element(2 * n, &IntPolynomial::from_coeffs(coeffs))
    }

    /// The root of an irreducible cubic isolated by `(lo, hi)`.
    pub fn cubic_root(poly: IntPolynomial, lo: BigRational, hi: BigRational) -> Self {
        debug_assert!(poly.sign_at(&lo) * poly.sign_at(&hi) < 0, "not isolating");
        AlgebraicNumber::CubicRoot { poly, lo, hi }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            AlgebraicNumber::Rational(q) => q.is_zero(),
            // normalized non-rational representations are never zero
            _ => false,
        }
    }

    /// Exact rational value, when the number is rational.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            AlgebraicNumber::Rational(q) => Some(q),
            _ => None,
        }
    }

    /// `f64` approximation of a real value. Cyclotomic elements return the
    /// real part of the evaluation at `exp(2*pi*i/order)`.
    pub fn approx_f64(&self) -> f64 {
        match self {
            AlgebraicNumber::Rational(q) => q.to_f64().unwrap_or(f64::NAN),
            AlgebraicNumber::Surd { a, b, d } => {
                a.to_f64().unwrap_or(f64::NAN)
                    + b.to_f64().unwrap_or(f64::NAN) * (*d as f64).sqrt()
            }
            AlgebraicNumber::Cyclotomic { .. } => self.approx_complex().0,
            AlgebraicNumber::CubicRoot { .. } | AlgebraicNumber::CubicCombination { .. } => {
                let eps = BigRational::new(BigInt::one(), BigInt::from(10u64.pow(15)));
                let (lo, hi) = self.enclosure(&eps).expect("real variant");
                ((lo + hi) / BigRational::from_integer(BigInt::from(2)))
                    .to_f64()
                    .unwrap_or(f64::NAN)
            }
        }
    }

    /// Complex `f64` evaluation (real, imaginary); exact-rational inputs have
    /// zero imaginary part.
    pub fn approx_complex(&self) -> (f64, f64) {
        match self {
            AlgebraicNumber::Cyclotomic { order, residue } => {
                let mut re = 0.0;
                let mut im = 0.0;
                for (j, c) in residue.iter().enumerate() {
                    let cf = c.to_f64().unwrap_or(f64::NAN);
                    let ang = 2.0 * std::f64::consts::PI * (j as f64) / (*order as f64);
                    re += cf * ang.cos();
                    im += cf * ang.sin();
                }
                (re, im)
            }
            other => (other.approx_f64(), 0.0),
        }
    }

    /// Certified rational enclosure `(lo, hi)` with `hi - lo < eps`, for the
    /// real representations. Cyclotomic elements are excluded (they are
    /// complex in general); rational ones collapse to a point interval.
    pub fn enclosure(&self, eps: &BigRational) -> Result<(BigRational, BigRational)> {
        match self {
            AlgebraicNumber::Rational(q) => Ok((q.clone(), q.clone())),
            AlgebraicNumber::Surd { a, b, d } => {
                let scale = b.abs() + BigRational::one();
                let (slo, shi) = sqrt_enclosure(*d, &(eps / &scale));
                let (t1, t2) = (a + b * &slo, a + b * &shi);
                if t1 <= t2 {
                    Ok((t1, t2))
                } else {
                    Ok((t2, t1))
                }
            }
            AlgebraicNumber::CubicRoot { poly, lo, hi } => {
                Ok(refine_root_interval(poly, lo.clone(), hi.clone(), eps))
            }
            AlgebraicNumber::CubicCombination { poly, coeffs } => {
                let scale: BigRational = coeffs[1..]
                    .iter()
                    .fold(BigRational::one(), |acc, c| acc + c.abs());
                let roots = isolate_cubic_roots(poly);
                let per = eps / &scale;
                let mut lo = coeffs[0].clone();
                let mut hi = coeffs[0].clone();
                for (i, (rlo, rhi)) in roots.into_iter().enumerate() {
                    let (rlo, rhi) = refine_root_interval(poly, rlo, rhi, &per);
                    let c = &coeffs[i + 1];
                    let (t1, t2) = (c * &rlo, c * &rhi);
                    if t1 <= t2 {
                        lo += t1;
                        hi += t2;
                    } else {
                        lo += t2;
                        hi += t1;
                    }
                }
                Ok((lo, hi))
            }
            AlgebraicNumber::Cyclotomic { .. } => Err(Error::InvalidParameter(
                "cyclotomic elements have no real enclosure".into(),
            )),
        }
    }
}

fn normalize_cyclotomic(order: usize, residue: Vec<BigRational>) -> AlgebraicNumber {
    if residue.iter().skip(1).all(BigRational::is_zero) {
        return AlgebraicNumber::Rational(
            residue.into_iter().next().unwrap_or_else(BigRational::zero),
        );
    }
    AlgebraicNumber::Cyclotomic { order, residue }
}

fn normalize_cubic(poly: IntPolynomial, coeffs: [BigRational; 4]) -> AlgebraicNumber {
    if coeffs[1] == coeffs[2] && coeffs[2] == coeffs[3] {
        // equal root coefficients: the value is c0 + c * (t1 + t2 + t3),
        // and the root sum is minus the quadratic coefficient
        let trace = -BigRational::from_integer(poly.coeff(2));
        return AlgebraicNumber::Rational(&coeffs[0] + &coeffs[1] * trace);
    }
    AlgebraicNumber::CubicCombination { poly, coeffs }
}

/// Exact value of `sum(l_i * vals_i)`.
///
/// All values must live in one representation: rationals mix freely with a
/// single surd discriminant, a single cyclotomic order, or the roots of a
/// single irreducible cubic. The zero test on the result is exact; for
/// cubic conjugates it rests on the fact that an integer combination of the
/// roots of an irreducible cubic vanishes only when the three root
/// coefficients coincide.
pub fn exact_linear_combination(
    vals: &[AlgebraicNumber],
    l: &[BigInt],
) -> Result<AlgebraicNumber> {
    if vals.len() != l.len() {
        return Err(Error::InvalidParameter(format!(
            "combination length mismatch: {} values, {} coefficients",
            vals.len(),
            l.len()
        )));
    }

    #[derive(PartialEq)]
    enum Repr {
        Rational,
        Surd(u64),
        Cyclo(usize),
        Cubic(IntPolynomial),
    }

    let mut repr = Repr::Rational;
    for v in vals {
        let this = match v {
            AlgebraicNumber::Rational(_) => continue,
            AlgebraicNumber::Surd { d, .. } => Repr::Surd(*d),
            AlgebraicNumber::Cyclotomic { order, .. } => Repr::Cyclo(*order),
            AlgebraicNumber::CubicRoot { poly, .. }
            | AlgebraicNumber::CubicCombination { poly, .. } => Repr::Cubic(poly.clone()),
        };
        if repr == Repr::Rational {
            repr = this;
        } else if repr != this {
            return Err(Error::InvalidParameter(
                "incompatible algebraic representations in combination".into(),
            ));
        }
    }

    let rat = |q: &BigRational, l: &BigInt| q * BigRational::from_integer(l.clone());

    match repr {
        Repr::Rational => {
            let mut acc = BigRational::zero();
            for (v, li) in vals.iter().zip(l) {
                acc += rat(v.as_rational().expect("all rational"), li);
            }
            Ok(AlgebraicNumber::Rational(acc))
        }
        Repr::Surd(d) => {
            let mut a_acc = BigRational::zero();
            let mut b_acc = BigRational::zero();
            for (v, li) in vals.iter().zip(l) {
                match v {
                    AlgebraicNumber::Rational(q) => a_acc += rat(q, li),
                    AlgebraicNumber::Surd { a, b, .. } => {
                        a_acc += rat(a, li);
                        b_acc += rat(b, li);
                    }
                    _ => unreachable!(),
                }
            }
            Ok(AlgebraicNumber::surd(a_acc, b_acc, d))
        }
        Repr::Cyclo(order) => {
            let phi = euler_phi(order);
            let mut acc = vec![BigRational::zero(); phi];
            for (v, li) in vals.iter().zip(l) {
                match v {
                    AlgebraicNumber::Rational(q) => acc[0] += rat(q, li),
                    AlgebraicNumber::Cyclotomic { residue, .. } => {
                        for (i, c) in residue.iter().enumerate() {
                            acc[i] += rat(c, li);
                        }
                    }
                    _ => unreachable!(),
                }
            }
            Ok(normalize_cyclotomic(order, acc))
        }
        Repr::Cubic(poly) => {
            let mut canon = isolate_cubic_roots(&poly);
            let mut coeffs = [
                BigRational::zero(),
                BigRational::zero(),
                BigRational::zero(),
                BigRational::zero(),
            ];
            for (v, li) in vals.iter().zip(l) {
                match v {
                    AlgebraicNumber::Rational(q) => coeffs[0] += rat(q, li),
                    AlgebraicNumber::CubicRoot { poly: p, lo, hi } => {
                        let idx = match_root(p, &mut canon, lo.clone(), hi.clone());
                        coeffs[idx + 1] += BigRational::from_integer(li.clone());
                    }
                    AlgebraicNumber::CubicCombination { coeffs: cs, .. } => {
                        for (i, c) in cs.iter().enumerate() {
                            coeffs[i] += rat(c, li);
                        }
                    }
                    _ => unreachable!(),
                }
            }
            Ok(normalize_cubic(poly, coeffs))
        }
    }
}

/// Rational enclosure of `sqrt(d)` of width below `eps`, by Newton descent
/// from above (exact rational arithmetic).
pub fn sqrt_enclosure(d: u64, eps: &BigRational) -> (BigRational, BigRational) {
    assert!(d > 0);
    let dq = BigRational::from_integer(BigInt::from(d));
    let two = BigRational::from_integer(BigInt::from(2));
    // integer start >= sqrt(d)
    let mut hi = BigRational::from_integer(BigInt::from((d as f64).sqrt().ceil() as u64 + 1));
    loop {
        let lo = &dq / &hi;
        if &hi - &lo < *eps {
            debug_assert!(&lo * &lo <= dq && &hi * &hi >= dq);
            return (lo, hi);
        }
        hi = (&hi + &dq / &hi) / &two;
    }
}

/// Shrinks an isolating interval of `poly` (sign change at the endpoints)
/// until its width is below `eps`.
pub fn refine_root_interval(
    poly: &IntPolynomial,
    mut lo: BigRational,
    mut hi: BigRational,
    eps: &BigRational,
) -> (BigRational, BigRational) {
    let two = BigRational::from_integer(BigInt::from(2));
    let sign_lo = poly.sign_at(&lo);
    debug_assert!(sign_lo != 0 && poly.sign_at(&hi) == -sign_lo);
    while &hi - &lo >= *eps {
        let mid = (&lo + &hi) / &two;
        let s = poly.sign_at(&mid);
        assert!(s != 0, "rational root encountered; polynomial not irreducible");
        if s == sign_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

/// Disjoint isolating intervals for the three real roots of a squarefree
/// monic cubic, in increasing root order. Starts from the unit integer grid
/// inside the Cauchy root bound and halves the grid until the roots separate.
pub fn isolate_cubic_roots(poly: &IntPolynomial) -> Vec<(BigRational, BigRational)> {
    assert_eq!(poly.degree(), Some(3), "cubic expected");
    assert!(poly.is_monic(), "monic cubic expected");
    let bound = 1i64
        + (0..3)
            .map(|i| {
                poly.coeff(i)
                    .abs()
                    .to_i64()
                    .expect("desk-scale coefficients")
            })
            .max()
            .unwrap();
    let mut step = BigRational::one();
    loop {
        let mut intervals = Vec::new();
        let mut x = BigRational::from_integer(BigInt::from(-bound));
        let top = BigRational::from_integer(BigInt::from(bound));
        let mut prev_sign = poly.sign_at(&x);
        assert!(prev_sign != 0, "rational root encountered");
        while x < top {
            let next = &x + &step;
            let s = poly.sign_at(&next);
            assert!(s != 0, "rational root encountered");
            if s != prev_sign {
                intervals.push((x.clone(), next.clone()));
            }
            prev_sign = s;
            x = next;
        }
        if intervals.len() == 3 {
            return intervals;
        }
        step /= BigRational::from_integer(BigInt::from(2));
    }
}

/// Finds which canonical root interval the given isolating interval refers
/// to, refining both sides until the match is unambiguous.
fn match_root(
    poly: &IntPolynomial,
    canon: &mut [(BigRational, BigRational)],
    mut lo: BigRational,
    mut hi: BigRational,
) -> usize {
    let two = BigRational::from_integer(BigInt::from(2));
    loop {
        let hits: Vec<usize> = canon
            .iter()
            .enumerate()
            .filter(|(_, (clo, chi))| &lo <= chi && clo <= &hi)
            .map(|(i, _)| i)
            .collect();
        if hits.len() == 1 {
            return hits[0];
        }
        // halve everything and retry
        let width = &hi - &lo;
        let target = width / &two;
        let (nlo, nhi) = refine_root_interval(poly, lo, hi, &target);
        lo = nlo;
        hi = nhi;
        for c in canon.iter_mut() {
            let w = (&c.1 - &c.0) / &two;
            *c = refine_root_interval(poly, c.0.clone(), c.1.clone(), &w);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly::double_star_cubic;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn qr(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn surd_normalization() {
        // sqrt(8) = 2*sqrt(2)
        let s = AlgebraicNumber::surd(q(0), q(1), 8);
        assert_eq!(
            s,
            AlgebraicNumber::Surd {
                a: q(0),
                b: q(2),
                d: 2
            }
        );
        // sqrt(9) collapses to 3
        assert_eq!(
            AlgebraicNumber::surd(q(1), q(1), 9),
            AlgebraicNumber::Rational(q(4))
        );
        // b = 0 collapses
        assert!(AlgebraicNumber::surd(q(0), q(0), 17).is_zero());
    }

    #[test]
    fn s22_negative_witness_relation() {
        // 1*1 + 3*3 - 2*(5+sqrt(17))/2 - 2*(5-sqrt(17))/2 = 0
        let vals = vec![
            AlgebraicNumber::from_integer(1),
            AlgebraicNumber::from_integer(3),
            AlgebraicNumber::surd(qr(5, 2), qr(1, 2), 17),
            AlgebraicNumber::surd(qr(5, 2), qr(-1, 2), 17),
        ];
        let l: Vec<BigInt> = [1i64, 3, -2, -2].iter().map(|&x| x.into()).collect();
        assert!(exact_linear_combination(&vals, &l).unwrap().is_zero());
    }

    #[test]
    fn balanced_star_combination_nonzero_unless_surds_match() {
        // vals = {m+1, mu+, mu-} for S(3,3): {4, (6+sqrt(33))/2... } with m=3:
        // mu+- = (6 +- sqrt(28))/2 = 3 +- sqrt(7)
        let vals = vec![
            AlgebraicNumber::from_integer(4),
            AlgebraicNumber::surd(q(3), q(1), 7),
            AlgebraicNumber::surd(q(3), q(-1), 7),
        ];
        // -3*(m+1) + 2*mu+ + 2*mu- = -12 + 12 = 0
        let l: Vec<BigInt> = [-3i64, 2, 2].iter().map(|&x| x.into()).collect();
        assert!(exact_linear_combination(&vals, &l).unwrap().is_zero());
        // unequal surd coefficients can never vanish
        let l: Vec<BigInt> = [-3i64, 2, 1].iter().map(|&x| x.into()).collect();
        assert!(!exact_linear_combination(&vals, &l).unwrap().is_zero());
        // zero vector
        let l = vec![BigInt::zero(); 3];
        assert!(exact_linear_combination(&vals, &l).unwrap().is_zero());
    }

    #[test]
    fn path_eigenvalue_identities_in_cyclotomic_field() {
        // n = 6: mu_2 = 3, mu_3 = 2, mu_4 = 1, so -mu_2 + mu_3 + mu_4 = 0.
        let vals: Vec<AlgebraicNumber> = [2usize, 3, 4]
            .iter()
            .map(|&j| AlgebraicNumber::path_eigenvalue(6, j))
            .collect();
        let l: Vec<BigInt> = [-1i64, 1, 1].iter().map(|&x| x.into()).collect();
        assert!(exact_linear_combination(&vals, &l).unwrap().is_zero());
        // mu_2 is exactly rational 3
        assert_eq!(
            AlgebraicNumber::path_eigenvalue(6, 2),
            AlgebraicNumber::Rational(q(3))
        );
        // mu_1 = 2 + sqrt(3) is irrational
        assert!(!AlgebraicNumber::path_eigenvalue(6, 1).is_zero());
    }

    #[test]
    fn cubic_root_galois_zero_test() {
        let p = double_star_cubic(5); // irreducible, trace 11
        let roots = isolate_cubic_roots(&p);
        let vals: Vec<AlgebraicNumber> = roots
            .iter()
            .map(|(lo, hi)| AlgebraicNumber::cubic_root(p.clone(), lo.clone(), hi.clone()))
            .chain([AlgebraicNumber::from_integer(1)])
            .collect();
        // t1 + t2 + t3 - 11 = 0
        let l: Vec<BigInt> = [1i64, 1, 1, -11].iter().map(|&x| x.into()).collect();
        assert!(exact_linear_combination(&vals, &l).unwrap().is_zero());
        // unequal root coefficients never vanish
        let l: Vec<BigInt> = [2i64, 1, 1, -11].iter().map(|&x| x.into()).collect();
        let v = exact_linear_combination(&vals, &l).unwrap();
        assert!(!v.is_zero());
        // and the enclosure of the nonzero value excludes zero once tight
        let eps = BigRational::new(BigInt::one(), BigInt::from(10u64).pow(25));
        let (lo, hi) = v.enclosure(&eps).unwrap();
        assert!(lo.is_positive() || hi.is_negative());
    }

    #[test]
    fn enclosures_are_certified_and_tight() {
        let eps = BigRational::new(BigInt::one(), BigInt::from(10u64).pow(30));
        let s = AlgebraicNumber::surd(q(0), q(1), 2);
        let (lo, hi) = s.enclosure(&eps).unwrap();
        assert!(&hi - &lo < eps);
        let two = q(2);
        assert!(&lo * &lo <= two && &hi * &hi >= two);

        let p = double_star_cubic(1);
        let roots = isolate_cubic_roots(&p);
        assert_eq!(roots.len(), 3);
        let r0 = AlgebraicNumber::cubic_root(p.clone(), roots[0].0.clone(), roots[0].1.clone());
        let eps20 = BigRational::new(BigInt::one(), BigInt::from(10u64).pow(20));
        let (lo, hi) = r0.enclosure(&eps20).unwrap();
        assert!(&hi - &lo < eps20);
        assert!(p.sign_at(&lo) != p.sign_at(&hi));
    }

    #[test]
    fn incompatible_representations_rejected() {
        let vals = vec![
            AlgebraicNumber::surd(q(0), q(1), 2),
            AlgebraicNumber::surd(q(0), q(1), 3),
        ];
        let l: Vec<BigInt> = [1i64, 1].iter().map(|&x| x.into()).collect();
        assert!(exact_linear_combination(&vals, &l).is_err());
    }
}
