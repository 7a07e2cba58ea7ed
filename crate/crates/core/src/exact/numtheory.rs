//! Small number-theoretic helpers: perfect squares, prime powers,
//! factorization by trial division, extended gcd.

use num_bigint::BigUint;
use num_integer::Roots;

use crate::error::{Error, Result};

/// True iff `k` is a perfect square. Exact: integer square root plus check.
pub fn is_perfect_square(k: &BigUint) -> bool {
    if let Ok(small) = u64::try_from(k) {
        return is_perfect_square_u64(small);
    }
    let r = k.sqrt();
    &r * &r == *k
}

/// `u64` fast path used by desk-scale sweeps.
pub fn is_perfect_square_u64(k: u64) -> bool {
    // Quick residue filter: squares mod 16 lie in {0,1,4,9}.
    match k & 15 {
        0 | 1 | 4 | 9 => {}
        _ => return false,
    }
    let r = k.sqrt();
    r * r == k
}

/// Returns `Some((p, l))` when `n = p^l` for a prime `p`, else `None`.
///
/// Trial division; fine at desk scale.
pub fn prime_power(n: u64) -> Result<Option<(u64, u32)>> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "prime_power requires n >= 2, got {n}"
        )));
    }
    let factors = factorize(n);
    if factors.len() == 1 {
        let (p, l) = factors[0];
        Ok(Some((p, l)))
    } else {
        Ok(None)
    }
}

/// Prime factorization of `n >= 1` as `(prime, exponent)` pairs in
/// increasing prime order. `factorize(1)` is empty.
pub fn factorize(n: u64) -> Vec<(u64, u32)> {
    let mut n = n;
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0u32;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Extended gcd: returns `(g, x, y)` with `x*a + y*b = g = gcd(a, b) >= 0`.
pub fn extended_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut r0, mut r1) = (a, b);
    let (mut x0, mut x1) = (1i64, 0i64);
    let (mut y0, mut y1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (x0, x1) = (x1, x0 - q * x1);
        (y0, y1) = (y1, y0 - q * y1);
    }
    if r0 < 0 {
        (-r0, -x0, -y0)
    } else {
        (r0, x0, y0)
    }
}

/// Largest `s` with `s^2 | d`, returned as `(s, d / s^2)`; the second
/// component is square-free.
pub fn square_free_part(d: u64) -> (u64, u64) {
    let mut s = 1u64;
    let mut rest = d;
    for (p, e) in factorize(d) {
        let half = e / 2;
        s *= p.pow(half);
        if e % 2 == 0 {
            rest /= p.pow(e);
        } else {
            rest /= p.pow(e - 1);
        }
    }
    debug_assert_eq!(s * s * rest, d);
    (s, rest)
}
