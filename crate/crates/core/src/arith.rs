//! Small exact-arithmetic helpers shared by the other modules.

use alloc::vec;
use alloc::vec::Vec;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::{Error, Result};

pub type Q = Ratio<i64>;

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn gcd_all(values: impl IntoIterator<Item = u64>) -> u64 {
    values.into_iter().fold(0, gcd)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

/// Positive divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// The Möbius function.
pub fn moebius(mut n: u64) -> i64 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Determinant of a square integer matrix (row-major) by fraction-free
/// Bareiss elimination.
pub fn determinant(n: usize, entries: &[i64]) -> Result<i64> {
    let mut m: Vec<i128> = entries.iter().map(|&v| v as i128).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k * n + k] == 0 {
            let Some(swap) = (k + 1..n).find(|&r| m[r * n + k] != 0) else {
                return Ok(0);
            };
            for c in 0..n {
                m.swap(k * n + c, swap * n + c);
            }
            sign = -sign;
        }
        let pivot = m[k * n + k];
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[i * n + j]
                    .checked_mul(pivot)
                    .and_then(|a| m[i * n + k].checked_mul(m[k * n + j]).and_then(|b| a.checked_sub(b)))
                    .ok_or(Error::Overflow)?;
                m[i * n + j] = v / prev;
            }
            m[i * n + k] = 0;
        }
        prev = pivot;
    }
    i64::try_from(sign * m[n * n - 1]).map_err(|_| Error::Overflow)
}

/// Solves `A x = b` over the rationals. Returns `None` for a singular matrix.
pub fn solve(n: usize, a: &[i64], b: &[i64]) -> Option<Vec<Q>> {
    let mut m: Vec<Vec<Q>> = (0..n)
        .map(|i| {
            let mut row: Vec<Q> = a[i * n..(i + 1) * n].iter().map(|&v| Q::from_integer(v)).collect();
            row.push(Q::from_integer(b[i]));
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let inv = m[col][col].recip();
        for c in col..=n {
            m[col][c] *= inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let factor = m[r][col];
                for c in col..=n {
                    let delta = factor * m[col][c];
                    m[r][c] -= delta;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n]).collect())
}

/// Coefficients (constant term first) of the `n`-th cyclotomic polynomial.
pub fn cyclotomic(n: u64) -> Vec<i64> {
    // x^n - 1 divided by every cyclotomic factor of a proper divisor.
    let mut poly = vec![0i64; n as usize + 1];
    poly[0] = -1;
    poly[n as usize] = 1;
    for d in divisors(n) {
        if d == n {
            continue;
        }
        poly = div_exact_monic(&poly, &cyclotomic(d));
    }
    poly
}

/// Quotient of `num / den` for a monic `den` dividing `num` exactly.
fn div_exact_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dn];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dn];
        quot[i] = c;
        for (j, &dc) in den.iter().enumerate() {
            rem[i + j] -= c * dc;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quot
}

/// Reduces an integer polynomial modulo the monic polynomial `modulus`.
pub fn reduce_mod(poly: &[i64], modulus: &[i64]) -> Vec<i64> {
    let dm = modulus.len() - 1;
    let mut rem = poly.to_vec();
    if rem.len() <= dm {
        return rem;
    }
    for i in (dm..rem.len()).rev() {
        let c = rem[i];
        if c != 0 {
            for (j, &mc) in modulus.iter().enumerate() {
                rem[i - dm + j] -= c * mc;
            }
        }
    }
    rem.truncate(dm);
    rem
}

pub fn is_integer(q: &Q) -> bool {
    q.denom().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_matches_cofactor_expansion() {
        assert_eq!(determinant(3, &[2, 0, 0, 1, 3, 0, 0, 1, 5]).unwrap(), 30);
        assert_eq!(determinant(3, &[3, 1, 0, 0, 3, 1, 1, 0, 3]).unwrap(), 28);
        assert_eq!(determinant(2, &[0, 1, 1, 0]).unwrap(), -1);
        assert_eq!(determinant(2, &[1, 1, 1, 1]).unwrap(), 0);
        // zero pivot forces a row swap
        assert_eq!(determinant(3, &[0, 2, 0, 3, 0, 0, 0, 0, 5]).unwrap(), -30);
    }

    #[test]
    fn moebius_small_values() {
        let expected = [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0];
        for (i, &m) in expected.iter().enumerate() {
            assert_eq!(moebius(i as u64 + 1), m, "mu({})", i + 1);
        }
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic(1), vec![-1, 1]);
        assert_eq!(cyclotomic(2), vec![1, 1]);
        assert_eq!(cyclotomic(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(49), vec![1, 7, 49]);
    }
}
