//! Determinants of polynomial matrices modulo word-sized primes, lifted by
//! Chinese remaindering.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use super::{AlgebraError, PolyMatrix, Polynomial};

/// Miller-Rabin with bases 2, 3, 5, 7, deterministic below 3215031751.
fn is_prime(n: u64) -> bool {
    if n < 2 || n % 2 == 0 {
        return n == 2;
    }
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    [2u64, 3, 5, 7].iter().all(|&a| {
        if a % n == 0 {
            return true;
        }
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            return true;
        }
        for _ in 1..s {
            x = x * x % n;
            if x == n - 1 {
                return true;
            }
        }
        false
    })
}

/// Primes below `2^31`, largest first.
fn primes(count: usize) -> Vec<u64> {
    (1..(1u64 << 31)).rev().filter(|&n| is_prime(n)).take(count).collect()
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn reduce(x: &BigInt, p: u64) -> u64 {
    let r = x.mod_floor(&BigInt::from(p));
    r.iter_u64_digits().next().unwrap_or(0)
}

/// Integer matrix with each row scaled by the lcm of its denominators.
struct Cleared {
    n: usize,
    /// Row-major entries, each a coefficient list.
    entries: Vec<Vec<BigInt>>,
    /// Product of the row scalings.
    scale: BigInt,
}

fn clear_denominators(m: &PolyMatrix) -> Cleared {
    let n = m.rows();
    let mut entries = Vec::with_capacity(n * n);
    let mut scale = BigInt::one();
    for i in 0..n {
        let l = (0..n)
            .flat_map(|j| m.get(i, j).coeffs().iter())
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        for j in 0..n {
            entries.push(
                m.get(i, j)
                    .coeffs()
                    .iter()
                    .map(|c| c.numer() * (&l / c.denom()))
                    .collect(),
            );
        }
        scale *= l;
    }
    Cleared { n, entries, scale }
}

/// Every coefficient of the determinant is at most the product over rows of
/// the sums of absolute coefficient values.
fn coefficient_bound(c: &Cleared) -> BigInt {
    (0..c.n)
        .map(|i| {
            c.entries[i * c.n..(i + 1) * c.n]
                .iter()
                .flatten()
                .fold(BigInt::zero(), |acc, x| acc + x.abs())
        })
        .product()
}

fn det_mod(a: &mut [u64], n: usize, p: u64) -> u64 {
    let mut det = 1u64;
    for k in 0..n {
        let Some(piv) = (k..n).find(|&i| a[i * n + k] != 0) else {
            return 0;
        };
        if piv != k {
            for j in 0..n {
                a.swap(piv * n + j, k * n + j);
            }
            det = p - det;
        }
        let d = a[k * n + k];
        det = det * d % p;
        let inv = inv_mod(d, p);
        for i in k + 1..n {
            let f = a[i * n + k] * inv % p;
            if f == 0 {
                continue;
            }
            for j in k + 1..n {
                let t = f * a[k * n + j] % p;
                a[i * n + j] = (a[i * n + j] + p - t) % p;
            }
        }
    }
    det % p
}

/// Coefficients of `det` modulo `p`, from its values at `0..=bound`.
fn det_poly_mod(c: &Cleared, bound: usize, p: u64) -> Vec<u64> {
    let n = c.n;
    let entries: Vec<Vec<u64>> = c.entries.iter().map(|e| e.iter().map(|x| reduce(x, p)).collect()).collect();
    let xs: Vec<u64> = (0..=bound as u64).collect();
    let ys: Vec<u64> = xs
        .iter()
        .map(|&x| {
            let mut a: Vec<u64> = entries
                .iter()
                .map(|e| e.iter().rev().fold(0, |acc, &k| (acc * x + k) % p))
                .collect();
            det_mod(&mut a, n, p)
        })
        .collect();
    // Newton divided differences, then expansion into the power basis.
    let mut dd = ys;
    for level in 1..xs.len() {
        for i in (level..xs.len()).rev() {
            let num = (dd[i] + p - dd[i - 1]) % p;
            dd[i] = num * inv_mod(xs[i] - xs[i - level], p) % p;
        }
    }
    let mut acc = vec![0u64; xs.len()];
    for i in (0..xs.len()).rev() {
        // acc = acc * (u - x_i) + dd[i]
        let mut next = vec![0u64; xs.len()];
        for k in 0..xs.len() - 1 {
            next[k + 1] = (next[k + 1] + acc[k]) % p;
            next[k] = (next[k] + p - acc[k] * xs[i] % p) % p;
        }
        next[0] = (next[0] + dd[i]) % p;
        acc = next;
    }
    acc
}

/// `det(m)` by reduction modulo enough primes to exceed twice the
/// coefficient bound, plus one more prime the lifted result must agree with.
pub fn det_modular(m: &PolyMatrix) -> Result<Polynomial, AlgebraError> {
    if !m.is_square() {
        return Err(AlgebraError::NotSquare);
    }
    if m.rows() == 0 {
        return Ok(Polynomial::one());
    }
    let c = clear_denominators(m);
    let bound = m.row_degree_bound().min(m.col_degree_bound());
    let limit: BigInt = coefficient_bound(&c) * 2 + 1;
    let needed = (limit.bits() as usize).div_ceil(30) + 1;
    let ps = primes(needed + 1);
    if (ps[needed] as usize) <= bound + 1 {
        return Err(AlgebraError::Internal("degree too large for word-sized primes".into()));
    }
    let residues: Vec<Vec<u64>> = ps.par_iter().map(|&p| det_poly_mod(&c, bound, p)).collect();

    let mut modulus = BigInt::one();
    let mut coeffs = vec![BigInt::zero(); bound + 1];
    for (&p, r) in ps[..needed].iter().zip(&residues) {
        let inv = inv_mod(reduce(&modulus, p), p);
        for (x, &rk) in coeffs.iter_mut().zip(r) {
            let delta = (rk + p - reduce(x, p)) % p * inv % p;
            *x += &modulus * BigInt::from(delta);
        }
        modulus *= BigInt::from(p);
    }
    let half = &modulus >> 1;
    for x in coeffs.iter_mut() {
        if *x > half {
            *x -= &modulus;
        }
    }
    let check = ps[needed];
    if coeffs.iter().zip(&residues[needed]).any(|(x, &r)| reduce(x, check) != r) {
        return Err(AlgebraError::Internal("modular determinant failed its check prime".into()));
    }
    let scale = BigRational::from_integer(c.scale);
    Ok(Polynomial::from_coeffs(
        coeffs
            .into_iter()
            .map(|x| BigRational::from_integer(x) / &scale)
            .collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_are_prime() {
        let ps = primes(5);
        assert_eq!(ps[0], 2147483647);
        assert!(ps.windows(2).all(|w| w[0] > w[1]));
        assert!(!is_prime(2147483649));
    }

    #[test]
    fn agrees_with_rational_elimination() {
        let p = |c: &[i64]| Polynomial::from_ints(c);
        let m = PolyMatrix::from_fn(6, 6, |i, j| {
            let a = ((i * 7 + j * 3) % 5) as i64 - 2;
            let b = ((i + 2 * j) % 3) as i64 - 1;
            p(&[if i == j { 1 } else { 0 }, a, b * 1000])
        });
        assert_eq!(det_modular(&m).unwrap(), super::super::det_bareiss(&m).unwrap());
        let half = m.scale(&Polynomial::constant(BigRational::new(1.into(), 2.into())));
        assert_eq!(det_modular(&half).unwrap(), super::super::det_bareiss(&half).unwrap());
    }
}
