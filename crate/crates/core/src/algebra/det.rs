//! Exact determinants of polynomial matrices.
//!
//! The main entry point splits the matrix into independent blocks. Small
//! blocks are eliminated directly over `Q[u]`; larger ones go through
//! [`det_modular`]. [`det_interpolate`] is an independent exact route,
//! evaluating at `0, 1, -1, 2, -2, ...` and interpolating over `Q`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::{det_modular, AlgebraError, PolyMatrix, Polynomial};

/// Blocks at or below this size go straight to polynomial elimination.
const SMALL_BLOCK: usize = 4;

/// `det(m)` as an exact polynomial.
pub fn det(m: &PolyMatrix) -> Result<Polynomial, AlgebraError> {
    if !m.is_square() {
        return Err(AlgebraError::NotSquare);
    }
    let n = m.rows();
    if n == 0 {
        return Ok(Polynomial::one());
    }
    let Some(blocks) = components(m) else {
        return Ok(Polynomial::zero());
    };
    let mut row_order = Vec::with_capacity(n);
    let mut col_order = Vec::with_capacity(n);
    for (r, c) in &blocks {
        row_order.extend_from_slice(r);
        col_order.extend_from_slice(c);
    }
    let sign = perm_sign(&row_order) * perm_sign(&col_order);
    let mut acc = Polynomial::from_int(sign);
    for (r, c) in &blocks {
        let sub = PolyMatrix::from_fn(r.len(), c.len(), |i, j| m.get(r[i], c[j]).clone());
        let d = if sub.rows() <= SMALL_BLOCK {
            det_bareiss(&sub)?
        } else {
            det_modular(&sub)?
        };
        if d.is_zero() {
            return Ok(d);
        }
        acc = acc * d;
    }
    Ok(acc)
}

/// Determinant by evaluation at `D + 1` integer points and interpolation,
/// where `D` bounds the degree. One extra point is used as a self-check.
pub fn det_interpolate(m: &PolyMatrix) -> Result<Polynomial, AlgebraError> {
    if !m.is_square() {
        return Err(AlgebraError::NotSquare);
    }
    let bound = m.row_degree_bound().min(m.col_degree_bound());
    let points: Vec<BigRational> = (0..bound + 2).map(|k| sample_point(k).into()).collect();
    let values: Vec<BigRational> = points.par_iter().map(|x| det_at(m, x)).collect();
    let p = interpolate(&points[..=bound], &values[..=bound])?;
    if p.eval(&points[bound + 1]) != values[bound + 1] {
        return Err(AlgebraError::Internal(
            "interpolated determinant failed its check point".into(),
        ));
    }
    Ok(p)
}

/// Fraction-free elimination directly over `Q[u]`.
pub fn det_bareiss(m: &PolyMatrix) -> Result<Polynomial, AlgebraError> {
    if !m.is_square() {
        return Err(AlgebraError::NotSquare);
    }
    let n = m.rows();
    if n == 0 {
        return Ok(Polynomial::one());
    }
    let mut a: Vec<Vec<Polynomial>> = (0..n)
        .map(|i| (0..n).map(|j| m.get(i, j).clone()).collect())
        .collect();
    let mut negate = false;
    let mut prev = Polynomial::one();
    for k in 0..n - 1 {
        let Some(p) = (k..n)
            .filter(|&i| !a[i][k].is_zero())
            .min_by_key(|&i| a[i][k].degree())
        else {
            return Ok(Polynomial::zero());
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = t.exact_div(&prev)?;
            }
            a[i][k] = Polynomial::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -d } else { d })
}

/// Determinant of a rational matrix.
pub fn det_rational(rows: &[Vec<BigRational>]) -> BigRational {
    let mut scale = BigInt::one();
    let ints: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            let l = row
                .iter()
                .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            scale *= &l;
            row.iter()
                .map(|c| c.numer() * (&l / c.denom()))
                .collect()
        })
        .collect();
    BigRational::new(bareiss_int(ints), scale)
}

/// Fraction-free Gaussian elimination on an integer matrix.
pub fn bareiss_int(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for row in bottom.iter_mut() {
            let lead = std::mem::take(&mut row[k]);
            for j in k + 1..n {
                let mut t = &row[j] * pivot;
                if !lead.is_zero() && !pivot_row[j].is_zero() {
                    t -= &lead * &pivot_row[j];
                }
                row[j] = if prev.is_one() { t } else { t / &prev };
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Newton interpolation through `(xs[i], ys[i])`, returned in the power basis.
pub fn interpolate(xs: &[BigRational], ys: &[BigRational]) -> Result<Polynomial, AlgebraError> {
    if xs.len() != ys.len() {
        return Err(AlgebraError::Shape("interpolation data length mismatch".into()));
    }
    let n = xs.len();
    let mut dd: Vec<BigRational> = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            let denom = &xs[i] - &xs[i - level];
            if denom.is_zero() {
                return Err(AlgebraError::Internal("repeated interpolation node".into()));
            }
            dd[i] = (&dd[i] - &dd[i - 1]) / denom;
        }
    }
    // Horner in the Newton basis.
    let mut acc = Polynomial::zero();
    for i in (0..n).rev() {
        let lin = Polynomial::from_coeffs(vec![-xs[i].clone(), BigRational::one()]);
        acc = acc * lin + Polynomial::constant(dd[i].clone());
    }
    Ok(acc)
}

fn sample_point(k: usize) -> BigInt {
    let half = BigInt::from(k.div_ceil(2));
    if k % 2 == 1 {
        half
    } else {
        -half
    }
}

fn det_at(m: &PolyMatrix, x: &BigRational) -> BigRational {
    det_rational(&m.eval(x))
}

/// Splits rows and columns into connected components of the nonzero
/// pattern. Returns `None` when some component is not square, which forces
/// a zero determinant.
fn components(m: &PolyMatrix) -> Option<Vec<(Vec<usize>, Vec<usize>)>> {
    let n = m.rows();
    // Union-find over rows 0..n and columns n..2n.
    let mut parent: Vec<usize> = (0..2 * n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for i in 0..n {
        for j in 0..n {
            if !m.get(i, j).is_zero() {
                let (a, b) = (find(&mut parent, i), find(&mut parent, n + j));
                if a != b {
                    parent[a] = b;
                }
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, (Vec<usize>, Vec<usize>)> = Default::default();
    for x in 0..2 * n {
        let r = find(&mut parent, x);
        let slot = groups.entry(r).or_default();
        if x < n {
            slot.0.push(x);
        } else {
            slot.1.push(x - n);
        }
    }
    let mut blocks: Vec<_> = groups.into_values().collect();
    if blocks.iter().any(|(r, c)| r.len() != c.len()) {
        return None;
    }
    blocks.sort_by_key(|(r, _)| r[0]);
    Some(blocks)
}

fn perm_sign(order: &[usize]) -> i64 {
    let mut seen = vec![false; order.len()];
    let mut sign = 1;
    for start in 0..order.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = order[x];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn small_known_determinant() {
        // [[1 - u, u], [u^2, 1]] has determinant 1 - u - u^3.
        let m = PolyMatrix::from_rows(vec![vec![p(&[1, -1]), p(&[0, 1])], vec![p(&[0, 0, 1]), p(&[1])]]).unwrap();
        let want = p(&[1, -1, 0, -1]);
        assert_eq!(det(&m).unwrap(), want);
        assert_eq!(det_bareiss(&m).unwrap(), want);
        assert_eq!(det_interpolate(&m).unwrap(), want);
    }

    #[test]
    fn block_structure_with_permutation_sign() {
        // Anti-diagonal 6x6 with entries 1 + k u: det = -prod(1 + k u).
        let n = 6;
        let m = PolyMatrix::from_fn(n, n, |i, j| if i + j == n - 1 { p(&[1, i as i64 + 1]) } else { Polynomial::zero() });
        let want = (0..n).fold(p(&[1]), |acc, i| acc * p(&[1, i as i64 + 1]));
        assert_eq!(det(&m).unwrap(), -want.clone());
        assert_eq!(det_bareiss(&m).unwrap(), -want);
    }

    #[test]
    fn singular_patterns() {
        let m = PolyMatrix::from_fn(5, 5, |i, j| if j == 0 { Polynomial::zero() } else { p(&[i as i64, j as i64]) });
        assert!(det(&m).unwrap().is_zero());
        let r = PolyMatrix::from_fn(5, 5, |i, j| p(&[(i * j) as i64 + 1, 1]));
        assert_eq!(det(&r).unwrap(), det_bareiss(&r).unwrap());
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let target = p(&[3, 0, -2, 7, 1]);
        let xs: Vec<BigRational> = (0..5).map(|k| sample_point(k).into()).collect();
        let ys: Vec<BigRational> = xs.iter().map(|x| target.eval(x)).collect();
        assert_eq!(interpolate(&xs, &ys).unwrap(), target);
    }

    #[test]
    fn rational_determinant() {
        let half = BigRational::new(1.into(), 2.into());
        let rows = vec![
            vec![half.clone(), BigRational::from_integer(1.into())],
            vec![BigRational::from_integer(3.into()), half.clone()],
        ];
        assert_eq!(det_rational(&rows), BigRational::new((-11).into(), 4.into()));
    }
}
