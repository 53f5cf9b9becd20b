//! Dense matrices over `Q` and over `Q[u]`.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{AlgebraError, Polynomial};

/// Dense rational matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigRational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self, AlgebraError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(AlgebraError::Shape("ragged rows".into()));
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Permutation matrix sending basis vector `i` to `perm[i]`.
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = Self::zeros(n, n);
        for (i, &j) in perm.iter().enumerate() {
            m.data[j * n + i] = BigRational::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "shape mismatch");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        out
    }

    pub fn trace(&self) -> BigRational {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.rows)
    }

    pub fn to_rows(&self) -> Vec<Vec<BigRational>> {
        self.data.chunks(self.cols.max(1)).map(<[_]>::to_vec).collect()
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = self
            .to_rows()
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect();
        write!(f, "QMatrix{rows:?}")
    }
}

/// Dense matrix with polynomial entries, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Polynomial::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, Polynomial::one())
    }

    /// `p * I`.
    pub fn scalar(n: usize, p: Polynomial) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = p.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Polynomial) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Polynomial>>) -> Result<Self, AlgebraError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(AlgebraError::Shape("ragged rows".into()));
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        self.data[i * self.cols + j] = p;
    }

    pub fn add_to(&mut self, i: usize, j: usize, p: &Polynomial) {
        let slot = &mut self.data[i * self.cols + j];
        *slot = &*slot + p;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Polynomial::is_zero)
    }

    /// Largest entry degree; `None` for the zero matrix.
    pub fn max_degree(&self) -> Option<usize> {
        self.data.iter().filter_map(Polynomial::degree).max()
    }

    /// Sum over rows of the largest degree in that row, an upper bound for
    /// the degree of the determinant.
    pub fn row_degree_bound(&self) -> usize {
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .filter_map(|j| self.get(i, j).degree())
                    .max()
                    .unwrap_or(0)
            })
            .sum()
    }

    /// Same bound computed over columns.
    pub fn col_degree_bound(&self) -> usize {
        (0..self.cols)
            .map(|j| {
                (0..self.rows)
                    .filter_map(|i| self.get(i, j).degree())
                    .max()
                    .unwrap_or(0)
            })
            .sum()
    }

    fn check_same_shape(&self, rhs: &Self) -> Result<(), AlgebraError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(AlgebraError::Shape(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.check_same_shape(rhs)?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.check_same_shape(rhs)?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn neg(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        if self.cols != rhs.rows {
            return Err(AlgebraError::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.add_to(i, j, &(a * b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, p: &Polynomial) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * p).collect(),
        }
    }

    /// Divides every entry by `u^k`, failing if any entry is not divisible.
    pub fn unshift(&self, k: usize) -> Result<Self, AlgebraError> {
        let data = self
            .data
            .iter()
            .map(|a| a.unshift(k).ok_or(AlgebraError::NotDivisible))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn trace(&self) -> Polynomial {
        (0..self.rows.min(self.cols)).fold(Polynomial::zero(), |acc, i| acc + self.get(i, i))
    }

    pub fn pow(&self, n: u32) -> Result<Self, AlgebraError> {
        if !self.is_square() {
            return Err(AlgebraError::NotSquare);
        }
        let mut acc = Self::identity(self.rows);
        for _ in 0..n {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Entry-wise evaluation at a rational point.
    pub fn eval(&self, x: &BigRational) -> Vec<Vec<BigRational>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).eval(x)).collect())
            .collect()
    }

    /// Entry-wise `p(u) -> p(s u)`.
    pub fn scale_var(&self, s: &BigRational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.scale_var(s)).collect(),
        }
    }

    /// Kronecker-style embedding of a constant matrix into the `d x d`
    /// block at block position `(bi, bj)`, times `p`.
    pub fn add_block(&mut self, bi: usize, bj: usize, block: &QMatrix, p: &Polynomial) {
        let d = block.rows();
        for a in 0..d {
            for b in 0..d {
                let c = block.get(a, b);
                if !c.is_zero() {
                    self.add_to(bi * d + a, bj * d + b, &p.scale(c));
                }
            }
        }
    }

    /// First entry where the two matrices differ.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        if self.rows != other.rows || self.cols != other.cols {
            return Some((0, 0));
        }
        (0..self.rows)
            .flat_map(|i| (0..self.cols).map(move |j| (i, j)))
            .find(|&(i, j)| self.get(i, j) != other.get(i, j))
    }

    pub fn nonzero_count(&self) -> usize {
        self.data.iter().filter(|a| !a.is_zero()).count()
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PolyMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_matrix_acts_on_basis() {
        let p = QMatrix::permutation(&[1, 2, 0]);
        let q = QMatrix::permutation(&[2, 0, 1]);
        assert!(p.mul(&q).is_identity());
        assert_eq!(p.trace(), BigRational::zero());
    }

    #[test]
    fn poly_matrix_arithmetic() {
        let u = Polynomial::u();
        let m = PolyMatrix::from_rows(vec![
            vec![Polynomial::one(), u.clone()],
            vec![Polynomial::zero(), Polynomial::one()],
        ])
        .unwrap();
        let m2 = m.mul(&m).unwrap();
        assert_eq!(m2.get(0, 1), &(&u + &u));
        assert_eq!(m.pow(3).unwrap().get(0, 1), &u.scale(&BigRational::from_integer(3.into())));
        assert_eq!(m.row_degree_bound(), 1);
        assert!(m.mul(&PolyMatrix::zeros(3, 3)).is_err());
        let shifted = m.scale(&u.pow(2)).unshift(2).unwrap();
        assert_eq!(shifted, m);
        assert!(m.unshift(1).is_err());
    }
}
