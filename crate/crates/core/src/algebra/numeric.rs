//! Floating-point companions to the exact routines, for representations
//! with irrational character values.

use num_complex::Complex64;

/// Dense complex square matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct CMatrix {
    n: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![Complex64::new(0.0, 0.0); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.n + j]
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: Complex64) {
        self.data[i * self.n + j] += v;
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * rhs.get(k, j);
                }
            }
        }
        out
    }

    pub fn conj_transpose(&self) -> Self {
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.data[j * n + i] = self.get(i, j).conj();
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.data[j * n + i] = self.get(i, j);
            }
        }
        out
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// LU with partial pivoting.
    pub fn det(&self) -> Complex64 {
        let n = self.n;
        let mut a = self.data.clone();
        let mut det = Complex64::new(1.0, 0.0);
        for k in 0..n {
            let p = (k..n)
                .max_by(|&x, &y| a[x * n + k].norm().total_cmp(&a[y * n + k].norm()))
                .unwrap_or(k);
            if a[p * n + k].norm() == 0.0 {
                return Complex64::new(0.0, 0.0);
            }
            if p != k {
                for j in 0..n {
                    a.swap(k * n + j, p * n + j);
                }
                det = -det;
            }
            let pivot = a[k * n + k];
            det *= pivot;
            for i in k + 1..n {
                let f = a[i * n + k] / pivot;
                if f == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in k + 1..n {
                    let t = a[k * n + j];
                    a[i * n + j] -= f * t;
                }
            }
        }
        det
    }
}

/// Recovers the coefficients of a polynomial of degree at most `bound`
/// from its values on the `(bound + 1)`-th roots of unity.
pub fn coefficients_from_unit_circle(
    bound: usize,
    mut eval: impl FnMut(Complex64) -> Complex64,
) -> Vec<Complex64> {
    let n = bound + 1;
    let roots: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / n as f64))
        .collect();
    let values: Vec<Complex64> = roots.iter().map(|&w| eval(w)).collect();
    (0..n)
        .map(|j| {
            let s: Complex64 = values
                .iter()
                .enumerate()
                .map(|(k, v)| v * roots[(n - (j * k) % n) % n])
                .sum();
            s / n as f64
        })
        .collect()
}

/// Coefficient-wise comparison with tolerance relative to the largest
/// coefficient magnitude.
pub fn approx_eq(a: &[Complex64], b: &[Complex64], rel_tol: f64) -> bool {
    let n = a.len().max(b.len());
    let zero = Complex64::new(0.0, 0.0);
    let scale = a
        .iter()
        .chain(b)
        .map(|c| c.norm())
        .fold(1.0_f64, f64::max);
    (0..n).all(|k| {
        let x = a.get(k).copied().unwrap_or(zero);
        let y = b.get(k).copied().unwrap_or(zero);
        (x - y).norm() <= rel_tol * scale
    })
}

pub fn poly_mul(a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Complex64::new(0.0, 0.0); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dft_recovers_coefficients() {
        let coeffs = [1.0, -7.0, 14.0, -8.0];
        let got = coefficients_from_unit_circle(5, |z| {
            coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
        });
        let want: Vec<Complex64> = coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect();
        assert!(approx_eq(&got, &want, 1e-12));
    }

    #[test]
    fn lu_determinant() {
        let mut m = CMatrix::zeros(2);
        m.add_to(0, 1, Complex64::new(2.0, 0.0));
        m.add_to(1, 0, Complex64::new(0.0, 1.0));
        assert!((m.det() - Complex64::new(0.0, -2.0)).norm() < 1e-15);
    }
}
