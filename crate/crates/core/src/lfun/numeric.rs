//! Floating-point determinants for representations with non-rational
//! characters. Coefficients are recovered from values on the unit circle.

use num_complex::Complex64;

use super::{LError, Verdict};
use crate::algebra::numeric::{approx_eq, coefficients_from_unit_circle};
use crate::complex::QuotientComplex;
use crate::operators::{
    chamber_operator, edge_operator, one_minus, vertex_polynomial_operator, BlockOperator, ComplexRepTable,
};
use crate::rep::ComplexRepresentation;

/// Coefficient vectors, constant term first.
#[derive(Clone, Debug, PartialEq)]
pub struct NumericPolynomials {
    pub d: usize,
    pub counts: [usize; 3],
    pub chi: i64,
    pub q: u32,
    pub p0: Vec<Complex64>,
    pub p1: Vec<Complex64>,
    pub p2: Vec<Complex64>,
}

fn numeric_det(op: &BlockOperator, table: &ComplexRepTable) -> Vec<Complex64> {
    let bound = op.degree_bound() * table.dim;
    coefficients_from_unit_circle(bound, |u| op.eval_complex(table, u).det())
}

pub fn numeric_p0(c: &QuotientComplex, rho: &ComplexRepresentation) -> Result<Vec<Complex64>, LError> {
    let table = ComplexRepTable::new(c, rho)?;
    Ok(numeric_det(&vertex_polynomial_operator(c), &table))
}

pub fn numeric_polynomials(c: &QuotientComplex, rho: &ComplexRepresentation) -> Result<NumericPolynomials, LError> {
    let table = ComplexRepTable::new(c, rho)?;
    Ok(NumericPolynomials {
        d: rho.dim(),
        counts: c.counts(),
        chi: c.euler_characteristic(),
        q: c.q(),
        p0: numeric_det(&vertex_polynomial_operator(c), &table),
        p1: numeric_det(&one_minus(c, &edge_operator(c)), &table),
        p2: numeric_det(&one_minus(c, &chamber_operator(c)), &table),
    })
}

fn eval(p: &[Complex64], u: Complex64) -> Complex64 {
    p.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * u + c)
}

fn close(a: Complex64, b: Complex64, rel_tol: f64) -> bool {
    (a - b).norm() <= rel_tol * a.norm().max(b.norm()).max(1.0)
}

/// Sample points for pointwise checks, inside the unit disc and away from
/// the zeros of `1 - u^3`.
const SAMPLES: [(f64, f64); 4] = [(0.13, 0.07), (-0.21, 0.11), (0.05, -0.3), (0.31, 0.19)];

/// The functional equation for `rho` against `rho*` in floating point:
/// coefficientwise reversal of `P0`, and the quotient form
/// `eps~(1/(q^2 u))^2 R(1/(q^2 u))^2 = eps~*(u)^2 R*(u)^2` with
/// `R = P2(-u) / P1(u)`, at sample points.
pub fn check_functional_equation_numeric(
    c: &QuotientComplex,
    rho: &ComplexRepresentation,
    rel_tol: f64,
) -> Result<Vec<Verdict>, LError> {
    let a = numeric_polynomials(c, rho)?;
    let b = numeric_polynomials(c, &rho.dual())?;
    let q = f64::from(a.q);
    let dn0 = a.d * a.counts[0];
    let top = 3 * dn0;
    let sign = if dn0 % 2 == 1 { -1.0 } else { 1.0 };
    let zero = Complex64::new(0.0, 0.0);
    let reversed: Vec<Complex64> = (0..=top)
        .map(|j| {
            let p = a.p0.get(top - j).copied().unwrap_or(zero);
            p * sign * q.powi(2 * j as i32 - 3 * dn0 as i32)
        })
        .collect();
    let reversal = approx_eq(&reversed, &b.p0, rel_tol);

    let eps2 = |w: Complex64, d: usize| {
        let w3 = w * w * w;
        ((1.0 - w3 / (q * q * q)) * (1.0 - w3 * q * q * q)).powu((d * a.counts[0]) as u32)
    };
    let side = |p: &NumericPolynomials, u: Complex64| {
        let k = p.chi * p.d as i64;
        let tilde = eps2(q * u, p.d) * (1.0 - u * u * u).powi(-2 * k as i32);
        let r = eval(&p.p2, -u) / eval(&p.p1, u);
        tilde * r * r
    };
    let mut worst = 0.0_f64;
    let quotient = SAMPLES.iter().all(|&(re, im)| {
        let u = Complex64::new(re, im);
        let lhs = side(&a, 1.0 / (q * q * u));
        let rhs = side(&b, u);
        worst = worst.max((lhs - rhs).norm() / lhs.norm().max(rhs.norm()).max(1.0));
        close(lhs, rhs, rel_tol)
    });
    let self_dual = approx_eq(&a.p0, &b.p0, rel_tol);
    Ok(vec![
        Verdict::new(
            "functional_numeric.reversal",
            reversal,
            format!(
                "reversed P0 against dual P0 to relative {rel_tol}{}",
                if self_dual { "; the two P0 agree" } else { "; P0 differs from the dual's" }
            ),
        ),
        Verdict::new(
            "functional_numeric.quotient",
            quotient,
            format!("{} sample points, worst relative error {worst:.2e}", SAMPLES.len()),
        ),
    ])
}
