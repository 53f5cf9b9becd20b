use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::{compute_l, LError, LReport, Verdict};
use crate::algebra::{det, reverse_transform, AlgebraError, PolyMatrix, Polynomial, RationalFunction};
use crate::complex::QuotientComplex;
use crate::operators::{build_operators, OperatorSet};
use crate::rep::{induce, Representation};

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn one_minus_u3() -> Polynomial {
    Polynomial::from_ints(&[1, 0, 0, -1])
}

fn one_minus_u3_pow(k: usize) -> Polynomial {
    one_minus_u3().pow(k as u32)
}

fn matrices(name: &str, lhs: &PolyMatrix, rhs: &PolyMatrix) -> Verdict {
    if (lhs.rows(), lhs.cols()) != (rhs.rows(), rhs.cols()) {
        return Verdict::new(
            name,
            false,
            format!("shapes differ: {}x{} vs {}x{}", lhs.rows(), lhs.cols(), rhs.rows(), rhs.cols()),
        );
    }
    match lhs.first_difference(rhs) {
        None => Verdict::new(name, true, format!("{}x{} matrices agree", lhs.rows(), lhs.cols())),
        Some((i, j)) => {
            let mut v = Verdict::polynomials(name, lhs.get(i, j), rhs.get(i, j));
            v.passed = false;
            v.detail = format!("entry ({i}, {j}): {}", v.detail);
            v
        }
    }
}

fn run(name: &str, f: impl FnOnce() -> Result<Verdict, AlgebraError>) -> Verdict {
    Verdict::from_result(name, f())
}

/// `(1 - u^3)^(chi d) P1(u) = P0(u) P2(-u)`, cross-multiplied when
/// `chi < 0`.
pub fn check_main_identity(report: &LReport) -> Verdict {
    let k = report.chi * report.d as i64;
    let mut lhs = report.p1.clone();
    let mut rhs = &report.p0 * &report.p2.negate_var();
    if k >= 0 {
        lhs = &lhs * &one_minus_u3_pow(k as usize);
    } else {
        rhs = &rhs * &one_minus_u3_pow(k.unsigned_abs() as usize);
    }
    Verdict::polynomials("main_identity", &lhs, &rhs)
}

/// Observed degrees against the expected ones.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeReport {
    pub p0: usize,
    pub p1: usize,
    pub p2: usize,
    /// `3 d N0`.
    pub p0_expected: usize,
    /// `2 d N1`, the degree stated for the edge L-function.
    pub p1_stated: usize,
    /// `3 d N1`, the bound from the block degrees.
    pub p1_bound: usize,
    /// `3 d N2`.
    pub p2_bound: usize,
}

impl DegreeReport {
    /// `3 chi d + deg P1 = 3 d N0 + deg P2`.
    pub fn balanced(&self, chi: i64, d: usize) -> bool {
        3 * chi * d as i64 + self.p1 as i64 == (self.p0_expected + self.p2) as i64
    }
}

/// Degree bookkeeping. The verdicts cover `deg P0 = 3 d N0`, the bounds
/// for `P1` and `P2`, constant terms, and the balance implied by the main
/// identity; `deg P1` is reported against both `2 d N1` and `3 d N1`.
pub fn degree_report(report: &LReport) -> (DegreeReport, Vec<Verdict>) {
    let d = report.d;
    let [n0, n1, n2] = report.counts;
    let deg = |p: &Polynomial| p.degree().unwrap_or(0);
    let r = DegreeReport {
        p0: deg(&report.p0),
        p1: deg(&report.p1),
        p2: deg(&report.p2),
        p0_expected: 3 * d * n0,
        p1_stated: 2 * d * n1,
        p1_bound: 3 * d * n1,
        p2_bound: 3 * d * n2,
    };
    let unit = [&report.p0, &report.p1, &report.p2].iter().all(|p| p.coeff(0).is_one());
    let verdicts = vec![
        Verdict::new(
            "degree.p0",
            r.p0 == r.p0_expected,
            format!("deg P0 = {}, expected {}", r.p0, r.p0_expected),
        ),
        Verdict::new(
            "degree.p1",
            r.p1 <= r.p1_bound,
            format!(
                "deg P1 = {}; 2dN1 = {}, 3dN1 = {}{}",
                r.p1,
                r.p1_stated,
                r.p1_bound,
                if r.p1 == r.p1_stated { "" } else { "; differs from 2dN1" }
            ),
        ),
        Verdict::new(
            "degree.p2",
            r.p2 <= r.p2_bound,
            format!("deg P2 = {}, bound {}", r.p2, r.p2_bound),
        ),
        Verdict::new("degree.constant_terms", unit, "P0(0) = P1(0) = P2(0) = 1"),
        Verdict::new(
            "degree.balance",
            r.balanced(report.chi, d),
            format!(
                "3 chi d + deg P1 = {}, 3 d N0 + deg P2 = {}",
                3 * report.chi * d as i64 + r.p1 as i64,
                r.p0_expected + r.p2
            ),
        ),
    ];
    (r, verdicts)
}

/// `det Phi_0 = P0`, `det Phi_1 = (1 - u^3)^(d N1) P1`,
/// `det Phi_2 = (1 - u^3)^(2 d N2) P2(-u)`, and the alternating product
/// `det Phi_0 det Phi_2 / det Phi_1 = (1 - u^3)^(d (N0 - 2 N1 + 3 N2))`
/// given the main identity.
pub fn check_cohomological_theorem(ops: &OperatorSet, report: &LReport) -> Vec<Verdict> {
    let d = report.d;
    let [n0, n1, n2] = report.counts;
    let dets = ops.phis().and_then(|phis| phis.iter().map(det).collect::<Result<Vec<_>, _>>());
    let dets = match dets {
        Ok(d) => d,
        Err(e) => {
            return (0..4)
                .map(|i| Verdict::new(format!("thm14.{i}"), false, format!("could not evaluate: {e}")))
                .collect()
        }
    };
    let want = [
        report.p0.clone(),
        &one_minus_u3_pow(d * n1) * &report.p1,
        &one_minus_u3_pow(2 * d * n2) * &report.p2.negate_var(),
    ];
    let mut out: Vec<Verdict> = (0..3)
        .map(|i| Verdict::polynomials(format!("thm14.{i}"), &dets[i], &want[i]))
        .collect();
    // det Phi_0 det Phi_2 (1 - u^3)^(2 d N1) = det Phi_1 (1 - u^3)^(d (N0 + 3 N2)),
    // both sides multiplied through to stay polynomial.
    let lhs = &(&dets[0] * &dets[2]) * &one_minus_u3_pow(2 * d * n1);
    let rhs = &dets[1] * &one_minus_u3_pow(d * (n0 + 3 * n2));
    out.push(Verdict::polynomials("thm14.alternating", &lhs, &rhs));
    out
}

/// The exact matrix identities behind the cohomological theorem.
pub fn operator_identity_checks(ops: &OperatorSet) -> Vec<Verdict> {
    let n1 = ops.j_e.rows();
    let n2 = ops.j_c.rows();
    let i1 = PolyMatrix::identity(n1);
    let i2 = PolyMatrix::identity(n2);
    let phis = ops.phis();
    let mut out = Vec::new();

    out.push(run("ops.d1_d0", || {
        let z = ops.d1.mul(&ops.d0)?;
        Ok(matrices("ops.d1_d0", &z, &PolyMatrix::zeros(z.rows(), z.cols())))
    }));
    out.push(run("ops.je_squared", || {
        Ok(matrices("ops.je_squared", &ops.j_e.pow(2)?, &PolyMatrix::scalar(n1, Polynomial::monomial(rat(1), 3))))
    }));
    out.push(run("ops.det_q", || {
        Ok(Verdict::polynomials("ops.det_q", &det(&ops.q_op)?, &Polynomial::one()))
    }));
    out.push(run("ops.q_unipotent", || {
        let m = ops.q_op.sub(&i1)?;
        Ok(matrices("ops.q_unipotent", &m.pow(2)?, &PolyMatrix::zeros(n1, n1)))
    }));
    out.push(run("ops.det_one_minus_je", || {
        let lhs = det(&i1.sub(&ops.j_e)?)?;
        Ok(Verdict::polynomials("ops.det_one_minus_je", &lhs, &one_minus_u3_pow(n1 / 2)))
    }));
    out.push(run("ops.n_squared", || {
        Ok(matrices("ops.n_squared", &ops.n_op.pow(2)?, &PolyMatrix::zeros(n1, n1)))
    }));
    out.push(run("ops.phi1_factorization", || {
        let [_, phi1, _] = phis.as_ref().map_err(Clone::clone)?;
        let lhs = ops.w()?.mul(phi1)?.mul(&ops.q_op)?;
        let inner = i1.sub(&ops.je_conjugate(&ops.m_e)?)?.sub(&ops.n_op)?;
        Ok(matrices("ops.phi1_factorization", &lhs, &inner.scale(&one_minus_u3())))
    }));
    out.push(run("ops.det_phi1_core", || {
        let inner = i1.sub(&ops.je_conjugate(&ops.m_e)?)?.sub(&ops.n_op)?;
        let p1 = det(&i1.sub(&ops.m_e)?)?;
        Ok(Verdict::polynomials("ops.det_phi1_core", &det(&inner)?, &p1))
    }));
    out.push(run("ops.phi2_factorization", || {
        let [_, _, phi2] = phis.as_ref().map_err(Clone::clone)?;
        let jc2 = ops.j_c.mul(&ops.j_c)?;
        let left = i2.add(&ops.j_c.scale(&Polynomial::u()))?.add(&jc2.scale(&Polynomial::monomial(rat(1), 2)))?;
        let right = i2.add(&ops.j_c.mul(&ops.m_c)?.mul(&jc2)?)?;
        Ok(matrices("ops.phi2_factorization", phi2, &left.mul(&right)?))
    }));
    out.push(run("ops.jc_cubed", || Ok(matrices("ops.jc_cubed", &ops.j_c.pow(3)?, &i2))));
    out.push(run("ops.det_jc_cyclic", || {
        let jc2 = ops.j_c.mul(&ops.j_c)?;
        let m = i2.add(&ops.j_c.scale(&Polynomial::u()))?.add(&jc2.scale(&Polynomial::monomial(rat(1), 2)))?;
        Ok(Verdict::polynomials("ops.det_jc_cyclic", &det(&m)?, &one_minus_u3_pow(2 * n2 / 3)))
    }));
    out.push(run("ops.phi0_formula", || {
        let [phi0, _, _] = phis.as_ref().map_err(Clone::clone)?;
        Ok(matrices("ops.phi0_formula", phi0, &ops.vertex_polynomial()?))
    }));
    out.push(run("ops.cochain_map_0", || {
        let [phi0, phi1, _] = phis.as_ref().map_err(Clone::clone)?;
        Ok(matrices("ops.cochain_map_0", &ops.d0.mul(phi0)?, &phi1.mul(&ops.d0)?))
    }));
    out.push(run("ops.cochain_map_1", || {
        let [_, phi1, phi2] = phis.as_ref().map_err(Clone::clone)?;
        Ok(matrices("ops.cochain_map_1", &ops.d1.mul(phi1)?, &phi2.mul(&ops.d1)?))
    }));
    out.push(run("ops.hecke_commute", || {
        Ok(matrices("ops.hecke_commute", &ops.a1.mul(&ops.a2)?, &ops.a2.mul(&ops.a1)?))
    }));
    out
}

/// `eps(rho, w)^2 = (1 - (w/q)^3)^(d N0) (1 - (q w)^3)^(d N0)`.
pub fn epsilon_squared(q: u32, d: usize, n0: usize) -> Polynomial {
    let q = rat(i64::from(q));
    let q3 = &q * &q * &q;
    let a = Polynomial::from_coeffs(vec![rat(1), rat(0), rat(0), -q3.recip()]);
    let b = Polynomial::from_coeffs(vec![rat(1), rat(0), rat(0), -q3]);
    (&a * &b).pow((d * n0) as u32)
}

/// The reversal `P0^rho*(u) = (-1)^(d N0) q^(-3 d N0) u^(3 d N0) P0^rho(1 / (q^2 u))`.
fn reversal(report: &LReport, dual: &LReport) -> Result<Verdict, AlgebraError> {
    let dn0 = report.d * report.counts[0];
    let q = rat(i64::from(report.q));
    let rev = reverse_transform(&report.p0, &(&q * &q), 3 * dn0)?;
    let mut scalar = q.pow(3 * dn0 as i32).recip();
    if dn0 % 2 == 1 {
        scalar = -scalar;
    }
    Ok(Verdict::polynomials("functional.reversal", &rev.scale(&scalar), &dual.p0))
}

/// `eps(1/(q u))^2 L(Ind rho, 1/(q u))^2 = eps*(q u)^2 L(Ind rho*, q u)^2`,
/// with `L(Ind rho, w) = 1 / P0(w / q)`.
fn squared_epsilon_form(report: &LReport, dual: &LReport) -> Result<Verdict, AlgebraError> {
    let q = rat(i64::from(report.q));
    let n0 = report.counts[0];
    let eps = RationalFunction::from_poly(epsilon_squared(report.q, report.d, n0));
    let eps_dual = RationalFunction::from_poly(epsilon_squared(dual.q, dual.d, dual.counts[0]));
    let l = RationalFunction::from_poly(report.p0.clone()).recip()?;
    let l_dual = RationalFunction::from_poly(dual.p0.clone()).recip()?;
    let lhs = eps
        .substitute_reciprocal(&q.recip())
        .mul(&l.substitute_reciprocal(&(&q * &q).recip()).powi(2)?);
    let rhs = eps_dual.scale_var(&q).mul(&l_dual.powi(2)?);
    Ok(ratfunc_verdict("functional.epsilon", &lhs, &rhs))
}

/// The same equation rewritten through the main identity, for
/// `L_1(u) / L_2(-u) = P2(-u) / P1(u)` with
/// `eps~(rho, u) = eps(rho, q u) (1 - u^3)^(-chi d)`.
fn quotient_form(report: &LReport, dual: &LReport) -> Result<Verdict, AlgebraError> {
    let q = rat(i64::from(report.q));
    let tilde = |r: &LReport| -> Result<RationalFunction, AlgebraError> {
        let eps = RationalFunction::from_poly(epsilon_squared(r.q, r.d, r.counts[0]).scale_var(&q));
        let k = r.chi * r.d as i64;
        Ok(eps.mul(&RationalFunction::from_poly(one_minus_u3()).powi(-2 * k)?))
    };
    let ratio = |r: &LReport| RationalFunction::new(r.p2.negate_var(), r.p1.clone());
    let c = (&q * &q).recip();
    let lhs = tilde(report)?
        .substitute_reciprocal(&c)
        .mul(&ratio(report)?.substitute_reciprocal(&c).powi(2)?);
    let rhs = tilde(dual)?.mul(&ratio(dual)?.powi(2)?);
    Ok(ratfunc_verdict("functional.quotient", &lhs, &rhs))
}

fn ratfunc_verdict(name: &str, lhs: &RationalFunction, rhs: &RationalFunction) -> Verdict {
    if lhs == rhs {
        return Verdict::new(name, true, "rational functions agree");
    }
    // Compare after cross-multiplying to localise the difference.
    let a = lhs.num() * rhs.den();
    let b = rhs.num() * lhs.den();
    let mut v = Verdict::polynomials(name, &a, &b);
    v.passed = false;
    v.detail = format!("cross-multiplied: {}", v.detail);
    v
}

/// Functional-equation verdicts from the reports of `rho` and its dual.
pub fn functional_equation_checks(report: &LReport, dual: &LReport) -> Vec<Verdict> {
    vec![
        run("functional.reversal", || reversal(report, dual)),
        run("functional.epsilon", || squared_epsilon_form(report, dual)),
        run("functional.quotient", || quotient_form(report, dual)),
    ]
}

pub fn check_functional_equation(c: &QuotientComplex, rho: &Representation) -> Result<Vec<Verdict>, LError> {
    let report = compute_l(c, rho)?;
    let dual = compute_l(c, &rho.dual())?;
    Ok(functional_equation_checks(&report, &dual))
}

/// `A_2` for `rho*` is the transpose of `A_1` for `rho`.
pub fn check_transpose_duality(c: &QuotientComplex, rho: &Representation) -> Result<Verdict, LError> {
    let ops = build_operators(c, rho)?;
    let dual = build_operators(c, &rho.dual())?;
    Ok(matrices("functional.transpose", &dual.a2, &ops.a1.transpose()))
}

/// `L_i(cover, rho', u) = L_i(base, Ind rho', u)` for `i = 1, 2`, where the
/// cover's voltage group is the subgroup `rho'` is defined on.
pub fn check_induction(
    base: &QuotientComplex,
    rho_sub: &Representation,
    cover: &QuotientComplex,
) -> Result<Vec<Verdict>, LError> {
    let rho = induce(rho_sub, base.group())?;
    let down = compute_l(base, &rho)?;
    let up = compute_l(cover, rho_sub)?;
    Ok(vec![
        Verdict::polynomials("induction.p1", &up.p1, &down.p1),
        Verdict::polynomials("induction.p2", &up.p2, &down.p2),
    ])
}

/// `P_i(base)` divides `P_i(cover)` for `i = 1, 2`; returns the verdicts
/// and the quotients when the division is exact.
pub fn check_divisibility(base: &LReport, cover: &LReport) -> (Vec<Verdict>, [Option<Polynomial>; 2]) {
    let mut quotients = [None, None];
    let mut verdicts = Vec::new();
    for (i, (b, c)) in [(&base.p1, &cover.p1), (&base.p2, &cover.p2)].into_iter().enumerate() {
        let name = format!("divisibility.p{}", i + 1);
        match c.div_rem(b) {
            Ok((quo, rem)) if rem.is_zero() => {
                let integral = quo.is_integral();
                verdicts.push(Verdict::new(
                    name,
                    true,
                    format!("quotient of degree {}{}", quo.degree().unwrap_or(0), if integral { "" } else { ", not integral" }),
                ));
                quotients[i] = Some(quo);
            }
            Ok((_, rem)) => verdicts.push(Verdict::new(name, false, format!("remainder {rem}"))),
            Err(e) => verdicts.push(Verdict::new(name, false, format!("could not divide: {e}"))),
        }
    }
    (verdicts, quotients)
}

/// Integer coefficients, used for the integrality property of permutation
/// representations.
pub fn integral_coefficients(p: &Polynomial) -> Option<Vec<BigInt>> {
    p.coeffs()
        .iter()
        .map(|c| c.is_integer().then(|| c.to_integer()))
        .collect()
}
