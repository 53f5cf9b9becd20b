//! L-functions as determinants, and the identities relating them.
//!
//! For a quotient `X` and a `d`-dimensional representation `rho`:
//!
//! * `P0(u) = det(I - A_1 u + q A_2 u^2 - q^3 u^3 I)`, the reciprocal of
//!   `L(Ind rho, q u)`;
//! * `P1(u) = det(I - M_E)`, the reciprocal of `L_1(X, rho, u)`;
//! * `P2(u) = det(I - M_C)`, the reciprocal of `L_2(X, rho, u)`.
//!
//! The main identity is `(1 - u^3)^(chi d) P1(u) = P0(u) P2(-u)`.

mod checks;
mod geodesic;
mod numeric;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

pub use checks::{
    check_cohomological_theorem, check_divisibility, check_functional_equation, check_induction,
    check_main_identity, check_transpose_duality, degree_report, epsilon_squared, functional_equation_checks,
    integral_coefficients, operator_identity_checks, DegreeReport,
};
pub use geodesic::{check_log_derivative, check_trace_identity, geodesic_oracle, GeodesicTally};
pub use numeric::{check_functional_equation_numeric, numeric_p0, numeric_polynomials, NumericPolynomials};

use crate::algebra::{det, AlgebraError, Polynomial};
use crate::complex::QuotientComplex;
use crate::operators::{
    chamber_operator, edge_operator, one_minus, vertex_polynomial_operator, OperatorError, RepTable,
};
use crate::rep::{RepError, Representation};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LError {
    #[error(transparent)]
    Operator(#[from] OperatorError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error("{0}")]
    Domain(String),
}

/// The three polynomials for one complex and representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LReport {
    pub q: u32,
    pub d: usize,
    /// `(N0, N1, N2)`.
    pub counts: [usize; 3],
    pub chi: i64,
    pub p0: Polynomial,
    pub p1: Polynomial,
    pub p2: Polynomial,
}

pub fn compute_l(c: &QuotientComplex, rho: &Representation) -> Result<LReport, LError> {
    let table = RepTable::new(c, rho)?;
    let p0 = det(&vertex_polynomial_operator(c).materialize(&table))?;
    let p1 = det(&one_minus(c, &edge_operator(c)).materialize(&table))?;
    let p2 = det(&one_minus(c, &chamber_operator(c)).materialize(&table))?;
    Ok(LReport {
        q: c.q(),
        d: rho.dim(),
        counts: c.counts(),
        chi: c.euler_characteristic(),
        p0,
        p1,
        p2,
    })
}

/// Outcome of one identity check. On failure `lhs`, `rhs` and
/// `first_difference` localise the mismatch when both sides are
/// polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lhs: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rhs: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_difference: Option<usize>,
}

impl Verdict {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed,
            detail: detail.into(),
            lhs: None,
            rhs: None,
            first_difference: None,
        }
    }

    pub fn polynomials(name: impl Into<String>, lhs: &Polynomial, rhs: &Polynomial) -> Self {
        match lhs.first_difference(rhs) {
            None => Self::new(name, true, format!("both sides equal {lhs}")),
            Some(k) => Self {
                lhs: Some(lhs.to_strings()),
                rhs: Some(rhs.to_strings()),
                first_difference: Some(k),
                ..Self::new(
                    name,
                    false,
                    format!("coefficients of u^{k} differ: {} vs {}", lhs.coeff(k), rhs.coeff(k)),
                )
            },
        }
    }

    pub fn from_result(name: impl Into<String>, r: Result<Verdict, AlgebraError>) -> Self {
        let name = name.into();
        match r {
            Ok(v) => v,
            Err(e) => Self::new(name, false, format!("could not evaluate: {e}")),
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} {}: {}", if self.passed { "PASS" } else { "FAIL" }, self.name, self.detail)
    }
}

/// JSON shape of a report. `checks` condenses the verdicts by family (see
/// [`summarize`]); `verdicts` keeps every one with its diagnostics.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportData {
    pub q: u32,
    pub d: usize,
    #[serde(rename = "N")]
    pub n: [usize; 3],
    pub chi: i64,
    #[serde(rename = "P0")]
    pub p0: Vec<String>,
    #[serde(rename = "P1")]
    pub p1: Vec<String>,
    #[serde(rename = "P2")]
    pub p2: Vec<String>,
    pub degrees: [usize; 3],
    pub checks: BTreeMap<String, serde_json::Value>,
    #[serde(default)]
    pub verdicts: Vec<Verdict>,
}

/// Condenses verdict names `family[.part[.n]]` into the report's `checks`
/// map: `thm14` becomes `[phi0, phi1, phi2]` with the alternating product
/// under `thm14_alternating`, `trace` becomes `{n: bool}` over edges and
/// chambers, and any other family becomes one boolean.
pub fn summarize(verdicts: &[Verdict]) -> BTreeMap<String, serde_json::Value> {
    use serde_json::Value;
    let mut families: BTreeMap<String, bool> = BTreeMap::new();
    let mut thm14 = [None; 3];
    let mut trace: BTreeMap<usize, bool> = BTreeMap::new();
    for v in verdicts {
        let mut parts = v.name.split('.');
        let family = parts.next().unwrap_or_default();
        match family {
            "thm14" => match parts.next().and_then(|p| p.parse::<usize>().ok()) {
                Some(i) if i < 3 => thm14[i] = Some(v.passed),
                _ => *families.entry("thm14_alternating".into()).or_insert(true) &= v.passed,
            },
            "trace" => {
                let n = parts.next_back().and_then(|p| p.parse::<usize>().ok()).unwrap_or(0);
                *trace.entry(n).or_insert(true) &= v.passed;
            }
            _ => *families.entry(family.to_string()).or_insert(true) &= v.passed,
        }
    }
    let mut out: BTreeMap<String, Value> = families.into_iter().map(|(k, b)| (k, Value::Bool(b))).collect();
    if thm14.iter().any(Option::is_some) {
        out.insert(
            "thm14".into(),
            Value::Array(thm14.iter().map(|b| b.map_or(Value::Null, Value::Bool)).collect()),
        );
    }
    if !trace.is_empty() {
        out.insert(
            "trace".into(),
            Value::Object(trace.into_iter().map(|(n, b)| (n.to_string(), Value::Bool(b))).collect()),
        );
    }
    out
}

impl LReport {
    pub fn to_data(&self, verdicts: &[Verdict]) -> ReportData {
        let deg = |p: &Polynomial| p.degree().unwrap_or(0);
        ReportData {
            q: self.q,
            d: self.d,
            n: self.counts,
            chi: self.chi,
            p0: self.p0.to_strings(),
            p1: self.p1.to_strings(),
            p2: self.p2.to_strings(),
            degrees: [deg(&self.p0), deg(&self.p1), deg(&self.p2)],
            checks: summarize(verdicts),
            verdicts: verdicts.to_vec(),
        }
    }

    pub fn from_data(data: &ReportData) -> Result<Self, AlgebraError> {
        Ok(Self {
            q: data.q,
            d: data.d,
            counts: data.n,
            chi: data.chi,
            p0: Polynomial::parse_strings(&data.p0)?,
            p1: Polynomial::parse_strings(&data.p1)?,
            p2: Polynomial::parse_strings(&data.p2)?,
        })
    }
}
