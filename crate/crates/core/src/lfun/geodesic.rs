//! Brute-force enumeration of closed out-neighbour walks, the oracle for
//! the trace identity `Tr(M^n) = sum over closed walks of length n of
//! Tr rho(gamma) u^(length)`.

use num_rational::BigRational;
use num_traits::Zero;

use super::{LError, LReport, Verdict};
use crate::algebra::{PolyMatrix, Polynomial};
use crate::complex::{Link, QuotientComplex};
use crate::group::{Elem, FiniteGroup};
use crate::operators::{chamber_operator, edge_operator, RepTable};
use crate::rep::Representation;

/// Per-length tallies; entry `n - 1` is the sum for walks of `n` steps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeodesicTally {
    pub edge: Vec<Polynomial>,
    pub chamber: Vec<Polynomial>,
}

struct Walker<'a> {
    group: &'a FiniteGroup,
    traces: &'a [BigRational],
    out: &'a [&'a [Link]],
    weight: &'a [usize],
    start: usize,
    tally: Vec<Vec<BigRational>>,
}

impl Walker<'_> {
    fn walk(&mut self, at: usize, gamma: Elem, steps: usize, length: usize) {
        let n_max = self.tally.len();
        for l in self.out[at] {
            let g = self.group.mul(gamma, l.voltage);
            let len = length + self.weight[at];
            if l.target == self.start {
                let row = &mut self.tally[steps];
                if row.len() <= len {
                    row.resize(len + 1, BigRational::zero());
                }
                row[len] += &self.traces[g.index()];
            }
            if steps + 1 < n_max {
                self.walk(l.target, g, steps + 1, len);
            }
        }
    }
}

fn tally(group: &FiniteGroup, traces: &[BigRational], out: &[&[Link]], weight: &[usize], n_max: usize) -> Vec<Polynomial> {
    let mut totals = vec![Vec::new(); n_max];
    for start in 0..out.len() {
        let mut w = Walker {
            group,
            traces,
            out,
            weight,
            start,
            tally: vec![Vec::new(); n_max],
        };
        w.walk(start, group.identity(), 0, 0);
        for (acc, row) in totals.iter_mut().zip(w.tally) {
            let p = Polynomial::from_coeffs(row);
            *acc = (&Polynomial::from_coeffs(std::mem::take(acc)) + &p).into_coeffs();
        }
    }
    totals.into_iter().map(Polynomial::from_coeffs).collect()
}

/// Enumerates closed walks of up to `n_max` steps from every representative,
/// accumulating voltages along the way. A walk closes when it returns to the
/// representative it started from; its weight is `Tr rho(gamma)` times `u`
/// to the sum of the types of the edges it leaves (edges) or to the number
/// of steps (chambers).
pub fn geodesic_oracle(c: &QuotientComplex, rho: &Representation, n_max: usize) -> Result<GeodesicTally, LError> {
    if n_max == 0 {
        return Err(LError::Domain("n_max must be at least 1".into()));
    }
    let table = RepTable::new(c, rho)?;
    let traces: Vec<BigRational> = table.matrices.iter().map(|m| m.trace()).collect();
    let edge_out: Vec<&[Link]> = (0..c.edges().len()).map(|i| c.edge_out(i)).collect();
    let edge_weight: Vec<usize> = c.edges().iter().map(|e| e.ty.as_u8() as usize).collect();
    let chamber_out: Vec<&[Link]> = (0..c.chambers().len()).map(|i| c.chamber_out(i)).collect();
    let g = c.group();
    let edge = tally(g, &traces, &edge_out, &edge_weight, n_max);
    let chamber = tally(g, &traces, &chamber_out, &vec![1; chamber_out.len()], n_max);
    Ok(GeodesicTally { edge, chamber })
}

fn powers_traces(m: &PolyMatrix, n_max: usize) -> Result<Vec<Polynomial>, LError> {
    let mut out = Vec::with_capacity(n_max);
    let mut p = m.clone();
    for _ in 0..n_max {
        out.push(p.trace());
        p = p.mul(m)?;
    }
    Ok(out)
}

/// `Tr(M_E^n)` and `Tr(M_C^n)` against the oracle for `n = 1..=n_max`.
pub fn check_trace_identity(
    c: &QuotientComplex,
    rho: &Representation,
    n_max: usize,
) -> Result<(GeodesicTally, Vec<Verdict>), LError> {
    let t = geodesic_oracle(c, rho, n_max)?;
    let table = RepTable::new(c, rho)?;
    let me = powers_traces(&edge_operator(c).materialize(&table), n_max)?;
    let mc = powers_traces(&chamber_operator(c).materialize(&table), n_max)?;
    let mut verdicts = Vec::with_capacity(2 * n_max);
    for n in 1..=n_max {
        verdicts.push(Verdict::polynomials(format!("trace.edge.{n}"), &me[n - 1], &t.edge[n - 1]));
        verdicts.push(Verdict::polynomials(format!("trace.chamber.{n}"), &mc[n - 1], &t.chamber[n - 1]));
    }
    Ok((t, verdicts))
}

/// `u P'(u) / P(u) = -sum_n u T_n'(u) / n` to order `n_max`, where `T_n`
/// are the tallies; checked as `u P' + P sum_n u T_n' / n = 0 mod u^(n_max + 1)`.
pub fn check_log_derivative(report: &LReport, tally: &GeodesicTally) -> Vec<Verdict> {
    let one = |name: &str, p: &Polynomial, ts: &[Polynomial]| {
        let n_max = ts.len();
        let mut series = Polynomial::zero();
        for (k, t) in ts.iter().enumerate() {
            let n = BigRational::from_integer(((k + 1) as i64).into());
            series = &series + &t.derivative().shift(1).scale(&n.recip());
        }
        let lhs = (&p.derivative().shift(1) + &(p * &series)).truncate(n_max + 1);
        Verdict::polynomials(name, &lhs, &Polynomial::zero())
    };
    vec![
        one("log_derivative.edge", &report.p1, &tally.edge),
        one("log_derivative.chamber", &report.p2, &tally.chamber),
    ]
}
