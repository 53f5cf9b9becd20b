//! One line per acceptance criterion; exits non-zero if any fails.

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use a2zeta_core::algebra::numeric::approx_eq;
use a2zeta_core::algebra::Polynomial;
use a2zeta_core::builders::{local_lattice_oracle, q2_trivial_complex, q2_z3_complex};
use a2zeta_core::complex::{build_complex, gauge_transform, validate, EdgeType, Gauge, QuotientComplex};
use a2zeta_core::cover::{build_cover, CoverSpec};
use a2zeta_core::lfun::{self, LReport, Verdict};
use a2zeta_core::operators::build_operators;
use a2zeta_core::rep::{natural_representation, regular_representation, ComplexRepresentation, Representation};
use num_complex::Complex64;

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn(&Fixtures) -> Outcome);

struct Fixtures {
    base: QuotientComplex,
    z3: QuotientComplex,
    cover: QuotientComplex,
}

impl Fixtures {
    fn new() -> Self {
        let z3 = q2_z3_complex();
        let cover = build_cover(&CoverSpec::natural(&z3)).expect("cover").complex;
        Self {
            base: q2_trivial_complex(),
            z3,
            cover,
        }
    }

    /// (a) base with trivial rep, (b) Z/3 voltages with the permutation
    /// rep, (c) the 3-sheeted cover with trivial rep.
    fn cases(&self) -> [(&'static str, &QuotientComplex, Representation); 3] {
        [
            ("base", &self.base, Representation::trivial(self.base.group().clone())),
            ("z3", &self.z3, natural_representation(self.z3.group())),
            ("cover", &self.cover, Representation::trivial(self.cover.group().clone())),
        ]
    }
}

fn all_pass(vs: &[Verdict]) -> Result<(), String> {
    match vs.iter().find(|v| !v.passed) {
        None => Ok(()),
        Some(v) => Err(v.to_string()),
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn local_structure(f: &Fixtures) -> Outcome {
    let c = &f.base;
    let by_type = |t: EdgeType| c.edges().iter().filter(|e| e.ty == t).count();
    let (t1, t2) = (by_type(EdgeType::One), by_type(EdgeType::Two));
    ensure(t1 == 7 && t2 == 7, || format!("out-edges {t1}+{t2}"))?;
    let edge_out: Vec<usize> = (0..c.edges().len()).map(|i| c.edge_out(i).len()).collect();
    ensure(edge_out.len() == 14 && edge_out.iter().all(|&n| n == 4), || format!("|N(e)| = {edge_out:?}"))?;
    let chamber_out: Vec<usize> = (0..c.chambers().len()).map(|i| c.chamber_out(i).len()).collect();
    ensure(chamber_out.len() == 21 && chamber_out.iter().all(|&n| n == 2), || {
        format!("|N(c)| = {chamber_out:?}")
    })?;
    let mut long_side = vec![0usize; c.edges().len()];
    for ch in c.chambers() {
        long_side[ch.e02.target] += 1;
    }
    for (e, n) in c.edges().iter().zip(&long_side) {
        let expected = if e.ty == EdgeType::Two { 3 } else { 0 };
        ensure(*n == expected, || format!("{} is e02 of {n} chambers", e.id))?;
    }
    let oracle = local_lattice_oracle(2).map_err(|e| e.to_string())?;
    ensure(oracle.matches_building(), || format!("lattice oracle: {oracle:?}"))?;
    let oracle3 = local_lattice_oracle(3).map_err(|e| e.to_string())?;
    ensure(oracle3.matches_building(), || format!("lattice oracle q=3: {oracle3:?}"))?;
    Ok(
        "out-edges 7+7, |N(e)| = 4 on 14 pointed edges, |N(c)| = 2 on 21 pointed chambers, \
         each type-2 edge is e02 of 3 chambers (type-1 edges never are); lattice oracle agrees for q = 2, 3"
            .into(),
    )
}

fn trace_identity(f: &Fixtures) -> Outcome {
    let mut total = 0;
    for (name, c, rho) in &f.cases()[..2] {
        let (_, vs) = lfun::check_trace_identity(c, rho, 6).map_err(|e| format!("{name}: {e}"))?;
        all_pass(&vs).map_err(|e| format!("{name}: {e}"))?;
        total += vs.len();
    }
    Ok(format!("Tr(M^n) = geodesic tally for n = 1..6, edges and chambers, trivial and d = 3 ({total} exact comparisons)"))
}

fn main_identity(f: &Fixtures) -> Outcome {
    let mut seen = Vec::new();
    for (name, c, rho) in f.cases() {
        let r = lfun::compute_l(c, &rho).map_err(|e| format!("{name}: {e}"))?;
        let v = lfun::check_main_identity(&r);
        ensure(v.passed, || format!("{name}: {v}"))?;
        seen.push(format!("{name} (d = {}, chi = {})", r.d, r.chi));
    }
    Ok(format!("(1-u^3)^(chi d) P1(u) = P0(u) P2(-u) on {}", seen.join(", ")))
}

fn cohomological(f: &Fixtures) -> Outcome {
    for (name, c, rho) in &f.cases()[..2] {
        let r = lfun::compute_l(c, rho).map_err(|e| e.to_string())?;
        let ops = build_operators(c, rho).map_err(|e| e.to_string())?;
        all_pass(&lfun::check_cohomological_theorem(&ops, &r)).map_err(|e| format!("{name}: {e}"))?;
    }
    Ok("det Phi0 = P0, det Phi1 = (1-u^3)^(dN1) P1, det Phi2 = (1-u^3)^(2dN2) P2(-u), alternating product; base and z3".into())
}

fn operator_suite(f: &Fixtures) -> Outcome {
    let mut n = 0;
    for (name, c, rho) in &f.cases()[..2] {
        let ops = build_operators(c, rho).map_err(|e| e.to_string())?;
        let vs = lfun::operator_identity_checks(&ops);
        all_pass(&vs).map_err(|e| format!("{name}: {e}"))?;
        n = vs.len();
    }
    Ok(format!("{n} matrix identities (d1 d0 = 0, J_E^2 = u^3, det Q = 1, N^2 = 0, factorizations, cochain maps) on base and z3"))
}

fn functional_equation(f: &Fixtures) -> Outcome {
    for (name, c, rho) in &f.cases()[..2] {
        let mut vs = lfun::check_functional_equation(c, rho).map_err(|e| e.to_string())?;
        vs.push(lfun::check_transpose_duality(c, rho).map_err(|e| e.to_string())?);
        all_pass(&vs).map_err(|e| format!("{name}: {e}"))?;
    }
    let y = &f.z3;
    let zeta = Complex64::from_polar(1.0, 2.0 * PI / 3.0);
    let labels: Vec<_> = y.group().generators().iter().map(|(l, _)| (l.clone(), zeta)).collect();
    let chi = ComplexRepresentation::character(y.group().clone(), &labels).map_err(|e| e.to_string())?;
    let p = lfun::numeric_p0(y, &chi).map_err(|e| e.to_string())?;
    let p_dual = lfun::numeric_p0(y, &chi.dual()).map_err(|e| e.to_string())?;
    ensure(!approx_eq(&p, &p_dual, 1e-9), || "the character is self-dual".into())?;
    let vs = lfun::check_functional_equation_numeric(y, &chi, 1e-9).map_err(|e| e.to_string())?;
    all_pass(&vs)?;
    Ok(format!(
        "reversal with (-q^3 u^3)^(dN0), squared epsilon form and transpose duality exact for trivial and permutation reps; \
         character of Z/3 against its dual within 1e-9 ({})",
        vs[1].detail
    ))
}

fn induction(f: &Fixtures) -> Outcome {
    let sub = Representation::trivial(f.cover.group().clone());
    all_pass(&lfun::check_induction(&f.z3, &sub, &f.cover).map_err(|e| e.to_string())?)?;
    let up = lfun::compute_l(&f.cover, &sub).map_err(|e| e.to_string())?;
    let regular = lfun::compute_l(&f.z3, &regular_representation(f.z3.group())).map_err(|e| e.to_string())?;
    ensure(up.p1 == regular.p1 && up.p2 == regular.p2, || "cover differs from the regular representation".into())?;
    let base = lfun::compute_l(&f.base, &Representation::trivial(f.base.group().clone())).map_err(|e| e.to_string())?;
    let (vs, quotients) = lfun::check_divisibility(&base, &up);
    all_pass(&vs)?;
    let shown: Vec<String> = quotients
        .iter()
        .enumerate()
        .map(|(i, q)| {
            let q = q.as_ref().expect("exact quotient");
            format!("P{}: degree {}, leading {}", i + 1, q.degree().unwrap_or(0), q.coeff(q.degree().unwrap_or(0)))
        })
        .collect();
    Ok(format!(
        "Z_i(cover) = L_i(z3, regular) for i = 1, 2; base divides cover with quotients [{}]",
        shown.join("; ")
    ))
}

fn degrees(f: &Fixtures) -> Outcome {
    let mut seen = Vec::new();
    for (name, c, rho) in f.cases() {
        let r = lfun::compute_l(c, &rho).map_err(|e| e.to_string())?;
        let (d, vs) = lfun::degree_report(&r);
        all_pass(&vs).map_err(|e| format!("{name}: {e}"))?;
        seen.push(format!(
            "{name}: deg P0 = {}, deg P1 = {} (2dN1 = {}), deg P2 = {}",
            d.p0, d.p1, d.p1_stated, d.p2
        ));
    }
    Ok(format!(
        "deg P0 = 3dN0 and 3 chi d + deg P1 = 3dN0 + deg P2; {}; deg P1 = 3dN1 differs from the stated 2dN1",
        seen.join("; ")
    ))
}

fn checks_for(c: &QuotientComplex, rho: &Representation) -> Result<(LReport, Vec<Verdict>), String> {
    let r = lfun::compute_l(c, rho).map_err(|e| e.to_string())?;
    let ops = build_operators(c, rho).map_err(|e| e.to_string())?;
    let mut vs = vec![lfun::check_main_identity(&r)];
    vs.extend(lfun::degree_report(&r).1);
    vs.extend(lfun::check_cohomological_theorem(&ops, &r));
    vs.extend(lfun::operator_identity_checks(&ops));
    vs.extend(lfun::check_functional_equation(c, rho).map_err(|e| e.to_string())?);
    let (tally, tv) = lfun::check_trace_identity(c, rho, 4).map_err(|e| e.to_string())?;
    vs.extend(tv);
    vs.extend(lfun::check_log_derivative(&r, &tally));
    Ok((r, vs))
}

fn robustness(f: &Fixtures) -> Outcome {
    let c = &f.z3;
    let rho = natural_representation(c.group());
    let (r, vs) = checks_for(c, &rho)?;
    let gauge = Gauge::random(c, 20240917);
    ensure(gauge != Gauge::identity(c), || "random gauge is trivial".into())?;
    let moved = gauge_transform(c, &gauge).map_err(|e| e.to_string())?;
    ensure(moved != *c, || "gauge left the complex unchanged".into())?;
    ensure(validate(&moved).passed(), || format!("{}", validate(&moved)))?;
    let (r2, vs2) = checks_for(&moved, &rho)?;
    ensure(r == r2, || "polynomials changed under the gauge".into())?;
    let key = |v: &Verdict| (v.name.clone(), v.passed, v.detail.clone());
    ensure(vs.iter().map(key).eq(vs2.iter().map(key)), || "verdicts changed under the gauge".into())?;
    all_pass(&vs)?;

    let mut tampered = r.clone();
    tampered.p1 = &tampered.p1 + &Polynomial::from_ints(&[0, 0, 0, 1]);
    let v = lfun::check_main_identity(&tampered);
    ensure(!v.passed && v.first_difference == Some(3), || format!("tampered coefficient: {v}"))?;

    let mut data = f.base.to_data();
    data.chambers[0].e12 = data.chambers[1].e12.clone();
    let broken_id = data.chambers[0].id.clone();
    let diagnosis = match build_complex(&data) {
        Err(e) => e.to_string(),
        Ok(b) => validate(&b).failures().map(|c| format!("{}: {}", c.name, c.offenders.join(", "))).collect::<Vec<_>>().join("; "),
    };
    ensure(diagnosis.contains(&broken_id), || format!("broken face map not localized: {diagnosis:?}"))?;
    Ok(format!(
        "{} verdicts and P0, P1, P2 unchanged under a random gauge; tampered u^3 coefficient caught ({}); \
         broken face map caught at {broken_id}",
        vs.len(),
        v.detail
    ))
}

fn main() {
    let f = Fixtures::new();
    let criteria: [Criterion; 9] = [
        ("local structure", Duration::from_secs(1), local_structure),
        ("trace identity", Duration::from_secs(5), trace_identity),
        ("main identity", Duration::from_secs(10), main_identity),
        ("cohomological theorem", Duration::from_secs(10), cohomological),
        ("operator identities", Duration::from_secs(5), operator_suite),
        ("functional equation", Duration::from_secs(2), functional_equation),
        ("induction and divisibility", Duration::from_secs(15), induction),
        ("degree bookkeeping", Duration::from_secs(60), degrees),
        ("robustness", Duration::from_secs(60), robustness),
    ];
    let mut failed = 0;
    for (i, (name, budget, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run(&f);
        let took = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if took <= budget => (true, d),
            Ok(d) => (false, format!("{d}; over the {budget:?} budget")),
            Err(e) => (false, e),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "{} {} {name} ({:.2}s): {detail}",
            if ok { "PASS" } else { "FAIL" },
            i + 1,
            took.as_secs_f64()
        );
    }
    if failed > 0 {
        println!("{failed} of 9 criteria failed");
        std::process::exit(1);
    }
}
