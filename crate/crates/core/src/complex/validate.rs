//! Structural checks on a quotient complex.

use std::collections::BTreeSet;

use super::{derive_chamber_out, derive_edge_out, EdgeType, Link, QuotientComplex};

/// One named check and the representatives that fail it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub offenders: Vec<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.offenders.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl std::fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for c in &self.checks {
            if c.passed() {
                writeln!(f, "ok    {}", c.name)?;
            } else {
                let shown: Vec<&str> = c.offenders.iter().take(8).map(String::as_str).collect();
                writeln!(f, "FAIL  {} ({} offenders: {})", c.name, c.offenders.len(), shown.join(", "))?;
            }
        }
        Ok(())
    }
}

/// Runs every structural check. Never panics on malformed input.
pub fn validate(c: &QuotientComplex) -> ValidationReport {
    let q = c.q() as usize;
    let g = c.group();
    let edges = c.edges();
    let chambers = c.chambers();
    let vname = |i: usize| c.vertices()[i].clone();
    let mut checks = Vec::new();
    let mut push = |name: &'static str, offenders: Vec<String>| checks.push(Check { name, offenders });

    let mut degenerate = Vec::new();
    if c.vertices().is_empty() {
        degenerate.push("no vertices".to_string());
    }
    if chambers.is_empty() {
        degenerate.push("no chambers".to_string());
    }
    push("nonempty", degenerate);

    let mut sizes = Vec::new();
    let n1 = edges.iter().filter(|e| e.ty == EdgeType::One).count();
    let n2 = edges.len() - n1;
    if n1 != n2 {
        sizes.push(format!("{n1} type-1 edges vs {n2} type-2 edges"));
    }
    if chambers.len() % 3 != 0 {
        sizes.push(format!("{} pointed chambers is not a multiple of 3", chambers.len()));
    }
    if chambers.len() != (q + 1) * n1 {
        sizes.push(format!("{} pointed chambers, expected (q+1) * {n1}", chambers.len()));
    }
    push("simplex_counts", sizes);

    let star = q * q + q + 1;
    let mut stars = Vec::new();
    for v in 0..c.vertices().len() {
        for ty in [EdgeType::One, EdgeType::Two] {
            let n = edges.iter().filter(|e| e.ty == ty && e.tail.target == v).count();
            if n != star {
                stars.push(format!("{}: {n} outgoing type-{} edges", vname(v), ty.as_u8()));
            }
        }
    }
    push("vertex_star", stars);

    let mut opp_bad = Vec::new();
    for (i, e) in edges.iter().enumerate() {
        let o = &edges[e.opp.target];
        let back = o.opp;
        if e.opp.target == i {
            opp_bad.push(format!("{}: opposite is itself", e.id));
            continue;
        }
        if o.ty != e.ty.opposite() {
            opp_bad.push(format!("{}: opposite has the same type", e.id));
        }
        if back.target != i || g.mul(e.opp.voltage, back.voltage) != g.identity() {
            opp_bad.push(format!("{}: opposite is not an involution", e.id));
        }
        if c.translate(e.opp.voltage, o.tail) != e.head || c.translate(e.opp.voltage, o.head) != e.tail {
            opp_bad.push(format!("{}: opposite has mismatched endpoints", e.id));
        }
    }
    push("edge_opposite", opp_bad);

    let mut rot_bad = Vec::new();
    let mut faces_bad = Vec::new();
    let mut rot_faces_bad = Vec::new();
    for (i, ch) in chambers.iter().enumerate() {
        let r1 = ch.rot;
        let r2 = c.translate(r1.voltage, chambers[r1.target].rot);
        let r3 = c.translate(r2.voltage, chambers[r2.target].rot);
        if r1.target == i || r3 != Link::new(i, g.identity()) {
            rot_bad.push(format!("{}: rotation does not have order 3", ch.id));
        }

        let (f01, f12, f02) = (&edges[ch.e01.target], &edges[ch.e12.target], &edges[ch.e02.target]);
        let mut why = Vec::new();
        if f01.ty != EdgeType::One || f12.ty != EdgeType::One || f02.ty != EdgeType::Two {
            why.push("face types");
        }
        if c.translate(ch.e01.voltage, f01.tail) != c.translate(ch.e02.voltage, f02.tail) {
            why.push("a0");
        }
        if c.translate(ch.e01.voltage, f01.head) != c.translate(ch.e12.voltage, f12.tail) {
            why.push("a1");
        }
        if c.translate(ch.e12.voltage, f12.head) != c.translate(ch.e02.voltage, f02.head) {
            why.push("a2");
        }
        if !why.is_empty() {
            faces_bad.push(format!("{}: {}", ch.id, why.join(", ")));
        }

        let rc = &chambers[r1.target];
        let opp_of = |l: Link| c.translate(l.voltage, edges[l.target].opp);
        if c.translate(r1.voltage, rc.e01) != ch.e12
            || c.translate(r1.voltage, rc.e12) != opp_of(ch.e02)
            || c.translate(r1.voltage, rc.e02) != opp_of(ch.e01)
        {
            rot_faces_bad.push(ch.id.clone());
        }
    }
    push("chamber_rotation", rot_bad);
    push("chamber_faces", faces_bad);
    push("rotation_faces", rot_faces_bad);

    let mut in_chambers = Vec::new();
    for (i, e) in edges.iter().enumerate() {
        let count = |f: fn(&super::Chamber) -> Link| chambers.iter().filter(|ch| f(ch).target == i).count();
        match e.ty {
            EdgeType::One => {
                let (a, b) = (count(|ch| ch.e01), count(|ch| ch.e12));
                if a != q + 1 || b != q + 1 {
                    in_chambers.push(format!("{}: first face of {a}, middle face of {b} chambers", e.id));
                }
            }
            EdgeType::Two => {
                let n = count(|ch| ch.e02);
                if n != q + 1 {
                    in_chambers.push(format!("{}: long face of {n} chambers", e.id));
                }
            }
        }
    }
    push("edge_chamber_incidence", in_chambers);

    let derived_edges = derive_edge_out(c);
    let mut eout_bad = Vec::new();
    for (i, e) in edges.iter().enumerate() {
        let out = c.edge_out(i);
        let mut why = Vec::new();
        if out.len() != q * q {
            why.push(format!("{} out-neighbours", out.len()));
        }
        if out.iter().any(|l| edges[l.target].ty != e.ty) {
            why.push("type changes".into());
        }
        if out.iter().any(|l| c.translate(l.voltage, edges[l.target].tail) != e.head) {
            why.push("not based at the head".into());
        }
        if as_set(out) != as_set(&derived_edges[i]) {
            why.push("disagrees with incidence".into());
        }
        if !why.is_empty() {
            eout_bad.push(format!("{}: {}", e.id, why.join(", ")));
        }
    }
    push("edge_out_neighbors", eout_bad);

    let derived_chambers = derive_chamber_out(c);
    let mut cout_bad = Vec::new();
    for (i, ch) in chambers.iter().enumerate() {
        let out = c.chamber_out(i);
        let mut why = Vec::new();
        if out.len() != q {
            why.push(format!("{} out-neighbours", out.len()));
        }
        if out.iter().any(|l| c.translate(l.voltage, chambers[l.target].e01) != ch.e12) {
            why.push("not adjacent".into());
        }
        if out.contains(&ch.rot) {
            why.push("contains the rotation".into());
        }
        if as_set(out) != as_set(&derived_chambers[i]) {
            why.push("disagrees with incidence".into());
        }
        if !why.is_empty() {
            cout_bad.push(format!("{}: {}", ch.id, why.join(", ")));
        }
    }
    push("chamber_out_neighbors", cout_bad);

    ValidationReport { checks }
}

fn as_set(links: &[Link]) -> BTreeSet<Link> {
    links.iter().copied().collect()
}
