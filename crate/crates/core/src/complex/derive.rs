//! Out-neighbour lists recomputed from incidence data alone.
//!
//! Type-1 edge `e = (a0 -> a1)`: the type-1 edges leaving `a1`, minus the
//! `e12` faces of chambers whose `e01` is `e`.
//! Type-2 edge `e`: the type-2 edges leaving its head, minus the `e02`
//! faces of chambers whose `e01` is `opp(e)`.
//! Chamber `c`: the chambers whose `e01` is `e12(c)`, minus `rot(c)`.

use super::{Link, QuotientComplex};
use crate::complex::EdgeType;

pub fn derive_edge_out(c: &QuotientComplex) -> Vec<Vec<Link>> {
    let g = c.group();
    c.edges()
        .iter()
        .enumerate()
        .map(|(i, e)| {
            // Building edges based at head(e), in the frame of e.
            let excluded: Vec<Link> = match e.ty {
                EdgeType::One => c
                    .chambers()
                    .iter()
                    .filter(|ch| ch.e01.target == i)
                    .map(|ch| Link::new(ch.e12.target, g.mul(g.inv(ch.e01.voltage), ch.e12.voltage)))
                    .collect(),
                EdgeType::Two => c
                    .chambers()
                    .iter()
                    .filter(|ch| ch.e01.target == e.opp.target)
                    .map(|ch| {
                        let to_opp = g.mul(e.opp.voltage, g.inv(ch.e01.voltage));
                        Link::new(ch.e02.target, g.mul(to_opp, ch.e02.voltage))
                    })
                    .collect(),
            };
            c.edges()
                .iter()
                .enumerate()
                .filter(|(_, f)| f.ty == e.ty && f.tail.target == e.head.target)
                .map(|(j, f)| Link::new(j, g.mul(e.head.voltage, g.inv(f.tail.voltage))))
                .filter(|l| !excluded.contains(l))
                .collect()
        })
        .collect()
}

pub fn derive_chamber_out(c: &QuotientComplex) -> Vec<Vec<Link>> {
    let g = c.group();
    c.chambers()
        .iter()
        .map(|ch| {
            c.chambers()
                .iter()
                .enumerate()
                .filter(|(_, d)| d.e01.target == ch.e12.target)
                .map(|(j, d)| Link::new(j, g.mul(ch.e12.voltage, g.inv(d.e01.voltage))))
                .filter(|l| *l != ch.rot)
                .collect()
        })
        .collect()
}
