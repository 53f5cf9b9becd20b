//! Finite covers of a quotient complex defined by a permutation action of
//! its voltage group.
//!
//! Sheet `i` of representative `s` is the translate `h_i . s`, where `h_i`
//! is the first element (in canonical order) sending sheet `i` to sheet 0.
//! A base reference `(t, g)` from `s` lifts, on sheet `i`, to sheet
//! `j = g^-1 . i` of `t` with voltage `h_i g h_j^-1` in the stabiliser of
//! sheet 0.

use std::collections::BTreeMap;

use crate::complex::{
    build_complex, ChamberData, ChamberRef, ComplexData, ComplexError, EdgeData, EdgeRef, GroupData, Link,
    QuotientComplex, VertexRef,
};
use crate::group::{Elem, FiniteGroup, GroupError, Perm};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoverError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("action is not transitive on the {0} sheets")]
    NotTransitive(usize),
}

/// A base complex and an action of its voltage group on sheets, given on
/// the group's generators.
#[derive(Clone, Debug)]
pub struct CoverSpec<'a> {
    pub base: &'a QuotientComplex,
    pub action: Vec<(String, Perm)>,
}

impl<'a> CoverSpec<'a> {
    /// The voltage group acting on the points it permutes.
    pub fn natural(base: &'a QuotientComplex) -> Self {
        let g = base.group();
        Self {
            base,
            action: g.generators().iter().map(|(l, e)| (l.clone(), g.perm(*e).clone())).collect(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Cover {
    pub complex: QuotientComplex,
    pub sheets: usize,
    /// The stabiliser of sheet 0, as a subgroup of the base voltage group.
    pub stabilizer: FiniteGroup,
}

pub fn build_cover(spec: &CoverSpec<'_>) -> Result<Cover, CoverError> {
    let base = spec.base;
    let h = base.group();
    let n = spec.action.first().map_or(1, |(_, p)| p.degree());
    let sigma = h.extend_homomorphism(&spec.action, Perm::identity(n), Perm::compose)?;

    let mut reached = vec![false; n];
    reached[0] = true;
    for s in &sigma {
        reached[s.apply(0)] = true;
    }
    if reached.iter().any(|r| !r) {
        return Err(CoverError::NotTransitive(n));
    }

    let stab_members: Vec<Elem> = h.elements().filter(|e| sigma[e.index()].apply(0) == 0).collect();
    let stabilizer = h.subgroup(&stab_members)?;
    let coset: Vec<Elem> = (0..n)
        .map(|i| h.elements().find(|e| sigma[e.index()].apply(i) == 0).expect("transitive action"))
        .collect();

    let name = |id: &str, i: usize| if n == 1 { id.to_string() } else { format!("{id}@{i}") };
    let lift = |i: usize, l: Link| -> (usize, Option<Perm>) {
        let j = sigma[l.voltage.index()].inverse().apply(i);
        let v = h.product([coset[i], l.voltage, h.inv(coset[j])]);
        let p = h.perm(v);
        (j, (!p.is_identity()).then(|| p.clone()))
    };

    let mut data = ComplexData {
        q: base.q(),
        voltage_group: GroupData {
            degree: stabilizer.degree(),
            generators: stabilizer
                .generators()
                .iter()
                .map(|(l, e)| (l.clone(), stabilizer.perm(*e).clone()))
                .collect(),
        },
        vertices: Vec::new(),
        edges: Vec::new(),
        chambers: Vec::new(),
        edge_out: BTreeMap::new(),
        chamber_out: BTreeMap::new(),
    };
    for v in base.vertices() {
        for i in 0..n {
            data.vertices.push(name(v, i));
        }
    }
    let vref = |i: usize, l: Link| {
        let (j, g) = lift(i, l);
        VertexRef {
            v: name(&base.vertices()[l.target], j),
            g,
        }
    };
    let eref = |i: usize, l: Link| {
        let (j, g) = lift(i, l);
        EdgeRef {
            e: name(&base.edges()[l.target].id, j),
            g,
        }
    };
    let cref = |i: usize, l: Link| {
        let (j, g) = lift(i, l);
        ChamberRef {
            c: name(&base.chambers()[l.target].id, j),
            g,
        }
    };
    for (k, e) in base.edges().iter().enumerate() {
        for i in 0..n {
            let id = name(&e.id, i);
            data.edges.push(EdgeData {
                id: id.clone(),
                ty: e.ty.as_u8(),
                tail: vref(i, e.tail),
                head: vref(i, e.head),
                opp: Some(eref(i, e.opp)),
            });
            data.edge_out
                .insert(id, base.edge_out(k).iter().map(|&l| eref(i, l)).collect());
        }
    }
    for (k, c) in base.chambers().iter().enumerate() {
        for i in 0..n {
            let id = name(&c.id, i);
            data.chambers.push(ChamberData {
                id: id.clone(),
                rot: Some(cref(i, c.rot)),
                e01: eref(i, c.e01),
                e12: eref(i, c.e12),
                e02: eref(i, c.e02),
            });
            data.chamber_out
                .insert(id, base.chamber_out(k).iter().map(|&l| cref(i, l)).collect());
        }
    }
    Ok(Cover {
        complex: build_complex(&data)?,
        sheets: n,
        stabilizer,
    })
}
