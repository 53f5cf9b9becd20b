//! Finite quotients `Gamma \ B` of the building, stored as one
//! representative per orbit of pointed vertices, edges and chambers, with
//! every incidence carrying a voltage in a finite group `H`.
//!
//! A reference `(t, g)` read from representative `s` names the building
//! simplex `g . t`. Translating `s` by `h` turns it into `(t, h g)`.

mod data;
mod derive;
mod validate;

use std::collections::{HashMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use data::{ChamberData, ChamberRef, ComplexData, EdgeData, EdgeRef, GroupData, VertexRef};
pub use derive::{derive_chamber_out, derive_edge_out};
pub use validate::{validate, Check, ValidationReport};

use crate::group::{Elem, FiniteGroup, GroupError, Perm};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ComplexError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("duplicate id {0:?}")]
    DuplicateId(String),
    #[error("{from} refers to unknown {kind} {to:?}")]
    DanglingReference { from: String, kind: &'static str, to: String },
    #[error("voltage {voltage:?} at {at} is not in the voltage group")]
    VoltageNotInGroup { at: String, voltage: Perm },
    #[error("edge {id} has type {ty}, expected 1 or 2")]
    BadEdgeType { id: String, ty: u8 },
    #[error("{0}")]
    NotClosed(String),
    #[error("prime power q = {0} must be at least 2")]
    BadQ(u32),
    #[error("gauge has wrong shape: {0}")]
    GaugeShape(String),
}

/// `dim(a0 / a1)` for a pointed edge `a0 -> a1`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeType {
    One,
    Two,
}

impl EdgeType {
    pub fn from_u8(t: u8) -> Option<Self> {
        match t {
            1 => Some(Self::One),
            2 => Some(Self::Two),
            _ => None,
        }
    }

    pub fn as_u8(self) -> u8 {
        match self {
            Self::One => 1,
            Self::Two => 2,
        }
    }

    /// Type of the opposite edge.
    pub fn opposite(self) -> Self {
        match self {
            Self::One => Self::Two,
            Self::Two => Self::One,
        }
    }
}

/// A reference to a representative together with a voltage.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Link {
    pub target: usize,
    pub voltage: Elem,
}

impl Link {
    pub fn new(target: usize, voltage: Elem) -> Self {
        Self { target, voltage }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub ty: EdgeType,
    pub tail: Link,
    pub head: Link,
    pub opp: Link,
}

/// Pointed chamber `a0 > a1 > a2 > pi a0` with faces `e01 = (a0 -> a1)`,
/// `e12 = (a1 -> a2)` of type 1 and `e02 = (a0 -> a2)` of type 2. Its
/// rotation is the chamber `a1 > a2 > pi a0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chamber {
    pub id: String,
    pub rot: Link,
    pub e01: Link,
    pub e12: Link,
    pub e02: Link,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientComplex {
    q: u32,
    group: FiniteGroup,
    vertices: Vec<String>,
    edges: Vec<Edge>,
    chambers: Vec<Chamber>,
    edge_out: Vec<Vec<Link>>,
    chamber_out: Vec<Vec<Link>>,
}

impl QuotientComplex {
    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn chambers(&self) -> &[Chamber] {
        &self.chambers
    }

    pub fn edge_out(&self, e: usize) -> &[Link] {
        &self.edge_out[e]
    }

    pub fn chamber_out(&self, c: usize) -> &[Link] {
        &self.chamber_out[c]
    }

    /// `(N0, N1, N2)`: unpointed vertices, edges and chambers.
    pub fn counts(&self) -> [usize; 3] {
        [self.vertices.len(), self.edges.len() / 2, self.chambers.len() / 3]
    }

    pub fn euler_characteristic(&self) -> i64 {
        euler_characteristic(self)
    }

    pub fn edge_index(&self, id: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.id == id)
    }

    pub fn chamber_index(&self, id: &str) -> Option<usize> {
        self.chambers.iter().position(|c| c.id == id)
    }

    /// Voltage of `g` applied to a link: `(t, v) -> (t, g v)`.
    pub fn translate(&self, g: Elem, l: Link) -> Link {
        Link::new(l.target, self.group.mul(g, l.voltage))
    }

    /// Replaces the stored out-neighbour lists with ones derived from the
    /// incidence data.
    pub fn with_derived_out_neighbors(mut self) -> Self {
        self.edge_out = derive_edge_out(&self);
        self.chamber_out = derive_chamber_out(&self);
        self
    }

    /// Serialisable form; `build_complex(&c.to_data())` reproduces `c`.
    pub fn to_data(&self) -> ComplexData {
        let g = &self.group;
        let volt = |e: Elem| -> Option<Perm> {
            let p = g.perm(e);
            (!p.is_identity()).then(|| p.clone())
        };
        let vref = |l: &Link| VertexRef {
            v: self.vertices[l.target].clone(),
            g: volt(l.voltage),
        };
        let eref = |l: &Link| EdgeRef {
            e: self.edges[l.target].id.clone(),
            g: volt(l.voltage),
        };
        let cref = |l: &Link| ChamberRef {
            c: self.chambers[l.target].id.clone(),
            g: volt(l.voltage),
        };
        ComplexData {
            q: self.q,
            voltage_group: GroupData {
                degree: g.degree(),
                generators: g
                    .generators()
                    .iter()
                    .map(|(l, e)| (l.clone(), g.perm(*e).clone()))
                    .collect(),
            },
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeData {
                    id: e.id.clone(),
                    ty: e.ty.as_u8(),
                    tail: vref(&e.tail),
                    head: vref(&e.head),
                    opp: Some(eref(&e.opp)),
                })
                .collect(),
            chambers: self
                .chambers
                .iter()
                .map(|c| ChamberData {
                    id: c.id.clone(),
                    rot: Some(cref(&c.rot)),
                    e01: eref(&c.e01),
                    e12: eref(&c.e12),
                    e02: eref(&c.e02),
                })
                .collect(),
            edge_out: self
                .edges
                .iter()
                .zip(&self.edge_out)
                .map(|(e, out)| (e.id.clone(), out.iter().map(eref).collect()))
                .collect(),
            chamber_out: self
                .chambers
                .iter()
                .zip(&self.chamber_out)
                .map(|(c, out)| (c.id.clone(), out.iter().map(cref).collect()))
                .collect(),
        }
    }
}

/// `N0 - N1 + N2`.
pub fn euler_characteristic(c: &QuotientComplex) -> i64 {
    let [n0, n1, n2] = c.counts();
    n0 as i64 - n1 as i64 + n2 as i64
}

pub fn parse_complex(json: &str) -> Result<QuotientComplex, ComplexError> {
    let data: ComplexData = serde_json::from_str(json).map_err(|e| ComplexError::Json(e.to_string()))?;
    build_complex(&data)
}

pub fn serialize_complex(c: &QuotientComplex) -> String {
    serde_json::to_string_pretty(&c.to_data()).expect("complex serialises")
}

/// Resolves ids, checks voltages and closure, and fixes the canonical
/// order: type-1 edges before type-2 (input order otherwise), chambers in
/// rotation orbits.
pub fn build_complex(data: &ComplexData) -> Result<QuotientComplex, ComplexError> {
    if data.q < 2 {
        return Err(ComplexError::BadQ(data.q));
    }
    let group = FiniteGroup::generate(
        data.voltage_group.degree,
        data.voltage_group
            .generators
            .iter()
            .map(|(l, p)| (l.clone(), p.clone()))
            .collect(),
    )?;
    let voltage = |at: &str, p: &Option<Perm>| -> Result<Elem, ComplexError> {
        match p {
            None => Ok(group.identity()),
            Some(p) => group.elem(p).ok_or_else(|| ComplexError::VoltageNotInGroup {
                at: at.to_string(),
                voltage: p.clone(),
            }),
        }
    };

    let mut vertices = data.vertices.clone();
    vertices.sort();
    check_unique(&vertices)?;
    let vindex: HashMap<&str, usize> = vertices.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();

    let mut edge_order: Vec<&EdgeData> = Vec::with_capacity(data.edges.len());
    for ty in [1u8, 2] {
        edge_order.extend(data.edges.iter().filter(|e| e.ty == ty));
    }
    if let Some(bad) = data.edges.iter().find(|e| e.ty != 1 && e.ty != 2) {
        return Err(ComplexError::BadEdgeType {
            id: bad.id.clone(),
            ty: bad.ty,
        });
    }
    check_unique(&edge_order.iter().map(|e| e.id.clone()).collect::<Vec<_>>())?;
    let eindex: HashMap<&str, usize> = edge_order.iter().enumerate().map(|(i, e)| (e.id.as_str(), i)).collect();

    let vlink = |from: &str, r: &VertexRef| -> Result<Link, ComplexError> {
        let t = *vindex.get(r.v.as_str()).ok_or_else(|| ComplexError::DanglingReference {
            from: from.to_string(),
            kind: "vertex",
            to: r.v.clone(),
        })?;
        Ok(Link::new(t, voltage(from, &r.g)?))
    };
    let elink = |from: &str, r: &EdgeRef| -> Result<Link, ComplexError> {
        let t = *eindex.get(r.e.as_str()).ok_or_else(|| ComplexError::DanglingReference {
            from: from.to_string(),
            kind: "edge",
            to: r.e.clone(),
        })?;
        Ok(Link::new(t, voltage(from, &r.g)?))
    };

    let mut edges = Vec::with_capacity(edge_order.len());
    for e in &edge_order {
        let opp = e
            .opp
            .as_ref()
            .ok_or_else(|| ComplexError::NotClosed(format!("edge {} has no opposite", e.id)))?;
        if !eindex.contains_key(opp.e.as_str()) {
            return Err(ComplexError::NotClosed(format!(
                "opposite {:?} of edge {} is missing",
                opp.e, e.id
            )));
        }
        edges.push(Edge {
            id: e.id.clone(),
            ty: EdgeType::from_u8(e.ty).expect("checked above"),
            tail: vlink(&e.id, &e.tail)?,
            head: vlink(&e.id, &e.head)?,
            opp: elink(&e.id, opp)?,
        });
    }

    // Chambers: input order, each followed by its rotation orbit.
    let input_index: HashMap<&str, usize> = data
        .chambers
        .iter()
        .enumerate()
        .map(|(i, c)| (c.id.as_str(), i))
        .collect();
    check_unique(&data.chambers.iter().map(|c| c.id.clone()).collect::<Vec<_>>())?;
    let mut rot_next = Vec::with_capacity(data.chambers.len());
    for c in &data.chambers {
        let rot = c
            .rot
            .as_ref()
            .ok_or_else(|| ComplexError::NotClosed(format!("chamber {} has no rotation", c.id)))?;
        let next = *input_index.get(rot.c.as_str()).ok_or_else(|| {
            ComplexError::NotClosed(format!("rotation {:?} of chamber {} is missing", rot.c, c.id))
        })?;
        rot_next.push(next);
    }
    let mut order = Vec::with_capacity(data.chambers.len());
    let mut placed = vec![false; data.chambers.len()];
    for start in 0..data.chambers.len() {
        let mut x = start;
        while !placed[x] {
            placed[x] = true;
            order.push(x);
            x = rot_next[x];
        }
    }
    let cindex: HashMap<&str, usize> = order
        .iter()
        .enumerate()
        .map(|(pos, &i)| (data.chambers[i].id.as_str(), pos))
        .collect();
    let clink = |from: &str, r: &ChamberRef| -> Result<Link, ComplexError> {
        let t = *cindex.get(r.c.as_str()).ok_or_else(|| ComplexError::DanglingReference {
            from: from.to_string(),
            kind: "chamber",
            to: r.c.clone(),
        })?;
        Ok(Link::new(t, voltage(from, &r.g)?))
    };
    let mut chambers = Vec::with_capacity(order.len());
    for &i in &order {
        let c = &data.chambers[i];
        chambers.push(Chamber {
            id: c.id.clone(),
            rot: clink(&c.id, c.rot.as_ref().expect("checked above"))?,
            e01: elink(&c.id, &c.e01)?,
            e12: elink(&c.id, &c.e12)?,
            e02: elink(&c.id, &c.e02)?,
        });
    }

    for key in data.edge_out.keys() {
        if !eindex.contains_key(key.as_str()) {
            return Err(ComplexError::DanglingReference {
                from: "edge_out".into(),
                kind: "edge",
                to: key.clone(),
            });
        }
    }
    for key in data.chamber_out.keys() {
        if !cindex.contains_key(key.as_str()) {
            return Err(ComplexError::DanglingReference {
                from: "chamber_out".into(),
                kind: "chamber",
                to: key.clone(),
            });
        }
    }
    let edge_out = edges
        .iter()
        .map(|e| {
            data.edge_out
                .get(&e.id)
                .map_or(Ok(Vec::new()), |list| list.iter().map(|r| elink(&e.id, r)).collect())
        })
        .collect::<Result<Vec<_>, _>>()?;
    let chamber_out = chambers
        .iter()
        .map(|c| {
            data.chamber_out
                .get(&c.id)
                .map_or(Ok(Vec::new()), |list| list.iter().map(|r| clink(&c.id, r)).collect())
        })
        .collect::<Result<Vec<_>, _>>()?;

    Ok(QuotientComplex {
        q: data.q,
        group,
        vertices,
        edges,
        chambers,
        edge_out,
        chamber_out,
    })
}

fn check_unique(ids: &[String]) -> Result<(), ComplexError> {
    let mut seen = HashSet::new();
    for id in ids {
        if !seen.insert(id) {
            return Err(ComplexError::DuplicateId(id.clone()));
        }
    }
    Ok(())
}

/// A choice of group element per representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gauge {
    pub vertices: Vec<Elem>,
    pub edges: Vec<Elem>,
    pub chambers: Vec<Elem>,
}

impl Gauge {
    pub fn identity(c: &QuotientComplex) -> Self {
        let id = c.group.identity();
        Self {
            vertices: vec![id; c.vertices.len()],
            edges: vec![id; c.edges.len()],
            chambers: vec![id; c.chambers.len()],
        }
    }

    /// Uniformly random gauge from a seeded generator.
    pub fn random(c: &QuotientComplex, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let elems: Vec<Elem> = c.group.elements().collect();
        let mut pick = |n: usize| -> Vec<Elem> { (0..n).map(|_| elems[rng.random_range(0..elems.len())]).collect() };
        Self {
            vertices: pick(c.vertices.len()),
            edges: pick(c.edges.len()),
            chambers: pick(c.chambers.len()),
        }
    }
}

/// Replaces each representative `s` by `g(s) . s`; a reference `(t, v)` from
/// `s` becomes `(t, g(s) v g(t)^-1)`.
pub fn gauge_transform(c: &QuotientComplex, gauge: &Gauge) -> Result<QuotientComplex, ComplexError> {
    if gauge.vertices.len() != c.vertices.len()
        || gauge.edges.len() != c.edges.len()
        || gauge.chambers.len() != c.chambers.len()
    {
        return Err(ComplexError::GaugeShape(format!(
            "expected ({}, {}, {}) entries",
            c.vertices.len(),
            c.edges.len(),
            c.chambers.len()
        )));
    }
    if [&gauge.vertices, &gauge.edges, &gauge.chambers]
        .iter()
        .any(|v| v.iter().any(|e| e.index() >= c.group.order()))
    {
        return Err(ComplexError::GaugeShape("element outside the voltage group".into()));
    }
    let g = &c.group;
    let conj = |gs: Elem, l: Link, gt: &[Elem]| Link::new(l.target, g.product([gs, l.voltage, g.inv(gt[l.target])]));
    let edges = c
        .edges
        .iter()
        .zip(&gauge.edges)
        .map(|(e, &gs)| Edge {
            id: e.id.clone(),
            ty: e.ty,
            tail: conj(gs, e.tail, &gauge.vertices),
            head: conj(gs, e.head, &gauge.vertices),
            opp: conj(gs, e.opp, &gauge.edges),
        })
        .collect();
    let chambers = c
        .chambers
        .iter()
        .zip(&gauge.chambers)
        .map(|(ch, &gs)| Chamber {
            id: ch.id.clone(),
            rot: conj(gs, ch.rot, &gauge.chambers),
            e01: conj(gs, ch.e01, &gauge.edges),
            e12: conj(gs, ch.e12, &gauge.edges),
            e02: conj(gs, ch.e02, &gauge.edges),
        })
        .collect();
    let edge_out = c
        .edge_out
        .iter()
        .zip(&gauge.edges)
        .map(|(out, &gs)| out.iter().map(|&l| conj(gs, l, &gauge.edges)).collect())
        .collect();
    let chamber_out = c
        .chamber_out
        .iter()
        .zip(&gauge.chambers)
        .map(|(out, &gs)| out.iter().map(|&l| conj(gs, l, &gauge.chambers)).collect())
        .collect();
    Ok(QuotientComplex {
        q: c.q,
        group: c.group.clone(),
        vertices: c.vertices.clone(),
        edges,
        chambers,
        edge_out,
        chamber_out,
    })
}

/// Assembles a complex from already-resolved parts. Used by builders that
/// construct representatives directly.
pub(crate) fn from_parts(
    q: u32,
    group: FiniteGroup,
    vertices: Vec<String>,
    edges: Vec<Edge>,
    chambers: Vec<Chamber>,
    edge_out: Vec<Vec<Link>>,
    chamber_out: Vec<Vec<Link>>,
) -> QuotientComplex {
    QuotientComplex {
        q,
        group,
        vertices,
        edges,
        chambers,
        edge_out,
        chamber_out,
    }
}
