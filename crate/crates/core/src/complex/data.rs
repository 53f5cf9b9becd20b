//! JSON shape of a quotient complex.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::group::Perm;

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ComplexData {
    pub q: u32,
    pub voltage_group: GroupData,
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeData>,
    pub chambers: Vec<ChamberData>,
    #[serde(default)]
    pub edge_out: BTreeMap<String, Vec<EdgeRef>>,
    #[serde(default)]
    pub chamber_out: BTreeMap<String, Vec<ChamberRef>>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct GroupData {
    pub degree: usize,
    #[serde(default)]
    pub generators: BTreeMap<String, Perm>,
}

/// A voltage of `None` means the identity.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct VertexRef {
    pub v: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<Perm>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct EdgeRef {
    pub e: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<Perm>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ChamberRef {
    pub c: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<Perm>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct EdgeData {
    pub id: String,
    #[serde(rename = "type")]
    pub ty: u8,
    pub tail: VertexRef,
    pub head: VertexRef,
    #[serde(default)]
    pub opp: Option<EdgeRef>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ChamberData {
    pub id: String,
    #[serde(default)]
    pub rot: Option<ChamberRef>,
    pub e01: EdgeRef,
    pub e12: EdgeRef,
    pub e02: EdgeRef,
}
