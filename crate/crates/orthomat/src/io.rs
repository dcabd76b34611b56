//! JSON interchange formats and DOT export.
//!
//! The orthoset instance format is consumed by every command:
//! `{"n": 4, "labels": ["a1","a1p","a2","a2p"], "orthogonal_pairs": [[0,1],[2,3]]}`
//! — pairs in either order, duplicates tolerated, self-pairs rejected.
//! Explicit lattices load from `{"nodes": [...], "leq_pairs": [[i,j],...],
//! "ortho": [k,...]}`. All emitted JSON is canonical: sets sorted ascending,
//! pairs lexicographic, fixed key order.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::OrthoLattice;
use crate::orthoset::Orthoset;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OrthosetJson {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub orthogonal_pairs: Vec<(usize, usize)>,
}

impl From<&Orthoset> for OrthosetJson {
    fn from(m: &Orthoset) -> Self {
        OrthosetJson {
            n: m.n(),
            labels: m.labels().map(<[String]>::to_vec),
            orthogonal_pairs: m.pairs(),
        }
    }
}

impl OrthosetJson {
    pub fn build(&self) -> Result<Orthoset> {
        match &self.labels {
            Some(labels) => Orthoset::with_labels(self.n, &self.orthogonal_pairs, labels.clone()),
            None => Orthoset::new(self.n, &self.orthogonal_pairs),
        }
    }
}

pub fn orthoset_to_json_string(m: &Orthoset) -> String {
    serde_json::to_string_pretty(&OrthosetJson::from(m)).expect("orthoset serializes")
}

pub fn orthoset_from_json_str(text: &str) -> Result<Orthoset> {
    let parsed: OrthosetJson = serde_json::from_str(text)?;
    parsed.build()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LatticeInputJson {
    pub nodes: Vec<String>,
    pub leq_pairs: Vec<(usize, usize)>,
    pub ortho: Vec<usize>,
}

pub fn lattice_from_json_str(text: &str) -> Result<OrthoLattice> {
    let parsed: LatticeInputJson = serde_json::from_str(text)?;
    OrthoLattice::from_parts(parsed.nodes, &parsed.leq_pairs, parsed.ortho)
}

/// Either instance kind, detected from the JSON shape.
pub enum Instance {
    Orthoset(Orthoset),
    Lattice(OrthoLattice),
}

pub fn instance_from_json_str(text: &str) -> Result<Instance> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    let object = value
        .as_object()
        .ok_or_else(|| Error::Parse("instance file must be a JSON object".into()))?;
    if object.contains_key("orthogonal_pairs") {
        Ok(Instance::Orthoset(orthoset_from_json_str(text)?))
    } else if object.contains_key("leq_pairs") {
        Ok(Instance::Lattice(lattice_from_json_str(text)?))
    } else {
        Err(Error::Parse(
            "instance file has neither \"orthogonal_pairs\" nor \"leq_pairs\"".into(),
        ))
    }
}

/// Exported lattice: nodes as sorted element lists (closure-backed) or as
/// names (explicit), plus order structure.
#[derive(Clone, Debug, Serialize)]
pub struct LatticeJson {
    pub node_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nodes: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub node_names: Option<Vec<String>>,
    pub ortho: Vec<usize>,
    pub hasse: Vec<(usize, usize)>,
    pub atoms: Vec<usize>,
    pub bottom: usize,
    pub top: usize,
}

impl From<&OrthoLattice> for LatticeJson {
    fn from(l: &OrthoLattice) -> Self {
        let count = l.node_count();
        let from_sets = l.is_from_orthoset();
        LatticeJson {
            node_count: count,
            nodes: from_sets
                .then(|| (0..count).map(|i| l.node_set(i).unwrap().to_vec()).collect()),
            node_names: (!from_sets)
                .then(|| (0..count).map(|i| l.node_label(i)).collect()),
            ortho: (0..count).map(|i| l.ortho(i)).collect(),
            hasse: l.hasse().to_vec(),
            atoms: l.atoms().to_vec(),
            bottom: l.bottom(),
            top: l.top(),
        }
    }
}

pub fn lattice_to_json_string(l: &OrthoLattice) -> String {
    serde_json::to_string_pretty(&LatticeJson::from(l)).expect("lattice serializes")
}

/// DOT rendering of the Hasse diagram, drawn bottom-up. Atoms are filled;
/// orthocomplement pairs are joined by dashed non-constraining edges.
pub fn lattice_to_dot(l: &OrthoLattice) -> String {
    let mut out = String::new();
    out.push_str("digraph hasse {\n");
    out.push_str("  rankdir=BT;\n");
    out.push_str("  node [shape=box, fontname=\"Helvetica\"];\n");
    for i in 0..l.node_count() {
        let mut attrs = format!("label=\"{}\"", l.node_label(i).replace('"', "\\\""));
        if l.is_atom(i) {
            attrs.push_str(", style=filled, fillcolor=lightblue");
        }
        out.push_str(&format!("  n{} [{}];\n", i, attrs));
    }
    for &(lo, hi) in l.hasse() {
        out.push_str(&format!("  n{} -> n{};\n", lo, hi));
    }
    for i in 0..l.node_count() {
        let j = l.ortho(i);
        if i < j {
            out.push_str(&format!(
                "  n{} -> n{} [style=dashed, dir=none, constraint=false, color=gray];\n",
                i, j
            ));
        }
    }
    out.push_str("}\n");
    out
}
