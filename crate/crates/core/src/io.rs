//! JSON documents for posets, grids and lattices, and DOT export.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::Weight;
use crate::color::Color;
use crate::grid::{GridError, GridPoset};
use crate::lattice::IdealLattice;
use crate::poset::{find_rank_function, EdgeColoredPoset, Poset, PosetError, VertexColoredPoset};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error("{0}")]
    Schema(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Vertex,
    Edge,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexJson {
    pub id: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub color: Option<Color>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoverJson {
    Colored(i64, i64, Color),
    Plain(i64, i64),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainJson {
    pub id: i64,
    pub chain: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelJson {
    pub id: i64,
    pub tableau: String,
}

/// The shared poset document. `chain` makes it a grid; `labels` attaches
/// tableau strings to elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetDoc {
    pub kind: Kind,
    pub vertices: Vec<VertexJson>,
    pub covers: Vec<CoverJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chain: Option<Vec<ChainJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<LabelJson>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeDoc {
    pub poset: PosetDoc,
    pub elements: Vec<Vec<i64>>,
    pub covers: Vec<(usize, usize, Color)>,
    pub weights: Vec<Weight>,
}

/// A parsed poset document.
#[derive(Clone, Debug)]
pub enum PosetObject {
    Vertex(VertexColoredPoset),
    Grid(GridPoset),
    Edge(EdgeColoredPoset),
}

impl PosetDoc {
    pub fn parse(text: &str) -> Result<PosetDoc, IoError> {
        Ok(serde_json::from_str(text)?)
    }

    /// Compact canonical text.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("documents serialize")
    }

    fn ids(&self) -> Vec<i64> {
        self.vertices.iter().map(|v| v.id).collect()
    }

    pub fn to_object(&self) -> Result<PosetObject, IoError> {
        let ids = self.ids();
        let index: HashMap<i64, usize> = ids.iter().enumerate().map(|(i, &id)| (id, i)).collect();
        let idx = |id: i64| index.get(&id).copied().ok_or(PosetError::UnknownId(id));
        match self.kind {
            Kind::Vertex => {
                let mut pairs = Vec::with_capacity(self.covers.len());
                for c in &self.covers {
                    match *c {
                        CoverJson::Plain(u, v) => pairs.push((u, v)),
                        CoverJson::Colored(..) => {
                            return Err(IoError::Schema("vertex-colored posets have uncolored covers".into()))
                        }
                    }
                }
                let poset = Poset::from_id_covers(ids, &pairs)?;
                let colors = self
                    .vertices
                    .iter()
                    .map(|v| v.color.ok_or_else(|| IoError::Schema(format!("vertex {} has no color", v.id))))
                    .collect::<Result<Vec<_>, _>>()?;
                let base = VertexColoredPoset::new(poset, colors)?;
                match &self.chain {
                    None => Ok(PosetObject::Vertex(base)),
                    Some(chain) => {
                        let mut ch = vec![0; base.len()];
                        let mut seen = vec![false; base.len()];
                        for c in chain {
                            let i = idx(c.id)?;
                            ch[i] = c.chain;
                            seen[i] = true;
                        }
                        if let Some(i) = seen.iter().position(|s| !s) {
                            return Err(IoError::Schema(format!("vertex {} has no chain", base.poset.id(i))));
                        }
                        Ok(PosetObject::Grid(GridPoset::new(base, ch)?))
                    }
                }
            }
            Kind::Edge => {
                let mut covers = Vec::with_capacity(self.covers.len());
                for c in &self.covers {
                    match *c {
                        CoverJson::Colored(u, v, k) => covers.push((idx(u)?, idx(v)?, k)),
                        CoverJson::Plain(..) => {
                            return Err(IoError::Schema("edge-colored posets need a color on every cover".into()))
                        }
                    }
                }
                if self.chain.is_some() {
                    return Err(IoError::Schema("edge-colored posets carry no chain function".into()));
                }
                Ok(PosetObject::Edge(EdgeColoredPoset::new(ids, covers)?))
            }
        }
    }

    fn sorted_covers(mut covers: Vec<CoverJson>) -> Vec<CoverJson> {
        covers.sort_by_key(|c| match *c {
            CoverJson::Plain(u, v) | CoverJson::Colored(u, v, _) => (u, v),
        });
        covers
    }

    pub fn from_vertex(p: &VertexColoredPoset) -> PosetDoc {
        let ids = p.poset.ids();
        let covers = p.poset.covers().iter().map(|&(u, v)| CoverJson::Plain(ids[u], ids[v])).collect();
        PosetDoc {
            kind: Kind::Vertex,
            vertices: (0..p.len()).map(|i| VertexJson { id: ids[i], color: Some(p.colors[i]) }).collect(),
            covers: PosetDoc::sorted_covers(covers),
            chain: None,
            labels: None,
        }
    }

    pub fn from_grid(g: &GridPoset) -> PosetDoc {
        let mut doc = PosetDoc::from_vertex(g.base());
        let ids = g.poset().ids();
        doc.chain = Some((0..g.len()).map(|i| ChainJson { id: ids[i], chain: g.chain(i) }).collect());
        doc
    }

    pub fn from_edge(p: &EdgeColoredPoset) -> PosetDoc {
        let ids = p.poset.ids();
        let covers = p.colored_covers().map(|(u, v, c)| CoverJson::Colored(ids[u], ids[v], c)).collect();
        PosetDoc {
            kind: Kind::Edge,
            vertices: ids.iter().map(|&id| VertexJson { id, color: None }).collect(),
            covers: PosetDoc::sorted_covers(covers),
            chain: None,
            labels: None,
        }
    }
}

impl PosetObject {
    pub fn to_doc(&self) -> PosetDoc {
        match self {
            PosetObject::Vertex(p) => PosetDoc::from_vertex(p),
            PosetObject::Grid(g) => PosetDoc::from_grid(g),
            PosetObject::Edge(e) => PosetDoc::from_edge(e),
        }
    }

    /// The vertex-colored poset underlying a vertex or grid document.
    pub fn vertex_colored(&self) -> Option<&VertexColoredPoset> {
        match self {
            PosetObject::Vertex(p) => Some(p),
            PosetObject::Grid(g) => Some(g.base()),
            PosetObject::Edge(_) => None,
        }
    }
}

impl LatticeDoc {
    pub fn parse(text: &str) -> Result<LatticeDoc, IoError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("documents serialize")
    }

    pub fn from_lattice(l: &IdealLattice, source: PosetDoc) -> LatticeDoc {
        let ids = l.source().poset.ids();
        LatticeDoc {
            poset: source,
            elements: (0..l.len())
                .map(|s| {
                    let mut e: Vec<i64> = l.vertices(s).iter().map(|&v| ids[v]).collect();
                    e.sort_unstable();
                    e
                })
                .collect(),
            covers: l.graph().colored_covers().collect(),
            weights: l.weights().to_vec(),
        }
    }

    /// The lattice as an edge-colored poset on element indices.
    pub fn graph(&self) -> Result<EdgeColoredPoset, IoError> {
        let n = self.elements.len();
        if self.weights.len() != n {
            return Err(IoError::Schema(format!("{} weights for {} elements", self.weights.len(), n)));
        }
        Ok(EdgeColoredPoset::new((0..n as i64).collect(), self.covers.clone())?)
    }
}

/// Hasse diagram drawn bottom to top, vertices grouped by rank when a rank
/// function exists.
pub fn to_dot(obj: &PosetObject) -> String {
    let (poset, vcolors, ecolors): (&Poset, Option<&[Color]>, Option<&EdgeColoredPoset>) = match obj {
        PosetObject::Vertex(p) => (&p.poset, Some(&p.colors), None),
        PosetObject::Grid(g) => (g.poset(), Some(g.colors()), None),
        PosetObject::Edge(e) => (&e.poset, None, Some(e)),
    };
    let mut out = String::from("digraph poset {\n  rankdir=BT;\n  node [shape=circle];\n");
    let ids = poset.ids();
    for v in 0..poset.len() {
        match vcolors {
            Some(c) => writeln!(out, "  n{} [label=\"{}:{}\"];", ids[v], ids[v], c[v]).unwrap(),
            None => writeln!(out, "  n{} [label=\"{}\"];", ids[v], ids[v]).unwrap(),
        }
    }
    if let Some(rank) = find_rank_function(poset) {
        for r in 0..=rank.length {
            let members: Vec<String> =
                (0..poset.len()).filter(|&v| rank.ranks[v] == r).map(|v| format!("n{}", ids[v])).collect();
            if members.len() > 1 {
                writeln!(out, "  {{ rank=same; {}; }}", members.join("; ")).unwrap();
            }
        }
    }
    for &(u, v) in poset.covers() {
        match ecolors {
            Some(e) => writeln!(out, "  n{} -> n{} [label=\"{}\"];", ids[u], ids[v], e.color_of(u, v).unwrap()).unwrap(),
            None => writeln!(out, "  n{} -> n{};", ids[u], ids[v]).unwrap(),
        }
    }
    out.push_str("}\n");
    out
}
