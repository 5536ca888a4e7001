//! Graph JSON and DOT serialization.
//!
//! Graph JSON is a single object whose fields always appear in this order:
//!
//! ```text
//! {"k":3,"parts":[[0],[1],[2]],"edges":[[0,1],[1,2]],"X":[...],"provenance":{...},"value":24}
//! ```
//!
//! * `k`: number of parts;
//! * `parts`: `k` arrays of vertex ids, each ascending; ids are `0..n`;
//! * `edges`: `[u, v]` pairs with `u < v`, sorted lexicographically;
//! * `X` (optional): the transversal, one id per part in part order;
//! * `provenance` (optional): how the graph was built;
//! * `value` (optional): `e(X, X^c)` for certified alpha witnesses.
//!
//! Output is compact (no whitespace) and newline-terminated, so identical
//! graphs serialize to identical bytes.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{PartiteGraph, Transversal, VertexId};

/// Where a graph came from: the construction name, its integer parameters
/// and the provenance of any input witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub construction: String,
    pub params: BTreeMap<String, usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub inputs: Vec<Provenance>,
}

impl Provenance {
    pub fn new<'a>(construction: &str, params: impl IntoIterator<Item = (&'a str, usize)>) -> Self {
        Self {
            construction: construction.to_string(),
            params: params.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
            inputs: Vec::new(),
        }
    }

    pub fn with_input(mut self, input: Provenance) -> Self {
        self.inputs.push(input);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub k: usize,
    pub parts: Vec<Vec<VertexId>>,
    pub edges: Vec<[VertexId; 2]>,
    #[serde(rename = "X", default, skip_serializing_if = "Option::is_none")]
    pub x: Option<Vec<VertexId>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<usize>,
}

impl GraphDocument {
    pub fn from_graph(g: &PartiteGraph) -> Self {
        Self {
            k: g.part_count(),
            parts: (0..g.part_count()).map(|p| g.part_members(p)).collect(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
            x: None,
            provenance: None,
            value: None,
        }
    }

    pub fn with_transversal(mut self, x: &Transversal) -> Self {
        self.x = Some(x.vertices().to_vec());
        self
    }

    pub fn with_provenance(mut self, p: Provenance) -> Self {
        self.provenance = Some(p);
        self
    }

    pub fn with_value(mut self, value: usize) -> Self {
        self.value = Some(value);
        self
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("graph documents always serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Rebuilds the graph (and transversal, when present), validating ids.
    pub fn to_graph(&self) -> Result<(PartiteGraph, Option<Transversal>)> {
        if self.parts.len() != self.k {
            return Err(Error::Parse(format!(
                "\"k\" is {} but \"parts\" has {} entries",
                self.k,
                self.parts.len()
            )));
        }
        let n: usize = self.parts.iter().map(Vec::len).sum();
        let mut part_of = vec![usize::MAX; n];
        for (p, members) in self.parts.iter().enumerate() {
            for &v in members {
                if v >= n {
                    return Err(Error::Parse(format!(
                        "vertex id {v} out of range: ids must be 0..{n}"
                    )));
                }
                if part_of[v] != usize::MAX {
                    return Err(Error::Parse(format!("vertex {v} listed twice")));
                }
                part_of[v] = p;
            }
        }
        let g = PartiteGraph::new(self.k, part_of, self.edges.iter().map(|&[u, v]| (u, v)))
            .map_err(|e| Error::Parse(e.to_string()))?;
        let x = match &self.x {
            Some(xs) => Some(Transversal::new(&g, xs.clone()).map_err(|e| Error::Parse(e.to_string()))?),
            None => None,
        };
        Ok((g, x))
    }
}

pub fn graph_to_json(g: &PartiteGraph) -> String {
    GraphDocument::from_graph(g).to_json()
}

pub fn graph_from_json(text: &str) -> Result<(PartiteGraph, Option<Transversal>)> {
    GraphDocument::from_json(text)?.to_graph()
}

/// Graphviz export with one cluster per part; transversal vertices are drawn
/// as boxes.
pub fn to_dot(g: &PartiteGraph, x: Option<&Transversal>) -> String {
    let mut out = String::from("graph partite {\n");
    for p in 0..g.part_count() {
        let _ = writeln!(out, "  subgraph cluster_{p} {{");
        let _ = writeln!(out, "    label=\"V{p}\";");
        for v in g.part_members(p) {
            let shape = if x.is_some_and(|x| x.contains(v)) { "box" } else { "circle" };
            let _ = writeln!(out, "    {v} [shape={shape}];");
        }
        out.push_str("  }\n");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_layout() {
        let g = PartiteGraph::new(3, vec![0, 1, 2, 1], [(1, 2), (0, 1), (0, 2), (3, 2)]).unwrap();
        let x = Transversal::new(&g, vec![0, 1, 2]).unwrap();
        let doc = GraphDocument::from_graph(&g)
            .with_transversal(&x)
            .with_provenance(Provenance::new("demo", [("r", 3), ("k", 3)]))
            .with_value(2);
        assert_eq!(
            doc.to_json(),
            "{\"k\":3,\"parts\":[[0],[1,3],[2]],\"edges\":[[0,1],[0,2],[1,2],[2,3]],\"X\":[0,1,2],\
             \"provenance\":{\"construction\":\"demo\",\"params\":{\"k\":3,\"r\":3}},\"value\":2}\n"
        );
    }

    #[test]
    fn parse_rejects_bad_documents() {
        let bad_ids = r#"{"k":2,"parts":[[0],[5]],"edges":[]}"#;
        assert!(matches!(graph_from_json(bad_ids), Err(Error::Parse(_))));
        let intra = r#"{"k":1,"parts":[[0,1]],"edges":[[0,1]]}"#;
        assert!(matches!(graph_from_json(intra), Err(Error::Parse(_))));
        let wrong_k = r#"{"k":3,"parts":[[0],[1]],"edges":[]}"#;
        assert!(matches!(graph_from_json(wrong_k), Err(Error::Parse(_))));
        assert!(matches!(graph_from_json("not json"), Err(Error::Parse(_))));
    }

    #[test]
    fn dot_has_one_cluster_per_part() {
        let g = PartiteGraph::new(3, vec![0, 2], [(0, 1)]).unwrap();
        let dot = to_dot(&g, None);
        assert_eq!(dot.matches("subgraph cluster_").count(), 3);
        assert!(dot.contains("0 -- 1;"));
    }
}
