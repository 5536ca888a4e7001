//! Independent ground truth: exhaustive and bounded searches, the
//! intersecting set-system families, the common-vertex check and the bounds
//! calculator.

mod alpha_search;
mod beta_search;
mod bounds;
pub mod cache;
mod common_vertex;
mod families;

pub use alpha_search::{alpha_bounded_search, alpha_bounded_search_with};
pub use beta_search::{beta_exact, beta_exact_with, count_candidate_classes, profiles, MAX_EXACT_N};
pub use bounds::{bounds_table, BoundsRecord};
pub use common_vertex::{common_vertex_check, common_vertices};
pub use families::{families_generate, families_verify, FamilyCollection, FamilyViolation};

use serde::Serialize;

use crate::graph::{PartiteGraph, Transversal};
use crate::io::GraphDocument;

/// Default cap on explored search nodes.
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// Alpha classes with at most this many undecided pairs are searched
/// completely by default.
pub const DEFAULT_COMPLETE_PAIR_LIMIT: usize = 48;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    pub node_budget: u64,
    pub complete_pair_limit: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        Self {
            node_budget: DEFAULT_NODE_BUDGET,
            complete_pair_limit: DEFAULT_COMPLETE_PAIR_LIMIT,
        }
    }
}

impl SearchLimits {
    pub fn with_budget(node_budget: u64) -> Self {
        Self {
            node_budget,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SearchStatus {
    Found,
    /// No witness exists in the searched class.
    Exhausted,
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    /// Vertex count for beta searches, `e(X, X^c)` for alpha searches.
    pub value: Option<usize>,
    pub witness: Option<PartiteGraph>,
    pub transversal: Option<Transversal>,
    pub nodes_explored: u64,
    /// The largest size searched: `max_n` or `max_part_size`.
    pub budget: usize,
    /// The value came from a heuristic and is only an upper bound.
    pub heuristic: bool,
    pub seed: Option<u64>,
}

#[derive(Serialize)]
struct OutcomeJson<'a> {
    status: SearchStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<usize>,
    nodes_explored: u64,
    budget: usize,
    heuristic: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<&'a GraphDocument>,
}

impl SearchOutcome {
    pub fn is_found(&self) -> bool {
        self.status == SearchStatus::Found
    }

    pub fn witness_document(&self) -> Option<GraphDocument> {
        self.witness.as_ref().map(|g| {
            let doc = GraphDocument::from_graph(g);
            match &self.transversal {
                Some(x) => doc.with_transversal(x).with_value(self.value.unwrap_or_default()),
                None => doc,
            }
        })
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let doc = self.witness_document();
        serde_json::to_value(OutcomeJson {
            status: self.status,
            value: self.value,
            nodes_explored: self.nodes_explored,
            budget: self.budget,
            heuristic: self.heuristic,
            seed: self.seed,
            witness: doc.as_ref(),
        })
        .expect("outcomes always serialize")
    }
}

/// Whether the vertices of `cand` contain a clique of size `need`, on
/// adjacency bitmasks.
pub(crate) fn mask_has_clique(adj: &[u32], cand: u32, need: usize) -> bool {
    if need == 0 {
        return true;
    }
    if (cand.count_ones() as usize) < need {
        return false;
    }
    if need == 1 {
        return true;
    }
    let mut rest = cand;
    while rest != 0 && rest.count_ones() as usize >= need {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if mask_has_clique(adj, rest & adj[v], need - 1) {
            return true;
        }
    }
    false
}
