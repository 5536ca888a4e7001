//! Explicit constructions. Every generator returns a value that has already
//! passed the matching verifier, so holding an [`AlphaWitness`] or a
//! [`BetaWitness`] means holding a certified object.

mod alpha;
mod beta;
mod sat;

pub use alpha::{alpha_base, alpha_blowup, alpha_from_beta2};
pub use beta::{
    best_beta2_witness, beta2_combine, beta2_small_witness, beta_empty_base, beta_inductive_step,
    beta_step_chain, cycle_power_witness, disjoint_cliques_witness,
};
pub use sat::{best_alpha_witness, sat_witness, SatWitness};

use crate::error::{Error, Result, Violation};
use crate::graph::{PartiteGraph, Transversal};
use crate::io::{GraphDocument, Provenance};
use crate::verify::{beta_violation, verify_alpha_witness};

/// A certified `K_r`-partite-saturated graph with an independent transversal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaWitness {
    graph: PartiteGraph,
    x: Transversal,
    r: usize,
    value: usize,
    provenance: Provenance,
}

impl AlphaWitness {
    /// Runs the alpha verifier and records `e(X, X^c)`.
    pub fn certify(graph: PartiteGraph, x: Transversal, r: usize, provenance: Provenance) -> Result<Self> {
        let value = verify_alpha_witness(&graph, &x, r)?;
        Ok(Self {
            graph,
            x,
            r,
            value,
            provenance,
        })
    }

    pub fn graph(&self) -> &PartiteGraph {
        &self.graph
    }

    pub fn transversal(&self) -> &Transversal {
        &self.x
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn k(&self) -> usize {
        self.graph.part_count()
    }

    /// `e(X, X^c)`.
    pub fn value(&self) -> usize {
        self.value
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn to_document(&self) -> GraphDocument {
        GraphDocument::from_graph(&self.graph)
            .with_transversal(&self.x)
            .with_provenance(self.provenance.clone())
            .with_value(self.value)
    }
}

/// A certified `K_r`-free `k`-partite graph in which deleting any `i` parts
/// leaves a `K_{r-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetaWitness {
    graph: PartiteGraph,
    i: usize,
    r: usize,
    provenance: Provenance,
}

impl BetaWitness {
    pub fn certify(graph: PartiteGraph, i: usize, r: usize, provenance: Provenance) -> Result<Self> {
        if let Some(v) = beta_violation(&graph, i, r)? {
            return Err(Error::Witness(v));
        }
        Ok(Self {
            graph,
            i,
            r,
            provenance,
        })
    }

    pub fn graph(&self) -> &PartiteGraph {
        &self.graph
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn k(&self) -> usize {
        self.graph.part_count()
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// Number of vertices, the upper bound this witness certifies.
    pub fn size(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn to_document(&self) -> GraphDocument {
        GraphDocument::from_graph(&self.graph).with_provenance(self.provenance.clone())
    }
}

pub(crate) fn expect_size(what: &str, got: usize, want: usize) -> Result<()> {
    if got == want {
        Ok(())
    } else {
        Err(Error::Witness(Violation::Mismatch(format!(
            "{what}: expected {want}, got {got}"
        ))))
    }
}
