//! Constructions, verifiers and exhaustive searches for K_r-partite-saturated
//! k-partite graphs.

pub mod bitset;
pub mod cli;
pub mod clique;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod io;
pub mod oracles;
pub mod saturation;
pub mod special;
pub mod verify;

pub use bitset::VertexSet;
pub use clique::{clique_number, find_clique, has_clique};
pub use constructions::{AlphaWitness, BetaWitness};
pub use error::{Error, Result, Violation};
pub use graph::{GraphBuilder, PartiteGraph, Transversal, VertexId};
pub use io::{GraphDocument, Provenance};
pub use saturation::{
    edges_between, is_admissible_nonedge, is_partite_saturated, neighborhood_restriction,
    nonedge_is_saturated, saturation_closure,
};
pub use oracles::{
    alpha_bounded_search, beta_exact, bounds_table, common_vertex_check, families_generate, families_verify,
    BoundsRecord, FamilyCollection, SearchOutcome, SearchStatus,
};
pub use special::{special_degrees, SpecialDegreeReport};
pub use verify::{beta_violation, verify_alpha_witness, verify_beta_witness};
