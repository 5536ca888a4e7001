//! Certification of alpha and beta witnesses.

use itertools::Itertools;

use crate::bitset::VertexSet;
use crate::clique::{find_clique, has_clique_within};
use crate::error::{Error, Result, Violation};
use crate::graph::{PartiteGraph, Transversal};
use crate::saturation::{edges_between, saturation_violation};

/// Certifies `(g, x)` as an alpha witness for `K_r` and returns the number
/// of edges between the transversal and the rest of the graph.
///
/// Checks that `x` is independent, that `g` is `K_r`-free, and that every
/// admissible non-edge of `g` is `K_r`-saturated.
pub fn verify_alpha_witness(g: &PartiteGraph, x: &Transversal, r: usize) -> Result<usize> {
    if r < 2 {
        return Err(Error::input("r must be at least 2"));
    }
    let xs = x.vertices();
    for (a, &u) in xs.iter().enumerate() {
        if let Some(&v) = xs[a + 1..].iter().find(|&&v| g.adjacent(u, v)) {
            return Err(Error::Witness(Violation::TransversalEdge(u, v)));
        }
    }
    if let Some(v) = saturation_violation(g, r) {
        return Err(Error::Witness(v));
    }
    Ok(edges_between(g, x))
}

fn check_beta_params(g: &PartiteGraph, i: usize, r: usize) -> Result<()> {
    let k = g.part_count();
    if r < 2 {
        return Err(Error::input(format!("r = {r} must be at least 2")));
    }
    if i < 1 || i + r > k + 1 {
        return Err(Error::input(format!(
            "i = {i} outside 1..={} for k = {k}, r = {r}",
            (k + 1).saturating_sub(r)
        )));
    }
    Ok(())
}

/// Why `g` fails the beta predicate for `(i, r)`, or `None` if it passes.
///
/// Part subsets are tried in lexicographic order, so the reported subset
/// is the first one that destroys every `K_{r-1}`.
pub fn beta_violation(g: &PartiteGraph, i: usize, r: usize) -> Result<Option<Violation>> {
    check_beta_params(g, i, r)?;
    if let Some(c) = find_clique(g, r) {
        return Ok(Some(Violation::Clique(c)));
    }
    let part_sets: Vec<VertexSet> = (0..g.part_count()).map(|p| g.part_set(p)).collect();
    for deleted in (0..g.part_count()).combinations(i) {
        let mut rest = g.all_vertices();
        for &p in &deleted {
            rest.difference_with(&part_sets[p]);
        }
        if !has_clique_within(g, &rest, r - 1) {
            return Ok(Some(Violation::PartsDestroyCliques(deleted)));
        }
    }
    Ok(None)
}

/// `g` is `K_r`-free and deleting any `i` parts leaves a `K_{r-1}`.
pub fn verify_beta_witness(g: &PartiteGraph, i: usize, r: usize) -> Result<bool> {
    beta_violation(g, i, r).map(|v| v.is_none())
}
