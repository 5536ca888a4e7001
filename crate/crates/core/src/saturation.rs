//! Admissible non-edges, saturation predicates and the saturation closure.

use crate::clique::{find_clique, has_clique_within};
use crate::error::{Error, Result, Violation};
use crate::graph::{PartiteGraph, Transversal, VertexId};

/// `u` and `v` lie in different parts and are not adjacent.
pub fn is_admissible_nonedge(g: &PartiteGraph, u: VertexId, v: VertexId) -> Result<bool> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    Ok(u != v && g.part_of(u) != g.part_of(v) && !g.adjacent(u, v))
}

/// Whether adding `uv` would complete a `K_r`, i.e. whether the common
/// neighborhood of `u` and `v` holds a `K_{r-2}`.
///
/// Does not re-check that `g` itself is `K_r`-free.
pub fn nonedge_is_saturated(g: &PartiteGraph, u: VertexId, v: VertexId, r: usize) -> Result<bool> {
    if !is_admissible_nonedge(g, u, v)? {
        return Err(Error::input(format!("{u}-{v} is not an admissible non-edge")));
    }
    Ok(common_neighborhood_has_clique(g, u, v, r.saturating_sub(2)))
}

#[inline]
pub(crate) fn common_neighborhood_has_clique(
    g: &PartiteGraph,
    u: VertexId,
    v: VertexId,
    size: usize,
) -> bool {
    let common = g.neighbors(u).intersection(g.neighbors(v));
    has_clique_within(g, &common, size)
}

/// First admissible non-edge (in `(u, v)`, `u < v` order) that is not
/// `K_r`-saturated. Assumes `g` is `K_r`-free.
pub fn first_unsaturated_nonedge(g: &PartiteGraph, r: usize) -> Option<(VertexId, VertexId)> {
    let need = r.saturating_sub(2);
    for u in g.vertices() {
        let mut others = g.all_vertices();
        others.difference_with(g.neighbors(u));
        for v in others.iter().filter(|&v| v > u && g.part_of(v) != g.part_of(u)) {
            if !common_neighborhood_has_clique(g, u, v, need) {
                return Some((u, v));
            }
        }
    }
    None
}

/// Why `g` fails to be `K_r`-partite-saturated, if it does.
pub fn saturation_violation(g: &PartiteGraph, r: usize) -> Option<Violation> {
    if let Some(c) = find_clique(g, r) {
        return Some(Violation::Clique(c));
    }
    first_unsaturated_nonedge(g, r).map(|(u, v)| Violation::UnsaturatedNonEdge(u, v))
}

/// `K_r`-free, and every admissible non-edge is `K_r`-saturated.
pub fn is_partite_saturated(g: &PartiteGraph, r: usize) -> bool {
    saturation_violation(g, r).is_none()
}

/// Vertices sorted by `(part, id)`; the order in which the closure scans pairs.
pub fn closure_order(g: &PartiteGraph) -> Vec<VertexId> {
    let mut order: Vec<VertexId> = g.vertices().collect();
    order.sort_by_key(|&v| (g.part_of(v), v));
    order
}

/// Adds admissible edges until every `allowed` admissible non-edge is
/// `K_r`-saturated.
///
/// Pairs are visited in ascending lexicographic order of their
/// `(part, id)` keys; a pair becomes an edge iff adding it creates no `K_r`.
/// Scans repeat until a full pass adds nothing.
pub fn saturation_closure(
    g: &PartiteGraph,
    r: usize,
    allowed: impl Fn(VertexId, VertexId) -> bool,
) -> Result<PartiteGraph> {
    if let Some(c) = find_clique(g, r) {
        return Err(Error::Precondition(format!(
            "closure input must be K_{r}-free, found clique {c:?}"
        )));
    }
    let need = r.saturating_sub(2);
    let order = closure_order(g);
    let mut out = g.clone();
    loop {
        let mut added = false;
        for (ia, &a) in order.iter().enumerate() {
            for &b in &order[ia + 1..] {
                if out.part_of(a) == out.part_of(b) || out.adjacent(a, b) || !allowed(a, b) {
                    continue;
                }
                if !common_neighborhood_has_clique(&out, a, b, need) {
                    out.add_edge_unchecked(a, b);
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }
    Ok(out)
}

/// Number of edges with exactly one endpoint in the transversal.
pub fn edges_between(g: &PartiteGraph, x: &Transversal) -> usize {
    let in_x = x.as_set(g.vertex_count());
    x.vertices()
        .iter()
        .map(|&v| {
            let mut outside = g.neighbors(v).clone();
            outside.difference_with(&in_x);
            outside.len()
        })
        .sum()
}

/// The subgraph induced on `N(v)`, as a `(k-1)`-partite graph over the parts
/// other than `v`'s (kept in order, possibly empty). Also returns the origin
/// id of each vertex.
pub fn neighborhood_restriction_with_origin(
    g: &PartiteGraph,
    v: VertexId,
) -> Result<(PartiteGraph, Vec<VertexId>)> {
    g.check_vertex(v)?;
    if g.part_count() < 2 {
        return Err(Error::input("neighborhood restriction needs at least two parts"));
    }
    let own = g.part_of(v);
    let keep: Vec<VertexId> = g.neighbors(v).iter().collect();
    g.induced(&keep, g.part_count() - 1, |p| if p < own { p } else { p - 1 })
}

pub fn neighborhood_restriction(g: &PartiteGraph, v: VertexId) -> Result<PartiteGraph> {
    neighborhood_restriction_with_origin(g, v).map(|(h, _)| h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clique::has_clique;

    fn path_abc() -> PartiteGraph {
        // a(part 0) - b(part 1) - c(part 2)
        PartiteGraph::new(3, vec![0, 1, 2], [(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn admissibility() {
        let g = PartiteGraph::new(3, vec![0, 0, 1, 2], [(0, 2)]).unwrap();
        assert!(!is_admissible_nonedge(&g, 0, 1).unwrap());
        assert!(!is_admissible_nonedge(&g, 0, 2).unwrap());
        assert!(is_admissible_nonedge(&g, 0, 3).unwrap());
        assert!(is_admissible_nonedge(&g, 0, 9).is_err());
    }

    #[test]
    fn r2_every_nonedge_is_saturated() {
        let g = PartiteGraph::new(2, vec![0, 1], []).unwrap();
        assert!(nonedge_is_saturated(&g, 0, 1, 2).unwrap());
    }

    #[test]
    fn path_common_neighbor_saturates() {
        let g = path_abc();
        assert!(nonedge_is_saturated(&g, 0, 2, 3).unwrap());
        assert!(nonedge_is_saturated(&g, 0, 1, 3).is_err());
    }

    #[test]
    fn complete_tripartite_is_not_k3_saturated() {
        let g = PartiteGraph::plain(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
        assert!(!is_partite_saturated(&g, 3));
        assert!(matches!(saturation_violation(&g, 3), Some(Violation::Clique(_))));
    }

    #[test]
    fn empty_graph_is_not_saturated() {
        let g = PartiteGraph::new(2, vec![0, 1], []).unwrap();
        assert_eq!(
            saturation_violation(&g, 3),
            Some(Violation::UnsaturatedNonEdge(0, 1))
        );
    }

    #[test]
    fn closure_adds_lonely_edge() {
        let g = PartiteGraph::new(2, vec![0, 1], []).unwrap();
        let h = saturation_closure(&g, 3, |_, _| true).unwrap();
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert!(is_partite_saturated(&h, 3));
    }

    #[test]
    fn closure_is_idempotent_and_respects_allowed() {
        let g = PartiteGraph::new(4, vec![0, 1, 2, 3, 0, 1], [(0, 1)]).unwrap();
        let h = saturation_closure(&g, 3, |_, _| true).unwrap();
        assert!(is_partite_saturated(&h, 3));
        assert_eq!(saturation_closure(&h, 3, |_, _| true).unwrap(), h);
        let only_low = saturation_closure(&g, 3, |a, b| a < 2 && b < 2).unwrap();
        assert_eq!(only_low, g);
    }

    #[test]
    fn closure_rejects_input_with_clique() {
        let g = PartiteGraph::plain(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
        assert!(matches!(
            saturation_closure(&g, 3, |_, _| true),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn closure_output_stays_clique_free() {
        let g = PartiteGraph::new(4, vec![0, 1, 2, 3, 0, 1, 2, 3], []).unwrap();
        for r in 3..=4 {
            let h = saturation_closure(&g, r, |_, _| true).unwrap();
            assert!(!has_clique(&h, r));
            assert!(is_partite_saturated(&h, r));
        }
    }

    #[test]
    fn neighborhood_of_isolated_vertex() {
        let g = PartiteGraph::new(3, vec![0, 1, 2], [(1, 2)]).unwrap();
        let h = neighborhood_restriction(&g, 0).unwrap();
        assert_eq!(h.part_count(), 2);
        assert_eq!(h.vertex_count(), 0);
    }

    #[test]
    fn neighborhood_in_k22() {
        // parts {0,1} and {2,3}
        let g = PartiteGraph::new(2, vec![0, 0, 1, 1], [(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let (h, origin) = neighborhood_restriction_with_origin(&g, 0).unwrap();
        assert_eq!(h.part_count(), 1);
        assert_eq!(origin, vec![2, 3]);
        assert_eq!(h.edge_count(), 0);
    }

    #[test]
    fn edges_between_counts_cross_edges_only() {
        let g = PartiteGraph::new(2, vec![0, 1, 0, 1], [(0, 3), (2, 3), (1, 2)]).unwrap();
        let x = Transversal::new(&g, vec![0, 1]).unwrap();
        assert_eq!(edges_between(&g, &x), 2);
        let iso = PartiteGraph::new(2, vec![0, 1, 0, 1], [(2, 3)]).unwrap();
        assert_eq!(edges_between(&iso, &Transversal::new(&iso, vec![0, 1]).unwrap()), 0);
    }
}
