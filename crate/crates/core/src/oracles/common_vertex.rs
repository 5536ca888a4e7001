use crate::bitset::VertexSet;
use crate::clique::{all_cliques_of_size, clique_number};
use crate::error::{Error, Result};
use crate::graph::PartiteGraph;

/// Vertices lying in every `K_s` of `g`.
///
/// Requires at most `2s - 1` vertices and clique number exactly `s`.
pub fn common_vertices(g: &PartiteGraph, s: usize) -> Result<VertexSet> {
    let n = g.vertex_count();
    if s == 0 || n > 2 * s - 1 {
        return Err(Error::input(format!("need s >= 1 and at most 2s - 1 = {} vertices, got {n}", (2 * s).saturating_sub(1))));
    }
    let omega = clique_number(g);
    if omega != s {
        return Err(Error::input(format!("clique number is {omega}, expected {s}")));
    }
    let mut common = g.all_vertices();
    for c in all_cliques_of_size(g, s) {
        common.intersect_with(&VertexSet::from_iter_with_capacity(n, c));
    }
    Ok(common)
}

/// Whether some vertex lies in every maximum clique.
pub fn common_vertex_check(g: &PartiteGraph, s: usize) -> Result<bool> {
    Ok(!common_vertices(g, s)?.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> PartiteGraph {
        PartiteGraph::plain(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    #[test]
    fn complete_graph() {
        assert_eq!(common_vertices(&complete(4), 4).unwrap().len(), 4);
    }

    #[test]
    fn two_cliques_sharing_a_vertex() {
        // K_3 on {0,1,2} and K_3 on {2,3,4}
        let g = PartiteGraph::plain(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        let c = common_vertices(&g, 3).unwrap();
        assert_eq!(c.iter().collect::<Vec<_>>(), vec![2]);
    }

    #[test]
    fn preconditions() {
        assert!(matches!(common_vertex_check(&complete(3), 4), Err(Error::Input(_))));
        let c5 = PartiteGraph::plain(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        // C5 has 5 > 2*2 - 1 vertices
        assert!(matches!(common_vertex_check(&c5, 2), Err(Error::Input(_))));
    }
}
