//! Clique detection.
//!
//! Branch and bound over dense neighbor sets. Candidates are ordered by a
//! greedy sequential coloring; the color number of a candidate bounds the
//! largest clique among it and every candidate before it, which prunes a
//! branch as soon as the bound drops below the number of vertices still
//! needed.

use crate::bitset::VertexSet;
use crate::graph::{PartiteGraph, VertexId};

/// Whether `g` contains `r` pairwise-adjacent vertices.
pub fn has_clique(g: &PartiteGraph, r: usize) -> bool {
    find_clique(g, r).is_some()
}

/// Some clique on exactly `r` vertices, if one exists.
pub fn find_clique(g: &PartiteGraph, r: usize) -> Option<Vec<VertexId>> {
    find_clique_within(g, &g.all_vertices(), r)
}

/// Some `r`-clique using only vertices of `within`.
pub fn find_clique_within(g: &PartiteGraph, within: &VertexSet, r: usize) -> Option<Vec<VertexId>> {
    let mut stack = Vec::with_capacity(r);
    if extend(g, within.clone(), r, &mut stack) {
        stack.sort_unstable();
        Some(stack)
    } else {
        None
    }
}

pub fn has_clique_within(g: &PartiteGraph, within: &VertexSet, r: usize) -> bool {
    let mut stack = Vec::with_capacity(r);
    extend(g, within.clone(), r, &mut stack)
}

fn extend(g: &PartiteGraph, mut cand: VertexSet, need: usize, stack: &mut Vec<VertexId>) -> bool {
    if need == 0 {
        return true;
    }
    let size = cand.len();
    if size < need {
        return false;
    }
    if need == 1 {
        stack.push(cand.first().expect("nonempty"));
        return true;
    }
    if need == 2 {
        for v in cand.iter() {
            if let Some(w) = g.neighbors(v).intersection(&cand).first() {
                stack.push(v);
                stack.push(w);
                return true;
            }
        }
        return false;
    }
    let (order, colors) = color_order(g, &cand);
    for idx in (0..order.len()).rev() {
        if colors[idx] < need {
            return false;
        }
        let v = order[idx];
        let next = g.neighbors(v).intersection(&cand);
        stack.push(v);
        if extend(g, next, need - 1, stack) {
            return true;
        }
        stack.pop();
        cand.remove(v);
    }
    false
}

/// Greedy sequential coloring; vertices come back sorted by color, with the
/// (1-based) color of each.
fn color_order(g: &PartiteGraph, cand: &VertexSet) -> (Vec<VertexId>, Vec<usize>) {
    let mut uncolored = cand.clone();
    let mut order = Vec::with_capacity(cand.len());
    let mut colors = Vec::with_capacity(cand.len());
    let mut color = 0;
    while !uncolored.is_empty() {
        color += 1;
        let mut available = uncolored.clone();
        while let Some(v) = available.first() {
            available.remove(v);
            available.difference_with(g.neighbors(v));
            uncolored.remove(v);
            order.push(v);
            colors.push(color);
        }
    }
    (order, colors)
}

/// Size of a largest clique.
pub fn clique_number(g: &PartiteGraph) -> usize {
    let mut r = 0;
    while has_clique(g, r + 1) {
        r += 1;
    }
    r
}

/// Every clique of exactly `size` vertices, each sorted ascending, in
/// lexicographic order. Intended for small graphs.
pub fn all_cliques_of_size(g: &PartiteGraph, size: usize) -> Vec<Vec<VertexId>> {
    fn walk(
        g: &PartiteGraph,
        cand: VertexSet,
        size: usize,
        current: &mut Vec<VertexId>,
        out: &mut Vec<Vec<VertexId>>,
    ) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        if current.len() + cand.len() < size {
            return;
        }
        for v in cand.iter() {
            let mut next = g.neighbors(v).intersection(&cand);
            // only extend with larger ids so each clique appears once
            for w in 0..=v {
                next.remove(w);
            }
            current.push(v);
            walk(g, next, size, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    walk(g, g.all_vertices(), size, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> PartiteGraph {
        PartiteGraph::plain(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn cycle_power(n: usize, t: usize) -> PartiteGraph {
        let edges = (0..n).flat_map(|u| (1..=t).map(move |d| (u, (u + d) % n)));
        PartiteGraph::plain(n, edges).unwrap()
    }

    #[test]
    fn single_vertex_is_a_k1() {
        let g = PartiteGraph::plain(1, []).unwrap();
        assert!(has_clique(&g, 1));
        assert!(!has_clique(&g, 2));
    }

    #[test]
    fn c5_is_triangle_free() {
        let g = cycle(5);
        assert!(has_clique(&g, 2));
        assert!(!has_clique(&g, 3));
        assert_eq!(clique_number(&g), 2);
    }

    #[test]
    fn square_of_c7_is_k4_free() {
        let g = cycle_power(7, 2);
        assert!(has_clique(&g, 3));
        assert!(!has_clique(&g, 4));
    }

    #[test]
    fn r_larger_than_graph() {
        let g = cycle(4);
        assert!(!has_clique(&g, 9));
        assert!(has_clique(&g, 0));
    }

    #[test]
    fn found_clique_is_a_clique() {
        let g = cycle_power(11, 3);
        let c = find_clique(&g, 4).unwrap();
        for (i, &u) in c.iter().enumerate() {
            for &v in &c[i + 1..] {
                assert!(g.adjacent(u, v));
            }
        }
        assert!(!has_clique(&g, 5));
    }

    #[test]
    fn enumerates_all_triangles_of_k4() {
        let g = PartiteGraph::plain(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(all_cliques_of_size(&g, 3).len(), 4);
        assert_eq!(all_cliques_of_size(&g, 4), vec![vec![0, 1, 2, 3]]);
    }
}
