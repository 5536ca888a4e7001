use crate::constructions::{expect_size, BetaWitness};
use crate::error::{Error, Result};
use crate::graph::{GraphBuilder, PartiteGraph};
use crate::io::Provenance;

/// `i + 1` isolated vertices in distinct parts plus `k - i - 1` empty parts;
/// certifies `(i, k, 2)`.
pub fn beta_empty_base(i: usize, k: usize) -> Result<BetaWitness> {
    if i < 1 || k < i + 1 {
        return Err(Error::input(format!("empty base needs 1 <= i < k, got i = {i}, k = {k}")));
    }
    let g = PartiteGraph::new(k, (0..=i).collect(), [])?;
    BetaWitness::certify(g, i, 2, Provenance::new("beta-empty-base", [("i", i), ("k", k)]))
}

/// The `(r-2)`-th power of the cycle on `i(r-1)+1` vertices, one vertex per
/// part, padded with empty parts up to `k`.
pub fn cycle_power_witness(i: usize, r: usize, k: usize) -> Result<BetaWitness> {
    if i < 2 || r < 2 {
        return Err(Error::input(format!("cycle power needs i >= 2 and r >= 2, got i = {i}, r = {r}")));
    }
    let m = i * (r - 1) + 1;
    if k < m {
        return Err(Error::input(format!("cycle power needs k >= {m}, got k = {k}")));
    }
    let edges = (0..m).flat_map(|u| (1..=r - 2).map(move |d| (u, (u + d) % m)));
    let g = PartiteGraph::new(k, (0..m).collect(), edges.collect::<Vec<_>>())?;
    BetaWitness::certify(
        g,
        i,
        r,
        Provenance::new("cycle-power", [("i", i), ("r", r), ("k", k)]),
    )
}

/// `i + 1` disjoint cliques of size `r - 1`, every vertex in its own part.
pub fn disjoint_cliques_witness(i: usize, r: usize, k: usize) -> Result<BetaWitness> {
    if i < 1 || r < 2 {
        return Err(Error::input(format!("disjoint cliques need i >= 1 and r >= 2, got i = {i}, r = {r}")));
    }
    let size = r - 1;
    let n = (i + 1) * size;
    if k < n {
        return Err(Error::input(format!("disjoint cliques need k >= {n}, got k = {k}")));
    }
    let edges = (0..=i).flat_map(|c| {
        let base = c * size;
        (0..size).flat_map(move |a| (a + 1..size).map(move |b| (base + a, base + b)))
    });
    let g = PartiteGraph::new(k, (0..n).collect(), edges.collect::<Vec<_>>())?;
    BetaWitness::certify(
        g,
        i,
        r,
        Provenance::new("disjoint-cliques", [("i", i), ("r", r), ("k", k)]),
    )
}

/// Turns a witness for `(i, k-1, r-1)` into one for `(i, k, r)` with `i + 1`
/// more vertices.
///
/// New vertices `v_1..v_i` go into the first `i` parts of `h` and `v_{i+1}`
/// into a new last part. `v_{i+1}` is joined to all of `h`; `v_j` is joined to
/// every vertex of `h` outside its own part.
pub fn beta_inductive_step(h: &BetaWitness) -> Result<BetaWitness> {
    let i = h.i();
    if h.k() < i + 1 {
        return Err(Error::input(format!(
            "inductive step needs the input to have at least i + 1 = {} parts, got {}",
            i + 1,
            h.k()
        )));
    }
    let hg = h.graph();
    let n = hg.vertex_count();
    let mut b = GraphBuilder::from_graph(hg);
    let new_part = b.add_part();
    let side: Vec<_> = (0..i).map(|j| b.add_vertex(j)).collect();
    let apex = b.add_vertex(new_part);
    for v in 0..n {
        b.add_edge(apex, v);
        for (j, &s) in side.iter().enumerate() {
            if hg.part_of(v) != j {
                b.add_edge(s, v);
            }
        }
    }
    let out = BetaWitness::certify(
        b.build()?,
        i,
        h.r() + 1,
        Provenance::new("beta-step", [("i", i), ("k", h.k() + 1), ("r", h.r() + 1)])
            .with_input(h.provenance().clone()),
    )?;
    expect_size("inductive step size", out.size(), n + i + 1)?;
    Ok(out)
}

/// `r - 2` inductive steps on the empty base; certifies `(i, k, r)` with
/// `(i + 1)(r - 1)` vertices.
pub fn beta_step_chain(i: usize, k: usize, r: usize) -> Result<BetaWitness> {
    if r < 2 || k + 2 < r + i + 1 {
        return Err(Error::input(format!(
            "step chain needs r >= 2 and 1 <= i <= k - r + 1, got i = {i}, k = {k}, r = {r}"
        )));
    }
    let mut w = beta_empty_base(i, k + 2 - r)?;
    for _ in 2..r {
        w = beta_inductive_step(&w)?;
    }
    Ok(w)
}

/// Witness for `i = 2` of size `4r - k - 2` when `r < k < 2r - 1`, built by
/// `2r - k - 1` inductive steps on a cycle power. At `k = 2r - 1` this is the
/// cycle power itself.
pub fn beta2_small_witness(k: usize, r: usize) -> Result<BetaWitness> {
    if r < 2 || k <= r || k > 2 * r - 1 {
        return Err(Error::input(format!("beta2 small witness needs 2 <= r < k <= 2r - 1, got k = {k}, r = {r}")));
    }
    if k == 2 * r - 1 {
        return cycle_power_witness(2, r, k);
    }
    let steps = 2 * r - k - 1;
    let mut w = cycle_power_witness(2, r - steps, k - steps)?;
    for _ in 0..steps {
        if w.r() + 1 < 3 {
            return Err(Error::input("inductive steps must produce r >= 3"));
        }
        w = beta_inductive_step(&w)?;
    }
    expect_size("beta2 small witness size", w.size(), 4 * r - k - 2)?;
    Ok(w)
}

/// Smallest available witness for `(2, k, r)`: the cycle power when
/// `k >= 2r - 1`, otherwise the inductive construction.
pub fn best_beta2_witness(k: usize, r: usize) -> Result<BetaWitness> {
    if r >= 2 && k >= 2 * r - 1 {
        cycle_power_witness(2, r, k)
    } else {
        beta2_small_witness(k, r)
    }
}

/// Combines witnesses for `(2, r1, r1 - 1)` and `(2, r2, r2 - 1)` into one for
/// `(2, r1 + r2, r1 + r2 - 1)` with six extra vertices.
///
/// The two inputs are completely joined to each other. The extra vertices
/// `x_j, y_j` go into the first part of `g_j` and `z_j` into its second part;
/// they are joined to every admissible vertex of both inputs, and inside the
/// six the only edges are `x1z1, x2z2, y1y2, z1z2, y1z2, z1y2`, a
/// triangle-free graph.
pub fn beta2_combine(g1: &BetaWitness, g2: &BetaWitness) -> Result<BetaWitness> {
    for (name, g) in [("first", g1), ("second", g2)] {
        if g.i() != 2 || g.k() != g.r() + 1 || g.k() < 3 {
            return Err(Error::input(format!(
                "{name} input must certify (2, r, r - 1) with r >= 3, got ({}, {}, {})",
                g.i(),
                g.k(),
                g.r()
            )));
        }
    }
    let (r1, r2) = (g1.k(), g2.k());
    let union = g1.graph().disjoint_union(g2.graph());
    let rest = union.vertex_count();
    let mut b = GraphBuilder::from_graph(&union);
    for u in 0..g1.size() {
        for v in g1.size()..rest {
            b.add_edge(u, v);
        }
    }
    let x1 = b.add_vertex(0);
    let y1 = b.add_vertex(0);
    let z1 = b.add_vertex(1);
    let x2 = b.add_vertex(r1);
    let y2 = b.add_vertex(r1);
    let z2 = b.add_vertex(r1 + 1);
    for u in [x1, y1, z1, x2, y2, z2] {
        for v in 0..rest {
            if b.part_of(u) != union.part_of(v) {
                b.add_edge(u, v);
            }
        }
    }
    for (u, v) in [(x1, z1), (x2, z2), (y1, y2), (z1, z2), (y1, z2), (z1, y2)] {
        b.add_edge(u, v);
    }
    let out = BetaWitness::certify(
        b.build()?,
        2,
        r1 + r2 - 1,
        Provenance::new("beta2-combine", [("r1", r1), ("r2", r2)])
            .with_input(g1.provenance().clone())
            .with_input(g2.provenance().clone()),
    )?;
    expect_size("combined size", out.size(), g1.size() + g2.size() + 6)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clique::has_clique;
    use crate::error::Violation;

    #[test]
    fn empty_base_shapes() {
        let w = beta_empty_base(2, 3).unwrap();
        assert_eq!((w.size(), w.graph().edge_count(), w.r()), (3, 0, 2));
        let w = beta_empty_base(1, 2).unwrap();
        assert_eq!(w.size(), 2);
        assert!(matches!(beta_empty_base(2, 2), Err(Error::Input(_))));
    }

    #[test]
    fn cycle_powers() {
        let c5 = cycle_power_witness(2, 3, 5).unwrap();
        assert_eq!((c5.size(), c5.graph().edge_count()), (5, 5));
        let c7sq = cycle_power_witness(2, 4, 7).unwrap();
        assert_eq!((c7sq.size(), c7sq.graph().edge_count()), (7, 14));
        let iso = cycle_power_witness(2, 2, 3).unwrap();
        assert_eq!((iso.size(), iso.graph().edge_count()), (3, 0));
        assert!(cycle_power_witness(2, 3, 4).is_err());
        assert!(cycle_power_witness(1, 3, 9).is_err());
    }

    #[test]
    fn disjoint_cliques() {
        let w = disjoint_cliques_witness(1, 3, 4).unwrap();
        assert_eq!((w.size(), w.graph().edge_count()), (4, 2));
        let w = disjoint_cliques_witness(2, 2, 3).unwrap();
        assert_eq!((w.size(), w.graph().edge_count()), (3, 0));
        let w = disjoint_cliques_witness(1, 4, 6).unwrap();
        assert_eq!((w.size(), w.graph().edge_count()), (6, 6));
        assert!(disjoint_cliques_witness(1, 4, 5).is_err());
    }

    #[test]
    fn inductive_steps() {
        let w = beta_inductive_step(&beta_empty_base(2, 3).unwrap()).unwrap();
        assert_eq!((w.i(), w.k(), w.r(), w.size()), (2, 4, 3, 6));
        let w2 = beta_inductive_step(&w).unwrap();
        assert_eq!((w2.k(), w2.r(), w2.size()), (5, 4, 9));
        let w = beta_inductive_step(&beta_empty_base(1, 2).unwrap()).unwrap();
        assert_eq!((w.i(), w.k(), w.r(), w.size()), (1, 3, 3, 4));
    }

    #[test]
    fn uncertified_graphs_are_rejected() {
        let triangle = PartiteGraph::plain(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(matches!(
            BetaWitness::certify(triangle, 1, 3, Provenance::new("bad", [])),
            Err(Error::Witness(Violation::Clique(_)))
        ));
    }

    #[test]
    fn small_beta2_sizes() {
        assert_eq!(beta2_small_witness(4, 3).unwrap().size(), 6);
        assert_eq!(beta2_small_witness(6, 4).unwrap().size(), 8);
        assert_eq!(beta2_small_witness(5, 4).unwrap().size(), 9);
        let delegated = beta2_small_witness(5, 3).unwrap();
        assert_eq!((delegated.size(), delegated.provenance().construction.as_str()), (5, "cycle-power"));
        assert!(beta2_small_witness(3, 3).is_err());
        assert!(beta2_small_witness(7, 3).is_err());
    }

    #[test]
    fn combine_size_law() {
        let b3 = cycle_power_witness(2, 2, 3).unwrap();
        let b4 = beta2_small_witness(4, 3).unwrap();
        let w = beta2_combine(&b3, &b3).unwrap();
        assert_eq!((w.k(), w.r(), w.size()), (6, 5, 12));
        let w = beta2_combine(&b3, &b4).unwrap();
        assert_eq!((w.k(), w.r(), w.size()), (7, 6, 15));
        assert!(beta2_combine(&b3, &cycle_power_witness(2, 3, 5).unwrap()).is_err());
    }

    #[test]
    fn combine_gadget_is_triangle_free() {
        let b3 = cycle_power_witness(2, 2, 3).unwrap();
        let w = beta2_combine(&b3, &b3).unwrap();
        let g = w.graph();
        let n = g.vertex_count();
        let (gadget, _) = g.induced(&(n - 6..n).collect::<Vec<_>>(), g.part_count(), |p| p).unwrap();
        assert_eq!(gadget.edge_count(), 6);
        assert!(!has_clique(&gadget, 3));
    }
}
