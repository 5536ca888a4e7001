use crate::constructions::{expect_size, AlphaWitness, BetaWitness};
use crate::error::{Error, Result};
use crate::graph::{GraphBuilder, PartiteGraph, Transversal};
use crate::io::Provenance;
use crate::saturation::saturation_closure;

/// Alpha witness from a beta witness for `(2, k, r - 1)`.
///
/// One transversal vertex `x_i` is added to each part and joined to every
/// vertex of `g1` outside its part; the closure then saturates pairs among
/// the original vertices. The value is `(k - 1) |g1|`.
pub fn alpha_from_beta2(g1: &BetaWitness, r: usize) -> Result<AlphaWitness> {
    if r < 3 {
        return Err(Error::input(format!("r = {r} must be at least 3")));
    }
    if g1.i() != 2 || g1.r() + 1 != r {
        return Err(Error::input(format!(
            "need a witness for (2, k, {}), got ({}, {}, {})",
            r - 1,
            g1.i(),
            g1.k(),
            g1.r()
        )));
    }
    let base = g1.graph();
    let n1 = base.vertex_count();
    let k = base.part_count();
    let mut b = GraphBuilder::from_graph(base);
    let xs: Vec<_> = (0..k).map(|p| b.add_vertex(p)).collect();
    for (p, &x) in xs.iter().enumerate() {
        for v in 0..n1 {
            if base.part_of(v) != p {
                b.add_edge(x, v);
            }
        }
    }
    let g = saturation_closure(&b.build()?, r, |u, v| u < n1 && v < n1)?;
    let x = Transversal::new(&g, xs)?;
    let w = AlphaWitness::certify(
        g,
        x,
        r,
        Provenance::new("alpha-from-beta2", [("k", k), ("r", r)]).with_input(g1.provenance().clone()),
    )?;
    expect_size("alpha-from-beta2 value", w.value(), (k - 1) * n1)?;
    Ok(w)
}

/// The two-vertices-per-part gadget on `k = 2r - 4 + p` parts.
///
/// Part `i` is `{x_i, y_i}`. The `y`'s induce `K_k` minus the cycle
/// `y_0 y_1 ... y_{k-1}`; `x_i y_j` is an edge iff `i != j (mod k/p)`, so every
/// `x` misses exactly `p` equally spaced `y`'s and has degree `2r - 4`.
/// Pairs among the `y`'s are then closed under saturation.
pub fn alpha_base(r: usize, p: usize) -> Result<AlphaWitness> {
    if !(p == 2 || p == 3) || r < 4 || (r - 2) % p != 0 {
        return Err(Error::input(format!(
            "gadget needs p in {{2, 3}} dividing r - 2 and r >= 4, got r = {r}, p = {p}"
        )));
    }
    let k = 2 * r - 4 + p;
    let period = k / p;
    let x = |i: usize| i;
    let y = |i: usize| k + i;
    let mut edges = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if !consecutive {
                edges.push((y(i), y(j)));
            }
        }
        for j in 0..k {
            if i % period != j % period {
                edges.push((x(i), y(j)));
            }
        }
    }
    let part_of = (0..2 * k).map(|v| v % k).collect();
    let g = PartiteGraph::new(k, part_of, edges)?;
    let g = saturation_closure(&g, r, |u, v| u >= k && v >= k)?;
    let xs = Transversal::new(&g, (0..k).collect())?;
    let w = AlphaWitness::certify(g, xs, r, Provenance::new("alpha-base", [("r", r), ("p", p)]))?;
    expect_size("gadget value", w.value(), k * (2 * r - 4))?;
    for i in 0..k {
        expect_size("transversal degree", w.graph().degree(x(i)), 2 * r - 4)?;
    }
    Ok(w)
}

/// Extends a witness to `k` parts by adding copies of the first transversal
/// vertex, each alone in a new part with exactly the original's
/// neighborhood.
pub fn alpha_blowup(base: &AlphaWitness, k: usize) -> Result<AlphaWitness> {
    let k0 = base.k();
    if k <= k0 {
        return Err(Error::input(format!(
            "blow-up target k = {k} must exceed the base part count {k0}"
        )));
    }
    let g0 = base.graph();
    let x1 = base.transversal().in_part(0);
    let mut b = GraphBuilder::from_graph(g0);
    let mut xs = base.transversal().vertices().to_vec();
    for _ in k0..k {
        let part = b.add_part();
        let copy = b.add_vertex(part);
        for w in g0.neighbors(x1).iter() {
            b.add_edge(copy, w);
        }
        xs.push(copy);
    }
    let g = b.build()?;
    let x = Transversal::new(&g, xs)?;
    let mut params: Vec<(&str, usize)> = vec![("k", k), ("r", base.r())];
    params.extend(base.provenance().params.get("p").map(|&p| ("p", p)));
    let w = AlphaWitness::certify(
        g,
        x,
        base.r(),
        Provenance::new("alpha-blowup", params).with_input(base.provenance().clone()),
    )?;
    expect_size(
        "blow-up value",
        w.value(),
        base.value() + (k - k0) * g0.degree(x1),
    )?;
    Ok(w)
}
