use crate::constructions::{
    alpha_base, alpha_blowup, alpha_from_beta2, best_beta2_witness, AlphaWitness,
};
use crate::error::{Error, Result};
use crate::graph::{GraphBuilder, PartiteGraph, VertexId};
use crate::io::Provenance;
use crate::saturation::saturation_closure;

/// The smallest-value alpha witness this crate can build for `(k, r)`.
///
/// Uses the two-per-part gadget (plus blow-up) when `r` is even and
/// `k >= 2r - 2`, or when `r = 2 (mod 3)` and `k >= 2r - 1`; otherwise adds a
/// transversal to the best available beta witness for `(2, k, r - 1)`.
pub fn best_alpha_witness(k: usize, r: usize) -> Result<AlphaWitness> {
    if r < 3 || k < r {
        return Err(Error::Unsupported(format!("need k >= r >= 3, got k = {k}, r = {r}")));
    }
    let gadget = if r >= 4 && r % 2 == 0 && k >= 2 * r - 2 {
        Some(2)
    } else if r >= 4 && r % 3 == 2 && k >= 2 * r - 1 {
        Some(3)
    } else {
        None
    };
    match gadget {
        Some(p) => {
            let base = alpha_base(r, p)?;
            if k == base.k() {
                Ok(base)
            } else {
                alpha_blowup(&base, k)
            }
        }
        None => alpha_from_beta2(&best_beta2_witness(k, r - 1)?, r),
    }
}

/// A saturated graph with exactly `n` vertices in every part.
#[derive(Debug, Clone)]
pub struct SatWitness {
    pub graph: PartiteGraph,
    /// For each vertex, the vertex of the pruned alpha witness it copies.
    pub origin: Vec<VertexId>,
    /// `e(X, X^c)` of the alpha witness the graph was grown from.
    pub alpha_value: usize,
    pub provenance: Provenance,
}

impl SatWitness {
    /// `a n + a^2` for the alpha value `a` used.
    pub fn edge_bound(&self, n: usize) -> usize {
        self.alpha_value * n + self.alpha_value * self.alpha_value
    }
}

/// A `K_r`-partite-saturated `k`-partite graph with `n` vertices per part.
///
/// Starts from [`best_alpha_witness`], deletes the non-transversal vertices
/// with no transversal neighbor, re-saturates the remaining non-transversal
/// pairs, and finally blows the transversal vertex of each part up into an
/// independent class that fills the part to `n` vertices.
pub fn sat_witness(k: usize, r: usize, n: usize) -> Result<SatWitness> {
    let alpha = best_alpha_witness(k, r)?;
    let a = alpha.value();
    if n < a + 1 {
        return Err(Error::input(format!("n = {n} must be at least {}", a + 1)));
    }
    let g = alpha.graph();
    let x = alpha.transversal();
    let in_x = x.as_set(g.vertex_count());
    let keep: Vec<VertexId> = g
        .vertices()
        .filter(|&v| in_x.contains(v) || g.neighbors(v).intersection_len(&in_x) > 0)
        .collect();
    let (pruned, pruned_origin) = g.induced(&keep, k, |p| p)?;
    let pruned_x: Vec<VertexId> = x
        .vertices()
        .iter()
        .map(|xv| keep.iter().position(|v| v == xv).expect("transversal is kept"))
        .collect();
    let is_x = |v: VertexId| pruned_x.contains(&v);
    let closed = saturation_closure(&pruned, r, |u, v| !is_x(u) && !is_x(v))?;

    // lay parts out one after another: the part's other vertices, then the class
    let mut b = GraphBuilder::new(k);
    let mut origin = Vec::with_capacity(k * n);
    let mut image: Vec<Vec<VertexId>> = vec![Vec::new(); closed.vertex_count()];
    for p in 0..k {
        let others: Vec<VertexId> = closed.part_members(p).into_iter().filter(|&v| !is_x(v)).collect();
        for &v in &others {
            image[v].push(b.add_vertex(p));
            origin.push(pruned_origin[v]);
        }
        let xv = pruned_x[p];
        for _ in 0..n - others.len() {
            image[xv].push(b.add_vertex(p));
            origin.push(pruned_origin[xv]);
        }
    }
    for (u, v) in closed.edges() {
        for &a in &image[u] {
            for &c in &image[v] {
                b.add_edge(a, c);
            }
        }
    }
    Ok(SatWitness {
        graph: b.build()?,
        origin,
        alpha_value: a,
        provenance: Provenance::new("sat-witness", [("k", k), ("r", r), ("n", n)])
            .with_input(alpha.provenance().clone()),
    })
}
