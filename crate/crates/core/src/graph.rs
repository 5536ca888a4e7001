//! The k-partite graph data model.
//!
//! Vertex ids are dense (`0..vertex_count`) and stable for the lifetime of a
//! graph value. Every edge joins two different parts; this is enforced on
//! every mutation, so a `PartiteGraph` can never hold an intra-part edge.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

pub type VertexId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartiteGraph {
    part_count: usize,
    part_of: Vec<usize>,
    adj: Vec<VertexSet>,
}

impl PartiteGraph {
    /// Builds a graph from an explicit part assignment and edge list.
    pub fn new(
        part_count: usize,
        part_of: Vec<usize>,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self> {
        if part_count == 0 {
            return Err(Error::input("part count must be positive"));
        }
        if let Some((v, &p)) = part_of.iter().enumerate().find(|(_, &p)| p >= part_count) {
            return Err(Error::input(format!(
                "vertex {v} assigned to part {p} but there are only {part_count} parts"
            )));
        }
        let n = part_of.len();
        let mut g = PartiteGraph {
            part_count,
            part_of,
            adj: vec![VertexSet::empty(n); n],
        };
        for (u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    /// A plain graph viewed as an `n`-partite graph with singleton parts.
    pub fn plain(n: usize, edges: impl IntoIterator<Item = (VertexId, VertexId)>) -> Result<Self> {
        PartiteGraph::new(n.max(1), (0..n).collect(), edges)
    }

    /// `part_count` parts and no vertices.
    pub fn empty(part_count: usize) -> Result<Self> {
        PartiteGraph::new(part_count, Vec::new(), [])
    }

    #[inline]
    pub fn part_count(&self) -> usize {
        self.part_count
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.part_of.len()
    }

    #[inline]
    pub fn part_of(&self, v: VertexId) -> usize {
        self.part_of[v]
    }

    pub fn part_assignment(&self) -> &[usize] {
        &self.part_of
    }

    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.vertex_count()
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    /// Vertices of part `p`, ascending.
    pub fn part_members(&self, p: usize) -> Vec<VertexId> {
        self.vertices().filter(|&v| self.part_of[v] == p).collect()
    }

    pub fn part_set(&self, p: usize) -> VertexSet {
        VertexSet::from_iter_with_capacity(
            self.vertex_count(),
            self.vertices().filter(|&v| self.part_of[v] == p),
        )
    }

    pub fn part_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.part_count];
        for &p in &self.part_of {
            sizes[p] += 1;
        }
        sizes
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::input(format!(
                "unknown vertex {v} (graph has {} vertices)",
                self.vertex_count()
            )))
        }
    }

    /// Adds an edge, rejecting loops, unknown ids and intra-part pairs.
    /// Adding an existing edge is a no-op.
    pub(crate) fn try_add_edge(&mut self, u: VertexId, v: VertexId) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::input(format!("self-loop at vertex {u}")));
        }
        if self.part_of[u] == self.part_of[v] {
            return Err(Error::input(format!(
                "edge {u}-{v} joins two vertices of part {}",
                self.part_of[u]
            )));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    /// Caller guarantees `u`, `v` are valid and in different parts.
    #[inline]
    pub(crate) fn add_edge_unchecked(&mut self, u: VertexId, v: VertexId) {
        debug_assert!(self.part_of[u] != self.part_of[v]);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    /// A copy with extra edges. Fails on intra-part pairs.
    pub fn with_edges(&self, edges: impl IntoIterator<Item = (VertexId, VertexId)>) -> Result<Self> {
        let mut g = self.clone();
        for (u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    /// The subgraph induced on `keep` (in the given order), with parts
    /// relabelled through `part_map` into `new_part_count` parts. Returns the
    /// new graph and, for each new vertex, its id in `self`.
    pub fn induced(
        &self,
        keep: &[VertexId],
        new_part_count: usize,
        part_map: impl Fn(usize) -> usize,
    ) -> Result<(PartiteGraph, Vec<VertexId>)> {
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in keep.iter().enumerate() {
            self.check_vertex(v)?;
            index[v] = i;
        }
        let part_of = keep.iter().map(|&v| part_map(self.part_of[v])).collect();
        let edges = keep.iter().enumerate().flat_map(|(i, &v)| {
            let index = &index;
            self.adj[v]
                .iter()
                .filter_map(move |w| (index[w] != usize::MAX && index[w] > i).then_some((i, index[w])))
        });
        let edges: Vec<_> = edges.collect();
        Ok((PartiteGraph::new(new_part_count, part_of, edges)?, keep.to_vec()))
    }

    /// Deletes the given parts entirely and re-indexes the remaining parts in
    /// their original order.
    pub fn without_parts(&self, parts: &[usize]) -> Result<(PartiteGraph, Vec<VertexId>)> {
        if parts.iter().any(|&p| p >= self.part_count) {
            return Err(Error::input("part index out of range"));
        }
        let removed: Vec<bool> = (0..self.part_count).map(|p| parts.contains(&p)).collect();
        let remaining = removed.iter().filter(|&&r| !r).count();
        if remaining == 0 {
            return Err(Error::input("cannot delete every part"));
        }
        let mut relabel = vec![usize::MAX; self.part_count];
        let mut next = 0;
        for p in 0..self.part_count {
            if !removed[p] {
                relabel[p] = next;
                next += 1;
            }
        }
        let keep: Vec<VertexId> = self.vertices().filter(|&v| !removed[self.part_of[v]]).collect();
        self.induced(&keep, remaining, |p| relabel[p])
    }

    /// Disjoint union; parts of `other` are appended after the parts of `self`.
    pub fn disjoint_union(&self, other: &PartiteGraph) -> PartiteGraph {
        let offset = self.vertex_count();
        let part_of = self
            .part_of
            .iter()
            .copied()
            .chain(other.part_of.iter().map(|p| p + self.part_count))
            .collect();
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + offset, v + offset)));
        PartiteGraph::new(self.part_count + other.part_count, part_of, edges.collect::<Vec<_>>())
            .expect("union of valid partite graphs is valid")
    }
}

/// Incremental construction of a [`PartiteGraph`].
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    part_count: usize,
    part_of: Vec<usize>,
    edges: Vec<(VertexId, VertexId)>,
}

impl GraphBuilder {
    pub fn new(part_count: usize) -> Self {
        Self {
            part_count,
            part_of: Vec::new(),
            edges: Vec::new(),
        }
    }

    /// Starts from an existing graph, keeping its vertex ids.
    pub fn from_graph(g: &PartiteGraph) -> Self {
        Self {
            part_count: g.part_count(),
            part_of: g.part_assignment().to_vec(),
            edges: g.edges().collect(),
        }
    }

    pub fn add_part(&mut self) -> usize {
        self.part_count += 1;
        self.part_count - 1
    }

    pub fn add_vertex(&mut self, part: usize) -> VertexId {
        assert!(part < self.part_count, "part {part} out of range");
        self.part_of.push(part);
        self.part_of.len() - 1
    }

    pub fn part_of(&self, v: VertexId) -> usize {
        self.part_of[v]
    }

    pub fn vertex_count(&self) -> usize {
        self.part_of.len()
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) {
        self.edges.push((u, v));
    }

    pub fn build(self) -> Result<PartiteGraph> {
        PartiteGraph::new(self.part_count, self.part_of, self.edges)
    }
}

/// One distinguished vertex per part; the `i`-th vertex lies in part `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transversal {
    vertices: Vec<VertexId>,
}

impl Transversal {
    pub fn new(g: &PartiteGraph, vertices: Vec<VertexId>) -> Result<Self> {
        if vertices.len() != g.part_count() {
            return Err(Error::input(format!(
                "transversal has {} vertices but the graph has {} parts",
                vertices.len(),
                g.part_count()
            )));
        }
        for (i, &v) in vertices.iter().enumerate() {
            g.check_vertex(v)?;
            if g.part_of(v) != i {
                return Err(Error::input(format!(
                    "transversal vertex {v} lies in part {} instead of part {i}",
                    g.part_of(v)
                )));
            }
        }
        Ok(Self { vertices })
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    /// The transversal vertex of part `i`.
    pub fn in_part(&self, i: usize) -> VertexId {
        self.vertices[i]
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn as_set(&self, capacity: usize) -> VertexSet {
        VertexSet::from_iter_with_capacity(capacity, self.vertices.iter().copied())
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}
