//! Exhaustive search for the smallest beta witness.
//!
//! For every `n` in increasing order and every part-size profile (sizes sorted
//! descending, padded with empty parts to `k`), graphs are generated by
//! Read/Faradzev orderly generation:
//!
//! * vertices are numbered part by part, and the admissible pairs are listed
//!   in lexicographic order as positions `0..P`;
//! * an edge set is a `P`-bit string whose position `p` is bit `P - 1 - p`, so
//!   comparing strings lexicographically is comparing integers;
//! * a string is canonical when no element of the symmetry group (permutations
//!   of equal-size parts composed with permutations inside each part) maps it
//!   to a larger integer;
//! * children of a canonical string add one position after its last edge and
//!   are kept only if canonical and `K_r`-free.
//!
//! Every canonical `K_r`-free graph is reached exactly once, because deleting
//! the last edge of a canonical string leaves a canonical string.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use itertools::Itertools;
use rayon::prelude::*;

use crate::error::{Error, Partial, Result};
use crate::graph::PartiteGraph;
use crate::oracles::{mask_has_clique as has_clique, SearchLimits, SearchOutcome, SearchStatus};
use crate::verify::verify_beta_witness;

/// Largest vertex count the exact search accepts.
pub const MAX_EXACT_N: usize = 11;

/// Smallest `n <= max_n` admitting a witness for `(i, k, r)`, with default
/// limits.
pub fn beta_exact(i: usize, k: usize, r: usize, max_n: usize) -> Result<SearchOutcome> {
    beta_exact_with(i, k, r, max_n, &SearchLimits::default())
}

pub fn beta_exact_with(i: usize, k: usize, r: usize, max_n: usize, limits: &SearchLimits) -> Result<SearchOutcome> {
    if r < 2 || i < 1 || i + r > k + 1 {
        return Err(Error::input(format!(
            "need r >= 2 and 1 <= i <= k - r + 1, got i = {i}, k = {k}, r = {r}"
        )));
    }
    if max_n == 0 || max_n > MAX_EXACT_N {
        return Err(Error::input(format!("max_n must be in 1..={MAX_EXACT_N}, got {max_n}")));
    }
    let nodes = AtomicU64::new(0);
    let over = AtomicBool::new(false);
    let mode = Mode::Witness { i, r };
    for n in 1..=max_n {
        let profiles: Vec<Vec<usize>> = profiles(n, k)
            .into_iter()
            .filter(|p| p.iter().filter(|&&s| s > 0).count() >= i + r - 1)
            .collect();
        let found: Vec<Option<Best>> = profiles
            .par_iter()
            .map(|p| Enumerator::new(p, k, r, mode, limits.node_budget, &nodes, &over).run())
            .collect();
        if over.load(Ordering::Relaxed) {
            return Err(Error::Resource(Partial {
                nodes_explored: nodes.load(Ordering::Relaxed),
                exhausted_through: n.checked_sub(1).filter(|&m| m > 0),
                best_value: None,
                detail: format!("node budget {} exceeded while searching n = {n}", limits.node_budget),
            }));
        }
        let best = found
            .into_iter()
            .zip(&profiles)
            .filter_map(|(b, p)| b.map(|b| (b.edges, p.clone(), b.bits, b.graph)))
            .min_by(|a, b| (a.0, &a.1, a.2).cmp(&(b.0, &b.1, b.2)));
        if let Some((_, _, _, graph)) = best {
            if !verify_beta_witness(&graph, i, r)? {
                return Err(Error::Precondition("search produced a graph the verifier rejects".into()));
            }
            return Ok(SearchOutcome {
                status: SearchStatus::Found,
                value: Some(n),
                witness: Some(graph),
                transversal: None,
                nodes_explored: nodes.load(Ordering::Relaxed),
                budget: max_n,
                heuristic: false,
                seed: None,
            });
        }
    }
    Ok(SearchOutcome {
        status: SearchStatus::Exhausted,
        value: None,
        witness: None,
        transversal: None,
        nodes_explored: nodes.load(Ordering::Relaxed),
        budget: max_n,
        heuristic: false,
        seed: None,
    })
}

/// Number of `K_r`-free `k`-partite graphs on `n` vertices up to part
/// permutation and relabeling, as counted by the orderly generator.
pub fn count_candidate_classes(k: usize, r: usize, n: usize) -> Result<u64> {
    if k == 0 || r < 2 || n == 0 || n > MAX_EXACT_N {
        return Err(Error::input(format!(
            "need k >= 1, r >= 2 and 1 <= n <= {MAX_EXACT_N}, got k = {k}, r = {r}, n = {n}"
        )));
    }
    let nodes = AtomicU64::new(0);
    let over = AtomicBool::new(false);
    for p in profiles(n, k) {
        Enumerator::new(&p, k, r, Mode::Count, u64::MAX, &nodes, &over).run();
    }
    Ok(nodes.load(Ordering::Relaxed))
}

/// Partitions of `n` into at most `k` positive parts, descending, padded with
/// zeros to length `k`.
pub fn profiles(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(left: usize, max: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            let mut p = cur.clone();
            p.resize(cur.len() + slots, 0);
            out.push(p);
            return;
        }
        if slots == 0 {
            return;
        }
        for s in (1..=max.min(left)).rev() {
            cur.push(s);
            rec(left - s, s, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, k, &mut Vec::new(), &mut out);
    out
}

#[derive(Clone, Copy)]
enum Mode {
    Witness { i: usize, r: usize },
    Count,
}

struct Best {
    edges: u32,
    bits: u64,
    graph: PartiteGraph,
}

struct Enumerator<'a> {
    k: usize,
    r: usize,
    mode: Mode,
    n: usize,
    part_of: Vec<usize>,
    pairs: Vec<(usize, usize)>,
    /// `group[g][p]`: the bit that position `p` is sent to by element `g`.
    group: Vec<Vec<u64>>,
    /// `suffix[p][v]`: neighbors of `v` over positions `p..P`.
    suffix: Vec<Vec<u32>>,
    /// Vertex masks of the nonempty parts.
    part_masks: Vec<u32>,
    budget: u64,
    nodes: &'a AtomicU64,
    over: &'a AtomicBool,
    best: Option<Best>,
}

impl<'a> Enumerator<'a> {
    fn new(
        profile: &[usize],
        k: usize,
        r: usize,
        mode: Mode,
        budget: u64,
        nodes: &'a AtomicU64,
        over: &'a AtomicBool,
    ) -> Self {
        let part_of: Vec<usize> = profile
            .iter()
            .enumerate()
            .flat_map(|(p, &s)| std::iter::repeat(p).take(s))
            .collect();
        let n = part_of.len();
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| part_of[u] != part_of[v])
            .collect();
        let big = pairs.len();
        let bit = |p: usize| 1u64 << (big - 1 - p);
        let mut index = vec![vec![usize::MAX; n]; n];
        for (p, &(u, v)) in pairs.iter().enumerate() {
            index[u][v] = p;
            index[v][u] = p;
        }
        let group = symmetry_group(profile)
            .into_iter()
            .filter(|sigma| sigma.iter().enumerate().any(|(a, &b)| a != b))
            .map(|sigma| pairs.iter().map(|&(u, v)| bit(index[sigma[u]][sigma[v]])).collect())
            .collect();
        let mut suffix = vec![vec![0u32; n]; big + 1];
        for p in (0..big).rev() {
            let mut row = suffix[p + 1].clone();
            let (u, v) = pairs[p];
            row[u] |= 1 << v;
            row[v] |= 1 << u;
            suffix[p] = row;
        }
        let mut part_masks = vec![0u32; profile.iter().filter(|&&s| s > 0).count()];
        for (v, &p) in part_of.iter().enumerate() {
            part_masks[p] |= 1 << v;
        }
        Self {
            k,
            r,
            mode,
            n,
            part_of,
            pairs,
            group,
            suffix,
            part_masks,
            budget,
            nodes,
            over,
            best: None,
        }
    }

    fn run(mut self) -> Option<Best> {
        let mut adj = vec![0u32; self.n];
        self.visit(0, &mut adj, 0, 0);
        self.best
    }

    fn bit(&self, p: usize) -> u64 {
        1u64 << (self.pairs.len() - 1 - p)
    }

    fn is_canonical(&self, bits: u64) -> bool {
        self.group.iter().all(|table| {
            let mut image = 0u64;
            let mut rest = bits;
            while rest != 0 {
                let b = 63 - rest.leading_zeros() as usize;
                rest &= !(1u64 << b);
                image |= table[self.pairs.len() - 1 - b];
            }
            image <= bits
        })
    }

    /// `next` is the first position children may use.
    fn visit(&mut self, bits: u64, adj: &mut [u32], edges: u32, next: usize) {
        if self.over.load(Ordering::Relaxed) {
            return;
        }
        if self.nodes.fetch_add(1, Ordering::Relaxed) + 1 > self.budget {
            self.over.store(true, Ordering::Relaxed);
            return;
        }
        if let Mode::Witness { i, r } = self.mode {
            if self.best.as_ref().is_some_and(|b| edges > b.edges) {
                return;
            }
            if self.beta_holds(adj, i, r) {
                if self.best.as_ref().map_or(true, |b| (edges, bits) < (b.edges, b.bits)) {
                    self.best = Some(Best {
                        edges,
                        bits,
                        graph: self.to_graph(adj),
                    });
                }
                return;
            }
            if self.best.as_ref().is_some_and(|b| edges + 1 > b.edges) {
                return;
            }
            let sup: Vec<u32> = adj.iter().zip(&self.suffix[next]).map(|(a, s)| a | s).collect();
            if !self.beta_holds(&sup, i, r) || !self.every_vertex_in_clique(&sup, r - 1) {
                return;
            }
        }
        for p in next..self.pairs.len() {
            let (u, v) = self.pairs[p];
            if has_clique(adj, adj[u] & adj[v], self.r - 2) {
                continue;
            }
            let child = bits | self.bit(p);
            if !self.is_canonical(child) {
                continue;
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
            self.visit(child, adj, edges + 1, p + 1);
            adj[u] &= !(1 << v);
            adj[v] &= !(1 << u);
        }
    }

    fn beta_holds(&self, adj: &[u32], i: usize, r: usize) -> bool {
        let all = self.part_masks.iter().fold(0, |a, m| a | m);
        (0..self.part_masks.len()).combinations(i).all(|del| {
            let gone = del.iter().fold(0, |a, &p| a | self.part_masks[p]);
            has_clique(adj, all & !gone, r - 1)
        })
    }

    fn every_vertex_in_clique(&self, adj: &[u32], size: usize) -> bool {
        (0..self.n).all(|v| has_clique(adj, adj[v], size - 1))
    }

    fn to_graph(&self, adj: &[u32]) -> PartiteGraph {
        let edges: Vec<(usize, usize)> = self
            .pairs
            .iter()
            .copied()
            .filter(|&(u, v)| adj[u] >> v & 1 == 1)
            .collect();
        PartiteGraph::new(self.k, self.part_of.clone(), edges).expect("generated pairs are admissible")
    }
}

/// All vertex permutations preserving the profile's part structure up to
/// swapping parts of equal size.
fn symmetry_group(profile: &[usize]) -> Vec<Vec<usize>> {
    let mut start = Vec::with_capacity(profile.len());
    let mut acc = 0;
    for &s in profile {
        start.push(acc);
        acc += s;
    }
    let n = acc;
    // permutations of the parts among themselves
    let blocks: Vec<Vec<usize>> = profile
        .iter()
        .enumerate()
        .filter(|(_, &s)| s > 0)
        .chunk_by(|(_, &s)| s)
        .into_iter()
        .map(|(_, g)| g.map(|(p, _)| p).collect())
        .collect();
    let mut part_maps: Vec<Vec<usize>> = vec![(0..profile.len()).collect()];
    for block in &blocks {
        let mut next = Vec::new();
        for base in &part_maps {
            for perm in block.iter().copied().permutations(block.len()) {
                let mut m = base.clone();
                for (&from, &to) in block.iter().zip(&perm) {
                    m[from] = to;
                }
                next.push(m);
            }
        }
        part_maps = next;
    }
    let mut inner: Vec<Vec<usize>> = vec![(0..n).collect()];
    for (p, &s) in profile.iter().enumerate() {
        if s < 2 {
            continue;
        }
        let mut next = Vec::new();
        for base in &inner {
            for perm in (0..s).permutations(s) {
                let mut m = base.clone();
                for (a, &b) in perm.iter().enumerate() {
                    m[start[p] + a] = start[p] + b;
                }
                next.push(m);
            }
        }
        inner = next;
    }
    let mut out = Vec::with_capacity(part_maps.len() * inner.len());
    for pm in &part_maps {
        for im in &inner {
            let sigma: Vec<usize> = (0..n)
                .map(|v| {
                    let w = im[v];
                    let p = profile_part(&start, profile, w);
                    start[pm[p]] + (w - start[p])
                })
                .collect();
            out.push(sigma);
        }
    }
    out
}

fn profile_part(start: &[usize], profile: &[usize], v: usize) -> usize {
    (0..profile.len())
        .find(|&p| profile[p] > 0 && v >= start[p] && v < start[p] + profile[p])
        .expect("vertex belongs to a part")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn profiles_of_four_into_three() {
        assert_eq!(
            profiles(4, 3),
            vec![vec![4, 0, 0], vec![3, 1, 0], vec![2, 2, 0], vec![2, 1, 1]]
        );
    }

    #[test]
    fn group_sizes() {
        assert_eq!(symmetry_group(&[2, 2, 1]).len(), 2 * 2 * 2);
        assert_eq!(symmetry_group(&[1, 1, 1, 0]).len(), 6);
        assert_eq!(symmetry_group(&[3, 1]).len(), 6);
    }

    #[test]
    fn triangle_classes() {
        // profiles (3,0,0), (2,1,0), (1,1,1) contribute 1, 3 and 4 classes
        assert_eq!(count_candidate_classes(3, 4, 3).unwrap(), 8);
        assert_eq!(count_candidate_classes(3, 3, 3).unwrap(), 7);
    }

    #[test]
    fn small_values() {
        let o = beta_exact(1, 2, 2, 2).unwrap();
        assert_eq!((o.status, o.value), (SearchStatus::Found, Some(2)));
        let o = beta_exact(2, 3, 2, 3).unwrap();
        assert_eq!(o.value, Some(3));
        let o = beta_exact(1, 3, 3, 3).unwrap();
        assert_eq!(o.status, SearchStatus::Exhausted);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!(beta_exact(3, 3, 2, 5), Err(Error::Input(_))));
        assert!(matches!(beta_exact(1, 3, 3, 12), Err(Error::Input(_))));
    }

    #[test]
    fn budget_is_enforced() {
        let limits = SearchLimits::with_budget(10);
        assert!(matches!(beta_exact_with(1, 4, 4, 6, &limits), Err(Error::Resource(_))));
    }
}
