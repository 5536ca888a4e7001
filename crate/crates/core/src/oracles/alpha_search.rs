//! Bounded-host search for small `e(X, X^c)`.
//!
//! The host has `k` parts. Part `p` holds the transversal vertex `x_p` and at
//! most `max_part_size` further vertices. Vertices `0..k` are `x_0..x_{k-1}`,
//! and the other vertices follow part by part.
//!
//! Small classes are searched completely. Every profile of non-transversal
//! counts is tried, and each admissible pair is decided in or out in a fixed
//! order: transversal pairs first, then the rest. An "in" decision must not
//! create a `K_r`. An "out" decision must stay saturatable in the supergraph
//! of all still-undecided pairs. Larger classes use a seeded random-closure
//! heuristic, and its outcome is flagged.

use std::cell::Cell;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Partial, Result};
use crate::graph::{PartiteGraph, Transversal};
use crate::oracles::{mask_has_clique, SearchLimits, SearchOutcome, SearchStatus};
use crate::verify::verify_alpha_witness;


const RESTARTS: usize = 256;
const CLOSURE_TRIES: usize = 3;

pub fn alpha_bounded_search(k: usize, r: usize, max_part_size: usize, seed: u64) -> Result<SearchOutcome> {
    alpha_bounded_search_with(k, r, max_part_size, seed, &SearchLimits::default())
}

/// `max_part_size` bounds the non-transversal vertices of each part. The
/// seed only matters when the class is too large for the complete search.
pub fn alpha_bounded_search_with(
    k: usize,
    r: usize,
    max_part_size: usize,
    seed: u64,
    limits: &SearchLimits,
) -> Result<SearchOutcome> {
    if r < 3 || k < r {
        return Err(Error::input(format!("need k >= r >= 3, got k = {k}, r = {r}")));
    }
    if max_part_size == 0 || k * (max_part_size + 1) > 32 {
        return Err(Error::input(format!(
            "need 1 <= max_part_size and k * (max_part_size + 1) <= 32, got k = {k}, max_part_size = {max_part_size}"
        )));
    }
    let full = Host::new(k, r, &vec![max_part_size; k]);
    let result = if full.pairs.len() <= limits.complete_pair_limit {
        complete(k, r, max_part_size, limits)?
    } else {
        heuristic(k, r, max_part_size, seed, limits)?
    };
    let (found, nodes, heur) = result;
    let (status, value, witness, transversal) = match found {
        Some((value, g)) => {
            let x = Transversal::new(&g, (0..k).collect())?;
            let checked = verify_alpha_witness(&g, &x, r)?;
            if checked != value {
                return Err(Error::Precondition(format!(
                    "search value {value} disagrees with the verifier's {checked}"
                )));
            }
            (SearchStatus::Found, Some(value), Some(g), Some(x))
        }
        None => (SearchStatus::Exhausted, None, None, None),
    };
    Ok(SearchOutcome {
        status,
        value,
        witness,
        transversal,
        nodes_explored: nodes,
        budget: max_part_size,
        heuristic: heur,
        seed: heur.then_some(seed),
    })
}

type Found = (Option<(usize, PartiteGraph)>, u64, bool);

struct Host {
    k: usize,
    r: usize,
    part_of: Vec<usize>,
    /// Decidable pairs: transversal-to-rest first, then among the rest.
    pairs: Vec<(usize, usize)>,
    transversal_pairs: usize,
    /// Pairs inside the transversal; always non-edges.
    fixed_out: Vec<(usize, usize)>,
}

impl Host {
    fn new(k: usize, r: usize, counts: &[usize]) -> Self {
        let mut part_of: Vec<usize> = (0..k).collect();
        for (p, &c) in counts.iter().enumerate() {
            part_of.extend(std::iter::repeat(p).take(c));
        }
        let n = part_of.len();
        let mut pairs = Vec::new();
        for x in 0..k {
            for y in k..n {
                if part_of[y] != x {
                    pairs.push((x, y));
                }
            }
        }
        let transversal_pairs = pairs.len();
        for u in k..n {
            for v in u + 1..n {
                if part_of[u] != part_of[v] {
                    pairs.push((u, v));
                }
            }
        }
        let fixed_out = (0..k).flat_map(|a| (a + 1..k).map(move |b| (a, b))).collect();
        Self {
            k,
            r,
            part_of,
            pairs,
            transversal_pairs,
            fixed_out,
        }
    }

    fn n(&self) -> usize {
        self.part_of.len()
    }

    fn creates_clique(&self, adj: &[u32], u: usize, v: usize) -> bool {
        mask_has_clique(adj, adj[u] & adj[v], self.r - 2)
    }

    fn saturated_pair(&self, adj: &[u32], u: usize, v: usize) -> bool {
        mask_has_clique(adj, adj[u] & adj[v], self.r - 2)
    }

    fn is_saturated(&self, adj: &[u32]) -> bool {
        self.fixed_out
            .iter()
            .chain(&self.pairs)
            .all(|&(u, v)| adj[u] >> v & 1 == 1 || self.saturated_pair(adj, u, v))
    }

    fn value(&self, adj: &[u32]) -> usize {
        (0..self.k).map(|x| adj[x].count_ones() as usize).sum()
    }

    fn to_graph(&self, adj: &[u32]) -> PartiteGraph {
        let edges: Vec<(usize, usize)> = self
            .pairs
            .iter()
            .copied()
            .filter(|&(u, v)| adj[u] >> v & 1 == 1)
            .collect();
        PartiteGraph::new(self.k, self.part_of.clone(), edges).expect("host pairs are admissible")
    }
}

fn count_profiles(k: usize, max: usize) -> Vec<Vec<usize>> {
    fn rec(left: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for c in (0..=cap).rev() {
            cur.push(c);
            rec(left - 1, c, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, max, &mut Vec::new(), &mut out);
    out
}

struct Complete<'a> {
    host: &'a Host,
    out: Vec<(usize, usize)>,
    best: Option<(usize, Vec<u32>)>,
    /// Best value from profiles already searched.
    cap: usize,
    nodes: &'a Cell<u64>,
    budget: u64,
    over: bool,
}

impl Complete<'_> {
    fn visit(&mut self, idx: usize, adj: &mut Vec<u32>, value: usize) {
        if self.over {
            return;
        }
        self.nodes.set(self.nodes.get() + 1);
        if self.nodes.get() > self.budget {
            self.over = true;
            return;
        }
        if value >= self.cap || self.best.as_ref().is_some_and(|(b, _)| value >= *b) {
            return;
        }
        let h = self.host;
        if idx == h.pairs.len() {
            if h.is_saturated(adj) {
                self.best = Some((value, adj.clone()));
            }
            return;
        }
        let (u, v) = h.pairs[idx];
        let is_transversal = idx < h.transversal_pairs;
        // out first on transversal pairs keeps values small; in first elsewhere
        let order: [bool; 2] = if is_transversal { [false, true] } else { [true, false] };
        for take in order {
            if take {
                if h.creates_clique(adj, u, v) {
                    continue;
                }
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
                self.visit(idx + 1, adj, value + usize::from(is_transversal));
                adj[u] &= !(1 << v);
                adj[v] &= !(1 << u);
            } else {
                self.out.push((u, v));
                if self.still_saturatable(adj, idx + 1) {
                    self.visit(idx + 1, adj, value);
                }
                self.out.pop();
            }
        }
    }

    fn still_saturatable(&self, adj: &[u32], next: usize) -> bool {
        let h = self.host;
        let mut sup = adj.to_vec();
        for &(a, b) in &h.pairs[next..] {
            sup[a] |= 1 << b;
            sup[b] |= 1 << a;
        }
        h.fixed_out
            .iter()
            .chain(&self.out)
            .all(|&(a, b)| h.saturated_pair(&sup, a, b))
    }
}

fn complete(k: usize, r: usize, max: usize, limits: &SearchLimits) -> Result<Found> {
    let nodes = Cell::new(0u64);
    let mut best: Option<(usize, PartiteGraph)> = None;
    for counts in count_profiles(k, max) {
        let host = Host::new(k, r, &counts);
        let mut search = Complete {
            host: &host,
            out: Vec::new(),
            best: None,
            cap: best.as_ref().map_or(usize::MAX, |(b, _)| *b),
            nodes: &nodes,
            budget: limits.node_budget,
            over: false,
        };
        let mut adj = vec![0u32; host.n()];
        search.visit(0, &mut adj, 0);
        if search.over {
            return Err(Error::Resource(Partial {
                nodes_explored: nodes.get(),
                exhausted_through: None,
                best_value: best.map(|(v, _)| v),
                detail: format!("node budget {} exceeded in the complete search", limits.node_budget),
            }));
        }
        if let Some((v, adj)) = search.best {
            if best.as_ref().map_or(true, |(b, _)| v < *b) {
                best = Some((v, host.to_graph(&adj)));
            }
        }
    }
    Ok((best, nodes.get(), false))
}

/// Adds pairs in random order whenever they create no `K_r`; only pairs that
/// avoid the transversal are eligible.
fn random_closure(host: &Host, adj: &mut [u32], rng: &mut ChaCha8Rng) {
    let mut order: Vec<(usize, usize)> = host.pairs[host.transversal_pairs..].to_vec();
    order.shuffle(rng);
    loop {
        let mut added = false;
        for &(u, v) in &order {
            if adj[u] >> v & 1 == 0 && !host.creates_clique(adj, u, v) {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
                added = true;
            }
        }
        if !added {
            break;
        }
    }
}

/// Rebuilds the non-transversal edges around the transversal edges in `adj`;
/// returns a saturated graph if one of a few random closures gives one.
fn reclose(host: &Host, adj: &[u32], keep_rest: bool, rng: &mut ChaCha8Rng, nodes: &mut u64) -> Option<Vec<u32>> {
    for attempt in 0..CLOSURE_TRIES {
        *nodes += 1;
        let mut g = adj.to_vec();
        if !keep_rest || attempt > 0 {
            for &(u, v) in &host.pairs[host.transversal_pairs..] {
                g[u] &= !(1 << v);
                g[v] &= !(1 << u);
            }
        }
        random_closure(host, &mut g, rng);
        if host.is_saturated(&g) {
            return Some(g);
        }
    }
    None
}

fn heuristic(k: usize, r: usize, max: usize, seed: u64, limits: &SearchLimits) -> Result<Found> {
    let host = Host::new(k, r, &vec![max; k]);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut nodes = 0u64;
    let mut best: Option<(usize, Vec<u32>)> = None;
    let n = host.n();
    let rest: Vec<usize> = (k..n).collect();
    for _ in 0..RESTARTS {
        if nodes > limits.node_budget {
            break;
        }
        let density = rng.gen_range(0.7..=1.0);
        let mut adj = vec![0u32; n];
        for &(x, y) in &host.pairs[..host.transversal_pairs] {
            if rng.gen_bool(density) {
                adj[x] |= 1 << y;
                adj[y] |= 1 << x;
            }
        }
        let Some(mut cur) = reclose(&host, &adj, false, &mut rng, &mut nodes) else {
            continue;
        };
        loop {
            // moves: drop every transversal edge of one vertex, or a single edge
            let mut moves: Vec<Vec<(usize, usize)>> = rest
                .iter()
                .map(|&y| (0..k).filter(|&x| cur[x] >> y & 1 == 1).map(|x| (x, y)).collect::<Vec<_>>())
                .filter(|m| !m.is_empty())
                .collect();
            moves.extend(
                host.pairs[..host.transversal_pairs]
                    .iter()
                    .filter(|&&(x, y)| cur[x] >> y & 1 == 1)
                    .map(|&e| vec![e]),
            );
            moves.shuffle(&mut rng);
            let mut improved = false;
            for m in moves {
                if nodes > limits.node_budget {
                    break;
                }
                let mut trial = cur.clone();
                for &(x, y) in &m {
                    trial[x] &= !(1 << y);
                    trial[y] &= !(1 << x);
                }
                if let Some(next) = reclose(&host, &trial, true, &mut rng, &mut nodes) {
                    cur = next;
                    improved = true;
                    break;
                }
            }
            if !improved {
                break;
            }
        }
        let v = host.value(&cur);
        if best.as_ref().map_or(true, |(b, _)| v < *b) {
            best = Some((v, cur));
        }
    }
    match best {
        Some((v, adj)) => Ok((Some((v, host.to_graph(&adj))), nodes, true)),
        None => Err(Error::Resource(Partial {
            nodes_explored: nodes,
            exhausted_through: None,
            best_value: None,
            detail: "heuristic found no saturated host".into(),
        })),
    }
}
