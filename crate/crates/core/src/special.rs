//! Special vertices relative to an independent transversal.
//!
//! A vertex `y` outside the transversal, lying in part `j`, is `i`-special
//! when `i != j` and `y` is the only neighbor of `x_i` inside part `j`. Its
//! special degree is the number of such `i`.

use serde::Serialize;

use crate::error::Violation;
use crate::graph::{PartiteGraph, Transversal, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpecialEntry {
    pub vertex: VertexId,
    pub part: usize,
    /// Indices `i` for which the vertex is `i`-special, ascending.
    pub special_for: Vec<usize>,
}

impl SpecialEntry {
    pub fn special_degree(&self) -> usize {
        self.special_for.len()
    }
}

/// One entry per vertex outside the transversal, in id order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpecialDegreeReport {
    pub entries: Vec<SpecialEntry>,
}

impl SpecialDegreeReport {
    pub fn special_degree(&self, v: VertexId) -> Option<usize> {
        self.entries
            .iter()
            .find(|e| e.vertex == v)
            .map(SpecialEntry::special_degree)
    }

    pub fn special_vertices(&self) -> impl Iterator<Item = &SpecialEntry> {
        self.entries.iter().filter(|e| !e.special_for.is_empty())
    }

    pub fn count_with_degree_at_least(&self, d: usize) -> usize {
        self.entries.iter().filter(|e| e.special_degree() >= d).count()
    }
}

pub fn special_degrees(g: &PartiteGraph, x: &Transversal) -> SpecialDegreeReport {
    let k = g.part_count();
    // unique[i][j]: the sole neighbor of x_i in part j, if there is exactly one
    let mut unique = vec![vec![None; k]; k];
    for (i, row) in unique.iter_mut().enumerate() {
        let mut counts = vec![0usize; k];
        let mut last = vec![0; k];
        for y in g.neighbors(x.in_part(i)).iter() {
            let j = g.part_of(y);
            counts[j] += 1;
            last[j] = y;
        }
        for j in 0..k {
            if j != i && counts[j] == 1 {
                row[j] = Some(last[j]);
            }
        }
    }
    let entries = g
        .vertices()
        .filter(|&v| !x.contains(v))
        .map(|y| {
            let j = g.part_of(y);
            let special_for = (0..k).filter(|&i| unique[i][j] == Some(y)).collect();
            SpecialEntry {
                vertex: y,
                part: j,
                special_for,
            }
        })
        .collect();
    SpecialDegreeReport { entries }
}

/// Structural properties that every saturated witness with as many parts as
/// the clique order (`k == r`, `r >= 4`) must have:
///
/// * a special vertex in part `i` is adjacent to every transversal vertex
///   except `x_i`;
/// * each part holds at most one special vertex;
/// * at most `r - 2` vertices have special degree at least two.
pub fn check_special_vertex_properties(
    g: &PartiteGraph,
    x: &Transversal,
    r: usize,
) -> Result<SpecialDegreeReport, Violation> {
    let report = special_degrees(g, x);
    let mut per_part = vec![0usize; g.part_count()];
    for e in report.special_vertices() {
        per_part[e.part] += 1;
        for (i, &xi) in x.vertices().iter().enumerate() {
            if i != e.part && !g.adjacent(e.vertex, xi) {
                return Err(Violation::Mismatch(format!(
                    "special vertex {} in part {} is not adjacent to transversal vertex {xi}",
                    e.vertex, e.part
                )));
            }
        }
    }
    if let Some(p) = per_part.iter().position(|&c| c > 1) {
        return Err(Violation::Mismatch(format!(
            "part {p} holds {} special vertices",
            per_part[p]
        )));
    }
    let heavy = report.count_with_degree_at_least(2);
    if heavy > r.saturating_sub(2) {
        return Err(Violation::Mismatch(format!(
            "{heavy} vertices have special degree at least 2 (limit {})",
            r - 2
        )));
    }
    Ok(report)
}
