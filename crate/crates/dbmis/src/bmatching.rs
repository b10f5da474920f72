//! Properly colored b-matchings and their split into hierarchical
//! b-matchings.
//!
//! An edge set F of an edge-colored multigraph is feasible when each
//! vertex v meets at most `b(v)` edges of F and at most `g_i(v)` edges of
//! each color i. Splitting every vertex into one copy per incident edge
//! turns these two bound families into degree bounds over a laminar family
//! of copy sets: per-vertex color sets bounded by `g_i(v)` nested inside a
//! per-vertex top set bounded by `b(v)`. The split keeps edges and weights
//! in bijection, so feasibility transfers back and forth unchanged.

use std::collections::BTreeMap;

use crate::pcforest::EdgeColoredMultigraph;
use crate::{EdgeId, Error, Result, VertexId, Weight};

/// A graph whose vertices are copies `v^e`, with degree bounds over a
/// laminar family of copy sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HierarchicalBMatchingInstance {
    n_copies: usize,
    /// Index-aligned with the source edge list.
    edges: Vec<(usize, usize)>,
    weights: Vec<Weight>,
    /// `(members, bound)` pairs; members are sorted copy ids.
    sets: Vec<(Vec<usize>, u64)>,
    /// Which (source vertex, source edge) each copy stands for.
    copy_labels: Vec<(VertexId, EdgeId)>,
}

impl HierarchicalBMatchingInstance {
    /// Validates member ranges and laminarity: any two sets must be
    /// disjoint or nested.
    pub fn new(
        n_copies: usize,
        edges: Vec<(usize, usize)>,
        weights: Vec<Weight>,
        sets: Vec<(Vec<usize>, u64)>,
        copy_labels: Vec<(VertexId, EdgeId)>,
    ) -> Result<Self> {
        if weights.len() != edges.len() {
            return Err(Error::InvalidArgument(format!(
                "{} weights for {} edges",
                weights.len(),
                edges.len()
            )));
        }
        if copy_labels.len() != n_copies {
            return Err(Error::InvalidArgument(format!(
                "{} labels for {} copies",
                copy_labels.len(),
                n_copies
            )));
        }
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u >= n_copies || v >= n_copies || u == v {
                return Err(Error::InvalidArgument(format!(
                    "edge {i} endpoints ({u}, {v}) invalid with {n_copies} copies"
                )));
            }
        }
        let mut norm = Vec::with_capacity(sets.len());
        for (idx, (mut members, bound)) in sets.into_iter().enumerate() {
            members.sort_unstable();
            if members.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidArgument(format!(
                    "set {idx} repeats a copy id"
                )));
            }
            if members.iter().any(|&c| c >= n_copies) {
                return Err(Error::InvalidArgument(format!(
                    "set {idx} has a copy id out of range"
                )));
            }
            norm.push((members, bound));
        }
        for i in 0..norm.len() {
            for j in i + 1..norm.len() {
                if !laminar_pair(&norm[i].0, &norm[j].0) {
                    return Err(Error::InvalidArgument(format!(
                        "sets {i} and {j} overlap without nesting"
                    )));
                }
            }
        }
        Ok(HierarchicalBMatchingInstance {
            n_copies,
            edges,
            weights,
            sets: norm,
            copy_labels,
        })
    }

    pub fn n_copies(&self) -> usize {
        self.n_copies
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn sets(&self) -> &[(Vec<usize>, u64)] {
        &self.sets
    }

    pub fn copy_labels(&self) -> &[(VertexId, EdgeId)] {
        &self.copy_labels
    }

    pub fn weight_of(&self, set: &[EdgeId]) -> Weight {
        set.iter().map(|&e| self.weights[e]).sum()
    }

    /// Whether the total degree of `chosen` inside every laminar set stays
    /// within its bound.
    pub fn is_feasible(&self, chosen: &[EdgeId]) -> Result<bool> {
        let mut s = chosen.to_vec();
        s.sort_unstable();
        if s.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument("duplicate edge id".into()));
        }
        if s.iter().any(|&e| e >= self.edges.len()) {
            return Err(Error::InvalidArgument("edge id out of range".into()));
        }
        let mut deg = vec![0u64; self.n_copies];
        for &e in &s {
            let (u, v) = self.edges[e];
            deg[u] += 1;
            deg[v] += 1;
        }
        Ok(self
            .sets
            .iter()
            .all(|(members, bound)| members.iter().map(|&c| deg[c]).sum::<u64>() <= *bound))
    }
}

/// Both inputs sorted; true when disjoint or nested either way.
fn laminar_pair(a: &[usize], b: &[usize]) -> bool {
    let common = {
        let (mut i, mut j, mut c) = (0, 0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    c += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        c
    };
    common == 0 || common == a.len() || common == b.len()
}

/// Whether `set` satisfies the degree bounds `b` and the per-color bounds
/// of `g` directly on the source graph.
pub fn is_bmatching_feasible(
    g: &EdgeColoredMultigraph,
    b: &[u64],
    set: &[EdgeId],
) -> Result<bool> {
    check_b(g, b)?;
    let mut s = set.to_vec();
    s.sort_unstable();
    if s.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidArgument("duplicate edge id".into()));
    }
    if s.iter().any(|&e| e >= g.m()) {
        return Err(Error::InvalidArgument("edge id out of range".into()));
    }
    let mut deg = vec![0u64; g.n()];
    let mut color_counts: BTreeMap<(VertexId, usize), u64> = BTreeMap::new();
    for &e in &s {
        let edge = &g.edges()[e];
        for v in [edge.u, edge.v] {
            deg[v] += 1;
            if deg[v] > b[v] {
                return Ok(false);
            }
            let c = color_counts.entry((v, edge.color)).or_insert(0);
            *c += 1;
            if *c > g.bound(v, edge.color) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn check_b(g: &EdgeColoredMultigraph, b: &[u64]) -> Result<()> {
    if b.len() != g.n() {
        return Err(Error::InvalidArgument(format!(
            "{} degree bounds for {} vertices",
            b.len(),
            g.n()
        )));
    }
    Ok(())
}

/// Splits each vertex into one copy per incident edge. Copy ids run over
/// vertices ascending, and within a vertex over incident edge ids
/// ascending. The split edge list is index-aligned with the source edge
/// list and keeps its weights. The laminar family holds, per vertex with
/// ascending color, the nonempty color sets bounded by `g_i(v)`, then the
/// vertex's whole copy set bounded by `b(v)`.
pub fn reduce_bmatching_to_hierarchical(
    g: &EdgeColoredMultigraph,
    b: &[u64],
) -> Result<HierarchicalBMatchingInstance> {
    check_b(g, b)?;
    let mut copy_id: BTreeMap<(VertexId, EdgeId), usize> = BTreeMap::new();
    let mut copy_labels = Vec::new();
    for v in 0..g.n() {
        for e in 0..g.m() {
            let edge = &g.edges()[e];
            if edge.u == v || edge.v == v {
                copy_id.insert((v, e), copy_labels.len());
                copy_labels.push((v, e));
            }
        }
    }
    let edges: Vec<(usize, usize)> = (0..g.m())
        .map(|e| {
            let edge = &g.edges()[e];
            (copy_id[&(edge.u, e)], copy_id[&(edge.v, e)])
        })
        .collect();
    let weights: Vec<Weight> = g.edges().iter().map(|e| e.weight).collect();
    let mut sets: Vec<(Vec<usize>, u64)> = Vec::new();
    for v in 0..g.n() {
        let star: Vec<EdgeId> = (0..g.m())
            .filter(|&e| g.edges()[e].u == v || g.edges()[e].v == v)
            .collect();
        if star.is_empty() {
            continue;
        }
        for color in 0..g.k() {
            let class: Vec<usize> = star
                .iter()
                .filter(|&&e| g.edges()[e].color == color)
                .map(|&e| copy_id[&(v, e)])
                .collect();
            if !class.is_empty() {
                sets.push((class, g.bound(v, color)));
            }
        }
        let top: Vec<usize> = star.iter().map(|&e| copy_id[&(v, e)]).collect();
        sets.push((top, b[v]));
    }
    HierarchicalBMatchingInstance::new(copy_labels.len(), edges, weights, sets, copy_labels)
}

pub const DEFAULT_BMATCHING_EXACT_CAP: usize = 20;

/// Maximum-weight properly colored b-matching by pruned enumeration; ties
/// go to the lexicographically smallest edge set.
pub fn solve_bmatching_exact_capped(
    g: &EdgeColoredMultigraph,
    b: &[u64],
    cap: usize,
) -> Result<Vec<EdgeId>> {
    check_b(g, b)?;
    if g.m() > cap {
        return Err(Error::ResourceLimit(format!(
            "{} edges exceed the enumeration cap {cap}",
            g.m()
        )));
    }
    fn dfs(
        g: &EdgeColoredMultigraph,
        b: &[u64],
        next: EdgeId,
        cur: &mut Vec<EdgeId>,
        best: &mut Vec<EdgeId>,
        best_weight: &mut Weight,
    ) {
        let w = g.weight_of(cur);
        if w > *best_weight || (w == *best_weight && *cur < *best) {
            *best = cur.clone();
            *best_weight = w;
        }
        for e in next..g.m() {
            cur.push(e);
            // Both bound families are downward closed, so pruning is safe.
            if is_bmatching_feasible(g, b, cur).unwrap() {
                dfs(g, b, e + 1, cur, best, best_weight);
            }
            cur.pop();
        }
    }
    let mut best = Vec::new();
    let mut best_weight = 0;
    let mut cur = Vec::new();
    dfs(g, b, 0, &mut cur, &mut best, &mut best_weight);
    Ok(best)
}

pub fn solve_bmatching_exact(g: &EdgeColoredMultigraph, b: &[u64]) -> Result<Vec<EdgeId>> {
    solve_bmatching_exact_capped(g, b, DEFAULT_BMATCHING_EXACT_CAP)
}

/// Maximum-weight laminar-feasible edge set of a split instance by pruned
/// enumeration; ties go to the lexicographically smallest edge set. On
/// instances produced by [`reduce_bmatching_to_hierarchical`] this agrees
/// with [`solve_bmatching_exact`] element for element.
pub fn solve_hierarchical_exact_capped(
    h: &HierarchicalBMatchingInstance,
    cap: usize,
) -> Result<Vec<EdgeId>> {
    if h.edges.len() > cap {
        return Err(Error::ResourceLimit(format!(
            "{} edges exceed the enumeration cap {cap}",
            h.edges.len()
        )));
    }
    fn dfs(
        h: &HierarchicalBMatchingInstance,
        next: EdgeId,
        cur: &mut Vec<EdgeId>,
        best: &mut Vec<EdgeId>,
        best_weight: &mut Weight,
    ) {
        let w = h.weight_of(cur);
        if w > *best_weight || (w == *best_weight && *cur < *best) {
            *best = cur.clone();
            *best_weight = w;
        }
        for e in next..h.edges.len() {
            cur.push(e);
            if h.is_feasible(cur).unwrap() {
                dfs(h, e + 1, cur, best, best_weight);
            }
            cur.pop();
        }
    }
    let mut best = Vec::new();
    let mut best_weight = 0;
    let mut cur = Vec::new();
    dfs(h, 0, &mut cur, &mut best, &mut best_weight);
    Ok(best)
}

pub fn solve_hierarchical_exact(h: &HierarchicalBMatchingInstance) -> Result<Vec<EdgeId>> {
    solve_hierarchical_exact_capped(h, DEFAULT_BMATCHING_EXACT_CAP)
}
