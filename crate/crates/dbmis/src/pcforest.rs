//! Properly colored forests in edge-colored multigraphs.
//!
//! Edges between one vertex pair form bundles; a set of edges is a forest
//! with bundles when its support graph (one edge per nonempty bundle) is
//! acyclic, equivalently when it has no cycle of length three or more.
//! These sets do not form the independent sets of any matroid, so next to
//! the matroid-based route via [`reduce_gpf_to_dbmis`] this module carries
//! dedicated machinery: a greedy-plus-exchange local search
//! ([`bundled_local_search`]) whose output is within a factor 3 of the
//! largest properly colored forest with bundles, and a per-color matching
//! union ([`small_color_forest`]) for two and three colors.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use crate::instance::{BoundedHypergraph, DbmisInstance};
use crate::matching::max_matching;
use crate::matroid::Matroid;
use crate::union_find::UnionFind;
use crate::{ColorId, EdgeId, Error, Result, VertexId, Weight};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredEdge {
    /// Endpoints normalized so that `u < v`.
    pub u: VertexId,
    pub v: VertexId,
    pub color: ColorId,
    pub weight: Weight,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoredMultigraph {
    n: usize,
    k: usize,
    edges: Vec<ColoredEdge>,
    /// Per-(vertex, color) bounds; missing entries default to 1.
    bounds: BTreeMap<(VertexId, ColorId), u64>,
    /// Edge ids between each vertex pair, ascending.
    pair_index: BTreeMap<(VertexId, VertexId), Vec<EdgeId>>,
}

impl EdgeColoredMultigraph {
    /// Builds a loopless multigraph with colors in `0..k`. Two parallel
    /// edges of the same color are rejected, so each color class is simple.
    pub fn new(
        n: usize,
        k: usize,
        edges: Vec<(VertexId, VertexId, ColorId, Weight)>,
        bounds: Vec<((VertexId, ColorId), u64)>,
    ) -> Result<Self> {
        let mut norm = Vec::with_capacity(edges.len());
        let mut pair_index: BTreeMap<(VertexId, VertexId), Vec<EdgeId>> = BTreeMap::new();
        let mut class_pairs = BTreeSet::new();
        for (idx, (u, v, color, weight)) in edges.into_iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::InvalidArgument(format!(
                    "edge {idx} endpoint out of range ({u}, {v}) with {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidArgument(format!(
                    "edge {idx} is a self-loop at vertex {u}"
                )));
            }
            if color >= k {
                return Err(Error::InvalidArgument(format!(
                    "edge {idx} color {color} out of range with {k} colors"
                )));
            }
            let (u, v) = (u.min(v), u.max(v));
            if !class_pairs.insert((u, v, color)) {
                return Err(Error::InvalidArgument(format!(
                    "edges between {u} and {v} repeat color {color}; \
                     each color class must be simple"
                )));
            }
            pair_index.entry((u, v)).or_default().push(idx);
            norm.push(ColoredEdge {
                u,
                v,
                color,
                weight,
            });
        }
        let mut bound_map = BTreeMap::new();
        for ((v, color), g) in bounds {
            if v >= n || color >= k {
                return Err(Error::InvalidArgument(format!(
                    "bound override for ({v}, {color}) out of range"
                )));
            }
            if bound_map.insert((v, color), g).is_some() {
                return Err(Error::InvalidArgument(format!(
                    "duplicate bound override for ({v}, {color})"
                )));
            }
        }
        Ok(EdgeColoredMultigraph {
            n,
            k,
            edges: norm,
            bounds: bound_map,
            pair_index,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[ColoredEdge] {
        &self.edges
    }

    /// Bound `g_i(v)`; defaults to 1 without an override.
    pub fn bound(&self, v: VertexId, color: ColorId) -> u64 {
        self.bounds.get(&(v, color)).copied().unwrap_or(1)
    }

    pub fn bound_overrides(&self) -> &BTreeMap<(VertexId, ColorId), u64> {
        &self.bounds
    }

    pub fn has_unit_bounds(&self) -> bool {
        self.bounds.values().all(|&g| g == 1)
    }

    /// Edge ids between `u` and `v` (order irrelevant), ascending.
    pub fn edges_between(&self, u: VertexId, v: VertexId) -> &[EdgeId] {
        self.pair_index
            .get(&(u.min(v), u.max(v)))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    pub fn weight_of(&self, set: &[EdgeId]) -> Weight {
        set.iter().map(|&e| self.edges[e].weight).sum()
    }

    fn checked_sorted(&self, set: &[EdgeId]) -> Result<Vec<EdgeId>> {
        let mut s = set.to_vec();
        s.sort_unstable();
        if let Some(w) = s.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument(format!("duplicate edge id {}", w[0])));
        }
        if let Some(&bad) = s.iter().find(|&&e| e >= self.m()) {
            return Err(Error::InvalidArgument(format!(
                "edge id {bad} out of range with {} edges",
                self.m()
            )));
        }
        Ok(s)
    }
}

/// Whether `set` respects every per-vertex per-color bound of `g`.
pub fn is_g_properly_colored(g: &EdgeColoredMultigraph, set: &[EdgeId]) -> Result<bool> {
    let s = g.checked_sorted(set)?;
    Ok(properly_colored_sorted(g, &s))
}

fn properly_colored_sorted(g: &EdgeColoredMultigraph, s: &[EdgeId]) -> bool {
    let mut counts: BTreeMap<(VertexId, ColorId), u64> = BTreeMap::new();
    for &e in s {
        let edge = &g.edges[e];
        for v in [edge.u, edge.v] {
            let c = counts.entry((v, edge.color)).or_insert(0);
            *c += 1;
            if *c > g.bound(v, edge.color) {
                return false;
            }
        }
    }
    true
}

/// Whether the support of `set` is acyclic, i.e. `set` has no cycle of
/// length three or more.
pub fn is_forest_with_bundles(g: &EdgeColoredMultigraph, set: &[EdgeId]) -> Result<bool> {
    let s = g.checked_sorted(set)?;
    Ok(support_acyclic_sorted(g, &s))
}

fn support_acyclic_sorted(g: &EdgeColoredMultigraph, s: &[EdgeId]) -> bool {
    let mut uf = UnionFind::new(g.n);
    let mut pairs = BTreeSet::new();
    for &e in s {
        let edge = &g.edges[e];
        if pairs.insert((edge.u, edge.v)) && !uf.union(edge.u, edge.v) {
            return false;
        }
    }
    true
}

fn feasible_bundled_sorted(g: &EdgeColoredMultigraph, s: &[EdgeId]) -> bool {
    support_acyclic_sorted(g, s) && properly_colored_sorted(g, s)
}

/// An edge set with acyclic support, grouped into bundles by endpoint pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BundledForest {
    edges: BTreeSet<EdgeId>,
    bundles: BTreeMap<(VertexId, VertexId), BTreeSet<EdgeId>>,
}

impl BundledForest {
    pub fn empty() -> Self {
        BundledForest {
            edges: BTreeSet::new(),
            bundles: BTreeMap::new(),
        }
    }

    /// Groups `ids` into bundles, rejecting sets whose support has a cycle.
    pub fn from_edges(g: &EdgeColoredMultigraph, ids: &[EdgeId]) -> Result<Self> {
        let s = g.checked_sorted(ids)?;
        if !support_acyclic_sorted(g, &s) {
            return Err(Error::InvalidArgument(
                "edge set has a cycle of length three or more".into(),
            ));
        }
        let mut f = BundledForest::empty();
        for e in s {
            f.insert(g, e);
        }
        Ok(f)
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.contains(&e)
    }

    pub fn edge_ids(&self) -> Vec<EdgeId> {
        self.edges.iter().copied().collect()
    }

    pub fn bundles(&self) -> &BTreeMap<(VertexId, VertexId), BTreeSet<EdgeId>> {
        &self.bundles
    }

    /// One support edge per nonempty bundle, ascending.
    pub fn support_edges(&self) -> Vec<(VertexId, VertexId)> {
        self.bundles.keys().copied().collect()
    }

    fn insert(&mut self, g: &EdgeColoredMultigraph, e: EdgeId) {
        let edge = &g.edges[e];
        self.edges.insert(e);
        self.bundles.entry((edge.u, edge.v)).or_default().insert(e);
    }

    fn remove(&mut self, g: &EdgeColoredMultigraph, e: EdgeId) {
        let edge = &g.edges[e];
        self.edges.remove(&e);
        if let Some(bundle) = self.bundles.get_mut(&(edge.u, edge.v)) {
            bundle.remove(&e);
            if bundle.is_empty() {
                self.bundles.remove(&(edge.u, edge.v));
            }
        }
    }

    /// Vertices adjacent to `v` in the support graph.
    fn support_neighbors(&self, v: VertexId) -> Vec<VertexId> {
        let mut out = Vec::new();
        for &(a, b) in self.bundles.keys() {
            if a == v {
                out.push(b);
            } else if b == v {
                out.push(a);
            }
        }
        out
    }

    /// The unique path from `u` to `v` in the support forest, as a vertex
    /// sequence starting at `u`, if the two are connected.
    fn support_path(&self, u: VertexId, v: VertexId, n: usize) -> Option<Vec<VertexId>> {
        if u == v {
            return Some(vec![u]);
        }
        let mut parent = vec![usize::MAX; n];
        let mut queue = std::collections::VecDeque::from([u]);
        parent[u] = u;
        while let Some(x) = queue.pop_front() {
            if x == v {
                break;
            }
            for y in self.support_neighbors(x) {
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if parent[v] == usize::MAX {
            return None;
        }
        let mut path = vec![v];
        let mut cur = v;
        while cur != u {
            cur = parent[cur];
            path.push(cur);
        }
        path.reverse();
        Some(path)
    }
}

/// Whether `forest + e` is still a properly colored forest with bundles:
/// the new edge may not close a support cycle and its color must respect
/// the bounds at both endpoints.
fn can_add(g: &EdgeColoredMultigraph, forest: &BundledForest, e: EdgeId) -> bool {
    let edge = &g.edges[e];
    let mut count = 1;
    for &f in &forest.edges {
        let other = &g.edges[f];
        if other.color == edge.color
            && (other.u == edge.u || other.v == edge.u || other.u == edge.v || other.v == edge.v)
        {
            count += 1;
        }
    }
    // With unit bounds this is just "the color is free at both endpoints";
    // the count is against the tighter of the two endpoint bounds.
    if count > g.bound(edge.u, edge.color).min(g.bound(edge.v, edge.color)) {
        return false;
    }
    if forest.bundles.contains_key(&(edge.u, edge.v)) {
        return true;
    }
    forest.support_path(edge.u, edge.v, g.n).is_none()
}

/// Colors of surviving edges at `u` or `v` once `excluded` is removed.
fn colors_at_pair(
    g: &EdgeColoredMultigraph,
    forest: &BundledForest,
    u: VertexId,
    v: VertexId,
    excluded: &BTreeSet<EdgeId>,
) -> BTreeSet<ColorId> {
    let mut colors = BTreeSet::new();
    for &f in &forest.edges {
        if excluded.contains(&f) {
            continue;
        }
        let edge = &g.edges[f];
        if edge.u == u || edge.v == u || edge.u == v || edge.v == v {
            colors.insert(edge.color);
        }
    }
    colors
}

fn candidates_against(
    g: &EdgeColoredMultigraph,
    forest: &BundledForest,
    u: VertexId,
    v: VertexId,
    bundle: &BTreeSet<EdgeId>,
) -> Vec<EdgeId> {
    let blocked = colors_at_pair(g, forest, u, v, bundle);
    g.edges_between(u, v)
        .iter()
        .copied()
        .filter(|e| !forest.contains(*e) && !blocked.contains(&g.edges[*e].color))
        .collect()
}

/// Unused `u`–`v` edges whose colors avoid every color still present at `u`
/// or `v` after removing the bundle `s`. The bundle must be one of the
/// bundles on the unique `u`–`v` path in the support of `forest`.
pub fn candidate_set(
    g: &EdgeColoredMultigraph,
    forest: &BundledForest,
    u: VertexId,
    v: VertexId,
    s: &[EdgeId],
) -> Result<Vec<EdgeId>> {
    if u >= g.n() || v >= g.n() || u == v {
        return Err(Error::InvalidArgument(format!("bad vertex pair ({u}, {v})")));
    }
    let s_sorted = g.checked_sorted(s)?;
    let s_set: BTreeSet<EdgeId> = s_sorted.into_iter().collect();
    let path = forest.support_path(u, v, g.n()).ok_or_else(|| {
        Error::ContractViolation(format!("no {u}-{v} path in the support forest"))
    })?;
    let on_path = path.windows(2).any(|w| {
        let key = (w[0].min(w[1]), w[0].max(w[1]));
        forest.bundles.get(&key) == Some(&s_set)
    });
    if !on_path {
        return Err(Error::ContractViolation(format!(
            "the given bundle is not a path bundle between {u} and {v}"
        )));
    }
    Ok(candidates_against(g, forest, u, v, &s_set))
}

fn require_unit_bounds(g: &EdgeColoredMultigraph) -> Result<()> {
    if !g.has_unit_bounds() {
        return Err(Error::InvalidArgument(
            "bundle-exchange search requires all bounds to be 1".into(),
        ));
    }
    Ok(())
}

/// Greedy insertion followed by bundle exchanges along support paths.
///
/// Starting from the empty forest, edges are scanned in ascending id order
/// and added whenever the result stays a properly colored forest with
/// bundles. Then vertex pairs `(u, v)` with unused parallel edges are
/// scanned in ascending lexicographic order; for each, the bundles on the
/// unique `u`–`v` support path are tried from `u` toward `v`, and the first
/// bundle whose candidate set is strictly larger is swapped out for that
/// candidate set, after which the greedy scan restarts. Each swap strictly
/// grows the forest, so there are at most `m` restarts. Requires all bounds
/// to be 1. The result has size at least a third of the largest properly
/// colored forest with bundles.
pub fn bundled_local_search(g: &EdgeColoredMultigraph) -> Result<BundledForest> {
    bundled_local_search_with_stats(g).map(|(f, _)| f)
}

/// Same as [`bundled_local_search`], also reporting how many exchange
/// restarts occurred.
pub fn bundled_local_search_with_stats(
    g: &EdgeColoredMultigraph,
) -> Result<(BundledForest, usize)> {
    require_unit_bounds(g)?;
    let mut forest = BundledForest::empty();
    let mut restarts = 0;
    'outer: loop {
        for e in 0..g.m() {
            if !forest.contains(e) && can_add(g, &forest, e) {
                forest.insert(g, e);
            }
        }
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                let spare: Vec<EdgeId> = g
                    .edges_between(u, v)
                    .iter()
                    .copied()
                    .filter(|&e| !forest.contains(e))
                    .collect();
                if spare.is_empty() {
                    continue;
                }
                let Some(path) = forest.support_path(u, v, g.n()) else {
                    continue;
                };
                for w in path.windows(2) {
                    let key = (w[0].min(w[1]), w[0].max(w[1]));
                    let bundle = forest.bundles[&key].clone();
                    let candidates = candidates_against(g, &forest, u, v, &bundle);
                    if candidates.len() > bundle.len() {
                        let before = forest.len();
                        for &e in &bundle {
                            forest.remove(g, e);
                        }
                        for e in candidates {
                            forest.insert(g, e);
                        }
                        debug_assert!(forest.len() > before);
                        restarts += 1;
                        continue 'outer;
                    }
                }
            }
        }
        return Ok((forest, restarts));
    }
}

/// No edge outside the forest can be added while keeping it a properly
/// colored forest with bundles.
pub fn is_greedy_closed(g: &EdgeColoredMultigraph, forest: &BundledForest) -> bool {
    (0..g.m()).all(|e| forest.contains(e) || !can_add(g, forest, e))
}

/// No bundle exchange fires: for every pair with spare parallel edges and
/// every bundle on its support path, the candidate set is no larger than
/// the bundle.
pub fn is_exchange_closed(g: &EdgeColoredMultigraph, forest: &BundledForest) -> Result<bool> {
    require_unit_bounds(g)?;
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if g.edges_between(u, v)
                .iter()
                .all(|&e| forest.contains(e))
            {
                continue;
            }
            let Some(path) = forest.support_path(u, v, g.n()) else {
                continue;
            };
            for w in path.windows(2) {
                let key = (w[0].min(w[1]), w[0].max(w[1]));
                let bundle = &forest.bundles[&key];
                if candidates_against(g, forest, u, v, bundle).len() > bundle.len() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Largest subset of `within` whose support is acyclic: a maximum-weight
/// spanning forest of the support of `within`, where each support edge
/// weighs its bundle size, then all edges of the chosen bundles.
pub fn max_forest_with_bundles(
    g: &EdgeColoredMultigraph,
    within: &[EdgeId],
) -> Result<BundledForest> {
    let s = g.checked_sorted(within)?;
    let mut bundles: BTreeMap<(VertexId, VertexId), Vec<EdgeId>> = BTreeMap::new();
    for &e in &s {
        let edge = &g.edges[e];
        bundles.entry((edge.u, edge.v)).or_default().push(e);
    }
    let mut support: Vec<(&(VertexId, VertexId), &Vec<EdgeId>)> = bundles.iter().collect();
    support.sort_by_key(|(pair, ids)| (std::cmp::Reverse(ids.len()), **pair));
    let mut uf = UnionFind::new(g.n);
    let mut forest = BundledForest::empty();
    for (&(u, v), ids) in support {
        if uf.union(u, v) {
            for &e in ids {
                forest.insert(g, e);
            }
        }
    }
    Ok(forest)
}

/// Union of one maximum matching per color class, thinned to a forest with
/// bundles. Each color class of the output is a matching, so the output is
/// properly colored. Gives 3/4 of the largest properly colored forest with
/// bundles for two colors and 1/2 for three; it runs for any number of
/// colors without a guarantee.
pub fn small_color_forest(g: &EdgeColoredMultigraph) -> Result<BundledForest> {
    let mut union: Vec<EdgeId> = Vec::new();
    for color in 0..g.k() {
        let ids: Vec<EdgeId> = (0..g.m()).filter(|&e| g.edges[e].color == color).collect();
        let pairs: Vec<(VertexId, VertexId)> =
            ids.iter().map(|&e| (g.edges[e].u, g.edges[e].v)).collect();
        let matched = max_matching(g.n, &pairs)?;
        union.extend(matched.into_iter().map(|local| ids[local]));
    }
    max_forest_with_bundles(g, &union)
}

pub const DEFAULT_GPF_EXACT_CAP: usize = 20;

/// Maximum-weight properly colored forest (no parallel edges at all) by
/// pruned enumeration; ties go to the lexicographically smallest edge set.
pub fn solve_gpf_exact_capped(g: &EdgeColoredMultigraph, cap: usize) -> Result<Vec<EdgeId>> {
    if g.m() > cap {
        return Err(Error::ResourceLimit(format!(
            "{} edges exceed the enumeration cap {cap}",
            g.m()
        )));
    }
    let feasible = |s: &[EdgeId]| {
        let mut uf = UnionFind::new(g.n);
        s.iter().all(|&e| uf.union(g.edges[e].u, g.edges[e].v)) && properly_colored_sorted(g, s)
    };
    Ok(enumerate_best(g, &feasible, |s| g.weight_of(s)))
}

pub fn solve_gpf_exact(g: &EdgeColoredMultigraph) -> Result<Vec<EdgeId>> {
    solve_gpf_exact_capped(g, DEFAULT_GPF_EXACT_CAP)
}

/// Largest properly colored forest with bundles by pruned enumeration;
/// maximizes cardinality, ties to the lexicographically smallest edge set.
pub fn solve_bundled_exact_capped(
    g: &EdgeColoredMultigraph,
    cap: usize,
) -> Result<BundledForest> {
    if g.m() > cap {
        return Err(Error::ResourceLimit(format!(
            "{} edges exceed the enumeration cap {cap}",
            g.m()
        )));
    }
    let feasible = |s: &[EdgeId]| feasible_bundled_sorted(g, s);
    let best = enumerate_best(g, &feasible, |s| s.len() as Weight);
    BundledForest::from_edges(g, &best)
}

pub fn solve_bundled_exact(g: &EdgeColoredMultigraph) -> Result<BundledForest> {
    solve_bundled_exact_capped(g, DEFAULT_GPF_EXACT_CAP)
}

/// Depth-first search over edge ids ascending, pruning infeasible partial
/// sets (feasibility is downward closed for both callers above).
fn enumerate_best(
    g: &EdgeColoredMultigraph,
    feasible: &dyn Fn(&[EdgeId]) -> bool,
    score: impl Fn(&[EdgeId]) -> Weight + Copy,
) -> Vec<EdgeId> {
    fn dfs(
        m: usize,
        next: EdgeId,
        cur: &mut Vec<EdgeId>,
        feasible: &dyn Fn(&[EdgeId]) -> bool,
        score: &dyn Fn(&[EdgeId]) -> Weight,
        best: &mut Vec<EdgeId>,
        best_score: &mut Weight,
    ) {
        let s = score(cur);
        if s > *best_score || (s == *best_score && *cur < *best) {
            *best = cur.clone();
            *best_score = s;
        }
        for e in next..m {
            cur.push(e);
            if feasible(cur) {
                dfs(m, e + 1, cur, feasible, score, best, best_score);
            }
            cur.pop();
        }
    }
    let mut best = Vec::new();
    let mut best_score = 0;
    let mut cur = Vec::new();
    dfs(
        g.m(),
        0,
        &mut cur,
        feasible,
        &score,
        &mut best,
        &mut best_score,
    );
    best
}

/// Properly colored forests as a bounded matroid instance: the graphic
/// matroid over the edge list plus one hyperedge per nonempty (vertex,
/// color) incidence set, bounded by `g_i(v)`. Every edge lies in at most
/// two such sets, so the instance has maximum degree at most 2, and a set
/// is feasible exactly when it is a g-properly colored forest.
pub fn reduce_gpf_to_dbmis(g: &EdgeColoredMultigraph) -> Result<DbmisInstance> {
    let endpoints: Vec<(VertexId, VertexId)> = g.edges.iter().map(|e| (e.u, e.v)).collect();
    let matroid = Matroid::graphic(g.n, endpoints)?;
    let mut hyperedges: Vec<(Vec<EdgeId>, u64)> = Vec::new();
    for v in 0..g.n {
        for color in 0..g.k {
            let members: Vec<EdgeId> = (0..g.m())
                .filter(|&e| {
                    let edge = &g.edges[e];
                    edge.color == color && (edge.u == v || edge.v == v)
                })
                .collect();
            if !members.is_empty() {
                hyperedges.push((members, g.bound(v, color)));
            }
        }
    }
    let hyper = BoundedHypergraph::new(g.m(), hyperedges)?;
    let weights: Vec<Weight> = g.edges.iter().map(|e| e.weight).collect();
    DbmisInstance::new(matroid, hyper, weights)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono_triangle() -> EdgeColoredMultigraph {
        EdgeColoredMultigraph::new(
            3,
            1,
            vec![(0, 1, 0, 1), (1, 2, 0, 1), (0, 2, 0, 1)],
            vec![],
        )
        .unwrap()
    }

    #[test]
    fn construction_rejects_bad_edges() {
        assert!(EdgeColoredMultigraph::new(2, 1, vec![(0, 0, 0, 1)], vec![]).is_err());
        assert!(EdgeColoredMultigraph::new(2, 1, vec![(0, 1, 1, 1)], vec![]).is_err());
        let dup = EdgeColoredMultigraph::new(2, 1, vec![(0, 1, 0, 1), (1, 0, 0, 1)], vec![]);
        assert!(dup.is_err());
        // Parallel edges of different colors are fine.
        assert!(
            EdgeColoredMultigraph::new(2, 2, vec![(0, 1, 0, 1), (0, 1, 1, 1)], vec![]).is_ok()
        );
    }

    #[test]
    fn proper_coloring_checks() {
        let g = EdgeColoredMultigraph::new(
            4,
            3,
            vec![(0, 1, 0, 1), (0, 2, 1, 1), (0, 3, 2, 1)],
            vec![],
        )
        .unwrap();
        assert!(is_g_properly_colored(&g, &[]).unwrap());
        assert!(is_g_properly_colored(&g, &[0, 1, 2]).unwrap());

        let clash = EdgeColoredMultigraph::new(
            3,
            1,
            vec![(0, 1, 0, 1), (1, 2, 0, 1)],
            vec![],
        )
        .unwrap();
        assert!(!is_g_properly_colored(&clash, &[0, 1]).unwrap());
        // Raising the bound at the shared vertex legalizes the pair.
        let relaxed = EdgeColoredMultigraph::new(
            3,
            1,
            vec![(0, 1, 0, 1), (1, 2, 0, 1)],
            vec![((1, 0), 2)],
        )
        .unwrap();
        assert!(is_g_properly_colored(&relaxed, &[0, 1]).unwrap());
    }

    #[test]
    fn bundled_forest_construction() {
        let g = EdgeColoredMultigraph::new(
            3,
            3,
            vec![(0, 1, 0, 1), (0, 1, 1, 1), (1, 2, 0, 1), (0, 2, 2, 1)],
            vec![],
        )
        .unwrap();
        // Two bundles form a path; fine even with a parallel pair.
        let f = BundledForest::from_edges(&g, &[0, 1, 2]).unwrap();
        assert_eq!(f.len(), 3);
        assert_eq!(f.support_edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(f.bundles()[&(0, 1)].len(), 2);
        // Closing the support triangle is rejected.
        assert!(BundledForest::from_edges(&g, &[0, 2, 3]).is_err());
        // A 2-cycle (parallel pair alone) is not a cycle of length >= 3.
        assert!(is_forest_with_bundles(&g, &[0, 1]).unwrap());
        assert!(!is_forest_with_bundles(&g, &[0, 2, 3]).unwrap());
    }

    #[test]
    fn search_on_properly_colored_tree_keeps_everything() {
        let g = EdgeColoredMultigraph::new(
            4,
            3,
            vec![(0, 1, 0, 1), (1, 2, 1, 1), (2, 3, 2, 1)],
            vec![],
        )
        .unwrap();
        let f = bundled_local_search(&g).unwrap();
        assert_eq!(f.edge_ids(), vec![0, 1, 2]);
    }

    #[test]
    fn search_on_mono_triangle_keeps_one_edge() {
        let f = bundled_local_search(&mono_triangle()).unwrap();
        assert_eq!(f.len(), 1);
        assert!(is_greedy_closed(&mono_triangle(), &f));
        assert!(is_exchange_closed(&mono_triangle(), &f).unwrap());
    }

    #[test]
    fn search_requires_unit_bounds() {
        let g = EdgeColoredMultigraph::new(
            3,
            1,
            vec![(0, 1, 0, 1), (1, 2, 0, 1)],
            vec![((1, 0), 2)],
        )
        .unwrap();
        assert!(matches!(
            bundled_local_search(&g),
            Err(Error::InvalidArgument(_))
        ));
    }

    /// Path 0-2-1 in the forest, two fresh-colored unused 0-1 edges; the
    /// exchange drops the size-1 bundle at (0,2) and gains two edges.
    fn exchange_graph() -> EdgeColoredMultigraph {
        EdgeColoredMultigraph::new(
            3,
            4,
            vec![(0, 2, 0, 1), (1, 2, 1, 1), (0, 1, 2, 1), (0, 1, 3, 1)],
            vec![],
        )
        .unwrap()
    }

    #[test]
    fn candidate_set_finds_the_swap() {
        let g = exchange_graph();
        let f = BundledForest::from_edges(&g, &[0, 1]).unwrap();
        assert_eq!(candidate_set(&g, &f, 0, 1, &[0]).unwrap(), vec![2, 3]);
        // The other path bundle survives, so its color blocks nothing here,
        // but the bundle itself is smaller than the candidate set too.
        assert_eq!(candidate_set(&g, &f, 0, 1, &[1]).unwrap(), vec![2, 3]);
    }

    #[test]
    fn candidate_set_excludes_blocked_colors() {
        // The unused 0-1 edge shares its color with the surviving 1-2 edge.
        let g = EdgeColoredMultigraph::new(
            3,
            2,
            vec![(0, 2, 0, 1), (1, 2, 1, 1), (0, 1, 1, 1)],
            vec![],
        )
        .unwrap();
        let f = BundledForest::from_edges(&g, &[0, 1]).unwrap();
        assert_eq!(candidate_set(&g, &f, 0, 1, &[0]).unwrap(), Vec::<EdgeId>::new());
    }

    #[test]
    fn candidate_set_validates_the_bundle() {
        let g = exchange_graph();
        let f = BundledForest::from_edges(&g, &[0, 1]).unwrap();
        // {0, 1} is two bundles, not one bundle on the path.
        assert!(matches!(
            candidate_set(&g, &f, 0, 1, &[0, 1]),
            Err(Error::ContractViolation(_))
        ));
        // Disconnected pair: no support path.
        let empty = BundledForest::empty();
        assert!(matches!(
            candidate_set(&g, &empty, 0, 1, &[]),
            Err(Error::ContractViolation(_))
        ));
    }

    #[test]
    fn search_fires_the_exchange() {
        let g = exchange_graph();
        let (f, restarts) = bundled_local_search_with_stats(&g).unwrap();
        assert_eq!(f.edge_ids(), vec![1, 2, 3]);
        assert_eq!(restarts, 1);
        assert!(is_greedy_closed(&g, &f));
        assert!(is_exchange_closed(&g, &f).unwrap());
    }

    #[test]
    fn max_forest_keeps_heavy_bundles() {
        // Support triangle with bundle sizes 3, 2, 1: drop the singleton.
        let g = EdgeColoredMultigraph::new(
            3,
            3,
            vec![
                (0, 1, 0, 1),
                (0, 1, 1, 1),
                (0, 1, 2, 1),
                (1, 2, 0, 1),
                (1, 2, 1, 1),
                (0, 2, 0, 1),
            ],
            vec![],
        )
        .unwrap();
        let f = max_forest_with_bundles(&g, &[0, 1, 2, 3, 4, 5]).unwrap();
        assert_eq!(f.edge_ids(), vec![0, 1, 2, 3, 4]);
        // A forest input is returned whole; the empty set stays empty.
        let part = max_forest_with_bundles(&g, &[0, 3]).unwrap();
        assert_eq!(part.edge_ids(), vec![0, 3]);
        assert!(max_forest_with_bundles(&g, &[]).unwrap().is_empty());
    }

    #[test]
    fn small_colors_on_single_color_path() {
        let g = EdgeColoredMultigraph::new(
            4,
            1,
            vec![(0, 1, 0, 1), (1, 2, 0, 1), (2, 3, 0, 1)],
            vec![],
        )
        .unwrap();
        let f = small_color_forest(&g).unwrap();
        assert_eq!(f.edge_ids(), vec![0, 2]);
    }

    #[test]
    fn small_colors_on_alternating_four_cycle() {
        let g = EdgeColoredMultigraph::new(
            4,
            2,
            vec![(0, 1, 0, 1), (1, 2, 1, 1), (2, 3, 0, 1), (0, 3, 1, 1)],
            vec![],
        )
        .unwrap();
        let f = small_color_forest(&g).unwrap();
        assert_eq!(f.len(), 3);
        let exact = solve_bundled_exact(&g).unwrap();
        assert_eq!(exact.len(), 3);
    }

    #[test]
    fn small_colors_on_mono_triangle() {
        let f = small_color_forest(&mono_triangle()).unwrap();
        assert_eq!(f.len(), 1);
    }

    #[test]
    fn gpf_reduction_shapes() {
        let single = EdgeColoredMultigraph::new(2, 1, vec![(0, 1, 0, 3)], vec![]).unwrap();
        let inst = reduce_gpf_to_dbmis(&single).unwrap();
        assert_eq!(inst.hypergraph().hyperedges().len(), 2);
        assert!(inst
            .hypergraph()
            .hyperedges()
            .iter()
            .all(|h| h.members.len() == 1));
        // One incidence set per endpoint, so even a lone edge has degree 2.
        assert_eq!(inst.max_degree(), 2);
        assert_eq!(inst.weights(), &[3]);

        let inst = reduce_gpf_to_dbmis(&mono_triangle()).unwrap();
        assert_eq!(inst.hypergraph().hyperedges().len(), 3);
        assert!(inst
            .hypergraph()
            .hyperedges()
            .iter()
            .all(|h| h.members.len() == 2));
        assert_eq!(inst.max_degree(), 2);
        let best = crate::solvers::solve_exact(&inst).unwrap();
        assert_eq!(best.len(), 1);
    }

    #[test]
    fn gpf_exact_on_mono_triangle() {
        assert_eq!(solve_gpf_exact(&mono_triangle()).unwrap(), vec![0]);
        let bundled = solve_bundled_exact(&mono_triangle()).unwrap();
        assert_eq!(bundled.len(), 1);
    }
}
