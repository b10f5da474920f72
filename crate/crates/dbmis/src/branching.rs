//! Colored branchings in arc-colored digraphs.
//!
//! A branching is a union of vertex-disjoint arborescences: every vertex
//! has in-degree at most 1 and the underlying undirected graph is acyclic
//! (spanning is not required — roots are simply the in-degree-0 vertices).
//! Color bounds come in two flavors, and a digraph carries both:
//! out-bounds cap the selected arcs of each color *leaving* a vertex,
//! incidence bounds cap the selected arcs of each color *touching* it.
//!
//! Out-colored branchings are exactly the common independent sets of three
//! matroids ([`out_colored_branching_matroids`]); colored branchings are a
//! bounded matroid instance with every arc in exactly three degree sets
//! ([`reduce_colored_branching_to_dbmis`]).

use std::collections::BTreeMap;

use crate::instance::{BoundedHypergraph, DbmisInstance};
use crate::matroid::{GroundSet, Matroid};
use crate::union_find::UnionFind;
use crate::{ArcId, ColorId, Error, Result, VertexId, Weight};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredArc {
    pub tail: VertexId,
    pub head: VertexId,
    pub color: ColorId,
    pub weight: Weight,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredDigraph {
    n: usize,
    k: usize,
    arcs: Vec<ColoredArc>,
    /// Caps on selected arcs of a color leaving a vertex; default 1.
    out_bounds: BTreeMap<(VertexId, ColorId), u64>,
    /// Caps on selected arcs of a color incident to a vertex; default 1.
    inc_bounds: BTreeMap<(VertexId, ColorId), u64>,
}

/// Which family of color bounds a branching must respect.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColorMode {
    /// Bounds apply to outgoing arcs only.
    OutColored,
    /// Bounds apply to all incident arcs.
    Colored,
}

impl ColoredDigraph {
    /// Builds a loopless digraph with colors in `0..k`. Parallel and
    /// antiparallel arcs are allowed.
    pub fn new(
        n: usize,
        k: usize,
        arcs: Vec<(VertexId, VertexId, ColorId, Weight)>,
        out_bounds: Vec<((VertexId, ColorId), u64)>,
        inc_bounds: Vec<((VertexId, ColorId), u64)>,
    ) -> Result<Self> {
        let mut list = Vec::with_capacity(arcs.len());
        for (idx, (tail, head, color, weight)) in arcs.into_iter().enumerate() {
            if tail >= n || head >= n {
                return Err(Error::InvalidArgument(format!(
                    "arc {idx} endpoint out of range ({tail}, {head}) with {n} vertices"
                )));
            }
            if tail == head {
                return Err(Error::InvalidArgument(format!(
                    "arc {idx} is a self-loop at vertex {tail}"
                )));
            }
            if color >= k {
                return Err(Error::InvalidArgument(format!(
                    "arc {idx} color {color} out of range with {k} colors"
                )));
            }
            list.push(ColoredArc {
                tail,
                head,
                color,
                weight,
            });
        }
        let check = |name: &str, raw: Vec<((VertexId, ColorId), u64)>| {
            let mut map = BTreeMap::new();
            for ((v, color), g) in raw {
                if v >= n || color >= k {
                    return Err(Error::InvalidArgument(format!(
                        "{name} bound for ({v}, {color}) out of range"
                    )));
                }
                if map.insert((v, color), g).is_some() {
                    return Err(Error::InvalidArgument(format!(
                        "duplicate {name} bound for ({v}, {color})"
                    )));
                }
            }
            Ok(map)
        };
        Ok(ColoredDigraph {
            n,
            k,
            arcs: list,
            out_bounds: check("outgoing", out_bounds)?,
            inc_bounds: check("incidence", inc_bounds)?,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[ColoredArc] {
        &self.arcs
    }

    pub fn out_bound(&self, v: VertexId, color: ColorId) -> u64 {
        self.out_bounds.get(&(v, color)).copied().unwrap_or(1)
    }

    pub fn inc_bound(&self, v: VertexId, color: ColorId) -> u64 {
        self.inc_bounds.get(&(v, color)).copied().unwrap_or(1)
    }

    pub fn out_bound_overrides(&self) -> &BTreeMap<(VertexId, ColorId), u64> {
        &self.out_bounds
    }

    pub fn inc_bound_overrides(&self) -> &BTreeMap<(VertexId, ColorId), u64> {
        &self.inc_bounds
    }

    pub fn weight_of(&self, set: &[ArcId]) -> Weight {
        set.iter().map(|&a| self.arcs[a].weight).sum()
    }

    fn checked_sorted(&self, set: &[ArcId]) -> Result<Vec<ArcId>> {
        let mut s = set.to_vec();
        s.sort_unstable();
        if let Some(w) = s.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument(format!("duplicate arc id {}", w[0])));
        }
        if let Some(&bad) = s.iter().find(|&&a| a >= self.m()) {
            return Err(Error::InvalidArgument(format!(
                "arc id {bad} out of range with {} arcs",
                self.m()
            )));
        }
        Ok(s)
    }
}

fn branching_shape_sorted(d: &ColoredDigraph, s: &[ArcId]) -> bool {
    let mut in_deg = vec![0u64; d.n];
    let mut uf = UnionFind::new(d.n);
    for &a in s {
        let arc = &d.arcs[a];
        in_deg[arc.head] += 1;
        if in_deg[arc.head] > 1 {
            return false;
        }
        // Any repeated underlying edge (parallel or antiparallel pair) is
        // an underlying cycle and fails here too.
        if !uf.union(arc.tail, arc.head) {
            return false;
        }
    }
    true
}

fn color_counts_ok(
    d: &ColoredDigraph,
    s: &[ArcId],
    mode: ColorMode,
) -> bool {
    let mut counts: BTreeMap<(VertexId, ColorId), u64> = BTreeMap::new();
    let mut bump = |v: VertexId, color: ColorId, bound: u64| {
        let c = counts.entry((v, color)).or_insert(0);
        *c += 1;
        *c <= bound
    };
    for &a in s {
        let arc = &d.arcs[a];
        match mode {
            ColorMode::OutColored => {
                if !bump(arc.tail, arc.color, d.out_bound(arc.tail, arc.color)) {
                    return false;
                }
            }
            ColorMode::Colored => {
                if !bump(arc.tail, arc.color, d.inc_bound(arc.tail, arc.color))
                    || !bump(arc.head, arc.color, d.inc_bound(arc.head, arc.color))
                {
                    return false;
                }
            }
        }
    }
    true
}

/// Whether `set` is a branching whose out-color counts respect the
/// outgoing bounds.
pub fn is_out_colored_branching(d: &ColoredDigraph, set: &[ArcId]) -> Result<bool> {
    let s = d.checked_sorted(set)?;
    Ok(branching_shape_sorted(d, &s) && color_counts_ok(d, &s, ColorMode::OutColored))
}

/// Whether `set` is a branching whose incidence color counts respect the
/// incidence bounds.
pub fn is_colored_branching(d: &ColoredDigraph, set: &[ArcId]) -> Result<bool> {
    let s = d.checked_sorted(set)?;
    Ok(branching_shape_sorted(d, &s) && color_counts_ok(d, &s, ColorMode::Colored))
}

/// The three matroids whose common independent sets are exactly the
/// out-colored branchings: the graphic matroid of the underlying graph,
/// the partition matroid capping each in-star at 1, and the direct sum
/// over vertices of partition matroids splitting each out-star by color
/// with the outgoing bounds as capacities.
pub fn out_colored_branching_matroids(
    d: &ColoredDigraph,
) -> Result<(Matroid, Matroid, Matroid)> {
    let underlying: Vec<(VertexId, VertexId)> =
        d.arcs.iter().map(|a| (a.tail, a.head)).collect();
    let m_graph = Matroid::graphic(d.n, underlying)?;

    let mut in_stars: Vec<(Vec<ArcId>, u64)> = Vec::new();
    for v in 0..d.n {
        let star: Vec<ArcId> = (0..d.m()).filter(|&a| d.arcs[a].head == v).collect();
        if !star.is_empty() {
            in_stars.push((star, 1));
        }
    }
    let m_in = Matroid::partition(GroundSet::dense(d.m()), in_stars)?;

    let mut per_vertex = Vec::new();
    for v in 0..d.n {
        let out_star: Vec<ArcId> = (0..d.m()).filter(|&a| d.arcs[a].tail == v).collect();
        if out_star.is_empty() {
            continue;
        }
        let mut parts: Vec<(Vec<ArcId>, u64)> = Vec::new();
        for color in 0..d.k {
            let class: Vec<ArcId> = out_star
                .iter()
                .copied()
                .filter(|&a| d.arcs[a].color == color)
                .collect();
            if !class.is_empty() {
                parts.push((class, d.out_bound(v, color)));
            }
        }
        per_vertex.push(Matroid::partition(GroundSet::new(out_star)?, parts)?);
    }
    let m_out = Matroid::direct_sum(per_vertex)?;
    Ok((m_graph, m_in, m_out))
}

/// Colored branchings as a bounded matroid instance: the graphic matroid
/// of the underlying graph, one hyperedge per nonempty in-star with bound
/// 1, and one per nonempty (vertex, color) incidence set with the
/// incidence bound. Every arc lies in exactly three of these sets (its
/// head's in-star plus the incidence sets at both ends), so the instance
/// has maximum degree at most 3. In-star hyperedges come first, ascending
/// by vertex, then incidence sets ascending by (vertex, color).
pub fn reduce_colored_branching_to_dbmis(d: &ColoredDigraph) -> Result<DbmisInstance> {
    let underlying: Vec<(VertexId, VertexId)> =
        d.arcs.iter().map(|a| (a.tail, a.head)).collect();
    let matroid = Matroid::graphic(d.n, underlying)?;
    let mut hyperedges: Vec<(Vec<ArcId>, u64)> = Vec::new();
    for v in 0..d.n {
        let star: Vec<ArcId> = (0..d.m()).filter(|&a| d.arcs[a].head == v).collect();
        if !star.is_empty() {
            hyperedges.push((star, 1));
        }
    }
    for v in 0..d.n {
        for color in 0..d.k {
            let class: Vec<ArcId> = (0..d.m())
                .filter(|&a| {
                    let arc = &d.arcs[a];
                    arc.color == color && (arc.tail == v || arc.head == v)
                })
                .collect();
            if !class.is_empty() {
                hyperedges.push((class, d.inc_bound(v, color)));
            }
        }
    }
    let hyper = BoundedHypergraph::new(d.m(), hyperedges)?;
    let weights: Vec<Weight> = d.arcs.iter().map(|a| a.weight).collect();
    DbmisInstance::new(matroid, hyper, weights)
}

pub const DEFAULT_BRANCHING_EXACT_CAP: usize = 20;

/// Maximum-weight branching under the chosen color mode by pruned
/// enumeration; ties go to the lexicographically smallest arc set.
pub fn solve_branching_exact_capped(
    d: &ColoredDigraph,
    mode: ColorMode,
    cap: usize,
) -> Result<Vec<ArcId>> {
    if d.m() > cap {
        return Err(Error::ResourceLimit(format!(
            "{} arcs exceed the enumeration cap {cap}",
            d.m()
        )));
    }
    fn dfs(
        d: &ColoredDigraph,
        mode: ColorMode,
        next: ArcId,
        cur: &mut Vec<ArcId>,
        best: &mut Vec<ArcId>,
        best_weight: &mut Weight,
    ) {
        let w = d.weight_of(cur);
        if w > *best_weight || (w == *best_weight && *cur < *best) {
            *best = cur.clone();
            *best_weight = w;
        }
        for a in next..d.m() {
            cur.push(a);
            // Feasibility is downward closed in both modes, so pruning
            // infeasible partial sets is safe.
            if branching_shape_sorted(d, cur) && color_counts_ok(d, cur, mode) {
                dfs(d, mode, a + 1, cur, best, best_weight);
            }
            cur.pop();
        }
    }
    let mut best = Vec::new();
    let mut best_weight = 0;
    let mut cur = Vec::new();
    dfs(d, mode, 0, &mut cur, &mut best, &mut best_weight);
    Ok(best)
}

pub fn solve_branching_exact(d: &ColoredDigraph, mode: ColorMode) -> Result<Vec<ArcId>> {
    solve_branching_exact_capped(d, mode, DEFAULT_BRANCHING_EXACT_CAP)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono_directed_triangle() -> ColoredDigraph {
        ColoredDigraph::new(
            3,
            1,
            vec![(0, 1, 0, 1), (1, 2, 0, 1), (2, 0, 0, 1)],
            vec![],
            vec![],
        )
        .unwrap()
    }

    #[test]
    fn construction_rejects_bad_arcs() {
        assert!(ColoredDigraph::new(2, 1, vec![(0, 0, 0, 1)], vec![], vec![]).is_err());
        assert!(ColoredDigraph::new(2, 1, vec![(0, 2, 0, 1)], vec![], vec![]).is_err());
        assert!(ColoredDigraph::new(2, 1, vec![(0, 1, 1, 1)], vec![], vec![]).is_err());
        assert!(
            ColoredDigraph::new(2, 1, vec![(0, 1, 0, 1)], vec![((0, 0), 2), ((0, 0), 3)], vec![])
                .is_err()
        );
        // Antiparallel arcs are a legal input.
        assert!(ColoredDigraph::new(2, 1, vec![(0, 1, 0, 1), (1, 0, 0, 1)], vec![], vec![])
            .is_ok());
    }

    #[test]
    fn branching_checks() {
        let d = mono_directed_triangle();
        assert!(is_colored_branching(&d, &[]).unwrap());
        assert!(is_colored_branching(&d, &[0]).unwrap());
        // Two arcs of the triangle share a color at the middle vertex.
        assert!(!is_colored_branching(&d, &[0, 1]).unwrap());
        // Out-colored: tails 0 and 1 are distinct, so the colors are fine,
        // and in-degrees and the underlying path are fine too.
        assert!(is_out_colored_branching(&d, &[0, 1]).unwrap());
        // The full triangle has an underlying cycle.
        assert!(!is_out_colored_branching(&d, &[0, 1, 2]).unwrap());

        // Two arcs into the same head.
        let into = ColoredDigraph::new(
            3,
            2,
            vec![(0, 2, 0, 1), (1, 2, 1, 1)],
            vec![],
            vec![],
        )
        .unwrap();
        assert!(!is_out_colored_branching(&into, &[0, 1]).unwrap());
        assert!(!is_colored_branching(&into, &[0, 1]).unwrap());

        // An antiparallel pair repeats the underlying edge.
        let anti =
            ColoredDigraph::new(2, 2, vec![(0, 1, 0, 1), (1, 0, 1, 1)], vec![], vec![]).unwrap();
        assert!(!is_out_colored_branching(&anti, &[0, 1]).unwrap());
    }

    #[test]
    fn three_matroids_on_small_digraphs() {
        let single = ColoredDigraph::new(2, 1, vec![(0, 1, 0, 1)], vec![], vec![]).unwrap();
        let (mg, min, mout) = out_colored_branching_matroids(&single).unwrap();
        assert!(mg.is_independent(&[0]).unwrap());
        assert!(min.is_independent(&[0]).unwrap());
        assert!(mout.is_independent(&[0]).unwrap());

        let into = ColoredDigraph::new(
            3,
            2,
            vec![(0, 2, 0, 1), (1, 2, 1, 1)],
            vec![],
            vec![],
        )
        .unwrap();
        let (mg, min, mout) = out_colored_branching_matroids(&into).unwrap();
        assert!(mg.is_independent(&[0, 1]).unwrap());
        assert!(!min.is_independent(&[0, 1]).unwrap());
        assert!(mout.is_independent(&[0, 1]).unwrap());

        // Same tail, same color, unit bound: the out matroid rejects.
        let fan = ColoredDigraph::new(
            3,
            1,
            vec![(0, 1, 0, 1), (0, 2, 0, 1)],
            vec![],
            vec![],
        )
        .unwrap();
        let (_, _, mout) = out_colored_branching_matroids(&fan).unwrap();
        assert!(!mout.is_independent(&[0, 1]).unwrap());
        // Raising the outgoing bound legalizes the fan.
        let fan2 = ColoredDigraph::new(
            3,
            1,
            vec![(0, 1, 0, 1), (0, 2, 0, 1)],
            vec![((0, 0), 2)],
            vec![],
        )
        .unwrap();
        let (_, _, mout2) = out_colored_branching_matroids(&fan2).unwrap();
        assert!(mout2.is_independent(&[0, 1]).unwrap());
    }

    #[test]
    fn reduction_shapes() {
        let single = ColoredDigraph::new(2, 1, vec![(0, 1, 0, 4)], vec![], vec![]).unwrap();
        let inst = reduce_colored_branching_to_dbmis(&single).unwrap();
        // Head in-star, tail incidence set, head incidence set.
        assert_eq!(inst.hypergraph().hyperedges().len(), 3);
        assert_eq!(inst.max_degree(), 3);
        assert_eq!(inst.weights(), &[4]);

        let empty = ColoredDigraph::new(3, 1, vec![], vec![], vec![]).unwrap();
        let inst = reduce_colored_branching_to_dbmis(&empty).unwrap();
        assert_eq!(inst.n(), 0);
        assert!(inst.hypergraph().hyperedges().is_empty());

        let inst = reduce_colored_branching_to_dbmis(&mono_directed_triangle()).unwrap();
        assert_eq!(inst.max_degree(), 3);
        for a in 0..3 {
            assert_eq!(inst.hypergraph().degree_of(a), 3);
        }
    }

    #[test]
    fn reduction_matches_direct_checker_on_triangle() {
        let d = mono_directed_triangle();
        let inst = reduce_colored_branching_to_dbmis(&d).unwrap();
        for bits in 0u32..8 {
            let set: Vec<ArcId> = (0..3).filter(|&a| bits & (1 << a) != 0).collect();
            assert_eq!(
                inst.is_feasible(&set).unwrap(),
                is_colored_branching(&d, &set).unwrap(),
                "mismatch on {set:?}"
            );
        }
    }

    #[test]
    fn exact_solver_respects_the_mode() {
        let d = mono_directed_triangle();
        assert_eq!(solve_branching_exact(&d, ColorMode::Colored).unwrap(), vec![0]);
        // Out-colored allows two arcs of the triangle.
        assert_eq!(
            solve_branching_exact(&d, ColorMode::OutColored).unwrap(),
            vec![0, 1]
        );

        let disjoint = ColoredDigraph::new(
            4,
            1,
            vec![(0, 1, 0, 1), (2, 3, 0, 1)],
            vec![],
            vec![],
        )
        .unwrap();
        assert_eq!(
            solve_branching_exact(&disjoint, ColorMode::Colored).unwrap(),
            vec![0, 1]
        );

        let empty = ColoredDigraph::new(2, 1, vec![], vec![], vec![]).unwrap();
        assert!(solve_branching_exact(&empty, ColorMode::Colored)
            .unwrap()
            .is_empty());

        // Weight beats cardinality ties: a heavy lone arc into vertex 1.
        let weighted = ColoredDigraph::new(
            3,
            2,
            vec![(0, 1, 0, 5), (2, 1, 1, 1)],
            vec![],
            vec![],
        )
        .unwrap();
        assert_eq!(
            solve_branching_exact(&weighted, ColorMode::Colored).unwrap(),
            vec![0]
        );
    }

    #[test]
    fn exact_solver_cap() {
        let d = mono_directed_triangle();
        assert!(matches!(
            solve_branching_exact_capped(&d, ColorMode::Colored, 2),
            Err(Error::ResourceLimit(_))
        ));
    }
}
