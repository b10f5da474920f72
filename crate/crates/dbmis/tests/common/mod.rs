//! Brute-force reference checks shared by the integration tests.
//!
//! Everything here recomputes feasibility from the definitions: cycle
//! detection by depth-first search instead of union-find, bound checks by
//! direct counting, optima by unpruned enumeration over all subsets. The
//! library is only trusted for the data it stores, never for the predicate
//! being verified.
#![allow(dead_code)]

use dbmis::bmatching::HierarchicalBMatchingInstance;
use dbmis::branching::ColoredDigraph;
use dbmis::{DbmisInstance, EdgeColoredMultigraph};

/// All subsets of `0..n` as sorted id vectors, in mask order.
pub fn subsets(n: usize) -> Vec<Vec<usize>> {
    assert!(n <= 20, "subset enumeration capped at 20 elements");
    (0..1usize << n)
        .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect())
        .collect()
}

/// Acyclicity of a multigraph by depth-first search. Each edge is its own
/// object: a repeated pair is a cycle, and a self-loop is a cycle.
pub fn acyclic_dfs(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (idx, &(u, v)) in edges.iter().enumerate() {
        if u == v {
            return false;
        }
        adj[u].push((v, idx));
        adj[v].push((u, idx));
    }
    let mut seen = vec![false; n];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut stack = vec![(start, usize::MAX)];
        while let Some((at, in_edge)) = stack.pop() {
            for &(next, via) in &adj[at] {
                if via == in_edge {
                    continue;
                }
                if seen[next] {
                    return false;
                }
                seen[next] = true;
                stack.push((next, via));
            }
        }
    }
    true
}

/// Per-vertex per-color counting against the graph's bounds.
pub fn properly_colored_direct(g: &EdgeColoredMultigraph, ids: &[usize]) -> bool {
    let mut counts = std::collections::HashMap::new();
    for &id in ids {
        let e = &g.edges()[id];
        for v in [e.u, e.v] {
            let c = counts.entry((v, e.color)).or_insert(0u64);
            *c += 1;
            if *c > g.bound(v, e.color) {
                return false;
            }
        }
    }
    true
}

/// Forest-with-bundles check: one support edge per used pair, then DFS.
pub fn support_acyclic_direct(g: &EdgeColoredMultigraph, ids: &[usize]) -> bool {
    let mut pairs: Vec<(usize, usize)> = ids
        .iter()
        .map(|&id| {
            let e = &g.edges()[id];
            (e.u, e.v)
        })
        .collect();
    pairs.sort_unstable();
    pairs.dedup();
    acyclic_dfs(g.n(), &pairs)
}

/// Plain forest check: every chosen edge is its own object, so a kept
/// parallel pair already closes a cycle.
pub fn forest_direct(g: &EdgeColoredMultigraph, ids: &[usize]) -> bool {
    let raw: Vec<(usize, usize)> = ids
        .iter()
        .map(|&id| {
            let e = &g.edges()[id];
            (e.u, e.v)
        })
        .collect();
    acyclic_dfs(g.n(), &raw)
}

/// Largest properly colored forest with bundles, by full enumeration.
pub fn bundled_opt_size(g: &EdgeColoredMultigraph) -> usize {
    subsets(g.m())
        .iter()
        .filter(|ids| properly_colored_direct(g, ids) && support_acyclic_direct(g, ids))
        .map(|ids| ids.len())
        .max()
        .unwrap_or(0)
}

/// Heaviest properly colored plain forest, by full enumeration.
pub fn gpf_opt_weight(g: &EdgeColoredMultigraph) -> u64 {
    subsets(g.m())
        .iter()
        .filter(|ids| properly_colored_direct(g, ids) && forest_direct(g, ids))
        .map(|ids| g.weight_of(ids))
        .max()
        .unwrap_or(0)
}

/// Feasibility in a bounded instance, with the hyperedge bounds counted
/// here rather than by the instance.
pub fn dbmis_feasible_direct(inst: &DbmisInstance, set: &[usize]) -> bool {
    if !inst.matroid().is_independent(set).unwrap() {
        return false;
    }
    inst.hypergraph().hyperedges().iter().all(|h| {
        let hits = set
            .iter()
            .filter(|&&v| h.members.binary_search(&v).is_ok())
            .count() as u64;
        hits <= h.bound
    })
}

/// `(max size, max weight)` over all feasible sets, unpruned.
pub fn dbmis_opt(inst: &DbmisInstance) -> (usize, u64) {
    let mut best_size = 0;
    let mut best_weight = 0;
    for ids in subsets(inst.n()) {
        if dbmis_feasible_direct(inst, &ids) {
            best_size = best_size.max(ids.len());
            best_weight = best_weight.max(inst.weight_of(&ids));
        }
    }
    (best_size, best_weight)
}

fn branching_shape_direct(d: &ColoredDigraph, ids: &[usize]) -> bool {
    let mut in_deg = vec![0usize; d.n()];
    let mut undirected = Vec::with_capacity(ids.len());
    for &id in ids {
        let a = &d.arcs()[id];
        in_deg[a.head] += 1;
        if in_deg[a.head] > 1 {
            return false;
        }
        undirected.push((a.tail, a.head));
    }
    acyclic_dfs(d.n(), &undirected)
}

/// Branching whose arcs into each vertex respect the per-color caps there.
pub fn colored_branching_direct(d: &ColoredDigraph, ids: &[usize]) -> bool {
    if !branching_shape_direct(d, ids) {
        return false;
    }
    let mut counts = std::collections::HashMap::new();
    for &id in ids {
        let a = &d.arcs()[id];
        for v in [a.tail, a.head] {
            let c = counts.entry((v, a.color)).or_insert(0u64);
            *c += 1;
            if *c > d.inc_bound(v, a.color) {
                return false;
            }
        }
    }
    true
}

/// Branching whose arcs out of each vertex respect the per-color caps.
pub fn out_colored_branching_direct(d: &ColoredDigraph, ids: &[usize]) -> bool {
    if !branching_shape_direct(d, ids) {
        return false;
    }
    let mut counts = std::collections::HashMap::new();
    for &id in ids {
        let a = &d.arcs()[id];
        let c = counts.entry((a.tail, a.color)).or_insert(0u64);
        *c += 1;
        if *c > d.out_bound(a.tail, a.color) {
            return false;
        }
    }
    true
}

/// Degree and per-vertex color caps, counted directly.
pub fn bmatching_direct(g: &EdgeColoredMultigraph, b: &[u64], ids: &[usize]) -> bool {
    let mut deg = vec![0u64; g.n()];
    let mut counts = std::collections::HashMap::new();
    for &id in ids {
        let e = &g.edges()[id];
        for v in [e.u, e.v] {
            deg[v] += 1;
            if deg[v] > b[v] {
                return false;
            }
            let c = counts.entry((v, e.color)).or_insert(0u64);
            *c += 1;
            if *c > g.bound(v, e.color) {
                return false;
            }
        }
    }
    true
}

/// Hierarchical feasibility: copy degrees summed within every bounded set.
pub fn hier_feasible_direct(h: &HierarchicalBMatchingInstance, ids: &[usize]) -> bool {
    let mut deg = vec![0u64; h.n_copies()];
    for &id in ids {
        let (u, v) = h.edges()[id];
        deg[u] += 1;
        deg[v] += 1;
    }
    h.sets()
        .iter()
        .all(|(members, bound)| members.iter().map(|&c| deg[c]).sum::<u64>() <= *bound)
}

/// A small zoo covering every oracle kind, used for exhaustive axiom and
/// rank checks. Grounds stay at or below `max_ground` elements.
pub fn matroid_zoo(max_ground: usize) -> Vec<(String, dbmis::Matroid)> {
    use dbmis::{GroundSet, Matroid};
    assert!(max_ground >= 8);
    let mut zoo: Vec<(String, Matroid)> = Vec::new();
    zoo.push(("free/0".into(), Matroid::free(GroundSet::dense(0))));
    zoo.push(("free/5".into(), Matroid::free(GroundSet::dense(5))));
    for rank in [0u64, 1, 2, 3] {
        zoo.push((
            format!("uniform/6r{rank}"),
            Matroid::uniform(GroundSet::dense(6), rank),
        ));
    }
    // Triangle plus a pendant and a parallel pair.
    zoo.push((
        "graphic/triangle+".into(),
        Matroid::graphic(4, vec![(0, 1), (1, 2), (0, 2), (2, 3), (0, 1)]).unwrap(),
    ));
    // Two disjoint parallel pairs.
    zoo.push((
        "graphic/pairs".into(),
        Matroid::graphic(4, vec![(0, 1), (0, 1), (2, 3), (2, 3)]).unwrap(),
    ));
    // Full multigraph on three vertices.
    zoo.push((
        "graphic/dense3".into(),
        Matroid::graphic(3, vec![(0, 1), (0, 1), (1, 2), (1, 2), (0, 2), (0, 2)]).unwrap(),
    ));
    zoo.push((
        "partition/caps".into(),
        Matroid::partition(
            GroundSet::dense(7),
            vec![(vec![0, 1, 2], 2), (vec![3, 4], 1), (vec![5], 0)],
        )
        .unwrap(),
    ));
    zoo.push((
        "partition/empty-part".into(),
        Matroid::partition(GroundSet::dense(4), vec![(vec![], 3), (vec![1, 3], 1)]).unwrap(),
    ));
    zoo.push((
        "directsum/mixed".into(),
        Matroid::direct_sum(vec![
            Matroid::uniform(GroundSet::new(vec![0, 1, 2]).unwrap(), 1),
            Matroid::copy(
                Matroid::graphic(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap(),
                vec![(3, 0), (4, 1), (5, 2)],
            )
            .unwrap(),
            Matroid::free(GroundSet::new(vec![6, 7]).unwrap()),
        ])
        .unwrap(),
    ));
    zoo.push((
        "restriction/graphic".into(),
        Matroid::restriction(
            Matroid::graphic(4, vec![(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]).unwrap(),
            GroundSet::new(vec![0, 2, 3, 4]).unwrap(),
        )
        .unwrap(),
    ));
    zoo.push((
        "copy/scrambled-partition".into(),
        Matroid::copy(
            Matroid::partition(GroundSet::dense(4), vec![(vec![0, 1], 1), (vec![2, 3], 1)])
                .unwrap(),
            vec![(10, 0), (3, 1), (7, 2), (0, 3)],
        )
        .unwrap(),
    ));
    zoo.push((
        "directsum/nested".into(),
        Matroid::direct_sum(vec![
            Matroid::direct_sum(vec![
                Matroid::uniform(GroundSet::new(vec![0, 1]).unwrap(), 1),
                Matroid::free(GroundSet::new(vec![2]).unwrap()),
            ])
            .unwrap(),
            Matroid::uniform(GroundSet::new(vec![3, 4]).unwrap(), 2),
        ])
        .unwrap(),
    ));
    for (name, m) in &zoo {
        assert!(
            m.ground().len() <= max_ground,
            "zoo entry {name} exceeds the ground cap"
        );
    }
    zoo
}

/// Subsets of an explicit (possibly sparse) id list.
pub fn subsets_of(ids: &[usize]) -> Vec<Vec<usize>> {
    assert!(ids.len() <= 20);
    (0..1usize << ids.len())
        .map(|mask| {
            ids.iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &id)| id)
                .collect()
        })
        .collect()
}
