//! Maximum cardinality matching in general graphs.
//!
//! Edmonds' augmenting-path search with blossom contraction, in the
//! classical array form: a BFS forest of alternating paths, `base[v]`
//! naming the blossom a vertex is currently contracted into, and odd cycles
//! detected when two even vertices meet. Runs in O(V^3) per phase, which is
//! far more than enough here; inputs are simple loopless graphs.

use crate::{EdgeId, Error, Result, VertexId};

const NONE: usize = usize::MAX;

/// Returns the edge indices of a maximum matching of the simple loopless
/// graph given by `edges` over vertices `0..n`. Deterministic: roots are
/// tried in ascending order and adjacency follows edge order.
pub fn max_matching(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Vec<EdgeId>> {
    let mut adj: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    let mut seen_pairs = std::collections::BTreeSet::new();
    for (idx, &(u, v)) in edges.iter().enumerate() {
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
        if !seen_pairs.insert((u.min(v), u.max(v))) {
            return Err(Error::InvalidArgument(format!(
                "edge {idx} duplicates the pair ({u}, {v}); the graph must be simple"
            )));
        }
        adj[u].push(v);
        adj[v].push(u);
    }

    let mut mate = vec![NONE; n];
    for root in 0..n {
        if mate[root] == NONE {
            if let Some(end) = find_augmenting_path(n, &adj, &mate, root) {
                augment(&mut mate, end.0, &end.1);
            }
        }
    }

    let mut taken = Vec::new();
    let mut covered = vec![false; n];
    for (idx, &(u, v)) in edges.iter().enumerate() {
        if mate[u] == v && !covered[u] && !covered[v] {
            covered[u] = true;
            covered[v] = true;
            taken.push(idx);
        }
    }
    Ok(taken)
}

/// BFS from `root` over the alternating forest; returns the exposed vertex
/// ending an augmenting path together with the parent array that encodes
/// the path.
fn find_augmenting_path(
    n: usize,
    adj: &[Vec<VertexId>],
    mate: &[usize],
    root: VertexId,
) -> Option<(VertexId, Vec<usize>)> {
    let mut parent = vec![NONE; n];
    let mut base: Vec<usize> = (0..n).collect();
    let mut used = vec![false; n];
    used[root] = true;
    let mut queue = std::collections::VecDeque::from([root]);

    while let Some(v) = queue.pop_front() {
        for &to in &adj[v] {
            if base[v] == base[to] || mate[v] == to {
                continue;
            }
            if to == root || (mate[to] != NONE && parent[mate[to]] != NONE) {
                // Two even vertices meet: contract the blossom around their
                // least common ancestor in the forest.
                let cur_base = lca(mate, &parent, &base, v, to);
                let mut blossom = vec![false; n];
                mark_path(mate, &mut parent, &base, &mut blossom, v, cur_base, to);
                mark_path(mate, &mut parent, &base, &mut blossom, to, cur_base, v);
                for i in 0..n {
                    if blossom[base[i]] {
                        base[i] = cur_base;
                        if !used[i] {
                            used[i] = true;
                            queue.push_back(i);
                        }
                    }
                }
            } else if parent[to] == NONE {
                parent[to] = v;
                if mate[to] == NONE {
                    return Some((to, parent));
                }
                used[mate[to]] = true;
                queue.push_back(mate[to]);
            }
        }
    }
    None
}

fn lca(mate: &[usize], parent: &[usize], base: &[usize], a: VertexId, b: VertexId) -> VertexId {
    let mut marked = vec![false; base.len()];
    let mut x = a;
    loop {
        x = base[x];
        marked[x] = true;
        if mate[x] == NONE {
            break;
        }
        x = parent[mate[x]];
    }
    let mut y = b;
    loop {
        y = base[y];
        if marked[y] {
            return y;
        }
        y = parent[mate[y]];
    }
}

fn mark_path(
    mate: &[usize],
    parent: &mut [usize],
    base: &[usize],
    blossom: &mut [bool],
    mut v: VertexId,
    stop: VertexId,
    mut child: VertexId,
) {
    while base[v] != stop {
        blossom[base[v]] = true;
        blossom[base[mate[v]]] = true;
        parent[v] = child;
        child = mate[v];
        v = parent[mate[v]];
    }
}

fn augment(mate: &mut [usize], mut v: VertexId, parent: &[usize]) {
    while v != NONE {
        let pv = parent[v];
        let ppv = mate[pv];
        mate[v] = pv;
        mate[pv] = v;
        v = ppv;
    }
}
