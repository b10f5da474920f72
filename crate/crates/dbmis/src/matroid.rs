//! Matroids queried through independence oracles.
//!
//! A [`Matroid`] owns an explicit ground set of element ids and answers
//! `is_independent` for subsets of it. Seven kinds are provided: free,
//! uniform, graphic, partition, direct sum, restriction, and relabeled copy.
//! Rank is computed greedily through the oracle, scanning elements in
//! ascending id order, which is exact on matroids.

use crate::union_find::UnionFind;
use crate::{ElementId, Error, Result, VertexId};

/// An ordered set of distinct element ids; iteration follows id order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundSet {
    ids: Vec<ElementId>,
}

impl GroundSet {
    pub fn new(mut ids: Vec<ElementId>) -> Result<Self> {
        ids.sort_unstable();
        if ids.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument(
                "ground set contains a duplicate id".into(),
            ));
        }
        Ok(GroundSet { ids })
    }

    /// The dense ground set `0..n`.
    pub fn dense(n: usize) -> Self {
        GroundSet {
            ids: (0..n).collect(),
        }
    }

    pub fn contains(&self, id: ElementId) -> bool {
        self.ids.binary_search(&id).is_ok()
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn ids(&self) -> &[ElementId] {
        &self.ids
    }

    pub fn iter(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.ids.iter().copied()
    }

}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Kind {
    Free,
    Uniform {
        rank: u64,
    },
    /// Element `i` of the dense ground `0..edges.len()` is the edge
    /// `edges[i]`; independence is acyclicity.
    Graphic {
        vertices: usize,
        edges: Vec<(VertexId, VertexId)>,
    },
    /// Pairwise disjoint parts with capacities; elements outside every part
    /// are unconstrained. `part_of` maps element id to part index.
    Partition {
        parts: Vec<(Vec<ElementId>, u64)>,
        part_of: Vec<(ElementId, usize)>,
    },
    /// Children on pairwise disjoint grounds; `owner` maps element id to
    /// child index. Nested sums are spliced flat at construction.
    DirectSum {
        children: Vec<Matroid>,
        owner: Vec<(ElementId, usize)>,
    },
    Restriction {
        child: Box<Matroid>,
    },
    /// Injective relabeling `new -> old` onto the child's full ground.
    Copy {
        map: Vec<(ElementId, ElementId)>,
        child: Box<Matroid>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matroid {
    ground: GroundSet,
    kind: Kind,
}

impl Matroid {
    pub fn free(ground: GroundSet) -> Matroid {
        Matroid {
            ground,
            kind: Kind::Free,
        }
    }

    pub fn uniform(ground: GroundSet, rank: u64) -> Matroid {
        Matroid {
            ground,
            kind: Kind::Uniform { rank },
        }
    }

    /// Graphic matroid of a loopless multigraph; element `i` is `edges[i]`,
    /// so the ground set is `0..edges.len()`. Parallel edges are fine (two
    /// parallel edges form a circuit); loops are rejected.
    pub fn graphic(vertices: usize, edges: Vec<(VertexId, VertexId)>) -> Result<Matroid> {
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u >= vertices || v >= vertices {
                return Err(Error::InvalidArgument(format!(
                    "edge {i} endpoint out of range ({u}, {v}) with {vertices} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidArgument(format!(
                    "edge {i} is a self-loop at vertex {u}"
                )));
            }
        }
        Ok(Matroid {
            ground: GroundSet::dense(edges.len()),
            kind: Kind::Graphic { vertices, edges },
        })
    }

    /// Partition matroid: at most `cap` elements from each part. Parts must
    /// be pairwise disjoint subsets of the ground; uncovered elements behave
    /// as an implicit unbounded part.
    pub fn partition(ground: GroundSet, parts: Vec<(Vec<ElementId>, u64)>) -> Result<Matroid> {
        let mut part_of: Vec<(ElementId, usize)> = Vec::new();
        let mut norm_parts = Vec::with_capacity(parts.len());
        for (idx, (members, cap)) in parts.into_iter().enumerate() {
            let members = GroundSet::new(members)?;
            for id in members.iter() {
                if !ground.contains(id) {
                    return Err(Error::InvalidArgument(format!(
                        "part {idx} member {id} is not in the ground set"
                    )));
                }
                part_of.push((id, idx));
            }
            norm_parts.push((members.ids().to_vec(), cap));
        }
        part_of.sort_unstable();
        if part_of.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidArgument("parts are not disjoint".into()));
        }
        Ok(Matroid {
            ground,
            kind: Kind::Partition {
                parts: norm_parts,
                part_of,
            },
        })
    }

    /// Direct sum of matroids on pairwise disjoint grounds. A child that is
    /// itself a direct sum is spliced into the result, so sums stay flat.
    pub fn direct_sum(children: Vec<Matroid>) -> Result<Matroid> {
        let mut flat: Vec<Matroid> = Vec::new();
        for child in children {
            match child.kind {
                Kind::DirectSum { children, .. } => flat.extend(children),
                _ => flat.push(child),
            }
        }
        let mut owner: Vec<(ElementId, usize)> = Vec::new();
        for (idx, child) in flat.iter().enumerate() {
            for id in child.ground.iter() {
                owner.push((id, idx));
            }
        }
        owner.sort_unstable();
        if owner.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidArgument(
                "direct sum children have overlapping grounds".into(),
            ));
        }
        let ground = GroundSet {
            ids: owner.iter().map(|&(id, _)| id).collect(),
        };
        Ok(Matroid {
            ground,
            kind: Kind::DirectSum {
                children: flat,
                owner,
            },
        })
    }

    /// Restriction to `allowed`, which must be a subset of the child ground.
    pub fn restriction(child: Matroid, allowed: GroundSet) -> Result<Matroid> {
        for id in allowed.iter() {
            if !child.ground.contains(id) {
                return Err(Error::InvalidArgument(format!(
                    "restriction element {id} is not in the child ground"
                )));
            }
        }
        Ok(Matroid {
            ground: allowed,
            kind: Kind::Restriction {
                child: Box::new(child),
            },
        })
    }

    /// Isomorphic copy under the relabeling `new -> old`, which must be a
    /// bijection onto the child's ground set.
    pub fn copy(child: Matroid, map: Vec<(ElementId, ElementId)>) -> Result<Matroid> {
        let mut map = map;
        map.sort_unstable();
        if map.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidArgument("copy map repeats a new id".into()));
        }
        let mut olds: Vec<ElementId> = map.iter().map(|&(_, old)| old).collect();
        olds.sort_unstable();
        if olds.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument("copy map repeats an old id".into()));
        }
        if olds != child.ground.ids {
            return Err(Error::InvalidArgument(
                "copy map is not a bijection onto the child ground".into(),
            ));
        }
        let ground = GroundSet {
            ids: map.iter().map(|&(new, _)| new).collect(),
        };
        Ok(Matroid {
            ground,
            kind: Kind::Copy {
                map,
                child: Box::new(child),
            },
        })
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub(crate) fn kind(&self) -> &Kind {
        &self.kind
    }

    /// Sorts and validates `set`, then queries the oracle. Duplicate ids and
    /// ids outside the ground set are invalid arguments.
    pub fn is_independent(&self, set: &[ElementId]) -> Result<bool> {
        let s = self.checked_sorted(set)?;
        Ok(self.indep_sorted(&s))
    }

    /// Greedy rank of `set`: scan ascending by id, keep an element when the
    /// kept set stays independent.
    pub fn rank(&self, set: &[ElementId]) -> Result<u64> {
        let s = self.checked_sorted(set)?;
        let mut kept: Vec<ElementId> = Vec::with_capacity(s.len());
        for id in s {
            kept.push(id);
            if !self.indep_sorted(&kept) {
                kept.pop();
            }
        }
        Ok(kept.len() as u64)
    }

    fn checked_sorted(&self, set: &[ElementId]) -> Result<Vec<ElementId>> {
        let mut s = set.to_vec();
        s.sort_unstable();
        if let Some(w) = s.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument(format!(
                "duplicate element id {}",
                w[0]
            )));
        }
        for &id in &s {
            if !self.ground.contains(id) {
                return Err(Error::InvalidArgument(format!(
                    "element {id} is not in the ground set"
                )));
            }
        }
        Ok(s)
    }

    /// Core oracle; `s` is sorted, duplicate-free, and inside the ground.
    pub(crate) fn indep_sorted(&self, s: &[ElementId]) -> bool {
        match &self.kind {
            Kind::Free => true,
            Kind::Uniform { rank } => s.len() as u64 <= *rank,
            Kind::Graphic { vertices, edges } => {
                let mut uf = UnionFind::new(*vertices);
                for &id in s {
                    let (u, v) = edges[id];
                    if !uf.union(u, v) {
                        return false;
                    }
                }
                true
            }
            Kind::Partition { parts, part_of } => {
                let mut counts = vec![0u64; parts.len()];
                for &id in s {
                    if let Ok(pos) = part_of.binary_search_by_key(&id, |&(e, _)| e) {
                        let part = part_of[pos].1;
                        counts[part] += 1;
                        if counts[part] > parts[part].1 {
                            return false;
                        }
                    }
                }
                true
            }
            Kind::DirectSum { children, owner } => {
                let mut buckets: Vec<Vec<ElementId>> = vec![Vec::new(); children.len()];
                for &id in s {
                    let pos = owner
                        .binary_search_by_key(&id, |&(e, _)| e)
                        .expect("validated id has an owner");
                    buckets[owner[pos].1].push(id);
                }
                children
                    .iter()
                    .zip(&buckets)
                    .all(|(child, bucket)| bucket.is_empty() || child.indep_sorted(bucket))
            }
            Kind::Restriction { child } => child.indep_sorted(s),
            Kind::Copy { map, child } => {
                let mut olds: Vec<ElementId> = s
                    .iter()
                    .map(|&id| {
                        let pos = map
                            .binary_search_by_key(&id, |&(new, _)| new)
                            .expect("validated id has a preimage");
                        map[pos].1
                    })
                    .collect();
                olds.sort_unstable();
                child.indep_sorted(&olds)
            }
        }
    }
}
