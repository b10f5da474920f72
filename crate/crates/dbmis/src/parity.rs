//! Matroid parity instances and the reduction from bounded instances.
//!
//! A [`ParityInstance`] asks for a maximum-weight subcollection of pairwise
//! disjoint `k`-element sets whose union is independent. Every
//! [`DbmisInstance`] with maximum degree `d` turns into such an instance
//! with `k = d + 1` via [`reduce_dbmis_to_parity`]: each source element `v`
//! becomes one parity set holding a matroid copy of `v`, one copy per
//! hyperedge containing `v`, and dummies padding the set to size `k`. The
//! target matroid is the direct sum of a relabeled copy of the source
//! matroid, one uniform matroid of rank `g(e)` over the copies of each
//! hyperedge `e`, and free matroids over the dummies. Selecting parity sets
//! is then exactly selecting feasible source sets, weight for weight, in
//! both directions; [`push_solution`] and [`lift_solution`] are the two
//! sides of that bijection.

use crate::combi::for_each_combination;
use crate::instance::DbmisInstance;
use crate::matroid::{GroundSet, Matroid};
use crate::{ElementId, Error, Result, Weight};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityInstance {
    matroid: Matroid,
    k: usize,
    /// Pairwise disjoint sorted `k`-element subsets of the ground set.
    sets: Vec<Vec<ElementId>>,
    weights: Vec<Weight>,
}

impl ParityInstance {
    /// The matroid ground must be the dense set `0..n`; every parity set
    /// must have exactly `k` elements and the sets must be pairwise
    /// disjoint.
    pub fn new(
        matroid: Matroid,
        k: usize,
        sets: Vec<Vec<ElementId>>,
        weights: Vec<Weight>,
    ) -> Result<Self> {
        let n = matroid.ground().len();
        if matroid.ground().ids() != (0..n).collect::<Vec<_>>() {
            return Err(Error::InvalidArgument(format!(
                "matroid ground is not the dense set 0..{n}"
            )));
        }
        if weights.len() != sets.len() {
            return Err(Error::InvalidArgument(format!(
                "{} parity sets but {} weights",
                sets.len(),
                weights.len()
            )));
        }
        let mut seen = vec![false; n];
        let mut sets = sets;
        for (idx, set) in sets.iter_mut().enumerate() {
            set.sort_unstable();
            if set.len() != k {
                return Err(Error::InvalidArgument(format!(
                    "parity set {idx} has {} elements, expected {k}",
                    set.len()
                )));
            }
            for &id in set.iter() {
                if id >= n {
                    return Err(Error::InvalidArgument(format!(
                        "parity set {idx} member {id} exceeds ground size {n}"
                    )));
                }
                if seen[id] {
                    return Err(Error::InvalidArgument(format!(
                        "element {id} appears in two parity sets"
                    )));
                }
                seen[id] = true;
            }
        }
        Ok(ParityInstance {
            matroid,
            k,
            sets,
            weights,
        })
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn sets(&self) -> &[Vec<ElementId>] {
        &self.sets
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn weight_of(&self, chosen: &[usize]) -> Weight {
        chosen.iter().map(|&i| self.weights[i]).sum()
    }

    /// Union of the chosen parity sets, sorted.
    pub fn union_of(&self, chosen: &[usize]) -> Vec<ElementId> {
        let mut union: Vec<ElementId> = chosen
            .iter()
            .flat_map(|&i| self.sets[i].iter().copied())
            .collect();
        union.sort_unstable();
        union
    }

    /// Whether the union of the chosen sets is independent. Indices must be
    /// valid and distinct.
    pub fn is_feasible(&self, chosen: &[usize]) -> Result<bool> {
        let mut idx = chosen.to_vec();
        idx.sort_unstable();
        if idx.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument("duplicate parity set index".into()));
        }
        if let Some(&bad) = idx.iter().find(|&&i| i >= self.sets.len()) {
            return Err(Error::InvalidArgument(format!(
                "parity set index {bad} out of range"
            )));
        }
        Ok(self.matroid.indep_sorted(&self.union_of(&idx)))
    }

    fn feasible_indices(&self, chosen: &[usize]) -> bool {
        self.matroid.indep_sorted(&self.union_of(chosen))
    }
}

/// Role of a target element in the parity reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CopyRole {
    /// The matroid copy of a source element.
    Matroid(ElementId),
    /// The copy of a source element for the hyperedge with this index.
    Hyperedge(ElementId, usize),
    /// Padding for a source element below maximum degree.
    Dummy(ElementId),
}

/// Output of [`reduce_dbmis_to_parity`]: the target instance plus the maps
/// needed to move solutions across without the source instance.
#[derive(Debug, Clone)]
pub struct ReductionCertificate {
    pub target: ParityInstance,
    /// Parity set index of each source element.
    pub set_of_element: Vec<usize>,
    /// Source element of each parity set.
    pub element_of_set: Vec<ElementId>,
    /// Role of each target element.
    pub roles: Vec<CopyRole>,
}

/// Builds the parity instance with sets of size `max_degree + 1`.
///
/// Target ids are dense: scanning source elements in ascending order, each
/// element first gets its matroid copy and then one copy per containing
/// hyperedge in ascending hyperedge order; after all labeled copies, dummy
/// ids are appended, again grouped by source element in ascending order.
pub fn reduce_dbmis_to_parity(inst: &DbmisInstance) -> Result<ReductionCertificate> {
    let n = inst.n();
    let degree = inst.max_degree();
    let k = degree + 1;
    let hyperedges = inst.hypergraph().hyperedges();

    let mut roles: Vec<CopyRole> = Vec::new();
    let mut matroid_copy_of = vec![0usize; n];
    let mut hyperedge_copy: Vec<Vec<(usize, usize)>> = vec![Vec::new(); hyperedges.len()];
    let mut sets: Vec<Vec<usize>> = vec![Vec::new(); n];

    for v in 0..n {
        matroid_copy_of[v] = roles.len();
        sets[v].push(roles.len());
        roles.push(CopyRole::Matroid(v));
        for (he_idx, he) in hyperedges.iter().enumerate() {
            if he.members.binary_search(&v).is_ok() {
                hyperedge_copy[he_idx].push((v, roles.len()));
                sets[v].push(roles.len());
                roles.push(CopyRole::Hyperedge(v, he_idx));
            }
        }
    }
    for v in 0..n {
        while sets[v].len() < k {
            sets[v].push(roles.len());
            roles.push(CopyRole::Dummy(v));
        }
    }

    let mut children = Vec::new();
    let copy_map: Vec<(ElementId, ElementId)> =
        (0..n).map(|v| (matroid_copy_of[v], v)).collect();
    children.push(Matroid::copy(inst.matroid().clone(), copy_map)?);
    for (he_idx, he) in hyperedges.iter().enumerate() {
        let ids: Vec<ElementId> = hyperedge_copy[he_idx].iter().map(|&(_, id)| id).collect();
        children.push(Matroid::uniform(GroundSet::new(ids)?, he.bound));
    }
    let dummy_ids: Vec<ElementId> = roles
        .iter()
        .enumerate()
        .filter(|(_, r)| matches!(r, CopyRole::Dummy(_)))
        .map(|(id, _)| id)
        .collect();
    if !dummy_ids.is_empty() {
        children.push(Matroid::free(GroundSet::new(dummy_ids)?));
    }
    let matroid = Matroid::direct_sum(children)?;

    let target = ParityInstance::new(matroid, k, sets, inst.weights().to_vec())?;
    Ok(ReductionCertificate {
        target,
        set_of_element: (0..n).collect(),
        element_of_set: (0..n).collect(),
        roles,
    })
}

/// Maps chosen parity sets back to the source elements they stand for.
/// The union of the chosen sets must be independent in the target matroid.
pub fn lift_solution(cert: &ReductionCertificate, chosen: &[usize]) -> Result<Vec<ElementId>> {
    if !cert.target.is_feasible(chosen)? {
        return Err(Error::ContractViolation(
            "chosen parity sets have a dependent union".into(),
        ));
    }
    let mut lifted: Vec<ElementId> = chosen.iter().map(|&i| cert.element_of_set[i]).collect();
    lifted.sort_unstable();
    Ok(lifted)
}

/// Maps a feasible source set to the parity sets that represent it.
pub fn push_solution(
    source: &DbmisInstance,
    cert: &ReductionCertificate,
    set: &[ElementId],
) -> Result<Vec<usize>> {
    if !source.is_feasible(set)? {
        return Err(Error::ContractViolation(
            "set is not feasible in the source instance".into(),
        ));
    }
    let mut chosen: Vec<usize> = set.iter().map(|&v| cert.set_of_element[v]).collect();
    chosen.sort_unstable();
    Ok(chosen)
}

pub const DEFAULT_PARITY_EXACT_CAP: usize = 20;

/// Maximum-weight feasible subcollection by pruned enumeration over set
/// indices in ascending order. Ties go to the lexicographically smallest
/// index set. Instances with more than `cap` parity sets are refused.
pub fn solve_parity_exact_capped(p: &ParityInstance, cap: usize) -> Result<Vec<usize>> {
    if p.sets().len() > cap {
        return Err(Error::ResourceLimit(format!(
            "{} parity sets exceed the enumeration cap {cap}",
            p.sets().len()
        )));
    }
    let mut best: Vec<usize> = Vec::new();
    let mut best_w: Weight = 0;
    let mut cur: Vec<usize> = Vec::new();
    fn dfs(
        p: &ParityInstance,
        next: usize,
        cur: &mut Vec<usize>,
        cur_w: Weight,
        best: &mut Vec<usize>,
        best_w: &mut Weight,
    ) {
        if cur_w > *best_w || (cur_w == *best_w && *cur < *best) {
            *best = cur.clone();
            *best_w = cur_w;
        }
        for i in next..p.sets().len() {
            cur.push(i);
            if p.feasible_indices(cur) {
                dfs(p, i + 1, cur, cur_w + p.weights()[i], best, best_w);
            }
            cur.pop();
        }
    }
    dfs(p, 0, &mut cur, 0, &mut best, &mut best_w);
    Ok(best)
}

pub fn solve_parity_exact(p: &ParityInstance) -> Result<Vec<usize>> {
    solve_parity_exact_capped(p, DEFAULT_PARITY_EXACT_CAP)
}

/// Greedy over parity sets in descending weight order, ties by ascending
/// index; keeps a set when the union stays independent.
pub fn solve_parity_greedy(p: &ParityInstance) -> Vec<usize> {
    let mut order: Vec<usize> = (0..p.sets().len()).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(p.weights()[i]), i));
    let mut chosen: Vec<usize> = Vec::new();
    for i in order {
        chosen.push(i);
        chosen.sort_unstable();
        if !p.feasible_indices(&chosen) {
            chosen.retain(|&j| j != i);
        }
    }
    chosen
}

/// Local search over subcollections: starting from the greedy solution,
/// repeatedly remove up to `t` chosen sets and add up to `t` others when
/// that keeps the union independent and strictly increases total weight.
/// Candidate additions are scanned in descending weight order (ties by
/// index) and removals smallest-first; the first improving move is taken.
pub fn solve_parity_local(p: &ParityInstance, t: usize) -> Result<Vec<usize>> {
    if t == 0 {
        return Err(Error::InvalidArgument("exchange size t must be >= 1".into()));
    }
    let mut chosen = solve_parity_greedy(p);
    loop {
        let mut outside: Vec<usize> = (0..p.sets().len())
            .filter(|i| chosen.binary_search(i).is_err())
            .collect();
        outside.sort_by_key(|&i| (std::cmp::Reverse(p.weights()[i]), i));

        let cur_w = p.weight_of(&chosen);
        let mut found: Option<Vec<usize>> = None;
        'scan: for add_size in 1..=t.min(outside.len()) {
            let stop = for_each_combination(outside.len(), add_size, &mut |add_pos| {
                let add: Vec<usize> = add_pos.iter().map(|&i| outside[i]).collect();
                let add_w: Weight = add.iter().map(|&i| p.weights()[i]).sum();
                for rem_size in 0..=t.min(chosen.len()) {
                    let stop = for_each_combination(chosen.len(), rem_size, &mut |rem_pos| {
                        let rem_w: Weight = rem_pos.iter().map(|&i| p.weights()[chosen[i]]).sum();
                        if add_w <= rem_w {
                            return false;
                        }
                        let mut next: Vec<usize> = chosen
                            .iter()
                            .enumerate()
                            .filter(|(pos, _)| rem_pos.binary_search(pos).is_err())
                            .map(|(_, &i)| i)
                            .collect();
                        next.extend(add.iter().copied());
                        next.sort_unstable();
                        debug_assert!(p.weight_of(&next) == cur_w + add_w - rem_w);
                        if p.feasible_indices(&next) {
                            found = Some(next);
                            return true;
                        }
                        false
                    });
                    if stop {
                        return true;
                    }
                }
                false
            });
            if stop {
                break 'scan;
            }
        }
        match found {
            Some(next) => chosen = next,
            None => return Ok(chosen),
        }
    }
}
