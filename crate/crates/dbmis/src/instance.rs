//! Matroid independent sets under hypergraph degree bounds.
//!
//! A [`DbmisInstance`] couples a matroid on the dense ground `0..n` with a
//! [`BoundedHypergraph`] on the same elements and per-element weights. A set
//! is feasible when it is independent and contains at most `g(e)` elements
//! of every hyperedge `e`. Feasible sets are downward closed, and adding an
//! element to a feasible set can always be repaired by at most
//! `max_degree + 1` deletions, which is what the greedy and local-search
//! guarantees in [`crate::solvers`] rest on.

use crate::matroid::Matroid;
use crate::{ElementId, Error, Result, Weight};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hyperedge {
    /// Sorted, duplicate-free member ids.
    pub members: Vec<ElementId>,
    /// Upper bound on how many members a feasible set may contain. A bound
    /// of zero forbids every member.
    pub bound: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundedHypergraph {
    n: usize,
    hyperedges: Vec<Hyperedge>,
    /// Hyperedge indexes per element; an element listed by two hyperedges
    /// with identical member sets is counted twice.
    incidence: Vec<Vec<usize>>,
}

impl BoundedHypergraph {
    pub fn new(n: usize, hyperedges: Vec<(Vec<ElementId>, u64)>) -> Result<Self> {
        let mut edges = Vec::with_capacity(hyperedges.len());
        let mut incidence = vec![Vec::new(); n];
        for (idx, (mut members, bound)) in hyperedges.into_iter().enumerate() {
            members.sort_unstable();
            if members.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidArgument(format!(
                    "hyperedge {idx} repeats a member"
                )));
            }
            for &id in &members {
                if id >= n {
                    return Err(Error::InvalidArgument(format!(
                        "hyperedge {idx} member {id} exceeds ground size {n}"
                    )));
                }
                incidence[id].push(idx);
            }
            edges.push(Hyperedge { members, bound });
        }
        Ok(BoundedHypergraph {
            n,
            hyperedges: edges,
            incidence,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn hyperedges(&self) -> &[Hyperedge] {
        &self.hyperedges
    }

    /// Number of hyperedges containing `id`, duplicates counted separately.
    pub fn degree_of(&self, id: ElementId) -> usize {
        self.incidence[id].len()
    }

    /// Maximum element degree; zero when there are no memberships.
    pub fn max_degree(&self) -> usize {
        self.incidence.iter().map(Vec::len).max().unwrap_or(0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DbmisInstance {
    matroid: Matroid,
    hyper: BoundedHypergraph,
    weights: Vec<Weight>,
}

impl DbmisInstance {
    /// The matroid ground must be exactly `0..n` with `n` matching both the
    /// hypergraph and the weight vector.
    pub fn new(matroid: Matroid, hyper: BoundedHypergraph, weights: Vec<Weight>) -> Result<Self> {
        let n = weights.len();
        if hyper.n() != n {
            return Err(Error::InvalidArgument(format!(
                "hypergraph is over {} elements but {} weights given",
                hyper.n(),
                n
            )));
        }
        if matroid.ground().ids() != (0..n).collect::<Vec<_>>() {
            return Err(Error::InvalidArgument(format!(
                "matroid ground is not the dense set 0..{n}"
            )));
        }
        Ok(DbmisInstance {
            matroid,
            hyper,
            weights,
        })
    }

    pub fn n(&self) -> usize {
        self.weights.len()
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn hypergraph(&self) -> &BoundedHypergraph {
        &self.hyper
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn max_degree(&self) -> usize {
        self.hyper.max_degree()
    }

    pub fn has_unit_bounds(&self) -> bool {
        self.hyper.hyperedges().iter().all(|e| e.bound <= 1)
    }

    pub fn weight_of(&self, set: &[ElementId]) -> Weight {
        set.iter().map(|&id| self.weights[id]).sum()
    }

    /// Sorts and validates `set`, then checks independence and every
    /// hyperedge bound.
    pub fn is_feasible(&self, set: &[ElementId]) -> Result<bool> {
        let mut s = set.to_vec();
        s.sort_unstable();
        if let Some(w) = s.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument(format!(
                "duplicate element id {}",
                w[0]
            )));
        }
        for &id in &s {
            if id >= self.n() {
                return Err(Error::InvalidArgument(format!(
                    "element {id} exceeds ground size {}",
                    self.n()
                )));
            }
        }
        Ok(self.feasible_sorted(&s))
    }

    /// Core check; `s` is sorted, duplicate-free, and inside `0..n`.
    pub(crate) fn feasible_sorted(&self, s: &[ElementId]) -> bool {
        let mut counts = vec![0u64; self.hyper.hyperedges.len()];
        for &id in s {
            for &he in &self.hyper.incidence[id] {
                counts[he] += 1;
                if counts[he] > self.hyper.hyperedges[he].bound {
                    return false;
                }
            }
        }
        self.matroid.indep_sorted(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::GroundSet;

    /// Graphic triangle with one bound-1 hyperedge per vertex: feasible sets
    /// are properly colored forests of a monochromatic triangle.
    fn triangle_instance() -> DbmisInstance {
        let m = Matroid::graphic(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        let h = BoundedHypergraph::new(
            3,
            vec![(vec![0, 2], 1), (vec![0, 1], 1), (vec![1, 2], 1)],
        )
        .unwrap();
        DbmisInstance::new(m, h, vec![1, 1, 1]).unwrap()
    }

    #[test]
    fn triangle_degrees() {
        let inst = triangle_instance();
        assert_eq!(inst.max_degree(), 2);
        assert!(inst.has_unit_bounds());
        for id in 0..3 {
            assert_eq!(inst.hypergraph().degree_of(id), 2);
        }
    }

    #[test]
    fn triangle_feasibility() {
        let inst = triangle_instance();
        assert!(inst.is_feasible(&[]).unwrap());
        assert!(inst.is_feasible(&[0]).unwrap());
        // Edges 0 and 1 share vertex 1, so its hyperedge count is 2 > 1.
        assert!(!inst.is_feasible(&[0, 1]).unwrap());
        assert!(!inst.is_feasible(&[1, 2]).unwrap());
        assert!(!inst.is_feasible(&[0, 1, 2]).unwrap());
    }

    #[test]
    fn zero_bound_forbids_members() {
        let m = Matroid::free(GroundSet::dense(2));
        let h = BoundedHypergraph::new(2, vec![(vec![0], 0)]).unwrap();
        let inst = DbmisInstance::new(m, h, vec![5, 5]).unwrap();
        assert!(!inst.is_feasible(&[0]).unwrap());
        assert!(inst.is_feasible(&[1]).unwrap());
    }

    #[test]
    fn no_hyperedges_reduces_to_independence() {
        let m = Matroid::graphic(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        let h = BoundedHypergraph::new(3, vec![]).unwrap();
        let inst = DbmisInstance::new(m, h, vec![1, 1, 1]).unwrap();
        assert_eq!(inst.max_degree(), 0);
        assert!(inst.is_feasible(&[0, 1]).unwrap());
        assert!(!inst.is_feasible(&[0, 1, 2]).unwrap());
    }

    #[test]
    fn duplicate_hyperedges_count_separately() {
        let h = BoundedHypergraph::new(2, vec![(vec![0, 1], 1), (vec![0, 1], 1)]).unwrap();
        assert_eq!(h.max_degree(), 2);
    }

    #[test]
    fn weight_of_sums_exactly() {
        let inst = triangle_instance();
        assert_eq!(inst.weight_of(&[0, 2]), 2);
        assert_eq!(inst.weight_of(&[]), 0);
    }

    #[test]
    fn construction_validation() {
        let m = Matroid::graphic(3, vec![(0, 1), (1, 2)]).unwrap();
        let h = BoundedHypergraph::new(3, vec![]).unwrap();
        assert!(DbmisInstance::new(m, h, vec![1, 1, 1]).is_err());
        assert!(BoundedHypergraph::new(2, vec![(vec![0, 2], 1)]).is_err());
        assert!(BoundedHypergraph::new(2, vec![(vec![0, 0], 1)]).is_err());
    }
}
