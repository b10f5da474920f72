//! Solvers for bounded instances.
//!
//! * [`solve_exact`]: pruned enumeration, exact on small grounds.
//! * [`solve_greedy`]: descending-weight greedy; on an instance with
//!   maximum degree `d` its size is within `1/(d + 1)` of optimal for unit
//!   weights, because feasible sets form a `(d + 1)`-extendible system.
//! * [`solve_p_exchange`]: local search that adds up to `p` elements and
//!   removes up to `p * d + 1` per move. On unit-bound instances a local
//!   optimum has weight at least `opt / (d + 1/p)`.
//! * [`solve_via_parity`]: reduce to matroid parity, run the parity local
//!   search, lift the answer back.

use crate::combi::for_each_combination;
use crate::instance::DbmisInstance;
use crate::parity::{lift_solution, reduce_dbmis_to_parity, solve_parity_local};
use crate::{ElementId, Error, Result, Weight};

pub const DEFAULT_EXACT_CAP: usize = 20;

/// Maximum-weight feasible set by depth-first enumeration in ascending id
/// order, pruning branches as soon as the partial set turns infeasible.
/// Ties go to the lexicographically smallest id set. Instances with more
/// than `cap` elements are refused.
pub fn solve_exact_capped(inst: &DbmisInstance, cap: usize) -> Result<Vec<ElementId>> {
    if inst.n() > cap {
        return Err(Error::ResourceLimit(format!(
            "{} elements exceed the enumeration cap {cap}",
            inst.n()
        )));
    }
    let mut best: Vec<ElementId> = Vec::new();
    let mut best_w: Weight = 0;
    let mut cur: Vec<ElementId> = Vec::new();
    fn dfs(
        inst: &DbmisInstance,
        next: ElementId,
        cur: &mut Vec<ElementId>,
        cur_w: Weight,
        best: &mut Vec<ElementId>,
        best_w: &mut Weight,
    ) {
        if cur_w > *best_w || (cur_w == *best_w && *cur < *best) {
            *best = cur.clone();
            *best_w = cur_w;
        }
        for id in next..inst.n() {
            cur.push(id);
            if inst.feasible_sorted(cur) {
                dfs(inst, id + 1, cur, cur_w + inst.weights()[id], best, best_w);
            }
            cur.pop();
        }
    }
    dfs(inst, 0, &mut cur, 0, &mut best, &mut best_w);
    Ok(best)
}

pub fn solve_exact(inst: &DbmisInstance) -> Result<Vec<ElementId>> {
    solve_exact_capped(inst, DEFAULT_EXACT_CAP)
}

/// Greedy in descending weight order, ties by ascending id; keeps an
/// element when the kept set stays feasible. Returns ids ascending.
pub fn solve_greedy(inst: &DbmisInstance) -> Vec<ElementId> {
    let mut order: Vec<ElementId> = (0..inst.n()).collect();
    order.sort_by_key(|&id| (std::cmp::Reverse(inst.weights()[id]), id));
    let mut chosen: Vec<ElementId> = Vec::new();
    for id in order {
        let pos = chosen.binary_search(&id).unwrap_err();
        chosen.insert(pos, id);
        if !inst.feasible_sorted(&chosen) {
            chosen.remove(pos);
        }
    }
    chosen
}

/// Local search with explicit removal cap; see [`solve_p_exchange`] for the
/// default cap. Exposed so the cap can be varied in experiments.
pub fn solve_p_exchange_with_cap(
    inst: &DbmisInstance,
    p: usize,
    removal_cap: usize,
) -> Result<Vec<ElementId>> {
    if p == 0 {
        return Err(Error::InvalidArgument("exchange size p must be >= 1".into()));
    }
    if !inst.has_unit_bounds() {
        return Err(Error::InvalidArgument(
            "p-exchange search requires unit hyperedge bounds".into(),
        ));
    }
    let mut chosen = solve_greedy(inst);
    loop {
        let mut outside: Vec<ElementId> = (0..inst.n())
            .filter(|id| chosen.binary_search(id).is_err())
            .collect();
        outside.sort_by_key(|&id| (std::cmp::Reverse(inst.weights()[id]), id));

        let mut found: Option<Vec<ElementId>> = None;
        'scan: for add_size in 1..=p.min(outside.len()) {
            let stop = for_each_combination(outside.len(), add_size, &mut |add_pos| {
                let add: Vec<ElementId> = add_pos.iter().map(|&i| outside[i]).collect();
                let add_w: Weight = add.iter().map(|&id| inst.weights()[id]).sum();
                for rem_size in 0..=removal_cap.min(chosen.len()) {
                    let stop = for_each_combination(chosen.len(), rem_size, &mut |rem_pos| {
                        let rem_w: Weight =
                            rem_pos.iter().map(|&i| inst.weights()[chosen[i]]).sum();
                        if add_w <= rem_w {
                            return false;
                        }
                        let mut next: Vec<ElementId> = chosen
                            .iter()
                            .enumerate()
                            .filter(|(pos, _)| rem_pos.binary_search(pos).is_err())
                            .map(|(_, &id)| id)
                            .collect();
                        next.extend(add.iter().copied());
                        next.sort_unstable();
                        if inst.feasible_sorted(&next) {
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

/// Local search with moves that add at most `p` elements and remove at most
/// `p * max_degree + 1`. Requires unit bounds (`g(e) <= 1` everywhere).
/// Additions are scanned in descending weight order, removals
/// smallest-first, and the first strictly improving feasible move is taken,
/// starting from the greedy solution.
pub fn solve_p_exchange(inst: &DbmisInstance, p: usize) -> Result<Vec<ElementId>> {
    solve_p_exchange_with_cap(inst, p, p * inst.max_degree() + 1)
}

/// Reduce to matroid parity, run the parity `t`-exchange search, and lift
/// the chosen sets back to source elements. The result is always feasible.
pub fn solve_via_parity(inst: &DbmisInstance, t: usize) -> Result<Vec<ElementId>> {
    let cert = reduce_dbmis_to_parity(inst)?;
    let chosen = solve_parity_local(&cert.target, t)?;
    lift_solution(&cert, &chosen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::BoundedHypergraph;
    use crate::matroid::{GroundSet, Matroid};

    fn triangle_instance() -> DbmisInstance {
        let m = Matroid::graphic(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        let h = BoundedHypergraph::new(
            3,
            vec![(vec![0, 2], 1), (vec![0, 1], 1), (vec![1, 2], 1)],
        )
        .unwrap();
        DbmisInstance::new(m, h, vec![1, 1, 1]).unwrap()
    }

    /// Free matroid, hyperedges {0,1} and {0,2} with unit bounds; element 0
    /// is heavy but blocks the lighter pair.
    fn blocking_instance() -> DbmisInstance {
        let m = Matroid::free(GroundSet::dense(3));
        let h = BoundedHypergraph::new(3, vec![(vec![0, 1], 1), (vec![0, 2], 1)]).unwrap();
        DbmisInstance::new(m, h, vec![3, 2, 2]).unwrap()
    }

    #[test]
    fn exact_on_triangle() {
        let best = solve_exact(&triangle_instance()).unwrap();
        assert_eq!(best, vec![0]);
    }

    #[test]
    fn exact_cap_is_enforced() {
        assert!(matches!(
            solve_exact_capped(&triangle_instance(), 2),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn greedy_prefers_heavy_elements() {
        let m = Matroid::graphic(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        let h = BoundedHypergraph::new(
            3,
            vec![(vec![0, 2], 1), (vec![0, 1], 1), (vec![1, 2], 1)],
        )
        .unwrap();
        let inst = DbmisInstance::new(m, h, vec![1, 5, 1]).unwrap();
        assert_eq!(solve_greedy(&inst), vec![1]);
    }

    #[test]
    fn exchange_escapes_greedy_trap() {
        let inst = blocking_instance();
        assert_eq!(solve_greedy(&inst), vec![0]);
        // A single exchange cannot trade one add against the heavier 0.
        let one = solve_p_exchange(&inst, 1).unwrap();
        assert_eq!(inst.weight_of(&one), 3);
        // Adding both light elements and dropping 0 is a 2-exchange.
        let two = solve_p_exchange(&inst, 2).unwrap();
        assert_eq!(two, vec![1, 2]);
        assert_eq!(inst.weight_of(&two), 4);
    }

    #[test]
    fn exchange_requires_unit_bounds() {
        let m = Matroid::free(GroundSet::dense(2));
        let h = BoundedHypergraph::new(2, vec![(vec![0, 1], 2)]).unwrap();
        let inst = DbmisInstance::new(m, h, vec![1, 1]).unwrap();
        assert!(matches!(
            solve_p_exchange(&inst, 1),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn exchange_rejects_p_zero() {
        assert!(matches!(
            solve_p_exchange(&triangle_instance(), 0),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn via_parity_matches_triangle_optimum() {
        let inst = triangle_instance();
        let got = solve_via_parity(&inst, 1).unwrap();
        assert_eq!(inst.weight_of(&got), 1);
        assert!(inst.is_feasible(&got).unwrap());
    }
}
