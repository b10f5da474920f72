//! Runs the bundle-exchange search on a graph where the greedy pass alone
//! is stuck and only a bundle swap reaches the optimum.

use dbmis::pcforest::{
    bundled_local_search_with_stats, candidate_set, is_exchange_closed, is_greedy_closed,
    solve_bundled_exact, BundledForest,
};
use dbmis::EdgeColoredMultigraph;

fn main() -> dbmis::Result<()> {
    // Three vertices. Edge 0 (color 0) joins 0-2, edge 1 (color 1) joins
    // 1-2, and two parallel edges 2,3 (colors 2,3) join 0-1. Keeping edge 0
    // as the 0-1 connection's rival blocks nothing: swapping the singleton
    // bundle {0} for the pair {2,3} grows the forest.
    let g = EdgeColoredMultigraph::new(
        3,
        4,
        vec![(0, 2, 0, 1), (1, 2, 1, 1), (0, 1, 2, 1), (0, 1, 3, 1)],
        vec![],
    )?;

    // A properly colored forest the greedy pass cannot extend: edges 0 and
    // 1 span all vertices, so both parallel edges are blocked by the cycle
    // rule, yet the bundle {0} can be traded for them.
    let stuck = BundledForest::from_edges(&g, &[0, 1])?;
    println!("start forest: edges {:?}", stuck.edge_ids());
    let candidates = candidate_set(&g, &stuck, 0, 1, &[0])?;
    println!("candidates against bundle {{0}} at pair (0,1): {candidates:?}");

    let (found, restarts) = bundled_local_search_with_stats(&g)?;
    println!(
        "\nsearch result: edges {:?} after {restarts} restart(s)",
        found.edge_ids()
    );
    assert!(is_greedy_closed(&g, &found));
    assert!(is_exchange_closed(&g, &found)?);

    let best = solve_bundled_exact(&g)?;
    println!(
        "exact bundled optimum: {} edges; search found {} (guarantee: ≥ 1/3)",
        best.len(),
        found.len()
    );
    Ok(())
}
