//! Edge-colored forest properties: library predicates against DFS-based
//! reference checks, search guarantees against full enumeration, and the
//! forest reduction as an exact feasibility bijection.

mod common;

use common::{
    bundled_opt_size, forest_direct, gpf_opt_weight, properly_colored_direct, subsets,
    support_acyclic_direct,
};
use dbmis::gen::{gen_ecgraph, BoundMode};
use dbmis::pcforest::{
    bundled_local_search, is_exchange_closed, is_forest_with_bundles, is_g_properly_colored,
    is_greedy_closed, max_forest_with_bundles, reduce_gpf_to_dbmis, small_color_forest,
    solve_bundled_exact, solve_gpf_exact,
};
use dbmis::{BundledForest, EdgeColoredMultigraph};

fn random_graph(seed: u64, max_m: usize, k: usize, mode: BoundMode) -> EdgeColoredMultigraph {
    let n = 3 + (seed as usize % 4);
    let cap = k * n * (n - 1) / 2;
    let m = (seed as usize)
        .wrapping_mul(7)
        .wrapping_add(3)
        % (max_m + 1);
    gen_ecgraph(seed, n, m.min(cap), k, 40, mode, 4).unwrap()
}

#[test]
fn predicates_match_reference_checks() {
    for seed in 0..150 {
        let g = random_graph(seed, 8, 1 + (seed as usize % 3), BoundMode::Varied);
        for s in subsets(g.m()) {
            assert_eq!(
                is_g_properly_colored(&g, &s).unwrap(),
                properly_colored_direct(&g, &s),
                "seed {seed}: color predicate disagrees on {s:?}"
            );
            assert_eq!(
                is_forest_with_bundles(&g, &s).unwrap(),
                support_acyclic_direct(&g, &s),
                "seed {seed}: support predicate disagrees on {s:?}"
            );
            assert_eq!(
                BundledForest::from_edges(&g, &s).is_ok(),
                support_acyclic_direct(&g, &s),
                "seed {seed}: construction disagrees on {s:?}"
            );
        }
    }
}

#[test]
fn bundle_search_output_is_feasible_and_closed() {
    for seed in 0..120 {
        let g = random_graph(seed, 9, 1 + (seed as usize % 3), BoundMode::Unit);
        let f = bundled_local_search(&g).unwrap();
        let ids = f.edge_ids();
        assert!(properly_colored_direct(&g, &ids), "seed {seed}");
        assert!(support_acyclic_direct(&g, &ids), "seed {seed}");
        assert!(is_greedy_closed(&g, &f), "seed {seed}: greedy-open output");
        assert!(
            is_exchange_closed(&g, &f).unwrap(),
            "seed {seed}: exchange-open output"
        );
    }
}

#[test]
fn bundle_search_meets_one_third_of_the_bundled_optimum() {
    for seed in 0..120 {
        let g = random_graph(seed, 9, 1 + (seed as usize % 3), BoundMode::Unit);
        let found = bundled_local_search(&g).unwrap().len();
        let opt = bundled_opt_size(&g);
        assert!(3 * found >= opt, "seed {seed}: {found} vs optimum {opt}");
        let exact = solve_bundled_exact(&g).unwrap().len();
        assert_eq!(exact, opt, "seed {seed}: capped exact missed the optimum");
    }
}

#[test]
fn color_matching_union_meets_its_small_k_ratios() {
    for seed in 0..150 {
        for k in [2usize, 3] {
            let g = random_graph(seed, 9, k, BoundMode::Unit);
            let found = small_color_forest(&g).unwrap();
            let ids = found.edge_ids();
            assert!(properly_colored_direct(&g, &ids));
            assert!(support_acyclic_direct(&g, &ids));
            let opt = bundled_opt_size(&g);
            if k == 2 {
                assert!(4 * ids.len() >= 3 * opt, "seed {seed} k=2");
            } else {
                assert!(2 * ids.len() >= opt, "seed {seed} k=3");
            }
        }
    }
}

#[test]
fn ignoring_colors_the_kruskal_forest_is_optimal() {
    for seed in 0..100 {
        let g = random_graph(seed, 9, 1 + (seed as usize % 3), BoundMode::Unit);
        let all: Vec<usize> = (0..g.m()).collect();
        let best = max_forest_with_bundles(&g, &all).unwrap().len();
        let brute = subsets(g.m())
            .iter()
            .filter(|s| support_acyclic_direct(&g, s))
            .map(|s| s.len())
            .max()
            .unwrap_or(0);
        assert_eq!(best, brute, "seed {seed}");
    }
}

#[test]
fn forest_reduction_is_a_feasibility_bijection() {
    for seed in 0..150 {
        let g = random_graph(seed, 6, 1 + (seed as usize % 3), BoundMode::Varied);
        let inst = reduce_gpf_to_dbmis(&g).unwrap();
        for s in subsets(g.m()) {
            let direct = properly_colored_direct(&g, &s) && forest_direct(&g, &s);
            assert_eq!(
                inst.is_feasible(&s).unwrap(),
                direct,
                "seed {seed}: reduction mismatch on {s:?}"
            );
        }
        // Same optimum on both sides, weights preserved element-wise.
        let weights: Vec<u64> = g.edges().iter().map(|e| e.weight).collect();
        assert_eq!(inst.weights(), &weights[..]);
        let best = solve_gpf_exact(&g).unwrap();
        assert_eq!(g.weight_of(&best), gpf_opt_weight(&g), "seed {seed}");
    }
}

#[test]
fn search_handles_overfull_bundles() {
    // Five parallel edges, all distinct colors: the support is a single
    // pair, so everything fits in one bundle.
    let g = EdgeColoredMultigraph::new(
        2,
        5,
        (0..5).map(|c| (0, 1, c, 1)).collect(),
        vec![],
    )
    .unwrap();
    assert_eq!(bundled_local_search(&g).unwrap().len(), 5);
    assert_eq!(solve_bundled_exact(&g).unwrap().len(), 5);

    // Same five edges in one color: the per-vertex bound keeps one.
    let g = EdgeColoredMultigraph::new(
        6,
        1,
        (0..5).map(|i| (0, i + 1, 0, 1)).collect(),
        vec![],
    )
    .unwrap();
    assert_eq!(bundled_local_search(&g).unwrap().len(), 1);
}
