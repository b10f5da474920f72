//! Rewrites a properly-colored-forest problem as a bounded matroid
//! instance: graphic matroid for acyclicity, one hyperedge per vertex/color
//! incidence for the color caps. Shows that feasibility transfers exactly.

use dbmis::pcforest::{is_g_properly_colored, reduce_gpf_to_dbmis};
use dbmis::solvers::solve_exact;
use dbmis::EdgeColoredMultigraph;

fn main() -> dbmis::Result<()> {
    // Square with one diagonal; colors: 0 on the top and diagonal, 1 below.
    //     0 --c0-- 1
    //     |        |
    //    c1   c0  c1
    //     |  /     |
    //     3 ------ 2
    //        c1
    let g = EdgeColoredMultigraph::new(
        4,
        2,
        vec![
            (0, 1, 0, 4),
            (1, 2, 1, 3),
            (2, 3, 1, 2),
            (0, 3, 1, 1),
            (1, 3, 0, 5),
        ],
        vec![],
    )?;
    let inst = reduce_gpf_to_dbmis(&g)?;
    println!(
        "graph: {} vertices, {} edges, {} colors",
        g.n(),
        g.m(),
        g.k()
    );
    println!(
        "instance: graphic matroid on {} elements, {} incidence hyperedges, degree {}",
        inst.n(),
        inst.hypergraph().hyperedges().len(),
        inst.max_degree()
    );
    for h in inst.hypergraph().hyperedges() {
        println!("  bound {} on edges {:?}", h.bound, h.members);
    }

    // Feasibility on both sides, over every subset. The graph is simple, so
    // the forest-with-bundles check coincides with the plain forest check.
    let mut agree = 0usize;
    for mask in 0..1usize << g.m() {
        let s: Vec<usize> = (0..g.m()).filter(|i| mask >> i & 1 == 1).collect();
        let direct =
            is_g_properly_colored(&g, &s)? && dbmis::pcforest::is_forest_with_bundles(&g, &s)?;
        assert_eq!(direct, inst.is_feasible(&s)?);
        agree += 1;
    }
    println!("\nfeasibility agreed on all {agree} subsets");

    let best = solve_exact(&inst)?;
    println!(
        "optimum: edges {:?} with weight {}",
        best,
        inst.weight_of(&best)
    );
    Ok(())
}
