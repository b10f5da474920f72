//! Splits a colored b-matching instance into one vertex copy per incidence
//! with laminar degree sets, and checks the optimum carries across.

use dbmis::bmatching::{
    reduce_bmatching_to_hierarchical, solve_bmatching_exact, solve_hierarchical_exact,
};
use dbmis::EdgeColoredMultigraph;

fn main() -> dbmis::Result<()> {
    // Star around vertex 0 plus one outer edge; b allows two edges at the
    // center, one elsewhere.
    let g = EdgeColoredMultigraph::new(
        4,
        2,
        vec![
            (0, 1, 0, 4),
            (0, 2, 0, 3),
            (0, 3, 1, 2),
            (1, 2, 1, 1),
        ],
        vec![((0, 0), 2)],
    )?;
    let b = vec![2, 1, 1, 1];

    let h = reduce_bmatching_to_hierarchical(&g, &b)?;
    println!(
        "split graph: {} copies for {} incidences, {} edges",
        h.n_copies(),
        2 * g.m(),
        h.edges().len()
    );
    for (i, &(v, e)) in h.copy_labels().iter().enumerate() {
        println!("  copy {i} stands for vertex {v} on edge {e}");
    }
    println!("laminar degree sets:");
    for (members, bound) in h.sets() {
        println!("  bound {bound} over copies {members:?}");
    }

    let direct = solve_bmatching_exact(&g, &b)?;
    let split = solve_hierarchical_exact(&h)?;
    println!(
        "\ndirect optimum {:?} (weight {}), split optimum {:?} (weight {})",
        direct,
        g.weight_of(&direct),
        split,
        h.weight_of(&split)
    );
    assert_eq!(g.weight_of(&direct), h.weight_of(&split));
    Ok(())
}
