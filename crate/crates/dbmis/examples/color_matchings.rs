//! Builds a properly colored forest from one maximum matching per color,
//! the method of choice for two or three colors.

use dbmis::matching::max_matching;
use dbmis::pcforest::{small_color_forest, solve_bundled_exact};
use dbmis::EdgeColoredMultigraph;

fn main() -> dbmis::Result<()> {
    // Alternating 6-cycle with a chord: colors 0 and 1.
    let g = EdgeColoredMultigraph::new(
        6,
        2,
        vec![
            (0, 1, 0, 1),
            (1, 2, 1, 1),
            (2, 3, 0, 1),
            (3, 4, 1, 1),
            (4, 5, 0, 1),
            (0, 5, 1, 1),
            (1, 4, 0, 1),
        ],
        vec![],
    )?;

    for color in 0..g.k() {
        let ids: Vec<usize> = (0..g.m())
            .filter(|&e| g.edges()[e].color == color)
            .collect();
        let pairs: Vec<(usize, usize)> = ids
            .iter()
            .map(|&e| (g.edges()[e].u, g.edges()[e].v))
            .collect();
        let matched = max_matching(g.n(), &pairs)?;
        let matched_ids: Vec<usize> = matched.iter().map(|&i| ids[i]).collect();
        println!("color {color}: class {ids:?}, maximum matching {matched_ids:?}");
    }

    let forest = small_color_forest(&g)?;
    let exact = solve_bundled_exact(&g)?;
    println!(
        "\nmatching union thinned to a forest: {:?} ({} edges)",
        forest.edge_ids(),
        forest.len()
    );
    println!("exact bundled optimum: {} edges", exact.len());
    // Two colors: the union keeps at least 3/4 of the optimum.
    assert!(4 * forest.len() >= 3 * exact.len());
    println!("3/4 guarantee holds: 4·{} ≥ 3·{}", forest.len(), exact.len());
    Ok(())
}
