//! Reduces a bounded instance to matroid parity with sets of size Δ+1 and
//! walks a solution across the reduction and back.

use dbmis::parity::{
    lift_solution, push_solution, reduce_dbmis_to_parity, solve_parity_exact, CopyRole,
};
use dbmis::solvers::solve_exact;
use dbmis::{BoundedHypergraph, DbmisInstance, GroundSet, Matroid};

fn main() -> dbmis::Result<()> {
    // Rank-2 uniform matroid on four elements; two overlapping hyperedges.
    let m = Matroid::uniform(GroundSet::dense(4), 2);
    let h = BoundedHypergraph::new(4, vec![(vec![0, 1, 2], 1), (vec![1, 3], 1)])?;
    let inst = DbmisInstance::new(m, h, vec![3, 5, 2, 4])?;
    println!(
        "source: {} elements, {} hyperedges, degree {}",
        inst.n(),
        inst.hypergraph().hyperedges().len(),
        inst.max_degree()
    );

    let cert = reduce_dbmis_to_parity(&inst)?;
    let t = &cert.target;
    println!(
        "target: {} parity sets of size {}, ground of {} copies",
        t.sets().len(),
        t.k(),
        t.matroid().ground().len()
    );
    for (idx, set) in t.sets().iter().enumerate() {
        let roles: Vec<String> = set
            .iter()
            .map(|&id| match cert.roles[id] {
                CopyRole::Matroid(v) => format!("{id}=M({v})"),
                CopyRole::Hyperedge(v, e) => format!("{id}=H({v},e{e})"),
                CopyRole::Dummy(v) => format!("{id}=D({v})"),
            })
            .collect();
        println!("  set {idx} (weight {}): {}", t.weights()[idx], roles.join(" "));
    }

    let best = solve_exact(&inst)?;
    let pushed = push_solution(&inst, &cert, &best)?;
    let lifted = lift_solution(&cert, &pushed)?;
    println!("\nsource optimum {:?} (weight {})", best, inst.weight_of(&best));
    println!("pushed to parity sets {pushed:?} (weight {})", t.weight_of(&pushed));
    println!("lifted back to {lifted:?}");
    assert_eq!(best, lifted);

    let parity_best = solve_parity_exact(t)?;
    assert_eq!(t.weight_of(&parity_best), inst.weight_of(&best));
    println!("parity-side optimum matches: weight {}", t.weight_of(&parity_best));
    Ok(())
}
