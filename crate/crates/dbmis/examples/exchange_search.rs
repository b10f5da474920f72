//! Shows the bounded-exchange local search escaping a trap that the
//! descending-weight greedy algorithm falls into.

use dbmis::solvers::{solve_exact, solve_greedy, solve_p_exchange};
use dbmis::{BoundedHypergraph, DbmisInstance, GroundSet, Matroid};

fn main() -> dbmis::Result<()> {
    // Element 0 is the heaviest but blocks both hyperedges; the optimum
    // takes the two lighter elements instead.
    let m = Matroid::free(GroundSet::dense(3));
    let h = BoundedHypergraph::new(3, vec![(vec![0, 1], 1), (vec![0, 2], 1)])?;
    let inst = DbmisInstance::new(m, h, vec![5, 3, 3])?;

    let greedy = solve_greedy(&inst);
    println!(
        "greedy:     {:?}  weight {}",
        greedy,
        inst.weight_of(&greedy)
    );
    for p in 1..=2 {
        let found = solve_p_exchange(&inst, p)?;
        println!(
            "exchange p={p}: {:?}  weight {}",
            found,
            inst.weight_of(&found)
        );
    }
    let best = solve_exact(&inst)?;
    println!("exact:      {:?}  weight {}", best, inst.weight_of(&best));

    // The guarantee:  (Δ + 1/p) · w(found) ≥ w(opt)  on unit bounds.
    let delta = inst.max_degree() as u64;
    for p in 1..=3u64 {
        let found = solve_p_exchange(&inst, p as usize)?;
        let lhs = (p * delta + 1) * inst.weight_of(&found);
        let rhs = p * inst.weight_of(&best);
        println!(
            "p={p}: ({delta} + 1/{p})·{} ≥ {}  ⇔  {lhs} ≥ {rhs}",
            inst.weight_of(&found),
            inst.weight_of(&best)
        );
        assert!(lhs >= rhs);
    }
    Ok(())
}
