//! Builds one matroid of each kind and verifies the independence axioms by
//! exhaustive enumeration, then prints a small rank table.

use dbmis::{GroundSet, Matroid};

fn subsets(ids: &[usize]) -> Vec<Vec<usize>> {
    (0..1usize << ids.len())
        .map(|mask| {
            ids.iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &id)| id)
                .collect()
        })
        .collect()
}

fn check_axioms(name: &str, m: &Matroid) {
    let all = subsets(m.ground().ids());
    assert!(m.is_independent(&[]).unwrap(), "{name}: I1 fails");
    let mut independent = 0usize;
    for s in &all {
        if !m.is_independent(s).unwrap() {
            continue;
        }
        independent += 1;
        for drop in 0..s.len() {
            let mut smaller = s.clone();
            smaller.remove(drop);
            assert!(m.is_independent(&smaller).unwrap(), "{name}: I2 fails");
        }
        for t in &all {
            if t.len() <= s.len() || !m.is_independent(t).unwrap() {
                continue;
            }
            let extends = t.iter().any(|&x| {
                if s.contains(&x) {
                    return false;
                }
                let mut grown = s.clone();
                grown.push(x);
                grown.sort_unstable();
                m.is_independent(&grown).unwrap()
            });
            assert!(extends, "{name}: I3 fails");
        }
    }
    let rank = m.rank(m.ground().ids()).unwrap();
    let ground = m.ground().len();
    println!("{name:<26} ground {ground:>2}  independent sets {independent:>3}  rank {rank}");
}

fn main() {
    println!("exhaustive I1/I2/I3 checks, one oracle kind per line\n");
    check_axioms("free", &Matroid::free(GroundSet::dense(4)));
    check_axioms("uniform rank 2", &Matroid::uniform(GroundSet::dense(5), 2));
    check_axioms(
        "graphic triangle+pendant",
        &Matroid::graphic(4, vec![(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap(),
    );
    check_axioms(
        "partition caps 2/1",
        &Matroid::partition(
            GroundSet::dense(6),
            vec![(vec![0, 1, 2], 2), (vec![3, 4], 1)],
        )
        .unwrap(),
    );
    let sum = Matroid::direct_sum(vec![
        Matroid::uniform(GroundSet::new(vec![0, 1]).unwrap(), 1),
        Matroid::graphic(3, vec![(0, 1), (1, 2), (0, 2)])
            .map(|g| Matroid::copy(g, vec![(2, 0), (3, 1), (4, 2)]).unwrap())
            .unwrap(),
    ])
    .unwrap();
    check_axioms("direct sum (uniform⊕copy)", &sum);
    check_axioms(
        "restriction of graphic",
        &Matroid::restriction(
            Matroid::graphic(4, vec![(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]).unwrap(),
            GroundSet::new(vec![0, 2, 4]).unwrap(),
        )
        .unwrap(),
    );
    println!("\nall axioms hold");
}
