//! Seeded random instance generators.
//!
//! Every generator is a pure function of its seed and parameters: the same
//! call produces the same instance on every platform, so fixtures and
//! benchmark suites are reproducible byte for byte.

use std::collections::BTreeSet;

use crate::branching::ColoredDigraph;
use crate::instance::{BoundedHypergraph, DbmisInstance};
use crate::matroid::{GroundSet, Matroid};
use crate::pcforest::EdgeColoredMultigraph;
use crate::rng::SplitMix64;
use crate::{ColorId, Error, Result, VertexId, Weight};

/// How per-(vertex, color) bounds are drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundMode {
    /// No overrides: every bound stays at its default of 1.
    Unit,
    /// Roughly a fifth of the (vertex, color) slots get a bound from
    /// {0, 2, 3}.
    Varied,
}

impl BoundMode {
    fn sample(self, rng: &mut SplitMix64, n: usize, k: usize) -> Vec<((VertexId, ColorId), u64)> {
        let mut out = Vec::new();
        if let BoundMode::Varied = self {
            for v in 0..n {
                for c in 0..k {
                    if rng.chance_pct(20) {
                        out.push(((v, c), [0, 2, 3][rng.below(3) as usize]));
                    }
                }
            }
        }
        out
    }
}

fn sample_weight(rng: &mut SplitMix64, weight_max: u64) -> Weight {
    rng.range(1, weight_max)
}

/// Random loopless edge-colored multigraph with `m` edges. `parallel_pct`
/// is the percentage chance that an edge tries to land on an already-used
/// vertex pair (growing a bundle); same-color parallels are never emitted.
/// Weights are uniform in `1..=weight_max`.
pub fn gen_ecgraph(
    seed: u64,
    n: usize,
    m: usize,
    k: usize,
    parallel_pct: u64,
    bound_mode: BoundMode,
    weight_max: u64,
) -> Result<EdgeColoredMultigraph> {
    if n < 2 || k < 1 || weight_max < 1 {
        return Err(Error::InvalidArgument(format!(
            "need n >= 2, k >= 1, weight_max >= 1; got n={n}, k={k}, weight_max={weight_max}"
        )));
    }
    let capacity = k * n * (n - 1) / 2;
    if m > capacity {
        return Err(Error::InvalidArgument(format!(
            "{m} edges exceed the same-color-simple capacity {capacity} for n={n}, k={k}"
        )));
    }
    let mut rng = SplitMix64::new(seed);
    let mut used: BTreeSet<(VertexId, VertexId, ColorId)> = BTreeSet::new();
    let mut pairs: Vec<(VertexId, VertexId)> = Vec::new();
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let mut prefer_parallel =
            parallel_pct > 0 && !pairs.is_empty() && rng.chance_pct(parallel_pct);
        let (u, v, c) = loop {
            let (u, v) = if prefer_parallel {
                pairs[rng.below(pairs.len() as u64) as usize]
            } else {
                let u = rng.below(n as u64) as usize;
                let mut v = rng.below(n as u64 - 1) as usize;
                if v >= u {
                    v += 1;
                }
                (u.min(v), u.max(v))
            };
            let c = rng.below(k as u64) as usize;
            if !used.contains(&(u, v, c)) {
                break (u, v, c);
            }
            // A full bundle can make the parallel preference unsatisfiable;
            // the capacity check guarantees a free slot somewhere else.
            prefer_parallel = false;
        };
        if used.insert((u, v, c)) && used.range((u, v, 0)..(u, v + 1, 0)).count() == 1 {
            pairs.push((u, v));
        }
        edges.push((u, v, c, sample_weight(&mut rng, weight_max)));
    }
    let bounds = bound_mode.sample(&mut rng, n, k);
    EdgeColoredMultigraph::new(n, k, edges, bounds)
}

pub struct DbmisGenParams {
    /// Ground set size.
    pub n: usize,
    /// Hyperedges to attempt; fewer appear if the degree budget runs out.
    pub hyperedges: usize,
    /// Cap on how many hyperedges may contain any one element.
    pub max_degree: usize,
    /// All bounds 1 when set; otherwise bounds are uniform in 0..=2.
    pub unit_bounds: bool,
    pub weight_max: u64,
}

/// Random bounded matroid instance. The matroid rotates among uniform,
/// graphic, and partition kinds.
pub fn gen_dbmis(seed: u64, p: &DbmisGenParams) -> Result<DbmisInstance> {
    if p.n == 0 || p.weight_max < 1 {
        return Err(Error::InvalidArgument(
            "need n >= 1 and weight_max >= 1".into(),
        ));
    }
    let mut rng = SplitMix64::new(seed);
    let matroid = match rng.below(3) {
        0 => Matroid::uniform(GroundSet::dense(p.n), rng.below(p.n as u64 + 1)),
        1 => {
            let vertices = 2.max(p.n / 2 + 1);
            let edges = (0..p.n)
                .map(|_| {
                    let u = rng.below(vertices as u64) as usize;
                    let mut v = rng.below(vertices as u64 - 1) as usize;
                    if v >= u {
                        v += 1;
                    }
                    (u, v)
                })
                .collect();
            Matroid::graphic(vertices, edges)?
        }
        _ => {
            let part_count = 1.max(p.n / 2);
            let mut members = vec![Vec::new(); part_count];
            for e in 0..p.n {
                members[rng.below(part_count as u64) as usize].push(e);
            }
            let parts = members
                .into_iter()
                .filter(|m| !m.is_empty())
                .map(|m| {
                    let cap = rng.range(1, 2);
                    (m, cap)
                })
                .collect();
            Matroid::partition(GroundSet::dense(p.n), parts)?
        }
    };

    let mut degree = vec![0usize; p.n];
    let mut hyperedges = Vec::new();
    for _ in 0..p.hyperedges {
        let candidates: Vec<usize> = (0..p.n).filter(|&e| degree[e] < p.max_degree).collect();
        if candidates.is_empty() {
            break;
        }
        let size = (1 + rng.below(3) as usize).min(candidates.len());
        let mut members = BTreeSet::new();
        while members.len() < size {
            members.insert(candidates[rng.below(candidates.len() as u64) as usize]);
        }
        for &e in &members {
            degree[e] += 1;
        }
        let bound = if p.unit_bounds { 1 } else { rng.below(3) };
        hyperedges.push((members.into_iter().collect(), bound));
    }
    let weights = (0..p.n)
        .map(|_| sample_weight(&mut rng, p.weight_max))
        .collect();
    DbmisInstance::new(matroid, BoundedHypergraph::new(p.n, hyperedges)?, weights)
}

/// Random loopless arc-colored digraph; parallel and antiparallel arcs may
/// occur. Both bound families are drawn with the same mode.
pub fn gen_digraph(
    seed: u64,
    n: usize,
    m: usize,
    k: usize,
    bound_mode: BoundMode,
    weight_max: u64,
) -> Result<ColoredDigraph> {
    if n < 2 || k < 1 || weight_max < 1 {
        return Err(Error::InvalidArgument(format!(
            "need n >= 2, k >= 1, weight_max >= 1; got n={n}, k={k}, weight_max={weight_max}"
        )));
    }
    let mut rng = SplitMix64::new(seed);
    let arcs = (0..m)
        .map(|_| {
            let tail = rng.below(n as u64) as usize;
            let mut head = rng.below(n as u64 - 1) as usize;
            if head >= tail {
                head += 1;
            }
            let color = rng.below(k as u64) as usize;
            (tail, head, color, sample_weight(&mut rng, weight_max))
        })
        .collect();
    let out_bounds = bound_mode.sample(&mut rng, n, k);
    let inc_bounds = bound_mode.sample(&mut rng, n, k);
    ColoredDigraph::new(n, k, arcs, out_bounds, inc_bounds)
}

/// Random b-matching input: an edge-colored multigraph plus degree bounds
/// uniform in `1..=3`.
pub fn gen_bmatching(
    seed: u64,
    n: usize,
    m: usize,
    k: usize,
    parallel_pct: u64,
    bound_mode: BoundMode,
    weight_max: u64,
) -> Result<(EdgeColoredMultigraph, Vec<u64>)> {
    let graph = gen_ecgraph(seed, n, m, k, parallel_pct, bound_mode, weight_max)?;
    // A separate stream keeps the graph identical to a plain gen_ecgraph
    // call with the same seed.
    let mut rng = SplitMix64::new(seed ^ 0xB000_0000_0000_0001);
    let b = (0..n).map(|_| rng.range(1, 3)).collect();
    Ok((graph, b))
}
