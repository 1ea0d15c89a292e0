//! Seeded instance generators. The same parameters and seed always give the
//! same instance.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;
use timedmatch_core::model::{GraphSpec, IntervalMode, StaticGraph, TemporalGraph};
use timedmatch_core::reductions::{validate_2p2n, CnfFormula, ColouredPath, LabelledStaticGraph, Literal};

use crate::format::Instance;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("infeasible parameters: {0}")]
pub struct InfeasibleParams(pub String);

fn infeasible<T>(msg: impl Into<String>) -> Result<T, InfeasibleParams> {
    Err(InfeasibleParams(msg.into()))
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Up to `max_k` strictly separated intervals inside `[0, lifetime)`.
fn intervals(rng: &mut ChaCha8Rng, lifetime: u32, max_k: usize) -> Vec<(u32, u32)> {
    let cap = (lifetime as usize).div_ceil(2);
    let k = rng.gen_range(1..=max_k.min(cap));
    let points = rand::seq::index::sample(rng, lifetime as usize + 1, 2 * k);
    let mut pts: Vec<u32> = points.into_iter().map(|p| p as u32).collect();
    pts.sort_unstable();
    pts.chunks(2).map(|c| (c[0], c[1])).collect()
}

/// `m` distinct node pairs on nodes `v0..v{n-1}`, each with up to
/// `max_intervals` intervals.
pub fn random_graph(
    n: usize,
    m: usize,
    lifetime: u32,
    max_intervals: usize,
    seed: u64,
) -> Result<TemporalGraph, InfeasibleParams> {
    if m > n * n.saturating_sub(1) / 2 {
        return infeasible(format!("{m} edges do not fit on {n} nodes"));
    }
    if m > 0 && (lifetime == 0 || max_intervals == 0) {
        return infeasible("edges need a positive lifetime and at least one interval");
    }
    let mut rng = rng(seed);
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(&mut rng);
    let mut spec = GraphSpec::new(lifetime);
    for i in 0..n {
        spec.node(format!("v{i}"));
    }
    for &(u, v) in &pairs[..m] {
        let iv = intervals(&mut rng, lifetime, max_intervals);
        spec.edge(format!("v{u}"), format!("v{v}"), &iv);
    }
    Ok(spec.validate(IntervalMode::Strict).expect("generated graph is valid"))
}

/// Random recursive tree rooted at `v0`, one interval per edge.
pub fn random_tree(n: usize, lifetime: u32, seed: u64) -> Result<Instance, InfeasibleParams> {
    if n == 0 {
        return infeasible("a tree needs at least one node");
    }
    if lifetime == 0 {
        return infeasible("lifetime must be positive");
    }
    let mut rng = rng(seed);
    let mut spec = GraphSpec::new(lifetime);
    for i in 0..n {
        spec.node(format!("v{i}"));
    }
    for i in 1..n {
        let parent = rng.gen_range(0..i);
        let s = rng.gen_range(0..lifetime);
        let f = rng.gen_range(s + 1..=lifetime);
        spec.edge(format!("v{parent}"), format!("v{i}"), &[(s, f)]);
    }
    Ok(Instance {
        graph: spec.validate(IntervalMode::Strict).expect("generated tree is valid"),
        root: Some("v0".to_string()),
    })
}

/// Path on `n` nodes, properly coloured from `c` colours.
pub fn coloured_path(n: usize, c: usize, seed: u64) -> Result<ColouredPath, InfeasibleParams> {
    if n == 0 {
        return infeasible("a path needs at least one node");
    }
    let edges = n - 1;
    if (edges >= 1 && c == 0) || (edges >= 2 && c < 2) {
        return infeasible(format!("{edges} path edges cannot be properly coloured with {c} colours"));
    }
    let mut rng = rng(seed);
    let mut colours: Vec<usize> = Vec::with_capacity(edges);
    for _ in 0..edges {
        let k = match colours.last() {
            None => rng.gen_range(0..c),
            // uniform over the colours other than the previous one
            Some(&prev) => (prev + rng.gen_range(1..c)) % c,
        };
        colours.push(k);
    }
    Ok(ColouredPath::new(c, colours).expect("generated colouring is proper"))
}

/// Uniformly shuffled 2P2N-3SAT formula on `m` variables, redrawn until no
/// clause repeats a literal.
pub fn formula_2p2n(m: usize, seed: u64) -> Result<CnfFormula, InfeasibleParams> {
    if !m.is_multiple_of(3) {
        return infeasible(format!("2P2N needs a variable count divisible by 3, got {m}"));
    }
    let mut rng = rng(seed);
    let mut lits: Vec<Literal> = (0..m)
        .flat_map(|v| [Literal::pos(v), Literal::pos(v), Literal::neg(v), Literal::neg(v)])
        .collect();
    loop {
        lits.shuffle(&mut rng);
        let f = CnfFormula {
            var_count: m,
            clauses: lits.chunks(3).map(|c| [c[0], c[1], c[2]]).collect(),
        };
        if validate_2p2n(&f).is_ok() {
            return Ok(f);
        }
    }
}

/// G(n, p) with edge labels and isolated-node labels randomly permuted.
pub fn labelled_graph(n: usize, p: f64, seed: u64) -> Result<LabelledStaticGraph, InfeasibleParams> {
    if !(0.0..=1.0).contains(&p) {
        return infeasible(format!("edge probability {p} is outside [0, 1]"));
    }
    let mut rng = rng(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    let graph = StaticGraph::new(n, edges).expect("generated graph is simple");
    let m = graph.edge_count() as u32;
    let mut labels: Vec<u32> = (0..m).collect();
    labels.shuffle(&mut rng);
    let degrees = graph.degrees();
    let iso: Vec<usize> = (0..n).filter(|&v| degrees[v] == 0).collect();
    let mut iso_labels: Vec<u32> = (m..m + iso.len() as u32).collect();
    iso_labels.shuffle(&mut rng);
    let isolated = iso.into_iter().zip(iso_labels).collect();
    Ok(LabelledStaticGraph::new(graph, labels, isolated).expect("generated labels are valid"))
}
