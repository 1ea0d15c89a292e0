#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use timedmatch_core::model::{EdgeId, GraphSpec, IntervalMode, TemporalGraph};
use timedmatch_core::TimedMatching;

pub use rand::SeedableRng;
pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn build(lifetime: u32, nodes: &[&str], edges: &[(&str, &str, &[(u32, u32)])]) -> TemporalGraph {
    let mut spec = GraphSpec::new(lifetime);
    for n in nodes {
        spec.node(*n);
    }
    for (u, v, iv) in edges {
        spec.edge(*u, *v, iv);
    }
    spec.validate(IntervalMode::Strict).expect("fixture is valid")
}

pub fn edge(g: &TemporalGraph, a: &str, b: &str) -> EdgeId {
    g.edge_by_labels(a, b)
        .unwrap_or_else(|| panic!("no edge {a}-{b}"))
}

pub fn set(g: &TemporalGraph, pairs: &[(&str, &str)]) -> TimedMatching {
    pairs.iter().map(|&(a, b)| edge(g, a, b)).collect()
}

// ---------------------------------------------------------------------------
// independent oracles: expand intervals to explicit timesteps

pub fn timesteps(g: &TemporalGraph, e: EdgeId) -> BTreeSet<u32> {
    g.edge(e)
        .intervals()
        .iter()
        .flat_map(|iv| iv.start..iv.finish)
        .collect()
}

pub fn brute_overlap(g: &TemporalGraph, a: EdgeId, b: EdgeId) -> bool {
    if a == b {
        return false;
    }
    let (u1, v1) = g.edge(a).endpoints();
    let (u2, v2) = g.edge(b).endpoints();
    let share = u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2;
    share && !timesteps(g, a).is_disjoint(&timesteps(g, b))
}

pub fn brute_conflicts(g: &TemporalGraph) -> Vec<u64> {
    let m = g.edge_count();
    (0..m)
        .map(|i| {
            (0..m)
                .filter(|&j| brute_overlap(g, EdgeId(i), EdgeId(j)))
                .fold(0u64, |acc, j| acc | (1 << j))
        })
        .collect()
}

/// Size of a maximum timed matching restricted to `allowed`, by
/// enumerating every subset.
pub fn brute_max_within(conflicts: &[u64], allowed: u64) -> u32 {
    let idx: Vec<usize> = (0..64).filter(|&i| allowed & (1 << i) != 0).collect();
    let mut best = 0;
    for sub in 0u64..(1 << idx.len()) {
        let mut mask = 0u64;
        for (k, &i) in idx.iter().enumerate() {
            if sub & (1 << k) != 0 {
                mask |= 1 << i;
            }
        }
        if mask.count_ones() > best && idx.iter().all(|&i| mask & (1 << i) == 0 || conflicts[i] & mask == 0) {
            best = mask.count_ones();
        }
    }
    best
}

pub fn brute_max(g: &TemporalGraph) -> u32 {
    let m = g.edge_count();
    assert!(m <= 20, "brute force limited to 20 edges");
    let all = if m == 0 { 0 } else { (1u64 << m) - 1 };
    brute_max_within(&brute_conflicts(g), all)
}

pub fn brute_is_matching(g: &TemporalGraph, m: &TimedMatching) -> bool {
    let ids: Vec<EdgeId> = m.iter().collect();
    ids.iter()
        .enumerate()
        .all(|(i, &a)| ids[i + 1..].iter().all(|&b| !brute_overlap(g, a, b)))
}

pub fn brute_is_maximal(g: &TemporalGraph, m: &TimedMatching) -> bool {
    g.edge_ids()
        .filter(|e| !m.contains(*e))
        .all(|e| m.iter().any(|x| brute_overlap(g, e, x)))
}

// ---------------------------------------------------------------------------
// random instances

/// Random strict-mode interval list with up to `max_k` intervals in
/// `[0, lifetime)`.
pub fn random_intervals(rng: &mut TestRng, lifetime: u32, max_k: usize) -> Vec<(u32, u32)> {
    let cap = (lifetime as usize).div_ceil(2);
    let k = rng.gen_range(1..=max_k.min(cap).max(1));
    let mut points: Vec<u32> = (0..=lifetime).collect();
    points.shuffle(rng);
    let mut pts: Vec<u32> = points[..2 * k].to_vec();
    pts.sort_unstable();
    pts.chunks(2).map(|c| (c[0], c[1])).collect()
}

/// Random single-interval tree on `n` nodes, plus a random root label.
pub fn random_tree(rng: &mut TestRng, n: usize, lifetime: u32) -> (TemporalGraph, String) {
    let mut labels: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    labels.shuffle(rng);
    let mut spec = GraphSpec::new(lifetime);
    for l in &labels {
        spec.node(l.clone());
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let p = order[rng.gen_range(0..i)];
        edges.push((order[i], p));
    }
    edges.shuffle(rng);
    for (c, p) in edges {
        let s = rng.gen_range(0..lifetime);
        let f = rng.gen_range(s + 1..=lifetime);
        spec.edge(labels[c].clone(), labels[p].clone(), &[(s, f)]);
    }
    let root = labels[rng.gen_range(0..n)].clone();
    (spec.validate(IntervalMode::Strict).unwrap(), root)
}

/// Random graph with `m` distinct node pairs and multi-interval edges.
pub fn random_graph(rng: &mut TestRng, n: usize, m: usize, lifetime: u32, max_k: usize) -> TemporalGraph {
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(rng);
    let mut spec = GraphSpec::new(lifetime);
    for i in 0..n {
        spec.node(format!("v{i}"));
    }
    for &(u, v) in pairs.iter().take(m) {
        let iv = random_intervals(rng, lifetime, max_k);
        spec.edge(format!("v{u}"), format!("v{v}"), &iv);
    }
    spec.validate(IntervalMode::Strict).unwrap()
}

// ---------------------------------------------------------------------------
// small worked examples

/// Three-level tree: r has children a, b, c; d under a; f under d.
pub fn three_level_tree() -> TemporalGraph {
    build(
        4,
        &["r", "a", "b", "c", "d", "e", "f", "g", "h"],
        &[
            ("r", "a", &[(0, 1)]),
            ("r", "b", &[(1, 2)]),
            ("r", "c", &[(2, 3)]),
            ("a", "d", &[(0, 2)]),
            ("d", "f", &[(1, 3)]),
            ("b", "e", &[(0, 4)]),
            ("c", "g", &[(0, 1)]),
            ("c", "h", &[(3, 4)]),
        ],
    )
}

/// e_dg and e_fg coexist at timestep 1; e_ab, e_ad never
/// coexist; {ab, ad, cd, fg} is maximum; {ab, ad, dg} is maximal.
pub fn bipartite_example() -> TemporalGraph {
    build(
        4,
        &["a", "b", "c", "d", "f", "g"],
        &[
            ("a", "b", &[(0, 2)]),
            ("a", "d", &[(3, 4)]),
            ("c", "d", &[(2, 3)]),
            ("d", "g", &[(0, 3)]),
            ("f", "g", &[(1, 2)]),
        ],
    )
}

/// Tree whose solver run is traced step by step in the worked examples.
pub fn layered_tree() -> TemporalGraph {
    build(
        6,
        &["r", "a", "b", "c", "d", "g", "h", "i", "j", "k", "l", "q"],
        &[
            ("r", "a", &[(5, 6)]),
            ("r", "b", &[(2, 4)]),
            ("a", "c", &[(0, 3)]),
            ("a", "d", &[(0, 3)]),
            ("b", "g", &[(0, 2)]),
            ("b", "h", &[(1, 3)]),
            ("c", "i", &[(0, 1)]),
            ("c", "j", &[(2, 3)]),
            ("c", "k", &[(0, 3)]),
            ("d", "l", &[(0, 1)]),
            ("d", "q", &[(2, 3)]),
        ],
    )
}

/// Five nodes, seven edges, where the greedy order is easy to follow.
pub fn greedy_example() -> TemporalGraph {
    build(
        6,
        &["a", "b", "c", "d", "f"],
        &[
            ("a", "b", &[(0, 2)]),
            ("a", "f", &[(1, 3)]),
            ("c", "f", &[(2, 6)]),
            ("d", "f", &[(4, 6)]),
            ("b", "c", &[(5, 6)]),
            ("c", "d", &[(2, 4)]),
            ("b", "d", &[(3, 4)]),
        ],
    )
}

/// Small tree with optimum {e_rb, e_ac}.
pub fn inst_a() -> TemporalGraph {
    build(
        3,
        &["r", "a", "b", "c"],
        &[("r", "a", &[(0, 2)]), ("r", "b", &[(1, 3)]), ("a", "c", &[(1, 2)])],
    )
}
