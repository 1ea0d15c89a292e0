//! Greedy approximation for general temporal graphs: repeatedly take the
//! surviving edge with the fewest surviving conflicts and discard everything
//! it conflicts with.

use alloc::vec;
use alloc::vec::Vec;

use crate::matching::TimedMatching;
use crate::model::{EdgeId, OverlapSets, TemporalGraph};
use crate::ratio::Ratio;

/// One selection round.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreedyRound {
    pub chosen: EdgeId,
    /// Overlapping number of `chosen` at the start of the round.
    pub chosen_count: usize,
    /// Every edge deleted this round, `chosen` included, with its
    /// overlapping number at the moment of deletion.
    pub removed: Vec<(EdgeId, usize)>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GreedyTrace {
    pub rounds: Vec<GreedyRound>,
}

/// Incremental state of the greedy selection loop.
///
/// Exposed so callers can observe the surviving edge set and the maintained
/// overlapping numbers between rounds.
#[derive(Clone, Debug)]
pub struct GreedyRun<'g> {
    graph: &'g TemporalGraph,
    conflicts: OverlapSets,
    alive: Vec<bool>,
    count: Vec<usize>,
    remaining: usize,
    matching: TimedMatching,
    trace: GreedyTrace,
}

impl<'g> GreedyRun<'g> {
    pub fn new(graph: &'g TemporalGraph) -> Self {
        let conflicts = graph.overlap_sets();
        let count = conflicts.counts();
        let m = graph.edge_count();
        GreedyRun {
            graph,
            conflicts,
            alive: vec![true; m],
            count,
            remaining: m,
            matching: TimedMatching::new(),
            trace: GreedyTrace::default(),
        }
    }

    pub fn graph(&self) -> &'g TemporalGraph {
        self.graph
    }

    pub fn is_alive(&self, e: EdgeId) -> bool {
        self.alive[e.0]
    }

    pub fn surviving(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.alive
            .iter()
            .enumerate()
            .filter(|(_, &a)| a)
            .map(|(i, _)| EdgeId(i))
    }

    /// Current overlapping number of a surviving edge.
    pub fn overlap_count(&self, e: EdgeId) -> usize {
        self.count[e.0]
    }

    pub fn is_done(&self) -> bool {
        self.remaining == 0
    }

    pub fn matching(&self) -> &TimedMatching {
        &self.matching
    }

    pub fn trace(&self) -> &GreedyTrace {
        &self.trace
    }

    /// Performs one round; `None` once no edges survive.
    pub fn step(&mut self) -> Option<&GreedyRound> {
        // linear scan; strict `<` keeps the lowest id among ties
        let mut pick: Option<EdgeId> = None;
        for (i, &a) in self.alive.iter().enumerate() {
            if a && pick.is_none_or(|p| self.count[i] < self.count[p.0]) {
                pick = Some(EdgeId(i));
            }
        }
        let chosen = pick?;

        let mut removed = vec![(chosen, self.count[chosen.0])];
        removed.extend(
            self.conflicts
                .conflicts(chosen)
                .iter()
                .filter(|x| self.alive[x.0])
                .map(|&x| (x, self.count[x.0])),
        );
        for &(x, _) in &removed {
            self.alive[x.0] = false;
        }
        for &(x, _) in &removed {
            for &y in self.conflicts.conflicts(x) {
                if self.alive[y.0] {
                    self.count[y.0] -= 1;
                }
            }
        }
        self.remaining -= removed.len();
        self.matching.insert(chosen);
        self.trace.rounds.push(GreedyRound {
            chosen,
            chosen_count: removed[0].1,
            removed,
        });
        self.trace.rounds.last()
    }

    pub fn finish(mut self) -> (TimedMatching, GreedyTrace) {
        while self.step().is_some() {}
        (self.matching, self.trace)
    }
}

/// Runs the greedy to completion. The result is always a maximal matching.
pub fn solve_greedy(g: &TemporalGraph) -> (TimedMatching, GreedyTrace) {
    GreedyRun::new(g).finish()
}

/// Overlap statistics and the guarantees the greedy result is measured
/// against.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceStats {
    pub node_count: usize,
    pub edge_count: usize,
    pub lifetime: u32,
    pub max_degree: usize,
    /// 𝒩(e) per edge id.
    pub overlap_counts: Vec<usize>,
    /// 𝒩*, the mean overlapping number. Zero on an edgeless graph.
    pub mean_overlap: Ratio,
    /// `m / (𝒩* + 1)`: the greedy result is never smaller.
    pub greedy_lower_bound: Ratio,
    /// `1 / (2Δ - 1)`; `None` when Δ = 0.
    pub degree_ratio: Option<Ratio>,
}

pub fn stats(g: &TemporalGraph) -> InstanceStats {
    let overlap_counts = g.overlap_sets().counts();
    let m = g.edge_count() as u64;
    let total: u64 = overlap_counts.iter().map(|&c| c as u64).sum();
    let (mean_overlap, greedy_lower_bound) = if m == 0 {
        (Ratio::zero(), Ratio::zero())
    } else {
        // m / ((total + m) / m) = m² / (total + m)
        (Ratio::new(total, m), Ratio::new(m * m, total + m))
    };
    let max_degree = g.nodes().map(|v| g.degree(v)).max().unwrap_or(0);
    InstanceStats {
        node_count: g.node_count(),
        edge_count: g.edge_count(),
        lifetime: g.lifetime(),
        max_degree,
        overlap_counts,
        mean_overlap,
        greedy_lower_bound,
        degree_ratio: (max_degree > 0).then(|| Ratio::new(1, 2 * max_degree as u64 - 1)),
    }
}
