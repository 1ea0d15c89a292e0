//! Exact solver for small instances. A timed matching is an independent set
//! of the conflict graph (edges as vertices, adjacent when they overlap), so
//! the optimum is a maximum independent set found by branch and bound.

use alloc::vec::Vec;
use core::fmt;

use crate::matching::TimedMatching;
use crate::model::{EdgeId, TemporalGraph};

/// Default limit on the number of temporal edges `solve_exact` accepts.
pub const DEFAULT_BUDGET: usize = 25;
/// Hard limit imposed by the bitset representation.
pub const MAX_EDGES: usize = 128;
/// Hard limit for plain subset enumeration.
pub const MAX_EXHAUSTIVE_EDGES: usize = 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleError {
    BudgetExceeded { edges: usize, budget: usize },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::BudgetExceeded { edges, budget } => {
                write!(f, "{edges} edges exceed the exact-solver budget of {budget}")
            }
        }
    }
}

/// Static graph on temporal edge ids, adjacency = overlap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConflictGraph {
    adj: Vec<Vec<EdgeId>>,
}

impl ConflictGraph {
    pub fn build(g: &TemporalGraph) -> Self {
        let sets = g.overlap_sets();
        ConflictGraph {
            adj: g.edge_ids().map(|e| sets.conflicts(e).to_vec()).collect(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbours(&self, e: EdgeId) -> &[EdgeId] {
        &self.adj[e.0]
    }

    pub fn has_edge(&self, a: EdgeId, b: EdgeId) -> bool {
        self.adj[a.0].binary_search(&b).is_ok()
    }

    /// Each conflict once, as `(lower, higher)`.
    pub fn edges(&self) -> Vec<(EdgeId, EdgeId)> {
        let mut out = Vec::new();
        for (i, list) in self.adj.iter().enumerate() {
            for &b in list {
                if b.0 > i {
                    out.push((EdgeId(i), b));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    fn masks(&self) -> Vec<u128> {
        self.adj
            .iter()
            .map(|list| list.iter().fold(0u128, |m, e| m | bit(e.0)))
            .collect()
    }
}

#[inline]
fn bit(i: usize) -> u128 {
    1u128 << i
}

fn mask_to_matching(mask: u128) -> TimedMatching {
    (0..128).filter(|&i| mask & bit(i) != 0).map(EdgeId).collect()
}

struct BranchAndBound {
    adj: Vec<u128>,
    best: u128,
    best_size: u32,
}

impl BranchAndBound {
    /// Greedy clique cover of `cand`; its size bounds any independent set.
    fn clique_cover(&self, mut cand: u128) -> u32 {
        let mut joinable: Vec<u128> = Vec::new();
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            match joinable.iter_mut().find(|j| **j & bit(v) != 0) {
                Some(j) => *j &= self.adj[v],
                None => joinable.push(self.adj[v]),
            }
        }
        joinable.len() as u32
    }

    fn search(&mut self, mut current: u128, mut size: u32, mut cand: u128) {
        // vertices with at most one candidate neighbour belong to some optimum
        loop {
            let mut rest = cand;
            let mut forced = None;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if (self.adj[v] & cand).count_ones() <= 1 {
                    forced = Some(v);
                    break;
                }
            }
            let Some(v) = forced else { break };
            current |= bit(v);
            size += 1;
            cand &= !(bit(v) | self.adj[v]);
        }

        if cand == 0 {
            if size > self.best_size {
                self.best = current;
                self.best_size = size;
            }
            return;
        }
        if size + self.clique_cover(cand) <= self.best_size {
            return;
        }

        let mut rest = cand;
        let mut pivot = 0;
        let mut pivot_deg = 0;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let d = (self.adj[v] & cand).count_ones();
            if d > pivot_deg {
                pivot = v;
                pivot_deg = d;
            }
        }
        self.search(current | bit(pivot), size + 1, cand & !(bit(pivot) | self.adj[pivot]));
        self.search(current, size, cand & !bit(pivot));
    }
}

/// Maximum 0-1 timed matching by branch and bound on the conflict graph.
pub fn solve_exact(g: &TemporalGraph, budget: usize) -> Result<TimedMatching, OracleError> {
    let m = g.edge_count();
    let budget = budget.min(MAX_EDGES);
    if m > budget {
        return Err(OracleError::BudgetExceeded { edges: m, budget });
    }
    let adj = ConflictGraph::build(g).masks();
    let all = if m == 0 { 0 } else { u128::MAX >> (128 - m) };
    let mut bb = BranchAndBound {
        adj,
        best: 0,
        best_size: 0,
    };
    bb.search(0, 0, all);
    Ok(mask_to_matching(bb.best))
}

/// Maximum 0-1 timed matching by enumerating every edge subset. Returns the
/// first optimum in increasing bitmask order.
pub fn solve_exhaustive(g: &TemporalGraph, budget: usize) -> Result<TimedMatching, OracleError> {
    let m = g.edge_count();
    let budget = budget.min(MAX_EXHAUSTIVE_EDGES);
    if m > budget {
        return Err(OracleError::BudgetExceeded { edges: m, budget });
    }
    let adj = ConflictGraph::build(g).masks();
    let mut best = 0u128;
    let mut best_size = 0;
    for subset in 0u128..(1u128 << m) {
        let size = subset.count_ones();
        if size <= best_size {
            continue;
        }
        let independent = (0..m).all(|i| subset & bit(i) == 0 || adj[i] & subset == 0);
        if independent {
            best = subset;
            best_size = size;
        }
    }
    Ok(mask_to_matching(best))
}
