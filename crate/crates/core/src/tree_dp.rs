//! Exact maximum 0-1 timed matching on a rooted temporal tree whose edges
//! each carry a single interval.
//!
//! Nodes are solved bottom-up, one depth level at a time. For every node `v`
//! two candidates are formed: the union of the children's optimal matchings
//! (no edge at `v`), and that union extended by a feasible set of `v`'s child
//! edges. A child edge is eligible for the feasible set only if it clashes with
//! nothing in the corresponding child's matching; among the maximum
//! non-overlapping selections of eligible edges the one that leaves room for
//! the parent edge is preferred. The larger candidate wins, with ties going to
//! the candidate that uses no edge at `v`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::matching::{intersect_set, max_nonoverlapping_subset, TimedMatching};
use crate::model::{EdgeId, NodeId, RootedTreeView, TemporalGraph, TreeError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TreeDpError {
    NotATree,
    UnknownRoot,
    MultiIntervalUnsupported(EdgeId),
}

impl From<TreeError> for TreeDpError {
    fn from(e: TreeError) -> Self {
        match e {
            TreeError::NotATree => TreeDpError::NotATree,
            TreeError::UnknownRoot => TreeDpError::UnknownRoot,
        }
    }
}

impl fmt::Display for TreeDpError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeDpError::NotATree => f.write_str("underlying graph is not a tree"),
            TreeDpError::UnknownRoot => f.write_str("root is not a node of the graph"),
            TreeDpError::MultiIntervalUnsupported(e) => write!(
                f,
                "edge {} has more than one interval; the tree solver needs one interval per edge",
                e.0
            ),
        }
    }
}

/// Everything computed for the subtree hanging from one node.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SubtreeSolution {
    pub node: Option<NodeId>,
    /// Best matching of the subtree using no edge at the node.
    pub without_node: TimedMatching,
    /// Best matching using at least one edge at the node; empty when the
    /// feasible set is empty.
    pub with_node: TimedMatching,
    /// Edges at the node selected into `with_node`.
    pub feasible: TimedMatching,
    pub best: TimedMatching,
}

/// Per-node solutions of a complete run, indexed by node id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDpRun {
    view: RootedTreeView,
    solutions: Vec<SubtreeSolution>,
}

impl TreeDpRun {
    pub fn view(&self) -> &RootedTreeView {
        &self.view
    }

    pub fn solution(&self, v: NodeId) -> &SubtreeSolution {
        &self.solutions[v.0]
    }

    pub fn matching(&self) -> &TimedMatching {
        &self.solutions[self.view.root().0].best
    }

    pub fn into_matching(mut self) -> TimedMatching {
        let root = self.view.root().0;
        core::mem::take(&mut self.solutions[root].best)
    }
}

/// Larger of the two sets; `x` on a tie.
pub fn card_max(x: TimedMatching, y: TimedMatching) -> TimedMatching {
    if y.len() > x.len() {
        y
    } else {
        x
    }
}

/// Computes the feasible set `F_v` from the already-solved children of `v`.
///
/// `best` is indexed by node id and must hold the optimal matching of every
/// child subtree of `v`.
pub fn compute_feasible_set(
    g: &TemporalGraph,
    view: &RootedTreeView,
    v: NodeId,
    best: &[TimedMatching],
) -> TimedMatching {
    // child edges whose removal set against the child's matching is empty
    let mut clean = Vec::new();
    for &u in view.children(v) {
        let e = view.parent_edge(u).expect("child has a parent edge");
        if intersect_set(g, e, &best[u.0]).is_empty() {
            clean.push(e);
        }
    }
    if clean.is_empty() {
        return TimedMatching::new();
    }

    let alone = max_nonoverlapping_subset(g, &clean).expect("single-interval edges at v");
    let Some(up) = view.parent_edge(v) else {
        return alone.into_iter().collect();
    };
    let mut with_parent_candidates = clean;
    with_parent_candidates.push(up);
    let with_parent =
        max_nonoverlapping_subset(g, &with_parent_candidates).expect("single-interval edges at v");
    if with_parent.len() > alone.len() {
        with_parent.into_iter().filter(|&e| e != up).collect()
    } else {
        alone.into_iter().collect()
    }
}

/// Runs the dynamic program and keeps every intermediate subtree solution.
pub fn solve_tree_detailed(g: &TemporalGraph, root: NodeId) -> Result<TreeDpRun, TreeDpError> {
    if root.0 >= g.node_count() {
        return Err(TreeDpError::UnknownRoot);
    }
    let view = g.rooted_view(root)?;
    if let Some(e) = g.edges().iter().find(|e| e.intervals().len() != 1) {
        return Err(TreeDpError::MultiIntervalUnsupported(e.id()));
    }

    let n = g.node_count();
    let mut solutions = vec![SubtreeSolution::default(); n];
    let mut best = vec![TimedMatching::new(); n];
    for level in view.levels().iter().rev() {
        for &v in level {
            let mut sol = SubtreeSolution {
                node: Some(v),
                ..SubtreeSolution::default()
            };
            if !view.is_leaf(v) {
                for &u in view.children(v) {
                    sol.without_node.extend_from(&best[u.0]);
                }
                sol.feasible = compute_feasible_set(g, &view, v, &best);
                if !sol.feasible.is_empty() {
                    sol.with_node = sol.without_node.union(&sol.feasible);
                }
                sol.best = card_max(sol.without_node.clone(), sol.with_node.clone());
            }
            best[v.0] = sol.best.clone();
            solutions[v.0] = sol;
        }
    }
    Ok(TreeDpRun { view, solutions })
}

/// A maximum 0-1 timed matching of a single-interval temporal tree.
pub fn solve_tree(g: &TemporalGraph, root: NodeId) -> Result<TimedMatching, TreeDpError> {
    solve_tree_detailed(g, root).map(TreeDpRun::into_matching)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::is_timed_matching;
    use crate::model::{GraphSpec, IntervalMode};

    fn set(ids: &[usize]) -> TimedMatching {
        ids.iter().map(|&i| EdgeId(i)).collect()
    }

    #[test]
    fn card_max_prefers_first_on_tie() {
        assert!(card_max(set(&[]), set(&[])).is_empty());
        assert_eq!(card_max(set(&[1, 2]), set(&[3, 4, 5])), set(&[3, 4, 5]));
        assert_eq!(card_max(set(&[1, 2]), set(&[3, 4])), set(&[1, 2]));
    }

    #[test]
    fn root_without_children() {
        let mut spec = GraphSpec::new(1);
        spec.node("r");
        let g = spec.validate(IntervalMode::Strict).unwrap();
        assert!(solve_tree(&g, NodeId(0)).unwrap().is_empty());
    }

    #[test]
    fn small_tree_optimum() {
        let mut spec = GraphSpec::new(3);
        spec.node("r").node("a").node("b").node("c");
        spec.edge("r", "a", &[(0, 2)]);
        spec.edge("r", "b", &[(1, 3)]);
        spec.edge("a", "c", &[(1, 2)]);
        let g = spec.validate(IntervalMode::Strict).unwrap();
        let m = solve_tree(&g, NodeId(0)).unwrap();
        assert_eq!(m, set(&[1, 2]));
        assert!(is_timed_matching(&g, &m).unwrap().is_valid());
    }

    #[test]
    fn preconditions() {
        let mut spec = GraphSpec::new(4);
        spec.node("a").node("b").node("c");
        spec.edge("a", "b", &[(0, 1), (2, 3)]);
        spec.edge("b", "c", &[(0, 1)]);
        let g = spec.validate(IntervalMode::Strict).unwrap();
        assert_eq!(
            solve_tree(&g, NodeId(0)),
            Err(TreeDpError::MultiIntervalUnsupported(EdgeId(0)))
        );
        assert_eq!(solve_tree(&g, NodeId(7)), Err(TreeDpError::UnknownRoot));
        spec.edge("a", "c", &[(0, 1)]);
        let cyc = spec.validate(IntervalMode::Strict).unwrap();
        assert_eq!(solve_tree(&cyc, NodeId(0)), Err(TreeDpError::NotATree));
    }
}
