//! Timed matchings, their verification, and the two set primitives the tree
//! dynamic program is built from: maximum non-overlapping subset at a node and
//! the conflict (removal) set of an edge against a matching.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::model::{EdgeId, NodeId, TemporalGraph};

/// A set of edges of some [`TemporalGraph`]. Membership is all this type
/// tracks; use [`is_timed_matching`] to check the non-overlap property.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TimedMatching {
    edges: BTreeSet<EdgeId>,
}

impl TimedMatching {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.contains(&e)
    }

    pub fn insert(&mut self, e: EdgeId) -> bool {
        self.edges.insert(e)
    }

    pub fn remove(&mut self, e: EdgeId) -> bool {
        self.edges.remove(&e)
    }

    /// Ascending by id.
    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges.iter().copied()
    }

    pub fn extend_from(&mut self, other: &TimedMatching) {
        self.edges.extend(other.edges.iter().copied());
    }

    pub fn union(&self, other: &TimedMatching) -> TimedMatching {
        let mut out = self.clone();
        out.extend_from(other);
        out
    }

    pub fn to_vec(&self) -> Vec<EdgeId> {
        self.iter().collect()
    }
}

impl FromIterator<EdgeId> for TimedMatching {
    fn from_iter<I: IntoIterator<Item = EdgeId>>(iter: I) -> Self {
        TimedMatching {
            edges: iter.into_iter().collect(),
        }
    }
}

impl Extend<EdgeId> for TimedMatching {
    fn extend<I: IntoIterator<Item = EdgeId>>(&mut self, iter: I) {
        self.edges.extend(iter)
    }
}

impl<'a> IntoIterator for &'a TimedMatching {
    type Item = EdgeId;
    type IntoIter = core::iter::Copied<alloc::collections::btree_set::Iter<'a, EdgeId>>;

    fn into_iter(self) -> Self::IntoIter {
        self.edges.iter().copied()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatchingError {
    UnknownEdgeId(EdgeId),
    NotAMatching(EdgeId, EdgeId),
    MultiIntervalUnsupported(EdgeId),
    NoCommonEndpoint,
}

impl fmt::Display for MatchingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatchingError::UnknownEdgeId(e) => write!(f, "unknown edge id {}", e.0),
            MatchingError::NotAMatching(a, b) => {
                write!(f, "edges {} and {} overlap", a.0, b.0)
            }
            MatchingError::MultiIntervalUnsupported(e) => {
                write!(f, "edge {} has more than one interval", e.0)
            }
            MatchingError::NoCommonEndpoint => f.write_str("edges do not share a common endpoint"),
        }
    }
}

/// Outcome of [`is_timed_matching`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatchingCheck {
    Valid,
    /// Two members overlapping each other, lower id first.
    Overlap(EdgeId, EdgeId),
}

impl MatchingCheck {
    pub fn is_valid(self) -> bool {
        self == MatchingCheck::Valid
    }
}

/// Outcome of [`is_maximal`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Maximality {
    Maximal,
    /// The lowest-id edge that could still be added.
    Addable(EdgeId),
}

impl Maximality {
    pub fn is_maximal(self) -> bool {
        self == Maximality::Maximal
    }
}

fn check_ids(g: &TemporalGraph, m: &TimedMatching) -> Result<(), MatchingError> {
    match m.iter().find(|e| e.0 >= g.edge_count()) {
        Some(e) => Err(MatchingError::UnknownEdgeId(e)),
        None => Ok(()),
    }
}

/// Checks that no two members of `m` overlap.
///
/// Only pairs meeting at a node can overlap, so the scan runs over each
/// member's incident edges rather than all member pairs.
pub fn is_timed_matching(g: &TemporalGraph, m: &TimedMatching) -> Result<MatchingCheck, MatchingError> {
    check_ids(g, m)?;
    for a in m.iter() {
        let (u, v) = g.edge(a).endpoints();
        for &node in &[u, v] {
            for &b in g.incident(node) {
                if b > a && m.contains(b) && g.overlaps(a, b) {
                    return Ok(MatchingCheck::Overlap(a, b));
                }
            }
        }
    }
    Ok(MatchingCheck::Valid)
}

/// Checks that no edge outside `m` can be added without creating an overlap.
pub fn is_maximal(g: &TemporalGraph, m: &TimedMatching) -> Result<Maximality, MatchingError> {
    if let MatchingCheck::Overlap(a, b) = is_timed_matching(g, m)? {
        return Err(MatchingError::NotAMatching(a, b));
    }
    for e in g.edge_ids() {
        if m.contains(e) {
            continue;
        }
        let (u, v) = g.edge(e).endpoints();
        let blocked = [u, v]
            .iter()
            .flat_map(|&node| g.incident(node).iter().copied())
            .any(|other| m.contains(other) && g.overlaps(e, other));
        if !blocked {
            return Ok(Maximality::Addable(e));
        }
    }
    Ok(Maximality::Maximal)
}

/// An endpoint touched by every edge in the set.
fn common_endpoint(g: &TemporalGraph, edges: &[EdgeId]) -> Option<NodeId> {
    let (&first, rest) = edges.split_first()?;
    let (u, v) = g.edge(first).endpoints();
    [u, v]
        .into_iter()
        .find(|&c| rest.iter().all(|&e| g.edge(e).is_incident(c)))
}

/// Maximum-cardinality pairwise non-overlapping subset of single-interval
/// edges meeting at one node (interval scheduling).
///
/// Earliest finish first, ties by lower edge id; an edge is taken when it
/// starts at or after the finish of the last one taken. Output is sorted by
/// id.
pub fn max_nonoverlapping_subset(g: &TemporalGraph, edges: &[EdgeId]) -> Result<Vec<EdgeId>, MatchingError> {
    for &e in edges {
        let edge = g.get_edge(e).ok_or(MatchingError::UnknownEdgeId(e))?;
        if edge.intervals().len() != 1 {
            return Err(MatchingError::MultiIntervalUnsupported(e));
        }
    }
    if edges.len() > 1 && common_endpoint(g, edges).is_none() {
        return Err(MatchingError::NoCommonEndpoint);
    }

    let mut order: Vec<(u32, u32, EdgeId)> = edges
        .iter()
        .map(|&e| {
            let iv = g.edge(e).intervals()[0];
            (iv.finish, iv.start, e)
        })
        .collect();
    order.sort_unstable_by_key(|&(finish, _, e)| (finish, e));
    order.dedup_by_key(|t| t.2);

    let mut chosen = Vec::new();
    let mut free_from = 0u32;
    for (finish, start, e) in order {
        if start >= free_from {
            chosen.push(e);
            free_from = finish;
        }
    }
    chosen.sort_unstable();
    Ok(chosen)
}

/// Members of `set` that overlap `e`. Its size is the minimum number of
/// members that must be dropped before `e` can join them.
pub fn intersect_set(g: &TemporalGraph, e: EdgeId, set: &TimedMatching) -> Vec<EdgeId> {
    set.iter().filter(|&other| g.overlaps(e, other)).collect()
}
