//! Temporal graphs with interval-labelled edges, the overlap relation, and
//! structural queries on the underlying static graph.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Dense node index into a [`TemporalGraph`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub usize);

/// Dense edge index, assigned in input order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

impl NodeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl EdgeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// Half-open interval `[start, finish)` of timesteps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TimeInterval {
    pub start: u32,
    pub finish: u32,
}

impl TimeInterval {
    /// Returns `None` unless `start < finish`.
    pub fn new(start: u32, finish: u32) -> Option<Self> {
        (start < finish).then_some(TimeInterval { start, finish })
    }

    #[inline]
    pub fn contains(&self, t: u32) -> bool {
        self.start <= t && t < self.finish
    }

    #[inline]
    pub fn intersects(&self, other: &TimeInterval) -> bool {
        self.start.max(other.start) < self.finish.min(other.finish)
    }

    #[inline]
    pub fn len(&self) -> u32 {
        self.finish - self.start
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.start >= self.finish
    }
}

impl fmt::Display for TimeInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {})", self.start, self.finish)
    }
}

/// How strictly consecutive intervals of one edge must be separated.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum IntervalMode {
    /// `finish_i < start_j`: at least one idle timestep between appearances.
    #[default]
    Strict,
    /// `finish_i <= start_j`: intervals may touch.
    Lenient,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TemporalEdge {
    id: EdgeId,
    u: NodeId,
    v: NodeId,
    intervals: Vec<TimeInterval>,
}

impl TemporalEdge {
    pub fn id(&self) -> EdgeId {
        self.id
    }

    pub fn endpoints(&self) -> (NodeId, NodeId) {
        (self.u, self.v)
    }

    pub fn intervals(&self) -> &[TimeInterval] {
        &self.intervals
    }

    pub fn is_incident(&self, node: NodeId) -> bool {
        self.u == node || self.v == node
    }

    /// The endpoint opposite `node`, if `node` is an endpoint.
    pub fn opposite(&self, node: NodeId) -> Option<NodeId> {
        if self.u == node {
            Some(self.v)
        } else if self.v == node {
            Some(self.u)
        } else {
            None
        }
    }

    pub fn shares_endpoint(&self, other: &TemporalEdge) -> bool {
        self.is_incident(other.u) || self.is_incident(other.v)
    }

    /// True if the two edges exist at some common timestep, regardless of
    /// where they sit in the graph. Linear merge over both sorted lists.
    pub fn coexists_with(&self, other: &TemporalEdge) -> bool {
        let (a, b) = (&self.intervals, &other.intervals);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            if a[i].intersects(&b[j]) {
                return true;
            }
            if a[i].finish <= b[j].finish {
                i += 1;
            } else {
                j += 1;
            }
        }
        false
    }

    /// True if the edges share an endpoint and coexist at some timestep.
    pub fn overlaps(&self, other: &TemporalEdge) -> bool {
        self.id != other.id && self.shares_endpoint(other) && self.coexists_with(other)
    }
}

/// Symmetric, irreflexive overlap relation between two edges.
pub fn overlaps(e1: &TemporalEdge, e2: &TemporalEdge) -> bool {
    e1.overlaps(e2)
}

/// A validated temporal graph. Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TemporalGraph {
    labels: Vec<String>,
    by_label: BTreeMap<String, NodeId>,
    edges: Vec<TemporalEdge>,
    lifetime: u32,
    mode: IntervalMode,
    incident: Vec<Vec<EdgeId>>,
}

impl TemporalGraph {
    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn lifetime(&self) -> u32 {
        self.lifetime
    }

    /// The interval mode this graph was validated under.
    pub fn mode(&self) -> IntervalMode {
        self.mode
    }

    pub fn label(&self, node: NodeId) -> &str {
        &self.labels[node.0]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn node(&self, label: &str) -> Option<NodeId> {
        self.by_label.get(label).copied()
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeId> + '_ {
        (0..self.labels.len()).map(NodeId)
    }

    pub fn edges(&self) -> &[TemporalEdge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> &TemporalEdge {
        &self.edges[id.0]
    }

    pub fn get_edge(&self, id: EdgeId) -> Option<&TemporalEdge> {
        self.edges.get(id.0)
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> {
        (0..self.edges.len()).map(EdgeId)
    }

    /// Edges incident on `node`, ascending by id.
    pub fn incident(&self, node: NodeId) -> &[EdgeId] {
        &self.incident[node.0]
    }

    pub fn degree(&self, node: NodeId) -> usize {
        self.incident[node.0].len()
    }

    pub fn edge_between(&self, a: NodeId, b: NodeId) -> Option<EdgeId> {
        self.incident
            .get(a.0)?
            .iter()
            .copied()
            .find(|&e| self.edges[e.0].opposite(a) == Some(b))
    }

    /// Looks up an edge by endpoint labels, in either order.
    pub fn edge_by_labels(&self, a: &str, b: &str) -> Option<EdgeId> {
        self.edge_between(self.node(a)?, self.node(b)?)
    }

    pub fn edge_labels(&self, id: EdgeId) -> (&str, &str) {
        let (u, v) = self.edges[id.0].endpoints();
        (self.label(u), self.label(v))
    }

    pub fn overlaps(&self, a: EdgeId, b: EdgeId) -> bool {
        self.edges[a.0].overlaps(&self.edges[b.0])
    }

    /// Conflict set 𝒞(e) and overlapping number 𝒩(e) for every edge.
    ///
    /// Two distinct edges can share at most one endpoint, so every overlapping
    /// pair is discovered exactly once while scanning the shared node.
    pub fn overlap_sets(&self) -> OverlapSets {
        let mut sets = vec![Vec::new(); self.edges.len()];
        for list in &self.incident {
            for (i, &a) in list.iter().enumerate() {
                for &b in &list[i + 1..] {
                    if self.edges[a.0].coexists_with(&self.edges[b.0]) {
                        sets[a.0].push(b);
                        sets[b.0].push(a);
                    }
                }
            }
        }
        for s in &mut sets {
            s.sort_unstable();
        }
        OverlapSets { sets }
    }

    pub fn underlying_graph(&self) -> StaticGraph {
        StaticGraph {
            node_count: self.labels.len(),
            edges: self.edges.iter().map(|e| (e.u.0, e.v.0)).collect(),
        }
    }

    pub fn classify(&self) -> Classification {
        let under = self.underlying_graph();
        let max_intervals_per_edge = self
            .edges
            .iter()
            .map(|e| e.intervals.len())
            .max()
            .unwrap_or(0);
        Classification {
            is_tree: under.is_tree(),
            is_bipartite: under.is_bipartite(),
            max_degree: under.max_degree(),
            max_intervals_per_edge,
            single_interval: max_intervals_per_edge == 1,
        }
    }

    pub fn rooted_view(&self, root: NodeId) -> Result<RootedTreeView, TreeError> {
        if root.0 >= self.labels.len() {
            return Err(TreeError::UnknownRoot);
        }
        if !self.underlying_graph().is_tree() {
            return Err(TreeError::NotATree);
        }
        let n = self.labels.len();
        let mut parent = vec![None; n];
        let mut parent_edge = vec![None; n];
        let mut children = vec![Vec::new(); n];
        let mut depth = vec![0usize; n];
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([root]);
        seen[root.0] = true;
        while let Some(v) = queue.pop_front() {
            for &e in &self.incident[v.0] {
                let w = self.edges[e.0].opposite(v).expect("incident edge");
                if seen[w.0] {
                    continue;
                }
                seen[w.0] = true;
                parent[w.0] = Some(v);
                parent_edge[w.0] = Some(e);
                depth[w.0] = depth[v.0] + 1;
                children[v.0].push(w);
                queue.push_back(w);
            }
        }
        for c in &mut children {
            c.sort_unstable();
        }
        let height = depth.iter().copied().max().unwrap_or(0);
        let mut levels = vec![Vec::new(); height + 1];
        for (i, &d) in depth.iter().enumerate() {
            levels[d].push(NodeId(i));
        }
        Ok(RootedTreeView {
            root,
            parent,
            parent_edge,
            children,
            depth,
            levels,
        })
    }
}

/// Per-edge conflict sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OverlapSets {
    sets: Vec<Vec<EdgeId>>,
}

impl OverlapSets {
    /// 𝒞(e), ascending by id.
    pub fn conflicts(&self, e: EdgeId) -> &[EdgeId] {
        &self.sets[e.0]
    }

    /// 𝒩(e).
    pub fn count(&self, e: EdgeId) -> usize {
        self.sets[e.0].len()
    }

    pub fn counts(&self) -> Vec<usize> {
        self.sets.iter().map(Vec::len).collect()
    }

    /// Σ 𝒩(e); always even.
    pub fn total(&self) -> usize {
        self.sets.iter().map(Vec::len).sum()
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }
}

/// Simple undirected graph on nodes `0..node_count`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StaticGraph {
    node_count: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StaticGraphError {
    SelfLoop(usize),
    DuplicateEdge(usize, usize),
    NodeOutOfRange(usize),
}

impl fmt::Display for StaticGraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StaticGraphError::SelfLoop(v) => write!(f, "self-loop at node {v}"),
            StaticGraphError::DuplicateEdge(u, v) => write!(f, "duplicate edge {u}-{v}"),
            StaticGraphError::NodeOutOfRange(v) => write!(f, "node {v} out of range"),
        }
    }
}

impl StaticGraph {
    pub fn new(node_count: usize, edges: Vec<(usize, usize)>) -> Result<Self, StaticGraphError> {
        let mut seen = BTreeSet::new();
        for &(u, v) in &edges {
            if u >= node_count {
                return Err(StaticGraphError::NodeOutOfRange(u));
            }
            if v >= node_count {
                return Err(StaticGraphError::NodeOutOfRange(v));
            }
            if u == v {
                return Err(StaticGraphError::SelfLoop(u));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(StaticGraphError::DuplicateEdge(u, v));
            }
        }
        Ok(StaticGraph { node_count, edges })
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.node_count];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.node_count];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges
            .iter()
            .any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
    }

    pub fn is_connected(&self) -> bool {
        if self.node_count == 0 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.node_count];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == self.node_count
    }

    /// Connected with exactly `n - 1` edges. The empty graph is not a tree.
    pub fn is_tree(&self) -> bool {
        self.node_count > 0 && self.edges.len() + 1 == self.node_count && self.is_connected()
    }

    /// Two-colouring by BFS over every component.
    pub fn is_bipartite(&self) -> bool {
        let adj = self.adjacency();
        let mut colour: Vec<Option<bool>> = vec![None; self.node_count];
        for start in 0..self.node_count {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let c = colour[v].unwrap();
                for &w in &adj[v] {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!c);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == c => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub is_tree: bool,
    pub is_bipartite: bool,
    /// Δ of the underlying graph.
    pub max_degree: usize,
    pub max_intervals_per_edge: usize,
    pub single_interval: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeError {
    NotATree,
    UnknownRoot,
}

impl fmt::Display for TreeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeError::NotATree => f.write_str("underlying graph is not a tree"),
            TreeError::UnknownRoot => f.write_str("root is not a node of the graph"),
        }
    }
}

/// Parent/child structure of a temporal tree hung from a chosen root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedTreeView {
    root: NodeId,
    parent: Vec<Option<NodeId>>,
    parent_edge: Vec<Option<EdgeId>>,
    children: Vec<Vec<NodeId>>,
    depth: Vec<usize>,
    levels: Vec<Vec<NodeId>>,
}

impl RootedTreeView {
    pub fn root(&self) -> NodeId {
        self.root
    }

    pub fn parent(&self, v: NodeId) -> Option<NodeId> {
        self.parent[v.0]
    }

    /// The edge `e_{v P(v)}`, absent for the root.
    pub fn parent_edge(&self, v: NodeId) -> Option<EdgeId> {
        self.parent_edge[v.0]
    }

    /// Children in ascending id order.
    pub fn children(&self, v: NodeId) -> &[NodeId] {
        &self.children[v.0]
    }

    pub fn depth(&self, v: NodeId) -> usize {
        self.depth[v.0]
    }

    pub fn height(&self) -> usize {
        self.levels.len() - 1
    }

    /// Nodes grouped by depth; each level ascending by id.
    pub fn levels(&self) -> &[Vec<NodeId>] {
        &self.levels
    }

    pub fn is_leaf(&self, v: NodeId) -> bool {
        self.children[v.0].is_empty()
    }

    /// Nodes of the subtree rooted at `v`, `v` first.
    pub fn subtree(&self, v: NodeId) -> Vec<NodeId> {
        let mut out = vec![v];
        let mut i = 0;
        while i < out.len() {
            out.extend_from_slice(&self.children[out[i].0]);
            i += 1;
        }
        out
    }
}

/// A raw, unvalidated graph description keyed by node label.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GraphSpec {
    pub lifetime: u32,
    pub nodes: Vec<String>,
    pub edges: Vec<EdgeSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeSpec {
    pub u: String,
    pub v: String,
    pub intervals: Vec<(u32, u32)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    DuplicateNode(String),
    UnknownNode(String),
    SelfLoop,
    DuplicateEdge,
    NoIntervals,
    BadInterval { start: u32, finish: u32 },
    UnsortedOrOverlappingIntervals { previous: (u32, u32), next: (u32, u32) },
    IntervalBeyondLifetime { finish: u32, lifetime: u32 },
}

/// One validation failure. `edge` is the index into [`GraphSpec::edges`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub edge: Option<usize>,
    pub kind: ViolationKind,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(e) = self.edge {
            write!(f, "edge {e}: ")?;
        }
        match &self.kind {
            ViolationKind::DuplicateNode(n) => write!(f, "duplicate node {n}"),
            ViolationKind::UnknownNode(n) => write!(f, "unknown node {n}"),
            ViolationKind::SelfLoop => f.write_str("self-loop"),
            ViolationKind::DuplicateEdge => f.write_str("duplicate edge between the same node pair"),
            ViolationKind::NoIntervals => f.write_str("edge has no intervals"),
            ViolationKind::BadInterval { start, finish } => {
                write!(f, "bad interval ({start}, {finish}): start must be < finish")
            }
            ViolationKind::UnsortedOrOverlappingIntervals { previous, next } => write!(
                f,
                "intervals ({}, {}) and ({}, {}) are unsorted or not separated",
                previous.0, previous.1, next.0, next.1
            ),
            ViolationKind::IntervalBeyondLifetime { finish, lifetime } => {
                write!(f, "interval finish {finish} exceeds lifetime {lifetime}")
            }
        }
    }
}

impl GraphSpec {
    pub fn new(lifetime: u32) -> Self {
        GraphSpec {
            lifetime,
            ..GraphSpec::default()
        }
    }

    pub fn node(&mut self, label: impl Into<String>) -> &mut Self {
        self.nodes.push(label.into());
        self
    }

    pub fn edge(&mut self, u: impl Into<String>, v: impl Into<String>, intervals: &[(u32, u32)]) -> &mut Self {
        self.edges.push(EdgeSpec {
            u: u.into(),
            v: v.into(),
            intervals: intervals.to_vec(),
        });
        self
    }

    /// Validates every constraint and reports all violations found.
    pub fn validate(&self, mode: IntervalMode) -> Result<TemporalGraph, Vec<Violation>> {
        let mut violations = Vec::new();
        let mut by_label = BTreeMap::new();
        for (i, label) in self.nodes.iter().enumerate() {
            if by_label.insert(label.clone(), NodeId(i)).is_some() {
                violations.push(Violation {
                    edge: None,
                    kind: ViolationKind::DuplicateNode(label.clone()),
                });
            }
        }

        let mut pairs = BTreeSet::new();
        let mut edges = Vec::with_capacity(self.edges.len());
        for (idx, spec) in self.edges.iter().enumerate() {
            let mut push = |kind| violations.push(Violation { edge: Some(idx), kind });
            let u = by_label.get(&spec.u).copied();
            let v = by_label.get(&spec.v).copied();
            if u.is_none() {
                push(ViolationKind::UnknownNode(spec.u.clone()));
            }
            if v.is_none() && spec.v != spec.u {
                push(ViolationKind::UnknownNode(spec.v.clone()));
            }
            if spec.u == spec.v {
                push(ViolationKind::SelfLoop);
            } else if let (Some(a), Some(b)) = (u, v) {
                if !pairs.insert((a.min(b), a.max(b))) {
                    push(ViolationKind::DuplicateEdge);
                }
            }

            if spec.intervals.is_empty() {
                push(ViolationKind::NoIntervals);
            }
            for &(s, f) in &spec.intervals {
                if s >= f {
                    push(ViolationKind::BadInterval { start: s, finish: f });
                }
                if f > self.lifetime {
                    push(ViolationKind::IntervalBeyondLifetime {
                        finish: f,
                        lifetime: self.lifetime,
                    });
                }
            }
            for w in spec.intervals.windows(2) {
                let (prev, next) = (w[0], w[1]);
                let separated = match mode {
                    IntervalMode::Strict => prev.1 < next.0,
                    IntervalMode::Lenient => prev.1 <= next.0,
                };
                if !separated {
                    push(ViolationKind::UnsortedOrOverlappingIntervals { previous: prev, next });
                }
            }

            if let (Some(a), Some(b)) = (u, v) {
                edges.push(TemporalEdge {
                    id: EdgeId(idx),
                    u: a,
                    v: b,
                    intervals: spec
                        .intervals
                        .iter()
                        .map(|&(s, f)| TimeInterval { start: s, finish: f })
                        .collect(),
                });
            }
        }

        if !violations.is_empty() {
            return Err(violations);
        }
        let mut incident = vec![Vec::new(); self.nodes.len()];
        for e in &edges {
            incident[e.u.0].push(e.id);
            incident[e.v.0].push(e.id);
        }
        Ok(TemporalGraph {
            labels: self.nodes.clone(),
            by_label,
            edges,
            lifetime: self.lifetime,
            mode,
            incident,
        })
    }
}

impl TemporalGraph {
    /// The raw description this graph was built from.
    pub fn to_spec(&self) -> GraphSpec {
        GraphSpec {
            lifetime: self.lifetime,
            nodes: self.labels.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeSpec {
                    u: self.labels[e.u.0].clone(),
                    v: self.labels[e.v.0].clone(),
                    intervals: e.intervals.iter().map(|i| (i.start, i.finish)).collect(),
                })
                .collect(),
        }
    }
}
