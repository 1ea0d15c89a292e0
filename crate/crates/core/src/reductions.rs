//! Gadget constructions that encode rainbow matching on coloured paths,
//! 2P2N-3SAT, and maximum independent set as timed matching instances, and
//! the maps that carry gadget matchings back to source solutions.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::matching::TimedMatching;
use crate::model::{EdgeId, GraphSpec, IntervalMode, StaticGraph, TemporalGraph};

/// Label of the hub node in the star-shaped gadgets.
pub const HUB: &str = "r";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReductionKind {
    Rainbow,
    Sat2p2n,
    MaxIs,
}

impl ReductionKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ReductionKind::Rainbow => "rainbow",
            ReductionKind::Sat2p2n => "sat2p2n",
            ReductionKind::MaxIs => "maxis",
        }
    }
}

impl fmt::Display for ReductionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ReductionKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "rainbow" => Ok(ReductionKind::Rainbow),
            "sat2p2n" => Ok(ReductionKind::Sat2p2n),
            "maxis" => Ok(ReductionKind::MaxIs),
            other => Err(format!("unknown reduction kind {other:?}")),
        }
    }
}

/// A literal over 0-based variable `var`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal { var, positive: true }
    }

    pub fn neg(var: usize) -> Self {
        Literal { var, positive: false }
    }

    /// DIMACS-style signed, 1-based form.
    pub fn to_dimacs(self) -> i64 {
        let v = self.var as i64 + 1;
        if self.positive {
            v
        } else {
            -v
        }
    }

    pub fn from_dimacs(x: i64) -> Option<Self> {
        (x != 0).then(|| Literal {
            var: (x.unsigned_abs() - 1) as usize,
            positive: x > 0,
        })
    }

    pub fn eval(self, assignment: &[bool]) -> bool {
        assignment[self.var] == self.positive
    }
}

/// The source-side object each gadget edge stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SourceElement {
    /// Path edge `(v_i, v_{i+1})`.
    PathEdge(usize),
    /// Occurrence of `literal` in clause `clause` (0-based).
    ClauseLiteral { clause: usize, literal: Literal },
    /// Edge `a_i b_i`; selecting it sets variable `i` false.
    VariableFalse(usize),
    /// Edge `a_i b̄_i`; selecting it sets variable `i` true.
    VariableTrue(usize),
    /// Source graph node.
    Node(usize),
}

impl fmt::Display for SourceElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SourceElement::PathEdge(i) => write!(f, "path:{i}"),
            SourceElement::ClauseLiteral { clause, literal } => {
                write!(f, "clause:{}:{}", clause + 1, literal.to_dimacs())
            }
            SourceElement::VariableFalse(i) => write!(f, "false:{}", i + 1),
            SourceElement::VariableTrue(i) => write!(f, "true:{}", i + 1),
            SourceElement::Node(v) => write!(f, "node:{v}"),
        }
    }
}

impl FromStr for SourceElement {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || format!("bad source element {s:?}");
        let mut parts = s.split(':');
        let tag = parts.next().ok_or_else(bad)?;
        let mut num = || -> Result<i64, String> {
            parts.next().and_then(|p| p.parse::<i64>().ok()).ok_or_else(bad)
        };
        let one_based = |x: i64| -> Result<usize, String> {
            if x >= 1 {
                Ok((x - 1) as usize)
            } else {
                Err(bad())
            }
        };
        let elem = match tag {
            "path" => SourceElement::PathEdge(usize::try_from(num()?).map_err(|_| bad())?),
            "node" => SourceElement::Node(usize::try_from(num()?).map_err(|_| bad())?),
            "false" => SourceElement::VariableFalse(one_based(num()?)?),
            "true" => SourceElement::VariableTrue(one_based(num()?)?),
            "clause" => {
                let clause = one_based(num()?)?;
                let literal = Literal::from_dimacs(num()?).ok_or_else(bad)?;
                SourceElement::ClauseLiteral { clause, literal }
            }
            _ => return Err(bad()),
        };
        if parts.next().is_some() {
            return Err(bad());
        }
        Ok(elem)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MappingEntry {
    pub source: SourceElement,
    pub edge: EdgeId,
    /// Endpoint labels of the gadget edge.
    pub endpoints: (String, String),
}

/// Bijection between source elements and gadget edges. Entry `i` describes
/// gadget edge `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionMapping {
    kind: ReductionKind,
    entries: Vec<MappingEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MappingError {
    EdgeOutOfOrder { position: usize, edge: EdgeId },
    DuplicateSource(SourceElement),
    DuplicateEndpoints(String, String),
    WrongKind { kind: ReductionKind, source: SourceElement },
}

impl fmt::Display for MappingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MappingError::EdgeOutOfOrder { position, edge } => {
                write!(f, "entry {position} names edge {} (expected {position})", edge.0)
            }
            MappingError::DuplicateSource(s) => write!(f, "source element {s} mapped twice"),
            MappingError::DuplicateEndpoints(a, b) => write!(f, "gadget edge {a}-{b} mapped twice"),
            MappingError::WrongKind { kind, source } => {
                write!(f, "source element {source} does not belong to a {kind} mapping")
            }
        }
    }
}

fn pair_key(a: &str, b: &str) -> (String, String) {
    if a <= b {
        (a.to_string(), b.to_string())
    } else {
        (b.to_string(), a.to_string())
    }
}

impl ReductionMapping {
    pub fn new(kind: ReductionKind, entries: Vec<MappingEntry>) -> Result<Self, MappingError> {
        let mut sources = BTreeSet::new();
        let mut pairs = BTreeSet::new();
        for (i, entry) in entries.iter().enumerate() {
            if entry.edge != EdgeId(i) {
                return Err(MappingError::EdgeOutOfOrder {
                    position: i,
                    edge: entry.edge,
                });
            }
            let fits = matches!(
                (kind, entry.source),
                (ReductionKind::Rainbow, SourceElement::PathEdge(_))
                    | (ReductionKind::MaxIs, SourceElement::Node(_))
                    | (
                        ReductionKind::Sat2p2n,
                        SourceElement::ClauseLiteral { .. }
                            | SourceElement::VariableFalse(_)
                            | SourceElement::VariableTrue(_)
                    )
            );
            if !fits {
                return Err(MappingError::WrongKind {
                    kind,
                    source: entry.source,
                });
            }
            if !sources.insert(entry.source) {
                return Err(MappingError::DuplicateSource(entry.source));
            }
            if !pairs.insert(pair_key(&entry.endpoints.0, &entry.endpoints.1)) {
                return Err(MappingError::DuplicateEndpoints(
                    entry.endpoints.0.clone(),
                    entry.endpoints.1.clone(),
                ));
            }
        }
        Ok(ReductionMapping { kind, entries })
    }

    fn from_graph(kind: ReductionKind, g: &TemporalGraph, sources: Vec<SourceElement>) -> Self {
        let entries = sources
            .into_iter()
            .zip(g.edge_ids())
            .map(|(source, edge)| {
                let (a, b) = g.edge_labels(edge);
                MappingEntry {
                    source,
                    edge,
                    endpoints: (a.to_string(), b.to_string()),
                }
            })
            .collect();
        ReductionMapping { kind, entries }
    }

    pub fn kind(&self) -> ReductionKind {
        self.kind
    }

    pub fn entries(&self) -> &[MappingEntry] {
        &self.entries
    }

    pub fn edge_for(&self, source: SourceElement) -> Option<EdgeId> {
        self.entries.iter().find(|e| e.source == source).map(|e| e.edge)
    }

    pub fn source_of(&self, edge: EdgeId) -> Option<SourceElement> {
        self.entries.get(edge.0).map(|e| e.source)
    }

    /// The gadget edge joining two labelled nodes, in either order.
    pub fn edge_by_endpoints(&self, a: &str, b: &str) -> Option<EdgeId> {
        self.entries
            .iter()
            .find(|e| {
                (e.endpoints.0 == a && e.endpoints.1 == b) || (e.endpoints.0 == b && e.endpoints.1 == a)
            })
            .map(|e| e.edge)
    }

    fn sources_in<'a>(&'a self, m: &'a TimedMatching) -> impl Iterator<Item = SourceElement> + 'a {
        m.iter().filter_map(|e| self.source_of(e))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReductionError {
    ImproperColouring { edge: usize },
    ColourOutOfRange { edge: usize, colour: usize },
    Not2P2N(Vec<FormulaViolation>),
    BadLabels(LabelError),
}

impl fmt::Display for ReductionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReductionError::ImproperColouring { edge } => {
                write!(f, "path edges {} and {} share a colour", edge, edge + 1)
            }
            ReductionError::ColourOutOfRange { edge, colour } => {
                write!(f, "path edge {edge} has colour {colour} outside the declared range")
            }
            ReductionError::Not2P2N(v) => {
                f.write_str("formula is not 2P2N-3SAT:")?;
                for x in v {
                    write!(f, " {x};")?;
                }
                Ok(())
            }
            ReductionError::BadLabels(e) => write!(f, "bad labels: {e}"),
        }
    }
}

// ---------------------------------------------------------------------------
// rainbow matching on a properly edge-coloured path

/// A path `v_0 … v_{n-1}` whose edge `(v_i, v_{i+1})` has colour
/// `colours[i]` in `0..colour_count`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColouredPath {
    colour_count: usize,
    colours: Vec<usize>,
}

impl ColouredPath {
    pub fn new(colour_count: usize, colours: Vec<usize>) -> Result<Self, ReductionError> {
        for (i, &c) in colours.iter().enumerate() {
            if c >= colour_count {
                return Err(ReductionError::ColourOutOfRange { edge: i, colour: c });
            }
        }
        if let Some(i) = colours.windows(2).position(|w| w[0] == w[1]) {
            return Err(ReductionError::ImproperColouring { edge: i });
        }
        Ok(ColouredPath { colour_count, colours })
    }

    pub fn node_count(&self) -> usize {
        self.colours.len() + 1
    }

    pub fn edge_count(&self) -> usize {
        self.colours.len()
    }

    pub fn colour_count(&self) -> usize {
        self.colour_count
    }

    pub fn colours(&self) -> &[usize] {
        &self.colours
    }

    /// No two chosen edges share a node or a colour.
    pub fn is_rainbow_matching(&self, edges: &[usize]) -> bool {
        let mut sorted = edges.to_vec();
        sorted.sort_unstable();
        if sorted.iter().any(|&e| e >= self.colours.len()) {
            return false;
        }
        let disjoint = sorted.windows(2).all(|w| w[1] > w[0] + 1);
        let mut colours = BTreeSet::new();
        disjoint && sorted.iter().all(|&e| colours.insert(self.colours[e]))
    }
}

/// Star gadget: hub `r` joined to one leaf per path edge. Path edge `i`
/// coloured `k` becomes an edge alive on `[i, i+2)` and `[n+k, n+k+1)`.
/// Lifetime `n + c`. Emitted in lenient mode since the two intervals can
/// touch.
pub fn from_rainbow_path(p: &ColouredPath) -> (TemporalGraph, ReductionMapping) {
    let n = p.node_count() as u32;
    let mut spec = GraphSpec::new(n + p.colour_count as u32);
    spec.node(HUB);
    for i in 0..p.edge_count() {
        spec.node(format!("p{i}"));
    }
    for (i, &c) in p.colours.iter().enumerate() {
        let at = i as u32;
        let colour_time = n + c as u32;
        spec.edge(HUB, format!("p{i}"), &[(at, at + 2), (colour_time, colour_time + 1)]);
    }
    let g = spec
        .validate(IntervalMode::Lenient)
        .expect("rainbow gadget is well formed");
    let sources = (0..p.edge_count()).map(SourceElement::PathEdge).collect();
    let map = ReductionMapping::from_graph(ReductionKind::Rainbow, &g, sources);
    (g, map)
}

/// Path edges whose gadget edge is in `m`, ascending.
pub fn extract_rainbow(m: &TimedMatching, map: &ReductionMapping) -> Vec<usize> {
    let mut out: Vec<usize> = map
        .sources_in(m)
        .filter_map(|s| match s {
            SourceElement::PathEdge(i) => Some(i),
            _ => None,
        })
        .collect();
    out.sort_unstable();
    out
}

// ---------------------------------------------------------------------------
// 2P2N-3SAT

/// 3-CNF formula over variables `0..var_count`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfFormula {
    pub var_count: usize,
    pub clauses: Vec<[Literal; 3]>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormulaViolation {
    VariableOutOfRange { clause: usize, var: usize },
    RepeatedLiteral { clause: usize },
    Occurrences { var: usize, positive: usize, negative: usize },
    ClauseCount { var_count: usize, clauses: usize },
}

impl fmt::Display for FormulaViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormulaViolation::VariableOutOfRange { clause, var } => {
                write!(f, "clause {} uses variable {} beyond the declared count", clause + 1, var + 1)
            }
            FormulaViolation::RepeatedLiteral { clause } => {
                write!(f, "clause {} repeats a literal", clause + 1)
            }
            FormulaViolation::Occurrences { var, positive, negative } => write!(
                f,
                "variable {} occurs {positive} times positively and {negative} times negatively",
                var + 1
            ),
            FormulaViolation::ClauseCount { var_count, clauses } => write!(
                f,
                "{clauses} clauses for {var_count} variables (need 4m/3 with m divisible by 3)"
            ),
        }
    }
}

impl CnfFormula {
    pub fn clause_count(&self) -> usize {
        self.clauses.len()
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        assignment.len() >= self.var_count
            && self
                .clauses
                .iter()
                .all(|c| c.iter().any(|l| l.eval(assignment)))
    }
}

/// Checks distinct literals per clause, exactly two positive and two negative
/// occurrences per variable, and `4m/3` clauses.
pub fn validate_2p2n(f: &CnfFormula) -> Result<(), Vec<FormulaViolation>> {
    let mut violations = Vec::new();
    let mut pos = vec![0usize; f.var_count];
    let mut neg = vec![0usize; f.var_count];
    for (i, clause) in f.clauses.iter().enumerate() {
        let distinct: BTreeSet<_> = clause.iter().collect();
        if distinct.len() != 3 {
            violations.push(FormulaViolation::RepeatedLiteral { clause: i });
        }
        for lit in clause {
            if lit.var >= f.var_count {
                violations.push(FormulaViolation::VariableOutOfRange { clause: i, var: lit.var });
            } else if lit.positive {
                pos[lit.var] += 1;
            } else {
                neg[lit.var] += 1;
            }
        }
    }
    for var in 0..f.var_count {
        if pos[var] != 2 || neg[var] != 2 {
            violations.push(FormulaViolation::Occurrences {
                var,
                positive: pos[var],
                negative: neg[var],
            });
        }
    }
    if !f.var_count.is_multiple_of(3) || f.clauses.len() * 3 != f.var_count * 4 {
        violations.push(FormulaViolation::ClauseCount {
            var_count: f.var_count,
            clauses: f.clauses.len(),
        });
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(violations)
    }
}

/// Bipartite gadget: clause nodes `c_i` and variable nodes `a_i` on one side,
/// literal nodes `b_i`, `nb_i` on the other. Clause `i` (1-based) links to its
/// three literal nodes during `[i-1, i)`; each `a_i` links to `b_i` and `nb_i`
/// for the whole lifetime `[0, d)`.
///
/// Returns the gadget, the mapping, and the target size `d + m`, reached
/// exactly when the formula is satisfiable.
pub fn from_2p2n3sat(f: &CnfFormula) -> Result<(TemporalGraph, ReductionMapping, usize), ReductionError> {
    validate_2p2n(f).map_err(ReductionError::Not2P2N)?;
    let d = f.clauses.len();
    let m = f.var_count;
    let mut spec = GraphSpec::new(d as u32);
    for i in 1..=d {
        spec.node(format!("c{i}"));
    }
    for i in 1..=m {
        spec.node(format!("a{i}"));
    }
    for i in 1..=m {
        spec.node(format!("b{i}"));
        spec.node(format!("nb{i}"));
    }
    let literal_node = |l: Literal| {
        if l.positive {
            format!("b{}", l.var + 1)
        } else {
            format!("nb{}", l.var + 1)
        }
    };

    let mut sources = Vec::with_capacity(3 * d + 2 * m);
    for (i, clause) in f.clauses.iter().enumerate() {
        let t = i as u32;
        for &lit in clause {
            spec.edge(format!("c{}", i + 1), literal_node(lit), &[(t, t + 1)]);
            sources.push(SourceElement::ClauseLiteral { clause: i, literal: lit });
        }
    }
    for i in 0..m {
        spec.edge(format!("a{}", i + 1), format!("b{}", i + 1), &[(0, d as u32)]);
        sources.push(SourceElement::VariableFalse(i));
        spec.edge(format!("a{}", i + 1), format!("nb{}", i + 1), &[(0, d as u32)]);
        sources.push(SourceElement::VariableTrue(i));
    }
    let g = spec
        .validate(IntervalMode::Strict)
        .expect("sat gadget is well formed");
    let map = ReductionMapping::from_graph(ReductionKind::Sat2p2n, &g, sources);
    Ok((g, map, d + m))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AssignmentExtraction {
    /// Truth value per variable; satisfies the formula when the matching was
    /// valid.
    Complete(Vec<bool>),
    /// The matching is smaller than `d + m`.
    Incomplete,
}

/// Reads a truth assignment off a gadget matching of size `d + m`:
/// `a_i b_i` selected means `v_i` is false, `a_i nb_i` means true.
pub fn extract_assignment(m: &TimedMatching, map: &ReductionMapping) -> AssignmentExtraction {
    let mut var_count = 0;
    let mut clauses = BTreeSet::new();
    for entry in map.entries() {
        match entry.source {
            SourceElement::VariableFalse(i) => var_count = var_count.max(i + 1),
            SourceElement::ClauseLiteral { clause, .. } => {
                clauses.insert(clause);
            }
            _ => {}
        }
    }
    if m.len() != var_count + clauses.len() {
        return AssignmentExtraction::Incomplete;
    }
    let mut values: Vec<Option<bool>> = vec![None; var_count];
    for s in map.sources_in(m) {
        match s {
            SourceElement::VariableFalse(i) => values[i] = Some(false),
            SourceElement::VariableTrue(i) => values[i] = Some(true),
            _ => {}
        }
    }
    match values.into_iter().collect::<Option<Vec<bool>>>() {
        Some(v) => AssignmentExtraction::Complete(v),
        None => AssignmentExtraction::Incomplete,
    }
}

// ---------------------------------------------------------------------------
// maximum independent set

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LabelError {
    EdgeLabelCount { expected: usize, actual: usize },
    EdgeLabelsNotPermutation,
    IsolatedNodesMismatch,
    IsolatedLabelsNotPermutation,
}

impl fmt::Display for LabelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LabelError::EdgeLabelCount { expected, actual } => {
                write!(f, "expected {expected} edge labels, got {actual}")
            }
            LabelError::EdgeLabelsNotPermutation => f.write_str("edge labels must be exactly 0..m"),
            LabelError::IsolatedNodesMismatch => {
                f.write_str("labelled isolated nodes must be exactly the degree-zero nodes")
            }
            LabelError::IsolatedLabelsNotPermutation => {
                f.write_str("isolated-node labels must be exactly m..m+n0")
            }
        }
    }
}

/// Static graph whose edges carry distinct labels `0..m` and whose
/// degree-zero nodes carry distinct labels `m..m+n0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelledStaticGraph {
    graph: StaticGraph,
    edge_labels: Vec<u32>,
    isolated: Vec<(usize, u32)>,
}

impl LabelledStaticGraph {
    pub fn new(graph: StaticGraph, edge_labels: Vec<u32>, mut isolated: Vec<(usize, u32)>) -> Result<Self, LabelError> {
        let m = graph.edge_count();
        if edge_labels.len() != m {
            return Err(LabelError::EdgeLabelCount {
                expected: m,
                actual: edge_labels.len(),
            });
        }
        let seen: BTreeSet<u32> = edge_labels.iter().copied().collect();
        if seen.len() != m || seen.iter().any(|&l| l as usize >= m) {
            return Err(LabelError::EdgeLabelsNotPermutation);
        }
        isolated.sort_unstable();
        let degrees = graph.degrees();
        let zero: Vec<usize> = (0..graph.node_count()).filter(|&v| degrees[v] == 0).collect();
        let labelled: Vec<usize> = isolated.iter().map(|&(v, _)| v).collect();
        if zero != labelled {
            return Err(LabelError::IsolatedNodesMismatch);
        }
        let seen: BTreeSet<u32> = isolated.iter().map(|&(_, l)| l).collect();
        let n0 = zero.len();
        if seen.len() != n0 || seen.iter().any(|&l| (l as usize) < m || l as usize >= m + n0) {
            return Err(LabelError::IsolatedLabelsNotPermutation);
        }
        Ok(LabelledStaticGraph {
            graph,
            edge_labels,
            isolated,
        })
    }

    /// Edge `i` gets label `i`; isolated nodes are labelled in node order.
    pub fn canonical(graph: StaticGraph) -> Self {
        let m = graph.edge_count();
        let degrees = graph.degrees();
        let isolated = (0..graph.node_count())
            .filter(|&v| degrees[v] == 0)
            .enumerate()
            .map(|(k, v)| (v, (m + k) as u32))
            .collect();
        LabelledStaticGraph {
            edge_labels: (0..m as u32).collect(),
            graph,
            isolated,
        }
    }

    pub fn graph(&self) -> &StaticGraph {
        &self.graph
    }

    pub fn edge_labels(&self) -> &[u32] {
        &self.edge_labels
    }

    /// `(node, label)` pairs, ascending by node.
    pub fn isolated(&self) -> &[(usize, u32)] {
        &self.isolated
    }
}

/// Star gadget: hub `r` joined to leaf `n{v}` for every source node `v`. The
/// edge for `v` is alive during `[a, a+1)` for the label `a` of each edge at
/// `v`, or of `v` itself when isolated. Lifetime `m + n0`. Lenient mode since
/// consecutive labels give touching intervals.
pub fn from_max_is(lg: &LabelledStaticGraph) -> (TemporalGraph, ReductionMapping) {
    let g = &lg.graph;
    let n = g.node_count();
    let mut times: Vec<Vec<u32>> = vec![Vec::new(); n];
    for (&(u, v), &label) in g.edges().iter().zip(&lg.edge_labels) {
        times[u].push(label);
        times[v].push(label);
    }
    for &(v, label) in &lg.isolated {
        times[v].push(label);
    }
    let mut spec = GraphSpec::new((g.edge_count() + lg.isolated.len()) as u32);
    spec.node(HUB);
    for v in 0..n {
        spec.node(format!("n{v}"));
    }
    for (v, t) in times.iter_mut().enumerate() {
        t.sort_unstable();
        let intervals: Vec<(u32, u32)> = t.iter().map(|&a| (a, a + 1)).collect();
        spec.edge(HUB, format!("n{v}"), &intervals);
    }
    let tg = spec
        .validate(IntervalMode::Lenient)
        .expect("independent-set gadget is well formed");
    let sources = (0..n).map(SourceElement::Node).collect();
    let map = ReductionMapping::from_graph(ReductionKind::MaxIs, &tg, sources);
    (tg, map)
}

/// Source nodes whose gadget edge is in `m`, ascending.
pub fn extract_independent_set(m: &TimedMatching, map: &ReductionMapping) -> Vec<usize> {
    let mut out: Vec<usize> = map
        .sources_in(m)
        .filter_map(|s| match s {
            SourceElement::Node(v) => Some(v),
            _ => None,
        })
        .collect();
    out.sort_unstable();
    out
}
