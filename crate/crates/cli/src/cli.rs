//! Command-line driver. `run` takes the argument list and the output streams
//! so it can be exercised in-process.
//!
//! Exit codes: 0 success, 1 usage or file access error, 2 invalid input,
//! 3 an algorithm precondition does not hold.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use timedmatch_core::greedy::{solve_greedy, stats};
use timedmatch_core::matching::{is_maximal, is_timed_matching, MatchingCheck, Maximality};
use timedmatch_core::model::{EdgeId, NodeId, TemporalGraph};
use timedmatch_core::oracle::{solve_exact, DEFAULT_BUDGET};
use timedmatch_core::reductions::{
    extract_assignment, extract_independent_set, extract_rainbow, from_2p2n3sat, from_max_is,
    from_rainbow_path, AssignmentExtraction, ReductionKind,
};
use timedmatch_core::tree_dp::{solve_tree_detailed, TreeDpError};
use timedmatch_core::TimedMatching;

use crate::format::{self, FormatError};
use crate::gen;

pub const SEED_ENV: &str = "TIMEDMATCH_SEED";

#[derive(Debug, Parser)]
#[command(name = "timedmatch", version, about = "Maximum 0-1 timed matchings on temporal graphs")]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Algo {
    TreeDp,
    Greedy,
    Exact,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Rainbow,
    Sat2p2n,
    Maxis,
}

impl From<Kind> for ReductionKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Rainbow => ReductionKind::Rainbow,
            Kind::Sat2p2n => ReductionKind::Sat2p2n,
            Kind::Maxis => ReductionKind::MaxIs,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute a timed matching.
    Solve {
        #[arg(long, value_enum)]
        algo: Algo,
        #[arg(long = "in")]
        input: PathBuf,
        /// Root for tree-dp; defaults to the file's root line, then the first node.
        #[arg(long)]
        root: Option<String>,
        /// Per-step diagnostics on standard error.
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Largest edge count the exact solver accepts.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Check a matching file against an instance.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        matching: PathBuf,
        #[arg(long)]
        maximal: bool,
    },
    /// Overlap statistics and the greedy guarantee.
    Stats {
        #[arg(long = "in")]
        input: PathBuf,
        /// Header plus one comma-separated row.
        #[arg(long)]
        csv: bool,
    },
    /// Build a gadget instance from a source problem.
    Reduce {
        #[arg(value_enum)]
        kind: Kind,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        map: PathBuf,
    },
    /// Read a source solution off a gadget matching.
    Extract {
        #[arg(value_enum)]
        kind: Kind,
        #[arg(long)]
        matching: PathBuf,
        #[arg(long)]
        map: PathBuf,
    },
    /// Generate a seeded instance.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
        /// Falls back to the TIMEDMATCH_SEED environment variable.
        #[arg(long, global = true)]
        seed: Option<u64>,
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
enum GenKind {
    RandomGraph {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        lifetime: u32,
        #[arg(long, default_value_t = 1)]
        max_intervals: usize,
    },
    RandomTree {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        lifetime: u32,
    },
    ColouredPath {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        c: usize,
    },
    #[command(name = "formula-2p2n")]
    Formula2p2n {
        #[arg(long)]
        m: usize,
    },
    LabelledGraph {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
    },
}

/// A failure with the exit code it maps to.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub category: &'static str,
    pub message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 1,
        category: "usage",
        message: message.into(),
    }
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        category: "invalid",
        message: message.into(),
    }
}

fn precondition(message: impl Into<String>) -> Failure {
    Failure {
        code: 3,
        category: "precondition",
        message: message.into(),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| usage(format!("cannot write {}: {e}", path.display())))
}

fn parsed<T>(path: &Path, r: Result<T, FormatError>) -> Result<T, Failure> {
    r.map_err(|e| {
        let lines: Vec<String> = e.to_string().lines().map(|l| format!("{}: {l}", path.display())).collect();
        invalid(lines.join("\n"))
    })
}

fn label_pair(g: &TemporalGraph, e: EdgeId) -> String {
    let (u, v) = g.edge_labels(e);
    format!("{u}-{v}")
}

fn list(g: &TemporalGraph, m: &TimedMatching) -> String {
    let parts: Vec<String> = m.iter().map(|e| label_pair(g, e)).collect();
    parts.join(",")
}

/// Runs the driver and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            // --help and --version are not errors
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return 1;
            }
            let _ = write!(out, "{e}");
            return 0;
        }
    };
    match dispatch(args.command, out, err) {
        Ok(()) => 0,
        Err(f) => {
            for line in f.message.lines() {
                let _ = writeln!(err, "error: {}: {line}", f.category);
            }
            f.code
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    let io = |e: std::io::Error| usage(format!("output: {e}"));
    match cmd {
        Command::Solve {
            algo,
            input,
            root,
            trace,
            out: out_file,
            budget,
        } => {
            let inst = parsed(&input, format::parse_tg(&read(&input)?))?;
            let g = &inst.graph;
            let m = match algo {
                Algo::TreeDp => {
                    let root = match root.or(inst.root) {
                        Some(r) => g
                            .node(&r)
                            .ok_or_else(|| usage(format!("root {r:?} is not a node")))?,
                        None if g.node_count() > 0 => NodeId(0),
                        None => return Err(precondition("tree-dp needs a non-empty graph")),
                    };
                    let dp = solve_tree_detailed(g, root).map_err(|e| match e {
                        TreeDpError::NotATree => precondition("the underlying graph is not a tree"),
                        TreeDpError::UnknownRoot => usage("unknown root"),
                        TreeDpError::MultiIntervalUnsupported(e) => precondition(format!(
                            "edge {} has several intervals; tree-dp needs one per edge",
                            label_pair(g, e)
                        )),
                    })?;
                    if trace {
                        for level in dp.view().levels().iter().rev() {
                            for &v in level {
                                let s = dp.solution(v);
                                writeln!(
                                    err,
                                    "trace node {} without {} with {} feasible [{}] best {}",
                                    g.label(v),
                                    s.without_node.len(),
                                    s.with_node.len(),
                                    list(g, &s.feasible),
                                    s.best.len()
                                )
                                .map_err(io)?;
                            }
                        }
                    }
                    dp.into_matching()
                }
                Algo::Greedy => {
                    let (m, tr) = solve_greedy(g);
                    if trace {
                        for (i, r) in tr.rounds.iter().enumerate() {
                            let removed: Vec<String> = r
                                .removed
                                .iter()
                                .map(|&(e, c)| format!("{}:{c}", label_pair(g, e)))
                                .collect();
                            writeln!(
                                err,
                                "trace round {} chose {} count {} removed [{}]",
                                i + 1,
                                label_pair(g, r.chosen),
                                r.chosen_count,
                                removed.join(",")
                            )
                            .map_err(io)?;
                        }
                    }
                    m
                }
                Algo::Exact => solve_exact(g, budget).map_err(|e| precondition(e.to_string()))?,
            };
            let body = format!("{}size {}\n", format::emit_matching(g, &m), m.len());
            match out_file {
                Some(p) => {
                    write_file(&p, &body)?;
                    writeln!(out, "size {}", m.len()).map_err(io)?;
                }
                None => out.write_all(body.as_bytes()).map_err(io)?,
            }
        }
        Command::Verify {
            input,
            matching,
            maximal,
        } => {
            let g = parsed(&input, format::parse_tg(&read(&input)?))?.graph;
            let m = parsed(&matching, format::parse_matching(&read(&matching)?, &g))?;
            let check = is_timed_matching(&g, &m).map_err(|e| invalid(format!("{e:?}")))?;
            let mut ok = true;
            let mut line = match check {
                MatchingCheck::Valid => "matching: yes".to_string(),
                MatchingCheck::Overlap(a, b) => {
                    ok = false;
                    format!("matching: no ({} overlaps {})", label_pair(&g, a), label_pair(&g, b))
                }
            };
            if maximal && ok {
                match is_maximal(&g, &m).map_err(|e| invalid(format!("{e:?}")))? {
                    Maximality::Maximal => line.push_str(", maximal: yes"),
                    Maximality::Addable(e) => {
                        ok = false;
                        line.push_str(&format!(", maximal: no ({} can be added)", label_pair(&g, e)));
                    }
                }
            }
            writeln!(out, "{line}").map_err(io)?;
            if !ok {
                return Err(invalid("verification failed"));
            }
        }
        Command::Stats { input, csv } => {
            let g = parsed(&input, format::parse_tg(&read(&input)?))?.graph;
            let s = stats(&g);
            let total: usize = s.overlap_counts.iter().sum();
            if csv {
                writeln!(out, "nodes,edges,lifetime,max_degree,overlap_total,mean_overlap,greedy_bound")
                    .map_err(io)?;
                writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    s.node_count, s.edge_count, s.lifetime, s.max_degree, total, s.mean_overlap, s.greedy_lower_bound
                )
                .map_err(io)?;
            } else {
                writeln!(out, "nodes {}", s.node_count).map_err(io)?;
                writeln!(out, "edges {}", s.edge_count).map_err(io)?;
                writeln!(out, "lifetime {}", s.lifetime).map_err(io)?;
                writeln!(out, "max-degree {}", s.max_degree).map_err(io)?;
                for e in g.edge_ids() {
                    let (u, v) = g.edge_labels(e);
                    writeln!(out, "overlap {u} {v} {}", s.overlap_counts[e.0]).map_err(io)?;
                }
                writeln!(out, "mean-overlap {}", s.mean_overlap).map_err(io)?;
                writeln!(out, "greedy-bound {}", s.greedy_lower_bound).map_err(io)?;
            }
        }
        Command::Reduce {
            kind,
            input,
            out: out_file,
            map,
        } => {
            let text = read(&input)?;
            let (g, mapping, target) = match kind {
                Kind::Rainbow => {
                    let p = parsed(&input, format::parse_path(&text))?;
                    let (g, map) = from_rainbow_path(&p);
                    (g, map, None)
                }
                Kind::Sat2p2n => {
                    let f = parsed(&input, format::parse_cnf(&text))?;
                    let (g, map, t) = from_2p2n3sat(&f).map_err(|e| precondition(e.to_string()))?;
                    (g, map, Some(t))
                }
                Kind::Maxis => {
                    let lg = parsed(&input, format::parse_lg(&text))?;
                    let (g, map) = from_max_is(&lg);
                    (g, map, None)
                }
            };
            write_file(&out_file, &format::emit_tg(&g, None))?;
            write_file(&map, &format::emit_mapping(&mapping))?;
            writeln!(out, "nodes {}", g.node_count()).map_err(io)?;
            writeln!(out, "edges {}", g.edge_count()).map_err(io)?;
            if let Some(t) = target {
                writeln!(out, "target {t}").map_err(io)?;
            }
        }
        Command::Extract { kind, matching, map } => {
            let mapping = parsed(&map, format::parse_mapping(&read(&map)?))?;
            if mapping.kind() != ReductionKind::from(kind) {
                return Err(invalid(format!(
                    "{} holds a {} mapping, not {}",
                    map.display(),
                    mapping.kind(),
                    ReductionKind::from(kind)
                )));
            }
            let m = parsed(
                &matching,
                format::parse_matching_with(&read(&matching)?, |a, b| mapping.edge_by_endpoints(a, b)),
            )?;
            let join = |xs: &[usize]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
            match kind {
                Kind::Rainbow => {
                    let edges = extract_rainbow(&m, &mapping);
                    writeln!(out, "path-edges {}", join(&edges)).map_err(io)?;
                    writeln!(out, "size {}", edges.len()).map_err(io)?;
                }
                Kind::Maxis => {
                    let nodes = extract_independent_set(&m, &mapping);
                    writeln!(out, "nodes {}", join(&nodes)).map_err(io)?;
                    writeln!(out, "size {}", nodes.len()).map_err(io)?;
                }
                Kind::Sat2p2n => match extract_assignment(&m, &mapping) {
                    AssignmentExtraction::Complete(values) => {
                        let lits: Vec<String> = values
                            .iter()
                            .enumerate()
                            .map(|(i, &b)| if b { format!("{}", i + 1) } else { format!("-{}", i + 1) })
                            .collect();
                        writeln!(out, "assignment {}", lits.join(" ")).map_err(io)?;
                    }
                    AssignmentExtraction::Incomplete => {
                        writeln!(out, "assignment none (matching is below the target size)").map_err(io)?;
                    }
                },
            }
        }
        Command::Gen {
            kind,
            seed,
            out: out_file,
        } => {
            let seed = match seed {
                Some(s) => s,
                None => std::env::var(SEED_ENV)
                    .map_err(|_| usage(format!("--seed is required unless {SEED_ENV} is set")))?
                    .parse()
                    .map_err(|_| usage(format!("{SEED_ENV} is not a 64-bit seed")))?,
            };
            let bad = |e: gen::InfeasibleParams| usage(e.to_string());
            let text = match kind {
                GenKind::RandomGraph {
                    n,
                    m,
                    lifetime,
                    max_intervals,
                } => format::emit_tg(&gen::random_graph(n, m, lifetime, max_intervals, seed).map_err(bad)?, None),
                GenKind::RandomTree { n, lifetime } => {
                    let inst = gen::random_tree(n, lifetime, seed).map_err(bad)?;
                    format::emit_tg(&inst.graph, inst.root.as_deref())
                }
                GenKind::ColouredPath { n, c } => format::emit_path(&gen::coloured_path(n, c, seed).map_err(bad)?),
                GenKind::Formula2p2n { m } => format::emit_cnf(&gen::formula_2p2n(m, seed).map_err(bad)?),
                GenKind::LabelledGraph { n, p } => format::emit_lg(&gen::labelled_graph(n, p, seed).map_err(bad)?),
            };
            match out_file {
                Some(p) => write_file(&p, &text)?,
                None => out.write_all(text.as_bytes()).map_err(io)?,
            }
        }
    }
    Ok(())
}
