//! Depth-first search for a good coloring, with three prunes.
//!
//! Edges are assigned in a fixed order, blue tried before red. The search
//! keeps the invariant that the decided blue graph never contains a
//! t-vertex path, so the moment the undecided-plus-red remainder cannot
//! hold an r-clique, painting every undecided edge red yields a good
//! coloring and the verdict is settled. Dually, an edge whose red
//! assignment would complete a red r-clique is forced blue. Exhausting the
//! tree proves arrowing.
//!
//! The parallel mode cuts the tree at a fixed depth into prefix tasks and
//! runs them speculatively on a worker pool, then replays the task results
//! in depth-first order, so verdict, evidence, and node statistics are
//! byte-identical to the sequential search for every worker count. A task
//! whose subtree lies after the first settled outcome is cancelled; its
//! statistics are discarded unread.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

use super::Verdict;

pub const DEFAULT_BUDGET: u64 = 1 << 24;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub prunes: u64,
}

pub(crate) struct Outcome {
    pub verdict: Verdict,
    pub blue: Vec<(usize, usize)>,
    pub stats: SearchStats,
}

struct Dfs<'a> {
    edges: &'a [(usize, usize)],
    r: usize,
    t: usize,
    blue: Graph,
    red: Graph,
    /// Host minus decided blue: the largest red graph this branch can
    /// still reach.
    potential: Graph,
    nodes: u64,
    prunes: u64,
    budget: u64,
    /// Cancellation for speculative tasks: (first settled task index, own
    /// task index). A task later than a settled one can never be read.
    cancel: Option<(&'a AtomicUsize, usize)>,
}

enum Run {
    Found(Vec<(usize, usize)>),
    Exhausted,
    OverBudget,
    Cancelled,
}

impl<'a> Dfs<'a> {
    fn fresh(n: usize, edges: &'a [(usize, usize)], r: usize, t: usize, budget: u64) -> Self {
        let host = Graph::from_edges(n, edges).expect("edges validated by caller");
        Dfs {
            edges,
            r,
            t,
            blue: Graph::new(n).expect("order validated by caller"),
            red: Graph::new(n).expect("order validated by caller"),
            potential: host,
            nodes: 0,
            prunes: 0,
            budget,
            cancel: None,
        }
    }

    /// Would adding blue edge (u, v) create a blue path on t vertices? Any
    /// new path runs through the edge, so the merged blue component must
    /// first reach t vertices.
    fn blue_completes_path(&mut self, u: usize, v: usize) -> bool {
        let all = self.blue.vertices();
        let merged = self.blue.reach(u, all).union(self.blue.reach(v, all));
        if merged.len() < self.t {
            return false;
        }
        self.blue.add_edge(u, v);
        let hit = self.blue.has_path(self.t).is_some();
        self.blue.remove_edge(u, v);
        hit
    }

    /// Would adding red edge (u, v) complete a red r-clique? Only cliques
    /// through both endpoints matter: their common red neighborhood must
    /// hold a red (r-2)-clique.
    fn red_completes_clique(&self, u: usize, v: usize) -> bool {
        if self.r < 2 {
            return false;
        }
        let common = self.red.neighbors(u).intersect(self.red.neighbors(v));
        self.red.has_clique_within(common.mask(), self.r - 2)
    }

    fn run(&mut self, i: usize) -> Run {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Run::OverBudget;
        }
        if let Some((settled, own)) = self.cancel {
            if settled.load(Ordering::Relaxed) < own {
                return Run::Cancelled;
            }
        }
        // No r-clique fits in red-plus-undecided: paint the rest red and
        // the decided blue graph (free of t-paths by invariant) stands as
        // a good coloring.
        if !self.potential.has_clique_within(self.potential.vertices().mask(), self.r) {
            return Run::Found(self.blue.edges());
        }
        if i == self.edges.len() {
            return Run::Exhausted;
        }
        let (u, v) = self.edges[i];
        if self.blue_completes_path(u, v) {
            self.prunes += 1;
        } else {
            self.blue.add_edge(u, v);
            self.potential.remove_edge(u, v);
            match self.run(i + 1) {
                Run::Exhausted => {}
                other => return other,
            }
            self.blue.remove_edge(u, v);
            self.potential.add_edge(u, v);
        }
        if self.red_completes_clique(u, v) {
            self.prunes += 1;
        } else {
            self.red.add_edge(u, v);
            match self.run(i + 1) {
                Run::Exhausted => {}
                other => return other,
            }
            self.red.remove_edge(u, v);
        }
        Run::Exhausted
    }
}

/// One cut point of the sequential tree: the prefix statistics accumulated
/// since the previous seed, plus either a settled good coloring or a
/// subtree to explore.
struct Seed {
    pre_nodes: u64,
    pre_prunes: u64,
    kind: SeedKind,
}

enum SeedKind {
    Evidence(Vec<(usize, usize)>),
    Task { blue: Graph, red: Graph, potential: Graph },
}

struct TaskResult {
    run: Run,
    nodes: u64,
    prunes: u64,
}

pub(crate) fn decide(
    r: usize,
    t: usize,
    budget: u64,
    threads: usize,
    n: usize,
    edges: &[(usize, usize)],
) -> Result<Outcome> {
    if threads <= 1 {
        let mut dfs = Dfs::fresh(n, edges, r, t, budget);
        let run = dfs.run(0);
        let stats = SearchStats { nodes: dfs.nodes, prunes: dfs.prunes };
        return match run {
            Run::Found(blue) => Ok(Outcome { verdict: Verdict::NotArrows, blue, stats }),
            Run::Exhausted => Ok(Outcome { verdict: Verdict::Arrows, blue: Vec::new(), stats }),
            Run::OverBudget => Err(Error::Undecided { nodes: dfs.nodes }),
            Run::Cancelled => unreachable!("sequential search has no cancellation"),
        };
    }

    let depth = ceil_log2(threads).min(edges.len());
    let (seeds, tail) = enumerate_seeds(n, edges, r, t, depth, budget);

    // Workers claim tasks in order; `settled` is the least task index whose
    // subtree produced evidence or ran over budget. Tasks past it are
    // cancelled and never read by the replay below.
    let task_count = seeds.iter().filter(|s| matches!(s.kind, SeedKind::Task { .. })).count();
    let results: Vec<OnceLock<TaskResult>> = (0..task_count).map(|_| OnceLock::new()).collect();
    let next = AtomicUsize::new(0);
    let settled = AtomicUsize::new(usize::MAX);
    let tasks: Vec<&Seed> =
        seeds.iter().filter(|s| matches!(s.kind, SeedKind::Task { .. })).collect();

    std::thread::scope(|scope| {
        for _ in 0..threads.min(task_count) {
            scope.spawn(|| loop {
                let idx = next.fetch_add(1, Ordering::Relaxed);
                if idx >= task_count {
                    break;
                }
                if settled.load(Ordering::Relaxed) < idx {
                    let _ = results[idx].set(TaskResult {
                        run: Run::Cancelled,
                        nodes: 0,
                        prunes: 0,
                    });
                    continue;
                }
                let SeedKind::Task { blue, red, potential } = &tasks[idx].kind else {
                    unreachable!("task list holds only subtree seeds");
                };
                let mut dfs = Dfs {
                    edges,
                    r,
                    t,
                    blue: blue.clone(),
                    red: red.clone(),
                    potential: potential.clone(),
                    nodes: 0,
                    prunes: 0,
                    budget,
                    cancel: Some((&settled, idx)),
                };
                let run = dfs.run(depth);
                if matches!(run, Run::Found(_) | Run::OverBudget) {
                    settled.fetch_min(idx, Ordering::Relaxed);
                }
                let _ = results[idx].set(TaskResult { run, nodes: dfs.nodes, prunes: dfs.prunes });
            });
        }
    });

    // Replay in depth-first order: cumulative statistics match what the
    // sequential search would have seen at the same point.
    let mut stats = SearchStats::default();
    let mut task_idx = 0usize;
    for seed in &seeds {
        stats.nodes += seed.pre_nodes;
        stats.prunes += seed.pre_prunes;
        if stats.nodes > budget {
            return Err(Error::Undecided { nodes: budget + 1 });
        }
        match &seed.kind {
            SeedKind::Evidence(blue) => {
                return Ok(Outcome { verdict: Verdict::NotArrows, blue: blue.clone(), stats });
            }
            SeedKind::Task { .. } => {
                let res = results[task_idx].get().expect("worker pool joined");
                task_idx += 1;
                match &res.run {
                    Run::Cancelled => {
                        unreachable!("replay stops at a settled task before any cancelled one")
                    }
                    Run::OverBudget => return Err(Error::Undecided { nodes: budget + 1 }),
                    Run::Found(blue) => {
                        stats.nodes += res.nodes;
                        stats.prunes += res.prunes;
                        if stats.nodes > budget {
                            return Err(Error::Undecided { nodes: budget + 1 });
                        }
                        return Ok(Outcome {
                            verdict: Verdict::NotArrows,
                            blue: blue.clone(),
                            stats,
                        });
                    }
                    Run::Exhausted => {
                        stats.nodes += res.nodes;
                        stats.prunes += res.prunes;
                        if stats.nodes > budget {
                            return Err(Error::Undecided { nodes: budget + 1 });
                        }
                    }
                }
            }
        }
    }
    // Prefix nodes visited after the last subtree still count.
    stats.nodes += tail.0;
    stats.prunes += tail.1;
    if stats.nodes > budget {
        return Err(Error::Undecided { nodes: budget + 1 });
    }
    Ok(Outcome { verdict: Verdict::Arrows, blue: Vec::new(), stats })
}

/// Walk the sequential tree down to `depth`, emitting subtree seeds at the
/// cut and stopping outright at any prefix node that settles the verdict.
/// The second value carries prefix statistics trailing the final seed.
fn enumerate_seeds(
    n: usize,
    edges: &[(usize, usize)],
    r: usize,
    t: usize,
    depth: usize,
    budget: u64,
) -> (Vec<Seed>, (u64, u64)) {
    let mut dfs = Dfs::fresh(n, edges, r, t, budget);
    let mut seeds = Vec::new();
    let mut pre_nodes = 0u64;
    let mut pre_prunes = 0u64;
    prefix_walk(&mut dfs, 0, depth, &mut seeds, &mut pre_nodes, &mut pre_prunes);
    (seeds, (pre_nodes, pre_prunes))
}

/// Returns true when the enumeration must stop because a prefix node
/// settled the verdict.
fn prefix_walk(
    dfs: &mut Dfs,
    i: usize,
    depth: usize,
    seeds: &mut Vec<Seed>,
    pre_nodes: &mut u64,
    pre_prunes: &mut u64,
) -> bool {
    if i == depth {
        seeds.push(Seed {
            pre_nodes: std::mem::take(pre_nodes),
            pre_prunes: std::mem::take(pre_prunes),
            kind: SeedKind::Task {
                blue: dfs.blue.clone(),
                red: dfs.red.clone(),
                potential: dfs.potential.clone(),
            },
        });
        return false;
    }
    *pre_nodes += 1;
    if !dfs.potential.has_clique_within(dfs.potential.vertices().mask(), dfs.r) {
        seeds.push(Seed {
            pre_nodes: std::mem::take(pre_nodes),
            pre_prunes: std::mem::take(pre_prunes),
            kind: SeedKind::Evidence(dfs.blue.edges()),
        });
        return true;
    }
    debug_assert!(i < dfs.edges.len(), "cut depth never exceeds the edge count");
    let (u, v) = dfs.edges[i];
    if dfs.blue_completes_path(u, v) {
        *pre_prunes += 1;
    } else {
        dfs.blue.add_edge(u, v);
        dfs.potential.remove_edge(u, v);
        let stop = prefix_walk(dfs, i + 1, depth, seeds, pre_nodes, pre_prunes);
        if stop {
            return true;
        }
        dfs.blue.remove_edge(u, v);
        dfs.potential.add_edge(u, v);
    }
    if dfs.red_completes_clique(u, v) {
        *pre_prunes += 1;
    } else {
        dfs.red.add_edge(u, v);
        let stop = prefix_walk(dfs, i + 1, depth, seeds, pre_nodes, pre_prunes);
        if stop {
            return true;
        }
        dfs.red.remove_edge(u, v);
    }
    false
}

fn ceil_log2(x: usize) -> usize {
    debug_assert!(x >= 2);
    (usize::BITS - (x - 1).leading_zeros()) as usize
}
