//! Property suites for the supporting structural lemmas.
//!
//! Each suite sweeps a graph population against one lemma and returns a
//! report instead of panicking, so callers can print counterexamples.
//! The exhaustive suites run over the isomorphism census; every property
//! checked here is isomorphism invariant, so one representative per class
//! suffices. Witnesses returned by the library (paths, cycles, colorings)
//! are re-verified here by direct adjacency checks that share no code with
//! the search routines.

use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{graphs_up_to_iso, Graph};
use crate::sampling;

/// The four suites, named as the command line names them.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LemmaId {
    PathLength,
    ErdosGallai,
    Partition,
    Brooks,
}

impl LemmaId {
    pub fn as_str(self) -> &'static str {
        match self {
            LemmaId::PathLength => "path-length",
            LemmaId::ErdosGallai => "erdos-gallai",
            LemmaId::Partition => "partition",
            LemmaId::Brooks => "brooks",
        }
    }
}

impl FromStr for LemmaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "path-length" => Ok(LemmaId::PathLength),
            "erdos-gallai" => Ok(LemmaId::ErdosGallai),
            "partition" => Ok(LemmaId::Partition),
            "brooks" => Ok(LemmaId::Brooks),
            other => Err(Error::Input(format!(
                "unknown lemma suite {other:?}; expected one of \
                 path-length, erdos-gallai, partition, brooks"
            ))),
        }
    }
}

/// Outcome of one suite run.
#[derive(Clone, Debug, serde::Serialize)]
pub struct SuiteReport {
    pub lemma: &'static str,
    /// Graphs that met the precondition and were checked.
    pub checked: u64,
    /// Graphs enumerated but outside the precondition.
    pub skipped: u64,
    /// graph6 encodings of graphs where the conclusion failed.
    pub counterexamples: Vec<String>,
    pub detail: String,
}

impl SuiteReport {
    pub fn pass(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

fn is_genuine_path(g: &Graph, p: &[usize]) -> bool {
    let mut seen = 0u64;
    for (i, &v) in p.iter().enumerate() {
        if v >= g.n() || seen & (1 << v) != 0 {
            return false;
        }
        seen |= 1 << v;
        if i > 0 && !g.has_edge(p[i - 1], v) {
            return false;
        }
    }
    true
}

fn is_genuine_cycle_over(g: &Graph, cycle: &[usize], comp: &[usize]) -> bool {
    if cycle.len() != comp.len() {
        return false;
    }
    if comp.len() == 1 {
        return cycle == comp;
    }
    let mut sorted = cycle.to_vec();
    sorted.sort_unstable();
    if sorted != comp {
        return false;
    }
    cycle
        .iter()
        .zip(cycle.iter().cycle().skip(1))
        .all(|(&u, &v)| g.has_edge(u, v))
}

/// Min degree at least floor(n/(k+1)) forces a path on ceil(n/k) vertices.
/// Exhaustive over the census for every order up to `max_n`.
pub fn path_length_suite(max_n: usize, k: usize) -> Result<SuiteReport> {
    if k == 0 {
        return Err(Error::Input("path-length suite requires k >= 1".into()));
    }
    let mut checked = 0u64;
    let mut skipped = 0u64;
    let mut counterexamples = Vec::new();
    for n in 1..=max_n {
        let need_delta = n / (k + 1);
        let target = n.div_ceil(k);
        graphs_up_to_iso(n, &mut |g| {
            if g.min_degree().unwrap() < need_delta {
                skipped += 1;
                return;
            }
            checked += 1;
            let ok = match g.min_degree_long_path(k) {
                Ok(p) => p.len() >= target && is_genuine_path(g, &p),
                Err(_) => false,
            };
            if !ok {
                counterexamples.push(g.to_graph6());
            }
        })?;
    }
    Ok(SuiteReport {
        lemma: LemmaId::PathLength.as_str(),
        checked,
        skipped,
        counterexamples,
        detail: format!("n <= {max_n}, k = {k}"),
    })
}

/// A connected graph on at least 2*delta + 1 vertices has a path on that
/// many vertices. Exhaustive over the census for every order up to `max_n`.
pub fn erdos_gallai_suite(max_n: usize) -> Result<SuiteReport> {
    let mut checked = 0u64;
    let mut skipped = 0u64;
    let mut counterexamples = Vec::new();
    for n in 1..=max_n {
        graphs_up_to_iso(n, &mut |g| {
            let delta = g.min_degree().unwrap();
            if !g.is_connected() || n < 2 * delta + 1 {
                skipped += 1;
                return;
            }
            checked += 1;
            let ok = match g.erdos_gallai_path() {
                Ok(p) => p.len() >= 2 * delta + 1 && is_genuine_path(g, &p),
                Err(_) => false,
            };
            if !ok {
                counterexamples.push(g.to_graph6());
            }
        })?;
    }
    Ok(SuiteReport {
        lemma: LemmaId::ErdosGallai.as_str(),
        checked,
        skipped,
        counterexamples,
        detail: format!("n <= {max_n}"),
    })
}

/// A graph with no path on `d` vertices and min degree at least floor(d/2)
/// splits into components of bounded size, each with a Hamiltonian cycle.
/// Exhaustive over the census for every order up to `max_n`.
pub fn partition_suite(max_n: usize, d: usize) -> Result<SuiteReport> {
    if d < 2 {
        return Err(Error::Input("partition suite requires d >= 2".into()));
    }
    let floor_half = d / 2;
    let mut checked = 0u64;
    let mut skipped = 0u64;
    let mut counterexamples = Vec::new();
    for n in 1..=max_n {
        graphs_up_to_iso(n, &mut |g| {
            if g.min_degree().unwrap() < floor_half || g.has_path(d).is_some() {
                skipped += 1;
                return;
            }
            checked += 1;
            let ok = match g.path_free_partition(d) {
                Ok(parts) => {
                    let mut covered: Vec<usize> = Vec::new();
                    let mut good = true;
                    for part in &parts {
                        let comp = part.component.to_vec();
                        let size = comp.len();
                        good &= size >= floor_half + 1 && size <= d - 1;
                        good &= is_genuine_cycle_over(g, &part.hamiltonian_cycle, &comp);
                        covered.extend(comp);
                    }
                    covered.sort_unstable();
                    good && covered == (0..n).collect::<Vec<_>>()
                }
                Err(_) => false,
            };
            if !ok {
                counterexamples.push(g.to_graph6());
            }
        })?;
    }
    Ok(SuiteReport {
        lemma: LemmaId::Partition.as_str(),
        checked,
        skipped,
        counterexamples,
        detail: format!("n <= {max_n}, d = {d}"),
    })
}

fn is_complete(g: &Graph) -> bool {
    g.edge_count() == g.n() * g.n().saturating_sub(1) / 2
}

fn is_odd_cycle(g: &Graph) -> bool {
    g.n() >= 3 && g.n() % 2 == 1 && g.is_connected() && (0..g.n()).all(|v| g.degree(v) == 2)
}

/// Coloring stays within the max degree on random connected graphs outside
/// the two exceptional families (complete graphs and odd cycles).
pub fn brooks_suite(trials: u64, max_n: usize, seed: u64) -> Result<SuiteReport> {
    if max_n < 4 {
        return Err(Error::Input("brooks suite requires max_n >= 4".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checked = 0u64;
    let mut skipped = 0u64;
    let mut counterexamples = Vec::new();
    let attempt_cap = trials.saturating_mul(100).max(1_000);
    let mut attempts = 0u64;
    while checked < trials {
        attempts += 1;
        if attempts > attempt_cap {
            return Err(Error::Input(format!(
                "sampler kept hitting excluded families; gave up after {attempt_cap} attempts"
            )));
        }
        let n = rng.random_range(4..=max_n);
        let p = rng.random_range(0.25..0.75);
        let g = sampling::connected_gnp(n, p, 10_000, &mut rng)?;
        if is_complete(&g) || is_odd_cycle(&g) {
            skipped += 1;
            continue;
        }
        checked += 1;
        let ok = match g.brooks_coloring() {
            Ok(c) => c.num_colors <= g.max_degree().unwrap() && c.is_valid_for(&g),
            Err(_) => false,
        };
        if !ok {
            counterexamples.push(g.to_graph6());
        }
    }
    Ok(SuiteReport {
        lemma: LemmaId::Brooks.as_str(),
        checked,
        skipped,
        counterexamples,
        detail: format!("{trials} trials, n <= {max_n}, seed {seed}"),
    })
}

/// Run one suite with its conventional parameters: census bound `max_n`
/// for the exhaustive suites, `trials`/`seed` for the randomized one, and
/// the lemma specific knob (`k` or `d`) where one exists.
pub fn run_suite(
    id: LemmaId,
    max_n: usize,
    k: usize,
    d: usize,
    trials: u64,
    seed: u64,
) -> Result<SuiteReport> {
    match id {
        LemmaId::PathLength => path_length_suite(max_n, k),
        LemmaId::ErdosGallai => erdos_gallai_suite(max_n),
        LemmaId::Partition => partition_suite(max_n, d),
        LemmaId::Brooks => brooks_suite(trials, max_n, seed),
    }
}
