//! Witness extraction that mirrors the degree-threshold argument.
//!
//! `extract_witness` walks a red/blue coloring of a host graph with
//! minimum degree at or above the threshold and produces a red clique or a
//! blue path by following the constructive cases: a red-dense vertex pulls
//! the problem into its red neighborhood with the clique target lowered by
//! one, and the red-sparse case assembles a blue path inside a large
//! red-independent set. Every step is checked as it is taken; a step whose
//! entry conditions do not hold is skipped rather than trusted, and if all
//! cases fall through, the original coloring is searched directly. Only
//! when that, too, comes up empty does the run end in a `FalsifiedReport`,
//! never a silent fallback.

use std::fmt;

use crate::arrowing::{check_coloring, TwoColoring, Witness};
use crate::error::{Error, Result};
use crate::thresholds::{k_of, GoodnessParams};

mod diagnostics;
mod sweep;

pub use diagnostics::{case2_diagnostics, Case2Report, ChainLink, ChainVerdict};
pub use sweep::{
    sweep_verify, threshold_tightness_scan, InstanceRecord, SweepMode, SweepSummary,
    TightnessReport,
};

/// Independent sets examined per level before the scan gives up.
const CLAIM_SCAN_CAP: usize = 10_000;

/// Everything needed to reproduce a falsifying instance: the parameters,
/// the host graph, and the coloring that defeated every proof case.
#[derive(Debug, Clone)]
pub struct FalsifiedReport {
    pub params: GoodnessParams,
    pub graph6: String,
    pub min_degree: u64,
    pub blue_edges: Vec<(usize, usize)>,
    pub detail: String,
}

impl fmt::Display for FalsifiedReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "r = {}, t = {}, n = {}, min degree {} (threshold {}), graph {}, {} blue edges: {}",
            self.params.r,
            self.params.t,
            self.params.n,
            self.min_degree,
            self.params.degree_threshold(),
            self.graph6,
            self.blue_edges.len(),
            self.detail
        )
    }
}

/// One step of the extraction, in the order taken. Labels are those of
/// the original host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    /// The two-clique base found a red edge; with the seed it closes a
    /// red clique.
    RedEdgeAtBase { edge: (usize, usize) },
    /// The two-clique base saw an all-blue graph and took the long path
    /// its degree bound guarantees.
    AllBluePath,
    /// A red-dense pivot pulled the search into its red neighborhood of
    /// `order` vertices; `x` and `k` are the parameters of that level.
    Descend { pivot: usize, order: usize, x: u64, k: u64 },
    /// A blue path surfaced inside a red-independent set.
    BluePathInIndependentSet { set: Vec<usize> },
    /// Direct search settled a level after the structured cases passed.
    ExactAtLevel { target: usize },
    /// Every structured case fell through; the original coloring was
    /// checked directly.
    TopLevelFallback,
}

/// Record of which cases fired, plus the deepest recursion reached.
#[derive(Clone, Debug, Default)]
pub struct Trace {
    pub steps: Vec<Step>,
    pub max_depth: usize,
}

/// Extract a red clique on `r` vertices or a blue path on `t` vertices
/// from a coloring whose host meets the degree threshold.
pub fn extract_witness(coloring: &TwoColoring, r: usize, t: usize) -> Result<Witness> {
    extract_witness_traced(coloring, r, t).map(|(w, _)| w)
}

/// Same as `extract_witness`, also returning the trace of cases taken.
pub fn extract_witness_traced(
    coloring: &TwoColoring,
    r: usize,
    t: usize,
) -> Result<(Witness, Trace)> {
    let n = coloring.host().n();
    let params = GoodnessParams::new(r as u64, t as u64, n as u64)?;
    let regime_floor = (t as u64).saturating_sub(3).max(1);
    if params.k < regime_floor {
        return Err(Error::Input(format!(
            "window position k = {} is below max(1, t - 3) = {regime_floor}; \
             extraction covers only the lower bands of the window",
            params.k
        )));
    }
    let delta = coloring.host().min_degree().unwrap_or(0) as u64;
    let threshold = params.degree_threshold();
    if delta < threshold {
        return Err(Error::Input(format!(
            "min degree {delta} is below the threshold {threshold} \
             for r = {r}, t = {t}, n = {n}"
        )));
    }

    let mut trace = Trace::default();
    let map: Vec<usize> = (0..n).collect();
    let mut seed = Vec::new();
    if let Some(w) = extract_level(coloring, r, t, &map, &mut seed, &mut trace) {
        return Ok((w, trace));
    }
    trace.steps.push(Step::TopLevelFallback);
    match check_coloring(coloring, r, t) {
        Some(w) => Ok((w, trace)),
        None => Err(Error::TheoremFalsified(Box::new(FalsifiedReport {
            params,
            graph6: coloring.host().to_graph6(),
            min_degree: delta,
            blue_edges: coloring.blue_edges(),
            detail: "no red clique and no blue path exist in a coloring whose host \
                     meets the degree threshold"
                .into(),
        }))),
    }
}

fn red_witness(seed: &[usize], rest: &[usize]) -> Witness {
    let mut all: Vec<usize> = seed.iter().chain(rest.iter()).copied().collect();
    all.sort_unstable();
    Witness::RedClique(all)
}

/// One recursion level. `map` sends level labels to original labels;
/// `seed` holds pivots (original labels) that are red-adjacent to every
/// vertex of the current host and pairwise red-adjacent. Returns a witness
/// in original labels, or `None` if the level cannot be settled.
fn extract_level(
    c: &TwoColoring,
    r_cur: usize,
    t: usize,
    map: &[usize],
    seed: &mut Vec<usize>,
    trace: &mut Trace,
) -> Option<Witness> {
    trace.max_depth = trace.max_depth.max(seed.len());
    let n = c.host().n();
    let red = c.red();

    if r_cur == 2 {
        if let Some(&(u, v)) = red.edges().first() {
            let edge = (map[u], map[v]);
            trace.steps.push(Step::RedEdgeAtBase { edge });
            return Some(red_witness(seed, &[edge.0, edge.1]));
        }
        // Everything is blue, so the long-path degree bound applies to the
        // host itself whenever this level sits inside a valid window.
        if let Ok(p) = GoodnessParams::new(2, t as u64, n as u64) {
            if let Ok(path) = c.host().min_degree_long_path(p.k as usize) {
                if path.len() >= t {
                    trace.steps.push(Step::AllBluePath);
                    return Some(Witness::BluePath(
                        path[..t].iter().map(|&v| map[v]).collect(),
                    ));
                }
            }
        }
        if let Some(path) = c.blue().has_path(t) {
            trace.steps.push(Step::ExactAtLevel { target: r_cur });
            return Some(Witness::BluePath(path.into_iter().map(|v| map[v]).collect()));
        }
        return None;
    }

    let x = (n as u64).div_ceil(r_cur as u64 - 1);
    let k_cur = k_of(r_cur as u64, t as u64, n as u64).ok();

    // Dense case: a vertex whose red degree beats n - x pulls the problem
    // into its red neighborhood with the clique target lowered by one. The
    // descent is taken only when the parameters it claims actually hold
    // there; each qualifying pivot is tried in turn.
    for u in 0..n {
        if (red.degree(u) as u64) + x < n as u64 + 1 {
            continue;
        }
        let nbrs = red.neighbors(u);
        let order = nbrs.len();
        let Ok(next) = GoodnessParams::new(r_cur as u64 - 1, t as u64, order as u64) else {
            continue;
        };
        if next.x < x || k_cur.is_some_and(|k| next.k < k) {
            continue;
        }
        let (sub, sub_map) = c.induced(nbrs).expect("neighborhood fits inside the host");
        if (sub.host().min_degree().unwrap_or(0) as u64) < next.degree_threshold() {
            continue;
        }
        trace.steps.push(Step::Descend {
            pivot: map[u],
            order,
            x: next.x,
            k: next.k,
        });
        seed.push(map[u]);
        let new_map: Vec<usize> = sub_map.iter().map(|&i| map[i]).collect();
        if let Some(w) = extract_level(&sub, r_cur - 1, t, &new_map, seed, trace) {
            return Some(w);
        }
        seed.pop();
    }

    // Sparse case: every red degree is at most n - x, and a red-independent
    // set of x vertices must carry a blue path.
    let mut found: Option<Witness> = None;
    if x as usize <= n {
        red.for_each_independent_set(x as usize, CLAIM_SCAN_CAP, &mut |w| {
            let (bw, wmap) = c.blue().induced(w).expect("set fits inside the host");
            if let Some(p) = bw.has_path(t) {
                let set: Vec<usize> = w.iter().map(|v| map[v]).collect();
                trace.steps.push(Step::BluePathInIndependentSet { set });
                found = Some(Witness::BluePath(
                    p.into_iter().map(|i| map[wmap[i]]).collect(),
                ));
                return false;
            }
            true
        });
    }
    if found.is_some() {
        return found;
    }

    // Structured cases exhausted; settle the level directly.
    if let Some(cl) = red.find_clique(r_cur) {
        trace.steps.push(Step::ExactAtLevel { target: r_cur });
        let global: Vec<usize> = cl.iter().map(|v| map[v]).collect();
        return Some(red_witness(seed, &global));
    }
    if let Some(path) = c.blue().has_path(t) {
        trace.steps.push(Step::ExactAtLevel { target: r_cur });
        return Some(Witness::BluePath(path.into_iter().map(|v| map[v]).collect()));
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrowing::verify_witness;
    use crate::constructions::build_extremal;
    use crate::graph::Graph;
    use crate::sampling;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Extremal host for (r, t, k) plus a red perfect matching between the
    /// blue cliques of each part. Every degree rises by one, so the result
    /// meets the threshold exactly while the extremal coloring's blue
    /// edges stay intact.
    fn extremal_plus_red_matchings(r: u64, t: u64, k: u64) -> TwoColoring {
        let e = build_extremal(r, t, k).unwrap();
        let mut host = e.graph.clone();
        let part_size = ((t - 1) * (k + 1)) as usize;
        let clique = (t - 1) as usize;
        for p in 0..(r - 1) as usize {
            let base = p * part_size;
            for i in 0..clique {
                host.add_edge(base + i, base + clique + i);
            }
        }
        TwoColoring::new(host, &e.coloring.blue_edges()).unwrap()
    }

    #[test]
    fn red_dense_instance_descends_once_to_a_red_triangle() {
        let c = extremal_plus_red_matchings(3, 3, 1);
        assert_eq!(c.host().min_degree(), Some(6));
        let (w, trace) = extract_witness_traced(&c, 3, 3).unwrap();
        assert_eq!(w, Witness::RedClique(vec![0, 2, 4]));
        verify_witness(&c, 3, 3, &w).unwrap();
        assert_eq!(trace.max_depth, 1);
        assert!(matches!(trace.steps[0], Step::Descend { pivot: 0, .. }));
        assert!(matches!(trace.steps[1], Step::RedEdgeAtBase { edge: (2, 4) }));
    }

    #[test]
    fn two_descents_reach_the_base_when_the_target_is_four() {
        let c = extremal_plus_red_matchings(4, 3, 1);
        assert_eq!(c.host().n(), 12);
        assert_eq!(c.host().min_degree(), Some(10));
        let (w, trace) = extract_witness_traced(&c, 4, 3).unwrap();
        assert_eq!(w, Witness::RedClique(vec![0, 2, 4, 6]));
        verify_witness(&c, 4, 3, &w).unwrap();
        assert_eq!(trace.max_depth, 2);
    }

    #[test]
    fn all_blue_complete_graph_takes_the_long_path_at_the_base() {
        let c = TwoColoring::all_blue(Graph::complete(9).unwrap());
        let (w, trace) = extract_witness_traced(&c, 2, 5).unwrap();
        assert_eq!(w, Witness::BluePath(vec![0, 1, 2, 3, 4]));
        assert_eq!(trace.steps, vec![Step::AllBluePath]);
        verify_witness(&c, 2, 5, &w).unwrap();
    }

    #[test]
    fn all_blue_complete_graph_yields_the_path_through_the_sparse_case() {
        let c = TwoColoring::all_blue(Graph::complete(5).unwrap());
        let (w, trace) = extract_witness_traced(&c, 3, 3).unwrap();
        assert_eq!(w, Witness::BluePath(vec![0, 1, 2]));
        assert_eq!(
            trace.steps,
            vec![Step::BluePathInIndependentSet {
                set: vec![0, 1, 2]
            }]
        );
        assert_eq!(trace.max_depth, 0);
        verify_witness(&c, 3, 3, &w).unwrap();
    }

    #[test]
    fn degree_below_the_threshold_is_an_input_error() {
        let e = build_extremal(3, 3, 1).unwrap();
        let err = extract_witness(&e.coloring, 3, 3).unwrap_err();
        assert!(matches!(err, Error::Input(_)), "{err}");
        assert!(err.to_string().contains("threshold 6"), "{err}");
    }

    #[test]
    fn upper_window_bands_are_rejected_for_long_paths() {
        // t = 5 needs k >= 2, but n = 5 sits at k = 1.
        let c = TwoColoring::all_blue(Graph::complete(5).unwrap());
        let err = extract_witness(&c, 2, 5).unwrap_err();
        assert!(matches!(err, Error::Input(_)), "{err}");
        assert!(err.to_string().contains("max(1, t - 3)"), "{err}");
    }

    #[test]
    fn orders_below_the_window_are_rejected() {
        let c = TwoColoring::all_red(Graph::complete(3).unwrap());
        let err = extract_witness(&c, 3, 3).unwrap_err();
        assert!(matches!(err, Error::BelowWindow { n: 3, limit: 4, .. }), "{err}");
    }

    #[test]
    fn random_instances_always_yield_verified_witnesses() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xdecade);
        let shapes: &[(usize, usize, &[usize])] = &[
            (2, 3, &[3, 4, 5, 6, 7, 8, 9, 10, 11, 12]),
            (2, 4, &[4, 5, 6, 7, 8, 9, 10, 11, 12]),
            (3, 3, &[5, 6, 7, 8, 9, 10, 11, 12]),
            (3, 4, &[7, 8, 9, 10, 11, 12]),
            (4, 3, &[7, 8, 9, 10, 11, 12]),
        ];
        for trial in 0..150 {
            let (r, t, ns) = shapes[trial % shapes.len()];
            let n = ns[rng.random_range(0..ns.len())];
            let params = GoodnessParams::new(r as u64, t as u64, n as u64).unwrap();
            let thr = params.degree_threshold() as usize;
            let host = if trial % 2 == 0 {
                sampling::near_min_degree(n, thr, &mut rng).unwrap()
            } else {
                let p = ((thr + 1) as f64 / n as f64).clamp(0.3, 0.95);
                sampling::gnp_min_degree(n, p, thr, 100_000, &mut rng).unwrap()
            };
            let blue: Vec<(usize, usize)> = host
                .edges()
                .into_iter()
                .filter(|_| rng.random::<bool>())
                .collect();
            let c = TwoColoring::new(host, &blue).unwrap();
            let (w, trace) = extract_witness_traced(&c, r, t).unwrap();
            verify_witness(&c, r, t, &w).unwrap();
            assert!(trace.max_depth <= r - 2, "depth {} at r = {r}", trace.max_depth);
        }
    }

    #[test]
    fn falsified_report_prints_every_reproduction_field() {
        let report = FalsifiedReport {
            params: GoodnessParams::new(3, 3, 8).unwrap(),
            graph6: "G~~~~{".into(),
            min_degree: 6,
            blue_edges: vec![(0, 1)],
            detail: "example".into(),
        };
        let s = report.to_string();
        assert!(s.contains("r = 3"), "{s}");
        assert!(s.contains("threshold 6"), "{s}");
        assert!(s.contains("G~~~~{"), "{s}");
        assert!(s.contains("1 blue edges"), "{s}");
    }
}
