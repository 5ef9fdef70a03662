//! Population checks: decide arrowing across whole graph families.
//!
//! A sweep fixes the parameters, walks every qualifying host (exhaustively
//! over the census, or by seeded sampling), decides each one, and reports
//! any host that fails to arrow as a certificate that reproduces the find.
//! Instances are independent, so they are decided across worker threads;
//! records are emitted in generation order either way, and every recorded
//! number is a deterministic search count, so a fixed seed gives identical
//! output at any thread count.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arrowing::{arrows_with, check_coloring, Certificate, SearchConfig, Verdict};
use crate::constructions::{build_extremal, validate_extremal};
use crate::error::{Error, Result};
use crate::graph::{graphs_up_to_iso, Graph};
use crate::sampling;
use crate::thresholds::GoodnessParams;

/// Exhaustive sweeps stop here; the census outgrows a desk beyond this.
pub const MAX_EXHAUSTIVE_SWEEP: u64 = 7;

/// How the hosts of a sweep are produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepMode {
    /// Every graph of the given order with min degree at the threshold,
    /// one per isomorphism class.
    Exhaustive,
    /// `count` seeded samples, alternating between rejection sampling and
    /// a sampler that hugs the degree bound.
    Sample { count: u64, seed: u64 },
}

/// One decided host, in generation order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InstanceRecord {
    pub index: u64,
    pub graph6: String,
    pub verdict: Verdict,
    /// Blue edges of a good coloring when the host does not arrow.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub evidence: Option<Vec<(usize, usize)>>,
    pub nodes: u64,
    pub prunes: u64,
}

/// Aggregate outcome of a sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub r: u64,
    pub t: u64,
    pub k: u64,
    pub n: u64,
    pub threshold: u64,
    pub mode: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub count: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Hosts decided.
    pub checked: u64,
    /// Census entries below the degree bound (exhaustive mode only).
    pub skipped: u64,
    /// Hosts that arrow.
    pub arrows: u64,
    pub total_nodes: u64,
    pub counterexamples: Vec<Certificate>,
}

impl SweepSummary {
    pub fn pass(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

fn sample_edge_probability(n: u64, threshold: u64) -> f64 {
    ((threshold + 1) as f64 / n as f64).clamp(0.05, 0.95)
}

/// Decide arrowing for every qualifying host at the given parameters.
/// `k` must match the window position of `n` and is taken as a cross-check.
/// Each record is handed to `sink` as it is sealed, in generation order.
pub fn sweep_verify(
    r: u64,
    t: u64,
    k: u64,
    n: u64,
    mode: SweepMode,
    config: &SearchConfig,
    sink: &mut dyn FnMut(&InstanceRecord),
) -> Result<SweepSummary> {
    let params = GoodnessParams::new(r, t, n)?;
    if params.k != k {
        return Err(Error::Input(format!(
            "k = {k} does not match the window position {} of n = {n} for r = {r}, t = {t}",
            params.k
        )));
    }
    let threshold = params.degree_threshold();

    let mut skipped = 0u64;
    let hosts: Vec<Graph> = match mode {
        SweepMode::Exhaustive => {
            if n > MAX_EXHAUSTIVE_SWEEP {
                return Err(Error::Capacity {
                    what: "exhaustive sweep order",
                    limit: MAX_EXHAUSTIVE_SWEEP as usize,
                    got: n as usize,
                });
            }
            let mut hosts = Vec::new();
            graphs_up_to_iso(n as usize, &mut |g| {
                if (g.min_degree().unwrap_or(0) as u64) >= threshold {
                    hosts.push(g.clone());
                } else {
                    skipped += 1;
                }
            })?;
            hosts
        }
        SweepMode::Sample { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let p = sample_edge_probability(n, threshold);
            let mut hosts = Vec::with_capacity(count as usize);
            for i in 0..count {
                let g = if i % 2 == 0 {
                    sampling::gnp_min_degree(n as usize, p, threshold as usize, 1_000_000, &mut rng)?
                } else {
                    sampling::near_min_degree(n as usize, threshold as usize, &mut rng)?
                };
                hosts.push(g);
            }
            hosts
        }
    };

    let per_instance = SearchConfig {
        budget: config.budget,
        threads: 1,
    };
    let certs = decide_all(&hosts, r as usize, t as usize, &per_instance, config.threads);

    let mut summary = SweepSummary {
        r,
        t,
        k,
        n,
        threshold,
        mode: match mode {
            SweepMode::Exhaustive => "exhaustive".into(),
            SweepMode::Sample { .. } => "sample".into(),
        },
        count: match mode {
            SweepMode::Exhaustive => None,
            SweepMode::Sample { count, .. } => Some(count),
        },
        seed: match mode {
            SweepMode::Exhaustive => None,
            SweepMode::Sample { seed, .. } => Some(seed),
        },
        checked: 0,
        skipped,
        arrows: 0,
        total_nodes: 0,
        counterexamples: Vec::new(),
    };
    for (i, cert) in certs.into_iter().enumerate() {
        let cert = cert?;
        let record = InstanceRecord {
            index: i as u64,
            graph6: cert.graph6.clone(),
            verdict: cert.verdict,
            evidence: match cert.verdict {
                Verdict::Arrows => None,
                Verdict::NotArrows => Some(cert.blue_edges.clone()),
            },
            nodes: cert.stats.nodes,
            prunes: cert.stats.prunes,
        };
        summary.checked += 1;
        summary.total_nodes += record.nodes;
        match cert.verdict {
            Verdict::Arrows => summary.arrows += 1,
            Verdict::NotArrows => summary.counterexamples.push(cert),
        }
        sink(&record);
    }
    Ok(summary)
}

/// Decide every host, farming instances out to `threads` workers. Results
/// land in input order no matter which worker finishes first.
fn decide_all(
    hosts: &[Graph],
    r: usize,
    t: usize,
    per_instance: &SearchConfig,
    threads: usize,
) -> Vec<Result<Certificate>> {
    if threads <= 1 || hosts.len() <= 1 {
        return hosts
            .iter()
            .map(|g| arrows_with(g, r, t, per_instance))
            .collect();
    }
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<Result<Certificate>>>> =
        Mutex::new((0..hosts.len()).map(|_| None).collect());
    std::thread::scope(|scope| {
        for _ in 0..threads.min(hosts.len()) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= hosts.len() {
                    break;
                }
                let res = arrows_with(&hosts[i], r, t, per_instance);
                slots.lock().unwrap()[i] = Some(res);
            });
        }
    });
    slots
        .into_inner()
        .unwrap()
        .into_iter()
        .map(|slot| slot.expect("every slot was claimed"))
        .collect()
}

/// Outcome of checking that the threshold cannot be lowered: the extremal
/// host sits one below it and its coloring defeats both targets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TightnessReport {
    pub r: u64,
    pub t: u64,
    pub k: u64,
    pub n: u64,
    pub threshold: u64,
    pub extremal_degree: u64,
    pub construction_valid: bool,
    pub good_coloring: bool,
}

impl TightnessReport {
    pub fn pass(&self) -> bool {
        self.construction_valid && self.good_coloring && self.extremal_degree + 1 == self.threshold
    }
}

/// Build the extremal host for the top of the window and confirm it shows
/// the degree threshold is sharp.
pub fn threshold_tightness_scan(r: u64, t: u64, k: u64) -> Result<TightnessReport> {
    let e = build_extremal(r, t, k)?;
    let valid = validate_extremal(&e).all_pass();
    let good = check_coloring(&e.coloring, e.params.r as usize, e.params.t as usize).is_none();
    Ok(TightnessReport {
        r,
        t,
        k,
        n: e.params.n,
        threshold: e.params.degree_threshold(),
        extremal_degree: e.params.extremal_degree()?,
        construction_valid: valid,
        good_coloring: good,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrowing::DEFAULT_BUDGET;

    fn config(threads: usize) -> SearchConfig {
        SearchConfig {
            budget: DEFAULT_BUDGET,
            threads,
        }
    }

    fn run(
        r: u64,
        t: u64,
        k: u64,
        n: u64,
        mode: SweepMode,
        threads: usize,
    ) -> (SweepSummary, Vec<InstanceRecord>) {
        let mut records = Vec::new();
        let summary = sweep_verify(r, t, k, n, mode, &config(threads), &mut |rec| {
            records.push(rec.clone());
        })
        .unwrap();
        (summary, records)
    }

    #[test]
    fn exhaustive_sweep_checks_the_qualifying_census_entries() {
        // Order 3 at (2, 3): threshold 1; the path and the triangle
        // qualify, the empty graph and the single edge do not.
        let (summary, records) = run(2, 3, 1, 3, SweepMode::Exhaustive, 1);
        assert!(summary.pass());
        assert_eq!(summary.checked, 2);
        assert_eq!(summary.skipped, 2);
        assert_eq!(summary.arrows, 2);
        assert_eq!(records.len(), 2);
        assert!(records.iter().all(|r| r.evidence.is_none()));
        assert_eq!(records[0].index, 0);
    }

    #[test]
    fn exhaustive_sweep_at_the_small_window_start() {
        // Order 5 at (3, 3): threshold 3 keeps the three densest classes.
        let (summary, _) = run(3, 3, 1, 5, SweepMode::Exhaustive, 1);
        assert!(summary.pass());
        assert_eq!(summary.checked, 3);
        assert_eq!(summary.threshold, 3);
    }

    #[test]
    fn exhaustive_sweep_beyond_the_cap_is_a_capacity_error() {
        let err = sweep_verify(3, 3, 1, 8, SweepMode::Exhaustive, &config(1), &mut |_| {})
            .unwrap_err();
        assert!(matches!(err, Error::Capacity { .. }), "{err}");
    }

    #[test]
    fn mismatched_window_position_is_an_input_error() {
        let err = sweep_verify(3, 3, 2, 8, SweepMode::Exhaustive, &config(1), &mut |_| {})
            .unwrap_err();
        assert!(matches!(err, Error::Input(_)), "{err}");
        assert!(err.to_string().contains("window position 1"), "{err}");
    }

    #[test]
    fn sampled_sweeps_reproduce_exactly_for_a_fixed_seed() {
        let mode = SweepMode::Sample { count: 20, seed: 5 };
        let (s1, r1) = run(3, 3, 1, 8, mode, 1);
        let (s2, r2) = run(3, 3, 1, 8, mode, 1);
        assert_eq!(s1, s2);
        assert_eq!(r1, r2);
        assert!(s1.pass());
        assert_eq!(s1.checked, 20);
        let (s3, r3) = run(3, 3, 1, 8, SweepMode::Sample { count: 20, seed: 6 }, 1);
        assert!(s3.pass());
        assert_ne!(r1, r3, "different seeds should sample different hosts");
    }

    #[test]
    fn thread_count_does_not_change_sweep_output() {
        let mode = SweepMode::Sample { count: 12, seed: 9 };
        let (s1, r1) = run(3, 3, 1, 8, mode, 1);
        for threads in [2, 4, 8] {
            let (s, r) = run(3, 3, 1, 8, mode, threads);
            assert_eq!(s, s1, "summary changed at {threads} threads");
            assert_eq!(r, r1, "records changed at {threads} threads");
        }
    }

    #[test]
    fn exhaustive_records_report_deterministic_search_counts() {
        let (_, once) = run(2, 3, 1, 3, SweepMode::Exhaustive, 1);
        let (_, again) = run(2, 3, 1, 3, SweepMode::Exhaustive, 4);
        assert_eq!(once, again);
        assert!(once.iter().all(|r| r.nodes > 0));
    }

    #[test]
    fn tightness_scan_confirms_the_threshold_is_sharp() {
        for (r, t, k, threshold, extremal) in [
            (3, 3, 1, 6, 5),
            (2, 3, 1, 2, 1),
            (2, 4, 1, 3, 2),
            (3, 4, 1, 9, 8),
        ] {
            let report = threshold_tightness_scan(r, t, k).unwrap();
            assert!(report.pass(), "{report:?}");
            assert_eq!(report.threshold, threshold);
            assert_eq!(report.extremal_degree, extremal);
        }
    }

    #[test]
    fn sweep_summaries_serialize_without_optional_noise() {
        let (summary, _) = run(2, 3, 1, 3, SweepMode::Exhaustive, 1);
        let json = serde_json::to_string(&summary).unwrap();
        assert!(!json.contains("\"seed\""), "{json}");
        assert!(json.contains("\"counterexamples\":[]"), "{json}");
    }
}
