//! Serialized arrowing decisions and their independent re-verification.
//!
//! The JSON layout is stable: r, t, graph6, verdict, blue_edges, stats,
//! mode, in that order, vertices 0-indexed. A not-arrows certificate
//! carries the full blue edge set of a good coloring and re-verifies by
//! rebuilding that coloring; an arrows certificate re-verifies by re-running
//! the decision, or in sampled mode by spot-checking random colorings,
//! which can only ever refute.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

use super::search::{decide, SearchStats, DEFAULT_BUDGET};
use super::{check_coloring, TwoColoring, Verdict};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub r: u64,
    pub t: u64,
    pub graph6: String,
    pub verdict: Verdict,
    pub blue_edges: Vec<(usize, usize)>,
    pub stats: SearchStats,
    pub mode: String,
}

impl Certificate {
    pub(crate) fn assemble(
        host: &Graph,
        r: usize,
        t: usize,
        verdict: Verdict,
        blue_edges: Vec<(usize, usize)>,
        stats: SearchStats,
        mode: &str,
    ) -> Self {
        Certificate {
            r: r as u64,
            t: t as u64,
            graph6: host.to_graph6(),
            verdict,
            blue_edges,
            stats,
            mode: mode.to_string(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate fields always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("certificate JSON: {e}")))
    }
}

/// How much work re-verification may do on an arrows verdict. `Full` re-runs
/// the decision; `Sampled` draws seeded random colorings and checks each,
/// which can refute but never confirm exhaustively.
#[derive(Clone, Copy, Debug)]
pub enum VerifyMode {
    Full,
    Sampled { seed: u64, samples: u64 },
}

/// Re-check a certificate from scratch. Returns Ok(false) when the evidence
/// or verdict fails to reproduce; malformed certificates error out.
pub fn verify_certificate(cert: &Certificate, mode: VerifyMode) -> Result<bool> {
    let host = Graph::from_graph6(&cert.graph6)?;
    let r = usize::try_from(cert.r).map_err(|_| Error::Certificate("r out of range".into()))?;
    let t = usize::try_from(cert.t).map_err(|_| Error::Certificate("t out of range".into()))?;
    if r < 2 || t < 1 {
        return Err(Error::Certificate(format!("parameters r = {r}, t = {t} out of range")));
    }
    match cert.verdict {
        Verdict::NotArrows => {
            let coloring = TwoColoring::new(host, &cert.blue_edges)
                .map_err(|e| Error::Certificate(format!("evidence does not fit the host: {e}")))?;
            Ok(check_coloring(&coloring, r, t).is_none())
        }
        Verdict::Arrows => {
            if t == 1 {
                return Ok(host.n() >= 1);
            }
            match mode {
                VerifyMode::Full => {
                    let outcome =
                        decide(r, t, DEFAULT_BUDGET, 1, host.n(), &host.edges())?;
                    Ok(outcome.verdict == Verdict::Arrows)
                }
                VerifyMode::Sampled { seed, samples } => {
                    let edges = host.edges();
                    let mut rng = StdRng::seed_from_u64(seed);
                    for _ in 0..samples {
                        let blue: Vec<(usize, usize)> =
                            edges.iter().copied().filter(|_| rng.random::<bool>()).collect();
                        let coloring = TwoColoring::new(host.clone(), &blue)
                            .expect("sampled edges come from the host");
                        if check_coloring(&coloring, r, t).is_none() {
                            return Ok(false);
                        }
                    }
                    Ok(true)
                }
            }
        }
    }
}
