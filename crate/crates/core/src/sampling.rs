//! Seeded graph samplers for sweeps and randomized suites.
//!
//! Every sampler takes the generator by reference, so a caller that fixes
//! the seed gets the same graphs on every run and on every platform.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Erdős–Rényi G(n, p): each pair becomes an edge independently.
pub fn gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
    let mut g = Graph::new(n)?;
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random::<f64>() < p {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// G(n, p) conditioned on minimum degree at least `min_deg`, by rejection.
pub fn gnp_min_degree<R: Rng>(
    n: usize,
    p: f64,
    min_deg: usize,
    max_tries: u64,
    rng: &mut R,
) -> Result<Graph> {
    for _ in 0..max_tries {
        let g = gnp(n, p, rng)?;
        if g.min_degree().map_or(min_deg == 0, |d| d >= min_deg) {
            return Ok(g);
        }
    }
    Err(Error::Input(format!(
        "rejection sampling found no graph with min degree {min_deg} \
         in {max_tries} tries (n = {n}, p = {p})"
    )))
}

/// G(n, p) conditioned on connectivity, by rejection.
pub fn connected_gnp<R: Rng>(n: usize, p: f64, max_tries: u64, rng: &mut R) -> Result<Graph> {
    for _ in 0..max_tries {
        let g = gnp(n, p, rng)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::Input(format!(
        "rejection sampling found no connected graph in {max_tries} tries (n = {n}, p = {p})"
    )))
}

/// Delete a random maximal set of edges from K_n subject to the minimum
/// degree staying at or above `min_deg`. Maximality pins many vertices to
/// exactly `min_deg`, so the samples hug the degree bound instead of
/// clustering far above it the way plain rejection sampling does.
pub fn near_min_degree<R: Rng>(n: usize, min_deg: usize, rng: &mut R) -> Result<Graph> {
    let mut g = Graph::complete(n)?;
    let mut edges = g.edges();
    edges.shuffle(rng);
    for (u, v) in edges {
        if g.degree(u) > min_deg && g.degree(v) > min_deg {
            g.remove_edge(u, v);
        }
    }
    Ok(g)
}
