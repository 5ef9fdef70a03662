//! Two-colorings, witnesses, and the arrowing decision G -> (K_r, P_t).
//!
//! A coloring is a partition of the host's edges into red and blue, stored
//! as the blue subgraph. `check_coloring` finds a red r-clique or a blue
//! t-vertex path in a given coloring; `arrows` decides whether every
//! coloring of the host contains one of the two, by a pruned depth-first
//! search over edge assignments that either exhausts (verdict: arrows) or
//! exhibits a good coloring (verdict: not arrows, with the blue edge set as
//! re-checkable evidence). Witness verification is deliberately primitive,
//! sharing no code with the searches it audits: it walks the claimed
//! vertices and looks at single edges.

mod certificate;
mod search;

pub use certificate::{verify_certificate, Certificate, VerifyMode};
pub use search::{SearchStats, DEFAULT_BUDGET};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A red/blue edge coloring of a host graph, stored as the blue subgraph.
/// Edges of the host outside `blue` are red. `blue` is always a subgraph of
/// the host on the same vertex set.
#[derive(Clone, Debug)]
pub struct TwoColoring {
    host: Graph,
    blue: Graph,
}

impl TwoColoring {
    pub fn new(host: Graph, blue_edges: &[(usize, usize)]) -> Result<Self> {
        let mut blue = Graph::new(host.n())?;
        for &(u, v) in blue_edges {
            if u >= host.n() || v >= host.n() || u == v {
                return Err(Error::Input(format!(
                    "blue edge ({u}, {v}) out of range for {} vertices",
                    host.n()
                )));
            }
            if !host.has_edge(u, v) {
                return Err(Error::Input(format!(
                    "blue edge ({u}, {v}) is not an edge of the host"
                )));
            }
            blue.add_edge(u, v);
        }
        Ok(TwoColoring { host, blue })
    }

    pub fn all_red(host: Graph) -> Self {
        let blue = Graph::new(host.n()).expect("host order already validated");
        TwoColoring { host, blue }
    }

    pub fn all_blue(host: Graph) -> Self {
        let blue = host.clone();
        TwoColoring { host, blue }
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    /// Restrict the coloring to `s`. Returns the sub coloring together
    /// with the map from new labels back to the old ones. Both graphs are
    /// relabeled by the same ascending order, so colors carry over.
    pub fn induced(&self, s: crate::graph::VertexSet) -> Result<(TwoColoring, Vec<usize>)> {
        let (host, map) = self.host.induced(s)?;
        let (blue, _) = self.blue.induced(s)?;
        Ok((TwoColoring { host, blue }, map))
    }

    pub fn blue(&self) -> &Graph {
        &self.blue
    }

    /// The red subgraph, host edges minus blue ones.
    pub fn red(&self) -> Graph {
        let mut red = Graph::new(self.host.n()).expect("host order already validated");
        for (u, v) in self.host.edges() {
            if !self.blue.has_edge(u, v) {
                red.add_edge(u, v);
            }
        }
        red
    }

    pub fn blue_edges(&self) -> Vec<(usize, usize)> {
        self.blue.edges()
    }
}

/// What defeats a coloring: a clique that came out all red, or a path that
/// came out all blue. Clique vertices are sorted ascending; path vertices
/// are in traversal order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "vertices", rename_all = "snake_case")]
pub enum Witness {
    RedClique(Vec<usize>),
    BluePath(Vec<usize>),
}

/// Search a coloring for a red r-clique, then for a blue t-vertex path.
/// Red is preferred when both exist; both searches return the
/// lexicographically least witness, so the result is deterministic.
/// `None` means the coloring is good: it avoids both targets.
pub fn check_coloring(coloring: &TwoColoring, r: usize, t: usize) -> Option<Witness> {
    if let Some(s) = coloring.red().find_clique(r) {
        return Some(Witness::RedClique(s.to_vec()));
    }
    coloring.blue().has_path(t).map(Witness::BluePath)
}

/// Re-check a witness against a coloring using nothing but single-edge
/// queries. Independent of every search in this module by construction.
pub fn verify_witness(coloring: &TwoColoring, r: usize, t: usize, w: &Witness) -> Result<()> {
    let n = coloring.host().n();
    let fail = |detail: String| Err(Error::Certificate(detail));
    match w {
        Witness::RedClique(vs) => {
            if vs.len() != r {
                return fail(format!("red clique has {} vertices, expected {r}", vs.len()));
            }
            for (i, &u) in vs.iter().enumerate() {
                if u >= n {
                    return fail(format!("clique vertex {u} out of range"));
                }
                for &v in &vs[i + 1..] {
                    if u == v {
                        return fail(format!("clique vertex {u} repeated"));
                    }
                    if !coloring.host().has_edge(u, v) {
                        return fail(format!("clique pair ({u}, {v}) is not a host edge"));
                    }
                    if coloring.blue().has_edge(u, v) {
                        return fail(format!("clique pair ({u}, {v}) is blue, not red"));
                    }
                }
            }
            Ok(())
        }
        Witness::BluePath(vs) => {
            if vs.len() != t {
                return fail(format!("blue path has {} vertices, expected {t}", vs.len()));
            }
            for (i, &u) in vs.iter().enumerate() {
                if u >= n {
                    return fail(format!("path vertex {u} out of range"));
                }
                if vs[i + 1..].contains(&u) {
                    return fail(format!("path vertex {u} repeated"));
                }
            }
            for w in vs.windows(2) {
                if !coloring.blue().has_edge(w[0], w[1]) {
                    return fail(format!("path step ({}, {}) is not a blue edge", w[0], w[1]));
                }
            }
            Ok(())
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Arrows,
    NotArrows,
}

/// Node budget and worker count for the arrowing search. Verdict, evidence,
/// and statistics are independent of `threads`; see `search`.
#[derive(Clone, Copy, Debug)]
pub struct SearchConfig {
    pub budget: u64,
    pub threads: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { budget: DEFAULT_BUDGET, threads: 1 }
    }
}

/// Decide host -> (K_r, P_t) with the default budget, single-threaded.
pub fn arrows(host: &Graph, r: usize, t: usize) -> Result<Certificate> {
    arrows_with(host, r, t, &SearchConfig::default())
}

/// Decide host -> (K_r, P_t). Requires r >= 2 and t >= 1. Budget exhaustion
/// is an explicit `Undecided` error, never a guessed verdict.
pub fn arrows_with(host: &Graph, r: usize, t: usize, cfg: &SearchConfig) -> Result<Certificate> {
    let edges = host.edges();
    arrows_over_edges(host, r, t, cfg, edges)
}

/// Same decision with an explicit edge assignment order, for checking that
/// the verdict does not depend on it. The order must be a permutation of
/// the host's edges.
pub fn arrows_with_edge_order(
    host: &Graph,
    r: usize,
    t: usize,
    cfg: &SearchConfig,
    order: &[(usize, usize)],
) -> Result<Certificate> {
    let mut canon: Vec<(usize, usize)> = order
        .iter()
        .map(|&(u, v)| if u <= v { (u, v) } else { (v, u) })
        .collect();
    canon.sort_unstable();
    if canon != host.edges() {
        return Err(Error::Input("edge order is not a permutation of the host's edges".into()));
    }
    let order: Vec<(usize, usize)> = order
        .iter()
        .map(|&(u, v)| if u <= v { (u, v) } else { (v, u) })
        .collect();
    arrows_over_edges(host, r, t, cfg, order)
}

fn arrows_over_edges(
    host: &Graph,
    r: usize,
    t: usize,
    cfg: &SearchConfig,
    edges: Vec<(usize, usize)>,
) -> Result<Certificate> {
    if r < 2 {
        return Err(Error::Input(format!("arrowing requires r >= 2, got {r}")));
    }
    if t < 1 {
        return Err(Error::Input(format!("arrowing requires t >= 1, got {t}")));
    }
    let mode = if cfg.threads > 1 { "parallel" } else { "sequential" };
    // A one-vertex blue path sits in every coloring of a nonempty host; on
    // the empty host the empty coloring is good.
    if t == 1 {
        let verdict = if host.n() >= 1 { Verdict::Arrows } else { Verdict::NotArrows };
        return Ok(Certificate::assemble(
            host,
            r,
            t,
            verdict,
            Vec::new(),
            SearchStats::default(),
            mode,
        ));
    }
    let outcome = search::decide(r, t, cfg.budget, cfg.threads, host.n(), &edges)?;
    Ok(Certificate::assemble(host, r, t, outcome.verdict, outcome.blue, outcome.stats, mode))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coloring_construction_validates_blue_edges() {
        let k4 = Graph::complete(4).unwrap();
        assert!(TwoColoring::new(k4.clone(), &[(0, 1), (2, 3)]).is_ok());
        assert!(TwoColoring::new(k4.clone(), &[(0, 4)]).is_err());
        assert!(TwoColoring::new(k4.clone(), &[(1, 1)]).is_err());
        let c4 = Graph::cycle(4).unwrap();
        // (0, 2) is a chord, not an edge of C_4.
        assert!(TwoColoring::new(c4, &[(0, 2)]).is_err());
    }

    #[test]
    fn check_coloring_prefers_red_and_is_lex_least() {
        let k3 = Graph::complete(3).unwrap();
        let all_red = TwoColoring::all_red(k3.clone());
        assert_eq!(check_coloring(&all_red, 3, 3), Some(Witness::RedClique(vec![0, 1, 2])));
        let all_blue = TwoColoring::all_blue(k3.clone());
        assert_eq!(check_coloring(&all_blue, 3, 3), Some(Witness::BluePath(vec![0, 1, 2])));
        // Both present: red wins.
        let k6 = Graph::complete(6).unwrap();
        let mixed = TwoColoring::new(k6, &[(3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(check_coloring(&mixed, 3, 3), Some(Witness::RedClique(vec![0, 1, 2])));
    }

    #[test]
    fn good_coloring_checks_to_none() {
        // Blue perfect matching on K_4 leaves a red C_4: no red K_3, no
        // blue P_3.
        let k4 = Graph::complete(4).unwrap();
        let good = TwoColoring::new(k4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(check_coloring(&good, 3, 3), None);
    }

    #[test]
    fn verify_witness_accepts_genuine_and_rejects_corrupted() {
        let k5 = Graph::complete(5).unwrap();
        let c = TwoColoring::new(k5, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let red = Witness::RedClique(vec![0, 2, 4]);
        assert!(verify_witness(&c, 3, 3, &red).is_ok());
        let blue = Witness::BluePath(vec![0, 1, 2, 3]);
        assert!(verify_witness(&c, 3, 4, &blue).is_ok());

        assert!(verify_witness(&c, 4, 3, &red).is_err());
        assert!(verify_witness(&c, 3, 3, &Witness::RedClique(vec![0, 1, 2])).is_err());
        assert!(verify_witness(&c, 3, 3, &Witness::RedClique(vec![0, 0, 2])).is_err());
        assert!(verify_witness(&c, 3, 4, &Witness::BluePath(vec![0, 1, 2, 4])).is_err());
        assert!(verify_witness(&c, 3, 4, &Witness::BluePath(vec![0, 2, 1, 3])).is_err());
        assert!(verify_witness(&c, 3, 3, &Witness::BluePath(vec![0, 1, 2, 3])).is_err());
    }

    #[test]
    fn witness_serialization_shape() {
        let w = Witness::RedClique(vec![0, 1, 2]);
        assert_eq!(
            serde_json::to_string(&w).unwrap(),
            r#"{"kind":"red_clique","vertices":[0,1,2]}"#
        );
        let w = Witness::BluePath(vec![2, 0, 1]);
        assert_eq!(
            serde_json::to_string(&w).unwrap(),
            r#"{"kind":"blue_path","vertices":[2,0,1]}"#
        );
    }

    #[test]
    fn one_vertex_paths_make_arrowing_trivial() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(arrows(&k3, 3, 1).unwrap().verdict, Verdict::Arrows);
        let empty = Graph::new(0).unwrap();
        assert_eq!(arrows(&empty, 3, 1).unwrap().verdict, Verdict::NotArrows);
        assert!(arrows(&k3, 1, 3).is_err());
        assert!(arrows(&k3, 3, 0).is_err());
    }
}
