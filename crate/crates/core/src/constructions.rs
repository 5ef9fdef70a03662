//! Lower-bound constructions: Turán graphs and the tight colored graph
//! sitting one below the degree threshold.
//!
//! The tight construction lives at the window endpoint n = (r-1)(t-1)(k+1):
//! r-1 equal parts, each covered by k+1 disjoint blue cliques on t-1
//! vertices, red edges exactly between parts, and no edge at all between
//! cliques of the same part. Its coloring contains no red K_r (red is
//! (r-1)-partite) and no blue P_t (blue components have t-1 vertices), and
//! the graph is regular of degree exactly one below the threshold, which is
//! what makes the threshold sharp.

use serde::{Deserialize, Serialize};

use crate::arrowing::TwoColoring;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::thresholds::GoodnessParams;

/// Complete multipartite graph on n vertices with part sizes as equal as
/// possible, larger parts first, vertices numbered part by part.
pub fn turan_graph(n: usize, parts: usize) -> Result<Graph> {
    if parts < 1 {
        return Err(Error::Input("turan_graph needs at least one part".into()));
    }
    let mut g = Graph::new(n)?;
    let quot = n / parts;
    let rem = n % parts;
    let mut bounds = Vec::with_capacity(parts + 1);
    let mut at = 0usize;
    bounds.push(0);
    for p in 0..parts {
        at += quot + usize::from(p < rem);
        bounds.push(at);
    }
    for p in 0..parts {
        for u in bounds[p]..bounds[p + 1] {
            for v in bounds[p + 1]..n {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// The tight construction and its bookkeeping. `graph` is the union of the
/// blue clique edges and the red between-part edges; `coloring` colors that
/// same graph; `parts` has r-1 entries and `cliques` has (r-1)(k+1),
/// grouped by part.
#[derive(Clone, Debug)]
pub struct ExtremalConstruction {
    pub params: GoodnessParams,
    pub graph: Graph,
    pub coloring: TwoColoring,
    pub parts: Vec<VertexSet>,
    pub cliques: Vec<VertexSet>,
}

/// Build the construction at n = (r-1)(t-1)(k+1). Requires r, t >= 2 and
/// k >= 1; the order must fit the 64-vertex kernel.
pub fn build_extremal(r: u64, t: u64, k: u64) -> Result<ExtremalConstruction> {
    let params = GoodnessParams::at_window_top(r, t, k)?;
    let n = params.n as usize;
    let part_size = ((t - 1) * (k + 1)) as usize;
    let clique_size = (t - 1) as usize;
    let num_parts = (r - 1) as usize;
    let per_part = (k + 1) as usize;

    let mut graph = Graph::new(n)?;
    let mut blue_edges = Vec::new();
    let mut parts = Vec::with_capacity(num_parts);
    let mut cliques = Vec::with_capacity(num_parts * per_part);

    for p in 0..num_parts {
        let base = p * part_size;
        parts.push(VertexSet::from_slice(
            &(base..base + part_size).collect::<Vec<_>>(),
        ));
        for q in 0..per_part {
            let cbase = base + q * clique_size;
            let members: Vec<usize> = (cbase..cbase + clique_size).collect();
            cliques.push(VertexSet::from_slice(&members));
            for (i, &u) in members.iter().enumerate() {
                for &v in &members[i + 1..] {
                    graph.add_edge(u, v);
                    blue_edges.push((u, v));
                }
            }
        }
    }
    for p in 0..num_parts {
        for u in (p * part_size)..((p + 1) * part_size) {
            for v in ((p + 1) * part_size)..n {
                graph.add_edge(u, v);
            }
        }
    }

    let coloring = TwoColoring::new(graph.clone(), &blue_edges)?;
    Ok(ExtremalConstruction { params, graph, coloring, parts, cliques })
}

/// One named pass/fail line of a validation report.
#[derive(Clone, Debug, Serialize)]
pub struct Assertion {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl Assertion {
    fn pass(name: &'static str, detail: String) -> Self {
        Assertion { name, pass: true, detail }
    }

    fn fail(name: &'static str, detail: String) -> Self {
        Assertion { name, pass: false, detail }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtremalReport {
    pub red_clique_free: Assertion,
    pub blue_path_free: Assertion,
    pub regular_at_extremal_degree: Assertion,
}

impl ExtremalReport {
    pub fn all_pass(&self) -> bool {
        self.red_clique_free.pass
            && self.blue_path_free.pass
            && self.regular_at_extremal_degree.pass
    }
}

/// Re-check the three defining properties from the object itself, trusting
/// nothing from the builder: no red r-clique, no blue t-path, and every
/// degree exactly one below the threshold. Regularity, not just minimum
/// degree: the construction is regular, so any edge tampering shows up.
pub fn validate_extremal(e: &ExtremalConstruction) -> ExtremalReport {
    let r = e.params.r as usize;
    let t = e.params.t as usize;

    let red_clique_free = match e.coloring.red().find_clique(r) {
        None => Assertion::pass("red_clique_free", format!("no red K_{r}")),
        Some(s) => Assertion::fail("red_clique_free", format!("red K_{r} at {s:?}")),
    };

    let blue_path_free = match e.coloring.blue().has_path(t) {
        None => Assertion::pass("blue_path_free", format!("no blue P_{t}")),
        Some(p) => Assertion::fail("blue_path_free", format!("blue P_{t} through {p:?}")),
    };

    let regular_at_extremal_degree = match e.params.extremal_degree() {
        Err(err) => Assertion::fail("regular_at_extremal_degree", err.to_string()),
        Ok(want) => {
            let offender =
                (0..e.graph.n()).find(|&v| e.graph.degree(v) as u64 != want);
            match offender {
                None => Assertion::pass(
                    "regular_at_extremal_degree",
                    format!("all degrees equal {want}"),
                ),
                Some(v) => Assertion::fail(
                    "regular_at_extremal_degree",
                    format!("vertex {v} has degree {}, expected {want}", e.graph.degree(v)),
                ),
            }
        }
    };

    ExtremalReport { red_clique_free, blue_path_free, regular_at_extremal_degree }
}

/// Flat serializable companion to the graph6 export: parameters, layout,
/// and the blue edge set.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Sidecar {
    pub r: u64,
    pub t: u64,
    pub k: u64,
    pub n: u64,
    pub graph6: String,
    pub parts: Vec<Vec<usize>>,
    pub cliques: Vec<Vec<usize>>,
    pub blue_edges: Vec<(usize, usize)>,
}

impl ExtremalConstruction {
    pub fn sidecar(&self) -> Sidecar {
        Sidecar {
            r: self.params.r,
            t: self.params.t,
            k: self.params.k,
            n: self.params.n,
            graph6: self.graph.to_graph6(),
            parts: self.parts.iter().map(|s| s.to_vec()).collect(),
            cliques: self.cliques.iter().map(|s| s.to_vec()).collect(),
            blue_edges: self.coloring.blue_edges(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrowing::check_coloring;

    #[test]
    fn turan_shapes() {
        let g = turan_graph(8, 2).unwrap();
        assert_eq!(g.edge_count(), 16);
        assert!((0..8).all(|v| g.degree(v) == 4));
        let g = turan_graph(5, 2).unwrap();
        let degs: Vec<usize> = (0..5).map(|v| g.degree(v)).collect();
        assert_eq!(degs, vec![2, 2, 2, 3, 3]);
        let g = turan_graph(6, 3).unwrap();
        assert_eq!(g.edge_count(), 12);
        assert_eq!(g.chromatic_number().0, 3);
        // Degenerate shapes.
        assert_eq!(turan_graph(5, 1).unwrap().edge_count(), 0);
        assert!(crate::graph::testutil::isomorphic(
            &turan_graph(4, 4).unwrap(),
            &Graph::complete(4).unwrap()
        ));
        assert!(turan_graph(3, 0).is_err());
        assert_eq!(turan_graph(0, 2).unwrap().n(), 0);
    }

    #[test]
    fn the_eight_vertex_construction_is_a_blue_matching_over_k44() {
        let e = build_extremal(3, 3, 1).unwrap();
        assert_eq!(e.params.n, 8);
        assert_eq!(e.coloring.blue_edges(), vec![(0, 1), (2, 3), (4, 5), (6, 7)]);
        assert_eq!(e.coloring.red().edge_count(), 16);
        assert_eq!(e.parts.len(), 2);
        assert_eq!(e.parts[0].to_vec(), vec![0, 1, 2, 3]);
        assert_eq!(e.cliques.len(), 4);
        assert!((0..8).all(|v| e.graph.degree(v) == 5));
        let report = validate_extremal(&e);
        assert!(report.all_pass(), "{report:?}");
        assert_eq!(check_coloring(&e.coloring, 3, 3), None);
    }

    #[test]
    fn the_single_part_construction_has_no_red() {
        let e = build_extremal(2, 3, 1).unwrap();
        assert_eq!(e.params.n, 4);
        assert_eq!(e.coloring.blue_edges(), vec![(0, 1), (2, 3)]);
        assert_eq!(e.coloring.red().edge_count(), 0);
        assert!((0..4).all(|v| e.graph.degree(v) == 1));
        assert!(validate_extremal(&e).all_pass());
    }

    #[test]
    fn the_twelve_vertex_construction_has_degree_eight() {
        let e = build_extremal(3, 4, 1).unwrap();
        assert_eq!(e.params.n, 12);
        assert!((0..12).all(|v| e.graph.degree(v) == 8));
        assert!(validate_extremal(&e).all_pass());
        assert_eq!(check_coloring(&e.coloring, 3, 4), None);
    }

    #[test]
    fn the_whole_grid_validates_and_colors_are_good() {
        for r in 2..=5u64 {
            for t in 2..=5u64 {
                for k in 1..=3u64 {
                    let n = (r - 1) * (t - 1) * (k + 1);
                    if n > 64 {
                        continue;
                    }
                    let e = build_extremal(r, t, k).unwrap();
                    let report = validate_extremal(&e);
                    assert!(report.all_pass(), "(r, t, k) = ({r}, {t}, {k}): {report:?}");
                    assert_eq!(
                        check_coloring(&e.coloring, r as usize, t as usize),
                        None,
                        "(r, t, k) = ({r}, {t}, {k})"
                    );
                }
            }
        }
    }

    #[test]
    fn tampering_with_one_edge_breaks_regularity() {
        let e = build_extremal(3, 3, 1).unwrap();
        // A red edge inside a part, between its two cliques.
        let mut graph = e.graph.clone();
        assert!(!graph.has_edge(0, 2));
        graph.add_edge(0, 2);
        let coloring = TwoColoring::new(graph.clone(), &e.coloring.blue_edges()).unwrap();
        let mutated = ExtremalConstruction {
            params: e.params,
            graph,
            coloring,
            parts: e.parts.clone(),
            cliques: e.cliques.clone(),
        };
        let report = validate_extremal(&mutated);
        assert!(!report.regular_at_extremal_degree.pass);
        assert!(!report.all_pass());
        // Minimum degree alone would have let this through.
        assert_eq!(mutated.graph.min_degree(), Some(5));
    }

    #[test]
    fn sidecar_serialization_is_complete() {
        let e = build_extremal(2, 3, 1).unwrap();
        let side = e.sidecar();
        assert_eq!(side.graph6, "C`");
        let json = serde_json::to_string(&side).unwrap();
        assert_eq!(
            json,
            r#"{"r":2,"t":3,"k":1,"n":4,"graph6":"C`","parts":[[0,1,2,3]],"cliques":[[0,1],[2,3]],"blue_edges":[[0,1],[2,3]]}"#
        );
    }
}
