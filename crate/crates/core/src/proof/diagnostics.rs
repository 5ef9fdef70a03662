//! Inequality chain for the red-sparse case.
//!
//! When no vertex is red-dense, the argument walks a chain of bounds that
//! together rule out a good coloring: the blue graph inherits a minimum
//! degree, stays path-free only by splitting into small components, and the
//! union of blue and missing edges is then too sparse for its own chromatic
//! number unless a component escapes the coloring bound by being complete
//! or an odd cycle, and those escapes are refuted separately. The report
//! evaluates every link on the instance at hand and names the first one
//! that fails, so a near-miss instance shows exactly where it leaks.

use serde::Serialize;

use crate::arrowing::{TwoColoring, Witness};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::thresholds::GoodnessParams;

use super::CLAIM_SCAN_CAP;

/// One evaluated inequality, with the numbers that went into it.
#[derive(Clone, Debug, Serialize)]
pub struct ChainLink {
    pub name: &'static str,
    pub computed: String,
    pub holds: bool,
}

/// How the chain ended.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ChainVerdict {
    /// A red clique or blue path turned up while checking; the coloring
    /// is not good and there is nothing to diagnose.
    WitnessFound { witness: Witness },
    /// At least one inequality failed; the first is named.
    Broken { first: String },
    /// Every link held: the instance admits no good coloring, yet one was
    /// supplied. The caller should treat this as a falsification alarm.
    Closed,
}

/// Chain evaluation over one coloring.
#[derive(Clone, Debug, Serialize)]
pub struct Case2Report {
    pub red_graph6: String,
    pub blue_graph6: String,
    pub non_red_graph6: String,
    pub links: Vec<ChainLink>,
    pub verdict: ChainVerdict,
}

fn link(links: &mut Vec<ChainLink>, name: &'static str, computed: String, holds: bool) {
    links.push(ChainLink {
        name,
        computed,
        holds,
    });
}

fn classify(g: &Graph) -> &'static str {
    let n = g.n();
    if g.edge_count() == n * n.saturating_sub(1) / 2 {
        return "complete";
    }
    if n >= 3 && n % 2 == 1 && g.is_connected() && (0..n).all(|v| g.degree(v) == 2) {
        return "odd cycle";
    }
    "neither"
}

/// Evaluate the red-sparse chain on `coloring` under `params`. The host
/// order must match `params.n`, and no vertex may be red-dense; red-dense
/// instances belong to the descent case and are rejected as input errors.
pub fn case2_diagnostics(coloring: &TwoColoring, params: &GoodnessParams) -> Result<Case2Report> {
    let n = coloring.host().n();
    if n as u64 != params.n {
        return Err(Error::Input(format!(
            "host has {n} vertices but the parameters say n = {}",
            params.n
        )));
    }
    let x = params.x;
    let m = params.m;
    let t = params.t;
    let red = coloring.red();
    if let Some(v) = (0..n).find(|&v| (red.degree(v) as u64) + x > n as u64) {
        return Err(Error::Input(format!(
            "vertex {v} has red degree {} > n - x = {}; red-dense instances \
             belong to the descent case",
            red.degree(v),
            n as u64 - x
        )));
    }

    let blue = coloring.blue();
    let missing = coloring.host().complement();
    let non_red = red.complement();
    let mut links = Vec::new();

    let delta = coloring.host().min_degree().unwrap_or(0) as u64;
    let threshold = params.degree_threshold();
    link(
        &mut links,
        "degree-threshold",
        format!("min degree {delta}, threshold {threshold}"),
        delta >= threshold,
    );

    let red_max = red.max_degree().unwrap_or(0) as u64;
    link(
        &mut links,
        "red-max-degree",
        format!("max red degree {red_max}, bound n - x = {}", n as u64 - x),
        red_max + x <= n as u64,
    );

    let blue_min = blue.min_degree().unwrap_or(0) as u64;
    link(
        &mut links,
        "blue-min-degree",
        format!(
            "min blue degree {blue_min} (at least min degree {delta} - max red degree \
             {red_max}), need m = {m}"
        ),
        blue_min >= m,
    );

    link(
        &mut links,
        "m-lower-bound",
        format!("m = {m}, need at least t - 2 = {}", t - 2),
        m >= t - 2,
    );

    if let Some(cl) = red.find_clique(params.r as usize) {
        return Ok(finish(
            coloring,
            &red,
            &non_red,
            links,
            ChainVerdict::WitnessFound {
                witness: Witness::RedClique(cl.to_vec()),
            },
        ));
    }
    link(
        &mut links,
        "red-clique-free",
        format!("no red clique on {} vertices", params.r),
        true,
    );

    if let Some(p) = blue.has_path(t as usize) {
        return Ok(finish(
            coloring,
            &red,
            &non_red,
            links,
            ChainVerdict::WitnessFound {
                witness: Witness::BluePath(p),
            },
        ));
    }
    link(
        &mut links,
        "blue-path-free",
        format!("no blue path on {t} vertices"),
        true,
    );

    match blue.path_free_partition(t as usize) {
        Ok(parts) => {
            let sizes: Vec<usize> = parts.iter().map(|p| p.component.len()).collect();
            link(
                &mut links,
                "partition-bounds",
                format!(
                    "blue components of sizes {sizes:?}, all within [{}, {}], \
                     each with a spanning cycle",
                    t / 2 + 1,
                    t - 1
                ),
                true,
            );
        }
        Err(e) => link(
            &mut links,
            "partition-bounds",
            format!("blue component structure fails: {e}"),
            false,
        ),
    }

    let blue_max = blue.max_degree().unwrap_or(0) as u64;
    link(
        &mut links,
        "blue-max-degree",
        format!("max blue degree {blue_max}, bound t - 2 = {}", t - 2),
        blue_max <= t - 2,
    );

    let missing_max = missing.max_degree().unwrap_or(0) as u64;
    let missing_bound = x - m - 1;
    link(
        &mut links,
        "missing-max-degree",
        format!("max missing degree {missing_max}, bound x - m - 1 = {missing_bound}"),
        missing_max <= missing_bound,
    );

    // A red-independent set of x vertices must carry a blue path; finding
    // one without it breaks the chain, finding one with it is a witness.
    let mut bad_set: Option<Vec<usize>> = None;
    let mut witness_path: Option<Vec<usize>> = None;
    red.for_each_independent_set(x as usize, CLAIM_SCAN_CAP, &mut |w| {
        let (bw, map) = blue.induced(w).expect("set fits inside the host");
        match bw.has_path(t as usize) {
            Some(p) => {
                witness_path = Some(p.into_iter().map(|i| map[i]).collect());
                false
            }
            None => {
                bad_set = Some(w.to_vec());
                false
            }
        }
    });
    if let Some(p) = witness_path {
        return Ok(finish(
            coloring,
            &red,
            &non_red,
            links,
            ChainVerdict::WitnessFound {
                witness: Witness::BluePath(p),
            },
        ));
    }
    match bad_set {
        Some(s) => link(
            &mut links,
            "red-independence",
            format!("red-independent set {s:?} of size {x} carries no blue path on {t} vertices"),
            false,
        ),
        None => link(
            &mut links,
            "red-independence",
            format!("no red-independent set of size x = {x}"),
            true,
        ),
    }

    let non_red_max = non_red.max_degree().unwrap_or(0) as u64;
    let non_red_bound = (x - m - 1) + (t - 2);
    link(
        &mut links,
        "non-red-max-degree",
        format!(
            "max degree {non_red_max} of the blue-or-missing graph, \
             bound (x - m - 1) + (t - 2) = {non_red_bound}"
        ),
        non_red_max <= non_red_bound,
    );

    let (chi, _) = non_red.chromatic_number();
    let alpha = red.clique_number() as u64;
    let lower = if alpha == 0 {
        n as u64
    } else {
        (n as u64).div_ceil(alpha)
    };
    link(
        &mut links,
        "non-red-chromatic",
        format!(
            "chromatic number {chi} of the blue-or-missing graph; its independence \
             number {alpha} forces at least ceil(n / {alpha}) = {lower}; need x = {x}"
        ),
        chi as u64 >= x,
    );

    // The coloring bound would cap the chromatic number by the max degree,
    // contradicting the previous link, unless the extremal component is
    // complete or an odd cycle; those two escapes are refuted separately.
    let mut best: Option<(Graph, Vec<usize>, usize)> = None;
    for comp in non_red.connected_components() {
        let (sub, map) = non_red.induced(comp).expect("component fits");
        let (c_chi, _) = sub.chromatic_number();
        if best.as_ref().is_none_or(|(_, _, b)| c_chi > *b) {
            best = Some((sub, map, c_chi));
        }
    }
    match best {
        Some((sub, map, c_chi)) => {
            let kind = classify(&sub);
            let escape = c_chi > sub.max_degree().unwrap_or(0);
            link(
                &mut links,
                "brooks-classification",
                format!(
                    "component {map:?} attains the chromatic number {c_chi}; \
                     classification: {kind}"
                ),
                true,
            );
            if escape {
                match kind {
                    "complete" => link(
                        &mut links,
                        "exceptional-exclusion",
                        format!(
                            "a complete component on {} vertices is a red-independent \
                             set of that size, already bounded above by x - 1",
                            sub.n()
                        ),
                        sub.n() as u64 >= x,
                    ),
                    "odd cycle" => link(
                        &mut links,
                        "exceptional-exclusion",
                        format!(
                            "the blue graph restricted to the component would have to \
                             be a perfect matching on {} vertices, impossible on an \
                             odd count",
                            sub.n()
                        ),
                        sub.n() % 2 == 1,
                    ),
                    _ => link(
                        &mut links,
                        "exceptional-exclusion",
                        "a component exceeds its max degree in chromatic number \
                         without being complete or an odd cycle"
                            .into(),
                        false,
                    ),
                }
            } else {
                link(
                    &mut links,
                    "exceptional-exclusion",
                    format!(
                        "chromatic number {c_chi} stays within the component's max \
                         degree; no escape to refute"
                    ),
                    true,
                );
            }
        }
        None => {
            link(
                &mut links,
                "brooks-classification",
                "no components: the blue-or-missing graph is empty".into(),
                true,
            );
            link(
                &mut links,
                "exceptional-exclusion",
                "no escape to refute".into(),
                true,
            );
        }
    }

    let verdict = match links.iter().find(|l| !l.holds) {
        Some(l) => ChainVerdict::Broken {
            first: l.name.to_string(),
        },
        None => ChainVerdict::Closed,
    };
    Ok(finish(coloring, &red, &non_red, links, verdict))
}

fn finish(
    coloring: &TwoColoring,
    red: &Graph,
    non_red: &Graph,
    links: Vec<ChainLink>,
    verdict: ChainVerdict,
) -> Case2Report {
    Case2Report {
        red_graph6: red.to_graph6(),
        blue_graph6: coloring.blue().to_graph6(),
        non_red_graph6: non_red.to_graph6(),
        links,
        verdict,
    }
}

impl Case2Report {
    pub fn link(&self, name: &str) -> Option<&ChainLink> {
        self.links.iter().find(|l| l.name == name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::build_extremal;
    use crate::graph::Graph;

    #[test]
    fn extremal_coloring_below_threshold_breaks_at_the_first_link() {
        let e = build_extremal(3, 3, 1).unwrap();
        let report = case2_diagnostics(&e.coloring, &e.params).unwrap();
        match &report.verdict {
            ChainVerdict::Broken { first } => assert_eq!(first, "degree-threshold"),
            other => panic!("expected a broken chain, got {other:?}"),
        }
        let blue_link = report.link("blue-min-degree").unwrap();
        assert!(!blue_link.holds);
        assert!(blue_link.computed.contains("min blue degree 1"), "{}", blue_link.computed);
        assert!(blue_link.computed.contains("m = 2"), "{}", blue_link.computed);
    }

    #[test]
    fn all_blue_complete_graph_surfaces_a_witness_before_the_chain_ends() {
        let c = TwoColoring::all_blue(Graph::complete(5).unwrap());
        let params = GoodnessParams::new(3, 3, 5).unwrap();
        let report = case2_diagnostics(&c, &params).unwrap();
        match &report.verdict {
            ChainVerdict::WitnessFound { witness } => {
                assert_eq!(*witness, Witness::BluePath(vec![0, 1, 2]));
            }
            other => panic!("expected a witness, got {other:?}"),
        }
        assert!(report.link("blue-path-free").is_none());
        assert!(report.link("blue-min-degree").unwrap().holds);
    }

    #[test]
    fn red_dense_instances_are_rejected_as_input() {
        // All-red K_5 at (3, 3): red degrees 4 > n - x = 2.
        let c = TwoColoring::all_red(Graph::complete(5).unwrap());
        let params = GoodnessParams::new(3, 3, 5).unwrap();
        let err = case2_diagnostics(&c, &params).unwrap_err();
        assert!(matches!(err, Error::Input(_)), "{err}");
        assert!(err.to_string().contains("descent case"), "{err}");
    }

    #[test]
    fn mismatched_order_is_rejected() {
        let c = TwoColoring::all_blue(Graph::complete(5).unwrap());
        let params = GoodnessParams::new(3, 3, 8).unwrap();
        assert!(case2_diagnostics(&c, &params).is_err());
    }

    #[test]
    fn odd_cycle_component_reaches_the_matching_refutation() {
        // Host: C_5 in red plus two chords in blue, so the blue-or-missing
        // graph is the complementary five cycle: chromatic number 3 = x,
        // an odd cycle escaping its max degree 2.
        let mut host = Graph::new(5).unwrap();
        let red_edges = [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)];
        let blue_edges = [(0, 2), (1, 3)];
        for (u, v) in red_edges.into_iter().chain(blue_edges) {
            host.add_edge(u, v);
        }
        let c = TwoColoring::new(host, &blue_edges).unwrap();
        let params = GoodnessParams::new(3, 3, 5).unwrap();
        let report = case2_diagnostics(&c, &params).unwrap();

        let class = report.link("brooks-classification").unwrap();
        assert!(class.computed.contains("odd cycle"), "{}", class.computed);
        let excl = report.link("exceptional-exclusion").unwrap();
        assert!(excl.holds);
        assert!(excl.computed.contains("perfect matching"), "{}", excl.computed);
        assert!(report.link("non-red-chromatic").unwrap().holds);

        // The instance sits below the threshold, so the chain is broken
        // at the front even though the tail of the chain holds.
        match &report.verdict {
            ChainVerdict::Broken { first } => assert_eq!(first, "degree-threshold"),
            other => panic!("expected a broken chain, got {other:?}"),
        }
    }

    #[test]
    fn chain_reports_are_serializable() {
        let e = build_extremal(2, 3, 1).unwrap();
        let report = case2_diagnostics(&e.coloring, &e.params).unwrap();
        let json = serde_json::to_string(&report).unwrap();
        assert!(json.contains("\"links\""), "{json}");
        assert!(json.contains("degree-threshold"), "{json}");
    }
}
