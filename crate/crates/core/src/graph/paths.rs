//! Path and cycle search.
//!
//! Two engines coexist. `longest_path` and `hamiltonian_cycle` run the exact
//! subset DP (state: vertex set + endpoint), capped at 24 vertices per
//! component. `has_path` runs an ordered DFS with a reachability prune; it is
//! exact at any order the kernel admits and returns the lexicographically
//! least vertex sequence, which the coloring checker relies on. Absence of a
//! path is only ever reported after the search space is exhausted.

use super::{bit, Graph, VertexSet};
use crate::error::{Error, Result};

/// Per-component cap of the subset DP.
pub const MAX_DP_VERTICES: usize = 24;

/// One block of a path-free partition: a component together with a
/// Hamiltonian cycle of its induced subgraph, kept as evidence.
#[derive(Clone, Debug)]
pub struct PathPartition {
    pub component: VertexSet,
    pub hamiltonian_cycle: Vec<usize>,
}

impl Graph {
    /// A path on exactly `t` vertices, as the lexicographically least vertex
    /// sequence over all directed traversals, or `None` if no such path
    /// exists. `t == 0` yields the empty path, `t == 1` a single vertex.
    pub fn has_path(&self, t: usize) -> Option<Vec<usize>> {
        if t == 0 {
            return Some(Vec::new());
        }
        if t == 1 {
            return if self.n > 0 { Some(vec![0]) } else { None };
        }
        if t > self.n {
            return None;
        }
        let comps = self.connected_components();
        let mut seq = Vec::with_capacity(t);
        for start in 0..self.n {
            let comp = comps.iter().find(|c| c.contains(start)).unwrap();
            if comp.len() < t {
                continue;
            }
            seq.push(start);
            if self.path_dfs(start, bit(start), t, &mut seq) {
                return Some(seq);
            }
            seq.pop();
        }
        None
    }

    fn path_dfs(&self, last: usize, visited: u64, t: usize, seq: &mut Vec<usize>) -> bool {
        if seq.len() == t {
            return true;
        }
        // The rest of the path lives among unvisited vertices reachable from
        // `last`; prune when too few remain.
        let free = self.vertices().mask() & !visited | bit(last);
        if self.reach(last, VertexSet::from_mask(free)).len() < t - seq.len() + 1 {
            return false;
        }
        let mut m = self.adj[last] & !visited;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            seq.push(v);
            if self.path_dfs(v, visited | bit(v), t, seq) {
                return true;
            }
            seq.pop();
        }
        false
    }

    /// A longest path, exact, as a vertex sequence. Errors with a capacity
    /// error if any connected component exceeds [`MAX_DP_VERTICES`]; use
    /// [`Graph::has_path`] for bounded queries beyond that.
    pub fn longest_path(&self) -> Result<Vec<usize>> {
        let mut best: Vec<usize> = Vec::new();
        for comp in self.connected_components() {
            if comp.len() > MAX_DP_VERTICES {
                return Err(Error::Capacity {
                    what: "longest_path component",
                    limit: MAX_DP_VERTICES,
                    got: comp.len(),
                });
            }
            let (sub, map) = self.induced(comp).unwrap();
            let local = sub.longest_path_dp();
            if local.len() > best.len() {
                best = local.into_iter().map(|v| map[v]).collect();
            }
        }
        Ok(best)
    }

    /// Subset DP over one component (callable on any graph with n <= 24).
    /// dp[mask] = bitset of endpoints v such that some simple path covers
    /// exactly `mask` and ends at v.
    fn longest_path_dp(&self) -> Vec<usize> {
        let n = self.n;
        if n == 0 {
            return Vec::new();
        }
        debug_assert!(n <= MAX_DP_VERTICES);
        let full = (1u32 << n) - 1;
        let mut dp = vec![0u32; (full as usize) + 1];
        for v in 0..n {
            dp[1usize << v] = 1 << v;
        }
        let mut best_mask = 1usize;
        for mask in 1..=(full as usize) {
            let ends = dp[mask];
            if ends == 0 {
                continue;
            }
            if (mask as u32).count_ones() > (best_mask as u32).count_ones() {
                best_mask = mask;
            }
            let mut e = ends;
            while e != 0 {
                let v = e.trailing_zeros() as usize;
                e &= e - 1;
                let mut m = (self.adj[v] as u32) & !(mask as u32);
                while m != 0 {
                    let w = m.trailing_zeros() as usize;
                    m &= m - 1;
                    dp[mask | (1 << w)] |= 1 << w;
                }
            }
        }
        // Reconstruct from the first-best mask: start at its smallest
        // endpoint and follow smallest predecessors. The predecessor chain
        // is itself a path sequence, so no reversal; deterministic.
        let mut mask = best_mask;
        let mut v = dp[mask].trailing_zeros() as usize;
        let mut path = vec![v];
        while mask.count_ones() > 1 {
            let prev_mask = mask & !(1usize << v);
            let preds = dp[prev_mask] & (self.adj[v] as u32);
            debug_assert!(preds != 0);
            let u = preds.trailing_zeros() as usize;
            path.push(u);
            mask = prev_mask;
            v = u;
        }
        path
    }

    /// A Hamiltonian cycle as a vertex sequence (closing edge implied), or
    /// `None`. Graphs on fewer than 3 vertices have no cycle. Exact; capped
    /// at [`MAX_DP_VERTICES`].
    pub fn hamiltonian_cycle(&self) -> Result<Option<Vec<usize>>> {
        if self.n > MAX_DP_VERTICES {
            return Err(Error::Capacity {
                what: "hamiltonian_cycle order",
                limit: MAX_DP_VERTICES,
                got: self.n,
            });
        }
        if self.n < 3 || !self.is_connected() {
            return Ok(None);
        }
        let n = self.n;
        let full = (1u32 << n) - 1;
        // Paths anchored at vertex 0.
        let mut dp = vec![0u32; (full as usize) + 1];
        dp[1] = 1;
        for mask in 1..=(full as usize) {
            if mask & 1 == 0 {
                continue;
            }
            let ends = dp[mask];
            if ends == 0 {
                continue;
            }
            let mut e = ends;
            while e != 0 {
                let v = e.trailing_zeros() as usize;
                e &= e - 1;
                let mut m = (self.adj[v] as u32) & !(mask as u32);
                while m != 0 {
                    let w = m.trailing_zeros() as usize;
                    m &= m - 1;
                    dp[mask | (1 << w)] |= 1 << w;
                }
            }
        }
        let closers = dp[full as usize] & (self.adj[0] as u32);
        if closers == 0 {
            return Ok(None);
        }
        let mut v = closers.trailing_zeros() as usize;
        let mut mask = full as usize;
        let mut cycle = vec![v];
        while v != 0 {
            let prev_mask = mask & !(1usize << v);
            let preds = dp[prev_mask] & (self.adj[v] as u32);
            let u = preds.trailing_zeros() as usize;
            cycle.push(u);
            mask = prev_mask;
            v = u;
        }
        cycle.reverse();
        Ok(Some(cycle))
    }

    /// Minimum degree at least floor(n/(k+1)) forces a path on at least
    /// ceil(n/k) vertices; returns such a path. Requires `k >= 1`.
    pub fn min_degree_long_path(&self, k: usize) -> Result<Vec<usize>> {
        if k == 0 {
            return Err(Error::Input("min_degree_long_path requires k >= 1".into()));
        }
        let need_delta = self.n / (k + 1);
        let delta = self.min_degree().unwrap_or(usize::MAX);
        if self.n > 0 && delta < need_delta {
            return Err(Error::Input(format!(
                "min degree {delta} below floor(n/(k+1)) = {need_delta}"
            )));
        }
        let target = self.n.div_ceil(k);
        match self.has_path(target) {
            Some(p) => Ok(p),
            None => Err(Error::LemmaViolation {
                lemma: "min-degree long path",
                detail: format!(
                    "no path on ceil({}/{k}) = {target} vertices despite min degree {delta}",
                    self.n
                ),
            }),
        }
    }

    /// A connected graph on n >= 2*delta + 1 vertices has a path on at least
    /// 2*delta + 1 vertices; returns such a path.
    pub fn erdos_gallai_path(&self) -> Result<Vec<usize>> {
        if !self.is_connected() {
            return Err(Error::Input("erdos_gallai_path requires a connected graph".into()));
        }
        let delta = self.min_degree().unwrap();
        let target = 2 * delta + 1;
        if self.n < target {
            return Err(Error::Input(format!(
                "order {} below 2*delta + 1 = {target}",
                self.n
            )));
        }
        match self.has_path(target) {
            Some(p) => Ok(p),
            None => Err(Error::LemmaViolation {
                lemma: "Erdos-Gallai path",
                detail: format!("no path on 2*{delta}+1 = {target} vertices in a connected graph"),
            }),
        }
    }

    /// For a graph with no path on `d` vertices and min degree at least
    /// floor(d/2): every component has between floor(d/2)+1 and d-1 vertices
    /// and a Hamiltonian cycle. Returns the components with their cycles as
    /// evidence. Precondition failures are input errors; a component
    /// violating the conclusion is a lemma violation and surfaces as such.
    pub fn path_free_partition(&self, d: usize) -> Result<Vec<PathPartition>> {
        if d < 2 {
            return Err(Error::Input("path_free_partition requires d >= 2".into()));
        }
        let floor_half = d / 2;
        if self.n == 0 {
            return Ok(Vec::new());
        }
        let delta = self.min_degree().unwrap();
        if delta < floor_half {
            return Err(Error::Input(format!(
                "min degree {delta} below floor(d/2) = {floor_half}"
            )));
        }
        if let Some(p) = self.has_path(d) {
            return Err(Error::Input(format!(
                "graph contains a path on {d} vertices: {p:?}"
            )));
        }
        let mut out = Vec::new();
        for comp in self.connected_components() {
            let size = comp.len();
            if size < floor_half + 1 || size > d - 1 {
                return Err(Error::LemmaViolation {
                    lemma: "path-free partition",
                    detail: format!(
                        "component {comp:?} has {size} vertices, outside [{}, {}]",
                        floor_half + 1,
                        d - 1
                    ),
                });
            }
            let (sub, map) = self.induced(comp).unwrap();
            match sub.hamiltonian_cycle()? {
                Some(cycle) => out.push(PathPartition {
                    component: comp,
                    hamiltonian_cycle: cycle.into_iter().map(|v| map[v]).collect(),
                }),
                None => {
                    return Err(Error::LemmaViolation {
                        lemma: "path-free partition",
                        detail: format!("component {comp:?} has no Hamiltonian cycle"),
                    })
                }
            }
        }
        Ok(out)
    }
}
