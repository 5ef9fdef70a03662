//! Clique and independent-set search.
//!
//! The searches try vertices in ascending order, so the first witness found
//! is the lexicographically least one when sets are read as sorted lists.

use super::{Graph, VertexSet};

impl Graph {
    /// Lexicographically least clique on exactly `size` vertices, or `None`.
    /// `size == 0` is the empty clique.
    pub fn find_clique(&self, size: usize) -> Option<VertexSet> {
        if size == 0 {
            return Some(VertexSet::EMPTY);
        }
        if size > self.n {
            return None;
        }
        let mut chosen = VertexSet::EMPTY;
        if self.clique_dfs(self.vertices().mask(), size, &mut chosen) {
            Some(chosen)
        } else {
            None
        }
    }

    fn clique_dfs(&self, candidates: u64, need: usize, chosen: &mut VertexSet) -> bool {
        if need == 0 {
            return true;
        }
        if (candidates.count_ones() as usize) < need {
            return false;
        }
        let mut m = candidates;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            chosen.insert(v);
            // Only vertices above v keep the enumeration in lexicographic order.
            if self.clique_dfs(candidates & self.adj[v] & !((1u64 << v) | ((1u64 << v) - 1)), need - 1, chosen) {
                return true;
            }
            chosen.remove(v);
        }
        false
    }

    /// Existence-only clique test restricted to `within`; used by hot loops
    /// that do not need a witness.
    pub(crate) fn has_clique_within(&self, within: u64, size: usize) -> bool {
        fn dfs(adj: &[u64], candidates: u64, need: usize) -> bool {
            if need == 0 {
                return true;
            }
            if (candidates.count_ones() as usize) < need {
                return false;
            }
            let mut m = candidates;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                if dfs(adj, m & adj[v], need - 1) {
                    return true;
                }
            }
            false
        }
        dfs(&self.adj, within, size)
    }

    /// Lexicographically least independent set on exactly `size` vertices.
    /// Identical to `find_clique` on the complement, including tie-breaking.
    pub fn find_independent_set(&self, size: usize) -> Option<VertexSet> {
        self.complement().find_clique(size)
    }

    /// Size of a maximum clique.
    pub fn clique_number(&self) -> usize {
        let mut best = 0;
        fn dfs(adj: &[u64], candidates: u64, depth: usize, best: &mut usize) {
            if depth + (candidates.count_ones() as usize) <= *best {
                return;
            }
            if candidates == 0 {
                *best = (*best).max(depth);
                return;
            }
            let mut m = candidates;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                dfs(adj, m & adj[v], depth + 1, best);
            }
        }
        dfs(&self.adj, self.vertices().mask(), 0, &mut best);
        best
    }

    /// Enumerate independent sets of exactly `size` vertices in
    /// lexicographic order, invoking `f` on each until it returns `false`
    /// or `cap` sets have been visited.
    pub fn for_each_independent_set(
        &self,
        size: usize,
        cap: usize,
        f: &mut dyn FnMut(VertexSet) -> bool,
    ) {
        let co = self.complement();
        let mut seen = 0usize;
        let mut chosen = VertexSet::EMPTY;
        co.indep_enum_dfs(co.vertices().mask(), size, cap, &mut seen, &mut chosen, f);
    }

    fn indep_enum_dfs(
        &self,
        candidates: u64,
        need: usize,
        cap: usize,
        seen: &mut usize,
        chosen: &mut VertexSet,
        f: &mut dyn FnMut(VertexSet) -> bool,
    ) -> bool {
        // self is the complement here, so cliques of self are independent
        // sets of the original graph.
        if need == 0 {
            *seen += 1;
            return f(*chosen) && *seen < cap;
        }
        if (candidates.count_ones() as usize) < need {
            return true;
        }
        let mut m = candidates;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            chosen.insert(v);
            let go_on = self.indep_enum_dfs(m & self.adj[v], need - 1, cap, seen, chosen, f);
            chosen.remove(v);
            if !go_on {
                return false;
            }
        }
        true
    }
}
