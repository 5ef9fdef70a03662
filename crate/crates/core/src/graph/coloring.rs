//! Proper colorings: exact chromatic number, chromatic surplus, and a
//! constructive Brooks coloring.
//!
//! Chromatic search is plain branch and bound: a clique gives the lower
//! bound, greedy gives the upper bound, and k-colorability is decided by
//! backtracking with canonical color symmetry breaking (a vertex may open at
//! most one new color). The surplus enumeration reuses the same canonical
//! rule so each coloring is visited once per color-class partition.

use super::{bit, Graph};
use crate::error::{Error, Result};

/// Default order cap of the surplus enumeration.
pub const MAX_SURPLUS_VERTICES: usize = 12;

/// A proper coloring with colors `0..num_colors`, every color used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProperColoring {
    pub colors: Vec<usize>,
    pub num_colors: usize,
}

impl ProperColoring {
    /// Check properness and that each color below `num_colors` occurs.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        if self.colors.len() != g.n() {
            return false;
        }
        if self.colors.iter().any(|&c| c >= self.num_colors) {
            return false;
        }
        let mut used = vec![false; self.num_colors];
        for (v, &c) in self.colors.iter().enumerate() {
            used[c] = true;
            for u in g.neighbors(v).iter() {
                if u > v && self.colors[u] == c {
                    return false;
                }
            }
        }
        used.iter().all(|&u| u)
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0usize; self.num_colors];
        for &c in &self.colors {
            sizes[c] += 1;
        }
        sizes
    }

    /// Renumber colors by first occurrence so every index is used.
    fn canonicalize(colors: Vec<usize>) -> ProperColoring {
        let mut map = std::collections::HashMap::new();
        let mut out = Vec::with_capacity(colors.len());
        for c in colors {
            let next = map.len();
            out.push(*map.entry(c).or_insert(next));
        }
        ProperColoring {
            num_colors: map.len(),
            colors: out,
        }
    }
}

impl Graph {
    fn greedy_coloring_count(&self) -> usize {
        let mut colors = vec![usize::MAX; self.n];
        let mut count = 0;
        for v in 0..self.n {
            let mut used = 0u64;
            for u in self.neighbors(v).iter() {
                if colors[u] != usize::MAX {
                    used |= bit(colors[u]);
                }
            }
            let c = (!used).trailing_zeros() as usize;
            colors[v] = c;
            count = count.max(c + 1);
        }
        count
    }

    fn colorable_with(&self, k: usize) -> Option<Vec<usize>> {
        let mut colors = vec![usize::MAX; self.n];
        fn go(g: &Graph, k: usize, v: usize, max_used: usize, colors: &mut Vec<usize>) -> bool {
            if v == g.n() {
                return true;
            }
            let mut forbidden = 0u64;
            for u in g.neighbors(v).iter() {
                if u < v {
                    forbidden |= bit(colors[u]);
                }
            }
            // Canonical rule: at most one fresh color per vertex.
            let top = (max_used + 1).min(k);
            for c in 0..top {
                if forbidden & bit(c) == 0 {
                    colors[v] = c;
                    if go(g, k, v + 1, max_used.max(c + 1), colors) {
                        return true;
                    }
                }
            }
            colors[v] = usize::MAX;
            false
        }
        if go(self, k, 0, 0, &mut colors) {
            Some(colors)
        } else {
            None
        }
    }

    /// Exact chromatic number with an optimal coloring.
    pub fn chromatic_number(&self) -> (usize, ProperColoring) {
        if self.n == 0 {
            return (
                0,
                ProperColoring {
                    colors: Vec::new(),
                    num_colors: 0,
                },
            );
        }
        let lower = self.clique_number().max(1);
        let upper = self.greedy_coloring_count();
        for k in lower..=upper {
            if let Some(colors) = self.colorable_with(k) {
                let pc = ProperColoring::canonicalize(colors);
                debug_assert_eq!(pc.num_colors, k);
                return (k, pc);
            }
        }
        unreachable!("greedy bound is always achievable");
    }

    /// Chromatic surplus: the smallest color-class size over all proper
    /// colorings with exactly chi(g) colors. Requires at least one vertex;
    /// orders above `limit` are a capacity error.
    pub fn chromatic_surplus_with_limit(&self, limit: usize) -> Result<usize> {
        if self.n == 0 {
            return Err(Error::Input("chromatic surplus needs at least one vertex".into()));
        }
        if self.n > limit {
            return Err(Error::Capacity {
                what: "chromatic_surplus order",
                limit,
                got: self.n,
            });
        }
        let (chi, _) = self.chromatic_number();
        let mut best = self.n;
        let mut counts = vec![0usize; chi];
        let mut colors = vec![usize::MAX; self.n];
        self.surplus_enum(chi, 0, 0, &mut colors, &mut counts, &mut best);
        debug_assert!(best >= 1);
        Ok(best)
    }

    pub fn chromatic_surplus(&self) -> Result<usize> {
        self.chromatic_surplus_with_limit(MAX_SURPLUS_VERTICES)
    }

    fn surplus_enum(
        &self,
        chi: usize,
        v: usize,
        max_used: usize,
        colors: &mut Vec<usize>,
        counts: &mut Vec<usize>,
        best: &mut usize,
    ) {
        if v == self.n {
            if max_used == chi {
                let m = *counts.iter().min().unwrap();
                *best = (*best).min(m);
            }
            return;
        }
        // Colors still to be opened must fit in the remaining vertices.
        if chi - max_used > self.n - v {
            return;
        }
        let mut forbidden = 0u64;
        for u in self.neighbors(v).iter() {
            if u < v {
                forbidden |= bit(colors[u]);
            }
        }
        let top = (max_used + 1).min(chi);
        for c in 0..top {
            if forbidden & bit(c) == 0 {
                colors[v] = c;
                counts[c] += 1;
                self.surplus_enum(chi, v + 1, max_used.max(c + 1), colors, counts, best);
                counts[c] -= 1;
            }
        }
        colors[v] = usize::MAX;
    }

    /// A proper coloring meeting the Brooks bound, built constructively:
    /// complete graphs get n colors, odd cycles 3, every other connected
    /// graph at most max-degree colors. Errors on disconnected input.
    pub fn brooks_coloring(&self) -> Result<ProperColoring> {
        if !self.is_connected() {
            return Err(Error::Input("brooks_coloring requires a connected graph".into()));
        }
        let n = self.n;
        let delta = self.max_degree().unwrap();
        if (0..n).all(|v| self.degree(v) == n - 1) {
            return Ok(ProperColoring {
                colors: (0..n).collect(),
                num_colors: n,
            });
        }
        if n % 2 == 1 && (0..n).all(|v| self.degree(v) == 2) {
            // Odd cycle: walk it and alternate, closing with a third color.
            let mut colors = vec![usize::MAX; n];
            let mut prev = 0;
            let mut cur = 0;
            for i in 0..n {
                colors[cur] = if i == n - 1 { 2 } else { i % 2 };
                let next = self
                    .neighbors(cur)
                    .iter()
                    .find(|&u| u != prev && colors[u] == usize::MAX);
                prev = cur;
                if let Some(nx) = next {
                    cur = nx;
                }
            }
            return Ok(ProperColoring {
                colors,
                num_colors: 3,
            });
        }
        if delta <= 2 {
            // Path or even cycle: bipartition.
            let mut colors = vec![usize::MAX; n];
            let mut queue = std::collections::VecDeque::from([0usize]);
            colors[0] = 0;
            while let Some(v) = queue.pop_front() {
                for u in self.neighbors(v).iter() {
                    if colors[u] == usize::MAX {
                        colors[u] = 1 - colors[v];
                        queue.push_back(u);
                    }
                }
            }
            return Ok(ProperColoring::canonicalize(colors));
        }
        if let Some(v) = (0..n).find(|&v| self.degree(v) < delta) {
            let colors = self.greedy_from_root(self.vertices().mask(), v, &[]);
            return Ok(ProperColoring::canonicalize(colors));
        }
        // Regular with a cut vertex: color each lobe rooted at the cut
        // vertex (where its degree drops below delta) and align on it.
        if let Some(v) = (0..n).find(|&v| {
            let rest = self.vertices().mask() & !bit(v);
            let start = rest.trailing_zeros() as usize;
            self.reach(start, super::VertexSet::from_mask(rest | bit(start))).mask() & rest != rest
        }) {
            let mut colors = vec![usize::MAX; n];
            let rest = self.vertices().mask() & !bit(v);
            let mut unseen = rest;
            while unseen != 0 {
                let s = unseen.trailing_zeros() as usize;
                let comp = self.reach(s, super::VertexSet::from_mask(unseen | bit(s))).mask() & unseen;
                unseen &= !comp;
                let lobe = comp | bit(v);
                let mut local = self.greedy_from_root(lobe, v, &[]);
                // Swap colors so the cut vertex is color 0 in every lobe.
                let cv = local[v];
                for x in super::VertexSet::from_mask(lobe).iter() {
                    if local[x] == cv {
                        local[x] = 0;
                    } else if local[x] == 0 {
                        local[x] = cv;
                    }
                    colors[x] = local[x];
                }
            }
            return Ok(ProperColoring::canonicalize(colors));
        }
        // Regular, 2-connected, not complete, max degree >= 3: find a vertex
        // with two non-adjacent neighbors whose removal keeps the graph
        // connected, give both the same color, then greedy toward the root.
        for w in 0..n {
            let nb: Vec<usize> = self.neighbors(w).to_vec();
            for (i, &u1) in nb.iter().enumerate() {
                for &u2 in nb.iter().skip(i + 1) {
                    if self.has_edge(u1, u2) {
                        continue;
                    }
                    let rest = self.vertices().mask() & !bit(u1) & !bit(u2);
                    let start = rest.trailing_zeros() as usize;
                    if self.reach(start, super::VertexSet::from_mask(rest)).mask() == rest {
                        let colors = self.greedy_from_root(self.vertices().mask(), w, &[u1, u2]);
                        return Ok(ProperColoring::canonicalize(colors));
                    }
                }
            }
        }
        // Unreachable for valid inputs; the exact coloring still satisfies
        // the Brooks bound, so fall through to it rather than guess.
        Ok(self.chromatic_number().1)
    }

    /// Greedy coloring of the vertices in `within`, processed in order of
    /// decreasing BFS distance from `root` (root last). `precolored`
    /// vertices all receive color 0 up front and are excluded from the BFS.
    fn greedy_from_root(&self, within: u64, root: usize, precolored: &[usize]) -> Vec<usize> {
        let mut colors = vec![usize::MAX; self.n];
        let mut pre_mask = 0u64;
        for &p in precolored {
            colors[p] = 0;
            pre_mask |= bit(p);
        }
        let live = within & !pre_mask;
        let mut order = Vec::with_capacity(live.count_ones() as usize);
        let mut seen = bit(root);
        let mut frontier = vec![root];
        order.push(root);
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &v in &frontier {
                for u in self.neighbors(v).iter() {
                    if live & bit(u) != 0 && seen & bit(u) == 0 {
                        seen |= bit(u);
                        next.push(u);
                    }
                }
            }
            next.sort_unstable();
            order.extend_from_slice(&next);
            frontier = next;
        }
        debug_assert_eq!(order.len(), live.count_ones() as usize);
        for &v in order.iter().rev() {
            let mut used = 0u64;
            for u in self.neighbors(v).iter() {
                if within & bit(u) != 0 && colors[u] != usize::MAX {
                    used |= bit(colors[u]);
                }
            }
            colors[v] = (!used).trailing_zeros() as usize;
        }
        colors
    }
}

#[cfg(test)]
mod tests {
    use super::super::Graph;
    use crate::error::Error;

    /// Try every assignment from k colors directly; oracle for small cases.
    fn brute_colorable(g: &Graph, k: usize) -> bool {
        let n = g.n();
        if n == 0 {
            return true;
        }
        let mut assign = vec![0usize; n];
        loop {
            let proper = g
                .edges()
                .iter()
                .all(|&(u, v)| assign[u] != assign[v]);
            if proper {
                return true;
            }
            let mut i = 0;
            loop {
                if i == n {
                    return false;
                }
                assign[i] += 1;
                if assign[i] < k {
                    break;
                }
                assign[i] = 0;
                i += 1;
            }
        }
    }

    fn brute_surplus(g: &Graph, chi: usize) -> usize {
        let n = g.n();
        let mut assign = vec![0usize; n];
        let mut best = n;
        loop {
            let proper = g.edges().iter().all(|&(u, v)| assign[u] != assign[v]);
            if proper {
                let mut counts = vec![0usize; chi];
                for &c in &assign {
                    counts[c] += 1;
                }
                if counts.iter().all(|&c| c > 0) {
                    best = best.min(*counts.iter().min().unwrap());
                }
            }
            let mut i = 0;
            loop {
                if i == n {
                    return best;
                }
                assign[i] += 1;
                if assign[i] < chi {
                    break;
                }
                assign[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn chromatic_number_of_cliques_and_cycles() {
        for r in 1..=6 {
            let (chi, pc) = Graph::complete(r).unwrap().chromatic_number();
            assert_eq!(chi, r);
            assert!(pc.is_valid_for(&Graph::complete(r).unwrap()));
        }
        let (chi, pc) = Graph::cycle(5).unwrap().chromatic_number();
        assert_eq!(chi, 3);
        assert!(pc.is_valid_for(&Graph::cycle(5).unwrap()));
        assert_eq!(Graph::new(0).unwrap().chromatic_number().0, 0);
        assert_eq!(Graph::new(3).unwrap().chromatic_number().0, 1);
    }

    #[test]
    fn petersen_is_3_chromatic() {
        let p = Graph::petersen();
        assert!(!brute_colorable(&p, 2));
        assert!(brute_colorable(&p, 3));
        let (chi, pc) = p.chromatic_number();
        assert_eq!(chi, 3);
        assert!(pc.is_valid_for(&p));
    }

    #[test]
    fn surplus_examples() {
        for r in 2..=5 {
            assert_eq!(Graph::complete(r).unwrap().chromatic_surplus().unwrap(), 1);
        }
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(brute_surplus(&c5, 3), 1);
        assert_eq!(c5.chromatic_surplus().unwrap(), 1);
        // Octahedron K_{2,2,2}: the only 3-coloring uses the three pairs.
        let oct = Graph::from_edges(
            6,
            &[(0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (3, 4), (3, 5)],
        )
        .unwrap();
        assert_eq!(brute_surplus(&oct, 3), 2);
        assert_eq!(oct.chromatic_surplus().unwrap(), 2);
    }

    #[test]
    fn surplus_guards() {
        assert!(matches!(
            Graph::new(0).unwrap().chromatic_surplus(),
            Err(Error::Input(_))
        ));
        assert!(matches!(
            Graph::complete(13).unwrap().chromatic_surplus(),
            Err(Error::Capacity { .. })
        ));
        assert_eq!(
            Graph::complete(13).unwrap().chromatic_surplus_with_limit(13).unwrap(),
            1
        );
    }

    #[test]
    fn brooks_on_the_exceptional_families() {
        let k4 = Graph::complete(4).unwrap();
        let pc = k4.brooks_coloring().unwrap();
        assert_eq!(pc.num_colors, 4);
        assert!(pc.is_valid_for(&k4));

        let c7 = Graph::cycle(7).unwrap();
        let pc = c7.brooks_coloring().unwrap();
        assert_eq!(pc.num_colors, 3);
        assert!(pc.is_valid_for(&c7));

        let k1 = Graph::complete(1).unwrap();
        assert_eq!(k1.brooks_coloring().unwrap().num_colors, 1);
    }

    #[test]
    fn brooks_meets_the_bound_elsewhere() {
        let petersen = Graph::petersen();
        let pc = petersen.brooks_coloring().unwrap();
        assert!(pc.num_colors <= 3);
        assert!(pc.is_valid_for(&petersen));

        let c6 = Graph::cycle(6).unwrap();
        let pc = c6.brooks_coloring().unwrap();
        assert!(pc.num_colors <= 2);
        assert!(pc.is_valid_for(&c6));

        let p5 = Graph::path_graph(5).unwrap();
        let pc = p5.brooks_coloring().unwrap();
        assert!(pc.num_colors <= 2);
        assert!(pc.is_valid_for(&p5));

        // K_{2,2,2} is 4-regular and 2-connected, so it exercises the
        // two-nonadjacent-neighbors branch.
        let oct = Graph::from_edges(
            6,
            &[(0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (3, 4), (3, 5)],
        )
        .unwrap();
        let pc = oct.brooks_coloring().unwrap();
        assert!(pc.num_colors <= 4);
        assert!(pc.is_valid_for(&oct));
    }

    #[test]
    fn brooks_on_a_regular_graph_with_a_cut_vertex() {
        // 3-regular, vertex 9 is an articulation point: one lobe is C5 plus
        // two chords hanging on by one edge, the other K4 minus an edge
        // hanging on by two.
        let g = Graph::from_edges(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 2), (1, 3),
                (5, 6), (5, 7), (5, 8), (6, 7), (6, 8),
                (9, 4), (9, 7), (9, 8),
            ],
        )
        .unwrap();
        assert!((0..10).all(|v| g.degree(v) == 3));
        let pc = g.brooks_coloring().unwrap();
        assert!(pc.num_colors <= 3);
        assert!(pc.is_valid_for(&g));
    }

    #[test]
    fn brooks_rejects_disconnected_graphs() {
        assert!(Graph::new(2).unwrap().brooks_coloring().is_err());
    }
}
