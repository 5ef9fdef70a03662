//! Simple undirected graphs on at most 64 vertices.
//!
//! Adjacency is one `u64` bitmask per vertex, so neighborhood intersections,
//! degree counts, and component traversals are single machine operations.
//! Everything downstream (clique search, path DP, the arrowing kernel) leans
//! on that representation; the 64-vertex cap is checked at construction and
//! reported as a capacity error, never silently truncated.

mod cliques;
mod coloring;
mod enumerate;
mod io;
mod paths;

pub use coloring::ProperColoring;
pub use enumerate::graphs_up_to_iso;
pub use paths::PathPartition;

use crate::error::{Error, Result};

/// Hard cap of the bitset kernel.
pub const MAX_VERTICES: usize = 64;

#[inline(always)]
const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// A subset of the vertices `0..n` of some graph, stored as a bitmask.
///
/// Sets compare by their sorted member lists; for witnesses we always want
/// the lexicographically least one, which the searches produce by trying
/// vertices in ascending order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline(always)]
    pub fn from_mask(mask: u64) -> Self {
        VertexSet(mask)
    }

    pub fn from_slice(vs: &[usize]) -> Self {
        let mut m = 0u64;
        for &v in vs {
            debug_assert!(v < MAX_VERTICES);
            m |= bit(v);
        }
        VertexSet(m)
    }

    #[inline(always)]
    pub fn mask(self) -> u64 {
        self.0
    }

    #[inline(always)]
    pub fn contains(self, v: usize) -> bool {
        self.0 & bit(v) != 0
    }

    #[inline(always)]
    pub fn insert(&mut self, v: usize) {
        self.0 |= bit(v);
    }

    #[inline(always)]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !bit(v);
    }

    #[inline(always)]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline(always)]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline(always)]
    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline(always)]
    pub fn intersect(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    #[inline(always)]
    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    /// Smallest member, if any.
    #[inline(always)]
    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut m = self.0;
        std::iter::from_fn(move || {
            if m == 0 {
                None
            } else {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices. Errors above [`MAX_VERTICES`].
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Capacity {
                what: "graph order",
                limit: MAX_VERTICES,
                got: n,
            });
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
        })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::new(n)?;
        let all = g.vertices().mask();
        for v in 0..n {
            g.adj[v] = all & !bit(v);
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        let mut g = Graph::new(n)?;
        if n >= 3 {
            for v in 0..n {
                g.add_edge(v, (v + 1) % n);
            }
        } else if n == 2 {
            g.add_edge(0, 1);
        }
        Ok(g)
    }

    pub fn path_graph(n: usize) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        Ok(g)
    }

    /// The Petersen graph: outer 5-cycle, inner pentagram, spokes.
    pub fn petersen() -> Self {
        let mut g = Graph::new(10).unwrap();
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
            g.add_edge(i, 5 + i);
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Input(format!(
                    "edge ({u},{v}) out of range for n = {n}"
                )));
            }
            if u == v {
                return Err(Error::Input(format!("self-loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    #[inline(always)]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Bitmask of all `n` vertices.
    #[inline(always)]
    pub fn vertices(&self) -> VertexSet {
        if self.n == MAX_VERTICES {
            VertexSet(!0)
        } else {
            VertexSet((1u64 << self.n) - 1)
        }
    }

    #[inline(always)]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.adj[u] & bit(v) != 0
    }

    #[inline(always)]
    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u < self.n && v < self.n && u != v);
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    #[inline(always)]
    pub fn remove_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u < self.n && v < self.n);
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
    }

    #[inline(always)]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        debug_assert!(v < self.n);
        VertexSet(self.adj[v])
    }

    #[inline(always)]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Minimum degree; `None` for the empty graph (a minimum over nothing).
    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).max()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut m = self.adj[u] & !(bit(u) | (bit(u) - 1));
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                out.push((u, v));
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices().mask();
        let mut g = Graph {
            n: self.n,
            adj: vec![0; self.n],
        };
        for v in 0..self.n {
            g.adj[v] = all & !self.adj[v] & !bit(v);
        }
        g
    }

    /// Induced subgraph on `s`. Vertices are relabeled in ascending order of
    /// their original index; the returned map sends new labels to old ones.
    pub fn induced(&self, s: VertexSet) -> Result<(Graph, Vec<usize>)> {
        if !s.is_subset_of(self.vertices()) {
            return Err(Error::Input(format!(
                "vertex set {s:?} not contained in 0..{}",
                self.n
            )));
        }
        let map: Vec<usize> = s.iter().collect();
        let mut g = Graph {
            n: map.len(),
            adj: vec![0; map.len()],
        };
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.adj[i] |= bit(j);
                    g.adj[j] |= bit(i);
                }
            }
        }
        Ok((g, map))
    }

    /// Vertices reachable from `start` while staying inside `within`.
    pub(crate) fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        debug_assert!(within.contains(start));
        let mut seen = bit(start);
        let mut frontier = bit(start);
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v];
            }
            next &= within.mask() & !seen;
            seen |= next;
            frontier = next;
        }
        VertexSet(seen)
    }

    /// Connected components, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut unseen = self.vertices().mask();
        while unseen != 0 {
            let v = unseen.trailing_zeros() as usize;
            let comp = self.reach(v, VertexSet(unseen));
            unseen &= !comp.mask();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        match self.n {
            0 => false,
            _ => self.reach(0, self.vertices()).len() == self.n,
        }
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}


#[cfg(test)]
mod tests {
    use super::testutil::isomorphic;
    use super::*;

    #[test]
    fn vertex_set_basics() {
        let mut s = VertexSet::EMPTY;
        assert!(s.is_empty());
        s.insert(3);
        s.insert(0);
        s.insert(7);
        assert_eq!(s.len(), 3);
        assert_eq!(s.to_vec(), vec![0, 3, 7]);
        assert_eq!(s.min(), Some(0));
        s.remove(0);
        assert_eq!(s.min(), Some(3));
        assert!(VertexSet::from_slice(&[3, 7]).is_subset_of(s.union(VertexSet::from_slice(&[3]))));
    }

    #[test]
    fn order_cap_is_checked() {
        assert!(Graph::new(64).is_ok());
        assert!(matches!(
            Graph::new(65),
            Err(Error::Capacity { limit: 64, got: 65, .. })
        ));
    }

    #[test]
    fn complement_of_complete_is_empty() {
        let g = Graph::complete(4).unwrap();
        assert_eq!(g.complement().edge_count(), 0);
        let e = Graph::new(3).unwrap();
        assert_eq!(e.complement().edges(), vec![(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn complement_of_c5_is_isomorphic_to_c5() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(isomorphic(&c5.complement(), &c5));
    }

    #[test]
    fn complement_at_full_width() {
        let g = Graph::new(64).unwrap();
        let c = g.complement();
        assert_eq!(c.edge_count(), 64 * 63 / 2);
        assert_eq!(c.complement().edge_count(), 0);
    }

    #[test]
    fn induced_relabels_ascending() {
        let k5 = Graph::complete(5).unwrap();
        let (h, map) = k5.induced(VertexSet::from_slice(&[0, 1, 2])).unwrap();
        assert_eq!(h.edges(), vec![(0, 1), (0, 2), (1, 2)]);
        assert_eq!(map, vec![0, 1, 2]);

        let c6 = Graph::cycle(6).unwrap();
        let (p, map) = c6.induced(VertexSet::from_slice(&[0, 1, 2, 3])).unwrap();
        assert_eq!(p.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(map, vec![0, 1, 2, 3]);

        let (sub, map) = c6.induced(VertexSet::from_slice(&[1, 3, 5])).unwrap();
        assert_eq!(sub.edge_count(), 0);
        assert_eq!(map, vec![1, 3, 5]);
    }

    #[test]
    fn induced_rejects_out_of_range() {
        let g = Graph::complete(3).unwrap();
        assert!(g.induced(VertexSet::from_slice(&[0, 5])).is_err());
    }

    #[test]
    fn components_ordered_by_smallest_member() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let comps = g.connected_components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].to_vec(), vec![0, 1, 2]);
        assert_eq!(comps[1].to_vec(), vec![3, 4, 5]);

        let e3 = Graph::new(3).unwrap();
        assert_eq!(e3.connected_components().len(), 3);

        let c7 = Graph::cycle(7).unwrap();
        assert_eq!(c7.connected_components().len(), 1);
        assert!(c7.is_connected());
    }

    #[test]
    fn degree_bookkeeping() {
        let p = Graph::petersen();
        assert_eq!(p.n(), 10);
        assert_eq!(p.edge_count(), 15);
        assert_eq!(p.min_degree(), Some(3));
        assert_eq!(p.max_degree(), Some(3));
        assert!(p.is_connected());
        assert_eq!(Graph::new(0).unwrap().min_degree(), None);
    }

    #[test]
    fn from_edges_validates() {
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
        assert!(Graph::from_edges(3, &[(1, 1)]).is_err());
    }
}
