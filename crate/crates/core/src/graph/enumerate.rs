//! Census of small graphs up to isomorphism.
//!
//! Exhaustive lemma suites quantify over all graphs on up to 8 vertices.
//! Labeled enumeration would visit 2^28 graphs at n = 8; up to isomorphism
//! there are 12346, and every property we test is isomorphism invariant.
//! Graphs on k vertices are generated by extending the (k-1)-census with one
//! vertex in every possible way and deduplicating by a canonical code: the
//! minimum upper-triangle bitstring over all degree-sorted relabelings,
//! found by branch and bound with prefix pruning.

use super::Graph;
use crate::error::{Error, Result};
use std::sync::OnceLock;

/// Hard cap of the census.
pub const MAX_CENSUS_VERTICES: usize = 8;

fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    let total_bits = n * (n - 1) / 2;
    if total_bits == 0 {
        return 0;
    }
    let m = g.edge_count();
    if m == 0 {
        return 0;
    }
    if m == total_bits {
        return (1u64 << total_bits) - 1;
    }
    let mut target: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    target.sort_unstable_by(|a, b| b.cmp(a));

    struct Ctx<'a> {
        g: &'a Graph,
        n: usize,
        total_bits: u32,
        target: Vec<usize>,
        orig_at: Vec<usize>,
        best: u64,
    }

    fn rec(ctx: &mut Ctx, pos: usize, used: u64, bits: u32, prefix: u64) {
        if pos == ctx.n {
            ctx.best = ctx.best.min(prefix);
            return;
        }
        for orig in 0..ctx.n {
            if used & (1 << orig) != 0 || ctx.g.degree(orig) != ctx.target[pos] {
                continue;
            }
            let mut newbits = 0u64;
            for q in 0..pos {
                newbits = (newbits << 1) | u64::from(ctx.g.has_edge(ctx.orig_at[q], orig));
            }
            let prefix2 = (prefix << pos) | newbits;
            let bits2 = bits + pos as u32;
            if ctx.best != u64::MAX && prefix2 > (ctx.best >> (ctx.total_bits - bits2)) {
                continue;
            }
            ctx.orig_at[pos] = orig;
            rec(ctx, pos + 1, used | (1 << orig), bits2, prefix2);
        }
    }

    let mut ctx = Ctx {
        g,
        n,
        total_bits: total_bits as u32,
        target,
        orig_at: vec![0; n],
        best: u64::MAX,
    };
    rec(&mut ctx, 0, 0, 0, 0);
    ctx.best
}

fn levels() -> &'static Vec<Vec<Graph>> {
    static CACHE: OnceLock<Vec<Vec<Graph>>> = OnceLock::new();
    CACHE.get_or_init(|| {
        let mut levels: Vec<Vec<Graph>> = vec![vec![Graph::new(0).unwrap()]];
        for k in 1..=MAX_CENSUS_VERTICES {
            let mut seen = std::collections::HashSet::new();
            let mut cur = Vec::new();
            for parent in &levels[k - 1] {
                let base_edges = parent.edges();
                for subset in 0u64..(1 << (k - 1)) {
                    let mut g = Graph::from_edges(k, &base_edges).unwrap();
                    for u in 0..(k - 1) {
                        if subset & (1 << u) != 0 {
                            g.add_edge(u, k - 1);
                        }
                    }
                    if seen.insert(canonical_code(&g)) {
                        cur.push(g);
                    }
                }
            }
            levels.push(cur);
        }
        levels
    })
}

/// Visit one representative of every isomorphism class of graphs on exactly
/// `n` vertices. Capped at [`MAX_CENSUS_VERTICES`].
pub fn graphs_up_to_iso(n: usize, f: &mut dyn FnMut(&Graph)) -> Result<()> {
    if n > MAX_CENSUS_VERTICES {
        return Err(Error::Capacity {
            what: "graph census order",
            limit: MAX_CENSUS_VERTICES,
            got: n,
        });
    }
    for g in &levels()[n] {
        f(g);
    }
    Ok(())
}
