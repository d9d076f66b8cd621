//! Exact detour (longest simple path) distances.
//!
//! Each source is an independent work item. Up to [`DP_LIMIT`] vertices a
//! source is handled by a dense subset DP: `reach[mask]` is the set of
//! endpoints of simple paths from the source whose vertex set is exactly
//! `mask`. Above that, a depth-first search over the same `(mask, endpoint)`
//! states is used, visiting each state at most once and cutting branches
//! whose reachable remainder cannot improve any target.

use std::collections::HashSet;

use rayon::prelude::*;

use super::distance::{DistanceKind, DistanceMatrix};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

pub const DEFAULT_DETOUR_CAP: usize = 26;

/// Largest vertex count handled by the dense DP.
pub const DP_LIMIT: usize = 20;

/// Masks are `u64`, so no cap can go beyond this.
const HARD_LIMIT: usize = 64;

fn check_cap(g: &SimpleGraph, cap: usize) -> Result<()> {
    let cap = cap.min(HARD_LIMIT);
    if g.vcount() > cap {
        return Err(Error::Capacity {
            what: "detour engine vertex count",
            size: g.vcount(),
            cap,
        });
    }
    Ok(())
}

fn masks(g: &SimpleGraph) -> Vec<u64> {
    (0..g.vcount())
        .map(|v| g.neighbors(v).fold(0u64, |m, w| m | 1 << w))
        .collect()
}

/// Longest simple path lengths from `source` to every vertex.
fn source_row(adj: &[u64], source: usize) -> Vec<Option<u32>> {
    if adj.len() <= DP_LIMIT {
        dense_row(adj, source)
    } else {
        search_row(adj, source)
    }
}

fn dense_row(adj: &[u64], source: usize) -> Vec<Option<u32>> {
    let n = adj.len();
    let mut best: Vec<Option<u32>> = vec![None; n];
    let mut reach = vec![0u32; 1 << n];
    reach[1 << source] = 1 << source;
    // Supersets have larger numeric values, so one ascending sweep suffices.
    for mask in 0..reach.len() {
        let ends = reach[mask];
        if ends == 0 {
            continue;
        }
        let len = mask.count_ones() - 1;
        let mut e = ends;
        while e != 0 {
            let v = e.trailing_zeros() as usize;
            e &= e - 1;
            best[v] = best[v].max(Some(len));
            let mut next = adj[v] & !(mask as u64);
            while next != 0 {
                let w = next.trailing_zeros() as usize;
                next &= next - 1;
                reach[mask | 1 << w] |= 1 << w;
            }
        }
    }
    best
}

/// Vertices reachable from `v` through vertices outside `visited`
/// (excluding `v` itself).
fn reachable(adj: &[u64], v: usize, visited: u64) -> u64 {
    let mut seen = 0u64;
    let mut frontier = adj[v] & !visited;
    while frontier != 0 {
        seen |= frontier;
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            let w = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[w];
        }
        frontier = next & !visited & !seen;
    }
    seen
}

struct Search<'a> {
    adj: &'a [u64],
    best: Vec<Option<u32>>,
    seen: HashSet<(u64, u8)>,
}

impl Search<'_> {
    fn visit(&mut self, mask: u64, v: usize) {
        if !self.seen.insert((mask, v as u8)) {
            return;
        }
        let len = mask.count_ones() - 1;
        self.best[v] = self.best[v].max(Some(len));

        let ahead = reachable(self.adj, v, mask);
        if ahead == 0 {
            return;
        }
        let bound = len + ahead.count_ones();
        let mut t = ahead;
        let mut improvable = false;
        while t != 0 {
            let w = t.trailing_zeros() as usize;
            t &= t - 1;
            if self.best[w].is_none_or(|b| b < bound) {
                improvable = true;
                break;
            }
        }
        if !improvable {
            return;
        }
        let mut next = self.adj[v] & !mask;
        while next != 0 {
            let w = next.trailing_zeros() as usize;
            next &= next - 1;
            self.visit(mask | 1 << w, w);
        }
    }
}

fn search_row(adj: &[u64], source: usize) -> Vec<Option<u32>> {
    let mut s = Search {
        adj,
        best: vec![None; adj.len()],
        seen: HashSet::new(),
    };
    s.visit(1 << source, source);
    s.best
}

/// Detour distances from each of `sources`, computed in parallel; rows come
/// back in the order of `sources`.
pub fn detour_rows(
    g: &SimpleGraph,
    sources: &[usize],
    cap: usize,
) -> Result<Vec<Vec<Option<u32>>>> {
    check_cap(g, cap)?;
    if let Some(&bad) = sources.iter().find(|&&s| s >= g.vcount()) {
        return Err(Error::Index {
            index: bad,
            size: g.vcount(),
        });
    }
    let adj = masks(g);
    Ok(sources.par_iter().map(|&s| source_row(&adj, s)).collect())
}

/// All-pairs detour distances. Pairs in different components are `None`.
pub fn all_pairs_detour(g: &SimpleGraph, cap: usize) -> Result<DistanceMatrix> {
    let sources: Vec<usize> = (0..g.vcount()).collect();
    let rows = detour_rows(g, &sources, cap)?;
    Ok(DistanceMatrix::from_rows(
        rows,
        DistanceKind::Detour,
        g.labels().to_vec(),
    ))
}

/// Row from the search engine regardless of size; exposed so tests can run
/// both engines on the same graph.
pub fn search_engine_row(g: &SimpleGraph, source: usize) -> Result<Vec<Option<u32>>> {
    check_cap(g, HARD_LIMIT)?;
    Ok(search_row(&masks(g), source))
}
