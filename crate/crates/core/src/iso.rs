//! Backtracking isomorphism test for small graphs.
//!
//! Vertices are first split into classes by colour refinement (start from
//! degrees, repeatedly refine by the multiset of neighbour colours). Colours
//! are computed jointly for both graphs so they are comparable, and a vertex
//! may only be mapped onto a vertex of the same colour. Intended for graphs
//! of at most a few dozen vertices.

use std::collections::BTreeMap;

use crate::graph::SimpleGraph;

/// Stable colouring of `g1` and `g2` in a shared colour space.
fn refine(g1: &SimpleGraph, g2: &SimpleGraph) -> (Vec<usize>, Vec<usize>) {
    let graphs = [g1, g2];
    let mut colors: [Vec<usize>; 2] = [g1.degrees(), g2.degrees()];
    let mut classes = usize::MAX;
    loop {
        let mut signatures: BTreeMap<(usize, Vec<usize>), usize> = BTreeMap::new();
        let keyed: Vec<Vec<(usize, Vec<usize>)>> = (0..2)
            .map(|k| {
                (0..graphs[k].vcount())
                    .map(|v| {
                        let mut nb: Vec<usize> =
                            graphs[k].neighbors(v).map(|w| colors[k][w]).collect();
                        nb.sort_unstable();
                        (colors[k][v], nb)
                    })
                    .collect()
            })
            .collect();
        for sig in keyed.iter().flatten() {
            let next = signatures.len();
            signatures.entry(sig.clone()).or_insert(next);
        }
        // BTreeMap order makes colour ids independent of vertex order.
        for (rank, id) in signatures.values_mut().enumerate() {
            *id = rank;
        }
        for k in 0..2 {
            colors[k] = keyed[k].iter().map(|s| signatures[s]).collect();
        }
        if signatures.len() == classes {
            break;
        }
        classes = signatures.len();
    }
    let [c1, c2] = colors;
    (c1, c2)
}

/// Returns `f` with `f[v]` the image in `g2` of vertex `v` of `g1` if the
/// graphs are isomorphic. The search order is deterministic.
pub fn is_isomorphic(g1: &SimpleGraph, g2: &SimpleGraph) -> Option<Vec<usize>> {
    let n = g1.vcount();
    if n != g2.vcount() || g1.edge_count() != g2.edge_count() {
        return None;
    }
    let mut d1 = g1.degrees();
    let mut d2 = g2.degrees();
    d1.sort_unstable();
    d2.sort_unstable();
    if d1 != d2 {
        return None;
    }
    let (c1, c2) = refine(g1, g2);
    let mut h1 = c1.clone();
    let mut h2 = c2.clone();
    h1.sort_unstable();
    h2.sort_unstable();
    if h1 != h2 {
        return None;
    }

    // Map rare colours first, then prefer vertices adjacent to mapped ones.
    let mut freq = BTreeMap::new();
    for &c in &c1 {
        *freq.entry(c).or_insert(0usize) += 1;
    }
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let links = order.iter().filter(|&&u| g1.has_edge(u, v)).count();
                (
                    links,
                    std::cmp::Reverse(freq[&c1[v]]),
                    g1.degree(v),
                    std::cmp::Reverse(v),
                )
            })
            .expect("unplaced vertex exists");
        placed[next] = true;
        order.push(next);
    }

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(g1, g2, &c1, &c2, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g1: &SimpleGraph,
    g2: &SimpleGraph,
    c1: &[usize],
    c2: &[usize],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for w in 0..g2.vcount() {
        if used[w] || c2[w] != c1[v] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g1.has_edge(u, v) == g2.has_edge(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend(g1, g2, c1, c2, order, depth + 1, map, used) {
            return true;
        }
        used[w] = false;
        map[v] = usize::MAX;
    }
    false
}

/// Checks that `map` is an adjacency-preserving bijection from `g1` to `g2`.
pub fn is_isomorphism(g1: &SimpleGraph, g2: &SimpleGraph, map: &[usize]) -> bool {
    let n = g1.vcount();
    if n != g2.vcount() || map.len() != n {
        return false;
    }
    let mut hit = vec![false; n];
    for &w in map {
        if w >= n || std::mem::replace(&mut hit[w], true) {
            return false;
        }
    }
    (0..n).all(|u| (0..n).all(|v| g1.has_edge(u, v) == g2.has_edge(map[u], map[v])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, path, SimpleGraph};

    #[test]
    fn triangle_vs_path() {
        assert!(is_isomorphic(&complete(3), &path(3)).is_none());
    }

    #[test]
    fn relabelled_graph_is_found() {
        let g =
            SimpleGraph::from_edges(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]).unwrap();
        let perm = [4, 2, 0, 5, 1, 3];
        let h = g.permuted(&perm);
        let map = is_isomorphic(&g, &h).unwrap();
        assert!(is_isomorphism(&g, &h, &map));
    }

    #[test]
    fn same_degrees_not_isomorphic() {
        // C_6 vs two triangles: both 2-regular on 6 vertices.
        let c6 = SimpleGraph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        let two_k3 = crate::graph::disjoint_union(&complete(3), &complete(3));
        assert!(is_isomorphic(&c6, &two_k3).is_none());
    }

    #[test]
    fn regular_graphs_refinement_cannot_split() {
        // K_{3,3} vs prism: both 3-regular on 6 vertices; the backtracking
        // has to do the work.
        let k33 = SimpleGraph::from_fn(6, |i, j| (i < 3) != (j < 3));
        let prism = SimpleGraph::from_edges(
            6,
            [
                (0, 1),
                (1, 2),
                (2, 0),
                (3, 4),
                (4, 5),
                (5, 3),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .unwrap();
        assert!(is_isomorphic(&k33, &prism).is_none());
        let shuffled = k33.permuted(&[5, 0, 3, 1, 4, 2]);
        let map = is_isomorphic(&k33, &shuffled).unwrap();
        assert!(is_isomorphism(&k33, &shuffled, &map));
    }
}
