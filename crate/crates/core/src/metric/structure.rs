//! Centre, eccentric subgraph, closure, boundary and interior.

use fixedbitset::FixedBitSet;

use super::distance::{all_pairs_geodesic, DistanceMatrix};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// An induced subgraph together with the host vertices it was induced on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub vertices: Vec<usize>,
    pub graph: SimpleGraph,
}

impl InducedSubgraph {
    fn of(g: &SimpleGraph, vertices: Vec<usize>) -> Self {
        let graph = g.induced(&vertices);
        InducedSubgraph { vertices, graph }
    }
}

fn connected_distances(g: &SimpleGraph) -> Result<(DistanceMatrix, Vec<u32>)> {
    let d = all_pairs_geodesic(g);
    let ecc = d.eccentricities()?;
    Ok((d, ecc))
}

/// Subgraph induced by the vertices of minimum eccentricity.
pub fn center(g: &SimpleGraph) -> Result<InducedSubgraph> {
    let (_, ecc) = connected_distances(g)?;
    let Some(&min) = ecc.iter().min() else {
        return Ok(InducedSubgraph::of(g, vec![]));
    };
    let vs = (0..g.vcount()).filter(|&v| ecc[v] == min).collect();
    Ok(InducedSubgraph::of(g, vs))
}

/// Subgraph induced by the vertices that are eccentric for at least one
/// vertex (`d(u, v) = ecc(u)`).
pub fn eccentric_subgraph(g: &SimpleGraph) -> Result<InducedSubgraph> {
    let (d, ecc) = connected_distances(g)?;
    let n = g.vcount();
    let vs = (0..n)
        .filter(|&v| (0..n).any(|u| d.get(u, v) == Some(ecc[u])))
        .collect();
    Ok(InducedSubgraph::of(g, vs))
}

/// Order in which non-adjacent pairs are scanned while building the closure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosureOrder {
    /// `(i, j)` ascending, restarting after every added edge.
    Lexicographic,
    /// `(i, j)` descending, restarting after every added edge.
    ReverseLexicographic,
}

/// Repeatedly joins a non-adjacent pair whose degree sum is at least the
/// vertex count, until no such pair remains.
pub fn closure(g: &SimpleGraph) -> SimpleGraph {
    closure_with_order(g, ClosureOrder::Lexicographic)
}

pub fn closure_with_order(g: &SimpleGraph, order: ClosureOrder) -> SimpleGraph {
    let n = g.vcount();
    let mut adj: Vec<FixedBitSet> = (0..n).map(|v| g.neighbor_set(v).clone()).collect();
    let mut deg = g.degrees();
    let pairs: Vec<(usize, usize)> = {
        let mut p: Vec<_> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        if order == ClosureOrder::ReverseLexicographic {
            p.reverse();
        }
        p
    };
    'restart: loop {
        for &(i, j) in &pairs {
            if !adj[i].contains(j) && deg[i] + deg[j] >= n {
                adj[i].insert(j);
                adj[j].insert(i);
                deg[i] += 1;
                deg[j] += 1;
                continue 'restart;
            }
        }
        break;
    }
    SimpleGraph::from_rows(adj, g.labels().to_vec())
}

/// Boundary vertices, interior, and complete vertices of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryReport {
    pub boundary: Vec<usize>,
    pub interior: InducedSubgraph,
    pub complete_vertices: Vec<usize>,
}

/// `v` is a boundary vertex of `u` if no neighbour of `v` is farther from
/// `u` than `v` is.
fn is_boundary_of(g: &SimpleGraph, d: &DistanceMatrix, u: usize, v: usize) -> bool {
    let duv = d.get(u, v);
    g.neighbors(v).all(|w| d.get(u, w) <= duv)
}

/// `v` is interior if for every `u ≠ v` some `w ≠ v` has `v` between `u`
/// and `w`: `d(u, w) = d(u, v) + d(v, w)`.
fn is_interior_direct(d: &DistanceMatrix, v: usize) -> bool {
    let n = d.vcount();
    (0..n).filter(|&u| u != v).all(|u| {
        (0..n).filter(|&w| w != v).any(|w| {
            let (uw, uv, vw) = (d.get(u, w), d.get(u, v), d.get(v, w));
            matches!((uw, uv, vw), (Some(uw), Some(uv), Some(vw)) if uw == uv + vw)
        })
    })
}

/// Whether `N(v)` induces a clique.
fn neighborhood_is_clique(g: &SimpleGraph, v: usize) -> bool {
    let nb: Vec<usize> = g.neighbors(v).collect();
    nb.iter()
        .enumerate()
        .all(|(k, &x)| nb[k + 1..].iter().all(|&y| g.has_edge(x, y)))
}

/// Computes the boundary, the interior and the complete vertices.
///
/// Each is computed from its own definition; the two characterisations
/// (complete iff boundary of every other vertex, boundary iff not interior)
/// are checked against each other and a disagreement is an `Internal` error.
pub fn boundary_interior(g: &SimpleGraph) -> Result<BoundaryReport> {
    let n = g.vcount();
    let d = all_pairs_geodesic(g);
    if !d.is_connected() {
        return Err(Error::Disconnected);
    }
    let boundary: Vec<usize> = (0..n)
        .filter(|&v| (0..n).any(|u| u != v && is_boundary_of(g, &d, u, v)))
        .collect();
    let interior: Vec<usize> = (0..n).filter(|&v| is_interior_direct(&d, v)).collect();
    let complete_vertices: Vec<usize> = (0..n).filter(|&v| neighborhood_is_clique(g, v)).collect();

    for v in 0..n {
        let is_boundary = boundary.binary_search(&v).is_ok();
        if is_boundary == interior.binary_search(&v).is_ok() {
            return Err(Error::Internal(format!(
                "vertex {v}: boundary and interior tests disagree"
            )));
        }
        let boundary_of_all = (0..n)
            .filter(|&u| u != v)
            .all(|u| is_boundary_of(g, &d, u, v));
        if boundary_of_all != complete_vertices.binary_search(&v).is_ok() {
            return Err(Error::Internal(format!(
                "vertex {v}: complete-vertex and boundary tests disagree"
            )));
        }
    }
    Ok(BoundaryReport {
        boundary,
        interior: InducedSubgraph::of(g, interior),
        complete_vertices,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, disjoint_union, path};

    #[test]
    fn complete_graph() {
        let k5 = complete(5);
        assert_eq!(center(&k5).unwrap().vertices, (0..5).collect::<Vec<_>>());
        assert_eq!(
            eccentric_subgraph(&k5).unwrap().vertices,
            (0..5).collect::<Vec<_>>()
        );
        let b = boundary_interior(&k5).unwrap();
        assert_eq!(b.boundary.len(), 5);
        assert!(b.interior.vertices.is_empty());
        assert_eq!(b.complete_vertices.len(), 5);
    }

    #[test]
    fn path_structure() {
        let p5 = path(5);
        assert_eq!(center(&p5).unwrap().vertices, vec![2]);
        assert_eq!(eccentric_subgraph(&p5).unwrap().vertices, vec![0, 4]);
        let b = boundary_interior(&p5).unwrap();
        assert_eq!(b.boundary, vec![0, 4]);
        assert_eq!(b.interior.vertices, vec![1, 2, 3]);
        assert_eq!(b.complete_vertices, vec![0, 4]);
    }

    #[test]
    fn closure_examples() {
        let p4 = path(4);
        assert!(closure(&p4).same_edges(&p4));
        for m in 4..8 {
            let km = complete(m);
            let minus = SimpleGraph::from_fn(m, |i, j| !(i == 0 && j == 1));
            assert!(closure(&minus).same_edges(&km));
        }
    }

    #[test]
    fn closure_orders_agree_on_small_case() {
        // Degree sums hit the threshold only after earlier additions.
        let g =
            SimpleGraph::from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 5)])
                .unwrap();
        let a = closure_with_order(&g, ClosureOrder::Lexicographic);
        let b = closure_with_order(&g, ClosureOrder::ReverseLexicographic);
        assert!(a.same_edges(&b));
        assert!(g.is_subgraph_of(&a));
    }

    #[test]
    fn disconnected_rejected() {
        let g = disjoint_union(&complete(2), &complete(1));
        assert_eq!(center(&g), Err(Error::Disconnected));
        assert_eq!(eccentric_subgraph(&g), Err(Error::Disconnected));
        assert_eq!(boundary_interior(&g), Err(Error::Disconnected));
    }
}
