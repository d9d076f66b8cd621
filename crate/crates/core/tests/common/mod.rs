//! Reference implementations kept deliberately naive and independent of the
//! library's engines.

#![allow(dead_code, clippy::needless_range_loop)]

use epglab::SimpleGraph;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Longest simple path length between every pair, by plain DFS.
pub fn naive_detour(g: &SimpleGraph) -> Vec<Vec<Option<u32>>> {
    let n = g.vcount();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let mut out = vec![vec![None; n]; n];
    for s in 0..n {
        let mut seen = vec![false; n];
        seen[s] = true;
        dfs(&adj, s, 0, &mut seen, &mut out[s]);
    }
    out
}

fn dfs(adj: &[Vec<usize>], v: usize, len: u32, seen: &mut [bool], best: &mut [Option<u32>]) {
    if best[v].is_none_or(|b| len > b) {
        best[v] = Some(len);
    }
    for &w in &adj[v] {
        if !seen[w] {
            seen[w] = true;
            dfs(adj, w, len + 1, seen, best);
            seen[w] = false;
        }
    }
}

/// Shortest path lengths by Floyd–Warshall.
pub fn naive_geodesic(g: &SimpleGraph) -> Vec<Vec<Option<u32>>> {
    let n = g.vcount();
    let mut d: Vec<Vec<Option<u32>>> = (0..n)
        .map(|u| {
            (0..n)
                .map(|v| match (u == v, g.has_edge(u, v)) {
                    (true, _) => Some(0),
                    (false, true) => Some(1),
                    _ => None,
                })
                .collect()
        })
        .collect();
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

/// `r[i]` = number of resolving `i`-subsets, checking every subset directly.
pub fn naive_resolving_counts(g: &SimpleGraph) -> Vec<u64> {
    let n = g.vcount();
    let d = naive_geodesic(g);
    let mut r = vec![0u64; n + 1];
    for mask in 0u32..1 << n {
        let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let resolves = (0..n).all(|u| (u + 1..n).all(|v| set.iter().any(|&s| d[s][u] != d[s][v])));
        if resolves {
            r[set.len()] += 1;
        }
    }
    r
}

fn laplacian(g: &SimpleGraph) -> Vec<Vec<BigRational>> {
    let n = g.vcount();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let x: i64 = if i == j {
                        g.degree(i) as i64
                    } else if g.has_edge(i, j) {
                        -1
                    } else {
                        0
                    };
                    BigRational::from_integer(x.into())
                })
                .collect()
        })
        .collect()
}

/// Determinant by Gaussian elimination over the rationals.
pub fn rational_det(mut a: Vec<Vec<BigRational>>) -> BigRational {
    let n = a.len();
    let mut det = BigRational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return BigRational::zero();
        };
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        det *= a[k][k].clone();
        for i in k + 1..n {
            let f = a[i][k].clone() / a[k][k].clone();
            for j in k..n {
                let t = f.clone() * a[k][j].clone();
                a[i][j] -= t;
            }
        }
    }
    det
}

/// `det(xI - L)` at an integer point.
pub fn charpoly_at(g: &SimpleGraph, x: i64) -> BigInt {
    let mut m = laplacian(g);
    for (i, row) in m.iter_mut().enumerate() {
        for v in row.iter_mut() {
            *v = -v.clone();
        }
        row[i] += BigRational::from_integer(x.into());
    }
    rational_det(m).to_integer()
}

/// Spanning trees via the Laplacian cofactor, over the rationals.
pub fn cofactor_trees(g: &SimpleGraph) -> BigInt {
    let m: Vec<Vec<BigRational>> = laplacian(g)
        .into_iter()
        .skip(1)
        .map(|row| row.into_iter().skip(1).collect())
        .collect();
    rational_det(m).to_integer()
}

/// A random connected graph: a random spanning tree plus extra edges.
pub fn random_connected(rng: &mut StdRng, n: usize, density: f64) -> SimpleGraph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    SimpleGraph::from_edges(n, edges).expect("endpoints in range")
}

/// Fixed corpus of random connected graphs on 2..=14 vertices.
pub fn corpus(count: usize, seed: u64) -> Vec<SimpleGraph> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=14);
            let density = rng.gen_range(0.05..0.6);
            random_connected(&mut rng, n, density)
        })
        .collect()
}
