#![allow(clippy::needless_range_loop)]

mod common;

use epglab::graph::{complete, copies, disjoint_union, join};
use epglab::iso::{is_isomorphic, is_isomorphism};
use epglab::metric::{
    all_pairs_detour, all_pairs_geodesic, closure, closure_with_order, search_engine_row,
    ClosureOrder, DEFAULT_DETOUR_CAP,
};
use epglab::resolving::{metric_dimension, resolving_counts, twin_classes, twin_lower_bound};
use epglab::spectra::{integer_spectrum, laplacian_charpoly, spanning_tree_count};
use epglab::SimpleGraph;
use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

use common::{charpoly_at, cofactor_trees, naive_detour, naive_resolving_counts};

/// Connected graph on `2..=max` vertices: random tree plus random extras.
fn connected_graph(max: usize) -> impl Strategy<Value = SimpleGraph> {
    (2..=max).prop_flat_map(|n| {
        let parents: Vec<_> = (1..n).map(|v| 0..v).collect();
        let extra = prop::collection::vec(any::<bool>(), n * (n - 1) / 2);
        let sparse = 0u8..4;
        (Just(n), parents, extra, sparse).prop_map(|(n, parents, extra, sparse)| {
            let mut edges: Vec<(usize, usize)> = parents
                .into_iter()
                .enumerate()
                .map(|(i, p)| (p, i + 1))
                .collect();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    // thin the extras so long paths stay interesting
                    if extra[k] && (k as u8 % 4) >= sparse {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            SimpleGraph::from_edges(n, edges).unwrap()
        })
    })
}

fn any_graph(max: usize) -> impl Strategy<Value = SimpleGraph> {
    (1..=max).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut k = 0;
            SimpleGraph::from_fn(n, |_, _| {
                k += 1;
                bits[k - 1]
            })
        })
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn detour_dominates_geodesic(g in connected_graph(14)) {
        let d = all_pairs_detour(&g, DEFAULT_DETOUR_CAP).unwrap();
        let s = all_pairs_geodesic(&g);
        for u in 0..g.vcount() {
            for v in 0..g.vcount() {
                prop_assert!(d.get(u, v).unwrap() >= s.get(u, v).unwrap());
            }
        }
    }

    #[test]
    fn detour_engines_match_naive_dfs(g in connected_graph(11)) {
        let oracle = naive_detour(&g);
        let d = all_pairs_detour(&g, DEFAULT_DETOUR_CAP).unwrap();
        for u in 0..g.vcount() {
            prop_assert_eq!(d.row(u), &oracle[u][..]);
            prop_assert_eq!(search_engine_row(&g, u).unwrap(), oracle[u].clone());
        }
    }

    #[test]
    fn closure_is_idempotent_and_order_free(g in any_graph(12), perm in permutation(12)) {
        let c = closure(&g);
        prop_assert!(g.is_subgraph_of(&c));
        prop_assert!(closure(&c).same_edges(&c));
        let r = closure_with_order(&g, ClosureOrder::ReverseLexicographic);
        prop_assert!(r.same_edges(&c));
        // relabelling commutes with taking the closure
        let perm: Vec<usize> = perm.into_iter().filter(|&v| v < g.vcount()).collect();
        prop_assert!(closure(&g.permuted(&perm)).same_edges(&c.permuted(&perm)));
    }

    #[test]
    fn charpoly_matches_rational_determinant(g in any_graph(9)) {
        let p = laplacian_charpoly(&g, 128).unwrap();
        prop_assert_eq!(p.degree(), Some(g.vcount()));
        prop_assert!(p.is_monic());
        for x in [-3i64, -1, 0, 1, 2, 5] {
            prop_assert_eq!(p.eval(&BigInt::from(x)), charpoly_at(&g, x));
        }
    }

    #[test]
    fn spectrum_invariants(g in any_graph(10)) {
        let s = integer_spectrum(&g, 128).unwrap();
        prop_assert_eq!(s.size(), g.vcount());
        prop_assert_eq!(s.trace(), Some(BigInt::from(2 * g.edge_count())));
        prop_assert_eq!(s.multiplicity(0), g.component_count());
        prop_assert_eq!(s.polynomial(), laplacian_charpoly(&g, 128).unwrap());
    }

    #[test]
    fn tree_count_matches_rational_cofactor(g in connected_graph(10)) {
        let t = spanning_tree_count(&g, 128).unwrap();
        prop_assert_eq!(BigInt::from(t.count), cofactor_trees(&g));
    }

    #[test]
    fn union_charpoly_is_product(a in any_graph(6), b in any_graph(6)) {
        let u = laplacian_charpoly(&disjoint_union(&a, &b), 128).unwrap();
        let pa = laplacian_charpoly(&a, 128).unwrap();
        let pb = laplacian_charpoly(&b, 128).unwrap();
        prop_assert_eq!(u, pa.mul(&pb));
    }

    #[test]
    fn resolving_engine_matches_naive(g in connected_graph(9)) {
        let report = resolving_counts(&g, 16).unwrap();
        let naive = naive_resolving_counts(&g);
        for (i, &c) in naive.iter().enumerate() {
            prop_assert_eq!(report.count(i), BigUint::from(c), "size {}", i);
        }
        let (dim, witness) = metric_dimension(&g, u64::MAX).unwrap();
        prop_assert_eq!(dim, report.dim);
        prop_assert_eq!(witness.len(), dim);
        prop_assert!(twin_lower_bound(&twin_classes(&g)) <= dim);
    }

    #[test]
    fn relabelled_graph_is_isomorphic(g in any_graph(10), perm in permutation(10)) {
        let perm: Vec<usize> = perm.into_iter().filter(|&v| v < g.vcount()).collect();
        let h = g.permuted(&perm);
        let map = is_isomorphic(&g, &h).expect("relabelling is an isomorphism");
        prop_assert!(is_isomorphism(&g, &h, &map));
    }
}

/// Join spectra on `K_a ∨ (K_b ∪ c K_2)`, computed directly and compared
/// with a pointwise rational determinant (no join formula is assumed).
#[test]
fn join_charpolys_by_direct_computation() {
    for a in 1..=3 {
        for b in 0..=4 {
            for c in 0..=3 {
                let g = join(
                    &complete(a),
                    &disjoint_union(&complete(b), &copies(c, &complete(2))),
                );
                let p = laplacian_charpoly(&g, 128).unwrap();
                for x in -2..=3 {
                    assert_eq!(
                        p.eval(&BigInt::from(x)),
                        charpoly_at(&g, x),
                        "a={a} b={b} c={c} x={x}"
                    );
                }
                let s = integer_spectrum(&g, 128).unwrap();
                assert!(s.is_integral(), "a={a} b={b} c={c}");
                assert_eq!(s.trace(), Some(BigInt::from(2 * g.edge_count())));
            }
        }
    }
}
