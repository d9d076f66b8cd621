//! Enhanced power graphs, power graphs, and the closed-form `SD_{8n}`
//! neighbourhoods they are checked against.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::{complete, copies, disjoint_union, edgeless, join, SimpleGraph};
use crate::group::FiniteGroup;

/// `P_e(G)`: distinct `x, y` are adjacent iff some cyclic subgroup holds both.
///
/// Every cyclic subgroup sits inside a maximal one, so it is enough to mark
/// each element with the maximal cyclic subgroups it belongs to and connect
/// elements whose membership masks intersect.
pub fn enhanced_power_graph(g: &FiniteGroup) -> SimpleGraph {
    let m = g.order();
    let maximal = g.maximal_cyclic_subgroups();
    let mut membership = vec![FixedBitSet::with_capacity(maximal.len()); m];
    for (k, c) in maximal.iter().enumerate() {
        for &x in &c.members {
            membership[x].insert(k);
        }
    }
    let mut adj = vec![FixedBitSet::with_capacity(m); m];
    for c in &maximal {
        for &x in &c.members {
            for &y in &c.members {
                if x != y {
                    adj[x].insert(y);
                }
            }
        }
    }
    debug_assert!((0..m).all(|x| (0..m)
        .all(|y| x == y || adj[x].contains(y) == !membership[x].is_disjoint(&membership[y]))));
    SimpleGraph::from_rows(adj, g.labels().to_vec())
}

/// `P(G)`: distinct `x, y` are adjacent iff one is a power of the other.
pub fn power_graph(g: &FiniteGroup) -> SimpleGraph {
    let m = g.order();
    let mut adj = vec![FixedBitSet::with_capacity(m); m];
    for x in 0..m {
        let c = g.cyclic_subgroup(x).expect("index in range");
        for &y in &c.members {
            if y != x {
                adj[x].insert(y);
                adj[y].insert(x);
            }
        }
    }
    SimpleGraph::from_rows(adj, g.labels().to_vec())
}

/// Vertex classes of `SD_{8n}` under the fixed element indexing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SdClass {
    /// `e`
    Identity,
    /// `a^{2n}`, the central involution
    Central,
    /// `a^i`, `i ∉ {0, 2n}`
    Rotation(usize),
    /// `a^i b` with `i` odd (order 4)
    OddReflection(usize),
    /// `a^i b` with `i` even (order 2)
    EvenReflection(usize),
}

pub fn sd_classify(n: usize, v: usize) -> Result<SdClass> {
    let k = 4 * n;
    if n < 2 {
        return Err(Error::Parameter(format!(
            "semidihedral needs n >= 2, got {n}"
        )));
    }
    if v >= 2 * k {
        return Err(Error::Index {
            index: v,
            size: 2 * k,
        });
    }
    Ok(match v {
        0 => SdClass::Identity,
        _ if v == 2 * n => SdClass::Central,
        _ if v < k => SdClass::Rotation(v),
        _ if (v - k) % 2 == 1 => SdClass::OddReflection(v - k),
        _ => SdClass::EvenReflection(v - k),
    })
}

/// Closed neighbourhood `N[v]` of `P_e(SD_{8n})` from the five-case lemma,
/// without building the group.
pub fn sd_neighborhood_oracle(n: usize, v: usize) -> Result<Vec<usize>> {
    let k = 4 * n;
    let rotations = 0..k;
    let mut out: Vec<usize> = match sd_classify(n, v)? {
        SdClass::Identity => (0..2 * k).collect(),
        SdClass::Central => rotations
            .chain((k..2 * k).filter(|x| (x - k) % 2 == 1))
            .collect(),
        SdClass::Rotation(_) => rotations.collect(),
        // ⟨a^i b⟩ = {e, a^{2n}, a^i b, a^{i+2n} b}
        SdClass::OddReflection(i) => vec![0, 2 * n, v, k + (i + 2 * n) % k],
        SdClass::EvenReflection(_) => vec![0, v],
    };
    out.sort_unstable();
    Ok(out)
}

/// `K_2 ∨ (K_{2n-2} ∪ n K_2)`, the shape of `P_e(Q_{4n})`.
///
/// The clique on the non-central rotations has `2n - 2` vertices; a literal
/// `K_{n-2}` would give `3n` vertices instead of `4n`.
pub fn quaternion_decomposition(n: usize) -> SimpleGraph {
    join(
        &complete(2),
        &disjoint_union(&complete(2 * n - 2), &copies(n, &complete(2))),
    )
}

/// The decomposition as printed, with a `K_{n-2}` clique (`3n` vertices).
pub fn quaternion_decomposition_as_printed(n: usize) -> SimpleGraph {
    join(
        &complete(2),
        &disjoint_union(&complete(n.saturating_sub(2)), &copies(n, &complete(2))),
    )
}

/// `K_1 ∨ (K_{m-1} ∪ \overline{K}_m)`, the shape of `P_e(D_{2m})`.
pub fn dihedral_decomposition(m: usize) -> SimpleGraph {
    join(
        &complete(1),
        &disjoint_union(&complete(m.saturating_sub(1)), &edgeless(m)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{make_dihedral, make_generalized_quaternion, make_semidihedral};

    fn cyclic(m: usize) -> FiniteGroup {
        let table = (0..m * m).map(|k| (k / m + k % m) % m).collect();
        FiniteGroup::from_table(m, table, (0..m).map(|i| i.to_string()).collect()).unwrap()
    }

    /// Definitional adjacency: scan every `⟨z⟩`.
    fn brute_epg(g: &FiniteGroup) -> SimpleGraph {
        let subgroups: Vec<_> = (0..g.order())
            .map(|z| g.cyclic_subgroup(z).unwrap())
            .collect();
        SimpleGraph::from_fn(g.order(), |x, y| {
            subgroups.iter().any(|c| c.contains(x) && c.contains(y))
        })
    }

    #[test]
    fn sd16_degrees() {
        let g = make_semidihedral(2).unwrap();
        let epg = enhanced_power_graph(&g);
        let deg = |l: &str| epg.degree(g.find(l).unwrap());
        assert_eq!(deg("e"), 15);
        assert_eq!(deg("a^4"), 11);
        assert_eq!(deg("a"), 7);
        assert_eq!(deg("ab"), 3);
        assert_eq!(deg("a^2b"), 1);
        assert_eq!(epg.edge_count(), 42);
    }

    #[test]
    fn matches_definitional_scan() {
        for g in [
            make_semidihedral(2).unwrap(),
            make_semidihedral(3).unwrap(),
            make_generalized_quaternion(3).unwrap(),
            make_dihedral(6).unwrap(),
            cyclic(12),
        ] {
            assert!(enhanced_power_graph(&g).same_edges(&brute_epg(&g)));
        }
    }

    #[test]
    fn cyclic_groups_are_complete() {
        for m in 1..9 {
            let g = cyclic(m);
            assert!(enhanced_power_graph(&g).same_edges(&complete(m)));
        }
        assert!(power_graph(&cyclic(5)).same_edges(&complete(5)));
    }

    #[test]
    fn power_graph_is_spanning_subgraph() {
        for g in [
            make_semidihedral(3).unwrap(),
            make_dihedral(6).unwrap(),
            make_generalized_quaternion(3).unwrap(),
            cyclic(6),
        ] {
            assert!(power_graph(&g).is_subgraph_of(&enhanced_power_graph(&g)));
        }
        // C_6: 2 and 3 generate the whole group together but neither is a
        // power of the other.
        assert!(!power_graph(&cyclic(6)).same_edges(&enhanced_power_graph(&cyclic(6))));
    }

    #[test]
    fn q8_power_graph_equals_epg() {
        let q8 = make_generalized_quaternion(2).unwrap();
        assert!(power_graph(&q8).same_edges(&enhanced_power_graph(&q8)));
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(
            sd_neighborhood_oracle(2, 0).unwrap(),
            (0..16).collect::<Vec<_>>()
        );
        assert_eq!(
            sd_neighborhood_oracle(2, 4).unwrap(),
            vec![0, 1, 2, 3, 4, 5, 6, 7, 9, 11, 13, 15]
        );
        // a^2b is index 8 + 2
        assert_eq!(sd_neighborhood_oracle(2, 10).unwrap(), vec![0, 10]);
        assert!(sd_neighborhood_oracle(2, 16).is_err());
    }

    #[test]
    fn oracle_matches_built_graph() {
        for n in 2..5 {
            let epg = enhanced_power_graph(&make_semidihedral(n).unwrap());
            for v in 0..8 * n {
                assert_eq!(
                    epg.closed_neighborhood(v),
                    sd_neighborhood_oracle(n, v).unwrap()
                );
            }
        }
    }

    #[test]
    fn identity_is_universal() {
        for g in [
            make_semidihedral(2).unwrap(),
            make_dihedral(7).unwrap(),
            cyclic(4),
        ] {
            let epg = enhanced_power_graph(&g);
            assert_eq!(epg.degree(g.identity()), g.order() - 1);
        }
    }

    #[test]
    fn decomposition_sizes() {
        assert_eq!(quaternion_decomposition(3).vcount(), 12);
        assert_eq!(quaternion_decomposition_as_printed(3).vcount(), 9);
        let d = dihedral_decomposition(4);
        assert_eq!((d.vcount(), d.edge_count()), (8, 7 + 3));
    }
}
