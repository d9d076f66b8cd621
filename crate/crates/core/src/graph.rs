//! Immutable simple undirected graphs with bitset adjacency, plus the
//! combinators (`K_k`, `\overline{K}_k`, disjoint union, join) used to state
//! graph decompositions.

use std::fmt::Write as _;

use fixedbitset::FixedBitSet;
use serde_json::json;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<FixedBitSet>,
    labels: Vec<String>,
}

impl SimpleGraph {
    /// Builds a graph from an edge list. Loops are rejected, duplicate edges
    /// collapse.
    pub fn from_edges(
        vcount: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut adj = vec![FixedBitSet::with_capacity(vcount); vcount];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= vcount {
                    return Err(Error::Index {
                        index: x,
                        size: vcount,
                    });
                }
            }
            if u == v {
                return Err(Error::Parameter(format!("loop at vertex {u}")));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Self::from_rows(adj, default_labels(vcount)))
    }

    /// Builds a graph from a symmetric predicate, evaluated for `i < j` only.
    pub fn from_fn(vcount: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut adj = vec![FixedBitSet::with_capacity(vcount); vcount];
        for i in 0..vcount {
            for j in i + 1..vcount {
                if adjacent(i, j) {
                    adj[i].insert(j);
                    adj[j].insert(i);
                }
            }
        }
        Self::from_rows(adj, default_labels(vcount))
    }

    pub(crate) fn from_rows(adj: Vec<FixedBitSet>, labels: Vec<String>) -> Self {
        debug_assert_eq!(adj.len(), labels.len());
        debug_assert!((0..adj.len()).all(|i| !adj[i].contains(i)));
        debug_assert!((0..adj.len()).all(|i| adj[i].ones().all(|j| adj[j].contains(i))));
        SimpleGraph { adj, labels }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.vcount() {
            return Err(Error::Parameter(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.vcount()
            )));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn vcount(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.vcount()).map(|v| self.degree(v)).collect()
    }

    /// Open neighbourhood `N(v)` as a bitset.
    pub fn neighbor_set(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    /// Closed neighbourhood `N[v]`, sorted.
    pub fn closed_neighborhood(&self, v: usize) -> Vec<usize> {
        let mut set = self.adj[v].clone();
        set.insert(v);
        set.ones().collect()
    }

    /// Edges `(i, j)` with `i < j` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.vcount()).flat_map(move |i| {
            self.adj[i]
                .ones()
                .filter(move |&j| j > i)
                .map(move |j| (i, j))
        })
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vcount();
        if n == 0 {
            return true;
        }
        let mut seen = FixedBitSet::with_capacity(n);
        let mut stack = vec![0];
        seen.insert(0);
        while let Some(u) = stack.pop() {
            for w in self.adj[u].ones() {
                if !seen.put(w) {
                    stack.push(w);
                }
            }
        }
        seen.count_ones(..) == n
    }

    /// Number of connected components.
    pub fn component_count(&self) -> usize {
        let n = self.vcount();
        let mut seen = FixedBitSet::with_capacity(n);
        let mut count = 0;
        for s in 0..n {
            if seen.put(s) {
                continue;
            }
            count += 1;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for w in self.adj[u].ones() {
                    if !seen.put(w) {
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    /// Subgraph induced on `vertices` (in the given order), labels kept.
    pub fn induced(&self, vertices: &[usize]) -> SimpleGraph {
        let k = vertices.len();
        let mut adj = vec![FixedBitSet::with_capacity(k); k];
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate() {
                if a != b && self.has_edge(u, v) {
                    adj[a].insert(b);
                }
            }
        }
        let labels = vertices.iter().map(|&v| self.labels[v].clone()).collect();
        SimpleGraph::from_rows(adj, labels)
    }

    /// Is every edge of `self` an edge of `other` (same vertex indexing)?
    pub fn is_subgraph_of(&self, other: &SimpleGraph) -> bool {
        self.vcount() == other.vcount()
            && self.adj.iter().zip(&other.adj).all(|(a, b)| a.is_subset(b))
    }

    /// Same vertex count and identical edge sets, ignoring labels.
    pub fn same_edges(&self, other: &SimpleGraph) -> bool {
        self.adj == other.adj
    }

    /// The graph with vertex `v` moved to position `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> SimpleGraph {
        let n = self.vcount();
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        let mut labels = vec![String::new(); n];
        for u in 0..n {
            labels[perm[u]] = self.labels[u].clone();
            for w in self.adj[u].ones() {
                adj[perm[u]].insert(perm[w]);
            }
        }
        SimpleGraph::from_rows(adj, labels)
    }

    /// DOT export: node lines carry labels, edges appear once with `i < j`,
    /// sorted by `(i, j)`.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph epg {\n");
        for (i, l) in self.labels.iter().enumerate() {
            let _ = writeln!(out, "  {i} [label=\"{}\"];", l.replace('"', "\\\""));
        }
        for (i, j) in self.edges() {
            let _ = writeln!(out, "  {i} -- {j};");
        }
        out.push_str("}\n");
        out
    }

    /// `{"adjacency": [[sorted neighbours]...], "labels": [...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let adjacency: Vec<Vec<usize>> = (0..self.vcount())
            .map(|v| self.neighbors(v).collect())
            .collect();
        json!({ "labels": self.labels, "adjacency": adjacency })
    }
}

fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

/// `K_k`.
pub fn complete(k: usize) -> SimpleGraph {
    SimpleGraph::from_fn(k, |_, _| true)
}

/// `\overline{K}_k`, the edgeless graph.
pub fn edgeless(k: usize) -> SimpleGraph {
    SimpleGraph::from_fn(k, |_, _| false)
}

/// Path `P_k` on `k` vertices.
pub fn path(k: usize) -> SimpleGraph {
    SimpleGraph::from_fn(k, |i, j| j == i + 1)
}

fn combine(g1: &SimpleGraph, g2: &SimpleGraph, cross: bool) -> SimpleGraph {
    let (n1, n2) = (g1.vcount(), g2.vcount());
    let n = n1 + n2;
    let mut adj = vec![FixedBitSet::with_capacity(n); n];
    for (u, row) in adj.iter_mut().enumerate().take(n1) {
        for w in g1.neighbors(u) {
            row.insert(w);
        }
        if cross {
            row.insert_range(n1..n);
        }
    }
    for u in 0..n2 {
        for w in g2.neighbors(u) {
            adj[n1 + u].insert(n1 + w);
        }
        if cross {
            adj[n1 + u].insert_range(0..n1);
        }
    }
    let labels = g1.labels.iter().chain(&g2.labels).cloned().collect();
    SimpleGraph::from_rows(adj, labels)
}

/// `g1 ∪ g2`; `g1`'s vertices come first.
pub fn disjoint_union(g1: &SimpleGraph, g2: &SimpleGraph) -> SimpleGraph {
    combine(g1, g2, false)
}

/// `g1 ∨ g2`: disjoint union plus every edge between the two sides.
pub fn join(g1: &SimpleGraph, g2: &SimpleGraph) -> SimpleGraph {
    combine(g1, g2, true)
}

/// `k` disjoint copies of `g`.
pub fn copies(k: usize, g: &SimpleGraph) -> SimpleGraph {
    (0..k).fold(edgeless(0), |acc, _| disjoint_union(&acc, g))
}
