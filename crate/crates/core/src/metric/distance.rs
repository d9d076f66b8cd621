use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DistanceKind {
    Geodesic,
    Detour,
}

/// Symmetric all-pairs distances; `None` marks an unreachable pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    entries: Vec<Option<u32>>,
    kind: DistanceKind,
    labels: Vec<String>,
}

impl DistanceMatrix {
    pub(crate) fn from_rows(
        rows: Vec<Vec<Option<u32>>>,
        kind: DistanceKind,
        labels: Vec<String>,
    ) -> Self {
        let n = rows.len();
        let entries: Vec<_> = rows.into_iter().flatten().collect();
        debug_assert_eq!(entries.len(), n * n);
        DistanceMatrix {
            n,
            entries,
            kind,
            labels,
        }
    }

    pub fn vcount(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> DistanceKind {
        self.kind
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        self.entries[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[Option<u32>] {
        &self.entries[u * self.n..(u + 1) * self.n]
    }

    /// The distance, or `Disconnected` for an unreachable pair.
    pub fn finite(&self, u: usize, v: usize) -> Result<u32> {
        self.get(u, v).ok_or(Error::Disconnected)
    }

    pub fn is_connected(&self) -> bool {
        self.entries.iter().all(Option::is_some)
    }

    /// Largest distance from each vertex; errors if any pair is unreachable.
    pub fn eccentricities(&self) -> Result<Vec<u32>> {
        (0..self.n)
            .map(|u| {
                self.row(u)
                    .iter()
                    .try_fold(0, |acc, d| d.map(|d| acc.max(d)).ok_or(Error::Disconnected))
            })
            .collect()
    }

    /// Header row of vertex labels, then one row of distances per vertex.
    /// Unreachable pairs are empty fields.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.labels).expect("in-memory write");
        for u in 0..self.n {
            w.write_record(
                self.row(u)
                    .iter()
                    .map(|d| d.map(|d| d.to_string()).unwrap_or_default()),
            )
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }
}

/// BFS from `s`.
pub fn bfs(g: &SimpleGraph, s: usize) -> Vec<Option<u32>> {
    let mut dist = vec![None; g.vcount()];
    dist[s] = Some(0);
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].expect("queued vertices are labelled");
        for w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

pub fn all_pairs_geodesic(g: &SimpleGraph) -> DistanceMatrix {
    let rows = (0..g.vcount()).map(|s| bfs(g, s)).collect();
    DistanceMatrix::from_rows(rows, DistanceKind::Geodesic, g.labels().to_vec())
}
