use num_rational::Ratio;
use serde_json::json;

use super::detour::all_pairs_detour;
use super::distance::DistanceMatrix;
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// Detour statistics of one vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexDetour {
    pub eccentricity: u32,
    /// Number of vertices at detour distance `eccentricity`.
    pub degree: usize,
    /// `dds[i]` = number of vertices at detour distance `i`; dense, length
    /// `eccentricity + 1`.
    pub dds: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DetourProfile {
    pub vertices: Vec<VertexDetour>,
    pub radius: u32,
    pub diameter: u32,
    /// Detour degrees, non-increasing.
    pub degree_sequence: Vec<usize>,
    /// Mean detour degree.
    pub average_degree: Ratio<u64>,
    labels: Vec<String>,
}

impl DetourProfile {
    /// Profile of a connected graph's detour matrix.
    pub fn from_matrix(dist: &DistanceMatrix) -> Result<Self> {
        let n = dist.vcount();
        if n == 0 {
            return Err(Error::Parameter("empty graph".into()));
        }
        let ecc = dist.eccentricities()?;
        let vertices: Vec<VertexDetour> = (0..n)
            .map(|u| {
                let e = ecc[u];
                let mut dds = vec![0usize; e as usize + 1];
                for d in dist.row(u).iter().flatten() {
                    dds[*d as usize] += 1;
                }
                VertexDetour {
                    eccentricity: e,
                    degree: dds[e as usize],
                    dds,
                }
            })
            .collect();
        let radius = *ecc.iter().min().expect("non-empty");
        let diameter = *ecc.iter().max().expect("non-empty");
        let mut degree_sequence: Vec<usize> = vertices.iter().map(|v| v.degree).collect();
        degree_sequence.sort_unstable_by(|a, b| b.cmp(a));
        let total: usize = degree_sequence.iter().sum();
        Ok(DetourProfile {
            vertices,
            radius,
            diameter,
            degree_sequence,
            average_degree: Ratio::new(total as u64, n as u64),
            labels: dist.labels().to_vec(),
        })
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn to_json(&self) -> serde_json::Value {
        let vertices: Vec<_> = self
            .vertices
            .iter()
            .zip(&self.labels)
            .map(|(v, l)| {
                json!({
                    "label": l,
                    "ecc": v.eccentricity,
                    "degree": v.degree,
                    "dds": v.dds,
                })
            })
            .collect();
        json!({
            "radius": self.radius,
            "diameter": self.diameter,
            "degree_sequence": self.degree_sequence,
            "average_degree": format!("{}/{}", self.average_degree.numer(), self.average_degree.denom()),
            "vertices": vertices,
        })
    }
}

/// Detour profile of a connected graph; disconnected graphs are rejected.
pub fn detour_profile(g: &SimpleGraph, cap: usize) -> Result<DetourProfile> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    DetourProfile::from_matrix(&all_pairs_detour(g, cap)?)
}
