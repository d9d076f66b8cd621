//! Geodesic and detour distances and the invariants built on them.

mod detour;
mod distance;
mod profile;
mod sd;
mod structure;

pub use detour::{all_pairs_detour, detour_rows, search_engine_row, DEFAULT_DETOUR_CAP, DP_LIMIT};
pub use distance::{all_pairs_geodesic, bfs, DistanceKind, DistanceMatrix};
pub use profile::{detour_profile, DetourProfile, VertexDetour};
pub use sd::{
    sd_average_detour_degree, sd_complete_vertices, sd_dds_closed_form, sd_detour_closed_form,
    sd_detour_degree, sd_detour_degree_sequence, sd_detour_eccentricity, sd_detour_radius_diameter,
    sd_eccentric_vertices, sd_interior_claim,
};
pub use structure::{
    boundary_interior, center, closure, closure_with_order, eccentric_subgraph, BoundaryReport,
    ClosureOrder, InducedSubgraph,
};
