//! Enhanced power graphs of finite groups, with exact distance, detour,
//! resolving-set and Laplacian invariants.
//!
//! Every closed form for the semidihedral, generalized quaternion and
//! dihedral families sits next to a brute-force engine that computes the
//! same quantity from the graph alone, so the two can be compared.

pub mod cli;
pub mod epg;
pub mod error;
pub mod graph;
pub mod group;
pub mod iso;
pub mod metric;
pub mod resolving;
pub mod spectra;

pub use error::{Error, Result};
pub use graph::SimpleGraph;
pub use group::{Family, FiniteGroup};
