//! Partitions of an integer into three polygonal numbers, counted through a
//! representation of an infinite sum of chains over the naturals.
//!
//! The crate is organised bottom-up:
//!
//! - [`polygonal`]: exact polygonal/triangular arithmetic and rank inversion.
//! - [`representation`]: lattice coordinates `v_ij`, affine value assignments
//!   and the chain monotonicity validator.
//! - [`path`]: the admissible-path grammar, path classes, `δ_g`, the set `𝒜`
//!   and the resulting count `P^s_3(n)`.
//! - [`oracle`]: brute-force ground truth, independent of the path machinery.
//! - [`graph`]: finite truncations of the associated graph and their export.
//! - [`identities`]: finite-range sweeps of the classical identities.

pub mod error;
pub mod graph;
pub mod identities;
pub mod oracle;
pub mod path;
pub mod polygonal;
pub mod representation;

pub use error::{Error, Result};
pub use graph::{build_graph, nontrivial_values, TruncatedGraph, VertexRecord};
pub use identities::IdentityReport;
pub use oracle::{count_oracle, decompositions, Decomposition};
pub use path::{
    count_p3, count_table, delta_g, script_a, AdmissiblePath, CountTable, IndexTriple, PathClass,
};
pub use polygonal::{polygonal, rank_of, tri, PolygonOrder, RankIndex};
pub use representation::{Coord, Representation, VertexAssignment};
