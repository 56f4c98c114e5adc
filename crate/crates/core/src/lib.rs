//! Exact spanning-tree counting for loopless multigraphs.
//!
//! The crate computes `tau(G)` several independent ways so they can check
//! one another:
//!
//! * [`counting`]: Matrix-Tree (plain and weighted), deletion-contraction
//!   over parallel classes, and explicit enumeration;
//! * [`degree`]: the degree formula, which subtracts a correction over
//!   rooted non-spanning subtrees from the product of non-root degrees;
//! * [`identity`]: the weighted form of that formula, evaluated exactly at
//!   integer edge weights;
//! * [`fpoly`]: the expansion of the vertex-product polynomial and the
//!   matchings and edge covers encoded in its terms.
//!
//! All counts are arbitrary precision.

pub mod algebra;
pub mod counting;
pub mod degree;
pub mod error;
pub mod family;
pub mod format;
pub mod fpoly;
pub mod graph;
pub mod identity;
pub mod random;
pub mod weights;

pub use num_bigint::{BigInt, BigUint};

pub use crate::counting::{
    count_by_enumeration, enumerate_spanning_trees, tau_deletion_contraction, tau_deletion_contraction_with,
    tau_matrix_tree, tau_weighted_matrix_tree, Pivot,
};
pub use crate::degree::{
    best_thomassen_bound, c_pieces, enumerate_connected_sets, enumerate_nst, tau_via_direct_formula,
    tau_via_grouped_formula, thomassen_bound, InducedPiece, SubTree,
};
pub use crate::error::{Error, Result};
pub use crate::family::{closed_form_tau, generate_family, FamilySpec};
pub use crate::format::{parse_graph, write_graph};
pub use crate::fpoly::{expand_f, CoverTerm, ExpansionBudget};
pub use crate::graph::{EdgeSet, Multigraph, Subgraph, VertexSet, MAX_VERTICES};
pub use crate::identity::{check_identity, IdentityReport};
pub use crate::random::{random_multigraph, RandomSpec};
pub use crate::weights::EdgeWeights;

/// Big counts are plain `BigUint`s.
pub type BigCount = BigUint;
