//! Vertex bi-colorings, dominating-induced-matching and perfect-edge-
//! domination predicates, conversions between the two views, and the
//! exhaustive brute-force oracles the rest of the workspace tests
//! against.

pub mod coloring;
pub mod domination;
pub mod edgeset;
pub mod io;
pub mod oracle;
pub mod validate;

pub use coloring::{Color, Coloring};
pub use domination::{
    black_black_edges, classify_ped, coloring_from_dim, dim_from_coloring, dim_violation,
    is_dim, is_ped, ped_violation, DominationViolation, PedClass,
};
pub use edgeset::EdgeSet;
pub use oracle::{
    brute_force_dims, brute_force_dims_with_limit, brute_force_peds,
    brute_force_peds_with_limit, DEFAULT_EDGE_LIMIT,
};
pub use validate::{is_valid_partial, is_valid_total, validate_partial, validate_total, Violation};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DimError {
    #[error("({0}, {1}) is not an edge of the graph")]
    NotAnEdge(usize, usize),
    #[error("edge set is not a dominating induced matching")]
    NotADim,
    #[error("edge set is not a perfect edge dominating set")]
    NotAPed,
    #[error("coloring is not total (vertex {vertex} is uncolored)")]
    NotTotal { vertex: usize },
    #[error("coloring is not valid: {0}")]
    InvalidColoring(Violation),
    #[error("instance has {edges} edges, above the enumeration limit {limit}")]
    TooLarge { edges: usize, limit: usize },
}
