//! Combinatorial model of the `(d+2)`-angulated category `O(A^d_p)`.
//!
//! Indecomposables are `(d+1)`-subsets of a cycle of `p + 2d + 1` points
//! containing no two neighbours. `Σ^d` moves every point to its predecessor
//! and `Ext^d(X, Y)` is nonzero exactly when `X` and `Y` intertwine.

mod angle;
mod cyclic;
mod k0;
mod tilting;

use thiserror::Error;

pub use angle::{ar_angle_higher, ot_angle, HAngle};
pub use cyclic::{HIndec, HigherParams};
pub use k0::{
    angle_theta, ar_relation_higher, index_higher, k0_higher_ar, k0_higher_theta, theta_relations, IndexTable,
};
pub use tilting::{enumerate_tilting_sets, is_ot_tilting, TiltingFile, TiltingSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HigherError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("invalid indecomposable {points:?}: {reason}")]
    InvalidIndec { points: Vec<u32>, reason: String },
    #[error("{x} and {y} do not intertwine")]
    NotIntertwining { x: HIndec, y: HIndec },
    #[error("invalid tilting set: {0}")]
    InvalidTilting(String),
    #[error("no angle resolves {0} inside the tilting set")]
    NoResolution(HIndec),
    #[error("index of {object} depends on the resolving summand: {detail}")]
    AmbiguousIndex { object: HIndec, detail: String },
    #[error("{0}")]
    Io(String),
}
