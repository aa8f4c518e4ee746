//! Combinatorial model of the q-cluster category `C_q(A_p)`.
//!
//! Indecomposables are the q-allowable diagonals of an `N`-gon, the
//! suspension rotates clockwise by one vertex and the Serre-twisted functor
//! `S Σ^{-(q+1)}` is the identity on objects, so every Auslander-Reiten
//! angle starts and ends at the same diagonal.

mod angulation;
mod diagonal;
mod morphisms;
mod tower;

use thiserror::Error;

pub use angulation::{enumerate_angulations, fan_diagonals, Angulation, AngulationFile};
pub use diagonal::{Diagonal, PolygonParams};
pub use morphisms::{HomOffsets, PolygonTriangle};
pub use tower::{ar_angle, ar_relation, index_polygon, k0_polygon, k0_presentation, sink_map, t_cover, ArAngle};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolygonError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("{{{u},{v}}} is not a q-allowable diagonal")]
    NotAllowable { u: u32, v: u32 },
    #[error("{a} and {b} do not cross")]
    NotCrossing { a: Diagonal, b: Diagonal },
    #[error("invalid angulation: {0}")]
    InvalidAngulation(String),
    #[error("{0} is not in the angulation")]
    NotInAngulation(Diagonal),
    #[error("tower step {step}: cover {cover} of {object} is decomposable, its cone is outside the supported scope")]
    NonIndecomposableCone { object: Diagonal, cover: String, step: usize },
    #[error("tower for {end} does not close up: {found}")]
    TowerMismatch { end: Diagonal, found: String },
    #[error("{0}")]
    Io(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}
