//! Composition factors `c_{λμ}` of Schur functors on the free Lie algebra:
//! the multiplicity of `S_λ(V)` in `S_μ(ℒ(V))`.
//!
//! Two independent pipelines compute the same table. [`puzzle`] counts
//! weighted solutions to decomposition puzzles, pruned by shape analysis;
//! [`baseline`] expands the plethysm `S_μ(ℒ_{≤d}(V))` directly.

pub mod analysis;
pub mod baseline;
pub mod error;
pub mod heatmap;
pub mod lie;
pub mod partition;
pub mod puzzle;
pub mod symfunc;
pub mod table;
pub mod tableau;

pub use error::{Error, Result};
pub use partition::Partition;
pub use table::{CoefficientTable, Mismatch, Provenance};
