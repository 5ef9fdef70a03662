//! Verification laboratory for Ramsey goodness of paths under
//! minimum-degree conditions.
//!
//! The crate decides arrowing questions of the form "does every red/blue
//! edge coloring of G contain a red K_r or a blue path on t vertices",
//! computes the exact minimum-degree thresholds where that conclusion is
//! claimed, builds and validates the extremal constructions sitting one
//! below those thresholds, and extracts explicit witnesses by replaying the
//! constructive argument on concrete colorings. Everything is exact: integer
//! arithmetic only, bitset graphs capped at 64 vertices, and every verdict
//! either carries a checkable certificate or an explicit "undecided".

pub mod arrowing;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod lemmas;
pub mod proof;
pub mod sampling;
pub mod thresholds;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use thresholds::GoodnessParams;
