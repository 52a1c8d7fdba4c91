//! Wreath products of graphs and their metric invariants.
//!
//! The vertices of `G ≀ H` are pairs `(y, x)` where `x` is a position in `G`
//! and `y` assigns one of the `m = |V_H|` lamp states to each of the
//! `n = |V_G|` positions. Distances are computed without materializing the
//! product whenever possible, through the mandatory-set walk lengths `ρ_A`
//! in [`tsp`].

pub mod budget;
pub mod error;
pub mod format;
pub mod graph;
pub mod invariants;
pub mod metric;
pub mod products;
pub mod report;
pub mod tsp;

pub use budget::Budget;
pub use error::{Error, Result};
pub use graph::{DistanceMatrix, Family, Graph};
pub use metric::WreathMetric;
pub use products::{WreathCodec, WreathVertex};
pub use report::{Invariant, InvariantReport, Method, MethodFilter};
pub use tsp::{RhoMatrix, RhoSolver, RhoTable, VertexSubset};
