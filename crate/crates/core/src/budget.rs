use crate::error::{Error, Result};

/// Size limits for the exponential parts of the library.
///
/// Closed-form paths never consult these; they only gate materialization and
/// enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Vertices of a materialized product graph.
    pub max_product_vertices: usize,
    /// Side length of dense adjacency matrices built by the Kronecker check.
    pub max_dense_dim: usize,
    /// Size of the mandatory set in the Held-Karp solver.
    pub max_rho_set: usize,
    /// Base-graph size for enumerating every subset of its vertices
    /// (Wiener vector, Szeged subset sums, full ρ tables).
    pub max_subset_vertices: usize,
    /// Size of the mandatory set for the factorial permutation oracle.
    pub max_permutation_set: usize,
    /// Base-graph size for the literal sum over pairs of subsets.
    pub max_subset_pair_vertices: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_product_vertices: 2_000_000,
            max_dense_dim: 4096,
            max_rho_set: 22,
            max_subset_vertices: 16,
            max_permutation_set: 8,
            max_subset_pair_vertices: 8,
        }
    }
}

pub(crate) fn ensure(what: &'static str, requested: u128, limit: usize) -> Result<()> {
    if requested > limit as u128 {
        Err(Error::BudgetExceeded {
            what,
            requested,
            limit: limit as u128,
        })
    } else {
        Ok(())
    }
}
