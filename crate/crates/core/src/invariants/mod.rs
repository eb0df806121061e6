//! Fourier-transform invariants assembled from the critical locus.

mod chi;
mod curve;
mod factors;
mod volume;

pub use chi::{
    chi_c, chi_hypersurface, chi_slice, chi_slice_at, ft_multiplicity_chi_route, ft_multiplicity_conified_route,
    pointwise_solution_chi, ChiRoute, Region,
};
pub use factors::{
    boundary_factors, divisor_at, infinity_factors, stokes_directions, BoundaryReport, ExponentialFactor, FactorContext,
    InfinityFactor, InfinityReport, SliceBranch, StokesArrangement, StokesLine,
};
pub use volume::normalized_volume;

use crate::critical::Analysis;
use crate::error::Result;

/// Rank of the Fourier transform on Ω: `Σ k_i m_i`.
pub fn generic_rank(an: &Analysis) -> Result<usize> {
    Ok(an.covering_degree()?.rank)
}
