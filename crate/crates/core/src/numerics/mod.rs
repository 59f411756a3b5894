//! Independent verification stack: finite-difference Hamiltonian spectra by
//! Sturm-sequence bisection, quadrature, node counting and spectrum
//! comparison. Nothing here knows about the parametric equation.

mod compare;
mod fd;
mod grid;
mod minimize;
mod nodes;
mod quadrature;
mod sturm;

use thiserror::Error;

pub use compare::{bound_count_discrepancy, compare_spectra, CountDiscrepancy, LevelComparison, VerificationReport};
pub use fd::{
    discretize, fd_eigenvalues, fd_spectrum, Discretization, Domain, OracleSpectrum, OracleState, RICHARDSON_LIMIT,
};
pub use grid::{Boundary, RadialGrid, MIN_GRID_POINTS};
pub use minimize::{golden_section, sampled_minimum};
pub use nodes::{count_nodes, default_node_threshold};
pub use quadrature::simpson_integrate;
pub use sturm::{inverse_iteration, sturm_count, tridiagonal_eigenvalues, PIVOT_FLOOR};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumericsError {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("need at least 3 samples for Simpson quadrature, got {0}")]
    TooFewSamples(usize),
    #[error("grid too coarse: Richardson refinement shifts an eigenvalue by {max_shift:e} relative (limit {limit:e})")]
    GridTooCoarse { max_shift: f64, limit: f64, spectrum: Box<OracleSpectrum<f64>> },
    #[error("requested {0} eigenvalues, need at least one")]
    NothingRequested(usize),
    #[error(transparent)]
    Potential(#[from] crate::potentials::PotentialError),
}

pub type Result<T, E = NumericsError> = std::result::Result<T, E>;
