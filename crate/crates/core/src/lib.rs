//! Exactly solvable bound-state problems through a single six-coefficient
//! parametric equation, with a finite-difference oracle to check every
//! analytic level.
//!
//! Everything is generic over [`Real`] (`f32` or `f64`); the aliases below
//! fix the scalar to `f64`.

// `!(a < b)` is deliberate throughout: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod numerics;
pub mod parametric;
pub mod potentials;
pub mod scalar;
pub mod special;

pub use scalar::Real;

pub type Potential = potentials::PotentialSpec<f64>;
pub type Units = potentials::UnitsConfig<f64>;
pub type BoundState64 = potentials::BoundState<f64>;
pub type Grid = numerics::RadialGrid<f64>;
pub type Oracle = numerics::OracleSpectrum<f64>;
pub type Report = numerics::VerificationReport<f64>;
pub type Form = parametric::EnergyDependentForm<f64>;
pub type Coefficients = parametric::ParametricCoefficients<f64>;
