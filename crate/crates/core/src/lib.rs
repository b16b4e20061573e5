//! Gravitationally modified dissipation of a two-level atom.
//!
//! The atom (splitting Ω, dipole d at angle ψ to the radial direction) sits at
//! distance R from a point mass with Newtonian potential Φ and couples to a
//! massless scalar field, optionally thermal. To first order in Φ:
//!
//! - [`rates`]: redshifted splitting, spontaneous and thermal GKSL rates;
//! - [`lindblad`]: density-matrix evolution, analytic and RK4;
//! - [`specfun`]: the sine integral and the correction functions f1, f2;
//! - [`oracle`]: brute-force quadrature checks of the closed forms;
//! - [`verify`]: the aggregated verification report.
//!
//! Natural units (ħ = c = 1) are used throughout.

#![allow(clippy::neg_cmp_op_on_partial_ord)] // `!(x > 0.0)` deliberately rejects NaN
#![allow(clippy::excessive_precision)] // reference constants keep their published digits

pub mod error;
pub mod lindblad;
pub mod model;
pub mod oracle;
pub mod rates;
pub mod specfun;
pub mod verify;

pub use error::{Error, Result};
pub use lindblad::{analytic_state, evolve_numeric, DensityMatrix2, Generator, Trajectory};
pub use model::{AtomSpec, DimensionlessPoint, GravityEnv, ThermalSpec};
pub use rates::RateSet;
