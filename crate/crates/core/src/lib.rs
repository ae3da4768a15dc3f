//! Exact spectra of the one-dimensional barrier-well junction.
//!
//! The junction is a thin repulsive slab of height `sigma^2` on `(-1, 0)`
//! followed by an equal attractive slab on `(0, 1)` (the step regularization
//! of the delta-prime point interaction, in units where the slab width is 1
//! and `hbar^2/2m = 1`). The crate provides
//!
//! * [`potential`] — piecewise-constant potentials with point scatterers,
//!   including the barrier-well and double-delta builders;
//! * [`transfer`] — an exact transfer-matrix solver for any such potential:
//!   scattering amplitudes, wavefunction evaluation and a numeric
//!   bound-state search. This is the brute-force oracle every closed form
//!   is checked against;
//! * [`junction`] — the closed-form transmission `T(eta, sigma)`, the
//!   transparency levels `tan(sigma) = tanh(sigma)`, their limiting
//!   transmissions and the wavefunction jump across `x = 0`;
//! * [`spectrum`] — the discrete (negative-energy) spectrum: bound-state
//!   curves `zeta_n(sigma)`, thresholds and the state count;
//! * [`waveguide`] — the TE slab-waveguide mapping `sigma = k a sqrt(eps_m)`,
//!   cut-off points, dispersion curves and transverse transmission sectors.
//!
//! Scattering energies enter through `eta` (`E = eta^2`), binding through
//! `zeta` (`E = -zeta^2`); both are dimensionless in the unit-width
//! convention.

pub mod error;
pub mod junction;
pub mod potential;
pub mod spectrum;
pub mod transfer;
pub mod waveguide;

mod bisect;

pub use error::{Error, Result};

/// Largest barrier-well strength the solvers accept.
///
/// Entries of the barrier transfer matrix grow like `exp(sigma)`; up to
/// `sigma = 25` all quoted tolerances hold comfortably in double precision,
/// beyond it the guarantees erode, so builders and spectrum solvers reject
/// larger strengths. Pure resonance-level arithmetic (`tan`/`tanh`) is not
/// affected by the cap.
pub const SIGMA_MAX: f64 = 25.0;
