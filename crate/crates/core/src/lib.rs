//! Numerical laboratory for the forced stochastic (hyper-viscous) Navier-Stokes
//! equations in similarity variables.
//!
//! The crate is organised around one experiment: start from an unstable
//! axisymmetric vortex ring, study the linearized similarity-variable
//! operators and their unstable spectra, drive the equations with a trace-class
//! Q-Wiener force, and continue a second solution past the background one by a
//! Picard fixed point in an exponentially weighted norm. The complementary
//! well-posedness regimes (viscosity exponent at or above 5/4, and small
//! forcing) are covered by a Galerkin SDE solver and a mild-solution solver.
//!
//! Layout:
//! * [`spectral`] - periodic-box grids, FFT plans, divergence-free projection,
//!   fractional Laplacian, Sobolev norms.
//! * [`sim`] - similarity-variable transforms between profile and physical
//!   fields.
//! * [`axi`] - axisymmetric half-plane grids, sine/cosine spectral calculus,
//!   the stream-function Biot-Savart solver.
//! * [`vortex`] - the unstable planar vortex, its truncation, and the lift to
//!   a three-dimensional vortex ring.
//! * [`ops`] - the linearized vorticity and velocity operators and their
//!   identity/probe suites.
//! * [`spectra`] - semigroup stepping, dominant eigenpairs, smoothing-rate
//!   probes.
//! * [`noise`] - Q-Wiener sampling, Hoelder estimation, stopping times, and
//!   the similarity-variable noise profile.
//! * [`nonuniq`] - forcing assembly, the weighted Picard solve, solution
//!   pairs and their diagnostics.
//! * [`galerkin`] - finite-dimensional SDE approximation, monotonicity and
//!   heat-flow probes, the small-force contraction, pathwise gluing.
//! * [`container`] - the binary field container shared by all tools.

pub mod axi;
pub mod calib;
pub mod container;
pub mod galerkin;
pub mod noise;
pub mod nonuniq;
pub mod ops;
pub mod params;
pub mod sim;
pub mod spectra;
pub mod spectral;
pub mod util;
pub mod vortex;

pub use params::Params;
