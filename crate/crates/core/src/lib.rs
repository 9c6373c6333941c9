//! Pseudo-spectral incompressible Navier-Stokes on the periodic 3-torus,
//! with a diagnostics suite that evaluates rigorous bounds on Kolmogorov
//! energy spectra: invariant Fourier-amplitude sets, pointwise and
//! time-averaged spectrum bounds, inertial-range endpoint estimates, and
//! spectral-lifetime bounds.
//!
//! The crate is organized around the flow of a batch experiment:
//!
//! * [`lattice`], [`field`], [`transform`] — dual-lattice geometry, the
//!   dimensionally adapted Fourier normalization, Leray projection, norms.
//! * [`dynamics`] — Fourier-space evolution with an integrating-factor
//!   SSP-RK3 stepper, pressure recovery, energy-inequality monitoring.
//! * [`forcing`] — divergence-free force models and their time statistics.
//! * [`spectra`] — annulus-binned energy spectral function, averages, the
//!   idealized -5/3 model, dissipation rate, spectrum-derived norms.
//! * [`bounds`] — the trapping-set constants, inertial-range endpoints,
//!   Kolmogorov/Taylor scales, and the theorem pass/fail checks.
//! * [`filter`] — cube-cutoff filtered amplitudes `e_p`/`f_p` and the
//!   associated lemma-hypothesis checks.
//! * [`behavior`] — uniform / Sobolev / Besov spectral-behavior criteria
//!   and the endpoint constraints they imply.
//! * [`snapshot`], [`config`], [`trajectory`], [`pipeline`] — persistence,
//!   run configuration, and the batch commands behind the CLI.
//!
//! [`oracle`] holds the brute-force Galerkin convolution used to validate
//! the transform-based nonlinear term; it is deliberately independent of
//! the FFT path.

pub mod behavior;
pub mod bounds;
pub mod config;
pub mod dynamics;
pub mod error;
pub mod field;
pub mod filter;
pub mod forcing;
pub mod lattice;
pub mod math;
pub mod oracle;
pub mod pipeline;
pub mod snapshot;
pub mod spectra;
pub mod trajectory;
pub mod transform;

pub use error::Error;
pub use field::SpectralField;
pub use lattice::Lattice;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
