//! Ordinary and symmetric discrete Fourier transforms.
//!
//! The crate is organised bottom-up:
//!
//! - [`numerics`]: exact half-integer grids, signal/spectrum containers, the
//!   normalized sinc, the brute-force DFT oracle and the fast kernel.
//! - [`transforms`]: the ordinary DFT, the odd/even/corrected-even symmetric
//!   DFTs, their inverses, transform matrices and orthogonal basis vectors.
//! - [`windows`]: analytic window spectra, phase-aliasing constants,
//!   sampling-function impulse trains and closed-form DTFTs of rectangular
//!   windows and single tones.
//! - [`properties`]: numerical verifiers for symmetry, conjugation and the
//!   frequency-domain summation identities.
//! - [`interpolation`]: zero-padding, the discrete-frequency Fourier transform
//!   (evaluation of the trigonometric interpolant at real time) and the
//!   square-wave overshoot experiment.

pub mod error;
pub mod interpolation;
pub mod numerics;
pub mod properties;
pub mod transforms;
pub mod windows;

pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use numerics::{Convention, FrequencyGrid, HalfUnits, Signal, Spectrum, TimeGrid};
pub use transforms::FreqChoice;
