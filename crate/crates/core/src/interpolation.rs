//! Zero-padding, trigonometric interpolation and the square-wave overshoot
//! experiment.
//!
//! Padding by an odd factor `M` produces `M·N` samples in either domain.
//! On the symmetric grids the zeros are split equally between both ends, so
//! the padded record stays centered and the original bins (or samples) sit
//! at every `M`-th position of the denser grid.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{kernel_f64, Convention, FrequencyGrid, Signal, Spectrum};
use crate::transforms::{inverse, odft, sdft, FreqChoice};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Placement {
    /// Zeros after the record (head-indexed grids).
    TailOrdinary,
    /// Equal runs of zeros on both sides (centered grids).
    SymmetricTwoSided,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PaddingSpec {
    factor: usize,
    placement: Placement,
}

impl PaddingSpec {
    pub fn new(factor: usize, placement: Placement) -> Result<Self> {
        check_factor(factor)?;
        Ok(PaddingSpec { factor, placement })
    }

    pub fn factor(&self) -> usize {
        self.factor
    }

    pub fn placement(&self) -> Placement {
        self.placement
    }

    pub fn padded_len(&self, n: usize) -> usize {
        self.factor * n
    }
}

fn check_factor(factor: usize) -> Result<()> {
    if factor % 2 == 1 {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "padding factor must be an odd integer >= 1, got {factor}"
        )))
    }
}

fn pad_centered(values: &[Complex64], factor: usize) -> Vec<Complex64> {
    let n = values.len();
    let side = (factor - 1) * n / 2;
    let zero = Complex64::new(0.0, 0.0);
    let mut out = Vec::with_capacity(factor * n);
    out.resize(side, zero);
    out.extend_from_slice(values);
    out.resize(factor * n, zero);
    out
}

fn pad_tail(values: &[Complex64], factor: usize) -> Vec<Complex64> {
    let mut out = values.to_vec();
    out.resize(factor * values.len(), Complex64::new(0.0, 0.0));
    out
}

/// Time-domain zero-padding.
///
/// The padded transform samples the same DTFT `M` times more densely:
/// bin `m` of the original equals bin `M·m` of the padded spectrum.
pub fn pad_time(signal: &Signal, spec: PaddingSpec) -> Result<Signal> {
    let conv = signal.convention();
    let samples = match spec.placement {
        Placement::TailOrdinary if conv == Convention::OrdinaryHead => {
            pad_tail(signal.samples(), spec.factor)
        }
        Placement::SymmetricTwoSided if conv.is_centered() => {
            pad_centered(signal.samples(), spec.factor)
        }
        Placement::TailOrdinary => {
            return Err(Error::ConventionMismatch {
                expected: "odft",
                found: conv,
            })
        }
        Placement::SymmetricTwoSided => {
            return Err(Error::ConventionMismatch {
                expected: "a centered symmetric convention",
                found: conv,
            })
        }
    };
    Signal::new(samples, conv)?.with_sample_rate(signal.sample_rate())
}

/// Frequency-domain zero-padding of a centered spectrum to `M·N` bins.
pub fn pad_freq(spectrum: &Spectrum, factor: usize) -> Result<Spectrum> {
    check_factor(factor)?;
    if !spectrum.grid().is_centered() || !spectrum.source_convention().is_centered() {
        return Err(Error::ConventionMismatch {
            expected: "a centered spectrum",
            found: spectrum.source_convention(),
        });
    }
    let bins = pad_centered(spectrum.bins(), factor);
    let len = bins.len();
    Spectrum::new(
        bins,
        FrequencyGrid::centered(len),
        spectrum.source_convention(),
    )
}

/// Frequency-domain zero-padding of an ordinary spectrum: zeros after bin `N−1`.
pub fn pad_freq_ordinary(spectrum: &Spectrum, factor: usize) -> Result<Spectrum> {
    check_factor(factor)?;
    if !spectrum.grid().is_ordinary() || spectrum.source_convention() != Convention::OrdinaryHead {
        return Err(Error::ConventionMismatch {
            expected: "odft",
            found: spectrum.source_convention(),
        });
    }
    let bins = pad_tail(spectrum.bins(), factor);
    let len = bins.len();
    Spectrum::new(bins, FrequencyGrid::ordinary(len), Convention::OrdinaryHead)
}

/// The trigonometric interpolant `(1/N)·Σₘ X(m)·exp(i2π·m·n/N)` at real time `n`.
pub fn dfft(spectrum: &Spectrum, n: f64) -> Result<Complex64> {
    if !spectrum.grid().is_centered() {
        return Err(Error::ConventionMismatch {
            expected: "a centered spectrum",
            found: spectrum.source_convention(),
        });
    }
    let len = spectrum.len();
    let sum = spectrum
        .grid()
        .values()
        .zip(spectrum.bins())
        .fold(Complex64::new(0.0, 0.0), |acc, (m, &x)| {
            acc + x * kernel_f64(m.value(), n, len).conj()
        });
    Ok(sum / len as f64)
}

fn require_odd_symmetric(signal: &Signal) -> Result<()> {
    match signal.convention() {
        Convention::SymmetricOdd => Ok(()),
        Convention::SymmetricEvenCorrected | Convention::SymmetricEvenUncorrected => {
            Err(Error::UnsupportedLength {
                len: signal.len(),
                reason: "interpolation needs an odd-length symmetric record",
            })
        }
        found => Err(Error::ConventionMismatch {
            expected: "sdft-odd",
            found,
        }),
    }
}

fn rescale(signal: Signal, factor: usize, scale: f64) -> Result<Signal> {
    let fs = signal.sample_rate() * factor as f64;
    let conv = signal.convention();
    let samples = signal
        .into_samples()
        .into_iter()
        .map(|z| z * scale)
        .collect();
    Signal::new(samples, conv)?.with_sample_rate(fs)
}

/// Interpolant on the `M`-times denser grid, before the real-part projection.
///
/// Output sample `j` (time value `t`) sits at `t/M` original sample periods
/// and equals [`dfft`]`(X, t/M)`.
pub fn interpolate_complex(signal: &Signal, factor: usize) -> Result<Signal> {
    require_odd_symmetric(signal)?;
    check_factor(factor)?;
    if factor == 1 {
        return Ok(signal.clone());
    }
    let spectrum = sdft(signal, FreqChoice::CenteredGrid)?;
    let padded = pad_freq(&spectrum, factor)?;
    let dense = inverse(&padded).with_sample_rate(signal.sample_rate())?;
    // the inverse of the long record carries 1/(M·N) instead of 1/N
    rescale(dense, factor, factor as f64)
}

/// Frequency-padding interpolation of an odd symmetric record; keeps the real part.
pub fn interpolate(signal: &Signal, factor: usize) -> Result<Signal> {
    let dense = interpolate_complex(signal, factor)?;
    project_real(dense)
}

/// The same three-step recipe on a head-indexed record (zeros after the
/// last bin), kept as a negative control: its interpolant between samples
/// is not the band-limited one and is far from real.
pub fn interpolate_ordinary_complex(signal: &Signal, factor: usize) -> Result<Signal> {
    if signal.convention() != Convention::OrdinaryHead {
        return Err(Error::ConventionMismatch {
            expected: "odft",
            found: signal.convention(),
        });
    }
    let padded = pad_freq_ordinary(&odft(signal)?, factor)?;
    let dense = inverse(&padded).with_sample_rate(signal.sample_rate())?;
    rescale(dense, factor, factor as f64)
}

pub fn interpolate_ordinary(signal: &Signal, factor: usize) -> Result<Signal> {
    project_real(interpolate_ordinary_complex(signal, factor)?)
}

fn project_real(signal: Signal) -> Result<Signal> {
    let fs = signal.sample_rate();
    let conv = signal.convention();
    let samples = signal
        .into_samples()
        .into_iter()
        .map(|z| Complex64::new(z.re, 0.0))
        .collect();
    Signal::new(samples, conv)?.with_sample_rate(fs)
}

/// `k` zeros, `k` ones, `k` zeros on the odd symmetric grid (`k` odd).
pub fn square_wave(k: usize) -> Result<Signal> {
    if k.is_multiple_of(2) {
        return Err(Error::UnsupportedLength {
            len: k,
            reason: "square wave quarter length k must be odd",
        });
    }
    let samples: Vec<f64> = (0..3 * k)
        .map(|i| if (k..2 * k).contains(&i) { 1.0 } else { 0.0 })
        .collect();
    Signal::from_real(&samples, Convention::SymmetricOdd)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GibbsReport {
    pub k: usize,
    #[serde(rename = "M")]
    pub m: usize,
    /// `max(interpolant) − 1`.
    pub overshoot: f64,
    /// `min(interpolant) − 0`.
    pub undershoot: f64,
    pub jump: f64,
}

/// Overshoot of the interpolated square wave, with the interpolant itself.
pub fn gibbs_with_interpolant(k: usize, factor: usize) -> Result<(GibbsReport, Signal)> {
    let wave = square_wave(k)?;
    let dense = interpolate(&wave, factor)?;
    let (lo, hi) = dense
        .samples()
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), z| {
            (lo.min(z.re), hi.max(z.re))
        });
    let report = GibbsReport {
        k,
        m: factor,
        overshoot: hi - 1.0,
        undershoot: lo,
        jump: 1.0,
    };
    Ok((report, dense))
}

pub fn gibbs(k: usize, factor: usize) -> Result<GibbsReport> {
    gibbs_with_interpolant(k, factor).map(|(report, _)| report)
}
