//! Continuous-frequency analytic spectra.
//!
//! A finite record is the product of the signal, a rectangular window and a
//! sampling impulse train, so its DTFT is the convolution of the three
//! transforms. Shifting the window off center adds a phase linear in
//! frequency (phase aliasing); the coefficient is a [`PhaseConstant`].
//!
//! Frequency units: throughout this module `f` and `fs` are in Hz, and phase
//! terms `c·f` are evaluated with `f` expressed in bins, `ν = f·N/fs`, so a
//! one-bin offset produces a phase of exactly `c`.
//!
//! Alias sums run over `j ∈ [−J, J]`; [`DEFAULT_ALIAS_HALF_WIDTH`] is the
//! usual truncation.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{nsinc, Convention, Signal};

pub const DEFAULT_ALIAS_HALF_WIDTH: usize = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PhaseConstantKind {
    /// Window shifted by `(N−1)/2` samples whose first sample is nonzero
    /// (rectangular, symmetric Hann): `−π(N−1)/N`.
    ShiftedWindowNonzeroStart,
    /// Window whose first sample is zero (periodic Hann): `−π`.
    ShiftedWindowZeroStart,
    /// The half-sample offset of the uncorrected even symmetric grid: `π/N`.
    UncorrectedEvenSdft,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PhaseConstant {
    kind: PhaseConstantKind,
    n: usize,
    value: f64,
}

impl PhaseConstant {
    pub fn new(kind: PhaseConstantKind, n: usize) -> Self {
        let nf = n as f64;
        let value = match kind {
            PhaseConstantKind::ShiftedWindowNonzeroStart => -PI * (nf - 1.0) / nf,
            PhaseConstantKind::ShiftedWindowZeroStart => -PI,
            PhaseConstantKind::UncorrectedEvenSdft => PI / nf,
        };
        PhaseConstant { kind, n, value }
    }

    /// `c₁ = −π(N−1)/N`.
    pub fn ordinary(n: usize) -> Self {
        Self::new(PhaseConstantKind::ShiftedWindowNonzeroStart, n)
    }

    /// `c₂ = π/N`.
    pub fn uncorrected(n: usize) -> Self {
        Self::new(PhaseConstantKind::UncorrectedEvenSdft, n)
    }

    pub fn kind(&self) -> PhaseConstantKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    /// The aliasing phase `c·ν` at frequency `f` Hz.
    pub fn phase_at(&self, fs: f64, f: f64) -> f64 {
        self.value * f * self.n as f64 / fs
    }
}

/// FT of the centered rectangular window of `N` samples: `(N/fs)·sinc(N·f/fs)`.
pub fn window_ft(n: usize, fs: f64, f: f64) -> Complex64 {
    let nf = n as f64;
    Complex64::new(nf / fs * nsinc(nf * f / fs), 0.0)
}

/// FT of the shifted window: `window_ft · exp(i·c·ν)`.
pub fn shifted_window_ft(n: usize, fs: f64, f: f64, constant: &PhaseConstant) -> Complex64 {
    window_ft(n, fs, f) * Complex64::from_polar(1.0, constant.value * f * n as f64 / fs)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SamplingKind {
    /// Impulses at integer multiples of the sample period.
    Odd,
    /// Impulses at half-integer multiples.
    Even,
    /// Impulses at `(n + r)` sample periods, `−0.5 < r ≤ 0.5`.
    Generalized(f64),
    /// Alternating-sign impulses at integer multiples.
    Reversal,
}

#[derive(Clone, Copy, Debug, PartialEq)]
enum WeightRule {
    Constant,
    Alternating,
    Rotating(f64),
}

/// `Σⱼ wⱼ·δ(f − offset − j·spacing)`, held symbolically.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ImpulseTrain {
    spacing: f64,
    offset: f64,
    scale: f64,
    rule: WeightRule,
}

impl ImpulseTrain {
    pub fn spacing(&self) -> f64 {
        self.spacing
    }

    pub fn offset(&self) -> f64 {
        self.offset
    }

    pub fn location(&self, j: i64) -> f64 {
        self.offset + j as f64 * self.spacing
    }

    pub fn weight(&self, j: i64) -> Complex64 {
        match self.rule {
            WeightRule::Constant => Complex64::new(self.scale, 0.0),
            WeightRule::Alternating => {
                let sign = if j.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
                Complex64::new(self.scale * sign, 0.0)
            }
            // exp(−i2π·r·j) at f = j·fs; reduce r·j to a fractional turn first
            WeightRule::Rotating(r) => {
                let turns = (r * j as f64).rem_euclid(1.0);
                Complex64::from_polar(self.scale, -TAU * turns)
            }
        }
    }

    /// `(F ⊗ S)(f) = Σ_{|j|≤J} wⱼ·F(f − location(j))`, smallest terms first.
    pub fn convolve<F>(&self, f: f64, half_width: usize, spectrum: F) -> Complex64
    where
        F: Fn(f64) -> Complex64,
    {
        let term = |j: i64| self.weight(j) * spectrum(f - self.location(j));
        let mut acc = Complex64::new(0.0, 0.0);
        for j in (1..=half_width as i64).rev() {
            acc += term(j) + term(-j);
        }
        acc + term(0)
    }
}

pub fn sampling_spectrum(kind: SamplingKind, fs: f64) -> Result<ImpulseTrain> {
    if !(fs.is_finite() && fs > 0.0) {
        return Err(Error::Domain(format!(
            "sample rate must be positive, got {fs}"
        )));
    }
    let (offset, rule) = match kind {
        SamplingKind::Odd => (0.0, WeightRule::Constant),
        SamplingKind::Even => (0.0, WeightRule::Alternating),
        SamplingKind::Generalized(r) => {
            if !(r > -0.5 && r <= 0.5) {
                return Err(Error::Domain(format!(
                    "sampling offset r={r} outside (-0.5, 0.5]"
                )));
            }
            (0.0, WeightRule::Rotating(r))
        }
        SamplingKind::Reversal => (fs / 2.0, WeightRule::Constant),
    };
    Ok(ImpulseTrain {
        spacing: fs,
        offset,
        scale: fs,
        rule,
    })
}

/// Which discrete transform a DTFT formula describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DtftVariant {
    Odft,
    UncorrectedSdft,
    /// Centered record: half-integer grid for even N, integer grid for odd N.
    CorrectedSdft,
}

impl DtftVariant {
    pub const ALL: [DtftVariant; 3] = [
        DtftVariant::Odft,
        DtftVariant::UncorrectedSdft,
        DtftVariant::CorrectedSdft,
    ];

    /// The time grid whose sampled record this DTFT belongs to.
    pub fn convention(self, n: usize) -> Convention {
        match self {
            DtftVariant::Odft => Convention::OrdinaryHead,
            DtftVariant::UncorrectedSdft => Convention::SymmetricEvenUncorrected,
            DtftVariant::CorrectedSdft => Convention::centered_for(n),
        }
    }
}

/// DTFT of an `N`-sample rectangular window under each convention.
///
/// All three are `Σⱼ N·sinc(N(f + j·fs)/fs)` times a per-term factor:
/// `exp(i·c₁·(ν + jN))`, `exp(i·c₂·(ν + jN))`, or the sampling-function
/// sign (`(−1)ʲ` for even N, `1` for odd N), which leaves the centered
/// variant real.
pub fn rect_dtft(n: usize, fs: f64, f: f64, variant: DtftVariant, half_width: usize) -> Complex64 {
    let (train, constant) = match variant {
        DtftVariant::Odft => (SamplingKind::Odd, Some(PhaseConstant::ordinary(n))),
        DtftVariant::UncorrectedSdft => (SamplingKind::Odd, Some(PhaseConstant::uncorrected(n))),
        DtftVariant::CorrectedSdft if n.is_multiple_of(2) => (SamplingKind::Even, None),
        DtftVariant::CorrectedSdft => (SamplingKind::Odd, None),
    };
    let train = sampling_spectrum(train, fs).expect("fs validated by caller");
    match constant {
        Some(c) => train.convolve(f, half_width, |g| shifted_window_ft(n, fs, g, &c)),
        None => train.convolve(f, half_width, |g| window_ft(n, fs, g)),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ToneParams {
    pub amplitude: f64,
    pub frequency: f64,
    /// Phase at the time origin of the grid the tone is sampled on.
    pub phase: f64,
}

impl ToneParams {
    pub fn new(amplitude: f64, frequency: f64, phase: f64) -> Result<Self> {
        if !(amplitude.is_finite() && amplitude >= 0.0) {
            return Err(Error::Domain(format!(
                "tone amplitude must be >= 0, got {amplitude}"
            )));
        }
        if !(frequency.is_finite() && phase.is_finite()) {
            return Err(Error::Domain(
                "tone frequency and phase must be finite".into(),
            ));
        }
        Ok(ToneParams {
            amplitude,
            frequency,
            phase,
        })
    }

    /// `A·cos(2π·f₀·t + φ)` at `t` seconds.
    pub fn value_at(&self, t: f64) -> f64 {
        self.amplitude * (TAU * self.frequency * t + self.phase).cos()
    }

    pub fn sample(&self, convention: Convention, n: usize, fs: f64) -> Result<Signal> {
        Signal::sample(convention, n, fs, |t| Complex64::new(self.value_at(t), 0.0))
    }

    /// Same tone with the phase referred to the record center instead of
    /// the head: `φ + π(N−1)·f₀/fs`.
    pub fn recentered(&self, n: usize, fs: f64) -> Self {
        ToneParams {
            phase: self.phase + PI * (n as f64 - 1.0) * self.frequency / fs,
            ..*self
        }
    }
}

/// DTFT of a sampled, rectangular-windowed single tone.
///
/// The tone's spectrum is two weighted impulses at `±f₀`, so the result is
/// `(A/2)·[e^{iφ}·K(f − f₀) + e^{−iφ}·K(f + f₀)]` with `K` = [`rect_dtft`].
/// The conjugate term therefore carries `exp(+i·c·(ν + ν₀ + jN))`.
pub fn tone_dtft(
    tone: &ToneParams,
    n: usize,
    fs: f64,
    f: f64,
    variant: DtftVariant,
    half_width: usize,
) -> Complex64 {
    let pos = rect_dtft(n, fs, f - tone.frequency, variant, half_width);
    let neg = rect_dtft(n, fs, f + tone.frequency, variant, half_width);
    let rot = Complex64::from_polar(1.0, tone.phase);
    (rot * pos + rot.conj() * neg) * (tone.amplitude / 2.0)
}

/// The large-N form keeping only the `j = 0` alias of each term.
pub fn tone_dtft_leading(
    tone: &ToneParams,
    n: usize,
    fs: f64,
    f: f64,
    variant: DtftVariant,
) -> Complex64 {
    tone_dtft(tone, n, fs, f, variant, 0)
}
