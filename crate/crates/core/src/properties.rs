//! Numerical verifiers for properties the symmetric DFT shares with the
//! continuous Fourier transform and the ordinary DFT lacks.
//!
//! Each check returns a [`PropertyReport`]. Negative controls (the same
//! identity evaluated on a head-indexed record) are ordinary reports whose
//! tolerance is a failure margin: a generic input is expected to land
//! outside it, which is what makes the property specific to the symmetric
//! transforms.
//!
//! Tolerances, relative to the natural scale of each identity:
//! structural identities (symmetry, conjugation, DC) [`STRUCTURAL_TOL`],
//! the real-part sum [`SUMMATION_TOL`], leakage-weighted sums [`LEAKAGE_TOL`].

use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{nsinc, Convention, FrequencyGrid, HalfUnits, Signal, Spectrum};
use crate::transforms::{forward, odft, sdft, transform, FreqChoice};
use crate::windows::ToneParams;

pub const STRUCTURAL_TOL: f64 = 1e-10;
pub const SUMMATION_TOL: f64 = 1e-8;
pub const LEAKAGE_TOL: f64 = 1e-6;
/// Relative deviation a negative control must exceed to count as failing.
pub const CONTROL_MARGIN: f64 = 1e-2;
/// Below this a scale factor leaves the phase unrecoverable.
pub const MIN_SCALE_FACTOR: f64 = 1e-9;
pub const DEFAULT_ALIAS_TERMS: usize = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Passed,
    Failed,
    NotApplicable,
    Indeterminate,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub name: String,
    pub measured: Complex64,
    pub expected: Complex64,
    pub abs_error: f64,
    pub tolerance: f64,
    pub status: Status,
}

impl PropertyReport {
    pub fn compare(
        name: impl Into<String>,
        measured: Complex64,
        expected: Complex64,
        tolerance: f64,
    ) -> Self {
        let abs_error = (measured - expected).norm();
        let status = if abs_error <= tolerance {
            Status::Passed
        } else {
            Status::Failed
        };
        PropertyReport {
            name: name.into(),
            measured,
            expected,
            abs_error,
            tolerance,
            status,
        }
    }

    fn deviation(name: impl Into<String>, deviation: f64, tolerance: f64) -> Self {
        Self::compare(name, real(deviation), Complex64::new(0.0, 0.0), tolerance)
    }

    fn with_status(name: impl Into<String>, status: Status) -> Self {
        PropertyReport {
            name: name.into(),
            measured: Complex64::new(0.0, 0.0),
            expected: Complex64::new(0.0, 0.0),
            abs_error: 0.0,
            tolerance: 0.0,
            status,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Passed
    }
}

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn max_dev<I>(pairs: I) -> f64
where
    I: IntoIterator<Item = f64>,
{
    pairs.into_iter().fold(0.0, f64::max)
}

fn structural_scale(signal: &Signal) -> f64 {
    signal
        .samples()
        .iter()
        .map(|z| z.norm())
        .sum::<f64>()
        .max(1.0)
}

fn require_real(signal: &Signal) -> Result<()> {
    if signal.is_real() {
        Ok(())
    } else {
        Err(Error::Domain("check requires real samples".into()))
    }
}

fn require(signal: &Signal, convention: Convention, name: &'static str) -> Result<()> {
    if signal.convention() == convention {
        Ok(())
    } else {
        Err(Error::ConventionMismatch {
            expected: name,
            found: signal.convention(),
        })
    }
}

/// `Σ_{m>0} X(m) − Σ_{m<0} X(m)` over the spectrum's own grid.
pub fn imaginary_sum(spectrum: &Spectrum) -> Complex64 {
    spectrum
        .grid()
        .values()
        .zip(spectrum.bins())
        .fold(Complex64::new(0.0, 0.0), |acc, (m, &x)| {
            match m.twice().signum() {
                1 => acc + x,
                -1 => acc - x,
                _ => acc,
            }
        })
}

/// `Σₘ Re X(m)`.
pub fn real_sum(spectrum: &Spectrum) -> f64 {
    spectrum.bins().iter().map(|z| z.re).sum()
}

/// The same sum over an ordinary spectrum, pairing bin `N−m` with `−m`.
fn ordinary_imaginary_sum(spectrum: &Spectrum) -> Complex64 {
    let n = spectrum.len();
    let bins = spectrum.bins();
    (1..=(n - 1) / 2).fold(Complex64::new(0.0, 0.0), |acc, m| {
        acc + bins[m] - bins[n - m]
    })
}

/// `X(0) = Σ x(n)` under any convention.
pub fn dc_identity(signal: &Signal) -> Result<PropertyReport> {
    let spectrum = forward(signal, FreqChoice::FastGrid)?;
    let dc = spectrum
        .at(HalfUnits::ZERO)
        .expect("ordinary and fast grids contain bin 0");
    let tol = STRUCTURAL_TOL * signal.len() as f64 * signal.max_abs();
    Ok(PropertyReport::compare("dc", dc, signal.sum(), tol))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Parity {
    Even,
    Odd,
    Neither,
}

fn parity(signal: &Signal) -> Parity {
    let x = signal.samples();
    let tol = 1e-12 * signal.max_abs();
    let rev = || x.iter().rev();
    if x.iter().zip(rev()).all(|(a, b)| (a - b).norm() <= tol) {
        Parity::Even
    } else if x.iter().zip(rev()).all(|(a, b)| (a + b).norm() <= tol) {
        Parity::Odd
    } else {
        Parity::Neither
    }
}

/// Real even input gives a real even spectrum; real odd input an imaginary odd one.
///
/// The symmetry class is detected from the samples. Input that is neither
/// yields two `NotApplicable` reports.
pub fn symmetry_check(signal: &Signal) -> Result<(PropertyReport, PropertyReport)> {
    if !signal.convention().is_centered() {
        return Err(Error::ConventionMismatch {
            expected: "a centered symmetric convention",
            found: signal.convention(),
        });
    }
    require_real(signal)?;
    let class = parity(signal);
    if class == Parity::Neither {
        return Ok((
            PropertyReport::with_status("spectrum-part", Status::NotApplicable),
            PropertyReport::with_status("spectrum-parity", Status::NotApplicable),
        ));
    }
    let spectrum = sdft(signal, FreqChoice::CenteredGrid)?;
    let x = spectrum.bins();
    let mirrored = || x.iter().rev();
    let tol = STRUCTURAL_TOL * structural_scale(signal);
    Ok(match class {
        Parity::Even => (
            PropertyReport::deviation("spectrum-real", max_dev(x.iter().map(|z| z.im.abs())), tol),
            PropertyReport::deviation(
                "spectrum-even",
                max_dev(x.iter().zip(mirrored()).map(|(a, b)| (a - b).norm())),
                tol,
            ),
        ),
        _ => (
            PropertyReport::deviation(
                "spectrum-imaginary",
                max_dev(x.iter().map(|z| z.re.abs())),
                tol,
            ),
            PropertyReport::deviation(
                "spectrum-odd",
                max_dev(x.iter().zip(mirrored()).map(|(a, b)| (a + b).norm())),
                tol,
            ),
        ),
    })
}

/// Reversing a real record conjugates its spectrum on a centered grid.
///
/// Run on a head-indexed record the same comparison fails for generic input.
pub fn conjugate_check(signal: &Signal) -> Result<PropertyReport> {
    require_real(signal)?;
    let grid = match signal.convention() {
        Convention::OrdinaryHead => FrequencyGrid::ordinary(signal.len()),
        _ => FrequencyGrid::centered(signal.len()),
    };
    let x = transform(signal, grid)?;
    let x_rev = transform(&signal.reversed(), grid)?;
    let dev = max_dev(
        x_rev
            .bins()
            .iter()
            .zip(x.bins())
            .map(|(a, b)| (a - b.conj()).norm()),
    );
    let name = format!("conjugate ({})", signal.convention());
    Ok(PropertyReport::deviation(
        name,
        dev,
        STRUCTURAL_TOL * structural_scale(signal),
    ))
}

/// `Σₘ Re X(m) = N·x(0)` for the odd symmetric DFT.
pub fn real_part_sum(signal: &Signal) -> Result<PropertyReport> {
    require(signal, Convention::SymmetricOdd, "sdft-odd")?;
    let spectrum = sdft(signal, FreqChoice::CenteredGrid)?;
    let n = signal.len() as f64;
    let x0 = signal.at(HalfUnits::ZERO).expect("odd grid contains t=0");
    Ok(PropertyReport::compare(
        "odd-sdft real sum",
        real(real_sum(&spectrum)),
        real(n * x0.re),
        SUMMATION_TOL * n * signal.max_abs(),
    ))
}

/// Negative control: the real-part sum of the ordinary DFT against `N` times
/// the record-center sample, the same physical instant the odd SDFT uses.
///
/// The tolerance is [`CONTROL_MARGIN`]`·N·max|x|`; generic input fails it.
pub fn real_part_sum_head_indexed(signal: &Signal) -> Result<PropertyReport> {
    require(signal, Convention::OrdinaryHead, "odft")?;
    let n = signal.len();
    if n.is_multiple_of(2) {
        return Err(Error::UnsupportedLength {
            len: n,
            reason: "record center is a sample only for odd N",
        });
    }
    let spectrum = odft(signal)?;
    let center = signal.samples()[(n - 1) / 2];
    let nf = n as f64;
    Ok(PropertyReport::compare(
        "odft real sum (control)",
        real(real_sum(&spectrum)),
        real(nf * center.re),
        CONTROL_MARGIN * nf * signal.max_abs(),
    ))
}

/// Leakage scale factor `γ` of the imaginary-part sum for one tone frequency.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GammaFactor {
    pub f_i: f64,
    pub n: usize,
    pub fs: f64,
    pub gamma: f64,
}

impl GammaFactor {
    pub fn is_determinate(&self) -> bool {
        self.gamma.abs() >= MIN_SCALE_FACTOR
    }
}

fn require_odd(n: usize) -> Result<()> {
    if n % 2 == 1 {
        Ok(())
    } else {
        Err(Error::UnsupportedLength {
            len: n,
            reason: "odd symmetric DFT needs odd N",
        })
    }
}

fn require_even(n: usize) -> Result<()> {
    if n >= 2 && n.is_multiple_of(2) {
        Ok(())
    } else {
        Err(Error::UnsupportedLength {
            len: n,
            reason: "even symmetric DFT needs even N",
        })
    }
}

fn centered_spectrum(tone: &ToneParams, n: usize, fs: f64) -> Result<Spectrum> {
    let signal = tone.sample(Convention::centered_for(n), n, fs)?;
    sdft(&signal, FreqChoice::CenteredGrid)
}

/// `γ` from a probe tone: sample `cos(2πfₜt + π/2)`, transform, and solve
/// `S_im = i·γ·N·A·sin φ`.
pub fn gamma_estimate(f_i: f64, n: usize, fs: f64) -> Result<GammaFactor> {
    require_odd(n)?;
    let probe = ToneParams::new(1.0, f_i, FRAC_PI_2)?;
    let s_im = imaginary_sum(&centered_spectrum(&probe, n, fs)?);
    Ok(GammaFactor {
        f_i,
        n,
        fs,
        gamma: (s_im / Complex64::new(0.0, n as f64)).re,
    })
}

/// `γ` recovered from an arbitrary tone, for checking that the factor does
/// not depend on amplitude or phase.
pub fn gamma_from_tone(tone: &ToneParams, n: usize, fs: f64) -> Result<f64> {
    require_odd(n)?;
    let s_im = imaginary_sum(&centered_spectrum(tone, n, fs)?);
    let denom = n as f64 * tone.amplitude * tone.phase.sin();
    if denom.abs() < MIN_SCALE_FACTOR {
        return Err(Error::Domain("tone has no imaginary content".into()));
    }
    Ok((s_im / Complex64::new(0.0, denom)).re)
}

/// `Σ_{m>0} Σⱼ sⱼ·sinc(m − ν₀ + jN) − Σ_{m<0} Σⱼ sⱼ·sinc(m − ν₀ + jN)`
/// over the centered grid, with `sⱼ` the sampling-function sign.
fn alias_sums(f_i: f64, n: usize, fs: f64, half_width: usize) -> (f64, f64) {
    let nu0 = f_i * n as f64 / fs;
    let nf = n as f64;
    let alternating = n.is_multiple_of(2);
    let kernel = |mu: f64| -> f64 {
        let mut acc = 0.0;
        for j in (1..=half_width).rev() {
            let jn = j as f64 * nf;
            let pair = nsinc(mu + jn) + nsinc(mu - jn);
            acc += if alternating && j % 2 == 1 {
                -pair
            } else {
                pair
            };
        }
        acc + nsinc(mu)
    };
    let mut total = 0.0;
    let mut antisym = 0.0;
    for m in FrequencyGrid::centered(n).values() {
        let k = kernel(m.value() - nu0);
        total += k;
        antisym += match m.twice().signum() {
            1 => k,
            -1 => -k,
            _ => 0.0,
        };
    }
    (total, antisym)
}

/// `γ` from the truncated double sinc sums, `j ∈ [−J, J]`.
pub fn gamma_from_alias_sums(f_i: f64, n: usize, fs: f64, half_width: usize) -> Result<f64> {
    require_odd(n)?;
    Ok(alias_sums(f_i, n, fs, half_width).1)
}

/// Scale factors of the even (corrected) SDFT summation identities:
/// `Σ Re X = α·N·A·cos φ` and `S_im = i·β·N·A·sin φ`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EvenScaleFactors {
    pub f_i: f64,
    pub n: usize,
    pub fs: f64,
    pub alpha: f64,
    pub beta: f64,
}

/// `α` and `β` from two probe tones on the corrected even grid.
pub fn even_scale_factors(f_i: f64, n: usize, fs: f64) -> Result<EvenScaleFactors> {
    require_even(n)?;
    let nf = n as f64;
    let cos_probe = ToneParams::new(1.0, f_i, 0.0)?;
    let sin_probe = ToneParams::new(1.0, f_i, FRAC_PI_2)?;
    let alpha = real_sum(&centered_spectrum(&cos_probe, n, fs)?) / nf;
    let beta = (imaginary_sum(&centered_spectrum(&sin_probe, n, fs)?) / Complex64::new(0.0, nf)).re;
    Ok(EvenScaleFactors {
        f_i,
        n,
        fs,
        alpha,
        beta,
    })
}

/// `α` and `β` from truncated alternating sinc sums.
pub fn even_scale_factors_from_alias_sums(
    f_i: f64,
    n: usize,
    fs: f64,
    half_width: usize,
) -> Result<EvenScaleFactors> {
    require_even(n)?;
    let (alpha, beta) = alias_sums(f_i, n, fs, half_width);
    Ok(EvenScaleFactors {
        f_i,
        n,
        fs,
        alpha,
        beta,
    })
}

fn synthesize(tones: &[ToneParams], convention: Convention, n: usize, fs: f64) -> Result<Signal> {
    Signal::sample(convention, n, fs, |t| {
        real(tones.iter().map(|tone| tone.value_at(t)).sum())
    })
}

/// Per-tone and whole-signal imaginary-part sums of the odd SDFT against
/// `i·γᵢ·N·Aᵢ·sin φᵢ`.
///
/// `signal` must be the sampled sum of `tones` at its own sample rate.
/// For each tone two reports are produced (the sum, and the recovered
/// `sin φᵢ`), followed by the whole-signal identity and its linearity.
pub fn imag_part_sum(signal: &Signal, tones: &[ToneParams]) -> Result<Vec<PropertyReport>> {
    require(signal, Convention::SymmetricOdd, "sdft-odd")?;
    let n = signal.len();
    let nf = n as f64;
    let fs = signal.sample_rate();
    let model = synthesize(tones, Convention::SymmetricOdd, n, fs)?;
    let total_amp: f64 = tones.iter().map(|t| t.amplitude).sum();
    let mismatch = max_dev(
        signal
            .samples()
            .iter()
            .zip(model.samples())
            .map(|(a, b)| (a - b).norm()),
    );
    if mismatch > 1e-9 * total_amp.max(1.0) {
        return Err(Error::Domain(format!(
            "signal is not the sampled sum of the given tones (deviation {mismatch:e})"
        )));
    }

    let mut reports = Vec::with_capacity(2 * tones.len() + 2);
    let mut expected_total = Complex64::new(0.0, 0.0);
    let mut per_tone_total = Complex64::new(0.0, 0.0);
    for (i, tone) in tones.iter().enumerate() {
        let s_im = imaginary_sum(&centered_spectrum(tone, n, fs)?);
        per_tone_total += s_im;
        let gamma = gamma_estimate(tone.frequency, n, fs)?;
        let expected = Complex64::new(0.0, gamma.gamma * nf * tone.amplitude * tone.phase.sin());
        expected_total += expected;
        if !gamma.is_determinate() || tone.amplitude == 0.0 {
            reports.push(PropertyReport::with_status(
                format!("tone {i} imaginary sum"),
                Status::Indeterminate,
            ));
            reports.push(PropertyReport::with_status(
                format!("tone {i} phase"),
                Status::Indeterminate,
            ));
            continue;
        }
        reports.push(PropertyReport::compare(
            format!("tone {i} imaginary sum"),
            s_im,
            expected,
            LEAKAGE_TOL * nf * tone.amplitude,
        ));
        let ratio = s_im / Complex64::new(0.0, gamma.gamma * nf * tone.amplitude);
        reports.push(PropertyReport::compare(
            format!("tone {i} phase"),
            ratio,
            real(tone.phase.sin()),
            LEAKAGE_TOL,
        ));
    }

    let s_im = imaginary_sum(&sdft(signal, FreqChoice::CenteredGrid)?);
    let scale = nf * total_amp.max(f64::MIN_POSITIVE);
    reports.push(PropertyReport::compare(
        "imaginary sum",
        s_im,
        expected_total,
        LEAKAGE_TOL * scale,
    ));
    reports.push(PropertyReport::compare(
        "imaginary sum linearity",
        s_im,
        per_tone_total,
        SUMMATION_TOL * scale,
    ));
    Ok(reports)
}

/// Every numerically checkable cell of the integral-property table for `N`.
///
/// Odd `N` evaluates the odd-SDFT row, even `N` the even (corrected) row
/// with probe-estimated `α`, `β`. Both add the ordinary-DFT row as negative
/// controls: the same sums computed from the head-indexed transform of the
/// same samples, with tolerance [`CONTROL_MARGIN`] of the identity's scale.
pub fn table2_report(tones: &[ToneParams], n: usize, fs: f64) -> Result<Vec<PropertyReport>> {
    let nf = n as f64;
    let convention = Convention::centered_for(n);
    let signal = synthesize(tones, convention, n, fs)?;
    let spectrum = sdft(&signal, FreqChoice::CenteredGrid)?;
    let max_x = signal.max_abs();
    let amp_scale = nf
        * tones
            .iter()
            .map(|t| t.amplitude)
            .sum::<f64>()
            .max(f64::MIN_POSITIVE);

    let (label, real_expected, real_tol, imag_expected) = if n % 2 == 1 {
        let x0 = signal
            .at(HalfUnits::ZERO)
            .expect("odd grid contains t=0")
            .re;
        let mut imag = 0.0;
        for tone in tones {
            let g = gamma_estimate(tone.frequency, n, fs)?;
            imag += g.gamma * nf * tone.amplitude * tone.phase.sin();
        }
        ("odd-sdft", nf * x0, SUMMATION_TOL * nf * max_x, imag)
    } else {
        let mut re = 0.0;
        let mut imag = 0.0;
        for tone in tones {
            let k = even_scale_factors(tone.frequency, n, fs)?;
            re += k.alpha * nf * tone.amplitude * tone.phase.cos();
            imag += k.beta * nf * tone.amplitude * tone.phase.sin();
        }
        ("even-sdft", re, LEAKAGE_TOL * amp_scale, imag)
    };

    let ordinary = odft(&signal.retagged(Convention::OrdinaryHead)?)?;
    Ok(vec![
        PropertyReport::compare(
            format!("{label} real sum"),
            real(real_sum(&spectrum)),
            real(real_expected),
            real_tol,
        ),
        PropertyReport::compare(
            format!("{label} imaginary sum"),
            imaginary_sum(&spectrum),
            Complex64::new(0.0, imag_expected),
            LEAKAGE_TOL * amp_scale,
        ),
        PropertyReport::compare(
            "odft real sum (control)",
            real(real_sum(&ordinary)),
            real(real_expected),
            CONTROL_MARGIN * nf * max_x,
        ),
        PropertyReport::compare(
            "odft imaginary sum (control)",
            ordinary_imaginary_sum(&ordinary),
            Complex64::new(0.0, imag_expected),
            CONTROL_MARGIN * amp_scale,
        ),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_4, PI};

    fn sig(x: &[f64], c: Convention) -> Signal {
        Signal::from_real(x, c).unwrap()
    }

    #[test]
    fn dc_small_cases() {
        let r = dc_identity(&sig(&[1.0, 1.0, 1.0], Convention::SymmetricOdd)).unwrap();
        assert!(r.passed());
        assert!((r.measured - real(3.0)).norm() < 1e-15);
        for c in [
            Convention::SymmetricEvenUncorrected,
            Convention::SymmetricEvenCorrected,
            Convention::OrdinaryHead,
        ] {
            let r = dc_identity(&sig(&[1.0, -1.0], c)).unwrap();
            assert!(r.passed(), "{c}");
            assert!(r.measured.norm() < 1e-15);
        }
    }

    #[test]
    fn symmetry_small_cases() {
        let (a, b) = symmetry_check(&sig(&[1.0, 2.0, 1.0], Convention::SymmetricOdd)).unwrap();
        assert_eq!(a.name, "spectrum-real");
        assert!(a.passed() && b.passed());

        let (a, b) = symmetry_check(&sig(&[-1.0, 0.0, 1.0], Convention::SymmetricOdd)).unwrap();
        assert_eq!(a.name, "spectrum-imaginary");
        assert!(a.passed() && b.passed());

        let (a, b) = symmetry_check(&sig(&[1.0, 0.0, 3.0], Convention::SymmetricOdd)).unwrap();
        assert_eq!(a.status, Status::NotApplicable);
        assert_eq!(b.status, Status::NotApplicable);
    }

    #[test]
    fn symmetry_rejects_uncentered_and_complex() {
        assert!(symmetry_check(&sig(&[1.0, 2.0, 1.0], Convention::OrdinaryHead)).is_err());
        let z = Signal::new(vec![Complex64::new(0.0, 1.0); 3], Convention::SymmetricOdd).unwrap();
        assert!(matches!(symmetry_check(&z), Err(Error::Domain(_))));
    }

    #[test]
    fn conjugate_palindrome_and_control() {
        let pal = sig(&[0.5, 2.0, -1.0, 2.0, 0.5], Convention::SymmetricOdd);
        assert!(conjugate_check(&pal).unwrap().passed());

        let x = [0.3, -1.2, 0.8, 2.1, -0.4];
        assert!(conjugate_check(&sig(&x, Convention::SymmetricOdd))
            .unwrap()
            .passed());
        let control = conjugate_check(&sig(&x, Convention::OrdinaryHead)).unwrap();
        assert!(!control.passed());
        assert!(control.abs_error > 1e6 * control.tolerance);
    }

    #[test]
    fn real_sum_of_delta() {
        let r = real_part_sum(&sig(&[0.0, 0.0, 1.0, 0.0, 0.0], Convention::SymmetricOdd)).unwrap();
        assert!(r.passed());
        assert!((r.measured.re - 5.0).abs() < 1e-14);

        let zero_center = sig(&[0.4, -2.0, 0.0, 1.0, 0.7], Convention::SymmetricOdd);
        let r = real_part_sum(&zero_center).unwrap();
        assert!(r.passed());
        assert!(r.measured.re.abs() < 1e-13);
    }

    #[test]
    fn gamma_trivial_values() {
        let n = 101;
        let on_bin = gamma_estimate(3.0 / n as f64, n, 1.0).unwrap();
        assert!((on_bin.gamma - 1.0).abs() < 1e-12);
        let dc = gamma_estimate(0.0, n, 1.0).unwrap();
        assert!(dc.gamma.abs() < 1e-12);
        assert!(!dc.is_determinate());
        assert!(gamma_estimate(0.1, 100, 1.0).is_err());
    }

    #[test]
    fn gamma_routes_agree_off_bin() {
        let n = 101;
        let f = 3.5 / n as f64;
        let probe = gamma_estimate(f, n, 1.0).unwrap().gamma;
        let sums = gamma_from_alias_sums(f, n, 1.0, DEFAULT_ALIAS_TERMS).unwrap();
        assert!((probe - sums).abs() < 1e-6, "{probe} vs {sums}");
    }

    #[test]
    fn even_factor_routes_agree() {
        let n = 100;
        for f in [0.0137, 0.21, 0.4444] {
            let probe = even_scale_factors(f, n, 1.0).unwrap();
            let sums = even_scale_factors_from_alias_sums(f, n, 1.0, DEFAULT_ALIAS_TERMS).unwrap();
            assert!((probe.alpha - sums.alpha).abs() < 1e-6);
            assert!((probe.beta - sums.beta).abs() < 1e-6);
        }
    }

    #[test]
    fn imag_sum_on_bin_tone() {
        let n = 101;
        let tone = ToneParams::new(2.0, 5.0 / n as f64, FRAC_PI_4).unwrap();
        let s = tone.sample(Convention::SymmetricOdd, n, 1.0).unwrap();
        let reports = imag_part_sum(&s, &[tone]).unwrap();
        assert!(reports.iter().all(PropertyReport::passed), "{reports:#?}");
        let want = Complex64::new(0.0, n as f64 * 2.0 * FRAC_PI_4.sin());
        assert!((reports[0].measured - want).norm() < 1e-10);
    }

    #[test]
    fn imag_sum_zero_phase() {
        let n = 31;
        let tone = ToneParams::new(1.0, 0.1234, 0.0).unwrap();
        let s = tone.sample(Convention::SymmetricOdd, n, 1.0).unwrap();
        let reports = imag_part_sum(&s, &[tone]).unwrap();
        assert!(reports[0].measured.norm() < 1e-12);
        assert!(reports.iter().all(PropertyReport::passed));
    }

    #[test]
    fn imag_sum_rejects_unrelated_signal() {
        let tone = ToneParams::new(1.0, 0.1, 0.3).unwrap();
        let s = sig(&[1.0; 9], Convention::SymmetricOdd);
        assert!(imag_part_sum(&s, &[tone]).is_err());
    }

    #[test]
    fn table2_on_bin_tones() {
        let n = 21;
        let tones = [
            ToneParams::new(1.0, 2.0 / n as f64, 0.3).unwrap(),
            ToneParams::new(0.5, 7.0 / n as f64, -1.0).unwrap(),
        ];
        let reports = table2_report(&tones, n, 1.0).unwrap();
        assert!(reports[0].passed() && reports[0].abs_error < 1e-10);
        assert!(reports[1].passed());
    }

    #[test]
    fn table2_off_bin_rows_and_controls() {
        let n = 101;
        let tones = [
            ToneParams::new(1.0, 0.0537, 0.9).unwrap(),
            ToneParams::new(0.7, 0.1713, -2.1).unwrap(),
            ToneParams::new(1.4, 0.3291, 2.5).unwrap(),
        ];
        let reports = table2_report(&tones, n, 1.0).unwrap();
        assert!(reports[0].passed() && reports[1].passed(), "{reports:#?}");
        assert!(!reports[2].passed(), "{:?}", reports[2]);

        let even = table2_report(&tones, 100, 1.0).unwrap();
        assert_eq!(even[0].name, "even-sdft real sum");
        assert!(even[0].passed() && even[1].passed(), "{even:#?}");
        assert!(!even[2].passed());
    }

    #[test]
    fn gamma_independent_of_amplitude_and_phase() {
        let n = 51;
        let f = 0.0777;
        let g = gamma_estimate(f, n, 1.0).unwrap().gamma;
        for (a, phi) in [(0.1, 0.4), (7.5, -2.0), (3.0, PI - 0.3)] {
            let tone = ToneParams::new(a, f, phi).unwrap();
            assert!((gamma_from_tone(&tone, n, 1.0).unwrap() - g).abs() < 1e-8);
        }
    }
}
