//! The four DFT conventions, their inverses, transform matrices and the
//! orthogonal basis vectors they are built from.
//!
//! Every transform evaluates `X(m) = Σₜ x(t)·exp(−i2π·m·t/N)` with `t` taken
//! from the signal's [`TimeGrid`] and `m` from a [`FrequencyGrid`]. Forward
//! transforms are unnormalized; the inverse carries `1/N`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::{
    kernel, kernel_f64, shifted_dft, Convention, FrequencyGrid, HalfUnits, Signal, Spectrum,
    TimeGrid,
};

/// Output frequency grid for a symmetric transform.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FreqChoice {
    /// `{−N/2, …, N/2−1}`: integer bins, interconvertible with the ordinary DFT.
    FastGrid,
    /// `{−(N−1)/2, …, (N−1)/2}`: half-integer bins for even N.
    CenteredGrid,
}

impl FreqChoice {
    pub fn grid(self, n: usize) -> FrequencyGrid {
        match self {
            FreqChoice::FastGrid => FrequencyGrid::fast_symmetric(n),
            FreqChoice::CenteredGrid => FrequencyGrid::centered(n),
        }
    }
}

/// Transform `signal` onto an arbitrary unit-spaced frequency grid of the same length.
pub fn transform(signal: &Signal, grid: FrequencyGrid) -> Result<Spectrum> {
    if grid.len() != signal.len() {
        return Err(Error::LengthMismatch(format!(
            "{}-bin grid for a {}-sample signal",
            grid.len(),
            signal.len()
        )));
    }
    let bins = shifted_dft(signal.samples(), signal.grid().start(), grid.start());
    Spectrum::new(bins, grid, signal.convention())
}

/// The ordinary DFT of a head-indexed record.
pub fn odft(signal: &Signal) -> Result<Spectrum> {
    if signal.convention() != Convention::OrdinaryHead {
        return Err(Error::ConventionMismatch {
            expected: "odft",
            found: signal.convention(),
        });
    }
    transform(signal, FrequencyGrid::ordinary(signal.len()))
}

/// The symmetric DFT (odd, uncorrected even or corrected even, by the signal's grid).
pub fn sdft(signal: &Signal, choice: FreqChoice) -> Result<Spectrum> {
    if !signal.convention().is_symmetric() {
        return Err(Error::ConventionMismatch {
            expected: "a symmetric convention",
            found: signal.convention(),
        });
    }
    transform(signal, choice.grid(signal.len()))
}

/// Forward transform using the natural grid of each convention.
pub fn forward(signal: &Signal, choice: FreqChoice) -> Result<Spectrum> {
    match signal.convention() {
        Convention::OrdinaryHead => odft(signal),
        _ => sdft(signal, choice),
    }
}

/// `x = (1/N)·Mᴴ·X`, with `M` the forward matrix for the spectrum's grids.
pub fn inverse(spectrum: &Spectrum) -> Signal {
    let n = spectrum.len();
    let time = spectrum.time_grid();
    let conj: Vec<Complex64> = spectrum.bins().iter().map(|z| z.conj()).collect();
    let scale = 1.0 / n as f64;
    let samples = shifted_dft(&conj, spectrum.grid().start(), time.start())
        .into_iter()
        .map(|z| z.conj() * scale)
        .collect();
    Signal::new(samples, spectrum.source_convention()).expect("grid validated by spectrum")
}

/// The Eq.-32-consistent phase twist `exp(+iπ·m·(N−1)/N)` taking bin `m` of
/// the ordinary DFT to the centered symmetric DFT of the same samples.
pub fn conversion_twist(m: HalfUnits, n: usize) -> Complex64 {
    kernel(m, HalfUnits::from_twice(-(n as i64 - 1)), n)
}

/// Convert an ordinary spectrum to the centered symmetric spectrum on the fast grid.
///
/// Odd N yields the odd SDFT, even N the corrected even SDFT. Negative bins
/// are read from `m + N` by periodicity.
pub fn odft_to_sdft(ordinary: &Spectrum) -> Result<Spectrum> {
    if ordinary.source_convention() != Convention::OrdinaryHead || !ordinary.grid().is_ordinary() {
        return Err(Error::ConventionMismatch {
            expected: "odft",
            found: ordinary.source_convention(),
        });
    }
    let n = ordinary.len();
    let grid = FrequencyGrid::fast_symmetric(n);
    let bins = grid
        .values()
        .map(|m| {
            let idx = (m.twice() / 2).rem_euclid(n as i64) as usize;
            ordinary.bins()[idx] * conversion_twist(m, n)
        })
        .collect();
    Spectrum::new(bins, grid, Convention::centered_for(n))
}

/// Dense `N×N` matrix with entries `exp(−i2π·freq[row]·time[col]/N)`.
#[derive(Clone, Debug, PartialEq)]
pub struct TransformMatrix {
    entries: Vec<Complex64>,
    time_offsets: Vec<f64>,
    freq_values: Vec<f64>,
    n: usize,
}

impl TransformMatrix {
    pub fn from_values(time_offsets: &[f64], freq_values: &[f64]) -> Result<Self> {
        let n = time_offsets.len();
        if n == 0 || freq_values.len() != n {
            return Err(Error::LengthMismatch(format!(
                "{} time offsets and {} frequencies",
                n,
                freq_values.len()
            )));
        }
        let entries = freq_values
            .iter()
            .flat_map(|&m| time_offsets.iter().map(move |&t| kernel_f64(m, t, n)))
            .collect();
        Ok(TransformMatrix {
            entries,
            time_offsets: time_offsets.to_vec(),
            freq_values: freq_values.to_vec(),
            n,
        })
    }

    pub fn for_grids(time: &TimeGrid, freq: &FrequencyGrid) -> Result<Self> {
        let n = time.len();
        if freq.len() != n {
            return Err(Error::LengthMismatch(format!(
                "{}-point time grid and {}-bin frequency grid",
                n,
                freq.len()
            )));
        }
        let entries = freq
            .values()
            .flat_map(|m| time.values().map(move |t| kernel(m, t, n)))
            .collect();
        Ok(TransformMatrix {
            entries,
            time_offsets: time.values_f64(),
            freq_values: freq.values_f64(),
            n,
        })
    }

    pub fn for_convention(convention: Convention, choice: FreqChoice, n: usize) -> Result<Self> {
        let time = TimeGrid::new(convention, n)?;
        let freq = match convention {
            Convention::OrdinaryHead => FrequencyGrid::ordinary(n),
            _ => choice.grid(n),
        };
        Self::for_grids(&time, &freq)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn time_offsets(&self) -> &[f64] {
        &self.time_offsets
    }

    pub fn freq_values(&self) -> &[f64] {
        &self.freq_values
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.n + col]
    }

    pub fn row(&self, row: usize) -> &[Complex64] {
        &self.entries[row * self.n..(row + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Complex64]> {
        self.entries.chunks(self.n)
    }

    pub fn apply(&self, x: &[Complex64]) -> Result<Vec<Complex64>> {
        if x.len() != self.n {
            return Err(Error::LengthMismatch(format!(
                "{}-vector against a {}x{} matrix",
                x.len(),
                self.n,
                self.n
            )));
        }
        Ok(self
            .rows()
            .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// `(1/N)·Mᴴ·X`.
    pub fn apply_inverse(&self, spectrum: &[Complex64]) -> Result<Vec<Complex64>> {
        if spectrum.len() != self.n {
            return Err(Error::LengthMismatch(format!(
                "{}-vector against a {}x{} matrix",
                spectrum.len(),
                self.n,
                self.n
            )));
        }
        let scale = 1.0 / self.n as f64;
        Ok((0..self.n)
            .map(|col| {
                spectrum
                    .iter()
                    .enumerate()
                    .map(|(row, &x)| self.entry(row, col).conj() * x)
                    .sum::<Complex64>()
                    * scale
            })
            .collect())
    }

    /// `max |(M·Mᴴ)ᵢⱼ − N·δᵢⱼ|`.
    pub fn gram_deviation(&self) -> f64 {
        let n = self.n as f64;
        let mut worst = 0.0f64;
        for (i, ri) in self.rows().enumerate() {
            for (j, rj) in self.rows().enumerate() {
                let dot: Complex64 = ri.iter().zip(rj).map(|(a, b)| a * b.conj()).sum();
                let target = if i == j { n } else { 0.0 };
                worst = worst.max((dot - target).norm());
            }
        }
        worst
    }
}

/// `q(r)` with components `exp(−i2π·tₖ·r/N)` over a chosen list of times.
#[derive(Clone, Debug, PartialEq)]
pub struct BasisVector {
    r: f64,
    components: Vec<Complex64>,
}

impl BasisVector {
    pub fn on_grid(r: f64, grid: &TimeGrid) -> Self {
        basis_vector(r, &grid.values_f64())
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn components(&self) -> &[Complex64] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn norm(&self) -> f64 {
        self.components
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Hermitian inner product, conjugating `other`.
    pub fn inner(&self, other: &BasisVector) -> Complex64 {
        self.components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a * b.conj())
            .sum()
    }
}

pub fn basis_vector(r: f64, times: &[f64]) -> BasisVector {
    let n = times.len();
    BasisVector {
        r,
        components: times.iter().map(|&t| kernel_f64(t, r, n)).collect(),
    }
}

/// `max |⟨qᵢ, qⱼ⟩ − N·δᵢⱼ|` over all pairs.
pub fn gram_check(vectors: &[BasisVector]) -> Result<f64> {
    let Some(first) = vectors.first() else {
        return Ok(0.0);
    };
    let n = first.len();
    if let Some(bad) = vectors.iter().find(|v| v.len() != n) {
        return Err(Error::LengthMismatch(format!(
            "basis vectors of length {} and {}",
            n,
            bad.len()
        )));
    }
    let mut worst = 0.0f64;
    for (i, a) in vectors.iter().enumerate() {
        for (j, b) in vectors.iter().enumerate() {
            let target = if i == j { n as f64 } else { 0.0 };
            worst = worst.max((a.inner(b) - target).norm());
        }
    }
    Ok(worst)
}
