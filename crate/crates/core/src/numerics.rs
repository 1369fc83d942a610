//! Shared numeric foundations.
//!
//! Time and frequency grids are unit-spaced runs of integers or half-integers.
//! They are stored as [`HalfUnits`] (twice the value, as an integer) so that
//! half-integer grids stay exact; values only become floating point inside
//! exponentials, and even there the product `m·t` is reduced modulo the
//! period in integer arithmetic first.

use std::f64::consts::{PI, TAU};
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rustfft::FftPlanner;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A grid value held as twice its value, so `-1.5` is stored as `-3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfUnits(i64);

impl HalfUnits {
    pub const ZERO: HalfUnits = HalfUnits(0);

    pub const fn from_twice(twice: i64) -> Self {
        HalfUnits(twice)
    }

    pub const fn integer(value: i64) -> Self {
        HalfUnits(2 * value)
    }

    pub const fn twice(self) -> i64 {
        self.0
    }

    pub fn value(self) -> f64 {
        self.0 as f64 / 2.0
    }

    pub const fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    /// Shift by a whole number of units.
    pub const fn offset(self, steps: i64) -> Self {
        HalfUnits(self.0 + 2 * steps)
    }

    pub const fn neg(self) -> Self {
        HalfUnits(-self.0)
    }
}

impl fmt::Display for HalfUnits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}", self.value())
        }
    }
}

/// The time-index convention of a record.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Convention {
    /// `{0, 1, …, N−1}`, any N.
    OrdinaryHead,
    /// `{−(N−1)/2, …, (N−1)/2}`, N odd.
    SymmetricOdd,
    /// `{−N/2, …, N/2−1}`, N even. Not symmetric about zero.
    SymmetricEvenUncorrected,
    /// `{−(N−1)/2, …, (N−1)/2}` in half-integers, N even.
    SymmetricEvenCorrected,
}

impl Convention {
    pub const ALL: [Convention; 4] = [
        Convention::OrdinaryHead,
        Convention::SymmetricOdd,
        Convention::SymmetricEvenUncorrected,
        Convention::SymmetricEvenCorrected,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Convention::OrdinaryHead => "odft",
            Convention::SymmetricOdd => "sdft-odd",
            Convention::SymmetricEvenUncorrected => "sdft-even",
            Convention::SymmetricEvenCorrected => "sdft-corrected",
        }
    }

    pub fn is_symmetric(self) -> bool {
        self != Convention::OrdinaryHead
    }

    /// Whether the grid is exactly symmetric about zero.
    pub fn is_centered(self) -> bool {
        matches!(
            self,
            Convention::SymmetricOdd | Convention::SymmetricEvenCorrected
        )
    }

    /// The symmetric convention whose grid is centered for a record of length `n`.
    pub fn centered_for(n: usize) -> Convention {
        if n % 2 == 1 {
            Convention::SymmetricOdd
        } else {
            Convention::SymmetricEvenCorrected
        }
    }

    pub fn accepts(self, n: usize) -> bool {
        match self {
            Convention::OrdinaryHead => n >= 1,
            Convention::SymmetricOdd => n % 2 == 1,
            Convention::SymmetricEvenUncorrected | Convention::SymmetricEvenCorrected => {
                n >= 2 && n.is_multiple_of(2)
            }
        }
    }

    fn time_start(self, n: usize) -> Result<HalfUnits> {
        if !self.accepts(n) {
            let reason = match self {
                Convention::OrdinaryHead => "record must not be empty",
                Convention::SymmetricOdd => "odd symmetric grid needs odd N",
                _ => "even symmetric grid needs even N",
            };
            return Err(Error::UnsupportedLength { len: n, reason });
        }
        let n = n as i64;
        Ok(match self {
            Convention::OrdinaryHead => HalfUnits::ZERO,
            Convention::SymmetricEvenUncorrected => HalfUnits::integer(-n / 2),
            Convention::SymmetricOdd | Convention::SymmetricEvenCorrected => {
                HalfUnits::from_twice(-(n - 1))
            }
        })
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Convention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Convention::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown convention `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TimeGrid {
    convention: Convention,
    len: usize,
    start: HalfUnits,
}

impl TimeGrid {
    pub fn new(convention: Convention, len: usize) -> Result<Self> {
        let start = convention.time_start(len)?;
        Ok(TimeGrid {
            convention,
            len,
            start,
        })
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn start(&self) -> HalfUnits {
        self.start
    }

    pub fn value(&self, index: usize) -> HalfUnits {
        self.start.offset(index as i64)
    }

    pub fn values(&self) -> impl Iterator<Item = HalfUnits> + '_ {
        (0..self.len).map(|i| self.value(i))
    }

    pub fn values_f64(&self) -> Vec<f64> {
        self.values().map(HalfUnits::value).collect()
    }

    pub fn index_of(&self, t: HalfUnits) -> Option<usize> {
        let d = t.twice() - self.start.twice();
        if d < 0 || d % 2 != 0 {
            return None;
        }
        let i = (d / 2) as usize;
        (i < self.len).then_some(i)
    }
}

/// Unit-spaced bin values, in cycles per record.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FrequencyGrid {
    start: HalfUnits,
    len: usize,
}

impl FrequencyGrid {
    pub fn from_start(start: HalfUnits, len: usize) -> Self {
        FrequencyGrid { start, len }
    }

    /// `{0, …, N−1}`.
    pub fn ordinary(len: usize) -> Self {
        Self::from_start(HalfUnits::ZERO, len)
    }

    /// `{−⌊N/2⌋, …}`: `{−N/2, …, N/2−1}` for even N, the centered grid for odd N.
    pub fn fast_symmetric(len: usize) -> Self {
        Self::from_start(HalfUnits::integer(-((len / 2) as i64)), len)
    }

    /// `{−(N−1)/2, …, (N−1)/2}`; half-integers when N is even.
    pub fn centered(len: usize) -> Self {
        Self::from_start(HalfUnits::from_twice(-(len as i64 - 1)), len)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn start(&self) -> HalfUnits {
        self.start
    }

    pub fn value(&self, index: usize) -> HalfUnits {
        self.start.offset(index as i64)
    }

    pub fn values(&self) -> impl Iterator<Item = HalfUnits> + '_ {
        (0..self.len).map(|i| self.value(i))
    }

    pub fn values_f64(&self) -> Vec<f64> {
        self.values().map(HalfUnits::value).collect()
    }

    pub fn index_of(&self, m: HalfUnits) -> Option<usize> {
        let d = m.twice() - self.start.twice();
        if d < 0 || d % 2 != 0 {
            return None;
        }
        let i = (d / 2) as usize;
        (i < self.len).then_some(i)
    }

    pub fn is_centered(&self) -> bool {
        *self == Self::centered(self.len)
    }

    pub fn is_ordinary(&self) -> bool {
        *self == Self::ordinary(self.len)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Signal {
    samples: Vec<Complex64>,
    grid: TimeGrid,
    sample_rate: f64,
}

impl Signal {
    pub fn new(samples: Vec<Complex64>, convention: Convention) -> Result<Self> {
        let grid = TimeGrid::new(convention, samples.len())?;
        Ok(Signal {
            samples,
            grid,
            sample_rate: 1.0,
        })
    }

    pub fn from_real(samples: &[f64], convention: Convention) -> Result<Self> {
        Self::new(
            samples.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
            convention,
        )
    }

    /// Samples `value(t)` at the grid instants `t = index_value / fs` seconds.
    pub fn sample<F>(convention: Convention, len: usize, fs: f64, value: F) -> Result<Self>
    where
        F: Fn(f64) -> Complex64,
    {
        let grid = TimeGrid::new(convention, len)?;
        let samples = grid.values().map(|t| value(t.value() / fs)).collect();
        Signal::new(samples, convention)?.with_sample_rate(fs)
    }

    pub fn with_sample_rate(mut self, fs: f64) -> Result<Self> {
        if !(fs.is_finite() && fs > 0.0) {
            return Err(Error::Domain(format!(
                "sample rate must be positive, got {fs}"
            )));
        }
        self.sample_rate = fs;
        Ok(self)
    }

    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }

    pub fn grid(&self) -> &TimeGrid {
        &self.grid
    }

    pub fn convention(&self) -> Convention {
        self.grid.convention
    }

    pub fn sample_rate(&self) -> f64 {
        self.sample_rate
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn into_samples(self) -> Vec<Complex64> {
        self.samples
    }

    /// The same samples placed on another grid.
    pub fn retagged(&self, convention: Convention) -> Result<Self> {
        Signal::new(self.samples.clone(), convention)?.with_sample_rate(self.sample_rate)
    }

    /// Samples in reverse order on the same grid: `x'(t) = x(−t)` for centered grids.
    pub fn reversed(&self) -> Self {
        let mut s = self.clone();
        s.samples.reverse();
        s
    }

    pub fn at(&self, t: HalfUnits) -> Option<Complex64> {
        self.grid.index_of(t).map(|i| self.samples[i])
    }

    pub fn is_real(&self) -> bool {
        self.samples.iter().all(|z| z.im == 0.0)
    }

    pub fn max_abs(&self) -> f64 {
        max_abs(&self.samples)
    }

    pub fn sum(&self) -> Complex64 {
        self.samples.iter().sum()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    bins: Vec<Complex64>,
    grid: FrequencyGrid,
    source_convention: Convention,
}

impl Spectrum {
    pub fn new(
        bins: Vec<Complex64>,
        grid: FrequencyGrid,
        source_convention: Convention,
    ) -> Result<Self> {
        if bins.len() != grid.len() {
            return Err(Error::LengthMismatch(format!(
                "{} bins on a grid of {}",
                bins.len(),
                grid.len()
            )));
        }
        TimeGrid::new(source_convention, bins.len())?;
        Ok(Spectrum {
            bins,
            grid,
            source_convention,
        })
    }

    pub fn bins(&self) -> &[Complex64] {
        &self.bins
    }

    pub fn grid(&self) -> &FrequencyGrid {
        &self.grid
    }

    pub fn source_convention(&self) -> Convention {
        self.source_convention
    }

    /// The time grid of the record this spectrum was taken from.
    pub fn time_grid(&self) -> TimeGrid {
        TimeGrid::new(self.source_convention, self.bins.len()).expect("validated at construction")
    }

    pub fn len(&self) -> usize {
        self.bins.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bins.is_empty()
    }

    pub fn at(&self, m: HalfUnits) -> Option<Complex64> {
        self.grid.index_of(m).map(|i| self.bins[i])
    }

    pub fn into_bins(self) -> Vec<Complex64> {
        self.bins
    }

    pub fn max_abs(&self) -> f64 {
        max_abs(&self.bins)
    }
}

pub(crate) fn max_abs(values: &[Complex64]) -> f64 {
    values.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Normalized sinc, `sin(πx)/(πx)`, with the removable singularity filled in.
pub fn nsinc(x: f64) -> f64 {
    if x == 0.0 {
        1.0
    } else {
        let px = PI * x;
        px.sin() / px
    }
}

/// `exp(−i2π·numer/denom)`, reduced exactly before the float conversion.
pub(crate) fn cis_turns(numer: i128, denom: i128) -> Complex64 {
    let r = numer.rem_euclid(denom);
    // quarter turns come out exact
    if (4 * r) % denom == 0 {
        return match 4 * r / denom {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, -1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, 1.0),
        };
    }
    let angle = -TAU * (r as f64 / denom as f64);
    Complex64::from_polar(1.0, angle)
}

/// The kernel `W^{mt} = exp(−i2π·m·t/N)` for exact grid values.
pub(crate) fn kernel(m: HalfUnits, t: HalfUnits, n: usize) -> Complex64 {
    cis_turns(m.twice() as i128 * t.twice() as i128, 4 * n as i128)
}

/// `exp(−i2π·m·t/N)` for arbitrary real `m·t`.
pub(crate) fn kernel_f64(m: f64, t: f64, n: usize) -> Complex64 {
    let n = n as f64;
    let r = (m * t).rem_euclid(n);
    Complex64::from_polar(1.0, -TAU * r / n)
}

/// Direct `O(|m|·|t|)` evaluation of `Σₜ x(t)·exp(−i2π·m·t/N)` for every `m`.
///
/// This is the reference every fast path is checked against. The sum runs
/// left to right over `samples`.
pub fn dft_oracle(
    samples: &[Complex64],
    time_values: &[f64],
    freq_values: &[f64],
    n: usize,
) -> Result<Vec<Complex64>> {
    if samples.len() != time_values.len() {
        return Err(Error::LengthMismatch(format!(
            "{} samples against {} time values",
            samples.len(),
            time_values.len()
        )));
    }
    if n == 0 {
        return Err(Error::UnsupportedLength {
            len: 0,
            reason: "transform period must be positive",
        });
    }
    Ok(freq_values
        .iter()
        .map(|&m| {
            samples
                .iter()
                .zip(time_values)
                .fold(Complex64::new(0.0, 0.0), |acc, (&x, &t)| {
                    acc + x * kernel_f64(m, t, n)
                })
        })
        .collect())
}

/// `X(m) = Σₙ x(n)·exp(−i2πmn/N)` for `n, m ∈ {0…N−1}`, any N, in `O(N log N)`.
pub fn fast_odft(samples: &[Complex64]) -> Vec<Complex64> {
    let mut buf = samples.to_vec();
    if buf.is_empty() {
        return buf;
    }
    FftPlanner::<f64>::new()
        .plan_fft_forward(buf.len())
        .process(&mut buf);
    buf
}

/// Fast evaluation of `out[k] = Σⱼ in[j]·exp(−i2π·(out_start+k)(in_start+j)/N)`.
///
/// An integer `out_start` is a cyclic reordering of the plain FFT output; a
/// half-integer one is absorbed by modulating the input first. The
/// `in_start` offset becomes a per-bin phase twist. The roles of time and
/// frequency are interchangeable, which is how the inverse reuses it.
pub(crate) fn shifted_dft(
    input: &[Complex64],
    in_start: HalfUnits,
    out_start: HalfUnits,
) -> Vec<Complex64> {
    let n = input.len();
    if n == 0 {
        return Vec::new();
    }
    let mut out = if out_start.is_integer() {
        let y = fast_odft(input);
        let shift = (out_start.twice() / 2).rem_euclid(n as i64) as usize;
        (0..n).map(|k| y[(shift + k) % n]).collect::<Vec<_>>()
    } else {
        let modulated: Vec<Complex64> = input
            .iter()
            .enumerate()
            .map(|(j, &x)| x * cis_turns(out_start.twice() as i128 * j as i128, 2 * n as i128))
            .collect();
        fast_odft(&modulated)
    };
    if in_start != HalfUnits::ZERO {
        for (k, z) in out.iter_mut().enumerate() {
            *z *= kernel(out_start.offset(k as i64), in_start, n);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn random_samples(rng: &mut impl Rng, n: usize) -> Vec<Complex64> {
        (0..n)
            .map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect()
    }

    #[test]
    fn nsinc_values() {
        assert_eq!(nsinc(0.0), 1.0);
        assert_abs_diff_eq!(nsinc(1.0), 0.0, epsilon = 1e-16);
        assert_abs_diff_eq!(nsinc(0.5), 2.0 / PI, epsilon = 1e-15);
        assert_abs_diff_eq!(2.0 / PI, std::f64::consts::FRAC_2_PI, epsilon = 1e-15);
    }

    #[test]
    fn nsinc_is_even() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..1000 {
            let x: f64 = rng.gen_range(-100.0..100.0);
            assert_eq!(nsinc(x), nsinc(-x));
        }
    }

    #[test]
    fn grid_ranges() {
        let v = |c, n| TimeGrid::new(c, n).unwrap().values_f64();
        assert_eq!(v(Convention::OrdinaryHead, 4), vec![0.0, 1.0, 2.0, 3.0]);
        assert_eq!(
            v(Convention::SymmetricOdd, 5),
            vec![-2.0, -1.0, 0.0, 1.0, 2.0]
        );
        assert_eq!(
            v(Convention::SymmetricEvenUncorrected, 4),
            vec![-2.0, -1.0, 0.0, 1.0]
        );
        assert_eq!(
            v(Convention::SymmetricEvenCorrected, 4),
            vec![-1.5, -0.5, 0.5, 1.5]
        );
        assert!(TimeGrid::new(Convention::SymmetricOdd, 4).is_err());
        assert!(TimeGrid::new(Convention::SymmetricEvenCorrected, 3).is_err());
        assert!(TimeGrid::new(Convention::OrdinaryHead, 0).is_err());

        assert_eq!(
            FrequencyGrid::fast_symmetric(4).values_f64(),
            vec![-2.0, -1.0, 0.0, 1.0]
        );
        assert_eq!(FrequencyGrid::fast_symmetric(5), FrequencyGrid::centered(5));
        assert_eq!(
            FrequencyGrid::centered(4).values_f64(),
            vec![-1.5, -0.5, 0.5, 1.5]
        );
    }

    proptest! {
        #[test]
        fn grid_construction(n in 1usize..=64) {
            for conv in Convention::ALL {
                let Ok(grid) = TimeGrid::new(conv, n) else {
                    prop_assert!(!conv.accepts(n));
                    continue;
                };
                let vals: Vec<HalfUnits> = grid.values().collect();
                prop_assert_eq!(vals.len(), n);
                for w in vals.windows(2) {
                    prop_assert_eq!(w[1].twice() - w[0].twice(), 2);
                }
                let sum: i64 = vals.iter().map(|v| v.twice()).sum();
                match conv {
                    Convention::OrdinaryHead => prop_assert_eq!(vals[0], HalfUnits::ZERO),
                    Convention::SymmetricOdd => {
                        prop_assert!(vals.iter().all(|v| v.is_integer()));
                        prop_assert_eq!(sum, 0);
                    }
                    Convention::SymmetricEvenUncorrected => {
                        prop_assert_eq!(vals[0], HalfUnits::integer(-(n as i64) / 2));
                        prop_assert!(vals.iter().all(|v| v.is_integer()));
                    }
                    Convention::SymmetricEvenCorrected => {
                        prop_assert!(vals.iter().all(|v| !v.is_integer()));
                        prop_assert_eq!(sum, 0);
                    }
                }
                for (i, v) in vals.iter().enumerate() {
                    prop_assert_eq!(grid.index_of(*v), Some(i));
                }
            }
        }
    }

    #[test]
    fn oracle_delta_and_dc() {
        let grid = TimeGrid::new(Convention::SymmetricOdd, 5).unwrap();
        let x: Vec<Complex64> = grid
            .values()
            .map(|t| {
                if t == HalfUnits::ZERO {
                    c(1.0, 0.0)
                } else {
                    c(0.0, 0.0)
                }
            })
            .collect();
        let freqs = [-2.0, -1.0, 0.0, 0.5, 1.0, 2.0, 3.7];
        for z in dft_oracle(&x, &grid.values_f64(), &freqs, 5).unwrap() {
            assert_abs_diff_eq!(z.re, 1.0, epsilon = 1e-15);
            assert_abs_diff_eq!(z.im, 0.0, epsilon = 1e-15);
        }

        let ones = vec![c(1.0, 0.0); 4];
        let out = dft_oracle(&ones, &[0.0, 1.0, 2.0, 3.0], &[0.0, 1.0, 2.0, 3.0], 4).unwrap();
        for (z, want) in out.iter().zip([4.0, 0.0, 0.0, 0.0]) {
            assert!((z - c(want, 0.0)).norm() < 1e-14);
        }
    }

    #[test]
    fn oracle_rejects_length_mismatch() {
        let err = dft_oracle(&[c(1.0, 0.0); 3], &[0.0, 1.0], &[0.0], 3).unwrap_err();
        assert!(matches!(err, Error::LengthMismatch(_)));
    }

    #[test]
    fn fast_trivial_cases() {
        let delta = [c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)];
        for z in fast_odft(&delta) {
            assert_abs_diff_eq!((z - c(1.0, 0.0)).norm(), 0.0, epsilon = 1e-15);
        }
        let dc = fast_odft(&[c(1.0, 0.0); 4]);
        assert_abs_diff_eq!((dc[0] - c(4.0, 0.0)).norm(), 0.0, epsilon = 1e-15);
        for z in &dc[1..] {
            assert_abs_diff_eq!(z.norm(), 0.0, epsilon = 1e-15);
        }
    }

    #[test]
    fn fast_matches_oracle_non_power_of_two() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(1000);
        let x = random_samples(&mut rng, 1000);
        let grid: Vec<f64> = (0..1000).map(|i| i as f64).collect();
        let want = dft_oracle(&x, &grid, &grid, 1000).unwrap();
        let got = fast_odft(&x);
        let scale = max_abs(&want);
        let err = got
            .iter()
            .zip(&want)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        assert!(err < 1e-9 * scale, "err {err}");
    }

    #[test]
    fn shifted_dft_matches_oracle_on_half_integer_grids() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(3);
        for n in [1usize, 2, 3, 4, 7, 10, 16] {
            let x = random_samples(&mut rng, n);
            for (t0, f0) in [
                (0, 0),
                (-(n as i64 - 1), -(n as i64 - 1)),
                (-(n as i64), 1),
                (3, -5),
            ] {
                let t0 = HalfUnits::from_twice(t0);
                let f0 = HalfUnits::from_twice(f0);
                let times: Vec<f64> = (0..n).map(|j| t0.offset(j as i64).value()).collect();
                let freqs: Vec<f64> = (0..n).map(|k| f0.offset(k as i64).value()).collect();
                let want = dft_oracle(&x, &times, &freqs, n).unwrap();
                let got = shifted_dft(&x, t0, f0);
                for (a, b) in got.iter().zip(&want) {
                    assert!((a - b).norm() < 1e-12, "n={n} t0={t0} f0={f0}");
                }
            }
        }
    }

    #[test]
    fn cis_turns_quarters_are_exact() {
        assert_eq!(cis_turns(1, 4), c(0.0, -1.0));
        assert_eq!(cis_turns(-1, 4), c(0.0, 1.0));
        assert_eq!(cis_turns(6, 4), c(-1.0, 0.0));
        let z = cis_turns(1, 8);
        assert_abs_diff_eq!(z.arg(), -PI / 4.0, epsilon = 1e-15);
    }

    #[test]
    fn convention_names_round_trip() {
        for conv in Convention::ALL {
            assert_eq!(conv.name().parse::<Convention>().unwrap(), conv);
        }
        assert!("fft".parse::<Convention>().is_err());
    }
}
