use std::f64::consts::PI;

use rand::{rngs::StdRng, Rng, SeedableRng};
use sdft_core::windows::{rect_dtft, tone_dtft, DtftVariant, PhaseConstant, ToneParams};

#[test]
fn corrected_phase_is_zero_or_pi() {
    let (n, fs, j) = (20, 1.0, 10_000);
    let mut rng = StdRng::seed_from_u64(31);
    let mut checked = 0;
    for _ in 0..1000 {
        let f = rng.gen_range(-3.0..3.0);
        let z = rect_dtft(n, fs, f, DtftVariant::CorrectedSdft, j);
        if z.norm() <= 1e-6 * n as f64 {
            continue;
        }
        checked += 1;
        let phase = z.arg().abs();
        let dist = phase.min((PI - phase).abs());
        assert!(dist < 1e-6, "f={f}: phase {}", z.arg());
    }
    assert!(checked > 900);
}

#[test]
fn amplitudes_agree_across_variants() {
    let (n, fs, j) = (20, 1.0, 2_000);
    let mut freqs: Vec<f64> = (-40..=40).map(|m| m as f64 * fs / n as f64).collect();
    freqs.extend([0.013, 0.171, -0.333, 0.49]);
    for f in freqs {
        let mags: Vec<f64> = DtftVariant::ALL
            .iter()
            .map(|&v| rect_dtft(n, fs, f, v, j).norm())
            .collect();
        for m in &mags[1..] {
            assert!((m - mags[0]).abs() < 1e-8 * n as f64, "f={f}: {mags:?}");
        }
    }
}

#[test]
fn ordinary_phase_is_affine_between_zeros() {
    let (n, fs, j) = (20, 1.0, 10_000);
    let slope = PhaseConstant::ordinary(n).value();
    let df = 1e-4;
    for f in [0.004, 0.011, 0.02, 0.031] {
        let a = rect_dtft(n, fs, f, DtftVariant::Odft, j).arg();
        let b = rect_dtft(n, fs, f + df, DtftVariant::Odft, j).arg();
        let measured = (b - a) / (df * n as f64 / fs);
        assert!((measured - slope).abs() < 1e-3, "{measured} vs {slope}");
    }
}

#[test]
fn tone_dtft_is_linear_in_amplitude() {
    let tone = ToneParams::new(1.0, 0.123, 0.4).unwrap();
    let twice = ToneParams::new(2.0, 0.123, 0.4).unwrap();
    for v in DtftVariant::ALL {
        let a = tone_dtft(&tone, 31, 1.0, 0.2, v, 500);
        let b = tone_dtft(&twice, 31, 1.0, 0.2, v, 500);
        assert!((b - a * 2.0).norm() < 1e-12);
    }
}
