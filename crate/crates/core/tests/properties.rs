use std::f64::consts::PI;

use proptest::prelude::*;
use rand::{rngs::StdRng, Rng, SeedableRng};
use sdft_core::properties::{
    conjugate_check, dc_identity, even_scale_factors, even_scale_factors_from_alias_sums,
    gamma_estimate, gamma_from_alias_sums, imag_part_sum, real_part_sum,
    real_part_sum_head_indexed, symmetry_check, table2_report, Status,
};
use sdft_core::windows::ToneParams;
use sdft_core::{Complex64, Convention, Signal};

fn off_bin(rng: &mut StdRng, n: usize, fs: f64) -> f64 {
    let bin = rng.gen_range(1..(n - 1) / 2) as f64;
    (bin + rng.gen_range(0.1..0.9)) * fs / n as f64
}

fn random_tones(rng: &mut StdRng, n: usize, fs: f64) -> Vec<ToneParams> {
    (0..rng.gen_range(1..=4))
        .map(|_| {
            ToneParams::new(
                rng.gen_range(0.2..2.0),
                off_bin(rng, n, fs),
                rng.gen_range(-PI..PI),
            )
            .unwrap()
        })
        .collect()
}

fn synth(tones: &[ToneParams], conv: Convention, n: usize, fs: f64) -> Signal {
    Signal::sample(conv, n, fs, |t| {
        Complex64::new(tones.iter().map(|k| k.value_at(t)).sum(), 0.0)
    })
    .unwrap()
}

#[test]
fn real_sum_holds_and_head_indexed_control_fails() {
    let mut rng = StdRng::seed_from_u64(21);
    let fs = 1000.0;
    let mut control_failures = 0;
    for _ in 0..100 {
        let n = 2 * rng.gen_range(4..=100) + 1;
        let tones = random_tones(&mut rng, n, fs);
        let sym = synth(&tones, Convention::SymmetricOdd, n, fs);
        assert!(real_part_sum(&sym).unwrap().passed());
        let head = synth(&tones, Convention::OrdinaryHead, n, fs);
        if real_part_sum_head_indexed(&head).unwrap().status == Status::Failed {
            control_failures += 1;
        }
    }
    assert!(control_failures >= 95, "{control_failures}");
}

#[test]
fn gamma_oracles_agree_and_imaginary_identity_holds() {
    let mut rng = StdRng::seed_from_u64(22);
    let (n, fs) = (101, 1.0);
    for _ in 0..20 {
        let f = off_bin(&mut rng, n, fs);
        let g = gamma_estimate(f, n, fs).unwrap();
        let from_sums = gamma_from_alias_sums(f, n, fs, 1000).unwrap();
        assert!(
            (g.gamma - from_sums).abs() < 1e-6,
            "{} vs {from_sums}",
            g.gamma
        );

        let tone = ToneParams::new(rng.gen_range(0.5..2.0), f, rng.gen_range(-PI..PI)).unwrap();
        let signal = synth(&[tone], Convention::SymmetricOdd, n, fs);
        for r in imag_part_sum(&signal, &[tone]).unwrap() {
            assert!(r.passed(), "{r:?}");
        }
    }
}

#[test]
fn gamma_is_one_on_bin() {
    let g = gamma_estimate(3.0, 21, 21.0).unwrap();
    assert!((g.gamma - 1.0).abs() < 1e-12, "{}", g.gamma);
    assert!(g.is_determinate());
}

#[test]
fn even_scale_factor_oracles_agree() {
    let mut rng = StdRng::seed_from_u64(23);
    for n in [20, 64, 100] {
        for _ in 0..5 {
            let f = off_bin(&mut rng, n, 1.0);
            let a = even_scale_factors(f, n, 1.0).unwrap();
            let b = even_scale_factors_from_alias_sums(f, n, 1.0, 1000).unwrap();
            assert!((a.alpha - b.alpha).abs() < 1e-6);
            assert!((a.beta - b.beta).abs() < 1e-6);
        }
    }
}

#[test]
fn table2_rows_and_controls() {
    let mut rng = StdRng::seed_from_u64(24);
    for n in [51, 101, 50, 100] {
        let tones = random_tones(&mut rng, n, 1.0);
        let reports = table2_report(&tones, n, 1.0).unwrap();
        assert_eq!(reports.len(), 4);
        assert!(reports[0].passed() && reports[1].passed(), "{reports:?}");
        assert_eq!(reports[3].status, Status::Failed, "{:?}", reports[3]);
    }
}

#[test]
fn conjugate_property_fails_for_ordinary_dft() {
    let mut rng = StdRng::seed_from_u64(25);
    for n in [7, 8, 33] {
        let x: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let r = conjugate_check(&Signal::from_real(&x, Convention::OrdinaryHead).unwrap()).unwrap();
        assert_eq!(r.status, Status::Failed);
        for conv in [Convention::SymmetricOdd, Convention::SymmetricEvenCorrected] {
            if let Ok(s) = Signal::from_real(&x, conv) {
                assert!(conjugate_check(&s).unwrap().passed());
            }
        }
    }
}

fn centered_real() -> impl Strategy<Value = Signal> {
    (2usize..=80).prop_flat_map(|n| {
        prop::collection::vec(-3.0f64..3.0, n)
            .prop_map(move |x| Signal::from_real(&x, Convention::centered_for(n)).unwrap())
    })
}

fn symmetrize(signal: &Signal, sign: f64) -> Signal {
    let rev = signal.reversed();
    let x: Vec<Complex64> = signal
        .samples()
        .iter()
        .zip(rev.samples())
        .map(|(a, b)| (a + b * sign) * 0.5)
        .collect();
    Signal::new(x, signal.convention()).unwrap()
}

proptest! {
    #[test]
    fn even_input_gives_real_spectrum(signal in centered_real()) {
        let (a, b) = symmetry_check(&symmetrize(&signal, 1.0)).unwrap();
        prop_assert!(a.passed() && b.passed(), "{:?} {:?}", a, b);
    }

    #[test]
    fn odd_input_gives_imaginary_spectrum(signal in centered_real()) {
        let (a, b) = symmetry_check(&symmetrize(&signal, -1.0)).unwrap();
        prop_assert!(a.passed() && b.passed(), "{:?} {:?}", a, b);
    }

    #[test]
    fn reversal_conjugates_spectrum(signal in centered_real()) {
        prop_assert!(conjugate_check(&signal).unwrap().passed());
    }

    #[test]
    fn dc_identity_everywhere(signal in centered_real(), head in any::<bool>()) {
        let s = if head { signal.retagged(Convention::OrdinaryHead).unwrap() } else { signal };
        prop_assert!(dc_identity(&s).unwrap().passed());
    }
}
