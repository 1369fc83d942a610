//! CSV parsing and atomic output.

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use num_complex::Complex64;
use sdft_core::{Convention, FrequencyGrid, HalfUnits, Signal, Spectrum};
use serde::Serialize;

use crate::error::{CliError, CliResult};

pub const SCHEMA_VERSION: u32 = 1;

/// Write `contents` to `path` through a temporary file in the same directory,
/// or to stdout when no path is given.
pub fn emit(path: Option<&Path>, contents: &str) -> CliResult<()> {
    let Some(path) = path else {
        let mut out = std::io::stdout().lock();
        return out
            .write_all(contents.as_bytes())
            .and_then(|_| out.flush())
            .map_err(|e| CliError::io("stdout", e));
    };
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp =
        tempfile::NamedTempFile::new_in(dir).map_err(|e| CliError::io(path.display(), e))?;
    tmp.write_all(contents.as_bytes())
        .and_then(|_| tmp.flush())
        .map_err(|e| CliError::io(path.display(), e))?;
    tmp.persist(path)
        .map_err(|e| CliError::io(path.display(), e.error))?;
    Ok(())
}

pub fn read_to_string(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::io(path.display(), e))
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

/// Numeric rows of a CSV file. A first line whose leading field is not a
/// number is taken as a header and skipped.
fn numeric_rows(
    text: &str,
    source: &str,
    min_cols: usize,
    max_cols: usize,
) -> CliResult<Vec<Vec<f64>>> {
    let mut rows = Vec::new();
    let mut first = true;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if std::mem::take(&mut first) && fields[0].parse::<f64>().is_err() {
            continue;
        }
        if fields.len() < min_cols || fields.len() > max_cols {
            return Err(CliError::Invalid(format!(
                "{source}:{}: expected {min_cols} to {max_cols} fields, found {}",
                lineno + 1,
                fields.len()
            )));
        }
        let values = fields
            .iter()
            .map(|f| {
                f.parse::<f64>()
                    .ok()
                    .filter(|v| v.is_finite())
                    .ok_or_else(|| {
                        CliError::Invalid(format!("{source}:{}: bad number `{f}`", lineno + 1))
                    })
            })
            .collect::<CliResult<Vec<f64>>>()?;
        rows.push(values);
    }
    if rows.is_empty() {
        return Err(CliError::Invalid(format!("{source}: no data rows")));
    }
    Ok(rows)
}

/// Samples from `index,real[,imag]` rows, in file order.
pub fn parse_signal(text: &str, source: &str) -> CliResult<Vec<Complex64>> {
    Ok(numeric_rows(text, source, 2, 3)?
        .into_iter()
        .map(|r| Complex64::new(r[1], r.get(2).copied().unwrap_or(0.0)))
        .collect())
}

/// A spectrum from `bin,real,imag[,magnitude,phase]` rows. Bins must be
/// consecutive, unit-spaced and integer or half-integer.
pub fn parse_spectrum(text: &str, source: &str, convention: Convention) -> CliResult<Spectrum> {
    let rows = numeric_rows(text, source, 3, 5)?;
    let mut bins = Vec::with_capacity(rows.len());
    let mut start = None;
    for (i, r) in rows.iter().enumerate() {
        let twice = (2.0 * r[0]).round();
        if (2.0 * r[0] - twice).abs() > 1e-9 {
            return Err(CliError::Invalid(format!(
                "{source}: bin {} is not a multiple of 1/2",
                r[0]
            )));
        }
        let twice = twice as i64;
        let first = *start.get_or_insert(twice);
        if twice != first + 2 * i as i64 {
            return Err(CliError::Invalid(format!(
                "{source}: bins must be consecutive, found {} after {} rows",
                r[0], i
            )));
        }
        bins.push(Complex64::new(r[1], r[2]));
    }
    let grid = FrequencyGrid::from_start(HalfUnits::from_twice(start.unwrap_or(0)), bins.len());
    Ok(Spectrum::new(bins, grid, convention)?)
}

/// Phase in `(−π, π]`; zero for a zero value.
pub fn phase(z: Complex64) -> f64 {
    if z.re == 0.0 && z.im == 0.0 {
        return 0.0;
    }
    let p = z.im.atan2(z.re);
    if p <= -PI {
        PI
    } else {
        p
    }
}

/// Shortest round-trip text for `x`, in exponent form for very small or
/// very large magnitudes.
pub fn num(x: f64) -> String {
    let a = x.abs();
    if a != 0.0 && !(1e-4..1e16).contains(&a) {
        format!("{x:e}")
    } else {
        format!("{x}")
    }
}

pub fn format_signal(signal: &Signal) -> String {
    let complex = !signal.is_real();
    let mut out = String::from(if complex {
        "index,real,imag\n"
    } else {
        "index,real\n"
    });
    for (t, z) in signal.grid().values().zip(signal.samples()) {
        if complex {
            let _ = writeln!(out, "{t},{},{}", num(z.re), num(z.im));
        } else {
            let _ = writeln!(out, "{t},{}", num(z.re));
        }
    }
    out
}

#[derive(Serialize)]
struct SpectrumRow {
    bin: f64,
    real: f64,
    imag: f64,
    magnitude: f64,
    phase: f64,
}

#[derive(Serialize)]
struct SpectrumDoc<'a> {
    schema_version: u32,
    source_convention: &'a str,
    rows: Vec<SpectrumRow>,
}

#[derive(Serialize)]
struct SignalRow {
    index: f64,
    real: f64,
    imag: f64,
}

#[derive(Serialize)]
struct SignalDoc<'a> {
    schema_version: u32,
    convention: &'a str,
    sample_rate: f64,
    rows: Vec<SignalRow>,
}

pub fn format_spectrum(spectrum: &Spectrum) -> String {
    let mut out = String::from("bin,real,imag,magnitude,phase\n");
    for (m, z) in spectrum.grid().values().zip(spectrum.bins()) {
        let _ = writeln!(
            out,
            "{m},{},{},{},{}",
            num(z.re),
            num(z.im),
            num(z.norm()),
            num(phase(*z))
        );
    }
    out
}

pub fn spectrum_json(spectrum: &Spectrum) -> String {
    let rows = spectrum
        .grid()
        .values()
        .zip(spectrum.bins())
        .map(|(m, z)| SpectrumRow {
            bin: m.value(),
            real: z.re,
            imag: z.im,
            magnitude: z.norm(),
            phase: phase(*z),
        })
        .collect();
    to_json(&SpectrumDoc {
        schema_version: SCHEMA_VERSION,
        source_convention: spectrum.source_convention().name(),
        rows,
    })
}

pub fn signal_json(signal: &Signal) -> String {
    let rows = signal
        .grid()
        .values()
        .zip(signal.samples())
        .map(|(t, z)| SignalRow {
            index: t.value(),
            real: z.re,
            imag: z.im,
        })
        .collect();
    to_json(&SignalDoc {
        schema_version: SCHEMA_VERSION,
        convention: signal.convention().name(),
        sample_rate: signal.sample_rate(),
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn header_is_optional() {
        let a = parse_signal("index,real\n0,1\n1,2\n", "a").unwrap();
        let b = parse_signal("0,1\n1,2\n", "b").unwrap();
        assert_eq!(a, b);
        let c = parse_signal("\n0,1,0.5\n", "c").unwrap();
        assert_eq!(c, vec![Complex64::new(1.0, 0.5)]);
    }

    #[test]
    fn malformed_rows_are_rejected() {
        assert!(parse_signal("0,1\nx,2\n", "s").is_err());
        assert!(parse_signal("0\n", "s").is_err());
        assert!(parse_signal("0,1,2,3\n", "s").is_err());
        assert!(parse_signal("index,real\n", "s").is_err());
        assert!(parse_signal("0,nan\n", "s").is_err());
    }

    #[test]
    fn spectrum_bins_define_the_grid() {
        let s = parse_spectrum(
            "bin,real,imag\n-1.5,1,0\n-0.5,0,0\n0.5,0,0\n1.5,0,0\n",
            "s",
            Convention::SymmetricEvenCorrected,
        )
        .unwrap();
        assert!(s.grid().is_centered());
        assert!(parse_spectrum("0,1,0\n2,0,0\n", "s", Convention::OrdinaryHead).is_err());
        assert!(parse_spectrum("0.25,1,0\n", "s", Convention::OrdinaryHead).is_err());
    }

    #[test]
    fn numbers_round_trip() {
        for x in [0.0, -0.0, 1e-300, 2.5, -1.0 / 3.0, 1e20, 123456.789] {
            assert_eq!(num(x).parse::<f64>().unwrap(), x);
        }
        assert_eq!(num(2.220446049250313e-16), "2.220446049250313e-16");
        assert_eq!(num(3.0), "3");
    }

    #[test]
    fn phase_range() {
        assert_eq!(phase(Complex64::new(-1.0, -0.0)), PI);
        assert_eq!(phase(Complex64::new(-1.0, 0.0)), PI);
        assert_eq!(phase(Complex64::new(0.0, 0.0)), 0.0);
        assert!((phase(Complex64::new(0.0, -1.0)) + PI / 2.0).abs() < 1e-15);
    }

    #[test]
    fn signal_round_trip_is_exact() {
        let x = vec![Complex64::new(0.1, -1e-300), Complex64::new(1.0 / 3.0, 2.5)];
        let s = Signal::new(x.clone(), Convention::OrdinaryHead).unwrap();
        assert_eq!(parse_signal(&format_signal(&s), "s").unwrap(), x);
    }

    #[test]
    fn emit_replaces_atomically() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("out.csv");
        emit(Some(&p), "a\n").unwrap();
        emit(Some(&p), "b\n").unwrap();
        assert_eq!(std::fs::read_to_string(&p).unwrap(), "b\n");
        assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
        assert!(emit(Some(&dir.path().join("missing/out.csv")), "x").is_err());
    }
}
