use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use num_complex::Complex64;
use sdft_core::interpolation::{gibbs_with_interpolant, interpolate, interpolate_ordinary};
use sdft_core::transforms::{forward, inverse, odft_to_sdft, TransformMatrix};
use sdft_core::windows::{rect_dtft, tone_dtft, DtftVariant, ToneParams};
use sdft_core::{Convention, FreqChoice, Signal};
use serde::Serialize;

use crate::error::{CliError, CliResult};
use crate::io::{self, SCHEMA_VERSION};
use crate::verify;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Grid {
    /// Integer bins from −⌊N/2⌋.
    Fast,
    /// Bins from −(N−1)/2; half-integers for even N.
    Centered,
}

impl From<Grid> for FreqChoice {
    fn from(g: Grid) -> Self {
        match g {
            Grid::Fast => FreqChoice::FastGrid,
            Grid::Centered => FreqChoice::CenteredGrid,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Target {
    Sdft,
}

fn input(path: &Path) -> CliResult<(String, String)> {
    Ok((io::read_to_string(path)?, path.display().to_string()))
}

fn check_positive(name: &str, value: f64) -> CliResult<()> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(CliError::Invalid(format!(
            "--{name} must be positive, got {value}"
        )))
    }
}

fn write_spectrum(
    spectrum: &sdft_core::Spectrum,
    out: Option<&PathBuf>,
    format: Format,
) -> CliResult<()> {
    let text = match format {
        Format::Csv => io::format_spectrum(spectrum),
        Format::Json => io::spectrum_json(spectrum),
    };
    io::emit(out.map(PathBuf::as_path), &text)
}

fn write_signal(signal: &Signal, out: Option<&PathBuf>, format: Format) -> CliResult<()> {
    let text = match format {
        Format::Csv => io::format_signal(signal),
        Format::Json => io::signal_json(signal),
    };
    io::emit(out.map(PathBuf::as_path), &text)
}

pub struct TransformArgs {
    pub convention: Convention,
    pub grid: Grid,
    pub inverse: bool,
    pub input: PathBuf,
    pub output: Option<PathBuf>,
    pub format: Format,
}

pub fn transform(a: TransformArgs) -> CliResult<()> {
    let (text, source) = input(&a.input)?;
    if a.inverse {
        let spectrum = io::parse_spectrum(&text, &source, a.convention)?;
        write_signal(&inverse(&spectrum), a.output.as_ref(), a.format)
    } else {
        let signal = Signal::new(io::parse_signal(&text, &source)?, a.convention)?;
        let spectrum = forward(&signal, a.grid.into())?;
        write_spectrum(&spectrum, a.output.as_ref(), a.format)
    }
}

pub fn convert(input_path: &Path, output: Option<&PathBuf>, format: Format) -> CliResult<()> {
    let (text, source) = input(input_path)?;
    let ordinary = io::parse_spectrum(&text, &source, Convention::OrdinaryHead)?;
    if !ordinary.grid().is_ordinary() {
        return Err(CliError::Invalid(format!(
            "{source}: expected ordinary bins 0..N-1"
        )));
    }
    write_spectrum(&odft_to_sdft(&ordinary)?, output, format)
}

pub struct DtftArgs {
    pub convention: Convention,
    pub n: usize,
    pub fs: f64,
    pub fmin: Option<f64>,
    pub fmax: Option<f64>,
    pub points: usize,
    pub half_width: usize,
    pub tone: Option<ToneParams>,
    pub output: Option<PathBuf>,
    pub format: Format,
}

fn dtft_variant(conv: Convention, n: usize) -> CliResult<DtftVariant> {
    let variant = match conv {
        Convention::OrdinaryHead => DtftVariant::Odft,
        Convention::SymmetricEvenUncorrected => DtftVariant::UncorrectedSdft,
        Convention::SymmetricEvenCorrected | Convention::SymmetricOdd => DtftVariant::CorrectedSdft,
    };
    if conv.accepts(n) {
        Ok(variant)
    } else {
        Err(CliError::Invalid(format!(
            "convention {conv} does not accept N={n}"
        )))
    }
}

#[derive(Serialize)]
struct DtftRow {
    f: f64,
    magnitude: f64,
    phase: f64,
}

#[derive(Serialize)]
struct DtftDoc {
    schema_version: u32,
    convention: &'static str,
    #[serde(rename = "N")]
    n: usize,
    fs: f64,
    #[serde(rename = "J")]
    half_width: usize,
    rows: Vec<DtftRow>,
}

pub fn dtft(a: DtftArgs) -> CliResult<()> {
    if a.n == 0 {
        return Err(CliError::Invalid("--N must be at least 1".into()));
    }
    check_positive("fs", a.fs)?;
    let variant = dtft_variant(a.convention, a.n)?;
    let fmin = a.fmin.unwrap_or(-a.fs / 2.0);
    let fmax = a.fmax.unwrap_or(a.fs / 2.0);
    if !(fmin.is_finite() && fmax.is_finite() && fmin <= fmax) {
        return Err(CliError::Invalid(format!(
            "bad frequency range [{fmin}, {fmax}]"
        )));
    }
    if a.points == 0 || (a.points == 1 && fmin != fmax) {
        return Err(CliError::Invalid(
            "--points must be at least 2 for a range".into(),
        ));
    }
    let step = if a.points > 1 {
        (fmax - fmin) / (a.points - 1) as f64
    } else {
        0.0
    };
    let rows: Vec<DtftRow> = (0..a.points)
        .map(|i| {
            let f = fmin + step * i as f64;
            let z: Complex64 = match &a.tone {
                Some(t) => tone_dtft(t, a.n, a.fs, f, variant, a.half_width),
                None => rect_dtft(a.n, a.fs, f, variant, a.half_width),
            };
            DtftRow {
                f,
                magnitude: z.norm(),
                phase: io::phase(z),
            }
        })
        .collect();
    let text = match a.format {
        Format::Csv => {
            let mut s = String::from("f,magnitude,phase\n");
            for r in &rows {
                let _ = writeln!(
                    s,
                    "{},{},{}",
                    io::num(r.f),
                    io::num(r.magnitude),
                    io::num(r.phase)
                );
            }
            s
        }
        Format::Json => io::to_json(&DtftDoc {
            schema_version: SCHEMA_VERSION,
            convention: a.convention.name(),
            n: a.n,
            fs: a.fs,
            half_width: a.half_width,
            rows,
        }),
    };
    io::emit(a.output.as_deref(), &text)
}

pub struct InterpArgs {
    pub convention: Convention,
    pub factor: usize,
    pub fs: f64,
    pub input: PathBuf,
    pub output: Option<PathBuf>,
    pub format: Format,
}

pub fn interp(a: InterpArgs) -> CliResult<()> {
    check_positive("fs", a.fs)?;
    let (text, source) = input(&a.input)?;
    let signal =
        Signal::new(io::parse_signal(&text, &source)?, a.convention)?.with_sample_rate(a.fs)?;
    let dense = match a.convention {
        Convention::OrdinaryHead => interpolate_ordinary(&signal, a.factor)?,
        _ => interpolate(&signal, a.factor)?,
    };
    write_signal(&dense, a.output.as_ref(), a.format)
}

#[derive(Serialize)]
struct GibbsDoc {
    schema_version: u32,
    #[serde(flatten)]
    report: sdft_core::interpolation::GibbsReport,
}

pub fn gibbs(k: usize, factor: usize, output: Option<&PathBuf>, format: Format) -> CliResult<()> {
    let (report, dense) = gibbs_with_interpolant(k, factor)?;
    if let Some(path) = output {
        write_signal(&dense, Some(path), format)?;
    }
    io::emit(
        None,
        &io::to_json(&GibbsDoc {
            schema_version: SCHEMA_VERSION,
            report,
        }),
    )
}

pub fn verify(
    seed: u64,
    check: verify::Check,
    convention: Option<Convention>,
    output: Option<&PathBuf>,
) -> CliResult<()> {
    let report = verify::run(seed, check, convention)?;
    io::emit(output.map(PathBuf::as_path), &io::to_json(&report))?;
    if report.ok {
        Ok(())
    } else {
        Err(CliError::Verification(format!(
            "verification failed: {}",
            report.failures.join(", ")
        )))
    }
}

#[derive(Serialize)]
struct GramDoc {
    schema_version: u32,
    convention: &'static str,
    grid: &'static str,
    #[serde(rename = "N")]
    n: usize,
    gram_deviation: f64,
}

pub fn matrix(
    convention: Convention,
    grid: Grid,
    n: usize,
    output: Option<&PathBuf>,
) -> CliResult<()> {
    let m = TransformMatrix::for_convention(convention, grid.into(), n)?;
    let mut csv = String::new();
    for row in m.rows() {
        let line: Vec<String> = row
            .iter()
            .map(|z| format!("{},{}", io::num(z.re), io::num(z.im)))
            .collect();
        csv.push_str(&line.join(","));
        csv.push('\n');
    }
    let doc = io::to_json(&GramDoc {
        schema_version: SCHEMA_VERSION,
        convention: convention.name(),
        grid: match (convention, grid) {
            (Convention::OrdinaryHead, _) => "ordinary",
            (_, Grid::Fast) => "fast",
            (_, Grid::Centered) => "centered",
        },
        n,
        gram_deviation: m.gram_deviation(),
    });
    match output {
        Some(path) => {
            io::emit(Some(path), &csv)?;
            io::emit(None, &doc)
        }
        None => {
            io::emit(None, &csv)?;
            eprint!("{doc}");
            Ok(())
        }
    }
}
