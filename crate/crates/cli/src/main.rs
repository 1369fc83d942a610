//! `sdft-kit`: batch front-end for the ordinary and symmetric DFTs.
//!
//! Exit status: 0 success, 1 verification failure, 2 I/O error, 3 invalid
//! arguments or input.

mod commands;
mod error;
mod io;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{error::ErrorKind, Parser, Subcommand};
use sdft_core::windows::{ToneParams, DEFAULT_ALIAS_HALF_WIDTH};
use sdft_core::Convention;

use commands::{Format, Grid, Target};
use error::CliResult;

#[derive(Parser, Debug)]
#[command(
    name = "sdft-kit",
    version,
    about = "Ordinary and symmetric DFT toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Forward transform of a signal CSV, or inverse of a spectrum CSV.
    Transform {
        /// odft, sdft-odd, sdft-even or sdft-corrected.
        #[arg(long)]
        convention: Convention,
        #[arg(long, value_enum, default_value = "fast")]
        grid: Grid,
        /// Read a spectrum and write the signal.
        #[arg(long)]
        inverse: bool,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Convert an ordinary spectrum to the centered symmetric spectrum.
    Convert {
        #[arg(long, value_enum)]
        to: Target,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Sample the DTFT of a rectangular window (or a windowed tone).
    Dtft {
        #[arg(long)]
        convention: Convention,
        #[arg(long = "N")]
        n: usize,
        #[arg(long, default_value_t = 1.0)]
        fs: f64,
        /// Defaults to −fs/2.
        #[arg(long, allow_hyphen_values = true)]
        fmin: Option<f64>,
        /// Defaults to fs/2.
        #[arg(long, allow_hyphen_values = true)]
        fmax: Option<f64>,
        #[arg(long, default_value_t = 1001)]
        points: usize,
        /// Alias terms on each side of the sampling impulse train.
        #[arg(long = "J", default_value_t = DEFAULT_ALIAS_HALF_WIDTH)]
        half_width: usize,
        /// Tone frequency in Hz; omit for the bare window.
        #[arg(long, allow_hyphen_values = true)]
        f0: Option<f64>,
        #[arg(long, default_value_t = 1.0)]
        amplitude: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        phase: f64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Interpolate an odd-length symmetric record by frequency-domain padding.
    Interp {
        /// sdft-odd, or odft for the head-indexed control.
        #[arg(long, default_value = "sdft-odd")]
        convention: Convention,
        #[arg(long = "M")]
        factor: usize,
        #[arg(long, default_value_t = 1.0)]
        fs: f64,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Square-wave overshoot of the interpolant; prints a JSON report.
    Gibbs {
        #[arg(long)]
        k: usize,
        #[arg(long = "M")]
        factor: usize,
        /// Also write the interpolant here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Run the property suite on seeded random signals.
    Verify {
        #[arg(long, default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum, default_value = "all")]
        check: verify::Check,
        /// Restrict to one convention.
        #[arg(long)]
        convention: Option<Convention>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the N×N transform matrix and report its Gram deviation.
    Matrix {
        #[arg(long = "N")]
        n: usize,
        #[arg(long, default_value = "odft")]
        convention: Convention,
        #[arg(long, value_enum, default_value = "fast")]
        grid: Grid,
        /// Without it the matrix goes to stdout and the report to stderr.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn run(command: Command) -> CliResult<()> {
    match command {
        Command::Transform {
            convention,
            grid,
            inverse,
            input,
            out,
            format,
        } => commands::transform(commands::TransformArgs {
            convention,
            grid,
            inverse,
            input,
            output: out,
            format,
        }),
        Command::Convert {
            to: Target::Sdft,
            input,
            out,
            format,
        } => commands::convert(&input, out.as_ref(), format),
        Command::Dtft {
            convention,
            n,
            fs,
            fmin,
            fmax,
            points,
            half_width,
            f0,
            amplitude,
            phase,
            out,
            format,
        } => {
            let tone = f0
                .map(|f| ToneParams::new(amplitude, f, phase))
                .transpose()?;
            commands::dtft(commands::DtftArgs {
                convention,
                n,
                fs,
                fmin,
                fmax,
                points,
                half_width,
                tone,
                output: out,
                format,
            })
        }
        Command::Interp {
            convention,
            factor,
            fs,
            input,
            out,
            format,
        } => commands::interp(commands::InterpArgs {
            convention,
            factor,
            fs,
            input,
            output: out,
            format,
        }),
        Command::Gibbs {
            k,
            factor,
            out,
            format,
        } => commands::gibbs(k, factor, out.as_ref(), format),
        Command::Verify {
            seed,
            check,
            convention,
            out,
        } => commands::verify(seed, check, convention, out.as_ref()),
        Command::Matrix {
            n,
            convention,
            grid,
            out,
        } => commands::matrix(convention, grid, n, out.as_ref()),
    }
}

fn one_line(text: &str) -> String {
    let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
    line.trim().trim_start_matches("error: ").to_string()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let msg = match e.kind() {
                ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    "missing subcommand (see --help)".to_string()
                }
                _ => one_line(&e.to_string()),
            };
            eprintln!("sdft-kit: {msg}");
            return ExitCode::from(3);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("sdft-kit: {}", one_line(&e.to_string()));
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
