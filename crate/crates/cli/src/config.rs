use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(name = "fxt", version, about = "Align periodic signals with their spectra and sweep for pitch")]
struct Cli {
    #[command(subcommand)]
    command: CommandArgs,
}

#[derive(Debug, Subcommand)]
enum CommandArgs {
    /// Write a synthesized signal as CSV
    Synth(Opts),
    /// Write the spectrum and its frequency-aligned resampling
    Align(Opts),
    /// Write the fxt combination for one candidate period
    Fxt(Opts),
    /// Sweep candidate periods and report the best
    Pitch(Opts),
    /// Print every grid quantity as key,value CSV
    Gridinfo(Opts),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Waveform {
    ImpulseTrain,
    Harmonic,
    FromWav,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Synth,
    Align,
    Fxt,
    Pitch,
    Gridinfo,
}

#[derive(Debug, Args)]
struct Opts {
    /// Sample rate in Hz
    #[arg(long)]
    fs: Option<f64>,
    /// Number of samples
    #[arg(long)]
    n: Option<usize>,
    /// Period in seconds (true period for synthesis, candidate for align/fxt)
    #[arg(long)]
    tp: Option<f64>,
    #[arg(long, value_enum, default_value = "impulse-train")]
    waveform: Waveform,
    /// Harmonic amplitudes, comma separated
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    amps: Option<Vec<f64>>,
    /// Input WAV file (16-bit PCM mono)
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Output CSV path; stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    sweep_min: Option<f64>,
    #[arg(long)]
    sweep_max: Option<f64>,
    #[arg(long)]
    sweep_count: Option<usize>,
    /// Also write an SVG plot next to the CSV
    #[arg(long)]
    svg: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sweep {
    pub min_s: f64,
    pub max_s: f64,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Source {
    ImpulseTrain { sample_rate_hz: f64, num_samples: usize, period_s: f64 },
    Harmonic { sample_rate_hz: f64, num_samples: usize, period_s: f64, amplitudes: Vec<f64> },
    Wav { path: PathBuf, num_samples: Option<usize> },
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub source: Source,
    /// Period for grid-based commands; `None` only for pitch on a WAV file.
    pub period_s: Option<f64>,
    pub sweep: Option<Sweep>,
    pub output_path: Option<PathBuf>,
    pub emit_svg: bool,
}

/// Outcome of argument parsing.
#[derive(Debug)]
pub enum Parsed {
    Run(RunConfig),
    /// `--help` or `--version` text for stdout.
    Info(String),
}

pub fn parse_args<I, T>(args: I) -> Result<Parsed, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Ok(Parsed::Info(e.render().to_string()))
                }
                _ => Err(CliError::Usage(e.render().to_string())),
            };
        }
    };
    let (command, opts) = match cli.command {
        CommandArgs::Synth(o) => (Command::Synth, o),
        CommandArgs::Align(o) => (Command::Align, o),
        CommandArgs::Fxt(o) => (Command::Fxt, o),
        CommandArgs::Pitch(o) => (Command::Pitch, o),
        CommandArgs::Gridinfo(o) => (Command::Gridinfo, o),
    };
    build(command, opts).map(Parsed::Run)
}

fn need<T>(v: Option<T>, flag: &str, why: &str) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("{flag} is required {why}")))
}

fn build(command: Command, o: Opts) -> Result<RunConfig, CliError> {
    let sweep = if command == Command::Pitch {
        Some(Sweep {
            min_s: need(o.sweep_min, "--sweep-min", "for pitch")?,
            max_s: need(o.sweep_max, "--sweep-max", "for pitch")?,
            count: need(o.sweep_count, "--sweep-count", "for pitch")?,
        })
    } else {
        None
    };

    let from_wav = command != Command::Gridinfo && o.waveform == Waveform::FromWav;
    let period_s = if command == Command::Pitch && from_wav {
        o.tp
    } else {
        Some(need(o.tp, "--tp", "for this command")?)
    };

    let source = if from_wav {
        Source::Wav { path: need(o.input, "--in", "for --waveform from-wav")?, num_samples: o.n }
    } else {
        let sample_rate_hz = need(o.fs, "--fs", "unless reading a WAV file")?;
        let num_samples = need(o.n, "--n", "unless reading a WAV file")?;
        let period_s = need(o.tp, "--tp", "to synthesize a signal")?;
        match o.waveform {
            Waveform::Harmonic => Source::Harmonic {
                sample_rate_hz,
                num_samples,
                period_s,
                amplitudes: o.amps.unwrap_or_else(|| vec![1.0]),
            },
            _ => Source::ImpulseTrain { sample_rate_hz, num_samples, period_s },
        }
    };

    if o.svg && o.out.is_none() {
        return Err(CliError::Usage("--svg needs --out".into()));
    }
    Ok(RunConfig { command, source, period_s, sweep, output_path: o.out, emit_svg: o.svg })
}
