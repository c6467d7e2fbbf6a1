use std::io::Write;
use std::path::Path;

use fxt_core::{
    dft, make_harmonic, make_impulse_train, resample_spectrum, FxtScorer, GridSpec, SampledSignal,
};

use crate::config::{Command, RunConfig, Source};
use crate::error::CliError;
use crate::sweep::parallel_pitch_sweep;
use crate::svg::line_plot;
use crate::table::{format_real, write_csv, Table};
use crate::wav::read_wav;

/// What a command produced: a CSV table, an optional summary line, and the
/// column to plot when `--svg` is set.
#[derive(Debug)]
pub struct Output {
    pub table: Table,
    pub summary: Option<String>,
    plot: Option<(&'static str, &'static str)>,
}

pub fn load_signal(source: &Source) -> Result<SampledSignal, CliError> {
    match source {
        Source::ImpulseTrain { sample_rate_hz, num_samples, period_s } => {
            let grid = GridSpec::new(*sample_rate_hz, *num_samples, *period_s)
                .map_err(fxt_core::Error::from)?;
            Ok(make_impulse_train(&grid)?)
        }
        Source::Harmonic { sample_rate_hz, num_samples, period_s, amplitudes } => {
            let grid = GridSpec::new(*sample_rate_hz, *num_samples, *period_s)
                .map_err(fxt_core::Error::from)?;
            Ok(make_harmonic(&grid, amplitudes)?)
        }
        Source::Wav { path, num_samples } => Ok(read_wav(path, *num_samples)?),
    }
}

fn grid_for(signal: &SampledSignal, period_s: f64) -> Result<GridSpec, CliError> {
    GridSpec::new(signal.sample_rate_hz(), signal.len(), period_s)
        .map_err(|e| fxt_core::Error::from(e).into())
}

fn period(config: &RunConfig) -> Result<f64, CliError> {
    config
        .period_s
        .ok_or_else(|| CliError::Usage("--tp is required for this command".into()))
}

fn r(v: f64) -> String {
    format_real(v)
}

pub fn gridinfo(grid: &GridSpec) -> Table {
    let s = grid.alignment_scale();
    let exact = grid.exactness();
    let identity = grid.scale_identity_check();
    let mut t = Table::new(&["key", "value"]);
    let rows: [(&str, String); 25] = [
        ("f_s", r(grid.sample_rate_hz())),
        ("N", grid.num_samples().to_string()),
        ("t_p", r(grid.period_s())),
        ("f_p", r(grid.fundamental_frequency())),
        ("delta_t", r(grid.time_increment())),
        ("delta_f", r(grid.dft_bin_spacing())),
        ("N_t", r(grid.samples_per_period())),
        ("N_f", r(grid.harmonic_bin_spacing())),
        ("n_max", grid.max_harmonics().to_string()),
        ("a", r(s.a)),
        ("b", r(s.b)),
        ("delta_f_prime", r(s.new_freq_increment_hz)),
        ("delta_t_prime", r(s.new_time_increment_s)),
        ("f_end", r(s.freq_end_hz)),
        ("t_end", r(s.time_end_s)),
        ("n_end", r(s.freq_end_index)),
        ("m_end", r(s.time_end_index)),
        ("n_end_0based", r(s.freq_end_index_0based())),
        ("m_end_0based", r(s.time_end_index_0based())),
        ("Mf", r(grid.freq_end_multiplier())),
        ("Mt", r(grid.time_end_multiplier())),
        ("grid_exact", exact.exact.to_string()),
        ("N_t_frac", r(exact.samples_per_period_frac)),
        ("N_f_frac", r(exact.harmonic_spacing_frac)),
        ("identity_max_residual", r(identity.max_residual())),
    ];
    for (k, v) in rows {
        t.push(vec![k.to_string(), v]);
    }
    t
}

pub fn signal_table(signal: &SampledSignal) -> Table {
    let dt = 1.0 / signal.sample_rate_hz();
    let mut t = Table::new(&["index", "time_s", "amplitude"]);
    for (i, &v) in signal.samples().iter().enumerate() {
        t.push(vec![i.to_string(), r(i as f64 * dt), r(v)]);
    }
    t
}

pub fn align_table(signal: &SampledSignal, grid: &GridSpec) -> Result<Table, CliError> {
    let spectrum = dft(signal);
    let aligned = resample_spectrum(&spectrum, grid)?;
    let mut t = Table::new(&["index", "freq_hz", "magnitude", "aligned_freq_hz", "aligned_magnitude"]);
    for (k, (bin, a)) in spectrum.bins().iter().zip(&aligned.values).enumerate() {
        t.push(vec![
            k.to_string(),
            r(k as f64 * spectrum.bin_spacing_hz()),
            r(bin.norm()),
            r(aligned.position(k)),
            r(*a),
        ]);
    }
    Ok(t)
}

/// Runs a parsed configuration and returns its output without writing it.
pub fn execute(config: &RunConfig) -> Result<Output, CliError> {
    if config.command == Command::Gridinfo {
        let (fs, n) = match &config.source {
            Source::ImpulseTrain { sample_rate_hz, num_samples, .. }
            | Source::Harmonic { sample_rate_hz, num_samples, .. } => (*sample_rate_hz, *num_samples),
            Source::Wav { .. } => unreachable!("gridinfo never reads a WAV file"),
        };
        let grid = GridSpec::new(fs, n, period(config)?).map_err(fxt_core::Error::from)?;
        return Ok(Output { table: gridinfo(&grid), summary: None, plot: None });
    }

    let signal = load_signal(&config.source)?;
    match config.command {
        Command::Synth => Ok(Output {
            table: signal_table(&signal),
            summary: None,
            plot: Some(("time_s", "amplitude")),
        }),
        Command::Align => {
            let grid = grid_for(&signal, period(config)?)?;
            Ok(Output {
                table: align_table(&signal, &grid)?,
                summary: None,
                plot: Some(("aligned_freq_hz", "aligned_magnitude")),
            })
        }
        Command::Fxt => {
            let tp = period(config)?;
            let report = FxtScorer::new(&signal).report(tp)?;
            let mut t = Table::new(&["index", "time_sequence", "aligned_spectrum", "product", "convolution"]);
            for i in 0..report.time_sequence.len() {
                t.push(vec![
                    i.to_string(),
                    r(report.time_sequence[i]),
                    r(report.aligned_spectrum[i]),
                    r(report.product_sequence[i]),
                    r(report.convolution_sequence[i]),
                ]);
            }
            Ok(Output {
                table: t,
                summary: Some(format!(
                    "candidate_period_s={},score={},mean_product={}",
                    r(tp),
                    r(report.score),
                    r(report.mean_product)
                )),
                plot: Some(("index", "product")),
            })
        }
        Command::Pitch => {
            let sweep = config.sweep.expect("pitch config carries a sweep");
            let est = parallel_pitch_sweep(&signal, sweep.min_s, sweep.max_s, sweep.count)?;
            let mut t = Table::new(&["candidate_period_s", "score"]);
            for (p, s) in &est.scores {
                t.push(vec![r(*p), r(*s)]);
            }
            Ok(Output {
                table: t,
                summary: Some(format!(
                    "best_period_s={},best_frequency_hz={}",
                    r(est.best_period_s),
                    r(est.best_frequency_hz)
                )),
                plot: Some(("candidate_period_s", "score")),
            })
        }
        Command::Gridinfo => unreachable!(),
    }
}

fn write_svg(output: &Output, csv_path: &Path) -> Result<(), CliError> {
    let Some((xname, yname)) = output.plot else {
        return Ok(());
    };
    let xs = output.table.column(xname).unwrap_or_default();
    let ys = output.table.column(yname).unwrap_or_default();
    let path = csv_path.with_extension("svg");
    std::fs::write(&path, line_plot(yname, &xs, &ys))
        .map_err(|e| CliError::Data(format!("cannot write {}: {e}", path.display())))
}

/// Runs and writes results: CSV to `--out` (or stdout), the summary line to
/// stdout when the CSV went to a file and to stderr otherwise.
pub fn run(config: &RunConfig) -> Result<(), CliError> {
    let output = execute(config)?;
    let io_err = |e: std::io::Error| CliError::Data(format!("cannot write output: {e}"));
    match &config.output_path {
        Some(path) => {
            write_csv(&output.table, path)?;
            if config.emit_svg {
                write_svg(&output, path)?;
            }
            if let Some(s) = &output.summary {
                writeln!(std::io::stdout(), "{s}").map_err(io_err)?;
            }
        }
        None => {
            std::io::stdout().write_all(&output.table.to_bytes()).map_err(io_err)?;
            if let Some(s) = &output.summary {
                eprintln!("{s}");
            }
        }
    }
    Ok(())
}
