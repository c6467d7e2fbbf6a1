//! Resampling onto the aligned grids.
//!
//! Both directions keep `N` output samples. The frequency direction reads
//! the magnitude spectrum at source index `q / a` (new increment
//! `δ'_f = f_p² / f_s`), which moves harmonic peaks `N_t` samples apart.
//! The time direction reads the signal at `q · a` (new increment
//! `δ'_t = t_p² f_s / N`), which moves period marks `N_f` samples apart.
//! Source positions past the last sample read as zero and are counted.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::grid::GridSpec;
use crate::spectral::{SampledSignal, Spectrum};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    /// Spectrum magnitudes resampled onto `δ'_f`.
    FrequencyAligned,
    /// Time samples resampled onto `δ'_t`.
    TimeAligned,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AlignedSequence {
    pub values: Vec<f64>,
    /// `δ'_f` in Hz or `δ'_t` in seconds, depending on `domain`.
    pub increment: f64,
    pub domain: Domain,
    /// Source index read for the last output sample (`n_end - 1` or
    /// `m_end - 1`).
    pub source_end_index_0based: f64,
    /// Output samples whose source index fell past `N - 1`.
    pub out_of_range_count: usize,
}

impl AlignedSequence {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Physical position (Hz or s) of output sample `q`.
    pub fn position(&self, q: usize) -> f64 {
        q as f64 * self.increment
    }
}

/// Linear interpolation at a fractional index; zero past the last element.
pub fn linear_interpolate(values: &[f64], index: f64) -> Result<f64> {
    if values.len() < 2 {
        return Err(Error::InvalidInput("interpolation needs at least 2 values"));
    }
    if index.is_nan() || index < 0.0 {
        return Err(Error::InvalidInput("interpolation index must be non-negative"));
    }
    Ok(interpolate_unchecked(values, index))
}

#[inline]
fn interpolate_unchecked(values: &[f64], index: f64) -> f64 {
    let last = (values.len() - 1) as f64;
    if index > last {
        return 0.0;
    }
    let lo = libm::floor(index);
    let w = index - lo;
    let lo = lo as usize;
    if w == 0.0 {
        values[lo]
    } else {
        (1.0 - w) * values[lo] + w * values[lo + 1]
    }
}

/// Evaluates `values` at `q · step` for `q = 0..N`.
fn resample_by(values: &[f64], step: f64) -> (Vec<f64>, usize) {
    let last = (values.len() - 1) as f64;
    let mut out_of_range = 0;
    let out = (0..values.len())
        .map(|q| {
            let src = q as f64 * step;
            if src > last {
                out_of_range += 1;
            }
            interpolate_unchecked(values, src)
        })
        .collect();
    (out, out_of_range)
}

/// `|X|` resampled so harmonic peaks fall `N_t` samples apart.
pub fn resample_spectrum(spectrum: &Spectrum, spec: &GridSpec) -> Result<AlignedSequence> {
    resample_magnitudes(&spectrum.magnitudes(), spec)
}

/// Same as [`resample_spectrum`] for precomputed magnitudes.
pub fn resample_magnitudes(magnitudes: &[f64], spec: &GridSpec) -> Result<AlignedSequence> {
    check_len(magnitudes.len(), spec)?;
    let scale = spec.alignment_scale();
    // q / a
    let (values, out_of_range_count) = resample_by(magnitudes, scale.b);
    Ok(AlignedSequence {
        values,
        increment: scale.new_freq_increment_hz,
        domain: Domain::FrequencyAligned,
        source_end_index_0based: scale.freq_end_index_0based(),
        out_of_range_count,
    })
}

/// `x` resampled so period marks fall `N_f` samples apart.
pub fn resample_time(signal: &SampledSignal, spec: &GridSpec) -> Result<AlignedSequence> {
    check_len(signal.len(), spec)?;
    let scale = spec.alignment_scale();
    let (values, out_of_range_count) = resample_by(signal.samples(), scale.a);
    Ok(AlignedSequence {
        values,
        increment: scale.new_time_increment_s,
        domain: Domain::TimeAligned,
        source_end_index_0based: scale.time_end_index_0based(),
        out_of_range_count,
    })
}

fn check_len(found: usize, spec: &GridSpec) -> Result<()> {
    let expected = spec.num_samples();
    if found != expected {
        return Err(Error::LengthMismatch { expected, found });
    }
    Ok(())
}
