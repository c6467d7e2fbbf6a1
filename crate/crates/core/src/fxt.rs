//! Time/frequency combination ("fxt") of a signal with its aligned spectrum,
//! and a period sweep built on it.
//!
//! For a candidate period the rectified signal `|x|` and the frequency-
//! aligned magnitude spectrum are each scaled to unit maximum. Under the
//! true period the spectrum's harmonic peaks sit `N_t` samples apart, on
//! top of the signal's period marks. Two combinations are reported:
//!
//! * `product_sequence`, the elementwise product, used for scoring;
//! * `convolution_sequence`, the circular convolution of the two.
//!
//! The score is `Σ product / Σ aligned`: the mean of the time sequence
//! weighted by the aligned spectrum. Dividing by the spectrum's mass
//! rather than by `N` stops wide interpolated peaks (large `a`, i.e. long
//! candidate periods) from outscoring the true period.

use alloc::vec::Vec;

use crate::error::{Error, GridError, Result};
use crate::grid::GridSpec;
use crate::resample::resample_magnitudes;
use crate::spectral::{circular_convolve, dft, SampledSignal};

#[derive(Debug, Clone, PartialEq)]
pub struct FxtReport {
    pub candidate_period_s: f64,
    /// `|x|` scaled to unit maximum.
    pub time_sequence: Vec<f64>,
    /// Frequency-aligned `|X|` scaled to unit maximum.
    pub aligned_spectrum: Vec<f64>,
    pub product_sequence: Vec<f64>,
    pub convolution_sequence: Vec<f64>,
    /// `Σ product / Σ aligned`, in `[0, 1]`; zero when the spectrum is zero.
    pub score: f64,
    /// `Σ product / N`.
    pub mean_product: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PitchEstimate {
    pub best_period_s: f64,
    pub best_frequency_hz: f64,
    /// `(candidate_period_s, score)` in candidate order.
    pub scores: Vec<(f64, f64)>,
}

impl PitchEstimate {
    /// Picks the highest score, breaking ties toward the shorter period.
    pub fn from_scores(scores: Vec<(f64, f64)>) -> Result<Self> {
        let mut best: Option<(f64, f64)> = None;
        for &(period, score) in &scores {
            best = match best {
                None => Some((period, score)),
                Some((bp, bs)) if score > bs || (score == bs && period < bp) => {
                    Some((period, score))
                }
                keep => keep,
            };
        }
        let (best_period_s, _) = best.ok_or(Error::InvalidInput("no candidates scored"))?;
        Ok(Self { best_period_s, best_frequency_hz: 1.0 / best_period_s, scores })
    }
}

/// Precomputes everything about a signal that does not depend on the
/// candidate period, so a sweep pays for one DFT.
#[derive(Debug, Clone)]
pub struct FxtScorer {
    sample_rate_hz: f64,
    time_sequence: Vec<f64>,
    magnitudes: Vec<f64>,
}

impl FxtScorer {
    pub fn new(signal: &SampledSignal) -> Self {
        let rectified: Vec<f64> = signal.samples().iter().map(|s| s.abs()).collect();
        Self {
            sample_rate_hz: signal.sample_rate_hz(),
            time_sequence: unit_max(rectified),
            magnitudes: dft(signal).magnitudes(),
        }
    }

    pub fn len(&self) -> usize {
        self.time_sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.time_sequence.is_empty()
    }

    pub fn duration_s(&self) -> f64 {
        self.len() as f64 / self.sample_rate_hz
    }

    fn grid(&self, period_s: f64) -> Result<GridSpec> {
        GridSpec::new(self.sample_rate_hz, self.len(), period_s).map_err(|e| match e {
            GridError::PeriodExceedsRecord { period_s, duration_s } => {
                Error::InvalidCandidate { period_s, duration_s }
            }
            other => Error::Grid(other),
        })
    }

    fn aligned(&self, period_s: f64) -> Result<Vec<f64>> {
        let spec = self.grid(period_s)?;
        Ok(unit_max(resample_magnitudes(&self.magnitudes, &spec)?.values))
    }

    /// Score for one candidate; the same arithmetic as [`FxtScorer::report`].
    pub fn score(&self, period_s: f64) -> Result<f64> {
        let aligned = self.aligned(period_s)?;
        let (num, mass) = self
            .time_sequence
            .iter()
            .zip(&aligned)
            .fold((0.0, 0.0), |(num, mass), (t, s)| (num + t * s, mass + s));
        Ok(weighted_score(num, mass))
    }

    pub fn report(&self, period_s: f64) -> Result<FxtReport> {
        let aligned = self.aligned(period_s)?;
        let product: Vec<f64> = self
            .time_sequence
            .iter()
            .zip(&aligned)
            .map(|(t, s)| t * s)
            .collect();
        let (num, mass) = self
            .time_sequence
            .iter()
            .zip(&aligned)
            .fold((0.0, 0.0), |(num, mass), (t, s)| (num + t * s, mass + s));
        let convolution = circular_convolve(&self.time_sequence, &aligned)?;
        Ok(FxtReport {
            candidate_period_s: period_s,
            time_sequence: self.time_sequence.clone(),
            mean_product: num / self.len() as f64,
            score: weighted_score(num, mass),
            aligned_spectrum: aligned,
            product_sequence: product,
            convolution_sequence: convolution,
        })
    }
}

fn weighted_score(num: f64, mass: f64) -> f64 {
    if mass > 0.0 {
        (num / mass).clamp(0.0, 1.0)
    } else {
        0.0
    }
}

fn unit_max(mut v: Vec<f64>) -> Vec<f64> {
    let max = v.iter().copied().fold(0.0, f64::max);
    if max > 0.0 {
        for x in v.iter_mut() {
            *x /= max;
        }
    }
    v
}

/// Combines `signal` with its spectrum aligned under `candidate_period_s`.
pub fn fxt_combine(signal: &SampledSignal, candidate_period_s: f64) -> Result<FxtReport> {
    FxtScorer::new(signal).report(candidate_period_s)
}

/// `count` periods evenly spaced over `[min, max]`, both ends included.
pub fn candidate_periods(period_min_s: f64, period_max_s: f64, count: usize) -> Result<Vec<f64>> {
    if count < 2 {
        return Err(Error::InvalidInput("sweep needs at least 2 candidates"));
    }
    if !(period_min_s.is_finite() && period_max_s.is_finite()) {
        return Err(Error::InvalidInput("sweep bounds must be finite"));
    }
    if !(0.0 < period_min_s && period_min_s < period_max_s) {
        return Err(Error::InvalidInput("sweep needs 0 < min < max"));
    }
    let span = period_max_s - period_min_s;
    let last = (count - 1) as f64;
    Ok((0..count)
        .map(|i| {
            if i + 1 == count {
                period_max_s
            } else {
                period_min_s + span * (i as f64 / last)
            }
        })
        .collect())
}

/// Scores every candidate in `[period_min_s, period_max_s]` and returns the
/// best one.
pub fn pitch_sweep(
    signal: &SampledSignal,
    period_min_s: f64,
    period_max_s: f64,
    num_candidates: usize,
) -> Result<PitchEstimate> {
    let scorer = FxtScorer::new(signal);
    let candidates = checked_candidates(&scorer, period_min_s, period_max_s, num_candidates)?;
    let scores = candidates
        .into_iter()
        .map(|p| scorer.score(p).map(|s| (p, s)))
        .collect::<Result<Vec<_>>>()?;
    PitchEstimate::from_scores(scores)
}

/// Candidate grid for `scorer`, rejecting ranges that reach past the record.
pub fn checked_candidates(
    scorer: &FxtScorer,
    period_min_s: f64,
    period_max_s: f64,
    num_candidates: usize,
) -> Result<Vec<f64>> {
    if period_max_s >= scorer.duration_s() {
        return Err(Error::InvalidInput("sweep maximum must be shorter than the record"));
    }
    candidate_periods(period_min_s, period_max_s, num_candidates)
}
