//! Grid geometry of a sampled periodic record and the scale factors that
//! align its time and frequency axes.
//!
//! Notation used in the docs below:
//!
//! | symbol | meaning                                   |
//! |--------|-------------------------------------------|
//! | `f_s`  | sample rate (Hz)                          |
//! | `N`    | record length (samples, also DFT bins)    |
//! | `t_p`  | signal period (s), `f_p = 1/t_p`          |
//! | `N_t`  | samples per period, `t_p f_s`             |
//! | `N_f`  | DFT bins between harmonics, `N f_p / f_s` |
//!
//! `N_t` and `N_f` are kept as reals. Use [`GridSpec::exactness`] to check
//! whether a grid is integral.

use crate::error::GridError;

/// Absolute tolerance for treating `N_t` / `N_f` as integers.
pub const EXACT_TOLERANCE: f64 = 1e-9;

/// A validated `(f_s, N, t_p)` triple.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    sample_rate_hz: f64,
    num_samples: usize,
    period_s: f64,
}

impl GridSpec {
    /// Validates and builds a grid.
    ///
    /// Rejects fewer than two samples, a period that does not fit in the
    /// `N / f_s` record, and a fundamental above Nyquist.
    pub fn new(sample_rate_hz: f64, num_samples: usize, period_s: f64) -> Result<Self, GridError> {
        if num_samples < 2 {
            return Err(GridError::TooFewSamples(num_samples));
        }
        if !(sample_rate_hz.is_finite() && sample_rate_hz > 0.0) {
            return Err(GridError::InvalidSampleRate(sample_rate_hz));
        }
        if !(period_s.is_finite() && period_s > 0.0) {
            return Err(GridError::InvalidPeriod(period_s));
        }
        let duration_s = num_samples as f64 / sample_rate_hz;
        if period_s >= duration_s {
            return Err(GridError::PeriodExceedsRecord { period_s, duration_s });
        }
        let fundamental_hz = 1.0 / period_s;
        let nyquist_hz = sample_rate_hz / 2.0;
        if fundamental_hz > nyquist_hz {
            return Err(GridError::FundamentalAboveNyquist { fundamental_hz, nyquist_hz });
        }
        Ok(Self { sample_rate_hz, num_samples, period_s })
    }

    pub fn sample_rate_hz(&self) -> f64 {
        self.sample_rate_hz
    }

    pub fn num_samples(&self) -> usize {
        self.num_samples
    }

    pub fn period_s(&self) -> f64 {
        self.period_s
    }

    /// `N / f_s`, the span the period must fit into.
    pub fn record_duration_s(&self) -> f64 {
        self.num_samples as f64 / self.sample_rate_hz
    }

    /// `f_p = 1 / t_p`.
    pub fn fundamental_frequency(&self) -> f64 {
        1.0 / self.period_s
    }

    /// `δ_t = 1 / f_s`.
    pub fn time_increment(&self) -> f64 {
        1.0 / self.sample_rate_hz
    }

    /// `δ_f = f_s / N`, the DFT bin spacing.
    pub fn dft_bin_spacing(&self) -> f64 {
        self.sample_rate_hz / self.num_samples as f64
    }

    /// `N_t = t_p f_s`.
    pub fn samples_per_period(&self) -> f64 {
        self.period_s * self.sample_rate_hz
    }

    /// `N_f = N f_p / f_s`.
    pub fn harmonic_bin_spacing(&self) -> f64 {
        self.num_samples as f64 * self.fundamental_frequency() / self.sample_rate_hz
    }

    /// `n_max = ⌊f_s / (2 f_p)⌋`, the number of harmonics below Nyquist.
    pub fn max_harmonics(&self) -> usize {
        libm::floor(self.sample_rate_hz / (2.0 * self.fundamental_frequency())) as usize
    }

    pub fn exactness(&self) -> GridExactness {
        let nt = self.samples_per_period();
        let nf = self.harmonic_bin_spacing();
        let nt_frac = nt - libm::floor(nt);
        let nf_frac = nf - libm::floor(nf);
        let near = |frac: f64| frac.min(1.0 - frac) <= EXACT_TOLERANCE;
        GridExactness {
            exact: near(nt_frac) && near(nf_frac),
            samples_per_period_frac: nt_frac,
            harmonic_spacing_frac: nf_frac,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.exactness().exact
    }

    /// `N_t` rounded to an integer, if the grid is exact.
    pub fn integral_period(&self) -> Option<usize> {
        self.is_exact()
            .then(|| libm::round(self.samples_per_period()) as usize)
    }

    /// Scale factors and resampled-grid parameters for both alignment
    /// directions.
    pub fn alignment_scale(&self) -> AlignmentScale {
        let n = self.num_samples as f64;
        let fs = self.sample_rate_hz;
        let tp = self.period_s;
        let fp = self.fundamental_frequency();
        let a = self.samples_per_period() / self.harmonic_bin_spacing();
        let b = self.harmonic_bin_spacing() / self.samples_per_period();
        let new_freq_increment_hz = fp * fp / fs;
        let new_time_increment_s = tp * tp * fs / n;
        AlignmentScale {
            a,
            b,
            new_freq_increment_hz,
            new_time_increment_s,
            freq_end_hz: (n - 1.0) * fp * fp / fs,
            time_end_s: (n - 1.0) * tp * tp * fs / n,
            freq_end_index: n * (n - 1.0) * fp * fp / (fs * fs) + 1.0,
            time_end_index: (n - 1.0) * tp * tp * fs * fs / n + 1.0,
        }
    }

    /// `Mf = N / (f_s² t_p²)`, so that `n_end = (N - 1) Mf + 1`.
    pub fn freq_end_multiplier(&self) -> f64 {
        let fs = self.sample_rate_hz;
        let tp = self.period_s;
        self.num_samples as f64 / (fs * fs * tp * tp)
    }

    /// `Mt = f_s² t_p² / N`.
    pub fn time_end_multiplier(&self) -> f64 {
        let fs = self.sample_rate_hz;
        let tp = self.period_s;
        fs * fs * tp * tp / self.num_samples as f64
    }

    /// Re-derives the scale factor through the `a f_p = t_p f_s²/N ·
    /// δ_t/δ_f` chain and checks it against [`GridSpec::alignment_scale`].
    ///
    /// Two substitutions are evaluated:
    ///
    /// * increments counted in samples (`δ_t = δ_f = 1`), which must give
    ///   back `a = N_t / N_f`;
    /// * the classical constraint `δ_t/δ_f = N / (f_s² t_p²)`, which must
    ///   give `a = 1`.
    pub fn scale_identity_check(&self) -> ScaleResiduals {
        let n = self.num_samples as f64;
        let fs = self.sample_rate_hz;
        let tp = self.period_s;
        let prefactor = tp * tp * fs * fs / n;
        let a_sample_units = prefactor * 1.0;
        let classical_ratio = n / (fs * fs * tp * tp);
        let a_classical = prefactor * classical_ratio;
        let a = self.alignment_scale().a;
        ScaleResiduals {
            a_sample_units,
            a_classical,
            classical_residual: libm::fabs(a_classical - 1.0),
            alignment_residual: libm::fabs(a_sample_units - a) / a,
        }
    }
}

/// Whether `N_t` and `N_f` are integral, with their fractional parts
/// (`x - ⌊x⌋`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridExactness {
    pub exact: bool,
    pub samples_per_period_frac: f64,
    pub harmonic_spacing_frac: f64,
}

/// Scale factors for both alignment directions.
///
/// End indices are stored 1-based (fractional), as the closed forms give
/// them. The `*_0based` accessors give the same points as 0-based source
/// indices.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlignmentScale {
    /// Frequency-axis scale, `N_t / N_f`.
    pub a: f64,
    /// Time-axis scale, `N_f / N_t`.
    pub b: f64,
    /// `δ'_f = f_p² / f_s`.
    pub new_freq_increment_hz: f64,
    /// `δ'_t = t_p² f_s / N`.
    pub new_time_increment_s: f64,
    pub freq_end_hz: f64,
    pub time_end_s: f64,
    /// `n_end`, 1-based.
    pub freq_end_index: f64,
    /// `m_end`, 1-based.
    pub time_end_index: f64,
}

impl AlignmentScale {
    pub fn freq_end_index_0based(&self) -> f64 {
        self.freq_end_index - 1.0
    }

    pub fn time_end_index_0based(&self) -> f64 {
        self.time_end_index - 1.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaleResiduals {
    /// Scale factor with increments measured in samples.
    pub a_sample_units: f64,
    /// Scale factor under the classical constraint; should be 1.
    pub a_classical: f64,
    /// `|a_classical - 1|`.
    pub classical_residual: f64,
    /// Relative gap between `a_sample_units` and `N_t / N_f`.
    pub alignment_residual: f64,
}

impl ScaleResiduals {
    pub fn max_residual(&self) -> f64 {
        self.classical_residual.max(self.alignment_residual)
    }
}
