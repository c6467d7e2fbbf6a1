//! Sampled signals, their full-length DFT, and synthesis of impulse trains
//! and periodic signals.
//!
//! A periodic signal is modelled as an impulse train convolved with one
//! period's shape. The train's DFT is itself a train of equal impulses
//! `N_f` bins apart, so the DFT of any periodic signal is nonzero only at
//! multiples of `N_f`.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fft::DftPlan;
use crate::grid::GridSpec;

/// Imaginary residue (relative to signal scale) tolerated by [`idft`].
pub const REAL_RESIDUE_TOLERANCE: f64 = 1e-9;

/// A real-valued record and its sample rate.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledSignal {
    samples: Vec<f64>,
    sample_rate_hz: f64,
}

impl SampledSignal {
    /// Requires at least two finite samples and a positive finite rate.
    pub fn new(samples: Vec<f64>, sample_rate_hz: f64) -> Result<Self> {
        if samples.len() < 2 {
            return Err(Error::InvalidInput("signal needs at least 2 samples"));
        }
        if !(sample_rate_hz.is_finite() && sample_rate_hz > 0.0) {
            return Err(Error::InvalidInput("sample rate must be positive and finite"));
        }
        if samples.iter().any(|s| !s.is_finite()) {
            return Err(Error::InvalidInput("signal contains non-finite samples"));
        }
        Ok(Self { samples, sample_rate_hz })
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn into_samples(self) -> Vec<f64> {
        self.samples
    }

    pub fn sample_rate_hz(&self) -> f64 {
        self.sample_rate_hz
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// `N / f_s`.
    pub fn duration_s(&self) -> f64 {
        self.samples.len() as f64 / self.sample_rate_hz
    }

    /// Multiplies every sample by `gain`.
    pub fn scaled(&self, gain: f64) -> Result<Self> {
        Self::new(self.samples.iter().map(|s| s * gain).collect(), self.sample_rate_hz)
    }
}

/// All `N` DFT bins over `[0, f_s)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    bins: Vec<Complex64>,
    bin_spacing_hz: f64,
}

impl Spectrum {
    pub fn new(bins: Vec<Complex64>, bin_spacing_hz: f64) -> Result<Self> {
        if bins.len() < 2 {
            return Err(Error::InvalidInput("spectrum needs at least 2 bins"));
        }
        if !(bin_spacing_hz.is_finite() && bin_spacing_hz > 0.0) {
            return Err(Error::InvalidInput("bin spacing must be positive and finite"));
        }
        Ok(Self { bins, bin_spacing_hz })
    }

    pub fn bins(&self) -> &[Complex64] {
        &self.bins
    }

    pub fn bin_spacing_hz(&self) -> f64 {
        self.bin_spacing_hz
    }

    pub fn len(&self) -> usize {
        self.bins.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bins.is_empty()
    }

    /// `f_s = N δ_f`.
    pub fn sample_rate_hz(&self) -> f64 {
        self.bin_spacing_hz * self.bins.len() as f64
    }

    pub fn magnitudes(&self) -> Vec<f64> {
        self.bins.iter().map(|b| b.norm()).collect()
    }

    /// Largest `|X_k - conj(X_{N-k})|` over `1 <= k < N`, relative to the
    /// peak magnitude. Zero for an exactly real-input spectrum.
    pub fn conjugate_asymmetry(&self) -> f64 {
        let n = self.bins.len();
        let scale = self.bins.iter().map(|b| b.norm()).fold(0.0, f64::max);
        if scale == 0.0 {
            return 0.0;
        }
        (1..n)
            .map(|k| (self.bins[k] - self.bins[n - k].conj()).norm())
            .fold(0.0, f64::max)
            / scale
    }
}

/// Forward DFT of a real signal, any length.
pub fn dft(signal: &SampledSignal) -> Spectrum {
    let n = signal.len();
    let mut buf: Vec<Complex64> = signal
        .samples
        .iter()
        .map(|&s| Complex64::new(s, 0.0))
        .collect();
    DftPlan::new(n).forward(&mut buf);
    Spectrum { bins: buf, bin_spacing_hz: signal.sample_rate_hz / n as f64 }
}

/// Inverse DFT. Fails if the result is not real to within
/// [`REAL_RESIDUE_TOLERANCE`] of the signal scale.
pub fn idft(spectrum: &Spectrum) -> Result<SampledSignal> {
    let n = spectrum.len();
    let mut buf = spectrum.bins.clone();
    DftPlan::new(n).inverse(&mut buf);
    let scale = buf.iter().map(|c| c.re.abs()).fold(0.0, f64::max);
    let residue = buf.iter().map(|c| c.im.abs()).fold(0.0, f64::max);
    if residue > REAL_RESIDUE_TOLERANCE * scale.max(1.0) {
        return Err(Error::NonRealSignal { residue });
    }
    SampledSignal::new(buf.into_iter().map(|c| c.re).collect(), spectrum.sample_rate_hz())
}

/// `round(N f / f_s)` clamped to `[0, N-1]`, ties away from zero.
pub fn bin_of_frequency(freq_hz: f64, spec: &GridSpec) -> Result<usize> {
    let fs = spec.sample_rate_hz();
    if !(0.0..=fs).contains(&freq_hz) {
        return Err(Error::OutOfRange { value: freq_hz, min: 0.0, max: fs });
    }
    let n = spec.num_samples();
    let k = libm::round(n as f64 * freq_hz / fs) as usize;
    Ok(k.min(n - 1))
}

fn exact_period(spec: &GridSpec) -> Result<usize> {
    spec.integral_period().ok_or(Error::GridInexact {
        samples_per_period: spec.samples_per_period(),
    })
}

/// Unit impulses every `N_t` samples, starting at 0. The grid must be exact.
pub fn make_impulse_train(spec: &GridSpec) -> Result<SampledSignal> {
    make_periodic(&[1.0], spec)
}

/// One period's `shape` repeated every `N_t` samples: the circular
/// convolution of the impulse train with `shape`.
pub fn make_periodic(shape: &[f64], spec: &GridSpec) -> Result<SampledSignal> {
    let period = exact_period(spec)?;
    if shape.is_empty() {
        return Err(Error::InvalidInput("period shape is empty"));
    }
    if shape.len() > period {
        return Err(Error::Overlap { shape_len: shape.len(), period_len: period });
    }
    let mut samples = vec![0.0; spec.num_samples()];
    for start in (0..samples.len()).step_by(period) {
        for (dst, &h) in samples[start..].iter_mut().zip(shape) {
            *dst = h;
        }
    }
    SampledSignal::new(samples, spec.sample_rate_hz())
}

/// `x_n = Σ_m A_m cos(2π m f_p n δ_t)` for `m = 1..=amplitudes.len()`.
pub fn make_harmonic(spec: &GridSpec, amplitudes: &[f64]) -> Result<SampledSignal> {
    let max = spec.max_harmonics();
    if amplitudes.len() > max {
        return Err(Error::Aliasing { requested: amplitudes.len(), max });
    }
    if amplitudes.iter().any(|a| !a.is_finite()) {
        return Err(Error::InvalidInput("harmonic amplitudes must be finite"));
    }
    let cycles_per_sample = spec.fundamental_frequency() / spec.sample_rate_hz();
    let samples = (0..spec.num_samples())
        .map(|n| {
            amplitudes
                .iter()
                .zip(1u32..)
                .map(|(&amp, m)| {
                    // reduce to one cycle before scaling by 2π
                    let cycles = m as f64 * n as f64 * cycles_per_sample;
                    amp * libm::cos(2.0 * PI * (cycles - libm::floor(cycles)))
                })
                .sum()
        })
        .collect();
    SampledSignal::new(samples, spec.sample_rate_hz())
}

/// Circular convolution `(x ⊛ y)_n = Σ_k x_k y_{(n-k) mod N}` via the DFT.
pub fn circular_convolve(x: &[f64], y: &[f64]) -> Result<Vec<f64>> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch { expected: x.len(), found: y.len() });
    }
    if x.is_empty() {
        return Ok(Vec::new());
    }
    let plan = DftPlan::new(x.len());
    let mut fx: Vec<Complex64> = x.iter().map(|&v| Complex64::new(v, 0.0)).collect();
    let mut fy: Vec<Complex64> = y.iter().map(|&v| Complex64::new(v, 0.0)).collect();
    plan.forward(&mut fx);
    plan.forward(&mut fy);
    for (a, b) in fx.iter_mut().zip(&fy) {
        *a *= b;
    }
    plan.inverse(&mut fx);
    Ok(fx.into_iter().map(|c| c.re).collect())
}
