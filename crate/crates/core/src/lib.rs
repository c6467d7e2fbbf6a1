//! Time/frequency alignment for sampled periodic signals.
//!
//! A periodic record of `N` samples at rate `f_s` with period `t_p` has
//! `N_t = t_p f_s` samples per period, while its DFT places harmonics every
//! `N_f = N f_p / f_s` bins. Rescaling one axis by `a = N_t / N_f` (or the
//! dual `b = 1/a`) makes the two spacings equal, so the time record and its
//! spectrum can be compared sample-for-sample. The [`fxt`] module builds on
//! that to score candidate periods.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod error;
pub mod fft;
pub mod fxt;
pub mod grid;
pub mod resample;
pub mod spectral;

pub use error::{Error, GridError, Result};
pub use fxt::{candidate_periods, fxt_combine, pitch_sweep, FxtReport, FxtScorer, PitchEstimate};
pub use grid::{AlignmentScale, ScaleResiduals, GridExactness, GridSpec};
pub use resample::{linear_interpolate, resample_spectrum, resample_time, AlignedSequence, Domain};
pub use spectral::{
    bin_of_frequency, dft, idft, make_harmonic, make_impulse_train, make_periodic, SampledSignal,
    Spectrum,
};

pub use num_complex::Complex64;
