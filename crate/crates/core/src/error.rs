use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

/// Reasons a `(f_s, N, t_p)` triple is rejected.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GridError {
    TooFewSamples(usize),
    InvalidSampleRate(f64),
    InvalidPeriod(f64),
    /// No full period fits in the record.
    PeriodExceedsRecord { period_s: f64, duration_s: f64 },
    /// `1/t_p` lies above `f_s/2`.
    FundamentalAboveNyquist { fundamental_hz: f64, nyquist_hz: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    Grid(GridError),
    InvalidInput(&'static str),
    LengthMismatch { expected: usize, found: usize },
    OutOfRange { value: f64, min: f64, max: f64 },
    /// An operation needs integral `N_t` but the grid has a fractional one.
    GridInexact { samples_per_period: f64 },
    /// A one-period shape is longer than the period.
    Overlap { shape_len: usize, period_len: usize },
    Aliasing { requested: usize, max: usize },
    NonRealSignal { residue: f64 },
    InvalidCandidate { period_s: f64, duration_s: f64 },
}

impl fmt::Display for GridError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GridError::TooFewSamples(n) => write!(f, "need at least 2 samples, got {n}"),
            GridError::InvalidSampleRate(fs) => {
                write!(f, "sample rate must be positive and finite, got {fs}")
            }
            GridError::InvalidPeriod(tp) => {
                write!(f, "period must be positive and finite, got {tp}")
            }
            GridError::PeriodExceedsRecord { period_s, duration_s } => write!(
                f,
                "period {period_s} s does not fit in a record of {duration_s} s"
            ),
            GridError::FundamentalAboveNyquist { fundamental_hz, nyquist_hz } => write!(
                f,
                "fundamental {fundamental_hz} Hz exceeds the Nyquist frequency {nyquist_hz} Hz"
            ),
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Grid(e) => write!(f, "invalid grid: {e}"),
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::LengthMismatch { expected, found } => {
                write!(f, "length mismatch: expected {expected}, found {found}")
            }
            Error::OutOfRange { value, min, max } => {
                write!(f, "value {value} outside [{min}, {max}]")
            }
            Error::GridInexact { samples_per_period } => write!(
                f,
                "grid is not exact: {samples_per_period} samples per period is not an integer"
            ),
            Error::Overlap { shape_len, period_len } => write!(
                f,
                "shape of {shape_len} samples overlaps a period of {period_len} samples"
            ),
            Error::Aliasing { requested, max } => write!(
                f,
                "{requested} harmonics requested but only {max} fit below Nyquist"
            ),
            Error::NonRealSignal { residue } => {
                write!(f, "inverse transform is not real (imaginary residue {residue:e})")
            }
            Error::InvalidCandidate { period_s, duration_s } => write!(
                f,
                "candidate period {period_s} s is not shorter than the record ({duration_s} s)"
            ),
        }
    }
}

impl core::error::Error for GridError {}

impl core::error::Error for Error {}

impl From<GridError> for Error {
    fn from(e: GridError) -> Self {
        Error::Grid(e)
    }
}
