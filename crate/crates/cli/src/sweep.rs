//! Parallel candidate evaluation.
//!
//! Each candidate is scored independently and results are collected in
//! candidate order, so the estimate is bit-identical to the sequential
//! [`fxt_core::pitch_sweep`] whatever the thread count.

use fxt_core::fxt::checked_candidates;
use fxt_core::{FxtScorer, PitchEstimate, Result, SampledSignal};
use rayon::prelude::*;

pub fn parallel_pitch_sweep(
    signal: &SampledSignal,
    period_min_s: f64,
    period_max_s: f64,
    num_candidates: usize,
) -> Result<PitchEstimate> {
    let scorer = FxtScorer::new(signal);
    let candidates = checked_candidates(&scorer, period_min_s, period_max_s, num_candidates)?;
    let scores = candidates
        .par_iter()
        .map(|&p| scorer.score(p).map(|s| (p, s)))
        .collect::<Result<Vec<_>>>()?;
    PitchEstimate::from_scores(scores)
}
