//! Reference implementations that share no code with the crate.

#![allow(dead_code)]

use std::f64::consts::PI;

/// O(N²) DFT by direct summation, returning `(re, im)` pairs.
pub fn direct_dft(x: &[f64]) -> Vec<(f64, f64)> {
    let n = x.len();
    (0..n)
        .map(|k| {
            let mut re = 0.0;
            let mut im = 0.0;
            for (i, &v) in x.iter().enumerate() {
                let phase = 2.0 * PI * ((k * i) % n) as f64 / n as f64;
                re += v * phase.cos();
                im -= v * phase.sin();
            }
            (re, im)
        })
        .collect()
}

pub fn direct_magnitudes(x: &[f64]) -> Vec<f64> {
    direct_dft(x).into_iter().map(|(re, im)| re.hypot(im)).collect()
}

/// Reads `v` at fractional position `pos`; zero outside `[0, len-1]`.
pub fn lerp_at(v: &[f64], pos: f64) -> f64 {
    if pos > (v.len() - 1) as f64 {
        return 0.0;
    }
    let i = pos.floor() as usize;
    let w = pos - i as f64;
    if w == 0.0 { v[i] } else { v[i] + w * (v[i + 1] - v[i]) }
}

/// Frequency-aligned magnitudes built from physical frequencies: output `q`
/// sits at `q f_p² / f_s` Hz, which is bin `(q f_p² / f_s) / (f_s / N)`.
pub fn longhand_freq_aligned(mags: &[f64], fs: f64, tp: f64) -> Vec<f64> {
    let n = mags.len();
    let fp = 1.0 / tp;
    let new_df = fp * fp / fs;
    let df = fs / n as f64;
    (0..n).map(|q| lerp_at(mags, q as f64 * new_df / df)).collect()
}

/// Time-aligned samples: output `q` sits at `q t_p² f_s / N` seconds, which
/// is sample `t f_s`.
pub fn longhand_time_aligned(x: &[f64], fs: f64, tp: f64) -> Vec<f64> {
    let n = x.len();
    let new_dt = tp * tp * fs / n as f64;
    (0..n).map(|q| lerp_at(x, q as f64 * new_dt * fs)).collect()
}

fn unit_max(v: &[f64]) -> Vec<f64> {
    let m = v.iter().cloned().fold(0.0, f64::max);
    if m > 0.0 { v.iter().map(|x| x / m).collect() } else { v.to_vec() }
}

/// Full scoring pipeline from scratch for precomputed direct-DFT magnitudes.
pub fn longhand_score(x: &[f64], mags: &[f64], fs: f64, tp: f64) -> f64 {
    let t = unit_max(&x.iter().map(|v| v.abs()).collect::<Vec<_>>());
    let s = unit_max(&longhand_freq_aligned(mags, fs, tp));
    let num: f64 = t.iter().zip(&s).map(|(a, b)| a * b).sum();
    let den: f64 = s.iter().sum();
    if den > 0.0 { num / den } else { 0.0 }
}

pub fn cosine_sum(fs: f64, n: usize, fp: f64, amps: &[f64]) -> Vec<f64> {
    (0..n)
        .map(|i| {
            amps.iter()
                .enumerate()
                .map(|(m, a)| a * (2.0 * PI * (m + 1) as f64 * fp * i as f64 / fs).cos())
                .sum()
        })
        .collect()
}
