//! Minimal RIFF/WAVE reader: 16-bit PCM, mono, little-endian.

use std::path::Path;

use fxt_core::SampledSignal;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum WavError {
    #[error("cannot read {path}: {reason}")]
    Io { path: String, reason: String },
    #[error("RIFF header: {0}")]
    Header(&'static str),
    #[error("{chunk:?} chunk: declares {declared} bytes but only {available} remain")]
    Truncated { chunk: String, declared: usize, available: usize },
    #[error("missing {0:?} chunk")]
    MissingChunk(&'static str),
    #[error("\"fmt \" chunk: too short ({0} bytes)")]
    ShortFormat(usize),
    #[error("\"fmt \" chunk: format tag {0} is not integer PCM (1)")]
    NotPcm(u16),
    #[error("\"fmt \" chunk: {0} channels, only mono is supported")]
    Channels(u16),
    #[error("\"fmt \" chunk: {0} bits per sample, only 16 is supported")]
    BitsPerSample(u16),
    #[error("\"fmt \" chunk: sample rate is zero")]
    ZeroSampleRate,
    #[error("\"data\" chunk: odd length {0} for 16-bit samples")]
    OddData(usize),
    #[error("\"data\" chunk: {0} samples, need at least 2")]
    TooShort(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Format {
    tag: u16,
    channels: u16,
    sample_rate: u32,
    bits: u16,
}

fn u16_at(b: &[u8], at: usize) -> u16 {
    u16::from_le_bytes([b[at], b[at + 1]])
}

fn u32_at(b: &[u8], at: usize) -> u32 {
    u32::from_le_bytes([b[at], b[at + 1], b[at + 2], b[at + 3]])
}

/// Parses a WAV image into a signal scaled to `[-1, 1)`.
pub fn parse_wav(bytes: &[u8]) -> Result<SampledSignal, WavError> {
    if bytes.len() < 12 || &bytes[0..4] != b"RIFF" {
        return Err(WavError::Header("not a RIFF file"));
    }
    if &bytes[8..12] != b"WAVE" {
        return Err(WavError::Header("RIFF form type is not WAVE"));
    }

    let mut format = None;
    let mut data = None;
    let mut pos = 12;
    while pos + 8 <= bytes.len() {
        let id = &bytes[pos..pos + 4];
        let size = u32_at(bytes, pos + 4) as usize;
        let body = pos + 8;
        let available = bytes.len() - body;
        if size > available {
            return Err(WavError::Truncated {
                chunk: String::from_utf8_lossy(id).into_owned(),
                declared: size,
                available,
            });
        }
        let chunk = &bytes[body..body + size];
        match id {
            b"fmt " => {
                if size < 16 {
                    return Err(WavError::ShortFormat(size));
                }
                format = Some(Format {
                    tag: u16_at(chunk, 0),
                    channels: u16_at(chunk, 2),
                    sample_rate: u32_at(chunk, 4),
                    bits: u16_at(chunk, 14),
                });
            }
            b"data" => data = Some(chunk),
            _ => {}
        }
        // chunks are word aligned
        pos = body + size + (size & 1);
    }

    let format = format.ok_or(WavError::MissingChunk("fmt "))?;
    if format.tag != 1 {
        return Err(WavError::NotPcm(format.tag));
    }
    if format.channels != 1 {
        return Err(WavError::Channels(format.channels));
    }
    if format.bits != 16 {
        return Err(WavError::BitsPerSample(format.bits));
    }
    if format.sample_rate == 0 {
        return Err(WavError::ZeroSampleRate);
    }
    let data = data.ok_or(WavError::MissingChunk("data"))?;
    if data.len() % 2 != 0 {
        return Err(WavError::OddData(data.len()));
    }
    let samples: Vec<f64> = data
        .chunks_exact(2)
        .map(|c| i16::from_le_bytes([c[0], c[1]]) as f64 / 32768.0)
        .collect();
    if samples.len() < 2 {
        return Err(WavError::TooShort(samples.len()));
    }
    Ok(SampledSignal::new(samples, format.sample_rate as f64)
        .expect("PCM samples are finite and the rate is positive"))
}

/// Reads a WAV file, optionally truncating or zero-padding to `num_samples`.
pub fn read_wav(path: &Path, num_samples: Option<usize>) -> Result<SampledSignal, WavError> {
    let bytes = std::fs::read(path).map_err(|e| WavError::Io {
        path: path.display().to_string(),
        reason: e.to_string(),
    })?;
    let signal = parse_wav(&bytes)?;
    match num_samples {
        Some(n) if n != signal.len() => {
            let rate = signal.sample_rate_hz();
            let mut samples = signal.into_samples();
            samples.resize(n, 0.0);
            SampledSignal::new(samples, rate).map_err(|_| WavError::TooShort(n))
        }
        _ => Ok(signal),
    }
}

/// Encodes 16-bit mono PCM as a canonical 44-byte-header WAV image.
pub fn encode_pcm16(samples: &[i16], sample_rate: u32) -> Vec<u8> {
    let data_len = (samples.len() * 2) as u32;
    let mut out = Vec::with_capacity(44 + data_len as usize);
    out.extend_from_slice(b"RIFF");
    out.extend_from_slice(&(36 + data_len).to_le_bytes());
    out.extend_from_slice(b"WAVE");
    out.extend_from_slice(b"fmt ");
    out.extend_from_slice(&16u32.to_le_bytes());
    out.extend_from_slice(&1u16.to_le_bytes());
    out.extend_from_slice(&1u16.to_le_bytes());
    out.extend_from_slice(&sample_rate.to_le_bytes());
    out.extend_from_slice(&(sample_rate * 2).to_le_bytes());
    out.extend_from_slice(&2u16.to_le_bytes());
    out.extend_from_slice(&16u16.to_le_bytes());
    out.extend_from_slice(b"data");
    out.extend_from_slice(&data_len.to_le_bytes());
    for s in samples {
        out.extend_from_slice(&s.to_le_bytes());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scales_samples() {
        let sig = parse_wav(&encode_pcm16(&[0, 16384, -16384], 8000)).unwrap();
        assert_eq!(sig.samples(), &[0.0, 0.5, -0.5]);
        assert_eq!(sig.sample_rate_hz(), 8000.0);
    }

    #[test]
    fn rejects_stereo() {
        let mut b = encode_pcm16(&[0, 1, 2, 3], 8000);
        b[22] = 2;
        let err = parse_wav(&b).unwrap_err();
        assert_eq!(err, WavError::Channels(2));
        assert!(err.to_string().contains("2 channels"));
    }

    #[test]
    fn rejects_truncated_data() {
        let b = encode_pcm16(&[0, 1, 2, 3], 8000);
        let err = parse_wav(&b[..b.len() - 3]).unwrap_err();
        assert!(matches!(&err, WavError::Truncated { chunk, .. } if chunk == "data"));
        assert!(err.to_string().contains("\"data\""));
    }

    #[test]
    fn rejects_non_pcm_and_other_depths() {
        let mut b = encode_pcm16(&[0, 1], 8000);
        b[20] = 3; // IEEE float
        assert_eq!(parse_wav(&b).unwrap_err(), WavError::NotPcm(3));
        let mut b = encode_pcm16(&[0, 1], 8000);
        b[34] = 24;
        assert_eq!(parse_wav(&b).unwrap_err(), WavError::BitsPerSample(24));
        assert!(matches!(parse_wav(b"RIFX0000WAVE"), Err(WavError::Header(_))));
        assert!(matches!(parse_wav(b"RIFF0000AVI "), Err(WavError::Header(_))));
    }

    #[test]
    fn skips_unknown_chunks_and_pads() {
        let plain = encode_pcm16(&[100, -100, 200], 16000);
        let mut b = plain[..12].to_vec();
        b.extend_from_slice(b"LIST");
        b.extend_from_slice(&3u32.to_le_bytes());
        b.extend_from_slice(b"abc\0"); // odd size plus pad byte
        b.extend_from_slice(&plain[12..]);
        let sig = parse_wav(&b).unwrap();
        assert_eq!(sig.len(), 3);
        assert!(matches!(parse_wav(&plain[..36]), Err(WavError::MissingChunk("data"))));
    }
}
