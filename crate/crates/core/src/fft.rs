//! Arbitrary-length FFT.
//!
//! Power-of-two lengths run an iterative radix-2 transform. Every other
//! length goes through Bluestein's chirp-z identity
//! `kn = (k² + n² - (k-n)²) / 2`, which turns the DFT into a circular
//! convolution evaluated with a power-of-two transform of length
//! `M >= 2N - 1`.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

/// A precomputed transform of a fixed length.
#[derive(Debug, Clone)]
pub struct DftPlan {
    len: usize,
    kind: Kind,
}

#[derive(Debug, Clone)]
enum Kind {
    Radix2(Radix2),
    Bluestein(Bluestein),
}

impl DftPlan {
    /// Panics if `len` is zero.
    pub fn new(len: usize) -> Self {
        assert!(len > 0, "transform length must be positive");
        let kind = if len.is_power_of_two() {
            Kind::Radix2(Radix2::new(len))
        } else {
            Kind::Bluestein(Bluestein::new(len))
        };
        Self { len, kind }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// In-place `X_k = Σ x_n e^{-j2πkn/N}`.
    pub fn forward(&self, buf: &mut [Complex64]) {
        assert_eq!(buf.len(), self.len, "buffer length does not match plan");
        match &self.kind {
            Kind::Radix2(r) => r.process(buf, false),
            Kind::Bluestein(b) => b.forward(buf),
        }
    }

    /// In-place `x_n = (1/N) Σ X_k e^{+j2πkn/N}`.
    pub fn inverse(&self, buf: &mut [Complex64]) {
        assert_eq!(buf.len(), self.len, "buffer length does not match plan");
        // conj(F(conj(X))) / N
        for v in buf.iter_mut() {
            *v = v.conj();
        }
        self.forward(buf);
        let scale = 1.0 / self.len as f64;
        for v in buf.iter_mut() {
            *v = v.conj() * scale;
        }
    }
}

/// `e^{-j 2π num / den}`, with `num` already reduced modulo `den`.
fn unit_root(num: u64, den: u64) -> Complex64 {
    let angle = -2.0 * PI * (num as f64) / (den as f64);
    Complex64::new(libm::cos(angle), libm::sin(angle))
}

#[derive(Debug, Clone)]
struct Radix2 {
    len: usize,
    /// `e^{-j2πk/N}` for `k < N/2`.
    twiddles: Vec<Complex64>,
}

impl Radix2 {
    fn new(len: usize) -> Self {
        let twiddles = (0..len / 2)
            .map(|k| unit_root(k as u64, len as u64))
            .collect();
        Self { len, twiddles }
    }

    fn process(&self, buf: &mut [Complex64], inverse: bool) {
        let n = self.len;
        if n <= 1 {
            return;
        }
        let bits = n.trailing_zeros();
        for i in 0..n {
            let j = i.reverse_bits() >> (usize::BITS - bits);
            if j > i {
                buf.swap(i, j);
            }
        }
        let mut size = 2;
        while size <= n {
            let half = size / 2;
            let stride = n / size;
            for start in (0..n).step_by(size) {
                for k in 0..half {
                    let mut w = self.twiddles[k * stride];
                    if inverse {
                        w = w.conj();
                    }
                    let t = buf[start + k + half] * w;
                    let u = buf[start + k];
                    buf[start + k] = u + t;
                    buf[start + k + half] = u - t;
                }
            }
            size *= 2;
        }
    }
}

#[derive(Debug, Clone)]
struct Bluestein {
    len: usize,
    inner: Radix2,
    /// `w_k = e^{-jπk²/N}`.
    chirp: Vec<Complex64>,
    /// Forward transform of the conjugate chirp, wrapped to the inner length
    /// and pre-divided by it.
    kernel: Vec<Complex64>,
}

impl Bluestein {
    fn new(len: usize) -> Self {
        let inner_len = (2 * len - 1).next_power_of_two();
        let inner = Radix2::new(inner_len);
        let two_n = 2 * len as u64;
        // k² mod 2N keeps the angle argument small and exact.
        let chirp: Vec<Complex64> = (0..len as u64)
            .map(|k| unit_root((k * k) % two_n, two_n))
            .collect();

        let mut kernel = vec![Complex64::new(0.0, 0.0); inner_len];
        kernel[0] = chirp[0].conj();
        for k in 1..len {
            let c = chirp[k].conj();
            kernel[k] = c;
            kernel[inner_len - k] = c;
        }
        inner.process(&mut kernel, false);
        let scale = 1.0 / inner_len as f64;
        for v in kernel.iter_mut() {
            *v *= scale;
        }
        Self { len, inner, chirp, kernel }
    }

    fn forward(&self, buf: &mut [Complex64]) {
        let mut work = vec![Complex64::new(0.0, 0.0); self.inner.len];
        for ((w, x), c) in work.iter_mut().zip(buf.iter()).zip(&self.chirp) {
            *w = x * c;
        }
        self.inner.process(&mut work, false);
        for (w, k) in work.iter_mut().zip(&self.kernel) {
            *w *= k;
        }
        self.inner.process(&mut work, true);
        for ((out, w), c) in buf.iter_mut().zip(&work).zip(&self.chirp) {
            *out = w * c;
        }
        debug_assert_eq!(buf.len(), self.len);
    }
}
