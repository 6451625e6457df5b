//! Radix-2 FFT on square power-of-two grids.
//!
//! Grids are stored row-major, `data[row * n + col]`. Forward transforms
//! are unscaled; inverse transforms carry the full `1/n²` factor.

use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
use num_traits::Float;

use crate::error::{Error, Result};

/// Precomputed twiddles and bit-reversal table for an `n × n` transform.
#[derive(Clone, Debug)]
pub struct Fft2 {
    n: usize,
    twiddles: Vec<Complex64>,
    bitrev: Vec<usize>,
}

impl Fft2 {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 || !n.is_power_of_two() {
            return Err(Error::invalid(format!(
                "FFT side length must be a power of two >= 2, got {n}"
            )));
        }
        let bits = n.trailing_zeros();
        let bitrev = (0..n)
            .map(|i| i.reverse_bits() >> (usize::BITS - bits))
            .collect();
        let twiddles = (0..n / 2)
            .map(|k| {
                let (s, c) = (-2.0 * PI * k as f64 / n as f64).sin_cos();
                Complex64::new(c, s)
            })
            .collect();
        Ok(Fft2 {
            n,
            twiddles,
            bitrev,
        })
    }

    pub fn side(&self) -> usize {
        self.n
    }

    pub fn forward(&self, data: &mut [Complex64]) {
        self.transform(data, false);
    }

    pub fn inverse(&self, data: &mut [Complex64]) {
        self.transform(data, true);
        let scale = 1.0 / (self.n * self.n) as f64;
        data.iter_mut().for_each(|z| *z *= scale);
    }

    fn transform(&self, data: &mut [Complex64], inverse: bool) {
        let n = self.n;
        assert_eq!(data.len(), n * n, "grid does not match the FFT plan");
        for row in data.chunks_exact_mut(n) {
            self.fft1(row, inverse);
        }
        let mut column = alloc::vec![Complex64::new(0.0, 0.0); n];
        for c in 0..n {
            for (r, v) in column.iter_mut().enumerate() {
                *v = data[r * n + c];
            }
            self.fft1(&mut column, inverse);
            for (r, v) in column.iter().enumerate() {
                data[r * n + c] = *v;
            }
        }
    }

    fn fft1(&self, buf: &mut [Complex64], inverse: bool) {
        let n = self.n;
        for i in 0..n {
            let j = self.bitrev[i];
            if i < j {
                buf.swap(i, j);
            }
        }
        let mut len = 2;
        while len <= n {
            let half = len / 2;
            let stride = n / len;
            for start in (0..n).step_by(len) {
                for k in 0..half {
                    let mut w = self.twiddles[k * stride];
                    if inverse {
                        w = w.conj();
                    }
                    let u = buf[start + k];
                    let v = buf[start + k + half] * w;
                    buf[start + k] = u + v;
                    buf[start + k + half] = u - v;
                }
            }
            len <<= 1;
        }
    }
}

fn side_of(grid: &[Complex64]) -> Result<usize> {
    let n = (grid.len() as f64).sqrt().round() as usize;
    if n * n != grid.len() {
        return Err(Error::invalid(format!(
            "grid of {} samples is not square",
            grid.len()
        )));
    }
    Ok(n)
}

/// Unscaled forward 2-D transform of a square row-major grid.
pub fn fft2(grid: &[Complex64]) -> Result<Vec<Complex64>> {
    let plan = Fft2::new(side_of(grid)?)?;
    let mut out = grid.to_vec();
    plan.forward(&mut out);
    Ok(out)
}

/// Inverse 2-D transform, scaled by `1/n²`.
pub fn ifft2(grid: &[Complex64]) -> Result<Vec<Complex64>> {
    let plan = Fft2::new(side_of(grid)?)?;
    let mut out = grid.to_vec();
    plan.inverse(&mut out);
    Ok(out)
}
