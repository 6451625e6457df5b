//! Order-zero Bessel functions, the Hankel function `H0¹` and the
//! exponential integral `E1` for real positive arguments.
//!
//! Bessel functions use three regimes: the ascending series for `x ≤ 8`,
//! Miller's backward recurrence with the Neumann series for `Y0` on
//! `8 < x < 25`, and the Hankel asymptotic expansion for `x ≥ 25`. The
//! asymptotic series has its smallest term near `e^{-2x}`, so it cannot be
//! used much below 20 at double precision.

use core::f64::consts::{FRAC_2_PI, FRAC_PI_4, PI};

use num_complex::Complex64;
use num_traits::Float;

use crate::error::{Error, Result};

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

const SERIES_LIMIT: f64 = 8.0;
const ASYMPTOTIC_LIMIT: f64 = 25.0;

/// Bessel function of the first kind of order zero.
///
/// Total on finite input; `J0` is even, so negative arguments are folded.
pub fn bessel_j0(x: f64) -> f64 {
    let x = x.abs();
    if x <= SERIES_LIMIT {
        j0_series(x)
    } else if x < ASYMPTOTIC_LIMIT {
        miller(x).0
    } else {
        asymptotic(x).0
    }
}

/// Bessel function of the second kind of order zero, `x > 0`.
pub fn bessel_y0(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain {
            function: "bessel_y0",
            x,
        });
    }
    Ok(if x <= SERIES_LIMIT {
        y0_series(x)
    } else if x < ASYMPTOTIC_LIMIT {
        miller(x).1
    } else {
        asymptotic(x).1
    })
}

/// Hankel function of the first kind, `H0¹(x) = J0(x) + i·Y0(x)`, `x > 0`.
pub fn hankel1_0(x: f64) -> Result<Complex64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain {
            function: "hankel1_0",
            x,
        });
    }
    let (j, y) = if x <= SERIES_LIMIT {
        (j0_series(x), y0_series(x))
    } else if x < ASYMPTOTIC_LIMIT {
        miller(x)
    } else {
        asymptotic(x)
    };
    Ok(Complex64::new(j, y))
}

fn j0_series(x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut k = 1.0;
    while term.abs() > 1e-17 * sum.abs().max(1e-300) || k < 3.0 {
        term *= -q / (k * k);
        sum += term;
        k += 1.0;
        if k > 200.0 {
            break;
        }
    }
    sum
}

fn y0_series(x: f64) -> f64 {
    // Y0 = (2/π)(ln(x/2) + γ) J0 + (2/π) Σ_{k≥1} (-1)^{k+1} H_k (x²/4)^k / (k!)²
    let q = 0.25 * x * x;
    let mut term = 1.0;
    let mut harmonic = 0.0;
    let mut sum = 0.0;
    let mut k = 1.0;
    loop {
        term *= -q / (k * k);
        harmonic += 1.0 / k;
        let contribution = -term * harmonic;
        sum += contribution;
        if contribution.abs() <= 1e-17 * sum.abs().max(1e-300) && k > 2.0 {
            break;
        }
        k += 1.0;
        if k > 200.0 {
            break;
        }
    }
    FRAC_2_PI * (((0.5 * x).ln() + EULER_GAMMA) * j0_series(x) + sum)
}

/// `(J0, Y0)` from Miller's backward recurrence, normalized by
/// `J0 + 2 Σ J_{2k} = 1`, with `Y0` from the Neumann series
/// `Y0 = (2/π)(ln(x/2) + γ) J0 − (4/π) Σ (−1)^k J_{2k} / k`.
fn miller(x: f64) -> (f64, f64) {
    let start = 2 * ((x as usize + 32) / 2);
    let mut next = 0.0; // J_{n+1}
    let mut current = 1e-30; // J_n
    let mut norm = 0.0;
    let mut neumann = 0.0;
    let mut n = start;
    while n > 0 {
        if n % 2 == 0 {
            let k = (n / 2) as f64;
            norm += 2.0 * current;
            let sign = if (n / 2) % 2 == 0 { 1.0 } else { -1.0 };
            neumann += sign * current / k;
        }
        let prev = 2.0 * n as f64 / x * current - next;
        next = current;
        current = prev;
        n -= 1;
        if current.abs() > 1e250 {
            current *= 1e-250;
            next *= 1e-250;
            norm *= 1e-250;
            neumann *= 1e-250;
        }
    }
    norm += current;
    let j0 = current / norm;
    let y0 = FRAC_2_PI * (((0.5 * x).ln() + EULER_GAMMA) * j0) - 2.0 * FRAC_2_PI * neumann / norm;
    (j0, y0)
}

fn asymptotic(x: f64) -> (f64, f64) {
    // Hankel expansion: P ~ Σ (-1)^j b_{2j}/x^{2j}, Q ~ Σ (-1)^{j+1} b_{2j+1}/x^{2j+1},
    // b_k = b_{k-1} (2k-1)² / (8k).
    let mut p = 1.0;
    let mut q = 0.0;
    let mut b = 1.0;
    let mut last = f64::INFINITY;
    for k in 1..60 {
        let kf = k as f64;
        b *= (2.0 * kf - 1.0) * (2.0 * kf - 1.0) / (8.0 * kf * x);
        if b > last || b < 1e-18 {
            break;
        }
        last = b;
        match k % 4 {
            0 => p += b,
            1 => q -= b,
            2 => p -= b,
            _ => q += b,
        }
    }
    let chi = x - FRAC_PI_4;
    let (s, c) = chi.sin_cos();
    let amp = (2.0 / (PI * x)).sqrt();
    (amp * (p * c - q * s), amp * (p * s + q * c))
}

/// Exponential integral `E1(x) = ∫_x^∞ e^{-s}/s ds`, `x > 0`.
pub fn expint_e1(x: f64) -> Result<f64> {
    if !(x > 0.0) || x.is_nan() {
        return Err(Error::Domain {
            function: "expint_e1",
            x,
        });
    }
    if x.is_infinite() {
        return Ok(0.0);
    }
    if x <= 1.0 {
        let mut term = 1.0;
        let mut sum = 0.0;
        let mut k = 1.0;
        loop {
            term *= -x / k;
            let contribution = term / k;
            sum += contribution;
            if contribution.abs() < 1e-18 {
                break;
            }
            k += 1.0;
        }
        return Ok(-EULER_GAMMA - x.ln() - sum);
    }
    // Modified Lentz evaluation of the continued fraction.
    const TINY: f64 = 1e-300;
    let mut b = x + 1.0;
    let mut c = 1.0 / TINY;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..1000 {
        let an = -((i * i) as f64);
        b += 2.0;
        d = 1.0 / (an * d + b);
        c = b + an / c;
        let delta = c * d;
        h *= delta;
        if (delta - 1.0).abs() < 1e-16 {
            break;
        }
    }
    Ok(h * (-x).exp())
}
