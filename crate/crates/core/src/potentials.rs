//! Radial test potentials and the norm-smallness bound on their strength.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
use num_traits::Float;

use crate::error::{Error, Result};
use crate::ls::TorusGrid;
use crate::numerics::{bessel_j0, bessel_y0};

/// `p̃(t) = 1 − 10t³ + 15t⁴ − 6t⁵`: falls from 1 to 0 on `[0, 1]` with
/// vanishing first and second derivatives at both ends.
fn smoothstep_down(t: f64) -> f64 {
    1.0 - t * t * t * (10.0 - 15.0 * t + 6.0 * t * t)
}

fn smoothstep_down_d1(t: f64) -> f64 {
    -30.0 * t * t * (1.0 - t) * (1.0 - t)
}

fn smoothstep_down_d2(t: f64) -> f64 {
    -60.0 * t * (1.0 - t) * (1.0 - 2.0 * t)
}

/// Radial cutoff: 1 on `[0, r1]`, 0 on `[r2, ∞)`, `C²` in between.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RadialBump {
    r1: f64,
    r2: f64,
}

impl Default for RadialBump {
    fn default() -> Self {
        RadialBump { r1: 0.8, r2: 0.9 }
    }
}

impl RadialBump {
    pub fn new(r1: f64, r2: f64) -> Result<Self> {
        if !(r1 > 0.0 && r1 < r2 && r2 < 1.0) {
            return Err(Error::invalid("bump radii must satisfy 0 < r1 < r2 < 1"));
        }
        Ok(RadialBump { r1, r2 })
    }

    pub fn r1(&self) -> f64 {
        self.r1
    }

    pub fn r2(&self) -> f64 {
        self.r2
    }

    fn local(&self, r: f64) -> Option<f64> {
        (r > self.r1 && r < self.r2).then(|| (r - self.r1) / (self.r2 - self.r1))
    }

    pub fn value(&self, r: f64) -> f64 {
        if r <= self.r1 {
            1.0
        } else if r >= self.r2 {
            0.0
        } else {
            smoothstep_down((r - self.r1) / (self.r2 - self.r1))
        }
    }

    pub fn derivative(&self, r: f64) -> f64 {
        self.local(r)
            .map_or(0.0, |t| smoothstep_down_d1(t) / (self.r2 - self.r1))
    }

    pub fn second_derivative(&self, r: f64) -> f64 {
        let w = self.r2 - self.r1;
        self.local(r).map_or(0.0, |t| smoothstep_down_d2(t) / (w * w))
    }
}

pub fn bump_phi(r: f64, bump: &RadialBump) -> f64 {
    bump.value(r)
}

/// `σ(r) = 1 + amplitude·φ(r)` with its own radial cutoff.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Conductivity {
    amplitude: f64,
    profile: RadialBump,
}

impl Default for Conductivity {
    fn default() -> Self {
        Conductivity {
            amplitude: 2.0,
            profile: RadialBump { r1: 0.4, r2: 0.7 },
        }
    }
}

impl Conductivity {
    pub fn new(amplitude: f64, profile: RadialBump) -> Result<Self> {
        if !(amplitude > -1.0 && amplitude.is_finite()) {
            return Err(Error::invalid("conductivity must stay positive"));
        }
        Ok(Conductivity { amplitude, profile })
    }

    pub fn sigma(&self, r: f64) -> f64 {
        1.0 + self.amplitude * self.profile.value(r)
    }

    /// `Δ√σ/√σ = (f'' + f'/r)/f` with `f = √σ`; at `r = 0` the radial
    /// Laplacian is `2f''(0)`.
    pub fn laplacian_ratio(&self, r: f64) -> f64 {
        let s = self.sigma(r);
        let s1 = self.amplitude * self.profile.derivative(r);
        let s2 = self.amplitude * self.profile.second_derivative(r);
        let f = s.sqrt();
        let f1 = s1 / (2.0 * f);
        let f2 = s2 / (2.0 * f) - s1 * s1 / (4.0 * s * f);
        let lap = if r == 0.0 { 2.0 * f2 } else { f2 + f1 / r };
        lap / f
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PotentialKind {
    /// `q = α φ`.
    Q1,
    /// `q = Δ√σ/√σ + α φ`.
    Q2,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PotentialSpec {
    pub kind: PotentialKind,
    pub alpha: f64,
    pub bump: RadialBump,
    pub conductivity: Conductivity,
}

impl PotentialSpec {
    pub fn q1(alpha: f64) -> Self {
        PotentialSpec {
            kind: PotentialKind::Q1,
            alpha,
            bump: RadialBump::default(),
            conductivity: Conductivity::default(),
        }
    }

    pub fn q2(alpha: f64) -> Self {
        PotentialSpec {
            kind: PotentialKind::Q2,
            ..Self::q1(alpha)
        }
    }

    pub fn with_alpha(&self, alpha: f64) -> Self {
        PotentialSpec { alpha, ..*self }
    }

    pub fn radial(&self, r: f64) -> f64 {
        let bump = self.alpha * self.bump.value(r);
        match self.kind {
            PotentialKind::Q1 => bump,
            PotentialKind::Q2 => self.conductivity.laplacian_ratio(r) + bump,
        }
    }

    pub fn eval(&self, z: Complex64) -> f64 {
        self.radial(z.norm())
    }

    /// Samples in the storage order of `grid`.
    pub fn sample(&self, grid: &TorusGrid) -> Vec<f64> {
        grid.nodes().map(|z| self.eval(z)).collect()
    }
}

pub fn eval_potential(z: Complex64, spec: &PotentialSpec) -> f64 {
    spec.eval(z)
}

const MAX_RADIUS: f64 = 200.0;

/// Maximizes `f` on `[a, b]` by golden-section search.
fn golden_max<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64) -> f64 {
    let ratio = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - ratio * (b - a);
    let mut d = a + ratio * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..200 {
        if b - a < 1e-12 * b.abs().max(1.0) {
            break;
        }
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - ratio * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + ratio * (b - a);
            fd = f(d);
        }
    }
    fc.max(fd).max(f(a)).max(f(b))
}

/// Scans `f` on `samples` equispaced points of `(0, MAX_RADIUS]` and refines
/// the best `refine` local maxima.
fn scan_max<F: Fn(f64) -> f64>(f: F, samples: usize, refine: usize) -> f64 {
    let step = MAX_RADIUS / samples as f64;
    let values: Vec<f64> = (1..=samples).map(|k| f(k as f64 * step)).collect();
    let mut peaks: Vec<(f64, usize)> = (0..values.len())
        .filter(|&k| {
            let left = k == 0 || values[k - 1] <= values[k];
            let right = k + 1 == values.len() || values[k + 1] <= values[k];
            left && right
        })
        .map(|k| (values[k], k))
        .collect();
    peaks.sort_by(|x, y| y.0.total_cmp(&x.0));
    let mut best = 0.0f64;
    for &(v, k) in peaks.iter().take(refine) {
        let r = (k + 1) as f64 * step;
        let lo = (r - step).max(step * 1e-3);
        let hi = (r + step).min(MAX_RADIUS);
        best = best.max(v).max(golden_max(&f, lo, hi));
    }
    best
}

/// `(1/4) max_{0<r≤200} √r |Y0(r)|`.
pub fn c_hat_bessel_term() -> f64 {
    let f = |r: f64| r.sqrt() * bessel_y0(r).map_or(0.0, f64::abs);
    scan_max(f, 100_000, 16) / 4.0
}

// Positive half of the 16-point Gauss–Legendre rule, reused for the arcs.
const GL_NODES: [f64; 8] = [
    0.989_400_934_991_649_9,
    0.944_575_023_073_232_6,
    0.865_631_202_387_831_7,
    0.755_404_408_355_003,
    0.617_876_244_402_643_7,
    0.458_016_777_657_227_4,
    0.281_603_550_779_258_9,
    0.095_012_509_837_637_44,
];
const GL_WEIGHTS: [f64; 8] = [
    0.027_152_459_411_754_095,
    0.062_253_523_938_647_89,
    0.095_158_511_682_492_78,
    0.124_628_971_255_533_87,
    0.149_595_988_816_576_73,
    0.169_156_519_395_002_54,
    0.182_603_415_044_923_6,
    0.189_450_610_455_068_5,
];

fn arc_integral(r: f64, a: f64, b: f64) -> f64 {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let f = |p: f64| (r * p.sin()).sin();
    let mut acc = 0.0;
    for (x, w) in GL_NODES.iter().zip(GL_WEIGHTS.iter()) {
        acc += w * (f(mid - half * x) + f(mid + half * x));
    }
    acc * half
}

/// `max_{φ0} |∫_{φ0}^{φ0+π} e^{ir sin φ} dφ|`.
///
/// The integral equals `πJ0(r) + 2i(S(π/2) − S(φ0))` with
/// `S(φ) = ∫₀^φ sin(r sin t) dt`, and `S(π − φ) = 2S(π/2) − S(φ)`, so it
/// suffices to compare `S` at its critical points `sin φ = kπ/r` in `[0, π/2]`.
pub fn half_circle_integral_max(r: f64) -> f64 {
    let mut nodes: Vec<f64> = Vec::new();
    nodes.push(0.0);
    let mut k = 1.0;
    while k * PI < r {
        nodes.push((k * PI / r).asin());
        k += 1.0;
    }
    nodes.push(PI / 2.0);
    // Lobes stay short: split the last one, which is wide near φ = π/2.
    let mut cumulative = Vec::with_capacity(nodes.len());
    let mut s = 0.0;
    cumulative.push(0.0);
    for w in nodes.windows(2) {
        let pieces = 4;
        let h = (w[1] - w[0]) / pieces as f64;
        for p in 0..pieces {
            s += arc_integral(r, w[0] + p as f64 * h, w[0] + (p + 1) as f64 * h);
        }
        cumulative.push(s);
    }
    let top = s;
    let re = PI * bessel_j0(r);
    cumulative
        .iter()
        .map(|c| re.hypot(2.0 * (top - c)))
        .fold(0.0, f64::max)
}

/// `(1/4π) max_{r, φ0} √r |∫_{φ0}^{φ0+π} e^{ir sin φ} dφ|`.
pub fn c_hat_arc_term() -> f64 {
    let f = |r: f64| r.sqrt() * half_circle_integral_max(r);
    scan_max(f, 8_000, 16) / (4.0 * PI)
}

/// The constant `ĉ` in `|g_λ(z)| ≤ ĉ / (√|z| E^{1/4} √(|λ| + 1/|λ|))`.
pub fn c_hat() -> f64 {
    c_hat_bessel_term() + c_hat_arc_term()
}

/// `D_ε = 2π/((1 + ε)ε)`.
pub fn d_epsilon(epsilon: f64) -> Result<f64> {
    if !(epsilon > 0.0 && epsilon.is_finite()) {
        return Err(Error::invalid("epsilon must be positive"));
    }
    Ok(2.0 * PI / ((1.0 + epsilon) * epsilon))
}

/// Strength below which the potential norm condition excludes exceptional
/// points: `1/(ĉ(4π/3 + D_ε))`.
pub fn smallness_bound(epsilon: f64) -> Result<f64> {
    smallness_bound_with(epsilon, c_hat())
}

pub fn smallness_bound_with(epsilon: f64, c_hat: f64) -> Result<f64> {
    if !(c_hat > 0.0) {
        return Err(Error::invalid("c_hat must be positive"));
    }
    Ok(1.0 / (c_hat * (4.0 * PI / 3.0 + d_epsilon(epsilon)?)))
}
