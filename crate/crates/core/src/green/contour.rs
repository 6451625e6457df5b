//! Truncated contour integrals for `g_ζ` in the reduced frame (`x1 ≥ 0`).

use core::f64::consts::PI;

use num_complex::Complex64;
use num_traits::Float;

use crate::error::{Error, Result};
use crate::spectral::ReducedZeta;

/// Composite rules are built from panels of this many Gauss–Legendre nodes.
pub const PANEL_ORDER: usize = 16;
pub const CALIBRATION_START: usize = 64;
pub const CALIBRATION_CAP: usize = 1 << 17;
pub const CALIBRATION_TOL: f64 = 1e-8;

/// `E1(14) < 6e-8`: every tail bound is pushed to this argument.
const TAIL_ARGUMENT: f64 = 14.0;

/// Lower bound of `cos(arg √b)` on the vertical leg. The angle is 0 at
/// `t = k2` but tends to `π/2` as `t` grows (`√b ≈ √E + 1 − i(t − k2)`),
/// so `x1` buys no decay in the tail and only `e^{x2 t}` can be used.
const T3_DECAY_COSINE: f64 = 0.0;

// Positive half of the 16-point Gauss–Legendre rule on [-1, 1].
const GL16_NODES: [f64; 8] = [
    0.989_400_934_991_649_9,
    0.944_575_023_073_232_6,
    0.865_631_202_387_831_7,
    0.755_404_408_355_003,
    0.617_876_244_402_643_7,
    0.458_016_777_657_227_4,
    0.281_603_550_779_258_9,
    0.095_012_509_837_637_44,
];
const GL16_WEIGHTS: [f64; 8] = [
    0.027_152_459_411_754_095,
    0.062_253_523_938_647_89,
    0.095_158_511_682_492_78,
    0.124_628_971_255_533_87,
    0.149_595_988_816_576_73,
    0.169_156_519_395_002_54,
    0.182_603_415_044_923_6,
    0.189_450_610_455_068_5,
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ContourVariant {
    /// Integral along the real axis; needs `x1 > 0`.
    T1,
    /// Integral along the imaginary axis; needs `x2 ≥ 0`.
    T2,
    /// Finite real leg plus a vertical leg; needs `x2 < 0`.
    T3,
}

impl ContourVariant {
    pub const ALL: [ContourVariant; 3] = [ContourVariant::T1, ContourVariant::T2, ContourVariant::T3];

    pub fn name(self) -> &'static str {
        match self {
            ContourVariant::T1 => "T1",
            ContourVariant::T2 => "T2",
            ContourVariant::T3 => "T3",
        }
    }
}

impl core::fmt::Display for ContourVariant {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.name())
    }
}

/// Resolved contour for one evaluation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ContourSpec {
    pub variant: ContourVariant,
    pub upper_limit: f64,
    pub panel_points: usize,
}

/// `cos(arg √a)` at `t = 2|k1|`, where `a = (t + i k2)² − E`.
fn t1_cosine(red: &ReducedZeta) -> f64 {
    let k = red.k1.abs();
    let t = 2.0 * k;
    let a = Complex64::new((t - k) * (t + k), 2.0 * t * red.k2);
    (0.5 * a.im.atan2(a.re)).cos()
}

pub fn upper_limit_t1(x1: f64, red: &ReducedZeta) -> Result<f64> {
    if !(x1 > 0.0) {
        return Err(Error::invalid("T1 needs x1 > 0"));
    }
    let c1 = t1_cosine(red);
    let decay = TAIL_ARGUMENT * 2f64.powf(0.25) / (x1 * c1);
    Ok(decay.max(2.0 * red.k1.abs()))
}

pub fn upper_limit_t2(x2: f64) -> Result<f64> {
    if !(x2 > 0.0) {
        return Err(Error::invalid("T2 needs x2 > 0"));
    }
    Ok(TAIL_ARGUMENT / x2)
}

pub fn upper_limit_t3(x1: f64, x2: f64, red: &ReducedZeta) -> Result<f64> {
    if !(x2 < 0.0 && x1 >= 0.0) {
        return Err(Error::invalid("T3 needs x1 >= 0 and x2 < 0"));
    }
    Ok(TAIL_ARGUMENT / (T3_DECAY_COSINE * x1 - x2) + red.k2)
}

/// One 16-point Gauss–Legendre panel on `[a, b]`.
#[inline]
fn panel<F: FnMut(f64) -> Complex64>(a: f64, b: f64, f: &mut F) -> Complex64 {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut acc = Complex64::new(0.0, 0.0);
    for (x, w) in GL16_NODES.iter().zip(GL16_WEIGHTS.iter()) {
        acc += (f(mid - half * x) + f(mid + half * x)) * *w;
    }
    acc * half
}

/// Equal panels of width at most `base` covering `[a, b]`.
fn uniform<F: FnMut(f64) -> Complex64>(a: f64, b: f64, base: f64, f: &mut F) -> Complex64 {
    let mut sum = Complex64::new(0.0, 0.0);
    if b <= a {
        return sum;
    }
    let count = ((b - a) / base).ceil().max(1.0) as usize;
    let w = (b - a) / count as f64;
    for k in 0..count {
        let lo = a + w * k as f64;
        let hi = if k + 1 == count { b } else { lo + w };
        sum += panel(lo, hi, f);
    }
    sum
}

/// Integrates `f` over `[0, len]` with panels of width at most `base`,
/// refined geometrically towards `peak = (center, width)` when the center
/// lies inside the interval.
fn composite<F>(len: f64, base: f64, peak: Option<(f64, f64)>, mut f: F) -> Complex64
where
    F: FnMut(f64) -> Complex64,
{
    let (center, width) = match peak {
        Some((c, w)) if c > 0.0 && c < len => (c, w),
        _ => return uniform(0.0, len, base, &mut f),
    };
    let mut sum = Complex64::new(0.0, 0.0);
    let w0 = width.min(base);
    let mut hi = center;
    let mut w = w0;
    while hi > 0.0 && w < base {
        let lo = (hi - w).max(0.0);
        sum += panel(lo, hi, &mut f);
        hi = lo;
        w *= 2.0;
    }
    sum += uniform(0.0, hi, base, &mut f);
    let mut lo = center;
    let mut w = w0;
    while lo < len && w < base {
        let next = (lo + w).min(len);
        sum += panel(lo, next, &mut f);
        lo = next;
        w *= 2.0;
    }
    sum + uniform(lo, len, base, &mut f)
}

/// `e^{i x2 t} e^{−x1 √a}/√a` with `a = (t + i k2)² − E`.
#[inline]
fn t1_integrand(t: f64, x1: f64, x2: f64, k1: f64, k2: f64) -> Complex64 {
    let a = Complex64::new((t - k1) * (t + k1), 2.0 * t * k2);
    let r = a.sqrt();
    let (s, c) = (x2 * t).sin_cos();
    Complex64::new(c, s) * (-r * x1).exp() / r
}

/// `e^{−x2 t} e^{−i x1 ρ}/ρ` with `ρ = √(t² + 2t k2 + k1²)`.
#[inline]
fn t2_integrand(t: f64, x1: f64, x2: f64, k1: f64, k2: f64) -> Complex64 {
    let rho = (t * t + 2.0 * t * k2 + k1 * k1).sqrt();
    let (s, c) = (x1 * rho).sin_cos();
    Complex64::new(c, -s) * ((-x2 * t).exp() / rho)
}

/// `e^{x2 t} e^{−x1 √b}/√b` with `b = (√E + 1 + i(k2 − t))² − E`.
#[inline]
fn t3_integrand(t: f64, x1: f64, x2: f64, shift: f64, energy: f64, k2: f64) -> Complex64 {
    let u = Complex64::new(shift, k2 - t);
    let r = (u * u - energy).sqrt();
    (-r * x1).exp() * (x2 * t).exp() / r
}

/// Evaluates the truncated integral for `variant` with a composite rule
/// of roughly `points` nodes per unit truncation length. `truncation_scale`
/// multiplies the upper limit (and the panel count with it).
pub fn eval_contour_with(
    z: Complex64,
    red: &ReducedZeta,
    variant: ContourVariant,
    points: usize,
    truncation_scale: f64,
) -> Result<Complex64> {
    let (x1, x2) = (z.re, z.im);
    if !(x1 >= 0.0) {
        return Err(Error::invalid("contour formulas need x1 >= 0"));
    }
    if points == 0 || !(truncation_scale > 0.0) {
        return Err(Error::invalid("panel points and truncation scale must be positive"));
    }
    let panels = (points / PANEL_ORDER).max(1) as f64;
    let k1 = red.k1.abs();
    let k2 = red.k2;
    let peak = Some((k1, k2));
    let integral = match variant {
        ContourVariant::T1 => {
            let t = upper_limit_t1(x1, red)?;
            composite(t * truncation_scale, t / panels, peak, |s| {
                t1_integrand(s, x1, x2, k1, k2)
            })
        }
        ContourVariant::T2 => {
            if !(x2 >= 0.0) {
                return Err(Error::invalid("T2 needs x2 >= 0"));
            }
            if x2 == 0.0 {
                return Err(Error::invalid("T2 needs x2 > 0"));
            }
            let t = upper_limit_t2(x2)?;
            composite(t * truncation_scale, t / panels, None, |s| {
                t2_integrand(s, x1, x2, k1, k2)
            })
        }
        ContourVariant::T3 => {
            if !(x2 < 0.0) {
                return Err(Error::invalid("T3 needs x2 < 0"));
            }
            let t = upper_limit_t3(x1, x2, red)?;
            let shift = red.sqrt_energy() + 1.0;
            let finite = composite(shift, shift / panels, peak, |s| {
                t1_integrand(s, x1, x2, k1, k2)
            });
            let leg = composite(t * truncation_scale, t / panels, None, |s| {
                t3_integrand(s, x1, x2, shift, red.energy, k2)
            });
            let (s, c) = (shift * x2).sin_cos();
            finite - Complex64::new(0.0, 1.0) * Complex64::new(c, s) * leg
        }
    };
    let (s, c) = (x1 * red.k1).sin_cos();
    let value = Complex64::new(c, -s) * (integral.re / (2.0 * PI));
    if value.re.is_finite() && value.im.is_finite() {
        Ok(value)
    } else {
        Err(Error::Numeric("contour integrand"))
    }
}

/// Doubling search: the smallest count from [`CALIBRATION_START`] whose
/// value moves by less than [`CALIBRATION_TOL`] when the count is doubled.
pub fn calibrate_with<F>(variant: ContourVariant, mut eval: F) -> Result<usize>
where
    F: FnMut(usize) -> Result<Complex64>,
{
    let mut n = CALIBRATION_START;
    let mut value = eval(n)?;
    while 2 * n <= CALIBRATION_CAP {
        let next = eval(2 * n)?;
        if (next - value).norm() < CALIBRATION_TOL {
            return Ok(n);
        }
        n *= 2;
        value = next;
    }
    Err(Error::CalibrationFailed {
        variant: variant.name(),
        cap: CALIBRATION_CAP,
    })
}

pub fn calibrate_panels(red: &ReducedZeta, variant: ContourVariant, probe: Complex64) -> Result<usize> {
    calibrate_with(variant, |n| eval_contour_with(probe, red, variant, n, 1.0))
}

/// Self-calibrating evaluation at `z`.
pub fn eval_contour(z: Complex64, red: &ReducedZeta, variant: ContourVariant) -> Result<Complex64> {
    let n = calibrate_panels(red, variant, z)?;
    eval_contour_with(z, red, variant, n, 1.0)
}
