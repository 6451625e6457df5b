//! The spectral parameter `λ`, the complex frequency vector `ζ ∈ ℂ²` with
//! `ζ·ζ = E`, and the rotation that brings `ζ` to the reduced form
//! `[k1, 0] + i[0, k2]`.
//!
//! Plane points are represented as complex numbers `z = x1 + i·x2`.

use core::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;
use num_traits::Float;

use crate::error::{Error, Result};

/// Default half-width of the band around `|λ| = 1` that is rejected.
pub const DEFAULT_EXCLUSION_BAND: f64 = 0.005;

/// Relative tolerance for `ζ·ζ = E` on externally built vectors.
pub const CONSISTENCY_TOL: f64 = 1e-10;

/// A spectral parameter together with its (positive) energy.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectralParam {
    lambda: Complex64,
    energy: f64,
}

impl SpectralParam {
    /// Validates `λ` against the default exclusion band.
    pub fn new(lambda: Complex64, energy: f64) -> Result<Self> {
        Self::with_band(lambda, energy, DEFAULT_EXCLUSION_BAND)
    }

    pub fn with_band(lambda: Complex64, energy: f64, band: f64) -> Result<Self> {
        let p = Self::unrestricted(lambda, energy)?;
        if !(band >= 0.0) {
            return Err(Error::invalid("exclusion band must be nonnegative"));
        }
        if in_exclusion_band(lambda, band) {
            return Err(Error::ExcludedParameter {
                modulus: lambda.norm(),
                band,
            });
        }
        Ok(p)
    }

    /// Only checks `λ ≠ 0` and `E > 0`; points on or near the unit circle
    /// are accepted.
    pub fn unrestricted(lambda: Complex64, energy: f64) -> Result<Self> {
        if !(lambda.re.is_finite() && lambda.im.is_finite()) || lambda == Complex64::new(0.0, 0.0)
        {
            return Err(Error::invalid("lambda must be finite and nonzero"));
        }
        if !(energy > 0.0 && energy.is_finite()) {
            return Err(Error::invalid("energy must be positive and finite"));
        }
        Ok(SpectralParam { lambda, energy })
    }

    pub fn lambda(&self) -> Complex64 {
        self.lambda
    }

    pub fn energy(&self) -> f64 {
        self.energy
    }

    pub fn zeta(&self) -> ZetaVector {
        zeta_from_lambda(self)
    }

    pub fn reduced(&self) -> Result<ReducedZeta> {
        reduce_zeta(&self.zeta())
    }

    /// `sgn(|λ| − 1)`.
    pub fn side(&self) -> f64 {
        if self.lambda.norm() > 1.0 {
            1.0
        } else {
            -1.0
        }
    }
}

pub fn in_exclusion_band(lambda: Complex64, band: f64) -> bool {
    (lambda.norm() - 1.0).abs() < band
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ZetaVector {
    pub zeta1: Complex64,
    pub zeta2: Complex64,
}

impl ZetaVector {
    pub fn new(zeta1: Complex64, zeta2: Complex64) -> Self {
        ZetaVector { zeta1, zeta2 }
    }

    /// The bilinear (not Hermitian) product `ζ·ζ`.
    pub fn dot(&self) -> Complex64 {
        self.zeta1 * self.zeta1 + self.zeta2 * self.zeta2
    }

    pub fn real_part(&self) -> [f64; 2] {
        [self.zeta1.re, self.zeta2.re]
    }

    pub fn imag_part(&self) -> [f64; 2] {
        [self.zeta1.im, self.zeta2.im]
    }

    pub fn conj(&self) -> Self {
        ZetaVector::new(self.zeta1.conj(), self.zeta2.conj())
    }

    /// `ζ·z` for a plane point `z = x1 + i x2`.
    pub fn apply(&self, z: Complex64) -> Complex64 {
        self.zeta1 * z.re + self.zeta2 * z.im
    }

    fn check_energy(&self, energy: f64) -> Result<()> {
        let found = self.dot();
        if (found - energy).norm() > CONSISTENCY_TOL * energy.abs().max(found.norm()) {
            return Err(Error::Inconsistent { found, energy });
        }
        Ok(())
    }
}

/// `ζ1 = (λ + 1/λ)√E/2`, `ζ2 = i(1/λ − λ)√E/2`.
pub fn zeta_from_lambda(p: &SpectralParam) -> ZetaVector {
    let l = p.lambda;
    let inv = l.inv();
    let half = 0.5 * p.energy.sqrt();
    ZetaVector {
        zeta1: (l + inv) * half,
        zeta2: (inv - l) * Complex64::new(0.0, half),
    }
}

/// `λ = (ζ1 + iζ2)/√E`. The result is not checked against the exclusion
/// band; use [`in_exclusion_band`] for that.
pub fn lambda_from_zeta(z: &ZetaVector, energy: f64) -> Result<Complex64> {
    if !(energy > 0.0) {
        return Err(Error::invalid("energy must be positive"));
    }
    z.check_energy(energy)?;
    Ok((z.zeta1 + Complex64::i() * z.zeta2) / energy.sqrt())
}

/// Canonical form of `ζ`: a rotation by `theta` maps `ζ` to
/// `[k1, 0] + i[0, k2]` with `k2 > 0` and `k1² − k2² = energy`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ReducedZeta {
    pub k1: f64,
    pub k2: f64,
    pub theta: f64,
    pub energy: f64,
}

impl ReducedZeta {
    /// Builds an already-reduced parameter (`theta = 0`) from `k1`, `k2`.
    pub fn new(k1: f64, k2: f64) -> Result<Self> {
        if !(k2 > 0.0 && k1.abs() > k2 && k1.is_finite()) {
            return Err(Error::invalid("reduced zeta needs |k1| > k2 > 0"));
        }
        let energy = (k1.abs() - k2) * (k1.abs() + k2);
        Ok(ReducedZeta {
            k1,
            k2,
            theta: 0.0,
            energy,
        })
    }

    /// `(cos θ, sin θ)`, exact on the coordinate axes.
    pub fn rotation(&self) -> (f64, f64) {
        rotation_of(self.theta)
    }

    /// Applies the rotation to a plane point.
    pub fn rotate(&self, z: Complex64) -> Complex64 {
        let (c, s) = self.rotation();
        Complex64::new(c * z.re - s * z.im, s * z.re + c * z.im)
    }

    pub fn sqrt_energy(&self) -> f64 {
        self.energy.sqrt()
    }

    /// The parameter for `ζ/s`, used together with the point `s·z`.
    pub fn scaled(&self, s: f64) -> Self {
        ReducedZeta {
            k1: self.k1 / s,
            k2: self.k2 / s,
            theta: self.theta,
            energy: self.energy / (s * s),
        }
    }

    pub fn zeta(&self) -> ZetaVector {
        ZetaVector::new(
            Complex64::new(self.k1, 0.0),
            Complex64::new(0.0, self.k2),
        )
    }
}

fn rotation_of(theta: f64) -> (f64, f64) {
    if theta == 0.0 {
        (1.0, 0.0)
    } else if theta == PI || theta == -PI {
        (-1.0, 0.0)
    } else if theta == FRAC_PI_2 {
        (0.0, 1.0)
    } else if theta == -FRAC_PI_2 {
        (0.0, -1.0)
    } else {
        let (s, c) = theta.sin_cos();
        (c, s)
    }
}

/// Rotates `ζ` so that its imaginary part points along the positive
/// second axis.
pub fn reduce_zeta(z: &ZetaVector) -> Result<ReducedZeta> {
    let [a, b] = z.imag_part();
    let k2 = a.hypot(b);
    if !(k2 > 0.0) {
        return Err(Error::DegenerateParameter);
    }
    let energy = z.dot().re;
    if !(energy > 0.0) {
        return Err(Error::invalid("zeta.zeta must be positive"));
    }
    z.check_energy(energy)?;
    let mut theta = FRAC_PI_2 - b.atan2(a);
    if theta > PI {
        theta -= 2.0 * PI;
    }
    if theta <= -PI {
        theta += 2.0 * PI;
    }
    let (c, s) = rotation_of(theta);
    let [xr, yr] = z.real_part();
    let k1 = c * xr - s * yr;
    Ok(ReducedZeta {
        k1,
        k2,
        theta,
        energy,
    })
}

/// `e_λ(z) = exp(i√E(Re(λ z̄) + Re(z/λ)))`, of unit modulus.
pub fn e_lambda(z: Complex64, p: &SpectralParam) -> Complex64 {
    let l = p.lambda;
    let phase = p.energy.sqrt() * ((l * z.conj()).re + (z / l).re);
    Complex64::from_polar(1.0, phase)
}

/// `e_{−λ}(z)`, the exact conjugate of [`e_lambda`].
pub fn e_minus_lambda(z: Complex64, p: &SpectralParam) -> Complex64 {
    e_lambda(z, p).conj()
}
