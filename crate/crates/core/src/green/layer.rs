//! Single-layer representation of `g_ζ` near the origin.
//!
//! `H_ζ = e^{iζ·z} g_ζ − (i/4) H0¹(√E|z|)` solves the Helmholtz equation,
//! so it is represented by a layer density on the circle of radius
//! `R + ε` fitted to its values on the circle of radius `R`.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
use num_traits::Float;

use crate::error::{Error, Result};
use crate::numerics::{gmres_solve, hankel1_0, GmresOptions, SolveReport};
use crate::spectral::ReducedZeta;

pub const LAYER_RADIUS: f64 = 1.6;
pub const LAYER_OFFSET: f64 = 0.1;
pub const LAYER_POINTS: usize = 256;
pub const LAYER_TOL: f64 = 1e-10;

const QUARTER_I: Complex64 = Complex64::new(0.0, 0.25);

#[derive(Clone, Debug)]
pub struct SingleLayerCache {
    reduced: ReducedZeta,
    boundary_values: Vec<Complex64>,
    density: Vec<Complex64>,
    report: SolveReport,
}

/// Boundary node `k` on the circle of radius `r`.
pub fn circle_point(r: f64, k: usize) -> Complex64 {
    let angle = 2.0 * PI * k as f64 / LAYER_POINTS as f64;
    Complex64::from_polar(r, angle)
}

/// `e^{iζ·z}` for the reduced `ζ = [k1, 0] + i[0, k2]`.
fn plane_wave(red: &ReducedZeta, z: Complex64) -> Complex64 {
    Complex64::from_polar((-red.k2 * z.im).exp(), red.k1 * z.re)
}

fn free_kernel(red: &ReducedZeta, distance: f64) -> Result<Complex64> {
    Ok(QUARTER_I * hankel1_0(red.sqrt_energy() * distance)?)
}

/// `H_ζ(z)` from a value `g = g_ζ(z)` in the reduced frame.
pub fn boundary_value(red: &ReducedZeta, z: Complex64, g: Complex64) -> Result<Complex64> {
    Ok(plane_wave(red, z) * g - free_kernel(red, z.norm())?)
}

impl SingleLayerCache {
    /// Fits the density to `g_ζ` sampled on the inner circle;
    /// `green_values[k]` must be `g_ζ(circle_point(LAYER_RADIUS, k))`.
    pub fn from_boundary(red: &ReducedZeta, green_values: &[Complex64]) -> Result<Self> {
        if green_values.len() != LAYER_POINTS {
            return Err(Error::invalid("single layer needs one value per boundary node"));
        }
        let boundary_values = green_values
            .iter()
            .enumerate()
            .map(|(k, g)| boundary_value(red, circle_point(LAYER_RADIUS, k), *g))
            .collect::<Result<Vec<_>>>()?;

        // The matrix is circulant: entry (i, j) depends on (j − i) mod n.
        let outer = LAYER_RADIUS + LAYER_OFFSET;
        let weight = 2.0 * PI / LAYER_POINTS as f64 * outer;
        let first_row = (0..LAYER_POINTS)
            .map(|k| {
                let d = (circle_point(outer, k) - LAYER_RADIUS).norm();
                Ok(free_kernel(red, d)? * weight)
            })
            .collect::<Result<Vec<_>>>()?;
        let n = LAYER_POINTS;
        let apply = |p: &[Complex64], out: &mut [Complex64]| {
            for (i, o) in out.iter_mut().enumerate() {
                let mut acc = Complex64::new(0.0, 0.0);
                for (j, pj) in p.iter().enumerate() {
                    acc += first_row[(j + n - i) % n] * pj;
                }
                *o = acc;
            }
        };
        let opts = GmresOptions {
            tol: LAYER_TOL,
            restart: n,
            max_iter: 4 * n,
        };
        let (density, report) = gmres_solve(apply, &boundary_values, &opts)?;
        if !report.converged {
            return Err(Error::SingleLayerSetup(report));
        }
        Ok(SingleLayerCache {
            reduced: *red,
            boundary_values,
            density,
            report,
        })
    }

    pub fn reduced(&self) -> &ReducedZeta {
        &self.reduced
    }

    pub fn boundary_values(&self) -> &[Complex64] {
        &self.boundary_values
    }

    pub fn density(&self) -> &[Complex64] {
        &self.density
    }

    pub fn report(&self) -> &SolveReport {
        &self.report
    }

    /// `H_ζ(z)` from the layer, valid inside the outer circle.
    pub fn layer_value(&self, z: Complex64) -> Result<Complex64> {
        let outer = LAYER_RADIUS + LAYER_OFFSET;
        let weight = 2.0 * PI / LAYER_POINTS as f64 * outer;
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, p) in self.density.iter().enumerate() {
            let d = (z - circle_point(outer, k)).norm();
            acc += free_kernel(&self.reduced, d)? * p;
        }
        Ok(acc * weight)
    }

    /// `g_ζ(z) = e^{−iζ·z}(H_ζ(z) + (i/4)H0¹(√E|z|))` in the reduced frame.
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        if z == Complex64::new(0.0, 0.0) {
            return Err(Error::SingularPoint);
        }
        let h = self.layer_value(z)?;
        let g0 = free_kernel(&self.reduced, z.norm())?;
        Ok((h + g0) / plane_wave(&self.reduced, z))
    }
}
