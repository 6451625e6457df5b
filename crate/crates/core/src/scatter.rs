//! Scattering transform `t(λ)`, its Born approximation and the d-bar
//! residual used to validate CGO fields.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
use num_traits::Float;

use crate::error::{Error, Result};
use crate::green::GreenGrid;
use crate::ls::{ls_residual, ls_solve, periodize_green, CgoField, TorusGrid, DEFAULT_CUTOFF};
use crate::numerics::GmresOptions;
use crate::spectral::{e_lambda, e_minus_lambda, SpectralParam};

pub const DEFAULT_DLAMBDA: f64 = 1e-4;

/// One point of a sweep: `t(λ)` for potential strength `alpha`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScatteringSample {
    pub lambda: Complex64,
    pub alpha: f64,
    pub t: Complex64,
    pub converged: bool,
    pub gmres_iterations: usize,
    pub ls_residual: f64,
}

impl ScatteringSample {
    /// Whether `t` is real to the tolerance expected for real radial
    /// potentials: `|Im t| ≤ 1e-4·max(1, |t|)`.
    pub fn is_real(&self) -> bool {
        self.t.im.abs() <= 1e-4 * self.t.norm().max(1.0)
    }
}

fn check_samples(grid: &TorusGrid, q: &[f64]) -> Result<()> {
    if q.len() != grid.len() {
        return Err(Error::invalid("potential samples do not match the grid"));
    }
    Ok(())
}

/// `h² Σ e_λ(z) q(z) w(z)` over the grid nodes.
fn weighted_sum(grid: &TorusGrid, q: &[f64], p: &SpectralParam, w: impl Fn(usize) -> Complex64) -> Complex64 {
    let h = grid.spacing();
    let mut acc = Complex64::new(0.0, 0.0);
    for (idx, &v) in q.iter().enumerate() {
        if v != 0.0 {
            acc += e_lambda(grid.node_at(idx), p) * w(idx) * v;
        }
    }
    acc * (h * h)
}

/// `t(λ) = ∫ e_λ q μ` as a Riemann sum. The value is returned even when the
/// field did not converge; check [`CgoField::converged`].
pub fn scattering_transform(field: &CgoField, q: &[f64], p: &SpectralParam) -> Result<Complex64> {
    check_samples(field.grid(), q)?;
    let mu = field.mu();
    Ok(weighted_sum(field.grid(), q, p, |idx| mu[idx]))
}

/// `t` with `μ` replaced by 1.
pub fn born_approx(q: &[f64], grid: &TorusGrid, p: &SpectralParam) -> Result<Complex64> {
    check_samples(grid, q)?;
    Ok(weighted_sum(grid, q, p, |_| Complex64::new(1.0, 0.0)))
}

/// Kernel, solve and scattering transform for one `λ` from a Green's grid.
pub fn sample_from_grid(
    green: &GreenGrid,
    q: &[f64],
    alpha: f64,
    p: &SpectralParam,
    opts: &GmresOptions,
) -> Result<(CgoField, ScatteringSample)> {
    let kernel = periodize_green(green, green.grid(), DEFAULT_CUTOFF)?;
    let field = ls_solve(&kernel, q, opts)?;
    let t = scattering_transform(&field, q, p)?;
    let residual = ls_residual(&field, &kernel, q)?;
    let sample = ScatteringSample {
        lambda: p.lambda(),
        alpha,
        t,
        converged: field.converged(),
        gmres_iterations: field.report().iterations,
        ls_residual: residual,
    };
    Ok((field, sample))
}

/// The nine parameters of the d-bar stencil, in the order
/// `λ, λ+d, λ+2d, λ−d, λ−2d, λ+id, λ+2id, λ−id, λ−2id`.
pub fn dbar_parameters(p: &SpectralParam, dlambda: f64) -> Result<[SpectralParam; 9]> {
    if !(dlambda > 0.0 && dlambda.is_finite()) {
        return Err(Error::invalid("dlambda must be positive"));
    }
    let l = p.lambda();
    let d = dlambda;
    let offsets = [
        Complex64::new(0.0, 0.0),
        Complex64::new(d, 0.0),
        Complex64::new(2.0 * d, 0.0),
        Complex64::new(-d, 0.0),
        Complex64::new(-2.0 * d, 0.0),
        Complex64::new(0.0, d),
        Complex64::new(0.0, 2.0 * d),
        Complex64::new(0.0, -d),
        Complex64::new(0.0, -2.0 * d),
    ];
    let mut out = [*p; 9];
    for (o, off) in out.iter_mut().zip(offsets) {
        *o = SpectralParam::new(l + off, p.energy())?;
    }
    Ok(out)
}

/// `‖∂̄μ − sign·t/(4πλ̄)·e_{−λ}·conj μ‖` on the unit disk, with `∂̄μ` from
/// five-point stencils over the fields of [`dbar_parameters`].
pub fn dbar_residual_with_sign(
    fields: &[CgoField],
    q: &[f64],
    p: &SpectralParam,
    dlambda: f64,
    sign: f64,
) -> Result<f64> {
    if fields.len() != 9 {
        return Err(Error::invalid("the d-bar stencil needs nine fields"));
    }
    let grid = *fields[0].grid();
    if fields.iter().any(|f| *f.grid() != grid) {
        return Err(Error::invalid("d-bar fields live on different grids"));
    }
    let failed: Vec<Complex64> = fields
        .iter()
        .filter(|f| !f.converged())
        .map(|f| f.lambda())
        .collect();
    if !failed.is_empty() {
        return Err(Error::Unconverged { lambdas: failed });
    }
    let t = scattering_transform(&fields[0], q, p)?;
    let coeff = t * sign / (p.lambda().conj() * (4.0 * PI));
    let mu: Vec<&[Complex64]> = fields.iter().map(|f| f.mu()).collect();
    let h = grid.spacing();
    let denom = 12.0 * dlambda;
    let mut acc = 0.0;
    for idx in 0..grid.len() {
        let z = grid.node_at(idx);
        if z.norm() >= 1.0 {
            continue;
        }
        let d1 = (-mu[2][idx] + mu[1][idx] * 8.0 - mu[3][idx] * 8.0 + mu[4][idx]) / denom;
        let d2 = (-mu[6][idx] + mu[5][idx] * 8.0 - mu[7][idx] * 8.0 + mu[8][idx]) / denom;
        let dbar = (d1 + Complex64::i() * d2) * 0.5;
        let rhs = coeff * e_minus_lambda(z, p) * mu[0][idx].conj();
        acc += (dbar - rhs).norm_sqr();
    }
    Ok((acc * h * h).sqrt())
}

pub fn dbar_residual_from_fields(fields: &[CgoField], q: &[f64], p: &SpectralParam, dlambda: f64) -> Result<f64> {
    dbar_residual_with_sign(fields, q, p, dlambda, p.side())
}

/// Solves the nine stencil problems one after another and returns the
/// d-bar residual.
pub fn dbar_residual(
    p: &SpectralParam,
    dlambda: f64,
    q: &[f64],
    grid: &TorusGrid,
    opts: &GmresOptions,
) -> Result<f64> {
    check_samples(grid, q)?;
    let params = dbar_parameters(p, dlambda)?;
    let fields = params
        .iter()
        .map(|pp| {
            let green = GreenGrid::compute(pp, grid)?;
            let kernel = periodize_green(&green, grid, DEFAULT_CUTOFF)?;
            ls_solve(&kernel, q, opts)
        })
        .collect::<Result<Vec<_>>>()?;
    dbar_residual_from_fields(&fields, q, p, dlambda)
}
