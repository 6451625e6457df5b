//! Periodized Lippmann–Schwinger solver for CGO solutions.
//!
//! The equation `μ = 1 − g_λ ∗ (qμ)` is posed on the torus `[−s, s)²`
//! sampled by `2^M × 2^M` nodes. With `q` supported in the unit disk and
//! the kernel cut off at radius `2.05 < s`, every displacement needed on
//! the unit disk is represented without wrap-around error.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::Float;

use crate::error::{Error, Result};
use crate::green::GreenGrid;
use crate::numerics::{gmres_solve, Fft2, GmresOptions, SolveReport};

pub const DEFAULT_HALF_WIDTH: f64 = 2.1;
pub const DEFAULT_CUTOFF: f64 = 2.05;
pub const MIN_EXPONENT: u32 = 2;
pub const MAX_EXPONENT: u32 = 12;

/// Square torus `[−s, s)²` with `2^M` nodes per side; node `i` sits at
/// `−s + i·h`, so index `2^{M−1}` is the origin. Grid functions are stored
/// with the first coordinate fastest: `data[j·n + i]` is the node `(x_i, x_j)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TorusGrid {
    m: u32,
    s: f64,
}

impl TorusGrid {
    pub fn new(m: u32, s: f64) -> Result<Self> {
        if !(MIN_EXPONENT..=MAX_EXPONENT).contains(&m) {
            return Err(Error::invalid(alloc::format!(
                "grid exponent {m} outside {MIN_EXPONENT}..={MAX_EXPONENT}"
            )));
        }
        if !(s > 2.0 && s.is_finite()) {
            return Err(Error::invalid("torus half-width must exceed 2"));
        }
        Ok(TorusGrid { m, s })
    }

    pub fn exponent(&self) -> u32 {
        self.m
    }

    pub fn half_width(&self) -> f64 {
        self.s
    }

    pub fn side(&self) -> usize {
        1 << self.m
    }

    pub fn len(&self) -> usize {
        self.side() * self.side()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn spacing(&self) -> f64 {
        2.0 * self.s / self.side() as f64
    }

    pub fn coord(&self, i: usize) -> f64 {
        -self.s + i as f64 * self.spacing()
    }

    pub fn index(&self, i: usize, j: usize) -> usize {
        j * self.side() + i
    }

    pub fn node(&self, i: usize, j: usize) -> Complex64 {
        Complex64::new(self.coord(i), self.coord(j))
    }

    /// Node of a flat storage index.
    pub fn node_at(&self, idx: usize) -> Complex64 {
        let n = self.side();
        self.node(idx % n, idx / n)
    }

    pub fn origin_index(&self) -> usize {
        let c = self.side() / 2;
        self.index(c, c)
    }

    /// All nodes in storage order.
    pub fn nodes(&self) -> impl Iterator<Item = Complex64> + '_ {
        (0..self.len()).map(move |idx| self.node_at(idx))
    }
}

/// `g_λ` truncated to a disk and arranged for circular convolution on the
/// torus, together with its transform.
#[derive(Clone, Debug)]
pub struct PeriodicKernel {
    grid: TorusGrid,
    cutoff: f64,
    lambda: Complex64,
    energy: f64,
    wrapped: Vec<Complex64>,
    spectrum: Vec<Complex64>,
    fft: Fft2,
}

pub fn periodize_green(g: &GreenGrid, grid: &TorusGrid, cutoff: f64) -> Result<PeriodicKernel> {
    if g.grid() != grid {
        return Err(Error::invalid("Green's grid does not match the torus geometry"));
    }
    if !(cutoff > 0.0) {
        return Err(Error::invalid("kernel cutoff must be positive"));
    }
    let n = grid.side();
    let half = n / 2;
    let h = grid.spacing();
    let samples = g.samples();
    // Entry k of the wrapped layout holds the displacement k·h (mod the torus).
    let mut wrapped = vec![Complex64::new(0.0, 0.0); grid.len()];
    for kj in 0..n {
        for ki in 0..n {
            let si = (ki + half) % n;
            let sj = (kj + half) % n;
            let z = grid.node(si, sj);
            if z.norm() <= cutoff && !(si == half && sj == half) {
                wrapped[kj * n + ki] = samples[grid.index(si, sj)];
            }
        }
    }
    // The logarithmic singularity enters through its cell mean rather than
    // a point value; a zero here costs O(h² ln h) in every convolution.
    wrapped[0] = g.origin_cell();
    let fft = Fft2::new(n)?;
    let mut spectrum: Vec<Complex64> = wrapped.iter().map(|v| v * (h * h)).collect();
    fft.forward(&mut spectrum);
    Ok(PeriodicKernel {
        grid: *grid,
        cutoff,
        lambda: g.lambda(),
        energy: g.energy(),
        wrapped,
        spectrum,
        fft,
    })
}

impl PeriodicKernel {
    pub fn grid(&self) -> &TorusGrid {
        &self.grid
    }

    pub fn cutoff(&self) -> f64 {
        self.cutoff
    }

    pub fn lambda(&self) -> Complex64 {
        self.lambda
    }

    pub fn energy(&self) -> f64 {
        self.energy
    }

    /// Kernel samples in wrapped order: entry `(ki, kj)` is the value at
    /// displacement `(ki·h, kj·h)` taken modulo the torus.
    pub fn wrapped(&self) -> &[Complex64] {
        &self.wrapped
    }

    /// `(g ∗ f)(x_a) ≈ h² Σ_b g(x_a − x_b) f(x_b)` on the torus.
    pub fn convolve(&self, f: &[Complex64]) -> Vec<Complex64> {
        let mut out = f.to_vec();
        self.convolve_in_place(&mut out);
        out
    }

    pub fn convolve_in_place(&self, data: &mut [Complex64]) {
        assert_eq!(data.len(), self.grid.len(), "grid function does not match kernel");
        self.fft.forward(data);
        for (d, k) in data.iter_mut().zip(self.spectrum.iter()) {
            *d *= k;
        }
        self.fft.inverse(data);
    }
}

/// Samples of the CGO solution `μ(·, λ)` and the report of the solve
/// that produced them.
#[derive(Clone, Debug, PartialEq)]
pub struct CgoField {
    mu: Vec<Complex64>,
    lambda: Complex64,
    energy: f64,
    grid: TorusGrid,
    report: SolveReport,
}

impl CgoField {
    pub fn mu(&self) -> &[Complex64] {
        &self.mu
    }

    pub fn lambda(&self) -> Complex64 {
        self.lambda
    }

    pub fn energy(&self) -> f64 {
        self.energy
    }

    pub fn grid(&self) -> &TorusGrid {
        &self.grid
    }

    pub fn report(&self) -> &SolveReport {
        &self.report
    }

    pub fn converged(&self) -> bool {
        self.report.converged
    }

    pub fn at(&self, i: usize, j: usize) -> Complex64 {
        self.mu[self.grid.index(i, j)]
    }
}

fn check_potential(kernel: &PeriodicKernel, q: &[f64]) -> Result<()> {
    if q.len() != kernel.grid.len() {
        return Err(Error::invalid("potential samples do not match the grid"));
    }
    if q.iter().any(|v| !v.is_finite()) {
        return Err(Error::Numeric("potential samples"));
    }
    Ok(())
}

/// Solves `(I + G_λ Q) m = −G_λ q` for `m = μ − 1`.
///
/// The iteration runs on the support of `q` only; off the support `m`
/// follows from `m = −G_λ(qμ)`. Failure to converge is reported in the
/// returned field, not as an error.
pub fn ls_solve(kernel: &PeriodicKernel, q: &[f64], opts: &GmresOptions) -> Result<CgoField> {
    check_potential(kernel, q)?;
    let len = q.len();
    let support: Vec<usize> = (0..len).filter(|&i| q[i] != 0.0).collect();
    let one = Complex64::new(1.0, 0.0);
    let mut mu = vec![one; len];
    if support.is_empty() {
        return Ok(CgoField {
            mu,
            lambda: kernel.lambda,
            energy: kernel.energy,
            grid: kernel.grid,
            report: SolveReport {
                iterations: 0,
                final_residual: 0.0,
                converged: true,
            },
        });
    }

    let mut work = vec![Complex64::new(0.0, 0.0); len];
    let mut rhs_full: Vec<Complex64> = q.iter().map(|v| Complex64::new(*v, 0.0)).collect();
    kernel.convolve_in_place(&mut rhs_full);
    let rhs: Vec<Complex64> = support.iter().map(|&i| -rhs_full[i]).collect();

    let apply = |v: &[Complex64], out: &mut [Complex64]| {
        work.iter_mut().for_each(|w| *w = Complex64::new(0.0, 0.0));
        for (&i, vi) in support.iter().zip(v) {
            work[i] = vi * q[i];
        }
        kernel.convolve_in_place(&mut work);
        for ((o, &i), vi) in out.iter_mut().zip(&support).zip(v) {
            *o = vi + work[i];
        }
    };
    let (m_support, report) = gmres_solve(apply, &rhs, opts)?;

    let mut source = vec![Complex64::new(0.0, 0.0); len];
    for (&i, m) in support.iter().zip(&m_support) {
        source[i] = (one + m) * q[i];
    }
    kernel.convolve_in_place(&mut source);
    for (idx, v) in mu.iter_mut().enumerate() {
        *v = one - source[idx];
    }
    for (&i, m) in support.iter().zip(&m_support) {
        mu[i] = one + m;
    }
    Ok(CgoField {
        mu,
        lambda: kernel.lambda,
        energy: kernel.energy,
        grid: kernel.grid,
        report,
    })
}

/// `‖μ − 1 + G_λ(qμ)‖₂ / ‖μ‖₂` over the whole grid.
pub fn ls_residual(field: &CgoField, kernel: &PeriodicKernel, q: &[f64]) -> Result<f64> {
    check_potential(kernel, q)?;
    if field.grid != kernel.grid {
        return Err(Error::invalid("field and kernel grids differ"));
    }
    let mut source: Vec<Complex64> = field.mu.iter().zip(q).map(|(m, v)| m * v).collect();
    kernel.convolve_in_place(&mut source);
    let mut num = 0.0;
    let mut den = 0.0;
    for (m, s) in field.mu.iter().zip(&source) {
        num += (m - 1.0 + s).norm_sqr();
        den += m.norm_sqr();
    }
    Ok(if den > 0.0 { (num / den).sqrt() } else { num.sqrt() })
}

impl CgoField {
    /// Replaces `μ` by caller-supplied samples, keeping geometry and report.
    /// Used for sensitivity checks of [`ls_residual`].
    pub fn with_samples(&self, mu: Vec<Complex64>) -> Result<Self> {
        if mu.len() != self.grid.len() {
            return Err(Error::invalid("sample count does not match the grid"));
        }
        Ok(CgoField { mu, ..self.clone() })
    }
}
