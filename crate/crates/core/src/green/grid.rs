//! `g_λ` sampled on a torus grid.

use alloc::boxed::Box;
use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::Float;

use super::GreenFunction;
use crate::error::{Error, Result};
use crate::ls::TorusGrid;
use crate::spectral::SpectralParam;

/// Samples of `g_λ` at every node of a [`TorusGrid`]. The origin sample is
/// 0; the mean of `g_λ` over the origin cell is kept separately.
#[derive(Clone, Debug, PartialEq)]
pub struct GreenGrid {
    lambda: Complex64,
    energy: f64,
    grid: TorusGrid,
    samples: Vec<Complex64>,
    origin_cell: Complex64,
}

impl GreenGrid {
    /// Evaluator suited to the grid: calibration covers the grid corners.
    pub fn evaluator(p: &SpectralParam, grid: &TorusGrid) -> Result<GreenFunction> {
        GreenFunction::with_far_radius(p, grid.half_width() * 2f64.sqrt())
    }

    /// Value at storage index `idx`, with the node attached to errors.
    pub fn node_value(g: &GreenFunction, grid: &TorusGrid, idx: usize) -> Result<Complex64> {
        if idx == grid.origin_index() {
            return Ok(Complex64::new(0.0, 0.0));
        }
        let z = grid.node_at(idx);
        g.eval(z).map_err(|e| Error::Node {
            x1: z.re,
            x2: z.im,
            source: Box::new(e),
        })
    }

    /// Sequential evaluation at every node.
    pub fn compute(p: &SpectralParam, grid: &TorusGrid) -> Result<Self> {
        let g = Self::evaluator(p, grid)?;
        let samples = (0..grid.len())
            .map(|idx| Self::node_value(&g, grid, idx))
            .collect::<Result<Vec<_>>>()?;
        Self::from_samples(&g, grid, samples)
    }

    /// Wraps samples computed elsewhere (for example in parallel) with the
    /// evaluator `g` that produced them; the origin sample is forced to 0.
    pub fn from_samples(g: &GreenFunction, grid: &TorusGrid, mut samples: Vec<Complex64>) -> Result<Self> {
        if samples.len() != grid.len() {
            return Err(Error::invalid("sample count does not match the grid"));
        }
        samples[grid.origin_index()] = Complex64::new(0.0, 0.0);
        let p = g.param();
        Ok(GreenGrid {
            lambda: p.lambda(),
            energy: p.energy(),
            grid: *grid,
            samples,
            origin_cell: g.origin_cell_average(grid.spacing())?,
        })
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

    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }

    pub fn at(&self, i: usize, j: usize) -> Complex64 {
        self.samples[self.grid.index(i, j)]
    }

    /// Mean of `g_λ` over the grid cell centred at the origin.
    pub fn origin_cell(&self) -> Complex64 {
        self.origin_cell
    }
}

/// Grid exponents accepted by [`green_grid`].
pub const GRID_EXPONENTS: core::ops::RangeInclusive<u32> = 5..=10;

pub fn green_grid(p: &SpectralParam, m: u32, s: f64) -> Result<GreenGrid> {
    if !GRID_EXPONENTS.contains(&m) {
        return Err(Error::invalid(alloc::format!("grid exponent {m} outside 5..=10")));
    }
    GreenGrid::compute(p, &TorusGrid::new(m, s)?)
}
