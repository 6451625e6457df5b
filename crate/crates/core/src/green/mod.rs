//! The positive-energy Faddeev Green's function `g_λ(z)`.
//!
//! Evaluation runs in the reduced frame: the plane is rotated so that
//! `ζ = [k1, 0] + i[0, k2]`, points with `x1 < 0` are mirrored through
//! `g(−x1, x2) = conj g(x1, x2)`, and the annulus `1 < |z| ≤ 2.5` (and
//! beyond) is covered by three contour integrals. Points with
//! `0.2 < |z| ≤ 1` are pushed into the annulus by `g_ζ(z) = g_{ζ/s}(sz)`
//! and the disk `|z| ≤ 0.2` uses a single-layer representation.

mod contour;
mod grid;
mod layer;

pub use contour::{
    calibrate_panels, calibrate_with, eval_contour, eval_contour_with, upper_limit_t1,
    upper_limit_t2, upper_limit_t3, ContourSpec, ContourVariant, CALIBRATION_CAP,
    CALIBRATION_START, CALIBRATION_TOL, PANEL_ORDER,
};
pub use grid::{green_grid, GreenGrid};
pub use layer::{circle_point, SingleLayerCache, LAYER_OFFSET, LAYER_POINTS, LAYER_RADIUS, LAYER_TOL};

use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::Float;

use core::f64::consts::{FRAC_PI_4, LN_2, PI};

use crate::error::{Error, Result};
use crate::numerics::EULER_GAMMA;
use crate::spectral::{reduce_zeta, ReducedZeta, SpectralParam};

/// Radius up to which calibrated panel counts are trusted when no other
/// radius is requested.
pub const DEFAULT_FAR_RADIUS: f64 = 3.0;

const INNER_RADIUS: f64 = 0.2;
const MIDDLE_RADIUS: f64 = 0.5;
const UNIT_RADIUS: f64 = 1.0;
const ANNULUS_RADIUS: f64 = 2.5;
const SECTOR_SLOPE: f64 = 0.5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DomainTag {
    D1a,
    D1b,
    D1c,
    A2,
    A3,
    A4,
    A5,
    A6,
    A7,
    Far,
}

/// Sector of the plane; the annulus domains `A2..A7` and their radial
/// continuation beyond `|z| = 2.5`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sector {
    A2,
    A3,
    A4,
    A5,
    A6,
    A7,
}

impl Sector {
    fn tag(self) -> DomainTag {
        match self {
            Sector::A2 => DomainTag::A2,
            Sector::A3 => DomainTag::A3,
            Sector::A4 => DomainTag::A4,
            Sector::A5 => DomainTag::A5,
            Sector::A6 => DomainTag::A6,
            Sector::A7 => DomainTag::A7,
        }
    }

    /// The contour used in this sector and whether the point is mirrored
    /// to `x1 ≥ 0` first.
    pub fn contour(self) -> (ContourVariant, bool) {
        match self {
            Sector::A2 => (ContourVariant::T1, false),
            Sector::A3 => (ContourVariant::T2, false),
            Sector::A4 => (ContourVariant::T2, true),
            Sector::A5 => (ContourVariant::T1, true),
            Sector::A6 => (ContourVariant::T3, true),
            Sector::A7 => (ContourVariant::T3, false),
        }
    }
}

/// Sector of a nonzero point. Points on a dividing line go to the sector
/// with the smaller number.
pub fn sector_of(z: Complex64) -> Sector {
    let (x1, x2) = (z.re, z.im);
    if x1 > 0.0 {
        if x2.abs() <= SECTOR_SLOPE * x1 {
            Sector::A2
        } else if x2 > 0.0 {
            Sector::A3
        } else {
            Sector::A7
        }
    } else if x1 == 0.0 {
        if x2 > 0.0 {
            Sector::A3
        } else {
            Sector::A6
        }
    } else {
        let w = SECTOR_SLOPE * x1.abs();
        if x2 >= w {
            Sector::A4
        } else if x2 >= -w {
            Sector::A5
        } else {
            Sector::A6
        }
    }
}

pub fn classify_domain(z: Complex64) -> Result<DomainTag> {
    let r = z.norm();
    if r == 0.0 {
        return Err(Error::SingularPoint);
    }
    Ok(if r <= INNER_RADIUS {
        DomainTag::D1a
    } else if r <= MIDDLE_RADIUS {
        DomainTag::D1b
    } else if r <= UNIT_RADIUS {
        DomainTag::D1c
    } else if r <= ANNULUS_RADIUS {
        sector_of(z).tag()
    } else {
        DomainTag::Far
    })
}

/// Calibrated composite-rule sizes for the three contours.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PanelCounts {
    pub t1: usize,
    pub t2: usize,
    pub t3: usize,
}

impl PanelCounts {
    pub fn get(&self, variant: ContourVariant) -> usize {
        match variant {
            ContourVariant::T1 => self.t1,
            ContourVariant::T2 => self.t2,
            ContourVariant::T3 => self.t3,
        }
    }

    fn set(&mut self, variant: ContourVariant, n: usize) {
        match variant {
            ContourVariant::T1 => self.t1 = n,
            ContourVariant::T2 => self.t2 = n,
            ContourVariant::T3 => self.t3 = n,
        }
    }
}

/// Worst-case probes of a variant's sectors: the dividing lines
/// `x2 = ±x1/2`, where `x1` or `|x2|` is smallest for the given radius.
fn probes(variant: ContourVariant, radius: f64) -> Vec<Complex64> {
    let along = radius * 2.0 / 5f64.sqrt();
    let across = radius / 5f64.sqrt();
    match variant {
        ContourVariant::T1 => alloc::vec![
            Complex64::new(along, across),
            Complex64::new(along, -across),
        ],
        ContourVariant::T2 => alloc::vec![Complex64::new(along, across)],
        ContourVariant::T3 => alloc::vec![Complex64::new(along, -across)],
    }
}

/// Calibrates every variant at probes on radii `1`, `2.5` and `far_radius`.
pub fn calibrate_annulus(red: &ReducedZeta, far_radius: f64) -> Result<PanelCounts> {
    let mut counts = PanelCounts {
        t1: CALIBRATION_START,
        t2: CALIBRATION_START,
        t3: CALIBRATION_START,
    };
    let mut radii = alloc::vec![UNIT_RADIUS, ANNULUS_RADIUS];
    if far_radius > ANNULUS_RADIUS {
        radii.push(far_radius);
    }
    for variant in ContourVariant::ALL {
        let mut n = CALIBRATION_START;
        for r in &radii {
            for z in probes(variant, *r) {
                n = n.max(calibrate_panels(red, variant, z)?);
            }
        }
        counts.set(variant, n);
    }
    Ok(counts)
}

/// Evaluates `g_ζ(z)` for `|z| > 1` in the reduced frame with fixed counts.
pub fn eval_annulus(z: Complex64, red: &ReducedZeta, counts: &PanelCounts) -> Result<Complex64> {
    let (variant, mirror) = sector_of(z).contour();
    let w = if mirror { Complex64::new(-z.re, z.im) } else { z };
    let g = eval_contour_with(w, red, variant, counts.get(variant), 1.0)?;
    Ok(if mirror { g.conj() } else { g })
}

/// Builds the single-layer cache for `red`, sampling the inner circle with
/// the annulus formulas.
pub fn single_layer_setup(red: &ReducedZeta) -> Result<SingleLayerCache> {
    let counts = calibrate_annulus(red, ANNULUS_RADIUS)?;
    single_layer_with(red, &counts)
}

fn single_layer_with(red: &ReducedZeta, counts: &PanelCounts) -> Result<SingleLayerCache> {
    let values = (0..LAYER_POINTS)
        .map(|k| eval_annulus(circle_point(LAYER_RADIUS, k), red, counts))
        .collect::<Result<Vec<_>>>()?;
    SingleLayerCache::from_boundary(red, &values)
}

#[derive(Clone, Debug)]
struct Level {
    scale: f64,
    reduced: ReducedZeta,
    counts: PanelCounts,
}

/// Ready-to-use evaluator for one spectral parameter: calibrated panel
/// counts for the three scaling levels and the single-layer density.
#[derive(Clone, Debug)]
pub struct GreenFunction {
    param: SpectralParam,
    reduced: ReducedZeta,
    levels: [Level; 3],
    layer: SingleLayerCache,
    far_radius: f64,
}

const LEVEL_SCALES: [f64; 3] = [1.0, 2.0, 5.0];

impl GreenFunction {
    pub fn new(p: &SpectralParam) -> Result<Self> {
        Self::with_far_radius(p, DEFAULT_FAR_RADIUS)
    }

    /// `far_radius` is the largest `|z|` for which the calibrated counts
    /// are used; beyond it each evaluation calibrates itself.
    pub fn with_far_radius(p: &SpectralParam, far_radius: f64) -> Result<Self> {
        if !(far_radius > 0.0 && far_radius.is_finite()) {
            return Err(Error::invalid("far radius must be positive and finite"));
        }
        let reduced = reduce_zeta(&p.zeta())?;
        let level = |scale: f64| -> Result<Level> {
            let red = reduced.scaled(scale);
            let far = if scale == 1.0 { far_radius } else { ANNULUS_RADIUS };
            Ok(Level {
                scale,
                reduced: red,
                counts: calibrate_annulus(&red, far)?,
            })
        };
        let levels = [
            level(LEVEL_SCALES[0])?,
            level(LEVEL_SCALES[1])?,
            level(LEVEL_SCALES[2])?,
        ];
        let layer = single_layer_with(&reduced, &levels[0].counts)?;
        Ok(GreenFunction {
            param: *p,
            reduced,
            levels,
            layer,
            far_radius,
        })
    }

    pub fn param(&self) -> &SpectralParam {
        &self.param
    }

    pub fn reduced(&self) -> &ReducedZeta {
        &self.reduced
    }

    pub fn layer(&self) -> &SingleLayerCache {
        &self.layer
    }

    pub fn far_radius(&self) -> f64 {
        self.far_radius
    }

    /// Panel counts of the unscaled level and the levels scaled by 2 and 5.
    pub fn panel_counts(&self) -> [(f64, PanelCounts); 3] {
        [
            (self.levels[0].scale, self.levels[0].counts),
            (self.levels[1].scale, self.levels[1].counts),
            (self.levels[2].scale, self.levels[2].counts),
        ]
    }

    /// Mean of `g_λ` over the square of side `h` centred at the origin.
    ///
    /// Near 0, `g = H(0) + i/4 − (ln(√E|z|/2) + γ)/2π + O(|z|)`, and the
    /// mean of `ln|z|` over the square is `ln h + π/4 − 3/2 − ln 2/2`.
    /// Odd terms cancel by symmetry; the rest is `O(h² ln h)`.
    pub fn origin_cell_average(&self, h: f64) -> Result<Complex64> {
        if !(h > 0.0 && h < LAYER_RADIUS) {
            return Err(Error::invalid("cell width must lie in (0, layer radius)"));
        }
        let smooth = self.layer.layer_value(Complex64::new(0.0, 0.0))?;
        let log_mean = (0.5 * self.reduced.sqrt_energy() * h).ln() + FRAC_PI_4 - 1.5 - 0.5 * LN_2;
        Ok(smooth + Complex64::new(0.0, 0.25) - (log_mean + EULER_GAMMA) / (2.0 * PI))
    }

    /// `g_λ(z)` in the original coordinates.
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        self.eval_reduced(self.reduced.rotate(z))
    }

    /// `g_ζ(w)` for a point already rotated into the reduced frame.
    pub fn eval_reduced(&self, w: Complex64) -> Result<Complex64> {
        match classify_domain(w)? {
            DomainTag::D1a => self.layer.eval(w),
            DomainTag::D1b => self.eval_level(&self.levels[2], w * self.levels[2].scale),
            DomainTag::D1c => self.eval_level(&self.levels[1], w * self.levels[1].scale),
            DomainTag::Far if w.norm() > self.far_radius => {
                let (variant, mirror) = sector_of(w).contour();
                let v = if mirror { Complex64::new(-w.re, w.im) } else { w };
                let g = eval_contour(v, &self.reduced, variant)?;
                Ok(if mirror { g.conj() } else { g })
            }
            _ => self.eval_level(&self.levels[0], w),
        }
    }

    fn eval_level(&self, level: &Level, w: Complex64) -> Result<Complex64> {
        eval_annulus(w, &level.reduced, &level.counts)
    }
}

/// One-shot evaluation of `g_λ(z)`. Builds a [`GreenFunction`]; reuse one
/// when evaluating at many points.
pub fn green_eval(z: Complex64, p: &SpectralParam) -> Result<Complex64> {
    if z == Complex64::new(0.0, 0.0) {
        return Err(Error::SingularPoint);
    }
    GreenFunction::new(p)?.eval(z)
}
