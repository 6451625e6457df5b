//! (α, λ) sweeps of the scattering transform over real λ > 1.

use std::path::PathBuf;
use std::sync::Arc;
use std::time::Instant;

use faddeev_core::green::GreenGrid;
use faddeev_core::ls::{ls_residual, ls_solve, periodize_green, TorusGrid, DEFAULT_CUTOFF, DEFAULT_HALF_WIDTH};
use faddeev_core::numerics::GmresOptions;
use faddeev_core::potentials::{PotentialKind, PotentialSpec};
use faddeev_core::scatter::{scattering_transform, ScatteringSample};
use faddeev_core::spectral::{in_exclusion_band, SpectralParam, DEFAULT_EXCLUSION_BAND};
use faddeev_core::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use crate::cache::{compute_green_grid, GreenCache};
use crate::detect::{detect_exceptional, Bracket, ProfilePoint};
use crate::error::{Result, SweepError};

#[derive(Clone, Debug, PartialEq)]
pub struct SweepConfig {
    pub lambda_min: f64,
    pub lambda_max: f64,
    pub lambda_count: usize,
    pub alpha_min: f64,
    pub alpha_max: f64,
    pub alpha_count: usize,
    pub exponent: u32,
    pub half_width: f64,
    pub energy: f64,
    pub potential: PotentialKind,
    pub gmres: GmresOptions,
    pub out_dir: PathBuf,
    /// Worker threads; 0 means one per available core.
    pub workers: usize,
    /// Check `t(1/λ) = t(λ)` at one λ drawn with this seed.
    pub spot_check_seed: Option<u64>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig::desk(PotentialKind::Q1)
    }
}

impl SweepConfig {
    /// 88 λ on [1.01, 4.5], α from −35 to 35 in steps of 5, M = 7.
    pub fn desk(potential: PotentialKind) -> Self {
        SweepConfig {
            lambda_min: 1.01,
            lambda_max: 4.5,
            lambda_count: 88,
            alpha_min: -35.0,
            alpha_max: 35.0,
            alpha_count: 15,
            exponent: 7,
            half_width: DEFAULT_HALF_WIDTH,
            energy: 1.0,
            potential,
            gmres: GmresOptions::default(),
            out_dir: PathBuf::from("."),
            workers: 0,
            spot_check_seed: Some(0),
        }
    }

    /// The full 250 × 701 grid at M = 8. Long-running.
    pub fn full(potential: PotentialKind) -> Self {
        SweepConfig {
            lambda_count: 250,
            alpha_count: 701,
            exponent: 8,
            ..SweepConfig::desk(potential)
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(SweepError::Config(msg));
        if self.lambda_count == 0 || self.alpha_count == 0 {
            return bad("counts must be at least 1".into());
        }
        if !(self.lambda_min.is_finite() && self.lambda_max.is_finite() && self.lambda_min <= self.lambda_max) {
            return bad(format!("bad lambda range [{}, {}]", self.lambda_min, self.lambda_max));
        }
        if !(self.alpha_min.is_finite() && self.alpha_max.is_finite() && self.alpha_min <= self.alpha_max) {
            return bad(format!("bad alpha range [{}, {}]", self.alpha_min, self.alpha_max));
        }
        if self.lambda_min <= 0.0 {
            return bad("lambda must be positive".into());
        }
        // The λ grid is monotone, so the band can only be hit when the
        // range reaches across or into it.
        let band = DEFAULT_EXCLUSION_BAND;
        if self.lambda_min < 1.0 + band && self.lambda_max > 1.0 - band {
            return bad(format!("lambda range [{}, {}] meets the unit-circle band", self.lambda_min, self.lambda_max));
        }
        if !(self.energy > 0.0 && self.energy.is_finite()) {
            return bad("energy must be positive".into());
        }
        if !(self.gmres.tol > 0.0) || self.gmres.restart == 0 || self.gmres.max_iter == 0 {
            return bad("solver settings must be positive".into());
        }
        TorusGrid::new(self.exponent, self.half_width)?;
        Ok(())
    }

    pub fn lambdas(&self) -> Vec<f64> {
        linspace(self.lambda_min, self.lambda_max, self.lambda_count)
    }

    pub fn alphas(&self) -> Vec<f64> {
        linspace(self.alpha_min, self.alpha_max, self.alpha_count)
    }

    pub fn grid(&self) -> Result<TorusGrid> {
        Ok(TorusGrid::new(self.exponent, self.half_width)?)
    }

    pub fn spec(&self, alpha: f64) -> PotentialSpec {
        match self.potential {
            PotentialKind::Q1 => PotentialSpec::q1(alpha),
            PotentialKind::Q2 => PotentialSpec::q2(alpha),
        }
    }

    fn pool(&self) -> Result<rayon::ThreadPool> {
        Ok(rayon::ThreadPoolBuilder::new().num_threads(self.workers).build()?)
    }
}

/// `count` evenly spaced values; a single value sits at `lo`.
pub fn linspace(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    match count {
        0 => Vec::new(),
        1 => vec![lo],
        _ => (0..count)
            .map(|k| if k + 1 == count { hi } else { lo + (hi - lo) * k as f64 / (count - 1) as f64 })
            .collect(),
    }
}

/// A sample that could not be computed; the matrix entry holds NaN.
#[derive(Clone, Debug, PartialEq)]
pub struct SampleFailure {
    pub alpha_index: usize,
    pub lambda_index: usize,
    pub message: String,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpotCheck {
    pub lambda: f64,
    pub alpha: f64,
    pub t: Complex64,
    pub t_inverse: Complex64,
}

impl SpotCheck {
    pub fn relative_gap(&self) -> f64 {
        (self.t - self.t_inverse).norm() / self.t.norm().max(1e-300)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepReport {
    pub alphas: Vec<f64>,
    pub lambdas: Vec<f64>,
    /// α-major: entry `a·n_λ + l` belongs to `alphas[a]`, `lambdas[l]`.
    pub samples: Vec<ScatteringSample>,
    pub brackets: Vec<Vec<Bracket>>,
    pub failures: Vec<SampleFailure>,
    pub spot_check: Option<SpotCheck>,
    pub elapsed_seconds: f64,
}

impl SweepReport {
    /// Builds a report from a sample matrix, detecting brackets per α.
    pub fn from_samples(alphas: Vec<f64>, lambdas: Vec<f64>, samples: Vec<ScatteringSample>) -> Self {
        assert_eq!(samples.len(), alphas.len() * lambdas.len(), "sample matrix has the wrong size");
        let mut report = SweepReport {
            alphas,
            lambdas,
            samples,
            brackets: Vec::new(),
            failures: Vec::new(),
            spot_check: None,
            elapsed_seconds: 0.0,
        };
        report.brackets = (0..report.alphas.len())
            .map(|a| detect_exceptional(&report.profile(a)))
            .collect();
        report
    }

    pub fn sample(&self, alpha_index: usize, lambda_index: usize) -> &ScatteringSample {
        &self.samples[alpha_index * self.lambdas.len() + lambda_index]
    }

    pub fn row(&self, alpha_index: usize) -> &[ScatteringSample] {
        let n = self.lambdas.len();
        &self.samples[alpha_index * n..(alpha_index + 1) * n]
    }

    pub fn profile(&self, alpha_index: usize) -> Vec<ProfilePoint> {
        self.row(alpha_index)
            .iter()
            .map(|s| (s.lambda.re, s.t, s.converged))
            .collect()
    }

    /// Same numbers, ignoring timing.
    pub fn same_results(&self, other: &SweepReport) -> bool {
        let bits = |r: &SweepReport| -> Vec<u64> {
            r.samples
                .iter()
                .flat_map(|s| [s.t.re.to_bits(), s.t.im.to_bits(), s.ls_residual.to_bits(), s.gmres_iterations as u64, s.converged as u64])
                .collect()
        };
        self.alphas == other.alphas
            && self.lambdas == other.lambdas
            && bits(self) == bits(other)
            && self.brackets == other.brackets
            && self.failures == other.failures
            && self.spot_check == other.spot_check
    }
}

fn failed_sample(lambda: f64, alpha: f64) -> ScatteringSample {
    ScatteringSample {
        lambda: Complex64::new(lambda, 0.0),
        alpha,
        t: Complex64::new(f64::NAN, f64::NAN),
        converged: false,
        gmres_iterations: 0,
        ls_residual: f64::NAN,
    }
}

fn solve_one(green: &GreenGrid, grid: &TorusGrid, cfg: &SweepConfig, p: &SpectralParam, alpha: f64) -> faddeev_core::Result<ScatteringSample> {
    let q = cfg.spec(alpha).sample(grid);
    let kernel = periodize_green(green, grid, DEFAULT_CUTOFF)?;
    let field = ls_solve(&kernel, &q, &cfg.gmres)?;
    Ok(ScatteringSample {
        lambda: p.lambda(),
        alpha,
        t: scattering_transform(&field, &q, p)?,
        converged: field.converged(),
        gmres_iterations: field.report().iterations,
        ls_residual: ls_residual(&field, &kernel, &q)?,
    })
}

type Column = Vec<std::result::Result<ScatteringSample, String>>;

fn sweep_column(cfg: &SweepConfig, grid: &TorusGrid, alphas: &[f64], lambda: f64, cache: Option<&GreenCache>) -> Column {
    let setup = || -> Result<(SpectralParam, Arc<GreenGrid>)> {
        let p = SpectralParam::new(Complex64::new(lambda, 0.0), cfg.energy)?;
        let green = match cache {
            Some(c) => c.get_or_compute(&p, grid)?,
            None => Arc::new(compute_green_grid(&p, grid)?),
        };
        Ok((p, green))
    };
    match setup() {
        Ok((p, green)) => alphas
            .par_iter()
            .map(|&alpha| solve_one(&green, grid, cfg, &p, alpha).map_err(|e| e.to_string()))
            .collect(),
        Err(e) => vec![Err(e.to_string()); alphas.len()],
    }
}

pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepReport> {
    run_sweep_cached(cfg, None)
}

/// Runs the sweep. Per-sample failures are recorded in the report; only an
/// invalid configuration is an error.
pub fn run_sweep_cached(cfg: &SweepConfig, cache: Option<&GreenCache>) -> Result<SweepReport> {
    cfg.validate()?;
    let started = Instant::now();
    let grid = cfg.grid()?;
    let alphas = cfg.alphas();
    let lambdas = cfg.lambdas();
    let pool = cfg.pool()?;
    let columns: Vec<Column> = pool.install(|| {
        lambdas
            .par_iter()
            .map(|&lambda| sweep_column(cfg, &grid, &alphas, lambda, cache))
            .collect()
    });

    let mut samples = Vec::with_capacity(alphas.len() * lambdas.len());
    let mut failures = Vec::new();
    for (a, &alpha) in alphas.iter().enumerate() {
        for (l, column) in columns.iter().enumerate() {
            match &column[a] {
                Ok(s) => samples.push(*s),
                Err(message) => {
                    samples.push(failed_sample(lambdas[l], alpha));
                    failures.push(SampleFailure {
                        alpha_index: a,
                        lambda_index: l,
                        message: message.clone(),
                    });
                }
            }
        }
    }
    let mut report = SweepReport::from_samples(alphas, lambdas, samples);
    report.failures = failures;
    if let Some(seed) = cfg.spot_check_seed {
        report.spot_check = pool.install(|| spot_check(cfg, &grid, &report, seed));
    }
    report.elapsed_seconds = started.elapsed().as_secs_f64();
    Ok(report)
}

/// `t` at `1/λ` for a randomly drawn converged sample, solved out of band.
fn spot_check(cfg: &SweepConfig, grid: &TorusGrid, report: &SweepReport, seed: u64) -> Option<SpotCheck> {
    let candidates: Vec<&ScatteringSample> = report
        .samples
        .iter()
        .filter(|s| s.converged && s.t.norm() > 0.0 && !in_exclusion_band(s.lambda.inv(), DEFAULT_EXCLUSION_BAND))
        .collect();
    if candidates.is_empty() {
        return None;
    }
    let pick = candidates[StdRng::seed_from_u64(seed).gen_range(0..candidates.len())];
    let p = SpectralParam::new(pick.lambda.inv(), cfg.energy).ok()?;
    let green = compute_green_grid(&p, grid).ok()?;
    let other = solve_one(&green, grid, cfg, &p, pick.alpha).ok()?;
    Some(SpotCheck {
        lambda: pick.lambda.re,
        alpha: pick.alpha,
        t: pick.t,
        t_inverse: other.t,
    })
}
