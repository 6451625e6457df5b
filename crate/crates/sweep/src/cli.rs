//! The `faddeev` command line.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{ArgAction, CommandFactory, Parser, Subcommand, ValueEnum};
use faddeev_core::green::{GreenFunction, DEFAULT_FAR_RADIUS};
use faddeev_core::ls::{ls_solve, periodize_green, CgoField, TorusGrid, DEFAULT_CUTOFF, DEFAULT_HALF_WIDTH};
use faddeev_core::numerics::GmresOptions;
use faddeev_core::potentials::{c_hat, smallness_bound_with, PotentialKind, PotentialSpec};
use faddeev_core::scatter::{dbar_parameters, dbar_residual_from_fields, sample_from_grid, DEFAULT_DLAMBDA};
use faddeev_core::spectral::SpectralParam;
use faddeev_core::Complex64;
use rayon::prelude::*;

use crate::cache::compute_green_grid;
use crate::config::{load_config, to_args};
use crate::error::{io_error, Result, SweepError};
use crate::plot::{emit_heatmap_svg, emit_profile_svg};
use crate::sweep::{run_sweep, SweepConfig};
use crate::table::emit_csv;

/// Grid exponent for single solves when `--M` is not given.
pub const DEFAULT_EXPONENT: u32 = 8;

#[derive(Debug, Parser)]
#[command(name = "faddeev", version, args_override_self = true, about = "Faddeev Green's functions, CGO solutions and scattering transforms at positive energy")]
pub struct Cli {
    /// Energy E > 0.
    #[arg(long, global = true, default_value_t = 1.0)]
    pub energy: f64,

    /// Grid exponent: the torus has 2^M × 2^M nodes.
    #[arg(long = "M", global = true)]
    pub exponent: Option<u32>,

    /// Worker threads (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    pub workers: usize,

    /// Directory for output files.
    #[arg(long, global = true, default_value = ".")]
    pub out_dir: PathBuf,

    /// `key = value` file with defaults for any flag; flags given on the
    /// command line win.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Potential {
    Q1,
    Q2,
}

impl From<Potential> for PotentialKind {
    fn from(p: Potential) -> Self {
        match p {
            Potential::Q1 => PotentialKind::Q1,
            Potential::Q2 => PotentialKind::Q2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    /// 88 λ × 15 α at M = 7.
    Desk,
    /// 250 λ × 701 α at M = 8.
    Full,
}

#[derive(Clone, Copy, Debug, clap::Args)]
pub struct SolverArgs {
    #[arg(long, default_value_t = GmresOptions::default().tol)]
    pub tol: f64,
    #[arg(long, default_value_t = GmresOptions::default().restart)]
    pub restart: usize,
    #[arg(long, default_value_t = GmresOptions::default().max_iter)]
    pub max_iter: usize,
}

impl SolverArgs {
    fn options(&self) -> GmresOptions {
        GmresOptions {
            tol: self.tol,
            restart: self.restart,
            max_iter: self.max_iter,
        }
    }
}

#[derive(Clone, Debug, clap::Args)]
pub struct FieldArgs {
    /// Spectral parameter as RE,IM.
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub lambda: Complex64,
    #[arg(long, value_enum, default_value_t = Potential::Q1)]
    pub potential: Potential,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub alpha: f64,
    #[command(flatten)]
    pub solver: SolverArgs,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print g_λ(z).
    Green {
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        lambda: Complex64,
        /// Point as X1,X2.
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        z: Complex64,
    },
    /// Solve for μ(·, λ) and write it as CSV.
    Mu {
        #[command(flatten)]
        field: FieldArgs,
        /// Output file, relative to --out-dir.
        #[arg(long, default_value = "mu.csv")]
        out: PathBuf,
    },
    /// Print the scattering transform t(λ).
    Tk {
        #[command(flatten)]
        field: FieldArgs,
    },
    /// Print the d-bar residual at λ.
    Dbar {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, default_value_t = DEFAULT_DLAMBDA)]
        dlambda: f64,
    },
    /// Sweep α and real λ, detect exceptional points and write CSV and SVG.
    Sweep(SweepArgs),
    /// Print the smallness bound on the potential strength.
    Bound {
        #[arg(long, default_value_t = 1.0)]
        epsilon: f64,
    },
    /// Print the calibrated quadrature panel counts for λ.
    Calibrate {
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        lambda: Complex64,
        /// Largest radius covered by the calibration.
        #[arg(long, default_value_t = DEFAULT_FAR_RADIUS)]
        far_radius: f64,
    },
}

#[derive(Clone, Debug, clap::Args)]
pub struct SweepArgs {
    #[arg(long, value_enum, default_value_t = Preset::Desk)]
    pub preset: Preset,
    #[arg(long, value_enum, default_value_t = Potential::Q1)]
    pub potential: Potential,
    #[arg(long)]
    pub lambda_min: Option<f64>,
    #[arg(long)]
    pub lambda_max: Option<f64>,
    #[arg(long)]
    pub lambda_count: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha_min: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha_max: Option<f64>,
    #[arg(long)]
    pub alpha_count: Option<usize>,
    #[command(flatten)]
    pub solver: SolverArgs,
    /// α values to draw profiles for (nearest grid α). Defaults to every α
    /// when there are at most 15.
    #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
    pub profile_alpha: Vec<f64>,
    /// Skip the t(1/λ) = t(λ) spot check.
    #[arg(long, action = ArgAction::SetTrue)]
    pub no_spot_check: bool,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

/// `RE,IM`, or a bare real number.
pub fn parse_complex(s: &str) -> std::result::Result<Complex64, String> {
    let mut parts = s.split(',').map(str::trim);
    let re = parts.next().unwrap_or("");
    let im = parts.next().unwrap_or("0");
    if parts.next().is_some() {
        return Err(format!("expected RE,IM, got {s:?}"));
    }
    let num = |v: &str| v.parse::<f64>().map_err(|e| format!("{v:?}: {e}"));
    Ok(Complex64::new(num(re)?, num(im)?))
}

fn config_path(args: &[OsString]) -> Option<PathBuf> {
    let mut it = args.iter().skip(1);
    while let Some(a) = it.next() {
        let a = a.to_string_lossy();
        if a == "--config" {
            return it.next().map(PathBuf::from);
        }
        if let Some(v) = a.strip_prefix("--config=") {
            return Some(PathBuf::from(v));
        }
    }
    None
}

/// Inserts the config file's entries right after the subcommand so that
/// later command-line flags override them. Keys the chosen subcommand does
/// not take are ignored; keys no command takes are an error.
pub fn expand_args(args: Vec<OsString>) -> Result<Vec<OsString>> {
    let Some(path) = config_path(&args) else {
        return Ok(args);
    };
    let entries = load_config(&path)?;
    let root = Cli::command();
    let long_names = |cmd: &clap::Command| -> Vec<(String, bool)> {
        cmd.get_arguments()
            .filter_map(|a| {
                let takes_value = a.get_num_args().map_or(true, |n| n.takes_values());
                a.get_long().map(|l| (l.to_string(), !takes_value))
            })
            .collect()
    };
    let globals = long_names(&root);
    let position = args.iter().position(|a| {
        let a = a.to_string_lossy();
        root.get_subcommands().any(|c| c.get_name() == a)
    });
    let Some(position) = position else {
        return Ok(args);
    };
    let name = args[position].to_string_lossy().into_owned();
    let sub = root.find_subcommand(&name).expect("subcommand was matched by name");
    let mut accepted = globals.clone();
    accepted.extend(long_names(sub));
    let known_anywhere = |key: &str| {
        globals.iter().any(|(k, _)| k == key)
            || root.get_subcommands().any(|c| long_names(c).iter().any(|(k, _)| k == key))
    };
    for e in &entries {
        if !known_anywhere(&e.key) {
            return Err(SweepError::Format {
                path: path.clone(),
                message: format!("unknown key {:?}", e.key),
            });
        }
    }
    let relevant: Vec<_> = entries
        .into_iter()
        .filter(|e| e.key != "config" && accepted.iter().any(|(k, _)| *k == e.key))
        .collect();
    let flags: Vec<String> = accepted.iter().filter(|(_, f)| *f).map(|(k, _)| k.clone()).collect();
    let mut out = args[..=position].to_vec();
    out.extend(to_args(&relevant, &flags).into_iter().map(OsString::from));
    out.extend_from_slice(&args[position + 1..]);
    Ok(out)
}

fn param(lambda: Complex64, energy: f64) -> Result<SpectralParam> {
    Ok(SpectralParam::new(lambda, energy)?)
}

fn grid_for(cli: &Cli) -> Result<TorusGrid> {
    Ok(TorusGrid::new(cli.exponent.unwrap_or(DEFAULT_EXPONENT), DEFAULT_HALF_WIDTH)?)
}

fn spec(potential: Potential, alpha: f64) -> PotentialSpec {
    match potential {
        Potential::Q1 => PotentialSpec::q1(alpha),
        Potential::Q2 => PotentialSpec::q2(alpha),
    }
}

fn solve_field(p: &SpectralParam, grid: &TorusGrid, q: &[f64], opts: &GmresOptions) -> Result<CgoField> {
    let green = compute_green_grid(p, grid)?;
    let kernel = periodize_green(&green, grid, DEFAULT_CUTOFF)?;
    Ok(ls_solve(&kernel, q, opts)?)
}

fn out_path(cli: &Cli, name: &Path) -> Result<PathBuf> {
    std::fs::create_dir_all(&cli.out_dir).map_err(io_error(&cli.out_dir))?;
    Ok(cli.out_dir.join(name))
}

fn write_field(path: &Path, field: &CgoField) -> Result<()> {
    let fail = |e: csv::Error| SweepError::Format {
        path: path.to_path_buf(),
        message: e.to_string(),
    };
    let file = std::fs::File::create(path).map_err(io_error(path))?;
    let mut w = csv::Writer::from_writer(std::io::BufWriter::new(file));
    w.write_record(["x1", "x2", "re_mu", "im_mu"]).map_err(fail)?;
    for (idx, mu) in field.mu().iter().enumerate() {
        let z = field.grid().node_at(idx);
        w.write_record([z.re.to_string(), z.im.to_string(), mu.re.to_string(), mu.im.to_string()])
            .map_err(fail)?;
    }
    w.flush().map_err(io_error(path))
}

fn sweep_config(cli: &Cli, args: &SweepArgs) -> SweepConfig {
    let base = match args.preset {
        Preset::Desk => SweepConfig::desk(args.potential.into()),
        Preset::Full => SweepConfig::full(args.potential.into()),
    };
    SweepConfig {
        lambda_min: args.lambda_min.unwrap_or(base.lambda_min),
        lambda_max: args.lambda_max.unwrap_or(base.lambda_max),
        lambda_count: args.lambda_count.unwrap_or(base.lambda_count),
        alpha_min: args.alpha_min.unwrap_or(base.alpha_min),
        alpha_max: args.alpha_max.unwrap_or(base.alpha_max),
        alpha_count: args.alpha_count.unwrap_or(base.alpha_count),
        exponent: cli.exponent.unwrap_or(base.exponent),
        energy: cli.energy,
        gmres: args.solver.options(),
        out_dir: cli.out_dir.clone(),
        workers: cli.workers,
        spot_check_seed: (!args.no_spot_check).then_some(args.seed),
        ..base
    }
}

fn nearest(values: &[f64], target: f64) -> usize {
    (0..values.len())
        .min_by(|&a, &b| (values[a] - target).abs().total_cmp(&(values[b] - target).abs()))
        .unwrap_or(0)
}

fn run_sweep_command(cli: &Cli, args: &SweepArgs, out: &mut dyn Write) -> Result<()> {
    let cfg = sweep_config(cli, args);
    let report = run_sweep(&cfg)?;
    let csv_path = out_path(cli, Path::new("sweep.csv"))?;
    emit_csv(&report, &csv_path)?;
    let heatmap = out_path(cli, Path::new("heatmap.svg"))?;
    emit_heatmap_svg(&report, &heatmap)?;
    let mut profiles: Vec<usize> = if args.profile_alpha.is_empty() {
        if report.alphas.len() <= 15 {
            (0..report.alphas.len()).collect()
        } else {
            Vec::new()
        }
    } else {
        args.profile_alpha.iter().map(|&a| nearest(&report.alphas, a)).collect()
    };
    profiles.dedup();
    for &a in &profiles {
        let path = out_path(cli, Path::new(&format!("profile_alpha_{}.svg", report.alphas[a])))?;
        emit_profile_svg(&report, a, &path)?;
    }
    let unconverged = report.samples.iter().filter(|s| !s.converged).count();
    let stdout = |e| io_error("<stdout>")(e);
    writeln!(
        out,
        "{} samples ({} α × {} λ, M = {}) in {:.1} s; {} unconverged, {} failed",
        report.samples.len(),
        report.alphas.len(),
        report.lambdas.len(),
        cfg.exponent,
        report.elapsed_seconds,
        unconverged,
        report.failures.len()
    )
    .map_err(stdout)?;
    for (alpha, brackets) in report.alphas.iter().zip(&report.brackets) {
        let list: Vec<String> = brackets.iter().map(|b| format!("[{:.4}, {:.4}]", b.lo, b.hi)).collect();
        writeln!(out, "alpha {alpha}: {} bracket(s) {}", brackets.len(), list.join(" ")).map_err(stdout)?;
    }
    if let Some(check) = report.spot_check {
        writeln!(
            out,
            "spot check: alpha {} lambda {}: t = {}, t(1/lambda) = {}, relative gap {:.2e}",
            check.alpha,
            check.lambda,
            check.t,
            check.t_inverse,
            check.relative_gap()
        )
        .map_err(stdout)?;
    }
    for f in &report.failures {
        writeln!(
            out,
            "failed: alpha {} lambda {}: {}",
            report.alphas[f.alpha_index], report.lambdas[f.lambda_index], f.message
        )
        .map_err(stdout)?;
    }
    writeln!(out, "wrote {}", csv_path.display()).map_err(stdout)?;
    Ok(())
}

/// Runs one parsed command, printing results to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<()> {
    let stdout = |e| io_error("<stdout>")(e);
    let pool = rayon::ThreadPoolBuilder::new().num_threads(cli.workers).build()?;
    match &cli.command {
        Command::Green { lambda, z } => {
            let g = GreenFunction::new(&param(*lambda, cli.energy)?)?.eval(*z)?;
            writeln!(out, "{:.11e} {:.11e}", g.re, g.im).map_err(stdout)?;
        }
        Command::Mu { field, out: file } => {
            let p = param(field.lambda, cli.energy)?;
            let grid = grid_for(cli)?;
            let q = spec(field.potential, field.alpha).sample(&grid);
            let mu = pool.install(|| solve_field(&p, &grid, &q, &field.solver.options()))?;
            let path = out_path(cli, file)?;
            write_field(&path, &mu)?;
            let report = mu.report();
            writeln!(
                out,
                "converged {} after {} iterations (residual {:.3e}); wrote {}",
                report.converged,
                report.iterations,
                report.final_residual,
                path.display()
            )
            .map_err(stdout)?;
        }
        Command::Tk { field } => {
            let p = param(field.lambda, cli.energy)?;
            let grid = grid_for(cli)?;
            let q = spec(field.potential, field.alpha).sample(&grid);
            let green = pool.install(|| compute_green_grid(&p, &grid))?;
            let (_, s) = sample_from_grid(&green, &q, field.alpha, &p, &field.solver.options())?;
            writeln!(
                out,
                "{:.11e} {:.11e} converged={} iterations={} ls_residual={:.3e}",
                s.t.re, s.t.im, s.converged, s.gmres_iterations, s.ls_residual
            )
            .map_err(stdout)?;
        }
        Command::Dbar { field, dlambda } => {
            let p = param(field.lambda, cli.energy)?;
            let grid = grid_for(cli)?;
            let q = spec(field.potential, field.alpha).sample(&grid);
            let params = dbar_parameters(&p, *dlambda)?;
            let opts = field.solver.options();
            let fields = pool.install(|| {
                params
                    .par_iter()
                    .map(|pp| solve_field(pp, &grid, &q, &opts))
                    .collect::<Result<Vec<_>>>()
            })?;
            let r = dbar_residual_from_fields(&fields, &q, &p, *dlambda)?;
            writeln!(out, "{r:.6e}").map_err(stdout)?;
        }
        Command::Sweep(args) => run_sweep_command(cli, args, out)?,
        Command::Bound { epsilon } => {
            let c = c_hat();
            let bound = smallness_bound_with(*epsilon, c)?;
            writeln!(out, "c_hat = {c:.12}").map_err(stdout)?;
            writeln!(out, "smallness bound (epsilon = {epsilon}) = {bound:.12}").map_err(stdout)?;
        }
        Command::Calibrate { lambda, far_radius } => {
            let p = param(*lambda, cli.energy)?;
            let g = GreenFunction::with_far_radius(&p, *far_radius)?;
            let r = g.reduced();
            writeln!(out, "k1 = {}, k2 = {}, theta = {}", r.k1, r.k2, r.theta).map_err(stdout)?;
            for (scale, counts) in g.panel_counts() {
                writeln!(out, "scale {scale}: T1 {} T2 {} T3 {}", counts.t1, counts.t2, counts.t3).map_err(stdout)?;
            }
            let layer = g.layer().report();
            writeln!(
                out,
                "single layer: {} iterations, residual {:.2e}",
                layer.iterations, layer.final_residual
            )
            .map_err(stdout)?;
        }
    }
    Ok(())
}

/// Parses `args` (config file included) and runs the command.
pub fn run_from_args(args: Vec<OsString>, out: &mut dyn Write) -> Result<()> {
    let args = expand_args(args)?;
    let cli = Cli::try_parse_from(args).map_err(|e| SweepError::Config(e.to_string()))?;
    run(&cli, out)
}
