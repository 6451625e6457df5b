//! CSV form of a sweep report, one row per sample in α-major order.

use std::fs::File;
use std::io::{Read, Write};
use std::path::Path;

use faddeev_core::scatter::ScatteringSample;
use faddeev_core::Complex64;

use crate::error::{io_error, Result, SweepError};
use crate::sweep::SweepReport;

pub const HEADER: [&str; 8] = [
    "alpha",
    "lambda_re",
    "lambda_im",
    "t_re",
    "t_im",
    "converged",
    "gmres_iterations",
    "ls_residual",
];

/// Writes the report; `Display` for `f64` is the shortest decimal that
/// parses back to the same bits.
pub fn write_csv<W: Write>(report: &SweepReport, out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(HEADER)?;
    for s in &report.samples {
        w.write_record([
            s.alpha.to_string(),
            s.lambda.re.to_string(),
            s.lambda.im.to_string(),
            s.t.re.to_string(),
            s.t.im.to_string(),
            s.converged.to_string(),
            s.gmres_iterations.to_string(),
            s.ls_residual.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

fn csv_error(path: &Path, e: csv::Error) -> SweepError {
    match e.into_kind() {
        csv::ErrorKind::Io(source) => SweepError::Io {
            path: path.to_path_buf(),
            source,
        },
        other => SweepError::Format {
            path: path.to_path_buf(),
            message: format!("{other:?}"),
        },
    }
}

pub fn emit_csv(report: &SweepReport, path: &Path) -> Result<()> {
    let file = File::create(path).map_err(io_error(path))?;
    write_csv(report, std::io::BufWriter::new(file)).map_err(|e| csv_error(path, e))
}

/// Parses a report written by [`write_csv`]; brackets are re-detected.
/// `origin` only labels errors.
pub fn read_csv<R: Read>(input: R, origin: &Path) -> Result<SweepReport> {
    let bad = |line: usize, message: String| SweepError::Format {
        path: origin.to_path_buf(),
        message: format!("line {line}: {message}"),
    };
    let mut reader = csv::Reader::from_reader(input);
    let header = reader.headers().map_err(|e| csv_error(origin, e))?.clone();
    if header.iter().ne(HEADER.iter().copied()) {
        return Err(bad(1, format!("unexpected header {header:?}")));
    }
    let mut samples = Vec::new();
    for (k, record) in reader.records().enumerate() {
        let line = k + 2;
        let record = record.map_err(|e| csv_error(origin, e))?;
        let float = |i: usize| -> Result<f64> {
            record[i]
                .parse::<f64>()
                .map_err(|e| bad(line, format!("{}: {e}", HEADER[i])))
        };
        samples.push(ScatteringSample {
            alpha: float(0)?,
            lambda: Complex64::new(float(1)?, float(2)?),
            t: Complex64::new(float(3)?, float(4)?),
            converged: record[5]
                .parse::<bool>()
                .map_err(|e| bad(line, format!("converged: {e}")))?,
            gmres_iterations: record[6]
                .parse::<usize>()
                .map_err(|e| bad(line, format!("gmres_iterations: {e}")))?,
            ls_residual: float(7)?,
        });
    }
    let mut alphas: Vec<f64> = Vec::new();
    for s in &samples {
        if alphas.last().map_or(true, |a| a.to_bits() != s.alpha.to_bits()) {
            alphas.push(s.alpha);
        }
    }
    if alphas.is_empty() || samples.len() % alphas.len() != 0 {
        return Err(bad(0, "rows do not form an α-major matrix".into()));
    }
    let n = samples.len() / alphas.len();
    let lambdas: Vec<f64> = samples[..n].iter().map(|s| s.lambda.re).collect();
    for (k, s) in samples.iter().enumerate() {
        if s.alpha.to_bits() != alphas[k / n].to_bits() || s.lambda.re.to_bits() != lambdas[k % n].to_bits() {
            return Err(bad(k + 2, "rows do not form an α-major matrix".into()));
        }
    }
    Ok(SweepReport::from_samples(alphas, lambdas, samples))
}

pub fn load_csv(path: &Path) -> Result<SweepReport> {
    let file = File::open(path).map_err(io_error(path))?;
    read_csv(file, path)
}
