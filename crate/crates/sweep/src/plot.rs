//! SVG renderings of a sweep: `t` against λ for one α, and the whole
//! (α, λ) matrix as a heatmap.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::error::{io_error, Result, SweepError};
use crate::sweep::SweepReport;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 420.0;
const MARGIN_LEFT: f64 = 70.0;
const MARGIN_RIGHT: f64 = 20.0;
const MARGIN_TOP: f64 = 30.0;
const MARGIN_BOTTOM: f64 = 50.0;

struct Frame {
    x: (f64, f64),
    y: (f64, f64),
}

impl Frame {
    fn px(&self, x: f64) -> f64 {
        let w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
        MARGIN_LEFT + (x - self.x.0) / (self.x.1 - self.x.0) * w
    }

    fn py(&self, y: f64) -> f64 {
        let h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
        HEIGHT - MARGIN_BOTTOM - (y - self.y.0) / (self.y.1 - self.y.0) * h
    }
}

fn widen(lo: f64, hi: f64) -> (f64, f64) {
    if hi > lo {
        (lo, hi)
    } else {
        (lo - 0.5, hi + 0.5)
    }
}

fn header(svg: &mut String, title: &str) {
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(svg, r#"<text x="{}" y="18" text-anchor="middle">{title}</text>"#, WIDTH / 2.0);
}

/// Frame with tick labels spread over `ticks` (the data range), which may
/// sit inside the drawn range.
fn axes(svg: &mut String, f: &Frame, ticks: &Frame, xlabel: &str, ylabel: &str) {
    let (x0, x1) = (f.px(f.x.0), f.px(f.x.1));
    let (y0, y1) = (f.py(f.y.0), f.py(f.y.1));
    let _ = writeln!(svg, r#"<rect x="{x0}" y="{y1}" width="{}" height="{}" fill="none" stroke="black"/>"#, x1 - x0, y0 - y1);
    for k in 0..=4 {
        let u = k as f64 / 4.0;
        let xv = ticks.x.0 + u * (ticks.x.1 - ticks.x.0);
        let yv = ticks.y.0 + u * (ticks.y.1 - ticks.y.0);
        let _ = writeln!(svg, r#"<text x="{:.1}" y="{:.1}" text-anchor="middle">{xv:.3}</text>"#, f.px(xv), y0 + 16.0);
        let _ = writeln!(svg, r#"<text x="{:.1}" y="{:.1}" text-anchor="end">{}</text>"#, x0 - 6.0, f.py(yv) + 4.0, short(yv));
    }
    let _ = writeln!(svg, r#"<text x="{}" y="{}" text-anchor="middle">{xlabel}</text>"#, (x0 + x1) / 2.0, HEIGHT - 12.0);
    let _ = writeln!(
        svg,
        r#"<text x="16" y="{0}" text-anchor="middle" transform="rotate(-90 16 {0})">{ylabel}</text>"#,
        (y0 + y1) / 2.0
    );
}

fn short(v: f64) -> String {
    if v != 0.0 && (v.abs() >= 1e4 || v.abs() < 1e-2) {
        format!("{v:.2e}")
    } else {
        format!("{v:.3}")
    }
}

fn write_svg(path: &Path, svg: &str) -> Result<()> {
    fs::write(path, svg).map_err(io_error(path))
}

/// Real part of `t` against λ for `alphas[alpha_index]`, with detected
/// brackets shaded and unconverged samples marked. The vertical range is
/// clipped to the 2nd–98th percentiles so poles do not flatten the curve.
pub fn profile_svg(report: &SweepReport, alpha_index: usize) -> Result<String> {
    let Some(&alpha) = report.alphas.get(alpha_index) else {
        return Err(SweepError::Config(format!("no α with index {alpha_index}")));
    };
    let row = report.row(alpha_index);
    let values: Vec<f64> = row.iter().map(|s| s.t.re).filter(|v| v.is_finite()).collect();
    let (lo, hi) = match (percentile(&values, 0.02), percentile(&values, 0.98)) {
        (Some(lo), Some(hi)) => widen(lo, hi),
        _ => (-1.0, 1.0),
    };
    let (lmin, lmax) = widen(report.lambdas[0], *report.lambdas.last().unwrap_or(&report.lambdas[0]));
    let f = Frame { x: (lmin, lmax), y: (lo, hi) };
    let mut svg = String::new();
    header(&mut svg, &format!("Re t(λ), α = {alpha}"));
    for b in &report.brackets[alpha_index] {
        let (x0, x1) = (f.px(b.lo), f.px(b.hi));
        let _ = writeln!(
            svg,
            r##"<rect x="{x0:.2}" y="{:.2}" width="{:.2}" height="{:.2}" fill="#f4b6b6"/>"##,
            f.py(hi),
            (x1 - x0).max(1.0),
            f.py(lo) - f.py(hi)
        );
    }
    if lo < 0.0 && hi > 0.0 {
        let _ = writeln!(svg, r##"<line x1="{}" x2="{}" y1="{2:.2}" y2="{2:.2}" stroke="#999"/>"##, f.px(lmin), f.px(lmax), f.py(0.0));
    }
    let mut path = String::new();
    let mut pen_down = false;
    for s in row {
        let v = s.t.re;
        if !v.is_finite() || v < lo || v > hi {
            pen_down = false;
            continue;
        }
        let _ = write!(path, "{}{:.2},{:.2} ", if pen_down { "L" } else { "M" }, f.px(s.lambda.re), f.py(v));
        pen_down = true;
    }
    let _ = writeln!(svg, r#"<path d="{}" fill="none" stroke="black" stroke-width="1.5"/>"#, path.trim_end());
    for s in row.iter().filter(|s| !s.converged) {
        let _ = writeln!(svg, r#"<circle cx="{:.2}" cy="{:.2}" r="3" fill="red"/>"#, f.px(s.lambda.re), f.py(hi));
    }
    axes(&mut svg, &f, &Frame { x: f.x, y: f.y }, "λ", "Re t");
    svg.push_str("</svg>\n");
    Ok(svg)
}

pub fn emit_profile_svg(report: &SweepReport, alpha_index: usize, path: &Path) -> Result<()> {
    write_svg(path, &profile_svg(report, alpha_index)?)
}

fn percentile(values: &[f64], q: f64) -> Option<f64> {
    if values.is_empty() {
        return None;
    }
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let pos = q * (v.len() - 1) as f64;
    let (i, frac) = (pos.floor() as usize, pos.fract());
    Some(if i + 1 < v.len() { v[i] * (1.0 - frac) + v[i + 1] * frac } else { v[i] })
}

/// Grey level for `v` on a scale symmetric about 0: black at `−limit`,
/// white at `+limit`.
fn shade(v: f64, limit: f64) -> String {
    let u = ((v / limit).clamp(-1.0, 1.0) + 1.0) / 2.0;
    let g = (u * 255.0).round() as u8;
    format!("#{g:02x}{g:02x}{g:02x}")
}

/// The (α, λ) matrix of Re t. Colours are clipped at the larger magnitude
/// of the 2nd and 98th percentiles; failed samples are drawn red.
pub fn heatmap_svg(report: &SweepReport) -> String {
    let values: Vec<f64> = report.samples.iter().map(|s| s.t.re).filter(|v| v.is_finite()).collect();
    let limit = match (percentile(&values, 0.02), percentile(&values, 0.98)) {
        (Some(lo), Some(hi)) if lo.abs().max(hi.abs()) > 0.0 => lo.abs().max(hi.abs()),
        _ => 1.0,
    };
    let (nl, na) = (report.lambdas.len(), report.alphas.len());
    let step = |v: &[f64]| if v.len() > 1 { (v[v.len() - 1] - v[0]) / (v.len() - 1) as f64 } else { 1.0 };
    let (dl, da) = (step(&report.lambdas), step(&report.alphas));
    let f = Frame {
        x: (report.lambdas[0] - dl / 2.0, report.lambdas[nl - 1] + dl / 2.0),
        y: (report.alphas[0] - da / 2.0, report.alphas[na - 1] + da / 2.0),
    };
    let mut svg = String::new();
    header(&mut svg, &format!("Re t(α, λ), colour range ±{}", short(limit)));
    for a in 0..na {
        for l in 0..nl {
            let s = report.sample(a, l);
            let (x0, x1) = (f.px(report.lambdas[l] - dl / 2.0), f.px(report.lambdas[l] + dl / 2.0));
            let (y0, y1) = (f.py(report.alphas[a] - da / 2.0), f.py(report.alphas[a] + da / 2.0));
            let fill = if s.t.re.is_finite() { shade(s.t.re, limit) } else { "#d62728".to_string() };
            let _ = writeln!(
                svg,
                r#"<rect x="{x0:.2}" y="{y1:.2}" width="{:.2}" height="{:.2}" fill="{fill}"/>"#,
                x1 - x0 + 0.3,
                y0 - y1 + 0.3
            );
        }
    }
    let data = Frame {
        x: widen(report.lambdas[0], report.lambdas[nl - 1]),
        y: widen(report.alphas[0], report.alphas[na - 1]),
    };
    axes(&mut svg, &f, &data, "λ", "α");
    svg.push_str("</svg>\n");
    svg
}

pub fn emit_heatmap_svg(report: &SweepReport, path: &Path) -> Result<()> {
    write_svg(path, &heatmap_svg(report))
}
