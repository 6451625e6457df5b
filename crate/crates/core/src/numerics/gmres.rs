//! Restarted GMRES for matrix-free complex linear operators.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::{Float, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GmresOptions {
    /// Relative residual target `‖A x − b‖ / ‖b‖`.
    pub tol: f64,
    /// Krylov dimension per cycle.
    pub restart: usize,
    /// Cap on the total number of Arnoldi steps over all cycles.
    pub max_iter: usize,
}

impl Default for GmresOptions {
    fn default() -> Self {
        GmresOptions {
            tol: 1e-7,
            restart: 50,
            max_iter: 400,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SolveReport {
    pub iterations: usize,
    /// True relative residual of the returned iterate.
    pub final_residual: f64,
    pub converged: bool,
}

fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

fn dot(u: &[Complex64], w: &[Complex64]) -> Complex64 {
    u.iter().zip(w).map(|(a, b)| a.conj() * b).sum()
}

/// Solves `A x = rhs` with restarted GMRES from a zero initial guess.
///
/// `apply(x, y)` must write `A x` into `y`. Running out of iterations is
/// reported through `SolveReport::converged`, not as an error; a non-finite
/// operator output is an error.
pub fn gmres_solve<F>(
    mut apply: F,
    rhs: &[Complex64],
    opts: &GmresOptions,
) -> Result<(Vec<Complex64>, SolveReport)>
where
    F: FnMut(&[Complex64], &mut [Complex64]),
{
    let n = rhs.len();
    if rhs.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::Numeric("gmres right-hand side"));
    }
    let bnorm = norm(rhs);
    let mut x = vec![Complex64::zero(); n];
    if bnorm == 0.0 {
        let report = SolveReport {
            iterations: 0,
            final_residual: 0.0,
            converged: true,
        };
        return Ok((x, report));
    }
    let m = opts.restart.max(1).min(n.max(1));
    let mut r = rhs.to_vec();
    let mut rel = 1.0;
    let mut iterations = 0;
    let mut basis: Vec<Vec<Complex64>> = Vec::with_capacity(m + 1);
    let mut w = vec![Complex64::zero(); n];
    // Column-major Hessenberg, (m + 1) × m.
    let mut h = vec![Complex64::zero(); (m + 1) * m];
    let mut cs = vec![0.0; m];
    let mut sn = vec![Complex64::zero(); m];
    let mut g = vec![Complex64::zero(); m + 1];

    while rel > opts.tol && iterations < opts.max_iter {
        let beta = norm(&r);
        basis.clear();
        basis.push(r.iter().map(|z| z / beta).collect());
        g.iter_mut().for_each(|v| *v = Complex64::zero());
        g[0] = Complex64::new(beta, 0.0);
        h.iter_mut().for_each(|v| *v = Complex64::zero());

        let mut k = 0;
        while k < m && iterations < opts.max_iter {
            apply(&basis[k], &mut w);
            if w.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
                return Err(Error::Numeric("gmres operator output"));
            }
            let col = &mut h[k * (m + 1)..(k + 1) * (m + 1)];
            for (i, v) in basis.iter().enumerate() {
                let hij = dot(v, &w);
                col[i] = hij;
                w.iter_mut().zip(v).for_each(|(a, b)| *a -= hij * b);
            }
            let hnext = norm(&w);
            col[k + 1] = Complex64::new(hnext, 0.0);

            for i in 0..k {
                let (a, b) = (col[i], col[i + 1]);
                col[i] = a * cs[i] + sn[i] * b;
                col[i + 1] = -sn[i].conj() * a + b * cs[i];
            }
            let (c, s) = givens(col[k], col[k + 1]);
            cs[k] = c;
            sn[k] = s;
            col[k] = col[k] * c + s * col[k + 1];
            col[k + 1] = Complex64::zero();
            g[k + 1] = -s.conj() * g[k];
            g[k] *= c;

            iterations += 1;
            k += 1;
            let estimate = g[k].norm() / bnorm;
            let breakdown = hnext <= 1e-14 * beta.max(1e-300) || hnext == 0.0;
            if estimate <= opts.tol || breakdown {
                break;
            }
            basis.push(w.iter().map(|z| z / hnext).collect());
        }

        // Back substitution on the rotated Hessenberg matrix.
        let mut y = vec![Complex64::zero(); k];
        for i in (0..k).rev() {
            let mut acc = g[i];
            for j in i + 1..k {
                acc -= h[j * (m + 1) + i] * y[j];
            }
            let diag = h[i * (m + 1) + i];
            y[i] = if diag.norm() > 1e-300 {
                acc / diag
            } else {
                Complex64::zero()
            };
        }
        for (j, yj) in y.iter().enumerate() {
            x.iter_mut().zip(&basis[j]).for_each(|(a, b)| *a += yj * b);
        }

        apply(&x, &mut w);
        if w.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::Numeric("gmres operator output"));
        }
        r.iter_mut()
            .zip(rhs.iter().zip(&w))
            .for_each(|(ri, (b, ax))| *ri = b - ax);
        let new_rel = norm(&r) / bnorm;
        let stalled = new_rel >= rel * (1.0 - 1e-12);
        rel = new_rel;
        if stalled {
            break;
        }
    }

    let report = SolveReport {
        iterations,
        final_residual: rel,
        converged: rel <= opts.tol,
    };
    Ok((x, report))
}

/// Complex Givens rotation `[c, s; −s̄, c]` annihilating `b` against `a`.
fn givens(a: Complex64, b: Complex64) -> (f64, Complex64) {
    let (na, nb) = (a.norm(), b.norm());
    if nb == 0.0 {
        (1.0, Complex64::zero())
    } else if na == 0.0 {
        (0.0, (b.conj() / nb))
    } else {
        let t = na.hypot(nb);
        (na / t, (a / na) * b.conj() / t)
    }
}
