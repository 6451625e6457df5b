use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_traits::Float;

use crate::error::{Error, Result};

/// An `n`-point Gauss–Legendre rule mapped onto `[a, b]`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadratureRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    interval: (f64, f64),
}

impl QuadratureRule {
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn interval(&self) -> (f64, f64) {
        self.interval
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Integrates a real function.
    pub fn integrate<F: FnMut(f64) -> f64>(&self, mut f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }

    /// The same rule affinely mapped onto `[a, b]`.
    pub fn remap(&self, a: f64, b: f64) -> QuadratureRule {
        let (a0, b0) = self.interval;
        let scale = (b - a) / (b0 - a0);
        QuadratureRule {
            nodes: self.nodes.iter().map(|&x| a + (x - a0) * scale).collect(),
            weights: self.weights.iter().map(|&w| w * scale).collect(),
            interval: (a, b),
        }
    }
}

/// Gauss–Legendre nodes and weights on `[a, b]`, exact for polynomials of
/// degree `≤ 2n − 1`. Nodes are returned in increasing order.
pub fn gauss_legendre(n: usize, a: f64, b: f64) -> Result<QuadratureRule> {
    if n == 0 {
        return Err(Error::invalid("gauss_legendre needs at least one node"));
    }
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(Error::invalid(format!(
            "gauss_legendre needs a finite interval with a < b, got [{a}, {b}]"
        )));
    }
    let mut nodes = alloc::vec![0.0; n];
    let mut weights = alloc::vec![0.0; n];
    let half = 0.5 * (b - a);
    let mid = 0.5 * (b + a);
    let nf = n as f64;
    for i in 0..n.div_ceil(2) {
        // Newton iteration on P_n from the Tricomi initial guess.
        let mut x = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre(n, x);
        if d != 0.0 {
            dp = d;
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = mid - half * x;
        nodes[n - 1 - i] = mid + half * x;
        weights[i] = half * w;
        weights[n - 1 - i] = half * w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = mid;
    }
    Ok(QuadratureRule {
        nodes,
        weights,
        interval: (a, b),
    })
}

/// `(P_n(x), P_n'(x))` by the three-term recurrence.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let nf = n as f64;
    (p1, nf * (x * p1 - p0) / (x * x - 1.0))
}
