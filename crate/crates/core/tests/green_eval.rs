use std::f64::consts::PI;
use std::sync::OnceLock;

use faddeev_core::green::{
    calibrate_panels, circle_point, classify_domain, eval_annulus, eval_contour,
    eval_contour_with, green_eval, green_grid, ContourVariant, DomainTag, GreenFunction,
    LAYER_POINTS, LAYER_RADIUS,
};
use faddeev_core::numerics::gauss_legendre;
use faddeev_core::potentials::c_hat;
use faddeev_core::spectral::{ReducedZeta, SpectralParam};
use faddeev_core::{Complex64, Error};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn param(lambda: Complex64) -> SpectralParam {
    SpectralParam::new(lambda, 1.0).unwrap()
}

fn c_hat_value() -> f64 {
    static C: OnceLock<f64> = OnceLock::new();
    *C.get_or_init(c_hat)
}

#[test]
fn cross_formula_agreement() {
    let mut rng = StdRng::seed_from_u64(11);
    for lambda in [c(1.5, 0.0), c(2.0, 0.0), c(1.0, 1.0)] {
        let red = param(lambda).reduced().unwrap();
        let mut worst: f64 = 0.0;
        for _ in 0..20 {
            let z = c(rng.gen_range(0.5..2.5), rng.gen_range(0.5..2.5));
            let a = eval_contour(z, &red, ContourVariant::T1).unwrap();
            let b = eval_contour(z, &red, ContourVariant::T2).unwrap();
            worst = worst.max((a - b).norm());
            let z = c(rng.gen_range(0.5..2.5), -rng.gen_range(0.5..2.5));
            let a = eval_contour(z, &red, ContourVariant::T1).unwrap();
            let b = eval_contour(z, &red, ContourVariant::T3).unwrap();
            worst = worst.max((a - b).norm());
        }
        assert!(worst <= 1e-6, "lambda {lambda}: {worst:.2e}");
    }
}

#[test]
fn doubling_every_upper_limit() {
    let mut rng = StdRng::seed_from_u64(12);
    let red = param(c(2.0, 0.0)).reduced().unwrap();
    for _ in 0..20 {
        let r = rng.gen_range(1.0..2.5);
        let z = Complex64::from_polar(r, rng.gen_range(-PI / 2.0..PI / 2.0));
        let variant = if z.im.abs() <= 0.5 * z.re {
            ContourVariant::T1
        } else if z.im > 0.0 {
            ContourVariant::T2
        } else {
            ContourVariant::T3
        };
        let n = calibrate_panels(&red, variant, z).unwrap();
        let a = eval_contour_with(z, &red, variant, n, 1.0).unwrap();
        let b = eval_contour_with(z, &red, variant, n, 2.0).unwrap();
        assert!((a - b).norm() <= 1e-7, "{z}: {:.2e}", (a - b).norm());
    }
}

/// Fourth-order stencils for `L_λ g = −Δg − 2i√E(λ∂g + ∂̄g/λ)`.
fn operator_residual(g: &GreenFunction, z: Complex64, h: f64) -> (f64, f64) {
    let lambda = g.param().lambda();
    let e = g.param().energy();
    let f = |dx: f64, dy: f64| g.eval(z + c(dx, dy)).unwrap();
    let d1 = |p: &dyn Fn(f64) -> Complex64| (-p(2.0 * h) + p(h) * 8.0 - p(-h) * 8.0 + p(-2.0 * h)) / (12.0 * h);
    let d2 = |p: &dyn Fn(f64) -> Complex64| {
        (-p(2.0 * h) + p(h) * 16.0 - p(0.0) * 30.0 + p(-h) * 16.0 - p(-2.0 * h)) / (12.0 * h * h)
    };
    let gx = d1(&|t| f(t, 0.0));
    let gy = d1(&|t| f(0.0, t));
    let lap = d2(&|t| f(t, 0.0)) + d2(&|t| f(0.0, t));
    let dz = (gx - Complex64::i() * gy) * 0.5;
    let dzbar = (gx + Complex64::i() * gy) * 0.5;
    let res = -lap - Complex64::new(0.0, 2.0 * e.sqrt()) * (lambda * dz + dzbar / lambda);
    (res.norm(), lap.norm())
}

#[test]
fn pde_residual_in_the_annulus() {
    let mut rng = StdRng::seed_from_u64(13);
    let h = 1e-3;
    for lambda in [c(2.0, 0.0), c(1.0, 1.0)] {
        let g = GreenFunction::new(&param(lambda)).unwrap();
        let mut done = 0;
        while done < 5 {
            let z = Complex64::from_polar(rng.gen_range(1.2..2.0), rng.gen_range(-PI..PI));
            // Keep the whole stencil inside one computational domain.
            let tag = classify_domain(g.reduced().rotate(z)).unwrap();
            let same = [(2.0, 0.0), (-2.0, 0.0), (0.0, 2.0), (0.0, -2.0)]
                .iter()
                .all(|(a, b)| classify_domain(g.reduced().rotate(z + c(a * h, b * h))).unwrap() == tag);
            if !same {
                continue;
            }
            let (res, scale) = operator_residual(&g, z, h);
            assert!(res <= 1e-3 * scale, "{lambda} at {z}: {res:.2e} vs {scale:.2e}");
            done += 1;
        }
    }
}

#[test]
fn conjugate_parameter_cross_check() {
    let lambda = c(1.6, 0.4);
    let z = c(1.3, 0.7);
    let a = green_eval(-z, &param(lambda)).unwrap();
    let b = green_eval(z, &param(lambda.inv().conj())).unwrap();
    assert!((b - a.conj()).norm() <= 1e-6);

    let mut rng = StdRng::seed_from_u64(14);
    for _ in 0..20 {
        let lambda = Complex64::from_polar(rng.gen_range(1.2..4.0), rng.gen_range(-PI..PI));
        let z = Complex64::from_polar(rng.gen_range(0.05..2.5), rng.gen_range(-PI..PI));
        let a = green_eval(-z, &param(lambda)).unwrap();
        let b = green_eval(z, &param(lambda.inv().conj())).unwrap();
        assert!((b - a.conj()).norm() <= 1e-6, "{lambda} {z}");
    }
}

#[test]
fn scaling_relation() {
    let mut rng = StdRng::seed_from_u64(15);
    let lambda = c(2.0, 0.5);
    let base = GreenFunction::new(&param(lambda)).unwrap();
    for s in [2.0, 5.0] {
        let scaled = GreenFunction::new(&SpectralParam::new(lambda, 1.0 / (s * s)).unwrap()).unwrap();
        for _ in 0..10 {
            let z = Complex64::from_polar(rng.gen_range(1.0..2.5), rng.gen_range(-PI..PI));
            let a = base.eval(z).unwrap();
            let b = scaled.eval(z * s).unwrap();
            assert!((a - b).norm() <= 1e-6, "scale {s} at {z}: {:.2e}", (a - b).norm());
        }
    }
}

#[test]
fn single_layer_reconstruction() {
    let g = GreenFunction::new(&param(c(2.0, 0.0))).unwrap();
    let layer = g.layer();
    assert!(layer.report().converged);
    assert!(layer.report().final_residual <= 1e-7);
    let counts = g.panel_counts()[0].1;
    let dtheta = 2.0 * PI / LAYER_POINTS as f64;
    for k in [3usize, 77, 160, 201] {
        let y = Complex64::from_polar(LAYER_RADIUS, (k as f64 + 0.5) * dtheta);
        let direct = eval_annulus(y, g.reduced(), &counts).unwrap();
        let via_layer = layer.eval(y).unwrap();
        assert!((direct - via_layer).norm() <= 1e-4, "held-out node {k}");
    }
    // Smooth density.
    let p = layer.density();
    let mean = p.iter().map(|v| v.norm()).sum::<f64>() / p.len() as f64;
    for k in 0..p.len() {
        let d2 = p[(k + 1) % p.len()] - p[k] * 2.0 + p[(k + p.len() - 1) % p.len()];
        assert!(d2.norm() <= 100.0 * mean);
    }
    assert_eq!(circle_point(LAYER_RADIUS, 0), c(LAYER_RADIUS, 0.0));
}

#[test]
fn seam_between_layer_and_scaled_annulus() {
    let g = GreenFunction::new(&param(c(2.0, 0.0))).unwrap();
    let mut worst: f64 = 0.0;
    for k in 0..16 {
        let dir = Complex64::from_polar(1.0, 2.0 * PI * k as f64 / 16.0 + 0.1);
        let inner = dir * 0.19995;
        let outer = dir * 0.20005;
        let r = g.reduced();
        assert_eq!(classify_domain(r.rotate(inner)).unwrap(), DomainTag::D1a);
        assert_eq!(classify_domain(r.rotate(outer)).unwrap(), DomainTag::D1b);
        worst = worst.max((g.eval(inner).unwrap() - g.eval(outer).unwrap()).norm());
    }
    assert!(worst <= 1e-3, "{worst:.2e}");

    // The two nearby example points differ by about |∇g|·|Δz|; a first-order
    // expansion from the D1b side predicts the D1a value.
    let a = c(0.19, 0.05);
    let b = c(0.21, 0.055);
    let h = 1e-4;
    let gx = (g.eval(b + h).unwrap() - g.eval(b - h).unwrap()) / (2.0 * h);
    let gy = (g.eval(b + c(0.0, h)).unwrap() - g.eval(b - c(0.0, h)).unwrap()) / (2.0 * h);
    let d = a - b;
    let predicted = g.eval(b).unwrap() + gx * d.re + gy * d.im;
    assert!((g.eval(a).unwrap() - predicted).norm() <= 1e-3);
}

#[test]
fn magnitude_bound() {
    let ch = c_hat_value();
    let mut rng = StdRng::seed_from_u64(16);
    for _ in 0..50 {
        let lambda = Complex64::from_polar(rng.gen_range(1.05..4.5), rng.gen_range(-PI..PI));
        let z = Complex64::from_polar(rng.gen_range(0.01..3.0), rng.gen_range(-PI..PI));
        let p = param(lambda);
        let g = green_eval(z, &p).unwrap();
        let m = lambda.norm();
        let bound = ch / (z.norm().sqrt() * p.energy().powf(0.25) * (m + 1.0 / m).sqrt());
        assert!(g.norm() <= bound, "{lambda} {z}: {} > {bound}", g.norm());
    }
}

#[test]
fn singular_and_excluded_inputs() {
    assert_eq!(green_eval(c(0.0, 0.0), &param(c(2.0, 0.0))), Err(Error::SingularPoint));
    assert!(matches!(
        SpectralParam::new(c(0.999, 0.0), 1.0),
        Err(Error::ExcludedParameter { .. })
    ));
}

#[test]
fn grid_mirror_symmetry_and_determinism() {
    // Real λ inside the unit disk reduces without rotation.
    let p = param(c(0.5, 0.0));
    assert_eq!(p.reduced().unwrap().theta, 0.0);
    let a = green_grid(&p, 5, 2.1).unwrap();
    let n = a.grid().side();
    assert_eq!(a.at(n / 2, n / 2), c(0.0, 0.0));
    for j in 0..n {
        for i in 1..n {
            let d = (a.at(n - i, j) - a.at(i, j).conj()).norm();
            assert!(d <= 1e-8, "({i},{j}): {d:.2e}");
        }
    }
    let b = green_grid(&p, 5, 2.1).unwrap();
    assert_eq!(a, b);
    assert!(green_grid(&p, 4, 2.1).is_err());
}

#[test]
fn reduced_example_values_in_the_plane() {
    // g of the reduced parameter agrees with the rotated evaluation.
    let p = param(c(2.0, 0.0));
    let g = GreenFunction::new(&p).unwrap();
    let red: ReducedZeta = *g.reduced();
    let z = c(0.4, 1.7);
    let w = red.rotate(z);
    assert!((g.eval(z).unwrap() - g.eval_reduced(w).unwrap()).norm() == 0.0);
}

/// Mean of `g` over the square of side `h` centred at 0, by Duffy-mapped
/// quadrature on the eight triangles that meet at the singularity.
fn cell_mean_by_quadrature(g: &GreenFunction, h: f64) -> Complex64 {
    let a = h / 2.0;
    let mut edges = vec![0.0];
    edges.extend((0..=6).rev().map(|k| 10f64.powi(-k)));
    let mut acc = c(0.0, 0.0);
    for w in edges.windows(2) {
        let outer = gauss_legendre(16, w[0], w[1]).unwrap();
        let inner = gauss_legendre(16, 0.0, 1.0).unwrap();
        for (&u, &wu) in outer.nodes().iter().zip(outer.weights()) {
            for (&v, &wv) in inner.nodes().iter().zip(inner.weights()) {
                let (x, y) = (a * u, a * u * v);
                let mut s = c(0.0, 0.0);
                for (p, q) in [(x, y), (y, x)] {
                    for (sx, sy) in [(1.0, 1.0), (-1.0, 1.0), (1.0, -1.0), (-1.0, -1.0)] {
                        s += g.eval(c(sx * p, sy * q)).unwrap();
                    }
                }
                acc += s * (wu * wv * a * a * u);
            }
        }
    }
    acc / (h * h)
}

#[test]
fn origin_cell_mean_matches_quadrature() {
    for lambda in [c(2.0, 0.0), c(1.0, 1.0), c(0.4, -0.2)] {
        let g = GreenFunction::new(&param(lambda)).unwrap();
        for h in [4.2 / 64.0, 4.2 / 256.0] {
            let closed = g.origin_cell_average(h).unwrap();
            let numeric = cell_mean_by_quadrature(&g, h);
            // The closed form drops even terms of order h² ln h.
            assert!((closed - numeric).norm() <= h * h, "{lambda} {h}: {closed} vs {numeric}");
        }
    }
    assert!(GreenFunction::new(&param(c(2.0, 0.0))).unwrap().origin_cell_average(0.0).is_err());
}
