use faddeev_core::spectral::{
    e_lambda, e_minus_lambda, lambda_from_zeta, reduce_zeta, zeta_from_lambda, SpectralParam,
    ZetaVector,
};
use faddeev_core::Complex64;
use proptest::prelude::*;

fn lambda_strategy() -> impl Strategy<Value = Complex64> {
    (0.05f64..6.0, -3.2f64..3.2)
        .prop_filter("outside the unit-circle band", |(r, _)| (r - 1.0).abs() > 0.01)
        .prop_map(|(r, a)| Complex64::from_polar(r, a))
}

#[test]
fn hand_values() {
    let p = SpectralParam::new(Complex64::new(1.0, 1.0), 1.0).unwrap();
    let z = zeta_from_lambda(&p);
    assert!((z.zeta1 - Complex64::new(0.75, 0.25)).norm() < 1e-15);
    assert!((z.zeta2 - Complex64::new(0.75, -0.25)).norm() < 1e-15);
    let back = lambda_from_zeta(&z, 1.0).unwrap();
    assert!((back - Complex64::new(1.0, 1.0)).norm() < 1e-15);

    let p = SpectralParam::new(Complex64::new(2.5, -0.3), 1.0).unwrap();
    let back = lambda_from_zeta(&zeta_from_lambda(&p), 1.0).unwrap();
    assert!((back - p.lambda()).norm() < 1e-12);

    let r = reduce_zeta(&zeta_from_lambda(&SpectralParam::new(Complex64::new(2.0, 0.0), 1.0).unwrap())).unwrap();
    assert_eq!((r.k1, r.k2, r.theta), (-1.25, 0.75, std::f64::consts::PI));
}

proptest! {
    #[test]
    fn conjugate_inverse_conjugates_zeta(lambda in lambda_strategy(), energy in 0.2f64..4.0) {
        let p = SpectralParam::new(lambda, energy).unwrap();
        let q = SpectralParam::new(lambda.conj().inv(), energy).unwrap();
        let (a, b) = (zeta_from_lambda(&p), zeta_from_lambda(&q));
        let scale = a.zeta1.norm() + a.zeta2.norm();
        prop_assert!((b.zeta1 - a.zeta1.conj()).norm() <= 1e-12 * scale);
        prop_assert!((b.zeta2 - a.zeta2.conj()).norm() <= 1e-12 * scale);
    }

    #[test]
    fn zeta_squares_to_energy(lambda in lambda_strategy(), energy in 0.2f64..4.0) {
        let z = zeta_from_lambda(&SpectralParam::new(lambda, energy).unwrap());
        let scale = z.zeta1.norm_sqr() + z.zeta2.norm_sqr();
        prop_assert!((z.dot() - energy).norm() <= 1e-12 * scale.max(energy));
    }

    #[test]
    fn reduction_rotates_to_canonical_form(lambda in lambda_strategy(), energy in 0.2f64..4.0) {
        let z = zeta_from_lambda(&SpectralParam::new(lambda, energy).unwrap());
        let red = reduce_zeta(&z).unwrap();
        prop_assert!(red.k2 > 0.0 && red.k1.abs() > red.k2);
        let scale = red.k1 * red.k1 + red.k2 * red.k2;
        prop_assert!((red.k1 * red.k1 - red.k2 * red.k2 - energy).abs() <= 1e-12 * scale);
        prop_assert!(red.theta > -std::f64::consts::PI && red.theta <= std::f64::consts::PI);
        // Rotating each of Re ζ and Im ζ must give [k1, 0] and [0, k2].
        let (c, s) = red.rotation();
        let rot = |v: [f64; 2]| [c * v[0] - s * v[1], s * v[0] + c * v[1]];
        let re = rot(z.real_part());
        let im = rot(z.imag_part());
        let tol = 1e-12 * scale.sqrt();
        prop_assert!((re[0] - red.k1).abs() <= tol && re[1].abs() <= tol);
        prop_assert!(im[0].abs() <= tol && (im[1] - red.k2).abs() <= tol);
    }

    #[test]
    fn real_lambda_reduces_on_the_axis(r in 1.01f64..8.0, energy in 0.2f64..4.0, invert in any::<bool>()) {
        let lam = if invert { 1.0 / r } else { r };
        let red = reduce_zeta(&zeta_from_lambda(&SpectralParam::new(Complex64::new(lam, 0.0), energy).unwrap())).unwrap();
        let e = energy.sqrt();
        prop_assert!(red.theta == 0.0 || red.theta == std::f64::consts::PI);
        prop_assert!((red.k1.abs() - (r + 1.0 / r) * e / 2.0).abs() <= 1e-12 * r * e);
        prop_assert!((red.k2 - (r - 1.0 / r) * e / 2.0).abs() <= 1e-12 * r * e);
    }

    #[test]
    fn exponential_weights_are_unimodular(lambda in lambda_strategy(), x in -3.0f64..3.0, y in -3.0f64..3.0) {
        let p = SpectralParam::new(lambda, 1.0).unwrap();
        let z = Complex64::new(x, y);
        let e = e_lambda(z, &p);
        prop_assert!((e.norm() - 1.0).abs() <= 1e-12);
        prop_assert!((e_minus_lambda(z, &p) - e.conj()).norm() <= 1e-12);
        prop_assert!((e_minus_lambda(z, &p) * e - 1.0).norm() <= 1e-12);
    }
}

#[test]
fn reduced_input_is_fixed_point() {
    let z = ZetaVector::new(Complex64::new(1.25, 0.0), Complex64::new(0.0, 0.75));
    let r = reduce_zeta(&z).unwrap();
    assert_eq!((r.k1, r.k2, r.theta), (1.25, 0.75, 0.0));
}
