use std::path::Path;

use faddeev_core::scatter::ScatteringSample;
use faddeev_core::Complex64;
use faddeev_sweep::config::{parse_config, to_args, Entry};
use faddeev_sweep::table::HEADER;
use faddeev_sweep::{heatmap_svg, load_csv, profile_svg, read_csv, write_csv, SweepError, SweepReport};
use proptest::prelude::*;

fn sample(alpha: f64, lambda: f64, t: Complex64, converged: bool) -> ScatteringSample {
    ScatteringSample {
        lambda: Complex64::new(lambda, 0.0),
        alpha,
        t,
        converged,
        gmres_iterations: 7,
        ls_residual: 3.5e-8,
    }
}

fn report(alphas: &[f64], lambdas: &[f64], t: impl Fn(f64, f64) -> Complex64) -> SweepReport {
    let samples = alphas
        .iter()
        .flat_map(|&a| lambdas.iter().map(move |&l| (a, l)))
        .map(|(a, l)| sample(a, l, t(a, l), true))
        .collect();
    SweepReport::from_samples(alphas.to_vec(), lambdas.to_vec(), samples)
}

fn to_text(r: &SweepReport) -> String {
    let mut buf = Vec::new();
    write_csv(r, &mut buf).unwrap();
    String::from_utf8(buf).unwrap()
}

#[test]
fn single_sample_csv() {
    let r = report(&[-5.0], &[2.0], |_, _| Complex64::new(-0.25, 1e-9));
    let text = to_text(&r);
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0], HEADER.join(","));
    assert_eq!(lines[1], "-5,2,0,-0.25,0.000000001,true,7,0.000000035");
}

#[test]
fn csv_roundtrip_is_exact() {
    let lambdas = [1.01, 1.5, std::f64::consts::PI];
    let alphas = [-35.0, 0.1, 1.0 / 3.0];
    let r = report(&alphas, &lambdas, |a, l| Complex64::new(a.sin() / l, (a * l).cos() * 1e-7));
    let back = read_csv(to_text(&r).as_bytes(), Path::new("mem")).unwrap();
    assert!(r.same_results(&back));
    assert_eq!(to_text(&back), to_text(&r));
}

#[test]
fn csv_file_roundtrip_keeps_failures() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.csv");
    let mut r = report(&[1.0, 2.0], &[2.0, 3.0], |_, _| Complex64::new(0.5, 0.0));
    r.samples[1] = sample(1.0, 3.0, Complex64::new(f64::NAN, f64::NAN), false);
    let r = SweepReport::from_samples(r.alphas.clone(), r.lambdas.clone(), r.samples.clone());
    faddeev_sweep::emit_csv(&r, &path).unwrap();
    let back = load_csv(&path).unwrap();
    assert!(!back.sample(0, 1).converged);
    assert!(back.sample(0, 1).t.re.is_nan());
    assert_eq!(back.brackets, r.brackets);
    assert!(matches!(load_csv(&dir.path().join("missing.csv")), Err(SweepError::Io { .. })));
}

#[test]
fn malformed_csv_is_rejected() {
    let head = HEADER.join(",");
    let cases = [
        "a,b\n1,2\n".to_string(),
        format!("{head}\n1,2,0,x,0,true,1,0\n"),
        format!("{head}\n1,2,0,0,0,maybe,1,0\n"),
        // λ order differs between α rows.
        format!("{head}\n1,2,0,0,0,true,1,0\n1,3,0,0,0,true,1,0\n2,3,0,0,0,true,1,0\n2,2,0,0,0,true,1,0\n"),
        format!("{head}\n"),
    ];
    for text in cases {
        assert!(
            matches!(read_csv(text.as_bytes(), Path::new("mem")), Err(SweepError::Format { .. })),
            "{text}"
        );
    }
}

#[test]
fn svgs_show_brackets_and_failures() {
    let lambdas: Vec<f64> = (0..40).map(|k| 1.5 + k as f64 * 0.05 + 0.0125).collect();
    let mut r = report(&[-20.0, 0.0], &lambdas, |a, l| Complex64::new(a / (l - 2.5), 0.0));
    r.samples[45] = sample(0.0, lambdas[5], Complex64::new(f64::NAN, f64::NAN), false);
    let r = SweepReport::from_samples(r.alphas.clone(), r.lambdas.clone(), r.samples.clone());
    assert_eq!(r.brackets[0].len(), 1);

    let svg = profile_svg(&r, 0).unwrap();
    assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
    assert!(svg.contains("<path d=\"M"));
    assert!(svg.contains("#f4b6b6"));
    assert!(profile_svg(&r, 2).is_err());

    let svg = profile_svg(&r, 1).unwrap();
    assert!(svg.contains("<circle"));

    let map = heatmap_svg(&r);
    assert!(map.starts_with("<svg"));
    assert!(map.matches("<rect").count() >= 80);
    assert!(map.contains("#d62728"));
}

#[test]
fn config_lines() {
    let text = "# defaults\nM = 6\nlambda_min=1.2 # trailing\n--no-spot-check = true\n\n";
    let entries = parse_config(text, Path::new("c.conf")).unwrap();
    let keys: Vec<_> = entries.iter().map(|e| (e.key.as_str(), e.value.as_str())).collect();
    assert_eq!(keys, [("M", "6"), ("lambda-min", "1.2"), ("no-spot-check", "true")]);
    let flags = vec!["no-spot-check".to_string()];
    assert_eq!(to_args(&entries, &flags), ["--M=6", "--lambda-min=1.2", "--no-spot-check"]);
    let off = [Entry { key: "no-spot-check".into(), value: "false".into() }];
    assert!(to_args(&off, &flags).is_empty());
    assert!(parse_config("just words", Path::new("c.conf")).is_err());
    assert!(parse_config(" = 3", Path::new("c.conf")).is_err());
}

proptest! {
    #[test]
    fn any_finite_value_survives_csv(re in any::<f64>(), im in any::<f64>(), alpha in -40.0f64..40.0) {
        prop_assume!(re.is_finite() && im.is_finite());
        let r = report(&[alpha], &[2.5], |_, _| Complex64::new(re, im));
        let back = read_csv(to_text(&r).as_bytes(), Path::new("mem")).unwrap();
        prop_assert!(r.same_results(&back));
    }
}
