//! Locating exceptional points along a real-λ profile of `t`.

use faddeev_core::Complex64;

/// Multiple of the profile median that `|t|` must exceed next to a sign
/// change of `1/t` for the change to count as a pole.
pub const POLE_FACTOR: f64 = 10.0;

/// One sample of a profile: `(λ, t, converged)`.
pub type ProfilePoint = (f64, Complex64, bool);

/// A closed λ interval that contains an exceptional point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
}

impl Bracket {
    pub fn contains(&self, lambda: f64) -> bool {
        self.lo <= lambda && lambda <= self.hi
    }
}

fn usable(point: &ProfilePoint) -> bool {
    point.2 && point.1.re.is_finite() && point.1.im.is_finite()
}

fn median(mut values: Vec<f64>) -> Option<f64> {
    if values.is_empty() {
        return None;
    }
    values.sort_by(f64::total_cmp);
    let n = values.len();
    Some(if n % 2 == 1 {
        values[n / 2]
    } else {
        0.5 * (values[n / 2 - 1] + values[n / 2])
    })
}

/// Brackets of exceptional points in a profile sorted by λ.
///
/// A bracket is opened where the real part of `t` changes sign between
/// adjacent converged samples and `|t|` exceeds [`POLE_FACTOR`] times the
/// profile median at either end, and around every run of unconverged
/// samples (reaching out to the converged neighbours). Brackets that touch
/// or lie within one grid step of each other are merged.
pub fn detect_exceptional(profile: &[ProfilePoint]) -> Vec<Bracket> {
    let n = profile.len();
    let mut raw = Vec::new();
    let threshold = median(profile.iter().filter(|p| usable(p)).map(|p| p.1.norm()).collect())
        .map(|m| POLE_FACTOR * m);

    if let Some(threshold) = threshold {
        for w in profile.windows(2) {
            let (a, b) = (&w[0], &w[1]);
            if !(usable(a) && usable(b)) {
                continue;
            }
            let flips = (a.1.re > 0.0 && b.1.re < 0.0) || (a.1.re < 0.0 && b.1.re > 0.0);
            if flips && a.1.norm().max(b.1.norm()) > threshold {
                raw.push(Bracket { lo: a.0, hi: b.0 });
            }
        }
    }

    let mut i = 0;
    while i < n {
        if usable(&profile[i]) {
            i += 1;
            continue;
        }
        let start = i;
        while i < n && !usable(&profile[i]) {
            i += 1;
        }
        let lo = profile[start.saturating_sub(1)].0;
        let hi = profile[i.min(n - 1)].0;
        raw.push(Bracket { lo, hi });
    }

    raw.sort_by(|a, b| a.lo.total_cmp(&b.lo));
    let step = if n > 1 {
        (profile[n - 1].0 - profile[0].0).abs() / (n - 1) as f64
    } else {
        0.0
    };
    let mut merged: Vec<Bracket> = Vec::new();
    for b in raw {
        match merged.last_mut() {
            Some(last) if b.lo <= last.hi + step * (1.0 + 1e-9) => last.hi = last.hi.max(b.hi),
            _ => merged.push(b),
        }
    }
    merged
}
