//! Goodness-of-fit statistics used to check the samplers and the estimators.

use crate::error::{Error, Result};
use crate::specfun::{gamma_q, ln_gamma_pos};

/// KS critical value coefficient at the 1% level: reject when `√n·D > 1.6276`.
pub const KS_CRIT_1PCT: f64 = 1.627_6;
/// Anderson–Darling critical value at 1% for a fully specified null.
pub const AD_CRIT_1PCT: f64 = 3.857;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KsResult {
    pub n: usize,
    pub statistic: f64,
    /// `√n · D`
    pub scaled: f64,
    pub p_value: f64,
}

impl KsResult {
    pub fn passes_1pct(&self) -> bool {
        self.scaled < KS_CRIT_1PCT
    }
}

/// Asymptotic Kolmogorov tail `P(K > x) = 2 Σ (−1)^{k−1} e^{−2k²x²}`.
pub fn kolmogorov_tail(x: f64) -> f64 {
    // the series is useless and the tail is 1 to double precision below 0.2
    if x < 0.2 {
        return 1.0;
    }
    let mut sum = 0.0;
    for k in 1..=100 {
        let kf = k as f64;
        let term = (-2.0 * kf * kf * x * x).exp();
        sum += if k % 2 == 1 { term } else { -term };
        if term < 1e-16 {
            break;
        }
    }
    (2.0 * sum).clamp(0.0, 1.0)
}

/// One-sample KS test of `data` against a continuous CDF.
pub fn ks_test<F>(data: &[f64], cdf: F) -> Result<KsResult>
where
    F: Fn(f64) -> Result<f64>,
{
    if data.is_empty() {
        return Err(Error::EmptyInput("KS test needs observations"));
    }
    if data.iter().any(|x| x.is_nan()) {
        return Err(Error::domain("KS test data contains NaN"));
    }
    let u = data.iter().map(|&x| cdf(x)).collect::<Result<Vec<_>>>()?;
    ks_from_cdf_values(u)
}

/// KS test from the fitted CDF evaluated at each observation, in any order.
pub fn ks_from_cdf_values(mut u: Vec<f64>) -> Result<KsResult> {
    if u.is_empty() {
        return Err(Error::EmptyInput("KS test needs observations"));
    }
    if u.iter().any(|v| !(0.0..=1.0).contains(v)) {
        return Err(Error::domain("CDF values must lie in [0, 1]"));
    }
    u.sort_by(f64::total_cmp);
    let n = u.len() as f64;
    let mut d: f64 = 0.0;
    for (i, &f) in u.iter().enumerate() {
        let i = i as f64;
        d = d.max((i + 1.0) / n - f).max(f - i / n);
    }
    let scaled = n.sqrt() * d;
    Ok(KsResult {
        n: u.len(),
        statistic: d,
        scaled,
        p_value: kolmogorov_tail(scaled),
    })
}

/// Anderson–Darling A² against a fully specified CDF.
pub fn anderson_darling<F>(data: &[f64], cdf: F) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    if data.is_empty() {
        return Err(Error::EmptyInput("Anderson-Darling test needs observations"));
    }
    let mut u: Vec<f64> = data.iter().map(|&x| cdf(x)).collect();
    if u.iter().any(|v| !(0.0..=1.0).contains(v)) {
        return Err(Error::domain("CDF values must lie in [0, 1]"));
    }
    u.sort_by(f64::total_cmp);
    let n = u.len();
    let nf = n as f64;
    // clamp keeps a single extreme point from producing an infinite statistic
    let lo = 1e-300;
    let mut s = 0.0;
    for i in 0..n {
        let a = u[i].max(lo).ln();
        let b = (1.0 - u[n - 1 - i]).max(lo).ln();
        s += (2.0 * i as f64 + 1.0) * (a + b);
    }
    Ok(-nf - s / nf)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChiSquareResult {
    pub statistic: f64,
    pub dof: usize,
    pub p_value: f64,
    /// Cell boundaries as inclusive count ranges `[lo, hi]`; the last one is open.
    pub cells: Vec<(u64, u64)>,
}

/// Pearson chi-square test of integer counts against a Poisson(mean) law.
///
/// Adjacent values are pooled until every cell has expected frequency ≥ `min_expected`.
pub fn chi_square_poisson(counts: &[u64], mean: f64, min_expected: f64) -> Result<ChiSquareResult> {
    if counts.is_empty() {
        return Err(Error::EmptyInput("chi-square test needs observations"));
    }
    if !(mean > 0.0) || !mean.is_finite() {
        return Err(Error::domain(format!("Poisson mean must be finite and > 0, got {mean}")));
    }
    let n = counts.len() as f64;
    let max_seen = *counts.iter().max().expect("nonempty");
    let pmf = |k: u64| (k as f64 * mean.ln() - mean - ln_gamma_pos(k as f64 + 1.0)).exp();

    let mut cells: Vec<(u64, u64, f64)> = Vec::new();
    let mut lo = 0;
    let mut acc = 0.0;
    let mut k = 0u64;
    let mut cum = 0.0;
    loop {
        let p = pmf(k);
        acc += p;
        cum += p;
        let tail = (1.0 - cum).max(0.0);
        if acc * n >= min_expected && tail * n >= min_expected {
            cells.push((lo, k, acc));
            lo = k + 1;
            acc = 0.0;
        } else if tail * n < min_expected {
            // fold what remains into an open last cell
            cells.push((lo, u64::MAX, acc + tail));
            break;
        }
        k += 1;
        if k > max_seen.max(mean as u64) + 10_000 {
            cells.push((lo, u64::MAX, acc + tail));
            break;
        }
    }
    if cells.len() > 1 && cells.last().map(|c| c.2 * n < min_expected).unwrap_or(false) {
        let last = cells.pop().expect("len > 1");
        let prev = cells.last_mut().expect("len > 0");
        prev.1 = u64::MAX;
        prev.2 += last.2;
    }
    if cells.len() < 2 {
        return Err(Error::Degenerate("too few cells for a chi-square test".into()));
    }

    let mut observed = vec![0u64; cells.len()];
    for &c in counts {
        let idx = cells.partition_point(|cell| cell.1 < c);
        observed[idx] += 1;
    }
    let statistic: f64 = cells
        .iter()
        .zip(&observed)
        .map(|(cell, &o)| {
            let e = cell.2 * n;
            (o as f64 - e).powi(2) / e
        })
        .sum();
    let dof = cells.len() - 1;
    Ok(ChiSquareResult {
        statistic,
        dof,
        p_value: gamma_q(dof as f64 / 2.0, statistic / 2.0)?,
        cells: cells.iter().map(|c| (c.0, c.1)).collect(),
    })
}

/// Lag-1 sample autocorrelation.
pub fn lag1_autocorrelation(xs: &[f64]) -> Result<f64> {
    if xs.len() < 3 {
        return Err(Error::EmptyInput("autocorrelation needs at least three values"));
    }
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    let den: f64 = xs.iter().map(|x| (x - mean).powi(2)).sum();
    if !(den > 0.0) {
        return Err(Error::Degenerate("constant series".into()));
    }
    let num: f64 = xs.windows(2).map(|w| (w[0] - mean) * (w[1] - mean)).sum();
    Ok(num / den)
}
