//! Fractional-moment estimation of α for InG and InG-ε.
//!
//! Neither process has a finite mean, but for `p < α` the fractional moment behaves like
//! that of an α-stable subordinator at large horizons:
//! `E S(t)^p ≃ Γ(1 − p/α)/Γ(1 − p) · t^{p/α}` as `t → ∞`. For `t > 1` the right side is
//! strictly decreasing in α on (p, 1), so the sample moment is inverted by bisection.

use crate::error::{Error, Result};
use crate::estimators::{Diagnostics, EstimateReport, EstimatorKind, ParamEstimate};
use crate::sim::{poisson_rate, Family, ModelParams, Param};
use crate::specfun::ln_gamma_pos;

pub const DEFAULT_P: f64 = 0.05;
pub const DEFAULT_T: f64 = 1000.0;

const ALPHA_FLOOR_GAP: f64 = 1e-6;
const ALPHA_CEIL_GAP: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FracMomOptions {
    /// How many times p is halved after a bracketing failure.
    pub max_halvings: u32,
    pub max_bisections: usize,
}

impl Default for FracMomOptions {
    fn default() -> Self {
        FracMomOptions {
            max_halvings: 4,
            max_bisections: 200,
        }
    }
}

fn ln_asymptotic(alpha: f64, p: f64, ln_t: f64) -> f64 {
    ln_gamma_pos(1.0 - p / alpha) - ln_gamma_pos(1.0 - p) + p / alpha * ln_t
}

/// `Γ(1 − p/α)/Γ(1 − p) · t^{p/α}` for `0 < p < α < 1`.
pub fn fractional_moment_asymptotic(alpha: f64, p: f64, t: f64) -> Result<f64> {
    if !(p > 0.0 && p < alpha && alpha < 1.0) {
        return Err(Error::domain(format!("need 0 < p < alpha < 1, got p = {p}, alpha = {alpha}")));
    }
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::domain(format!("t must be finite and > 0, got {t}")));
    }
    Ok(ln_asymptotic(alpha, p, t.ln()).exp())
}

fn sample_fractional_moment(data: &[f64], p: f64) -> f64 {
    // 0^p = 0 for p > 0: empty paths count as genuine zeros
    data.iter().map(|x| x.powf(p)).sum::<f64>() / data.len() as f64
}

/// Estimate α from terminal values at horizon `t` by matching the p-th moment.
pub fn fracmom_alpha(
    data: &[f64],
    t: f64,
    p: f64,
    family: Family,
    eps: Option<f64>,
) -> Result<EstimateReport> {
    fracmom_alpha_with(data, t, p, family, eps, &FracMomOptions::default())
}

pub fn fracmom_alpha_with(
    data: &[f64],
    t: f64,
    p: f64,
    family: Family,
    eps: Option<f64>,
    opts: &FracMomOptions,
) -> Result<EstimateReport> {
    let kind = match family {
        Family::Ing => EstimatorKind::FracMomIng,
        Family::IngEps => EstimatorKind::FracMomIngEps,
        Family::Ting => {
            return Err(Error::Config(
                "fractional-moment estimation applies to ing and ing-eps only".into(),
            ))
        }
    };
    if let Some(e) = eps {
        if !(e > 0.0) || !e.is_finite() {
            return Err(Error::domain(format!("eps must be finite and > 0, got {e}")));
        }
    }
    if data.is_empty() {
        return Err(Error::EmptyInput("fractional-moment estimation needs observations"));
    }
    if let Some(x) = data.iter().find(|x| !x.is_finite() || **x < 0.0) {
        return Err(Error::domain(format!("observations must be finite and >= 0, found {x}")));
    }
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::domain(format!("p must lie in (0, 1), got {p}")));
    }
    if !(t > 1.0) || !t.is_finite() {
        return Err(Error::domain(format!(
            "horizon t must exceed 1 for the moment map to be monotone, got {t}"
        )));
    }

    let ln_t = t.ln();
    let mut p_k = p;
    let mut last = (0.0, 0.0, 0.0);
    for halving in 0..=opts.max_halvings {
        if halving > 0 {
            p_k *= 0.5;
        }
        let target = sample_fractional_moment(data, p_k).ln();
        let mut lo = p_k + ALPHA_FLOOR_GAP;
        let mut hi = 1.0 - ALPHA_CEIL_GAP;
        last = (lo, hi, target);
        // decreasing in alpha: g(lo) >= target >= g(hi)
        if !(target.is_finite() && ln_asymptotic(lo, p_k, ln_t) >= target && target >= ln_asymptotic(hi, p_k, ln_t)) {
            log::debug!("fractional moment not bracketed at p = {p_k}");
            continue;
        }
        let mut iterations = 0;
        while iterations < opts.max_bisections && hi - lo > 1e-15 {
            iterations += 1;
            let mid = 0.5 * (lo + hi);
            if ln_asymptotic(mid, p_k, ln_t) > target {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let alpha = 0.5 * (lo + hi);

        let mut notes = Vec::new();
        if p_k != p {
            notes.push(format!("p reduced from {p} to {p_k} after bracketing failures"));
        }
        let params = match (family, eps) {
            (Family::IngEps, Some(e)) => ModelParams::ing_eps(alpha, e),
            _ => ModelParams::ing(alpha),
        };
        if let Ok(rate) = params.and_then(|pm| poisson_rate(&pm)) {
            if rate * t < 10.0 {
                log::warn!("expected jump count {:.2} at the estimate is small for the large-t law", rate * t);
                notes.push(format!(
                    "expected jump count {:.3} < 10; large-horizon approximation is doubtful",
                    rate * t
                ));
            }
        }
        return Ok(EstimateReport {
            estimator: kind,
            params: vec![ParamEstimate::point(Param::Alpha, alpha)],
            n: data.len(),
            diagnostics: Diagnostics {
                t: Some(t),
                p: Some(p_k),
                eps,
                iterations: Some(iterations),
                notes,
                ..Diagnostics::default()
            },
        });
    }
    let (lo, hi, target) = last;
    Err(Error::Bracket {
        lo,
        hi,
        target,
        p: p_k,
    })
}
