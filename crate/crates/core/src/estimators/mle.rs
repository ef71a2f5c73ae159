//! Closed-form maximum likelihood for α from InG and InG-ε jumps.
//!
//! The InG log-likelihood is `n ln sin(πα) − α S + const` with `S = Σ ln(z_i − 1)`, which
//! is strictly concave on (0, 1) (second derivative `−nπ² csc²(πα)`). Its unique critical
//! point solves `tan(πα) = nπ / S`:
//!
//! * `S > 0`: `α̂ = arctan(nπ/S)/π ∈ (0, 1/2)`
//! * `S < 0`: `α̂ = (π + arctan(nπ/S))/π ∈ (1/2, 1)`
//! * `S = 0`: `α̂ = 1/2` (the `tan → ∞` limit)
//!
//! For InG-ε the density carries an extra `ε^α`, so the statistic becomes
//! `S = Σ ln((z_i − ε)/ε)`; with ε = 1 this is the InG statistic.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::{Diagnostics, EstimateReport, EstimatorKind, Interval, ParamEstimate};
use crate::error::{Error, Result};
use crate::sim::Param;
use crate::specfun;

/// Which side of 1/2 the arctangent put the estimate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MleBranch {
    /// arctan(nπ/S) ∈ (0, π/2]: α̂ < 1/2.
    Lower,
    /// arctan(nπ/S) ∈ [−π/2, 0): α̂ > 1/2.
    Upper,
    /// S = 0: α̂ = 1/2.
    Midpoint,
}

/// Solves `tan(πα) = nπ / S` on (0, 1).
pub fn mle_closed_form(log_excess_sum: f64, n: usize) -> Result<(f64, MleBranch)> {
    if n == 0 {
        return Err(Error::EmptyInput("MLE needs at least one jump"));
    }
    if !log_excess_sum.is_finite() {
        return Err(Error::domain(format!("log-excess sum must be finite, got {log_excess_sum}")));
    }
    let npi = n as f64 * PI;
    let (alpha, branch) = if log_excess_sum == 0.0 {
        (0.5, MleBranch::Midpoint)
    } else {
        let a = (npi / log_excess_sum).atan();
        if a > 0.0 {
            (a / PI, MleBranch::Lower)
        } else {
            ((PI + a) / PI, MleBranch::Upper)
        }
    };
    // strictly concave log-likelihood: the critical point is the maximum
    debug_assert!(-npi * PI / (PI * alpha).sin().powi(2) < 0.0);
    Ok((alpha, branch))
}

fn check_jumps(jumps: &[f64], lower: f64) -> Result<()> {
    if jumps.is_empty() {
        return Err(Error::EmptyInput("MLE needs at least one jump"));
    }
    for (i, &z) in jumps.iter().enumerate() {
        if !z.is_finite() || z < lower {
            return Err(Error::domain(format!("jump {i} = {z} lies outside [{lower}, ∞)")));
        }
        if z == lower {
            return Err(Error::Degenerate(format!(
                "jump {i} sits exactly on the support boundary {lower}; its score is infinite"
            )));
        }
    }
    Ok(())
}

/// MLE of α from InG jumps (all strictly greater than 1).
pub fn mle_alpha_ing(jumps: &[f64]) -> Result<EstimateReport> {
    check_jumps(jumps, 1.0)?;
    let logs: Vec<f64> = jumps.iter().map(|z| (z - 1.0).ln()).collect();
    mle_alpha_from_log_excess(&logs, None)
}

/// MLE of α from InG-ε jumps (all strictly greater than ε).
pub fn mle_alpha_ing_eps(jumps: &[f64], eps: f64) -> Result<EstimateReport> {
    if !(eps > 0.0) || !eps.is_finite() {
        return Err(Error::domain(format!("eps must be finite and > 0, got {eps}")));
    }
    check_jumps(jumps, eps)?;
    let logs: Vec<f64> = jumps.iter().map(|z| (z - eps).ln()).collect();
    mle_alpha_from_log_excess(&logs, Some(eps))
}

/// MLE from `ln(z_i − 1)` (InG, `eps = None`) or `ln(z_i − ε)` (InG-ε).
///
/// Taking logarithms of the excesses directly avoids the loss of `z − 1` to rounding
/// when jumps crowd the boundary (α close to 1).
pub fn mle_alpha_from_log_excess(log_excess: &[f64], eps: Option<f64>) -> Result<EstimateReport> {
    if log_excess.is_empty() {
        return Err(Error::EmptyInput("MLE needs at least one jump"));
    }
    let n = log_excess.len();
    let mut s: f64 = log_excess.iter().sum();
    if s == f64::NEG_INFINITY {
        return Err(Error::Degenerate("a jump sits exactly on the support boundary".into()));
    }
    let kind = match eps {
        Some(e) => {
            s -= n as f64 * e.ln();
            EstimatorKind::MleIngEps
        }
        None => EstimatorKind::MleIng,
    };
    let (alpha, branch) = mle_closed_form(s, n)?;
    Ok(EstimateReport {
        estimator: kind,
        params: vec![ParamEstimate::point(Param::Alpha, alpha)],
        n,
        diagnostics: Diagnostics {
            branch: Some(branch),
            log_excess_sum: Some(s),
            eps,
            ..Diagnostics::default()
        },
    })
}

/// Asymptotic variance σ² of √n(α̂ − α) used for the normal interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VarianceModel {
    /// Inverse Fisher information: `sin²(πα)/π²`. Valid for both InG and InG-ε.
    Fisher,
    /// `2 sin(πα) / (π² (3 + cos 2πα))`.
    SinCos,
    /// `1 / (π² + 2π² cot²(πα) + 2π cot(πα) ln ε + ln² ε)`.
    CotLogEps,
}

impl VarianceModel {
    pub const ALL: [VarianceModel; 3] = [VarianceModel::Fisher, VarianceModel::SinCos, VarianceModel::CotLogEps];

    pub fn sigma2(self, alpha: f64, eps: f64) -> f64 {
        let s = (PI * alpha).sin();
        match self {
            VarianceModel::Fisher => s * s / (PI * PI),
            VarianceModel::SinCos => 2.0 * s / (PI * PI * (3.0 + (2.0 * PI * alpha).cos())),
            VarianceModel::CotLogEps => {
                let cot = 1.0 / (PI * alpha).tan();
                let le = eps.ln();
                1.0 / (PI * PI + 2.0 * PI * PI * cot * cot + 2.0 * PI * cot * le + le * le)
            }
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            VarianceModel::Fisher => "fisher",
            VarianceModel::SinCos => "sin-cos",
            VarianceModel::CotLogEps => "cot-log-eps",
        }
    }
}

impl std::str::FromStr for VarianceModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "fisher" => Ok(VarianceModel::Fisher),
            "sin-cos" | "sincos" => Ok(VarianceModel::SinCos),
            "cot-log-eps" | "cotlogeps" => Ok(VarianceModel::CotLogEps),
            other => Err(Error::Config(format!("unknown variance model '{other}'"))),
        }
    }
}

/// σ² under every model, for side-by-side reporting.
pub fn variance_candidates(alpha: f64, eps: f64) -> Vec<(VarianceModel, f64)> {
    VarianceModel::ALL.iter().map(|&m| (m, m.sigma2(alpha, eps))).collect()
}

/// Attaches `stderr = σ/√n` and the two-sided normal interval, clipped to [0, 1].
pub fn mle_asymptotic_ci(report: &EstimateReport, level: f64, model: VarianceModel) -> Result<EstimateReport> {
    if !matches!(report.estimator, EstimatorKind::MleIng | EstimatorKind::MleIngEps) {
        return Err(Error::Config(format!(
            "asymptotic intervals are only defined for MLE reports, got {:?}",
            report.estimator
        )));
    }
    if !(level > 0.0 && level < 1.0) {
        return Err(Error::domain(format!("confidence level must lie in (0, 1), got {level}")));
    }
    let mut out = report.clone();
    let n = report.n as f64;
    let alpha = report.alpha();
    let eps = report.diagnostics.eps.unwrap_or(1.0);
    let sigma2 = model.sigma2(alpha, eps);
    let se = (sigma2 / n).sqrt();
    let q = specfun::normal_quantile(0.5 * (1.0 + level))?;
    let ci = Interval {
        lower: (alpha - q * se).max(0.0),
        upper: (alpha + q * se).min(1.0),
        level,
    };
    if let Some(p) = out.params.iter_mut().find(|p| p.param == Param::Alpha) {
        p.stderr = Some(se);
        p.ci = Some(ci);
    }
    let d = &mut out.diagnostics;
    d.variance_model = Some(model);
    d.variance_candidates = variance_candidates(alpha, eps);
    let (lo, hi) = d
        .variance_candidates
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &(_, v)| (lo.min(v), hi.max(v)));
    if hi - lo > 1e-12 * hi {
        d.notes.push(format!(
            "variance models disagree at alpha = {alpha:.6}: sigma^2 ranges over [{lo:.6e}, {hi:.6e}]"
        ));
    }
    if report.n < 30 {
        log::warn!("asymptotic interval with only n = {} observations", report.n);
        d.notes.push(format!("n = {} is below 30; normal approximation is rough", report.n));
    }
    Ok(out)
}
