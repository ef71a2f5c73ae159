//! Estimators for α (and θ for the tempered family).
//!
//! * [`mle`]: closed-form maximum likelihood for InG / InG-ε jumps, plus normal-theory CIs.
//! * [`mom`]: method of moments on terminal values of the tempered process.
//! * [`fracmom`]: large-horizon fractional-moment matching for InG / InG-ε.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sim::Param;

pub mod fracmom;
pub mod mle;
pub mod mom;
mod simplex;

pub use fracmom::{fracmom_alpha, fractional_moment_asymptotic, FracMomOptions};
pub use mle::{
    mle_alpha_from_log_excess, mle_alpha_ing, mle_alpha_ing_eps, mle_asymptotic_ci, mle_closed_form,
    variance_candidates, MleBranch, VarianceModel,
};
pub use mom::{mom_ting, mom_ting_from_moments, MomOptions, MomentEquations};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EstimatorKind {
    MleIng,
    MleIngEps,
    MomTing,
    FracMomIng,
    FracMomIngEps,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub lower: f64,
    pub upper: f64,
    pub level: f64,
}

impl Interval {
    pub fn contains(&self, x: f64) -> bool {
        self.lower <= x && x <= self.upper
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParamEstimate {
    pub param: Param,
    pub value: f64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub stderr: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ci: Option<Interval>,
}

impl ParamEstimate {
    pub fn point(param: Param, value: f64) -> Self {
        ParamEstimate {
            param,
            value,
            stderr: None,
            ci: None,
        }
    }
}

/// Solver and model bookkeeping attached to an estimate.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Diagnostics {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub branch: Option<MleBranch>,
    /// Σ ln((z_i − lower)/ε), the sufficient statistic of the MLE.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub log_excess_sum: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub eps: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub t: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub p: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub iterations: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub residual_norm: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub start_index: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub variance_model: Option<VarianceModel>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub variance_candidates: Vec<(VarianceModel, f64)>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EstimateReport {
    pub estimator: EstimatorKind,
    pub params: Vec<ParamEstimate>,
    pub n: usize,
    pub diagnostics: Diagnostics,
}

impl EstimateReport {
    pub fn get(&self, param: Param) -> Option<&ParamEstimate> {
        self.params.iter().find(|p| p.param == param)
    }

    pub fn alpha(&self) -> f64 {
        self.get(Param::Alpha).map(|p| p.value).unwrap_or(f64::NAN)
    }

    pub fn theta(&self) -> Option<f64> {
        self.get(Param::Theta).map(|p| p.value)
    }

    /// Point estimate in parameter order (α first).
    pub fn point(&self) -> Vec<f64> {
        self.params.iter().map(|p| p.value).collect()
    }
}

/// Score of the InG jump density in α: `π cot(πα) − ln(z − 1)`.
pub fn score_ing(alpha: f64, z: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::domain(format!("alpha must lie in (0, 1), got {alpha}")));
    }
    if !(z > 1.0) || !z.is_finite() {
        return Err(Error::domain(format!("score needs finite z > 1, got {z}")));
    }
    Ok(PI / (PI * alpha).tan() - (z - 1.0).ln())
}
