//! Monte Carlo experiments: repeated simulate-then-estimate runs with mean/MAD/MSE summaries.
//!
//! Replication `r` (1-based) draws all of its observations from `RngStream::new(seed, r)`,
//! so results do not depend on how replications are scheduled across threads.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::estimators::{fracmom, mle, mom, VarianceModel};
use crate::rng::RngStream;
use crate::sim::{Family, JumpSampler, ModelParams, Param, PathSimulator};

pub mod presets;
pub mod table;

pub use table::{emit_table, TableFormat};

pub const DEFAULT_MAX_FAILURE_FRACTION: f64 = 0.1;

/// Estimator selection together with its options.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum EstimatorSpec {
    /// Closed-form MLE on `sample_size` i.i.d. jumps (InG / InG-ε only).
    Mle {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        level: Option<f64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        variance_model: Option<VarianceModel>,
    },
    /// Method of moments on `sample_size` terminal values (TInG only).
    Mom {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        init: Option<(f64, f64)>,
    },
    /// Fractional-moment inversion on `sample_size` terminal values (InG / InG-ε only).
    #[serde(rename = "fracmom")]
    FracMom {
        #[serde(default = "default_p")]
        p: f64,
    },
}

fn default_p() -> f64 {
    fracmom::DEFAULT_P
}

impl EstimatorSpec {
    pub fn name(&self) -> &'static str {
        match self {
            EstimatorSpec::Mle { .. } => "mle",
            EstimatorSpec::Mom { .. } => "mom",
            EstimatorSpec::FracMom { .. } => "fracmom",
        }
    }

    fn check_family(&self, family: Family) -> Result<()> {
        let ok = match self {
            EstimatorSpec::Mle { .. } | EstimatorSpec::FracMom { .. } => family != Family::Ting,
            EstimatorSpec::Mom { .. } => family == Family::Ting,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Config(format!(
                "estimator '{}' is not defined for family '{family}'",
                self.name()
            )))
        }
    }

    /// Parameters this estimator reports, in report order.
    pub fn params(&self) -> &'static [Param] {
        match self {
            EstimatorSpec::Mom { .. } => &[Param::Alpha, Param::Theta],
            _ => &[Param::Alpha],
        }
    }
}

/// One Monte Carlo cell.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct McConfig {
    /// Row name used when tabulating; derived from the parameters when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub params: ModelParams,
    #[serde(default = "default_t")]
    pub t: f64,
    pub sample_size: usize,
    #[serde(default = "default_replications")]
    pub replications: usize,
    pub estimator: EstimatorSpec,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_max_failure_fraction")]
    pub max_failure_fraction: f64,
}

fn default_t() -> f64 {
    1.0
}

fn default_replications() -> usize {
    100
}

fn default_max_failure_fraction() -> f64 {
    DEFAULT_MAX_FAILURE_FRACTION
}

impl McConfig {
    pub fn new(params: ModelParams, t: f64, sample_size: usize, estimator: EstimatorSpec, seed: u64) -> Self {
        McConfig {
            label: None,
            params,
            t,
            sample_size,
            replications: default_replications(),
            estimator,
            seed,
            max_failure_fraction: DEFAULT_MAX_FAILURE_FRACTION,
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.params.validate()?;
        if !(self.t > 0.0) || !self.t.is_finite() {
            return Err(Error::Config(format!("t must be finite and > 0, got {}", self.t)));
        }
        if self.sample_size == 0 || self.replications == 0 {
            return Err(Error::Config("sample_size and replications must be at least 1".into()));
        }
        if !(0.0..=1.0).contains(&self.max_failure_fraction) {
            return Err(Error::Config(format!(
                "max_failure_fraction must lie in [0, 1], got {}",
                self.max_failure_fraction
            )));
        }
        self.estimator.check_family(self.params.family())?;
        match self.estimator {
            EstimatorSpec::FracMom { p } if !(p > 0.0 && p < 1.0) => {
                Err(Error::Config(format!("fractional order p must lie in (0, 1), got {p}")))
            }
            EstimatorSpec::FracMom { .. } if self.t <= 1.0 => Err(Error::Config(format!(
                "fractional-moment estimation needs t > 1, got {}",
                self.t
            ))),
            EstimatorSpec::Mom { .. } if self.sample_size < 2 => {
                Err(Error::Config("method of moments needs sample_size >= 2".into()))
            }
            EstimatorSpec::Mle { level: Some(l), .. } if !(l > 0.0 && l < 1.0) => {
                Err(Error::Config(format!("confidence level must lie in (0, 1), got {l}")))
            }
            _ => Ok(()),
        }
    }

    pub fn row_label(&self) -> String {
        if let Some(l) = &self.label {
            return l.clone();
        }
        match self.params {
            ModelParams::Ing { alpha } => format!("ing alpha={alpha}"),
            ModelParams::IngEps { alpha, eps } => format!("ing-eps alpha={alpha} eps={eps}"),
            ModelParams::Ting { alpha, theta } => format!("ting alpha={alpha} theta={theta}"),
        }
    }

    /// True values of the parameters the estimator reports.
    pub fn truth(&self) -> Vec<(Param, f64)> {
        self.estimator
            .params()
            .iter()
            .map(|&p| {
                let v = match p {
                    Param::Alpha => self.params.alpha(),
                    Param::Theta => self.params.theta().unwrap_or(f64::NAN),
                };
                (p, v)
            })
            .collect()
    }
}

/// Mean, MAD and MSE of one parameter across replications.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ParamSummary {
    pub param: Param,
    pub truth: f64,
    pub mean: f64,
    pub mad: f64,
    pub mse: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct McSummary {
    pub config: McConfig,
    pub rows: Vec<ParamSummary>,
    /// Replications that produced an estimate.
    pub succeeded: usize,
    pub failed: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
    /// Excluded from serialization so that repeated runs give identical files.
    #[serde(skip)]
    pub wall_clock_secs: f64,
}

impl McSummary {
    pub fn get(&self, param: Param) -> Option<&ParamSummary> {
        self.rows.iter().find(|r| r.param == param)
    }
}

/// Mean, MAD and MSE of each coordinate of `estimates` against `truth`.
pub fn summarize(estimates: &[Vec<f64>], truth: &[(Param, f64)]) -> Result<Vec<ParamSummary>> {
    if estimates.is_empty() {
        return Err(Error::EmptyInput("summary needs at least one estimate"));
    }
    if let Some(e) = estimates.iter().find(|e| e.len() != truth.len()) {
        return Err(Error::Config(format!(
            "estimate has {} coordinates, truth has {}",
            e.len(),
            truth.len()
        )));
    }
    let n = estimates.len() as f64;
    let rows = truth
        .iter()
        .enumerate()
        .map(|(j, &(param, tv))| {
            let mut sum = 0.0;
            let mut abs = 0.0;
            let mut sq = 0.0;
            let mut max_dev: f64 = 0.0;
            for e in estimates {
                let d = e[j] - tv;
                sum += e[j];
                abs += d.abs();
                sq += d * d;
                max_dev = max_dev.max(d.abs());
            }
            let row = ParamSummary {
                param,
                truth: tv,
                mean: sum / n,
                mad: abs / n,
                mse: sq / n,
            };
            debug_assert!(row.mse <= max_dev * row.mad * (1.0 + 1e-12) + f64::MIN_POSITIVE);
            row
        })
        .collect();
    Ok(rows)
}

/// Observations for one replication followed by the point estimate.
pub fn run_replication(config: &McConfig, replication: u64) -> Result<Vec<f64>> {
    let mut rng = RngStream::new(config.seed, replication);
    let n = config.sample_size;
    match config.estimator {
        EstimatorSpec::Mle { .. } => {
            let sampler = JumpSampler::new(&config.params)?;
            let logs = (0..n)
                .map(|_| sampler.sample_log_excess(&mut rng))
                .collect::<Result<Vec<_>>>()?;
            Ok(mle::mle_alpha_from_log_excess(&logs, config.params.eps())?.point())
        }
        EstimatorSpec::Mom { init } => {
            let values = simulate_values(config, &mut rng)?;
            Ok(mom::mom_ting(&values, config.t, init)?.point())
        }
        EstimatorSpec::FracMom { p } => {
            let values = simulate_values(config, &mut rng)?;
            let r = fracmom::fracmom_alpha(&values, config.t, p, config.params.family(), config.params.eps())?;
            Ok(r.point())
        }
    }
}

fn simulate_values(config: &McConfig, rng: &mut RngStream) -> Result<Vec<f64>> {
    let sim = PathSimulator::new(&config.params, config.t)?;
    (0..config.sample_size)
        .map(|_| sim.sample_value(rng).map(|(v, _)| v))
        .collect()
}

/// Point estimates of every replication in replication order, failures included.
pub fn run_estimates(config: &McConfig) -> Result<Vec<Result<Vec<f64>>>> {
    estimates_with(config, run_replication)
}

fn estimates_with<F>(config: &McConfig, replicate: F) -> Result<Vec<Result<Vec<f64>>>>
where
    F: Fn(&McConfig, u64) -> Result<Vec<f64>> + Sync,
{
    config.validate()?;
    Ok((1..=config.replications as u64)
        .into_par_iter()
        .map(|r| replicate(config, r))
        .collect())
}

/// Runs every replication of `config` and summarizes the estimates.
///
/// Failed replications are dropped from the statistics and counted; the run fails when
/// their share exceeds `max_failure_fraction`.
pub fn run_mc(config: &McConfig) -> Result<McSummary> {
    run_mc_with(config, run_replication)
}

/// [`run_mc`] with a custom per-replication procedure `replicate(config, r)`.
pub fn run_mc_with<F>(config: &McConfig, replicate: F) -> Result<McSummary>
where
    F: Fn(&McConfig, u64) -> Result<Vec<f64>> + Sync,
{
    let start = Instant::now();
    let outcomes = estimates_with(config, replicate)?;
    let total = outcomes.len();
    let mut estimates = Vec::with_capacity(total);
    let mut failed = 0;
    let mut first_failure = None;
    for (i, o) in outcomes.into_iter().enumerate() {
        match o {
            Ok(e) => estimates.push(e),
            Err(err) => {
                log::debug!("replication {} failed: {err}", i + 1);
                failed += 1;
                first_failure.get_or_insert_with(|| err.to_string());
            }
        }
    }
    if failed as f64 > config.max_failure_fraction * total as f64 || estimates.is_empty() {
        return Err(Error::TooManyFailures {
            failed,
            total,
            first: first_failure.unwrap_or_default(),
        });
    }
    if failed > 0 {
        log::warn!("{failed} of {total} replications failed and were excluded");
    }
    let rows = summarize(&estimates, &config.truth())?;
    Ok(McSummary {
        config: config.clone(),
        rows,
        succeeded: estimates.len(),
        failed,
        first_failure,
        wall_clock_secs: start.elapsed().as_secs_f64(),
    })
}
