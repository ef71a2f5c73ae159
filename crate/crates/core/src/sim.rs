//! Compound-Poisson simulation of the InG, InG-ε and tempered InG subordinators.
//!
//! All three processes are `S(t) = Σ_{j ≤ N(t)} Z_j` with `N` a Poisson process. Jumps are
//! drawn exactly:
//!
//! * InG: `Z = 1/(1 − W)` with `W ~ Beta(1 − α, α)`. Writing `W = X/(X + Y)` for
//!   independent `X ~ Gamma(1 − α)`, `Y ~ Gamma(α)` gives `Z − 1 = X/Y`, which is what
//!   is actually computed (in log space) so that the excess over the support boundary
//!   keeps full relative precision.
//! * InG-ε: `ε·Z`.
//! * TInG: InG proposals accepted with probability `e^{−θ(Z−1)}`.

use std::f64::consts::PI;

use rand_distr::{Distribution, Gamma};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::RngStream;
use crate::specfun::{self, Accuracy};

/// Cap on rejection rounds for a single tempered jump.
pub const DEFAULT_REJECTION_CAP: u64 = 1_000_000;

/// Largest representable excess `Z − 1`; larger draws are clamped here. This only touches
/// the part of the jump law beyond its 1 − 10⁻²⁹⁰ quantile, and keeps path sums finite.
pub const MAX_EXCESS: f64 = 1e300;

/// Inversion is used for the Poisson count up to this mean, PTRS above.
const POISSON_INVERSION_MAX: f64 = 30.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Ing,
    IngEps,
    Ting,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::Ing => "ing",
            Family::IngEps => "ing-eps",
            Family::Ting => "ting",
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ing" => Ok(Family::Ing),
            "ing-eps" | "ing_eps" | "ingeps" => Ok(Family::IngEps),
            "ting" => Ok(Family::Ting),
            other => Err(Error::Config(format!("unknown family '{other}'"))),
        }
    }
}

/// Named model parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Param {
    Alpha,
    Theta,
}

impl Param {
    pub fn as_str(self) -> &'static str {
        match self {
            Param::Alpha => "alpha",
            Param::Theta => "theta",
        }
    }
}

/// Parameters of one of the three subordinator families.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum ModelParams {
    Ing { alpha: f64 },
    IngEps { alpha: f64, eps: f64 },
    Ting { alpha: f64, theta: f64 },
}

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha > 0.0 && alpha < 1.0 {
        Ok(())
    } else {
        Err(Error::domain(format!("alpha must lie in (0, 1), got {alpha}")))
    }
}

fn check_positive(name: &str, v: f64) -> Result<()> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!("{name} must be finite and > 0, got {v}")))
    }
}

impl ModelParams {
    pub fn ing(alpha: f64) -> Result<Self> {
        let p = ModelParams::Ing { alpha };
        p.validate()?;
        Ok(p)
    }

    pub fn ing_eps(alpha: f64, eps: f64) -> Result<Self> {
        let p = ModelParams::IngEps { alpha, eps };
        p.validate()?;
        Ok(p)
    }

    pub fn ting(alpha: f64, theta: f64) -> Result<Self> {
        let p = ModelParams::Ting { alpha, theta };
        p.validate()?;
        Ok(p)
    }

    /// Build from loosely specified fields (CLI style); fields foreign to the family must be absent.
    pub fn from_parts(family: Family, alpha: f64, eps: Option<f64>, theta: Option<f64>) -> Result<Self> {
        match family {
            Family::Ing => {
                if eps.is_some() || theta.is_some() {
                    return Err(Error::Config("ing takes neither eps nor theta".into()));
                }
                ModelParams::ing(alpha)
            }
            Family::IngEps => {
                if theta.is_some() {
                    return Err(Error::Config("ing-eps does not take theta".into()));
                }
                let eps = eps.ok_or_else(|| Error::Config("ing-eps requires eps".into()))?;
                ModelParams::ing_eps(alpha, eps)
            }
            Family::Ting => {
                if eps.is_some() {
                    return Err(Error::Config("ting does not take eps".into()));
                }
                let theta = theta.ok_or_else(|| Error::Config("ting requires theta".into()))?;
                ModelParams::ting(alpha, theta)
            }
        }
    }

    pub fn validate(&self) -> Result<()> {
        check_alpha(self.alpha())?;
        match *self {
            ModelParams::Ing { .. } => Ok(()),
            ModelParams::IngEps { eps, .. } => check_positive("eps", eps),
            ModelParams::Ting { theta, .. } => check_positive("theta", theta),
        }
    }

    pub fn family(&self) -> Family {
        match self {
            ModelParams::Ing { .. } => Family::Ing,
            ModelParams::IngEps { .. } => Family::IngEps,
            ModelParams::Ting { .. } => Family::Ting,
        }
    }

    pub fn alpha(&self) -> f64 {
        match *self {
            ModelParams::Ing { alpha } | ModelParams::IngEps { alpha, .. } | ModelParams::Ting { alpha, .. } => {
                alpha
            }
        }
    }

    pub fn eps(&self) -> Option<f64> {
        match *self {
            ModelParams::IngEps { eps, .. } => Some(eps),
            _ => None,
        }
    }

    pub fn theta(&self) -> Option<f64> {
        match *self {
            ModelParams::Ting { theta, .. } => Some(theta),
            _ => None,
        }
    }

    /// Smallest possible jump.
    pub fn jump_lower_bound(&self) -> f64 {
        self.eps().unwrap_or(1.0)
    }

    /// Parameters that are unknown to an estimator (ε is treated as known).
    pub fn free_params(&self) -> Vec<(Param, f64)> {
        match *self {
            ModelParams::Ting { alpha, theta } => vec![(Param::Alpha, alpha), (Param::Theta, theta)],
            _ => vec![(Param::Alpha, self.alpha())],
        }
    }
}

/// Rate of the driving Poisson process.
pub fn poisson_rate(params: &ModelParams) -> Result<f64> {
    params.validate()?;
    let alpha = params.alpha();
    match *params {
        ModelParams::Ing { .. } => Ok((alpha.ln() + specfun::log_gamma(alpha)?).exp()),
        ModelParams::IngEps { eps, .. } => {
            Ok((alpha.ln() + specfun::log_gamma(alpha)? - alpha * eps.ln()).exp())
        }
        ModelParams::Ting { theta, .. } => Ok(alpha * specfun::upper_inc_gamma(alpha, theta)?),
    }
}

/// Mean and variance of the tempered process at time `t`:
/// `E = tαθ^{α−1}e^{−θ}`, `Var = tαe^{−θ}(θ^{α−1} + (1−α)θ^{α−2})`.
pub fn ting_moments(alpha: f64, theta: f64, t: f64) -> Result<(f64, f64)> {
    check_alpha(alpha)?;
    check_positive("theta", theta)?;
    check_positive("t", t)?;
    let mean = t * alpha * ((alpha - 1.0) * theta.ln() - theta).exp();
    let var = mean * (1.0 + (1.0 - alpha) / theta);
    Ok((mean, var))
}

/// Probability that one untempered proposal is accepted: `e^θ Γ(α;θ) / Γ(α)`.
pub fn ting_acceptance_probability(alpha: f64, theta: f64) -> Result<f64> {
    check_alpha(alpha)?;
    check_positive("theta", theta)?;
    let upper = specfun::upper_inc_gamma(alpha, theta)?;
    Ok((theta + upper.ln() - specfun::log_gamma(alpha)?).exp())
}

/// Exact jump sampler for one parameter set.
///
/// Draws are returned as the excess over the support boundary (`Z − 1` or `Z − ε`);
/// use [`JumpSampler::sample`] for the jump itself.
#[derive(Debug, Clone)]
pub struct JumpSampler {
    params: ModelParams,
    // Gamma(1 + s) variates for the shape-boosting trick Gamma(s) = Gamma(1 + s) U^{1/s}.
    boosted_num: Gamma<f64>,
    boosted_den: Gamma<f64>,
    inv_shape_num: f64,
    inv_shape_den: f64,
    scale: f64,
    theta: Option<f64>,
    rejection_cap: u64,
}

impl JumpSampler {
    pub fn new(params: &ModelParams) -> Result<Self> {
        params.validate()?;
        let alpha = params.alpha();
        let gamma = |shape: f64| {
            Gamma::new(1.0 + shape, 1.0).map_err(|e| Error::domain(format!("gamma variate: {e}")))
        };
        Ok(JumpSampler {
            params: *params,
            boosted_num: gamma(1.0 - alpha)?,
            boosted_den: gamma(alpha)?,
            inv_shape_num: 1.0 / (1.0 - alpha),
            inv_shape_den: 1.0 / alpha,
            scale: params.jump_lower_bound(),
            theta: params.theta(),
            rejection_cap: DEFAULT_REJECTION_CAP,
        })
    }

    pub fn with_rejection_cap(mut self, cap: u64) -> Self {
        self.rejection_cap = cap.max(1);
        self
    }

    pub fn params(&self) -> &ModelParams {
        &self.params
    }

    pub fn lower_bound(&self) -> f64 {
        self.scale
    }

    /// `ln(X/Y)` with `X ~ Gamma(1 − α)`, `Y ~ Gamma(α)`, i.e. `ln(Z − 1)` for an InG jump.
    #[inline]
    fn log_unit_excess(&self, rng: &mut RngStream) -> f64 {
        let ln_x = self.boosted_num.sample(rng).ln() + rng.uniform_pos().ln() * self.inv_shape_num;
        let ln_y = self.boosted_den.sample(rng).ln() + rng.uniform_pos().ln() * self.inv_shape_den;
        ln_x - ln_y
    }

    #[inline]
    fn unit_excess(&self, rng: &mut RngStream) -> f64 {
        self.log_unit_excess(rng).exp().clamp(f64::MIN_POSITIVE, MAX_EXCESS)
    }

    /// Excess over the lower bound together with the number of proposals it took.
    pub fn sample_excess_counted(&self, rng: &mut RngStream) -> Result<(f64, u64)> {
        match self.theta {
            None => Ok((self.scale * self.unit_excess(rng), 1)),
            Some(theta) => {
                for round in 1..=self.rejection_cap {
                    let e = self.unit_excess(rng);
                    if rng.uniform() < (-theta * e).exp() {
                        return Ok((e, round));
                    }
                }
                Err(Error::Convergence {
                    what: "tempered jump rejection sampler",
                    iterations: self.rejection_cap as usize,
                })
            }
        }
    }

    /// Jump size minus its lower bound, at full relative precision.
    pub fn sample_excess(&self, rng: &mut RngStream) -> Result<f64> {
        self.sample_excess_counted(rng).map(|(e, _)| e)
    }

    /// A jump size.
    pub fn sample(&self, rng: &mut RngStream) -> Result<f64> {
        Ok(self.scale + self.sample_excess(rng)?)
    }

    /// `ln(Z − 1)` for InG, `ln(Z − ε)` for InG-ε, from the same draw path as `sample`.
    /// Not defined for the tempered family.
    pub fn sample_log_excess(&self, rng: &mut RngStream) -> Result<f64> {
        if self.theta.is_some() {
            return Err(Error::Config("log-excess draws are only defined for ing and ing-eps".into()));
        }
        Ok(self.scale.ln() + self.log_unit_excess(rng))
    }
}

pub fn sample_jump_ing(alpha: f64, rng: &mut RngStream) -> Result<f64> {
    JumpSampler::new(&ModelParams::ing(alpha)?)?.sample(rng)
}

pub fn sample_jump_ing_eps(alpha: f64, eps: f64, rng: &mut RngStream) -> Result<f64> {
    JumpSampler::new(&ModelParams::ing_eps(alpha, eps)?)?.sample(rng)
}

pub fn sample_jump_ting(alpha: f64, theta: f64, rng: &mut RngStream) -> Result<f64> {
    JumpSampler::new(&ModelParams::ting(alpha, theta)?)?.sample(rng)
}

/// Poisson variate: sequential-search inversion for small means, PTRS otherwise.
pub fn sample_poisson(mean: f64, rng: &mut RngStream) -> Result<u64> {
    if !(mean >= 0.0) || !mean.is_finite() {
        return Err(Error::domain(format!("Poisson mean must be finite and >= 0, got {mean}")));
    }
    if mean == 0.0 {
        return Ok(0);
    }
    if mean <= POISSON_INVERSION_MAX {
        Ok(poisson_inversion(mean, rng))
    } else {
        Ok(poisson_ptrs(mean, rng))
    }
}

fn poisson_inversion(mean: f64, rng: &mut RngStream) -> u64 {
    let u = rng.uniform();
    let mut k = 0u64;
    let mut p = (-mean).exp();
    let mut cdf = p;
    // The loop also ends once the pmf is exhausted in floating point.
    while u >= cdf && p > 0.0 {
        k += 1;
        p *= mean / k as f64;
        cdf += p;
    }
    k
}

// Hörmann (1993), transformed rejection with squeeze.
fn poisson_ptrs(mean: f64, rng: &mut RngStream) -> u64 {
    let smu = mean.sqrt();
    let b = 0.931 + 2.53 * smu;
    let a = -0.059 + 0.024_83 * b;
    let inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    let v_r = 0.9277 - 3.6224 / (b - 2.0);
    let ln_mean = mean.ln();
    loop {
        let u = rng.uniform() - 0.5;
        let v = rng.uniform();
        let us = 0.5 - u.abs();
        let k = ((2.0 * a / us + b) * u + mean + 0.43).floor();
        if us >= 0.07 && v <= v_r {
            return k as u64;
        }
        if k < 0.0 || (us < 0.013 && v > us) {
            continue;
        }
        let lhs = v.ln() + inv_alpha.ln() - (a / (us * us) + b).ln();
        let rhs = -mean + k * ln_mean - specfun::ln_gamma_pos(k + 1.0);
        if lhs <= rhs {
            return k as u64;
        }
    }
}

/// One realization of a subordinator at horizon `t`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PathSample {
    pub t: f64,
    pub jump_count: u64,
    pub jumps: Vec<f64>,
    pub value: f64,
}

/// Simulates `S(t)`: a Poisson number of exact jumps.
pub fn sample_path(params: &ModelParams, t: f64, rng: &mut RngStream) -> Result<PathSample> {
    PathSimulator::new(params, t)?.sample(rng)
}

/// Reusable path simulator (rate and jump sampler computed once).
#[derive(Debug, Clone)]
pub struct PathSimulator {
    t: f64,
    mean_count: f64,
    jumps: JumpSampler,
}

impl PathSimulator {
    pub fn new(params: &ModelParams, t: f64) -> Result<Self> {
        check_positive("t", t)?;
        let rate = poisson_rate(params)?;
        Ok(PathSimulator {
            t,
            mean_count: rate * t,
            jumps: JumpSampler::new(params)?,
        })
    }

    pub fn mean_jump_count(&self) -> f64 {
        self.mean_count
    }

    pub fn jump_sampler(&self) -> &JumpSampler {
        &self.jumps
    }

    pub fn sample(&self, rng: &mut RngStream) -> Result<PathSample> {
        let n = sample_poisson(self.mean_count, rng)?;
        let mut jumps = Vec::with_capacity(n as usize);
        let mut value = 0.0;
        for _ in 0..n {
            let z = self.jumps.sample(rng)?;
            value += z;
            jumps.push(z);
        }
        Ok(PathSample {
            t: self.t,
            jump_count: n,
            jumps,
            value,
        })
    }

    /// Same draws and same value as [`PathSimulator::sample`], without keeping the jumps.
    pub fn sample_value(&self, rng: &mut RngStream) -> Result<(f64, u64)> {
        let n = sample_poisson(self.mean_count, rng)?;
        let mut value = 0.0;
        for _ in 0..n {
            value += self.jumps.sample(rng)?;
        }
        Ok((value, n))
    }
}

/// CDF of the InG jump law, `F(z) = I_{(z−1)/z}(1 − α, α)`.
pub fn jump_cdf_ing(alpha: f64, z: f64) -> Result<f64> {
    check_alpha(alpha)?;
    if !(z >= 1.0) {
        return Err(Error::domain(format!("InG jumps live on [1, ∞), got z = {z}")));
    }
    if z.is_infinite() {
        return Ok(1.0);
    }
    specfun::reg_inc_beta_split(1.0 - alpha, alpha, (z - 1.0) / z, 1.0 / z, &Accuracy::default())
}

/// CDF of the InG-ε jump law, `F(z) = I_{(z−ε)/z}(1 − α, α)`.
pub fn jump_cdf_ing_eps(alpha: f64, eps: f64, z: f64) -> Result<f64> {
    check_positive("eps", eps)?;
    if !(z >= eps) {
        return Err(Error::domain(format!("InG-eps jumps live on [eps, ∞), got z = {z}")));
    }
    jump_cdf_ing(alpha, z / eps)
}

/// Density of the InG jump law, `sin(πα) / (π (z−1)^α z)`.
pub fn jump_pdf_ing(alpha: f64, z: f64) -> Result<f64> {
    check_alpha(alpha)?;
    if z <= 1.0 {
        return Ok(0.0);
    }
    Ok((PI * alpha).sin() / (PI * (z - 1.0).powf(alpha) * z))
}

/// Density of the tempered jump law, `e^{−θz}(z−1)^{−α} z^{−1} / (Γ(1−α) Γ(α;θ))`.
pub fn jump_pdf_ting(alpha: f64, theta: f64, z: f64) -> Result<f64> {
    check_alpha(alpha)?;
    check_positive("theta", theta)?;
    if z <= 1.0 {
        return Ok(0.0);
    }
    let log_norm = specfun::log_gamma(1.0 - alpha)? + specfun::upper_inc_gamma(alpha, theta)?.ln();
    Ok((-theta * z - alpha * (z - 1.0).ln() - z.ln() - log_norm).exp())
}
