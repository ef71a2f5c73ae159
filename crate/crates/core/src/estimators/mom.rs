//! Method of moments for the tempered InG subordinator.
//!
//! Matches the sample mean and mean square of terminal values `S(t)` against
//! `E S(t) = tαθ^{α−1}e^{−θ}` and `E S(t)² = Var S(t) + (E S(t))²` with
//! `Var S(t) = tαe^{−θ}(θ^{α−1} + (1−α)θ^{α−2})`. The two equations do not separate,
//! so they are solved numerically: squared relative residuals are minimized over
//! (logit α, ln θ) by multi-start Nelder–Mead, and the winner is refined with a few
//! Newton steps on the residual system.

use serde::{Deserialize, Serialize};

use super::simplex::{self, SimplexOptions, Termination};
use super::{Diagnostics, EstimateReport, EstimatorKind, ParamEstimate};
use crate::error::{Error, Result};
use crate::sim::{ting_moments, Param};

const LOGIT_LIMIT: f64 = 36.0;
const LOG_THETA_LIMIT: f64 = 40.0;

/// Sample moments of terminal values at horizon `t`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MomentEquations {
    pub t: f64,
    pub m1: f64,
    pub m2: f64,
}

impl MomentEquations {
    pub fn new(t: f64, m1: f64, m2: f64) -> Result<Self> {
        if !(t > 0.0) || !t.is_finite() {
            return Err(Error::domain(format!("horizon t must be finite and > 0, got {t}")));
        }
        if !(m1 > 0.0) || !m1.is_finite() || !m2.is_finite() {
            return Err(Error::domain(format!("moments must be finite with m1 > 0, got m1 = {m1}, m2 = {m2}")));
        }
        if m2 < m1 * m1 {
            return Err(Error::domain(format!("m2 = {m2} is below m1^2 = {}", m1 * m1)));
        }
        Ok(MomentEquations { t, m1, m2 })
    }

    pub fn from_sample(data: &[f64], t: f64) -> Result<Self> {
        if data.len() < 2 {
            return Err(Error::EmptyInput("method of moments needs at least two observations"));
        }
        if let Some(x) = data.iter().find(|x| !x.is_finite() || **x < 0.0) {
            return Err(Error::domain(format!("observations must be finite and >= 0, found {x}")));
        }
        let n = data.len() as f64;
        let m1 = data.iter().sum::<f64>() / n;
        let m2 = data.iter().map(|x| x * x).sum::<f64>() / n;
        if !(m2 - m1 * m1 > 0.0) {
            return Err(Error::Degenerate("sample variance is zero".into()));
        }
        MomentEquations::new(t, m1, m2)
    }

    /// Exact population moments at (α, θ, t).
    pub fn from_params(alpha: f64, theta: f64, t: f64) -> Result<Self> {
        let (mean, var) = ting_moments(alpha, theta, t)?;
        MomentEquations::new(t, mean, var + mean * mean)
    }

    fn residuals(&self, alpha: f64, theta: f64) -> [f64; 2] {
        match ting_moments(alpha, theta, self.t) {
            Ok((mean, var)) => [mean / self.m1 - 1.0, (var + mean * mean) / self.m2 - 1.0],
            Err(_) => [f64::INFINITY, f64::INFINITY],
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MomOptions {
    /// Deterministic starting points (α₀, θ₀), tried in order.
    pub starts: Vec<(f64, f64)>,
    pub max_iter: usize,
    pub residual_tol: f64,
    pub step_tol: f64,
    /// Best residual norm above which the moments are declared unmatched.
    pub infeasible_floor: f64,
}

impl Default for MomOptions {
    fn default() -> Self {
        MomOptions {
            starts: vec![(0.2, 0.3), (0.2, 0.7), (0.5, 0.3), (0.5, 0.7), (0.8, 0.3)],
            max_iter: 10_000,
            residual_tol: 1e-10,
            step_tol: 1e-12,
            infeasible_floor: 1e-3,
        }
    }
}

fn sigmoid(u: f64) -> f64 {
    1.0 / (1.0 + (-u).exp())
}

fn logit(a: f64) -> f64 {
    (a / (1.0 - a)).ln()
}

fn to_params(x: &[f64]) -> (f64, f64) {
    (
        sigmoid(x[0].clamp(-LOGIT_LIMIT, LOGIT_LIMIT)),
        x[1].clamp(-LOG_THETA_LIMIT, LOG_THETA_LIMIT).exp(),
    )
}

/// Method-of-moments estimate of (α, θ) from terminal values observed at horizon `t`.
pub fn mom_ting(data: &[f64], t: f64, init: Option<(f64, f64)>) -> Result<EstimateReport> {
    let eq = MomentEquations::from_sample(data, t)?;
    let mut opts = MomOptions::default();
    if let Some(start) = init {
        opts.starts.insert(0, start);
    }
    let mut report = mom_ting_from_moments(&eq, &opts)?;
    report.n = data.len();
    Ok(report)
}

/// Solves the moment equations for given (m1, m2).
pub fn mom_ting_from_moments(eq: &MomentEquations, opts: &MomOptions) -> Result<EstimateReport> {
    if opts.starts.is_empty() {
        return Err(Error::Config("method of moments needs at least one start".into()));
    }
    for &(a, th) in &opts.starts {
        if !(a > 0.0 && a < 1.0 && th > 0.0 && th.is_finite()) {
            return Err(Error::domain(format!("invalid start (alpha, theta) = ({a}, {th})")));
        }
    }

    let objective = |x: &[f64]| {
        let (a, th) = to_params(x);
        let [r1, r2] = eq.residuals(a, th);
        let overshoot = (x[0].abs() - LOGIT_LIMIT).max(0.0) + (x[1].abs() - LOG_THETA_LIMIT).max(0.0);
        r1 * r1 + r2 * r2 + overshoot * overshoot
    };
    let sopts = SimplexOptions {
        max_iter: opts.max_iter,
        f_target: opts.residual_tol * opts.residual_tol,
        x_tol: opts.step_tol,
        initial_step: 0.5,
    };

    let mut best: Option<(usize, simplex::SimplexResult)> = None;
    let mut capped = 0;
    for (i, &(a0, th0)) in opts.starts.iter().enumerate() {
        let res = simplex::minimize(objective, &[logit(a0), th0.ln()], &sopts);
        if res.termination == Termination::IterationCap {
            capped += 1;
        }
        let better = match &best {
            None => true,
            Some((_, b)) => res.f < b.f,
        };
        if better {
            best = Some((i, res));
        }
    }
    if capped == opts.starts.len() {
        return Err(Error::Convergence {
            what: "method-of-moments simplex search",
            iterations: opts.max_iter,
        });
    }
    let (start_index, best) = best.expect("at least one start");

    let x = newton_polish(eq, [best.x[0], best.x[1]]);
    let (alpha, theta) = to_params(&x);
    let [r1, r2] = eq.residuals(alpha, theta);
    let residual = (r1 * r1 + r2 * r2).sqrt();
    if !(residual <= opts.infeasible_floor) {
        return Err(Error::InfeasibleMoments { residual });
    }

    let mut notes = Vec::new();
    if residual > opts.residual_tol {
        notes.push(format!(
            "residual {residual:.3e} above tolerance {:.1e}; moments matched only approximately",
            opts.residual_tol
        ));
    }
    Ok(EstimateReport {
        estimator: EstimatorKind::MomTing,
        params: vec![
            ParamEstimate::point(Param::Alpha, alpha),
            ParamEstimate::point(Param::Theta, theta),
        ],
        n: 0,
        diagnostics: Diagnostics {
            t: Some(eq.t),
            iterations: Some(best.iterations),
            residual_norm: Some(residual),
            start_index: Some(start_index),
            notes,
            ..Diagnostics::default()
        },
    })
}

fn residual_at(eq: &MomentEquations, x: [f64; 2]) -> [f64; 2] {
    let (a, th) = to_params(&x);
    eq.residuals(a, th)
}

fn norm(r: [f64; 2]) -> f64 {
    r[0].hypot(r[1])
}

// Newton on the 2×2 residual system with a central-difference Jacobian; a step is kept
// only if it lowers the residual norm.
fn newton_polish(eq: &MomentEquations, mut x: [f64; 2]) -> [f64; 2] {
    let mut r = residual_at(eq, x);
    let mut current = norm(r);
    for _ in 0..30 {
        if !(current > 1e-15) {
            break;
        }
        let mut jac = [[0.0; 2]; 2];
        for j in 0..2 {
            let h = 1e-6 * x[j].abs().max(1.0);
            let mut xp = x;
            let mut xm = x;
            xp[j] += h;
            xm[j] -= h;
            let rp = residual_at(eq, xp);
            let rm = residual_at(eq, xm);
            for i in 0..2 {
                jac[i][j] = (rp[i] - rm[i]) / (2.0 * h);
            }
        }
        let det = jac[0][0] * jac[1][1] - jac[0][1] * jac[1][0];
        if !(det.abs() > 1e-300) || !det.is_finite() {
            break;
        }
        let dx0 = -(jac[1][1] * r[0] - jac[0][1] * r[1]) / det;
        let dx1 = -(-jac[1][0] * r[0] + jac[0][0] * r[1]) / det;
        let cand = [x[0] + dx0, x[1] + dx1];
        if cand[0].abs() > LOGIT_LIMIT || cand[1].abs() > LOG_THETA_LIMIT {
            break;
        }
        let rc = residual_at(eq, cand);
        let nc = norm(rc);
        if nc < current {
            x = cand;
            r = rc;
            current = nc;
        } else {
            break;
        }
    }
    x
}
