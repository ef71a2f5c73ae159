//! Browser bindings. Every exported function returns a JSON string.

use ingsub::estimators::fracmom::fracmom_alpha;
use ingsub::estimators::mle::{mle_alpha_from_log_excess, mle_asymptotic_ci, VarianceModel};
use ingsub::sim::{JumpSampler, PathSimulator};
use ingsub::{Family, ModelParams, RngStream};
use serde_json::json;
use wasm_bindgen::prelude::*;

// Keeps the page responsive; a path with more jumps is refused rather than drawn.
const MAX_JUMPS: u64 = 200_000;
const MAX_SAMPLE: usize = 1_000_000;

fn params(family: &str, alpha: f64, eps: f64, theta: f64) -> Result<ModelParams, String> {
    let family: Family = family.parse().map_err(|e: ingsub::Error| e.to_string())?;
    let opt = |x: f64| if x > 0.0 { Some(x) } else { None };
    ModelParams::from_parts(family, alpha, opt(eps), opt(theta)).map_err(|e| e.to_string())
}

pub fn simulate_path_json(family: &str, alpha: f64, eps: f64, theta: f64, t: f64, seed: u64) -> Result<String, String> {
    let p = params(family, alpha, eps, theta)?;
    let sim = PathSimulator::new(&p, t).map_err(|e| e.to_string())?;
    let path = sim.sample(&mut RngStream::new(seed, 0)).map_err(|e| e.to_string())?;
    if path.jump_count > MAX_JUMPS {
        return Err(format!("{} jumps is too many to draw; shorten t", path.jump_count));
    }
    // jump times are iid uniform on [0, t] given the count
    let mut rng = RngStream::new(seed, 1);
    let mut times: Vec<f64> = (0..path.jump_count).map(|_| t * rng.uniform()).collect();
    times.sort_by(|a, b| a.total_cmp(b));
    Ok(json!({
        "t": t,
        "value": path.value,
        "jump_count": path.jump_count,
        "jumps": path.jumps,
        "times": times,
    })
    .to_string())
}

/// `eps <= 0` means plain InG.
pub fn mle_demo_json(alpha: f64, eps: f64, n: usize, seed: u64, level: f64) -> Result<String, String> {
    if n == 0 || n > MAX_SAMPLE {
        return Err(format!("n must be in 1..={MAX_SAMPLE}"));
    }
    let (p, eps) = if eps > 0.0 {
        (ModelParams::ing_eps(alpha, eps), Some(eps))
    } else {
        (ModelParams::ing(alpha), None)
    };
    let s = JumpSampler::new(&p.map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let mut rng = RngStream::new(seed, 0);
    let logs = (0..n).map(|_| s.sample_log_excess(&mut rng)).collect::<Result<Vec<_>, _>>().map_err(|e| e.to_string())?;
    let report = mle_alpha_from_log_excess(&logs, eps).map_err(|e| e.to_string())?;
    let report = mle_asymptotic_ci(&report, level, VarianceModel::Fisher).map_err(|e| e.to_string())?;
    serde_json::to_string(&report).map_err(|e| e.to_string())
}

pub fn fracmom_demo_json(alpha: f64, eps: f64, n: usize, t: f64, p: f64, seed: u64) -> Result<String, String> {
    if n == 0 || n > MAX_SAMPLE {
        return Err(format!("n must be in 1..={MAX_SAMPLE}"));
    }
    let (family, eps) = if eps > 0.0 { (Family::IngEps, Some(eps)) } else { (Family::Ing, None) };
    let mp = params(family.as_str(), alpha, eps.unwrap_or(0.0), 0.0)?;
    let sim = PathSimulator::new(&mp, t).map_err(|e| e.to_string())?;
    let data = (0..n as u64)
        .map(|r| sim.sample_value(&mut RngStream::new(seed, r)).map(|v| v.0))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    let report = fracmom_alpha(&data, t, p, family, eps).map_err(|e| e.to_string())?;
    serde_json::to_string(&report).map_err(|e| e.to_string())
}

fn js(r: Result<String, String>) -> Result<String, JsError> {
    r.map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn simulate_path(family: &str, alpha: f64, eps: f64, theta: f64, t: f64, seed: u32) -> Result<String, JsError> {
    js(simulate_path_json(family, alpha, eps, theta, t, seed as u64))
}

#[wasm_bindgen]
pub fn mle_demo(alpha: f64, eps: f64, n: u32, seed: u32, level: f64) -> Result<String, JsError> {
    js(mle_demo_json(alpha, eps, n as usize, seed as u64, level))
}

#[wasm_bindgen]
pub fn fracmom_demo(alpha: f64, eps: f64, n: u32, t: f64, p: f64, seed: u32) -> Result<String, JsError> {
    js(fracmom_demo_json(alpha, eps, n as usize, t, p, seed as u64))
}
