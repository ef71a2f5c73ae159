//! The six reference Monte Carlo tables: configurations and reference values.
//!
//! Tables 1–4 run the method of moments on TInG terminal values at t = 1 with
//! N ∈ {100, 500, 1000}. Tables 5–6 run fractional-moment inversion on InG and InG-ε
//! terminal values at t = 1000, p = 0.05 with N ∈ {50, 100, 250}. Every cell uses
//! 100 replications.

use serde::{Deserialize, Serialize};

use super::{EstimatorSpec, McConfig};
use crate::error::{Error, Result};
use crate::estimators::fracmom;
use crate::sim::{ModelParams, Param};

pub const TING_T: f64 = 1.0;
pub const TING_SIZES: [usize; 3] = [100, 500, 1000];
pub const FRACMOM_SIZES: [usize; 3] = [50, 100, 250];
pub const FRACMOM_ALPHAS: [f64; 4] = [0.3, 0.5, 0.7, 0.9];
/// ε used for the InG-ε table; the large-t fractional-moment law does not depend on it.
pub const TABLE6_EPS: f64 = 0.5;
pub const REPLICATIONS: usize = 100;

/// A reference (mean, MAD, MSE) triple.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReferenceCell {
    pub table: u8,
    pub alpha: f64,
    pub param: Param,
    pub sample_size: usize,
    pub mean: f64,
    pub mad: f64,
    pub mse: f64,
}

impl ReferenceCell {
    /// Half-width of the acceptance envelope around the reference mean.
    pub fn envelope(&self) -> f64 {
        4.0 * self.mad
    }

    pub fn contains(&self, mean: f64) -> bool {
        (mean - self.mean).abs() <= self.envelope()
    }
}

type Triple = (f64, f64, f64);

// (alpha, theta, alpha row by N, theta row by N)
const TING_TABLES: [(f64, f64, [Triple; 3], [Triple; 3]); 4] = [
    (
        0.1,
        0.2,
        [(0.1325, 0.0109, 0.000177), (0.1312, 0.0093, 0.0001321), (0.1313, 0.0096, 0.0001436)],
        [(0.2026, 0.0120, 0.000214), (0.2018, 0.0104, 0.000166), (0.2020, 0.0106, 0.00017)],
    ),
    (
        0.5,
        0.4,
        [(0.5730, 0.0298, 0.0013), (0.5710, 0.0283, 0.0012), (0.5691, 0.0291, 0.0013)],
        [(0.3846, 0.0114, 0.000198), (0.3843, 0.0108, 0.00018), (0.3846, 0.0113, 0.00029)],
    ),
    (
        0.7,
        0.5,
        [(0.7030, 0.0327, 0.0017), (0.7022, 0.0315, 0.0015), (0.7008, 0.0307, 0.0015)],
        [(0.4033, 0.0139, 0.000295), (0.4009, 0.0136, 0.000249), (0.4007, 0.0130, 0.000266)],
    ),
    (
        0.9,
        0.7,
        [(0.9319, 0.0394, 0.0017), (0.9216, 0.0225, 0.0006), (0.9071, 0.0214, 0.0005)],
        [(0.6644, 0.0446, 0.0021), (0.6753, 0.0257, 0.0008), (0.6922, 0.0250, 0.0007)],
    ),
];

// rows by alpha in FRACMOM_ALPHAS order, columns by N
const TABLE5: [[Triple; 3]; 4] = [
    [(0.3086, 0.0183, 0.000059), (0.3060, 0.0176, 0.00047), (0.3022, 0.0207, 0.000711)],
    [(0.5038, 0.0061, 0.000047), (0.5019, 0.0063, 0.000066), (0.5000, 0.0072, 0.000087)],
    [(0.7059, 0.0126, 0.00033), (0.7037, 0.0120, 0.0002392), (0.7019, 0.0127, 0.000386)],
    [(0.9086, 0.0071, 0.000107), (0.9064, 0.0114, 0.00024), (0.9054, 0.0094, 0.00016)],
];

const TABLE6: [[Triple; 3]; 4] = [
    [(0.3072, 0.0163, 0.00007), (0.3053, 0.0158, 0.00053), (0.3019, 0.0127, 0.00041)],
    [(0.5065, 0.0071, 0.00008), (0.5027, 0.0053, 0.00006), (0.5007, 0.0042, 0.000062)],
    [(0.7067, 0.0152, 0.00072), (0.7053, 0.0140, 0.00053), (0.7015, 0.0134, 0.00029)],
    [(0.9096, 0.0086, 0.00026), (0.9056, 0.0078, 0.00021), (0.9042, 0.0080, 0.00012)],
];

fn check_table(which: u8) -> Result<()> {
    if (1..=6).contains(&which) {
        Ok(())
    } else {
        Err(Error::Config(format!("tables are numbered 1 to 6, got {which}")))
    }
}

/// SplitMix64 finalizer, used to give each cell of a table its own seed.
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed of cell `index` of table `which` under base seed `seed`.
pub fn cell_seed(seed: u64, which: u8, index: usize) -> u64 {
    mix(seed ^ mix(((which as u64) << 32) | index as u64))
}

/// Monte Carlo configurations regenerating table `which`, in row-major order.
pub fn table_configs(which: u8, seed: u64) -> Result<Vec<McConfig>> {
    table_configs_at(which, seed, None)
}

/// As [`table_configs`] with the horizon replaced by `t` when given.
///
/// Row labels carry the horizon so rendered tables record it.
pub fn table_configs_at(which: u8, seed: u64, t: Option<f64>) -> Result<Vec<McConfig>> {
    check_table(which)?;
    let mut out = Vec::new();
    if which <= 4 {
        let (alpha, theta, _, _) = TING_TABLES[which as usize - 1];
        let t = t.unwrap_or(TING_T);
        for n in TING_SIZES {
            let mut c = McConfig::new(
                ModelParams::ting(alpha, theta)?,
                t,
                n,
                EstimatorSpec::Mom { init: None },
                cell_seed(seed, which, out.len()),
            );
            c.replications = REPLICATIONS;
            c.label = Some(format!("alpha={alpha} theta={theta} t={t}"));
            out.push(c);
        }
    } else {
        let t = t.unwrap_or(fracmom::DEFAULT_T);
        for alpha in FRACMOM_ALPHAS {
            let params = if which == 5 {
                ModelParams::ing(alpha)?
            } else {
                ModelParams::ing_eps(alpha, TABLE6_EPS)?
            };
            for n in FRACMOM_SIZES {
                let mut c = McConfig::new(
                    params,
                    t,
                    n,
                    EstimatorSpec::FracMom { p: fracmom::DEFAULT_P },
                    cell_seed(seed, which, out.len()),
                );
                c.replications = REPLICATIONS;
                c.label = Some(format!("alpha={alpha} t={t}"));
                out.push(c);
            }
        }
    }
    Ok(out)
}

/// Reference values for table `which`.
pub fn reference_cells(which: u8) -> Result<Vec<ReferenceCell>> {
    check_table(which)?;
    let cell = |alpha, param, sample_size, (mean, mad, mse): Triple| ReferenceCell {
        table: which,
        alpha,
        param,
        sample_size,
        mean,
        mad,
        mse,
    };
    let mut out = Vec::new();
    if which <= 4 {
        let (alpha, _, a_row, th_row) = TING_TABLES[which as usize - 1];
        for (i, n) in TING_SIZES.iter().enumerate() {
            out.push(cell(alpha, Param::Alpha, *n, a_row[i]));
            out.push(cell(alpha, Param::Theta, *n, th_row[i]));
        }
    } else {
        let table = if which == 5 { &TABLE5 } else { &TABLE6 };
        for (r, alpha) in FRACMOM_ALPHAS.iter().enumerate() {
            for (i, n) in FRACMOM_SIZES.iter().enumerate() {
                out.push(cell(*alpha, Param::Alpha, *n, table[r][i]));
            }
        }
    }
    Ok(out)
}
