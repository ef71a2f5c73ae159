#![allow(dead_code)]

pub mod oracles;

use std::f64::consts::PI;

// 5-point Gauss–Legendre on [-1, 1]
const GL_X: [f64; 5] = [
    0.0,
    0.538_469_310_105_683_1,
    -0.538_469_310_105_683_1,
    0.906_179_845_938_664,
    -0.906_179_845_938_664,
];
const GL_W: [f64; 5] = [
    0.568_888_888_888_888_9,
    0.478_628_670_499_366_5,
    0.478_628_670_499_366_5,
    0.236_926_885_056_189_1,
    0.236_926_885_056_189_1,
];

/// Composite Gauss–Legendre with panels no wider than `hmax`.
pub fn integrate<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, hmax: f64) -> f64 {
    if b <= a {
        return 0.0;
    }
    let panels = ((b - a) / hmax).ceil().max(1.0) as usize;
    let h = (b - a) / panels as f64;
    let mut total = 0.0;
    for i in 0..panels {
        let lo = a + i as f64 * h;
        let mid = lo + 0.5 * h;
        let mut s = 0.0;
        for k in 0..5 {
            s += GL_W[k] * f(mid + 0.5 * h * GL_X[k]);
        }
        total += 0.5 * h * s;
    }
    total
}

/// As [`integrate`] with a dyadic mesh toward a weak singularity at `a`.
pub fn integrate_graded<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, hmax: f64) -> f64 {
    if b <= a {
        return 0.0;
    }
    let mut total = 0.0;
    let mut hi = b;
    for _ in 0..60 {
        let lo = a + 0.5 * (hi - a);
        total += integrate(f, lo, hi, hmax);
        hi = lo;
    }
    total
}

/// Tempered jump law evaluated by quadrature of its density, independently of the
/// incomplete gamma normalizer.
///
/// With u = z − 1 and v = u^{1−α}, the unnormalized mass u^{−α}e^{−θu}/(1+u) du becomes
/// e^{−θu}/(1+u) dv/(1−α), which is bounded and smooth in v.
pub struct TingOracle {
    alpha: f64,
    theta: f64,
    vmax: f64,
    hmax: f64,
    norm: f64,
}

impl TingOracle {
    pub fn new(alpha: f64, theta: f64) -> Self {
        let umax = 80.0 / theta;
        let vmax = umax.powf(1.0 - alpha);
        let hmax = vmax / 4000.0;
        let mut o = TingOracle { alpha, theta, vmax, hmax, norm: 1.0 };
        o.norm = integrate_graded(&|v| o.g(v), 0.0, vmax, hmax);
        o
    }

    fn u(&self, v: f64) -> f64 {
        v.powf(1.0 / (1.0 - self.alpha))
    }

    fn g(&self, v: f64) -> f64 {
        let u = self.u(v);
        (-self.theta * u).exp() / (1.0 + u) / (1.0 - self.alpha)
    }

    fn v_of(&self, excess: f64) -> f64 {
        excess.max(0.0).powf(1.0 - self.alpha).min(self.vmax)
    }

    /// Unnormalized mass on [1, ∞).
    pub fn norm(&self) -> f64 {
        self.norm
    }

    pub fn cdf(&self, z: f64) -> f64 {
        integrate_graded(&|v| self.g(v), 0.0, self.v_of(z - 1.0), self.hmax) / self.norm
    }

    /// CDF at every excess z − 1 in `sorted` (ascending), accumulating interval by
    /// interval. Excesses keep full precision where z itself would round to 1.
    pub fn cdf_sorted_excess(&self, sorted: &[f64]) -> Vec<f64> {
        let mut out = Vec::with_capacity(sorted.len());
        let mut acc = 0.0;
        let mut v_prev = 0.0;
        for &u in sorted {
            let v = self.v_of(u);
            acc += if v_prev == 0.0 {
                integrate_graded(&|x| self.g(x), 0.0, v, self.hmax)
            } else {
                integrate(&|x| self.g(x), v_prev, v, self.hmax)
            };
            v_prev = v;
            out.push((acc / self.norm).min(1.0));
        }
        out
    }

    pub fn mean(&self) -> f64 {
        1.0 + integrate_graded(&|v| self.u(v) * self.g(v), 0.0, self.vmax, self.hmax) / self.norm
    }
}

/// InG jump CDF by quadrature of the density, in the same v-coordinates.
pub fn ing_cdf_quadrature(alpha: f64, z: f64) -> f64 {
    let k = 1.0 / (1.0 - alpha);
    let c = (PI * alpha).sin() / (PI * (1.0 - alpha));
    let vz = (z - 1.0).powf(1.0 - alpha);
    let split = vz.min(4.0);
    let head = integrate(&|v: f64| c / (1.0 + v.powf(k)), 0.0, split, 1e-3);
    // beyond v = 4 switch to w = 1/v so the slowly decaying tail stays bounded
    let tail = if vz > split {
        integrate(&|w: f64| c / (w * w + w * w * w.powf(-k)), 1.0 / vz, 1.0 / split, 1e-4)
    } else {
        0.0
    };
    head + tail
}

/// Maximizer of a unimodal function on [lo, hi] by golden-section search.
pub fn golden_max<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let r = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - r * (hi - lo);
    let mut x2 = lo + r * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    while hi - lo > tol {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + r * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - r * (hi - lo);
            f1 = f(x1);
        }
    }
    0.5 * (lo + hi)
}

/// InG log-likelihood summed observation by observation from the density, taking
/// the log-excesses ln(z − 1) as data.
pub fn ing_log_likelihood(alpha: f64, log_excess: &[f64]) -> f64 {
    log_excess
        .iter()
        .map(|&l| ((PI * alpha).sin() / PI).ln() - alpha * l - l.exp().ln_1p())
        .sum()
}

pub fn mean_se(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, (var / n).sqrt())
}

pub fn sample_variance(xs: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0)
}

pub fn rel_err(got: f64, want: f64) -> f64 {
    if want == 0.0 {
        got.abs()
    } else {
        ((got - want) / want).abs()
    }
}
