//! Simulation and parameter estimation for incomplete gamma subordinators.
//!
//! Three compound-Poisson families are covered: InG (jumps ≥ 1, rate αΓ(α)), InG-ε
//! (jumps ≥ ε, rate αΓ(α)ε^{−α}) and the tempered TInG (rate αΓ(α;θ)). The crate
//! provides exact samplers ([`sim`]), estimators of α and θ ([`estimators`]), and a
//! reproducible Monte Carlo harness ([`harness`]).
//!
//! ```
//! use ingsub::{sim::{ModelParams, PathSimulator}, RngStream};
//!
//! let params = ModelParams::ting(0.5, 0.4).unwrap();
//! let sim = PathSimulator::new(&params, 1.0).unwrap();
//! let mut rng = RngStream::new(42, 0);
//! let path = sim.sample(&mut rng).unwrap();
//! assert_eq!(path.jumps.len() as u64, path.jump_count);
//! ```

pub mod error;
pub mod estimators;
pub mod gof;
pub mod harness;
pub mod rng;
pub mod sim;
pub mod specfun;

pub use error::{Error, Result};
pub use estimators::{EstimateReport, EstimatorKind};
pub use harness::{run_mc, summarize, McConfig, McSummary};
pub use rng::RngStream;
pub use sim::{Family, ModelParams, Param, PathSample};
