//! `ingsub` command-line tool.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ingsub::estimators::fracmom::{self, fracmom_alpha};
use ingsub::estimators::mle::{mle_alpha_ing, mle_alpha_ing_eps, mle_asymptotic_ci, VarianceModel};
use ingsub::estimators::mom_ting;
use ingsub::harness::presets::table_configs_at;
use ingsub::harness::{emit_table, TableFormat};
use ingsub::sim::{JumpSampler, PathSimulator};
use ingsub::{run_mc, EstimateReport, Family, McConfig, McSummary, ModelParams, RngStream};
use rayon::prelude::*;

#[derive(Parser)]
#[command(name = "ingsub", version, about = "Simulate and estimate InG, InG-eps and TInG subordinators")]
struct Cli {
    /// Worker threads for parallel work; results do not depend on it
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Draw terminal values S(t) (or single jumps) to CSV
    Simulate(SimulateArgs),
    /// Estimate parameters from a CSV of observations
    Estimate(EstimateArgs),
    /// Run Monte Carlo experiments described by a JSON config
    Experiment(ExperimentArgs),
    /// Regenerate one of the six reference Monte Carlo tables
    Tables(TablesArgs),
}

#[derive(Args)]
struct SimulateArgs {
    #[arg(long)]
    family: Family,
    #[arg(long)]
    alpha: f64,
    #[arg(long)]
    eps: Option<f64>,
    #[arg(long)]
    theta: Option<f64>,
    #[arg(long, default_value_t = 1.0)]
    t: f64,
    /// Number of rows
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write i.i.d. jumps instead of path values (input for the MLE)
    #[arg(long)]
    jumps: bool,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum EstimatorArg {
    Mle,
    Mom,
    Fracmom,
}

#[derive(Args)]
struct EstimateArgs {
    #[arg(long)]
    estimator: EstimatorArg,
    #[arg(long = "in")]
    input: PathBuf,
    /// Jump threshold of the InG-eps model; read from the file when omitted
    #[arg(long)]
    eps: Option<f64>,
    /// Observation horizon; read from the file when omitted
    #[arg(long)]
    t: Option<f64>,
    /// Fractional-moment order
    #[arg(long)]
    p: Option<f64>,
    /// Confidence level of the MLE interval
    #[arg(long, default_value_t = 0.95)]
    level: f64,
    #[arg(long, default_value = "fisher")]
    variance_model: VarianceModel,
    /// Output JSON file; stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ExperimentArgs {
    /// JSON McConfig or array of them
    #[arg(long)]
    config: PathBuf,
    #[arg(long)]
    out_dir: PathBuf,
    #[arg(long, default_value = "csv")]
    format: TableFormat,
}

#[derive(Args)]
struct TablesArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=6))]
    which: u8,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Horizon override (defaults: 1 for Tables 1-4, 1000 for Tables 5-6)
    #[arg(long)]
    t: Option<f64>,
    #[arg(long, default_value = "text")]
    format: TableFormat,
    /// Output file; stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
}

enum Failure {
    Core(ingsub::Error),
    Input(String),
    Io(String),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Core(e) if e.is_validation() => 2,
            Failure::Core(_) => 3,
            Failure::Input(_) => 2,
            Failure::Io(_) => 4,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Core(e) => write!(f, "{e}"),
            Failure::Input(m) => write!(f, "invalid input: {m}"),
            Failure::Io(m) => write!(f, "i/o error: {m}"),
        }
    }
}

impl From<ingsub::Error> for Failure {
    fn from(e: ingsub::Error) -> Self {
        Failure::Core(e)
    }
}

type CliResult<T> = Result<T, Failure>;

fn io_err(path: &Path, e: impl fmt::Display) -> Failure {
    Failure::Io(format!("{}: {e}", path.display()))
}

fn write_output(path: Option<&Path>, content: &str) -> CliResult<()> {
    match path {
        Some(p) => fs::write(p, content).map_err(|e| io_err(p, e)),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn opt_str(x: Option<f64>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

fn simulate(args: &SimulateArgs) -> CliResult<()> {
    let params = ModelParams::from_parts(args.family, args.alpha, args.eps, args.theta)?;
    if args.n == 0 {
        return Err(Failure::Core(ingsub::Error::Config("--n must be at least 1".into())));
    }
    // row r draws from stream r, so rows are independent of the pool layout
    let rows: Vec<(f64, u64)> = if args.jumps {
        let sampler = JumpSampler::new(&params)?;
        (1..=args.n as u64)
            .into_par_iter()
            .map(|r| sampler.sample(&mut RngStream::new(args.seed, r)).map(|z| (z, 1)))
            .collect::<ingsub::Result<_>>()?
    } else {
        let sim = PathSimulator::new(&params, args.t)?;
        (1..=args.n as u64)
            .into_par_iter()
            .map(|r| sim.sample_value(&mut RngStream::new(args.seed, r)))
            .collect::<ingsub::Result<_>>()?
    };

    let file = fs::File::create(&args.out).map_err(|e| io_err(&args.out, e))?;
    let mut w = csv::Writer::from_writer(std::io::BufWriter::new(file));
    let fail = |e: csv::Error| io_err(&args.out, e);
    w.write_record(["family", "alpha", "eps", "theta", "t", "seed", "stream", "value", "jump_count"])
        .map_err(fail)?;
    let (family, alpha) = (params.family().as_str(), params.alpha().to_string());
    let (eps, theta) = (opt_str(params.eps()), opt_str(params.theta()));
    let t = if args.jumps { String::new() } else { args.t.to_string() };
    let seed = args.seed.to_string();
    for (i, (value, count)) in rows.iter().enumerate() {
        w.write_record([
            family,
            &alpha,
            &eps,
            &theta,
            &t,
            &seed,
            &(i + 1).to_string(),
            &value.to_string(),
            &count.to_string(),
        ])
        .map_err(fail)?;
    }
    w.flush().map_err(|e| io_err(&args.out, e))?;
    log::info!("wrote {} rows to {}", rows.len(), args.out.display());
    Ok(())
}

/// Observations from a CSV file plus any model columns that are constant across rows.
struct Observations {
    values: Vec<f64>,
    family: Option<Family>,
    eps: Option<f64>,
    t: Option<f64>,
}

fn read_observations(path: &Path) -> CliResult<Observations> {
    let text = fs::read_to_string(path).map_err(|e| io_err(path, e))?;
    let mut rdr = csv::ReaderBuilder::new().has_headers(false).flexible(true).from_reader(text.as_bytes());
    let mut records = Vec::new();
    for r in rdr.records() {
        records.push(r.map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?);
    }
    let Some(first) = records.first() else {
        return Err(Failure::Core(ingsub::Error::EmptyInput("observation file has no rows")));
    };
    // a first row that does not parse as data is a header
    let header: Option<Vec<String>> = match first.get(0).map(|s| s.trim().parse::<f64>()) {
        Some(Ok(_)) => None,
        _ => Some(first.iter().map(|s| s.trim().to_string()).collect()),
    };
    let col = |name: &str| header.as_ref().and_then(|h| h.iter().position(|c| c == name));
    let value_col = match &header {
        Some(_) => col("value").unwrap_or(0),
        None => 0,
    };
    let body = if header.is_some() { &records[1..] } else { &records[..] };

    let mut values = Vec::with_capacity(body.len());
    for (i, r) in body.iter().enumerate() {
        let cell = r.get(value_col).unwrap_or("").trim();
        let v: f64 = cell
            .parse()
            .map_err(|_| Failure::Input(format!("row {}: '{cell}' is not a number", i + 1)))?;
        values.push(v);
    }
    if values.is_empty() {
        return Err(Failure::Core(ingsub::Error::EmptyInput("observation file has no rows")));
    }
    let constant = |name: &str| -> Option<String> {
        let c = col(name)?;
        let first = body.first()?.get(c)?.trim();
        if first.is_empty() || body.iter().any(|r| r.get(c).map(str::trim) != Some(first)) {
            return None;
        }
        Some(first.to_string())
    };
    Ok(Observations {
        values,
        family: constant("family").and_then(|s| s.parse().ok()),
        eps: constant("eps").and_then(|s| s.parse().ok()),
        t: constant("t").and_then(|s| s.parse().ok()),
    })
}

fn estimate(args: &EstimateArgs) -> CliResult<()> {
    let obs = read_observations(&args.input)?;
    let eps = args.eps.or(obs.eps);
    let t = args.t.or(obs.t);
    let report: EstimateReport = match args.estimator {
        EstimatorArg::Mle => {
            if obs.family == Some(Family::Ting) {
                return Err(Failure::Core(ingsub::Error::Config(
                    "the MLE is defined for ing and ing-eps jumps only".into(),
                )));
            }
            let r = match eps {
                Some(e) => mle_alpha_ing_eps(&obs.values, e)?,
                None => mle_alpha_ing(&obs.values)?,
            };
            mle_asymptotic_ci(&r, args.level, args.variance_model)?
        }
        EstimatorArg::Mom => mom_ting(&obs.values, t.unwrap_or(1.0), None)?,
        EstimatorArg::Fracmom => {
            let family = if eps.is_some() { Family::IngEps } else { Family::Ing };
            fracmom_alpha(
                &obs.values,
                t.unwrap_or(fracmom::DEFAULT_T),
                args.p.unwrap_or(fracmom::DEFAULT_P),
                family,
                eps,
            )?
        }
    };
    let mut json = serde_json::to_string_pretty(&report).map_err(|e| Failure::Io(e.to_string()))?;
    json.push('\n');
    write_output(args.out.as_deref(), &json)
}

fn read_configs(path: &Path) -> CliResult<Vec<McConfig>> {
    let text = fs::read_to_string(path).map_err(|e| io_err(path, e))?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let parse = |v: serde_json::Value| {
        serde_json::from_value::<McConfig>(v).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
    };
    let configs = match value {
        serde_json::Value::Array(items) => items.into_iter().map(parse).collect::<CliResult<Vec<_>>>()?,
        other => vec![parse(other)?],
    };
    if configs.is_empty() {
        return Err(Failure::Input(format!("{}: no configurations", path.display())));
    }
    for c in &configs {
        c.validate()?;
    }
    Ok(configs)
}

/// Runs every config; failures are reported and the first one returned after the rest ran.
fn run_all(configs: &[McConfig]) -> (Vec<McSummary>, Option<Failure>) {
    let mut done = Vec::new();
    let mut first = None;
    for c in configs {
        match run_mc(c) {
            Ok(s) => {
                log::info!("{} N={}: {:.2}s", c.row_label(), c.sample_size, s.wall_clock_secs);
                done.push(s);
            }
            Err(e) => {
                eprintln!("{} N={}: {e}", c.row_label(), c.sample_size);
                first.get_or_insert(Failure::Core(e));
            }
        }
    }
    (done, first)
}

fn experiment(args: &ExperimentArgs) -> CliResult<()> {
    let configs = read_configs(&args.config)?;
    fs::create_dir_all(&args.out_dir).map_err(|e| io_err(&args.out_dir, e))?;
    let (summaries, failure) = run_all(&configs);

    let mut json = serde_json::to_string_pretty(&summaries).map_err(|e| Failure::Io(e.to_string()))?;
    json.push('\n');
    let path = args.out_dir.join("summaries.json");
    fs::write(&path, json).map_err(|e| io_err(&path, e))?;

    let mut names: Vec<&str> = summaries.iter().map(|s| s.config.estimator.name()).collect();
    names.dedup();
    names.sort_unstable();
    names.dedup();
    for name in &names {
        let group: Vec<McSummary> =
            summaries.iter().filter(|s| s.config.estimator.name() == *name).cloned().collect();
        let file = if names.len() == 1 {
            format!("table.{}", args.format.extension())
        } else {
            format!("table-{name}.{}", args.format.extension())
        };
        let path = args.out_dir.join(file);
        fs::write(&path, emit_table(&group, args.format)?).map_err(|e| io_err(&path, e))?;
    }
    failure.map_or(Ok(()), Err)
}

fn tables(args: &TablesArgs) -> CliResult<()> {
    let configs = table_configs_at(args.which, args.seed, args.t)?;
    for c in &configs {
        c.validate()?;
    }
    let (summaries, failure) = run_all(&configs);
    write_output(args.out.as_deref(), &emit_table(&summaries, args.format)?)?;
    failure.map_or(Ok(()), Err)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: cannot start {n} worker threads: {e}");
            return ExitCode::from(2);
        }
    }
    let result = match &cli.command {
        Command::Simulate(a) => simulate(a),
        Command::Estimate(a) => estimate(a),
        Command::Experiment(a) => experiment(a),
        Command::Tables(a) => tables(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.exit_code())
        }
    }
}
