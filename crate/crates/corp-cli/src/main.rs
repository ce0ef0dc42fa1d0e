//! Command line front end: reliability diagrams, score decompositions,
//! Murphy diagrams, and the Monte-Carlo studies, over CSV input.
//!
//! Exit codes: 0 success, 1 validation or usage error, 2 I/O error.

mod ingest;
mod report;
mod svg;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use corp::simulation::{coverage_study, mse_study, BinningEstimator, CepEstimator, Scenario};
use corp::{
    build_diagram, corp_decomposition, murphy_diagram, BandKind, BandMethod, BandSpec, DiagramMode,
    DiagramOptions, ScoringRule,
};

#[derive(Debug)]
pub enum CliError {
    Validation(String),
    Io(String),
}

#[derive(Parser)]
#[command(
    name = "corp",
    version,
    about = "CORP reliability diagrams: PAV recalibration, proper-score \
             decompositions, uncertainty bands, and simulation studies"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a reliability diagram report (JSON) and optionally an SVG rendering
    Diagram(DiagramArgs),
    /// Decompose a mean score into MCB - DSC + UNC
    Decompose(DecomposeArgs),
    /// Tabulate elementary-score decompositions across a threshold grid
    Murphy(MurphyArgs),
    /// Monte-Carlo studies on synthetic calibrated scenarios
    #[command(subcommand)]
    Simulate(SimulateCommand),
}

#[derive(Clone, Copy, ValueEnum)]
enum RuleArg {
    Brier,
    Log,
    Misclass,
}

impl From<RuleArg> for ScoringRule {
    fn from(arg: RuleArg) -> Self {
        match arg {
            RuleArg::Brier => ScoringRule::Brier,
            RuleArg::Log => ScoringRule::Logarithmic,
            RuleArg::Misclass => ScoringRule::MisclassificationError,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum BandKindArg {
    Consistency,
    Confidence,
}

impl From<BandKindArg> for BandKind {
    fn from(arg: BandKindArg) -> Self {
        match arg {
            BandKindArg::Consistency => BandKind::Consistency,
            BandKindArg::Confidence => BandKind::Confidence,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Resampling,
    AsymDiscrete,
    AsymContinuous,
}

impl From<MethodArg> for BandMethod {
    fn from(arg: MethodArg) -> Self {
        match arg {
            MethodArg::Auto => BandMethod::Auto,
            MethodArg::Resampling => BandMethod::Resampling,
            MethodArg::AsymDiscrete => BandMethod::AsymptoticDiscrete,
            MethodArg::AsymContinuous => BandMethod::AsymptoticContinuous,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Auto,
    Discrete,
    Continuous,
}

impl ModeArg {
    fn as_override(self) -> Option<DiagramMode> {
        match self {
            ModeArg::Auto => None,
            ModeArg::Discrete => Some(DiagramMode::Discrete),
            ModeArg::Continuous => Some(DiagramMode::Continuous),
        }
    }
}

#[derive(Args)]
struct DiagramArgs {
    /// Input CSV with a `forecast,outcome` header
    input: PathBuf,
    /// Scoring rule for the annotation
    #[arg(long, value_enum, default_value_t = RuleArg::Brier)]
    rule: RuleArg,
    /// Add an uncertainty band of this kind
    #[arg(long, value_enum)]
    band: Option<BandKindArg>,
    /// Nominal band coverage level
    #[arg(long, default_value_t = 0.9)]
    level: f64,
    /// Band construction method
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    method: MethodArg,
    /// Resampling replicates for the band
    #[arg(long, default_value_t = 1000)]
    replicates: u32,
    /// RNG seed; falls back to CORP_SEED, then 0
    #[arg(long)]
    seed: Option<u64>,
    /// Force the marginal display mode
    #[arg(long, value_enum, default_value_t = ModeArg::Auto)]
    mode: ModeArg,
    /// Write the JSON report here instead of standard output
    #[arg(long)]
    out_json: Option<PathBuf>,
    /// Write an SVG rendering here
    #[arg(long)]
    out_svg: Option<PathBuf>,
}

#[derive(Args)]
struct DecomposeArgs {
    /// Input CSV with a `forecast,outcome` header
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = RuleArg::Brier)]
    rule: RuleArg,
}

#[derive(Args)]
struct MurphyArgs {
    /// Input CSV with a `forecast,outcome` header
    input: PathBuf,
    /// Number of equispaced interior thresholds t/(N+1)
    #[arg(long, default_value_t = 99)]
    thresholds: u32,
}

#[derive(Subcommand)]
enum SimulateCommand {
    /// Empirical coverage of uncertainty bands on calibrated data
    Coverage(CoverageArgs),
    /// MSE of CORP against binning-and-counting baselines
    Mse(MseArgs),
}

#[derive(Args)]
struct CoverageArgs {
    /// Scenario name, repeatable (e.g. uniform-continuous, linear-discrete10)
    #[arg(long = "scenario", required = true)]
    scenarios: Vec<String>,
    /// Sample size, repeatable
    #[arg(long = "n", required = true)]
    sizes: Vec<usize>,
    /// Simulation replicates per cell
    #[arg(long, default_value_t = 100)]
    replicates: u32,
    /// RNG seed; falls back to CORP_SEED, then 0
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum, default_value_t = BandKindArg::Consistency)]
    band: BandKindArg,
    #[arg(long, default_value_t = 0.9)]
    level: f64,
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    method: MethodArg,
    /// Resampling replicates inside each band
    #[arg(long, default_value_t = 1000)]
    band_replicates: u32,
}

#[derive(Args)]
struct MseArgs {
    /// Scenario name, repeatable (e.g. uniform-continuous, linear-discrete10)
    #[arg(long = "scenario", required = true)]
    scenarios: Vec<String>,
    /// Sample size, repeatable
    #[arg(long = "n", required = true)]
    sizes: Vec<usize>,
    /// Simulation replicates per cell
    #[arg(long, default_value_t = 100)]
    replicates: u32,
    /// RNG seed; falls back to CORP_SEED, then 0
    #[arg(long)]
    seed: Option<u64>,
    /// Fixed equidistant bin count baseline, repeatable; default 5, 10, 50
    #[arg(long = "bins")]
    bins: Vec<u32>,
    /// Quantile-bin exponent baseline in (0,1), repeatable; default 1/6, 1/3, 1/2
    #[arg(long = "alpha")]
    alphas: Vec<f64>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Validation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Diagram(args) => run_diagram(args),
        Command::Decompose(args) => run_decompose(args),
        Command::Murphy(args) => run_murphy(args),
        Command::Simulate(SimulateCommand::Coverage(args)) => run_coverage(args),
        Command::Simulate(SimulateCommand::Mse(args)) => run_mse(args),
    }
}

fn resolve_seed(explicit: Option<u64>) -> Result<u64, CliError> {
    if let Some(seed) = explicit {
        return Ok(seed);
    }
    match std::env::var("CORP_SEED") {
        Ok(value) => value.trim().parse().map_err(|_| {
            CliError::Validation(format!("CORP_SEED must be an unsigned integer, got `{value}`"))
        }),
        Err(std::env::VarError::NotPresent) => Ok(0),
        Err(e) => Err(CliError::Validation(format!("CORP_SEED: {e}"))),
    }
}

fn write_file(path: &Path, content: &str) -> Result<(), CliError> {
    std::fs::write(path, content).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn validation(e: corp::Error) -> CliError {
    CliError::Validation(e.to_string())
}

fn run_diagram(args: DiagramArgs) -> Result<(), CliError> {
    let dataset = ingest::ingest_csv(&args.input)?;
    let seed = resolve_seed(args.seed)?;
    let band = args.band.map(|kind| BandSpec {
        kind: kind.into(),
        level: args.level,
        method: args.method.into(),
        replicates: args.replicates,
        seed,
    });
    let options = DiagramOptions {
        rule: Some(args.rule.into()),
        band,
        mode_override: args.mode.as_override(),
    };
    let diagram = build_diagram(&dataset, &options).map_err(validation)?;

    let json = report::diagram_report(&diagram);
    match &args.out_json {
        Some(path) => write_file(path, &json)?,
        None => print!("{json}"),
    }
    if let Some(path) = &args.out_svg {
        write_file(path, &svg::render_svg(&diagram))?;
    }
    Ok(())
}

fn run_decompose(args: DecomposeArgs) -> Result<(), CliError> {
    let dataset = ingest::ingest_csv(&args.input)?;
    let decomposition = corp_decomposition(args.rule.into(), &dataset);
    print!("{}", report::decomposition_report(dataset.len(), &decomposition));
    Ok(())
}

fn csv_number(x: f64) -> String {
    format!("{x:.16e}")
}

fn run_murphy(args: MurphyArgs) -> Result<(), CliError> {
    let dataset = ingest::ingest_csv(&args.input)?;
    if args.thresholds == 0 {
        return Err(CliError::Validation("at least one threshold is required".into()));
    }
    let h = 1.0 / (f64::from(args.thresholds) + 1.0);
    let thresholds: Vec<f64> = (1..=args.thresholds).map(|t| f64::from(t) * h).collect();
    let points = murphy_diagram(&dataset, &thresholds).map_err(validation)?;

    println!("threshold,mean_score,mcb,dsc,unc");
    for p in points {
        println!(
            "{},{},{},{},{}",
            csv_number(p.threshold),
            csv_number(p.mean_score),
            csv_number(p.mcb),
            csv_number(p.dsc),
            csv_number(p.unc)
        );
    }
    Ok(())
}

fn parse_scenarios(names: &[String]) -> Result<Vec<Scenario>, CliError> {
    names.iter().map(|s| s.parse().map_err(CliError::Validation)).collect()
}

fn print_study(result: &corp::simulation::StudyResult) {
    println!("scenario,estimator,n,statistic");
    for row in &result.rows {
        println!("{},{},{},{}", row.scenario, row.estimator, row.n, csv_number(row.statistic));
    }
}

fn run_coverage(args: CoverageArgs) -> Result<(), CliError> {
    let scenarios = parse_scenarios(&args.scenarios)?;
    if args.replicates == 0 {
        return Err(CliError::Validation("at least one replicate is required".into()));
    }
    let seed = resolve_seed(args.seed)?;
    let band = BandSpec {
        kind: args.band.into(),
        level: args.level,
        method: args.method.into(),
        replicates: args.band_replicates,
        seed: 0, // replaced by a replicate-derived seed inside the study
    };
    let result = coverage_study(&scenarios, &band, &args.sizes, args.replicates, seed)
        .map_err(validation)?;
    print_study(&result);
    Ok(())
}

fn run_mse(args: MseArgs) -> Result<(), CliError> {
    let scenarios = parse_scenarios(&args.scenarios)?;
    if args.replicates == 0 {
        return Err(CliError::Validation("at least one replicate is required".into()));
    }
    for &alpha in &args.alphas {
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(CliError::Validation(format!(
                "quantile exponent must lie strictly between 0 and 1, got {alpha}"
            )));
        }
    }
    let seed = resolve_seed(args.seed)?;

    let bins: &[u32] = if args.bins.is_empty() { &[5, 10, 50] } else { &args.bins };
    let alphas: &[f64] =
        if args.alphas.is_empty() { &[1.0 / 6.0, 1.0 / 3.0, 0.5] } else { &args.alphas };
    let mut estimators = vec![CepEstimator::Corp];
    estimators.extend(
        bins.iter().map(|&bins| CepEstimator::Binning(BinningEstimator::FixedEquidistant { bins })),
    );
    estimators.extend(
        alphas
            .iter()
            .map(|&exponent| CepEstimator::Binning(BinningEstimator::QuantileBins { exponent })),
    );

    let result = mse_study(&scenarios, &estimators, &args.sizes, args.replicates, seed);
    print_study(&result);
    Ok(())
}
