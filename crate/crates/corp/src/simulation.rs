//! Simulation harness: scenario samplers, binning-and-counting baselines,
//! and the coverage and MSE studies.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bands::{compute_band, BandKind, BandMethod, BandSpec};
use crate::dataset::{aggregate, ForecastDataset};
use crate::error::Result;
use crate::pav::{pav_fit, recalibrate_with};
use crate::stats::quantile_type7;

/// Marginal distribution of simulated forecast values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ForecastDistribution {
    /// Flat density q = 1.
    Uniform,
    /// Linearly increasing density q(x) = 0.4 + 1.2 x.
    Linear,
    /// Beta(1,10) and Uniform components with weights 3/4 and 1/4.
    BetaMixture,
}

impl ForecastDistribution {
    pub fn density(&self, x: f64) -> f64 {
        match self {
            Self::Uniform => 1.0,
            Self::Linear => 0.4 + 1.2 * x,
            Self::BetaMixture => 0.75 * 10.0 * (1.0 - x).powi(9) + 0.25,
        }
    }

    pub fn cdf(&self, x: f64) -> f64 {
        match self {
            Self::Uniform => x,
            Self::Linear => 0.4 * x + 0.6 * x * x,
            Self::BetaMixture => 0.75 * (1.0 - (1.0 - x).powi(10)) + 0.25 * x,
        }
    }

    fn sample(&self, rng: &mut impl Rng) -> f64 {
        match self {
            Self::Uniform => rng.random::<f64>(),
            Self::Linear => {
                let u = rng.random::<f64>();
                (-0.4 + (0.16 + 2.4 * u).sqrt()) / 1.2
            }
            Self::BetaMixture => {
                let component = rng.random::<f64>();
                let u = rng.random::<f64>();
                if component < 0.75 {
                    1.0 - u.powf(0.1)
                } else {
                    u
                }
            }
        }
    }
}

/// Support of the forecast distribution: the full interval, or the k
/// midpoints (2j-1)/(2k) with probabilities proportional to the density.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Support {
    Continuous,
    /// Number of support points; at least 2.
    Discrete(u32),
}

/// A forecast-generating scenario of the simulation grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Scenario {
    pub distribution: ForecastDistribution,
    pub support: Support,
}

impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.distribution {
            ForecastDistribution::Uniform => "uniform",
            ForecastDistribution::Linear => "linear",
            ForecastDistribution::BetaMixture => "beta-mixture",
        };
        match self.support {
            Support::Continuous => write!(f, "{name}-continuous"),
            Support::Discrete(k) => write!(f, "{name}-discrete{k}"),
        }
    }
}

impl FromStr for Scenario {
    type Err = String;

    /// Parses names like `uniform-continuous`, `linear-discrete10`,
    /// `beta-mixture-continuous`.
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let (dist, support) =
            s.rsplit_once('-').ok_or_else(|| format!("malformed scenario name: {s}"))?;
        let distribution = match dist {
            "uniform" => ForecastDistribution::Uniform,
            "linear" => ForecastDistribution::Linear,
            "beta-mixture" => ForecastDistribution::BetaMixture,
            _ => return Err(format!("unknown forecast distribution: {dist}")),
        };
        let support = if support == "continuous" {
            Support::Continuous
        } else if let Some(k) = support.strip_prefix("discrete") {
            let k: u32 = k.parse().map_err(|_| format!("bad support size: {support}"))?;
            if k < 2 {
                return Err(format!("discrete support needs at least 2 points, got {k}"));
            }
            Support::Discrete(k)
        } else {
            return Err(format!("unknown support: {support}"));
        };
        Ok(Scenario { distribution, support })
    }
}

/// A concrete sampling request: scenario, sample size, master seed.
///
/// Forecasts and outcomes for one seed come from separate RNG streams, so
/// they are mutually independent and individually reproducible.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScenarioSpec {
    pub scenario: Scenario,
    pub n: usize,
    pub seed: u64,
}

const FORECAST_STREAM: u64 = 0;
const OUTCOME_STREAM: u64 = 1;
const BAND_SEED_SALT: u64 = 0x62616e64;

fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derives an independent child seed from a master seed and a salt such as
/// a replicate index.
fn derive_seed(master: u64, salt: u64) -> u64 {
    splitmix64(master ^ splitmix64(salt))
}

/// Draws forecast values for the scenario.
pub fn sample_forecasts(spec: &ScenarioSpec) -> Vec<f64> {
    let mut rng = stream_rng(spec.seed, FORECAST_STREAM);
    match spec.scenario.support {
        Support::Continuous => {
            (0..spec.n).map(|_| spec.scenario.distribution.sample(&mut rng)).collect()
        }
        Support::Discrete(k) => {
            debug_assert!(k >= 2);
            let values: Vec<f64> =
                (1..=k).map(|j| (2.0 * j as f64 - 1.0) / (2.0 * k as f64)).collect();
            let weights: Vec<f64> =
                values.iter().map(|&x| spec.scenario.distribution.density(x)).collect();
            let total: f64 = weights.iter().sum();
            let mut cumulative: Vec<f64> = weights
                .iter()
                .scan(0.0, |acc, w| {
                    *acc += w / total;
                    Some(*acc)
                })
                .collect();
            *cumulative.last_mut().expect("k >= 2") = 1.0;
            (0..spec.n)
                .map(|_| {
                    let u = rng.random::<f64>();
                    let idx = cumulative.partition_point(|&c| c < u).min(values.len() - 1);
                    values[idx]
                })
                .collect()
        }
    }
}

/// Draws outcomes under the calibration hypothesis, y_i ~ Bernoulli(x_i).
pub fn sample_outcomes_calibrated(forecasts: &[f64], seed: u64) -> Vec<u8> {
    let mut rng = stream_rng(seed, OUTCOME_STREAM);
    forecasts.iter().map(|&x| u8::from(rng.random::<f64>() < x)).collect()
}

/// A classical binning-and-counting CEP estimator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BinningEstimator {
    /// m equal-width bins over [0, 1].
    FixedEquidistant { bins: u32 },
    /// floor(n^exponent) bins bracketed by empirical quantiles.
    QuantileBins { exponent: f64 },
}

pub(crate) fn quantile_bin_count(n: usize, exponent: f64) -> usize {
    // the tolerance absorbs float error in powers like 1000^(1/3)
    (((n as f64).powf(exponent) + 1e-9).floor() as usize).max(1)
}

/// Estimates the CEP at each forecast position as the event frequency of
/// the forecast's bin. Bins are half-open with the last closed, so every
/// populated bin has a defined frequency.
pub fn binning_counting_estimate(dataset: &ForecastDataset, spec: &BinningEstimator) -> Vec<f64> {
    let forecasts = dataset.forecasts();
    let n = forecasts.len();
    let bin_of: Box<dyn Fn(f64) -> usize> = match *spec {
        BinningEstimator::FixedEquidistant { bins } => {
            let m = bins.max(1) as usize;
            Box::new(move |x: f64| ((x * m as f64) as usize).min(m - 1))
        }
        BinningEstimator::QuantileBins { exponent } => {
            let m = quantile_bin_count(n, exponent);
            let mut sorted = forecasts.to_vec();
            sorted.sort_unstable_by(f64::total_cmp);
            let inner: Vec<f64> =
                (1..m).map(|j| quantile_type7(&sorted, j as f64 / m as f64)).collect();
            Box::new(move |x: f64| inner.partition_point(|&b| b <= x))
        }
    };

    let indices: Vec<usize> = forecasts.iter().map(|&x| bin_of(x)).collect();
    let bins = indices.iter().max().map_or(1, |&m| m + 1);
    let mut counts = vec![0u64; bins];
    let mut events = vec![0u64; bins];
    for (i, &bin) in indices.iter().enumerate() {
        counts[bin] += 1;
        events[bin] += u64::from(dataset.outcomes()[i]);
    }
    indices.iter().map(|&bin| events[bin] as f64 / counts[bin] as f64).collect()
}

/// A CEP estimator entering the comparison studies.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CepEstimator {
    /// PAV recalibration, the CORP estimate.
    Corp,
    Binning(BinningEstimator),
}

impl fmt::Display for CepEstimator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Corp => write!(f, "corp"),
            Self::Binning(BinningEstimator::FixedEquidistant { bins }) => {
                write!(f, "bins-{bins}")
            }
            Self::Binning(BinningEstimator::QuantileBins { exponent }) => {
                write!(f, "quantile-{exponent}")
            }
        }
    }
}

/// Evaluates the estimator at every forecast position of the dataset.
pub fn estimate_cep(dataset: &ForecastDataset, estimator: &CepEstimator) -> Vec<f64> {
    match estimator {
        CepEstimator::Corp => {
            let summary = aggregate(dataset);
            let fit = pav_fit(&summary);
            recalibrate_with(&summary, &fit)
        }
        CepEstimator::Binning(spec) => binning_counting_estimate(dataset, spec),
    }
}

/// One cell of a study grid.
#[derive(Debug, Clone, PartialEq)]
pub struct StudyRow {
    pub scenario: String,
    pub estimator: String,
    pub n: usize,
    /// Mean MSE or mean coverage across replicates.
    pub statistic: f64,
}

/// Study output: rows ordered by (scenario, n, estimator) as given.
#[derive(Debug, Clone, PartialEq)]
pub struct StudyResult {
    pub rows: Vec<StudyRow>,
    pub replicates: u32,
    pub seed: u64,
}

fn replicate_dataset(scenario: Scenario, n: usize, rep_seed: u64) -> ForecastDataset {
    let spec = ScenarioSpec { scenario, n, seed: rep_seed };
    let forecasts = sample_forecasts(&spec);
    let outcomes = sample_outcomes_calibrated(&forecasts, rep_seed);
    ForecastDataset::new(forecasts, outcomes).expect("sampler output is valid")
}

/// Mean squared error of each estimator against the diagonal (the true CEP
/// under calibration), averaged over replicates. All estimators see the
/// same replicate data, so comparisons are paired.
pub fn mse_study(
    scenarios: &[Scenario],
    estimators: &[CepEstimator],
    sample_sizes: &[usize],
    replicates: u32,
    seed: u64,
) -> StudyResult {
    let mut rows = Vec::new();
    let mut cell = 0u64;
    for &scenario in scenarios {
        for &n in sample_sizes {
            let cell_seed = derive_seed(seed, cell);
            cell += 1;
            let per_replicate: Vec<Vec<f64>> = (0..replicates)
                .into_par_iter()
                .map(|rep| {
                    let dataset =
                        replicate_dataset(scenario, n, derive_seed(cell_seed, u64::from(rep)));
                    estimators
                        .iter()
                        .map(|estimator| {
                            let estimate = estimate_cep(&dataset, estimator);
                            estimate
                                .iter()
                                .zip(dataset.forecasts())
                                .map(|(&e, &x)| (e - x) * (e - x))
                                .sum::<f64>()
                                / n as f64
                        })
                        .collect()
                })
                .collect();
            for (e, estimator) in estimators.iter().enumerate() {
                let total: f64 = per_replicate.iter().map(|row| row[e]).sum();
                rows.push(StudyRow {
                    scenario: scenario.to_string(),
                    estimator: estimator.to_string(),
                    n,
                    statistic: total / f64::from(replicates),
                });
            }
        }
    }
    StudyResult { rows, replicates, seed }
}

fn band_label(spec: &BandSpec) -> String {
    let kind = match spec.kind {
        BandKind::Consistency => "consistency",
        BandKind::Confidence => "confidence",
    };
    let method = match spec.method {
        BandMethod::Auto => "auto",
        BandMethod::Resampling => "resampling",
        BandMethod::AsymptoticDiscrete => "asymptotic-discrete",
        BandMethod::AsymptoticContinuous => "asymptotic-continuous",
    };
    format!("{kind}-{method}-{}", spec.level)
}

/// Empirical coverage of uncertainty bands on calibrated data, averaged
/// equally over the unique forecast values and then over replicates.
///
/// Consistency bands are checked against the estimated curve (they describe
/// where the curve may fall if the forecasts are calibrated); confidence
/// bands are checked against the true CEP, which is the diagonal here.
pub fn coverage_study(
    scenarios: &[Scenario],
    band: &BandSpec,
    sample_sizes: &[usize],
    replicates: u32,
    seed: u64,
) -> Result<StudyResult> {
    let mut rows = Vec::new();
    let mut cell = 0u64;
    for &scenario in scenarios {
        for &n in sample_sizes {
            let cell_seed = derive_seed(seed, cell);
            cell += 1;
            let coverages: Vec<f64> = (0..replicates)
                .into_par_iter()
                .map(|rep| {
                    let rep_seed = derive_seed(cell_seed, u64::from(rep));
                    let dataset = replicate_dataset(scenario, n, rep_seed);
                    let summary = aggregate(&dataset);
                    let fit = pav_fit(&summary);
                    let band_spec =
                        BandSpec { seed: derive_seed(rep_seed, BAND_SEED_SALT), ..*band };
                    let band = compute_band(&dataset, &summary, &fit, &band_spec)?;
                    Ok(match band.kind {
                        BandKind::Consistency => band.fraction_covered(fit.fitted_unique()),
                        BandKind::Confidence => band.fraction_covered(summary.values()),
                    })
                })
                .collect::<Result<_>>()?;
            let total: f64 = coverages.iter().sum();
            rows.push(StudyRow {
                scenario: scenario.to_string(),
                estimator: band_label(band),
                n,
                statistic: total / f64::from(replicates),
            });
        }
    }
    Ok(StudyResult { rows, replicates, seed })
}
