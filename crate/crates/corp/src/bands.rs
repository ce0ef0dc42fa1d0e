//! Consistency and confidence bands for the calibrated curve.

mod chernoff_table;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use statrs::distribution::{ContinuousCDF, Normal};

use crate::dataset::{ForecastDataset, UniqueValueSummary};
use crate::diagram::{fd_histogram, HistogramBin};
use crate::error::{Error, Result};
use crate::pav::{fill_fitted, pav_blocks, IsotonicFit};
use crate::stats::quantile_type7;

/// What the band quantifies.
///
/// Consistency bands show the curve variation expected if the original
/// forecasts were calibrated; confidence bands quantify uncertainty about
/// the true conditional event probability around the estimated curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BandKind {
    Consistency,
    Confidence,
}

/// Band construction method; `Auto` applies the default selection logic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BandMethod {
    Auto,
    Resampling,
    AsymptoticDiscrete,
    AsymptoticContinuous,
}

/// The method actually used after resolving `Auto`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResolvedBandMethod {
    Resampling,
    AsymptoticDiscrete,
    AsymptoticContinuous,
}

/// Band request: kind, coverage level, method, and resampling controls.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BandSpec {
    pub kind: BandKind,
    /// Nominal coverage in (0, 1).
    pub level: f64,
    pub method: BandMethod,
    /// Resampling replicates; at least 2 when resampling is used.
    pub replicates: u32,
    pub seed: u64,
}

impl Default for BandSpec {
    fn default() -> Self {
        Self {
            kind: BandKind::Consistency,
            level: 0.90,
            method: BandMethod::Auto,
            replicates: 1000,
            seed: 0,
        }
    }
}

/// A pointwise band over the unique forecast values.
#[derive(Debug, Clone, PartialEq)]
pub struct UncertaintyBand {
    /// Unique forecast values, ascending.
    pub positions: Vec<f64>,
    /// Lower limits, aligned to positions; 0 <= lower <= upper <= 1.
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
    pub method_used: ResolvedBandMethod,
    pub kind: BandKind,
    pub level: f64,
    /// Positions whose design-density estimate was zero, where the band
    /// fell back to the nearest populated histogram bin.
    pub flagged_positions: Vec<usize>,
}

impl UncertaintyBand {
    /// Fraction of positions where `targets` lies inside the band.
    /// `targets` must align with `positions`.
    pub fn fraction_covered(&self, targets: &[f64]) -> f64 {
        debug_assert_eq!(targets.len(), self.positions.len());
        let hits = targets
            .iter()
            .zip(self.lower.iter().zip(&self.upper))
            .filter(|&(&t, (&lo, &hi))| lo <= t && t <= hi)
            .count();
        hits as f64 / targets.len() as f64
    }
}

fn validate_level(level: f64) -> Result<()> {
    if !(level > 0.0 && level < 1.0) {
        return Err(Error::InvalidLevel { value: level });
    }
    Ok(())
}

/// Resolves the method for a dataset with `n` observations and `k` unique
/// forecast values. Consistency defaults: resampling for small or heavily
/// tied samples, the normal approximation when every value has enough
/// repetitions (n >= 8 k^2), cube-root asymptotics otherwise. Confidence
/// defaults to resampling throughout.
pub fn select_method(n: usize, k: usize, spec: &BandSpec) -> ResolvedBandMethod {
    match spec.method {
        BandMethod::Resampling => ResolvedBandMethod::Resampling,
        BandMethod::AsymptoticDiscrete => ResolvedBandMethod::AsymptoticDiscrete,
        BandMethod::AsymptoticContinuous => ResolvedBandMethod::AsymptoticContinuous,
        BandMethod::Auto => match spec.kind {
            BandKind::Confidence => ResolvedBandMethod::Resampling,
            BandKind::Consistency => {
                if n <= 1000 || (n <= 5000 && n <= 50 * k) {
                    ResolvedBandMethod::Resampling
                } else if n >= 8 * k * k {
                    ResolvedBandMethod::AsymptoticDiscrete
                } else {
                    ResolvedBandMethod::AsymptoticContinuous
                }
            }
        },
    }
}

/// Computes the band requested by `spec`, resolving `Auto` first.
pub fn compute_band(
    dataset: &ForecastDataset,
    summary: &UniqueValueSummary,
    fit: &IsotonicFit,
    spec: &BandSpec,
) -> Result<UncertaintyBand> {
    match select_method(dataset.len(), summary.len(), spec) {
        ResolvedBandMethod::Resampling => resampling_band(dataset, summary, fit, spec),
        ResolvedBandMethod::AsymptoticDiscrete => discrete_asymptotic_band(summary, fit, spec),
        ResolvedBandMethod::AsymptoticContinuous => {
            continuous_asymptotic_band(dataset, summary, fit, spec)
        }
    }
}

/// Pointwise empirical-quantile band across resampled PAV curves.
///
/// Each replicate redraws every outcome as Bernoulli(x_i) under the
/// calibration hypothesis (consistency) or Bernoulli(x̂_i) around the
/// estimated curve (confidence), then refits. Replicates use independent
/// RNG streams of one seeded generator, so results are reproducible and
/// independent of scheduling.
pub fn resampling_band(
    dataset: &ForecastDataset,
    summary: &UniqueValueSummary,
    fit: &IsotonicFit,
    spec: &BandSpec,
) -> Result<UncertaintyBand> {
    validate_level(spec.level)?;
    if spec.replicates < 2 {
        return Err(Error::TooFewReplicates(spec.replicates));
    }
    let k = summary.len();
    let counts = summary.counts();
    let indices = summary.unique_indices();
    let probs: Vec<f64> = match spec.kind {
        BandKind::Consistency => dataset.forecasts().to_vec(),
        BandKind::Confidence => indices.iter().map(|&j| fit.fitted_unique()[j]).collect(),
    };

    let curves: Vec<Vec<f64>> = (0..spec.replicates)
        .into_par_iter()
        .map(|replicate| {
            let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
            rng.set_stream(u64::from(replicate));
            let mut events = vec![0u64; k];
            for (i, &p) in probs.iter().enumerate() {
                if rng.random::<f64>() < p {
                    events[indices[i]] += 1;
                }
            }
            let blocks = pav_blocks(counts, &events);
            let mut fitted = vec![0.0; k];
            fill_fitted(&blocks, &mut fitted);
            fitted
        })
        .collect();

    let lo_p = (1.0 - spec.level) / 2.0;
    let hi_p = 1.0 - lo_p;
    let bounds: Vec<(f64, f64)> = (0..k)
        .into_par_iter()
        .map(|j| {
            let mut column: Vec<f64> = curves.iter().map(|curve| curve[j]).collect();
            column.sort_unstable_by(f64::total_cmp);
            (
                quantile_type7(&column, lo_p).clamp(0.0, 1.0),
                quantile_type7(&column, hi_p).clamp(0.0, 1.0),
            )
        })
        .collect();

    Ok(UncertaintyBand {
        positions: summary.values().to_vec(),
        lower: bounds.iter().map(|b| b.0).collect(),
        upper: bounds.iter().map(|b| b.1).collect(),
        method_used: ResolvedBandMethod::Resampling,
        kind: spec.kind,
        level: spec.level,
        flagged_positions: Vec::new(),
    })
}

fn normal_quantile(p: f64) -> f64 {
    Normal::new(0.0, 1.0).expect("standard normal").inverse_cdf(p)
}

/// Per-value normal approximation: center ± Φ⁻¹(1-(1-level)/2) √(v(1-v)/n_j),
/// clipped to [0, 1]. Consistency centers on the forecast value, confidence
/// on the fitted value, each with its own plug-in variance.
pub fn discrete_asymptotic_band(
    summary: &UniqueValueSummary,
    fit: &IsotonicFit,
    spec: &BandSpec,
) -> Result<UncertaintyBand> {
    validate_level(spec.level)?;
    let z = normal_quantile(1.0 - (1.0 - spec.level) / 2.0);
    let centers: &[f64] = match spec.kind {
        BandKind::Consistency => summary.values(),
        BandKind::Confidence => fit.fitted_unique(),
    };
    let mut lower = Vec::with_capacity(summary.len());
    let mut upper = Vec::with_capacity(summary.len());
    for (&center, &count) in centers.iter().zip(summary.counts()) {
        let half = z * (center * (1.0 - center) / count as f64).sqrt();
        lower.push((center - half).clamp(0.0, 1.0));
        upper.push((center + half).clamp(0.0, 1.0));
    }
    Ok(UncertaintyBand {
        positions: summary.values().to_vec(),
        lower,
        upper,
        method_used: ResolvedBandMethod::AsymptoticDiscrete,
        kind: spec.kind,
        level: spec.level,
        flagged_positions: Vec::new(),
    })
}

fn continuous_halfwidth(n: f64, m_prime: f64, sigma2: f64, density: f64, c: f64) -> f64 {
    n.powf(-1.0 / 3.0) * (4.0 * m_prime * sigma2 / density).cbrt() * c
}

/// Design densities at the given positions from a Freedman-Diaconis
/// histogram. A position falling in an empty bin borrows the nearest
/// populated bin's density and is reported in the second return value.
pub(crate) fn densities_at(
    hist: &[HistogramBin],
    positions: &[f64],
    n: usize,
) -> (Vec<f64>, Vec<usize>) {
    let density_of = |bin: &HistogramBin| bin.count as f64 / (n as f64 * (bin.upper - bin.lower));
    let mut densities = Vec::with_capacity(positions.len());
    let mut flagged = Vec::new();
    for (j, &x) in positions.iter().enumerate() {
        let idx = hist.partition_point(|bin| bin.upper <= x).min(hist.len() - 1);
        if hist[idx].count > 0 {
            densities.push(density_of(&hist[idx]));
            continue;
        }
        let mut found = None;
        for step in 1..hist.len() {
            if idx >= step && hist[idx - step].count > 0 {
                found = Some(idx - step);
                break;
            }
            if idx + step < hist.len() && hist[idx + step].count > 0 {
                found = Some(idx + step);
                break;
            }
        }
        let src = found.expect("histogram of a nonempty sample has a populated bin");
        densities.push(density_of(&hist[src]));
        flagged.push(j);
    }
    (densities, flagged)
}

/// Cube-root asymptotic band: half-width n^(-1/3) (4 m'(x) σ²(x) / g(x))^(1/3)
/// times the two-sided Chernoff quantile, clipped to [0, 1]. The design
/// density g comes from the Freedman-Diaconis histogram.
///
/// Only consistency bands are available here (m' ≡ 1 and σ²(x) = x(1-x)
/// under the calibration hypothesis); confidence bands need a caller-supplied
/// CEP derivative, see [`continuous_asymptotic_confidence_band`].
pub fn continuous_asymptotic_band(
    dataset: &ForecastDataset,
    summary: &UniqueValueSummary,
    fit: &IsotonicFit,
    spec: &BandSpec,
) -> Result<UncertaintyBand> {
    validate_level(spec.level)?;
    if spec.kind == BandKind::Confidence {
        return Err(Error::MissingCepDerivative);
    }
    let _ = fit;
    continuous_band_impl(dataset, summary, spec.kind, spec.level, |_, z| Ok((z, 1.0)))
}

/// Confidence variant of the cube-root asymptotic band. `cep_derivative`
/// must return the (positive) slope estimate of the true CEP at a forecast
/// value; the band centers on the fitted curve with plug-in variance.
pub fn continuous_asymptotic_confidence_band(
    dataset: &ForecastDataset,
    summary: &UniqueValueSummary,
    fit: &IsotonicFit,
    level: f64,
    cep_derivative: &dyn Fn(f64) -> f64,
) -> Result<UncertaintyBand> {
    validate_level(level)?;
    continuous_band_impl(dataset, summary, BandKind::Confidence, level, |j, z| {
        let slope = cep_derivative(z);
        if !(slope > 0.0 && slope.is_finite()) {
            return Err(Error::InvalidCepDerivative { at: z, value: slope });
        }
        Ok((fit.fitted_unique()[j], slope))
    })
}

fn continuous_band_impl(
    dataset: &ForecastDataset,
    summary: &UniqueValueSummary,
    kind: BandKind,
    level: f64,
    center_and_slope: impl Fn(usize, f64) -> Result<(f64, f64)>,
) -> Result<UncertaintyBand> {
    let n = dataset.len();
    if n < 30 {
        return Err(Error::TooFewObservations(n));
    }
    let c = chernoff_quantile(1.0 - (1.0 - level) / 2.0)?;
    let hist = fd_histogram(dataset.forecasts());
    let (densities, flagged_positions) = densities_at(&hist, summary.values(), n);
    let mut lower = Vec::with_capacity(summary.len());
    let mut upper = Vec::with_capacity(summary.len());
    for (j, &z) in summary.values().iter().enumerate() {
        let (center, m_prime) = center_and_slope(j, z)?;
        let sigma2 = center * (1.0 - center);
        let half = continuous_halfwidth(n as f64, m_prime, sigma2, densities[j], c);
        lower.push((center - half).clamp(0.0, 1.0));
        upper.push((center + half).clamp(0.0, 1.0));
    }
    Ok(UncertaintyBand {
        positions: summary.values().to_vec(),
        lower,
        upper,
        method_used: ResolvedBandMethod::AsymptoticContinuous,
        kind,
        level,
        flagged_positions,
    })
}

/// Quantile of Chernoff's distribution, the law of the argmax of
/// W(t) - t² over two-sided Brownian motion W, by linear interpolation in
/// an embedded table. The distribution is symmetric about zero.
pub fn chernoff_quantile(p: f64) -> Result<f64> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::QuantileOutOfRange(p));
    }
    if p < 0.5 {
        return Ok(-chernoff_quantile(1.0 - p)?);
    }
    let table = &chernoff_table::TABLE;
    if p > table[table.len() - 1].0 {
        return Err(Error::QuantileOutOfRange(p));
    }
    let idx = table.partition_point(|&(tp, _)| tp < p);
    if idx == 0 {
        return Ok(table[0].1);
    }
    let (p0, q0) = table[idx - 1];
    let (p1, q1) = table[idx];
    let t = (p - p0) / (p1 - p0);
    Ok(q0 + t * (q1 - q0))
}
