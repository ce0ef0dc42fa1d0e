//! Reliability diagram geometry: calibrated curve, bins, and the marginal
//! forecast histogram.

use crate::bands::{compute_band, BandSpec, UncertaintyBand};
use crate::dataset::{aggregate, ForecastDataset};
use crate::error::Result;
use crate::pav::{pav_fit, recalibrate_with};
use crate::scoring::{decomposition_with, ScoreDecomposition, ScoringRule};
use crate::stats::iqr_type7;

/// How the marginal forecast distribution is displayed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagramMode {
    /// Few well-separated forecast values: per-value counts.
    Discrete,
    /// Densely spread values: Freedman-Diaconis histogram.
    Continuous,
}

/// A vertex of the calibrated curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiagramPoint {
    /// Unique forecast value.
    pub forecast: f64,
    /// PAV-calibrated probability at that value.
    pub calibrated: f64,
}

/// One horizontal segment of the calibrated curve, i.e. one PAV block.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiagramBin {
    /// Smallest forecast value in the block.
    pub lower: f64,
    /// Largest forecast value in the block.
    pub upper: f64,
    /// Shared calibrated probability.
    pub calibrated: f64,
    /// Number of observations pooled into the block.
    pub count: u64,
    /// Number of events among them.
    pub events: u64,
}

/// One bar of the marginal display.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HistogramBin {
    pub lower: f64,
    pub upper: f64,
    pub count: u64,
}

/// Everything needed to draw a CORP reliability diagram.
#[derive(Debug, Clone, PartialEq)]
pub struct ReliabilityDiagram {
    pub mode: DiagramMode,
    /// Calibrated curve vertices, ordered by forecast value.
    pub points: Vec<DiagramPoint>,
    /// PAV blocks with strictly increasing calibrated values.
    pub bins: Vec<DiagramBin>,
    /// Marginal forecast distribution; counts sum to n.
    pub histogram: Vec<HistogramBin>,
    /// Score decomposition for the requested rule.
    pub annotation: ScoreDecomposition,
    pub band: Option<UncertaintyBand>,
    /// Sample size.
    pub n: usize,
}

/// Options for [`build_diagram`].
#[derive(Debug, Clone, Default)]
pub struct DiagramOptions {
    /// Rule for the annotation; `None` means Brier.
    pub rule: Option<ScoringRule>,
    /// Compute an uncertainty band alongside the curve.
    pub band: Option<BandSpec>,
    /// Force the marginal display mode instead of detecting it.
    pub mode_override: Option<DiagramMode>,
}

/// Discrete iff the smallest gap between distinct forecast values is at
/// least 0.01; a single distinct value counts as Discrete.
pub fn detect_mode(forecasts: &[f64]) -> DiagramMode {
    let mut sorted = forecasts.to_vec();
    sorted.sort_unstable_by(f64::total_cmp);
    sorted.dedup();
    let min_gap = sorted.windows(2).map(|w| w[1] - w[0]).fold(f64::INFINITY, f64::min);
    if min_gap >= 0.01 {
        DiagramMode::Discrete
    } else {
        DiagramMode::Continuous
    }
}

/// Freedman-Diaconis histogram of forecast values: bin width 2 IQR n^(-1/3),
/// bins anchored at 0 and clipped to [0, 1], half-open except the last.
/// Zero IQR (or width >= 1) degenerates to a single bin over [0, 1].
pub fn fd_histogram(forecasts: &[f64]) -> Vec<HistogramBin> {
    let n = forecasts.len();
    let mut sorted = forecasts.to_vec();
    sorted.sort_unstable_by(f64::total_cmp);
    let iqr = iqr_type7(&sorted);
    let width = 2.0 * iqr * (n as f64).powf(-1.0 / 3.0);
    if !width.is_finite() || width <= 0.0 || width >= 1.0 {
        return vec![HistogramBin { lower: 0.0, upper: 1.0, count: n as u64 }];
    }
    let m = (1.0 / width).ceil() as usize;
    let mut counts = vec![0u64; m];
    for &x in forecasts {
        let j = ((x / width) as usize).min(m - 1);
        counts[j] += 1;
    }
    (0..m)
        .map(|j| HistogramBin {
            lower: j as f64 * width,
            upper: if j + 1 == m { 1.0 } else { (j + 1) as f64 * width },
            count: counts[j],
        })
        .collect()
}

fn discrete_histogram(summary_values: &[f64], counts: &[u64]) -> Vec<HistogramBin> {
    summary_values
        .iter()
        .zip(counts)
        .map(|(&v, &c)| HistogramBin { lower: v, upper: v, count: c })
        .collect()
}

/// Builds the full diagram: PAV curve, bins, marginal histogram, score
/// annotation, and optionally an uncertainty band.
pub fn build_diagram(
    dataset: &ForecastDataset,
    options: &DiagramOptions,
) -> Result<ReliabilityDiagram> {
    let summary = aggregate(dataset);
    let fit = pav_fit(&summary);

    let points: Vec<DiagramPoint> = summary
        .values()
        .iter()
        .zip(fit.fitted_unique())
        .map(|(&forecast, &calibrated)| DiagramPoint { forecast, calibrated })
        .collect();

    let bins: Vec<DiagramBin> = fit
        .blocks()
        .iter()
        .map(|b| DiagramBin {
            lower: summary.values()[b.first],
            upper: summary.values()[b.last],
            calibrated: b.value(),
            count: b.weight,
            events: b.events,
        })
        .collect();

    let mode = options.mode_override.unwrap_or_else(|| detect_mode(dataset.forecasts()));
    let histogram = match mode {
        DiagramMode::Discrete => discrete_histogram(summary.values(), summary.counts()),
        DiagramMode::Continuous => fd_histogram(dataset.forecasts()),
    };

    let rule = options.rule.unwrap_or(ScoringRule::Brier);
    let calibrated = recalibrate_with(&summary, &fit);
    let annotation = decomposition_with(rule, dataset, &calibrated);

    let band = match &options.band {
        Some(spec) => Some(compute_band(dataset, &summary, &fit, spec)?),
        None => None,
    };

    Ok(ReliabilityDiagram { mode, points, bins, histogram, annotation, band, n: dataset.len() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn dataset(forecasts: &[f64], outcomes: &[u8]) -> ForecastDataset {
        ForecastDataset::new(forecasts.to_vec(), outcomes.to_vec()).unwrap()
    }

    #[test]
    fn ensemble_grid_is_discrete() {
        let forecasts: Vec<f64> = (0..=52).map(|i| i as f64 / 52.0).collect();
        assert_eq!(detect_mode(&forecasts), DiagramMode::Discrete);
    }

    #[test]
    fn close_values_are_continuous() {
        assert_eq!(detect_mode(&[0.2, 0.205]), DiagramMode::Continuous);
    }

    #[test]
    fn single_distinct_value_is_discrete() {
        assert_eq!(detect_mode(&[0.7, 0.7, 0.7]), DiagramMode::Discrete);
    }

    #[test]
    fn repeated_values_do_not_produce_zero_gaps() {
        assert_eq!(detect_mode(&[0.1, 0.1, 0.5, 0.5]), DiagramMode::Discrete);
    }

    #[test]
    fn fd_width_from_unit_iqr_example() {
        // equispaced grid on [0,1] has IQR .5, so n = 1024 gives width
        // 1024^(-1/3) ~ .0992 and 11 bins, the last one partial
        let forecasts: Vec<f64> = (0..1024).map(|i| i as f64 / 1023.0).collect();
        assert_relative_eq!(iqr_type7(&forecasts), 0.5, max_relative = 1e-12);
        let hist = fd_histogram(&forecasts);
        assert_eq!(hist.len(), 11);
        let total: u64 = hist.iter().map(|b| b.count).sum();
        assert_eq!(total, 1024);
        assert_eq!(hist[0].lower, 0.0);
        assert_eq!(hist.last().unwrap().upper, 1.0);
        assert_relative_eq!(hist[0].upper, 1024f64.powf(-1.0 / 3.0), max_relative = 1e-12);
        for pair in hist.windows(2) {
            assert_eq!(pair[0].upper, pair[1].lower);
        }
    }

    #[test]
    fn fd_two_bins_at_n_eight() {
        // IQR exactly .5 at n = 8: width 2 * .5 * 8^(-1/3) = .5
        let forecasts = vec![0.0, 0.25, 0.25, 0.4, 0.6, 0.75, 0.75, 1.0];
        assert_relative_eq!(iqr_type7(&forecasts), 0.5, max_relative = 1e-12);
        let hist = fd_histogram(&forecasts);
        assert_eq!(hist.len(), 2);
        assert_eq!(hist[0].lower, 0.0);
        assert_relative_eq!(hist[0].upper, 0.5, max_relative = 1e-12);
        assert_eq!(hist[1].upper, 1.0);
        assert_eq!(hist[0].count, 4);
        assert_eq!(hist[1].count, 4);
    }

    #[test]
    fn fd_zero_iqr_falls_back_to_single_bin() {
        let forecasts = vec![0.3; 50];
        let hist = fd_histogram(&forecasts);
        assert_eq!(hist.len(), 1);
        assert_eq!((hist[0].lower, hist[0].upper), (0.0, 1.0));
        assert_eq!(hist[0].count, 50);
    }

    #[test]
    fn diagram_bins_are_pav_blocks() {
        let ds = dataset(&[0.1, 0.2, 0.3, 0.4], &[0, 1, 0, 1]);
        let d = build_diagram(&ds, &DiagramOptions::default()).unwrap();
        assert_eq!(d.bins.len(), 3);
        assert_eq!((d.bins[0].lower, d.bins[0].upper, d.bins[0].calibrated), (0.1, 0.1, 0.0));
        assert_eq!((d.bins[1].lower, d.bins[1].upper, d.bins[1].calibrated), (0.2, 0.3, 0.5));
        assert_eq!((d.bins[2].lower, d.bins[2].upper, d.bins[2].calibrated), (0.4, 0.4, 1.0));
        assert_eq!(d.mode, DiagramMode::Discrete);
        assert_eq!(d.n, 4);
        for pair in d.points.windows(2) {
            assert!(pair[0].calibrated <= pair[1].calibrated);
        }
    }

    #[test]
    fn degenerate_all_zero_diagram() {
        let ds = dataset(&[0.0, 0.0, 0.0], &[0, 0, 0]);
        let d = build_diagram(&ds, &DiagramOptions::default()).unwrap();
        assert_eq!(d.points, vec![DiagramPoint { forecast: 0.0, calibrated: 0.0 }]);
        assert_eq!(d.bins.len(), 1);
        assert_relative_eq!(d.annotation.mcb, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn mode_override_forces_histogram_kind() {
        let ds = dataset(&[0.1, 0.2, 0.3, 0.4, 0.6, 0.9], &[0, 0, 1, 0, 1, 1]);
        assert_eq!(detect_mode(ds.forecasts()), DiagramMode::Discrete);
        let d = build_diagram(
            &ds,
            &DiagramOptions { mode_override: Some(DiagramMode::Continuous), ..Default::default() },
        )
        .unwrap();
        assert_eq!(d.mode, DiagramMode::Continuous);
        let total: u64 = d.histogram.iter().map(|b| b.count).sum();
        assert_eq!(total, 6);
    }

    #[test]
    fn discrete_histogram_counts_per_value() {
        let ds = dataset(&[0.2, 0.2, 0.6], &[1, 0, 1]);
        let d = build_diagram(&ds, &DiagramOptions::default()).unwrap();
        assert_eq!(
            d.histogram,
            vec![
                HistogramBin { lower: 0.2, upper: 0.2, count: 2 },
                HistogramBin { lower: 0.6, upper: 0.6, count: 1 },
            ]
        );
    }
}
