//! Proper scoring rules, mean scores, and score decompositions.

use rayon::prelude::*;

use crate::dataset::{ForecastDataset, UniqueValueSummary};
use crate::error::{Error, Result};
use crate::pav::recalibrate;

/// A proper scoring rule for probability forecasts of a binary event.
/// Scores are penalties: smaller is better.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ScoringRule {
    /// Squared error (x - y)^2.
    Brier,
    /// -y log x - (1-y) log(1-x); an impossible realization scores +inf.
    Logarithmic,
    /// 1 if x is on the wrong side of 1/2, 1/2 if x = 1/2 exactly, else 0.
    MisclassificationError,
    /// Elementary score S_theta(x, y) = (1{theta < x} - 1{theta < y}) (theta - y).
    /// Averaging over theta recovers the Brier score: 2 int_0^1 S_theta dtheta = (x-y)^2.
    Elementary { threshold: f64 },
}

impl ScoringRule {
    /// Elementary rule with a validated threshold strictly inside (0, 1).
    pub fn elementary(threshold: f64) -> Result<Self> {
        if !(threshold > 0.0 && threshold < 1.0) {
            return Err(Error::InvalidThreshold { value: threshold });
        }
        Ok(Self::Elementary { threshold })
    }

    /// Penalty for forecasting probability `forecast` when `outcome` realized.
    pub fn score(&self, forecast: f64, outcome: u8) -> f64 {
        let y = f64::from(outcome);
        match *self {
            Self::Brier => {
                let d = forecast - y;
                d * d
            }
            Self::Logarithmic => {
                if outcome == 1 {
                    -forecast.ln()
                } else {
                    -(-forecast).ln_1p()
                }
            }
            Self::MisclassificationError => {
                if forecast == 0.5 {
                    0.5
                } else if (forecast < 0.5) == (outcome == 0) {
                    0.0
                } else {
                    1.0
                }
            }
            Self::Elementary { threshold } => {
                let fx = if threshold < forecast { 1.0 } else { 0.0 };
                let fy = if threshold < y { 1.0 } else { 0.0 };
                (fx - fy) * (threshold - y)
            }
        }
    }
}

fn mean_score_of(rule: ScoringRule, forecasts: &[f64], outcomes: &[u8]) -> f64 {
    let sum: f64 = forecasts.iter().zip(outcomes).map(|(&x, &y)| rule.score(x, y)).sum();
    sum / forecasts.len() as f64
}

/// Mean score over the dataset. +inf propagates.
pub fn mean_score(rule: ScoringRule, dataset: &ForecastDataset) -> f64 {
    mean_score_of(rule, dataset.forecasts(), dataset.outcomes())
}

/// The CORP decomposition S̄ = MCB - DSC + UNC of a mean score, with the
/// PAV-recalibrated forecasts as the calibrated benchmark and the marginal
/// event frequency as the reference forecast.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScoreDecomposition {
    pub rule: ScoringRule,
    /// Mean score of the original forecasts.
    pub mean_score: f64,
    /// Miscalibration: mean score minus the recalibrated mean score. >= 0.
    pub mcb: f64,
    /// Discrimination: reference mean score minus the recalibrated one. >= 0.
    pub dsc: f64,
    /// Uncertainty: mean score of the constant reference forecast.
    pub unc: f64,
    /// The reference forecast, i.e. the marginal event frequency.
    pub reference: f64,
    /// Mean score of the recalibrated forecasts.
    pub calibrated_mean: f64,
}

impl ScoreDecomposition {
    /// Mean score of the reference forecast; identical to `unc`.
    pub fn reference_mean(&self) -> f64 {
        self.unc
    }

    /// True when the realized mean score is infinite (possible only for the
    /// logarithmic rule with an impossible realization). `dsc` and `unc`
    /// stay finite in that case.
    pub fn has_infinite_mean_score(&self) -> bool {
        self.mean_score.is_infinite()
    }
}

pub(crate) fn decomposition_with(
    rule: ScoringRule,
    dataset: &ForecastDataset,
    calibrated: &[f64],
) -> ScoreDecomposition {
    let outcomes = dataset.outcomes();
    let reference = dataset.event_mean();
    let mean = mean_score_of(rule, dataset.forecasts(), outcomes);
    let calibrated_mean = mean_score_of(rule, calibrated, outcomes);
    let reference_mean: f64 =
        outcomes.iter().map(|&y| rule.score(reference, y)).sum::<f64>() / outcomes.len() as f64;
    ScoreDecomposition {
        rule,
        mean_score: mean,
        mcb: mean - calibrated_mean,
        dsc: reference_mean - calibrated_mean,
        unc: reference_mean,
        reference,
        calibrated_mean,
    }
}

/// Computes the CORP decomposition of the mean score under `rule`.
pub fn corp_decomposition(rule: ScoringRule, dataset: &ForecastDataset) -> ScoreDecomposition {
    let calibrated = recalibrate(dataset);
    decomposition_with(rule, dataset, &calibrated)
}

/// The classical Murphy decomposition of the Brier score over binned data,
/// REL - RES + UNC with bins taken as the unique forecast values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MurphyBrierDecomposition {
    pub rel: f64,
    pub res: f64,
    pub unc: f64,
}

pub fn murphy_brier_decomposition(summary: &UniqueValueSummary) -> MurphyBrierDecomposition {
    let n = summary.n() as f64;
    let events: u64 = summary.events().iter().sum();
    let y_bar = events as f64 / n;
    let mut rel = 0.0;
    let mut res = 0.0;
    for j in 0..summary.len() {
        let n_j = summary.counts()[j] as f64;
        let freq = summary.events()[j] as f64 / n_j;
        rel += n_j * (freq - summary.values()[j]).powi(2);
        res += n_j * (freq - y_bar).powi(2);
    }
    MurphyBrierDecomposition { rel: rel / n, res: res / n, unc: y_bar * (1.0 - y_bar) }
}

/// One Murphy-diagram point: the elementary-score decomposition at a threshold.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MurphyPoint {
    pub threshold: f64,
    pub mean_score: f64,
    pub mcb: f64,
    pub dsc: f64,
    pub unc: f64,
}

/// Decomposes the elementary mean score at each threshold. The recalibration
/// is shared across thresholds, so the whole diagram costs one PAV fit plus
/// one linear pass per threshold.
pub fn murphy_diagram(dataset: &ForecastDataset, thresholds: &[f64]) -> Result<Vec<MurphyPoint>> {
    for &t in thresholds {
        if !(t > 0.0 && t < 1.0) {
            return Err(Error::InvalidThreshold { value: t });
        }
    }
    let calibrated = recalibrate(dataset);
    Ok(thresholds
        .par_iter()
        .map(|&threshold| {
            let rule = ScoringRule::Elementary { threshold };
            let d = decomposition_with(rule, dataset, &calibrated);
            MurphyPoint { threshold, mean_score: d.mean_score, mcb: d.mcb, dsc: d.dsc, unc: d.unc }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn dataset(forecasts: &[f64], outcomes: &[u8]) -> ForecastDataset {
        ForecastDataset::new(forecasts.to_vec(), outcomes.to_vec()).unwrap()
    }

    #[test]
    fn brier_scores() {
        assert_relative_eq!(ScoringRule::Brier.score(0.6, 0), 0.36, max_relative = 1e-12);
        assert_relative_eq!(ScoringRule::Brier.score(0.2, 1), 0.64, max_relative = 1e-12);
        assert_eq!(ScoringRule::Brier.score(1.0, 1), 0.0);
    }

    #[test]
    fn logarithmic_scores_with_infinite_penalties() {
        let rule = ScoringRule::Logarithmic;
        assert_eq!(rule.score(1.0, 1), 0.0);
        assert_eq!(rule.score(0.0, 0), 0.0);
        assert_eq!(rule.score(0.0, 1), f64::INFINITY);
        assert_eq!(rule.score(1.0, 0), f64::INFINITY);
        assert_relative_eq!(rule.score(0.5, 0), 2.0_f64.ln(), max_relative = 1e-15);
    }

    #[test]
    fn misclassification_scores() {
        let rule = ScoringRule::MisclassificationError;
        assert_eq!(rule.score(0.5, 1), 0.5);
        assert_eq!(rule.score(0.5, 0), 0.5);
        assert_eq!(rule.score(0.7, 0), 1.0);
        assert_eq!(rule.score(0.7, 1), 0.0);
        assert_eq!(rule.score(0.3, 0), 0.0);
        assert_eq!(rule.score(0.3, 1), 1.0);
    }

    #[test]
    fn elementary_scores() {
        let rule = ScoringRule::Elementary { threshold: 0.3 };
        assert_relative_eq!(rule.score(0.6, 0), 0.3, max_relative = 1e-15);
        assert_eq!(rule.score(0.6, 1), 0.0);
        assert_relative_eq!(rule.score(0.2, 1), 0.7, max_relative = 1e-15);
        assert_eq!(rule.score(0.2, 0), 0.0);
    }

    #[test]
    fn elementary_threshold_is_validated() {
        assert!(ScoringRule::elementary(0.5).is_ok());
        assert_eq!(ScoringRule::elementary(0.0), Err(Error::InvalidThreshold { value: 0.0 }));
        assert_eq!(ScoringRule::elementary(1.0), Err(Error::InvalidThreshold { value: 1.0 }));
    }

    #[test]
    fn mean_brier_score() {
        let ds = dataset(&[0.2, 0.4, 0.6], &[1, 0, 1]);
        assert_relative_eq!(mean_score(ScoringRule::Brier, &ds), 0.32, max_relative = 1e-12);
    }

    #[test]
    fn perfect_singleton_scores_zero() {
        let ds = dataset(&[1.0], &[1]);
        assert_eq!(mean_score(ScoringRule::Brier, &ds), 0.0);
        assert_eq!(mean_score(ScoringRule::Logarithmic, &ds), 0.0);
    }

    #[test]
    fn corp_decomposition_matches_hand_arithmetic() {
        let ds = dataset(&[0.2, 0.4, 0.6], &[1, 0, 1]);
        let d = corp_decomposition(ScoringRule::Brier, &ds);
        assert_relative_eq!(d.mean_score, 0.32, max_relative = 1e-12);
        assert_relative_eq!(d.mcb, 23.0 / 150.0, max_relative = 1e-12);
        assert_relative_eq!(d.dsc, 1.0 / 18.0, max_relative = 1e-12);
        assert_relative_eq!(d.unc, 2.0 / 9.0, max_relative = 1e-12);
        assert_relative_eq!(d.reference, 2.0 / 3.0, max_relative = 1e-15);
        assert_relative_eq!(d.calibrated_mean, 1.0 / 6.0, max_relative = 1e-12);
        assert_relative_eq!(d.mean_score, d.mcb - d.dsc + d.unc, max_relative = 1e-12);
        assert_eq!(d.reference_mean(), d.unc);
    }

    #[test]
    fn constant_reference_forecast_has_zero_mcb_and_dsc() {
        let ds = dataset(&[0.5, 0.5, 0.5, 0.5], &[0, 1, 1, 0]);
        for rule in
            [ScoringRule::Brier, ScoringRule::Logarithmic, ScoringRule::MisclassificationError]
        {
            let d = corp_decomposition(rule, &ds);
            assert_relative_eq!(d.mcb, 0.0, epsilon = 1e-15);
            assert_relative_eq!(d.dsc, 0.0, epsilon = 1e-15);
            assert_relative_eq!(d.mean_score, d.unc, max_relative = 1e-15);
        }
    }

    #[test]
    fn misclassification_mcb_counts_side_changes() {
        let ds = dataset(&[0.4, 0.7], &[1, 0]);
        let d = corp_decomposition(ScoringRule::MisclassificationError, &ds);
        assert_relative_eq!(d.mean_score, 1.0, max_relative = 1e-15);
        assert_relative_eq!(d.calibrated_mean, 0.5, max_relative = 1e-15);
        assert_relative_eq!(d.mcb, 0.5, max_relative = 1e-15);
    }

    #[test]
    fn logarithmic_blowup_is_flagged_not_fatal() {
        let ds = dataset(&[0.0, 0.6, 0.8], &[1, 1, 0]);
        let d = corp_decomposition(ScoringRule::Logarithmic, &ds);
        assert!(d.has_infinite_mean_score());
        assert_eq!(d.mean_score, f64::INFINITY);
        assert_eq!(d.mcb, f64::INFINITY);
        assert!(d.dsc.is_finite());
        assert!(d.unc.is_finite());
        assert!(d.calibrated_mean.is_finite());
    }

    #[test]
    fn murphy_brier_decomposition_matches_hand_arithmetic() {
        let ds = dataset(&[0.25, 0.25, 0.75, 0.75], &[0, 0, 1, 1]);
        let summary = crate::dataset::aggregate(&ds);
        let m = murphy_brier_decomposition(&summary);
        assert_relative_eq!(m.rel, 0.0625, max_relative = 1e-12);
        assert_relative_eq!(m.res, 0.25, max_relative = 1e-12);
        assert_relative_eq!(m.unc, 0.25, max_relative = 1e-12);
        let brier = mean_score(ScoringRule::Brier, &ds);
        assert_relative_eq!(m.rel - m.res + m.unc, brier, max_relative = 1e-12);
    }

    #[test]
    fn calibrated_bins_have_zero_rel() {
        let ds = dataset(&[0.5, 0.5, 1.0], &[0, 1, 1]);
        let summary = crate::dataset::aggregate(&ds);
        let m = murphy_brier_decomposition(&summary);
        assert_relative_eq!(m.rel, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn theorem_2_equivalence_on_isotonic_frequencies() {
        // frequencies 0/1, 1/2, 1/1 are nondecreasing
        let ds = dataset(&[0.1, 0.2, 0.2, 0.9], &[0, 1, 0, 1]);
        let summary = crate::dataset::aggregate(&ds);
        let m = murphy_brier_decomposition(&summary);
        let d = corp_decomposition(ScoringRule::Brier, &ds);
        assert_relative_eq!(d.mcb, m.rel, max_relative = 1e-12);
        assert_relative_eq!(d.dsc, m.res, max_relative = 1e-12);
        assert_relative_eq!(d.unc, m.unc, max_relative = 1e-12);
    }

    #[test]
    fn murphy_diagram_point_at_half() {
        let ds = dataset(&[0.5, 0.5], &[0, 1]);
        let points = murphy_diagram(&ds, &[0.5]).unwrap();
        assert_eq!(points.len(), 1);
        assert_relative_eq!(points[0].unc, 0.25, max_relative = 1e-15);
    }

    #[test]
    fn murphy_diagram_zero_mcb_for_perfect_forecasts() {
        let ds = dataset(&[0.0, 1.0, 1.0], &[0, 1, 1]);
        let thresholds: Vec<f64> = (1..10).map(|t| t as f64 / 10.0).collect();
        for p in murphy_diagram(&ds, &thresholds).unwrap() {
            assert_relative_eq!(p.mcb, 0.0, epsilon = 1e-15);
        }
    }

    #[test]
    fn murphy_diagram_rejects_boundary_thresholds() {
        let ds = dataset(&[0.5], &[1]);
        assert!(matches!(murphy_diagram(&ds, &[0.2, 1.0]), Err(Error::InvalidThreshold { .. })));
    }

    #[test]
    fn trapezoid_mixture_of_elementary_scores_recovers_brier() {
        let ds = dataset(&[0.2, 0.4, 0.6], &[1, 0, 1]);
        let t = 999;
        let thresholds: Vec<f64> = (1..=t).map(|i| i as f64 / (t + 1) as f64).collect();
        let points = murphy_diagram(&ds, &thresholds).unwrap();
        // trapezoid over (0,1) with zero-valued endpoints implied by constant
        // extension of the step integrand
        let h = 1.0 / (t + 1) as f64;
        let integral: f64 = points.iter().map(|p| p.mean_score * h).sum();
        assert!((2.0 * integral - 0.32).abs() < 1e-3);
    }
}
