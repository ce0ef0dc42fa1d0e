//! Validated forecast-outcome data and its reduction to unique forecast values.

use crate::error::{Error, Result};

/// A validated sample of probability forecasts paired with binary outcomes.
///
/// Construction guarantees: at least one pair, every forecast is a finite
/// number in `[0, 1]`, every outcome is 0 or 1. Original order is preserved.
#[derive(Debug, Clone, PartialEq)]
pub struct ForecastDataset {
    forecasts: Vec<f64>,
    outcomes: Vec<u8>,
}

impl ForecastDataset {
    pub fn new(forecasts: Vec<f64>, outcomes: Vec<u8>) -> Result<Self> {
        if forecasts.len() != outcomes.len() {
            return Err(Error::LengthMismatch {
                forecasts: forecasts.len(),
                outcomes: outcomes.len(),
            });
        }
        if forecasts.is_empty() {
            return Err(Error::EmptyInput);
        }
        for (index, &value) in forecasts.iter().enumerate() {
            if !(0.0..=1.0).contains(&value) {
                return Err(Error::ForecastOutOfRange { index, value });
            }
        }
        for (index, &value) in outcomes.iter().enumerate() {
            if value > 1 {
                return Err(Error::InvalidOutcome { index, value });
            }
        }
        Ok(Self { forecasts, outcomes })
    }

    pub fn forecasts(&self) -> &[f64] {
        &self.forecasts
    }

    pub fn outcomes(&self) -> &[u8] {
        &self.outcomes
    }

    pub fn len(&self) -> usize {
        self.forecasts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forecasts.is_empty()
    }

    /// Number of events, i.e. outcomes equal to 1.
    pub fn event_count(&self) -> u64 {
        self.outcomes.iter().map(|&y| u64::from(y)).sum()
    }

    /// Event frequency of the whole sample, the climatological reference.
    pub fn event_mean(&self) -> f64 {
        self.event_count() as f64 / self.len() as f64
    }
}

/// Counts and event counts grouped by unique forecast value.
///
/// `values` is strictly increasing; `counts[j]` and `events[j]` refer to
/// `values[j]`; `events[j] <= counts[j]` and counts sum to the sample size.
#[derive(Debug, Clone, PartialEq)]
pub struct UniqueValueSummary {
    values: Vec<f64>,
    counts: Vec<u64>,
    events: Vec<u64>,
    unique_indices: Vec<usize>,
}

impl UniqueValueSummary {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn events(&self) -> &[u64] {
        &self.events
    }

    /// Number of unique forecast values.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Sample size.
    pub fn n(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// For each observation of the source dataset, in original order, the
    /// index into `values` of its forecast.
    pub fn unique_indices(&self) -> &[usize] {
        &self.unique_indices
    }
}

/// Groups a dataset by unique forecast value.
///
/// Values are compared by exact floating-point equality; no tolerance is
/// applied, so nearby but distinct values stay separate.
pub fn aggregate(dataset: &ForecastDataset) -> UniqueValueSummary {
    let forecasts = dataset.forecasts();
    let outcomes = dataset.outcomes();
    let mut order: Vec<usize> = (0..dataset.len()).collect();
    order.sort_by(|&a, &b| forecasts[a].total_cmp(&forecasts[b]));

    let mut values: Vec<f64> = Vec::new();
    let mut counts: Vec<u64> = Vec::new();
    let mut events: Vec<u64> = Vec::new();
    let mut unique_indices = vec![0usize; dataset.len()];
    for &i in &order {
        let x = forecasts[i];
        if values.last() != Some(&x) {
            values.push(x);
            counts.push(0);
            events.push(0);
        }
        let j = values.len() - 1;
        counts[j] += 1;
        events[j] += u64::from(outcomes[i]);
        unique_indices[i] = j;
    }
    UniqueValueSummary { values, counts, events, unique_indices }
}
