//! Pool-adjacent-violators isotonic regression on binary outcomes.

use crate::dataset::{aggregate, ForecastDataset, UniqueValueSummary};

/// A maximal pooled group of consecutive unique forecast values.
///
/// `first..=last` indexes into the unique values, `weight` is the number of
/// pooled observations and `events` the number of pooled successes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Block {
    pub first: usize,
    pub last: usize,
    pub weight: u64,
    pub events: u64,
}

impl Block {
    /// Pooled event frequency, the fitted value shared by the block.
    pub fn value(&self) -> f64 {
        self.events as f64 / self.weight as f64
    }
}

/// Result of an isotonic fit over unique forecast values.
#[derive(Debug, Clone, PartialEq)]
pub struct IsotonicFit {
    blocks: Vec<Block>,
    fitted_unique: Vec<f64>,
}

impl IsotonicFit {
    /// Pooled blocks with strictly increasing values.
    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// Fitted conditional event probability per unique forecast value.
    pub fn fitted_unique(&self) -> &[f64] {
        &self.fitted_unique
    }
}

/// Left-to-right stack PAV. Pools while the previous block's frequency is at
/// least the incoming one, comparing cross products so pooling decisions are
/// exact; equal frequencies merge, leaving block values strictly increasing.
pub(crate) fn pav_blocks(counts: &[u64], events: &[u64]) -> Vec<Block> {
    let mut blocks: Vec<Block> = Vec::with_capacity(counts.len());
    for j in 0..counts.len() {
        let mut cur = Block { first: j, last: j, weight: counts[j], events: events[j] };
        while let Some(prev) = blocks.last() {
            if u128::from(prev.events) * u128::from(cur.weight)
                >= u128::from(cur.events) * u128::from(prev.weight)
            {
                let prev = blocks.pop().expect("nonempty stack");
                cur.first = prev.first;
                cur.weight += prev.weight;
                cur.events += prev.events;
            } else {
                break;
            }
        }
        blocks.push(cur);
    }
    blocks
}

pub(crate) fn fill_fitted(blocks: &[Block], out: &mut [f64]) {
    for block in blocks {
        let value = block.value();
        for slot in &mut out[block.first..=block.last] {
            *slot = value;
        }
    }
}

/// Fits the nondecreasing least-squares regression of event indicators on
/// forecast values. The fit is also the nonparametric isotonic maximum
/// likelihood estimate of the conditional event probability.
pub fn pav_fit(summary: &UniqueValueSummary) -> IsotonicFit {
    let blocks = pav_blocks(summary.counts(), summary.events());
    let mut fitted_unique = vec![0.0; summary.len()];
    fill_fitted(&blocks, &mut fitted_unique);
    IsotonicFit { blocks, fitted_unique }
}

/// Replaces each forecast with its isotonic fitted value, in original order.
pub fn recalibrate(dataset: &ForecastDataset) -> Vec<f64> {
    let summary = aggregate(dataset);
    let fit = pav_fit(&summary);
    recalibrate_with(&summary, &fit)
}

/// As [`recalibrate`], for callers that already computed the fit.
pub fn recalibrate_with(summary: &UniqueValueSummary, fit: &IsotonicFit) -> Vec<f64> {
    summary.unique_indices().iter().map(|&j| fit.fitted_unique()[j]).collect()
}
