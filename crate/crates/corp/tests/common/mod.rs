//! Shared helpers for integration tests: an exact brute-force isotonic
//! oracle and small dataset builders.

// each test binary uses its own subset of these helpers
#![allow(dead_code)]

use num_rational::Ratio;

pub type Frac = Ratio<i64>;

/// Weighted squared error of pooling a group with `weight` members and
/// `events` successes at its own frequency: events (weight - events) / weight.
fn group_sse(weight: u64, events: u64) -> Frac {
    Frac::new((events * (weight - events)) as i64, weight as i64)
}

/// Exhaustive isotonic least squares over unique values with the given
/// counts and event counts: tries every composition into consecutive
/// groups, keeps those with nondecreasing pooled frequencies, and returns
/// the minimizer's fitted values. Exact rational arithmetic throughout,
/// so the comparison with PAV is a true oracle. Only for k <= 16.
pub fn brute_force_isotonic(counts: &[u64], events: &[u64]) -> Vec<f64> {
    let k = counts.len();
    assert!((1..=16).contains(&k), "oracle is exponential in k");
    let mut best_sse: Option<Frac> = None;
    let mut best_fit: Vec<f64> = Vec::new();
    for mask in 0u32..(1 << (k - 1)) {
        // bit j set = a cut between unique values j and j+1
        let mut fit = Vec::with_capacity(k);
        let mut sse = Frac::new(0, 1);
        let mut prev_freq: Option<Frac> = None;
        let mut feasible = true;
        let mut start = 0usize;
        for j in 0..k {
            let cut_here = j + 1 == k || mask & (1 << j) != 0;
            if !cut_here {
                continue;
            }
            let weight: u64 = counts[start..=j].iter().sum();
            let events: u64 = events[start..=j].iter().sum();
            let freq = Frac::new(events as i64, weight as i64);
            if prev_freq.is_some_and(|p| freq < p) {
                feasible = false;
                break;
            }
            prev_freq = Some(freq);
            sse += group_sse(weight, events);
            let value = events as f64 / weight as f64;
            for _ in start..=j {
                fit.push(value);
            }
            start = j + 1;
        }
        if !feasible {
            continue;
        }
        if best_sse.is_none_or(|b| sse < b) {
            best_sse = Some(sse);
            best_fit = fit;
        }
    }
    best_fit
}

/// Every feasible (nondecreasing) composition fit, as fitted-value vectors
/// over unique values. The PAV solution must weakly beat all of them under
/// any proper scoring rule.
pub fn isotonic_candidate_fits(counts: &[u64], events: &[u64]) -> Vec<Vec<f64>> {
    let k = counts.len();
    assert!((1..=16).contains(&k));
    let mut fits = Vec::new();
    for mask in 0u32..(1 << (k - 1)) {
        let mut fit = Vec::with_capacity(k);
        let mut prev_freq: Option<Frac> = None;
        let mut feasible = true;
        let mut start = 0usize;
        for j in 0..k {
            let cut_here = j + 1 == k || mask & (1 << j) != 0;
            if !cut_here {
                continue;
            }
            let weight: u64 = counts[start..=j].iter().sum();
            let events: u64 = events[start..=j].iter().sum();
            let freq = Frac::new(events as i64, weight as i64);
            if prev_freq.is_some_and(|p| freq < p) {
                feasible = false;
                break;
            }
            prev_freq = Some(freq);
            let value = events as f64 / weight as f64;
            for _ in start..=j {
                fit.push(value);
            }
            start = j + 1;
        }
        if feasible {
            fits.push(fit);
        }
    }
    fits
}

/// Mean score over a unique-value summary when forecasting `fit[j]` at
/// unique value j.
pub fn mean_score_on_summary(
    rule: corp::ScoringRule,
    counts: &[u64],
    events: &[u64],
    fit: &[f64],
) -> f64 {
    let n: u64 = counts.iter().sum();
    let mut total = 0.0;
    for j in 0..counts.len() {
        // skip zero-count terms so 0 * inf cannot poison the sum
        if events[j] > 0 {
            total += events[j] as f64 * rule.score(fit[j], 1);
        }
        if counts[j] > events[j] {
            total += (counts[j] - events[j]) as f64 * rule.score(fit[j], 0);
        }
    }
    total / n as f64
}
