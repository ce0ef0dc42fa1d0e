//! Small numeric helpers shared across the crate.

/// Sample quantile with linear interpolation between order statistics
/// (type 7 convention, the R and NumPy default).
///
/// `sorted` must be nonempty and ascending; `p` must lie in `[0, 1]`.
pub fn quantile_type7(sorted: &[f64], p: f64) -> f64 {
    debug_assert!(!sorted.is_empty());
    debug_assert!((0.0..=1.0).contains(&p));
    let n = sorted.len();
    let h = (n - 1) as f64 * p;
    let lo = h.floor() as usize;
    if lo + 1 >= n {
        return sorted[n - 1];
    }
    let frac = h - lo as f64;
    sorted[lo] + frac * (sorted[lo + 1] - sorted[lo])
}

/// Interquartile range under the type 7 quantile convention.
pub fn iqr_type7(sorted: &[f64]) -> f64 {
    quantile_type7(sorted, 0.75) - quantile_type7(sorted, 0.25)
}
