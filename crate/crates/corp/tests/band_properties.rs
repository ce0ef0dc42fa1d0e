use corp::bands::{discrete_asymptotic_band, resampling_band};
use corp::{
    aggregate, compute_band, pav_fit, BandKind, BandMethod, BandSpec, ForecastDataset,
    ResolvedBandMethod,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn grid_dataset(max_n: usize) -> impl Strategy<Value = ForecastDataset> {
    (2..=max_n).prop_flat_map(|n| {
        (
            prop::collection::vec((0u32..=20).prop_map(|g| f64::from(g) / 20.0), n),
            prop::collection::vec(0u8..=1, n),
        )
            .prop_map(|(forecasts, outcomes)| ForecastDataset::new(forecasts, outcomes).unwrap())
    })
}

fn continuous_dataset(min_n: usize, max_n: usize) -> impl Strategy<Value = ForecastDataset> {
    (min_n..=max_n).prop_flat_map(|n| {
        (prop::collection::vec(0.001f64..=0.999, n), prop::collection::vec(0u8..=1, n))
            .prop_map(|(forecasts, outcomes)| ForecastDataset::new(forecasts, outcomes).unwrap())
    })
}

fn check_shape(band: &corp::UncertaintyBand, positions: &[f64]) {
    assert_eq!(band.positions, positions);
    assert_eq!(band.lower.len(), positions.len());
    assert_eq!(band.upper.len(), positions.len());
    for j in 0..positions.len() {
        assert!(0.0 <= band.lower[j], "lower[{j}] = {}", band.lower[j]);
        assert!(band.lower[j] <= band.upper[j]);
        assert!(band.upper[j] <= 1.0, "upper[{j}] = {}", band.upper[j]);
    }
}

proptest! {
    // The normal band always contains its own center.
    #[test]
    fn discrete_asymptotic_band_contains_its_centers(
        ds in grid_dataset(60),
        level in 0.5f64..=0.99,
        confidence in any::<bool>(),
    ) {
        let summary = aggregate(&ds);
        let fit = pav_fit(&summary);
        let spec = BandSpec {
            kind: if confidence { BandKind::Confidence } else { BandKind::Consistency },
            level,
            method: BandMethod::AsymptoticDiscrete,
            ..BandSpec::default()
        };
        let band = discrete_asymptotic_band(&summary, &fit, &spec).unwrap();
        check_shape(&band, summary.values());
        let centers: &[f64] = match spec.kind {
            BandKind::Consistency => summary.values(),
            BandKind::Confidence => fit.fitted_unique(),
        };
        prop_assert_eq!(band.fraction_covered(centers), 1.0);
        prop_assert!(band.flagged_positions.is_empty());
    }

    #[test]
    fn resampling_band_is_deterministic_and_nested_across_levels(
        ds in grid_dataset(40),
        confidence in any::<bool>(),
    ) {
        let summary = aggregate(&ds);
        let fit = pav_fit(&summary);
        let kind = if confidence { BandKind::Confidence } else { BandKind::Consistency };
        let narrow = BandSpec {
            kind,
            level: 0.5,
            method: BandMethod::Resampling,
            replicates: 60,
            seed: 7,
        };
        let wide = BandSpec { level: 0.95, ..narrow };

        let a = resampling_band(&ds, &summary, &fit, &narrow).unwrap();
        let b = resampling_band(&ds, &summary, &fit, &narrow).unwrap();
        prop_assert_eq!(&a, &b);
        check_shape(&a, summary.values());

        let w = resampling_band(&ds, &summary, &fit, &wide).unwrap();
        for j in 0..summary.len() {
            prop_assert!(w.lower[j] <= a.lower[j]);
            prop_assert!(a.upper[j] <= w.upper[j]);
        }
    }

    // Consistency bands from the cube-root asymptotics center on the
    // diagonal, so the unique values themselves are always covered.
    #[test]
    fn continuous_asymptotic_band_covers_the_diagonal(ds in continuous_dataset(30, 80)) {
        let summary = aggregate(&ds);
        let fit = pav_fit(&summary);
        let spec = BandSpec {
            method: BandMethod::AsymptoticContinuous,
            ..BandSpec::default()
        };
        let band = compute_band(&ds, &summary, &fit, &spec).unwrap();
        prop_assert_eq!(band.method_used, ResolvedBandMethod::AsymptoticContinuous);
        check_shape(&band, summary.values());
        prop_assert_eq!(band.fraction_covered(summary.values()), 1.0);
        for &j in &band.flagged_positions {
            prop_assert!(j < summary.len());
        }
    }

    // Auto resolution never panics and routes to a method that works for
    // the data at hand.
    #[test]
    fn auto_band_construction_succeeds_on_mixed_data(ds in grid_dataset(80)) {
        let summary = aggregate(&ds);
        let fit = pav_fit(&summary);
        let spec = BandSpec { replicates: 50, ..BandSpec::default() };
        let band = compute_band(&ds, &summary, &fit, &spec).unwrap();
        check_shape(&band, summary.values());
    }
}

// With many repetitions per unique value, the resampled PAV curve at each
// value is essentially the per-value binomial frequency, so the empirical
// quantile band and the normal approximation must agree closely.
#[test]
fn resampling_and_normal_bands_agree_on_heavily_tied_data() {
    let k = 10;
    let per_value = 1000;
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut forecasts = Vec::new();
    let mut outcomes = Vec::new();
    for j in 0..k {
        let value = (2.0 * (j as f64) + 1.0) / (2.0 * k as f64);
        for _ in 0..per_value {
            forecasts.push(value);
            outcomes.push(u8::from(rng.random::<f64>() < value));
        }
    }
    let ds = ForecastDataset::new(forecasts, outcomes).unwrap();
    let summary = aggregate(&ds);
    let fit = pav_fit(&summary);

    let resampled = resampling_band(
        &ds,
        &summary,
        &fit,
        &BandSpec {
            method: BandMethod::Resampling,
            replicates: 2000,
            seed: 3,
            ..BandSpec::default()
        },
    )
    .unwrap();
    let normal = discrete_asymptotic_band(
        &summary,
        &fit,
        &BandSpec { method: BandMethod::AsymptoticDiscrete, ..BandSpec::default() },
    )
    .unwrap();

    for j in 0..summary.len() {
        assert!(
            (resampled.lower[j] - normal.lower[j]).abs() < 0.01,
            "lower[{j}]: {} vs {}",
            resampled.lower[j],
            normal.lower[j]
        );
        assert!(
            (resampled.upper[j] - normal.upper[j]).abs() < 0.01,
            "upper[{j}]: {} vs {}",
            resampled.upper[j],
            normal.upper[j]
        );
    }
}
