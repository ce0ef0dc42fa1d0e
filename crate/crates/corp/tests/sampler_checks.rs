use corp::simulation::{
    sample_forecasts, sample_outcomes_calibrated, ForecastDistribution, Scenario, ScenarioSpec,
    Support,
};

fn ks_statistic(sample: &mut [f64], cdf: impl Fn(f64) -> f64) -> f64 {
    sample.sort_unstable_by(f64::total_cmp);
    let n = sample.len() as f64;
    let mut d: f64 = 0.0;
    for (i, &x) in sample.iter().enumerate() {
        let f = cdf(x);
        d = d.max((f - i as f64 / n).abs());
        d = d.max((f - (i as f64 + 1.0) / n).abs());
    }
    d
}

// Empirical CDFs of the continuous samplers against their analytic CDFs.
#[test]
fn continuous_samplers_match_their_cdfs() {
    for (distribution, seed) in [
        (ForecastDistribution::Uniform, 11u64),
        (ForecastDistribution::Linear, 12),
        (ForecastDistribution::BetaMixture, 13),
    ] {
        let spec = ScenarioSpec {
            scenario: Scenario { distribution, support: Support::Continuous },
            n: 100_000,
            seed,
        };
        let mut sample = sample_forecasts(&spec);
        let d = ks_statistic(&mut sample, |x| distribution.cdf(x));
        assert!(d < 0.01, "{distribution:?}: KS statistic {d}");
    }
}

// Discrete sampling puts all mass on the k midpoints, with frequencies
// close to the density-proportional weights.
#[test]
fn discrete_sampler_hits_midpoints_with_density_weights() {
    let k = 10usize;
    let n = 200_000usize;
    let spec = ScenarioSpec {
        scenario: Scenario {
            distribution: ForecastDistribution::Linear,
            support: Support::Discrete(k as u32),
        },
        n,
        seed: 21,
    };
    let sample = sample_forecasts(&spec);

    let midpoints: Vec<f64> = (1..=k).map(|j| (2 * j - 1) as f64 / (2 * k) as f64).collect();
    let weight_sum: f64 = midpoints.iter().map(|&x| 0.4 + 1.2 * x).sum();
    let mut counts = vec![0u64; k];
    for &x in &sample {
        let j = midpoints.iter().position(|&m| m == x).expect("sample value must be a midpoint");
        counts[j] += 1;
    }
    for j in 0..k {
        let p = (0.4 + 1.2 * midpoints[j]) / weight_sum;
        let freq = counts[j] as f64 / n as f64;
        // six standard deviations of a binomial proportion
        let slack = 6.0 * (p * (1.0 - p) / n as f64).sqrt();
        assert!((freq - p).abs() < slack, "midpoint {j}: {freq} vs {p}");
    }
}

// Conditional event frequencies track the forecast values they were drawn
// from.
#[test]
fn calibrated_outcomes_have_matching_conditional_frequencies() {
    let spec = ScenarioSpec {
        scenario: Scenario {
            distribution: ForecastDistribution::Uniform,
            support: Support::Discrete(5),
        },
        n: 100_000,
        seed: 31,
    };
    let forecasts = sample_forecasts(&spec);
    let outcomes = sample_outcomes_calibrated(&forecasts, 31);

    for j in 1..=5u32 {
        let value = (2 * j - 1) as f64 / 10.0;
        let mut count = 0u64;
        let mut events = 0u64;
        for (&x, &y) in forecasts.iter().zip(&outcomes) {
            if x == value {
                count += 1;
                events += u64::from(y);
            }
        }
        assert!(count > 0);
        let freq = events as f64 / count as f64;
        let slack = 6.0 * (value * (1.0 - value) / count as f64).sqrt();
        assert!((freq - value).abs() < slack, "value {value}: frequency {freq}");
    }
}
