//! Chi-square tail and deviance checks against independent closed forms.

use podium_core::binom::BinomialSample;
use podium_core::lrt::{chisq_sf, lrt_equal_proportions};
use proptest::prelude::*;

/// Even degrees of freedom: `Q(k, t) = e^{−t} Σ_{j<k} t^j / j!`.
fn chisq_sf_even(x: f64, df: u32) -> f64 {
    let t = x / 2.0;
    let mut term = 1.0;
    let mut sum = 1.0;
    for j in 1..df / 2 {
        term *= t / j as f64;
        sum += term;
    }
    (-t).exp() * sum
}

/// One degree of freedom: `1 − erf(√(x/2))`, with erf by composite Simpson.
fn chisq_sf_one(x: f64) -> f64 {
    let upper = (x / 2.0).sqrt();
    let intervals = 20_000;
    let h = upper / intervals as f64;
    let f = |t: f64| (-t * t).exp();
    let mut acc = f(0.0) + f(upper);
    for i in 1..intervals {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc += w * f(i as f64 * h);
    }
    1.0 - 2.0 / std::f64::consts::PI.sqrt() * acc * h / 3.0
}

fn sample(y: u64, n: u64) -> BinomialSample {
    BinomialSample::new(y, n).unwrap()
}

#[test]
fn even_df_closed_form() {
    for df in (2..=60).step_by(2) {
        for &x in &[0.05, 0.7, 2.0, 5.5, 13.0, 40.0, 90.0] {
            let expect = chisq_sf_even(x, df);
            let got = chisq_sf(x, df);
            assert!(
                ((got - expect) / expect).abs() < 1e-10,
                "df={df} x={x}: {got} vs {expect}"
            );
        }
    }
}

#[test]
fn one_df_by_quadrature() {
    for &x in &[0.01, 0.3, 1.0, 2.706, 3.841, 6.635, 10.0] {
        let expect = chisq_sf_one(x);
        assert!((chisq_sf(x, 1) - expect).abs() < 1e-11, "x={x}");
    }
}

#[test]
fn two_sample_deviance_by_hand() {
    // p̄ = 25/100; expected counts 12.5 and 37.5 in each sample.
    let hand = 2.0
        * (5.0 * (5.0_f64 / 12.5).ln()
            + 45.0 * (45.0_f64 / 37.5).ln()
            + 20.0 * (20.0_f64 / 12.5).ln()
            + 30.0 * (30.0_f64 / 37.5).ln());
    let r = lrt_equal_proportions(&[sample(5, 50), sample(20, 50)]).unwrap();
    assert!((r.statistic - hand).abs() < 1e-12);
    assert!((r.statistic - 12.657_564_883_691_204).abs() < 1e-12);
    assert_eq!(r.df, 1);
    assert!((r.p_value - 3.740_490_863_790_463e-4).abs() < 1e-12);
}

#[test]
fn statistic_grows_with_separation_at_fixed_pooled_rate() {
    let mut prev = -1.0;
    for d in 0..=50u64 {
        let r = lrt_equal_proportions(&[sample(50 - d, 200), sample(50 + d, 200)]).unwrap();
        assert!((r.pooled_p - 0.25).abs() < 1e-15);
        assert!(r.statistic > prev, "d = {d}");
        prev = r.statistic;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn statistic_ignores_sample_order(
        raw in prop::collection::vec((1u64..400, 0.0f64..=1.0), 2..6),
        rotate in 0usize..6,
    ) {
        let mut samples: Vec<BinomialSample> = raw
            .iter()
            .map(|&(n, f)| sample((f * n as f64).round() as u64, n))
            .collect();
        let base = lrt_equal_proportions(&samples).unwrap();
        let len = samples.len();
        samples.rotate_left(rotate % len);
        samples.reverse();
        let shuffled = lrt_equal_proportions(&samples).unwrap();
        prop_assert!((base.statistic - shuffled.statistic).abs() <= 1e-9 * base.statistic.max(1.0));
        prop_assert!((0.0..=1.0).contains(&base.p_value));
        prop_assert!(base.statistic >= 0.0);
    }
}
