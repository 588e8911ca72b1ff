//! Rank correlation against a quadratic-time Pearson-on-ranks oracle.

use podium_core::dataset::{embedded, parse_nation_table};
use podium_core::ranking::{
    medal_and_points_ranks, rank_with_ties, score_full, spearman_rho, NationScope, RankTable,
    ScoringScheme,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Average rank of each score: one plus the count of strictly larger scores,
/// plus half the count of other equal scores.
fn oracle_ranks(scores: &[f64]) -> Vec<f64> {
    scores
        .iter()
        .map(|&s| {
            let greater = scores.iter().filter(|&&t| t > s).count() as f64;
            let equal = scores.iter().filter(|&&t| t == s).count() as f64;
            1.0 + greater + (equal - 1.0) / 2.0
        })
        .collect()
}

/// Textbook Pearson: `(Σxy − n x̄ ȳ) / √((Σx² − n x̄²)(Σy² − n ȳ²))`.
fn oracle_pearson(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| a * b).sum::<f64>() - n * mx * my;
    let sxx: f64 = x.iter().map(|a| a * a).sum::<f64>() - n * mx * mx;
    let syy: f64 = y.iter().map(|b| b * b).sum::<f64>() - n * my * my;
    sxy / (sxx * syy).sqrt()
}

fn table(codes: &[String], scores: &[f64]) -> RankTable {
    rank_with_ties(codes.iter().cloned().zip(scores.iter().copied())).unwrap()
}

#[test]
fn spearman_matches_oracle_on_random_vectors() {
    let mut rng = ChaCha8Rng::seed_from_u64(50);
    for trial in 0..50 {
        let n = rng.random_range(3..60);
        let codes: Vec<String> = (0..n).map(|i| format!("N{i:02}")).collect();
        // Small integer scores so ties are common.
        let x: Vec<f64> = (0..n)
            .map(|_| f64::from(rng.random_range(0..12u8)))
            .collect();
        let y: Vec<f64> = (0..n)
            .map(|_| f64::from(rng.random_range(0..12u8)))
            .collect();
        let (rx, ry) = (oracle_ranks(&x), oracle_ranks(&y));
        if rx.iter().all(|r| *r == rx[0]) || ry.iter().all(|r| *r == ry[0]) {
            continue;
        }
        let expect = oracle_pearson(&rx, &ry);
        let got = spearman_rho(&table(&codes, &x), &table(&codes, &y)).unwrap();
        assert!(
            (got - expect).abs() < 1e-12,
            "trial {trial}: {got} vs {expect}"
        );
    }
}

#[test]
fn medal_table_correlation() {
    // scipy.stats.spearmanr on the total and OP columns.
    let t = parse_nation_table(embedded::NATIONS_2026).unwrap();
    let (m, p) = medal_and_points_ranks(&t, NationScope::MedalWinners).unwrap();
    assert!((spearman_rho(&m, &p).unwrap() - 0.980_978_179_774_706_4).abs() < 1e-12);
    let (m, p) = medal_and_points_ranks(&t, NationScope::AllRows).unwrap();
    assert!((spearman_rho(&m, &p).unwrap() - 0.986_770_640_172_924_2).abs() < 1e-12);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_sum_and_symmetry(x in prop::collection::vec(0u8..8, 2..40), y_seed in any::<u64>()) {
        let n = x.len();
        let codes: Vec<String> = (0..n).map(|i| format!("C{i}")).collect();
        let xs: Vec<f64> = x.iter().map(|&v| f64::from(v)).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(y_seed);
        let ys: Vec<f64> = (0..n).map(|_| rng.random_range(0.0..1.0)).collect();
        let (tx, ty) = (table(&codes, &xs), table(&codes, &ys));
        let sum: f64 = tx.entries.iter().map(|e| e.rank).sum();
        prop_assert_eq!(sum, (n * (n + 1)) as f64 / 2.0);
        if tx.entries.iter().any(|e| e.rank != tx.entries[0].rank) {
            let a = spearman_rho(&tx, &ty).unwrap();
            let b = spearman_rho(&ty, &tx).unwrap();
            prop_assert!((a - b).abs() < 1e-15);
            prop_assert!((spearman_rho(&tx, &tx).unwrap() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn positive_rescaling_keeps_ranks(
        placements in prop::collection::vec(prop::array::uniform6(0u32..10), 1..30),
        multiplier in 1u32..1000,
        halvings in 0i32..20,
    ) {
        // Integer multiples and powers of two scale without rounding, so
        // tied scores stay tied.
        let factor = f64::from(multiplier) * 2f64.powi(-halvings);
        for scheme in [ScoringScheme::olympic_points(), ScoringScheme::fibonacci(), ScoringScheme::medal_count()] {
            let scaled = scheme.scaled(factor).unwrap();
            let rank = |s: &ScoringScheme| {
                let t = rank_with_ties(
                    placements.iter().enumerate().map(|(i, p)| (format!("N{i}"), score_full(p, s))),
                ).unwrap();
                let mut r: Vec<(String, f64)> = t.entries.into_iter().map(|e| (e.code, e.rank)).collect();
                r.sort_by(|a, b| a.0.cmp(&b.0));
                r
            };
            prop_assert_eq!(rank(&scheme), rank(&scaled));
        }
    }
}
