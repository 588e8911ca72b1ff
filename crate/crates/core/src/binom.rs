//! Binomial inference for medal shares.
//!
//! Each of the `3m` podium slots at a Games with `m` events is treated as an
//! independent Bernoulli trial, so a nation's medal count is binomial. On top
//! of exact tail sums this module builds the half-corrected confidence
//! distribution
//!
//! ```text
//! C(p) = Pr_p(Y > y) + ½ Pr_p(Y = y)
//! ```
//!
//! and its confidence curve `cc(p) = |1 − 2 C(p)|`, whose sub-level set at
//! height γ is a γ-level confidence interval.

use std::fmt;

use crate::dataset::GamesRecord;
use crate::error::{Error, Result};
use crate::special::normal_quantile;

/// Grid size used by [`confidence_curve`] callers that have no preference.
pub const DEFAULT_GRID: usize = 2001;

const REFINE_POINTS: usize = 101;
const BISECTION_TOL: f64 = 1e-14;
const BISECTION_MAX_ITER: usize = 200;

/// `y` successes in `n` trials, with `0 ≤ y ≤ n` and `n ≥ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BinomialSample {
    successes: u64,
    trials: u64,
}

impl BinomialSample {
    pub fn new(successes: u64, trials: u64) -> Result<Self> {
        if trials == 0 || successes > trials {
            return Err(Error::InvalidSample { successes, trials });
        }
        Ok(Self { successes, trials })
    }

    /// A nation's medals against the `3m` medal chances of `m` events.
    pub fn medal_chances(medals: u64, events: u64) -> Result<Self> {
        Self::new(medals, 3 * events)
    }

    pub fn successes(&self) -> u64 {
        self.successes
    }

    pub fn trials(&self) -> u64 {
        self.trials
    }
}

impl fmt::Display for BinomialSample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.successes, self.trials)
    }
}

pub fn point_estimate(s: BinomialSample) -> f64 {
    s.successes as f64 / s.trials as f64
}

/// `ln C(n, k)` as a running sum of `ln((n−k+j)/j)`.
fn ln_choose(n: u64, k: u64) -> f64 {
    let k = k.min(n - k);
    let base = (n - k) as f64;
    (1..=k).map(|j| ((base + j as f64) / j as f64).ln()).sum()
}

/// `Pr(Y = k)` for `Y ~ Bin(n, p)`.
pub fn binomial_pmf(k: u64, n: u64, p: f64) -> f64 {
    if k > n {
        return 0.0;
    }
    if p <= 0.0 {
        return if k == 0 { 1.0 } else { 0.0 };
    }
    if p >= 1.0 {
        return if k == n { 1.0 } else { 0.0 };
    }
    (ln_choose(n, k) + k as f64 * p.ln() + (n - k) as f64 * (-p).ln_1p()).exp()
}

/// `Σ_{k=lo}^{hi} Pr(Y = k)`.
///
/// Starts from the term nearest the mode inside the range and walks outward
/// with the term-ratio recurrence; terms shrink monotonically in both
/// directions from there, so the walk stops once they no longer register.
fn range_sum(lo: u64, hi: u64, n: u64, p: f64) -> f64 {
    if lo > hi || lo > n {
        return 0.0;
    }
    let hi = hi.min(n);
    if p <= 0.0 {
        return if lo == 0 { 1.0 } else { 0.0 };
    }
    if p >= 1.0 {
        return if hi == n { 1.0 } else { 0.0 };
    }
    let mode = (((n + 1) as f64 * p).floor() as u64).min(n);
    let start = mode.clamp(lo, hi);
    let odds = p / (1.0 - p);
    let first = binomial_pmf(start, n, p);
    let mut sum = first;

    let mut term = first;
    for k in start..hi {
        term *= (n - k) as f64 / (k + 1) as f64 * odds;
        sum += term;
        if term <= sum * 1e-18 {
            break;
        }
    }
    let mut term = first;
    for k in (lo + 1..=start).rev() {
        term *= k as f64 / (n - k + 1) as f64 / odds;
        sum += term;
        if term <= sum * 1e-18 {
            break;
        }
    }
    sum.min(1.0)
}

/// `Pr(Y ≤ y)` for `Y ~ Bin(n, p)`.
pub fn binomial_cdf(y: u64, n: u64, p: f64) -> f64 {
    if y >= n {
        return 1.0;
    }
    range_sum(0, y, n, p)
}

/// `Pr(Y > y)` for `Y ~ Bin(n, p)`, summed directly rather than as `1 − cdf`.
pub fn binomial_sf(y: u64, n: u64, p: f64) -> f64 {
    if y >= n {
        return 0.0;
    }
    range_sum(y + 1, n, n, p)
}

/// Half-corrected confidence distribution `C(p) = Pr_p(Y > y) + ½ Pr_p(Y = y)`.
///
/// Nondecreasing in `p`, from `C(0)` (½ when `y = 0`, else 0) to `C(1)`
/// (½ when `y = n`, else 1).
pub fn cd_half_corrected(s: BinomialSample, p: f64) -> f64 {
    let (y, n) = (s.successes, s.trials);
    binomial_sf(y, n, p) + 0.5 * binomial_pmf(y, n, p)
}

/// Confidence curve value `|1 − 2 C(p)|`.
pub fn cc(s: BinomialSample, p: f64) -> f64 {
    (1.0 - 2.0 * cd_half_corrected(s, p)).abs()
}

/// Solves `C(p) = target` by bisection. Returns 0 or 1 when the target lies
/// outside the range of `C`.
fn invert_cd(s: BinomialSample, target: f64) -> f64 {
    if cd_half_corrected(s, 0.0) >= target {
        return 0.0;
    }
    if cd_half_corrected(s, 1.0) <= target {
        return 1.0;
    }
    let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
    for _ in 0..BISECTION_MAX_ITER {
        let mid = 0.5 * (lo + hi);
        if cd_half_corrected(s, mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < BISECTION_TOL {
            break;
        }
    }
    0.5 * (lo + hi)
}

/// Median of the confidence distribution, where the curve touches zero.
pub fn cd_median(s: BinomialSample) -> f64 {
    invert_cd(s, 0.5)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConfidenceInterval {
    pub level: f64,
    pub low: f64,
    pub high: f64,
}

impl ConfidenceInterval {
    pub fn contains(&self, p: f64) -> bool {
        self.low <= p && p <= self.high
    }

    pub fn overlaps(&self, other: &ConfidenceInterval) -> bool {
        self.low <= other.high && other.low <= self.high
    }

    pub fn width(&self) -> f64 {
        self.high - self.low
    }
}

impl fmt::Display for ConfidenceInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:.4}, {:.4}]", self.low, self.high)
    }
}

fn check_level(level: f64) -> Result<()> {
    if level > 0.0 && level < 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "confidence level {level} not in (0, 1)"
        )))
    }
}

/// A confidence curve tabulated on a grid over `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConfidenceCurve {
    pub sample: BinomialSample,
    /// `(p, cc(p))`, sorted by `p`.
    pub points: Vec<(f64, f64)>,
}

impl ConfidenceCurve {
    /// Grid point with the smallest curve value.
    pub fn minimum(&self) -> (f64, f64) {
        self.points
            .iter()
            .copied()
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .expect("curve has at least three points")
    }
}

/// Tabulates the confidence curve on `grid_size` uniform points over
/// `[0, 1]`, refined around the median so the minimum is resolved.
pub fn confidence_curve(s: BinomialSample, grid_size: usize) -> Result<ConfidenceCurve> {
    if grid_size < 3 {
        return Err(Error::InvalidArgument(format!(
            "grid size {grid_size} below 3"
        )));
    }
    let step = 1.0 / (grid_size - 1) as f64;
    let median = cd_median(s);
    let mut ps: Vec<f64> = (0..grid_size).map(|i| i as f64 * step).collect();
    let (lo, hi) = ((median - step).max(0.0), (median + step).min(1.0));
    ps.extend((0..REFINE_POINTS).map(|i| lo + (hi - lo) * i as f64 / (REFINE_POINTS - 1) as f64));
    ps.push(median);
    ps.sort_by(f64::total_cmp);
    ps.dedup();
    let points = ps.into_iter().map(|p| (p, cc(s, p))).collect();
    Ok(ConfidenceCurve { sample: s, points })
}

/// Interval `{p : cc(p) ≤ level}`, found by inverting `C` at `(1 ∓ level)/2`.
///
/// With `y = 0` the lower end is 0, and with `y = n` the upper end is 1.
pub fn curve_interval(s: BinomialSample, level: f64) -> Result<ConfidenceInterval> {
    check_level(level)?;
    Ok(ConfidenceInterval {
        level,
        low: invert_cd(s, 0.5 * (1.0 - level)),
        high: invert_cd(s, 0.5 * (1.0 + level)),
    })
}

/// Wilson score interval with `z = Φ⁻¹((1 + level)/2)`.
pub fn wilson_interval(s: BinomialSample, level: f64) -> Result<ConfidenceInterval> {
    check_level(level)?;
    let (y, n) = (s.successes, s.trials);
    // Computed on the side with fewer successes and mirrored, so that
    // (y, n) and (n − y, n) mirror each other about ½.
    let mirrored = 2 * y > n;
    let y_small = if mirrored { n - y } else { y };

    let z = normal_quantile(0.5 * (1.0 + level));
    let nf = n as f64;
    let phat = y_small as f64 / nf;
    let z2 = z * z;
    let denom = 1.0 + z2 / nf;
    let centre = (phat + z2 / (2.0 * nf)) / denom;
    let half = z * (phat * (1.0 - phat) / nf + z2 / (4.0 * nf * nf)).sqrt() / denom;
    let low = if y_small == 0 {
        0.0
    } else {
        (centre - half).max(0.0)
    };
    let high = (centre + half).min(1.0);

    let (low, high) = if mirrored {
        (1.0 - high, 1.0 - low)
    } else {
        (low, high)
    };
    Ok(ConfidenceInterval { level, low, high })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum IntervalMethod {
    #[default]
    Wilson,
    /// Inversion of the half-corrected confidence distribution.
    ConfidenceCurve,
}

impl IntervalMethod {
    pub fn interval(self, s: BinomialSample, level: f64) -> Result<ConfidenceInterval> {
        match self {
            IntervalMethod::Wilson => wilson_interval(s, level),
            IntervalMethod::ConfidenceCurve => curve_interval(s, level),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesPoint {
    pub year: u16,
    pub sample: BinomialSample,
    pub estimate: f64,
    pub interval: ConfidenceInterval,
}

/// Per-Games medal share `total / 3m` with a confidence interval.
pub fn series_percentages(
    games: &[GamesRecord],
    level: f64,
    method: IntervalMethod,
) -> Result<Vec<SeriesPoint>> {
    games
        .iter()
        .map(|g| {
            let sample = BinomialSample::medal_chances(g.total.into(), g.events.into())?;
            Ok(SeriesPoint {
                year: g.year,
                sample,
                estimate: point_estimate(sample),
                interval: method.interval(sample, level)?,
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AverageMode {
    /// All medals over all medal chances.
    #[default]
    Pooled,
    /// Unweighted mean of the per-Games shares.
    MeanOfPercents,
}

/// Average medal share over the Games held strictly after `from_year`.
pub fn pooled_average(games: &[GamesRecord], from_year: u16, mode: AverageMode) -> Result<f64> {
    let selected: Vec<&GamesRecord> = games.iter().filter(|g| g.year > from_year).collect();
    if selected.is_empty() {
        return Err(Error::EmptySelection(format!("no Games after {from_year}")));
    }
    Ok(match mode {
        AverageMode::Pooled => {
            let medals: u64 = selected.iter().map(|g| u64::from(g.total)).sum();
            let chances: u64 = selected.iter().map(|g| u64::from(g.medal_chances())).sum();
            medals as f64 / chances as f64
        }
        AverageMode::MeanOfPercents => {
            let shares: f64 = selected
                .iter()
                .map(|g| f64::from(g.total) / f64::from(g.medal_chances()))
                .sum();
            shares / selected.len() as f64
        }
    })
}

/// Share of events whose gold went to someone else.
pub fn gold_complement_share(golds: u64, events: u64) -> Result<f64> {
    if events == 0 || golds > events {
        return Err(Error::InvalidArgument(format!(
            "{golds} golds in {events} events"
        )));
    }
    Ok((events - golds) as f64 / events as f64)
}
