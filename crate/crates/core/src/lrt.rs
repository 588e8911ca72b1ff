//! Likelihood-ratio test that several binomial samples share one success
//! probability.

use std::fmt;

use crate::binom::{point_estimate, BinomialSample};
use crate::error::{Error, Result};
use crate::special::gamma_q;

#[derive(Debug, Clone, PartialEq)]
pub struct LrtResult {
    /// Deviance between the separate-proportion and common-proportion fits.
    pub statistic: f64,
    pub df: u32,
    pub p_value: f64,
    pub pooled_p: f64,
    pub per_sample_p: Vec<f64>,
    /// Set when the pooled estimate is 0 or 1, so every sample agrees
    /// trivially and the statistic is 0.
    pub degenerate: bool,
}

impl fmt::Display for LrtResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "deviance {:.4} on {} df, p-value {:.4}",
            self.statistic, self.df, self.p_value
        )?;
        if self.degenerate {
            write!(f, " (degenerate: pooled estimate {})", self.pooled_p)?;
        }
        Ok(())
    }
}

/// `count · ln(count / expected)`, zero when `count` is zero.
fn xlogx_ratio(count: u64, expected: f64) -> f64 {
    if count == 0 {
        0.0
    } else {
        let c = count as f64;
        c * (c / expected).ln()
    }
}

/// Tests `p_1 = … = p_k` for `k ≥ 2` binomial samples against a
/// chi-square reference with `k − 1` degrees of freedom.
pub fn lrt_equal_proportions(samples: &[BinomialSample]) -> Result<LrtResult> {
    if samples.len() < 2 {
        return Err(Error::InvalidArgument(format!(
            "likelihood-ratio test needs at least 2 samples, got {}",
            samples.len()
        )));
    }
    let df = (samples.len() - 1) as u32;
    let successes: u64 = samples.iter().map(|s| s.successes()).sum();
    let trials: u64 = samples.iter().map(|s| s.trials()).sum();
    let pooled_p = successes as f64 / trials as f64;
    let per_sample_p = samples.iter().map(|&s| point_estimate(s)).collect();

    if successes == 0 || successes == trials {
        return Ok(LrtResult {
            statistic: 0.0,
            df,
            p_value: 1.0,
            pooled_p,
            per_sample_p,
            degenerate: true,
        });
    }

    let deviance: f64 = samples
        .iter()
        .map(|s| {
            let n = s.trials() as f64;
            xlogx_ratio(s.successes(), n * pooled_p)
                + xlogx_ratio(s.trials() - s.successes(), n * (1.0 - pooled_p))
        })
        .sum();
    // Rounding can leave identical samples a hair below zero.
    let statistic = (2.0 * deviance).max(0.0);
    Ok(LrtResult {
        statistic,
        df,
        p_value: chisq_sf(statistic, df),
        pooled_p,
        per_sample_p,
        degenerate: false,
    })
}

/// Upper tail `Pr(X > x)` of a chi-square variable with `df ≥ 1` degrees of
/// freedom, as `Q(df/2, x/2)`. Returns NaN for `df = 0`.
pub fn chisq_sf(x: f64, df: u32) -> f64 {
    if df == 0 {
        return f64::NAN;
    }
    if x <= 0.0 {
        return 1.0;
    }
    gamma_q(0.5 * df as f64, 0.5 * x)
}
