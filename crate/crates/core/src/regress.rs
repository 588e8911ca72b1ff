//! Grouped-binomial logistic regression.
//!
//! Each row carries `y` successes out of `n` trials at covariates `x`, with
//! `Pr(success) = 1 / (1 + exp(−β₀ − β·x))`. Fitting is plain maximum
//! likelihood by Newton's method with step-halving, started at `β = 0`.

use std::collections::BTreeSet;

use nalgebra::{Cholesky, DMatrix, DVector};

use crate::dataset::tsv::{self, parse_error, Line};
use crate::dataset::GamesRecord;
use crate::error::{Error, Result};
use crate::special::{logistic, softplus};

const MAX_ITERATIONS: usize = 100;
const GRADIENT_TOL: f64 = 1e-8;
const STEP_TOL: f64 = 1e-6;
const MAX_HALVINGS: usize = 60;
const SEPARATION_BOUND: f64 = 30.0;

#[derive(Debug, Clone, PartialEq)]
pub struct RegressionRow {
    pub code: String,
    pub successes: u64,
    pub trials: u64,
    pub covariates: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct RegressionDataset {
    covariate_names: Vec<String>,
    rows: Vec<RegressionRow>,
}

impl RegressionDataset {
    pub fn new(covariate_names: Vec<String>, rows: Vec<RegressionRow>) -> Result<Self> {
        let p = covariate_names.len();
        for row in &rows {
            if row.covariates.len() != p {
                return Err(Error::DimensionMismatch {
                    expected: p,
                    actual: row.covariates.len(),
                });
            }
            if row.trials == 0 || row.successes > row.trials {
                return Err(Error::InvalidSample {
                    successes: row.successes,
                    trials: row.trials,
                });
            }
            if let Some(x) = row.covariates.iter().find(|x| !x.is_finite()) {
                return Err(Error::InvalidArgument(format!(
                    "{}: covariate {x} is not finite",
                    row.code
                )));
            }
        }
        Ok(Self {
            covariate_names,
            rows,
        })
    }

    pub fn covariate_names(&self) -> &[String] {
        &self.covariate_names
    }

    pub fn rows(&self) -> &[RegressionRow] {
        &self.rows
    }

    /// Number of covariates, excluding the intercept.
    pub fn dimension(&self) -> usize {
        self.covariate_names.len()
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Design matrix with a leading column of ones.
    fn design(&self) -> DMatrix<f64> {
        let k = self.dimension() + 1;
        DMatrix::from_fn(self.rows.len(), k, |i, j| {
            if j == 0 {
                1.0
            } else {
                self.rows[i].covariates[j - 1]
            }
        })
    }
}

/// Parses `code  successes  trials  x1 … xp`; the header names the covariates.
pub fn parse_regression_tsv(text: &str) -> Result<RegressionDataset> {
    let mut names: Option<Vec<String>> = None;
    let mut rows = Vec::new();
    for line in tsv::lines(text) {
        let (number, fields) = match line {
            Line::Record { number, fields } => (number, fields),
            Line::Directive { number, name, .. } => {
                return Err(parse_error(number, format!("unknown directive @{name}")));
            }
        };
        let Some(names) = &names else {
            if fields.len() < 3 || fields[..3] != ["code", "successes", "trials"] {
                return Err(parse_error(
                    number,
                    "expected header `code successes trials [covariates…]`",
                ));
            }
            let covariates: Vec<String> = fields[3..].iter().map(|s| s.to_string()).collect();
            let unique: BTreeSet<&String> = covariates.iter().collect();
            if unique.len() != covariates.len() || covariates.iter().any(String::is_empty) {
                return Err(parse_error(
                    number,
                    "covariate names must be nonempty and distinct",
                ));
            }
            names = Some(covariates);
            continue;
        };
        if fields.len() != names.len() + 3 {
            return Err(parse_error(
                number,
                format!(
                    "expected {} fields, found {}",
                    names.len() + 3,
                    fields.len()
                ),
            ));
        }
        let successes = u64::from(tsv::count(number, "successes", fields[1])?);
        let trials = u64::from(tsv::count(number, "trials", fields[2])?);
        let covariates = fields[3..]
            .iter()
            .zip(names)
            .map(|(raw, name)| {
                raw.parse::<f64>()
                    .ok()
                    .filter(|x| x.is_finite())
                    .ok_or_else(|| {
                        parse_error(
                            number,
                            format!("column {name}: expected a number, found {raw:?}"),
                        )
                    })
            })
            .collect::<Result<Vec<f64>>>()?;
        if trials == 0 || successes > trials {
            return Err(Error::Integrity(format!(
                "line {number}: {successes} successes out of {trials} trials"
            )));
        }
        rows.push(RegressionRow {
            code: fields[0].to_string(),
            successes,
            trials,
            covariates,
        });
    }
    let names = names.ok_or_else(|| parse_error(0, "missing header"))?;
    RegressionDataset::new(names, rows)
}

/// One row per Games: medals won out of `3m` chances, against decades
/// elapsed since 1924.
pub fn games_trend_dataset(games: &[GamesRecord]) -> RegressionDataset {
    let rows = games
        .iter()
        .map(|g| RegressionRow {
            code: g.year.to_string(),
            successes: u64::from(g.total),
            trials: u64::from(g.medal_chances()),
            covariates: vec![(f64::from(g.year) - 1924.0) / 10.0],
        })
        .collect();
    RegressionDataset {
        covariate_names: vec!["decades_since_1924".into()],
        rows,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LogisticFit {
    /// Intercept first, then one coefficient per covariate.
    pub coefficients: Vec<f64>,
    pub std_errors: Vec<f64>,
    pub loglik: f64,
    pub iterations: usize,
    pub converged: bool,
    pub gradient_norm: f64,
    /// Log-likelihood at the start and after every accepted step.
    pub loglik_trace: Vec<f64>,
}

fn check_dimension(coefficients: &[f64], data: &RegressionDataset) -> Result<()> {
    let expected = data.dimension() + 1;
    if coefficients.len() != expected {
        return Err(Error::DimensionMismatch {
            expected,
            actual: coefficients.len(),
        });
    }
    Ok(())
}

fn eta(coefficients: &[f64], covariates: &[f64]) -> f64 {
    coefficients[0]
        + coefficients[1..]
            .iter()
            .zip(covariates)
            .map(|(b, x)| b * x)
            .sum::<f64>()
}

/// `Σ y log p + (n − y) log(1 − p)`, omitting the binomial coefficients.
pub fn loglik(coefficients: &[f64], data: &RegressionDataset) -> Result<f64> {
    check_dimension(coefficients, data)?;
    Ok(data
        .rows
        .iter()
        .map(|r| row_loglik(r, eta(coefficients, &r.covariates)))
        .sum())
}

fn row_loglik(r: &RegressionRow, eta: f64) -> f64 {
    let failures = r.trials - r.successes;
    let mut ll = 0.0;
    if r.successes > 0 {
        ll -= r.successes as f64 * softplus(-eta);
    }
    if failures > 0 {
        ll -= failures as f64 * softplus(eta);
    }
    ll
}

/// Score vector `Σ (y − n p) x` with a leading 1 in `x`.
pub fn gradient(coefficients: &[f64], data: &RegressionDataset) -> Result<Vec<f64>> {
    check_dimension(coefficients, data)?;
    let mut g = vec![0.0; coefficients.len()];
    for r in &data.rows {
        let resid =
            r.successes as f64 - r.trials as f64 * logistic(eta(coefficients, &r.covariates));
        g[0] += resid;
        for (gj, x) in g[1..].iter_mut().zip(&r.covariates) {
            *gj += resid * x;
        }
    }
    Ok(g)
}

/// Observed information `Σ n p (1 − p) x xᵀ`.
fn information(
    beta: &DVector<f64>,
    data: &RegressionDataset,
    design: &DMatrix<f64>,
) -> DMatrix<f64> {
    let k = beta.len();
    let mut info = DMatrix::zeros(k, k);
    for (i, r) in data.rows.iter().enumerate() {
        let p = logistic(eta(beta.as_slice(), &r.covariates));
        let w = r.trials as f64 * p * (1.0 - p);
        let x = design.row(i).transpose();
        info.ger(w, &x, &x, 1.0);
    }
    info
}

fn max_abs(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |m, x| m.max(x.abs()))
}

fn design_rank(design: &DMatrix<f64>) -> usize {
    let sv = design.clone().svd(false, false).singular_values;
    let largest = sv.iter().fold(0.0_f64, |m, s| m.max(*s));
    let tol = largest * design.nrows().max(design.ncols()) as f64 * f64::EPSILON;
    sv.iter().filter(|s| **s > tol).count()
}

fn separation_error(beta: &[f64]) -> Error {
    let (index, value) = beta
        .iter()
        .copied()
        .enumerate()
        .max_by(|a, b| a.1.abs().total_cmp(&b.1.abs()))
        .expect("at least the intercept");
    Error::Separation { index, value }
}

/// Maximum-likelihood fit.
///
/// Converged means the gradient max-norm is below 1e-8 and the Newton step
/// max-norm below 1e-6. Stops after 100 iterations otherwise. A fit that
/// fails to converge with some `|β_j| > 30` is reported as separation.
pub fn fit_logistic(data: &RegressionDataset) -> Result<LogisticFit> {
    let k = data.dimension() + 1;
    let design = data.design();
    let rank = design_rank(&design);
    if rank < k {
        return Err(Error::RankDeficient { rank, columns: k });
    }

    let mut beta = DVector::<f64>::zeros(k);
    let mut ll = loglik(beta.as_slice(), data)?;
    let mut trace = vec![ll];
    let mut converged = false;
    let mut iterations = 0;
    let mut grad = gradient(beta.as_slice(), data)?;

    while iterations < MAX_ITERATIONS {
        let info = information(&beta, data, &design);
        let g = DVector::from_column_slice(&grad);
        let step = match Cholesky::new(info) {
            Some(chol) => chol.solve(&g),
            None if max_abs(beta.as_slice()) > SEPARATION_BOUND => {
                return Err(separation_error(beta.as_slice()))
            }
            None => {
                return Err(Error::RankDeficient {
                    rank: k - 1,
                    columns: k,
                })
            }
        };
        if max_abs(&grad) < GRADIENT_TOL && max_abs(step.as_slice()) < STEP_TOL {
            converged = true;
            break;
        }
        iterations += 1;

        let mut scale = 1.0;
        let mut accepted = None;
        for _ in 0..MAX_HALVINGS {
            let candidate = &beta + &step * scale;
            let cand_ll = loglik(candidate.as_slice(), data)?;
            if cand_ll >= ll {
                accepted = Some((candidate, cand_ll));
                break;
            }
            scale *= 0.5;
        }
        let Some((next, next_ll)) = accepted else {
            // No ascent along the Newton direction at machine precision.
            break;
        };
        beta = next;
        ll = next_ll;
        trace.push(ll);
        grad = gradient(beta.as_slice(), data)?;
    }

    if !converged && max_abs(beta.as_slice()) > SEPARATION_BOUND {
        return Err(separation_error(beta.as_slice()));
    }

    let std_errors = match Cholesky::new(information(&beta, data, &design)) {
        Some(chol) => chol
            .inverse()
            .diagonal()
            .iter()
            .map(|v| v.max(0.0).sqrt())
            .collect(),
        None => vec![f64::NAN; k],
    };
    Ok(LogisticFit {
        coefficients: beta.as_slice().to_vec(),
        std_errors,
        loglik: ll,
        iterations,
        converged,
        gradient_norm: max_abs(&grad),
        loglik_trace: trace,
    })
}

/// Fitted probability at `covariates`.
pub fn predict(fit: &LogisticFit, covariates: &[f64]) -> Result<f64> {
    let expected = fit.coefficients.len() - 1;
    if covariates.len() != expected {
        return Err(Error::DimensionMismatch {
            expected,
            actual: covariates.len(),
        });
    }
    Ok(logistic(eta(&fit.coefficients, covariates)))
}

/// Log-likelihood of the saturated model `p_i = y_i / n_i`, an upper bound
/// for every fit on the same data.
pub fn saturated_loglik(data: &RegressionDataset) -> f64 {
    data.rows
        .iter()
        .map(|r| {
            let (y, n) = (r.successes as f64, r.trials as f64);
            let f = n - y;
            let a = if y > 0.0 { y * (y / n).ln() } else { 0.0 };
            let b = if f > 0.0 { f * (f / n).ln() } else { 0.0 };
            a + b
        })
        .sum()
}
