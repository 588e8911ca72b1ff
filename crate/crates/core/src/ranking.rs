//! Scoring schemes, tie-aware rankings, Spearman correlation and per-capita
//! medal figures.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::dataset::{MedalCounts, NationTable};
use crate::error::{Error, Result};

/// Weights for placements 1 through 6.
#[derive(Debug, Clone, PartialEq)]
pub struct ScoringScheme {
    name: String,
    weights: [f64; 6],
}

impl ScoringScheme {
    /// Weights must be finite, nonnegative, nonincreasing, and positive for
    /// first place.
    pub fn new(name: impl Into<String>, weights: [f64; 6]) -> Result<Self> {
        let name = name.into();
        if weights.iter().any(|w| !w.is_finite() || *w < 0.0) {
            return Err(Error::InvalidArgument(format!(
                "{name}: weights must be finite and nonnegative"
            )));
        }
        if weights.windows(2).any(|w| w[1] > w[0]) {
            return Err(Error::InvalidArgument(format!(
                "{name}: weights must be nonincreasing"
            )));
        }
        if weights[0] <= 0.0 {
            return Err(Error::InvalidArgument(format!(
                "{name}: first-place weight must be positive"
            )));
        }
        Ok(Self { name, weights })
    }

    /// Olympic Points, 7-5-4-3-2-1.
    pub fn olympic_points() -> Self {
        Self {
            name: "op7".into(),
            weights: [7.0, 5.0, 4.0, 3.0, 2.0, 1.0],
        }
    }

    /// Fibonacci scale, 13-8-5-3-2-1.
    pub fn fibonacci() -> Self {
        Self {
            name: "fib13".into(),
            weights: [13.0, 8.0, 5.0, 3.0, 2.0, 1.0],
        }
    }

    /// Plain medal count, 1-1-1-0-0-0.
    pub fn medal_count() -> Self {
        Self {
            name: "medals".into(),
            weights: [1.0, 1.0, 1.0, 0.0, 0.0, 0.0],
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn weights(&self) -> &[f64; 6] {
        &self.weights
    }

    /// The same scheme with every weight multiplied by `factor > 0`.
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        if !(factor > 0.0 && factor.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "scale factor {factor} must be positive"
            )));
        }
        Self::new(
            format!("{}x{factor}", self.name),
            self.weights.map(|w| w * factor),
        )
    }
}

impl FromStr for ScoringScheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "medals" => Ok(Self::medal_count()),
            "op7" => Ok(Self::olympic_points()),
            "fib13" => Ok(Self::fibonacci()),
            other => Err(Error::InvalidArgument(format!(
                "unknown scoring scheme {other:?} (expected medals, op7 or fib13)"
            ))),
        }
    }
}

impl fmt::Display for ScoringScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.weights.iter().map(|w| w.to_string()).collect();
        write!(f, "{} ({})", self.name, w.join("-"))
    }
}

/// Score from medals alone; placements 4-6 contribute nothing here.
pub fn score_medals(m: &MedalCounts, scheme: &ScoringScheme) -> f64 {
    score_full(&[m.gold, m.silver, m.bronze, 0, 0, 0], scheme)
}

/// Dot product of placement counts 1-6 with the scheme weights.
pub fn score_full(placements: &[u32; 6], scheme: &ScoringScheme) -> f64 {
    placements
        .iter()
        .zip(scheme.weights)
        .map(|(&c, w)| f64::from(c) * w)
        .sum()
}

#[derive(Debug, Clone, PartialEq)]
pub struct RankEntry {
    pub code: String,
    pub score: f64,
    /// Average of the positional ranks shared by tied scores.
    pub rank: f64,
}

/// Entries in rank order, best first. Ties keep their input order.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct RankTable {
    pub entries: Vec<RankEntry>,
}

impl RankTable {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, code: &str) -> Option<&RankEntry> {
        self.entries.iter().find(|e| e.code == code)
    }

    /// Competition ("1224") rank: one more than the number of strictly
    /// better scores.
    pub fn competition_rank(&self, code: &str) -> Option<u32> {
        let score = self.get(code)?.score;
        Some(self.entries.iter().filter(|e| e.score > score).count() as u32 + 1)
    }
}

/// Ranks by descending score; tied scores share the mean of their positions.
pub fn rank_with_ties<S: Into<String>>(
    scores: impl IntoIterator<Item = (S, f64)>,
) -> Result<RankTable> {
    let mut entries: Vec<RankEntry> = scores
        .into_iter()
        .map(|(code, score)| RankEntry {
            code: code.into(),
            score,
            rank: 0.0,
        })
        .collect();
    if entries.is_empty() {
        return Err(Error::InvalidArgument("cannot rank an empty list".into()));
    }
    if let Some(bad) = entries.iter().find(|e| !e.score.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "{} has non-finite score {}",
            bad.code, bad.score
        )));
    }
    entries.sort_by(|a, b| b.score.total_cmp(&a.score));
    let mut start = 0;
    while start < entries.len() {
        let end = start
            + entries[start..]
                .iter()
                .take_while(|e| e.score == entries[start].score)
                .count();
        // Positions start+1 ..= end share their mean.
        let rank = (start + 1 + end) as f64 / 2.0;
        for e in &mut entries[start..end] {
            e.rank = rank;
        }
        start = end;
    }
    Ok(RankTable { entries })
}

/// Spearman's rho as the Pearson correlation of the two rank vectors, paired
/// by nation code. Valid with ties.
pub fn spearman_rho(x: &RankTable, y: &RankTable) -> Result<f64> {
    let xs: BTreeMap<&str, f64> = x
        .entries
        .iter()
        .map(|e| (e.code.as_str(), e.rank))
        .collect();
    let ys: BTreeMap<&str, f64> = y
        .entries
        .iter()
        .map(|e| (e.code.as_str(), e.rank))
        .collect();
    let only_left: Vec<String> = xs
        .keys()
        .filter(|k| !ys.contains_key(*k))
        .map(|k| k.to_string())
        .collect();
    let only_right: Vec<String> = ys
        .keys()
        .filter(|k| !xs.contains_key(*k))
        .map(|k| k.to_string())
        .collect();
    if !only_left.is_empty() || !only_right.is_empty() {
        return Err(Error::NationMismatch {
            only_left,
            only_right,
        });
    }
    if xs.len() < 2 {
        return Err(Error::InvalidArgument(
            "correlation needs at least 2 nations".into(),
        ));
    }
    let n = xs.len() as f64;
    let mean_x = xs.values().sum::<f64>() / n;
    let mean_y = ys.values().sum::<f64>() / n;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (code, &rx) in &xs {
        let dx = rx - mean_x;
        let dy = ys[code] - mean_y;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if sxx == 0.0 || syy == 0.0 {
        return Err(Error::InvalidArgument(
            "a ranking with every nation tied has no correlation".into(),
        ));
    }
    Ok((sxy / (sxx * syy).sqrt()).clamp(-1.0, 1.0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NationScope {
    /// Nations with at least one medal.
    #[default]
    MedalWinners,
    /// Every row; nations without medals tie at the bottom of the medal ranking.
    AllRows,
}

/// Medal-total ranking and printed Olympic Points ranking over the same nations.
pub fn medal_and_points_ranks(
    table: &NationTable,
    scope: NationScope,
) -> Result<(RankTable, RankTable)> {
    let rows: Vec<_> = match scope {
        NationScope::MedalWinners => table.medal_winners().collect(),
        NationScope::AllRows => table.rows.iter().collect(),
    };
    let medals = ScoringScheme::medal_count();
    let by_medals = rank_with_ties(
        rows.iter()
            .map(|r| (r.code.clone(), score_medals(&r.medals, &medals))),
    )?;
    let by_points = rank_with_ties(
        rows.iter()
            .map(|r| (r.code.clone(), r.olympic_points.value())),
    )?;
    Ok((by_medals, by_points))
}

#[derive(Debug, Clone, PartialEq)]
pub struct PerCapitaEntry {
    pub code: String,
    pub population: u64,
    pub medals: u32,
    /// `None` for a nation without medals.
    pub inhabitants_per_medal: Option<f64>,
}

impl PerCapitaEntry {
    pub fn medals_per_million(&self) -> f64 {
        f64::from(self.medals) * 1e6 / self.population as f64
    }
}

impl fmt::Display for PerCapitaEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.inhabitants_per_medal {
            Some(per) => write!(
                f,
                "{}: {} medals, 1 per {:.0} inhabitants, {:.3} per million",
                self.code,
                self.medals,
                per,
                self.medals_per_million()
            ),
            None => write!(f, "{}: no medals", self.code),
        }
    }
}

pub fn per_capita(code: impl Into<String>, population: u64, medals: u32) -> Result<PerCapitaEntry> {
    let code = code.into();
    if population == 0 {
        return Err(Error::InvalidArgument(format!(
            "{code}: population must be positive"
        )));
    }
    let inhabitants_per_medal = (medals > 0).then(|| population as f64 / f64::from(medals));
    Ok(PerCapitaEntry {
        code,
        population,
        medals,
        inhabitants_per_medal,
    })
}

/// How many times larger population `a` is than population `b`.
pub fn population_ratio(a: u64, b: u64) -> Result<f64> {
    if b == 0 {
        return Err(Error::InvalidArgument(
            "reference population must be positive".into(),
        ));
    }
    Ok(a as f64 / b as f64)
}
