//! Command-line arguments.

use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use podium_core::binom::BinomialSample;

#[derive(Debug, Parser)]
#[command(
    name = "podium",
    version,
    about = "Medal-share statistics over Winter Olympics tables"
)]
pub struct Cli {
    /// Directory holding replacement data files (same names as the shipped ones).
    #[arg(long, global = true, value_name = "DIR")]
    pub data: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write the output here instead of stdout. SVG plots also get a TSV
    /// sidecar next to this path.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    /// Comma-separated plot colors replacing the default palette in order.
    #[arg(long, global = true, value_delimiter = ',', value_name = "COLORS")]
    pub colors: Vec<String>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Tsv,
    Svg,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Norway's medal share per Games with an interval band and average line.
    Series(SeriesArgs),
    /// Confidence curves and intervals for binomial samples.
    Ccurve(CurveArgs),
    /// Likelihood-ratio test for equal medal probabilities.
    Lrt(LrtArgs),
    /// The 2026 nation table ranked under a scoring scheme.
    Table(TableArgs),
    /// Speedskating medal totals by nation.
    Skating(SkatingArgs),
    /// Grouped logistic regression.
    Regress(RegressArgs),
    /// Inhabitants per medal and population ratios.
    Percapita(PerCapitaArgs),
    /// Run every data integrity check.
    Validate,
}

fn parse_level(raw: &str) -> Result<f64, String> {
    let level: f64 = raw
        .parse()
        .map_err(|_| format!("{raw:?} is not a number"))?;
    if level > 0.0 && level < 1.0 {
        Ok(level)
    } else {
        Err(format!("level {level} must lie strictly between 0 and 1"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AverageArg {
    Pooled,
    Mean,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Wilson,
    Cd,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    #[arg(long, default_value_t = 0.90, value_parser = parse_level)]
    pub level: f64,
    /// Average over Games held after this year.
    #[arg(long, default_value_t = 1960)]
    pub from: u16,
    #[arg(long, value_enum, default_value_t = AverageArg::Pooled)]
    pub avg: AverageArg,
    #[arg(long, value_enum, default_value_t = MethodArg::Wilson)]
    pub method: MethodArg,
}

/// `CODE=y/n`, e.g. `NOR=41/348`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleSpec {
    pub code: String,
    pub sample: BinomialSample,
}

impl FromStr for SampleSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let usage = || format!("{s:?}: expected CODE=y/n, e.g. NOR=41/348");
        let (code, counts) = s.split_once('=').ok_or_else(usage)?;
        let (y, n) = counts.split_once('/').ok_or_else(usage)?;
        if code.is_empty() {
            return Err(usage());
        }
        let y: u64 = y.trim().parse().map_err(|_| usage())?;
        let n: u64 = n.trim().parse().map_err(|_| usage())?;
        let sample = BinomialSample::new(y, n).map_err(|e| format!("{s:?}: {e}"))?;
        Ok(Self {
            code: code.trim().to_string(),
            sample,
        })
    }
}

#[derive(Debug, Args)]
pub struct CurveArgs {
    /// One to six samples; defaults to NOR=41/348 USA=33/348 ITA=26/348.
    #[arg(value_name = "CODE=y/n")]
    pub samples: Vec<SampleSpec>,
    #[arg(long, default_value_t = 0.90, value_parser = parse_level)]
    pub level: f64,
}

#[derive(Debug, Args)]
pub struct LrtArgs {
    /// Two or more samples; defaults to NOR=41/348 USA=33/348 ITA=26/348.
    #[arg(value_name = "CODE=y/n")]
    pub samples: Vec<SampleSpec>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SchemeArg {
    Medals,
    Op7,
    Fib13,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, value_enum, default_value_t = SchemeArg::Medals)]
    pub scheme: SchemeArg,
    /// Correlate over every row, not only medal winners.
    #[arg(long)]
    pub all_rows: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SkatingMode {
    Men,
    Ladies,
    Combined,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AttributionArg {
    Split,
    Lumped,
}

#[derive(Debug, Args)]
pub struct SkatingArgs {
    #[arg(value_enum, default_value_t = SkatingMode::Combined)]
    pub mode: SkatingMode,
    #[arg(long, value_enum, default_value_t = AttributionArg::Split)]
    pub attribution: AttributionArg,
}

#[derive(Debug, Args)]
pub struct RegressArgs {
    /// TSV with columns code, successes, trials, covariates. Without it the
    /// Norway per-Games series is fitted against time.
    pub file: Option<PathBuf>,
}

/// `CODE=medals`, e.g. `LIE=1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MedalSpec {
    pub code: String,
    pub medals: u32,
}

impl FromStr for MedalSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let usage = || format!("{s:?}: expected CODE=medals, e.g. LIE=1");
        let (code, medals) = s.split_once('=').ok_or_else(usage)?;
        if code.trim().is_empty() {
            return Err(usage());
        }
        let medals = medals.trim().parse().map_err(|_| usage())?;
        Ok(Self {
            code: code.trim().to_ascii_uppercase(),
            medals,
        })
    }
}

#[derive(Debug, Args)]
pub struct PerCapitaArgs {
    /// Medal counts per nation; without them, totals come from the nation table.
    #[arg(value_name = "CODE=medals")]
    pub medals: Vec<MedalSpec>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn sample_specs() {
        let s: SampleSpec = "NOR=41/348".parse().unwrap();
        assert_eq!(
            (s.code.as_str(), s.sample.successes(), s.sample.trials()),
            ("NOR", 41, 348)
        );
        for bad in ["NOR", "NOR=41", "=1/2", "NOR=5/4", "NOR=a/4", "NOR=1/0"] {
            assert!(bad.parse::<SampleSpec>().is_err(), "{bad}");
        }
    }

    #[test]
    fn medal_specs() {
        assert_eq!(
            "lie=1".parse::<MedalSpec>().unwrap(),
            MedalSpec {
                code: "LIE".into(),
                medals: 1
            }
        );
        assert!("LIE".parse::<MedalSpec>().is_err());
        assert!("LIE=-1".parse::<MedalSpec>().is_err());
    }

    #[test]
    fn levels() {
        assert_eq!(parse_level("0.9"), Ok(0.9));
        assert!(parse_level("1").is_err());
        assert!(parse_level("x").is_err());
    }
}
