use std::fmt::Write as _;

use podium_core::binom::{
    cc, cd_median, confidence_curve, curve_interval, point_estimate, pooled_average,
    series_percentages, AverageMode, BinomialSample, ConfidenceInterval, IntervalMethod,
    DEFAULT_GRID,
};
use podium_core::dataset::{
    aggregate_speedskating, validate_games, validate_op_ranks, validate_totals, Attribution, Check,
    DataNote, NationTable, Sex, ValidationReport,
};
use podium_core::lrt::lrt_equal_proportions;
use podium_core::ranking::{
    medal_and_points_ranks, per_capita, population_ratio, rank_with_ties, score_medals,
    spearman_rho, NationScope, RankTable, ScoringScheme,
};
use podium_core::regress::{
    fit_logistic, games_trend_dataset, parse_regression_tsv, RegressionDataset,
};

use crate::args::{
    AttributionArg, AverageArg, Cli, Command, CurveArgs, Format, LrtArgs, MethodArg, PerCapitaArgs,
    RegressArgs, SampleSpec, SchemeArg, SeriesArgs, SkatingArgs, SkatingMode, TableArgs,
};
use crate::data::DataSource;
use crate::plot::{render_svg, Annotation, LineStyle, PlotKind, PlotSeries, PlotSpec};
use crate::{CliError, Report};

const MAX_CURVES: usize = 6;

pub fn execute(cli: &Cli) -> Result<Report, CliError> {
    let data = DataSource::new(cli.data.clone());
    match &cli.command {
        Command::Series(args) => series(cli, &data, args),
        Command::Ccurve(args) => ccurve(cli, args),
        Command::Lrt(args) => lrt(cli, args),
        Command::Table(args) => table(cli, &data, args),
        Command::Skating(args) => skating(cli, &data, args),
        Command::Regress(args) => regress(cli, args),
        Command::Percapita(args) => percapita(cli, &data, args),
        Command::Validate => validate(cli, &data),
    }
}

fn unsupported(format: Format, command: &str) -> CliError {
    CliError::Usage(format!("--format {format:?} is not available for `{command}`").to_lowercase())
}

fn pct(p: f64) -> String {
    format!("{:.1}", 100.0 * p)
}

fn series(cli: &Cli, data: &DataSource, args: &SeriesArgs) -> Result<Report, CliError> {
    let games = data.games()?;
    let method = match args.method {
        MethodArg::Wilson => IntervalMethod::Wilson,
        MethodArg::Cd => IntervalMethod::ConfidenceCurve,
    };
    let (mode, mode_name) = match args.avg {
        AverageArg::Pooled => (AverageMode::Pooled, "pooled"),
        AverageArg::Mean => (AverageMode::MeanOfPercents, "mean of percents"),
    };
    let points = series_percentages(&games.records, args.level, method)?;
    let average = pooled_average(&games.records, args.from, mode)?;
    let method_name = match method {
        IntervalMethod::Wilson => "Wilson",
        IntervalMethod::ConfidenceCurve => "confidence-curve",
    };

    let mut tsv = String::from("year\tevents\tmedals\tchances\tpercent\testimate\tlow\thigh\n");
    for (p, g) in points.iter().zip(&games.records) {
        let _ = writeln!(
            tsv,
            "{}\t{}\t{}\t{}\t{}\t{:.4}\t{:.4}\t{:.4}",
            p.year,
            g.events,
            g.total,
            g.medal_chances(),
            pct(p.estimate),
            p.estimate,
            p.interval.low,
            p.interval.high
        );
    }
    let _ = writeln!(
        tsv,
        "# average after {} ({mode_name})\t{:.4}",
        args.from, average
    );

    let stdout = match cli.format {
        Format::Tsv => tsv.clone(),
        Format::Text => {
            let mut out = format!(
                "Norway medal share per Games, {}% {method_name} intervals\n",
                pct(args.level)
            );
            let _ = writeln!(
                out,
                "{:<4}  {:<18} {:>6} {:>6} {:>7} {:>7} {:>5} {:>5}",
                "year", "host", "events", "medals", "chances", "percent", "low", "high"
            );
            for (p, g) in points.iter().zip(&games.records) {
                let _ = writeln!(
                    out,
                    "{:<4}  {:<18} {:>6} {:>6} {:>7} {:>7} {:>5} {:>5}",
                    p.year,
                    g.host,
                    g.events,
                    g.total,
                    g.medal_chances(),
                    pct(p.estimate),
                    pct(p.interval.low),
                    pct(p.interval.high)
                );
            }
            let _ = writeln!(
                out,
                "average after {} ({mode_name}): {}%",
                args.from,
                pct(average)
            );
            out
        }
        Format::Svg => {
            let band = |name: &str, f: fn(&ConfidenceInterval) -> f64| PlotSeries {
                name: name.into(),
                points: points
                    .iter()
                    .map(|p| (f64::from(p.year), 100.0 * f(&p.interval)))
                    .collect(),
                style: LineStyle::Dotted,
                color: 0,
            };
            let spec = PlotSpec {
                kind: PlotKind::SeriesBand,
                title: format!("Norwegian medals in percent, {}% band", pct(args.level)),
                x_label: "year".into(),
                y_label: "percent of medals".into(),
                series: vec![
                    PlotSeries {
                        name: "NOR".into(),
                        points: points
                            .iter()
                            .map(|p| (f64::from(p.year), 100.0 * p.estimate))
                            .collect(),
                        style: LineStyle::Solid,
                        color: 0,
                    },
                    band("lower", |i| i.low),
                    band("upper", |i| i.high),
                ],
                level_line: Some(average),
                annotations: vec![],
                output_path: cli.out.clone(),
            };
            render_svg(&spec, &cli.colors).map_err(CliError::Usage)?
        }
    };
    Ok(Report::holds(stdout).with_sidecar((cli.format == Format::Svg).then_some(tsv)))
}

/// The three-nation comparison as analysed: medals out of 3 * 116 chances.
/// ITA counts 26 here although its final table row totals 30.
const DEFAULT_SAMPLES: [(&str, u64); 3] = [("NOR", 41), ("USA", 33), ("ITA", 26)];
const DEFAULT_TRIALS: u64 = 348;

fn samples_or_default(given: &[SampleSpec]) -> Result<Vec<SampleSpec>, CliError> {
    if !given.is_empty() {
        return Ok(given.to_vec());
    }
    DEFAULT_SAMPLES
        .iter()
        .map(|&(code, y)| {
            Ok(SampleSpec {
                code: code.to_string(),
                sample: BinomialSample::new(y, DEFAULT_TRIALS)?,
            })
        })
        .collect()
}

fn ccurve(cli: &Cli, args: &CurveArgs) -> Result<Report, CliError> {
    let samples = samples_or_default(&args.samples)?;
    if samples.len() > MAX_CURVES {
        return Err(CliError::Usage(format!(
            "at most {MAX_CURVES} samples, got {}",
            samples.len()
        )));
    }
    let intervals: Vec<ConfidenceInterval> = samples
        .iter()
        .map(|s| curve_interval(s.sample, args.level))
        .collect::<Result<_, _>>()?;

    let mut disjoint = Vec::new();
    for i in 0..samples.len() {
        for j in i + 1..samples.len() {
            if !intervals[i].overlaps(&intervals[j]) {
                disjoint.push(format!(
                    "{} and {} intervals do not overlap",
                    samples[i].code, samples[j].code
                ));
            }
        }
    }
    let overlap = disjoint.is_empty();

    let mut tsv = String::from("code\tsuccesses\ttrials\tpercent\testimate\tmedian\tlow\thigh\n");
    for (s, ci) in samples.iter().zip(&intervals) {
        let _ = writeln!(
            tsv,
            "{}\t{}\t{}\t{}\t{:.4}\t{:.4}\t{:.4}\t{:.4}",
            s.code,
            s.sample.successes(),
            s.sample.trials(),
            pct(point_estimate(s.sample)),
            point_estimate(s.sample),
            cd_median(s.sample),
            ci.low,
            ci.high
        );
    }
    let _ = writeln!(
        tsv,
        "# level\t{}\n# overlap\t{}",
        args.level,
        if overlap { "yes" } else { "no" }
    );

    let stdout = match cli.format {
        Format::Tsv => tsv.clone(),
        Format::Text => {
            let mut out = format!("confidence curves, level {}\n", args.level);
            let _ = writeln!(
                out,
                "{:<6} {:>5} {:>6} {:>7} {:>8} {:>8} {:>8}",
                "code", "y", "n", "percent", "median", "low", "high"
            );
            for (s, ci) in samples.iter().zip(&intervals) {
                let _ = writeln!(
                    out,
                    "{:<6} {:>5} {:>6} {:>7} {:>8.4} {:>8.4} {:>8.4}",
                    s.code,
                    s.sample.successes(),
                    s.sample.trials(),
                    pct(point_estimate(s.sample)),
                    cd_median(s.sample),
                    ci.low,
                    ci.high
                );
            }
            let _ = writeln!(
                out,
                "all intervals overlap: {}",
                if overlap { "yes" } else { "no" }
            );
            out
        }
        Format::Svg => {
            let spec = curve_plot(cli, &samples, &intervals, args.level)?;
            render_svg(&spec, &cli.colors).map_err(CliError::Usage)?
        }
    };
    let mut report = Report::holds(stdout).with_sidecar((cli.format == Format::Svg).then_some(tsv));
    report.holds = overlap;
    report.diagnostics = disjoint;
    Ok(report)
}

fn curve_plot(
    cli: &Cli,
    samples: &[SampleSpec],
    intervals: &[ConfidenceInterval],
    level: f64,
) -> Result<PlotSpec, CliError> {
    // Window: every curve from well below to well above its interval.
    let wide: Vec<ConfidenceInterval> = samples
        .iter()
        .map(|s| curve_interval(s.sample, 0.999))
        .collect::<Result<_, _>>()?;
    let lo = wide.iter().map(|w| w.low).fold(1.0, f64::min);
    let hi = wide.iter().map(|w| w.high).fold(0.0, f64::max);
    let pad = 0.05 * (hi - lo);
    let (lo, hi) = ((lo - pad).max(0.0), (hi + pad).min(1.0));

    let mut series = Vec::new();
    let mut annotations = Vec::new();
    for (i, (s, ci)) in samples.iter().zip(intervals).enumerate() {
        let curve = confidence_curve(s.sample, DEFAULT_GRID)?;
        series.push(PlotSeries {
            name: s.code.clone(),
            points: curve
                .points
                .into_iter()
                .filter(|(p, _)| (lo..=hi).contains(p))
                .collect(),
            style: LineStyle::Solid,
            color: i,
        });
        for end in [ci.low, ci.high] {
            annotations.push(Annotation {
                x: end,
                y: cc(s.sample, end),
                text: format!("{end:.3}"),
                color: i,
            });
        }
    }
    Ok(PlotSpec {
        kind: PlotKind::ConfidenceCurves,
        title: format!("Confidence curves, {}% intervals", pct(level)),
        x_label: "medal probability p".into(),
        y_label: "confidence curve cc(p)".into(),
        series,
        level_line: Some(level),
        annotations,
        output_path: cli.out.clone(),
    })
}

fn lrt(cli: &Cli, args: &LrtArgs) -> Result<Report, CliError> {
    let samples = samples_or_default(&args.samples)?;
    if samples.len() < 2 {
        return Err(CliError::Usage(
            "the likelihood-ratio test needs at least two samples".into(),
        ));
    }
    let bare: Vec<BinomialSample> = samples.iter().map(|s| s.sample).collect();
    let r = lrt_equal_proportions(&bare)?;
    let listed: Vec<String> = samples
        .iter()
        .map(|s| format!("{} {}", s.code, s.sample))
        .collect();
    let stdout = match cli.format {
        Format::Text => format!(
            "samples: {}\nstatistic = {:.3}\ndf = {}\npooled p = {:.4}\np = {:.3}\n",
            listed.join(", "),
            r.statistic,
            r.df,
            r.pooled_p,
            r.p_value
        ),
        Format::Tsv => format!(
            "statistic\tdf\tpooled_p\tp_value\n{:.6}\t{}\t{:.6}\t{:.6}\n",
            r.statistic, r.df, r.pooled_p, r.p_value
        ),
        Format::Svg => return Err(unsupported(cli.format, "lrt")),
    };
    let mut report = Report::holds(stdout);
    if r.degenerate {
        report.diagnostics.push(format!(
            "degenerate test: pooled estimate is {}",
            r.pooled_p
        ));
    }
    Ok(report)
}

fn scheme_ranking(
    nations: &NationTable,
    scheme: SchemeArg,
) -> Result<(ScoringScheme, RankTable), CliError> {
    let (scheme, scores): (ScoringScheme, Vec<(String, f64)>) = match scheme {
        // The printed column already includes placements 4-6.
        SchemeArg::Op7 => (
            ScoringScheme::olympic_points(),
            nations
                .rows
                .iter()
                .map(|r| (r.code.clone(), r.olympic_points.value()))
                .collect(),
        ),
        SchemeArg::Medals | SchemeArg::Fib13 => {
            let s = if scheme == SchemeArg::Medals {
                ScoringScheme::medal_count()
            } else {
                ScoringScheme::fibonacci()
            };
            let scores = nations
                .rows
                .iter()
                .map(|r| (r.code.clone(), score_medals(&r.medals, &s)))
                .collect();
            (s, scores)
        }
    };
    Ok((scheme, rank_with_ties(scores)?))
}

fn table(cli: &Cli, data: &DataSource, args: &TableArgs) -> Result<Report, CliError> {
    let nations = data.nations()?;
    let (scheme, ranking) = scheme_ranking(&nations, args.scheme)?;
    let scope = if args.all_rows {
        NationScope::AllRows
    } else {
        NationScope::MedalWinners
    };
    let (by_medals, _) = medal_and_points_ranks(&nations, scope)?;
    let in_scope: Vec<(String, f64)> = ranking
        .entries
        .iter()
        .filter(|e| by_medals.get(&e.code).is_some())
        .map(|e| (e.code.clone(), e.score))
        .collect();
    let rho = spearman_rho(&by_medals, &rank_with_ties(in_scope)?)?;

    let score_text = |v: f64| match args.scheme {
        SchemeArg::Op7 => format!("{v:.1}"),
        _ => format!("{v:.0}"),
    };
    let mut stdout = String::new();
    match cli.format {
        Format::Text => {
            let _ = writeln!(stdout, "scheme: {scheme}");
            let _ = writeln!(
                stdout,
                "{:>4}  {:<5} {:>4} {:>6} {:>6} {:>5} {:>7}",
                "rank", "code", "gold", "silver", "bronze", "total", "score"
            );
        }
        Format::Tsv => stdout.push_str("rank\tcode\tgold\tsilver\tbronze\ttotal\tscore\n"),
        Format::Svg => return Err(unsupported(cli.format, "table")),
    }
    for e in &ranking.entries {
        let row = nations.get(&e.code).expect("ranked from the same table");
        let m = row.medals;
        let rank = ranking.competition_rank(&e.code).expect("present");
        let score = score_text(e.score);
        let _ = match cli.format {
            Format::Tsv => writeln!(
                stdout,
                "{rank}\t{}\t{}\t{}\t{}\t{}\t{score}",
                e.code,
                m.gold,
                m.silver,
                m.bronze,
                m.total()
            ),
            _ => writeln!(
                stdout,
                "{rank:>4}  {:<5} {:>4} {:>6} {:>6} {:>5} {score:>7}",
                e.code,
                m.gold,
                m.silver,
                m.bronze,
                m.total()
            ),
        };
    }
    let _ = match cli.format {
        Format::Tsv => writeln!(stdout, "# spearman\t{rho:.4}\t{}", by_medals.len()),
        _ => writeln!(
            stdout,
            "spearman rho vs medal ranking: {rho:.4} ({} nations)",
            by_medals.len()
        ),
    };
    Ok(Report::holds(stdout))
}

fn skating(cli: &Cli, data: &DataSource, args: &SkatingArgs) -> Result<Report, CliError> {
    let men = data.skating(Sex::Men)?;
    let ladies = data.skating(Sex::Ladies)?;
    let mode = match args.attribution {
        AttributionArg::Split => Attribution::Split,
        AttributionArg::Lumped => Attribution::Lumped,
    };
    let notes = match args.mode {
        SkatingMode::Men => men.validate(),
        SkatingMode::Ladies => ladies.validate(),
        SkatingMode::Combined => {
            let mut both = men.validate();
            both.extend(ladies.validate());
            both
        }
    };
    let mut stdout = String::new();
    match args.mode {
        SkatingMode::Combined => {
            let rows = aggregate_speedskating(&men, &ladies, mode);
            match cli.format {
                Format::Text => {
                    stdout.push_str("code men + ladies = total\n");
                    for r in &rows {
                        let _ = writeln!(stdout, "{r}");
                    }
                    let (m, l): (u32, u32) = rows
                        .iter()
                        .fold((0, 0), |(a, b), r| (a + r.men, b + r.ladies));
                    let _ = writeln!(stdout, "all  {m:>3} + {l:>2} = {:>3}", m + l);
                }
                Format::Tsv => {
                    stdout.push_str("code\tmen\tladies\ttotal\n");
                    for r in &rows {
                        let _ =
                            writeln!(stdout, "{}\t{}\t{}\t{}", r.code, r.men, r.ladies, r.total);
                    }
                }
                Format::Svg => return Err(unsupported(cli.format, "skating")),
            }
        }
        SkatingMode::Men | SkatingMode::Ladies => {
            let table = if args.mode == SkatingMode::Men {
                &men
            } else {
                &ladies
            };
            let mut codes: Vec<&String> = men.nations.iter().collect();
            codes.extend(ladies.nations.iter().filter(|c| men.column(c).is_none()));
            let mut rows: Vec<(&String, u32)> =
                codes.into_iter().map(|c| (c, table.total(c))).collect();
            rows.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(b.0)));
            match cli.format {
                Format::Text => {
                    let _ = writeln!(stdout, "{} speedskating medals by nation", table.sex);
                    for (code, n) in rows {
                        let _ = writeln!(stdout, "{code:<4} {n:>3}");
                    }
                }
                Format::Tsv => {
                    stdout.push_str("code\tmedals\n");
                    for (code, n) in rows {
                        let _ = writeln!(stdout, "{code}\t{n}");
                    }
                }
                Format::Svg => return Err(unsupported(cli.format, "skating")),
            }
        }
    }
    if cli.format == Format::Text {
        for c in notes.documented() {
            let _ = writeln!(
                stdout,
                "note: {}: table rows give {}, printed total {}",
                c.name, c.actual, c.expected
            );
        }
        for n in &notes.notes {
            let _ = writeln!(stdout, "note: {n}");
        }
    }
    Ok(Report::holds(stdout))
}

fn regress(cli: &Cli, args: &RegressArgs) -> Result<Report, CliError> {
    let (data, source): (RegressionDataset, String) = match &args.file {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            })?;
            let data = parse_regression_tsv(&text).map_err(|source| CliError::Data {
                file: path.display().to_string(),
                source,
            })?;
            (data, path.display().to_string())
        }
        None => {
            let games = DataSource::new(cli.data.clone()).games()?;
            (
                games_trend_dataset(&games.records),
                "Norway per-Games medal series".to_string(),
            )
        }
    };
    let fit = fit_logistic(&data)?;
    let mut terms = vec!["(intercept)".to_string()];
    terms.extend(data.covariate_names().iter().cloned());
    let mut stdout = String::new();
    match cli.format {
        Format::Text => {
            let _ = writeln!(
                stdout,
                "grouped logistic regression on {source}: {} rows",
                data.len()
            );
            let _ = writeln!(
                stdout,
                "{:<22} {:>12} {:>12}",
                "term", "estimate", "std.error"
            );
            for ((t, b), se) in terms.iter().zip(&fit.coefficients).zip(&fit.std_errors) {
                let _ = writeln!(stdout, "{t:<22} {b:>12.6} {se:>12.6}");
            }
            let _ = writeln!(stdout, "log-likelihood: {:.4}", fit.loglik);
            let _ = writeln!(
                stdout,
                "iterations: {} ({})",
                fit.iterations,
                if fit.converged {
                    "converged"
                } else {
                    "not converged"
                }
            );
        }
        Format::Tsv => {
            stdout.push_str("term\testimate\tstd_error\n");
            for ((t, b), se) in terms.iter().zip(&fit.coefficients).zip(&fit.std_errors) {
                let _ = writeln!(stdout, "{t}\t{b:.8}\t{se:.8}");
            }
        }
        Format::Svg => return Err(unsupported(cli.format, "regress")),
    }
    let mut report = Report::holds(stdout);
    if !fit.converged {
        report.holds = false;
        report.diagnostics.push(format!(
            "fit did not converge after {} iterations (gradient max-norm {:.3e})",
            fit.iterations, fit.gradient_norm
        ));
    }
    Ok(report)
}

fn percapita(cli: &Cli, data: &DataSource, args: &PerCapitaArgs) -> Result<Report, CliError> {
    let population = data.population()?;
    let medals: Vec<(String, u32)> = if args.medals.is_empty() {
        let nations = data.nations()?;
        population
            .entries
            .iter()
            .map(|(code, _)| {
                (
                    code.clone(),
                    nations.get(code).map_or(0, |r| r.medals.total()),
                )
            })
            .collect()
    } else {
        args.medals
            .iter()
            .map(|m| (m.code.clone(), m.medals))
            .collect()
    };
    let entries = medals
        .iter()
        .map(|(code, n)| {
            let pop = population.get(code).ok_or_else(|| {
                CliError::Usage(format!("no population for {code} in the population table"))
            })?;
            Ok(per_capita(code.clone(), pop, *n)?)
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let smallest = entries
        .iter()
        .min_by_key(|e| e.population)
        .expect("at least one entry");

    let per_medal = |e: &podium_core::ranking::PerCapitaEntry| {
        e.inhabitants_per_medal
            .map_or_else(|| "-".to_string(), |v| format!("{v:.0}"))
    };
    let mut stdout = String::new();
    match cli.format {
        Format::Text => {
            let _ = writeln!(
                stdout,
                "{:<5} {:>11} {:>6} {:>12} {:>12}",
                "code", "population", "medals", "per_medal", "per_million"
            );
            for e in &entries {
                let _ = writeln!(
                    stdout,
                    "{:<5} {:>11} {:>6} {:>12} {:>12.3}",
                    e.code,
                    e.population,
                    e.medals,
                    per_medal(e),
                    e.medals_per_million()
                );
            }
            for e in entries.iter().filter(|e| e.code != smallest.code) {
                let ratio = population_ratio(e.population, smallest.population)?;
                let _ = writeln!(
                    stdout,
                    "population ratio {}/{}: {ratio:.3}",
                    e.code, smallest.code
                );
            }
        }
        Format::Tsv => {
            stdout.push_str("code\tpopulation\tmedals\tper_medal\tper_million\n");
            for e in &entries {
                let _ = writeln!(
                    stdout,
                    "{}\t{}\t{}\t{}\t{:.3}",
                    e.code,
                    e.population,
                    e.medals,
                    per_medal(e),
                    e.medals_per_million()
                );
            }
        }
        Format::Svg => return Err(unsupported(cli.format, "percapita")),
    }
    Ok(Report::holds(stdout))
}

fn validate(cli: &Cli, data: &DataSource) -> Result<Report, CliError> {
    if cli.format != Format::Text {
        return Err(unsupported(cli.format, "validate"));
    }
    let mut report = ValidationReport::default();

    let games = data.games()?;
    report.extend(validate_games(&games));

    let nations = data.nations()?;
    match nations.printed_totals {
        Some(printed) => report.extend(validate_totals(&nations.rows, &printed)),
        None => report.note(DataNote::new(
            "nation totals",
            "no totals row to check against",
        )),
    }
    report.extend(validate_op_ranks(&nations));
    for r in &nations.rows {
        if r.olympic_points < r.medal_points_floor() {
            report.push(Check::compare(
                format!("op floor {}", r.code),
                r.medal_points_floor(),
                r.olympic_points,
            ));
        }
    }
    report.extend(data.skating(Sex::Men)?.validate());
    report.extend(data.skating(Sex::Ladies)?.validate());
    data.population()?;

    let failures = report.failures().count();
    let documented = report.documented().count();
    let mut stdout = report.to_string();
    let _ = writeln!(
        stdout,
        "{} checks: {} passed, {} documented, {} failed; {} notes",
        report.checks.len(),
        report.checks.len() - failures - documented,
        documented,
        failures,
        report.notes.len()
    );
    let mut out = Report::holds(stdout);
    if !report.ok() {
        out.holds = false;
        out.diagnostics = report
            .failures()
            .map(|c| format!("{}: expected {}, found {}", c.name, c.expected, c.actual))
            .collect();
    }
    Ok(out)
}
