//! Norway's medal haul per Winter Games.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::medals::{MedalCounts, Tenths};
use super::report::{Check, DataNote, ValidationReport};
use super::tsv::{self, parse_error, Line};
use crate::error::{Error, Result};

const COLUMNS: [&str; 9] = [
    "host", "year", "events", "gold", "silver", "bronze", "total", "nations", "percent",
];
const TOTAL_EXCEPTION: &str = "total-exception";

/// One Winter Olympics as seen from Norway.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GamesRecord {
    pub year: u16,
    pub host: String,
    /// Number of events `m`; there are `3m` medal chances.
    pub events: u32,
    pub norway: MedalCounts,
    /// Medal total as printed. Normally `norway.total()`, but kept separately
    /// because the source table has a row where the two disagree.
    pub total: u32,
    pub nations: u32,
    pub percent: Tenths,
}

impl GamesRecord {
    pub fn medal_chances(&self) -> u32 {
        3 * self.events
    }

    /// Percent of medal chances won, recomputed from the printed total.
    pub fn recomputed_percent(&self) -> Tenths {
        Tenths::from_ratio(u64::from(self.total), u64::from(self.medal_chances()))
    }
}

/// Parsed Games table plus the irregularities declared with it.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GamesTable {
    pub records: Vec<GamesRecord>,
    pub notes: Vec<DataNote>,
}

impl GamesTable {
    pub fn year(&self, year: u16) -> Option<&GamesRecord> {
        self.records.iter().find(|r| r.year == year)
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn to_tsv(&self) -> String {
        let mut out = COLUMNS.join("\t");
        out.push('\n');
        for r in &self.records {
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                r.host,
                r.year,
                r.events,
                r.norway.gold,
                r.norway.silver,
                r.norway.bronze,
                r.total,
                r.nations,
                r.percent
            );
        }
        for n in &self.notes {
            let _ = writeln!(out, "@{TOTAL_EXCEPTION}\t{}\t{}", n.key, n.text);
        }
        out
    }
}

/// Parses the tab-separated Games table.
///
/// Columns: host, year, events, gold, silver, bronze, total, nations,
/// percent. An optional header row starting with `host` is skipped. A row
/// whose colours do not add up to its printed total is rejected unless the
/// file declares `@total-exception<TAB>year<TAB>note`.
pub fn parse_games_table(text: &str) -> Result<GamesTable> {
    let mut records = Vec::new();
    let mut declared: BTreeMap<u16, String> = BTreeMap::new();
    let mut mismatched: Vec<(usize, u16, u32, u32)> = Vec::new();

    for line in tsv::lines(text) {
        match line {
            Line::Directive { number, name, args } => {
                if name != TOTAL_EXCEPTION {
                    return Err(parse_error(number, format!("unknown directive @{name}")));
                }
                tsv::expect_args(number, name, &args, 1)?;
                let year = args[0]
                    .parse()
                    .map_err(|_| parse_error(number, format!("bad year {:?}", args[0])))?;
                declared.insert(year, args.get(1).copied().unwrap_or_default().to_string());
            }
            Line::Record { number, fields } => {
                if fields[0].eq_ignore_ascii_case("host") {
                    continue;
                }
                if fields.len() != COLUMNS.len() {
                    return Err(parse_error(
                        number,
                        format!("expected {} fields, found {}", COLUMNS.len(), fields.len()),
                    ));
                }
                let num = |i: usize| tsv::count(number, COLUMNS[i], fields[i]);
                let year =
                    u16::try_from(num(1)?).map_err(|_| parse_error(number, "year out of range"))?;
                let events = num(2)?;
                let norway = MedalCounts::new(num(3)?, num(4)?, num(5)?);
                let total = num(6)?;
                let nations = num(7)?;
                let percent: Tenths = fields[8].parse().map_err(|_| {
                    parse_error(number, format!("column percent: bad value {:?}", fields[8]))
                })?;
                if events == 0 {
                    return Err(Error::Integrity(format!(
                        "line {number}: {year} has zero events"
                    )));
                }
                if total > 3 * events {
                    return Err(Error::Integrity(format!(
                        "line {number}: {year} total {total} exceeds 3 x {events} medal chances"
                    )));
                }
                if norway.total() != total {
                    mismatched.push((number, year, norway.total(), total));
                }
                records.push(GamesRecord {
                    year,
                    host: fields[0].to_string(),
                    events,
                    norway,
                    total,
                    nations,
                    percent,
                });
            }
        }
    }

    for pair in records.windows(2) {
        if pair[1].year == pair[0].year {
            return Err(Error::Integrity(format!("duplicate year {}", pair[1].year)));
        }
        if pair[1].year < pair[0].year {
            return Err(Error::Integrity(format!(
                "years not increasing: {} follows {}",
                pair[1].year, pair[0].year
            )));
        }
    }

    let mut notes = Vec::new();
    for (line, year, colours, total) in mismatched {
        match declared.get(&year) {
            Some(text) => notes.push(DataNote::new(year.to_string(), text.clone())),
            None => {
                return Err(Error::Integrity(format!(
                    "line {line}: {year} gold+silver+bronze = {colours} but total = {total}"
                )))
            }
        }
    }
    Ok(GamesTable { records, notes })
}

/// Whole-history sums over a Games table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HistoricalTotals {
    /// Sum of the printed total column.
    pub medals: u64,
    /// Sum of gold + silver + bronze; differs from `medals` when a row's
    /// printed total disagrees with its colours.
    pub colour_sum: u64,
    pub events: u64,
}

impl HistoricalTotals {
    /// Medals per event, in percent. This divides by events rather than by
    /// the `3m` medal chances, matching how the headline figure is quoted.
    pub fn percent_of_events(&self) -> f64 {
        if self.events == 0 {
            return 0.0;
        }
        100.0 * self.medals as f64 / self.events as f64
    }

    pub fn note(&self) -> Option<DataNote> {
        (self.medals != self.colour_sum).then(|| {
            DataNote::new(
                "medal total",
                format!(
                    "printed totals sum to {} but gold+silver+bronze sum to {}",
                    self.medals, self.colour_sum
                ),
            )
        })
    }
}

pub fn historical_totals(games: &[GamesRecord]) -> HistoricalTotals {
    HistoricalTotals {
        medals: games.iter().map(|g| u64::from(g.total)).sum(),
        colour_sum: games.iter().map(|g| u64::from(g.norway.total())).sum(),
        events: games.iter().map(|g| u64::from(g.events)).sum(),
    }
}

/// Checks the printed percent column against the counts, row by row.
pub fn validate_games(table: &GamesTable) -> ValidationReport {
    let mut report = ValidationReport::default();
    for r in &table.records {
        report.push(Check::compare(
            format!("percent {}", r.year),
            r.percent,
            r.recomputed_percent(),
        ));
    }
    report.notes.extend(table.notes.iter().cloned());
    if let Some(note) = historical_totals(&table.records).note() {
        report.note(note);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::embedded;
    use proptest::prelude::*;

    fn shipped() -> GamesTable {
        parse_games_table(embedded::GAMES_NORWAY).unwrap()
    }

    #[test]
    fn shipped_table_has_25_increasing_games() {
        let t = shipped();
        assert_eq!(t.len(), 25);
        assert!(t.records.windows(2).all(|w| w[0].year < w[1].year));
    }

    #[test]
    fn first_and_last_rows() {
        let t = shipped();
        let first = &t.records[0];
        assert_eq!(
            (
                first.year,
                first.host.as_str(),
                first.events,
                first.norway,
                first.nations
            ),
            (1924, "Chamonix", 16, MedalCounts::new(4, 7, 6), 16)
        );
        assert_eq!(first.percent.to_string(), "35.4");
        let last = t.year(2026).unwrap();
        assert_eq!(
            (last.events, last.norway, last.nations),
            (116, MedalCounts::new(18, 12, 11), 92)
        );
        assert_eq!(last.percent.to_string(), "11.8");
    }

    #[test]
    fn single_line_without_header() {
        let t = parse_games_table("Chamonix\t1924\t16\t4\t7\t6\t17\t16\t35.4").unwrap();
        assert_eq!(t.records[0].total, 17);
    }

    #[test]
    fn empty_input_is_empty_table() {
        assert!(parse_games_table("").unwrap().is_empty());
        assert!(parse_games_table("# only a comment\n").unwrap().is_empty());
    }

    #[test]
    fn malformed_row_names_line() {
        let text = "host\tyear\n# c\nOslo\t1952\t22\n";
        assert!(matches!(
            parse_games_table(text),
            Err(Error::Parse { line: 3, .. })
        ));
        let text = "Oslo\t1952\t22\t7\tthree\t6\t16\t30\t24.2\n";
        assert!(matches!(
            parse_games_table(text),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn duplicate_year_is_integrity_error() {
        let row = "Oslo\t1952\t22\t7\t3\t6\t16\t30\t24.2\n";
        let err = parse_games_table(&format!("{row}{row}")).unwrap_err();
        assert_eq!(err, Error::Integrity("duplicate year 1952".into()));
    }

    #[test]
    fn undeclared_colour_mismatch_is_rejected() {
        let row = "Nagano\t1998\t68\t10\t10\t6\t25\t72\t12.3\n";
        assert!(matches!(parse_games_table(row), Err(Error::Integrity(_))));
        let ok = parse_games_table(&format!("{row}@total-exception\t1998\tknown\n")).unwrap();
        assert_eq!(ok.notes, vec![DataNote::new("1998", "known")]);
    }

    #[test]
    fn percent_column_reproduces_for_every_row() {
        let report = validate_games(&shipped());
        assert_eq!(report.checks.len(), 25);
        assert!(report.checks.iter().all(Check::passed), "{report}");
    }

    #[test]
    fn historical_totals_of_shipped_table() {
        let h = historical_totals(&shipped().records);
        assert_eq!(h.events, 1279);
        assert_eq!(h.medals, 446);
        assert_eq!(h.colour_sum, 447);
        assert_eq!(format!("{:.1}", h.percent_of_events()), "34.9");
        assert!(h.note().is_some());
    }

    #[test]
    fn historical_totals_single_games() {
        let t = shipped();
        let h = historical_totals(&t.records[..1]);
        assert_eq!((h.medals, h.events), (17, 16));
        assert_eq!(format!("{:.1}", h.percent_of_events()), "106.2");
        assert!(h.note().is_none());
    }

    #[test]
    fn shipped_round_trip() {
        let t = shipped();
        assert_eq!(parse_games_table(&t.to_tsv()).unwrap(), t);
    }

    fn arb_record(year: u16) -> impl Strategy<Value = GamesRecord> {
        (1u32..200, "[A-Z][a-z]{1,8}( [A-Z][a-z]{1,8})?", 0u32..300)
            .prop_flat_map(move |(events, host, nations)| {
                let cap = 3 * events;
                (
                    Just(events),
                    Just(host),
                    Just(nations),
                    0..=cap,
                    0..=cap,
                    0..=cap,
                )
                    .prop_filter("fits in medal chances", move |(_, _, _, g, s, b)| {
                        g + s + b <= cap
                    })
            })
            .prop_map(move |(events, host, nations, g, s, b)| {
                let norway = MedalCounts::new(g, s, b);
                let total = norway.total();
                GamesRecord {
                    year,
                    host,
                    events,
                    norway,
                    total,
                    nations,
                    percent: Tenths::from_ratio(total.into(), (3 * events).into()),
                }
            })
    }

    proptest! {
        #[test]
        fn serialize_parse_round_trip(
            records in (1usize..12).prop_flat_map(|n| {
                (0..n).map(|i| arb_record(1900 + 4 * i as u16)).collect::<Vec<_>>()
            })
        ) {
            let table = GamesTable { records, notes: vec![] };
            prop_assert_eq!(parse_games_table(&table.to_tsv()).unwrap(), table);
        }
    }
}
