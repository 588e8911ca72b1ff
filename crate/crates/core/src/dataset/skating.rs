//! Long-track speedskating medal tables by nation and Games.
//!
//! File layout: a `year` row naming the nation columns, a `total` row with
//! the printed per-nation totals, then one row per Games. Blank cells are
//! zero. Two directives may follow:
//!
//! * `@reassign<TAB>year<TAB>from<TAB>to<TAB>count<TAB>note` marks medals
//!   that the table lumps under `from` but that belong to `to`.
//! * `@discrepancy<TAB>code<TAB>note` declares that a column's year rows do
//!   not add up to its printed total.

use std::fmt;
use std::fmt::Write as _;

use super::report::{Check, DataNote, ValidationReport};
use super::tsv::{self, parse_error, Line};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sex {
    Men,
    Ladies,
}

impl fmt::Display for Sex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sex::Men => "men",
            Sex::Ladies => "ladies",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkatingYear {
    pub year: u16,
    /// One count per nation column.
    pub counts: Vec<u32>,
}

/// Medals printed under one nation that are attributed to another when
/// nations are split.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reassignment {
    pub year: u16,
    pub from: String,
    pub to: String,
    pub count: u32,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpeedskatingTable {
    pub sex: Sex,
    /// Upper-case nation codes in column order.
    pub nations: Vec<String>,
    pub header_totals: Vec<u32>,
    pub rows: Vec<SkatingYear>,
    pub reassignments: Vec<Reassignment>,
    /// Declared column-sum discrepancies, keyed by nation code.
    pub discrepancies: Vec<DataNote>,
}

impl SpeedskatingTable {
    pub fn column(&self, code: &str) -> Option<usize> {
        self.nations
            .iter()
            .position(|c| c.eq_ignore_ascii_case(code))
    }

    pub fn column_sum(&self, index: usize) -> u32 {
        self.rows.iter().map(|r| r.counts[index]).sum()
    }

    /// Printed total for a nation; zero for nations absent from the table.
    pub fn total(&self, code: &str) -> u32 {
        self.column(code).map_or(0, |i| self.header_totals[i])
    }

    pub fn cell(&self, year: u16, code: &str) -> Option<u32> {
        let col = self.column(code)?;
        self.rows
            .iter()
            .find(|r| r.year == year)
            .map(|r| r.counts[col])
    }

    /// Column sums against printed totals, with declared discrepancies
    /// reported as documented.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        for (i, code) in self.nations.iter().enumerate() {
            let mut check = Check::compare(
                format!("{} {code} column sum", self.sex),
                self.header_totals[i],
                self.column_sum(i),
            );
            if let Some(note) = self.discrepancies.iter().find(|n| &n.key == code) {
                check = check.documented(note.text.clone());
            }
            report.push(check);
        }
        for r in &self.reassignments {
            report.note(DataNote::new(
                format!("{} {} {}", self.sex, r.year, r.from),
                format!(
                    "{} medal(s) attributed to {} when split: {}",
                    r.count, r.to, r.note
                ),
            ));
        }
        report
    }

    pub fn to_tsv(&self) -> String {
        let lower: Vec<String> = self.nations.iter().map(|c| c.to_lowercase()).collect();
        let mut out = format!("year\t{}\n", lower.join("\t"));
        let totals: Vec<String> = self.header_totals.iter().map(u32::to_string).collect();
        let _ = writeln!(out, "total\t{}", totals.join("\t"));
        for r in &self.rows {
            let cells: Vec<String> = r
                .counts
                .iter()
                .map(|&c| if c == 0 { String::new() } else { c.to_string() })
                .collect();
            let _ = writeln!(out, "{}\t{}", r.year, cells.join("\t"));
        }
        for r in &self.reassignments {
            let _ = writeln!(
                out,
                "@reassign\t{}\t{}\t{}\t{}\t{}",
                r.year,
                r.from.to_lowercase(),
                r.to.to_lowercase(),
                r.count,
                r.note
            );
        }
        for d in &self.discrepancies {
            let _ = writeln!(out, "@discrepancy\t{}\t{}", d.key.to_lowercase(), d.text);
        }
        out
    }
}

/// Parses a speedskating table and checks every column against its printed
/// total. An undeclared mismatch is an integrity error naming the nation.
pub fn parse_speedskating(text: &str, sex: Sex) -> Result<SpeedskatingTable> {
    let mut nations: Option<Vec<String>> = None;
    let mut header_totals: Option<Vec<u32>> = None;
    let mut rows: Vec<SkatingYear> = Vec::new();
    let mut reassignments = Vec::new();
    let mut discrepancies = Vec::new();

    for line in tsv::lines(text) {
        match line {
            Line::Directive { number, name, args } => match name {
                "reassign" => {
                    tsv::expect_args(number, name, &args, 4)?;
                    let year = args[0]
                        .parse()
                        .map_err(|_| parse_error(number, format!("bad year {:?}", args[0])))?;
                    reassignments.push(Reassignment {
                        year,
                        from: args[1].to_uppercase(),
                        to: args[2].to_uppercase(),
                        count: tsv::count(number, "count", args[3])?,
                        note: args.get(4).copied().unwrap_or_default().to_string(),
                    });
                }
                "discrepancy" => {
                    tsv::expect_args(number, name, &args, 1)?;
                    discrepancies.push(DataNote::new(
                        args[0].to_uppercase(),
                        args.get(1).copied().unwrap_or_default(),
                    ));
                }
                _ => return Err(parse_error(number, format!("unknown directive @{name}"))),
            },
            Line::Record { number, fields } => {
                let Some(codes) = &nations else {
                    let codes: Vec<String> = fields
                        .iter()
                        .skip_while(|f| f.is_empty() || f.eq_ignore_ascii_case("year"))
                        .map(|c| c.to_uppercase())
                        .collect();
                    if codes.is_empty() || codes.iter().any(|c| c.is_empty()) {
                        return Err(parse_error(number, "expected a row of nation codes"));
                    }
                    nations = Some(codes);
                    continue;
                };
                // First cell is the row label: `total` (or blank) for the
                // totals row, the year otherwise.
                let cells = &fields[1..];
                if cells.len() > codes.len() && cells[codes.len()..].iter().any(|c| !c.is_empty()) {
                    return Err(parse_error(
                        number,
                        format!("{} cells for {} nations", cells.len(), codes.len()),
                    ));
                }
                let parse_cells = |sparse: bool| -> Result<Vec<u32>> {
                    codes
                        .iter()
                        .enumerate()
                        .map(|(i, code)| {
                            let raw = cells.get(i).copied().unwrap_or_default();
                            if sparse {
                                tsv::sparse_count(number, code, raw)
                            } else {
                                tsv::count(number, code, raw)
                            }
                        })
                        .collect()
                };
                if header_totals.is_none() {
                    if !(fields[0].is_empty() || fields[0].eq_ignore_ascii_case("total")) {
                        return Err(parse_error(number, "expected the totals row"));
                    }
                    header_totals = Some(parse_cells(false)?);
                    continue;
                }
                let year: u16 = fields[0]
                    .parse()
                    .map_err(|_| parse_error(number, format!("bad year {:?}", fields[0])))?;
                if rows.iter().any(|r| r.year == year) {
                    return Err(Error::Integrity(format!("duplicate year {year}")));
                }
                rows.push(SkatingYear {
                    year,
                    counts: parse_cells(true)?,
                });
            }
        }
    }

    let nations = nations.ok_or_else(|| parse_error(0, "missing nation code row"))?;
    let header_totals = header_totals.ok_or_else(|| parse_error(0, "missing totals row"))?;
    let table = SpeedskatingTable {
        sex,
        nations,
        header_totals,
        rows,
        reassignments,
        discrepancies,
    };

    for (i, code) in table.nations.iter().enumerate() {
        let sum = table.column_sum(i);
        let printed = table.header_totals[i];
        if sum != printed && !table.discrepancies.iter().any(|d| &d.key == code) {
            return Err(Error::Integrity(format!(
                "{sex} {code}: year rows sum to {sum} but printed total is {printed}"
            )));
        }
    }
    for r in &table.reassignments {
        let available = table.cell(r.year, &r.from).ok_or_else(|| {
            Error::Integrity(format!(
                "reassignment refers to missing cell {} {}",
                r.year, r.from
            ))
        })?;
        if available < r.count {
            return Err(Error::Integrity(format!(
                "reassignment moves {} medal(s) from {} {} which holds {available}",
                r.count, r.from, r.year
            )));
        }
    }
    Ok(table)
}

/// How medals flagged by `@reassign` are counted when combining tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Attribution {
    /// Count them where the table prints them.
    Lumped,
    /// Move them to the nation they belong to.
    #[default]
    Split,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombinedSpeedskatingRow {
    pub code: String,
    pub men: u32,
    pub ladies: u32,
    pub total: u32,
}

impl fmt::Display for CombinedSpeedskatingRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<4} {:>3} + {:>2} = {:>3}",
            self.code, self.men, self.ladies, self.total
        )
    }
}

fn attributed_totals(table: &SpeedskatingTable, mode: Attribution) -> Vec<(String, u32)> {
    let mut totals: Vec<(String, u32)> = table
        .nations
        .iter()
        .cloned()
        .zip(table.header_totals.iter().copied())
        .collect();
    if mode == Attribution::Split {
        for r in &table.reassignments {
            if let Some(from) = totals.iter_mut().find(|(c, _)| *c == r.from) {
                from.1 -= r.count;
            }
            match totals.iter_mut().find(|(c, _)| *c == r.to) {
                Some(to) => to.1 += r.count,
                None => totals.push((r.to.clone(), r.count)),
            }
        }
    }
    totals
}

/// Combines the men's and ladies' printed totals per nation.
///
/// Rows are sorted by combined total, then by men's medals, then by code.
pub fn aggregate_speedskating(
    men: &SpeedskatingTable,
    ladies: &SpeedskatingTable,
    mode: Attribution,
) -> Vec<CombinedSpeedskatingRow> {
    let men_totals = attributed_totals(men, mode);
    let ladies_totals = attributed_totals(ladies, mode);
    let mut codes: Vec<&String> = Vec::new();
    for (code, _) in men_totals.iter().chain(&ladies_totals) {
        if !codes.contains(&code) {
            codes.push(code);
        }
    }
    let lookup = |list: &[(String, u32)], code: &str| {
        list.iter().find(|(c, _)| c == code).map_or(0, |(_, n)| *n)
    };
    let mut rows: Vec<CombinedSpeedskatingRow> = codes
        .into_iter()
        .map(|code| {
            let m = lookup(&men_totals, code);
            let l = lookup(&ladies_totals, code);
            CombinedSpeedskatingRow {
                code: code.clone(),
                men: m,
                ladies: l,
                total: m + l,
            }
        })
        .collect();
    rows.sort_by(|a, b| {
        b.total
            .cmp(&a.total)
            .then(b.men.cmp(&a.men))
            .then(a.code.cmp(&b.code))
    });
    rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::embedded;

    fn men() -> SpeedskatingTable {
        parse_speedskating(embedded::SPEEDSKATING_MEN, Sex::Men).unwrap()
    }

    fn ladies() -> SpeedskatingTable {
        parse_speedskating(embedded::SPEEDSKATING_LADIES, Sex::Ladies).unwrap()
    }

    #[test]
    fn column_counts() {
        assert_eq!(men().nations.len(), 19);
        assert_eq!(ladies().nations.len(), 17);
        assert_eq!(men().rows.len(), 25);
        assert_eq!(ladies().rows.len(), 18);
    }

    #[test]
    fn header_totals() {
        assert_eq!(men().total("NOR"), 85);
        assert_eq!(men().column_sum(men().column("nor").unwrap()), 85);
        assert_eq!(ladies().total("GER"), 61);
        assert_eq!(ladies().column_sum(ladies().column("GER").unwrap()), 61);
    }

    #[test]
    fn first_data_row() {
        let m = men();
        assert_eq!(m.rows[0].year, 1924);
        assert_eq!(m.cell(1924, "NOR"), Some(6));
        assert_eq!(m.cell(1924, "USA"), Some(1));
        assert_eq!(m.cell(1924, "FIN"), Some(6));
        assert_eq!(m.rows[0].counts.iter().sum::<u32>(), 13);
    }

    #[test]
    fn undeclared_column_mismatch_names_nation() {
        let text: String = embedded::SPEEDSKATING_MEN
            .lines()
            .filter(|l| !l.starts_with("@discrepancy\tsov"))
            .map(|l| format!("{l}\n"))
            .collect();
        let err = parse_speedskating(&text, Sex::Men).unwrap_err();
        assert!(err.to_string().contains("SOV"), "{err}");
    }

    #[test]
    fn declared_discrepancies_are_documented() {
        let m = men().validate();
        let l = ladies().validate();
        assert!(m.ok() && l.ok());
        let documented: Vec<_> = m
            .documented()
            .chain(l.documented())
            .map(|c| c.name.clone())
            .collect();
        assert_eq!(
            documented,
            vec![
                "men SOV column sum",
                "men BLR column sum",
                "ladies CZE column sum"
            ]
        );
        assert_eq!(m.checks.iter().filter(|c| c.passed()).count(), 17);
        assert_eq!(l.checks.iter().filter(|c| c.passed()).count(), 16);
        assert_eq!(l.notes.len(), 1);
    }

    #[test]
    fn blank_row_cells_are_zero() {
        let l = ladies();
        assert_eq!(l.cell(1964, "NED"), Some(0));
        assert_eq!(l.cell(1964, "SOV"), Some(10));
        assert_eq!(l.cell(1964, "KOR"), Some(1));
    }

    #[test]
    fn combined_split_mode() {
        let rows = aggregate_speedskating(&men(), &ladies(), Attribution::Split);
        let get = |c: &str| rows.iter().find(|r| r.code == c).cloned().unwrap();
        assert_eq!(
            (get("NED").men, get("NED").ladies, get("NED").total),
            (86, 60, 146)
        );
        assert_eq!(
            (get("SWE").men, get("SWE").ladies, get("SWE").total),
            (18, 0, 18)
        );
        assert_eq!(
            (get("DEN").men, get("DEN").ladies, get("DEN").total),
            (1, 0, 1)
        );
        assert_eq!((get("KOR").men, get("KOR").ladies), (16, 4));
        assert_eq!((get("NKR").men, get("NKR").ladies), (0, 1));
        assert_eq!(rows.len(), 21);
        assert_eq!(rows[0].to_string(), "NED   86 + 60 = 146");
    }

    #[test]
    fn combined_lumped_mode() {
        let rows = aggregate_speedskating(&men(), &ladies(), Attribution::Lumped);
        assert_eq!(rows.len(), 20);
        let kor = rows.iter().find(|r| r.code == "KOR").unwrap();
        assert_eq!((kor.men, kor.ladies, kor.total), (16, 5, 21));
        assert!(rows.iter().all(|r| r.code != "NKR"));
    }

    #[test]
    fn combined_rows_sorted_and_consistent() {
        for mode in [Attribution::Split, Attribution::Lumped] {
            let rows = aggregate_speedskating(&men(), &ladies(), mode);
            assert!(rows.windows(2).all(|w| w[0].total >= w[1].total));
            assert!(rows.iter().all(|r| r.total == r.men + r.ladies));
        }
    }

    #[test]
    fn reassignment_beyond_cell_rejected() {
        let text = "year\tkor\ntotal\t1\n1964\t1\n@reassign\t1964\tkor\tnkr\t2\tx\n";
        assert!(matches!(
            parse_speedskating(text, Sex::Ladies),
            Err(Error::Integrity(_))
        ));
    }

    #[test]
    fn round_trip() {
        for t in [men(), ladies()] {
            assert_eq!(parse_speedskating(&t.to_tsv(), t.sex).unwrap(), t);
        }
    }
}
