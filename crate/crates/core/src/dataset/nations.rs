//! One Games' medal table with Olympic Points.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::medals::{MedalCounts, Points};
use super::report::{Check, DataNote, ValidationReport};
use super::tsv::{self, parse_error, Line};
use crate::error::{Error, Result};

const COLUMNS: [&str; 8] = [
    "rank", "code", "gold", "silver", "bronze", "total", "op", "op_rank",
];
const RANK_EXCEPTION: &str = "rank-exception";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NationRow {
    /// Medal-table rank as printed; `None` where the printed cell is blank
    /// (a tie with the row above, or a nation without medals).
    pub rank: Option<u32>,
    pub code: String,
    pub medals: MedalCounts,
    pub olympic_points: Points,
    pub op_rank: u32,
}

impl NationRow {
    /// Points earned by medals alone under 7-5-4. Placements 4-6 can only add
    /// to this, so it bounds the printed Olympic Points from below.
    pub fn medal_points_floor(&self) -> Points {
        let m = self.medals;
        Points::whole(7 * m.gold + 5 * m.silver + 4 * m.bronze)
    }
}

/// Column sums of a nation table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColumnTotals {
    pub gold: u32,
    pub silver: u32,
    pub bronze: u32,
    pub total: u32,
    pub olympic_points: Points,
}

impl ColumnTotals {
    /// The totals line printed under the 2026 table.
    pub const WINTER_2026: ColumnTotals = ColumnTotals {
        gold: 116,
        silver: 118,
        bronze: 115,
        total: 349,
        olympic_points: Points::whole(2552),
    };

    pub fn of(rows: &[NationRow]) -> Self {
        Self {
            gold: rows.iter().map(|r| r.medals.gold).sum(),
            silver: rows.iter().map(|r| r.medals.silver).sum(),
            bronze: rows.iter().map(|r| r.medals.bronze).sum(),
            total: rows.iter().map(|r| r.medals.total()).sum(),
            olympic_points: rows.iter().map(|r| r.olympic_points).sum(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NationTable {
    pub rows: Vec<NationRow>,
    /// The `total` line, when the file carries one.
    pub printed_totals: Option<ColumnTotals>,
    /// Declared op_rank irregularities, keyed by nation code.
    pub rank_exceptions: Vec<DataNote>,
}

impl NationTable {
    pub fn get(&self, code: &str) -> Option<&NationRow> {
        self.rows.iter().find(|r| r.code == code)
    }

    pub fn medal_winners(&self) -> impl Iterator<Item = &NationRow> {
        self.rows.iter().filter(|r| !r.medals.is_empty())
    }

    pub fn to_tsv(&self) -> String {
        let mut out = COLUMNS.join("\t");
        out.push('\n');
        for r in &self.rows {
            let rank = r.rank.map(|x| x.to_string()).unwrap_or_default();
            if r.medals.is_empty() {
                let _ = writeln!(
                    out,
                    "{rank}\t{}\t\t\t\t\t{}\t{}",
                    r.code, r.olympic_points, r.op_rank
                );
            } else {
                let m = r.medals;
                let _ = writeln!(
                    out,
                    "{rank}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    r.code,
                    m.gold,
                    m.silver,
                    m.bronze,
                    m.total(),
                    r.olympic_points,
                    r.op_rank
                );
            }
        }
        if let Some(t) = &self.printed_totals {
            let _ = writeln!(
                out,
                "total\t\t{}\t{}\t{}\t{}\t{}\t",
                t.gold, t.silver, t.bronze, t.total, t.olympic_points
            );
        }
        for n in &self.rank_exceptions {
            let _ = writeln!(out, "@{RANK_EXCEPTION}\t{}\t{}", n.key, n.text);
        }
        out
    }
}

fn parse_points(line: usize, column: &str, raw: &str) -> Result<Points> {
    raw.parse()
        .map_err(|_| parse_error(line, format!("column {column}: bad points value {raw:?}")))
}

/// Parses a nation table.
///
/// Columns: rank, code, gold, silver, bronze, total, op, op_rank. Nations
/// that scored Olympic Points without medals leave the four medal cells
/// blank. A row whose first cell is `total` holds the printed column sums.
pub fn parse_nation_table(text: &str) -> Result<NationTable> {
    let mut table = NationTable::default();
    for line in tsv::lines(text) {
        let (number, mut fields) = match line {
            Line::Directive { number, name, args } => {
                if name != RANK_EXCEPTION {
                    return Err(parse_error(number, format!("unknown directive @{name}")));
                }
                tsv::expect_args(number, name, &args, 1)?;
                table.rank_exceptions.push(DataNote::new(
                    args[0],
                    args.get(1).copied().unwrap_or_default(),
                ));
                continue;
            }
            Line::Record { number, fields } => (number, fields),
        };
        if fields[0] == "rank" {
            continue;
        }
        if fields.len() > COLUMNS.len() {
            return Err(parse_error(
                number,
                format!(
                    "expected at most {} fields, found {}",
                    COLUMNS.len(),
                    fields.len()
                ),
            ));
        }
        fields.resize(COLUMNS.len(), "");
        let col = |i: usize| tsv::count(number, COLUMNS[i], fields[i]);

        if fields[0] == "total" {
            table.printed_totals = Some(ColumnTotals {
                gold: col(2)?,
                silver: col(3)?,
                bronze: col(4)?,
                total: col(5)?,
                olympic_points: parse_points(number, "op", fields[6])?,
            });
            continue;
        }

        let rank = if fields[0].is_empty() {
            None
        } else {
            Some(col(0)?)
        };
        let code = fields[1];
        if code.is_empty() {
            return Err(parse_error(number, "missing nation code"));
        }
        let medal_cells = &fields[2..6];
        let medals = if medal_cells.iter().all(|c| c.is_empty()) {
            MedalCounts::default()
        } else if medal_cells.iter().any(|c| c.is_empty()) {
            return Err(parse_error(
                number,
                "medal columns must be all filled or all blank",
            ));
        } else {
            let m = MedalCounts::new(col(2)?, col(3)?, col(4)?);
            let total = col(5)?;
            if m.total() != total {
                return Err(Error::Integrity(format!(
                    "line {number}: {code} medals add to {} but total = {total}",
                    m.total()
                )));
            }
            m
        };
        let row = NationRow {
            rank,
            code: code.to_string(),
            medals,
            olympic_points: parse_points(number, "op", fields[6])?,
            op_rank: col(7)?,
        };
        if row.olympic_points < row.medal_points_floor() {
            return Err(Error::Integrity(format!(
                "line {number}: {code} has {} Olympic Points, below its medal floor {}",
                row.olympic_points,
                row.medal_points_floor()
            )));
        }
        if let Some(prev) = table.rows.last() {
            if prev.medals.total() < row.medals.total() {
                return Err(Error::Integrity(format!(
                    "line {number}: {code} has more medals than the row above; rows must be sorted by total"
                )));
            }
        }
        table.rows.push(row);
    }
    Ok(table)
}

/// Compares column sums against expected totals. Mismatches are reported,
/// never raised.
pub fn validate_totals(rows: &[NationRow], expected: &ColumnTotals) -> ValidationReport {
    let got = ColumnTotals::of(rows);
    let mut report = ValidationReport::default();
    report.push(Check::compare("gold sum", expected.gold, got.gold));
    report.push(Check::compare("silver sum", expected.silver, got.silver));
    report.push(Check::compare("bronze sum", expected.bronze, got.bronze));
    report.push(Check::compare("medal sum", expected.total, got.total));
    report.push(Check::compare(
        "OP sum",
        expected.olympic_points,
        got.olympic_points,
    ));
    report
}

/// Recomputes competition ranks ("1224" ties) from the Olympic Points column
/// and compares them with the printed op_rank column.
pub fn validate_op_ranks(table: &NationTable) -> ValidationReport {
    let declared: BTreeMap<&str, &str> = table
        .rank_exceptions
        .iter()
        .map(|n| (n.key.as_str(), n.text.as_str()))
        .collect();
    let mut report = ValidationReport::default();
    for row in &table.rows {
        let better = table
            .rows
            .iter()
            .filter(|o| o.olympic_points > row.olympic_points)
            .count();
        let computed = better as u32 + 1;
        let mut check = Check::compare(format!("op_rank {}", row.code), row.op_rank, computed);
        if let Some(why) = declared.get(row.code.as_str()) {
            check = check.documented(*why);
        }
        report.push(check);
    }
    report
}
