//! Line-level reader shared by the table parsers.
//!
//! Fields are tab separated. Blank lines and lines starting with `#` are
//! skipped. Lines starting with `@` are directives that declare known
//! irregularities in the printed source tables.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Line<'a> {
    Record {
        number: usize,
        fields: Vec<&'a str>,
    },
    Directive {
        number: usize,
        name: &'a str,
        args: Vec<&'a str>,
    },
}

pub(crate) fn lines(text: &str) -> impl Iterator<Item = Line<'_>> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let raw = raw.strip_suffix('\r').unwrap_or(raw);
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            return None;
        }
        let number = i + 1;
        if let Some(rest) = trimmed.strip_prefix('@') {
            let mut parts = rest.split('\t').map(str::trim);
            let name = parts.next().unwrap_or_default();
            return Some(Line::Directive {
                number,
                name,
                args: parts.collect(),
            });
        }
        Some(Line::Record {
            number,
            fields: raw.split('\t').map(str::trim).collect(),
        })
    })
}

pub(crate) fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parses a required nonnegative integer cell.
pub(crate) fn count(line: usize, column: &str, raw: &str) -> Result<u32> {
    let value: i64 = raw.parse().map_err(|_| {
        parse_error(
            line,
            format!("column {column}: expected an integer, found {raw:?}"),
        )
    })?;
    if value < 0 {
        return Err(Error::Integrity(format!(
            "line {line}: column {column} is negative ({value})"
        )));
    }
    u32::try_from(value)
        .map_err(|_| parse_error(line, format!("column {column}: {value} out of range")))
}

/// Like [`count`] but a blank cell reads as zero.
pub(crate) fn sparse_count(line: usize, column: &str, raw: &str) -> Result<u32> {
    if raw.is_empty() {
        Ok(0)
    } else {
        count(line, column, raw)
    }
}

pub(crate) fn expect_args(line: usize, name: &str, args: &[&str], at_least: usize) -> Result<()> {
    if args.len() < at_least {
        return Err(parse_error(
            line,
            format!(
                "@{name} expects at least {at_least} fields, found {}",
                args.len()
            ),
        ));
    }
    Ok(())
}
