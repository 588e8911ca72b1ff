//! Two-column population table.

use std::collections::BTreeSet;

use super::tsv::{self, parse_error, Line};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PopulationTable {
    pub entries: Vec<(String, u64)>,
}

impl PopulationTable {
    pub fn get(&self, code: &str) -> Option<u64> {
        self.entries
            .iter()
            .find(|(c, _)| c == code)
            .map(|&(_, p)| p)
    }
}

/// Parses `code<TAB>population` rows under a `code population` header.
pub fn parse_population(text: &str) -> Result<PopulationTable> {
    let mut table = PopulationTable::default();
    let mut seen = BTreeSet::new();
    let mut header = false;
    for line in tsv::lines(text) {
        let (number, fields) = match line {
            Line::Record { number, fields } => (number, fields),
            Line::Directive { number, name, .. } => {
                return Err(parse_error(number, format!("unknown directive @{name}")));
            }
        };
        if !header {
            if fields != ["code", "population"] {
                return Err(parse_error(number, "expected header `code<TAB>population`"));
            }
            header = true;
            continue;
        }
        let [code, raw] = fields[..] else {
            return Err(parse_error(
                number,
                format!("expected 2 fields, found {}", fields.len()),
            ));
        };
        let population: u64 = raw.parse().map_err(|_| {
            parse_error(
                number,
                format!("population: expected an integer, found {raw:?}"),
            )
        })?;
        if population == 0 {
            return Err(Error::Integrity(format!(
                "line {number}: {code} has zero population"
            )));
        }
        let code = code.to_ascii_uppercase();
        if !seen.insert(code.clone()) {
            return Err(Error::Integrity(format!(
                "line {number}: duplicate nation {code}"
            )));
        }
        table.entries.push((code, population));
    }
    if !header {
        return Err(parse_error(0, "missing header"));
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::embedded;

    #[test]
    fn shipped_populations() {
        let t = parse_population(embedded::POPULATION).unwrap();
        assert_eq!(t.get("LIE"), Some(37_531));
        assert_eq!(t.get("NOR"), Some(5_195_921));
        assert_eq!(t.get("SWE"), None);
    }

    #[test]
    fn rejects_bad_rows() {
        assert!(parse_population("code\tpopulation\nNOR\t0\n").is_err());
        assert!(parse_population("code\tpopulation\nNOR\t5\nnor\t6\n").is_err());
        assert!(parse_population("code\tpopulation\nNOR\tmany\n").is_err());
        assert!(parse_population("nation\tpeople\n").is_err());
        assert!(parse_population("").is_err());
    }
}
