//! The embedded source tables, their parsers, and integrity checks.

mod games;
mod medals;
mod nations;
mod population;
mod report;
mod skating;
pub(crate) mod tsv;

pub use games::{
    historical_totals, parse_games_table, validate_games, GamesRecord, GamesTable, HistoricalTotals,
};
pub use medals::{MedalCounts, Points, Tenths};
pub use nations::{
    parse_nation_table, validate_op_ranks, validate_totals, ColumnTotals, NationRow, NationTable,
};
pub use population::{parse_population, PopulationTable};
pub use report::{Check, DataNote, Outcome, ValidationReport};
pub use skating::{
    aggregate_speedskating, parse_speedskating, Attribution, CombinedSpeedskatingRow, Reassignment,
    Sex, SkatingYear, SpeedskatingTable,
};

/// Source tables compiled into the binary. File names match the layout
/// expected under a `--data` directory.
pub mod embedded {
    pub const GAMES_FILE: &str = "games_norway.tsv";
    pub const NATIONS_FILE: &str = "nations_2026.tsv";
    pub const SKATING_MEN_FILE: &str = "speedskating_men.tsv";
    pub const SKATING_LADIES_FILE: &str = "speedskating_ladies.tsv";
    pub const POPULATION_FILE: &str = "population.tsv";

    pub const GAMES_NORWAY: &str = include_str!("../../data/games_norway.tsv");
    pub const NATIONS_2026: &str = include_str!("../../data/nations_2026.tsv");
    pub const SPEEDSKATING_MEN: &str = include_str!("../../data/speedskating_men.tsv");
    pub const SPEEDSKATING_LADIES: &str = include_str!("../../data/speedskating_ladies.tsv");
    pub const POPULATION: &str = include_str!("../../data/population.tsv");

    /// Embedded contents for a data file name.
    pub fn contents(file: &str) -> Option<&'static str> {
        match file {
            GAMES_FILE => Some(GAMES_NORWAY),
            NATIONS_FILE => Some(NATIONS_2026),
            SKATING_MEN_FILE => Some(SPEEDSKATING_MEN),
            SKATING_LADIES_FILE => Some(SPEEDSKATING_LADIES),
            POPULATION_FILE => Some(POPULATION),
            _ => None,
        }
    }
}
