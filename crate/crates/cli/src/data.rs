//! Loads the shipped tables, or replacements from `--data <dir>`.

use std::borrow::Cow;
use std::fs;
use std::path::PathBuf;

use podium_core::dataset::{
    embedded, parse_games_table, parse_nation_table, parse_population, parse_speedskating,
    GamesTable, NationTable, PopulationTable, Sex, SpeedskatingTable,
};

use crate::CliError;

pub struct DataSource {
    dir: Option<PathBuf>,
}

impl DataSource {
    pub fn new(dir: Option<PathBuf>) -> Self {
        Self { dir }
    }

    fn read(&self, file: &str) -> Result<Cow<'static, str>, CliError> {
        match &self.dir {
            Some(dir) => {
                let path = dir.join(file);
                fs::read_to_string(&path)
                    .map(Cow::Owned)
                    .map_err(|source| CliError::Io { path, source })
            }
            None => Ok(Cow::Borrowed(
                embedded::contents(file).expect("every data file is embedded"),
            )),
        }
    }

    fn parsed<T>(
        &self,
        file: &str,
        parse: impl Fn(&str) -> podium_core::Result<T>,
    ) -> Result<T, CliError> {
        let text = self.read(file)?;
        parse(&text).map_err(|e| CliError::Data {
            file: file.to_string(),
            source: e,
        })
    }

    pub fn games(&self) -> Result<GamesTable, CliError> {
        self.parsed(embedded::GAMES_FILE, parse_games_table)
    }

    pub fn nations(&self) -> Result<NationTable, CliError> {
        self.parsed(embedded::NATIONS_FILE, parse_nation_table)
    }

    pub fn skating(&self, sex: Sex) -> Result<SpeedskatingTable, CliError> {
        let file = match sex {
            Sex::Men => embedded::SKATING_MEN_FILE,
            Sex::Ladies => embedded::SKATING_LADIES_FILE,
        };
        self.parsed(file, |text| parse_speedskating(text, sex))
    }

    pub fn population(&self) -> Result<PopulationTable, CliError> {
        self.parsed(embedded::POPULATION_FILE, parse_population)
    }
}
