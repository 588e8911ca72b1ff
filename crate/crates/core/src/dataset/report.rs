use std::fmt;

/// A known irregularity in a source table, declared alongside the data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DataNote {
    pub key: String,
    pub text: String,
}

impl DataNote {
    pub fn new(key: impl Into<String>, text: impl Into<String>) -> Self {
        Self {
            key: key.into(),
            text: text.into(),
        }
    }
}

impl fmt::Display for DataNote {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.key, self.text)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    /// The check does not hold, for a reason declared with the data.
    Documented(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub outcome: Outcome,
}

impl Check {
    pub fn compare<T: PartialEq + fmt::Display>(
        name: impl Into<String>,
        expected: T,
        actual: T,
    ) -> Self {
        let outcome = if expected == actual {
            Outcome::Pass
        } else {
            Outcome::Fail
        };
        Self {
            name: name.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            outcome,
        }
    }

    pub fn documented(mut self, note: impl Into<String>) -> Self {
        if self.outcome == Outcome::Fail {
            self.outcome = Outcome::Documented(note.into());
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }
}

/// Outcome of a batch of integrity checks. Failures are carried, not raised.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
    pub notes: Vec<DataNote>,
}

impl ValidationReport {
    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn note(&mut self, note: DataNote) {
        self.notes.push(note);
    }

    pub fn extend(&mut self, other: ValidationReport) {
        self.checks.extend(other.checks);
        self.notes.extend(other.notes);
    }

    /// True when every check passes or fails only for a documented reason.
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.outcome != Outcome::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.outcome == Outcome::Fail)
    }

    pub fn documented(&self) -> impl Iterator<Item = &Check> {
        self.checks
            .iter()
            .filter(|c| matches!(c.outcome, Outcome::Documented(_)))
    }

    pub fn find(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.outcome {
                Outcome::Pass => writeln!(f, "PASS  {}: {}", c.name, c.actual)?,
                Outcome::Fail => writeln!(
                    f,
                    "FAIL  {}: expected {}, found {}",
                    c.name, c.expected, c.actual
                )?,
                Outcome::Documented(why) => writeln!(
                    f,
                    "NOTE  {}: expected {}, found {} ({why})",
                    c.name, c.expected, c.actual
                )?,
            }
        }
        for n in &self.notes {
            writeln!(f, "NOTE  {n}")?;
        }
        Ok(())
    }
}
