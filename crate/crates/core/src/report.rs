use std::fmt;

use serde::{Deserialize, Serialize};

/// The outcome of one named check, with a witness when it fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Outcome {
    pub name: String,
    pub passed: bool,
    pub witness: Option<String>,
}

impl Outcome {
    pub fn pass(name: impl Into<String>) -> Self {
        Outcome { name: name.into(), passed: true, witness: None }
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> Self {
        Outcome { name: name.into(), passed: false, witness: Some(witness.into()) }
    }

    /// Passes when `first_failure` is `None`.
    pub fn from_witness(name: impl Into<String>, first_failure: Option<String>) -> Self {
        match first_failure {
            None => Outcome::pass(name),
            Some(w) => Outcome::fail(name, w),
        }
    }
}

/// A list of outcomes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub outcomes: Vec<Outcome>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, outcome: Outcome) {
        self.outcomes.push(outcome);
    }

    /// Records a check given as the first failing witness, if any.
    pub fn check(&mut self, name: &str, first_failure: Option<String>) {
        self.push(Outcome::from_witness(name, first_failure));
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.outcomes.extend(other.outcomes);
    }

    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Outcome> {
        self.outcomes.iter().filter(|o| !o.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Outcome> {
        self.outcomes.iter().find(|o| o.name == name)
    }

    pub fn passed(&self, name: &str) -> Option<bool> {
        self.get(name).map(|o| o.passed)
    }

    /// The first failure rendered as `name: witness`.
    pub fn first_failure(&self) -> Option<String> {
        self.failures()
            .next()
            .map(|o| format!("{}: {}", o.name, o.witness.as_deref().unwrap_or("")))
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in &self.outcomes {
            match &o.witness {
                None => writeln!(f, "pass  {}", o.name)?,
                Some(w) => writeln!(f, "FAIL  {}  [{}]", o.name, w)?,
            }
        }
        Ok(())
    }
}

/// Returns the first item for which `bad` produces a description.
pub(crate) fn first<T>(items: impl IntoIterator<Item = T>, bad: impl FnMut(T) -> Option<String>) -> Option<String> {
    items.into_iter().find_map(bad)
}
