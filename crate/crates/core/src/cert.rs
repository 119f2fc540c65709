use serde::Serialize;
use std::fmt;

/// One named verdict, with a witness when it fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check { name: name.into(), pass: true, witness: None }
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> Self {
        Check { name: name.into(), pass: false, witness: Some(witness.into()) }
    }

    pub fn from_option(name: impl Into<String>, counterexample: Option<String>) -> Self {
        match counterexample {
            None => Check::pass(name),
            Some(w) => Check::fail(name, w),
        }
    }
}

/// A list of verdicts about one subject.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub subject: String,
    pub checks: Vec<Check>,
}

impl Certificate {
    pub fn new(subject: impl Into<String>) -> Self {
        Certificate { subject: subject.into(), checks: Vec::new() }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn record(&mut self, name: impl Into<String>, counterexample: Option<String>) -> bool {
        let c = Check::from_option(name, counterexample);
        let ok = c.pass;
        self.checks.push(c);
        ok
    }

    pub fn extend(&mut self, prefix: &str, other: Certificate) {
        for mut c in other.checks {
            if !prefix.is_empty() {
                c.name = format!("{prefix}: {}", c.name);
            }
            self.checks.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn verdict(&self, name: &str) -> Option<bool> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.failures().next()
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.subject)?;
        for c in &self.checks {
            let mark = if c.pass { "pass" } else { "FAIL" };
            match &c.witness {
                Some(w) => writeln!(f, "  [{mark}] {} -- {w}", c.name)?,
                None => writeln!(f, "  [{mark}] {}", c.name)?,
            }
        }
        Ok(())
    }
}
