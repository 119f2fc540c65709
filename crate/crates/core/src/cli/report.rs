use crate::cert::{Certificate, Check};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt::Write;
use std::time::Duration;

/// One subject of a report: a structure, a monad or a suite.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Section {
    pub title: String,
    pub counts: BTreeMap<String, usize>,
    /// Verdicts that are reported but do not decide the exit code.
    pub properties: BTreeMap<String, bool>,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Section {
    pub fn new(title: impl Into<String>) -> Self {
        Section { title: title.into(), ..Default::default() }
    }

    pub fn from_cert(title: impl Into<String>, cert: Certificate) -> Self {
        Section { title: title.into(), checks: cert.checks, ..Default::default() }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn count(&mut self, key: &str, n: usize) -> &mut Self {
        *self.counts.entry(key.into()).or_default() += n;
        self
    }

    pub fn property(&mut self, key: &str, v: bool) -> &mut Self {
        self.properties.insert(key.into(), v);
        self
    }

    pub fn check(&mut self, name: impl Into<String>, counterexample: Option<String>) -> &mut Self {
        self.checks.push(Check::from_option(name, counterexample));
        self
    }

    pub fn note(&mut self, s: impl Into<String>) -> &mut Self {
        self.notes.push(s.into());
        self
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: String,
    pub passed: bool,
    pub sections: Vec<Section>,
    /// Wall time; never part of the structured rendering.
    #[serde(skip)]
    pub elapsed: Option<Duration>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report { command: command.into(), passed: true, ..Default::default() }
    }

    pub fn push(&mut self, s: Section) {
        self.passed &= s.passed();
        self.sections.push(s);
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Plain,
    Structured,
}

pub fn emit_report(r: &Report, format: Format) -> String {
    match format {
        Format::Structured => {
            let mut s = serde_json::to_string_pretty(r).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Plain => plain(r),
    }
}

fn counts_line(counts: &BTreeMap<String, usize>) -> String {
    counts.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(", ")
}

fn plain(r: &Report) -> String {
    let mut out = String::new();
    let failed: usize = r.sections.iter().map(|s| s.checks.iter().filter(|c| !c.pass).count()).sum();
    let checks: usize = r.sections.iter().map(|s| s.checks.len()).sum();
    let verdict = if r.passed { "PASS" } else { "FAIL" };
    let _ = writeln!(out, "{}: {verdict} ({} sections, {checks} checks, {failed} failed)", r.command, r.sections.len());
    for s in &r.sections {
        let mark = if s.passed() { "PASS" } else { "FAIL" };
        let _ = write!(out, "[{mark}] {} ({} checks)", s.title, s.checks.len());
        if !s.counts.is_empty() {
            let _ = write!(out, ": {}", counts_line(&s.counts));
        }
        out.push('\n');
        for (k, v) in &s.properties {
            let _ = writeln!(out, "    {k}: {}", if *v { "yes" } else { "no" });
        }
        for c in s.checks.iter().filter(|c| !c.pass) {
            let _ = writeln!(out, "    FAIL {} -- {}", c.name, c.witness.as_deref().unwrap_or("no witness"));
        }
        for n in &s.notes {
            let _ = writeln!(out, "    note: {n}");
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report_is_header_only() {
        let r = Report::new("validate");
        assert_eq!(emit_report(&r, Format::Plain), "validate: PASS (0 sections, 0 checks, 0 failed)\n");
    }

    #[test]
    fn failures_print_their_witness() {
        let mut r = Report::new("validate");
        let mut s = Section::new("tcategory C");
        s.check("Axioms 1: d0.s0=1", Some("at (a,b)".into()));
        r.push(s);
        let text = emit_report(&r, Format::Plain);
        assert!(text.starts_with("validate: FAIL"));
        assert!(text.contains("FAIL Axioms 1: d0.s0=1 -- at (a,b)"), "{text}");
    }

    #[test]
    fn renderings_agree_on_verdicts() {
        let mut r = Report::new("suite");
        let mut s = Section::new("one");
        s.check("good", None).check("bad", Some("w".into()));
        r.push(s);
        r.push(Section::new("two"));
        let v: serde_json::Value = serde_json::from_str(&emit_report(&r, Format::Structured)).unwrap();
        assert_eq!(v["passed"], false);
        assert_eq!(v["sections"][0]["checks"][1]["pass"], false);
        let plain = emit_report(&r, Format::Plain);
        assert!(plain.contains("[FAIL] one") && plain.contains("[PASS] two"));
    }

    #[test]
    fn timing_stays_out_of_structured_output() {
        let mut r = Report::new("suite");
        r.elapsed = Some(Duration::from_millis(5));
        let a = emit_report(&r, Format::Structured);
        r.elapsed = Some(Duration::from_millis(900));
        assert_eq!(a, emit_report(&r, Format::Structured));
    }
}
