//! Check reports shared by every verification routine.

use std::fmt;

/// One verified statement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub id: String,
    pub pass: bool,
    pub detail: String,
}

/// Ordered list of checks.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, id: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            id: id.into(),
            pass,
            detail: detail.into(),
        });
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn get(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// `CHECK <id> PASS|FAIL <detail>`, one line per check.
    pub fn render_lines(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            s.push_str(&format!(
                "CHECK {} {} {}\n",
                c.id,
                if c.pass { "PASS" } else { "FAIL" },
                c.detail
            ));
        }
        s
    }

    /// Aligned human-readable table with a summary line.
    pub fn render_text(&self) -> String {
        let w = self.checks.iter().map(|c| c.id.len()).max().unwrap_or(0);
        let mut s = String::new();
        for c in &self.checks {
            let mark = if c.pass { "ok  " } else { "FAIL" };
            s.push_str(&format!("{mark}  {:<w$}  {}\n", c.id, c.detail));
        }
        let failed = self.failures().count();
        s.push_str(&format!(
            "{} checks, {} passed, {} failed\n",
            self.checks.len(),
            self.checks.len() - failed,
            failed
        ));
        s
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_lines())
    }
}
