//! Verification reports: one entry per checked identity instance.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// A form known to be wrong was confirmed to fail.
    ExpectedNegative,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub suite: String,
    pub tag: String,
    pub instance: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// Ordered collection of checks. Entries recorded through the convenience
/// methods inherit the report's suite name.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    #[serde(skip)]
    suite: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report {
            suite: suite.into(),
            checks: Vec::new(),
        }
    }

    pub fn suite(&self) -> &str {
        &self.suite
    }

    fn push(&mut self, tag: &str, instance: String, status: Status, detail: Option<String>) {
        self.checks.push(Check {
            suite: self.suite.clone(),
            tag: tag.to_string(),
            instance,
            status,
            detail,
        });
    }

    /// Pass when `ok`, fail otherwise.
    pub fn record(&mut self, tag: &str, instance: impl Into<String>, ok: bool) {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.push(tag, instance.into(), status, None);
    }

    /// Like [`record`](Self::record), attaching `detail()` on failure only.
    pub fn record_with(&mut self, tag: &str, instance: impl Into<String>, ok: bool, detail: impl FnOnce() -> String) {
        let (status, detail) = if ok {
            (Status::Pass, None)
        } else {
            (Status::Fail, Some(detail()))
        };
        self.push(tag, instance.into(), status, detail);
    }

    /// For a form expected to be false: `holds == false` is the good outcome.
    pub fn expect_negative(&mut self, tag: &str, instance: impl Into<String>, holds: bool) {
        if holds {
            self.push(
                tag,
                instance.into(),
                Status::Fail,
                Some("expected to fail but holds".into()),
            );
        } else {
            self.push(tag, instance.into(), Status::ExpectedNegative, None);
        }
    }

    /// Records an error as a failed check.
    pub fn record_error(&mut self, tag: &str, instance: impl Into<String>, err: &dyn std::fmt::Display) {
        self.push(tag, instance.into(), Status::Fail, Some(err.to_string()));
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    /// Entries carrying `tag`.
    pub fn with_tag<'a>(&'a self, tag: &'a str) -> impl Iterator<Item = &'a Check> {
        self.checks.iter().filter(move |c| c.tag == tag)
    }

    /// Stable sort by suite and tag; instance order within a tag is kept.
    pub fn sort(&mut self) {
        self.checks.sort_by(|a, b| (&a.suite, &a.tag).cmp(&(&b.suite, &b.tag)));
    }

    pub fn summary(&self) -> String {
        format!(
            "{} checks: {} pass, {} fail, {} expected-negative",
            self.checks.len(),
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::ExpectedNegative)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn statuses_and_sorting() {
        let mut r = Report::new("demo");
        r.record("b.tag", "n=1", true);
        r.record_with("a.tag", "n=2", false, || "boom".into());
        r.expect_negative("c.tag", "n=3", false);
        assert!(!r.passed());
        assert_eq!(r.count(Status::ExpectedNegative), 1);
        r.sort();
        assert_eq!(r.checks[0].tag, "a.tag");
        assert_eq!(r.checks[0].detail.as_deref(), Some("boom"));
        let mut ok = Report::new("demo");
        ok.expect_negative("c.tag", "x", true);
        assert!(!ok.passed());
    }
}
