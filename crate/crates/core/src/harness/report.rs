//! Named checks and the report printed by `verify-paper`.

use std::fmt;
use std::time::Duration;

use crate::visibility::PropertyKind;

/// What a check's integer outcome must satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expected {
    Exact(usize),
    AtLeast(usize),
    AtMost(usize),
    Range(usize, usize),
}

impl Expected {
    pub fn accepts(self, actual: usize) -> bool {
        match self {
            Expected::Exact(e) => actual == e,
            Expected::AtLeast(e) => actual >= e,
            Expected::AtMost(e) => actual <= e,
            Expected::Range(lo, hi) => (lo..=hi).contains(&actual),
        }
    }
}

impl fmt::Display for Expected {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expected::Exact(e) => write!(f, "{e}"),
            Expected::AtLeast(e) => write!(f, ">={e}"),
            Expected::AtMost(e) => write!(f, "<={e}"),
            Expected::Range(lo, hi) => write!(f, "{lo}..{hi}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// The solver hit its time limit before deciding the check.
    Timeout,
    /// The instance exceeds the configured order cap.
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Timeout => "timeout",
            Status::Skip => "skip",
        })
    }
}

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    /// Graph spec text, or a description of the corpus the check sweeps.
    pub graph: String,
    pub kind: Option<PropertyKind>,
    pub expected: Expected,
    pub actual: Option<usize>,
    pub status: Status,
    pub elapsed: Duration,
}

impl Check {
    /// A check whose outcome is known; status follows from `expected`.
    pub fn decided(
        name: impl Into<String>,
        graph: impl Into<String>,
        kind: Option<PropertyKind>,
        expected: Expected,
        actual: usize,
    ) -> Check {
        Check {
            name: name.into(),
            graph: graph.into(),
            kind,
            expected,
            actual: Some(actual),
            status: if expected.accepts(actual) {
                Status::Pass
            } else {
                Status::Fail
            },
            elapsed: Duration::ZERO,
        }
    }

    pub fn actual_text(&self) -> String {
        self.actual
            .map_or_else(|| "-".to_string(), |a| a.to_string())
    }

    /// `CHECK <name> expected=<e> actual=<a> status=<s>`
    pub fn machine_line(&self) -> String {
        format!(
            "CHECK {} expected={} actual={} status={}",
            self.name,
            self.expected,
            self.actual_text(),
            self.status
        )
    }
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub checks: Vec<Check>,
    pub elapsed: Duration,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub timeout: usize,
    pub skip: usize,
}

impl Report {
    pub fn summary(&self) -> Summary {
        let mut s = Summary::default();
        for c in &self.checks {
            match c.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Timeout => s.timeout += 1,
                Status::Skip => s.skip += 1,
            }
        }
        s
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    /// 0 when every check passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn table(&self) -> String {
        let width = self
            .checks
            .iter()
            .map(|c| c.name.len())
            .max()
            .unwrap_or(4)
            .max(5);
        let gwidth = self
            .checks
            .iter()
            .map(|c| c.graph.len())
            .max()
            .unwrap_or(5)
            .clamp(5, 40);
        let mut out = format!(
            "{:width$}  {:gwidth$}  {:5}  {:>8}  {:>6}  {:7}  {:>9}\n",
            "check", "graph", "kind", "expected", "actual", "status", "time"
        );
        for c in &self.checks {
            let kind = c.kind.map_or("-", PropertyKind::short_name);
            out.push_str(&format!(
                "{:width$}  {:gwidth$}  {:5}  {:>8}  {:>6}  {:7}  {:>8.3}s\n",
                c.name,
                c.graph,
                kind,
                c.expected.to_string(),
                c.actual_text(),
                c.status.to_string(),
                c.elapsed.as_secs_f64()
            ));
        }
        let s = self.summary();
        out.push_str(&format!(
            "\n{} checks: {} pass, {} fail, {} timeout, {} skip in {:.2}s\n",
            self.checks.len(),
            s.pass,
            s.fail,
            s.timeout,
            s.skip,
            self.elapsed.as_secs_f64()
        ));
        out
    }

    pub fn machine_lines(&self) -> String {
        self.checks
            .iter()
            .map(|c| c.machine_line() + "\n")
            .collect()
    }

    pub fn csv(&self) -> String {
        let mut out = String::from("name,graph,kind,expected,actual,status,seconds\n");
        for c in &self.checks {
            out.push_str(&format!(
                "{},\"{}\",{},{},{},{},{:.6}\n",
                c.name,
                c.graph.replace('"', "\"\""),
                c.kind.map_or("", PropertyKind::short_name),
                c.expected,
                c.actual.map_or(String::new(), |a| a.to_string()),
                c.status,
                c.elapsed.as_secs_f64()
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expected_descriptors() {
        assert!(Expected::Exact(3).accepts(3) && !Expected::Exact(3).accepts(4));
        assert!(Expected::AtLeast(12).accepts(13) && !Expected::AtLeast(12).accepts(11));
        assert!(Expected::AtMost(7).accepts(7) && !Expected::AtMost(7).accepts(8));
        assert!(Expected::Range(6, 7).accepts(6) && !Expected::Range(6, 7).accepts(8));
        assert_eq!(Expected::Range(6, 7).to_string(), "6..7");
        assert_eq!(Expected::AtLeast(12).to_string(), ">=12");
    }

    #[test]
    fn summary_and_exit_code() {
        let mut r = Report::default();
        r.checks
            .push(Check::decided("a", "path:3", None, Expected::Exact(1), 1));
        assert_eq!(r.exit_code(), 0);
        r.checks.push(Check::decided(
            "b",
            "path:3",
            Some(PropertyKind::GeneralPosition),
            Expected::Exact(1),
            2,
        ));
        assert_eq!(
            r.summary(),
            Summary {
                pass: 1,
                fail: 1,
                timeout: 0,
                skip: 0
            }
        );
        assert_eq!(r.exit_code(), 1);
        assert_eq!(
            r.checks[1].machine_line(),
            "CHECK b expected=1 actual=2 status=fail"
        );
        assert_eq!(r.csv().lines().count(), 3);
    }
}
