use std::fmt::Write;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_flag(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    fn tag(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Record {
    pub name: String,
    pub status: Status,
    /// The statement this record verifies.
    pub anchor: String,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub command: String,
    pub records: Vec<Record>,
}

#[derive(Serialize)]
#[serde(tag = "type", rename_all = "lowercase")]
enum Line<'a> {
    Command { command: &'a str },
    Check(&'a Record),
    Summary { status: Status, passed: usize, total: usize },
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            records: Vec::new(),
        }
    }

    pub fn check(&mut self, name: &str, anchor: &str, ok: bool, detail: impl Into<String>) -> &mut Record {
        self.records.push(Record {
            name: name.to_string(),
            status: Status::from_flag(ok),
            anchor: anchor.to_string(),
            detail: detail.into(),
            witness: None,
        });
        self.records.last_mut().expect("just pushed")
    }

    /// Records a failed check with an explicit witness.
    pub fn fail_with(&mut self, name: &str, anchor: &str, detail: impl Into<String>, witness: impl Into<String>) {
        self.check(name, anchor, false, detail).witness = Some(witness.into());
    }

    pub fn extend(&mut self, other: Report) {
        self.records.extend(other.records);
    }

    pub fn passed_count(&self) -> usize {
        self.records.iter().filter(|r| r.status == Status::Pass).count()
    }

    pub fn status(&self) -> Status {
        Status::from_flag(self.records.iter().all(|r| r.status == Status::Pass))
    }

    pub fn passed(&self) -> bool {
        self.status() == Status::Pass
    }

    pub fn human(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "$ {}", self.command);
        for r in &self.records {
            let _ = writeln!(out, "[{}] {} ({}): {}", r.status.tag(), r.name, r.anchor, r.detail);
            if let Some(w) = &r.witness {
                let _ = writeln!(out, "       witness: {w}");
            }
        }
        let _ = writeln!(
            out,
            "overall: {} ({}/{} checks passed)",
            self.status().tag(),
            self.passed_count(),
            self.records.len()
        );
        out
    }

    /// One JSON object per line: the command, each record, then a summary.
    pub fn machine(&self) -> String {
        let mut lines = vec![Line::Command { command: &self.command }];
        lines.extend(self.records.iter().map(Line::Check));
        lines.push(Line::Summary {
            status: self.status(),
            passed: self.passed_count(),
            total: self.records.len(),
        });
        let mut out = String::new();
        for l in lines {
            out.push_str(&serde_json::to_string(&l).expect("plain data serializes"));
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_aggregates() {
        let mut r = Report::new("demo");
        r.check("a", "x", true, "fine");
        assert!(r.passed());
        r.fail_with("b", "y", "broken", "e1");
        assert_eq!(r.status(), Status::Fail);
        let m = r.machine();
        assert_eq!(m.lines().count(), 4);
        assert!(m.lines().nth(2).unwrap().contains("\"witness\":\"e1\""));
        assert!(r.human().contains("witness: e1"));
    }
}
