//! Report records and their JSON, CSV and text renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

pub const SCHEMA: &str = "cameral-lattice/1";

#[derive(Serialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl Status {
    pub fn of(pass: bool) -> Self {
        if pass {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        }
    }
}

#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub computed: String,
    pub expected: String,
    /// Short name of the claim being checked.
    pub anchor: String,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool, computed: impl ToString, expected: impl ToString, anchor: &str) -> Self {
        Check {
            name: name.into(),
            status: Status::of(pass),
            computed: computed.to_string(),
            expected: expected.to_string(),
            anchor: anchor.to_string(),
        }
    }

    pub fn eq<T: PartialEq + ToString>(name: impl Into<String>, computed: T, expected: T, anchor: &str) -> Self {
        let pass = computed == expected;
        Self::new(name, pass, computed, expected, anchor)
    }

    pub fn skip(name: impl Into<String>, reason: impl ToString, anchor: &str) -> Self {
        Check {
            name: name.into(),
            status: Status::Skip,
            computed: reason.to_string(),
            expected: String::new(),
            anchor: anchor.to_string(),
        }
    }

    pub fn prefixed(mut self, prefix: &str) -> Self {
        self.name = format!("{prefix}/{}", self.name);
        self
    }
}

#[derive(Serialize, Clone, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

#[derive(Serialize, Clone, Debug)]
pub struct Report {
    pub schema: &'static str,
    pub version: &'static str,
    pub command: String,
    pub input: BTreeMap<String, String>,
    pub details: serde_json::Value,
    pub checks: Vec<Check>,
    pub summary: Summary,
    pub wall_time_ms: f64,
}

impl Report {
    pub fn new(command: &str, input: BTreeMap<String, String>, details: serde_json::Value, checks: Vec<Check>) -> Self {
        let mut summary = Summary::default();
        for c in &checks {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Skip => summary.skip += 1,
            }
        }
        Report {
            schema: SCHEMA,
            version: env!("CARGO_PKG_VERSION"),
            command: command.to_string(),
            input,
            details,
            checks,
            summary,
            wall_time_ms: 0.0,
        }
    }

    pub fn failed(&self) -> bool {
        self.summary.fail > 0
    }

    pub fn exit_code(&self) -> i32 {
        i32::from(self.failed())
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Csv => self.csv(),
            Format::Text => self.text(),
        }
    }

    fn csv(&self) -> String {
        let mut out = String::from("name,status,computed,expected,anchor\n");
        for c in &self.checks {
            let row = [c.name.as_str(), c.status.as_str(), &c.computed, &c.expected, &c.anchor].map(csv_field);
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    fn text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "cameral {} {}", self.version, self.command);
        for (k, v) in &self.input {
            let _ = writeln!(out, "  {k} = {v}");
        }
        if let serde_json::Value::Object(map) = &self.details {
            for (k, v) in map {
                let v = match v {
                    serde_json::Value::String(s) => s.clone(),
                    other => other.to_string(),
                };
                let _ = writeln!(out, "{k}: {v}");
            }
        }
        for c in &self.checks {
            let _ = write!(out, "{} {}: computed {}", c.status.as_str(), c.name, c.computed);
            if c.status != Status::Skip {
                let _ = write!(out, ", expected {}", c.expected);
            }
            out.push('\n');
        }
        let s = &self.summary;
        let _ = writeln!(out, "{} pass, {} fail, {} skip in {:.1} ms", s.pass, s.fail, s.skip, self.wall_time_ms);
        out
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}
