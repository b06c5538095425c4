//! Structured reports: named check entries with a claimed and a computed
//! value, rendered as aligned text or deterministic JSON.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

/// One check: `status` is `fail` exactly when the computed value differs
/// from the claimed one (informational notes carry `info`).
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ReportEntry {
    pub name: String,
    pub status: Status,
    pub claimed: String,
    pub computed: String,
}

impl ReportEntry {
    /// Pass/fail by exact string equality of claimed and computed.
    pub fn check(name: impl Into<String>, claimed: impl Into<String>, computed: impl Into<String>) -> Self {
        let claimed = claimed.into();
        let computed = computed.into();
        let status = if claimed == computed { Status::Pass } else { Status::Fail };
        ReportEntry { name: name.into(), status, claimed, computed }
    }

    pub fn info(name: impl Into<String>, note: impl Into<String>) -> Self {
        let note = note.into();
        ReportEntry { name: name.into(), status: Status::Info, claimed: note.clone(), computed: note }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Report {
    pub tool_version: String,
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
    pub results: Vec<ReportEntry>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.into(),
            inputs: BTreeMap::new(),
            timestamp: None,
            results: Vec::new(),
        }
    }

    pub fn input(mut self, key: &str, value: impl Into<String>) -> Self {
        self.inputs.insert(key.to_string(), value.into());
        self
    }

    pub fn push(&mut self, entry: ReportEntry) {
        self.results.push(entry);
    }

    pub fn extend(&mut self, entries: impl IntoIterator<Item = ReportEntry>) {
        self.results.extend(entries);
    }

    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|e| e.status != Status::Fail)
    }

    /// Zero when every entry passes, one otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_pass() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("{} v{}\n", self.command, self.tool_version));
        for (k, v) in &self.inputs {
            out.push_str(&format!("  input {} = {}\n", k, v));
        }
        let width = self.results.iter().map(|e| e.name.len()).max().unwrap_or(0);
        for e in &self.results {
            let tag = match e.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Info => "info",
            };
            match e.status {
                Status::Info => {
                    out.push_str(&format!("{tag}  {:width$}  {}\n", e.name, e.computed));
                }
                _ => {
                    if e.claimed == e.computed {
                        out.push_str(&format!("{tag}  {:width$}  {}\n", e.name, e.computed));
                    } else {
                        out.push_str(&format!(
                            "{tag}  {:width$}  claimed {} ; computed {}\n",
                            e.name, e.claimed, e.computed
                        ));
                    }
                }
            }
        }
        let (passed, failed, infos) = self.tally();
        out.push_str(&format!("{} passed, {} failed, {} informational\n", passed, failed, infos));
        out
    }

    pub fn tally(&self) -> (usize, usize, usize) {
        let mut t = (0, 0, 0);
        for e in &self.results {
            match e.status {
                Status::Pass => t.0 += 1,
                Status::Fail => t.1 += 1,
                Status::Info => t.2 += 1,
            }
        }
        t
    }
}
