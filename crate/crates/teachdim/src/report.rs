//! Run reports: a `key: value` text block, or one JSON document with
//! `--machine`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;
use sha2::{Digest, Sha256};
use teachdim_core::lab::{Horizons, LabReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    ClaimFailed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HorizonRecord {
    pub columns: u32,
    pub stages: u32,
    pub domain: u32,
    pub multiplicity: u32,
}

impl From<Horizons> for HorizonRecord {
    fn from(h: Horizons) -> Self {
        HorizonRecord {
            columns: h.columns,
            stages: h.stages,
            domain: h.domain,
            multiplicity: h.multiplicity,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Entry {
    pub key: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub command: String,
    /// `sha256:<hex>` of the input file, or of the command line when the run
    /// reads no file.
    pub input_digest: String,
    pub params: BTreeMap<String, String>,
    pub horizons: Option<HorizonRecord>,
    pub results: Vec<Entry>,
    pub checks: Vec<CheckRecord>,
    /// Multi-line payloads such as an offending class, in the class format.
    pub attachments: Vec<Entry>,
    pub status: Status,
    #[serde(skip)]
    pub wall_time: Duration,
}

pub fn digest(bytes: &[u8]) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(bytes)))
}

impl RunReport {
    pub fn new(command: String, input_digest: String) -> Self {
        RunReport {
            command,
            input_digest,
            params: BTreeMap::new(),
            horizons: None,
            results: Vec::new(),
            checks: Vec::new(),
            attachments: Vec::new(),
            status: Status::Ok,
            wall_time: Duration::ZERO,
        }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) {
        self.params.insert(key.to_string(), value.to_string());
    }

    pub fn result(&mut self, key: impl Into<String>, value: impl ToString) {
        self.results.push(Entry {
            key: key.into(),
            value: value.to_string(),
        });
    }

    pub fn check(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        if !pass {
            self.status = Status::ClaimFailed;
        }
        self.checks.push(CheckRecord {
            name: name.into(),
            pass,
            detail: detail.into(),
        });
    }

    pub fn attach(&mut self, key: impl Into<String>, body: String) {
        self.attachments.push(Entry { key: key.into(), value: body });
    }

    /// Copies a lab verifier's parameters, horizons, checks and linkage.
    pub fn absorb(&mut self, lab: &LabReport) {
        self.param("gadget", lab.gadget);
        for (k, v) in &lab.params {
            self.result(k.clone(), v);
        }
        self.horizons = Some(lab.horizons.into());
        for c in &lab.checks {
            self.check(c.name.clone(), c.pass, c.detail.clone());
        }
        if let Some(l) = &lab.linkage {
            self.result("linkage.property", l.property);
            self.result("linkage.predicted", l.predicted);
            self.result("linkage.ground_truth", l.ground_truth);
            self.check("verdict matches the descriptor's classification", l.holds(), l.property);
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        let _ = writeln!(out, "input_digest: {}", self.input_digest);
        for (k, v) in &self.params {
            let _ = writeln!(out, "param.{k}: {v}");
        }
        if let Some(h) = &self.horizons {
            let _ = writeln!(
                out,
                "horizons: columns={} stages={} domain={} multiplicity={}",
                h.columns, h.stages, h.domain, h.multiplicity
            );
        }
        for e in &self.results {
            let _ = writeln!(out, "{}: {}", e.key, e.value);
        }
        for c in &self.checks {
            let mark = if c.pass { "PASS" } else { "FAIL" };
            if c.detail.is_empty() {
                let _ = writeln!(out, "check {mark}: {}", c.name);
            } else {
                let _ = writeln!(out, "check {mark}: {} ({})", c.name, c.detail);
            }
        }
        for a in &self.attachments {
            let _ = writeln!(out, "--- {} ---", a.key);
            out.push_str(&a.value);
            if !a.value.ends_with('\n') {
                out.push('\n');
            }
            let _ = writeln!(out, "---");
        }
        let status = match self.status {
            Status::Ok => "ok",
            Status::ClaimFailed => "claim-failed",
        };
        let _ = writeln!(out, "status: {status}");
        let _ = writeln!(out, "wall_time_ms: {}", self.wall_time.as_millis());
        out
    }

    /// Everything except the wall time.
    pub fn to_machine(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn machine_output_omits_wall_time() {
        let mut r = RunReport::new("dimension x".into(), digest(b"abc"));
        r.result("td", 3);
        r.wall_time = Duration::from_millis(5);
        let a = r.to_machine();
        r.wall_time = Duration::from_millis(9);
        assert_eq!(a, r.to_machine());
        assert!(!a.contains("wall"));
        assert!(r.to_text().contains("wall_time_ms: 9"));
        assert_eq!(
            digest(b"abc"),
            "sha256:ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
    }

    #[test]
    fn failed_check_sets_status() {
        let mut r = RunReport::new(String::new(), String::new());
        r.check("a", true, "");
        assert_eq!(r.status, Status::Ok);
        r.check("b", false, "why");
        assert_eq!(r.status, Status::ClaimFailed);
        assert!(r.to_text().contains("check FAIL: b (why)"));
    }
}
