//! Certification reports.

use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;

use crate::host::{Decomposition, Vertex};
use crate::verify::{self, Colouring, Verdict};

pub const SCHEMA_VERSION: u32 = 1;

/// A check requested against one decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Check {
    ExactCover,
    ValidColouring(Colouring),
    Alt(Colouring),
    SuperAlt(Colouring),
    PartiallyAlt(Colouring),
    Anchored { p1: Vec<Vertex>, p2: Vec<Vertex> },
    Unique,
    ExclusivelyAlt,
    ExclusivelyPartiallyAlt,
}

impl Check {
    pub fn name(&self) -> &'static str {
        match self {
            Check::ExactCover => "exact_cover",
            Check::ValidColouring(_) => "valid_colouring",
            Check::Alt(_) => "alt",
            Check::SuperAlt(_) => "super_alt",
            Check::PartiallyAlt(_) => "partially_alt",
            Check::Anchored { .. } => "anchored",
            Check::Unique => "uniquely_2colourable",
            Check::ExclusivelyAlt => "exclusively_alt",
            Check::ExclusivelyPartiallyAlt => "exclusively_partially_alt",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub verdict: Verdict,
    /// The verdict the caller expects; a mismatch fails the report.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub models: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complete: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nodes_explored: Option<u64>,
    pub time_ms: f64,
}

impl CheckRecord {
    pub fn new(name: impl Into<String>, verdict: Verdict) -> Self {
        CheckRecord {
            name: name.into(),
            verdict,
            expected: None,
            detail: None,
            models: None,
            complete: None,
            nodes_explored: None,
            time_ms: 0.0,
        }
    }

    pub fn expect(mut self, v: Verdict) -> Self {
        self.expected = Some(v);
        self
    }

    pub fn detail(mut self, d: impl Into<String>) -> Self {
        self.detail = Some(d.into());
        self
    }

    pub fn is_ok(&self) -> bool {
        self.verdict == self.expected.unwrap_or(Verdict::Pass)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub subject: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub host: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cycle_count: Option<usize>,
    pub checks: Vec<CheckRecord>,
    pub wall_time_ms: f64,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            subject: subject.into(),
            host: None,
            vertex_count: None,
            cycle_count: None,
            checks: Vec::new(),
            wall_time_ms: 0.0,
        }
    }

    pub fn for_decomposition(subject: impl Into<String>, d: &Decomposition) -> Self {
        Report {
            host: Some(d.host().to_string()),
            vertex_count: Some(d.vertex_count()),
            cycle_count: Some(d.len()),
            ..Report::new(subject)
        }
    }

    pub fn push(&mut self, record: CheckRecord) {
        self.wall_time_ms += record.time_ms;
        self.checks.push(record);
    }

    pub fn is_ok(&self) -> bool {
        self.checks.iter().all(CheckRecord::is_ok)
    }

    pub fn exit_code(&self) -> i32 {
        if self.is_ok() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialise")
    }

    pub fn to_text(&self) -> String {
        let mut out = self.subject.clone();
        if let (Some(h), Some(c)) = (&self.host, self.cycle_count) {
            write!(out, " [{h}, {c} cycles]").unwrap();
        }
        out.push('\n');
        for r in &self.checks {
            let status = if r.is_ok() { "ok" } else { "FAILED" };
            write!(
                out,
                "  {:<28} {:<13} {status}",
                r.name,
                r.verdict.to_string()
            )
            .unwrap();
            if let Some(e) = r.expected {
                write!(out, " (expected {e})").unwrap();
            }
            if let Some(m) = r.models {
                write!(out, " models={m}").unwrap();
            }
            if let Some(c) = r.complete {
                write!(out, " complete={c}").unwrap();
            }
            if let Some(n) = r.nodes_explored {
                write!(out, " nodes={n}").unwrap();
            }
            if let Some(d) = &r.detail {
                write!(out, " {d}").unwrap();
            }
            out.push('\n');
        }
        out
    }
}

fn colouring_check(
    name: &str,
    d: &Decomposition,
    c: &Colouring,
    pred: fn(&[std::ops::Range<Vertex>], &Colouring) -> bool,
) -> CheckRecord {
    match d.host().parts() {
        Some(parts) => CheckRecord::new(name, Verdict::from_bool(pred(&parts, c))),
        None => CheckRecord::new(name, Verdict::Fail).detail("host is not complete multipartite"),
    }
}

/// Runs one check. Colourings must already match the vertex count.
pub fn run_check(d: &Decomposition, check: &Check, node_limit: u64) -> CheckRecord {
    let start = Instant::now();
    let name = check.name();
    let mut rec = match check {
        Check::ExactCover => match verify::check_exact_cover(d) {
            Ok(()) => CheckRecord::new(name, Verdict::Pass),
            Err(v) => CheckRecord::new(name, Verdict::Fail).detail(v.to_string()),
        },
        Check::ValidColouring(c) => {
            CheckRecord::new(name, Verdict::from_bool(verify::is_valid_colouring(d, c)))
        }
        Check::Alt(c) => colouring_check(name, d, c, verify::is_alt),
        Check::SuperAlt(c) => colouring_check(name, d, c, verify::is_super_alt),
        Check::PartiallyAlt(c) => colouring_check(name, d, c, verify::is_partially_alt),
        Check::Anchored { p1, p2 } => match verify::check_anchor(d, p1, p2, node_limit) {
            Ok(cert) => CheckRecord {
                models: Some(cert.models.len()),
                complete: Some(cert.complete),
                nodes_explored: Some(cert.nodes_explored),
                ..CheckRecord::new(name, cert.verdict)
            },
            Err(e) => CheckRecord::new(name, Verdict::Fail).detail(e.to_string()),
        },
        Check::Unique => {
            let cert = verify::is_uniquely_2colourable(d, node_limit);
            CheckRecord {
                models: Some(cert.models.len()),
                complete: Some(cert.complete),
                nodes_explored: Some(cert.nodes_explored),
                ..CheckRecord::new(name, cert.verdict)
            }
        }
        Check::ExclusivelyAlt | Check::ExclusivelyPartiallyAlt => {
            let res = if *check == Check::ExclusivelyAlt {
                verify::check_exclusively_alt(d, node_limit)
            } else {
                verify::check_exclusively_partially_alt(d, node_limit)
            };
            match res {
                Ok(r) => {
                    let mut rec = CheckRecord {
                        models: Some(r.models),
                        complete: Some(r.complete),
                        nodes_explored: Some(r.nodes_explored),
                        ..CheckRecord::new(name, r.verdict)
                    };
                    if let Some(w) = r.witness {
                        rec = rec.detail(format!("witness {w}"));
                    } else if *check == Check::ExclusivelyAlt && r.complete && !r.super_alt_found {
                        rec = rec.detail("no super-alt colouring");
                    }
                    rec
                }
                Err(e) => CheckRecord::new(name, Verdict::Fail).detail(e.to_string()),
            }
        }
    };
    rec.time_ms = start.elapsed().as_secs_f64() * 1e3;
    rec
}
