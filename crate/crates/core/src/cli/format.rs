//! Plain-text decomposition files.
//!
//! ```text
//! # optional comments
//! complete 9
//! 0 1 3 5
//! ...
//! ```
//!
//! The header is `complete <n>`, `cocktail <n>` or `multipartite <s1> <s2> ...`.
//! Each body line is one cycle as four vertex ids. Written files hold the
//! cycles in canonical form, sorted.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::host::{Cycle4, Decomposition, HostGraph, Vertex};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_numbers(line: usize, fields: &[&str]) -> Result<Vec<usize>> {
    fields
        .iter()
        .map(|f| {
            f.parse::<usize>()
                .map_err(|_| parse_err(line, format!("`{f}` is not a non-negative integer")))
        })
        .collect()
}

pub fn parse_host(line: usize, text: &str) -> Result<HostGraph> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    let Some((&kind, rest)) = fields.split_first() else {
        return Err(parse_err(line, "empty host line"));
    };
    let nums = parse_numbers(line, rest)?;
    let host = match (kind, nums.as_slice()) {
        ("complete", &[n]) => HostGraph::complete(n),
        ("cocktail", &[n]) => HostGraph::cocktail_party(n),
        ("multipartite", sizes) if !sizes.is_empty() => HostGraph::multipartite(sizes.to_vec()),
        ("complete" | "cocktail", _) => {
            return Err(parse_err(line, format!("`{kind}` takes one order")))
        }
        ("multipartite", _) => {
            return Err(parse_err(
                line,
                "`multipartite` needs at least one part size",
            ))
        }
        _ => return Err(parse_err(line, format!("unknown host kind `{kind}`"))),
    };
    host.map_err(|e| parse_err(line, e.to_string()))
}

/// Reads a decomposition file. Cycles may be written in any rotation or
/// direction; repeated cycles are kept so that cover checks can report them.
pub fn parse_decomposition(text: &str) -> Result<Decomposition> {
    let mut host: Option<HostGraph> = None;
    let mut cycles = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let Some(h) = &host else {
            host = Some(parse_host(line, content)?);
            continue;
        };
        let fields: Vec<&str> = content.split_whitespace().collect();
        if fields.len() != 4 {
            return Err(parse_err(
                line,
                format!("expected 4 vertex ids, found {}", fields.len()),
            ));
        }
        let ids = parse_numbers(line, &fields)?;
        let n = h.vertex_count();
        if let Some(&v) = ids.iter().find(|&&v| v >= n) {
            return Err(parse_err(
                line,
                format!("vertex {v} is out of range for {n} vertices"),
            ));
        }
        let q: [Vertex; 4] = ids.try_into().expect("length checked");
        cycles.push(Cycle4::new(q).map_err(|e| parse_err(line, e.to_string()))?);
    }
    let host = host.ok_or_else(|| parse_err(0, "missing host line"))?;
    Decomposition::new(host, cycles)
}

pub fn write_decomposition(d: &Decomposition) -> String {
    let mut out = format!("{}\n", d.host());
    for c in d.sorted_cycles() {
        let [a, b, x, y] = c.vertices();
        writeln!(out, "{a} {b} {x} {y}").expect("writing to a String");
    }
    out
}
