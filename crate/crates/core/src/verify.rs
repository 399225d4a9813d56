//! Certification: exact edge coverage, colouring validity, the alternating
//! colouring predicates, and an exhaustive enumerator of proper 2-colourings.
//!
//! The enumerator treats every 4-cycle as a not-all-equal constraint: at least
//! one vertex coloured 0 and at least one coloured 1. As soon as three
//! vertices of a cycle share a colour the fourth is forced to the other one.
//! Branching always picks the lowest unassigned vertex and tries colour 0
//! first, so model order and node counts are reproducible.

use std::collections::HashSet;
use std::fmt;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::host::{Decomposition, HostGraph, Vertex};

pub const DEFAULT_NODE_LIMIT: u64 = 1_000_000_000;

/// A total 2-colouring of a host's vertices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Colouring(Vec<u8>);

impl Colouring {
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        if let Some(&bad) = bits.iter().find(|&&b| b > 1) {
            return Err(Error::ColourValue(bad));
        }
        Ok(Colouring(bits))
    }

    pub fn parse(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|ch| match ch {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(Error::Parse {
                    line: 0,
                    msg: format!("bad colour character {ch:?}"),
                }),
            })
            .collect::<Result<Vec<u8>>>()?;
        Ok(Colouring(bits))
    }

    pub fn from_mask(n: usize, mask: u64) -> Self {
        Colouring((0..n).map(|v| ((mask >> v) & 1) as u8).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: Vertex) -> u8 {
        self.0[v]
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    pub fn complement(&self) -> Self {
        Colouring(self.0.iter().map(|b| 1 - b).collect())
    }

    /// The vertices coloured `c`.
    pub fn class(&self, c: u8) -> Vec<Vertex> {
        (0..self.0.len()).filter(|&v| self.0[v] == c).collect()
    }
}

impl fmt::Display for Colouring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            f.write_str(if *b == 0 { "0" } else { "1" })?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Indeterminate,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn is_pass(self) -> bool {
        self == Verdict::Pass
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Indeterminate => "indeterminate",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoverFault {
    /// A host edge that no cycle uses.
    Missing,
    /// An edge used by more than one cycle.
    Duplicated,
    /// A cycle edge that is not an edge of the host.
    NonHost,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoverViolation {
    pub fault: CoverFault,
    pub edge: (Vertex, Vertex),
}

impl fmt::Display for CoverViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.fault {
            CoverFault::Missing => "missing",
            CoverFault::Duplicated => "duplicated",
            CoverFault::NonHost => "not a host edge",
        };
        write!(f, "edge {}-{} {what}", self.edge.0, self.edge.1)
    }
}

/// Checks that every host edge lies in exactly one cycle. Reports the first
/// offending edge: non-host and duplicated edges in cycle order, then missing
/// edges in lexicographic order.
pub fn check_exact_cover(d: &Decomposition) -> std::result::Result<(), CoverViolation> {
    let host = d.host();
    let n = host.vertex_count();
    let mut used = vec![false; n * n];
    for c in d.cycles() {
        for (u, v) in c.edges() {
            if !host.has_edge(u, v).unwrap_or(false) {
                return Err(CoverViolation {
                    fault: CoverFault::NonHost,
                    edge: (u, v),
                });
            }
            let slot = &mut used[u * n + v];
            if *slot {
                return Err(CoverViolation {
                    fault: CoverFault::Duplicated,
                    edge: (u, v),
                });
            }
            *slot = true;
        }
    }
    for (u, v) in host.edges() {
        if !used[u * n + v] {
            return Err(CoverViolation {
                fault: CoverFault::Missing,
                edge: (u, v),
            });
        }
    }
    Ok(())
}

pub fn is_exact_cover(d: &Decomposition) -> bool {
    check_exact_cover(d).is_ok()
}

/// No cycle is monochromatic under `c`.
pub fn is_valid_colouring(d: &Decomposition, c: &Colouring) -> bool {
    assert_eq!(
        c.len(),
        d.vertex_count(),
        "colouring must be total on the host"
    );
    d.cycles().iter().all(|cy| {
        let v = cy.vertices();
        let first = c.get(v[0]);
        v[1..].iter().any(|&x| c.get(x) != first)
    })
}

fn part_alternates(c: &Colouring, part: &Range<Vertex>) -> bool {
    part.clone()
        .zip(part.clone().skip(1))
        .all(|(a, b)| c.get(a) != c.get(b))
}

/// Consecutive vertices differ inside every part.
pub fn is_alt(parts: &[Range<Vertex>], c: &Colouring) -> bool {
    parts.iter().all(|p| part_alternates(c, p))
}

/// Alternating inside parts and across each part boundary.
pub fn is_super_alt(parts: &[Range<Vertex>], c: &Colouring) -> bool {
    is_alt(parts, c)
        && parts
            .windows(2)
            .all(|w| c.get(w[0].end - 1) != c.get(w[1].start))
}

/// Some part with at least two vertices alternates fully.
pub fn is_partially_alt(parts: &[Range<Vertex>], c: &Colouring) -> bool {
    parts.iter().any(|p| p.len() >= 2 && part_alternates(c, p))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveLimits {
    pub node_limit: u64,
    /// Stop after this many models. Reaching it leaves the outcome incomplete.
    pub model_limit: Option<usize>,
    /// After each branch, try both colours on every open vertex and fix any
    /// vertex where one of them fails. Shrinks the tree on instances with
    /// few models.
    pub probing: bool,
}

impl Default for SolveLimits {
    fn default() -> Self {
        SolveLimits {
            node_limit: DEFAULT_NODE_LIMIT,
            model_limit: None,
            probing: false,
        }
    }
}

impl SolveLimits {
    pub fn with_node_limit(node_limit: u64) -> Self {
        SolveLimits {
            node_limit,
            model_limit: None,
            probing: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOutcome {
    pub models: Vec<Colouring>,
    /// True iff the search space was provably exhausted.
    pub complete: bool,
    pub nodes_explored: u64,
}

impl SolveOutcome {
    pub fn model_count(&self) -> usize {
        self.models.len()
    }
}

/// Not-all-equal 2-colouring enumerator over the cycles of a decomposition.
/// The solver holds no search state, so one instance can serve many calls.
#[derive(Debug, Clone)]
pub struct Solver {
    n: usize,
    cycles: Vec<[Vertex; 4]>,
    incident: Vec<Vec<u32>>,
}

struct Search<'a> {
    solver: &'a Solver,
    assign: Vec<i8>,
    counts: Vec<[u8; 2]>,
    trail: Vec<Vertex>,
    queue: Vec<(Vertex, u8)>,
    nodes: u64,
    limits: SolveLimits,
    models: Vec<Colouring>,
    stopped: bool,
}

impl Solver {
    pub fn new(d: &Decomposition) -> Self {
        let n = d.vertex_count();
        let mut incident = vec![Vec::new(); n];
        let cycles: Vec<[Vertex; 4]> = d.cycles().iter().map(|c| c.vertices()).collect();
        for (ci, c) in cycles.iter().enumerate() {
            for &v in c {
                incident[v].push(ci as u32);
            }
        }
        Solver {
            n,
            cycles,
            incident,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn enumerate(&self, pins: &[(Vertex, u8)], limits: SolveLimits) -> Result<SolveOutcome> {
        for &(v, c) in pins {
            if v >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    count: self.n,
                });
            }
            if c > 1 {
                return Err(Error::ColourValue(c));
            }
        }
        let mut s = Search {
            solver: self,
            assign: vec![-1; self.n],
            counts: vec![[0, 0]; self.cycles.len()],
            trail: Vec::with_capacity(self.n),
            queue: Vec::new(),
            nodes: 0,
            limits,
            models: Vec::new(),
            stopped: false,
        };
        let consistent = pins.iter().all(|&(v, c)| s.set(v, c)) && s.propagate();
        if consistent {
            s.descend(0);
        }
        Ok(SolveOutcome {
            models: s.models,
            complete: !s.stopped,
            nodes_explored: s.nodes,
        })
    }
}

impl Search<'_> {
    /// Records an assignment and queues any forced colours. Returns false on
    /// conflict.
    fn set(&mut self, v: Vertex, c: u8) -> bool {
        match self.assign[v] {
            -1 => {}
            old => return old as u8 == c,
        }
        self.assign[v] = c as i8;
        self.trail.push(v);
        let solver = self.solver;
        let mut ok = true;
        for &ci in &solver.incident[v] {
            let ci = ci as usize;
            let cnt = &mut self.counts[ci];
            cnt[c as usize] += 1;
            if cnt[c as usize] == 4 {
                ok = false;
            } else if cnt[c as usize] == 3 && cnt[1 - c as usize] == 0 {
                let last = solver.cycles[ci]
                    .iter()
                    .copied()
                    .find(|&u| self.assign[u] == -1)
                    .expect("three assigned, one open");
                self.queue.push((last, 1 - c));
            }
        }
        ok
    }

    fn propagate(&mut self) -> bool {
        while let Some((v, c)) = self.queue.pop() {
            if !self.set(v, c) {
                self.queue.clear();
                return false;
            }
        }
        true
    }

    /// Failed-literal probing over unassigned vertices from `from` on.
    /// Returns false if some vertex admits neither colour.
    fn probe(&mut self, from: Vertex) -> bool {
        loop {
            let mut changed = false;
            for u in from..self.solver.n {
                if self.assign[u] != -1 {
                    continue;
                }
                let mut ok = [false; 2];
                for c in 0..2u8 {
                    let mark = self.trail.len();
                    ok[c as usize] = self.set(u, c) && self.propagate();
                    self.queue.clear();
                    self.undo_to(mark);
                }
                match ok {
                    [false, false] => return false,
                    [true, false] | [false, true] => {
                        let c = if ok[0] { 0 } else { 1 };
                        if !(self.set(u, c) && self.propagate()) {
                            return false;
                        }
                        changed = true;
                    }
                    _ => {}
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let v = self.trail.pop().unwrap();
            let c = self.assign[v] as usize;
            for &ci in &self.solver.incident[v] {
                self.counts[ci as usize][c] -= 1;
            }
            self.assign[v] = -1;
        }
    }

    fn descend(&mut self, from: Vertex) {
        self.nodes += 1;
        if self.nodes > self.limits.node_limit {
            self.stopped = true;
            return;
        }
        let Some(v) = (from..self.solver.n).find(|&v| self.assign[v] == -1) else {
            let bits = self.assign.iter().map(|&a| a as u8).collect();
            self.models.push(Colouring(bits));
            if self
                .limits
                .model_limit
                .is_some_and(|m| self.models.len() >= m)
            {
                self.stopped = true;
            }
            return;
        };
        for c in 0..2u8 {
            let mark = self.trail.len();
            if self.set(v, c) && self.propagate() && (!self.limits.probing || self.probe(v + 1)) {
                self.descend(v + 1);
            } else {
                self.queue.clear();
            }
            self.undo_to(mark);
            if self.stopped {
                return;
            }
        }
    }
}

/// Enumerates proper 2-colourings consistent with `pins`. Pins that colour
/// a vertex twice with different colours yield zero models.
pub fn enumerate_2colourings(
    d: &Decomposition,
    pins: &[(Vertex, u8)],
    limits: SolveLimits,
) -> Result<SolveOutcome> {
    Solver::new(d).enumerate(pins, limits)
}

/// Outcome of a certification that is decided by a complete enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub verdict: Verdict,
    pub models: Vec<Colouring>,
    pub complete: bool,
    pub nodes_explored: u64,
}

/// Pins vertex 0 to colour 0 and asks for exactly one completion. The unique
/// model (when found) is the certificate; its complement is the other
/// colouring.
pub fn is_uniquely_2colourable(d: &Decomposition, node_limit: u64) -> Certificate {
    if d.is_empty() || d.vertex_count() < 2 {
        return Certificate {
            verdict: Verdict::Fail,
            models: vec![],
            complete: true,
            nodes_explored: 0,
        };
    }
    let out = Solver::new(d)
        .enumerate(
            &[(0, 0)],
            SolveLimits {
                node_limit,
                model_limit: Some(2),
                probing: true,
            },
        )
        .expect("vertex 0 exists");
    let verdict = match (out.models.len(), out.complete) {
        (n, _) if n >= 2 => Verdict::Fail,
        (1, true) => Verdict::Pass,
        (0, true) => Verdict::Fail,
        _ => Verdict::Indeterminate,
    };
    Certificate {
        verdict,
        models: out.models,
        complete: out.complete,
        nodes_explored: out.nodes_explored,
    }
}

/// `P1` coloured 0 and `P2` coloured 1 admit exactly one proper completion.
pub fn check_anchor(
    d: &Decomposition,
    p1: &[Vertex],
    p2: &[Vertex],
    node_limit: u64,
) -> Result<Certificate> {
    let seen: HashSet<Vertex> = p1.iter().copied().collect();
    if let Some(&v) = p2.iter().find(|v| seen.contains(v)) {
        return Err(Error::Overlap(v));
    }
    let pins: Vec<(Vertex, u8)> = p1
        .iter()
        .map(|&v| (v, 0))
        .chain(p2.iter().map(|&v| (v, 1)))
        .collect();
    let out = Solver::new(d).enumerate(
        &pins,
        SolveLimits {
            node_limit,
            model_limit: Some(2),
            probing: true,
        },
    )?;
    let verdict = match (out.models.len(), out.complete) {
        (n, _) if n >= 2 => Verdict::Fail,
        (1, true) => Verdict::Pass,
        (0, true) => Verdict::Fail,
        _ => Verdict::Indeterminate,
    };
    Ok(Certificate {
        verdict,
        models: out.models,
        complete: out.complete,
        nodes_explored: out.nodes_explored,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExclusivityReport {
    pub verdict: Verdict,
    /// Models with vertex 0 pinned to colour 0.
    pub models: usize,
    pub complete: bool,
    pub nodes_explored: u64,
    pub super_alt_found: bool,
    /// The first model that violates the property, if any.
    pub witness: Option<Colouring>,
}

fn multipartite_parts(host: &HostGraph) -> Result<Vec<Range<Vertex>>> {
    host.parts().ok_or(Error::NotMultipartite)
}

fn pinned_models(d: &Decomposition, node_limit: u64) -> SolveOutcome {
    Solver::new(d)
        .enumerate(&[(0, 0)], SolveLimits::with_node_limit(node_limit))
        .expect("vertex 0 exists")
}

/// Every proper 2-colouring alternates inside every part, and some proper
/// colouring is super-alternating.
pub fn check_exclusively_alt(d: &Decomposition, node_limit: u64) -> Result<ExclusivityReport> {
    let parts = multipartite_parts(d.host())?;
    let out = pinned_models(d, node_limit);
    let witness = out.models.iter().find(|m| !is_alt(&parts, m)).cloned();
    let super_alt_found = out.models.iter().any(|m| is_super_alt(&parts, m));
    let verdict = if witness.is_some() || (out.complete && !super_alt_found) {
        Verdict::Fail
    } else if !out.complete {
        Verdict::Indeterminate
    } else {
        Verdict::Pass
    };
    Ok(ExclusivityReport {
        verdict,
        models: out.models.len(),
        complete: out.complete,
        nodes_explored: out.nodes_explored,
        super_alt_found,
        witness,
    })
}

/// Every proper 2-colouring alternates fully inside at least one part.
pub fn check_exclusively_partially_alt(
    d: &Decomposition,
    node_limit: u64,
) -> Result<ExclusivityReport> {
    let parts = multipartite_parts(d.host())?;
    let out = pinned_models(d, node_limit);
    let witness = out
        .models
        .iter()
        .find(|m| !is_partially_alt(&parts, m))
        .cloned();
    let super_alt_found = out.models.iter().any(|m| is_super_alt(&parts, m));
    let verdict = if witness.is_some() {
        Verdict::Fail
    } else if !out.complete {
        Verdict::Indeterminate
    } else {
        Verdict::Pass
    };
    Ok(ExclusivityReport {
        verdict,
        models: out.models.len(),
        complete: out.complete,
        nodes_explored: out.nodes_explored,
        super_alt_found,
        witness,
    })
}
