//! Anchored seed decompositions used as flower petals, and the small
//! tripartite fixture.
//!
//! Seed vertex indexing: hub vertices `s1..s{2t}` take ids `0..2t` (the
//! complete-graph seed has the single hub vertex `s1 = 0`), then
//! `a_j = hub + 2(j-1)` and `b_j = hub + 2j - 1`. With this layout the
//! missing 1-factor of every cocktail-party seed is `{2k, 2k+1}`.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::host::{Cycle4, Decomposition, HostGraph, Vertex};
use crate::verify::{self, Verdict};

/// One row of the seed table. Cycles are written with the symbols `a1..a4`,
/// `b1..b4`, `s1..`; a trailing `*` marks a key cycle.
struct SeedRow {
    t: usize,
    sub: &'static str,
    rest: &'static str,
}

const TABLE: [SeedRow; 5] = [
    SeedRow {
        t: 0,
        sub: "",
        rest: "a1 a3 a2 s1*, a2 a4 a3 b3, a3 b1 a4 b4,
               a4 b2 b1 a1, b1 s1 b2 a2, b2 b3 s1 a3,
               s1 b4 b3 a4, b3 a1 b4 b1, b4 a2 a1 b2",
    },
    SeedRow {
        t: 1,
        sub: "",
        rest: "a1 a2 a3 s2*, a1 a3 b1 b3, s1 a2 s2 b2,
               b1 s2 b3 a4, b1 b2 b3 s1*, a1 s1 a3 b4,
               a1 b2 a3 a4, b1 a2 b3 b4, a4 s1 b4 s2,
               a2 a4 b2 b4",
    },
    SeedRow {
        t: 2,
        sub: "s1 s3 s2 s4",
        rest: "a1 a2 a3 s2*, s1 a3 s3 b2, a2 s3 a4 b3,
               a3 a4 b1 s4, s3 b1 s2 b4*, a4 s2 b2 a1,
               b1 b2 b3 s1*, s2 b3 s4 a2, b2 s4 b4 a3,
               b3 b4 a1 s3, s4 a1 s1 a4*, b4 s1 a2 b1,
               a2 a4 b2 b4, a3 b1 b3 a1",
    },
    SeedRow {
        t: 3,
        sub: "s1 s3 s2 s4, s1 s6 s4 s5, s3 s6 s2 s5",
        rest: "a1 a2 a3 s2*, s1 a3 s3 b2, s6 a1 s5 b1,
               a3 a4 b1 s4, s3 b1 s2 b4*, a4 s2 b2 a1,
               b1 b2 b3 s1*, s2 b3 s4 a2, s6 a3 s5 b3,
               b3 b4 a1 s3, s4 a1 s1 a4*, b4 s1 a2 b1,
               a2 a4 b2 b4, a3 b1 b3 a1, a2 s3 a4 s6*,
               b2 s4 b4 s5*, s6 b2 a3 b4, s5 a2 b3 a4",
    },
    SeedRow {
        t: 4,
        sub: "s1 s8 s2 s7, s1 s4 s8 s6, s3 s2 s5 s7,
              s3 s6 s4 s5, s1 s3 s8 s5, s4 s2 s6 s7",
        rest: "a1 a2 a3 s4*, s1 a3 s3 b2, s6 a1 s5 b1,
               a3 a4 b1 s2, s3 b1 s4 b4*, a4 s4 b2 a1,
               b1 b2 b3 s1*, s4 b3 s2 a2, s6 a3 s5 b3,
               b3 b4 a1 s3, s2 a1 s1 a4*, b4 s1 a2 b1,
               a2 a4 b2 b4, a3 b1 b3 a1, a2 s3 a4 s6*,
               b2 s2 b4 s5*, s8 b2 a3 b4, s7 a2 b3 a4,
               s8 a1 s7 b1, s8 a2 s5 a4*, s8 a3 s7 b3,
               s7 b2 s6 b4*",
    },
];

/// A decomposition of a complete or cocktail-party graph, anchored to the two
/// petal classes `p1 = {a1..a4}` and `p2 = {b1..b4}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnchoredSeed {
    pub host: HostGraph,
    /// Number of hub pairs; 0 for the `K_9` seed.
    pub t: usize,
    /// Cycles decomposing the subgraph induced on the hub.
    pub sub_cycles: Vec<Cycle4>,
    /// All cycles, `sub_cycles` included.
    pub full_cycles: Vec<Cycle4>,
    pub key_cycles: Vec<Cycle4>,
    pub p1: Vec<Vertex>,
    pub p2: Vec<Vertex>,
}

impl AnchoredSeed {
    pub fn hub_size(&self) -> usize {
        if self.t == 0 {
            1
        } else {
            2 * self.t
        }
    }

    pub fn hub(&self) -> Vec<Vertex> {
        (0..self.hub_size()).collect()
    }

    pub fn decomposition(&self) -> Decomposition {
        Decomposition::new(self.host.clone(), self.full_cycles.clone()).expect("seed in range")
    }

    /// The hub sub-decomposition on its own host.
    pub fn sub_decomposition(&self) -> Decomposition {
        let host = if self.t == 0 {
            HostGraph::Complete(1)
        } else {
            HostGraph::CocktailParty(2 * self.t)
        };
        Decomposition::new(host, self.sub_cycles.clone()).expect("hub cycles stay on the hub")
    }

    /// Cycles outside the hub sub-decomposition.
    pub fn petal_cycles(&self) -> Vec<Cycle4> {
        self.full_cycles
            .iter()
            .filter(|c| !self.sub_cycles.contains(c))
            .copied()
            .collect()
    }

    /// The anchored colouring: `p1` and the odd-numbered hub vertices get
    /// colour 0, `p2` and the even-numbered ones colour 1. On the `K_9` seed
    /// the hub vertex `s1` takes colour 1.
    pub fn anchored_colouring(&self) -> verify::Colouring {
        let hub = self.hub_size();
        let n = self.host.vertex_count();
        let bits = (0..n)
            .map(|v| {
                if v < hub {
                    if self.t == 0 {
                        1
                    } else {
                        (v % 2) as u8
                    }
                } else {
                    ((v - hub) % 2) as u8
                }
            })
            .collect();
        verify::Colouring::new(bits).expect("bits are 0/1")
    }
}

fn symbol_vertex(sym: &str, hub: usize) -> Vertex {
    let (kind, idx) = sym.split_at(1);
    let idx: usize = idx.parse().expect("seed table symbol index");
    match kind {
        "s" => idx - 1,
        "a" => hub + 2 * (idx - 1),
        "b" => hub + 2 * idx - 1,
        _ => panic!("unknown seed table symbol {sym}"),
    }
}

/// Parses a comma-separated cycle list, returning all cycles and the keys.
fn parse_cycles(text: &str, hub: usize) -> (Vec<Cycle4>, Vec<Cycle4>) {
    let mut all = Vec::new();
    let mut keys = Vec::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let is_key = item.ends_with('*');
        let syms: Vec<Vertex> = item
            .trim_end_matches('*')
            .split_whitespace()
            .map(|s| symbol_vertex(s, hub))
            .collect();
        let q: [Vertex; 4] = syms.try_into().expect("seed table cycle has four symbols");
        let c = Cycle4::new(q).expect("seed table cycle has distinct vertices");
        all.push(c);
        if is_key {
            keys.push(c);
        }
    }
    (all, keys)
}

fn seed_host(t: usize) -> HostGraph {
    if t == 0 {
        HostGraph::Complete(9)
    } else {
        HostGraph::CocktailParty(2 * t + 8)
    }
}

fn petal_classes(hub: usize) -> (Vec<Vertex>, Vec<Vertex>) {
    (
        (0..4).map(|j| hub + 2 * j).collect(),
        (0..4).map(|j| hub + 2 * j + 1).collect(),
    )
}

fn table_seed(row: &SeedRow) -> AnchoredSeed {
    let hub = if row.t == 0 { 1 } else { 2 * row.t };
    let (sub_cycles, _) = parse_cycles(row.sub, hub);
    let (rest, key_cycles) = parse_cycles(row.rest, hub);
    let mut full_cycles = sub_cycles.clone();
    full_cycles.extend(rest);
    let (p1, p2) = petal_classes(hub);
    AnchoredSeed {
        host: seed_host(row.t),
        t: row.t,
        sub_cycles,
        full_cycles,
        key_cycles,
        p1,
        p2,
    }
}

/// Structural self-check: exact coverage of host and hub, petal classes
/// matching the missing 1-factor, and the anchor property.
pub fn self_check(seed: &AnchoredSeed) -> std::result::Result<(), String> {
    let full = seed.decomposition();
    verify::check_exact_cover(&full).map_err(|e| format!("seed t={}: {e}", seed.t))?;
    verify::check_exact_cover(&seed.sub_decomposition())
        .map_err(|e| format!("seed t={} hub: {e}", seed.t))?;
    if !seed.key_cycles.iter().all(|k| seed.full_cycles.contains(k)) {
        return Err(format!(
            "seed t={}: key cycle outside the decomposition",
            seed.t
        ));
    }
    if seed.t > 0 {
        for (&a, &b) in seed.p1.iter().zip(&seed.p2) {
            if seed.host.has_edge(a, b).unwrap_or(true) {
                return Err(format!(
                    "seed t={}: a/b pair {a},{b} is not a missing pair",
                    seed.t
                ));
            }
        }
    }
    let cert = verify::check_anchor(&full, &seed.p1, &seed.p2, verify::DEFAULT_NODE_LIMIT)
        .map_err(|e| e.to_string())?;
    if cert.verdict != Verdict::Pass {
        return Err(format!(
            "seed t={}: not anchored ({})",
            seed.t, cert.verdict
        ));
    }
    Ok(())
}

fn table() -> &'static [AnchoredSeed] {
    static SEEDS: OnceLock<Vec<AnchoredSeed>> = OnceLock::new();
    SEEDS.get_or_init(|| {
        TABLE
            .iter()
            .map(|row| {
                let seed = table_seed(row);
                if let Err(msg) = self_check(&seed) {
                    panic!("corrupt seed table: {msg}");
                }
                seed
            })
            .collect()
    })
}

/// The anchored decomposition of `K_9` with hub `{s1}`.
pub fn k9_seed() -> AnchoredSeed {
    table()[0].clone()
}

/// Shifts petal vertices of a seed with `from_hub` hub vertices to a layout
/// with `to_hub` hub vertices.
fn rehub(c: &Cycle4, from_hub: usize, to_hub: usize) -> Cycle4 {
    c.map(|v| {
        if v < from_hub {
            v
        } else {
            v - from_hub + to_hub
        }
    })
    .expect("relabelling is injective")
}

/// The anchored decomposition of the cocktail party graph on `2t + 8`
/// vertices with hub `{s1..s2t}`. For `t <= 4` it is the table data; larger
/// `t` are built by induction from the seeds for `t - 1` and `t - 4`.
pub fn cocktail_seed(t: usize) -> Result<AnchoredSeed> {
    if t == 0 {
        return Err(Error::Inadmissible("cocktail seeds need t >= 1".into()));
    }
    if t <= 4 {
        return Ok(table()[t].clone());
    }
    let mut seeds: Vec<AnchoredSeed> = table()[1..].to_vec();
    for t in 5..=t {
        let prev = &seeds[t - 2];
        let back4 = &seeds[t - 5];
        let hub = 2 * t;
        let old_hub = 2 * (t - 4);
        // a_i -> s_{2i-1}, b_i -> s_{2i}, s_i -> s_{i+8}
        let sub_cycles: Vec<Cycle4> = back4
            .full_cycles
            .iter()
            .map(|c| {
                c.map(|v| if v < old_hub { v + 8 } else { v - old_hub })
                    .expect("injective")
            })
            .collect();
        let mut full_cycles = sub_cycles.clone();
        full_cycles.extend(prev.petal_cycles().iter().map(|c| rehub(c, hub - 2, hub)));
        for i in 0..4 {
            let (a, b) = (hub + 2 * i, hub + 2 * i + 1);
            full_cycles.push(Cycle4::new([hub - 2, a, hub - 1, b]).expect("distinct"));
        }
        let key_cycles = prev
            .key_cycles
            .iter()
            .map(|c| rehub(c, hub - 2, hub))
            .collect();
        let (p1, p2) = petal_classes(hub);
        seeds.push(AnchoredSeed {
            host: seed_host(t),
            t,
            sub_cycles,
            full_cycles,
            key_cycles,
            p1,
            p2,
        });
    }
    Ok(seeds.pop().expect("t >= 5 pushed at least one seed"))
}

/// `K_{2,2,2}` split into its three complete bipartite sections.
pub fn figure2_fixture() -> Decomposition {
    let host = HostGraph::CompleteMultipartite(vec![2, 2, 2]);
    let parts = host.parts().expect("multipartite");
    let mut cycles = Vec::new();
    for p in 0..3 {
        for q in p + 1..3 {
            let (x, y) = (parts[p].start, parts[q].start);
            cycles.push(Cycle4::new([x, y, x + 1, y + 1]).expect("distinct"));
        }
    }
    Decomposition::new(host, cycles).expect("in range")
}
