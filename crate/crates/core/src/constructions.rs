//! Product-style 4-cycle decompositions of complete bipartite and complete
//! multipartite graphs whose parts are copies of the label set.
//!
//! Every part `p` of a multipartite host built here holds `4 * ell_p`
//! vertices; the vertex carrying label rank `r` in part `p` has index
//! `offset_p + r`, so part order and label order agree.

use std::collections::HashSet;
use std::ops::Range;

use crate::error::{Error, Result};
use crate::host::{Cycle4, Decomposition, HostGraph, Vertex};
use crate::labels::{pair_partition, Label, LabelPair, PairKind};

/// Orientation of every pair of blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tournament {
    size: usize,
    arcs: Vec<bool>,
}

impl Tournament {
    /// `i -> j` for every `i < j`.
    pub fn transitive(size: usize) -> Self {
        let mut arcs = vec![false; size * size];
        for i in 0..size {
            for j in i + 1..size {
                arcs[i * size + j] = true;
            }
        }
        Tournament { size, arcs }
    }

    /// The directed triangle `0 -> 1 -> 2 -> 0`.
    pub fn directed_triangle() -> Self {
        Self::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).expect("valid triangle")
    }

    /// Builds a tournament from a complete list of arcs. Every unordered pair
    /// must be oriented exactly once.
    pub fn from_arcs(size: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut m = vec![false; size * size];
        for &(a, b) in arcs {
            if a >= size || b >= size || a == b {
                return Err(Error::BlockMismatch(format!(
                    "bad arc {a}->{b} for {size} vertices"
                )));
            }
            if m[a * size + b] || m[b * size + a] {
                return Err(Error::BlockMismatch(format!(
                    "pair {{{a},{b}}} oriented twice"
                )));
            }
            m[a * size + b] = true;
        }
        for i in 0..size {
            for j in i + 1..size {
                if !m[i * size + j] && !m[j * size + i] {
                    return Err(Error::BlockMismatch(format!(
                        "pair {{{i},{j}}} not oriented"
                    )));
                }
            }
        }
        Ok(Tournament { size, arcs: m })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn has_arc(&self, from: usize, to: usize) -> bool {
        self.arcs[from * self.size + to]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Zero,
    One,
}

/// Pair partitions of the two sides of a complete bipartite graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartitePairing {
    pub side0_pairs: Vec<LabelPair>,
    pub side1_pairs: Vec<LabelPair>,
}

/// `{(a, b, a', b') : {a,a'} in side 0, {b,b'} in side 1}`, mapped into the
/// host by `embed`. Each side's pairs must be disjoint and the embedding
/// injective on the labels used.
pub fn bd(
    pairing: &BipartitePairing,
    embed: impl Fn(Side, Label) -> Vertex,
) -> Result<Vec<Cycle4>> {
    let map_side = |side: Side, pairs: &[LabelPair]| -> Vec<(Vertex, Vertex)> {
        pairs
            .iter()
            .map(|p| (embed(side, p.lo), embed(side, p.hi)))
            .collect()
    };
    let zero = map_side(Side::Zero, &pairing.side0_pairs);
    let one = map_side(Side::One, &pairing.side1_pairs);
    let mut seen = HashSet::new();
    for &(a, b) in zero.iter().chain(&one) {
        for v in [a, b] {
            if !seen.insert(v) {
                return Err(Error::NonInjectiveEmbed(v));
            }
        }
    }
    let mut out = Vec::with_capacity(zero.len() * one.len());
    for &(a, a2) in &zero {
        for &(b, b2) in &one {
            out.push(Cycle4::new([a, b, a2, b2])?);
        }
    }
    Ok(out)
}

/// The pair partitions used by each bridge kind.
pub fn bridge_pairing(kind: PairKind, ell0: usize, ell1: usize) -> Result<BipartitePairing> {
    Ok(match kind {
        PairKind::Alpha | PairKind::Beta => BipartitePairing {
            side0_pairs: pair_partition(ell0, kind)?,
            side1_pairs: pair_partition(ell1, kind)?,
        },
        PairKind::Gamma => {
            return Err(Error::Inadmissible(
                "the gamma bridge is not a single product".into(),
            ))
        }
    })
}

/// The alpha-, beta- or gamma-decomposition of the complete bipartite graph
/// between a part of `4 * ell0` labels (side 0) and one of `4 * ell1`.
///
/// The gamma decomposition pairs `{Gamma_{0,0}, Gamma_{0,1}}` on side 0 with
/// the alpha partition of side 1, and the remaining gamma pairs with the beta
/// partition; it needs `ell0 > 1`.
pub fn bipartite_decomposition(
    kind: PairKind,
    ell0: usize,
    ell1: usize,
    embed: impl Fn(Side, Label) -> Vertex,
) -> Result<Vec<Cycle4>> {
    if ell0 == 0 || ell1 == 0 {
        return Err(Error::ZeroEll);
    }
    match kind {
        PairKind::Alpha | PairKind::Beta => bd(&bridge_pairing(kind, ell0, ell1)?, embed),
        PairKind::Gamma => {
            if ell0 < 2 {
                return Err(Error::GammaNeedsLargerEll(ell0));
            }
            let gammas = pair_partition(ell0, PairKind::Gamma)?;
            let (head, rest) = gammas.split_at(2);
            let mut out = bd(
                &BipartitePairing {
                    side0_pairs: head.to_vec(),
                    side1_pairs: pair_partition(ell1, PairKind::Alpha)?,
                },
                &embed,
            )?;
            out.extend(bd(
                &BipartitePairing {
                    side0_pairs: rest.to_vec(),
                    side1_pairs: pair_partition(ell1, PairKind::Beta)?,
                },
                &embed,
            )?);
            Ok(out)
        }
    }
}

/// The bridge between two parts placed at `offset0` (side 0) and `offset1`.
pub fn bridge(
    kind: PairKind,
    ell0: usize,
    ell1: usize,
    offset0: Vertex,
    offset1: Vertex,
) -> Result<Vec<Cycle4>> {
    bipartite_decomposition(kind, ell0, ell1, |side, x| match side {
        Side::Zero => offset0 + x.rank(),
        Side::One => offset1 + x.rank(),
    })
}

/// A bipartite decomposition as a standalone two-part decomposition.
pub fn bipartite(kind: PairKind, ell0: usize, ell1: usize) -> Result<Decomposition> {
    let cycles = bridge(kind, ell0, ell1, 0, 4 * ell0)?;
    Decomposition::new(HostGraph::multipartite(vec![4 * ell0, 4 * ell1])?, cycles)
}

/// Swaps the roles of two equal-sized sides, vertex by vertex.
pub fn reverse_bridge(
    cycles: &[Cycle4],
    side0: Range<Vertex>,
    side1: Range<Vertex>,
) -> Result<Vec<Cycle4>> {
    if side0.len() != side1.len() {
        return Err(Error::UnequalSides(side0.len(), side1.len()));
    }
    let swap = |v: Vertex| {
        if side0.contains(&v) {
            v - side0.start + side1.start
        } else if side1.contains(&v) {
            v - side1.start + side0.start
        } else {
            v
        }
    };
    cycles.iter().map(|c| c.map(swap)).collect()
}

fn part_offsets(ells: &[usize]) -> Vec<Vertex> {
    let mut offs = Vec::with_capacity(ells.len());
    let mut acc = 0;
    for &e in ells {
        offs.push(acc);
        acc += 4 * e;
    }
    offs
}

pub fn multipartite_host(ells: &[usize]) -> Result<HostGraph> {
    if ells.contains(&0) {
        return Err(Error::ZeroEll);
    }
    HostGraph::multipartite(ells.iter().map(|e| 4 * e).collect())
}

/// Patches block decompositions together with bridges oriented by a
/// tournament.
///
/// Block `i` covers `block_sizes[i]` consecutive parts. For parts `p` in
/// block `a` and `q` in block `b != a`, the bridge is laid with `p` as side 0
/// when the tournament has the arc `a -> b`, otherwise with `q` as side 0.
pub fn delta(
    block_sizes: &[usize],
    blocks: &[Decomposition],
    tournament: &Tournament,
    bridge_kind: PairKind,
    ells: &[usize],
) -> Result<Decomposition> {
    if block_sizes.len() != blocks.len() || blocks.len() != tournament.size() {
        return Err(Error::BlockMismatch(format!(
            "{} block sizes, {} blocks, tournament on {}",
            block_sizes.len(),
            blocks.len(),
            tournament.size()
        )));
    }
    if block_sizes.iter().sum::<usize>() != ells.len() || block_sizes.contains(&0) {
        return Err(Error::BlockMismatch(format!(
            "block sizes {block_sizes:?} do not tile {} parts",
            ells.len()
        )));
    }
    if bridge_kind == PairKind::Gamma {
        if let Some(&e) = ells.iter().find(|&&e| e < 2) {
            return Err(Error::GammaNeedsLargerEll(e));
        }
    }
    let host = multipartite_host(ells)?;
    let offsets = part_offsets(ells);

    let mut block_of = Vec::with_capacity(ells.len());
    let mut first_part = Vec::with_capacity(blocks.len());
    for (b, &size) in block_sizes.iter().enumerate() {
        first_part.push(block_of.len());
        block_of.extend(std::iter::repeat_n(b, size));
    }

    let mut cycles = Vec::with_capacity(host.edge_count() / 4);
    for (b, block) in blocks.iter().enumerate() {
        let parts = first_part[b]..first_part[b] + block_sizes[b];
        let expected = multipartite_host(&ells[parts.clone()])?;
        if *block.host() != expected {
            return Err(Error::BlockMismatch(format!(
                "block {b} has host `{}`, expected `{expected}`",
                block.host()
            )));
        }
        let shift = offsets[parts.start];
        for c in block.cycles() {
            cycles.push(c.map(|v| v + shift)?);
        }
    }

    for p in 0..ells.len() {
        for q in p + 1..ells.len() {
            let (bp, bq) = (block_of[p], block_of[q]);
            if bp == bq {
                continue;
            }
            let (s0, s1) = if tournament.has_arc(bp, bq) {
                (p, q)
            } else {
                (q, p)
            };
            cycles.extend(bridge(
                bridge_kind,
                ells[s0],
                ells[s1],
                offsets[s0],
                offsets[s1],
            )?);
        }
    }

    let mut seen = HashSet::with_capacity(cycles.len());
    for c in &cycles {
        if !seen.insert(*c) {
            return Err(Error::DuplicateCycle(c.vertices()));
        }
    }
    Decomposition::new(host, cycles)
}

/// The edgeless decomposition of a single part.
pub fn single_part(ell: usize) -> Result<Decomposition> {
    Decomposition::empty(multipartite_host(&[ell])?)
}

/// All blocks are single parts joined by a side-symmetric bridge, with the
/// default transitive orientation.
pub fn delta_singletons(kind: PairKind, ells: &[usize]) -> Result<Decomposition> {
    let blocks = ells
        .iter()
        .map(|&e| single_part(e))
        .collect::<Result<Vec<_>>>()?;
    delta(
        &vec![1; ells.len()],
        &blocks,
        &Tournament::transitive(ells.len()),
        kind,
        ells,
    )
}

/// Extends a decomposition on `h - 2` parts by two more parts, joined to
/// everything through gamma bridges oriented along the directed triangle.
pub fn exclusiviser(d: &Decomposition, ells: &[usize]) -> Result<Decomposition> {
    let h = ells.len();
    if h < 3 {
        return Err(Error::Inadmissible(format!(
            "the exclusiviser needs h >= 3, got {h}"
        )));
    }
    if let Some(&e) = ells.iter().find(|&&e| e < 2) {
        return Err(Error::GammaNeedsLargerEll(e));
    }
    let blocks = [
        d.clone(),
        single_part(ells[h - 2])?,
        single_part(ells[h - 1])?,
    ];
    delta(
        &[h - 2, 1, 1],
        &blocks,
        &Tournament::directed_triangle(),
        PairKind::Gamma,
        ells,
    )
}

/// Four parts: two alpha-joined pairs, joined to each other by beta bridges.
pub fn d_alpha_beta(ell: usize) -> Result<Decomposition> {
    if ell == 0 {
        return Err(Error::ZeroEll);
    }
    let pair = delta_singletons(PairKind::Alpha, &[ell, ell])?;
    delta(
        &[2, 2],
        &[pair.clone(), pair],
        &Tournament::transitive(2),
        PairKind::Beta,
        &[ell; 4],
    )
}

/// Exclusively alt-colourable decomposition of the complete multipartite
/// graph with parts of sizes `4 * ells[i]`, for at least six parts each with
/// `ell >= 2`.
pub fn exclusively_alt(ells: &[usize]) -> Result<Decomposition> {
    let h = ells.len();
    if h < 6 {
        return Err(Error::Inadmissible(format!(
            "need at least 6 parts, got {h}"
        )));
    }
    if let Some(&e) = ells.iter().find(|&&e| e < 2) {
        return Err(Error::Inadmissible(format!(
            "every ell must be >= 2, got {e}"
        )));
    }
    let inner = &ells[..h - 2];
    let first = delta_singletons(PairKind::Alpha, &inner[..2])?;
    let rest = delta_singletons(PairKind::Alpha, &inner[2..])?;
    let core = delta(
        &[2, h - 4],
        &[first, rest],
        &Tournament::transitive(2),
        PairKind::Beta,
        inner,
    )?;
    exclusiviser(&core, ells)
}
