//! The flower operator and the two top-level constructions: uniquely
//! 2-colourable 4-cycle systems of order `8h + 1` and uniquely 2-colourable
//! 4-cycle decompositions of cocktail party graphs of order `8h + 2t`.
//!
//! Host layout: hub vertices first (`s1` alone, or `s1..s2t`), then petal `i`
//! (1-based) on `hub + 8(i-1) .. hub + 8i`, in the order `v_{i,1} .. v_{i,8}`.

use crate::constructions::exclusively_alt;
use crate::error::{Error, Result};
use crate::host::{Cycle4, Decomposition, HostGraph, Vertex};
use crate::seeds::{cocktail_seed, k9_seed, AnchoredSeed};
use crate::verify::Colouring;

/// Smallest number of petals the multipartite core supports.
pub const MIN_PETALS: usize = 6;

/// `r` petal copies of an anchored seed sharing its hub.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowerPlan {
    r: usize,
    seed: AnchoredSeed,
    host: HostGraph,
}

impl FlowerPlan {
    pub fn new(r: usize, seed: AnchoredSeed) -> Result<Self> {
        if r == 0 {
            return Err(Error::Inadmissible(
                "a flower needs at least one petal".into(),
            ));
        }
        let n = seed.hub_size() + 8 * r;
        let host = match seed.host {
            HostGraph::Complete(_) => HostGraph::complete(n)?,
            HostGraph::CocktailParty(_) => HostGraph::cocktail_party(n)?,
            HostGraph::CompleteMultipartite(_) => {
                return Err(Error::InvalidHost(
                    "a seed host cannot be multipartite".into(),
                ))
            }
        };
        Ok(FlowerPlan { r, seed, host })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn seed(&self) -> &AnchoredSeed {
        &self.seed
    }

    pub fn host(&self) -> &HostGraph {
        &self.host
    }

    /// Sends a seed vertex to petal `i` (1-based); hub vertices are fixed.
    pub fn theta(&self, i: usize, v: Vertex) -> Vertex {
        if v < self.seed.hub_size() {
            v
        } else {
            v + 8 * (i - 1)
        }
    }

    /// Host vertices of petal `i` (1-based).
    pub fn petal(&self, i: usize) -> std::ops::Range<Vertex> {
        let start = self.seed.hub_size() + 8 * (i - 1);
        start..start + 8
    }
}

/// The hub decomposition once, plus every petal's copy of the remaining
/// seed cycles.
pub fn flower(plan: &FlowerPlan) -> Vec<Cycle4> {
    let petal_cycles = plan.seed.petal_cycles();
    let mut out = plan.seed.sub_cycles.clone();
    for i in 1..=plan.r {
        out.extend(
            petal_cycles
                .iter()
                .map(|c| c.map(|v| plan.theta(i, v)).expect("theta is injective")),
        );
    }
    out
}

fn assemble(plan: FlowerPlan) -> Result<Decomposition> {
    let hub = plan.seed.hub_size();
    let core = exclusively_alt(&vec![2; plan.r])?;
    let mut cycles: Vec<Cycle4> = core
        .cycles()
        .iter()
        .map(|c| c.map(|v| v + hub).expect("shift is injective"))
        .collect();
    cycles.extend(flower(&plan));
    Decomposition::new(plan.host, cycles)
}

/// A uniquely 2-colourable 4-cycle system of order `n`, for `n ≡ 1 (mod 8)`
/// and `n >= 49`.
pub fn build_k4cs(n: usize) -> Result<Decomposition> {
    if n % 8 != 1 || n < 8 * MIN_PETALS + 1 {
        return Err(Error::Inadmissible(format!(
            "a 4-cycle system here needs n = 1 mod 8 and n >= 49, got {n}"
        )));
    }
    assemble(FlowerPlan::new((n - 1) / 8, k9_seed())?)
}

/// Default `(h, t)` with `n = 8h + 2t`, `1 <= t <= 4` and `h >= 6`.
pub fn cocktail_params(n: usize) -> Result<(usize, usize)> {
    if !n.is_multiple_of(2) || n < 8 * MIN_PETALS + 2 {
        return Err(Error::Inadmissible(format!(
            "a cocktail party decomposition here needs even n >= 50, got {n}"
        )));
    }
    let t = match (n % 8) / 2 {
        0 => 4,
        t => t,
    };
    Ok(((n - 2 * t) / 8, t))
}

/// A uniquely 2-colourable 4-cycle decomposition of the cocktail party graph
/// of even order `n >= 50`.
pub fn build_cocktail(n: usize) -> Result<Decomposition> {
    let (h, t) = cocktail_params(n)?;
    build_cocktail_with(h, t)
}

/// As [`build_cocktail`] with an explicit split `n = 8h + 2t`.
pub fn build_cocktail_with(h: usize, t: usize) -> Result<Decomposition> {
    if h < MIN_PETALS || t == 0 {
        return Err(Error::Inadmissible(format!(
            "need h >= 6 and t >= 1, got h = {h}, t = {t}"
        )));
    }
    assemble(FlowerPlan::new(h, cocktail_seed(t)?)?)
}

/// The colouring certified by the constructions: odd-numbered petal vertices
/// and odd-numbered hub vertices get colour 0, the rest colour 1. On a
/// complete host the lone hub vertex gets colour 1.
pub fn canonical_colouring(host: &HostGraph) -> Result<Colouring> {
    let n = host.vertex_count();
    let bits = match host {
        HostGraph::Complete(_) => (0..n)
            .map(|v| if v == 0 { 1 } else { ((v - 1) % 2) as u8 })
            .collect(),
        HostGraph::CocktailParty(_) => (0..n).map(|v| (v % 2) as u8).collect(),
        HostGraph::CompleteMultipartite(_) => return Err(Error::NotMultipartite),
    };
    Colouring::new(bits)
}
