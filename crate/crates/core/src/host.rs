//! Host graphs, 4-cycles in canonical form, and decompositions.

use std::fmt;
use std::ops::Range;

use crate::error::{Error, Result};

/// Dense vertex index into a host's vertex list.
pub type Vertex = usize;

/// The three graph families that get decomposed.
///
/// `CocktailParty(n)` is `K_n` minus the perfect matching `{2k, 2k+1}`.
/// `CompleteMultipartite` parts occupy consecutive index ranges in listed
/// order, and each part is ordered by vertex index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum HostGraph {
    Complete(usize),
    CocktailParty(usize),
    CompleteMultipartite(Vec<usize>),
}

impl HostGraph {
    pub fn complete(n: usize) -> Result<Self> {
        let host = HostGraph::Complete(n);
        host.validate()?;
        Ok(host)
    }

    pub fn cocktail_party(n: usize) -> Result<Self> {
        let host = HostGraph::CocktailParty(n);
        host.validate()?;
        Ok(host)
    }

    pub fn multipartite(parts: Vec<usize>) -> Result<Self> {
        let host = HostGraph::CompleteMultipartite(parts);
        host.validate()?;
        Ok(host)
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            HostGraph::Complete(0) => Err(Error::InvalidHost("complete graph needs n >= 1".into())),
            HostGraph::CocktailParty(n) if *n < 2 || n % 2 != 0 => Err(Error::InvalidHost(
                format!("cocktail party graph needs an even n >= 2, got {n}"),
            )),
            HostGraph::CompleteMultipartite(parts) if parts.is_empty() => Err(Error::InvalidHost(
                "multipartite graph needs at least one part".into(),
            )),
            HostGraph::CompleteMultipartite(parts) if parts.contains(&0) => Err(
                Error::InvalidHost("multipartite parts must be nonempty".into()),
            ),
            _ => Ok(()),
        }
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            HostGraph::Complete(n) | HostGraph::CocktailParty(n) => *n,
            HostGraph::CompleteMultipartite(parts) => parts.iter().sum(),
        }
    }

    pub fn edge_count(&self) -> usize {
        match self {
            HostGraph::Complete(n) => n * n.saturating_sub(1) / 2,
            HostGraph::CocktailParty(n) => n * n.saturating_sub(2) / 2,
            HostGraph::CompleteMultipartite(parts) => {
                let total: usize = parts.iter().sum();
                let squares: usize = parts.iter().map(|s| s * s).sum();
                (total * total - squares) / 2
            }
        }
    }

    /// Index ranges of the parts, or `None` if the host is not multipartite.
    pub fn parts(&self) -> Option<Vec<Range<Vertex>>> {
        match self {
            HostGraph::CompleteMultipartite(sizes) => {
                let mut start = 0;
                Some(
                    sizes
                        .iter()
                        .map(|s| {
                            let r = start..start + s;
                            start += s;
                            r
                        })
                        .collect(),
                )
            }
            _ => None,
        }
    }

    fn part_index(sizes: &[usize], v: Vertex) -> usize {
        let mut acc = 0;
        for (p, s) in sizes.iter().enumerate() {
            acc += s;
            if v < acc {
                return p;
            }
        }
        unreachable!("vertex checked against vertex_count")
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        let count = self.vertex_count();
        if v >= count {
            return Err(Error::VertexOutOfRange { vertex: v, count });
        }
        Ok(())
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        Ok(match self {
            HostGraph::Complete(_) => true,
            HostGraph::CocktailParty(_) => u / 2 != v / 2,
            HostGraph::CompleteMultipartite(sizes) => {
                Self::part_index(sizes, u) != Self::part_index(sizes, v)
            }
        })
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let n = self.vertex_count();
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..n {
            for v in u + 1..n {
                if self.has_edge(u, v).unwrap_or(false) {
                    out.push((u, v));
                }
            }
        }
        out
    }
}

impl fmt::Display for HostGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HostGraph::Complete(n) => write!(f, "complete {n}"),
            HostGraph::CocktailParty(n) => write!(f, "cocktail {n}"),
            HostGraph::CompleteMultipartite(parts) => {
                f.write_str("multipartite")?;
                for s in parts {
                    write!(f, " {s}")?;
                }
                Ok(())
            }
        }
    }
}

/// An undirected 4-cycle stored in canonical form: the minimum vertex first,
/// followed by its smaller neighbour.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cycle4([Vertex; 4]);

impl Cycle4 {
    /// Canonical representative of the cycle `q[0]-q[1]-q[2]-q[3]-q[0]`.
    pub fn new(q: [Vertex; 4]) -> Result<Self> {
        for a in 0..4 {
            for b in a + 1..4 {
                if q[a] == q[b] {
                    return Err(Error::RepeatedVertex(q[a]));
                }
            }
        }
        let k = (0..4).min_by_key(|&i| q[i]).unwrap();
        let next = q[(k + 1) % 4];
        let prev = q[(k + 3) % 4];
        let out = if next < prev {
            [q[k], next, q[(k + 2) % 4], prev]
        } else {
            [q[k], prev, q[(k + 2) % 4], next]
        };
        Ok(Cycle4(out))
    }

    pub fn vertices(&self) -> [Vertex; 4] {
        self.0
    }

    /// The four edges, each as `(min, max)`.
    pub fn edges(&self) -> [(Vertex, Vertex); 4] {
        let v = self.0;
        let e = |a: Vertex, b: Vertex| (a.min(b), a.max(b));
        [e(v[0], v[1]), e(v[1], v[2]), e(v[2], v[3]), e(v[3], v[0])]
    }

    /// Applies a vertex relabelling and re-canonicalises.
    pub fn map(&self, f: impl Fn(Vertex) -> Vertex) -> Result<Self> {
        Cycle4::new(self.0.map(f))
    }
}

impl fmt::Display for Cycle4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "{a} {b} {c} {d}")
    }
}

/// A host together with a list of 4-cycles.
///
/// Construction only checks vertex ranges; exact coverage is certified by
/// [`crate::verify::check_exact_cover`]. Cycles keep their insertion order so
/// duplicates remain visible to the checker.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    host: HostGraph,
    cycles: Vec<Cycle4>,
}

impl Decomposition {
    pub fn new(host: HostGraph, cycles: Vec<Cycle4>) -> Result<Self> {
        host.validate()?;
        let count = host.vertex_count();
        for c in &cycles {
            if let Some(&v) = c.vertices().iter().find(|&&v| v >= count) {
                return Err(Error::VertexOutOfRange { vertex: v, count });
            }
        }
        Ok(Decomposition { host, cycles })
    }

    pub fn empty(host: HostGraph) -> Result<Self> {
        Self::new(host, Vec::new())
    }

    pub fn host(&self) -> &HostGraph {
        &self.host
    }

    pub fn cycles(&self) -> &[Cycle4] {
        &self.cycles
    }

    pub fn vertex_count(&self) -> usize {
        self.host.vertex_count()
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// Cycles sorted lexicographically by canonical form.
    pub fn sorted_cycles(&self) -> Vec<Cycle4> {
        let mut v = self.cycles.clone();
        v.sort();
        v
    }

    pub fn into_parts(self) -> (HostGraph, Vec<Cycle4>) {
        (self.host, self.cycles)
    }
}
