//! The ordered label set `Z_ell x Z_2 x Z_2` that names the vertices of one
//! part, together with its three pair partitions and the colouring
//! predicates built on top of them.
//!
//! Labels are indexed densely by lexicographic rank `4i + 2j + c`; every
//! sequence in this crate that is indexed by labels uses that rank.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label {
    pub i: usize,
    pub j: u8,
    pub c: u8,
}

impl Label {
    pub fn new(i: usize, j: u8, c: u8, ell: usize) -> Result<Self> {
        let label = Label { i, j, c };
        label.check(ell)?;
        Ok(label)
    }

    fn check(&self, ell: usize) -> Result<()> {
        if ell == 0 {
            return Err(Error::ZeroEll);
        }
        if self.i >= ell || self.j > 1 || self.c > 1 {
            return Err(Error::LabelOutOfRange {
                i: self.i,
                j: self.j,
                c: self.c,
                ell,
            });
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        4 * self.i + 2 * self.j as usize + self.c as usize
    }

    pub fn from_rank(rank: usize) -> Self {
        Label {
            i: rank / 4,
            j: ((rank / 2) % 2) as u8,
            c: (rank % 2) as u8,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.i, self.j, self.c)
    }
}

/// All `4 * ell` labels in increasing order.
pub fn labels(ell: usize) -> impl Iterator<Item = Label> {
    (0..4 * ell).map(Label::from_rank)
}

/// Immediate lexicographic successor; the largest label wraps to `(0,0,0)`.
pub fn successor(x: Label, ell: usize) -> Result<Label> {
    x.check(ell)?;
    Ok(Label::from_rank((x.rank() + 1) % (4 * ell)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PairKind {
    Alpha,
    Beta,
    Gamma,
}

impl fmt::Display for PairKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PairKind::Alpha => "alpha",
            PairKind::Beta => "beta",
            PairKind::Gamma => "gamma",
        })
    }
}

/// A two-element block of one of the pair partitions.
///
/// For alpha and beta pairs `hi` is always the successor of `lo`, so the
/// wrap-around beta pair is stored as `lo = (ell-1,1,1)`, `hi = (0,0,0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LabelPair {
    pub lo: Label,
    pub hi: Label,
    pub kind: PairKind,
}

impl LabelPair {
    /// `Gamma_{i,c} = {(i,0,c), (i,1,c)}`.
    pub fn gamma(i: usize, c: u8) -> Self {
        LabelPair {
            lo: Label { i, j: 0, c },
            hi: Label { i, j: 1, c },
            kind: PairKind::Gamma,
        }
    }
}

pub fn pair_partition(ell: usize, kind: PairKind) -> Result<Vec<LabelPair>> {
    if ell == 0 {
        return Err(Error::ZeroEll);
    }
    let n = 4 * ell;
    let pairs = match kind {
        PairKind::Alpha => (0..n)
            .step_by(2)
            .map(|r| LabelPair {
                lo: Label::from_rank(r),
                hi: Label::from_rank(r + 1),
                kind,
            })
            .collect(),
        PairKind::Beta => (1..n)
            .step_by(2)
            .map(|r| LabelPair {
                lo: Label::from_rank(r),
                hi: Label::from_rank((r + 1) % n),
                kind,
            })
            .collect(),
        PairKind::Gamma => (0..ell)
            .flat_map(|i| [LabelPair::gamma(i, 0), LabelPair::gamma(i, 1)])
            .collect(),
    };
    Ok(pairs)
}

/// A 2-colouring of a single part, indexed by label rank.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartColouring {
    bits: Vec<u8>,
}

impl PartColouring {
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        if bits.is_empty() || !bits.len().is_multiple_of(4) {
            return Err(Error::PartLength(bits.len()));
        }
        if let Some(&bad) = bits.iter().find(|&&b| b > 1) {
            return Err(Error::ColourValue(bad));
        }
        Ok(PartColouring { bits })
    }

    /// The colouring whose bit `r` is bit `r` of `mask`.
    pub fn from_mask(ell: usize, mask: u64) -> Result<Self> {
        if ell == 0 {
            return Err(Error::ZeroEll);
        }
        Self::new((0..4 * ell).map(|r| ((mask >> r) & 1) as u8).collect())
    }

    pub fn ell(&self) -> usize {
        self.bits.len() / 4
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn colour(&self, x: Label) -> u8 {
        self.bits[x.rank()]
    }

    pub fn complement(&self) -> Self {
        PartColouring {
            bits: self.bits.iter().map(|b| 1 - b).collect(),
        }
    }
}

fn partition_unchecked(ell: usize, kind: PairKind) -> Vec<LabelPair> {
    pair_partition(ell, kind).expect("PartColouring guarantees ell >= 1")
}

/// Number of pairs of `kind` that are twin-pairs of type 0 and of type 1.
pub fn count_twin_pairs(col: &PartColouring, kind: PairKind) -> (usize, usize) {
    let mut counts = (0, 0);
    for p in partition_unchecked(col.ell(), kind) {
        let (a, b) = (col.colour(p.lo), col.colour(p.hi));
        if a == b {
            if a == 0 {
                counts.0 += 1;
            } else {
                counts.1 += 1;
            }
        }
    }
    counts
}

pub fn is_free_of(col: &PartColouring, kind: PairKind) -> bool {
    count_twin_pairs(col, kind) == (0, 0)
}

/// Every label differs in colour from its successor, wrap-around included.
pub fn is_alt_colouring(col: &PartColouring) -> bool {
    let n = col.bits.len();
    (0..n).all(|r| col.bits[r] != col.bits[(r + 1) % n])
}

/// Alternation tested as "alpha-free and beta-free".
pub fn is_alt_by_twin_pairs(col: &PartColouring) -> bool {
    is_free_of(col, PairKind::Alpha) && is_free_of(col, PairKind::Beta)
}

/// Alternation tested as "the colour classes are exactly the c = 0 labels
/// and the c = 1 labels".
pub fn is_alt_by_classes(col: &PartColouring) -> bool {
    let first = col.bits[0];
    labels(col.ell()).all(|x| col.colour(x) == first ^ x.c)
}

/// Colours every `c = 0` label with `first_colour` and every `c = 1` label
/// with the other colour.
pub fn canonical_alt_colouring(ell: usize, first_colour: u8) -> Result<PartColouring> {
    if ell == 0 {
        return Err(Error::ZeroEll);
    }
    if first_colour > 1 {
        return Err(Error::ColourValue(first_colour));
    }
    PartColouring::new(labels(ell).map(|x| first_colour ^ x.c).collect())
}
