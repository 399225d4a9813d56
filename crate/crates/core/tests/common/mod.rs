//! Independent oracles shared by the integration tests. Nothing here calls
//! into the library's verifier.

#![allow(dead_code)]

use std::collections::HashMap;

use quadcycle::{Decomposition, HostGraph};

pub fn cycle_lists(d: &Decomposition) -> Vec<[usize; 4]> {
    d.cycles().iter().map(|c| c.vertices()).collect()
}

/// Every proper 2-colouring by exhaustive search over `2^n` assignments,
/// in increasing mask order.
pub fn brute_force_models(n: usize, cycles: &[[usize; 4]]) -> Vec<Vec<u8>> {
    assert!(n <= 24, "brute force is limited to small hosts");
    let masks: Vec<u32> = cycles
        .iter()
        .map(|c| c.iter().map(|&v| 1u32 << v).sum())
        .collect();
    (0..1u32 << n)
        .filter(|&m| masks.iter().all(|&cm| m & cm != 0 && m & cm != cm))
        .map(|m| (0..n).map(|v| ((m >> v) & 1) as u8).collect())
        .collect()
}

fn part_of(sizes: &[usize]) -> Vec<usize> {
    sizes
        .iter()
        .enumerate()
        .flat_map(|(p, &s)| std::iter::repeat_n(p, s))
        .collect()
}

/// Host edges computed from the family definition alone.
pub fn oracle_edges(host: &HostGraph) -> Vec<(usize, usize)> {
    let n = host.vertex_count();
    let adjacent: Box<dyn Fn(usize, usize) -> bool> = match host {
        HostGraph::Complete(_) => Box::new(|_, _| true),
        HostGraph::CocktailParty(_) => Box::new(|u, v| u / 2 != v / 2),
        HostGraph::CompleteMultipartite(sizes) => {
            let part = part_of(sizes);
            Box::new(move |u, v| part[u] != part[v])
        }
    };
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if adjacent(u, v) {
                out.push((u, v));
            }
        }
    }
    out
}

/// Each host edge in exactly one cycle, and no cycle edge outside the host.
pub fn oracle_exact_cover(d: &Decomposition) -> bool {
    let mut uses: HashMap<(usize, usize), usize> =
        oracle_edges(d.host()).into_iter().map(|e| (e, 0)).collect();
    for q in cycle_lists(d) {
        for k in 0..4 {
            let (a, b) = (q[k], q[(k + 1) % 4]);
            match uses.get_mut(&(a.min(b), a.max(b))) {
                Some(n) => *n += 1,
                None => return false,
            }
        }
    }
    uses.values().all(|&n| n == 1)
}

/// Colours along `part` alternate, wrap-around included.
pub fn alternates(bits: &[u8], part: std::ops::Range<usize>) -> bool {
    let v: Vec<u8> = bits[part].to_vec();
    v.len() >= 2 && (0..v.len()).all(|i| v[i] != v[(i + 1) % v.len()])
}

pub fn part_ranges(sizes: &[usize]) -> Vec<std::ops::Range<usize>> {
    let mut start = 0;
    sizes
        .iter()
        .map(|&s| {
            start += s;
            start - s..start
        })
        .collect()
}

/// `(type-0, type-1)` twin-pair counts from rank arithmetic: alpha pairs are
/// ranks `(2k, 2k+1)`, beta pairs `(2k+1, 2k+2 mod 4l)`.
pub fn twin_counts(bits: &[u8], beta: bool) -> (usize, usize) {
    let n = bits.len();
    let mut c = (0, 0);
    for k in 0..n / 2 {
        let (x, y) = if beta {
            (2 * k + 1, (2 * k + 2) % n)
        } else {
            (2 * k, 2 * k + 1)
        };
        if bits[x] == bits[y] {
            if bits[x] == 0 {
                c.0 += 1;
            } else {
                c.1 += 1;
            }
        }
    }
    c
}

pub fn mask_bits(n: usize, m: u64) -> Vec<u8> {
    (0..n).map(|v| ((m >> v) & 1) as u8).collect()
}

pub fn monochromatic_cycles(bits: &[u8], cycles: &[[usize; 4]]) -> usize {
    cycles
        .iter()
        .filter(|q| q.iter().all(|&v| bits[v] == bits[q[0]]))
        .count()
}
