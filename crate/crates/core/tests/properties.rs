mod common;

use common::*;
use proptest::prelude::*;
use quadcycle::constructions::{
    bipartite, d_alpha_beta, delta_singletons, exclusively_alt, exclusiviser, reverse_bridge,
    single_part,
};
use quadcycle::host::Cycle4;
use quadcycle::labels::{
    canonical_alt_colouring, count_twin_pairs, is_free_of, pair_partition, LabelPair, PairKind,
    PartColouring,
};
use quadcycle::seeds::{cocktail_seed, figure2_fixture, k9_seed};
use quadcycle::verify::{
    self, check_exact_cover, Colouring, CoverFault, SolveLimits, Verdict, DEFAULT_NODE_LIMIT,
};
use quadcycle::{Decomposition, HostGraph};

fn side(bits: &[u8], range: std::ops::Range<usize>) -> PartColouring {
    PartColouring::new(bits[range].to_vec()).unwrap()
}

#[test]
fn pair_partitions_cover_every_label_once() {
    for ell in 1..=4 {
        for kind in [PairKind::Alpha, PairKind::Beta, PairKind::Gamma] {
            let mut seen = vec![0; 4 * ell];
            for LabelPair { lo, hi, .. } in pair_partition(ell, kind).unwrap() {
                seen[lo.rank()] += 1;
                seen[hi.rank()] += 1;
            }
            assert!(seen.iter().all(|&s| s == 1), "ell={ell} {kind}");
        }
    }
}

#[test]
fn alt_colourings_make_gamma_pairs_monochromatic() {
    for ell in 1..=4 {
        for f in 0..2 {
            let col = canonical_alt_colouring(ell, f).unwrap();
            let (g0, g1) = count_twin_pairs(&col, PairKind::Gamma);
            assert_eq!(g0 + g1, 2 * ell);
            for p in pair_partition(ell, PairKind::Gamma).unwrap().chunks(2) {
                assert_ne!(col.colour(p[0].lo), col.colour(p[1].lo));
            }
        }
    }
}

/// Properties (I), (II), (III) for the alpha- and beta-decompositions.
fn check_bridge_properties(ell: usize) {
    let n = 4 * ell;
    for (kind, other) in [
        (PairKind::Alpha, PairKind::Beta),
        (PairKind::Beta, PairKind::Alpha),
    ] {
        let cycles = cycle_lists(&bipartite(kind, ell, ell).unwrap());
        for m in 0..1u64 << (2 * n) {
            let bits = mask_bits(2 * n, m);
            if monochromatic_cycles(&bits, &cycles) != 0 {
                continue;
            }
            let (l0, l1) = (side(&bits, 0..n), side(&bits, n..2 * n));
            if is_free_of(&l0, other) && !is_free_of(&l0, kind) {
                assert!(is_free_of(&l1, kind), "(I) {kind} {bits:?}");
            }
            if !is_free_of(&l0, kind) && !is_free_of(&l1, kind) {
                assert!(
                    !is_free_of(&l0, other) && !is_free_of(&l1, other),
                    "(II) {kind} {bits:?}"
                );
                let own = count_twin_pairs(&l0, kind);
                let cross = count_twin_pairs(&l0, other);
                if own.0 > 0 {
                    assert!(cross.0 > 0, "(III) {kind} colour 0 {bits:?}");
                }
                if own.1 > 0 {
                    assert!(cross.1 > 0, "(III) {kind} colour 1 {bits:?}");
                }
            }
        }
    }
}

#[test]
fn bridge_properties_ell_1() {
    check_bridge_properties(1);
}

#[test]
fn bridge_properties_ell_2() {
    check_bridge_properties(2);
}

#[test]
fn alpha_and_beta_admit_all_alt_pairs_at_ell_1() {
    let alt: Vec<Vec<u8>> = (0..2)
        .map(|f| canonical_alt_colouring(1, f).unwrap().bits().to_vec())
        .collect();
    for kind in [PairKind::Alpha, PairKind::Beta] {
        let cycles = cycle_lists(&bipartite(kind, 1, 1).unwrap());
        for x in &alt {
            for y in &alt {
                let bits: Vec<u8> = x.iter().chain(y).copied().collect();
                assert_eq!(monochromatic_cycles(&bits, &cycles), 0);
            }
        }
    }
}

fn sorted(mut v: Vec<Cycle4>) -> Vec<Cycle4> {
    v.sort();
    v
}

#[test]
fn reverse_bridge_symmetries() {
    for ell in [1, 2] {
        for kind in [PairKind::Alpha, PairKind::Beta] {
            let d = bipartite(kind, ell, ell).unwrap();
            let rev = reverse_bridge(d.cycles(), 0..4 * ell, 4 * ell..8 * ell).unwrap();
            assert_eq!(sorted(rev), d.sorted_cycles(), "{kind} ell={ell}");
        }
    }
    let g = bipartite(PairKind::Gamma, 2, 2).unwrap();
    let rev = reverse_bridge(g.cycles(), 0..8, 8..16).unwrap();
    assert_ne!(sorted(rev.clone()), g.sorted_cycles());
    assert_eq!(
        sorted(reverse_bridge(&rev, 0..8, 8..16).unwrap()),
        g.sorted_cycles()
    );
    assert!(reverse_bridge(g.cycles(), 0..8, 8..12).is_err());
}

#[test]
fn constructions_are_exact_covers() {
    let mut cases: Vec<(Decomposition, usize)> = vec![
        (bipartite(PairKind::Alpha, 1, 1).unwrap(), 4),
        (bipartite(PairKind::Gamma, 2, 2).unwrap(), 16),
        (bipartite(PairKind::Beta, 2, 1).unwrap(), 8),
        (bipartite(PairKind::Gamma, 3, 1).unwrap(), 12),
        (delta_singletons(PairKind::Alpha, &[1, 1]).unwrap(), 4),
        (d_alpha_beta(1).unwrap(), 24),
        (d_alpha_beta(2).unwrap(), 96),
        (
            exclusiviser(&single_part(2).unwrap(), &[2, 2, 2]).unwrap(),
            48,
        ),
        (exclusively_alt(&[2; 6]).unwrap(), 240),
        (exclusively_alt(&[2; 7]).unwrap(), 336),
        (exclusively_alt(&[2, 2, 2, 2, 2, 3]).unwrap(), 280),
        (exclusively_alt(&[3, 2, 4, 2, 2, 3]).unwrap(), 0),
    ];
    let last = cases.last_mut().unwrap();
    last.1 = oracle_edges(last.0.host()).len() / 4;
    for (d, count) in &cases {
        assert_eq!(d.len(), *count, "{}", d.host());
        assert!(oracle_exact_cover(d), "{}", d.host());
    }
}

#[test]
fn inadmissible_constructions() {
    assert!(bipartite(PairKind::Gamma, 1, 1).is_err());
    assert!(exclusively_alt(&[2; 5]).is_err());
    assert!(exclusively_alt(&[2, 2, 2, 2, 2, 1]).is_err());
    assert!(exclusiviser(&single_part(1).unwrap(), &[1, 2, 2]).is_err());
}

#[test]
fn exclusivity_counterexamples() {
    let r = verify::check_exclusively_alt(&d_alpha_beta(1).unwrap(), DEFAULT_NODE_LIMIT).unwrap();
    assert_eq!(r.verdict, Verdict::Fail);
    assert!(r.witness.is_some());
    for ell in [1, 2] {
        let r = verify::check_exclusively_alt(
            &bipartite(PairKind::Alpha, ell, ell).unwrap(),
            DEFAULT_NODE_LIMIT,
        )
        .unwrap();
        assert_eq!(r.verdict, Verdict::Fail, "alpha ell={ell}");
    }
    let r = verify::check_exclusively_partially_alt(
        &bipartite(PairKind::Beta, 2, 2).unwrap(),
        DEFAULT_NODE_LIMIT,
    )
    .unwrap();
    assert_eq!(r.verdict, Verdict::Fail);
    let w = r.witness.unwrap();
    assert!(!alternates(w.bits(), 0..8) && !alternates(w.bits(), 8..16));
    assert!(verify::check_exclusively_alt(&k9_seed().decomposition(), DEFAULT_NODE_LIMIT).is_err());
}

#[test]
fn host_edges_match_family_definitions() {
    let mut hosts: Vec<HostGraph> = (1..=20).map(HostGraph::Complete).collect();
    hosts.extend((1..=10).map(|k| HostGraph::CocktailParty(2 * k)));
    hosts.extend(
        [
            vec![8, 8],
            vec![4, 4, 4, 4],
            vec![8, 8, 8, 8],
            vec![2, 3, 5],
            vec![7],
        ]
        .map(HostGraph::CompleteMultipartite),
    );
    for h in hosts {
        let e = oracle_edges(&h);
        assert_eq!(h.edges(), e, "{h}");
        assert_eq!(h.edge_count(), e.len(), "{h}");
    }
    assert_eq!(HostGraph::Complete(9).edge_count(), 36);
    assert_eq!(HostGraph::CocktailParty(10).edge_count(), 40);
    assert_eq!(
        HostGraph::CompleteMultipartite(vec![8; 6]).edge_count(),
        960
    );
}

#[test]
fn seeds_up_to_t8() {
    for t in 1..=8 {
        let s = cocktail_seed(t).unwrap();
        let d = s.decomposition();
        assert_eq!(d.host(), &HostGraph::CocktailParty(2 * t + 8));
        assert!(oracle_exact_cover(&d), "t={t}");
        assert!(oracle_exact_cover(&s.sub_decomposition()), "t={t} hub");
        assert!(s.sub_cycles.iter().all(|c| s.full_cycles.contains(c)));
        let cert = verify::check_anchor(&d, &s.p1, &s.p2, DEFAULT_NODE_LIMIT).unwrap();
        assert_eq!(cert.verdict, Verdict::Pass, "t={t}");
        let psi = &cert.models[0];
        assert_eq!(psi, &s.anchored_colouring(), "t={t}");
        let hub: Vec<u8> = (0..2 * t).map(|v| psi.get(v)).collect();
        assert!(
            hub.iter().enumerate().all(|(v, &c)| c == (v % 2) as u8),
            "t={t}"
        );
        assert!(alternates(psi.bits(), 2 * t..2 * t + 8), "t={t}");
    }
}

#[test]
fn key_cycles_force_the_hub() {
    for t in 0..=4 {
        let s = if t == 0 {
            k9_seed()
        } else {
            cocktail_seed(t).unwrap()
        };
        let keys = Decomposition::new(s.host.clone(), s.key_cycles.clone()).unwrap();
        let pins: Vec<(usize, u8)> =
            s.p1.iter()
                .map(|&v| (v, 0))
                .chain(s.p2.iter().map(|&v| (v, 1)))
                .collect();
        let out = verify::enumerate_2colourings(&keys, &pins, SolveLimits::default()).unwrap();
        assert!(out.complete);
        let psi = s.anchored_colouring();
        for m in &out.models {
            for v in s.hub() {
                assert_eq!(m.get(v), psi.get(v), "t={t} hub vertex {v}");
            }
        }
    }
}

#[test]
fn anchor_examples() {
    let s = k9_seed();
    let d = s.decomposition();
    let swapped = verify::check_anchor(&d, &s.p2, &s.p1, DEFAULT_NODE_LIMIT).unwrap();
    assert_eq!(swapped.verdict, Verdict::Pass);
    assert_eq!(swapped.models[0], s.anchored_colouring().complement());
    let f = figure2_fixture();
    assert_eq!(
        verify::check_anchor(&f, &[0, 1], &[2, 3], DEFAULT_NODE_LIMIT)
            .unwrap()
            .verdict,
        Verdict::Fail
    );
    assert!(verify::check_anchor(&f, &[0, 1], &[1, 2], DEFAULT_NODE_LIMIT).is_err());
}

#[test]
fn cover_faults_are_reported() {
    let d = k9_seed().decomposition();
    let mut cycles = d.cycles().to_vec();
    let removed = cycles.pop().unwrap();
    let short = Decomposition::new(d.host().clone(), cycles.clone()).unwrap();
    let v = check_exact_cover(&short).unwrap_err();
    assert_eq!(v.fault, CoverFault::Missing);
    assert!(removed.edges().contains(&v.edge) || removed.edges().contains(&(v.edge.1, v.edge.0)));
    cycles.push(removed);
    cycles.push(removed);
    let dup = Decomposition::new(d.host().clone(), cycles).unwrap();
    assert_eq!(
        check_exact_cover(&dup).unwrap_err().fault,
        CoverFault::Duplicated
    );
    let odd = Decomposition::new(
        HostGraph::CocktailParty(10),
        vec![Cycle4::new([0, 1, 2, 3]).unwrap()],
    )
    .unwrap();
    assert_eq!(
        check_exact_cover(&odd).unwrap_err().fault,
        CoverFault::NonHost
    );
}

#[test]
fn degenerate_inputs() {
    let empty = Decomposition::empty(HostGraph::Complete(5)).unwrap();
    assert_eq!(
        verify::is_uniquely_2colourable(&empty, DEFAULT_NODE_LIMIT).verdict,
        Verdict::Fail
    );
    let d = figure2_fixture();
    let out = verify::enumerate_2colourings(&d, &[(0, 0), (0, 1)], SolveLimits::default()).unwrap();
    assert!(out.models.is_empty() && out.complete);
    assert!(verify::enumerate_2colourings(&d, &[(6, 0)], SolveLimits::default()).is_err());
    assert!(!verify::is_valid_colouring(
        &d,
        &Colouring::new(vec![0; 6]).unwrap()
    ));
}

#[test]
fn truncation_is_indeterminate() {
    let d = quadcycle::assembly::build_k4cs(49).unwrap();
    let cert = verify::is_uniquely_2colourable(&d, 10);
    assert_eq!(cert.verdict, Verdict::Indeterminate);
    assert!(!cert.complete);
    let r = verify::check_exclusively_alt(&exclusively_alt(&[2; 6]).unwrap(), 100).unwrap();
    assert_eq!(r.verdict, Verdict::Indeterminate);
}

fn sources() -> Vec<Decomposition> {
    let mut v = vec![
        k9_seed().decomposition(),
        figure2_fixture(),
        d_alpha_beta(1).unwrap(),
    ];
    v.extend((1..=4).map(|t| cocktail_seed(t).unwrap().decomposition()));
    v
}

fn sub_decomposition(src: usize, keep: u64) -> Decomposition {
    let s = &sources()[src];
    let cycles = s
        .cycles()
        .iter()
        .enumerate()
        .filter(|(i, _)| keep >> (i % 64) & 1 == 1)
        .map(|(_, c)| *c)
        .collect();
    Decomposition::new(s.host().clone(), cycles).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn solver_invariants(src in 0usize..7, keep in any::<u64>(), pin_v in 0usize..6, pin_c in 0u8..2, probing in any::<bool>()) {
        let d = sub_decomposition(src, keep);
        let limits = SolveLimits { probing, ..SolveLimits::default() };
        let all = verify::enumerate_2colourings(&d, &[], limits).unwrap();
        prop_assert!(all.complete);
        for m in &all.models {
            prop_assert!(verify::is_valid_colouring(&d, m));
            prop_assert!(all.models.contains(&m.complement()));
        }
        let pinned = verify::enumerate_2colourings(&d, &[(0, 0)], limits).unwrap();
        prop_assert_eq!(pinned.models.len() * 2, all.models.len());
        let more = verify::enumerate_2colourings(&d, &[(0, 0), (pin_v, pin_c)], limits).unwrap();
        prop_assert!(more.models.len() <= pinned.models.len());
        let again = verify::enumerate_2colourings(&d, &[], limits).unwrap();
        prop_assert_eq!(&again, &all);
        let cover = verify::is_exact_cover(&d);
        prop_assert_eq!(cover, oracle_exact_cover(&d));
        if cover {
            prop_assert_eq!(4 * d.len(), d.host().edge_count());
        }
    }

    #[test]
    fn twin_pair_balance_any_ell(ell in 1usize..8, mask in any::<u64>()) {
        let col = PartColouring::from_mask(ell, mask).unwrap();
        let (a0, a1) = count_twin_pairs(&col, PairKind::Alpha);
        let (b0, b1) = count_twin_pairs(&col, PairKind::Beta);
        prop_assert_eq!(a0 + b1, a1 + b0);
    }
}
