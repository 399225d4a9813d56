//! The `demo` command: builds every reference instance, certifies it, and
//! collects the decomposition files and reports.

use std::time::Instant;

use serde::Serialize;

use super::format::write_decomposition;
use super::report::{run_check, Check, CheckRecord, Report, SCHEMA_VERSION};
use crate::assembly::{build_cocktail, build_cocktail_with, build_k4cs, canonical_colouring};
use crate::constructions::{d_alpha_beta, exclusively_alt};
use crate::error::Result;
use crate::host::Decomposition;
use crate::labels::{
    count_twin_pairs, is_alt_by_classes, is_alt_by_twin_pairs, is_alt_colouring, PairKind,
    PartColouring,
};
use crate::seeds::{cocktail_seed, figure2_fixture, k9_seed, AnchoredSeed};
use crate::verify::Verdict;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DemoSummary {
    pub schema_version: u32,
    pub reports: Vec<Report>,
    pub wall_time_ms: f64,
}

impl DemoSummary {
    pub fn is_ok(&self) -> bool {
        self.reports.iter().all(Report::is_ok)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialise")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DemoOutput {
    /// File name and contents of every constructed decomposition.
    pub files: Vec<(String, String)>,
    pub summary: DemoSummary,
}

struct Demo {
    node_limit: u64,
    files: Vec<(String, String)>,
    reports: Vec<Report>,
}

impl Demo {
    fn certify(
        &mut self,
        file: &str,
        subject: &str,
        d: &Decomposition,
        checks: &[(Check, Verdict)],
    ) {
        self.files.push((file.to_string(), write_decomposition(d)));
        let mut report = Report::for_decomposition(subject, d);
        for (check, expected) in checks {
            let mut rec = run_check(d, check, self.node_limit);
            if *expected != Verdict::Pass {
                rec = rec.expect(*expected);
            }
            report.push(rec);
        }
        self.reports.push(report);
    }

    fn seed(&mut self, s: &AnchoredSeed) {
        let d = s.decomposition();
        let checks = [
            (Check::ExactCover, Verdict::Pass),
            (
                Check::Anchored {
                    p1: s.p1.clone(),
                    p2: s.p2.clone(),
                },
                Verdict::Pass,
            ),
            (Check::ValidColouring(s.anchored_colouring()), Verdict::Pass),
        ];
        self.certify(
            &format!("seed-t{}.txt", s.t),
            &format!("seed t={}", s.t),
            &d,
            &checks,
        );
    }

    fn theorem(&mut self, file: &str, subject: &str, d: &Decomposition) -> Result<()> {
        let psi = canonical_colouring(d.host())?;
        let checks = [
            (Check::ExactCover, Verdict::Pass),
            (Check::ValidColouring(psi), Verdict::Pass),
            (Check::Unique, Verdict::Pass),
        ];
        self.certify(file, subject, d, &checks);
        Ok(())
    }
}

fn all_colourings(ell: usize) -> impl Iterator<Item = PartColouring> {
    (0..1u64 << (4 * ell)).map(move |m| PartColouring::from_mask(ell, m).expect("ell >= 1"))
}

fn label_report() -> Report {
    let mut report = Report::new("label colourings");
    let start = Instant::now();
    let mut cases = 0;
    let mut exceptions = 0;
    for ell in 1..=3 {
        for col in all_colourings(ell) {
            let (a0, a1) = count_twin_pairs(&col, PairKind::Alpha);
            let (b0, b1) = count_twin_pairs(&col, PairKind::Beta);
            cases += 1;
            if a0 + b1 != a1 + b0 {
                exceptions += 1;
            }
        }
    }
    let mut rec = CheckRecord::new("twin_pair_balance", Verdict::from_bool(exceptions == 0))
        .detail(format!("{cases} colourings, {exceptions} exceptions"));
    rec.time_ms = start.elapsed().as_secs_f64() * 1e3;
    report.push(rec);

    let start = Instant::now();
    let mut cases = 0;
    let mut disagreements = 0;
    for ell in 1..=2 {
        for col in all_colourings(ell) {
            let a = is_alt_colouring(&col);
            cases += 1;
            if a != is_alt_by_twin_pairs(&col) || a != is_alt_by_classes(&col) {
                disagreements += 1;
            }
        }
    }
    let mut rec = CheckRecord::new(
        "alt_characterisations",
        Verdict::from_bool(disagreements == 0),
    )
    .detail(format!("{cases} colourings, {disagreements} disagreements"));
    rec.time_ms = start.elapsed().as_secs_f64() * 1e3;
    report.push(rec);
    report
}

/// Builds and certifies every reference instance.
pub fn run_demo(node_limit: u64) -> Result<DemoOutput> {
    let mut demo = Demo {
        node_limit,
        files: Vec::new(),
        reports: vec![label_report()],
    };

    demo.seed(&k9_seed());
    for t in 1..=5 {
        demo.seed(&cocktail_seed(t)?);
    }

    let fig2 = figure2_fixture();
    demo.certify(
        "figure2.txt",
        "tripartite K(2,2,2)",
        &fig2,
        &[
            (Check::ExactCover, Verdict::Pass),
            (Check::ExclusivelyPartiallyAlt, Verdict::Pass),
            (Check::Unique, Verdict::Fail),
        ],
    );

    demo.certify(
        "d-alpha-beta-1.txt",
        "alpha/beta patch, four parts of size 4",
        &d_alpha_beta(1)?,
        &[
            (Check::ExactCover, Verdict::Pass),
            (Check::ExclusivelyPartiallyAlt, Verdict::Pass),
            (Check::ExclusivelyAlt, Verdict::Fail),
        ],
    );

    demo.certify(
        "exclusively-alt-6.txt",
        "exclusively alt, six parts of size 8",
        &exclusively_alt(&[2; 6])?,
        &[
            (Check::ExactCover, Verdict::Pass),
            (Check::ExclusivelyAlt, Verdict::Pass),
        ],
    );

    for n in [49, 57, 65] {
        demo.theorem(
            &format!("k4cs-{n}.txt"),
            &format!("4-cycle system of order {n}"),
            &build_k4cs(n)?,
        )?;
    }
    for n in [50, 52, 54, 56] {
        demo.theorem(
            &format!("cocktail-{n}.txt"),
            &format!("cocktail party of order {n}"),
            &build_cocktail(n)?,
        )?;
    }
    demo.theorem(
        "cocktail-58-h6-t5.txt",
        "cocktail party of order 58 (h=6, t=5)",
        &build_cocktail_with(6, 5)?,
    )?;

    let wall_time_ms = demo.reports.iter().map(|r| r.wall_time_ms).sum();
    Ok(DemoOutput {
        files: demo.files,
        summary: DemoSummary {
            schema_version: SCHEMA_VERSION,
            reports: demo.reports,
            wall_time_ms,
        },
    })
}
