//! Checklist runner: replays every recorded claim about the three finite
//! diagrams (and the two affine truncations) through the full pipeline and
//! reports each one as pass/fail.
//!
//! Expected values are embedded as fixture tables together with a locus
//! string identifying the source display, so a failure message points at
//! the exact claim. Output ordering is fixed, making runs byte-identical.

use num::bigint::BigUint;
use serde::Serialize;

use crate::diagram::{build_diagram, DiagramClass, TDiagram};
use crate::error::{Error, Result};
use crate::grading::{
    big_cell_dimension, module_grading_from_system, weight_multiplicities, weyl_dimension,
    z_grading_dims,
};
use crate::invariant::{delta_polynomial, generator_set, SparsePoly};
use crate::rescalc::{
    betti_degree_solve, degree_of, gorenstein_sum, hilbert_numerator, k_polynomial,
    linkage_dual, BettiSolution, GradedFormat,
};
use crate::schur::{builtin_equivariant_format, verify_equivariant_format};
use crate::weyl::{orbit_poset, sigma_chain, OrbitPoset, Variety};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Derived,
    Erratum,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Status::Pass => write!(f, "PASS"),
            Status::Fail => write!(f, "FAIL"),
            Status::Derived => write!(f, "DERIVED"),
            Status::Erratum => write!(f, "ERRATUM"),
        }
    }
}

/// One replayed claim.
#[derive(Debug, Clone, Serialize)]
pub struct ReportEntry {
    pub id: String,
    pub locus: String,
    pub computed: String,
    pub expected: String,
    pub status: Status,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportType {
    E6,
    E7,
    E8,
    T244,
    T236,
}

impl std::str::FromStr for ReportType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "e6" => Ok(ReportType::E6),
            "e7" => Ok(ReportType::E7),
            "e8" => Ok(ReportType::E8),
            "t244" => Ok(ReportType::T244),
            "t236" => Ok(ReportType::T236),
            other => Err(Error::InvalidDiagram(format!("unknown report type `{other}`"))),
        }
    }
}

impl std::fmt::Display for ReportType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ReportType::E6 => write!(f, "e6"),
            ReportType::E7 => write!(f, "e7"),
            ReportType::E8 => write!(f, "e8"),
            ReportType::T244 => write!(f, "t244"),
            ReportType::T236 => write!(f, "t236"),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema: u32,
    pub report_type: ReportType,
    pub entries: Vec<ReportEntry>,
}

impl Report {
    /// True when no entry failed (errata and derived entries are fine).
    pub fn all_ok(&self) -> bool {
        self.entries.iter().all(|e| e.status != Status::Fail)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("report {}\n", self.report_type));
        for e in &self.entries {
            out.push_str(&format!("{} = {} {}", e.id, e.computed, e.status));
            if e.status == Status::Fail || e.status == Status::Erratum {
                out.push_str(&format!(" (expected {})", e.expected));
            }
            out.push_str(&format!("  [{}]\n", e.locus));
        }
        let failed = self.entries.iter().filter(|e| e.status == Status::Fail).count();
        out.push_str(&format!(
            "{} entries, {} failed\n",
            self.entries.len(),
            failed
        ));
        out
    }
}

struct Builder {
    entries: Vec<ReportEntry>,
}

impl Builder {
    fn new() -> Self {
        Builder { entries: Vec::new() }
    }

    fn push(&mut self, id: &str, locus: &str, computed: String, expected: String, status: Status) {
        self.entries.push(ReportEntry {
            id: id.to_string(),
            locus: locus.to_string(),
            computed,
            expected,
            status,
        });
    }

    /// Pass/fail on exact string equality.
    fn check(&mut self, id: &str, locus: &str, computed: String, expected: String) {
        let status = if computed == expected {
            Status::Pass
        } else {
            Status::Fail
        };
        self.push(id, locus, computed, expected, status);
    }

    /// Like `check`, but a match is reported as derived rather than pass
    /// (the expected value is an internal deduction, not a source display).
    fn check_derived(&mut self, id: &str, locus: &str, computed: String, expected: String) {
        let status = if computed == expected {
            Status::Derived
        } else {
            Status::Fail
        };
        self.push(id, locus, computed, expected, status);
    }

    fn fail(&mut self, id: &str, locus: &str, err: &Error) {
        self.push(id, locus, format!("error: {err}"), String::new(), Status::Fail);
    }
}

fn weight_str(w: &[i64]) -> String {
    let parts: Vec<String> = w.iter().map(|c| c.to_string()).collect();
    format!("({})", parts.join(","))
}

fn weights_str(ws: &[Vec<i64>]) -> String {
    let parts: Vec<String> = ws.iter().map(|w| weight_str(w)).collect();
    format!("[{}]", parts.join(", "))
}

fn ints_str<T: std::fmt::Display>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(","))
}

fn format_str(f: &GradedFormat) -> String {
    let rows: Vec<String> = f.rows().iter().map(|r| ints_str(r)).collect();
    format!("[{}]", rows.join(","))
}

fn degrees_of(poset: &OrbitPoset, ids: &[usize]) -> Result<Vec<i64>> {
    let mut out: Vec<i64> = ids
        .iter()
        .map(|&id| poset.coordinate_degree(id))
        .collect::<Result<_>>()?;
    out.sort_unstable();
    Ok(out)
}

/// Everything expected of one finite diagram, as displayed in the source.
struct FiniteFixture {
    name: &'static str,
    pqr: (usize, usize, usize),
    section: &'static str,
    orbit_size: usize,
    chain: [&'static [i64]; 5],
    gens_sigma3: (usize, &'static [&'static [i64]]),
    gens_sigma3p: (usize, &'static [&'static [i64]]),
    ci: (i64, i64, i64),
    ci_from_source: bool,
    format_sigma3: &'static [&'static [u32]],
    format_sigma3p: &'static [&'static [u32]],
    format_sum: &'static [&'static [u32]],
    numerator_sigma3: &'static [i64],
    numerator_sigma3p: &'static [i64],
    numerator_sum: &'static [i64],
    degrees: (i64, i64, i64),
    shift: u32,
    grading: &'static [(i64, u64)],
    grading_total: u64,
    big_cell: u64,
    module_span: usize,
    module_dim: Option<u64>,
    schur_names: (&'static str, &'static str),
}

fn e6_fixture() -> FiniteFixture {
    FiniteFixture {
        name: "e6",
        pqr: (2, 3, 3),
        section: "S3",
        orbit_size: 72,
        chain: [
            &[1, 0, 0, 0, 0, 0],
            &[-1, 1, 0, 0, 0, 0],
            &[0, -1, 1, 0, 1, 0],
            &[0, 0, 1, 0, -1, 1],
            &[0, 0, -1, 1, 1, 0],
        ],
        gens_sigma3: (
            4,
            &[
                &[1, 0, 0, 0, 0, 0],
                &[-1, 1, 0, 0, 0, 0],
                &[0, -1, 1, 0, 1, 0],
                &[0, 0, -1, 1, 1, 0],
                &[0, 0, 0, -1, 1, 0],
            ],
        ),
        gens_sigma3p: (
            4,
            &[
                &[1, 0, 0, 0, 0, 0],
                &[-1, 1, 0, 0, 0, 0],
                &[0, -1, 1, 0, 1, 0],
                &[0, 0, 1, 0, -1, 1],
                &[0, 0, 1, 0, 0, -1],
            ],
        ),
        ci: (4, 3, 3),
        ci_from_source: true,
        format_sigma3: &[&[0], &[3, 3, 3, 3, 4], &[5, 5, 5, 5, 5, 5], &[7, 7]],
        format_sigma3p: &[&[0], &[3, 3, 3, 3, 4], &[5, 5, 5, 5, 5, 5], &[7, 7]],
        format_sum: &[
            &[0],
            &[3, 3, 3, 3, 3, 3, 4],
            &[5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5],
            &[6, 7, 7, 7, 7, 7, 7],
            &[10],
        ],
        numerator_sigma3: &[1, 3, 6, 6, 2],
        numerator_sigma3p: &[1, 3, 6, 6, 2],
        numerator_sum: &[1, 4, 10, 14, 10, 4, 1],
        degrees: (18, 18, 44),
        shift: 10,
        grading: &[(-2, 1), (-1, 20), (0, 36), (1, 20), (2, 1)],
        grading_total: 78,
        big_cell: 21,
        module_span: 4,
        module_dim: Some(78),
        schur_names: ("e6_sigma3", "e6_sigma3_prime"),
    }
}

fn e7_fixture() -> FiniteFixture {
    FiniteFixture {
        name: "e7",
        pqr: (2, 4, 3),
        section: "S4",
        orbit_size: 576,
        chain: [
            &[1, 0, 0, 0, 0, 0, 0],
            &[-1, 1, 0, 0, 0, 0, 0],
            &[0, -1, 1, 0, 0, 1, 0],
            &[0, 0, 1, 0, 0, -1, 1],
            &[0, 0, -1, 1, 0, 1, 0],
        ],
        gens_sigma3: (
            5,
            &[
                &[1, 0, 0, 0, 0, 0, 0],
                &[-1, 1, 0, 0, 0, 0, 0],
                &[0, -1, 1, 0, 0, 1, 0],
                &[0, 0, -1, 1, 0, 1, 0],
                &[0, 0, 0, -1, 1, 1, 0],
                &[0, 0, 0, 0, -1, 1, 0],
            ],
        ),
        gens_sigma3p: (
            4,
            &[
                &[1, 0, 0, 0, 0, 0, 0],
                &[-1, 1, 0, 0, 0, 0, 0],
                &[0, -1, 1, 0, 0, 1, 0],
                &[0, 0, 1, 0, 0, -1, 1],
                &[0, 0, 1, 0, 0, 0, -1],
            ],
        ),
        ci: (7, 6, 6),
        ci_from_source: false,
        format_sigma3: &[&[0], &[6, 6, 6, 6, 6, 7], &[9, 9, 9, 9, 9, 9, 9], &[13, 13]],
        format_sigma3p: &[
            &[0],
            &[6, 6, 6, 6, 7],
            &[10, 10, 10, 10, 10, 10, 10],
            &[13, 13, 13],
        ],
        format_sum: &[
            &[0],
            &[6, 6, 6, 6, 6, 6, 6, 7],
            &[9, 9, 9, 9, 9, 9, 9, 10, 10, 10, 10, 10, 10, 10],
            &[12, 13, 13, 13, 13, 13, 13, 13],
            &[19],
        ],
        numerator_sigma3: &[1, 3, 6, 10, 15, 21, 23, 20, 12, 6, 2],
        numerator_sigma3p: &[1, 3, 6, 10, 15, 21, 24, 23, 18, 9, 3],
        numerator_sum: &[
            1, 4, 10, 20, 35, 56, 77, 91, 91, 77, 56, 35, 20, 10, 4, 1,
        ],
        degrees: (119, 133, 588),
        shift: 19,
        grading: &[(-2, 7), (-1, 35), (0, 49), (1, 35), (2, 7)],
        grading_total: 133,
        big_cell: 42,
        module_span: 7,
        module_dim: Some(912),
        schur_names: ("e7_sigma3", "e7_sigma3_prime"),
    }
}

fn e8_fixture() -> FiniteFixture {
    FiniteFixture {
        name: "e8",
        pqr: (2, 5, 3),
        section: "S5",
        orbit_size: 17280,
        chain: [
            &[1, 0, 0, 0, 0, 0, 0, 0],
            &[-1, 1, 0, 0, 0, 0, 0, 0],
            &[0, -1, 1, 0, 0, 0, 1, 0],
            &[0, 0, 1, 0, 0, 0, -1, 1],
            &[0, 0, -1, 1, 0, 0, 1, 0],
        ],
        gens_sigma3: (
            6,
            &[
                &[1, 0, 0, 0, 0, 0, 0, 0],
                &[-1, 1, 0, 0, 0, 0, 0, 0],
                &[0, -1, 1, 0, 0, 0, 1, 0],
                &[0, 0, -1, 1, 0, 0, 1, 0],
                &[0, 0, 0, -1, 1, 0, 1, 0],
                &[0, 0, 0, 0, -1, 1, 1, 0],
                &[0, 0, 0, 0, 0, -1, 1, 0],
            ],
        ),
        gens_sigma3p: (
            4,
            &[
                &[1, 0, 0, 0, 0, 0, 0, 0],
                &[-1, 1, 0, 0, 0, 0, 0, 0],
                &[0, -1, 1, 0, 0, 0, 1, 0],
                &[0, 0, 1, 0, 0, 0, -1, 1],
                &[0, 0, 1, 0, 0, 0, 0, -1],
            ],
        ),
        ci: (16, 15, 15),
        ci_from_source: false,
        format_sigma3: &[
            &[0],
            &[15, 15, 15, 15, 15, 15, 16],
            &[21, 21, 21, 21, 21, 21, 21, 21],
            &[31, 31],
        ],
        format_sigma3p: &[
            &[0],
            &[15, 15, 15, 15, 16],
            &[25, 25, 25, 25, 25, 25, 25, 25],
            &[31, 31, 31, 31],
        ],
        format_sum: &[
            &[0],
            &[15, 15, 15, 15, 15, 15, 15, 15, 16],
            &[21, 21, 21, 21, 21, 21, 21, 21, 25, 25, 25, 25, 25, 25, 25, 25],
            &[30, 31, 31, 31, 31, 31, 31, 31, 31],
            &[46],
        ],
        numerator_sigma3: &[
            1, 3, 6, 10, 15, 21, 28, 36, 45, 55, 66, 78, 91, 105, 120, 130, 134, 132, 124,
            110, 90, 72, 56, 42, 30, 20, 12, 6, 2,
        ],
        numerator_sigma3p: &[
            1, 3, 6, 10, 15, 21, 28, 36, 45, 55, 66, 78, 91, 105, 120, 132, 140, 144, 144,
            140, 132, 120, 104, 84, 60, 40, 24, 12, 4,
        ],
        numerator_sum: &[
            1, 4, 10, 20, 35, 56, 84, 120, 165, 220, 286, 364, 455, 560, 680, 808, 936,
            1056, 1160, 1240, 1288, 1304, 1288, 1240, 1160, 1056, 936, 808, 680, 560, 455,
            364, 286, 220, 165, 120, 84, 56, 35, 20, 10, 4, 1,
        ],
        degrees: (1640, 1960, 20400),
        shift: 46,
        grading: &[
            (-3, 8),
            (-2, 28),
            (-1, 56),
            (0, 64),
            (1, 56),
            (2, 28),
            (3, 8),
        ],
        grading_total: 248,
        big_cell: 92,
        module_span: 16,
        module_dim: None,
        schur_names: ("e8_sigma3", "e8_sigma3_prime"),
    }
}

fn owned_format(rows: &[&[u32]]) -> GradedFormat {
    GradedFormat::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

fn finite_report(fix: &FiniteFixture, b: &mut Builder) -> Result<()> {
    let sec = fix.section;
    let (p, q, r) = fix.pqr;
    let d = build_diagram(p, q, r)?;
    let x1 = d.x1_node().unwrap();

    b.check(
        "classify",
        "S2",
        format!("{} ({} nodes)", d.classify(), d.node_count()),
        format!("finite ({} nodes)", p + q + r - 2),
    );

    // Sigma chain against the displayed weight matrices.
    let chain = sigma_chain(&d)?;
    let computed = weights_str(&[
        chain.sigma0.0.clone(),
        chain.sigma1.0.clone(),
        chain.sigma2.0.clone(),
        chain.sigma3.0.clone(),
        chain.sigma3_prime.0.clone(),
    ]);
    let expected = weights_str(&fix.chain.iter().map(|w| w.to_vec()).collect::<Vec<_>>());
    b.check("sigma-chain(σ0..σ3,σ3')", &format!("{sec} weight display"), computed, expected);

    let poset = orbit_poset(&d, None)?;
    b.check_derived(
        "orbit-size",
        "|W|/|W_P|",
        poset.len().to_string(),
        fix.orbit_size.to_string(),
    );
    let sizes = poset.rank_sizes();
    b.check(
        "rank-sizes(0..3)",
        "S2 coset counts",
        ints_str(&sizes[..4]),
        ints_str(&[1, 1, 1, 2]),
    );
    if fix.name == "e6" {
        b.check_derived(
            "rank-size(4)",
            "orbit search",
            sizes[4].to_string(),
            "3".to_string(),
        );
    }

    // Generator weight lists: the cosets whose coordinates cut out each
    // opposite Schubert variety.
    let s3 = poset.variety_id(Variety::Sigma3)?;
    let s3p = poset.variety_id(Variety::Sigma3Prime)?;
    for (label, id, &(bound, expected)) in [
        ("σ3", s3, &fix.gens_sigma3),
        ("σ3'", s3p, &fix.gens_sigma3p),
    ] {
        let gens = poset.complement_filter(id, bound);
        let ws: Vec<Vec<i64>> = gens.iter().map(|&g| poset.element(g).weight.0.clone()).collect();
        b.check(
            &format!("generators({label})"),
            &format!("{sec} generator list"),
            weights_str(&ws),
            weights_str(&expected.iter().map(|w| w.to_vec()).collect::<Vec<_>>()),
        );
        // Coordinate degrees must reproduce the generator twists of the format.
        let degs = degrees_of(&poset, &gens)?;
        let fmt_gens = if label == "σ3" {
            fix.format_sigma3[1]
        } else {
            fix.format_sigma3p[1]
        };
        b.check(
            &format!("coordinate-degrees({label})"),
            &format!("{sec} generator degrees"),
            ints_str(&degs),
            ints_str(fmt_gens),
        );
    }

    if fix.name == "e6" {
        for (label, id, blocks) in [
            ("σ3", s3, vec![2usize, 4]),
            ("σ3'", s3p, vec![4, 2]),
            ("σ0", 0usize, vec![6]),
        ] {
            let (_, computed) = poset.levi_symmetry(id)?;
            b.check(
                &format!("levi-blocks({label})"),
                "S3 Levi subgroups",
                ints_str(&computed),
                ints_str(&blocks),
            );
        }
    }

    let top = poset.top()?;
    b.check(
        "coordinate-degree(p_top)",
        "S2 big cell",
        poset.coordinate_degree(top)?.to_string(),
        "0".to_string(),
    );

    let ci = poset.ci_degrees()?;
    let ci_str = format!("({},{},{})", ci.0, ci.1, ci.2);
    let expected_ci = format!("({},{},{})", fix.ci.0, fix.ci.1, fix.ci.2);
    if fix.ci_from_source {
        b.check("ci-degrees(σ0,σ1,σ2)", &format!("{sec} proof"), ci_str, expected_ci);
    } else {
        b.check_derived("ci-degrees(σ0,σ1,σ2)", "coordinate degrees", ci_str, expected_ci);
    }

    // Resolution calculus on the displayed formats.
    let f3 = owned_format(fix.format_sigma3);
    let f3p = owned_format(fix.format_sigma3p);
    let fsum = owned_format(fix.format_sum);

    if fix.name == "e6" {
        b.check(
            "k-polynomial(σ3)",
            "S3 proof display",
            k_polynomial(&f3).to_string(),
            "-2*t^7 + 6*t^5 - t^4 - 4*t^3 + 1".to_string(),
        );
    }

    for (label, f, num) in [
        ("σ3", &f3, fix.numerator_sigma3),
        ("σ3'", &f3p, fix.numerator_sigma3p),
    ] {
        match hilbert_numerator(f, 3) {
            Ok(n) => b.check(
                &format!("hilbert-numerator({label})"),
                &format!("{sec} numerator"),
                ints_str(&n.coeffs),
                ints_str(num),
            ),
            Err(e) => b.fail(&format!("hilbert-numerator({label})"), sec, &e),
        }
    }
    match hilbert_numerator(&fsum, 4) {
        Ok(n) => b.check(
            "hilbert-numerator(sum)",
            &format!("{sec} sum numerator"),
            ints_str(&n.coeffs),
            ints_str(fix.numerator_sum),
        ),
        Err(e) => b.fail("hilbert-numerator(sum)", sec, &e),
    }

    b.check(
        "degree(Y_σ3)",
        &format!("{sec} degree"),
        degree_of(&f3, 3)?.to_string(),
        fix.degrees.0.to_string(),
    );
    b.check(
        "degree(Y_σ3')",
        &format!("{sec} degree"),
        degree_of(&f3p, 3)?.to_string(),
        fix.degrees.1.to_string(),
    );
    b.check(
        "degree(Y_σ3+Y_σ3')",
        &format!("{sec} sum degree"),
        degree_of(&fsum, 4)?.to_string(),
        fix.degrees.2.to_string(),
    );
    b.check(
        "degree-additivity",
        "linkage degree count",
        format!("{}", fix.degrees.0 + fix.degrees.1),
        format!("{}", fix.ci.0 * fix.ci.1 * fix.ci.2),
    );

    let ci_u = (fix.ci.0 as u32, fix.ci.1 as u32, fix.ci.2 as u32);
    match linkage_dual(&f3, ci_u) {
        Ok(linked) => {
            b.check(
                "linkage(σ3→σ3')",
                &format!("{sec} theorem"),
                format_str(&linked),
                format_str(&f3p),
            );
            match linkage_dual(&linked, ci_u) {
                Ok(back) => b.check(
                    "linkage-involution",
                    "double link",
                    format_str(&back),
                    format_str(&f3),
                ),
                Err(e) => b.fail("linkage-involution", sec, &e),
            }
        }
        Err(e) => b.fail("linkage(σ3→σ3')", sec, &e),
    }

    match gorenstein_sum(&f3, fix.shift) {
        Ok(sum) => {
            b.check(
                "gorenstein-sum-format",
                &format!("{sec} sum resolution"),
                format_str(&sum),
                format_str(&fsum),
            );
            let n = hilbert_numerator(&sum, 4)?;
            b.check(
                "gorenstein-numerator-palindromic",
                "self-dual resolution",
                n.is_palindromic().to_string(),
                "true".to_string(),
            );
        }
        Err(e) => b.fail("gorenstein-sum-format", sec, &e),
    }

    for (label, f) in [("σ3", &f3), ("σ3'", &f3p)] {
        let gens = f.rows()[1].clone();
        let top_row = f.rows()[3].clone();
        let n = f.rank(2);
        match betti_degree_solve(&gens, &top_row, n, 3) {
            Ok(BettiSolution::Unique(d)) => b.check(
                &format!("betti-solve({label})"),
                &format!("{sec} middle degrees"),
                ints_str(&d),
                ints_str(&f.rows()[2]),
            ),
            Ok(BettiSolution::Indeterminate { sum, sum_of_squares }) => b.push(
                &format!("betti-solve({label})"),
                sec,
                format!("indeterminate (sum {sum}, squares {sum_of_squares})"),
                ints_str(&f.rows()[2]),
                Status::Fail,
            ),
            Err(e) => b.fail(&format!("betti-solve({label})"), sec, &e),
        }
    }

    // Gradings of the Lie algebra and the defining module.
    let g = z_grading_dims(&d, x1)?;
    b.check(
        "z-grading",
        &format!("{sec} grading display"),
        format!("{:?}", g.dims),
        format!("{:?}", fix.grading),
    );
    b.check(
        "z-grading-total",
        "dim g",
        g.total().to_string(),
        fix.grading_total.to_string(),
    );
    b.check(
        "big-cell-dimension",
        &format!("{sec} big cell"),
        big_cell_dimension(&d, x1)?.to_string(),
        fix.big_cell.to_string(),
    );

    let lam = crate::weyl::Weight::fundamental(&d, x1);
    let ws = weight_multiplicities(&d, &lam)?;
    let mg = module_grading_from_system(&ws, x1)?;
    b.check(
        "module-grading-span",
        &format!("{sec} coordinate ring grading"),
        mg.span().to_string(),
        fix.module_span.to_string(),
    );
    b.check(
        "module-grading-ends",
        &format!("{sec} end pieces"),
        format!("({},{})", mg.dim_bottom(), mg.dim_top()),
        "(1,1)".to_string(),
    );
    let dim = ws.total_dimension();
    match fix.module_dim {
        Some(expected) => b.check(
            "module-dimension",
            &format!("{sec} dim V"),
            dim.to_string(),
            expected.to_string(),
        ),
        None => b.check_derived(
            "module-dimension",
            "Weyl dimension formula cross-check",
            dim.to_string(),
            weyl_dimension(&d, &lam)?.to_string(),
        ),
    }

    // Equivariant formats.
    for name in [fix.schur_names.0, fix.schur_names.1] {
        let ef = builtin_equivariant_format(name).unwrap();
        let label = if ef.variety == Variety::Sigma3 { "σ3" } else { "σ3'" };
        let rep = verify_equivariant_format(&ef)?;
        let derived = fix.name == "e6"; // generator rows deduced, not displayed
        let computed = rep
            .rank_checks
            .iter()
            .map(|c| format!("h{}:{}", c.hom_degree, ints_str(&c.computed)))
            .collect::<Vec<_>>()
            .join(" ");
        let expected = rep
            .rank_checks
            .iter()
            .map(|c| format!("h{}:{}", c.hom_degree, ints_str(&c.expected)))
            .collect::<Vec<_>>()
            .join(" ");
        if derived {
            b.check_derived(
                &format!("equivariant-ranks({label})"),
                &format!("{sec} equation lemmas"),
                computed,
                expected,
            );
        } else {
            b.check(
                &format!("equivariant-ranks({label})"),
                &format!("{sec} remark display"),
                computed,
                expected,
            );
        }
        for tc in &rep.twist_checks {
            if tc.ok {
                continue;
            }
            // A displayed twist contradicting the weight rule: report the
            // corrected value, never rewrite the display.
            b.push(
                &format!("equivariant-twist({label},h{})", tc.hom_degree),
                &format!("{sec} remark display"),
                format!("weight rule gives {}", tc.implied_twist),
                format!("displayed {}", tc.displayed_twist),
                Status::Erratum,
            );
        }
        if rep.twists_ok {
            b.check(
                &format!("equivariant-twists({label})"),
                &format!("{sec} weight rule"),
                "all displayed twists match 3·twist weights".to_string(),
                "all displayed twists match 3·twist weights".to_string(),
            );
        }
    }

    if fix.name == "e6" {
        delta_entries(b)?;
    }
    Ok(())
}

fn delta_entries(b: &mut Builder) -> Result<()> {
    let delta = delta_polynomial();
    b.check(
        "Δ-degree",
        "S3 quartic invariant",
        delta.degree().to_string(),
        "4".to_string(),
    );
    let mut point = vec![0i64; crate::invariant::NUM_VARS];
    point[0] = 1;
    point[crate::invariant::NUM_VARS - 1] = 1;
    b.check(
        "Δ(e123+e456)≠0",
        "S3 generic trivector",
        (delta.eval(&point) != 0).to_string(),
        "true".to_string(),
    );
    let mut dec = vec![0i64; crate::invariant::NUM_VARS];
    dec[0] = 7;
    b.check(
        "Δ(decomposable)=0",
        "S3 singular locus",
        (delta.eval(&dec) == 0).to_string(),
        "true".to_string(),
    );
    let mut euler = SparsePoly::constant(0);
    for v in 0..crate::invariant::NUM_VARS {
        euler = euler + SparsePoly::var(v) * delta.partial(v);
    }
    b.check(
        "Δ-euler-identity",
        "degree-4 homogeneity",
        (euler == SparsePoly::constant(4) * delta.clone()).to_string(),
        "true".to_string(),
    );
    for variety in [Variety::Sigma3, Variety::Sigma3Prime] {
        let gens = generator_set(variety);
        let mut degs: Vec<usize> = gens.iter().map(|g| g.degree()).collect();
        degs.sort_unstable();
        b.check(
            &format!("Δ-generator-degrees({variety})"),
            "S3 proof: 4 cubics and 1 quartic",
            ints_str(&degs),
            ints_str(&[3, 3, 3, 3, 4]),
        );
    }
    Ok(())
}

fn affine_report(pqr: (usize, usize, usize), b: &mut Builder) -> Result<()> {
    let d = build_diagram(pqr.0, pqr.1, pqr.2)?;
    b.check(
        "classify",
        "S6 affine diagrams",
        d.classify().to_string(),
        DiagramClass::Affine.to_string(),
    );
    let chain = sigma_chain(&d)?;
    b.check(
        "sigma-length-3-pair",
        "S6 two opposite Schubert varieties",
        format!(
            "σ3 {} σ3'",
            if chain.sigma3 != chain.sigma3_prime { "≠" } else { "=" }
        ),
        "σ3 ≠ σ3'".to_string(),
    );
    let poset = orbit_poset(&d, Some(3))?;
    b.check(
        "rank-sizes(0..3)",
        "S6 codimension-3 pair",
        ints_str(&poset.rank_sizes()),
        ints_str(&[1, 1, 1, 2]),
    );
    let s3 = poset.variety_id(Variety::Sigma3)?;
    let s3p = poset.variety_id(Variety::Sigma3Prime)?;
    b.check(
        "sigma3-lengths",
        "S6 codimension 3",
        format!(
            "({},{})",
            poset.element(s3).length,
            poset.element(s3p).length
        ),
        "(3,3)".to_string(),
    );
    Ok(())
}

/// Runs the full pipeline for one diagram and returns the checklist.
/// Internal failures become FAIL entries; the run itself never aborts.
pub fn report(rt: ReportType) -> Report {
    let mut b = Builder::new();
    let outcome = match rt {
        ReportType::E6 => finite_report(&e6_fixture(), &mut b),
        ReportType::E7 => finite_report(&e7_fixture(), &mut b),
        ReportType::E8 => finite_report(&e8_fixture(), &mut b),
        ReportType::T244 => affine_report((2, 4, 4), &mut b),
        ReportType::T236 => affine_report((2, 3, 6), &mut b),
    };
    if let Err(e) = outcome {
        b.fail("pipeline", "report runner", &e);
    }
    Report {
        schema: 1,
        report_type: rt,
        entries: b.entries,
    }
}

/// Weyl dimension cross-check used by the E8 entry; re-exported for tests.
pub fn defining_module_dimension(d: &TDiagram) -> Result<BigUint> {
    let lam = crate::weyl::Weight::fundamental(d, d.x1_node().unwrap());
    weyl_dimension(d, &lam)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn e6_report_passes() {
        let rep = report(ReportType::E6);
        assert!(rep.entries.len() >= 20, "only {} entries", rep.entries.len());
        for e in &rep.entries {
            assert_ne!(e.status, Status::Fail, "{}: {} vs {}", e.id, e.computed, e.expected);
        }
        assert!(rep.all_ok());
        let text = rep.render_text();
        assert!(text.contains("degree(Y_σ3) = 18 PASS"));
    }

    #[test]
    fn e7_report_passes_with_derived_ci() {
        let rep = report(ReportType::E7);
        assert!(rep.all_ok());
        let ci = rep
            .entries
            .iter()
            .find(|e| e.id.starts_with("ci-degrees"))
            .unwrap();
        assert_eq!(ci.status, Status::Derived);
        for e in &rep.entries {
            assert_ne!(e.status, Status::Fail, "{}: {} vs {}", e.id, e.computed, e.expected);
        }
    }

    #[test]
    fn affine_reports() {
        for rt in [ReportType::T244, ReportType::T236] {
            let rep = report(rt);
            assert!(rep.all_ok(), "{:?}", rep.entries);
        }
    }

    #[test]
    fn report_is_deterministic() {
        let a = serde_json::to_string(&report(ReportType::E6)).unwrap();
        let b = serde_json::to_string(&report(ReportType::E6)).unwrap();
        assert_eq!(a, b);
    }
}
