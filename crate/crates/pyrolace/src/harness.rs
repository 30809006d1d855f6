//! Executable verification of the claims tying the processes together,
//! plus the named desk-scale fixtures and reproducible random sweeps.
//!
//! Every check produces a [`VerificationReport`] with a `holds` / `violated`
//! / `skipped` status, the two sides of the inequality it tested, and the
//! witness objects needed to re-check it. Reports serialize to JSON lines.

use std::collections::BTreeMap;
use std::io::Write;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::burning::{
    burning_number, has_optimal_sequence_with_redundant_last_source, hypergraph_burning_number,
    BurnError, SingletonMode,
};
use crate::forcing::zero_forcing_number;
use crate::graph::{are_isomorphic_bruteforce, Graph, VertexLabeling, DEFAULT_ISO_LIMIT};
use crate::hypergraph::Hypergraph;
use crate::lazy::lazy_burning_number;
use crate::spectral::{char_poly, strong_product, SpectralError};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("equality-family component sizes must be ≥ 2, got {size}")]
    InvalidFamilySize { size: usize },
    #[error("cospectral pair construction needs n ≥ 1")]
    InvalidProductSize,
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Burn(#[from] BurnError),
    #[error(transparent)]
    Hypergraph(#[from] crate::hypergraph::HypergraphError),
}

// ---------------------------------------------------------------------------
// Named fixtures
// ---------------------------------------------------------------------------

/// The 4-vertex hypergraph with hyperedges {v1,v2,v3}, {v2,v4}, {v3,v4}.
pub fn fig1_hypergraph() -> Hypergraph {
    Hypergraph::new(4, [vec![0usize, 1, 2], vec![1, 3], vec![2, 3]])
        .expect("fixture is well-formed")
}

/// The 8-vertex graph used for the burning walkthrough.
pub fn fig3_graph() -> Graph {
    Graph::new(
        8,
        [
            (0, 1),
            (1, 2),
            (1, 3),
            (1, 5),
            (3, 4),
            (5, 6),
            (5, 7),
            (6, 7),
        ],
    )
    .expect("fixture is well-formed")
}

/// Two disjoint full hyperedges of sizes 3 and 4 on 7 vertices.
pub fn fig5_hypergraph() -> Hypergraph {
    Hypergraph::new(7, [vec![0usize, 1, 2], vec![3, 4, 5, 6]]).expect("fixture is well-formed")
}

/// Nested hyperedges {v2,v3,v4} ⊂ {v1,v2,v3,v4} on 4 vertices.
pub fn fig6_hypergraph() -> Hypergraph {
    Hypergraph::new(4, [vec![1usize, 2, 3], vec![0, 1, 2, 3]]).expect("fixture is well-formed")
}

/// Left cospectral graph: degree sequence (5,2,2,2,2,1), burning number 2.
pub fn fig7_g() -> Graph {
    Graph::new(6, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (2, 5), (3, 5)])
        .expect("fixture is well-formed")
}

/// Right cospectral graph: degree sequence (3,3,3,3,1,1), burning number 3.
pub fn fig7_h() -> Graph {
    Graph::new(6, [(0, 1), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (4, 5)])
        .expect("fixture is well-formed")
}

/// A named instance with its expected invariant values.
#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: &'static str,
    pub payload: FixturePayload,
    pub expected: BTreeMap<&'static str, i64>,
}

#[derive(Debug, Clone)]
pub enum FixturePayload {
    Graph(Graph),
    Hypergraph(Hypergraph),
}

impl Fixture {
    /// Default labeling for the payload (`v1..vn`).
    pub fn labeling(&self) -> VertexLabeling {
        match &self.payload {
            FixturePayload::Graph(g) => VertexLabeling::default_vertices(g.order()),
            FixturePayload::Hypergraph(h) => VertexLabeling::default_vertices(h.order()),
        }
    }
}

/// The built-in fixture registry: the worked figures plus one member each of
/// the path, complete-graph and single-hyperedge families.
pub fn fixtures() -> Vec<Fixture> {
    fn expect(pairs: &[(&'static str, i64)]) -> BTreeMap<&'static str, i64> {
        pairs.iter().copied().collect()
    }
    vec![
        Fixture {
            name: "fig1_hypergraph",
            payload: FixturePayload::Hypergraph(fig1_hypergraph()),
            expected: expect(&[
                ("lazy_burning_number", 1),
                ("zero_forcing_number_ig", 2),
                ("hyperedge_count", 3),
                ("nonsingleton_components", 1),
                ("hypergraph_burning_number_strict", 2),
            ]),
        },
        Fixture {
            name: "fig3_graph",
            payload: FixturePayload::Graph(fig3_graph()),
            expected: expect(&[("burning_number", 3)]),
        },
        Fixture {
            name: "fig5_hypergraph",
            payload: FixturePayload::Hypergraph(fig5_hypergraph()),
            expected: expect(&[
                ("lazy_burning_number", 5),
                ("zero_forcing_number_ig", 5),
                ("hyperedge_count", 2),
                ("nonsingleton_components", 2),
            ]),
        },
        Fixture {
            name: "fig6_hypergraph",
            payload: FixturePayload::Hypergraph(fig6_hypergraph()),
            expected: expect(&[
                ("lazy_burning_number", 2),
                ("zero_forcing_number_ig", 3),
                ("hyperedge_count", 2),
                ("nonsingleton_components", 1),
            ]),
        },
        Fixture {
            name: "fig7_G",
            payload: FixturePayload::Graph(fig7_g()),
            expected: expect(&[("burning_number", 2)]),
        },
        Fixture {
            name: "fig7_H",
            payload: FixturePayload::Graph(fig7_h()),
            expected: expect(&[("burning_number", 3)]),
        },
        Fixture {
            name: "p9_path",
            payload: FixturePayload::Graph(Graph::path(9).expect("P_9 fits the cap")),
            expected: expect(&[("burning_number", 3)]),
        },
        Fixture {
            name: "k5_complete",
            payload: FixturePayload::Graph(Graph::complete(5).expect("K_5 fits the cap")),
            expected: expect(&[("burning_number", 2)]),
        },
        Fixture {
            name: "h3_single_hyperedge",
            payload: FixturePayload::Hypergraph(
                Hypergraph::single_full_hyperedge(4).expect("H_3 fits the cap"),
            ),
            expected: expect(&[
                ("lazy_burning_number", 3),
                ("zero_forcing_number_ig", 3),
                ("hyperedge_count", 1),
                ("nonsingleton_components", 1),
            ]),
        },
    ]
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimStatus {
    Holds,
    Violated,
    Skipped,
}

/// Witness objects embedded in a report; whichever slots apply are filled.
#[derive(Debug, Clone, Default, Serialize, Deserialize, PartialEq, Eq)]
pub struct Witnesses {
    pub sequence: Option<Vec<String>>,
    pub set: Option<Vec<String>>,
    pub polynomial: Option<Vec<String>>,
}

/// Outcome of one claim check. `lhs ≤ rhs` is the checked inequality (or
/// `lhs = rhs` for equalities); `slack = rhs − lhs` where meaningful.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct VerificationReport {
    pub claim_id: String,
    pub status: ClaimStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub lhs: i64,
    pub rhs: i64,
    pub slack: Option<i64>,
    pub witnesses: Witnesses,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn summary_line(&self) -> String {
        match self.status {
            ClaimStatus::Holds => format!(
                "{}: {} ≤ {} (slack {}), holds",
                self.claim_id,
                self.lhs,
                self.rhs,
                self.slack.unwrap_or(self.rhs - self.lhs)
            ),
            ClaimStatus::Violated => format!(
                "{}: {} vs {}, VIOLATED",
                self.claim_id, self.lhs, self.rhs
            ),
            ClaimStatus::Skipped => format!(
                "{}: skipped ({})",
                self.claim_id,
                self.reason.as_deref().unwrap_or("hypothesis not met")
            ),
        }
    }
}

/// Writes one report as a JSON line. Unless `timings` is set, `elapsed_ms`
/// is written as 0 so identical runs produce byte-identical output.
pub fn write_report(
    report: &VerificationReport,
    sink: &mut dyn Write,
    timings: bool,
) -> std::io::Result<()> {
    let mut out = report.clone();
    if !timings {
        out.elapsed_ms = 0;
    }
    let line = serde_json::to_string(&out).expect("report serializes");
    writeln!(sink, "{line}")
}

fn elapsed_ms(start: Instant) -> u64 {
    start.elapsed().as_millis() as u64
}

fn inequality_report(
    claim_id: &str,
    lhs: i64,
    rhs: i64,
    witnesses: Witnesses,
    start: Instant,
) -> VerificationReport {
    VerificationReport {
        claim_id: claim_id.to_string(),
        status: if lhs <= rhs {
            ClaimStatus::Holds
        } else {
            ClaimStatus::Violated
        },
        reason: None,
        lhs,
        rhs,
        slack: Some(rhs - lhs),
        witnesses,
        elapsed_ms: elapsed_ms(start),
    }
}

// ---------------------------------------------------------------------------
// Claim checks
// ---------------------------------------------------------------------------

/// `Z(IG(H)) ≤ b_L(H) + |E(H)|`, lazy burning in vacuous mode. The witness
/// set is a zero forcing set of the incidence graph of size `lhs`.
pub fn verify_theorem25_bound(h: &Hypergraph) -> VerificationReport {
    let start = Instant::now();
    let ig = h.incidence_graph();
    let (z, zw) = zero_forcing_number(&ig.graph);
    let (bl, _) = lazy_burning_number(h, SingletonMode::Vacuous);
    let witnesses = Witnesses {
        set: Some(ig.labeling.set_labels(&zw)),
        ..Witnesses::default()
    };
    inequality_report(
        "theorem25_bound",
        z as i64,
        (bl + h.edge_count()) as i64,
        witnesses,
        start,
    )
}

/// `Z(IG(H)) ≤ b_L(H) + |E(H)| − k`, where `k` counts the components with a
/// non-singleton hyperedge.
pub fn verify_improved_bound(h: &Hypergraph) -> VerificationReport {
    let start = Instant::now();
    let ig = h.incidence_graph();
    let (z, zw) = zero_forcing_number(&ig.graph);
    let (bl, _) = lazy_burning_number(h, SingletonMode::Vacuous);
    let k = h.count_nonsingleton_components();
    let witnesses = Witnesses {
        set: Some(ig.labeling.set_labels(&zw)),
        ..Witnesses::default()
    };
    inequality_report(
        "improved_bound",
        z as i64,
        (bl + h.edge_count()) as i64 - k as i64,
        witnesses,
        start,
    )
}

/// Builds a disjoint union of single-hyperedge components of the given sizes
/// and asserts the improved bound holds with equality:
/// `Z(IG(H)) = b_L(H) + |E(H)| − k`.
pub fn verify_equality_family(sizes: &[usize]) -> Result<VerificationReport, HarnessError> {
    let start = Instant::now();
    for &s in sizes {
        if s < 2 {
            return Err(HarnessError::InvalidFamilySize { size: s });
        }
    }
    let parts: Vec<Hypergraph> = sizes
        .iter()
        .map(|&s| Hypergraph::single_full_hyperedge(s))
        .collect::<Result<_, _>>()?;
    let h = Hypergraph::disjoint_union(&parts)?;
    let ig = h.incidence_graph();
    let (z, zw) = zero_forcing_number(&ig.graph);
    let (bl, _) = lazy_burning_number(&h, SingletonMode::Vacuous);
    let k = h.count_nonsingleton_components();
    let rhs = (bl + h.edge_count()) as i64 - k as i64;
    Ok(VerificationReport {
        claim_id: "equality_family".to_string(),
        status: if z as i64 == rhs {
            ClaimStatus::Holds
        } else {
            ClaimStatus::Violated
        },
        reason: None,
        lhs: z as i64,
        rhs,
        slack: Some(rhs - z as i64),
        witnesses: Witnesses {
            set: Some(ig.labeling.set_labels(&zw)),
            ..Witnesses::default()
        },
        elapsed_ms: elapsed_ms(start),
    })
}

/// `b_L(H) ≤ b(H)` with both processes in strict singleton mode.
pub fn verify_lazy_le_burning(h: &Hypergraph) -> VerificationReport {
    let start = Instant::now();
    let labeling = VertexLabeling::default_vertices(h.order());
    let (bl, blw) = lazy_burning_number(h, SingletonMode::Strict);
    match hypergraph_burning_number(h, SingletonMode::Strict) {
        Ok((b, bw)) => {
            let witnesses = Witnesses {
                set: Some(labeling.set_labels(&blw)),
                sequence: Some(labeling.seq_labels(bw.as_slice())),
                ..Witnesses::default()
            };
            inequality_report("lazy_le_burning", bl as i64, b as i64, witnesses, start)
        }
        Err(err) => VerificationReport {
            claim_id: "lazy_le_burning".to_string(),
            status: ClaimStatus::Skipped,
            reason: Some(format!("burning number unavailable: {err}")),
            lhs: bl as i64,
            rhs: 0,
            slack: None,
            witnesses: Witnesses::default(),
            elapsed_ms: elapsed_ms(start),
        },
    }
}

/// `b(G ⊠ K_n) = b(G)` whenever some optimal burning sequence of `G` ends
/// with a redundant source; reports `skipped` when the hypothesis fails.
pub fn verify_burning_preservation(g: &Graph, n: usize) -> Result<VerificationReport, HarnessError> {
    let start = Instant::now();
    let (hypothesis, _) = has_optimal_sequence_with_redundant_last_source(g)?;
    if !hypothesis {
        return Ok(VerificationReport {
            claim_id: "burning_preservation".to_string(),
            status: ClaimStatus::Skipped,
            reason: Some(
                "no optimal burning sequence ends with a redundant source".to_string(),
            ),
            lhs: 0,
            rhs: 0,
            slack: None,
            witnesses: Witnesses::default(),
            elapsed_ms: elapsed_ms(start),
        });
    }
    let (b_g, _) = burning_number(g)?;
    let kn = Graph::complete(n).map_err(SpectralError::Graph)?;
    let (product, _) = strong_product(g, &kn)?;
    let (b_p, wp) = burning_number(&product)?;
    let labeling = VertexLabeling::default_vertices(product.order());
    Ok(VerificationReport {
        claim_id: "burning_preservation".to_string(),
        status: if b_p == b_g {
            ClaimStatus::Holds
        } else {
            ClaimStatus::Violated
        },
        reason: None,
        lhs: b_p as i64,
        rhs: b_g as i64,
        slack: Some(b_g as i64 - b_p as i64),
        witnesses: Witnesses {
            sequence: Some(labeling.seq_labels(wp.as_slice())),
            ..Witnesses::default()
        },
        elapsed_ms: elapsed_ms(start),
    })
}

/// Builds the cospectral pair `(fig7_G ⊠ K_n, fig7_H ⊠ K_n)` and certifies:
/// exact characteristic-polynomial equality, non-isomorphism (brute force up
/// to the search limit, degree sequences beyond), and burning numbers 2 vs 3.
pub fn generate_cospectral_pair(
    n: usize,
) -> Result<(Graph, Graph, VerificationReport), HarnessError> {
    if n < 1 {
        return Err(HarnessError::InvalidProductSize);
    }
    let start = Instant::now();
    let kn = Graph::complete(n).map_err(SpectralError::Graph)?;
    let (gp, _) = strong_product(&fig7_g(), &kn)?;
    let (hp, _) = strong_product(&fig7_h(), &kn)?;
    let pg = char_poly(&gp.adjacency_matrix()).expect("adjacency is square");
    let ph = char_poly(&hp.adjacency_matrix()).expect("adjacency is square");
    let cospectral = pg == ph;
    let non_isomorphic = if gp.order() <= DEFAULT_ISO_LIMIT {
        !are_isomorphic_bruteforce(&gp, &hp, DEFAULT_ISO_LIMIT).expect("orders match")
    } else {
        gp.degree_sequence() != hp.degree_sequence()
    };
    let (b_g, _) = burning_number(&gp)?;
    let (b_h, _) = burning_number(&hp)?;
    let status = if cospectral && non_isomorphic && b_g == 2 && b_h == 3 {
        ClaimStatus::Holds
    } else {
        ClaimStatus::Violated
    };
    let report = VerificationReport {
        claim_id: "cospectral_pair".to_string(),
        status,
        reason: None,
        lhs: b_g as i64,
        rhs: b_h as i64,
        slack: None,
        witnesses: Witnesses {
            polynomial: Some(pg.decimal_coefficients()),
            ..Witnesses::default()
        },
        elapsed_ms: elapsed_ms(start),
    };
    Ok((gp, hp, report))
}

/// Re-computes each expected invariant of a fixture and reports per key.
pub fn check_fixture(fixture: &Fixture) -> Vec<VerificationReport> {
    let mut reports = Vec::new();
    for (&key, &expected) in &fixture.expected {
        let start = Instant::now();
        let claim_id = format!("fixture:{}:{}", fixture.name, key);
        let mut witnesses = Witnesses::default();
        let computed: Option<i64> = match (&fixture.payload, key) {
            (FixturePayload::Graph(g), "burning_number") => match burning_number(g) {
                Ok((b, w)) => {
                    witnesses.sequence = Some(fixture.labeling().seq_labels(w.as_slice()));
                    Some(b as i64)
                }
                Err(_) => None,
            },
            (FixturePayload::Graph(g), "zero_forcing_number") => {
                let (z, w) = zero_forcing_number(g);
                witnesses.set = Some(fixture.labeling().set_labels(&w));
                Some(z as i64)
            }
            (FixturePayload::Hypergraph(h), "lazy_burning_number") => {
                let (bl, w) = lazy_burning_number(h, SingletonMode::Vacuous);
                witnesses.set = Some(fixture.labeling().set_labels(&w));
                Some(bl as i64)
            }
            (FixturePayload::Hypergraph(h), "zero_forcing_number_ig") => {
                let ig = h.incidence_graph();
                let (z, w) = zero_forcing_number(&ig.graph);
                witnesses.set = Some(ig.labeling.set_labels(&w));
                Some(z as i64)
            }
            (FixturePayload::Hypergraph(h), "hyperedge_count") => Some(h.edge_count() as i64),
            (FixturePayload::Hypergraph(h), "nonsingleton_components") => {
                Some(h.count_nonsingleton_components() as i64)
            }
            (FixturePayload::Hypergraph(h), "hypergraph_burning_number_strict") => {
                match hypergraph_burning_number(h, SingletonMode::Strict) {
                    Ok((b, w)) => {
                        witnesses.sequence = Some(fixture.labeling().seq_labels(w.as_slice()));
                        Some(b as i64)
                    }
                    Err(_) => None,
                }
            }
            _ => None,
        };
        let report = match computed {
            Some(lhs) => VerificationReport {
                claim_id,
                status: if lhs == expected {
                    ClaimStatus::Holds
                } else {
                    ClaimStatus::Violated
                },
                reason: None,
                lhs,
                rhs: expected,
                slack: Some(expected - lhs),
                witnesses,
                elapsed_ms: elapsed_ms(start),
            },
            None => VerificationReport {
                claim_id,
                status: ClaimStatus::Skipped,
                reason: Some(format!("no checker for invariant `{key}`")),
                lhs: 0,
                rhs: expected,
                slack: None,
                witnesses,
                elapsed_ms: elapsed_ms(start),
            },
        };
        reports.push(report);
    }
    reports
}

// ---------------------------------------------------------------------------
// Reproducible randomness
// ---------------------------------------------------------------------------

/// 64-bit linear congruential generator with Knuth's MMIX constants:
/// `x ← 6364136223846793005·x + 1442695040888963407 (mod 2^64)`, output the
/// whole new state. Ranges use the multiply-shift reduction
/// `below(n) = (x·n) >> 64`. Fixed seeds make every sweep reproducible in
/// any implementation of the same recipe.
#[derive(Debug, Clone)]
pub struct Lcg {
    state: u64,
}

impl Lcg {
    pub fn new(seed: u64) -> Lcg {
        Lcg { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self
            .state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.state
    }

    /// Uniform value in `0..n` (n ≥ 1).
    pub fn below(&mut self, n: usize) -> usize {
        assert!(n >= 1);
        ((self.next_u64() as u128 * n as u128) >> 64) as usize
    }
}

/// Random graph: order `1 + below(max_order)`, then each pair `u < v` in
/// lexicographic order becomes an edge iff `below(2) == 1`.
pub fn random_graph(rng: &mut Lcg, max_order: usize) -> Graph {
    let order = 1 + rng.below(max_order);
    let mut edges = Vec::new();
    for u in 0..order {
        for v in u + 1..order {
            if rng.below(2) == 1 {
                edges.push((u, v));
            }
        }
    }
    Graph::new(order, edges).expect("generated edges are valid")
}

/// Random hypergraph: order `1 + below(max_order)`, `below(max_edges + 1)`
/// hyperedges; each hyperedge takes every vertex with probability 1/2
/// (ascending membership draws) and falls back to the single vertex
/// `below(order)` when the draws come up empty.
pub fn random_hypergraph(rng: &mut Lcg, max_order: usize, max_edges: usize) -> Hypergraph {
    let order = 1 + rng.below(max_order);
    let m = rng.below(max_edges + 1);
    let mut edges: Vec<Vec<usize>> = Vec::with_capacity(m);
    for _ in 0..m {
        let mut members: Vec<usize> = (0..order).filter(|_| rng.below(2) == 1).collect();
        if members.is_empty() {
            members.push(rng.below(order));
        }
        edges.push(members);
    }
    Hypergraph::new(order, edges).expect("generated hyperedges are valid")
}

// ---------------------------------------------------------------------------
// Full run
// ---------------------------------------------------------------------------

/// Configuration for [`verify_all`]. Defaults match the acceptance sweep:
/// seed 0, 200 random hypergraphs of order ≤ 8 with ≤ 5 hyperedges.
#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub seed: u64,
    pub instances: usize,
    pub max_order: usize,
    pub max_edges: usize,
    pub preservation_instances: usize,
    pub preservation_max_order: usize,
    /// Write real elapsed times into reports (costs byte-reproducibility).
    pub timings: bool,
}

impl Default for SweepConfig {
    fn default() -> SweepConfig {
        SweepConfig {
            seed: 0,
            instances: 200,
            max_order: 8,
            max_edges: 5,
            preservation_instances: 20,
            preservation_max_order: 6,
            timings: false,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Summary {
    pub holds: usize,
    pub violated: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn total(&self) -> usize {
        self.holds + self.violated + self.skipped
    }

    fn tally(&mut self, status: ClaimStatus) {
        match status {
            ClaimStatus::Holds => self.holds += 1,
            ClaimStatus::Violated => self.violated += 1,
            ClaimStatus::Skipped => self.skipped += 1,
        }
    }
}

/// Runs every claim check over the fixtures and the seeded random sweeps,
/// streaming one JSON report line per claim to `sink`.
pub fn verify_all(cfg: &SweepConfig, sink: &mut dyn Write) -> std::io::Result<Summary> {
    let mut summary = Summary::default();
    let mut emit = |report: VerificationReport, sink: &mut dyn Write| -> std::io::Result<()> {
        summary.tally(report.status);
        write_report(&report, sink, cfg.timings)
    };

    for fixture in fixtures() {
        for report in check_fixture(&fixture) {
            emit(report, sink)?;
        }
    }

    let hypergraph_fixtures = [
        ("fig1_hypergraph", fig1_hypergraph()),
        ("fig5_hypergraph", fig5_hypergraph()),
        ("fig6_hypergraph", fig6_hypergraph()),
        (
            "h3_single_hyperedge",
            Hypergraph::single_full_hyperedge(4).expect("fits the cap"),
        ),
    ];
    for (name, h) in &hypergraph_fixtures {
        for mut report in [
            verify_theorem25_bound(h),
            verify_improved_bound(h),
            verify_lazy_le_burning(h),
        ] {
            report.claim_id = format!("{}[{}]", report.claim_id, name);
            emit(report, sink)?;
        }
    }

    for sizes in [vec![3usize, 4], vec![2, 2, 2], vec![5]] {
        let mut report = verify_equality_family(&sizes).expect("sizes are ≥ 2 and fit the cap");
        report.claim_id = format!("{}[{:?}]", report.claim_id, sizes);
        emit(report, sink)?;
    }

    let preservation_fixtures = [
        ("fig3_graph", fig3_graph(), 2usize),
        ("fig7_G", fig7_g(), 2),
        ("fig7_H", fig7_h(), 2),
        ("p9_path", Graph::path(9).expect("fits the cap"), 2),
        ("k5_complete", Graph::complete(5).expect("fits the cap"), 3),
    ];
    for (name, g, n) in &preservation_fixtures {
        let mut report =
            verify_burning_preservation(g, *n).expect("fixture products fit the cap");
        report.claim_id = format!("{}[{} ⊠ K_{}]", report.claim_id, name, n);
        emit(report, sink)?;
    }

    for n in 1..=3 {
        let (_, _, mut report) = generate_cospectral_pair(n).expect("products fit the cap");
        report.claim_id = format!("{}[n={}]", report.claim_id, n);
        emit(report, sink)?;
    }

    let mut rng = Lcg::new(cfg.seed);
    for i in 0..cfg.instances {
        let h = random_hypergraph(&mut rng, cfg.max_order, cfg.max_edges);
        for mut report in [
            verify_theorem25_bound(&h),
            verify_improved_bound(&h),
            verify_lazy_le_burning(&h),
        ] {
            report.claim_id = format!("{}[sweep {}]", report.claim_id, i);
            emit(report, sink)?;
        }
    }
    for i in 0..cfg.preservation_instances {
        let g = random_graph(&mut rng, cfg.preservation_max_order);
        let mut report = verify_burning_preservation(&g, 2).expect("sweep products fit the cap");
        report.claim_id = format!("{}[sweep {}]", report.claim_id, i);
        emit(report, sink)?;
    }

    Ok(summary)
}
