//! Catalog generation and the classification check suite.
//!
//! A catalog is a deterministic list of finite rings built from expression
//! specs. Every entry is analyzed once (element classes, ideal lattice,
//! spectrum, predicates, graphs, invariants) and then run through the full
//! set of classification checks. Failed checks carry concrete, re-checkable
//! counterexamples; hypotheses an entry does not satisfy yield
//! `inapplicable`, never a vacuous `pass`.

mod checks;

pub use checks::{run_checks, CheckRecord, Verdict, CHECK_IDS};

use std::fmt::Write as _;

use crate::error::Error;
use crate::expr::{elaborate_with, render, RingSpec};
use crate::export::json_string;
use crate::graph::{coann_ideal_graph_with, za_graph, SimpleGraph};
use crate::ideal::{
    all_ideals, crt_decompose_with, ring_predicates_with, spectrum_with, Ideal, RingPredicates,
    SpectrumSummary,
};
use crate::invariants::{Budget, InvariantReport};
use crate::poly::{is_prime, Polynomial};
use crate::ring::{classify_elements, BuildConfig, ElementClasses, FiniteRing};

/// Which construction families a catalog draws from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Families {
    pub zn: bool,
    pub gf: bool,
    pub products: bool,
    pub local: bool,
    pub matrix: bool,
}

impl Families {
    pub fn all() -> Self {
        Families {
            zn: true,
            gf: true,
            products: true,
            local: true,
            matrix: true,
        }
    }

    pub fn none() -> Self {
        Families {
            zn: false,
            gf: false,
            products: false,
            local: false,
            matrix: false,
        }
    }

    /// Parses a comma-separated list such as `zn,gf,matrix`.
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut f = Families::none();
        for part in text.split(',') {
            match part.trim() {
                "zn" => f.zn = true,
                "gf" => f.gf = true,
                "products" => f.products = true,
                "local" => f.local = true,
                "matrix" => f.matrix = true,
                other => return Err(format!("unknown family `{other}`")),
            }
        }
        Ok(f)
    }
}

#[derive(Debug, Clone)]
pub struct CatalogLimits {
    pub max_order: usize,
    pub families: Families,
}

/// One catalog ring together with the expression it was built from. The
/// provenance string re-elaborates to a ring with identical tables.
#[derive(Debug, Clone)]
pub struct RingCatalogEntry {
    pub spec: RingSpec,
    pub provenance: String,
    pub ring: FiniteRing,
}

fn prime_powers_up_to(max: u64) -> Vec<u64> {
    (2..=max).filter(|&q| crate::poly::prime_power(q).is_some()).collect()
}

fn field_spec(q: u64) -> RingSpec {
    if is_prime(q) {
        RingSpec::ZMod(q)
    } else {
        RingSpec::Gf(q)
    }
}

/// Deterministic ring catalog for the requested families and size limit.
///
/// The matrix family consists of the fixed instances `M2(Z2)` and `M2(Z3)`;
/// they are included whenever the family is enabled and `max_order >= 2`,
/// with `M2(Z3)` deliberately allowed past the order limit as the smallest
/// noncommutative instance over a field of odd characteristic.
pub fn build_catalog(limits: &CatalogLimits) -> Vec<RingCatalogEntry> {
    build_catalog_with(limits, &BuildConfig::default())
}

pub fn build_catalog_with(limits: &CatalogLimits, cfg: &BuildConfig) -> Vec<RingCatalogEntry> {
    let max = limits.max_order as u64;
    let fam = &limits.families;
    let mut specs: Vec<RingSpec> = Vec::new();
    if fam.zn {
        for n in 2..=max {
            specs.push(RingSpec::ZMod(n));
        }
    }
    if fam.gf {
        for q in prime_powers_up_to(max) {
            if crate::poly::prime_power(q).is_some_and(|(_, s)| s >= 2) {
                specs.push(RingSpec::Gf(q));
            }
        }
    }
    if fam.products {
        let qs = prime_powers_up_to(max / 2);
        for (i, &q1) in qs.iter().enumerate() {
            for &q2 in &qs[i..] {
                if q1 * q2 <= max {
                    specs.push(RingSpec::Product(vec![field_spec(q1), field_spec(q2)]));
                }
            }
        }
        for (i, &q1) in qs.iter().enumerate() {
            for (j, &q2) in qs.iter().enumerate().skip(i) {
                for &q3 in &qs[j..] {
                    if q1 * q2 * q3 <= max {
                        specs.push(RingSpec::Product(vec![
                            field_spec(q1),
                            field_spec(q2),
                            field_spec(q3),
                        ]));
                    }
                }
            }
        }
        // mixed products of a local non-field with small factors
        let x_squared = Polynomial::new(2, vec![0, 0, 1]);
        let mixed: Vec<(RingSpec, u64)> = vec![
            (
                RingSpec::Product(vec![RingSpec::ZMod(4), RingSpec::ZMod(2)]),
                8,
            ),
            (
                RingSpec::Product(vec![RingSpec::ZMod(4), RingSpec::ZMod(3)]),
                12,
            ),
            (
                RingSpec::Product(vec![
                    RingSpec::PolyQuotient(2, x_squared.clone()),
                    RingSpec::ZMod(3),
                ]),
                12,
            ),
            (
                RingSpec::Product(vec![RingSpec::ZMod(4), RingSpec::ZMod(4)]),
                16,
            ),
            (
                RingSpec::Product(vec![RingSpec::ZMod(9), RingSpec::ZMod(2)]),
                18,
            ),
            (
                RingSpec::Product(vec![RingSpec::ZMod(8), RingSpec::ZMod(3)]),
                24,
            ),
        ];
        for (spec, order) in mixed {
            if order <= max {
                specs.push(spec);
            }
        }
    }
    if fam.local {
        if max >= 4 {
            specs.push(RingSpec::PolyQuotient(2, Polynomial::new(2, vec![0, 0, 1])));
        }
        for n in [4u64, 8, 9, 25, 27] {
            if n <= max {
                specs.push(RingSpec::ZMod(n));
            }
        }
    }
    if fam.matrix && max >= 2 {
        specs.push(RingSpec::Matrix(2, Box::new(RingSpec::ZMod(2))));
        specs.push(RingSpec::Matrix(2, Box::new(RingSpec::ZMod(3))));
    }

    let mut seen = std::collections::BTreeSet::new();
    let mut entries = Vec::new();
    for spec in specs {
        let provenance = render(&spec);
        if !seen.insert(provenance.clone()) {
            continue;
        }
        let ring = elaborate_with(&spec, cfg)
            .unwrap_or_else(|e| panic!("catalog spec `{provenance}` failed to elaborate: {e}"));
        entries.push(RingCatalogEntry {
            spec,
            provenance,
            ring,
        });
    }
    entries
}

/// Everything the checks consume, computed once per entry. Parts that can
/// exceed a capacity or budget limit are stored as results so each check can
/// turn an unavailable input into a `skipped` verdict.
#[derive(Debug)]
pub struct EntryAnalysis {
    pub entry: RingCatalogEntry,
    pub classes: ElementClasses,
    pub lattice: Result<Vec<Ideal>, Error>,
    pub spectrum: Result<SpectrumSummary, Error>,
    pub predicates: Result<RingPredicates, Error>,
    pub crt_fields: Result<Option<Vec<FiniteRing>>, Error>,
    pub za: SimpleGraph,
    pub za_report: Result<InvariantReport, Error>,
    pub coann: Result<(SimpleGraph, InvariantReport), Error>,
}

pub fn analyze_entry(entry: RingCatalogEntry, budget: &Budget) -> EntryAnalysis {
    let ring = entry.ring.clone();
    let classes = classify_elements(&ring);
    let lattice = all_ideals(&ring);
    let spectrum = lattice.as_ref().map_err(Clone::clone).map(|lat| spectrum_with(&ring, lat));
    let predicates = lattice
        .as_ref()
        .map_err(Clone::clone)
        .map(|lat| ring_predicates_with(&ring, lat));
    let crt_fields = match &spectrum {
        Ok(s) => crt_decompose_with(&ring, s),
        Err(e) => Err(e.clone()),
    };
    let za = za_graph(&ring);
    let za_report = InvariantReport::compute(&za, budget);
    let coann = lattice.as_ref().map_err(Clone::clone).and_then(|lat| {
        let g = coann_ideal_graph_with(&ring, lat);
        let report = InvariantReport::compute(&g, budget)?;
        Ok((g, report))
    });
    EntryAnalysis {
        entry,
        classes,
        lattice,
        spectrum,
        predicates,
        crt_fields,
        za,
        za_report,
        coann,
    }
}

/// Runtime coverage of one classification result, or the reason a result is
/// represented by documentation only.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coverage {
    Runtime,
    Documented(&'static str),
}

/// Every classification result the suite accounts for. Entries marked
/// `Runtime` must correspond one-to-one with implemented checks; the suite
/// asserts that correspondence on startup.
pub const TRACEABILITY: &[(&str, Coverage)] = &[
    ("empty_graph_classification", Coverage::Runtime),
    ("chained_ring_empty_graph", Coverage::Runtime),
    ("idempotent_pair_adjacent", Coverage::Runtime),
    ("bipartite_classification", Coverage::Runtime),
    ("matrix_ring_girth_three", Coverage::Runtime),
    ("semiprimitive_principal_connected", Coverage::Runtime),
    ("connected_bezout_jacobson", Coverage::Runtime),
    ("connected_bezout_iff", Coverage::Runtime),
    ("field_product_diameter", Coverage::Runtime),
    ("star_implies_two_maximals", Coverage::Runtime),
    ("star_classification", Coverage::Runtime),
    ("complete_implies_ideal_graph_complete", Coverage::Runtime),
    ("complete_classification", Coverage::Runtime),
    ("regular_classification", Coverage::Runtime),
    ("regular_degree_prime_power", Coverage::Runtime),
    ("reduced_is_field_product", Coverage::Runtime),
    ("disjoint_prime_pair_adjacency", Coverage::Runtime),
    ("clique_number_lower_bound", Coverage::Runtime),
    ("chromatic_at_least_clique", Coverage::Runtime),
    (
        "localization_invariance",
        Coverage::Documented(
            "in a finite ring a multiplicative set meeting the zero divisors only in 0 \
             consists of units, so localizing changes nothing",
        ),
    ),
    (
        "degree_finiteness",
        Coverage::Documented("every graph built from a finite ring is finite outright"),
    ),
];

fn assert_traceability_covered() {
    let declared: std::collections::BTreeSet<&str> = TRACEABILITY
        .iter()
        .filter(|(_, c)| matches!(c, Coverage::Runtime))
        .map(|(id, _)| *id)
        .collect();
    let implemented: std::collections::BTreeSet<&str> = CHECK_IDS.iter().copied().collect();
    assert_eq!(
        declared, implemented,
        "check registry and traceability table disagree"
    );
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct VerdictCounts {
    pub pass: usize,
    pub fail: usize,
    pub inapplicable: usize,
    pub skipped: usize,
}

impl VerdictCounts {
    fn record(&mut self, v: Verdict) {
        match v {
            Verdict::Pass => self.pass += 1,
            Verdict::Fail => self.fail += 1,
            Verdict::Inapplicable => self.inapplicable += 1,
            Verdict::Skipped => self.skipped += 1,
        }
    }

    pub fn total(&self) -> usize {
        self.pass + self.fail + self.inapplicable + self.skipped
    }
}

/// The aggregated result of a catalog sweep. Serializations are deterministic
/// and byte-identical across runs (timing is kept in memory only).
#[derive(Debug)]
pub struct TheoremReport {
    pub entry_count: usize,
    pub records: Vec<CheckRecord>,
    pub counts: VerdictCounts,
}

impl TheoremReport {
    pub fn has_failures(&self) -> bool {
        self.counts.fail > 0
    }

    /// Per-entry summary lines, failures spelled out, then totals.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut idx = 0;
        while idx < self.records.len() {
            let ring = self.records[idx].ring.clone();
            let mut c = VerdictCounts::default();
            let start = idx;
            while idx < self.records.len() && self.records[idx].ring == ring {
                c.record(self.records[idx].verdict);
                idx += 1;
            }
            let _ = writeln!(
                out,
                "{ring}: {} pass, {} fail, {} inapplicable, {} skipped",
                c.pass, c.fail, c.inapplicable, c.skipped
            );
            for r in &self.records[start..idx] {
                if r.verdict == Verdict::Fail {
                    let _ = writeln!(out, "  FAIL {}: {}", r.id, r.detail);
                }
            }
        }
        let c = &self.counts;
        let _ = writeln!(
            out,
            "total: {} rings, {} checks - {} pass, {} fail, {} inapplicable, {} skipped",
            self.entry_count,
            c.total(),
            c.pass,
            c.fail,
            c.inapplicable,
            c.skipped
        );
        out
    }

    /// Machine-readable report; the `checks` array uses the same record
    /// schema as the per-ring `verify` output.
    pub fn to_json(&self) -> String {
        let mut out = String::new();
        out.push_str("{\n");
        let _ = writeln!(out, "  \"entries\": {},", self.entry_count);
        let c = &self.counts;
        let _ = writeln!(
            out,
            "  \"counts\": {{\"pass\": {}, \"fail\": {}, \"inapplicable\": {}, \"skipped\": {}}},",
            c.pass, c.fail, c.inapplicable, c.skipped
        );
        out.push_str("  \"checks\": [\n");
        for (i, r) in self.records.iter().enumerate() {
            let witness = r
                .witness
                .iter()
                .map(|w| w.to_string())
                .collect::<Vec<_>>()
                .join(", ");
            let _ = write!(
                out,
                "    {{\"id\": {}, \"ring\": {}, \"verdict\": {}, \"detail\": {}, \"witness\": [{}]}}",
                json_string(r.id),
                json_string(&r.ring),
                json_string(r.verdict.as_str()),
                json_string(&r.detail),
                witness
            );
            out.push_str(if i + 1 < self.records.len() { ",\n" } else { "\n" });
        }
        out.push_str("  ]\n}\n");
        out
    }
}

/// Runs every check over every entry; deterministic record order (catalog
/// order, then check registry order).
pub fn run_suite(catalog: Vec<RingCatalogEntry>, budget: &Budget) -> TheoremReport {
    assert_traceability_covered();
    let entry_count = catalog.len();
    let mut records = Vec::new();
    let mut counts = VerdictCounts::default();
    for entry in catalog {
        let analysis = analyze_entry(entry, budget);
        for record in run_checks(&analysis) {
            counts.record(record.verdict);
            records.push(record);
        }
    }
    TheoremReport {
        entry_count,
        records,
        counts,
    }
}
