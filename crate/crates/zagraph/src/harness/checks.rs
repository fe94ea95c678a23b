//! The individual classification checks.
//!
//! Verdict conventions: a ring-class hypothesis the entry does not satisfy
//! yields `Inapplicable`; a satisfied hypothesis with a false antecedent
//! yields a vacuous `Pass`; a missing input (capacity or budget error during
//! analysis) yields `Skipped`. Failures carry the offending elements.

use std::time::{Duration, Instant};

use crate::error::Error;
use crate::ideal::{classify_ideal, ideal_span, Ideal, SpectrumSummary};
use crate::invariants::Distance;
use crate::poly::prime_power;
use crate::ring::{annihilator, FiniteRing, Side};
use crate::BitSet;

use super::EntryAnalysis;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Inapplicable,
    Skipped,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inapplicable => "inapplicable",
            Verdict::Skipped => "skipped",
        }
    }
}

/// One check applied to one catalog entry.
#[derive(Debug, Clone)]
pub struct CheckRecord {
    pub id: &'static str,
    pub ring: String,
    pub verdict: Verdict,
    pub detail: String,
    /// Element indices backing a failure (or relevant witnesses on a pass);
    /// a fail record always carries enough to re-check it by hand.
    pub witness: Vec<usize>,
    /// Wall-clock time of the check; kept in memory, never serialized, so
    /// reports stay byte-identical across runs.
    pub elapsed: Duration,
}

type Outcome = (Verdict, String, Vec<usize>);

fn pass(detail: impl Into<String>) -> Outcome {
    (Verdict::Pass, detail.into(), vec![])
}

fn pass_with(detail: impl Into<String>, witness: Vec<usize>) -> Outcome {
    (Verdict::Pass, detail.into(), witness)
}

fn fail(detail: impl Into<String>, witness: Vec<usize>) -> Outcome {
    (Verdict::Fail, detail.into(), witness)
}

fn inapplicable(reason: impl Into<String>) -> Outcome {
    (Verdict::Inapplicable, reason.into(), vec![])
}

fn skipped(err: &Error) -> Outcome {
    (Verdict::Skipped, err.to_string(), vec![])
}

macro_rules! need {
    ($result:expr) => {
        match &$result {
            Ok(value) => value,
            Err(err) => return skipped(err),
        }
    };
}

fn neg(ring: &FiniteRing, v: usize) -> usize {
    ring.elements()
        .find(|&b| ring.add(v, b) == 0)
        .expect("additive inverse exists")
}

fn one_minus(ring: &FiniteRing, e: usize) -> usize {
    ring.add(ring.one_index(), neg(ring, e))
}

/// `Ann(x) != {0}` for every nonunit `x` (0 included).
fn all_nonunit_annihilators_nonzero(a: &EntryAnalysis) -> bool {
    let ring = &a.entry.ring;
    a.classes
        .units
        .complement()
        .iter()
        .all(|x| annihilator(ring, x, Side::TwoSided).count() >= 2)
}

fn principal_maximal_exists(ring: &FiniteRing, spec: &SpectrumSummary) -> bool {
    spec.maximal_ideals.iter().any(|m| {
        m.members.iter().any(|x| {
            ideal_span(ring, &BitSet::from_indices(ring.order(), &[x])).members == m.members
        })
    })
}

/// The vertex set is `{x}` and `Jac(R) = {0, x}`.
fn jac_is_the_single_vertex(a: &EntryAnalysis, spec: &SpectrumSummary) -> bool {
    if a.za.vertex_count() != 1 {
        return false;
    }
    let x = a.za.source_of(0);
    spec.jacobson_radical.members
        == BitSet::from_indices(a.entry.ring.order(), &[0, x])
}

fn crt_field_orders(fields: &[FiniteRing]) -> Vec<usize> {
    let mut orders: Vec<usize> = fields.iter().map(|f| f.order()).collect();
    orders.sort_unstable();
    orders
}

fn first_edge_elements(a: &EntryAnalysis) -> Vec<usize> {
    a.za
        .edges()
        .first()
        .map(|&(u, v)| vec![a.za.source_of(u), a.za.source_of(v)])
        .unwrap_or_default()
}

fn check_empty_graph_classification(a: &EntryAnalysis) -> Outcome {
    if !a.entry.ring.is_commutative() {
        return inapplicable("stated for commutative rings");
    }
    let preds = need!(a.predicates);
    let edgeless = a.za.edge_count() == 0;
    let ann_cond = all_nonunit_annihilators_nonzero(a);
    if edgeless && !(preds.local && ann_cond) {
        return fail(
            "ZA is edgeless but the ring is not local with every nonunit annihilator nonzero",
            vec![],
        );
    }
    if preds.bezout && preds.local && ann_cond && !edgeless {
        return fail(
            "Bezout local ring with all nonunit annihilators nonzero, yet ZA has an edge",
            first_edge_elements(a),
        );
    }
    if edgeless {
        pass("edgeless; the ring is local and every nonunit annihilator is nonzero")
    } else if preds.bezout {
        pass("ZA has edges and the ring is not local (both directions verified)")
    } else {
        pass("ZA has edges (forward direction vacuous; converse needs a Bezout ring)")
    }
}

fn check_chained_ring_empty_graph(a: &EntryAnalysis) -> Outcome {
    if !a.entry.ring.is_commutative() {
        return inapplicable("stated for commutative rings");
    }
    let preds = need!(a.predicates);
    if !preds.chained {
        return inapplicable("not a chained ring");
    }
    if a.za.edge_count() == 0 {
        pass("chained (hence zero-dimensional) ring has an edgeless ZA")
    } else {
        fail("chained ring with an edge in ZA", first_edge_elements(a))
    }
}

fn check_idempotent_pair_adjacent(a: &EntryAnalysis) -> Outcome {
    let ring = &a.entry.ring;
    let nontrivial: Vec<usize> = a
        .classes
        .idempotents
        .iter()
        .filter(|&e| e != 0 && e != ring.one_index())
        .collect();
    if nontrivial.is_empty() {
        return inapplicable("no nontrivial idempotent");
    }
    for &e in &nontrivial {
        let c = one_minus(ring, e);
        let (Some(ve), Some(vc)) = (a.za.vertex_of_source(e), a.za.vertex_of_source(c)) else {
            return fail("idempotent or its complement is not a vertex", vec![e, c]);
        };
        if !a.za.has_edge(ve, vc) {
            return fail("idempotent e not adjacent to 1-e", vec![e, c]);
        }
    }
    if a.za.edge_count() == 0 {
        return fail("nontrivial idempotent exists but ZA is edgeless", nontrivial);
    }
    pass(format!(
        "{} nontrivial idempotent(s), each adjacent to its complement; ZA not edgeless",
        nontrivial.len()
    ))
}

fn check_bipartite_classification(a: &EntryAnalysis) -> Outcome {
    if !a.entry.ring.is_commutative() {
        return inapplicable("stated for commutative rings");
    }
    let preds = need!(a.predicates);
    if !preds.bezout {
        return inapplicable("needs a Bezout ring");
    }
    let report = need!(a.za_report);
    let crt = need!(a.crt_fields);
    let c1 = report.is_bipartite && report.min_degree.is_some_and(|d| d >= 1);
    let c2 = report.is_complete_bipartite;
    let c3 = crt.as_ref().is_some_and(|fs| fs.len() == 2);
    if c1 == c2 && c2 == c3 {
        pass(format!(
            "bipartite with positive minimum degree = {c1}, complete bipartite = {c2}, product of two fields = {c3}"
        ))
    } else {
        fail(
            format!(
                "equivalence broken: bipartite with positive minimum degree = {c1}, complete bipartite = {c2}, product of two fields = {c3}"
            ),
            vec![],
        )
    }
}

fn check_matrix_ring_girth_three(a: &EntryAnalysis) -> Outcome {
    let Some(k) = a.entry.spec.matrix_dim() else {
        return inapplicable("not a matrix ring");
    };
    if k < 2 {
        return inapplicable("1x1 matrices are the base ring");
    }
    let report = need!(a.za_report);
    if report.girth != Distance::Finite(3) {
        return fail(format!("girth is {} instead of 3", report.girth), vec![]);
    }
    if k == 2 {
        // the standard witness triangle, located by label
        let labels = ["[[1,0],[0,0]]", "[[0,0],[1,0]]", "[[0,1],[0,1]]"];
        let mut ids = Vec::new();
        for l in labels {
            match (0..a.za.vertex_count()).find(|&v| a.za.label(v) == l) {
                Some(v) => ids.push(v),
                None => return fail(format!("witness matrix {l} is not a vertex"), vec![]),
            }
        }
        for i in 0..3 {
            for j in i + 1..3 {
                if !a.za.has_edge(ids[i], ids[j]) {
                    return fail(
                        format!(
                            "witness matrices {} and {} are not adjacent",
                            labels[i], labels[j]
                        ),
                        vec![a.za.source_of(ids[i]), a.za.source_of(ids[j])],
                    );
                }
            }
        }
        return pass_with(
            "girth 3; the witness matrices form a triangle under the left annihilator",
            ids.iter().map(|&v| a.za.source_of(v)).collect(),
        );
    }
    pass("girth 3")
}

fn check_semiprimitive_principal_connected(a: &EntryAnalysis) -> Outcome {
    if !a.entry.ring.is_commutative() {
        return inapplicable("stated for commutative rings");
    }
    let preds = need!(a.predicates);
    let spec = need!(a.spectrum);
    if !preds.semiprimitive {
        return inapplicable("not semiprimitive");
    }
    if !principal_maximal_exists(&a.entry.ring, spec) {
        return inapplicable("no principal maximal ideal");
    }
    let report = need!(a.za_report);
    let small_diameter = matches!(report.diameter, Distance::Finite(d) if d <= 4);
    if report.is_connected && small_diameter {
        pass(format!("connected with diameter {}", report.diameter))
    } else {
        fail(
            format!(
                "expected a connected graph of diameter at most 4, found connected = {}, diameter = {}",
                report.is_connected, report.diameter
            ),
            vec![],
        )
    }
}

fn check_connected_bezout_jacobson(a: &EntryAnalysis) -> Outcome {
    if !a.entry.ring.is_commutative() {
        return inapplicable("stated for commutative rings");
    }
    let preds = need!(a.predicates);
    if !preds.bezout {
        return inapplicable("needs a Bezout ring");
    }
    let report = need!(a.za_report);
    if !report.is_connected {
        return pass("vacuous: ZA is disconnected");
    }
    let spec = need!(a.spectrum);
    if spec.jacobson_radical.is_zero() {
        pass(
            "connected and Jac(R) = {0} (the branch with a trivial annihilator \
             cannot occur in a finite ring)",
        )
    } else if jac_is_the_single_vertex(a, spec) {
        pass("connected with a single vertex x and Jac(R) = {0, x}")
    } else {
        fail(
            "connected, but Jac(R) is nonzero and the vertex set is not the single element of Jac",
            spec.jacobson_radical.members.members(),
        )
    }
}

fn check_connected_bezout_iff(a: &EntryAnalysis) -> Outcome {
    if !a.entry.ring.is_commutative() {
        return inapplicable("stated for commutative rings");
    }
    let preds = need!(a.predicates);
    let spec = need!(a.spectrum);
    if !preds.bezout {
        return inapplicable("needs a Bezout ring");
    }
    if !principal_maximal_exists(&a.entry.ring, spec) {
        return inapplicable("no principal maximal ideal");
    }
    let report = need!(a.za_report);
    let rhs = spec.jacobson_radical.is_zero() || jac_is_the_single_vertex(a, spec);
    if report.is_connected == rhs {
        pass(format!(
            "connected = {} matches the radical condition",
            report.is_connected
        ))
    } else {
        fail(
            format!(
                "connected = {} but the radical condition gives {}",
                report.is_connected, rhs
            ),
            vec![],
        )
    }
}

fn check_field_product_diameter(a: &EntryAnalysis) -> Outcome {
    if !a.entry.ring.is_commutative() {
        return inapplicable("stated for commutative rings");
    }
    let crt = need!(a.crt_fields);
    let Some(fields) = crt.as_ref() else {
        return inapplicable("not a product of fields");
    };
    if fields.len() < 2 {
        return inapplicable("a single field");
    }
    let orders = crt_field_orders(fields);
    let expected = if orders.len() == 2 {
        if orders == [2, 2] {
            1
        } else {
            2
        }
    } else {
        3
    };
    let report = need!(a.za_report);
    if report.diameter == Distance::Finite(expected) {
        pass(format!(
            "product of fields of orders {orders:?}: diameter {expected}"
        ))
    } else {
        fail(
            format!(
                "product of fields of orders {orders:?}: expected diameter {expected}, found {}",
                report.diameter
            ),
            vec![],
        )
    }
}

fn check_star_implies_two_maximals(a: &EntryAnalysis) -> Outcome {
    if !a.entry.ring.is_commutative() {
        return inapplicable("stated for commutative rings");
    }
    let report = need!(a.za_report);
    if !report.is_star {
        return pass("vacuous: ZA is not a star");
    }
    let spec = need!(a.spectrum);
    let count = spec.maximal_ideals.len();
    if count <= 2 {
        pass(format!("star graph and {count} maximal ideal(s)"))
    } else {
        fail(format!("star graph but {count} maximal ideals"), vec![])
    }
}

fn check_star_classification(a: &EntryAnalysis) -> Outcome {
    let ring = &a.entry.ring;
    if !ring.is_commutative() {
        return inapplicable("stated for commutative rings");
    }
    let preds = need!(a.predicates);
    if !preds.bezout {
        return inapplicable("needs a Bezout ring");
    }
    if preds.field {
        return inapplicable("stated for non-fields");
    }
    let report = need!(a.za_report);
    let spec = need!(a.spectrum);
    let crt = need!(a.crt_fields);
    let is_star = report.is_star;
    let tiny_local_case = preds.local && {
        let m = &spec.maximal_ideals[0].members;
        m.count() == 2 && {
            let x = m.iter().find(|&x| x != 0).expect("nonzero member");
            ring.mul(x, x) == 0
        }
    };
    let z2_cross_field_case = crt
        .as_ref()
        .is_some_and(|fs| fs.len() == 2 && crt_field_orders(fs)[0] == 2);
    let rhs = tiny_local_case || z2_cross_field_case;
    if is_star == rhs {
        pass(format!(
            "star = {is_star}; local with maximal ideal {{0,x}}, x^2 = 0: {tiny_local_case}; \
             Z2 x field: {z2_cross_field_case}"
        ))
    } else {
        fail(
            format!(
                "star = {is_star} but classification sides give local-{{0,x}} = {tiny_local_case}, \
                 Z2 x field = {z2_cross_field_case}"
            ),
            vec![],
        )
    }
}

fn check_complete_implies_ideal_graph_complete(a: &EntryAnalysis) -> Outcome {
    if !a.entry.ring.is_commutative() {
        return inapplicable("stated for commutative rings");
    }
    let za_report = need!(a.za_report);
    let (coann_graph, coann_report) = need!(a.coann);
    if za_report.is_complete {
        if coann_report.is_complete {
            pass("ZA complete and the co-annihilating ideal graph complete")
        } else {
            fail(
                "ZA complete but the co-annihilating ideal graph is not",
                vec![],
            )
        }
    } else if coann_report.is_complete && coann_graph.vertex_count() > 0 {
        pass(
            "vacuous; converse fails here: the co-annihilating ideal graph is complete \
             while ZA is not",
        )
    } else {
        pass("vacuous: ZA is not complete")
    }
}

fn check_complete_classification(a: &EntryAnalysis) -> Outcome {
    if !a.entry.ring.is_commutative() {
        return inapplicable("stated for commutative rings");
    }
    let report = need!(a.za_report);
    let preds = need!(a.predicates);
    let crt = need!(a.crt_fields);
    let lhs = report.is_complete;
    let one_nonunit = a.classes.nonzero_nonunits.count() == 1;
    let z2_x_z2 = crt
        .as_ref()
        .is_some_and(|fs| fs.len() == 2 && crt_field_orders(fs) == [2, 2]);
    let rhs = one_nonunit || preds.integral_domain || z2_x_z2;
    if lhs == rhs {
        pass(format!(
            "complete = {lhs}; one nonzero nonunit: {one_nonunit}, integral domain: {}, \
             Z2 x Z2: {z2_x_z2}",
            preds.integral_domain
        ))
    } else {
        fail(
            format!(
                "complete = {lhs} but classification gives one-nonunit = {one_nonunit}, \
                 domain = {}, Z2 x Z2 = {z2_x_z2}",
                preds.integral_domain
            ),
            vec![],
        )
    }
}

fn check_regular_classification(a: &EntryAnalysis) -> Outcome {
    if !a.entry.ring.is_commutative() {
        return inapplicable("stated for commutative rings");
    }
    let preds = need!(a.predicates);
    if !preds.bezout {
        return inapplicable("needs a Bezout ring");
    }
    let report = need!(a.za_report);
    let crt = need!(a.crt_fields);
    let lhs_k = report.regular_k.filter(|&k| k >= 1);
    let rhs_q = crt.as_ref().and_then(|fs| {
        let orders = crt_field_orders(fs);
        (orders.len() == 2 && orders[0] == orders[1]).then(|| orders[0])
    });
    match (lhs_k, rhs_q) {
        (None, None) => pass("vacuous: neither k-regular (k > 0) nor a square of a field"),
        (Some(k), Some(q)) if k + 1 == q => {
            pass(format!("{k}-regular and a product of two fields of order {q}"))
        }
        (lhs, rhs) => fail(
            format!("regular degree {lhs:?} against field-square order {rhs:?}"),
            vec![],
        ),
    }
}

fn check_regular_degree_prime_power(a: &EntryAnalysis) -> Outcome {
    if !a.entry.ring.is_commutative() {
        return inapplicable("stated for commutative rings");
    }
    let preds = need!(a.predicates);
    if !preds.bezout {
        return inapplicable("needs a Bezout ring");
    }
    let report = need!(a.za_report);
    match report.regular_k.filter(|&k| k >= 1) {
        None => pass("vacuous: not k-regular with k > 0"),
        Some(k) => {
            if prime_power(k as u64 + 1).is_some() {
                pass(format!("{k}-regular and {} is a prime power", k + 1))
            } else {
                fail(format!("{k}-regular but {} is not a prime power", k + 1), vec![])
            }
        }
    }
}

fn check_reduced_is_field_product(a: &EntryAnalysis) -> Outcome {
    if !a.entry.ring.is_commutative() {
        return inapplicable("stated for commutative rings");
    }
    let preds = need!(a.predicates);
    if !preds.reduced {
        return inapplicable("not reduced");
    }
    let crt = need!(a.crt_fields);
    match crt {
        Some(fields) => pass(format!(
            "reduced; decomposes into fields of orders {:?}",
            crt_field_orders(fields)
        )),
        None => fail("reduced but no decomposition into fields", vec![]),
    }
}

fn prime_ideals(a: &EntryAnalysis, lattice: &[Ideal]) -> Vec<Ideal> {
    lattice
        .iter()
        .filter(|i| classify_ideal(&a.entry.ring, i, lattice).prime)
        .cloned()
        .collect()
}

fn check_disjoint_prime_pair_adjacency(a: &EntryAnalysis) -> Outcome {
    if !a.entry.ring.is_commutative() {
        return inapplicable("stated for commutative rings");
    }
    let lattice = need!(a.lattice);
    let primes = prime_ideals(a, lattice);
    let mut pairs_checked = 0;
    for (i, p1) in primes.iter().enumerate() {
        for p2 in primes.iter().skip(i + 1) {
            if !p1.members.intersection(&p2.members).is_only_zero() {
                continue;
            }
            if p1.is_zero() || p2.is_zero() {
                continue;
            }
            pairs_checked += 1;
            for x in p1.members.iter().filter(|&x| x != 0) {
                for y in p2.members.iter().filter(|&y| y != 0) {
                    let (Some(vx), Some(vy)) =
                        (a.za.vertex_of_source(x), a.za.vertex_of_source(y))
                    else {
                        return fail("prime member is not a vertex", vec![x, y]);
                    };
                    if !a.za.has_edge(vx, vy) {
                        return fail(
                            "nonzero members of primes meeting in {0} are not adjacent",
                            vec![x, y],
                        );
                    }
                }
            }
        }
    }
    if pairs_checked == 0 {
        inapplicable("no pair of nonzero primes meeting in {0}")
    } else {
        pass(format!(
            "{pairs_checked} prime pair(s) with trivial intersection fully adjacent"
        ))
    }
}

fn check_clique_number_lower_bound(a: &EntryAnalysis) -> Outcome {
    if !a.entry.ring.is_commutative() {
        return inapplicable("stated for commutative rings");
    }
    let report = need!(a.za_report);
    let spec = need!(a.spectrum);
    let min_count = spec.minimal_primes.len();
    let from_minimal =
        (min_count >= 2 && spec.minimal_primes.iter().all(|p| !p.is_zero())).then_some(min_count);
    let from_product = a.entry.spec.product_arity().filter(|&n| n >= 2);
    let Some(bound) = from_minimal.max(from_product) else {
        return inapplicable("fewer than two nonzero minimal primes and not an explicit product");
    };
    if report.clique_number >= bound {
        pass(format!(
            "clique number {} >= {bound}",
            report.clique_number
        ))
    } else {
        fail(
            format!("clique number {} < {bound}", report.clique_number),
            vec![],
        )
    }
}

fn check_chromatic_at_least_clique(a: &EntryAnalysis) -> Outcome {
    let report = need!(a.za_report);
    if report.chromatic_number < report.clique_number {
        return fail(
            format!(
                "ZA: chromatic number {} < clique number {}",
                report.chromatic_number, report.clique_number
            ),
            vec![],
        );
    }
    let mut detail = format!(
        "ZA: chromatic {} >= clique {}",
        report.chromatic_number, report.clique_number
    );
    if let Ok((_, coann_report)) = &a.coann {
        if coann_report.chromatic_number < coann_report.clique_number {
            return fail(
                format!(
                    "ideal graph: chromatic number {} < clique number {}",
                    coann_report.chromatic_number, coann_report.clique_number
                ),
                vec![],
            );
        }
        detail.push_str(&format!(
            "; ideal graph: chromatic {} >= clique {}",
            coann_report.chromatic_number, coann_report.clique_number
        ));
    }
    pass(detail)
}

type CheckFn = fn(&EntryAnalysis) -> Outcome;

/// Registry of all runtime checks, in report order.
const CHECKS: &[(&str, CheckFn)] = &[
    ("empty_graph_classification", check_empty_graph_classification),
    ("chained_ring_empty_graph", check_chained_ring_empty_graph),
    ("idempotent_pair_adjacent", check_idempotent_pair_adjacent),
    ("bipartite_classification", check_bipartite_classification),
    ("matrix_ring_girth_three", check_matrix_ring_girth_three),
    (
        "semiprimitive_principal_connected",
        check_semiprimitive_principal_connected,
    ),
    ("connected_bezout_jacobson", check_connected_bezout_jacobson),
    ("connected_bezout_iff", check_connected_bezout_iff),
    ("field_product_diameter", check_field_product_diameter),
    ("star_implies_two_maximals", check_star_implies_two_maximals),
    ("star_classification", check_star_classification),
    (
        "complete_implies_ideal_graph_complete",
        check_complete_implies_ideal_graph_complete,
    ),
    ("complete_classification", check_complete_classification),
    ("regular_classification", check_regular_classification),
    ("regular_degree_prime_power", check_regular_degree_prime_power),
    ("reduced_is_field_product", check_reduced_is_field_product),
    (
        "disjoint_prime_pair_adjacency",
        check_disjoint_prime_pair_adjacency,
    ),
    ("clique_number_lower_bound", check_clique_number_lower_bound),
    ("chromatic_at_least_clique", check_chromatic_at_least_clique),
];

/// Identifiers of every implemented runtime check, in report order.
pub const CHECK_IDS: &[&str] = &[
    "empty_graph_classification",
    "chained_ring_empty_graph",
    "idempotent_pair_adjacent",
    "bipartite_classification",
    "matrix_ring_girth_three",
    "semiprimitive_principal_connected",
    "connected_bezout_jacobson",
    "connected_bezout_iff",
    "field_product_diameter",
    "star_implies_two_maximals",
    "star_classification",
    "complete_implies_ideal_graph_complete",
    "complete_classification",
    "regular_classification",
    "regular_degree_prime_power",
    "reduced_is_field_product",
    "disjoint_prime_pair_adjacency",
    "clique_number_lower_bound",
    "chromatic_at_least_clique",
];

/// Applies every check to one analyzed entry.
pub fn run_checks(a: &EntryAnalysis) -> Vec<CheckRecord> {
    CHECKS
        .iter()
        .map(|&(id, check)| {
            let started = Instant::now();
            let (verdict, detail, witness) = check(a);
            CheckRecord {
                id,
                ring: a.entry.provenance.clone(),
                verdict,
                detail,
                witness,
                elapsed: started.elapsed(),
            }
        })
        .collect()
}
