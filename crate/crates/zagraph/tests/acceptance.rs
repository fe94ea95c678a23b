//! Acceptance suite: one test per headline result, each exact.
//!
//! Run with `cargo test --test acceptance` (libtest prints one pass/fail
//! line per criterion). Oracles used here are deliberately independent of
//! the library's search code: subset scans for clique numbers, an
//! independent-set-cover DP for chromatic numbers, and definition-level
//! adjacency recomputation for the graphs.

use zagraph::expr::{elaborate, parse_ring_expr, render};
use zagraph::graph::{coann_ideal_graph, za_edges_by_definition, za_graph, SimpleGraph};
use zagraph::harness::{build_catalog, CatalogLimits, Families, RingCatalogEntry};
use zagraph::ideal::{ring_predicates, spectrum};
use zagraph::invariants::{clique_number, chromatic_number, girth, InvariantReport};
use zagraph::ring::{annihilator, classify_elements, FiniteRing, Side};
use zagraph::{Budget, Distance};

fn ring(expr: &str) -> FiniteRing {
    elaborate(&parse_ring_expr(expr).unwrap()).unwrap()
}

fn budget() -> Budget {
    Budget::from_millis(10_000)
}

fn report(g: &SimpleGraph) -> InvariantReport {
    InvariantReport::compute(g, &budget()).unwrap()
}

fn catalog() -> Vec<RingCatalogEntry> {
    build_catalog(&CatalogLimits {
        max_order: 64,
        families: Families::all(),
    })
}

/// Brute-force clique number: scan all vertex subsets.
fn naive_clique(g: &SimpleGraph) -> usize {
    let n = g.vertex_count();
    assert!(n <= 16, "naive clique oracle is for small graphs");
    let mut best = 0;
    for mask in 0u32..1 << n {
        let verts: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
        if verts
            .iter()
            .all(|&a| verts.iter().all(|&b| a == b || g.has_edge(a, b)))
        {
            best = best.max(verts.len());
        }
    }
    best
}

/// Brute-force chromatic number: cover-by-independent-sets DP over masks.
fn naive_chromatic(g: &SimpleGraph) -> usize {
    let n = g.vertex_count();
    assert!(n <= 16, "naive chromatic oracle is for small graphs");
    if n == 0 {
        return 0;
    }
    let full = (1usize << n) - 1;
    let mut independent = vec![false; full + 1];
    independent[0] = true;
    for mask in 1..=full {
        let v = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        let clash = g.neighbors(v).iter().any(|u| rest >> u & 1 == 1);
        independent[mask] = independent[rest] && !clash;
    }
    let mut colors = vec![usize::MAX; full + 1];
    colors[0] = 0;
    for mask in 1..=full {
        let v = mask.trailing_zeros() as usize;
        let mut sub = mask;
        while sub > 0 {
            if sub >> v & 1 == 1 && independent[sub] && colors[mask ^ sub] != usize::MAX {
                colors[mask] = colors[mask].min(colors[mask ^ sub] + 1);
            }
            sub = (sub - 1) & mask;
        }
    }
    colors[full]
}

fn all_nonunit_annihilators_nonzero(r: &FiniteRing) -> bool {
    classify_elements(r)
        .units
        .complement()
        .iter()
        .all(|x| annihilator(r, x, Side::TwoSided).count() >= 2)
}

/// Local with maximal ideal `{0, x}` and `x^2 = 0`.
fn is_tiny_local(r: &FiniteRing) -> bool {
    let spec = spectrum(r).unwrap();
    if spec.maximal_ideals.len() != 1 {
        return false;
    }
    let m = &spec.maximal_ideals[0].members;
    m.count() == 2 && {
        let x = m.iter().find(|&x| x != 0).unwrap();
        r.mul(x, x) == 0
    }
}

fn crt_field_orders(r: &FiniteRing) -> Option<Vec<usize>> {
    zagraph::ideal::crt_decompose(r).unwrap().map(|fields| {
        let mut orders: Vec<usize> = fields.iter().map(|f| f.order()).collect();
        orders.sort_unstable();
        orders
    })
}

#[test]
fn c01_za_of_z5xz5_is_the_4_regular_k44() {
    let g = za_graph(&ring("Z5 x Z5"));
    let r = report(&g);
    assert_eq!(r.vertex_count, 8);
    assert_eq!(r.edge_count, 16);
    assert_eq!(r.regular_k, Some(4));
    assert!(!r.is_complete);
    assert!(r.is_complete_bipartite);
    assert_eq!(r.bipartition_sizes, Some((4, 4)));
    // exact edge-set equality with K_{4,4} under the canonical labeling:
    // the parts are the vertices labeled (0,v) and those labeled (u,0)
    for a in 0..8 {
        let a_left = g.label(a).starts_with("(0,");
        for b in a + 1..8 {
            let b_left = g.label(b).starts_with("(0,");
            assert_eq!(g.has_edge(a, b), a_left != b_left, "{} {}", g.label(a), g.label(b));
        }
    }
}

#[test]
fn c02_diameter_formula_for_products_of_fields() {
    for (expr, expected) in [
        ("Z2 x Z2", 1),
        ("Z2 x Z3", 2),
        ("Z3 x Z3", 2),
        ("Z2 x Z2 x Z2", 3),
        ("Z2 x Z3 x GF(4)", 3),
    ] {
        let r = report(&za_graph(&ring(expr)));
        assert!(r.is_connected, "{expr}");
        assert_eq!(r.diameter, Distance::Finite(expected), "{expr}");
    }
}

#[test]
fn c03_matrix_rings_have_girth_three_with_the_witness_triangle() {
    for expr in ["M2(Z2)", "M2(Z3)"] {
        let g = za_graph(&ring(expr));
        assert_eq!(girth(&g), Distance::Finite(3), "{expr}");
        let witnesses = ["[[1,0],[0,0]]", "[[0,0],[1,0]]", "[[0,1],[0,1]]"];
        let ids: Vec<usize> = witnesses
            .iter()
            .map(|l| {
                (0..g.vertex_count())
                    .find(|&v| g.label(v) == *l)
                    .unwrap_or_else(|| panic!("{l} missing from {expr}"))
            })
            .collect();
        for i in 0..3 {
            for j in i + 1..3 {
                assert!(
                    g.has_edge(ids[i], ids[j]),
                    "{expr}: {} and {} not adjacent",
                    witnesses[i],
                    witnesses[j]
                );
            }
        }
    }
}

#[test]
fn c04_star_classification() {
    // Z2 x F is the star K_{1, |F|-1}
    for (expr, f_order) in [("Z2 x Z3", 3), ("Z2 x GF(4)", 4), ("Z2 x Z5", 5), ("Z2 x GF(7)", 7)] {
        let r = report(&za_graph(&ring(expr)));
        assert!(r.is_star, "{expr}");
        assert_eq!(r.vertex_count, f_order, "{expr}");
        assert_eq!(r.edge_count, f_order - 1, "{expr}");
        assert_eq!(r.bipartition_sizes, Some((1, f_order - 1)), "{expr}");
    }
    // the local shape: a single vertex with maximal ideal {0, x}, x^2 = 0
    for expr in ["Z4", "Z2[x]/(x^2)"] {
        let r = ring(expr);
        let rep = report(&za_graph(&r));
        assert!(rep.is_star && rep.vertex_count == 1, "{expr}");
        assert!(is_tiny_local(&r), "{expr}");
    }
    // no Bezout non-field in the catalog is a star outside the two shapes
    for entry in catalog() {
        let r = &entry.ring;
        if !r.is_commutative() {
            continue;
        }
        let preds = ring_predicates(r).unwrap();
        if !preds.bezout || preds.field {
            continue;
        }
        let rep = report(&za_graph(r));
        if rep.is_star {
            let z2_cross_field = crt_field_orders(r).is_some_and(|o| o.len() == 2 && o[0] == 2);
            assert!(
                is_tiny_local(r) || z2_cross_field,
                "{} is a star outside the classification",
                entry.provenance
            );
        }
    }
}

#[test]
fn c05_complete_classification() {
    // named instances
    for expr in ["Z4", "Z2[x]/(x^2)", "Z2 x Z2"] {
        assert!(report(&za_graph(&ring(expr))).is_complete, "{expr}");
    }
    for expr in ["GF(7)", "GF(8)"] {
        let rep = report(&za_graph(&ring(expr)));
        assert_eq!(rep.vertex_count, 0, "{expr}");
        assert!(rep.is_complete, "{expr} (vacuously complete)");
    }
    // Z9 and Z25 have several nonzero nonunits and an edgeless ZA, so they
    // are not complete and fall outside every branch
    for (expr, vertices) in [("Z9", 2), ("Z25", 4)] {
        let rep = report(&za_graph(&ring(expr)));
        assert_eq!(rep.vertex_count, vertices, "{expr}");
        assert!(rep.is_empty_graph && !rep.is_complete, "{expr}");
    }
    // the biconditional over the whole catalog
    for entry in catalog() {
        let r = &entry.ring;
        if !r.is_commutative() {
            continue;
        }
        let rep = report(&za_graph(r));
        let one_nonunit = classify_elements(r).nonzero_nonunits.count() == 1;
        let domain = ring_predicates(r).unwrap().integral_domain;
        let z2xz2 = crt_field_orders(r) == Some(vec![2, 2]);
        assert_eq!(
            rep.is_complete,
            one_nonunit || domain || z2xz2,
            "{}",
            entry.provenance
        );
    }
}

#[test]
fn c06_regular_classification_over_field_products() {
    let mut observed = std::collections::BTreeSet::new();
    let mut squares_seen = 0;
    for entry in catalog() {
        let zagraph::expr::RingSpec::Product(factors) = &entry.spec else {
            continue;
        };
        if factors.len() != 2 {
            continue;
        }
        let both_fields = factors.iter().all(|f| match f {
            zagraph::expr::RingSpec::ZMod(n) => zagraph::poly::is_prime(*n),
            zagraph::expr::RingSpec::Gf(_) => true,
            _ => false,
        });
        if !both_fields {
            continue;
        }
        let rep = report(&za_graph(&entry.ring));
        let orders = crt_field_orders(&entry.ring).unwrap();
        let equal_orders = orders[0] == orders[1];
        match rep.regular_k.filter(|&k| k >= 1) {
            Some(k) => {
                assert!(equal_orders, "{}", entry.provenance);
                assert_eq!(k + 1, orders[0], "{}", entry.provenance);
                assert!(
                    zagraph::poly::prime_power(k as u64 + 1).is_some(),
                    "{}",
                    entry.provenance
                );
                observed.insert(k + 1);
                squares_seen += 1;
            }
            None => assert!(!equal_orders, "{}", entry.provenance),
        }
    }
    let expected: std::collections::BTreeSet<usize> = [2, 3, 4, 5, 7, 8].into_iter().collect();
    assert_eq!(observed, expected);
    assert_eq!(squares_seen, 6);
}

#[test]
fn c07_ideal_graph_comparison() {
    let z5z5 = ring("Z5 x Z5");
    let coann = coann_ideal_graph(&z5z5).unwrap();
    let coann_rep = report(&coann);
    assert_eq!(coann_rep.vertex_count, 2);
    assert_eq!(coann_rep.edge_count, 1);
    assert!(coann_rep.is_complete); // K2
    assert!(!report(&za_graph(&z5z5)).is_complete);
    // over the catalog: ZA complete implies the ideal graph complete
    for entry in catalog() {
        let r = &entry.ring;
        if !r.is_commutative() {
            continue;
        }
        if report(&za_graph(r)).is_complete {
            let ideal_rep = report(&coann_ideal_graph(r).unwrap());
            assert!(ideal_rep.is_complete, "{}", entry.provenance);
        }
    }
}

#[test]
fn c08_clique_chromatic_and_reduced_decomposition() {
    // omega(ZA(Z2^n)) = n for n = 2, 3, 4, agreeing with the subset oracle
    for (expr, n) in [("Z2 x Z2", 2), ("Z2 x Z2 x Z2", 3), ("Z2 x Z2 x Z2 x Z2", 4)] {
        let g = za_graph(&ring(expr));
        let (omega, _) = clique_number(&g, &budget()).unwrap();
        assert_eq!(omega, n, "{expr}");
        assert_eq!(naive_clique(&g), n, "{expr} (oracle)");
        assert!(omega >= n);
    }
    for entry in catalog() {
        let r = &entry.ring;
        // chromatic >= clique on every catalog graph
        let za_rep = report(&za_graph(r));
        assert!(za_rep.chromatic_number >= za_rep.clique_number, "{}", entry.provenance);
        let co_rep = report(&coann_ideal_graph(r).unwrap());
        assert!(co_rep.chromatic_number >= co_rep.clique_number, "{}", entry.provenance);
        // finite reduced commutative rings decompose into fields
        if r.is_commutative() && ring_predicates(r).unwrap().reduced {
            assert!(crt_field_orders(r).is_some(), "{}", entry.provenance);
        }
    }
}

#[test]
fn c09_empty_graph_results() {
    for expr in ["Z4", "Z8", "Z9", "Z27", "Z25"] {
        let rep = report(&za_graph(&ring(expr)));
        assert_eq!(rep.edge_count, 0, "{expr}");
    }
    // conversely: every catalog Bezout ring with an edgeless ZA on at least
    // one vertex is local with every nonunit annihilator nonzero
    for entry in catalog() {
        let r = &entry.ring;
        if !r.is_commutative() {
            continue;
        }
        let preds = ring_predicates(r).unwrap();
        if !preds.bezout {
            continue;
        }
        let g = za_graph(r);
        if g.edge_count() == 0 && g.vertex_count() >= 1 {
            assert!(preds.local, "{} edgeless but not local", entry.provenance);
            assert!(
                all_nonunit_annihilators_nonzero(r),
                "{} has a nonunit with trivial annihilator",
                entry.provenance
            );
        }
    }
}

#[test]
fn c10_oracle_equivalence() {
    for entry in catalog() {
        let r = &entry.ring;
        // definition-level adjacency recomputation for every ring of order <= 64
        if r.order() <= 64 {
            let g = za_graph(r);
            assert_eq!(
                g.edges(),
                za_edges_by_definition(r, Side::Left),
                "{}",
                entry.provenance
            );
        }
        // exact search equals naive enumeration on every small graph
        for g in [za_graph(r), coann_ideal_graph(r).unwrap()] {
            if g.vertex_count() <= 12 {
                let (omega, _) = clique_number(&g, &budget()).unwrap();
                assert_eq!(omega, naive_clique(&g), "{} clique", entry.provenance);
                assert_eq!(
                    chromatic_number(&g, &budget()).unwrap(),
                    naive_chromatic(&g),
                    "{} chromatic",
                    entry.provenance
                );
            }
        }
    }
}

#[test]
fn c11_full_sweep_is_clean_and_reproducible() {
    let dir = std::env::temp_dir();
    let path1 = dir.join("zagraph_acceptance_report_1.json");
    let path2 = dir.join("zagraph_acceptance_report_2.json");
    let mut outputs = Vec::new();
    for path in [&path1, &path2] {
        let args: Vec<String> = [
            "sweep",
            "--max-order",
            "64",
            "--report",
            path.to_str().unwrap(),
        ]
        .iter()
        .map(|s| s.to_string())
        .collect();
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = zagraph::cli::run_command(&args, &mut out, &mut err);
        assert_eq!(code, 0, "sweep failed: {}", String::from_utf8_lossy(&err));
        outputs.push(String::from_utf8(out).unwrap());
    }
    assert_eq!(outputs[0], outputs[1], "sweep stdout differs between runs");
    assert!(outputs[0].contains("0 fail"));
    let report1 = std::fs::read(&path1).unwrap();
    let report2 = std::fs::read(&path2).unwrap();
    assert_eq!(report1, report2, "report files differ between runs");
    assert!(String::from_utf8(report1).unwrap().contains("\"fail\": 0"));
    let _ = std::fs::remove_file(&path1);
    let _ = std::fs::remove_file(&path2);
}

#[test]
fn provenance_round_trips_through_the_parser() {
    for entry in catalog() {
        let reparsed = parse_ring_expr(&entry.provenance).unwrap();
        assert_eq!(render(&reparsed), entry.provenance);
        assert!(elaborate(&reparsed).unwrap().tables_equal(&entry.ring));
    }
}
