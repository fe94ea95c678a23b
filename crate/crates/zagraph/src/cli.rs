//! Command-line driver: analyze one ring, verify one ring against every
//! applicable check, or sweep a generated catalog.
//!
//! Exit codes: 0 success, 1 check failures, 2 usage or runtime errors.
//! Every error path prints a single `error: ...` line to stderr.

use std::io::Write;

use crate::error::Error;
use crate::export::{export_graph, parse_format};
use crate::expr::{elaborate_with, parse_ring_expr, render};
use crate::graph::{coann_ideal_graph, za_graph_sided, zero_divisor_graph, SimpleGraph};
use crate::harness::{
    analyze_entry, build_catalog_with, run_checks, run_suite, CatalogLimits, Families,
    RingCatalogEntry, Verdict,
};
use crate::invariants::{Budget, InvariantReport};
use crate::ring::{BuildConfig, FiniteRing, Side};

const USAGE: &str = "\
usage: zagraph <command> [options]

commands:
  analyze \"<expr>\" [--graph za|coann|zd] [--side left|right|twosided]
                   [--export dot|json] [--out FILE]
      build the graph of one ring and report its invariants
  verify \"<expr>\"
      run every applicable classification check for one ring
  sweep --max-order N [--families zn,gf,products,local,matrix] [--report FILE]
      generate a ring catalog and run the full check suite over it

global options:
  --budget-ms MS        clique/chromatic search budget (default 10000)
  --max-table-order N   largest order with cached operation tables (default 4096)

ring expressions: Z6, GF(8), Z5 x Z5, M2(Z2), Z2[x]/(x^2+x+1), (Z2 x Z2) x Z3
";

enum CliError {
    Usage(String),
    Runtime(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Runtime(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Runtime(e.to_string())
    }
}

struct Options {
    command: String,
    positionals: Vec<String>,
    graph: String,
    side: Side,
    export: Option<String>,
    out: Option<String>,
    max_order: Option<usize>,
    families: Families,
    report: Option<String>,
    budget: Budget,
    config: BuildConfig,
}

fn parse_options(args: &[String]) -> Result<Options, CliError> {
    let mut opts = Options {
        command: String::new(),
        positionals: vec![],
        graph: "za".to_string(),
        side: Side::Left,
        export: None,
        out: None,
        max_order: None,
        families: Families::all(),
        report: None,
        budget: Budget::from_millis(10_000),
        config: BuildConfig::default(),
    };
    let value_of = |name: &str, it: &mut std::slice::Iter<String>| -> Result<String, CliError> {
        it.next()
            .cloned()
            .ok_or_else(|| CliError::Usage(format!("flag {name} needs a value")))
    };
    let mut it = args.iter();
    while let Some(arg) = it.next() {
        match arg.as_str() {
            "--graph" => opts.graph = value_of("--graph", &mut it)?,
            "--side" => {
                opts.side = match value_of("--side", &mut it)?.as_str() {
                    "left" => Side::Left,
                    "right" => Side::Right,
                    "twosided" => Side::TwoSided,
                    other => {
                        return Err(CliError::Usage(format!(
                            "unknown side `{other}` (expected left, right, or twosided)"
                        )))
                    }
                }
            }
            "--export" => opts.export = Some(value_of("--export", &mut it)?),
            "--out" => opts.out = Some(value_of("--out", &mut it)?),
            "--max-order" => {
                let v = value_of("--max-order", &mut it)?;
                opts.max_order = Some(
                    v.parse()
                        .map_err(|_| CliError::Usage(format!("bad --max-order `{v}`")))?,
                )
            }
            "--families" => {
                let v = value_of("--families", &mut it)?;
                opts.families = Families::parse(&v).map_err(CliError::Usage)?;
            }
            "--report" => opts.report = Some(value_of("--report", &mut it)?),
            "--budget-ms" => {
                let v = value_of("--budget-ms", &mut it)?;
                let ms: u64 = v
                    .parse()
                    .map_err(|_| CliError::Usage(format!("bad --budget-ms `{v}`")))?;
                opts.budget = Budget::from_millis(ms);
            }
            "--max-table-order" => {
                let v = value_of("--max-table-order", &mut it)?;
                opts.config.max_table_order = v
                    .parse()
                    .map_err(|_| CliError::Usage(format!("bad --max-table-order `{v}`")))?;
            }
            flag if flag.starts_with("--") => {
                return Err(CliError::Usage(format!("unknown flag `{flag}`")))
            }
            positional => {
                if opts.command.is_empty() {
                    opts.command = positional.to_string();
                } else {
                    opts.positionals.push(positional.to_string());
                }
            }
        }
    }
    if opts.command.is_empty() {
        return Err(CliError::Usage("missing command".to_string()));
    }
    Ok(opts)
}

/// Runs one invocation against the given output streams and returns the
/// process exit code.
pub fn run_command<W: Write, E: Write>(args: &[String], out: &mut W, err: &mut E) -> u8 {
    match dispatch(args, out) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            let _ = write!(err, "{USAGE}");
            2
        }
        Err(CliError::Runtime(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn dispatch<W: Write>(args: &[String], out: &mut W) -> Result<u8, CliError> {
    let opts = parse_options(args)?;
    match opts.command.as_str() {
        "analyze" => analyze(&opts, out),
        "verify" => verify(&opts, out),
        "sweep" => sweep(&opts, out),
        other => Err(CliError::Usage(format!("unknown command `{other}`"))),
    }
}

fn ring_from_args(opts: &Options) -> Result<(crate::expr::RingSpec, FiniteRing), CliError> {
    let expr = opts
        .positionals
        .first()
        .ok_or_else(|| CliError::Usage("missing ring expression".to_string()))?;
    let spec = parse_ring_expr(expr).map_err(|e| CliError::Usage(e.to_string()))?;
    let ring = elaborate_with(&spec, &opts.config)?;
    Ok((spec, ring))
}

fn build_graph(opts: &Options, ring: &FiniteRing) -> Result<SimpleGraph, CliError> {
    match opts.graph.as_str() {
        "za" => Ok(za_graph_sided(ring, opts.side)),
        "coann" => Ok(coann_ideal_graph(ring)?),
        "zd" => Ok(zero_divisor_graph(ring)),
        other => Err(CliError::Usage(format!(
            "unknown graph kind `{other}` (expected za, coann, or zd)"
        ))),
    }
}

fn yes_no(v: bool) -> &'static str {
    if v {
        "yes"
    } else {
        "no"
    }
}

fn text_summary(g: &SimpleGraph, r: &InvariantReport) -> String {
    let mut s = String::new();
    s.push_str(&format!(
        "graph: {}  vertices: {}  edges: {}\n",
        g.kind().tag(),
        r.vertex_count,
        r.edge_count
    ));
    s.push_str(&format!(
        "connected: {}  components: {}  diameter: {}\n",
        yes_no(r.is_connected),
        r.component_count,
        r.diameter
    ));
    s.push_str(&format!("girth: {}\n", r.girth));
    let degrees = r
        .degree_sequence
        .iter()
        .map(|d| d.to_string())
        .collect::<Vec<_>>()
        .join(", ");
    s.push_str(&format!(
        "degrees: [{degrees}]  min degree: {}  regular: {}\n",
        r.min_degree.map_or("-".to_string(), |d| d.to_string()),
        r.regular_k
            .map_or("no".to_string(), |k| format!("{k}-regular")),
    ));
    let star = if r.is_star {
        let center = (0..g.vertex_count())
            .find(|&v| g.vertex_count() == 1 || g.degree(v) == g.vertex_count() - 1)
            .map(|v| format!(" (center \"{}\")", g.label(v)))
            .unwrap_or_default();
        format!("yes{center}")
    } else {
        "no".to_string()
    };
    s.push_str(&format!(
        "empty: {}  complete: {}  star: {star}\n",
        yes_no(r.is_empty_graph),
        yes_no(r.is_complete)
    ));
    let parts = r
        .bipartition_sizes
        .map_or("-".to_string(), |(a, b)| format!("{a}+{b}"));
    s.push_str(&format!(
        "bipartite: {} (parts {parts})  complete bipartite: {}\n",
        yes_no(r.is_bipartite),
        yes_no(r.is_complete_bipartite)
    ));
    s.push_str(&format!(
        "clique number: {}  chromatic number: {}\n",
        r.clique_number, r.chromatic_number
    ));
    s
}

fn analyze<W: Write>(opts: &Options, out: &mut W) -> Result<u8, CliError> {
    let (_, ring) = ring_from_args(opts)?;
    let graph = build_graph(opts, &ring)?;
    let report = InvariantReport::compute(&graph, &opts.budget)?;
    if let Some(fmt) = &opts.export {
        let format = parse_format(fmt).map_err(|e| CliError::Usage(e.to_string()))?;
        let rendered = export_graph(&graph, &report, format);
        match &opts.out {
            Some(path) => std::fs::write(path, rendered)?,
            None => out.write_all(rendered.as_bytes())?,
        }
    } else {
        writeln!(
            out,
            "ring: {}  order: {}  commutative: {}",
            ring.label(),
            ring.order(),
            yes_no(ring.is_commutative())
        )?;
        out.write_all(text_summary(&graph, &report).as_bytes())?;
    }
    Ok(0)
}

fn verify<W: Write>(opts: &Options, out: &mut W) -> Result<u8, CliError> {
    let (spec, ring) = ring_from_args(opts)?;
    let entry = RingCatalogEntry {
        provenance: render(&spec),
        spec,
        ring,
    };
    let analysis = analyze_entry(entry, &opts.budget);
    let records = run_checks(&analysis);
    let mut fails = 0;
    for r in &records {
        if r.verdict == Verdict::Fail {
            fails += 1;
        }
        writeln!(out, "{:<13} {:<40} {}", r.verdict.as_str(), r.id, r.detail)?;
    }
    writeln!(
        out,
        "verify {}: {} checks, {} failed",
        records
            .first()
            .map(|r| r.ring.as_str())
            .unwrap_or_default(),
        records.len(),
        fails
    )?;
    Ok(if fails > 0 { 1 } else { 0 })
}

fn sweep<W: Write>(opts: &Options, out: &mut W) -> Result<u8, CliError> {
    let max_order = opts
        .max_order
        .ok_or_else(|| CliError::Usage("sweep needs --max-order".to_string()))?;
    let limits = CatalogLimits {
        max_order,
        families: opts.families,
    };
    let catalog = build_catalog_with(&limits, &opts.config);
    writeln!(out, "catalog: {} rings (max order {max_order})", catalog.len())?;
    let report = run_suite(catalog, &opts.budget);
    out.write_all(report.to_text().as_bytes())?;
    if let Some(path) = &opts.report {
        std::fs::write(path, report.to_json())?;
    }
    Ok(if report.has_failures() { 1 } else { 0 })
}
