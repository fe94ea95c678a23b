//! The three graphs attached to a finite ring: the zero-annihilator graph
//! ZA(R) on nonzero nonunits, the co-annihilating ideal graph A_R on nonzero
//! proper ideals, and the classical zero-divisor graph as a baseline.

use crate::bitset::BitSet;
use crate::error::Error;
use crate::ideal::{all_ideals, ideal_annihilator, Ideal};
use crate::ring::{annihilator, classify_elements, FiniteRing, Side};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    Za,
    CoAnn,
    ZeroDiv,
}

impl GraphKind {
    pub fn tag(self) -> &'static str {
        match self {
            GraphKind::Za => "ZA",
            GraphKind::CoAnn => "COANN",
            GraphKind::ZeroDiv => "ZERODIV",
        }
    }
}

/// An undirected simple graph with labeled vertices and bit-vector adjacency
/// rows. Adjacency stays symmetric and hollow by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    kind: GraphKind,
    ring_label: String,
    labels: Vec<String>,
    /// For element-vertex graphs (ZA, zero-divisor), the ring element behind
    /// each vertex; for the ideal graph, the position of the ideal among the
    /// nonzero proper ideals in canonical lattice order.
    source: Vec<usize>,
    adj: Vec<BitSet>,
}

impl SimpleGraph {
    pub fn new(kind: GraphKind, ring_label: impl Into<String>, labels: Vec<String>) -> Self {
        let n = labels.len();
        let source = (0..n).collect();
        SimpleGraph {
            kind,
            ring_label: ring_label.into(),
            labels,
            source,
            adj: vec![BitSet::new(n); n],
        }
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn ring_label(&self) -> &str {
        &self.ring_label
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count()).sum::<usize>() / 2
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// The ring element (or canonical ideal position) behind vertex `v`.
    pub fn source_of(&self, v: usize) -> usize {
        self.source[v]
    }

    /// Finds the vertex for a ring element, if it is one.
    pub fn vertex_of_source(&self, source: usize) -> Option<usize> {
        self.source.binary_search(&source).ok()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(b)
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        assert_ne!(a, b, "simple graphs have no self-loops");
        self.adj[a].insert(b);
        self.adj[b].insert(a);
    }

    pub fn remove_edge(&mut self, a: usize, b: usize) {
        self.adj[a].remove(b);
        self.adj[b].remove(a);
    }

    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    /// Edge list sorted by (min endpoint, max endpoint).
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for a in 0..self.vertex_count() {
            for b in self.adj[a].iter() {
                if a < b {
                    out.push((a, b));
                }
            }
        }
        out
    }

    fn with_sources(mut self, source: Vec<usize>) -> Self {
        debug_assert_eq!(source.len(), self.labels.len());
        self.source = source;
        self
    }
}

/// ZA(R) with the left annihilator for noncommutative rings (the sides
/// coincide on commutative rings).
pub fn za_graph(ring: &FiniteRing) -> SimpleGraph {
    za_graph_sided(ring, Side::Left)
}

/// ZA(R): vertices are the nonzero nonunits in index order; `x` and `y` are
/// adjacent exactly when `Ann(x)` meets `Ann(y)` in `{0}` alone.
pub fn za_graph_sided(ring: &FiniteRing, side: Side) -> SimpleGraph {
    let classes = classify_elements(ring);
    let vertices = classes.nonzero_nonunits.members();
    let labels = vertices.iter().map(|&v| ring.element_label(v)).collect();
    let mut graph =
        SimpleGraph::new(GraphKind::Za, ring.label(), labels).with_sources(vertices.clone());
    let anns: Vec<BitSet> = vertices
        .iter()
        .map(|&v| annihilator(ring, v, side))
        .collect();
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            if anns[i].intersection_count(&anns[j]) == 1 {
                graph.add_edge(i, j);
            }
        }
    }
    graph
}

/// A_R: vertices are the nonzero proper ideals in canonical lattice order;
/// two ideals are adjacent when their annihilators meet trivially.
pub fn coann_ideal_graph(ring: &FiniteRing) -> Result<SimpleGraph, Error> {
    let lattice = all_ideals(ring)?;
    Ok(coann_ideal_graph_with(ring, &lattice))
}

pub fn coann_ideal_graph_with(ring: &FiniteRing, lattice: &[Ideal]) -> SimpleGraph {
    let vertices: Vec<&Ideal> = lattice
        .iter()
        .filter(|i| !i.is_zero() && i.is_proper(ring))
        .collect();
    let labels = vertices.iter().map(|i| i.describe(ring)).collect();
    let mut graph = SimpleGraph::new(GraphKind::CoAnn, ring.label(), labels);
    let anns: Vec<BitSet> = vertices
        .iter()
        .map(|i| ideal_annihilator(ring, i).members)
        .collect();
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            if anns[i].intersection_count(&anns[j]) == 1 {
                graph.add_edge(i, j);
            }
        }
    }
    graph
}

/// The zero-divisor graph: vertices are the nonzero zero divisors, adjacent
/// when the product vanishes in either order.
pub fn zero_divisor_graph(ring: &FiniteRing) -> SimpleGraph {
    let classes = classify_elements(ring);
    let mut vertices = classes.zero_divisors.members();
    vertices.retain(|&v| v != 0);
    let labels = vertices.iter().map(|&v| ring.element_label(v)).collect();
    let mut graph =
        SimpleGraph::new(GraphKind::ZeroDiv, ring.label(), labels).with_sources(vertices.clone());
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            let (x, y) = (vertices[i], vertices[j]);
            if ring.mul(x, y) == 0 || ring.mul(y, x) == 0 {
                graph.add_edge(i, j);
            }
        }
    }
    graph
}

/// Definition-level recomputation of ZA adjacency for oracle tests: rescans
/// both annihilators from the multiplication law for every pair.
pub fn za_edges_by_definition(ring: &FiniteRing, side: Side) -> Vec<(usize, usize)> {
    let classes = classify_elements(ring);
    let vertices = classes.nonzero_nonunits.members();
    let mut edges = Vec::new();
    for (i, &x) in vertices.iter().enumerate() {
        for (j, &y) in vertices.iter().enumerate().skip(i + 1) {
            let ann_x = annihilator(ring, x, side);
            let ann_y = annihilator(ring, y, side);
            if ann_x.intersection(&ann_y).is_only_zero() {
                edges.push((i, j));
            }
        }
    }
    edges
}
