//! Exact graph invariants: connectivity, diameter, girth, degrees, shape
//! predicates, clique number, and chromatic number.
//!
//! Clique and chromatic searches are exact-only. They respect a time budget
//! and report a budget error rather than fall back to a heuristic value.

use std::fmt;
use std::time::{Duration, Instant};

use crate::bitset::BitSet;
use crate::error::Error;
use crate::graph::SimpleGraph;

/// A graph distance that may be infinite (disconnected, or acyclic girth).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(v) => Some(v),
            Distance::Infinite => None,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(v) => write!(f, "{v}"),
            Distance::Infinite => write!(f, "inf"),
        }
    }
}

/// Wall-clock budget for the exponential searches. Each clique or chromatic
/// computation starts its own window of this length.
#[derive(Debug, Clone, Copy)]
pub struct Budget {
    millis: Option<u64>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { millis: None }
    }

    pub fn from_millis(ms: u64) -> Self {
        Budget { millis: Some(ms) }
    }

    fn start(&self) -> Deadline {
        Deadline {
            at: self
                .millis
                .map(|ms| Instant::now() + Duration::from_millis(ms)),
        }
    }
}

struct Deadline {
    at: Option<Instant>,
}

impl Deadline {
    fn check(&self, what: &'static str) -> Result<(), Error> {
        match self.at {
            Some(d) if Instant::now() > d => Err(Error::BudgetExceeded(what)),
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Connectivity {
    pub component_count: usize,
    pub is_connected: bool,
    pub diameter: Distance,
}

fn bfs_distances(g: &SimpleGraph, start: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.vertex_count()];
    dist[start] = Some(0);
    let mut frontier = vec![start];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &u in &frontier {
            let d = dist[u].unwrap();
            for v in g.neighbors(u).iter() {
                if dist[v].is_none() {
                    dist[v] = Some(d + 1);
                    next.push(v);
                }
            }
        }
        frontier = next;
    }
    dist
}

/// Breadth-first connectivity and diameter. A graph with at most one vertex
/// is connected with diameter 0; a disconnected graph has infinite diameter.
pub fn connectivity(g: &SimpleGraph) -> Connectivity {
    let n = g.vertex_count();
    if n == 0 {
        return Connectivity {
            component_count: 0,
            is_connected: true,
            diameter: Distance::Finite(0),
        };
    }
    let mut seen = vec![false; n];
    let mut components = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        components += 1;
        for (v, d) in bfs_distances(g, s).iter().enumerate() {
            if d.is_some() {
                seen[v] = true;
            }
        }
    }
    if components > 1 {
        return Connectivity {
            component_count: components,
            is_connected: false,
            diameter: Distance::Infinite,
        };
    }
    let mut diameter = 0;
    for s in 0..n {
        for d in bfs_distances(g, s).iter().flatten() {
            diameter = diameter.max(*d);
        }
    }
    Connectivity {
        component_count: 1,
        is_connected: true,
        diameter: Distance::Finite(diameter),
    }
}

/// Length of a shortest cycle, by BFS from every vertex: any non-tree edge
/// closes a walk of length `dist(u) + dist(v) + 1`, and the minimum of those
/// walks over all start vertices is the girth.
pub fn girth(g: &SimpleGraph) -> Distance {
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u).iter() {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        for (u, v) in g.edges() {
            if dist[u] == usize::MAX || dist[v] == usize::MAX {
                continue;
            }
            if parent[u] == v || parent[v] == u {
                continue;
            }
            let cycle = dist[u] + dist[v] + 1;
            if best.is_none_or(|b| cycle < b) {
                best = Some(cycle);
            }
        }
    }
    match best {
        Some(b) => {
            debug_assert!(b >= 3);
            Distance::Finite(b)
        }
        None => Distance::Infinite,
    }
}

#[derive(Debug, Clone)]
pub struct DegreeStats {
    /// Degrees in vertex order.
    pub degree_sequence: Vec<usize>,
    pub min_degree: Option<usize>,
    /// Set when every vertex has the same degree.
    pub regular_k: Option<usize>,
}

pub fn degree_stats(g: &SimpleGraph) -> DegreeStats {
    let degree_sequence: Vec<usize> = (0..g.vertex_count()).map(|v| g.degree(v)).collect();
    let min_degree = degree_sequence.iter().copied().min();
    let regular_k = match degree_sequence.first() {
        Some(&d) if degree_sequence.iter().all(|&x| x == d) => Some(d),
        _ => None,
    };
    DegreeStats {
        degree_sequence,
        min_degree,
        regular_k,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeFlags {
    /// No edges (any vertex count, including zero).
    pub is_empty_graph: bool,
    /// Every pair adjacent; vacuously true for at most one vertex.
    pub is_complete: bool,
    /// One center adjacent to all others and no other edges; a single vertex
    /// counts, and K2 is both a star and complete.
    pub is_star: bool,
    pub is_bipartite: bool,
    /// Bipartite with both parts nonempty and every cross pair adjacent.
    pub is_complete_bipartite: bool,
    /// Part sizes as (smaller, larger) when bipartite.
    pub bipartition_sizes: Option<(usize, usize)>,
}

pub fn shape_classify(g: &SimpleGraph) -> ShapeFlags {
    let n = g.vertex_count();
    let e = g.edge_count();
    let is_empty_graph = e == 0;
    let is_complete = n <= 1 || e == n * (n - 1) / 2;
    let is_star = match n {
        0 => false,
        1 => true,
        _ => e == n - 1 && (0..n).any(|v| g.degree(v) == n - 1),
    };
    // two-coloring by BFS, components started at ascending indices
    let mut side = vec![None; n];
    let mut bipartite = true;
    'components: for s in 0..n {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u).iter() {
                match side[v] {
                    None => {
                        side[v] = Some(!side[u].unwrap());
                        queue.push_back(v);
                    }
                    Some(c) if c == side[u].unwrap() => {
                        bipartite = false;
                        break 'components;
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let bipartition_sizes = if bipartite {
        let a = side.iter().filter(|s| **s == Some(false)).count();
        let b = n - a;
        Some((a.min(b), a.max(b)))
    } else {
        None
    };
    let is_complete_bipartite = match bipartition_sizes {
        Some((a, b)) => a >= 1 && b >= 1 && e == a * b,
        None => false,
    };
    ShapeFlags {
        is_empty_graph,
        is_complete,
        is_star,
        is_bipartite: bipartite,
        is_complete_bipartite,
        bipartition_sizes,
    }
}

/// Exact maximum clique by branch and bound with a greedy-coloring upper
/// bound; ties broken by vertex index. Returns the clique number and one
/// witness clique.
pub fn clique_number(g: &SimpleGraph, budget: &Budget) -> Result<(usize, Vec<usize>), Error> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok((0, vec![]));
    }
    let deadline = budget.start();
    let mut best: Vec<usize> = vec![];
    let mut current: Vec<usize> = vec![];
    let mut steps = 0u32;
    expand_clique(g, &mut current, (0..n).collect(), &mut best, &deadline, &mut steps)?;
    Ok((best.len(), best))
}

fn expand_clique(
    g: &SimpleGraph,
    current: &mut Vec<usize>,
    candidates: Vec<usize>,
    best: &mut Vec<usize>,
    deadline: &Deadline,
    steps: &mut u32,
) -> Result<(), Error> {
    *steps += 1;
    deadline.check("clique number")?;
    if candidates.is_empty() {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return Ok(());
    }
    // greedy coloring of the candidates: the color class index bounds any
    // clique among the vertices colored so far
    let mut color_of = vec![0usize; candidates.len()];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (ci, &v) in candidates.iter().enumerate() {
        let mut c = 0;
        while classes
            .get(c)
            .is_some_and(|class| class.iter().any(|&u| g.has_edge(u, v)))
        {
            c += 1;
        }
        if c == classes.len() {
            classes.push(Vec::new());
        }
        classes[c].push(v);
        color_of[ci] = c + 1;
    }
    // process in descending color; earlier candidates carry colors no larger
    let mut order: Vec<(usize, usize)> = candidates
        .iter()
        .copied()
        .zip(color_of.iter().copied())
        .collect();
    order.sort_by_key(|&(v, c)| (c, v));
    for idx in (0..order.len()).rev() {
        let (v, color) = order[idx];
        if current.len() + color <= best.len() {
            return Ok(());
        }
        current.push(v);
        let next: Vec<usize> = order
            .iter()
            .take(idx)
            .map(|&(u, _)| u)
            .filter(|&u| g.has_edge(u, v))
            .collect();
        expand_clique(g, current, next, best, deadline, steps)?;
        current.pop();
    }
    Ok(())
}

fn greedy_coloring_count(g: &SimpleGraph) -> usize {
    let n = g.vertex_count();
    let mut color = vec![usize::MAX; n];
    let mut used = 0;
    for v in 0..n {
        let mut taken = vec![false; used + 1];
        for u in g.neighbors(v).iter() {
            if color[u] != usize::MAX {
                taken[color[u]] = true;
            }
        }
        let c = (0..=used).find(|&c| !taken[c]).expect("a free slot exists");
        color[v] = c;
        used = used.max(c + 1);
    }
    used
}

/// Exact chromatic number: iterative deepening from the clique lower bound
/// to the greedy upper bound, deciding k-colorability by backtracking.
pub fn chromatic_number(g: &SimpleGraph, budget: &Budget) -> Result<usize, Error> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(0);
    }
    let (omega, clique) = clique_number(g, budget)?;
    let deadline = budget.start();
    let upper = greedy_coloring_count(g).max(omega);
    for k in omega..upper {
        if k_colorable(g, k, &clique, &deadline)? {
            return Ok(k);
        }
    }
    Ok(upper)
}

fn k_colorable(
    g: &SimpleGraph,
    k: usize,
    seed_clique: &[usize],
    deadline: &Deadline,
) -> Result<bool, Error> {
    let n = g.vertex_count();
    if k == 0 {
        return Ok(n == 0);
    }
    let mut color = vec![usize::MAX; n];
    // a maximum clique must use pairwise distinct colors; pinning them
    // breaks the color-permutation symmetry
    for (c, &v) in seed_clique.iter().enumerate() {
        color[v] = c;
    }
    let mut rest: Vec<usize> = (0..n).filter(|v| color[*v] == usize::MAX).collect();
    // most-constrained first: high degree, then index
    rest.sort_by_key(|&v| (usize::MAX - g.degree(v), v));
    let mut steps = 0u32;
    let used0 = seed_clique.len();
    #[allow(clippy::too_many_arguments)]
    fn assign(
        g: &SimpleGraph,
        rest: &[usize],
        pos: usize,
        color: &mut Vec<usize>,
        used: usize,
        k: usize,
        deadline: &Deadline,
        steps: &mut u32,
    ) -> Result<bool, Error> {
        *steps += 1;
        if steps.is_multiple_of(256) {
            deadline.check("chromatic number")?;
        }
        let Some(&v) = rest.get(pos) else {
            return Ok(true);
        };
        let mut taken = BitSet::new(k);
        for u in g.neighbors(v).iter() {
            if color[u] != usize::MAX {
                taken.insert(color[u]);
            }
        }
        // allow at most one brand-new color beyond those already in use
        let limit = k.min(used + 1);
        for c in 0..limit {
            if taken.contains(c) {
                continue;
            }
            color[v] = c;
            let next_used = used.max(c + 1);
            if assign(g, rest, pos + 1, color, next_used, k, deadline, steps)? {
                return Ok(true);
            }
            color[v] = usize::MAX;
        }
        Ok(false)
    }
    assign(g, &rest, 0, &mut color, used0, k, deadline, &mut steps)
}

/// Every quantity the classification results mention, for one graph.
#[derive(Debug, Clone)]
pub struct InvariantReport {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub component_count: usize,
    pub is_connected: bool,
    pub diameter: Distance,
    pub girth: Distance,
    pub degree_sequence: Vec<usize>,
    pub min_degree: Option<usize>,
    pub regular_k: Option<usize>,
    pub is_empty_graph: bool,
    pub is_complete: bool,
    pub is_star: bool,
    pub is_bipartite: bool,
    pub is_complete_bipartite: bool,
    pub bipartition_sizes: Option<(usize, usize)>,
    pub clique_number: usize,
    pub chromatic_number: usize,
}

impl InvariantReport {
    pub fn compute(g: &SimpleGraph, budget: &Budget) -> Result<InvariantReport, Error> {
        let conn = connectivity(g);
        let stats = degree_stats(g);
        let shape = shape_classify(g);
        let (omega, _) = clique_number(g, budget)?;
        let chi = chromatic_number(g, budget)?;
        debug_assert!(chi >= omega);
        Ok(InvariantReport {
            vertex_count: g.vertex_count(),
            edge_count: g.edge_count(),
            component_count: conn.component_count,
            is_connected: conn.is_connected,
            diameter: conn.diameter,
            girth: girth(g),
            degree_sequence: stats.degree_sequence,
            min_degree: stats.min_degree,
            regular_k: stats.regular_k,
            is_empty_graph: shape.is_empty_graph,
            is_complete: shape.is_complete,
            is_star: shape.is_star,
            is_bipartite: shape.is_bipartite,
            is_complete_bipartite: shape.is_complete_bipartite,
            bipartition_sizes: shape.bipartition_sizes,
            clique_number: omega,
            chromatic_number: chi,
        })
    }
}
