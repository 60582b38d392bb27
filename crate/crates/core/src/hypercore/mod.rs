//! Hypergraph data model: simple hypergraphs over dense vertex ids, trimmed
//! induced subhypergraphs, clique completion, orderings and skeletons.

mod canon;
mod dah;
pub mod io;

pub use canon::{automorphism_count, canonical_dah, canonical_form, canonical_labeling, is_isomorphic, CanonicalKey};
pub use dah::{reach_set, Dah, Digraph};

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Vertex identifier. Vertices of a hypergraph are always `0..n`.
pub type Vertex = u32;

/// A hyperedge: strictly increasing list of vertex ids.
pub type Edge = Vec<Vertex>;

/// Simple hypergraph with set semantics on both vertices inside an edge and
/// on the edge collection.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Edge>,
    rank: usize,
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hypergraph(n={}, {:?})", self.n, self.edges)
    }
}

impl Hypergraph {
    /// Builds a hypergraph on `0..n`. Duplicate vertices inside an edge and
    /// duplicate edges collapse; empty edges and out-of-range ids are errors.
    pub fn new<I, E>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: IntoIterator<Item = Vertex>,
    {
        let mut set = BTreeSet::new();
        for e in edges {
            let mut e: Edge = e.into_iter().collect();
            e.sort_unstable();
            e.dedup();
            if e.is_empty() {
                return Err(Error::input("empty hyperedge"));
            }
            if let Some(&v) = e.iter().find(|&&v| v as usize >= n) {
                return Err(Error::input(format!("vertex {v} outside 0..{n}")));
            }
            set.insert(e);
        }
        Ok(Self::from_sorted_edges(n, set.into_iter().collect()))
    }

    /// Edges must already be sorted, deduplicated and in range.
    pub(crate) fn from_sorted_edges(n: usize, edges: Vec<Edge>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        let rank = edges.iter().map(Vec::len).max().unwrap_or(0);
        Hypergraph { n, edges, rank }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted_edges(n, Vec::new())
    }

    /// Panicking constructor for literals in tests and builders.
    pub fn from_edges(n: usize, edges: &[&[Vertex]]) -> Self {
        Self::new(n, edges.iter().map(|e| e.iter().copied())).expect("valid hypergraph literal")
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        0..self.n as Vertex
    }

    pub fn contains_edge(&self, e: &[Vertex]) -> bool {
        self.edges.binary_search_by(|x| x.as_slice().cmp(e)).is_ok()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.edges.iter().filter(|e| e.contains(&v)).count()
    }

    /// Edge indices incident to each vertex.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                inc[v as usize].push(i);
            }
        }
        inc
    }

    pub fn has_arity(&self, arity: usize) -> bool {
        self.edges.iter().any(|e| e.len() == arity)
    }

    /// Drops every edge of arity larger than `max`.
    pub fn filter_rank(&self, max: usize) -> Hypergraph {
        let edges = self.edges.iter().filter(|e| e.len() <= max).cloned().collect();
        Self::from_sorted_edges(self.n, edges)
    }

    /// Image of the hypergraph under a vertex map into `0..target_n`.
    /// Colliding images merge (set semantics), matching quotient semantics.
    pub fn map_vertices(&self, map: &[Vertex], target_n: usize) -> Hypergraph {
        let edges = self.edges.iter().map(|e| e.iter().map(|&v| map[v as usize]));
        Hypergraph::new(target_n, edges).expect("vertex map stays in range")
    }

    /// Connected components of the clique completion, each sorted.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut uf = UnionFind::new(self.n);
        for e in &self.edges {
            for w in e.windows(2) {
                uf.union(w[0] as usize, w[1] as usize);
            }
        }
        uf.groups()
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Disjoint union: `other`'s vertices are shifted past ours.
    pub fn disjoint_union(&self, other: &Hypergraph) -> Hypergraph {
        let off = self.n as Vertex;
        let edges = self
            .edges
            .iter()
            .cloned()
            .chain(other.edges.iter().map(|e| e.iter().map(|&v| v + off).collect()));
        Hypergraph::new(self.n + other.n, edges).expect("union stays in range")
    }
}

/// Trimming level `l`: a non-negative integer or infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Level {
    Finite(usize),
    Infinity,
}

impl Level {
    /// Concrete level for a hypergraph of the given rank. Infinity becomes
    /// `rank - 1`, which keeps every edge that meets the kept set; larger
    /// finite values are clamped the same way.
    pub fn resolve(self, rank: usize) -> usize {
        let cap = rank.saturating_sub(1);
        match self {
            Level::Finite(l) => l.min(cap),
            Level::Infinity => cap,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Level::Infinity)
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Level::Finite(l) => write!(f, "{l}"),
            Level::Infinity => write!(f, "inf"),
        }
    }
}

impl FromStr for Level {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "infinity" | "∞" => Ok(Level::Infinity),
            t => t
                .parse::<usize>()
                .map(Level::Finite)
                .map_err(|_| Error::input(format!("invalid level {s:?}, expected integer or inf"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TrimConfig {
    pub level: Level,
    pub keep_arity_one: bool,
}

impl TrimConfig {
    pub fn new(level: Level, keep_arity_one: bool) -> Self {
        TrimConfig {
            level,
            keep_arity_one,
        }
    }
}

/// Result of an induced construction: the hypergraph on `0..|S|` plus the
/// original id of each new vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Induced {
    pub graph: Hypergraph,
    pub vertices: Vec<Vertex>,
}

/// Induced `l`-trimmed subhypergraph on `s`: every `e ∩ S` with at most `l`
/// vertices of `e` outside `S`, empty intersections dropped.
pub fn induced_trimmed(g: &Hypergraph, s: &[Vertex], cfg: TrimConfig) -> Result<Induced> {
    let mut inside = vec![false; g.num_vertices()];
    for &v in s {
        if v as usize >= g.num_vertices() {
            return Err(Error::input(format!("vertex {v} not in hypergraph")));
        }
        inside[v as usize] = true;
    }
    Ok(induced_trimmed_mask(g, &inside, cfg))
}

pub(crate) fn induced_trimmed_mask(g: &Hypergraph, inside: &[bool], cfg: TrimConfig) -> Induced {
    let mut new_id = vec![Vertex::MAX; g.num_vertices()];
    let mut vertices = Vec::new();
    for (v, &keep) in inside.iter().enumerate() {
        if keep {
            new_id[v] = vertices.len() as Vertex;
            vertices.push(v as Vertex);
        }
    }
    let l = cfg.level.resolve(g.rank());
    let mut edges = BTreeSet::new();
    for e in g.edges() {
        let kept: Edge = e.iter().filter(|&&v| inside[v as usize]).map(|&v| new_id[v as usize]).collect();
        let outside = e.len() - kept.len();
        if kept.is_empty() || outside > l || (kept.len() == 1 && !cfg.keep_arity_one) {
            continue;
        }
        edges.insert(kept);
    }
    Induced {
        graph: Hypergraph::from_sorted_edges(vertices.len(), edges.into_iter().collect()),
        vertices,
    }
}

/// Graph with one arc-free edge per pair of vertices sharing a hyperedge.
pub fn clique_completion(h: &Hypergraph) -> Hypergraph {
    let mut edges = BTreeSet::new();
    for e in h.edges() {
        for (i, &a) in e.iter().enumerate() {
            for &b in &e[i + 1..] {
                edges.insert(vec![a, b]);
            }
        }
    }
    Hypergraph::from_sorted_edges(h.num_vertices(), edges.into_iter().collect())
}

/// Vertex-colored hypergraph. Colors are `0..h` internally.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredHypergraph {
    pub base: Hypergraph,
    pub color: Vec<u32>,
}

impl ColoredHypergraph {
    pub fn new(base: Hypergraph, color: Vec<u32>) -> Result<Self> {
        if color.len() != base.num_vertices() {
            return Err(Error::input(format!(
                "{} colors for {} vertices",
                color.len(),
                base.num_vertices()
            )));
        }
        Ok(ColoredHypergraph { base, color })
    }

    pub fn num_colors(&self) -> usize {
        self.color.iter().map(|&c| c as usize + 1).max().unwrap_or(0)
    }

    /// Induced (0-trimmed) subhypergraph on the vertices whose color is in
    /// `colors` (a bitmask over color ids).
    pub fn restrict_colors(&self, colors: u64) -> Induced {
        let inside: Vec<bool> = self.color.iter().map(|&c| colors >> c & 1 == 1).collect();
        induced_trimmed_mask(&self.base, &inside, TrimConfig::new(Level::Finite(0), true))
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }

    /// Groups ordered by smallest member, members sorted.
    pub(crate) fn groups(&mut self) -> Vec<Vec<Vertex>> {
        let n = self.parent.len();
        let mut slot = vec![usize::MAX; n];
        let mut out: Vec<Vec<Vertex>> = Vec::new();
        for v in 0..n {
            let r = self.find(v);
            if slot[r] == usize::MAX {
                slot[r] = out.len();
                out.push(Vec::new());
            }
            out[slot[r]].push(v as Vertex);
        }
        out
    }
}
