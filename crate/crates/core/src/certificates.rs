//! Witness types and their verifiers.
//!
//! Verifiers look only at the adjacency of the graph they are handed and at
//! the ids in the witness; nothing a producer computed is trusted. Checks run
//! in a fixed order (range, distinctness, adjacency, count) and the first
//! failure is reported.

use thiserror::Error;

use crate::exact::{self, Ratio};
use crate::graph::Graph;

/// An induced path, listed from its start vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedPathWitness {
    pub vertices: Vec<usize>,
}

impl InducedPathWitness {
    pub fn start(&self) -> Option<usize> {
        self.vertices.first().copied()
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairKind {
    Empty,
    Complete,
}

impl PairKind {
    pub fn flipped(self) -> PairKind {
        match self {
            PairKind::Empty => PairKind::Complete,
            PairKind::Complete => PairKind::Empty,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            PairKind::Empty => "empty",
            PairKind::Complete => "complete",
        }
    }
}

/// Disjoint sides `x`, `y` with all (complete) or no (empty) edges across.
/// Nothing is required inside either side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartitePairWitness {
    pub kind: PairKind,
    pub x: Vec<usize>,
    pub y: Vec<usize>,
}

impl BipartitePairWitness {
    /// Length of the shorter side.
    pub fn side(&self) -> usize {
        self.x.len().min(self.y.len())
    }

    pub fn flipped(mut self) -> Self {
        self.kind = self.kind.flipped();
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HomogeneousKind {
    Stable,
    Clique,
}

impl HomogeneousKind {
    pub fn flipped(self) -> HomogeneousKind {
        match self {
            HomogeneousKind::Stable => HomogeneousKind::Clique,
            HomogeneousKind::Clique => HomogeneousKind::Stable,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            HomogeneousKind::Stable => "stable",
            HomogeneousKind::Clique => "clique",
        }
    }
}

/// An ε-stable set or ε-clique. `edge_count` is the number of edges inside
/// `vertices` (for both kinds).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousSetWitness {
    pub kind: HomogeneousKind,
    pub vertices: Vec<usize>,
    pub epsilon: Ratio,
    pub edge_count: u64,
}

impl HomogeneousSetWitness {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// An induced copy of `pattern`: pattern vertex `i` sits at host vertex
/// `map[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternEmbedding {
    pub name: String,
    pub pattern: Graph,
    pub map: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Path(InducedPathWitness),
    Bipartite(BipartitePairWitness),
    Homogeneous(HomogeneousSetWitness),
    Embedding(PatternEmbedding),
}

impl Witness {
    pub fn verify(&self, g: &Graph) -> Verdict {
        match self {
            Witness::Path(w) => verify_induced_path(g, w),
            Witness::Bipartite(w) => verify_bipartite_pair(g, w),
            Witness::Homogeneous(w) => verify_homogeneous(g, w),
            Witness::Embedding(w) => verify_embedding(g, w),
        }
    }

    pub fn type_name(&self) -> &'static str {
        match self {
            Witness::Path(_) => "path",
            Witness::Bipartite(_) => "bipartite",
            Witness::Homogeneous(_) => "homogeneous",
            Witness::Embedding(_) => "embedding",
        }
    }
}

/// First violated condition of a rejected witness.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("vertex {vertex} out of range (n = {n})")]
    OutOfRange { vertex: usize, n: usize },
    #[error("empty vertex list")]
    Empty,
    #[error("vertex {vertex} repeated")]
    Duplicate { vertex: usize },
    #[error("vertex {vertex} on both sides")]
    Overlap { vertex: usize },
    #[error("map has {map} entries but the pattern has {pattern} vertices")]
    PatternSize { pattern: usize, map: usize },
    #[error("epsilon {0} not in [0, 1]")]
    Epsilon(String),
    #[error("required edge {u}-{v} missing")]
    MissingEdge { u: usize, v: usize },
    #[error("forbidden edge {u}-{v} present")]
    UnexpectedEdge { u: usize, v: usize },
    #[error("{count} {what} exceeds epsilon * {pairs} pairs (epsilon = {epsilon})")]
    DensityBound {
        what: &'static str,
        count: u64,
        pairs: u64,
        epsilon: String,
    },
    #[error("side of {size} vertices, at least {required} required")]
    TooSmall { size: usize, required: usize },
    #[error("recorded edge count {recorded} but the set spans {actual}")]
    EdgeCountMismatch { recorded: u64, actual: u64 },
}

pub type Verdict = Result<(), Violation>;

fn check_range(g: &Graph, vs: &[usize]) -> Verdict {
    match vs.iter().find(|&&v| v >= g.n()) {
        Some(&vertex) => Err(Violation::OutOfRange { vertex, n: g.n() }),
        None => Ok(()),
    }
}

fn check_distinct(g: &Graph, vs: &[usize]) -> Verdict {
    let mut seen = vec![false; g.n()];
    for &v in vs {
        if std::mem::replace(&mut seen[v], true) {
            return Err(Violation::Duplicate { vertex: v });
        }
    }
    Ok(())
}

pub fn verify_induced_path(g: &Graph, w: &InducedPathWitness) -> Verdict {
    let vs = &w.vertices;
    check_range(g, vs)?;
    if vs.is_empty() {
        return Err(Violation::Empty);
    }
    check_distinct(g, vs)?;
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            let (u, v) = (vs[i], vs[j]);
            match (j == i + 1, g.has_edge(u, v)) {
                (true, false) => return Err(Violation::MissingEdge { u, v }),
                (false, true) => return Err(Violation::UnexpectedEdge { u, v }),
                _ => {}
            }
        }
    }
    Ok(())
}

pub fn verify_bipartite_pair(g: &Graph, w: &BipartitePairWitness) -> Verdict {
    check_range(g, &w.x)?;
    check_range(g, &w.y)?;
    if w.x.is_empty() || w.y.is_empty() {
        return Err(Violation::Empty);
    }
    check_distinct(g, &w.x)?;
    check_distinct(g, &w.y)?;
    if let Some(&vertex) = w.y.iter().find(|v| w.x.contains(v)) {
        return Err(Violation::Overlap { vertex });
    }
    for &u in &w.x {
        for &v in &w.y {
            match (w.kind, g.has_edge(u, v)) {
                (PairKind::Complete, false) => return Err(Violation::MissingEdge { u, v }),
                (PairKind::Empty, true) => return Err(Violation::UnexpectedEdge { u, v }),
                _ => {}
            }
        }
    }
    Ok(())
}

pub fn verify_homogeneous(g: &Graph, w: &HomogeneousSetWitness) -> Verdict {
    let vs = &w.vertices;
    check_range(g, vs)?;
    if vs.is_empty() {
        return Err(Violation::Empty);
    }
    check_distinct(g, vs)?;
    if exact::check_unit("epsilon", w.epsilon).is_err() {
        return Err(Violation::Epsilon(exact::format_ratio(w.epsilon)));
    }
    let mut edges = 0u64;
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            edges += g.has_edge(vs[i], vs[j]) as u64;
        }
    }
    let pairs = exact::pairs(vs.len());
    let (what, count) = match w.kind {
        HomogeneousKind::Stable => ("edges", edges),
        HomogeneousKind::Clique => ("missing edges", pairs - edges),
    };
    if exact::gt_scaled(count, w.epsilon, pairs) {
        return Err(Violation::DensityBound {
            what,
            count,
            pairs,
            epsilon: exact::format_ratio(w.epsilon),
        });
    }
    if w.edge_count != edges {
        return Err(Violation::EdgeCountMismatch {
            recorded: w.edge_count,
            actual: edges,
        });
    }
    Ok(())
}

pub fn verify_embedding(g: &Graph, w: &PatternEmbedding) -> Verdict {
    if w.map.len() != w.pattern.n() {
        return Err(Violation::PatternSize {
            pattern: w.pattern.n(),
            map: w.map.len(),
        });
    }
    check_range(g, &w.map)?;
    check_distinct(g, &w.map)?;
    for i in 0..w.map.len() {
        for j in i + 1..w.map.len() {
            let (u, v) = (w.map[i], w.map[j]);
            match (w.pattern.has_edge(i, j), g.has_edge(u, v)) {
                (true, false) => return Err(Violation::MissingEdge { u, v }),
                (false, true) => return Err(Violation::UnexpectedEdge { u, v }),
                _ => {}
            }
        }
    }
    Ok(())
}

/// Homogeneous witness for `vertices` of `g` with the edge count filled in.
pub(crate) fn homogeneous_witness(
    g: &Graph,
    kind: HomogeneousKind,
    vertices: Vec<usize>,
    epsilon: Ratio,
) -> HomogeneousSetWitness {
    let mut edge_count = 0u64;
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            edge_count += g.has_edge(vertices[i], vertices[j]) as u64;
        }
    }
    HomogeneousSetWitness {
        kind,
        vertices,
        epsilon,
        edge_count,
    }
}
