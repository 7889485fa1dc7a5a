//! Brute-force induced-subgraph search. These are the ground-truth oracles
//! the rest of the crate is tested against, so they stay simple: plain
//! backtracking, candidates in ascending id order.

use crate::certificates::PatternEmbedding;
use crate::error::{Error, Result};
use crate::graph::{BitSet, Graph};

/// Largest pattern accepted by [`contains_induced`].
pub const CONTAINS_LIMIT: usize = 10;
/// Largest `k` accepted by [`universality_check`].
pub const UNIVERSALITY_LIMIT: usize = 5;

#[derive(Clone, Debug)]
pub struct PatternQueryResult {
    pub embedding: Option<PatternEmbedding>,
    pub nodes_explored: u64,
}

impl PatternQueryResult {
    pub fn found(&self) -> bool {
        self.embedding.is_some()
    }
}

/// The path `0 - 1 - ... - (k-1)`.
pub fn path_graph(k: usize) -> Graph {
    Graph::new(k, &(1..k).map(|i| (i - 1, i)).collect::<Vec<_>>()).expect("k >= 1")
}

/// Searches for an induced path on exactly `k` vertices. A partial path is
/// only extended by a neighbour of its last vertex that is neither on the
/// path nor adjacent to any earlier path vertex.
///
/// Panics if `k == 0`.
pub fn find_induced_path(g: &Graph, k: usize) -> PatternQueryResult {
    assert!(k >= 1, "paths have at least one vertex");
    let mut search = PathSearch {
        g,
        k,
        path: Vec::with_capacity(k),
        nodes: 0,
    };
    let mut found = false;
    if k <= g.n() {
        for s in 0..g.n() {
            search.path.push(s);
            if search.extend(&BitSet::new(g.n())) {
                found = true;
                break;
            }
            search.path.pop();
        }
    }
    let nodes_explored = search.nodes;
    let embedding = found.then(|| PatternEmbedding {
        name: format!("P{k}"),
        pattern: path_graph(k),
        map: g.root_ids(search.path.iter().copied()),
    });
    PatternQueryResult {
        embedding,
        nodes_explored,
    }
}

struct PathSearch<'a> {
    g: &'a Graph,
    k: usize,
    path: Vec<usize>,
    nodes: u64,
}

impl PathSearch<'_> {
    /// `blocked` holds the closed neighbourhoods of every path vertex but
    /// the last.
    fn extend(&mut self, blocked: &BitSet) -> bool {
        self.nodes += 1;
        if self.path.len() == self.k {
            return true;
        }
        let last = *self.path.last().unwrap();
        let mut cand = self.g.row(last).clone();
        cand.difference_with(blocked);
        if cand.is_empty() {
            return false;
        }
        let mut next_blocked = blocked.clone();
        next_blocked.union_with(&self.g.closed_row(last));
        for w in cand.iter() {
            self.path.push(w);
            if self.extend(&next_blocked) {
                return true;
            }
            self.path.pop();
        }
        false
    }
}

/// Searches for an induced copy of `h` in `g`, `|h| <= CONTAINS_LIMIT`.
pub fn contains_induced(g: &Graph, h: &Graph) -> Result<PatternQueryResult> {
    contains_induced_named(g, h, "H")
}

/// [`contains_induced`] with a name recorded on the embedding.
pub fn contains_induced_named(g: &Graph, h: &Graph, name: &str) -> Result<PatternQueryResult> {
    let m = h.n();
    if m > CONTAINS_LIMIT {
        return Err(Error::PatternTooLarge {
            size: m,
            limit: CONTAINS_LIMIT,
        });
    }
    let mut search = EmbedSearch {
        g,
        h,
        h_deg: h.degree_sequence(),
        g_deg: g.degree_sequence(),
        map: Vec::with_capacity(m),
        used: BitSet::new(g.n()),
        nodes: 0,
    };
    let found = m <= g.n() && search.assign();
    let embedding = found.then(|| PatternEmbedding {
        name: name.to_string(),
        pattern: h.detached(),
        map: g.root_ids(search.map.iter().copied()),
    });
    Ok(PatternQueryResult {
        embedding,
        nodes_explored: search.nodes,
    })
}

struct EmbedSearch<'a> {
    g: &'a Graph,
    h: &'a Graph,
    h_deg: Vec<usize>,
    g_deg: Vec<usize>,
    map: Vec<usize>,
    used: BitSet,
    nodes: u64,
}

impl EmbedSearch<'_> {
    fn assign(&mut self) -> bool {
        self.nodes += 1;
        let i = self.map.len();
        if i == self.h.n() {
            return true;
        }
        let (n, m) = (self.g.n(), self.h.n());
        let mut cand = BitSet::full(n);
        cand.difference_with(&self.used);
        for (j, &u) in self.map.iter().enumerate() {
            if self.h.has_edge(j, i) {
                cand.intersect_with(self.g.row(u));
            } else {
                cand.difference_with(self.g.row(u));
            }
        }
        // Degree-sequence pruning: the host vertex needs at least as many
        // neighbours and non-neighbours as the pattern vertex.
        let (hd, hn) = (self.h_deg[i], m - 1 - self.h_deg[i]);
        for v in cand.iter() {
            let gd = self.g_deg[v];
            if gd < hd || n - 1 - gd < hn {
                continue;
            }
            self.map.push(v);
            self.used.insert(v);
            if self.assign() {
                return true;
            }
            self.used.remove(v);
            self.map.pop();
        }
        false
    }
}

#[derive(Clone, Debug)]
pub enum Freeness {
    Free,
    Certificate(PatternEmbedding),
}

impl Freeness {
    pub fn is_free(&self) -> bool {
        matches!(self, Freeness::Free)
    }
}

/// Looks for an induced `P_k`, then for an induced co-`P_k`.
pub fn is_pk_copk_free(g: &Graph, k: usize) -> Result<Freeness> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("k = {k}, need k >= 2")));
    }
    if let Some(e) = find_induced_path(g, k).embedding {
        return Ok(Freeness::Certificate(e));
    }
    // An induced P_k of the complement is an induced co-P_k of g.
    if let Some(e) = find_induced_path(&g.complement(), k).embedding {
        return Ok(Freeness::Certificate(PatternEmbedding {
            name: format!("coP{k}"),
            pattern: e.pattern.complement(),
            map: e.map,
        }));
    }
    Ok(Freeness::Free)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Universality {
    Universal,
    /// A labelled `k`-vertex graph with no induced copy.
    Missing(Graph),
}

/// Labelled `k`-vertex graph number `mask`: bit `b` is the `b`-th pair of
/// `(0,1), (0,2), ..., (k-2,k-1)`.
pub fn labelled_graph(k: usize, mask: u64) -> Graph {
    let mut b = 0;
    let mut edges = Vec::new();
    for u in 0..k {
        for v in u + 1..k {
            if mask >> b & 1 == 1 {
                edges.push((u, v));
            }
            b += 1;
        }
    }
    Graph::new(k, &edges).expect("k >= 1")
}

/// Checks whether `g` induces every labelled graph on `k` vertices, trying
/// patterns in increasing mask order.
pub fn universality_check(g: &Graph, k: usize) -> Result<Universality> {
    if k > UNIVERSALITY_LIMIT {
        return Err(Error::UniversalityTooLarge {
            k,
            limit: UNIVERSALITY_LIMIT,
        });
    }
    if k == 0 {
        return Ok(Universality::Universal);
    }
    let pairs = k * (k - 1) / 2;
    for mask in 0..1u64 << pairs {
        let h = labelled_graph(k, mask);
        if !contains_induced(g, &h)?.found() {
            return Ok(Universality::Missing(h));
        }
    }
    Ok(Universality::Universal)
}
