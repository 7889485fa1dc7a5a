//! Immutable simple undirected graphs on a bit-matrix adjacency.
//!
//! Induced subgraphs are materialized as new graphs that remember, for each
//! local vertex, its id in the root graph they were cut from. Producers use
//! that back-mapping to state witnesses in root ids.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Fixed-capacity bitset over `0..len`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitSet {
    words: Vec<u64>,
    len: usize,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn full(len: usize) -> Self {
        let mut s = BitSet::new(len);
        for w in s.words.iter_mut() {
            *w = u64::MAX;
        }
        s.trim();
        s
    }

    pub fn from_iter(len: usize, items: impl IntoIterator<Item = usize>) -> Self {
        let mut s = BitSet::new(len);
        for i in items {
            s.insert(i);
        }
        s
    }

    fn trim(&mut self) {
        let rem = self.len % 64;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    pub fn capacity(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.len && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn intersection_count(&self, other: &BitSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn intersects(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn intersect_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn union_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn difference_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            })
        })
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A set of vertex ids of some graph, kept sorted and duplicate-free.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(ids: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = ids.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn min(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn to_bits(&self, n: usize) -> BitSet {
        BitSet::from_iter(n, self.iter())
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet::new(self.iter().chain(other.iter()))
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| !other.contains(v)).collect())
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}

impl From<&BitSet> for VertexSet {
    fn from(bits: &BitSet) -> Self {
        VertexSet(bits.iter().collect())
    }
}

/// Simple undirected graph on `n >= 1` vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<BitSet>,
    /// Root id of each local vertex; `None` means the identity.
    origin: Option<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse; loops and
    /// out-of-range ids are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adj = vec![BitSet::new(n); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { adj, origin: None })
    }

    /// Builds a graph whose edge `{u, v}` (with `u < v`) is present iff
    /// `edge(u, v)`.
    pub fn from_fn(n: usize, mut edge: impl FnMut(usize, usize) -> bool) -> Result<Graph> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adj = vec![BitSet::new(n); n];
        for u in 0..n {
            for v in u + 1..n {
                if edge(u, v) {
                    adj[u].insert(v);
                    adj[v].insert(u);
                }
            }
        }
        Ok(Graph { adj, origin: None })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Neighbourhood of `v` as a bit row.
    #[inline]
    pub fn row(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    /// Closed neighbourhood `N[v]`.
    pub fn closed_row(&self, v: usize) -> BitSet {
        let mut r = self.adj[v].clone();
        r.insert(v);
        r
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    pub fn closed_degree(&self, v: usize) -> usize {
        self.degree(v) + 1
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn degree_within(&self, v: usize, set: &BitSet) -> usize {
        self.adj[v].intersection_count(set)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        (0..self.n()).map(|v| self.degree(v)).collect()
    }

    /// Flips every off-diagonal entry. The origin map is kept.
    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|v| {
                let mut r = BitSet::full(n);
                r.difference_with(&self.adj[v]);
                r.remove(v);
                r
            })
            .collect();
        Graph {
            adj,
            origin: self.origin.clone(),
        }
    }

    /// The subgraph induced by `set`, with local vertex `i` standing for the
    /// `i`-th smallest member. Origins compose, so `root_id` on the result
    /// still answers in ids of the root graph.
    pub fn induced(&self, set: &VertexSet) -> Result<Graph> {
        if set.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        let n = self.n();
        if let Some(&v) = set.as_slice().last() {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
        }
        let members = set.as_slice();
        let m = members.len();
        let adj = members
            .iter()
            .map(|&u| {
                let row = &self.adj[u];
                BitSet::from_iter(m, (0..m).filter(|&j| row.contains(members[j])))
            })
            .collect();
        let origin: Vec<usize> = members.iter().map(|&u| self.root_id(u)).collect();
        let identity = origin.iter().enumerate().all(|(i, &r)| i == r);
        Ok(Graph {
            adj,
            origin: if identity { None } else { Some(origin) },
        })
    }

    /// Connected components ordered by size descending, then by smallest
    /// member ascending.
    pub fn components(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = BitSet::new(n);
        let mut comps = Vec::new();
        for s in 0..n {
            if seen.contains(s) {
                continue;
            }
            let mut comp = BitSet::new(n);
            let mut frontier = BitSet::new(n);
            frontier.insert(s);
            while !frontier.is_empty() {
                comp.union_with(&frontier);
                let mut next = BitSet::new(n);
                for v in frontier.iter() {
                    next.union_with(&self.adj[v]);
                }
                next.difference_with(&comp);
                frontier = next;
            }
            seen.union_with(&comp);
            comps.push(VertexSet::from(&comp));
        }
        comps.sort_by(|a, b| b.len().cmp(&a.len()).then(a.min().cmp(&b.min())));
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Id of local vertex `v` in the root graph.
    #[inline]
    pub fn root_id(&self, v: usize) -> usize {
        match &self.origin {
            Some(o) => o[v],
            None => v,
        }
    }

    pub fn root_ids(&self, vs: impl IntoIterator<Item = usize>) -> Vec<usize> {
        vs.into_iter().map(|v| self.root_id(v)).collect()
    }

    pub fn origin(&self) -> Option<&[usize]> {
        self.origin.as_deref()
    }

    /// Inverse of [`Graph::root_id`]: maps root ids back to local ids.
    /// Returns `None` if some id is not a vertex of this graph.
    pub fn localize(&self, root_ids: &[usize]) -> Option<Vec<usize>> {
        match &self.origin {
            None => root_ids.iter().map(|&r| (r < self.n()).then_some(r)).collect(),
            Some(o) => {
                let index: HashMap<usize, usize> = o.iter().enumerate().map(|(i, &r)| (r, i)).collect();
                root_ids.iter().map(|r| index.get(r).copied()).collect()
            }
        }
    }

    /// The same adjacency with the origin map dropped.
    pub fn detached(&self) -> Graph {
        Graph {
            adj: self.adj.clone(),
            origin: None,
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .field("origin", &self.origin)
            .finish()
    }
}

/// `build_graph` under its contract name.
pub fn build_graph(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
    Graph::new(n, edges)
}
