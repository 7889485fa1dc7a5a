//! From linear homogeneous pairs to a clique or stable set.
//!
//! [`p4free_extract`] asks an oracle for an empty or complete pair `(X, Y)`,
//! recurses into both sides and returns the union of what comes back. Every
//! cross pair between the two halves is an edge (or every one is a non-edge),
//! so an induced `P4` in the union would have to live inside one half, and
//! the union stays `P4`-free. [`cograph_alpha_omega`] then reads a maximum
//! stable set and a maximum clique off the cotree.
//!
//! Vertex sets returned here are local ids of the input graph; pattern
//! embeddings are root ids, like every other witness.

use std::cmp::Ordering;

use crate::certificates::{
    verify_bipartite_pair, BipartitePairWitness, PairKind, PatternEmbedding, Violation,
};
use crate::error::{Error, Result};
use crate::exact::{self, Ratio};
use crate::graph::{Graph, VertexSet};
use crate::patterns;

/// Answer of a pair oracle: a pair in root ids, or a forbidden-pattern
/// certificate that ends the recursion.
#[derive(Clone, Debug)]
pub enum OracleAnswer {
    Pair(BipartitePairWitness),
    Certificate(PatternEmbedding),
}

/// Source of empty or complete pairs with sides of at least
/// [`BipartiteOracle::side_target`] vertices.
pub trait BipartiteOracle {
    /// Promised side length on an `n`-vertex graph (`⌈c·n⌉`).
    fn side_target(&self, n: usize) -> usize;

    /// Whether the recursion stops at `n` vertices and keeps one of them.
    fn is_base(&self, n: usize) -> bool;

    /// `log₂(1/c)`, for the size bound.
    fn log2_inverse_c(&self) -> f64;

    fn find_pair(&self, g: &Graph) -> Result<OracleAnswer>;
}

/// Largest graph the exhaustive oracle accepts.
pub const EXACT_ORACLE_LIMIT: usize = 32;

/// Exhaustive pair search for `n <= 32`: the first `X` of size `⌈c·n⌉` in
/// lexicographic order that admits a `Y` of the same size, empty kind tried
/// before complete.
#[derive(Clone, Copy, Debug)]
pub struct ExactOracle {
    pub c: Ratio,
}

impl ExactOracle {
    pub fn new(c: Ratio) -> Result<Self> {
        check_open_unit(c)?;
        Ok(ExactOracle { c })
    }
}

impl BipartiteOracle for ExactOracle {
    fn side_target(&self, n: usize) -> usize {
        exact::ceil_mul(self.c, n as u64) as usize
    }

    /// `n < 1/c`.
    fn is_base(&self, n: usize) -> bool {
        (n as i128) * (*self.c.numer() as i128) < *self.c.denom() as i128
    }

    fn log2_inverse_c(&self) -> f64 {
        (*self.c.denom() as f64).log2() - (*self.c.numer() as f64).log2()
    }

    fn find_pair(&self, g: &Graph) -> Result<OracleAnswer> {
        let side = self.side_target(g.n());
        match exact_pair(g, side)? {
            Some(w) => Ok(OracleAnswer::Pair(w)),
            None => Err(Error::OracleNotTotal { n: g.n(), side }),
        }
    }
}

/// Finds disjoint `X`, `Y` with `|X| = |Y| = side` and all or no edges
/// across, or proves none exists. Ids in the result are root ids.
pub fn exact_pair(g: &Graph, side: usize) -> Result<Option<BipartitePairWitness>> {
    let n = g.n();
    if n > EXACT_ORACLE_LIMIT {
        return Err(Error::ExactTooLarge {
            n,
            limit: EXACT_ORACLE_LIMIT,
        });
    }
    if side == 0 || 2 * side > n {
        return Ok(None);
    }
    let full: u64 = (1u64 << n) - 1;
    let rows: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).fold(0u64, |m, u| m | 1 << u))
        .collect();
    let mut search = PairSearch {
        n,
        side,
        rows,
        full,
    };
    Ok(search.pick(0, 0, 0, full, full, 0).map(|(kind, xm, ym)| {
        let ids = |m: u64| g.root_ids((0..n).filter(|&v| m >> v & 1 == 1));
        BipartitePairWitness {
            kind,
            x: ids(xm),
            y: ids(ym),
        }
    }))
}

struct PairSearch {
    n: usize,
    side: usize,
    rows: Vec<u64>,
    full: u64,
}

impl PairSearch {
    /// `nb` / `non` are the common neighbours / common non-neighbours of the
    /// chosen `X`; `above` restricts `Y` to ids above `min X`, which loses
    /// nothing since the two sides may be swapped.
    fn pick(
        &mut self,
        next: usize,
        count: usize,
        xm: u64,
        nb: u64,
        non: u64,
        above: u64,
    ) -> Option<(PairKind, u64, u64)> {
        if count == self.side {
            for (kind, cand) in [(PairKind::Empty, non), (PairKind::Complete, nb)] {
                let cand = cand & above & !xm;
                if cand.count_ones() as usize >= self.side {
                    return Some((kind, xm, lowest_bits(cand, self.side)));
                }
            }
            return None;
        }
        for v in next..self.n {
            if self.n - v < self.side - count {
                break;
            }
            let above = if count == 0 {
                self.full & !((2u64 << v) - 1)
            } else {
                above
            };
            let xm2 = xm | 1 << v;
            let nb2 = nb & self.rows[v];
            let non2 = non & !self.rows[v] & !(1u64 << v);
            let room = |m: u64| (m & above & !xm2).count_ones() as usize >= self.side;
            if !room(nb2) && !room(non2) {
                continue;
            }
            if let Some(hit) = self.pick(v + 1, count + 1, xm2, nb2, non2, above) {
                return Some(hit);
            }
        }
        None
    }
}

fn lowest_bits(mut m: u64, k: usize) -> u64 {
    let mut out = 0;
    for _ in 0..k {
        let low = m & m.wrapping_neg();
        out |= low;
        m ^= low;
    }
    out
}

fn check_open_unit(c: Ratio) -> Result<()> {
    if *c.numer() <= 0 || c >= Ratio::from_integer(1) {
        return Err(Error::InvalidParameter(format!(
            "c = {} not in (0, 1)",
            exact::format_ratio(c)
        )));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct P4FreeExtraction {
    /// `P4`-free set, local ids of the input graph.
    pub set: VertexSet,
    /// Fewest oracle splits on any root-to-leaf branch; `|set| >= 2^depth`.
    pub depth: usize,
    pub oracle_calls: usize,
}

#[derive(Clone, Debug)]
pub enum P4FreeOutcome {
    Extracted(P4FreeExtraction),
    Certificate(PatternEmbedding),
}

/// Builds a `P4`-free induced subgraph by recursive splitting.
pub fn p4free_extract(g: &Graph, oracle: &dyn BipartiteOracle) -> Result<P4FreeOutcome> {
    let mut calls = 0;
    match extract_rec(g, oracle, &mut calls)? {
        Rec::Set(set, depth) => Ok(P4FreeOutcome::Extracted(P4FreeExtraction {
            set,
            depth,
            oracle_calls: calls,
        })),
        Rec::Certificate(e) => Ok(P4FreeOutcome::Certificate(e)),
    }
}

enum Rec {
    Set(VertexSet, usize),
    Certificate(PatternEmbedding),
}

fn extract_rec(g: &Graph, oracle: &dyn BipartiteOracle, calls: &mut usize) -> Result<Rec> {
    let n = g.n();
    if n < 2 || oracle.is_base(n) {
        return Ok(Rec::Set(VertexSet::new([0]), 0));
    }
    *calls += 1;
    let w = match oracle.find_pair(g)? {
        OracleAnswer::Pair(w) => w,
        OracleAnswer::Certificate(e) => return Ok(Rec::Certificate(e)),
    };
    let reject = |violation| Error::InvalidOracleWitness {
        witness: Box::new(w.clone()),
        violation,
    };
    let localize = |ids: &[usize]| {
        g.localize(ids).ok_or_else(|| {
            let stray = ids.iter().copied().find(|&r| g.localize(&[r]).is_none());
            reject(Violation::OutOfRange {
                vertex: stray.unwrap_or_default(),
                n,
            })
        })
    };
    let local = BipartitePairWitness {
        kind: w.kind,
        x: localize(&w.x)?,
        y: localize(&w.y)?,
    };
    verify_bipartite_pair(g, &local).map_err(reject)?;
    let required = oracle.side_target(n);
    if local.side() < required {
        return Err(reject(Violation::TooSmall {
            size: local.side(),
            required,
        }));
    }

    let mut merged = Vec::new();
    let mut depth = usize::MAX;
    for side in [&local.x, &local.y] {
        let side = VertexSet::new(side.iter().copied());
        let sub = g.induced(&side)?;
        match extract_rec(&sub, oracle, calls)? {
            Rec::Set(s, d) => {
                merged.extend(s.iter().map(|v| side.as_slice()[v]));
                depth = depth.min(d);
            }
            cert => return Ok(cert),
        }
    }
    Ok(Rec::Set(VertexSet::new(merged), depth + 1))
}

/// `c′ = log 2 / log(1/c)`, the exponent with `c^{c′} = 1/2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CographExponent {
    pub c: Ratio,
    pub value: f64,
    /// `1/j` when `c = 2^-j`.
    pub exact: Option<Ratio>,
    /// `c^{c′} >= 1/2`; decided exactly when `exact` is set.
    pub relation_holds: bool,
}

pub fn exponent_for(c: Ratio) -> Result<CographExponent> {
    check_open_unit(c)?;
    let log2_inv = (*c.denom() as f64).log2() - (*c.numer() as f64).log2();
    let value = 1.0 / log2_inv;
    let exact = (*c.numer() == 1 && (*c.denom() as u64).is_power_of_two())
        .then(|| Ratio::new(1, (*c.denom() as u64).trailing_zeros() as i64));
    // (2^-j)^(1/j) = 1/2 exactly.
    let relation_holds = match exact {
        Some(_) => true,
        None => (*c.numer() as f64 / *c.denom() as f64).powf(value) >= 0.5 * (1.0 - 1e-12),
    };
    Ok(CographExponent {
        c,
        value,
        exact,
        relation_holds,
    })
}

/// Cotree of a `P4`-free graph. Leaves are local ids of the decomposed graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CographDecomposition {
    Leaf(usize),
    /// Children are the connected components.
    Union(Vec<CographDecomposition>),
    /// Children are the components of the complement.
    Join(Vec<CographDecomposition>),
}

impl CographDecomposition {
    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect(&mut out);
        out.sort_unstable();
        out
    }

    fn collect(&self, out: &mut Vec<usize>) {
        match self {
            CographDecomposition::Leaf(v) => out.push(*v),
            CographDecomposition::Union(c) | CographDecomposition::Join(c) => {
                c.iter().for_each(|t| t.collect(out))
            }
        }
    }
}

#[derive(Clone, Debug)]
pub enum CographOutcome {
    Cograph {
        /// Maximum stable set, lexicographically smallest among maxima.
        stable: VertexSet,
        /// Maximum clique, lexicographically smallest among maxima.
        clique: VertexSet,
        decomposition: CographDecomposition,
    },
    /// `g` is not a cograph; an induced `P4` in root ids.
    Obstruction(PatternEmbedding),
}

/// Exact `α` and `ω` of a cograph via its cotree, or a `P4` obstruction.
pub fn cograph_alpha_omega(g: &Graph) -> CographOutcome {
    match alpha_omega_rec(g) {
        Ok(r) => CographOutcome::Cograph {
            stable: r.stable,
            clique: r.clique,
            decomposition: r.tree,
        },
        Err(e) => CographOutcome::Obstruction(e),
    }
}

/// Just the cotree.
pub fn decompose(g: &Graph) -> Result<CographDecomposition, PatternEmbedding> {
    alpha_omega_rec(g).map(|r| r.tree)
}

struct Node {
    stable: VertexSet,
    clique: VertexSet,
    tree: CographDecomposition,
}

fn better(a: &VertexSet, b: &VertexSet) -> bool {
    match a.len().cmp(&b.len()) {
        Ordering::Greater => true,
        Ordering::Less => false,
        Ordering::Equal => a.as_slice() < b.as_slice(),
    }
}

fn alpha_omega_rec(g: &Graph) -> Result<Node, PatternEmbedding> {
    let n = g.n();
    if n == 1 {
        let one = VertexSet::new([0]);
        return Ok(Node {
            stable: one.clone(),
            clique: one,
            tree: CographDecomposition::Leaf(0),
        });
    }
    let comps = g.components();
    let (parts, join) = if comps.len() > 1 {
        (comps, false)
    } else {
        let co = g.complement().components();
        if co.len() == 1 {
            // Connected with a connected complement: not a cograph.
            return Err(patterns::find_induced_path(g, 4)
                .embedding
                .expect("a prime graph on >= 2 vertices induces P4"));
        }
        (co, true)
    };
    let mut children = Vec::with_capacity(parts.len());
    // `summed` adds across parts, `best` takes the largest single part.
    let mut summed = Vec::new();
    let mut best = VertexSet::default();
    for part in &parts {
        let sub = g.induced(part).expect("components are nonempty");
        let node = alpha_omega_rec(&sub)?;
        let lift = |s: &VertexSet| -> VertexSet { s.iter().map(|v| part.as_slice()[v]).collect() };
        let (add, pick) = if join {
            (lift(&node.clique), lift(&node.stable))
        } else {
            (lift(&node.stable), lift(&node.clique))
        };
        summed.extend(add.iter());
        if better(&pick, &best) {
            best = pick;
        }
        children.push(relabel(node.tree, part));
    }
    let summed = VertexSet::new(summed);
    Ok(if join {
        Node {
            stable: best,
            clique: summed,
            tree: CographDecomposition::Join(children),
        }
    } else {
        Node {
            stable: summed,
            clique: best,
            tree: CographDecomposition::Union(children),
        }
    })
}

fn relabel(t: CographDecomposition, part: &VertexSet) -> CographDecomposition {
    match t {
        CographDecomposition::Leaf(v) => CographDecomposition::Leaf(part.as_slice()[v]),
        CographDecomposition::Union(c) => {
            CographDecomposition::Union(c.into_iter().map(|t| relabel(t, part)).collect())
        }
        CographDecomposition::Join(c) => {
            CographDecomposition::Join(c.into_iter().map(|t| relabel(t, part)).collect())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificates::verify_embedding;
    use crate::patterns::{contains_induced, path_graph};

    fn k33() -> Graph {
        Graph::from_fn(6, |u, v| (u < 3) != (v < 3)).unwrap()
    }

    fn extracted(o: P4FreeOutcome) -> P4FreeExtraction {
        match o {
            P4FreeOutcome::Extracted(e) => e,
            P4FreeOutcome::Certificate(c) => panic!("unexpected certificate {c:?}"),
        }
    }

    #[test]
    fn k44_extracts_everything() {
        let g = Graph::from_fn(8, |u, v| (u < 4) != (v < 4)).unwrap();
        let e = extracted(p4free_extract(&g, &ExactOracle::new(Ratio::new(1, 2)).unwrap()).unwrap());
        assert_eq!(e.set, VertexSet::new(0..8));
        assert_eq!(e.depth, 3);
        let sub = g.induced(&e.set).unwrap();
        assert!(!contains_induced(&sub, &path_graph(4)).unwrap().found());
    }

    #[test]
    fn single_vertex_is_returned() {
        let g = Graph::new(1, &[]).unwrap();
        let e = extracted(p4free_extract(&g, &ExactOracle::new(Ratio::new(1, 2)).unwrap()).unwrap());
        assert_eq!(e.set, VertexSet::new([0]));
        assert_eq!(e.depth, 0);
    }

    #[test]
    fn p4_quarter_gives_two_vertices() {
        let g = path_graph(4);
        let e = extracted(p4free_extract(&g, &ExactOracle::new(Ratio::new(1, 4)).unwrap()).unwrap());
        assert_eq!(e.set.len(), 2);
        assert!(!g.has_edge(e.set.as_slice()[0], e.set.as_slice()[1]));
        // n^{c'} = 4^{1/2} = 2.
        assert_eq!(exponent_for(Ratio::new(1, 4)).unwrap().exact, Some(Ratio::new(1, 2)));
    }

    #[test]
    fn exact_oracle_reports_missing_pairs() {
        // P4 has no pair with sides 2.
        let err = p4free_extract(&path_graph(4), &ExactOracle::new(Ratio::new(1, 2)).unwrap());
        assert!(matches!(err, Err(Error::OracleNotTotal { n: 4, side: 2 })));
    }

    struct Liar;

    impl BipartiteOracle for Liar {
        fn side_target(&self, n: usize) -> usize {
            n / 2
        }
        fn is_base(&self, n: usize) -> bool {
            n < 2
        }
        fn log2_inverse_c(&self) -> f64 {
            1.0
        }
        fn find_pair(&self, _: &Graph) -> Result<OracleAnswer> {
            Ok(OracleAnswer::Pair(BipartitePairWitness {
                kind: PairKind::Empty,
                x: vec![0],
                y: vec![1],
            }))
        }
    }

    #[test]
    fn lying_oracle_is_rejected_with_its_witness() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        match p4free_extract(&g, &Liar) {
            Err(Error::InvalidOracleWitness { witness, violation }) => {
                assert_eq!(witness.x, vec![0]);
                assert_eq!(violation, Violation::UnexpectedEdge { u: 0, v: 1 });
            }
            other => panic!("{other:?}"),
        }
        let g = Graph::new(6, &[]).unwrap();
        assert!(matches!(
            p4free_extract(&g, &Liar),
            Err(Error::InvalidOracleWitness { violation: Violation::TooSmall { size: 1, required: 3 }, .. })
        ));
    }

    #[test]
    fn exponents() {
        let q = exponent_for(Ratio::new(1, 4)).unwrap();
        assert_eq!(q.value, 0.5);
        assert!(q.relation_holds);
        let h = exponent_for(Ratio::new(1, 2)).unwrap();
        assert_eq!(h.exact, Some(Ratio::from_integer(1)));
        let t = exponent_for(Ratio::new(1, 3)).unwrap();
        assert_eq!(t.exact, None);
        assert!(t.relation_holds);
        assert!(exponent_for(Ratio::new(99, 100)).unwrap().value > exponent_for(Ratio::new(9, 10)).unwrap().value);
        assert!(exponent_for(Ratio::from_integer(1)).is_err());
        assert!(exponent_for(Ratio::from_integer(0)).is_err());
    }

    fn sets(g: &Graph) -> (VertexSet, VertexSet) {
        match cograph_alpha_omega(g) {
            CographOutcome::Cograph { stable, clique, .. } => (stable, clique),
            CographOutcome::Obstruction(e) => panic!("unexpected P4 {e:?}"),
        }
    }

    #[test]
    fn k33_alpha_omega() {
        let (s, c) = sets(&k33());
        assert_eq!(s, VertexSet::new([0, 1, 2]));
        assert_eq!(c, VertexSet::new([0, 3]));
    }

    #[test]
    fn k5_alpha_omega() {
        let (s, c) = sets(&Graph::from_fn(5, |_, _| true).unwrap());
        assert_eq!(s.len(), 1);
        assert_eq!(c.len(), 5);
    }

    #[test]
    fn p4_is_the_obstruction() {
        let g = path_graph(4);
        match cograph_alpha_omega(&g) {
            CographOutcome::Obstruction(e) => {
                assert_eq!(e.map, vec![0, 1, 2, 3]);
                assert_eq!(verify_embedding(&g, &e), Ok(()));
            }
            _ => panic!("P4 is not a cograph"),
        }
    }

    #[test]
    fn cotree_shape() {
        let t = decompose(&k33()).unwrap();
        let CographDecomposition::Join(parts) = &t else { panic!("{t:?}") };
        assert_eq!(parts.len(), 2);
        assert!(parts.iter().all(|p| matches!(p, CographDecomposition::Union(c) if c.len() == 3)));
        assert_eq!(t.leaves(), (0..6).collect::<Vec<_>>());
    }
}
