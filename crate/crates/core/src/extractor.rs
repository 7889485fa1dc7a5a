//! Long induced path or empty linear pair.
//!
//! Given a connected graph in which every closed neighbourhood has at most
//! `D` vertices, and a start vertex `x`, [`path_or_empty_bipartite`] returns
//! either an induced path from `x` on at least `⌈n / (2(T + D))⌉` vertices or
//! two disjoint sets of at least `T` vertices with no edge between them.
//!
//! The walk follows Gyárfás' argument. Let `U = V ∖ N[x]` and `C1` the
//! largest component of `G[U]`:
//!
//! * `|C1| >= n - D - T`: step to the first `y ∈ N(x)` touching `C1` and
//!   continue in `G[{y} ∪ C1]`. `x` sees nothing in `C1`, so prepending it
//!   keeps the path induced.
//! * `T <= |C1| < n - D - T`: `(C1, U ∖ C1)` is the empty pair.
//! * `|C1| < T`: whole components of `G[U]` are packed into two sides.
//!
//! `T` and `D` stay fixed as absolute counts through the descent.

use crate::certificates::{BipartitePairWitness, InducedPathWitness, PairKind};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtractorParams {
    /// `T`: minimum side length of an empty pair.
    pub side_target: usize,
    /// `D`: bound on every closed degree.
    pub degree_bound: usize,
}

impl ExtractorParams {
    pub fn new(side_target: usize, degree_bound: usize) -> Result<Self> {
        if side_target == 0 || degree_bound == 0 {
            return Err(Error::InvalidParameter(
                "side target and degree bound must be positive".into(),
            ));
        }
        Ok(ExtractorParams {
            side_target,
            degree_bound,
        })
    }

    /// Guaranteed path length `⌈n / (2(T + D))⌉` on an `n`-vertex input.
    pub fn path_bound(&self, n: usize) -> usize {
        n.div_ceil(2 * (self.side_target + self.degree_bound))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Dichotomy {
    Path(InducedPathWitness),
    EmptyPair(BipartitePairWitness),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepKind {
    /// `3T + D >= n`: an edge (or a lone vertex) finishes the path.
    Base,
    /// Large `C1`: the path grows by one vertex.
    Descend,
    /// Middle-sized `C1` against the rest of `U`.
    ComponentPair,
    /// Only small components: packed into two sides.
    SmallComponents,
}

/// One level of the descent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub kind: StepKind,
    pub n: usize,
    /// `|U|`, 0 at the base.
    pub outside: usize,
    /// `|C1|`, 0 at the base.
    pub largest_component: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extraction {
    pub outcome: Dichotomy,
    pub trace: Vec<Step>,
}

/// Runs the dichotomy from `x`. Witness ids are root ids of `g`.
pub fn path_or_empty_bipartite(g: &Graph, x: usize, params: ExtractorParams) -> Result<Extraction> {
    let ExtractorParams {
        side_target: t,
        degree_bound: d,
    } = ExtractorParams::new(params.side_target, params.degree_bound)?;
    if x >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: x, n: g.n() });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    check_degrees(g, d)?;

    let mut cur = g.clone();
    let mut x = x;
    let mut path = Vec::new();
    let mut trace = Vec::new();
    loop {
        let n = cur.n();
        path.push(cur.root_id(x));
        if 3 * t + d >= n {
            if n > 1 {
                let y = cur.neighbors(x).next().expect("connected graph on >= 2 vertices");
                path.push(cur.root_id(y));
            }
            trace.push(Step {
                kind: StepKind::Base,
                n,
                outside: 0,
                largest_component: 0,
            });
            return Ok(Extraction {
                outcome: Dichotomy::Path(InducedPathWitness { vertices: path }),
                trace,
            });
        }

        let closed = cur.closed_row(x);
        let outside: VertexSet = (0..n).filter(|&v| !closed.contains(v)).collect();
        // |U| >= n - D > 3T, so U is nonempty.
        let gu = cur.induced(&outside)?;
        let comps: Vec<VertexSet> = gu
            .components()
            .into_iter()
            .map(|c| c.iter().map(|v| outside.as_slice()[v]).collect())
            .collect();
        let c1 = &comps[0];
        let mut step = Step {
            kind: StepKind::Descend,
            n,
            outside: outside.len(),
            largest_component: c1.len(),
        };

        if c1.len() + d + t >= n {
            let c1_bits = c1.to_bits(n);
            let y = cur
                .neighbors(x)
                .find(|&y| cur.row(y).intersects(&c1_bits))
                .expect("a connected graph links C1 to N(x)");
            let next = c1.union(&VertexSet::new([y]));
            let sub = cur.induced(&next)?;
            debug_assert!(sub.is_connected());
            debug_assert!(check_degrees(&sub, d).is_ok());
            x = next.as_slice().binary_search(&y).expect("y is in the next level");
            cur = sub;
            trace.push(step);
            continue;
        }

        let (a, b) = if c1.len() >= t {
            step.kind = StepKind::ComponentPair;
            (c1.clone(), outside.difference(c1))
        } else {
            step.kind = StepKind::SmallComponents;
            split_small_components(&comps, t, outside.len())?
        };
        trace.push(step);
        return Ok(Extraction {
            outcome: Dichotomy::EmptyPair(BipartitePairWitness {
                kind: PairKind::Empty,
                x: cur.root_ids(a.iter()),
                y: cur.root_ids(b.iter()),
            }),
            trace,
        });
    }
}

fn check_degrees(g: &Graph, bound: usize) -> Result<()> {
    match (0..g.n()).find(|&v| g.closed_degree(v) > bound) {
        Some(v) => Err(Error::DegreeBound {
            vertex: g.root_id(v),
            closed_degree: g.closed_degree(v),
            bound,
        }),
        None => Ok(()),
    }
}

/// Packs whole components, in the given order, into `A` until `|A| >= T`;
/// the rest form `B`. Requires every component to have at most `T` vertices,
/// sizes summing to `universe_size`, and a total of at least `3T`; then
/// `T <= |A| < 2T` and `|B| > T`.
pub fn split_small_components(
    comps: &[VertexSet],
    target: usize,
    universe_size: usize,
) -> Result<(VertexSet, VertexSet)> {
    let total: usize = comps.iter().map(VertexSet::len).sum();
    let unsplittable = Err(Error::Unsplittable { total, target });
    if total != universe_size {
        return Err(Error::InvalidParameter(format!(
            "components cover {total} vertices, expected {universe_size}"
        )));
    }
    if target == 0 || total < 3 * target || comps.iter().any(|c| c.len() > target) {
        return unsplittable;
    }
    match try_split(comps, target) {
        Some(split) => Ok(split),
        None => unsplittable,
    }
}

/// Greedy prefix packing without preconditions; `None` if the remainder
/// falls short of `target`.
pub(crate) fn try_split(comps: &[VertexSet], target: usize) -> Option<(VertexSet, VertexSet)> {
    let mut a = Vec::new();
    let mut cut = comps.len();
    for (i, c) in comps.iter().enumerate() {
        a.extend(c.iter());
        if a.len() >= target {
            cut = i + 1;
            break;
        }
    }
    let b: Vec<usize> = comps[cut..].iter().flat_map(VertexSet::iter).collect();
    (a.len() >= target && b.len() >= target).then(|| (VertexSet::new(a), VertexSet::new(b)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificates::{verify_bipartite_pair, verify_induced_path};

    fn params(t: usize, d: usize) -> ExtractorParams {
        ExtractorParams::new(t, d).unwrap()
    }

    fn bridged_triangles() -> Graph {
        // Triangles {0,1,2} and {3,4,5}, bridge 2-3.
        Graph::new(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]).unwrap()
    }

    #[test]
    fn bridged_triangles_need_d_4() {
        // The bridge ends have closed degree 4, so D = 3 is inadmissible.
        let err = path_or_empty_bipartite(&bridged_triangles(), 0, params(1, 3)).unwrap_err();
        assert!(matches!(err, Error::DegreeBound { vertex: 2, closed_degree: 4, bound: 3 }));
    }

    #[test]
    fn bridged_triangles_hit_the_base_case() {
        // 3T + D = 7 >= 6.
        let g = bridged_triangles();
        let ex = path_or_empty_bipartite(&g, 0, params(1, 4)).unwrap();
        assert_eq!(ex.trace.len(), 1);
        assert_eq!(ex.trace[0].kind, StepKind::Base);
        let Dichotomy::Path(p) = ex.outcome else { panic!() };
        assert_eq!(p.vertices, vec![0, 1]);
        assert!(p.len() >= params(1, 4).path_bound(6));
    }

    #[test]
    fn friendship_hub_breaks_the_degree_bound() {
        // Hub 0; triangles {0,1,2}, {0,3,4}, {0,5,6}; start at leaf 1.
        let g = Graph::new(
            7,
            &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4), (0, 5), (0, 6), (5, 6)],
        )
        .unwrap();
        let err = path_or_empty_bipartite(&g, 1, params(1, 3)).unwrap_err();
        assert!(matches!(err, Error::DegreeBound { vertex: 0, closed_degree: 7, bound: 3 }));
    }

    #[test]
    fn path_descends_then_finishes_with_an_edge() {
        let g = Graph::new(10, &(1..10).map(|i| (i - 1, i)).collect::<Vec<_>>()).unwrap();
        let ex = path_or_empty_bipartite(&g, 0, params(1, 3)).unwrap();
        let kinds: Vec<StepKind> = ex.trace.iter().map(|s| s.kind).collect();
        assert_eq!(kinds, [[StepKind::Descend; 4].as_slice(), &[StepKind::Base]].concat());
        let Dichotomy::Path(p) = ex.outcome else { panic!() };
        assert_eq!(p.vertices, vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn single_vertex_base_case() {
        let g = Graph::new(1, &[]).unwrap();
        let ex = path_or_empty_bipartite(&g, 0, params(1, 1)).unwrap();
        assert_eq!(
            ex.outcome,
            Dichotomy::Path(InducedPathWitness { vertices: vec![0] })
        );
        assert_eq!(params(1, 1).path_bound(1), 1);
    }

    #[test]
    fn long_path_is_walked() {
        let n = 40;
        let g = Graph::new(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>()).unwrap();
        let p = params(1, 3);
        let ex = path_or_empty_bipartite(&g, 0, p).unwrap();
        let Dichotomy::Path(w) = ex.outcome else { panic!("{:?}", ex.outcome) };
        assert_eq!(verify_induced_path(&g, &w), Ok(()));
        assert_eq!(w.start(), Some(0));
        assert!(w.len() >= p.path_bound(n));
    }

    #[test]
    fn star_of_paths_splits() {
        // Centre 0 with five pendant paths of length 3.
        let mut edges = Vec::new();
        for b in 0..5 {
            let base = 1 + 3 * b;
            edges.extend([(0, base), (base, base + 1), (base + 1, base + 2)]);
        }
        let g = Graph::new(16, &edges).unwrap();
        let ex = path_or_empty_bipartite(&g, 0, params(2, 6)).unwrap();
        let Dichotomy::EmptyPair(w) = ex.outcome else { panic!() };
        assert_eq!(verify_bipartite_pair(&g, &w), Ok(()));
        assert!(w.side() >= 2);
        assert_eq!(ex.trace[0].kind, StepKind::ComponentPair);
    }

    #[test]
    fn rejects_bad_inputs() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(path_or_empty_bipartite(&g, 0, params(1, 2)), Err(Error::Disconnected)));
        let p = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(matches!(
            path_or_empty_bipartite(&p, 0, params(1, 2)),
            Err(Error::DegreeBound { vertex: 1, .. })
        ));
        assert!(matches!(
            path_or_empty_bipartite(&p, 3, params(1, 3)),
            Err(Error::VertexOutOfRange { .. })
        ));
        assert!(ExtractorParams::new(0, 1).is_err());
    }

    fn sets(sizes: &[usize]) -> Vec<VertexSet> {
        let mut next = 0;
        sizes
            .iter()
            .map(|&s| {
                let c = VertexSet::new(next..next + s);
                next += s;
                c
            })
            .collect()
    }

    #[test]
    fn split_three_pairs() {
        let (a, b) = split_small_components(&sets(&[2, 2, 2]), 2, 6).unwrap();
        assert_eq!(a, VertexSet::new([0, 1]));
        assert_eq!(b.len(), 4);
    }

    #[test]
    fn split_three_singletons() {
        let (a, b) = split_small_components(&sets(&[1, 1, 1]), 1, 3).unwrap();
        assert_eq!((a.len(), b.len()), (1, 2));
    }

    #[test]
    fn split_single_component_fails() {
        assert!(matches!(
            split_small_components(&sets(&[3]), 2, 3),
            Err(Error::Unsplittable { total: 3, target: 2 })
        ));
        assert!(split_small_components(&sets(&[1, 1]), 1, 3).is_err());
    }
}
