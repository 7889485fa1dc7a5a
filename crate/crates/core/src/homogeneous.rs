//! ε-stable sets and ε-cliques: pluggable finders, the high-degree pruning
//! step, and the closed-form δ constant.

use std::fmt;
use std::str::FromStr;

use crate::certificates::{homogeneous_witness, HomogeneousKind, HomogeneousSetWitness};
use crate::error::{Error, Result};
use crate::exact::{self, Ratio};
use crate::graph::{BitSet, Graph, VertexSet};

/// Largest graph the exact strategy will enumerate.
pub const EXACT_LIMIT: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HomogeneousStrategy {
    /// Complete subset enumeration, largest size first. `n <= EXACT_LIMIT`.
    Exact,
    /// Repeatedly delete a maximum-degree vertex until sparse enough, on the
    /// graph and on its complement.
    GreedyPeel,
    /// A single vertex.
    Trivial,
}

impl FromStr for HomogeneousStrategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(HomogeneousStrategy::Exact),
            "greedy" | "greedy-peel" => Ok(HomogeneousStrategy::GreedyPeel),
            "trivial" => Ok(HomogeneousStrategy::Trivial),
            _ => Err(Error::InvalidParameter(format!("unknown strategy {s:?}"))),
        }
    }
}

impl fmt::Display for HomogeneousStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HomogeneousStrategy::Exact => "exact",
            HomogeneousStrategy::GreedyPeel => "greedy",
            HomogeneousStrategy::Trivial => "trivial",
        })
    }
}

/// Finds an ε-stable set or ε-clique on at least `target` vertices.
///
/// The witness is stated in root ids of `g`. `Ok(None)` means the strategy
/// found nothing large enough; only for [`HomogeneousStrategy::Exact`] does
/// that prove no such set exists.
pub fn find_epsilon_homogeneous(
    g: &Graph,
    epsilon: Ratio,
    target: usize,
    strategy: HomogeneousStrategy,
) -> Result<Option<HomogeneousSetWitness>> {
    Ok(find_local(g, epsilon, target, strategy)?.map(|(kind, set)| {
        let w = homogeneous_witness(g, kind, set.into_vec(), epsilon);
        HomogeneousSetWitness {
            vertices: g.root_ids(w.vertices),
            ..w
        }
    }))
}

/// Same search, answering in local ids of `g`.
pub(crate) fn find_local(
    g: &Graph,
    epsilon: Ratio,
    target: usize,
    strategy: HomogeneousStrategy,
) -> Result<Option<(HomogeneousKind, VertexSet)>> {
    exact::check_unit("epsilon", epsilon)?;
    if target == 0 || target > g.n() {
        return Err(Error::InvalidParameter(format!(
            "target {target} not in 1..={}",
            g.n()
        )));
    }
    match strategy {
        HomogeneousStrategy::Exact => exact_search(g, epsilon, target, BOTH),
        HomogeneousStrategy::GreedyPeel => {
            let stable = greedy_peel(g, epsilon);
            let clique = greedy_peel(&g.complement(), epsilon);
            let best = if clique.len() > stable.len() {
                (HomogeneousKind::Clique, clique)
            } else {
                (HomogeneousKind::Stable, stable)
            };
            Ok((best.1.len() >= target).then_some(best))
        }
        HomogeneousStrategy::Trivial => {
            Ok((target <= 1).then(|| (HomogeneousKind::Stable, VertexSet::new([0]))))
        }
    }
}

const BOTH: &[HomogeneousKind] = &[HomogeneousKind::Stable, HomogeneousKind::Clique];

/// A largest ε-homogeneous set of the given kind, by exhaustive search
/// (`n <= 20`). Root ids.
pub fn largest_of_kind(g: &Graph, epsilon: Ratio, kind: HomogeneousKind) -> Result<HomogeneousSetWitness> {
    exact::check_unit("epsilon", epsilon)?;
    let (kind, set) = exact_search(g, epsilon, 1, &[kind])?.expect("one vertex is homogeneous");
    let w = homogeneous_witness(g, kind, set.into_vec(), epsilon);
    Ok(HomogeneousSetWitness {
        vertices: g.root_ids(w.vertices),
        ..w
    })
}

fn exact_search(
    g: &Graph,
    epsilon: Ratio,
    target: usize,
    kinds: &[HomogeneousKind],
) -> Result<Option<(HomogeneousKind, VertexSet)>> {
    let n = g.n();
    if n > EXACT_LIMIT {
        return Err(Error::ExactTooLarge { n, limit: EXACT_LIMIT });
    }
    let rows: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).fold(0u32, |m, u| m | 1 << u))
        .collect();
    let edges_in = |mask: u32| -> u64 {
        let mut twice = 0u32;
        let mut m = mask;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            twice += (rows[v] & mask).count_ones();
        }
        (twice / 2) as u64
    };
    for size in (target..=n).rev() {
        let pairs = exact::pairs(size);
        // Gosper's hack walks all `size`-subsets of 0..n in increasing order.
        let mut mask: u64 = (1u64 << size) - 1;
        while mask < 1u64 << n {
            let edges = edges_in(mask as u32);
            let kind = kinds.iter().copied().find(|k| match k {
                HomogeneousKind::Stable => exact::le_scaled(edges, epsilon, pairs),
                HomogeneousKind::Clique => exact::le_scaled(pairs - edges, epsilon, pairs),
            });
            if let Some(kind) = kind {
                let set = (0..n).filter(|&v| mask >> v & 1 == 1);
                return Ok(Some((kind, VertexSet::new(set))));
            }
            let low = mask & mask.wrapping_neg();
            let ripple = mask + low;
            mask = ripple | (((mask ^ ripple) >> 2) / low);
        }
    }
    Ok(None)
}

/// Deletes a maximum-degree vertex (smallest id on ties) until the
/// remaining set spans at most `ε·C(s,2)` edges.
fn greedy_peel(g: &Graph, epsilon: Ratio) -> VertexSet {
    let n = g.n();
    let mut alive = BitSet::full(n);
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut edges = g.edge_count() as u64;
    let mut size = n;
    while !exact::le_scaled(edges, epsilon, exact::pairs(size)) {
        let v = alive
            .iter()
            .max_by(|&a, &b| deg[a].cmp(&deg[b]).then(b.cmp(&a)))
            .expect("a set spanning edges is nonempty");
        alive.remove(v);
        size -= 1;
        edges -= deg[v] as u64;
        for u in g.neighbors(v) {
            if alive.contains(u) {
                deg[u] -= 1;
            }
        }
    }
    VertexSet::from(&alive)
}

/// Removes, in one pass, every vertex of `set` whose degree inside `set`
/// exceeds `2·ε·s` with `s = |set|`.
///
/// If `set` is ε-stable the result keeps at least `⌈s/2⌉` vertices, since
/// the average degree inside `set` is at most `ε·(s-1)`.
pub fn prune_high_degree(g: &Graph, set: &VertexSet, epsilon: Ratio) -> VertexSet {
    let s = set.len() as u64;
    let bits = set.to_bits(g.n());
    let twice = epsilon * 2;
    set.iter()
        .filter(|&v| exact::le_scaled(g.degree_within(v, &bits) as u64, twice, s))
        .collect()
}

/// `δ = 2^(-15·k·(log₂(1/ε))²)`, held symbolically so it never underflows.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FoxSudakovDelta {
    pub k: u64,
    pub epsilon: Ratio,
}

/// Builds δ for `k >= 1` and `0 < ε <= 1`.
pub fn fox_sudakov_delta(k: u64, epsilon: Ratio) -> Result<FoxSudakovDelta> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be >= 1".into()));
    }
    if *epsilon.numer() <= 0 {
        return Err(Error::InvalidParameter("epsilon must be > 0".into()));
    }
    exact::check_unit("epsilon", epsilon)?;
    Ok(FoxSudakovDelta { k, epsilon })
}

impl FoxSudakovDelta {
    fn inverse_epsilon(&self) -> Ratio {
        self.epsilon.recip()
    }

    /// `j` with `1/ε = 2^j`, when such an integer exists.
    pub fn exact_log2_inverse(&self) -> Option<u32> {
        let inv = self.inverse_epsilon();
        let (num, den) = (*inv.numer(), *inv.denom());
        (den == 1 && num > 0 && (num as u64).is_power_of_two()).then(|| (num as u64).trailing_zeros())
    }

    /// The base-2 exponent as an integer, when `1/ε` is a power of two.
    pub fn exact_exponent(&self) -> Option<i64> {
        self.exact_log2_inverse()
            .map(|j| -15 * self.k as i64 * (j as i64) * (j as i64))
    }

    pub fn exponent(&self) -> f64 {
        if let Some(e) = self.exact_exponent() {
            return e as f64;
        }
        let inv = self.inverse_epsilon();
        let l = (*inv.numer() as f64).log2() - (*inv.denom() as f64).log2();
        -15.0 * self.k as f64 * l * l
    }

    /// `2^exponent`; underflows to 0 for tiny ε.
    pub fn value(&self) -> f64 {
        self.exponent().exp2()
    }

    /// The exponent written out, e.g. `-75` or `-75*(log2(30))^2`.
    pub fn symbolic_exponent(&self) -> String {
        if let Some(e) = self.exact_exponent() {
            return e.to_string();
        }
        let inv = self.inverse_epsilon();
        let arg = if *inv.denom() == 1 {
            inv.numer().to_string()
        } else {
            exact::format_ratio(inv)
        };
        format!("-{}*(log2({arg}))^2", 15 * self.k)
    }

    /// `⌈coeff · δ · n⌉` for `0 <= coeff <= 1`. Exact when `1/ε` is a power
    /// of two; otherwise δ is irrational and the product is compared in log
    /// space, which is exact whenever it is below 1.
    pub fn ceil_mul(&self, coeff: Ratio, n: u64) -> u64 {
        if n == 0 || *coeff.numer() == 0 {
            return 0;
        }
        if let Some(e) = self.exact_exponent() {
            let j = (-e) as u32;
            if j <= 62 {
                let num = *coeff.numer() as i128 * n as i128;
                let den = (*coeff.denom() as i128) << j;
                return ((num + den - 1) / den) as u64;
            }
            if n < 1 << 62 {
                return 1;
            }
        }
        let lg = (*coeff.numer() as f64).log2() - (*coeff.denom() as f64).log2() + (n as f64).log2()
            + self.exponent();
        if lg < 0.0 {
            1
        } else {
            lg.exp2().ceil() as u64
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificates::verify_homogeneous;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    const ALL: [HomogeneousStrategy; 3] = [
        HomogeneousStrategy::Exact,
        HomogeneousStrategy::GreedyPeel,
        HomogeneousStrategy::Trivial,
    ];

    #[test]
    fn empty_graph_is_stable() {
        let g = Graph::new(10, &[]).unwrap();
        for s in [HomogeneousStrategy::Exact, HomogeneousStrategy::GreedyPeel] {
            let w = find_epsilon_homogeneous(&g, Ratio::from_integer(0), 10, s).unwrap().unwrap();
            assert_eq!(w.kind, HomogeneousKind::Stable);
            assert_eq!(w.len(), 10);
            assert_eq!(verify_homogeneous(&g, &w), Ok(()));
        }
    }

    #[test]
    fn complete_graph_is_a_clique() {
        let g = Graph::from_fn(10, |_, _| true).unwrap();
        for s in [HomogeneousStrategy::Exact, HomogeneousStrategy::GreedyPeel] {
            let w = find_epsilon_homogeneous(&g, Ratio::from_integer(0), 10, s).unwrap().unwrap();
            assert_eq!(w.kind, HomogeneousKind::Clique);
            assert_eq!(w.len(), 10);
            assert_eq!(verify_homogeneous(&g, &w), Ok(()));
        }
    }

    #[test]
    fn c5_stable_pair() {
        let g = cycle(5);
        let w = find_epsilon_homogeneous(&g, Ratio::from_integer(0), 2, HomogeneousStrategy::Exact)
            .unwrap()
            .unwrap();
        assert_eq!(w.len(), 2);
        assert_eq!(verify_homogeneous(&g, &w), Ok(()));
        // α(C5) = ω(C5) = 2.
        assert!(
            find_epsilon_homogeneous(&g, Ratio::from_integer(0), 3, HomogeneousStrategy::Exact)
                .unwrap()
                .is_none()
        );
    }

    #[test]
    fn trivial_is_a_single_vertex() {
        let g = cycle(5);
        let w = find_epsilon_homogeneous(&g, Ratio::new(1, 30), 1, HomogeneousStrategy::Trivial)
            .unwrap()
            .unwrap();
        assert_eq!(w.vertices, vec![0]);
        assert!(
            find_epsilon_homogeneous(&g, Ratio::new(1, 30), 2, HomogeneousStrategy::Trivial)
                .unwrap()
                .is_none()
        );
    }

    #[test]
    fn exact_rejects_large_graphs() {
        let g = Graph::new(21, &[]).unwrap();
        assert!(matches!(
            find_epsilon_homogeneous(&g, Ratio::new(1, 2), 1, HomogeneousStrategy::Exact),
            Err(Error::ExactTooLarge { n: 21, limit: 20 })
        ));
    }

    #[test]
    fn parameter_checks() {
        let g = cycle(5);
        for s in ALL {
            assert!(find_epsilon_homogeneous(&g, Ratio::new(3, 2), 1, s).is_err());
            assert!(find_epsilon_homogeneous(&g, Ratio::new(1, 2), 0, s).is_err());
            assert!(find_epsilon_homogeneous(&g, Ratio::new(1, 2), 6, s).is_err());
        }
    }

    #[test]
    fn greedy_ties_break_on_smallest_id() {
        // P3 0-1-2 plus an isolated vertex; 1 has the top degree and is peeled.
        let g = Graph::new(4, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(greedy_peel(&g, Ratio::from_integer(0)), VertexSet::new([0, 2, 3]));
        // C4: all degrees tie, vertex 0 goes first, then 2 (degree 2 left).
        assert_eq!(greedy_peel(&cycle(4), Ratio::from_integer(0)), VertexSet::new([1, 3]));
    }

    #[test]
    fn prune_keeps_sparse_triangle_set() {
        // s = 10, threshold 2εs = 2, triangle degrees are 2.
        let g = Graph::new(10, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let s = VertexSet::new(0..10);
        assert_eq!(prune_high_degree(&g, &s, Ratio::new(1, 10)), s);
    }

    #[test]
    fn prune_removes_star_center() {
        let g = Graph::new(10, &(1..10).map(|i| (0, i)).collect::<Vec<_>>()).unwrap();
        let s = VertexSet::new(0..10);
        assert_eq!(prune_high_degree(&g, &s, Ratio::new(1, 10)), VertexSet::new(1..10));
    }

    #[test]
    fn prune_with_half_keeps_everything() {
        let g = Graph::from_fn(7, |_, _| true).unwrap();
        let s = VertexSet::new([0, 2, 3, 6]);
        assert_eq!(prune_high_degree(&g, &s, Ratio::new(1, 2)), s);
    }

    #[test]
    fn delta_values() {
        let d = fox_sudakov_delta(5, Ratio::new(1, 2)).unwrap();
        assert_eq!(d.exact_exponent(), Some(-75));
        assert_eq!(d.symbolic_exponent(), "-75");
        assert_eq!(fox_sudakov_delta(1, Ratio::new(1, 2)).unwrap().exact_exponent(), Some(-15));
        let one = fox_sudakov_delta(7, Ratio::from_integer(1)).unwrap();
        assert_eq!(one.exact_exponent(), Some(0));
        assert_eq!(one.value(), 1.0);
        let d30 = fox_sudakov_delta(5, Ratio::new(1, 30)).unwrap();
        assert_eq!(d30.exact_exponent(), None);
        assert_eq!(d30.symbolic_exponent(), "-75*(log2(30))^2");
        assert!(fox_sudakov_delta(5, Ratio::from_integer(0)).is_err());
        assert!(fox_sudakov_delta(0, Ratio::new(1, 2)).is_err());
    }

    #[test]
    fn delta_ceil_mul() {
        let d = fox_sudakov_delta(1, Ratio::new(1, 2)).unwrap();
        // δ = 2^-15
        assert_eq!(d.ceil_mul(Ratio::from_integer(1), 1 << 15), 1);
        assert_eq!(d.ceil_mul(Ratio::from_integer(1), (1 << 15) + 1), 2);
        assert_eq!(d.ceil_mul(Ratio::new(1, 2), 1 << 16), 1);
        assert_eq!(d.ceil_mul(Ratio::from_integer(1), 0), 0);
        let tiny = fox_sudakov_delta(5, Ratio::new(1, 30)).unwrap();
        assert_eq!(tiny.ceil_mul(Ratio::from_integer(1), 1_000_000), 1);
    }
}
