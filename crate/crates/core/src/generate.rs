//! Seeded graph generators.
//!
//! Randomness comes from ChaCha8 (`rand_chacha::ChaCha8Rng`), seeded with
//! `seed_from_u64(seed)` and switched to `set_stream(stream)`, so a corpus
//! of graphs uses one seed and the graph index as the stream. A pair
//! `(u, v)`, `u < v`, visited in row-major order, is an edge of `G(n, p)`
//! iff `(x * den) >> 64 < num` for the next 64-bit output `x` and
//! `p = num/den`.

use rand::seq::SliceRandom;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exact::{check_unit, Ratio};
use crate::graph::Graph;
use crate::patterns::is_pk_copk_free;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Gnp { p: Ratio },
    /// Random binary cotree: each internal node is a disjoint union or a join
    /// with probability 1/2.
    Cograph,
    Path,
    Cycle,
    Complete,
    CompleteBipartite { left: usize },
    /// `n = 2m + 1`: `m` triangles sharing vertex 0.
    Friendship,
    /// `G(n, p)` draws until one is `{P_k, co-P_k}`-free.
    CkRejection { k: usize, p: Ratio, budget: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub family: Family,
    pub n: usize,
    pub seed: u64,
    pub stream: u64,
}

pub fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

pub fn generate(spec: &GeneratorSpec) -> Result<Graph> {
    let n = spec.n;
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut rng = rng_for(spec.seed, spec.stream);
    match spec.family {
        Family::Gnp { p } => gnp(n, p, &mut rng),
        Family::Cograph => Ok(random_cograph(n, &mut rng)),
        Family::Path => Graph::from_fn(n, |u, v| v == u + 1),
        Family::Cycle => {
            if n < 3 {
                return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
            }
            Graph::from_fn(n, |u, v| v == u + 1 || (u == 0 && v == n - 1))
        }
        Family::Complete => Graph::from_fn(n, |_, _| true),
        Family::CompleteBipartite { left } => {
            if left == 0 || left >= n {
                return Err(Error::InvalidParameter(format!(
                    "complete bipartite needs 0 < left < n, got left = {left}, n = {n}"
                )));
            }
            Graph::from_fn(n, |u, v| u < left && v >= left)
        }
        Family::Friendship => {
            if n < 3 || n.is_multiple_of(2) {
                return Err(Error::InvalidParameter(format!("friendship graph needs odd n >= 3, got {n}")));
            }
            Graph::from_fn(n, |u, v| u == 0 || (u % 2 == 1 && v == u + 1))
        }
        Family::CkRejection { k, p, budget } => {
            Ok(rejection_sample_ck_with(n, k, p, budget, &mut rng)?.graph)
        }
    }
}

pub fn gnp(n: usize, p: Ratio, rng: &mut impl RngCore) -> Result<Graph> {
    check_unit("p", p)?;
    let (num, den) = (*p.numer() as u128, *p.denom() as u128);
    Graph::from_fn(n, |_, _| (rng.next_u64() as u128 * den) >> 64 < num)
}

/// A uniformly shuffled labelling of a random binary cotree on `n` leaves;
/// `P4`-free by construction.
pub fn random_cograph(n: usize, rng: &mut impl Rng) -> Graph {
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(rng);
    let mut edges = Vec::new();
    cotree(&labels, rng, &mut edges);
    Graph::new(n, &edges).expect("cotree labels are in range")
}

fn cotree(leaves: &[usize], rng: &mut impl Rng, edges: &mut Vec<(usize, usize)>) {
    if leaves.len() < 2 {
        return;
    }
    let cut = rng.gen_range(1..leaves.len());
    let join = rng.gen_bool(0.5);
    let (a, b) = leaves.split_at(cut);
    cotree(a, rng, edges);
    cotree(b, rng, edges);
    if join {
        for &u in a {
            edges.extend(b.iter().map(|&v| (u, v)));
        }
    }
}

/// A graph certified `{P_k, co-P_k}`-free, with the number of draws it took.
#[derive(Clone, Debug)]
pub struct Certified {
    pub graph: Graph,
    pub k: usize,
    pub draws: u64,
}

pub fn rejection_sample_ck(n: usize, k: usize, p: Ratio, seed: u64, budget: u64) -> Result<Certified> {
    rejection_sample_ck_with(n, k, p, budget, &mut rng_for(seed, 0))
}

fn rejection_sample_ck_with(
    n: usize,
    k: usize,
    p: Ratio,
    budget: u64,
    rng: &mut impl RngCore,
) -> Result<Certified> {
    check_unit("p", p)?;
    if k < 2 {
        return Err(Error::InvalidParameter(format!("k must be at least 2, got {k}")));
    }
    for draw in 1..=budget {
        let g = gnp(n, p, rng)?;
        if is_pk_copk_free(&g, k)?.is_free() {
            return Ok(Certified { graph: g, k, draws: draw });
        }
    }
    Err(Error::BudgetExhausted { draws: budget })
}
