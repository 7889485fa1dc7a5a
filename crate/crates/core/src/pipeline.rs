//! End-to-end extraction for graphs excluding `P_k` and co-`P_k`.
//!
//! [`extract_linear_bipartite`] runs four stages on an `n`-vertex graph:
//!
//! 1. find an ε-stable set or ε-clique `S` on at least `⌈δn⌉` vertices;
//!    for an ε-clique, continue in the complement;
//! 2. drop the vertices of `S` with more than `2ε|S|` neighbours in `S`,
//!    leaving `S′`; set `D = ⌊2ε|S|⌋ + 1` and `T = ⌈c|S′|⌉`;
//! 3. split a disconnected `G[S′]` into two sides of `T`, or run the
//!    path/pair extractor on it;
//! 4. report an empty pair (flipped to complete if complemented) or, if the
//!    extractor walked an induced path on `k` vertices, that path as a `P_k`
//!    (co-`P_k` if complemented) certificate.
//!
//! With `ε = c = 1/(6k)` the extractor's path bound `1/(2(2ε + c))` is
//! exactly `k`, so on a member of the class the path branch cannot win once
//! `n` is large; at desk scale the stages can fall short, in which case a
//! one-vertex pair is reported and tagged as such.

use crate::certificates::{
    homogeneous_witness, BipartitePairWitness, HomogeneousKind, HomogeneousSetWitness, PairKind,
    PatternEmbedding, Witness,
};
use crate::error::{Error, Result};
use crate::exact::{self, Ratio};
use crate::extractor::{self, Dichotomy, ExtractorParams, Step};
use crate::graph::Graph;
use crate::homogeneous::{self, fox_sudakov_delta, FoxSudakovDelta, HomogeneousStrategy};
use crate::patterns::{self, path_graph, Freeness};
use crate::ramsey::{self, BipartiteOracle, CographOutcome, OracleAnswer, P4FreeOutcome};

/// Largest graph on which the brute-force pattern pre-check runs by default.
pub const PATTERN_PRECHECK_LIMIT: usize = 40;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PipelineConstants {
    pub k: usize,
    pub epsilon: Ratio,
    pub c: Ratio,
    pub delta: FoxSudakovDelta,
}

/// `ε = c = 1/(6k)` and `δ` for that `ε`.
pub fn choose_constants(k: usize) -> Result<PipelineConstants> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("k = {k}, need k >= 2")));
    }
    let epsilon = Ratio::new(1, 6 * k as i64);
    Ok(PipelineConstants {
        k,
        epsilon,
        c: epsilon,
        delta: fox_sudakov_delta(k as u64, epsilon)?,
    })
}

impl PipelineConstants {
    /// `1/(2(2ε + c))`.
    pub fn path_bound(&self) -> Ratio {
        (Ratio::from_integer(2) * (self.epsilon * 2 + self.c)).recip()
    }

    /// `c_k = c·δ/2` is kept as `(c/2)·δ`; this is the rational factor.
    pub fn c_k_coefficient(&self) -> Ratio {
        self.c / 2
    }

    pub fn log2_c_k(&self) -> f64 {
        let r = self.c_k_coefficient();
        (*r.numer() as f64).log2() - (*r.denom() as f64).log2() + self.delta.exponent()
    }

    /// `c_k` written out, e.g. `1/60 * 2^(-75*(log2(30))^2)`.
    pub fn c_k_symbolic(&self) -> String {
        format!(
            "{} * 2^({})",
            exact::format_ratio(self.c_k_coefficient()),
            self.delta.symbolic_exponent()
        )
    }

    /// `⌈δn⌉`.
    pub fn homogeneous_target(&self, n: usize) -> usize {
        self.delta.ceil_mul(Ratio::from_integer(1), n as u64) as usize
    }

    /// `⌈c_k·n⌉`, the side length the pipeline guarantees.
    pub fn linear_side(&self, n: usize) -> usize {
        self.delta.ceil_mul(self.c_k_coefficient(), n as u64) as usize
    }

    /// `c′` for the pair constant `c_k`: `1 / log₂(1/c_k)`.
    pub fn c_prime(&self) -> f64 {
        -1.0 / self.log2_c_k()
    }

    /// `log₂` of the smallest `n` with `⌈δn⌉ >= 2` (and `⌈c_k·n⌉ >= 1`).
    pub fn n_min_log2(&self) -> f64 {
        -self.delta.exponent()
    }

    /// That `n` itself, when it fits in a `u64`.
    pub fn n_min(&self) -> Option<u64> {
        let e = self.delta.exponent();
        if let Some(x) = self.delta.exact_exponent() {
            return (-x < 63).then(|| (1u64 << -x) + 1);
        }
        (-e < 52.0).then(|| (-e).exp2().floor() as u64 + 1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PipelineOptions {
    /// Run the brute-force `P_k` / co-`P_k` search first on graphs with at
    /// most this many vertices (0 disables it).
    pub precheck_limit: usize,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions {
            precheck_limit: PATTERN_PRECHECK_LIMIT,
        }
    }
}

impl PipelineOptions {
    pub fn without_precheck() -> Self {
        PipelineOptions { precheck_limit: 0 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    BipartiteWitness,
    PatternCertificate,
    TrivialWitness,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::BipartiteWitness => "bipartite-witness",
            Outcome::PatternCertificate => "pattern-certificate",
            Outcome::TrivialWitness => "trivial-witness",
        }
    }
}

/// Which guarantee the report's witness carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GuaranteeTier {
    /// Stage 1 reached `⌈δn⌉`, so both sides have at least `⌈c_k·n⌉`
    /// vertices.
    Linear { side: usize },
    /// An induced `P_k` or co-`P_k`.
    Forbidden,
    /// One-vertex sides only.
    Fallback,
}

/// How stage 3 treated `G[S′]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    Connected,
    ComponentSplit,
    LargestComponent,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Trace {
    /// `Some(found)` if the pattern pre-check ran.
    pub precheck: Option<bool>,
    pub homogeneous_target: usize,
    /// Kind and size of the stage-1 set `S`.
    pub homogeneous: Option<(HomogeneousKind, usize)>,
    /// `|S′|` after pruning.
    pub pruned: Option<usize>,
    pub side_target: Option<usize>,
    pub degree_bound: Option<usize>,
    /// Component sizes of `G[S′]`.
    pub components: Vec<usize>,
    pub route: Option<Route>,
    pub extractor: Vec<Step>,
    /// Length of the extractor's path, when it returned one.
    pub path_len: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct ExtractionReport {
    pub n: usize,
    pub outcome: Outcome,
    pub witness: Witness,
    pub constants: PipelineConstants,
    pub tier: GuaranteeTier,
    pub complemented: bool,
    pub trace: Trace,
}

/// [`extract_linear_bipartite_with`] under default options.
pub fn extract_linear_bipartite(
    g: &Graph,
    k: usize,
    strategy: HomogeneousStrategy,
) -> Result<ExtractionReport> {
    extract_linear_bipartite_with(g, k, strategy, PipelineOptions::default())
}

/// Empty/complete linear pair or forbidden-pattern certificate for `g`,
/// `n >= 2`. Witness ids are root ids of `g`.
pub fn extract_linear_bipartite_with(
    g: &Graph,
    k: usize,
    strategy: HomogeneousStrategy,
    opts: PipelineOptions,
) -> Result<ExtractionReport> {
    let n = g.n();
    if n < 2 {
        return Err(Error::InvalidParameter(format!("pipeline needs n >= 2, got {n}")));
    }
    let constants = choose_constants(k)?;
    let mut trace = Trace::default();
    let report = |outcome, witness, tier, complemented, trace| ExtractionReport {
        n,
        outcome,
        witness,
        constants,
        tier,
        complemented,
        trace,
    };

    if n <= opts.precheck_limit {
        let freeness = patterns::is_pk_copk_free(g, k)?;
        trace.precheck = Some(!freeness.is_free());
        if let Freeness::Certificate(e) = freeness {
            return Ok(report(
                Outcome::PatternCertificate,
                Witness::Embedding(e),
                GuaranteeTier::Forbidden,
                false,
                trace,
            ));
        }
    }

    // Stage 1.
    let target = constants.homogeneous_target(n).clamp(1, n);
    trace.homogeneous_target = target;
    let Some((kind, set)) = homogeneous::find_local(g, constants.epsilon, target, strategy)? else {
        return Ok(report(
            Outcome::TrivialWitness,
            trivial_witness(g),
            GuaranteeTier::Fallback,
            false,
            trace,
        ));
    };
    trace.homogeneous = Some((kind, set.len()));
    let complemented = kind == HomogeneousKind::Clique;
    let work = if complemented { g.complement() } else { g.clone() };

    // Stage 2.
    let s = set.len() as u64;
    let pruned = homogeneous::prune_high_degree(&work, &set, constants.epsilon);
    let d = exact::floor_mul(constants.epsilon * 2, s) as usize + 1;
    let t = exact::ceil_mul(constants.c, pruned.len() as u64) as usize;
    trace.pruned = Some(pruned.len());
    trace.degree_bound = Some(d);
    trace.side_target = Some(t);
    let params = ExtractorParams::new(t, d)?;
    let h = work.induced(&pruned)?;

    // Stage 3.
    let comps = h.components();
    trace.components = comps.iter().map(|c| c.len()).collect();
    let dichotomy = if comps.len() == 1 {
        trace.route = Some(Route::Connected);
        run_extractor(&h, params, &mut trace)?
    } else if let Some((a, b)) = extractor::try_split(&comps, t) {
        trace.route = Some(Route::ComponentSplit);
        Dichotomy::EmptyPair(BipartitePairWitness {
            kind: PairKind::Empty,
            x: h.root_ids(a.iter()),
            y: h.root_ids(b.iter()),
        })
    } else {
        trace.route = Some(Route::LargestComponent);
        run_extractor(&h.induced(&comps[0])?, params, &mut trace)?
    };

    // Stage 4.
    match dichotomy {
        Dichotomy::Path(p) if p.len() >= k => {
            let map = p.vertices[..k].to_vec();
            let embedding = if complemented {
                PatternEmbedding {
                    name: format!("coP{k}"),
                    pattern: path_graph(k).complement(),
                    map,
                }
            } else {
                PatternEmbedding {
                    name: format!("P{k}"),
                    pattern: path_graph(k),
                    map,
                }
            };
            Ok(report(
                Outcome::PatternCertificate,
                Witness::Embedding(embedding),
                GuaranteeTier::Forbidden,
                complemented,
                trace,
            ))
        }
        Dichotomy::Path(_) => Ok(report(
            Outcome::TrivialWitness,
            trivial_witness(g),
            GuaranteeTier::Fallback,
            complemented,
            trace,
        )),
        Dichotomy::EmptyPair(w) => {
            let w = if complemented { w.flipped() } else { w };
            let side = constants.linear_side(n);
            // T = ⌈c|S′|⌉ >= ⌈c·δn/2⌉ because |S′| >= |S|/2 >= δn/2.
            debug_assert!(w.side() >= side);
            Ok(report(
                Outcome::BipartiteWitness,
                Witness::Bipartite(w),
                GuaranteeTier::Linear { side },
                complemented,
                trace,
            ))
        }
    }
}

fn run_extractor(h: &Graph, params: ExtractorParams, trace: &mut Trace) -> Result<Dichotomy> {
    let ex = extractor::path_or_empty_bipartite(h, 0, params)?;
    trace.extractor = ex.trace;
    if let Dichotomy::Path(p) = &ex.outcome {
        trace.path_len = Some(p.len());
    }
    Ok(ex.outcome)
}

/// Vertices 0 and 1 as a one-vertex complete or empty pair.
fn trivial_witness(g: &Graph) -> Witness {
    let kind = if g.has_edge(0, 1) {
        PairKind::Complete
    } else {
        PairKind::Empty
    };
    Witness::Bipartite(BipartitePairWitness {
        kind,
        x: vec![g.root_id(0)],
        y: vec![g.root_id(1)],
    })
}

/// Pair oracle backed by [`extract_linear_bipartite_with`].
#[derive(Clone, Copy, Debug)]
pub struct PipelineOracle {
    pub constants: PipelineConstants,
    pub strategy: HomogeneousStrategy,
    pub options: PipelineOptions,
}

impl BipartiteOracle for PipelineOracle {
    fn side_target(&self, n: usize) -> usize {
        self.constants.linear_side(n)
    }

    fn is_base(&self, n: usize) -> bool {
        n < 2
    }

    fn log2_inverse_c(&self) -> f64 {
        -self.constants.log2_c_k()
    }

    fn find_pair(&self, g: &Graph) -> Result<OracleAnswer> {
        let r = extract_linear_bipartite_with(g, self.constants.k, self.strategy, self.options)?;
        Ok(match r.witness {
            Witness::Bipartite(w) => OracleAnswer::Pair(w),
            Witness::Embedding(e) => OracleAnswer::Certificate(e),
            other => unreachable!("pipeline produced {}", other.type_name()),
        })
    }
}

#[derive(Clone, Debug)]
pub enum EhOutcome {
    Homogeneous(HomogeneousSetWitness),
    Certificate(PatternEmbedding),
}

#[derive(Clone, Debug)]
pub struct EhReport {
    pub n: usize,
    pub outcome: EhOutcome,
    pub constants: PipelineConstants,
    /// Size of the `P4`-free set the recursion produced.
    pub cograph_size: Option<usize>,
    pub depth: Option<usize>,
    /// `n^{c′/2}` for the pipeline's `c_k`.
    pub bound: f64,
}

/// A clique or stable set (ε = 0), or a `P_k` / co-`P_k` certificate.
pub fn eh_homogeneous(g: &Graph, k: usize, strategy: HomogeneousStrategy) -> Result<EhReport> {
    eh_homogeneous_with(g, k, strategy, PipelineOptions::default())
}

pub fn eh_homogeneous_with(
    g: &Graph,
    k: usize,
    strategy: HomogeneousStrategy,
    opts: PipelineOptions,
) -> Result<EhReport> {
    let constants = choose_constants(k)?;
    let n = g.n();
    let bound = (n as f64).powf(constants.c_prime() / 2.0);
    let report = |outcome, cograph_size, depth| EhReport {
        n,
        outcome,
        constants,
        cograph_size,
        depth,
        bound,
    };
    // The class is hereditary, so one check at the top covers every level.
    if n <= opts.precheck_limit {
        if let Freeness::Certificate(e) = patterns::is_pk_copk_free(g, k)? {
            return Ok(report(EhOutcome::Certificate(e), None, None));
        }
    }
    let oracle = PipelineOracle {
        constants,
        strategy,
        options: PipelineOptions::without_precheck(),
    };
    let extraction = match ramsey::p4free_extract(g, &oracle)? {
        P4FreeOutcome::Extracted(e) => e,
        P4FreeOutcome::Certificate(e) => return Ok(report(EhOutcome::Certificate(e), None, None)),
    };
    let h = g.induced(&extraction.set)?;
    let CographOutcome::Cograph { stable, clique, .. } = ramsey::cograph_alpha_omega(&h) else {
        unreachable!("the recursion only joins or separates P4-free halves")
    };
    let (kind, set) = if clique.len() > stable.len() {
        (HomogeneousKind::Clique, clique)
    } else {
        (HomogeneousKind::Stable, stable)
    };
    let w = homogeneous_witness(&h, kind, set.into_vec(), Ratio::from_integer(0));
    let w = HomogeneousSetWitness {
        vertices: h.root_ids(w.vertices.iter().copied()),
        ..w
    };
    Ok(report(
        EhOutcome::Homogeneous(w),
        Some(extraction.set.len()),
        Some(extraction.depth),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificates::verify_homogeneous;

    #[test]
    fn constants_for_5_and_2() {
        let c5 = choose_constants(5).unwrap();
        assert_eq!(c5.epsilon, Ratio::new(1, 30));
        assert_eq!(c5.c, Ratio::new(1, 30));
        assert_eq!(c5.path_bound(), Ratio::from_integer(5));
        let c2 = choose_constants(2).unwrap();
        assert_eq!(c2.epsilon, Ratio::new(1, 12));
        assert_eq!(c2.path_bound(), Ratio::from_integer(2));
        assert!(choose_constants(1).is_err());
    }

    #[test]
    fn epsilon_decreases_with_k() {
        for k in 2..50 {
            assert!(choose_constants(k + 1).unwrap().epsilon < choose_constants(k).unwrap().epsilon);
        }
    }

    #[test]
    fn desk_scale_targets_are_one() {
        let c = choose_constants(5).unwrap();
        assert_eq!(c.homogeneous_target(40), 1);
        assert_eq!(c.linear_side(40), 1);
        assert_eq!(c.n_min(), None);
        assert!(c.n_min_log2() > 1000.0);
        assert!(c.c_prime() > 0.0 && c.c_prime() < 1e-3);
        assert_eq!(c.c_k_symbolic(), "1/60 * 2^(-75*(log2(30))^2)");
    }

    #[test]
    fn rejects_tiny_graphs() {
        let g = Graph::new(1, &[]).unwrap();
        assert!(extract_linear_bipartite(&g, 5, HomogeneousStrategy::GreedyPeel).is_err());
    }

    #[test]
    fn complete_graph_gives_complete_pair() {
        let g = Graph::from_fn(10, |_, _| true).unwrap();
        let r = extract_linear_bipartite(&g, 5, HomogeneousStrategy::Exact).unwrap();
        assert_eq!(r.outcome, Outcome::BipartiteWitness);
        assert!(r.complemented);
        assert_eq!(r.trace.route, Some(Route::ComponentSplit));
        let Witness::Bipartite(w) = &r.witness else { panic!() };
        assert_eq!(w.kind, PairKind::Complete);
        assert_eq!(w.x, vec![0]);
        assert_eq!(w.y, (1..10).collect::<Vec<_>>());
        assert_eq!(r.witness.verify(&g), Ok(()));
    }

    #[test]
    fn edgeless_graph_clique_of_everything() {
        let g = Graph::new(12, &[]).unwrap();
        let r = eh_homogeneous(&g, 4, HomogeneousStrategy::GreedyPeel).unwrap();
        let EhOutcome::Homogeneous(w) = r.outcome else { panic!() };
        assert_eq!(w.kind, HomogeneousKind::Stable);
        assert_eq!(w.vertices, (0..12).collect::<Vec<_>>());
    }

    #[test]
    fn complete_graph_eh_clique() {
        let g = Graph::from_fn(10, |_, _| true).unwrap();
        let r = eh_homogeneous(&g, 5, HomogeneousStrategy::GreedyPeel).unwrap();
        let EhOutcome::Homogeneous(w) = r.outcome else { panic!() };
        assert_eq!(w.kind, HomogeneousKind::Clique);
        assert_eq!(w.len(), 10);
        assert_eq!(verify_homogeneous(&g, &w), Ok(()));
    }

    #[test]
    fn p5_is_certified() {
        let g = path_graph(5);
        let r = extract_linear_bipartite(&g, 5, HomogeneousStrategy::GreedyPeel).unwrap();
        assert_eq!(r.outcome, Outcome::PatternCertificate);
        assert_eq!(r.trace.precheck, Some(true));
        assert_eq!(r.witness.verify(&g), Ok(()));
    }

    #[test]
    fn staged_path_certificate_without_precheck() {
        // A long path is sparse: stage 1 keeps a large near-stable set, and
        // the extractor walks it only if it stays connected. Use a long path
        // on which the ε-stable set is the whole graph.
        let n = 60;
        let g = Graph::new(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>()).unwrap();
        let r = extract_linear_bipartite_with(
            &g,
            2,
            HomogeneousStrategy::GreedyPeel,
            PipelineOptions::without_precheck(),
        )
        .unwrap();
        assert_eq!(r.trace.homogeneous, Some((HomogeneousKind::Stable, n)));
        assert_eq!(r.outcome, Outcome::PatternCertificate);
        assert_eq!(r.witness.verify(&g), Ok(()));
    }

    #[test]
    fn seeded_cographs() {
        use crate::generate::{generate, Family, GeneratorSpec};
        for stream in 0..10 {
            let spec = |n| GeneratorSpec { family: Family::Cograph, n, seed: 40, stream };
            let g = generate(&spec(40)).unwrap();
            let r = extract_linear_bipartite(&g, 4, HomogeneousStrategy::GreedyPeel).unwrap();
            assert_eq!(r.outcome, Outcome::BipartiteWitness);
            assert_eq!(r.witness.verify(&g), Ok(()));

            let g = generate(&spec(64)).unwrap();
            let r = eh_homogeneous(&g, 4, HomogeneousStrategy::GreedyPeel).unwrap();
            let EhOutcome::Homogeneous(w) = r.outcome else { panic!("cographs are P4-free") };
            assert!(w.len() >= 8, "stream {stream}: {}", w.len());
            assert_eq!(verify_homogeneous(&g, &w), Ok(()));
        }
    }
}
