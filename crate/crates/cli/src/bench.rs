//! `bench`: one CSV row per generated graph, in index order.
//!
//! Columns: `index,n,edges,outcome,witness_type,x_size,y_size,witness_size,bound,verified,wall_ms`.
//! `x_size`/`y_size` are empty unless the witness is a pair. `bound` is the
//! guaranteed pair side `⌈c_k·n⌉`, or with `--eh` the size bound `n^{c′/2}`.

use std::fmt::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::Args;
use rayon::prelude::*;

use ehcert::certificates::Witness;
use ehcert::generate::{generate, GeneratorSpec};
use ehcert::homogeneous::HomogeneousStrategy;
use ehcert::pipeline::{choose_constants, eh_homogeneous, extract_linear_bipartite, EhOutcome};

use crate::{emit_text, Failure, FamilyOpts};

pub const HEADER: &str = "index,n,edges,outcome,witness_type,x_size,y_size,witness_size,bound,verified,wall_ms";

#[derive(Args)]
pub struct BenchArgs {
    #[command(flatten)]
    family: FamilyOpts,
    #[arg(long)]
    count: u64,
    #[arg(long)]
    k: usize,
    #[arg(long, default_value = "greedy")]
    strategy: HomogeneousStrategy,
    /// Run the clique / stable set pipeline instead.
    #[arg(long)]
    eh: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

struct Row {
    n: usize,
    edges: usize,
    outcome: String,
    witness: Witness,
    bound: String,
    verified: bool,
    wall_ms: f64,
}

pub fn run(a: BenchArgs) -> Result<(), Failure> {
    let family = a.family.family()?;
    let constants = choose_constants(a.k)?;
    let rows: Vec<Result<Row, Failure>> = (0..a.count)
        .into_par_iter()
        .map(|index| {
            let spec = GeneratorSpec {
                family,
                n: a.family.n,
                seed: a.family.seed,
                stream: index,
            };
            let g = generate(&spec)?;
            let start = Instant::now();
            let (outcome, witness, bound) = if a.eh {
                let r = eh_homogeneous(&g, a.k, a.strategy)?;
                let (name, w) = match r.outcome {
                    EhOutcome::Homogeneous(h) => ("homogeneous", Witness::Homogeneous(h)),
                    EhOutcome::Certificate(e) => ("pattern-certificate", Witness::Embedding(e)),
                };
                (name.to_string(), w, format!("{:.6}", r.bound))
            } else {
                let r = extract_linear_bipartite(&g, a.k, a.strategy)?;
                (r.outcome.as_str().to_string(), r.witness, constants.linear_side(g.n()).to_string())
            };
            let wall_ms = start.elapsed().as_secs_f64() * 1e3;
            Ok(Row {
                n: g.n(),
                edges: g.edge_count(),
                outcome,
                verified: witness.verify(&g).is_ok(),
                witness,
                bound,
                wall_ms,
            })
        })
        .collect();

    let mut csv = String::from(HEADER);
    csv.push('\n');
    let mut all_verified = true;
    for (index, row) in rows.into_iter().enumerate() {
        let row = row?;
        all_verified &= row.verified;
        let (kind, x, y, size) = match &row.witness {
            Witness::Bipartite(b) => ("bipartite", b.x.len().to_string(), b.y.len().to_string(), b.x.len() + b.y.len()),
            Witness::Path(p) => ("path", String::new(), String::new(), p.len()),
            Witness::Homogeneous(h) => ("homogeneous", String::new(), String::new(), h.len()),
            Witness::Embedding(e) => ("embedding", String::new(), String::new(), e.map.len()),
        };
        writeln!(
            csv,
            "{index},{},{},{},{kind},{x},{y},{size},{},{},{:.3}",
            row.n, row.edges, row.outcome, row.bound, row.verified, row.wall_ms
        )
        .unwrap();
    }
    emit_text(&csv, a.out.as_deref())?;
    if all_verified {
        Ok(())
    } else {
        Err(Failure::Rejected("some witnesses failed verification".into()))
    }
}
