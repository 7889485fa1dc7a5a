use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ehcert::certificates::Witness;
use ehcert::exact::{format_ratio, parse_ratio};
use ehcert::extractor::{path_or_empty_bipartite, Dichotomy, ExtractorParams};
use ehcert::generate::{generate, Family, GeneratorSpec};
use ehcert::homogeneous::{find_epsilon_homogeneous, fox_sudakov_delta, HomogeneousStrategy};
use ehcert::io::json::{
    constants_to_value, eh_report_to_value, parse_witness, report_to_value, witness_to_value,
};
use ehcert::io::{encode_graph6, parse_graph, write_edge_list, GraphFormat};
use ehcert::patterns::{contains_induced, is_pk_copk_free, universality_check, Freeness, Universality};
use ehcert::pipeline::{choose_constants, eh_homogeneous, extract_linear_bipartite};
use ehcert::ramsey::{cograph_alpha_omega, exponent_for, p4free_extract, CographOutcome, ExactOracle, P4FreeOutcome};
use ehcert::{Graph, Ratio};

mod bench;

#[derive(Parser)]
#[command(name = "ehcert", version, about = "Certified homogeneous pairs, cliques and stable sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph.
    Gen(GenArgs),
    /// Pattern queries: P_k / co-P_k freeness, induced copies, universality.
    Check(CheckArgs),
    /// Run a single algorithm.
    #[command(subcommand)]
    Extract(ExtractCommand),
    /// Linear bipartite witness (or, with --eh, a clique or stable set).
    Pipeline(PipelineArgs),
    /// Check a witness file against a graph. Exit 0 iff accepted.
    Verify(VerifyArgs),
    /// Print the constants used for a given k.
    Constants {
        #[arg(long)]
        k: usize,
    },
    /// Run the pipeline over a generated batch and print CSV.
    Bench(bench::BenchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
pub enum FormatArg {
    Graph6,
    Edges,
}

impl From<FormatArg> for GraphFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Graph6 => GraphFormat::Graph6,
            FormatArg::Edges => GraphFormat::Edges,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
pub enum FamilyArg {
    Gnp,
    Cograph,
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Friendship,
    CkRejection,
}

#[derive(Args, Clone)]
pub struct FamilyOpts {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Edge probability as `num/den` (gnp, ck-rejection).
    #[arg(long, default_value = "1/2")]
    p: String,
    /// Left side size (complete-bipartite); defaults to n/2.
    #[arg(long)]
    left: Option<usize>,
    /// Excluded path length (ck-rejection).
    #[arg(long, default_value_t = 5)]
    ck: usize,
    /// Maximum draws (ck-rejection).
    #[arg(long, default_value_t = 100_000)]
    budget: u64,
}

impl FamilyOpts {
    pub fn family(&self) -> Result<Family, Failure> {
        let p = parse_ratio(&self.p)?;
        Ok(match self.family {
            FamilyArg::Gnp => Family::Gnp { p },
            FamilyArg::Cograph => Family::Cograph,
            FamilyArg::Path => Family::Path,
            FamilyArg::Cycle => Family::Cycle,
            FamilyArg::Complete => Family::Complete,
            FamilyArg::CompleteBipartite => Family::CompleteBipartite {
                left: self.left.unwrap_or(self.n / 2),
            },
            FamilyArg::Friendship => Family::Friendship,
            FamilyArg::CkRejection => Family::CkRejection {
                k: self.ck,
                p,
                budget: self.budget,
            },
        })
    }
}

#[derive(Args)]
struct GenArgs {
    #[command(flatten)]
    family: FamilyOpts,
    #[arg(long, default_value_t = 0)]
    stream: u64,
    #[arg(long, value_enum, default_value = "graph6")]
    format: FormatArg,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct InputArgs {
    /// Graph file (graph6 or edge list).
    #[arg(long)]
    input: PathBuf,
    /// Input format; guessed from the first line if omitted.
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
}

impl InputArgs {
    fn load(&self) -> Result<Graph, Failure> {
        load_graph(&self.input, self.format)
    }
}

#[derive(Args)]
struct CheckArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Look for an induced P_k, then co-P_k.
    #[arg(long, conflicts_with_all = ["pattern", "universal"])]
    k: Option<usize>,
    /// Look for an induced copy of this graph.
    #[arg(long)]
    pattern: Option<PathBuf>,
    /// Check that every labelled graph on this many vertices is induced.
    #[arg(long)]
    universal: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum ExtractCommand {
    /// Induced path from --start, or an empty pair with sides >= T.
    PathOrBipartite {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        start: usize,
        #[arg(long = "T")]
        t: usize,
        #[arg(long = "D")]
        d: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// P4-free induced subgraph via the exhaustive pair oracle (n <= 32).
    P4free {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value = "1/4")]
        c: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Maximum clique and stable set of a cograph, or an induced P4.
    CographRamsey {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// An epsilon-stable set or epsilon-clique.
    Homogeneous {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value = "0")]
        epsilon: String,
        #[arg(long, default_value_t = 1)]
        target: usize,
        #[arg(long, default_value = "greedy")]
        strategy: HomogeneousStrategy,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct PipelineArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long)]
    k: usize,
    #[arg(long, default_value = "greedy")]
    strategy: HomogeneousStrategy,
    /// Go on to a clique or stable set.
    #[arg(long)]
    eh: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Witness JSON, bare or inside a report.
    #[arg(long)]
    witness: PathBuf,
}

/// Ends a command: `Usage` exits 2, `Rejected` exits 1.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Rejected(String),
}

impl From<ehcert::Error> for Failure {
    fn from(e: ehcert::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn load_graph(path: &Path, format: Option<FormatArg>) -> Result<Graph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Ok(parse_graph(&text, format.map(Into::into))?)
}

fn emit(value: &Value, out: Option<&Path>) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).expect("JSON values serialize");
    emit_text(&(text + "\n"), out)
}

pub fn emit_text(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Gen(a) => {
            let spec = GeneratorSpec {
                family: a.family.family()?,
                n: a.family.n,
                seed: a.family.seed,
                stream: a.stream,
            };
            let g = generate(&spec)?;
            let text = match a.format {
                FormatArg::Graph6 => encode_graph6(&g)? + "\n",
                FormatArg::Edges => write_edge_list(&g),
            };
            emit_text(&text, a.out.as_deref())
        }
        Command::Check(a) => check(a),
        Command::Extract(e) => extract(e),
        Command::Pipeline(a) => {
            let g = a.input.load()?;
            let value = if a.eh {
                eh_report_to_value(&eh_homogeneous(&g, a.k, a.strategy)?)?
            } else {
                report_to_value(&extract_linear_bipartite(&g, a.k, a.strategy)?)?
            };
            emit(&value, a.out.as_deref())
        }
        Command::Verify(a) => {
            let g = a.input.load()?;
            let text = fs::read_to_string(&a.witness)
                .map_err(|e| Failure::Usage(format!("{}: {e}", a.witness.display())))?;
            let w = parse_witness(&text)?;
            match w.verify(&g) {
                Ok(()) => {
                    println!("accepted: {} witness", w.type_name());
                    Ok(())
                }
                Err(v) => Err(Failure::Rejected(format!("rejected: {v}"))),
            }
        }
        Command::Constants { k } => {
            let c = choose_constants(k)?;
            let mut v = constants_to_value(&c);
            let half = fox_sudakov_delta(k as u64, Ratio::new(1, 2))?;
            v["delta_at_half_log2"] = json!(half.symbolic_exponent());
            v["n_min_log2"] = json!(c.n_min_log2());
            println!("k = {k}");
            println!("epsilon = c = {}", format_ratio(c.epsilon));
            println!("path bound 1/(2(2eps+c)) = {}", format_ratio(c.path_bound()));
            println!("delta = 2^({})", c.delta.symbolic_exponent());
            println!("c_k = {}", c.c_k_symbolic());
            println!("log2 c_k = {}", c.log2_c_k());
            println!("c' = {}", c.c_prime());
            emit(&v, None)
        }
        Command::Bench(a) => bench::run(a),
    }
}

fn check(a: CheckArgs) -> Result<(), Failure> {
    let g = a.input.load()?;
    let value = if let Some(k) = a.k {
        match is_pk_copk_free(&g, k)? {
            Freeness::Free => json!({"free": true, "k": k}),
            Freeness::Certificate(e) => {
                json!({"free": false, "k": k, "witness": witness_to_value(&Witness::Embedding(e))?})
            }
        }
    } else if let Some(p) = &a.pattern {
        let h = load_graph(p, None)?;
        match contains_induced(&g, &h)?.embedding {
            Some(e) => json!({"found": true, "witness": witness_to_value(&Witness::Embedding(e))?}),
            None => json!({"found": false}),
        }
    } else if let Some(k) = a.universal {
        match universality_check(&g, k)? {
            Universality::Universal => json!({"universal": true, "k": k}),
            Universality::Missing(h) => json!({"universal": false, "k": k, "missing_graph6": encode_graph6(&h)?}),
        }
    } else {
        return Err(Failure::Usage("check needs one of --k, --pattern, --universal".into()));
    };
    emit(&value, a.out.as_deref())
}

fn extract(e: ExtractCommand) -> Result<(), Failure> {
    match e {
        ExtractCommand::PathOrBipartite { input, start, t, d, out } => {
            let g = input.load()?;
            let ex = path_or_empty_bipartite(&g, start, ExtractorParams::new(t, d)?)?;
            let w = match ex.outcome {
                Dichotomy::Path(p) => Witness::Path(p),
                Dichotomy::EmptyPair(w) => Witness::Bipartite(w),
            };
            let steps: Vec<String> = ex.trace.iter().map(|s| format!("{:?}", s.kind)).collect();
            emit(&json!({"steps": steps, "witness": witness_to_value(&w)?}), out.as_deref())
        }
        ExtractCommand::P4free { input, c, out } => {
            let g = input.load()?;
            let c = parse_ratio(&c)?;
            let exponent = exponent_for(c)?;
            let value = match p4free_extract(&g, &ExactOracle::new(c)?)? {
                P4FreeOutcome::Extracted(x) => json!({
                    "vertices": g.root_ids(x.set.iter()),
                    "size": x.set.len(),
                    "depth": x.depth,
                    "oracle_calls": x.oracle_calls,
                    "c": format_ratio(c),
                    "c_prime": exponent.value,
                    "bound": (g.n() as f64).powf(exponent.value) / 2.0,
                }),
                P4FreeOutcome::Certificate(e) => json!({"witness": witness_to_value(&Witness::Embedding(e))?}),
            };
            emit(&value, out.as_deref())
        }
        ExtractCommand::CographRamsey { input, out } => {
            let g = input.load()?;
            let value = match cograph_alpha_omega(&g) {
                CographOutcome::Cograph { stable, clique, .. } => json!({
                    "cograph": true,
                    "alpha": stable.len(),
                    "omega": clique.len(),
                    "stable": g.root_ids(stable.iter()),
                    "clique": g.root_ids(clique.iter()),
                }),
                CographOutcome::Obstruction(e) => {
                    json!({"cograph": false, "witness": witness_to_value(&Witness::Embedding(e))?})
                }
            };
            emit(&value, out.as_deref())
        }
        ExtractCommand::Homogeneous { input, epsilon, target, strategy, out } => {
            let g = input.load()?;
            let eps = parse_ratio(&epsilon)?;
            match find_epsilon_homogeneous(&g, eps, target, strategy)? {
                Some(w) => emit(&json!({"witness": witness_to_value(&Witness::Homogeneous(w))?}), out.as_deref()),
                None => emit(&json!({"found": false, "target": target}), out.as_deref()),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Rejected(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
