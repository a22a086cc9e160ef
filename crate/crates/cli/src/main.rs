use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use tdkernel::graph::{read_graph, write_graph};
use tdkernel::kernel::{check_state, reduce};
use tdkernel::lift::lift_detailed;
use tdkernel::oracle::opt_ctds;
use tdkernel::{derive_params, verify_ctds, ExactKernelState, ExactParams, Graph, Profile, Rational, Scalar, VertexSet};
use tdkernel_cli::agreement::steiner_agreement;
use tdkernel_cli::experiment::{run_suite, suite, ExperimentConfig, SUITES};
use tdkernel_cli::{emit_report, generate, Family, Format, GeneratorSpec};

/// Default output directory for files written by `gen`, `kernelize` and `bench`.
const OUT_ENV: &str = "TDKERNEL_OUT";
const STEINER_SEED: u64 = 9;
const STEINER_CASES: usize = 200;

#[derive(Parser)]
#[command(name = "tdkernel", version, about = "Approximate kernel for connected treedepth deletion")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an instance.
    Gen(GenArgs),
    /// Reduce an instance; writes reduced.gr and state.json.
    Kernelize(KernelizeArgs),
    /// Lift a solution of the reduced graph back to the input.
    Lift(LiftArgs),
    /// Brute-force optimum on a small graph.
    Oracle(OracleArgs),
    /// Check a solution against a graph.
    Verify(VerifyArgs),
    /// Run an experiment suite and print the report.
    Bench(BenchArgs),
}

#[derive(Args)]
struct GenArgs {
    /// random-gnp, broom, subdivided-star, grid or component-soup.
    #[arg(long)]
    family: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    eta: usize,
    #[arg(long, default_value_t = 12)]
    n: usize,
    #[arg(long, default_value_t = 0.3)]
    density: f64,
    #[arg(long, default_value_t = 6)]
    branches: usize,
    #[arg(long, default_value_t = 2)]
    depth: usize,
    #[arg(long, default_value_t = 3)]
    rows: usize,
    #[arg(long, default_value_t = 3)]
    cols: usize,
    #[arg(long, default_value_t = 2)]
    classes: usize,
    #[arg(long, default_value_t = 5)]
    per_class: usize,
    #[arg(long, default_value_t = 0)]
    bridges: usize,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ParamArgs {
    #[arg(long)]
    eta: usize,
    #[arg(long, default_value = "1")]
    eps: String,
    #[arg(long)]
    k: usize,
    /// Custom constants (all three required); the guarantee is void.
    #[arg(long, requires_all = ["lambda", "t"])]
    d: Option<u64>,
    #[arg(long)]
    lambda: Option<u64>,
    #[arg(long)]
    t: Option<u64>,
    /// Force the size gate on or off.
    #[arg(long)]
    size_gate: Option<bool>,
}

impl ParamArgs {
    fn params(&self) -> Result<ExactParams, String> {
        let eps = Rational::parse_scalar(&self.eps).ok_or_else(|| format!("invalid eps `{}`", self.eps))?;
        let profile = match (self.d, self.lambda, self.t) {
            (Some(d), Some(lambda), Some(t)) => Profile::Custom { d, lambda, t },
            _ => Profile::Paper,
        };
        let p = derive_params(self.eta, eps, self.k, profile).map_err(|e| e.to_string())?;
        Ok(match self.size_gate {
            Some(on) => p.with_size_gate(on),
            None => p,
        })
    }
}

#[derive(Args)]
struct KernelizeArgs {
    graph: PathBuf,
    #[command(flatten)]
    params: ParamArgs,
    /// Output directory; defaults to $TDKERNEL_OUT, then the current directory.
    #[arg(long)]
    out_dir: Option<PathBuf>,
}

#[derive(Args)]
struct LiftArgs {
    #[arg(long)]
    state: PathBuf,
    /// File with space-separated reduced-graph ids on one line.
    #[arg(long)]
    solution: PathBuf,
}

#[derive(Args)]
struct OracleArgs {
    graph: PathBuf,
    #[arg(long)]
    eta: usize,
    #[arg(long)]
    k: usize,
}

#[derive(Args)]
struct VerifyArgs {
    graph: PathBuf,
    #[arg(long)]
    eta: usize,
    #[arg(long)]
    solution: PathBuf,
    /// Also require at most this many vertices.
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Args)]
struct BenchArgs {
    /// Built-in suite: safeness-small, paper-constants, rule-triggers or steiner-oracle.
    #[arg(long, default_value = "rule-triggers", conflicts_with = "config")]
    suite: String,
    /// JSON file holding a list of experiment configurations.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Also write the report to this file (relative to $TDKERNEL_OUT).
    #[arg(long)]
    out: Option<PathBuf>,
}

type Outcome = Result<bool, String>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(a) => cmd_gen(a),
        Command::Kernelize(a) => cmd_kernelize(a),
        Command::Lift(a) => cmd_lift(a),
        Command::Oracle(a) => cmd_oracle(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Bench(a) => cmd_bench(a),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn out_path(p: &Path) -> PathBuf {
    match std::env::var_os(OUT_ENV) {
        Some(dir) if p.is_relative() => Path::new(&dir).join(p),
        _ => p.to_path_buf(),
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), String> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
    }
    std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))
}

fn read_file(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_graph(path: &Path) -> Result<Graph, String> {
    read_graph(&read_file(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_set(path: &Path) -> Result<VertexSet, String> {
    let text = read_file(path)?;
    let line = text.lines().find(|l| !l.trim().starts_with('#')).unwrap_or("");
    VertexSet::parse_line(line).map_err(|e| format!("{}: {e}", path.display()))
}

fn cmd_gen(a: GenArgs) -> Outcome {
    let family = match a.family.as_str() {
        "random-gnp" | "gnp" => Family::RandomGnp { n: a.n, density: a.density },
        "broom" => Family::Broom { branches: a.branches, depth: a.depth },
        "subdivided-star" => Family::SubdividedStar { branches: a.branches, depth: a.depth },
        "grid" => Family::Grid { rows: a.rows, cols: a.cols },
        "component-soup" => Family::ComponentSoup { classes: a.classes, per_class: a.per_class, bridges: a.bridges },
        other => return Err(format!("unknown family `{other}`")),
    };
    let g = generate(&GeneratorSpec { family, seed: a.seed }, a.eta).map_err(|e| e.to_string())?;
    let text = write_graph(&g);
    match a.out {
        Some(p) => write_file(&out_path(&p), &text)?,
        None => print!("{text}"),
    }
    Ok(true)
}

fn cmd_kernelize(a: KernelizeArgs) -> Outcome {
    let g = load_graph(&a.graph)?;
    let params = a.params.params()?;
    let state = reduce(&g, &params).map_err(|e| e.to_string())?;
    let dir = a
        .out_dir
        .or_else(|| std::env::var_os(OUT_ENV).map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("."));
    write_file(&dir.join("reduced.gr"), &write_graph(&state.reduced))?;
    let json = serde_json::to_string_pretty(&state).map_err(|e| e.to_string())?;
    write_file(&dir.join("state.json"), &json)?;
    let c = state.counts();
    println!("params: {params}");
    println!("outcome: {:?}", state.outcome);
    println!("n: {} -> {}", g.n(), state.reduced.n());
    println!("k: {} -> {}", params.k, state.k_reduced);
    println!("H: {}  M: {}  N: {}", state.h.len(), state.marked.len(), state.connectors.len());
    println!("rules fired: 1={} 2={} 3={} 4={}", c.rule1, c.rule2, c.rule3, c.rule4);
    let errors = check_state(&state);
    for e in &errors {
        println!("invariant violated: {e}");
    }
    Ok(errors.is_empty())
}

fn cmd_lift(a: LiftArgs) -> Outcome {
    let state: ExactKernelState = serde_json::from_str(&read_file(&a.state)?).map_err(|e| e.to_string())?;
    let s = load_set(&a.solution)?;
    let report = lift_detailed(&state, &s);
    println!("kind: {}", report.solution.kind);
    println!("value: {}", report.solution.value);
    println!("vertices: {}", report.solution.vertices);
    println!("route: {:?}", report.route);
    Ok(true)
}

fn cmd_oracle(a: OracleArgs) -> Outcome {
    let g = load_graph(&a.graph)?;
    let r = opt_ctds(&g, a.k, a.eta, false).map_err(|e| e.to_string())?;
    println!("opt: {}", r.opt_value);
    match &r.witness {
        Some(w) => println!("witness: {w}"),
        None => println!("witness: none (no connected deletion set of size <= {})", a.k),
    }
    println!("optimal sets: {}", r.optimal_count);
    Ok(true)
}

fn cmd_verify(a: VerifyArgs) -> Outcome {
    let g = load_graph(&a.graph)?;
    let s = load_set(&a.solution)?;
    let ok = verify_ctds(&g, &s, a.eta).map_err(|e| e.to_string())?;
    let within = a.k.map_or(true, |k| s.len() <= k);
    println!("connected deletion set: {ok}");
    if let Some(k) = a.k {
        println!("size {} <= {k}: {within}", s.len());
    }
    Ok(ok && within)
}

fn cmd_bench(a: BenchArgs) -> Outcome {
    if a.config.is_none() && a.suite == "steiner-oracle" {
        let tally = steiner_agreement(STEINER_SEED, STEINER_CASES);
        let text = format!("steiner-oracle: dreyfus-wagner vs enumeration agreement {tally}\n");
        print!("{text}");
        if let Some(p) = a.out {
            write_file(&out_path(&p), &text)?;
        }
        return Ok(tally.all_agree());
    }
    let configs = match &a.config {
        Some(p) => serde_json::from_str::<Vec<ExperimentConfig>>(&read_file(p)?).map_err(|e| e.to_string())?,
        None => suite(&a.suite).map_err(|e| format!("{e}; also steiner-oracle; known: {}", SUITES.join(", ")))?,
    };
    let report = run_suite(&configs);
    let text = emit_report(&report, a.format);
    print!("{text}");
    if let Some(p) = a.out {
        write_file(&out_path(&p), &text)?;
    }
    Ok(report.all_pass())
}
