use clap::{Args, Parser, Subcommand, ValueEnum};
use geothick::{
    audit_trials, bipartite_bounds, bipartite_layout, bounds_table_csv, bounds_table_text,
    complete_layout, convex_layout, geo_lower_bound, geo_upper_bound, improve_drawing,
    lower_source_for, render_split_svgs, render_svg, search_placement, verify, GraphSpec,
    LayeredDrawing, RenderStyle, SearchConfig, SearchStatus,
};
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const EXIT_OK: u8 = 0;
const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(
    name = "geothick",
    version,
    about = "Construct, verify, bound, audit, search, and render layered straight-line drawings"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a drawing: kN (complete), kA,B (bipartite), convex:N (book pages)
    Construct(ConstructArgs),
    /// Check a drawing document; exit 0 iff it verifies
    Verify(VerifyArgs),
    /// Lower/upper layer bounds for one graph
    Bounds(BoundsArgs),
    /// Bounds table for complete graphs up to a maximum size
    Table(TableArgs),
    /// Audit coverage budgets and forced-edge certificates on random 15-point sets
    AuditK15(AuditArgs),
    /// Anneal vertex placements toward a target layer count
    Search(SearchArgs),
    /// Render a drawing document to SVG
    Render(RenderArgs),
}

#[derive(Args)]
struct ConstructArgs {
    /// kN | kA,B | convex:N
    #[arg(long)]
    graph: String,
    /// Output file (stdout if omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Drawing JSON path, or - for stdin
    drawing: String,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct BoundsTarget {
    /// Complete graph size
    #[arg(long)]
    n: Option<usize>,
    /// Complete bipartite class sizes A,B
    #[arg(long)]
    bipartite: Option<String>,
}

#[derive(Args)]
struct BoundsArgs {
    #[command(flatten)]
    target: BoundsTarget,
    #[arg(long, value_enum, default_value_t = TextOrJson::Text)]
    format: TextOrJson,
}

#[derive(Copy, Clone, ValueEnum)]
enum TextOrJson {
    Text,
    Json,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long)]
    max: usize,
    #[arg(long, value_enum, default_value_t = TableFormat::Text)]
    format: TableFormat,
}

#[derive(Copy, Clone, ValueEnum)]
enum TableFormat {
    Text,
    Csv,
}

#[derive(Args)]
struct AuditArgs {
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    workers: usize,
}

#[derive(Args)]
struct SearchArgs {
    /// kN | kA,B
    #[arg(long)]
    graph: String,
    /// Target layer count
    #[arg(long)]
    layers: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Total annealing steps across all restarts
    #[arg(long, default_value_t = 1_000_000)]
    budget: u64,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Warm-start drawing JSON to improve instead of fresh restarts
    #[arg(long)]
    improve: Option<PathBuf>,
    /// Output file for the found drawing (stdout if omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct RenderArgs {
    /// Drawing JSON path, or - for stdin
    drawing: String,
    /// Output SVG path
    #[arg(long)]
    out: PathBuf,
    /// Write one SVG per layer (suffix -layerK before the extension)
    #[arg(long, default_value_t = false)]
    split_layers: bool,
    #[arg(long, default_value_t = 800)]
    width: u32,
    #[arg(long, default_value_t = 800)]
    height: u32,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = std::panic::catch_unwind(|| match cli.cmd {
        Cmd::Construct(a) => run_construct(a),
        Cmd::Verify(a) => run_verify(a),
        Cmd::Bounds(a) => run_bounds(a),
        Cmd::Table(a) => run_table(a),
        Cmd::AuditK15(a) => run_audit(a),
        Cmd::Search(a) => run_search(a),
        Cmd::Render(a) => run_render(a),
    })
    .unwrap_or_else(|cause| {
        let msg = cause
            .downcast_ref::<&str>()
            .map(|s| s.to_string())
            .or_else(|| cause.downcast_ref::<String>().cloned())
            .unwrap_or_else(|| "unexpected panic".into());
        internal(&msg)
    });
    ExitCode::from(code)
}

enum GraphArg {
    Complete(usize),
    Bipartite(usize, usize),
    Convex(usize),
}

fn parse_graph(s: &str) -> Result<GraphArg, String> {
    if let Some(rest) = s.strip_prefix("convex:") {
        let n: usize = rest.parse().map_err(|_| format!("bad convex size {rest:?}"))?;
        return Ok(GraphArg::Convex(n));
    }
    let body = s
        .strip_prefix('k')
        .or_else(|| s.strip_prefix('K'))
        .ok_or_else(|| format!("graph {s:?} must look like kN, kA,B, or convex:N"))?;
    if let Some((a, b)) = body.split_once(',') {
        let a: usize = a.parse().map_err(|_| format!("bad class size {a:?}"))?;
        let b: usize = b.parse().map_err(|_| format!("bad class size {b:?}"))?;
        Ok(GraphArg::Bipartite(a, b))
    } else {
        let n: usize = body.parse().map_err(|_| format!("bad graph size {body:?}"))?;
        Ok(GraphArg::Complete(n))
    }
}

fn usage(msg: &str) -> u8 {
    eprintln!("error: {msg}");
    EXIT_USAGE
}

fn internal(msg: &str) -> u8 {
    eprintln!("internal error: {msg}");
    EXIT_INTERNAL
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), u8> {
    match out {
        Some(path) => std::fs::write(path, content).map_err(|e| {
            eprintln!("error: cannot write {}: {e}", path.display());
            EXIT_USAGE
        }),
        None => {
            println!("{content}");
            Ok(())
        }
    }
}

fn run_construct(a: ConstructArgs) -> u8 {
    let graph = match parse_graph(&a.graph) {
        Ok(g) => g,
        Err(e) => return usage(&e),
    };
    let built = match graph {
        GraphArg::Complete(n) => complete_layout(n),
        GraphArg::Bipartite(x, y) => bipartite_layout(x, y),
        GraphArg::Convex(n) => convex_layout(n),
    };
    match built {
        Ok(d) => match emit(&a.out, &d.to_json()) {
            Ok(()) => EXIT_OK,
            Err(code) => code,
        },
        Err(e) => usage(&format!("cannot construct {}: {e}", a.graph)),
    }
}

fn read_drawing(source: &str) -> Result<LayeredDrawing, u8> {
    let raw = if source == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).map_err(|e| {
            eprintln!("error: cannot read stdin: {e}");
            EXIT_USAGE
        })?;
        buf
    } else {
        std::fs::read_to_string(source).map_err(|e| {
            eprintln!("error: cannot read {source}: {e}");
            EXIT_USAGE
        })?
    };
    LayeredDrawing::from_json_lenient(&raw).map_err(|e| {
        eprintln!("error: unreadable drawing document: {e}");
        EXIT_FAILED
    })
}

fn run_verify(a: VerifyArgs) -> u8 {
    let drawing = match read_drawing(&a.drawing) {
        Ok(d) => d,
        Err(code) => return code,
    };
    let report = verify(&drawing);
    println!("{}", report.to_json());
    if report.valid {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}

fn run_bounds(a: BoundsArgs) -> u8 {
    if let Some(n) = a.target.n {
        if n == 0 {
            return usage("--n must be at least 1");
        }
        let (lower, upper) = (geo_lower_bound(n), geo_upper_bound(n));
        let source = lower_source_for(n);
        match a.format {
            TextOrJson::Text => {
                println!("n={n} lower={lower} upper={upper} lower_source={source}")
            }
            TextOrJson::Json => println!(
                "{}",
                serde_json::json!({
                    "n": n,
                    "lower": lower,
                    "upper": upper,
                    "lower_source": source.to_string(),
                    "upper_source": "two_ring",
                })
            ),
        }
        return EXIT_OK;
    }
    let spec = a.target.bipartite.expect("clap group guarantees one target");
    let Some((x, y)) = spec.split_once(',') else {
        return usage(&format!("--bipartite expects A,B, got {spec:?}"));
    };
    let (Ok(x), Ok(y)) = (x.parse::<usize>(), y.parse::<usize>()) else {
        return usage(&format!("--bipartite expects integers, got {spec:?}"));
    };
    match bipartite_bounds(x, y) {
        Ok(b) => {
            match a.format {
                TextOrJson::Text => println!(
                    "a={} b={} lower={} upper={} lower_source={}",
                    b.a, b.b, b.lower, b.upper, b.lower_source
                ),
                TextOrJson::Json => println!(
                    "{}",
                    serde_json::json!({
                        "a": b.a,
                        "b": b.b,
                        "lower": b.lower,
                        "upper": b.upper,
                        "lower_source": b.lower_source.to_string(),
                    })
                ),
            }
            EXIT_OK
        }
        Err(e) => usage(&format!("bounds for k{x},{y}: {e}")),
    }
}

fn run_table(a: TableArgs) -> u8 {
    if a.max == 0 {
        return usage("--max must be at least 1");
    }
    let rendered = match a.format {
        TableFormat::Text => bounds_table_text(a.max),
        TableFormat::Csv => bounds_table_csv(a.max),
    };
    print!("{rendered}");
    EXIT_OK
}

fn run_audit(a: AuditArgs) -> u8 {
    if a.trials == 0 {
        return usage("--trials must be at least 1");
    }
    let summary = audit_trials(a.trials, a.seed, a.workers);
    println!(
        "{}",
        serde_json::to_string_pretty(&summary).expect("summary serializes")
    );
    if summary.all_within_budget {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}

fn run_search(a: SearchArgs) -> u8 {
    let graph = match parse_graph(&a.graph) {
        Ok(GraphArg::Complete(n)) => GraphSpec::complete(n),
        Ok(GraphArg::Bipartite(x, y)) => GraphSpec::bipartite(x, y),
        Ok(GraphArg::Convex(_)) => return usage("search works on kN or kA,B graphs"),
        Err(e) => return usage(&e),
    };
    let mut config = SearchConfig::for_target(a.layers, a.seed);
    config.steps_per_restart = ((a.budget / config.max_restarts as u64).max(1)) as usize;
    config.workers = a.workers.max(1);
    let outcome = if let Some(path) = &a.improve {
        let seed_drawing = match read_drawing(&path.display().to_string()) {
            Ok(d) => d,
            Err(code) => return code,
        };
        improve_drawing(&seed_drawing, &config)
    } else {
        search_placement(&graph, &config)
    };
    match outcome {
        Ok(out) => {
            eprintln!(
                "restarts={} steps={} verifier_calls={}",
                out.stats.restarts, out.stats.steps, out.stats.verifier_calls
            );
            match out.status {
                SearchStatus::Found(d) => {
                    eprintln!("found: {} layers", d.layer_count());
                    match emit(&a.out, &d.to_json()) {
                        Ok(()) => EXIT_OK,
                        Err(code) => code,
                    }
                }
                SearchStatus::Exhausted { best_layers_seen, best_drawing } => {
                    eprintln!(
                        "exhausted: best seen {best_layers_seen} layers (target {})",
                        a.layers
                    );
                    match emit(&a.out, &best_drawing.to_json()) {
                        Ok(()) => EXIT_FAILED,
                        Err(code) => code,
                    }
                }
            }
        }
        Err(e) => usage(&format!("search: {e}")),
    }
}

fn split_path(base: &Path, layer: usize) -> PathBuf {
    let stem = base.file_stem().and_then(|s| s.to_str()).unwrap_or("layer");
    let ext = base.extension().and_then(|s| s.to_str()).unwrap_or("svg");
    base.with_file_name(format!("{stem}-layer{layer}.{ext}"))
}

fn run_render(a: RenderArgs) -> u8 {
    let drawing = match read_drawing(&a.drawing) {
        Ok(d) => d,
        Err(code) => return code,
    };
    let style = RenderStyle {
        width: a.width,
        height: a.height,
        ..RenderStyle::default()
    };
    if a.split_layers {
        for (layer, svg) in render_split_svgs(&drawing, &style).into_iter().enumerate() {
            let path = split_path(&a.out, layer);
            if let Err(e) = std::fs::write(&path, svg) {
                return usage(&format!("cannot write {}: {e}", path.display()));
            }
        }
        EXIT_OK
    } else {
        match std::fs::write(&a.out, render_svg(&drawing, &style)) {
            Ok(()) => EXIT_OK,
            Err(e) => usage(&format!("cannot write {}: {e}", a.out.display())),
        }
    }
}
