//! The `nbwalk` command line.
//!
//! [`run`] parses arguments, writes the report to `out` and diagnostics to
//! `err`, and returns the process exit code: `0` when every check passes,
//! `1` when some report contains a violated check, `2` for usage, parse and
//! I/O errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::bounds::{ahl_bound, audit_graph, hoory_bounds, moore_bound};
use crate::entropy::{
    conditional_entropy_chain, estimate_entropy, jensen_certificates, simulate_arc_marginals,
    ChainRecord, JensenRecord, StartMode, CHAIN_TOLERANCE,
};
use crate::graph::generators::Family;
use crate::graph::{from_edge_list, from_graph6, girth, to_directed, to_edge_list, to_graph6, Girth, Graph};
use crate::walks::count_table;
use crate::{json, Rational};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

/// Default seed of the Monte-Carlo cross-check.
pub const DEFAULT_SEED: u64 = 0x5eed;
/// Default number of independent runs of the Monte-Carlo cross-check.
pub const DEFAULT_SAMPLES: u64 = 1_000_000;

#[derive(Debug, Parser)]
#[command(name = "nbwalk", version, about = "Non-returning walks, girth bounds and entropy certificates")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Include exact marginals and per-arc tables.
    #[arg(long, global = true)]
    full: bool,
    /// Input format; defaults to graph6 for `.g6` files and edge list otherwise.
    #[arg(long, global = true, value_enum)]
    format_in: Option<InputFormat>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    G6,
    Edges,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate the Moore, average-degree and bipartite bounds.
    Audit(Source),
    /// Count non-returning walks.
    Walks {
        #[command(flatten)]
        source: Source,
        /// Longest walk counted; defaults to `floor(girth / 2)`.
        #[arg(long)]
        horizon: Option<usize>,
        #[arg(long, conflicts_with = "from_arc")]
        from_vertex: Option<usize>,
        #[arg(long)]
        from_arc: Option<usize>,
    },
    /// Audit the entropy chain of the walk process.
    Entropy {
        #[command(flatten)]
        source: Source,
        /// Walk length; defaults to `floor(girth / 2)`.
        #[arg(long)]
        horizon: Option<usize>,
        #[arg(long, value_parser = clap::value_parser!(StartMode), default_value = "pi")]
        mode: StartMode,
        /// Add a seeded Monte-Carlo cross-check.
        #[arg(long)]
        mc: bool,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: u64,
    },
    /// Evaluate a bound from degree parameters and a girth.
    Bounds {
        /// Minimum degree (Moore bound).
        #[arg(long, group = "degree")]
        delta: Option<u64>,
        /// Average degree (average-degree bound), e.g. `14/5` or `2.8`.
        #[arg(long, group = "degree", value_parser = parse_rational)]
        dbar: Option<Rational>,
        /// Left side average degree (bipartite bounds).
        #[arg(long, requires = "dr", value_parser = parse_rational)]
        dl: Option<Rational>,
        #[arg(long, requires = "dl", value_parser = parse_rational)]
        dr: Option<Rational>,
        #[arg(long)]
        girth: u32,
    },
    /// Write a named graph.
    Gen {
        family: String,
        #[arg(long, value_enum, default_value_t = InputFormat::G6)]
        out_format: InputFormat,
    },
}

#[derive(Debug, Args)]
struct Source {
    /// Graph file, or a directory of graph files.
    #[arg(required_unless_present = "gen", conflicts_with = "gen")]
    input: Option<PathBuf>,
    /// Named family, e.g. `petersen`, `cycle:7`, `complete_bipartite:2,3`.
    #[arg(long)]
    gen: Option<String>,
}

/// Parses `a/b`, an integer or a finite decimal into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let bad = || format!("`{s}` is not a rational number");
    let int = |t: &str| t.trim().parse::<BigInt>().map_err(|_| bad());
    if let Some((n, d)) = s.split_once('/') {
        let d = int(d)?;
        if d == BigInt::from(0) {
            return Err(format!("`{s}` has zero denominator"));
        }
        return Ok(Rational::new(int(n)?, d));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = whole.trim_start().starts_with('-');
        let scale = BigInt::from(10).pow(frac.len() as u32);
        let w = if whole.is_empty() || whole == "-" { BigInt::from(0) } else { int(whole)? };
        let f = int(frac)?;
        let num = if negative { w * &scale - f } else { w * &scale + f };
        return Ok(Rational::new(num, scale));
    }
    Ok(Rational::from_integer(int(s)?))
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

struct Output {
    body: String,
    violated: bool,
}

/// Runs the command line on `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli) {
        Ok(output) => {
            if out.write_all(output.body.as_bytes()).is_err() {
                return EXIT_ERROR;
            }
            if output.violated {
                EXIT_VIOLATION
            } else {
                EXIT_OK
            }
        }
        Err(Failure(msg)) => {
            let _ = writeln!(err, "nbwalk: {msg}");
            EXIT_ERROR
        }
    }
}

fn execute(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Audit(source) => {
            let graphs = load(source, cli.format_in)?;
            let reports: Vec<_> = graphs.iter().map(|(id, g)| audit_graph(g).with_id(id.clone())).collect();
            let violated = reports.iter().any(|r| r.has_violation());
            let body = render(cli.format, &reports, |r| r.to_json(), |r| r.to_text());
            Ok(Output { body, violated })
        }
        Command::Walks {
            source,
            horizon,
            from_vertex,
            from_arc,
        } => {
            let graphs = load(source, cli.format_in)?;
            let items = graphs
                .iter()
                .map(|(id, g)| walks_report(id, g, *horizon, *from_vertex, *from_arc, cli.full))
                .collect::<Result<Vec<_>, _>>()?;
            let body = render(cli.format, &items, |r| r.json.clone(), |r| r.text.clone());
            Ok(Output { body, violated: false })
        }
        Command::Entropy {
            source,
            horizon,
            mode,
            mc,
            seed,
            samples,
        } => {
            let graphs = load(source, cli.format_in)?;
            let mc = mc.then_some((*seed, *samples));
            let items = graphs
                .iter()
                .map(|(id, g)| entropy_report(id, g, *horizon, *mode, mc, cli.full))
                .collect::<Result<Vec<_>, _>>()?;
            let violated = items.iter().any(|r| r.violated);
            let body = render(cli.format, &items, |r| r.json.clone(), |r| r.text.clone());
            Ok(Output { body, violated })
        }
        Command::Bounds {
            delta,
            dbar,
            dl,
            dr,
            girth,
        } => bounds_report(cli.format, *delta, dbar.as_ref(), dl.as_ref().zip(dr.as_ref()), *girth),
        Command::Gen { family, out_format } => {
            let g = family.parse::<Family>()?.generate()?;
            let body = match out_format {
                InputFormat::G6 => {
                    let mut s = String::from_utf8(to_graph6(&g)?).expect("graph6 is ASCII");
                    s.push('\n');
                    s
                }
                InputFormat::Edges => to_edge_list(&g),
            };
            Ok(Output { body, violated: false })
        }
    }
}

fn render<T>(format: OutputFormat, items: &[T], to_json: impl Fn(&T) -> Value, to_text: impl Fn(&T) -> String) -> String {
    match format {
        OutputFormat::Json => {
            let value = match items {
                [one] => to_json(one),
                many => Value::Array(many.iter().map(to_json).collect()),
            };
            let mut s = serde_json::to_string_pretty(&value).expect("JSON values serialize");
            s.push('\n');
            s
        }
        OutputFormat::Text => items.iter().map(to_text).collect::<Vec<_>>().join("\n"),
    }
}

fn load(source: &Source, format_in: Option<InputFormat>) -> Result<Vec<(String, Graph)>, Failure> {
    if let Some(spec) = &source.gen {
        let family: Family = spec.parse()?;
        return Ok(vec![(family.to_string(), family.generate()?)]);
    }
    let path = source.input.as_ref().expect("clap enforces one source");
    if path.is_dir() {
        let mut files: Vec<PathBuf> = std::fs::read_dir(path)
            .map_err(|e| format!("{}: {e}", path.display()))?
            .filter_map(|entry| entry.ok().map(|e| e.path()))
            .filter(|p| p.is_file() && !p.file_name().is_some_and(|n| n.to_string_lossy().starts_with('.')))
            .collect();
        files.sort();
        if files.is_empty() {
            return Err(Failure(format!("{}: no graph files", path.display())));
        }
        return files.iter().map(|p| load_file(p, format_in)).collect();
    }
    Ok(vec![load_file(path, format_in)?])
}

fn load_file(path: &Path, format_in: Option<InputFormat>) -> Result<(String, Graph), Failure> {
    let bytes = std::fs::read(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let format = format_in.unwrap_or(if path.extension().is_some_and(|e| e == "g6") {
        InputFormat::G6
    } else {
        InputFormat::Edges
    });
    let graph = match format {
        InputFormat::G6 => from_graph6(&bytes),
        InputFormat::Edges => {
            let text = std::str::from_utf8(&bytes).map_err(|_| format!("{}: not UTF-8", path.display()))?;
            from_edge_list(text)
        }
    }
    .map_err(|e| format!("{}: {e}", path.display()))?;
    let id = path.file_name().map_or_else(|| path.display().to_string(), |n| n.to_string_lossy().into_owned());
    Ok((id, graph))
}

fn default_horizon(g: &Graph, horizon: Option<usize>) -> Result<usize, Failure> {
    match (horizon, girth(g)) {
        (Some(h), _) => Ok(h),
        (None, Girth::Finite(x)) => Ok((x / 2) as usize),
        (None, Girth::Infinite) => Err(Failure("girth is infinite; pass --horizon".into())),
    }
}

struct Item {
    json: Value,
    text: String,
    violated: bool,
}

fn walks_report(
    id: &str,
    g: &Graph,
    horizon: Option<usize>,
    from_vertex: Option<usize>,
    from_arc: Option<usize>,
    full: bool,
) -> Result<Item, Failure> {
    let h = default_horizon(g, horizon)?;
    let arcs = to_directed(g);
    if let Some(v) = from_vertex.filter(|&v| v >= g.vertex_count()) {
        return Err(Failure(format!("vertex {v} out of range")));
    }
    if let Some(a) = from_arc.filter(|&a| a >= arcs.arc_count()) {
        return Err(Failure(format!("arc {a} out of range")));
    }
    let table = count_table(&arcs, h);
    let vertex_row = |v: usize| (0..=h).map(|i| table.vertex(v, i).to_string()).collect::<Vec<_>>();
    let arc_row = |a: usize| (0..=h).map(|i| table.arc(a, i).to_string()).collect::<Vec<_>>();
    let vertex_json = |v: usize| json!({ "vertex": v, "counts": (0..=h).map(|i| json::integer(table.vertex(v, i))).collect::<Vec<_>>() });
    let arc_json = |a: usize| {
        json!({
            "arc": a,
            "tail": arcs.tail(a),
            "head": arcs.head(a),
            "counts": (0..=h).map(|i| json::integer(table.arc(a, i))).collect::<Vec<_>>(),
        })
    };

    let (vertices, arc_ids): (Vec<usize>, Vec<usize>) = match (from_vertex, from_arc) {
        (Some(v), _) => (vec![v], vec![]),
        (None, Some(a)) => (vec![], vec![a]),
        (None, None) => ((0..g.vertex_count()).collect(), if full { (0..arcs.arc_count()).collect() } else { vec![] }),
    };
    let mut text = format!("graph {id}\n  walk counts n_0..n_{h}\n");
    for &v in &vertices {
        writeln!(text, "  v{v:<6} {}", vertex_row(v).join(" ")).unwrap();
    }
    for &a in &arc_ids {
        writeln!(text, "  a{a:<3} {}->{} {}", arcs.tail(a), arcs.head(a), arc_row(a).join(" ")).unwrap();
    }
    let mut value = json!({ "graph_id": id, "horizon": h });
    if !vertices.is_empty() {
        value["vertices"] = Value::Array(vertices.iter().map(|&v| vertex_json(v)).collect());
    }
    if !arc_ids.is_empty() {
        value["arcs"] = Value::Array(arc_ids.iter().map(|&a| arc_json(a)).collect());
    }
    Ok(Item {
        json: value,
        text,
        violated: false,
    })
}

fn entropy_report(
    id: &str,
    g: &Graph,
    horizon: Option<usize>,
    mode: StartMode,
    mc: Option<(u64, u64)>,
    full: bool,
) -> Result<Item, Failure> {
    let h = default_horizon(g, horizon)?;
    let arcs = to_directed(g);
    let first = if mode == StartMode::VertexPi { 1 } else { 0 };
    if h < first {
        return Err(Failure("the vertex start needs --horizon of at least 1".into()));
    }
    let audit = conditional_entropy_chain(&arcs, h, mode)?;
    let mut chain: Vec<ChainRecord> = (first..h)
        .map(|i| conditional_entropy_chain(&arcs, i, mode).map(|a| a.chain))
        .collect::<Result<_, _>>()?;
    chain.push(audit.chain.clone());
    let stationarity = audit.marginals.stationarity(&arcs)?;
    let jensen: Vec<JensenRecord> = jensen_certificates(g, h.max(1) as u32)?;

    let violated = !stationarity.holds()
        || chain.iter().any(|r| !r.holds(CHAIN_TOLERANCE))
        || jensen.iter().any(|r| !r.holds(CHAIN_TOLERANCE));

    let mut value = json!({
        "graph_id": id,
        "mode": mode.label(),
        "horizon": h,
        "entropy": json::float(audit.entropy()),
        "entropy_terms": audit.entropy_terms.iter().map(|&t| json::float(t)).collect::<Vec<_>>(),
        "chain": chain.iter().map(ChainRecord::to_json).collect::<Vec<_>>(),
        "stationarity": {
            "holds": stationarity.holds(),
            "arc_steps": stationarity.checked_arc_steps,
            "vertex_steps": stationarity.checked_vertex_steps,
            "arc_failures": stationarity.arc_failures,
            "vertex_failures": stationarity.vertex_failures,
        },
        "jensen": jensen.iter().map(JensenRecord::to_json).collect::<Vec<_>>(),
    });

    let mut text = format!("graph {id}\n  mode {} horizon {h} H={:.9}\n", mode.label(), audit.entropy());
    writeln!(text, "  {:>3} {:>14} {:>14} {:>14} {:>14}  status", "i", "ln E[n]", "E[ln n]", "H", "ln bound").unwrap();
    for r in &chain {
        let [a, b, c, d] = r.values();
        let status = if r.holds(CHAIN_TOLERANCE) { "ok" } else { "VIOLATED" };
        writeln!(text, "  {:>3} {a:>14.9} {b:>14.9} {c:>14.9} {d:>14.9}  {status}", r.walk_length).unwrap();
    }
    writeln!(
        text,
        "  stationarity {} ({} arc steps, {} vertex steps)",
        if stationarity.holds() { "exact" } else { "FAILED" },
        stationarity.checked_arc_steps,
        stationarity.checked_vertex_steps
    )
    .unwrap();
    for r in &jensen {
        writeln!(text, "  jensen {:<24} gap={:.3e}", r.function.to_string(), r.gap).unwrap();
    }

    if let Some((seed, samples)) = mc {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let freq = simulate_arc_marginals(&arcs, h, mode, samples, &mut rng)?;
        let max_z = freq.max_z_score(|j| audit.marginals.arc(j));
        let est = estimate_entropy(&arcs, h, mode, samples, &mut rng)?;
        let z = est.z_score(audit.entropy());
        value["monte_carlo"] = json!({
            "seed": seed,
            "samples": samples,
            "max_arc_z": json::float(max_z),
            "entropy_estimate": est.to_json(),
            "entropy_z": json::float(z),
        });
        writeln!(
            text,
            "  monte-carlo seed={seed} samples={samples} max arc z={max_z:.3} H~{:.6}+-{:.6} (z={z:.3})",
            est.mean, est.std_error
        )
        .unwrap();
    }
    if full {
        value["marginals"] = audit.marginals.to_json();
    }
    value["holds"] = json!(!violated);
    Ok(Item {
        json: value,
        text,
        violated,
    })
}

fn bounds_report(
    format: OutputFormat,
    delta: Option<u64>,
    dbar: Option<&Rational>,
    sides: Option<(&Rational, &Rational)>,
    girth: u32,
) -> Result<Output, Failure> {
    let g = Girth::Finite(girth);
    let mut value = json!({ "girth": girth });
    let mut text = format!("girth {girth}\n");
    let mut any = false;
    if let Some(d) = delta {
        let lb = moore_bound(d, g)?;
        value["delta"] = json!(d);
        value["moore_lb"] = json::rational(&lb);
        writeln!(text, "  moore(delta={d}) = {lb}").unwrap();
        any = true;
    }
    if let Some(d) = dbar {
        let lb = ahl_bound(d, g)?;
        value["d_bar"] = json::rational(d);
        value["ahl_lb"] = json::rational(&lb);
        writeln!(text, "  ahl(d_bar={d}) = {lb}").unwrap();
        any = true;
    }
    if let Some((dl, dr)) = sides {
        let (l, r) = hoory_bounds(dl, dr, g)?;
        value["d_l"] = json::rational(dl);
        value["d_r"] = json::rational(dr);
        value["hoory_lb_l"] = json::rational(&l);
        value["hoory_lb_r"] = json::rational(&r);
        writeln!(text, "  hoory(d_L={dl}, d_R={dr}) = ({l}, {r})").unwrap();
        any = true;
    }
    if !any {
        return Err(Failure("give --delta, --dbar or --dl with --dr".into()));
    }
    let body = match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(&value).expect("JSON values serialize");
            s.push('\n');
            s
        }
        OutputFormat::Text => text,
    };
    Ok(Output { body, violated: false })
}
