//! Command-line front end.
//!
//! Exit codes: 0 success, 1 invalid input or usage, 2 a verification check
//! failed, 3 the input exceeds a size budget.

pub mod input;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::bijection::{verify_bijection, verify_four_cycle_lemma, BijectionReport, FourCycleReport};
use crate::chemgraph::{Family, MolecularGraph};
use crate::clarcover::{enumerate_generalized_clar_covers, gzz_polynomial};
use crate::cubepoly::{find_convex_qkl, gc_polynomial};
use crate::matchings::{count_perfect_matchings, enumerate_perfect_matchings};
use crate::polynomial::BivariatePolynomial;
use crate::resonance::{build_resonance_graph, ResonanceGraph};

pub use input::Source;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Benzenoid,
    Tubulene,
    Fullerene,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("UsageError: {0}")]
    Usage(String),
    #[error("IoError: {0}")]
    Io(String),
    #[error("ParseError: {0}")]
    Parse(String),
    #[error("UnknownPreset: {0:?}")]
    UnknownPreset(String),
    #[error(transparent)]
    Chem(#[from] crate::chemgraph::ChemError),
    #[error(transparent)]
    Poly(#[from] crate::polynomial::PolyError),
    #[error("BudgetExceeded: {0}")]
    Budget(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Budget(_) => 3,
            _ => 1,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "gzz", version, about = "Generalized Zhang-Zhang and cube polynomials of benzenoids, tubulenes and fullerenes")]
struct Cli {
    /// Worker threads (default: all cores). Does not change any output.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Input file; the format is taken from --format or the extension
    /// (.bz, .tube, .rot)
    #[arg(required_unless_present = "preset", conflicts_with = "preset")]
    input: Option<PathBuf>,

    /// Use a built-in structure instead of a file, e.g. linear:3 or tube:2,2,1
    #[arg(long)]
    preset: Option<String>,

    #[arg(long, value_enum)]
    format: Option<Format>,

    /// Refuse molecular graphs with more vertices than this
    #[arg(long, default_value_t = 1000)]
    max_vertices: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generalized Zhang-Zhang polynomial (counts generalized Clar covers)
    Gzz {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        json: bool,
        /// Also list every cover
        #[arg(long)]
        covers: bool,
    },
    /// Generalized cube polynomial of the resonance graph
    Gc {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        json: bool,
        /// Also list every convex Q_{k,l} vertex set
        #[arg(long)]
        subgraphs: bool,
        /// Refuse resonance graphs with more vertices than this
        #[arg(long, default_value_t = 5000)]
        max_resonance_vertices: usize,
    },
    /// Check that both polynomials agree and that covers map bijectively
    /// onto convex Q_{k,l} subgraphs
    Verify {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 5000)]
        max_resonance_vertices: usize,
        /// Record per-phase wall-clock times in the report
        #[arg(long)]
        timings: bool,
    },
    /// Write the input file of a preset
    Gen {
        preset: String,
        /// Output path (default: standard output)
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Export the resonance graph
    Resgraph {
        #[command(flatten)]
        input: InputArgs,
        /// Write Graphviz DOT here (default: DOT on standard output)
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Write JSON here
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long, default_value_t = 5000)]
        max_resonance_vertices: usize,
    },
}

/// Summary printed by `verify`.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub family: Family,
    pub vertices: usize,
    pub edges: usize,
    pub hexagons: usize,
    pub pentagons: usize,
    pub matchings: u64,
    pub gzz: BivariatePolynomial,
    pub gc: BivariatePolynomial,
    pub equal: bool,
    pub bijection: BijectionReport,
    pub four_cycle_lemma: FourCycleReport,
    /// Only filled with `--timings`, so that reports stay reproducible.
    pub timings_ms: Option<BTreeMap<&'static str, f64>>,
}

impl RunReport {
    pub fn passed(&self) -> bool {
        self.equal && self.bijection.passed && self.four_cycle_lemma.passed
    }
}

fn load_graph(args: &InputArgs) -> Result<MolecularGraph, CliError> {
    let source = match (&args.preset, &args.input) {
        (Some(name), _) => input::preset(name)?,
        (None, Some(path)) => input::load(path, args.format)?,
        (None, None) => return Err(CliError::Usage("no input given".into())),
    };
    let g = source.build()?;
    if g.vertex_count() > args.max_vertices {
        return Err(CliError::Budget(format!(
            "graph has {} vertices, limit {} (raise --max-vertices)",
            g.vertex_count(),
            args.max_vertices
        )));
    }
    Ok(g)
}

fn resonance_within(g: &MolecularGraph, limit: usize) -> Result<ResonanceGraph, CliError> {
    let count = count_perfect_matchings(g);
    if count > limit as u64 {
        return Err(CliError::Budget(format!(
            "resonance graph has {count} vertices, limit {limit} (raise --max-resonance-vertices)"
        )));
    }
    let ms = enumerate_perfect_matchings(g);
    Ok(build_resonance_graph(g, &ms))
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).map_err(|e| CliError::Io(e.to_string()))?;
    writeln!(out, "{text}").map_err(io_err)
}

fn io_err(e: std::io::Error) -> CliError {
    CliError::Io(e.to_string())
}

fn summary(g: &MolecularGraph) -> serde_json::Value {
    json!({
        "family": g.family(),
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "hexagons": g.hexagon_count(),
        "pentagons": g.pentagon_count(),
    })
}

fn cmd_gzz(args: &InputArgs, as_json: bool, covers: bool, out: &mut dyn Write) -> Result<i32, CliError> {
    let g = load_graph(args)?;
    let p = gzz_polynomial(&g)?;
    let listed: Vec<_> = if covers {
        p.terms()
            .into_iter()
            .map(|(k, l, _)| {
                let cs = enumerate_generalized_clar_covers(&g, k as usize, l as usize);
                json!({ "k": k, "l": l, "covers": cs })
            })
            .collect()
    } else {
        Vec::new()
    };
    if as_json {
        let mut v = summary(&g);
        v["gzz"] = serde_json::to_value(&p).map_err(|e| CliError::Io(e.to_string()))?;
        if covers {
            v["covers"] = json!(listed);
        }
        write_json(out, &v)?;
    } else {
        writeln!(out, "{p}").map_err(io_err)?;
        for group in &listed {
            for c in group["covers"].as_array().into_iter().flatten() {
                writeln!(out, "{c}").map_err(io_err)?;
            }
        }
    }
    Ok(0)
}

fn cmd_gc(
    args: &InputArgs,
    as_json: bool,
    subgraphs: bool,
    limit: usize,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let g = load_graph(args)?;
    let r = resonance_within(&g, limit)?;
    let p = gc_polynomial(r.graph())?;
    let listed: Vec<_> = if subgraphs {
        p.terms()
            .into_iter()
            .map(|(k, l, _)| json!({ "k": k, "l": l, "subgraphs": find_convex_qkl(r.graph(), k as usize, l as usize) }))
            .collect()
    } else {
        Vec::new()
    };
    if as_json {
        let mut v = summary(&g);
        v["matchings"] = json!(r.vertex_count());
        v["gc"] = serde_json::to_value(&p).map_err(|e| CliError::Io(e.to_string()))?;
        if subgraphs {
            v["subgraphs"] = json!(listed);
        }
        write_json(out, &v)?;
    } else {
        writeln!(out, "{p}").map_err(io_err)?;
        for group in &listed {
            for s in group["subgraphs"].as_array().into_iter().flatten() {
                writeln!(out, "{} {} {s}", group["k"], group["l"]).map_err(io_err)?;
            }
        }
    }
    Ok(0)
}

/// Runs every check on one graph.
pub fn verify_graph(
    g: &MolecularGraph,
    max_resonance_vertices: usize,
    timings: bool,
) -> Result<RunReport, CliError> {
    let mut times = BTreeMap::new();
    let mut clock = Instant::now();
    let mut lap = |name: &'static str, times: &mut BTreeMap<&'static str, f64>| {
        times.insert(name, clock.elapsed().as_secs_f64() * 1e3);
        clock = Instant::now();
    };
    let r = resonance_within(g, max_resonance_vertices)?;
    lap("resonance", &mut times);
    let gzz = gzz_polynomial(g)?;
    lap("gzz", &mut times);
    let gc = gc_polynomial(r.graph())?;
    lap("gc", &mut times);
    let bijection = verify_bijection(g, &r);
    lap("bijection", &mut times);
    let four_cycle_lemma = verify_four_cycle_lemma(g, &r);
    lap("four_cycle_lemma", &mut times);
    Ok(RunReport {
        family: g.family(),
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        hexagons: g.hexagon_count(),
        pentagons: g.pentagon_count(),
        matchings: r.vertex_count() as u64,
        equal: gzz == gc,
        gzz,
        gc,
        bijection,
        four_cycle_lemma,
        timings_ms: timings.then_some(times),
    })
}

fn cmd_verify(
    args: &InputArgs,
    as_json: bool,
    limit: usize,
    timings: bool,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let g = load_graph(args)?;
    let report = verify_graph(&g, limit, timings)?;
    if as_json {
        write_json(out, &report)?;
    } else {
        let verdict = |ok: bool| if ok { "pass" } else { "FAIL" };
        let mut text = format!(
            "family: {}\nvertices: {}\nedges: {}\nhexagons: {}\npentagons: {}\nmatchings: {}\ngzz: {}\ngc: {}\nequal: {}\n",
            report.family,
            report.vertices,
            report.edges,
            report.hexagons,
            report.pentagons,
            report.matchings,
            report.gzz,
            report.gc,
            report.equal,
        );
        text += &format!(
            "bijection: {} ({} shapes)\nfour-cycle lemma: {} ({} cycles)\n",
            verdict(report.bijection.passed),
            report.bijection.shapes.len(),
            verdict(report.four_cycle_lemma.passed),
            report.four_cycle_lemma.cycles,
        );
        if let Some(t) = &report.timings_ms {
            for (phase, ms) in t {
                text += &format!("time {phase}: {ms:.1} ms\n");
            }
        }
        if let Some(c) = &report.bijection.counterexample {
            text += &format!("counterexample: {}\n", serde_json::to_string(c).unwrap_or_default());
        }
        if let Some(c) = &report.four_cycle_lemma.counterexample {
            text += &format!("counterexample: {}\n", serde_json::to_string(c).unwrap_or_default());
        }
        out.write_all(text.as_bytes()).map_err(io_err)?;
    }
    Ok(if report.passed() { 0 } else { 2 })
}

fn cmd_gen(name: &str, output: Option<&PathBuf>, out: &mut dyn Write) -> Result<i32, CliError> {
    let source = input::preset(name)?;
    source.build()?;
    let text = source.to_text();
    match output {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?,
        None => out.write_all(text.as_bytes()).map_err(io_err)?,
    }
    Ok(0)
}

pub fn resonance_dot(r: &ResonanceGraph) -> String {
    let mut s = String::from("graph resonance {\n");
    for v in 0..r.vertex_count() {
        s += &format!("  {v};\n");
    }
    for (u, v, h) in r.labeled_edges() {
        s += &format!("  {u} -- {v} [label=\"{h}\"];\n");
    }
    s += "}\n";
    s
}

pub fn resonance_json(r: &ResonanceGraph) -> serde_json::Value {
    let edges: Vec<_> = r.labeled_edges().map(|(u, v, h)| [u, v, h]).collect();
    json!({
        "vertices": r.vertex_count(),
        "matchings": r.matchings().iter().map(|m| m.edges()).collect::<Vec<_>>(),
        "edges": edges,
    })
}

fn cmd_resgraph(
    args: &InputArgs,
    dot: Option<&PathBuf>,
    json_path: Option<&PathBuf>,
    limit: usize,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let g = load_graph(args)?;
    let r = resonance_within(&g, limit)?;
    let write = |path: &PathBuf, text: String| {
        std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
    };
    if let Some(p) = dot {
        write(p, resonance_dot(&r))?;
    }
    if let Some(p) = json_path {
        let text = serde_json::to_string_pretty(&resonance_json(&r)).map_err(|e| CliError::Io(e.to_string()))?;
        write(p, text + "\n")?;
    }
    if dot.is_none() && json_path.is_none() {
        out.write_all(resonance_dot(&r).as_bytes()).map_err(io_err)?;
    }
    Ok(0)
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    match &cli.command {
        Command::Gzz { input, json, covers } => cmd_gzz(input, *json, *covers, out),
        Command::Gc {
            input,
            json,
            subgraphs,
            max_resonance_vertices,
        } => cmd_gc(input, *json, *subgraphs, *max_resonance_vertices, out),
        Command::Verify {
            input,
            json,
            max_resonance_vertices,
            timings,
        } => cmd_verify(input, *json, *max_resonance_vertices, *timings, out),
        Command::Gen { preset, output } => cmd_gen(preset, output.as_ref(), out),
        Command::Resgraph {
            input,
            dot,
            json,
            max_resonance_vertices,
        } => cmd_resgraph(input, dot.as_ref(), json.as_ref(), *max_resonance_vertices, out),
    }
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    // Buffered so the command can run inside a thread pool.
    let mut buf = Vec::new();
    let result = match cli.threads {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| dispatch(&cli, &mut buf)),
            Err(e) => Err(CliError::Usage(format!("cannot start {n} threads: {e}"))),
        },
        None => dispatch(&cli, &mut buf),
    };
    let result = result.and_then(|code| out.write_all(&buf).map(|_| code).map_err(io_err));
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
