//! `cfcolor`: build, check and inspect conflict-free colorings.
//!
//! Exit codes: 0 success, 1 invalid coloring or no witness, 2 bad input
//! file or arguments, 3 graph outside the requested class, 4 internal
//! invariant breach.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cfcolor::embed::is_outerplanar;
use cfcolor::generators::{generate, Family};
use cfcolor::graph::{connected_components, is_cactus, Graph, Vertex};
use cfcolor::io::{parse_coloring, parse_edge_list, to_dot, write_coloring, write_edge_list};
use cfcolor::kneser::{
    cf_open_coloring, cf_open_partial_coloring, cfcn_best_bound, cfcn_best_coloring, find_uncovered_vertex,
    kneser_graph, KneserError, KneserIndex,
};
use cfcolor::oracle::{exact_cf_number, OracleError, OracleQuery};
use cfcolor::outerplanar::{complete_cf_cactus, complete_cf_outerplanar, OuterplanarError};
use cfcolor::planar::{complete_from_partial, partial_cf_planar, PlanarError};
use cfcolor::planarity::{euler_bound_ok, is_planar};
use cfcolor::proper::Strategy;
use cfcolor::verify::{verify_cf, witness_failures, CfColoring, Color, Kind, Neighborhood};

#[derive(Parser)]
#[command(name = "cfcolor", version, about = "Conflict-free graph coloring toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Color a graph with the construction for its class.
    Color(ColorArgs),
    /// Check a coloring against a graph.
    Verify(VerifyArgs),
    /// Exact conflict-free chromatic number of a small graph.
    Oracle(OracleArgs),
    /// Kneser graph bounds, colorings and lower-bound witnesses.
    Kneser(KneserArgs),
    /// Write a generated graph as an edge list.
    Gen(GenArgs),
    /// Render a colored graph.
    Export(ExportArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    Auto,
    Planar,
    Outerplanar,
    Cactus,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    Partial,
    Complete,
}

impl From<VariantArg> for Kind {
    fn from(v: VariantArg) -> Kind {
        match v {
            VariantArg::Partial => Kind::Partial,
            VariantArg::Complete => Kind::Complete,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Open,
    Closed,
}

impl From<ModeArg> for Neighborhood {
    fn from(m: ModeArg) -> Neighborhood {
        match m {
            ModeArg::Open => Neighborhood::Open,
            ModeArg::Closed => Neighborhood::Closed,
        }
    }
}

#[derive(Args)]
struct ColorArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "auto")]
    class: ClassArg,
    #[arg(long, value_enum, default_value = "complete")]
    variant: VariantArg,
    /// Proper-coloring strategy for the planar reduction: exactK, kempe5 or greedy.
    #[arg(long, default_value = "exact4", value_parser = parse_strategy)]
    strategy: Strategy,
    /// Output file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_strategy(s: &str) -> Result<Strategy, String> {
    s.parse()
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    coloring: PathBuf,
    #[arg(long, value_enum, default_value = "open")]
    neighborhood: ModeArg,
    #[arg(long, value_enum, default_value = "complete")]
    variant: VariantArg,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "open")]
    neighborhood: ModeArg,
    #[arg(long, value_enum, default_value = "complete")]
    variant: VariantArg,
    #[arg(long, default_value_t = 8)]
    max_colors: Color,
    /// Largest accepted vertex count.
    #[arg(long, default_value_t = cfcolor::oracle::DEFAULT_LIMIT)]
    limit: usize,
}

#[derive(Args)]
struct KneserArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    k: u32,
    #[arg(long, value_enum, default_value = "open")]
    neighborhood: ModeArg,
    /// Print the upper bound only.
    #[arg(long, conflicts_with_all = ["emit_coloring", "witness"])]
    bound_only: bool,
    /// Write the constructive coloring, indexed by colex rank.
    #[arg(long, conflicts_with = "witness")]
    emit_coloring: bool,
    /// With --emit-coloring and open neighborhoods, drop the last class.
    #[arg(long, value_enum, default_value = "complete")]
    variant: VariantArg,
    /// Search a vertex with no uniquely colored neighbor under this coloring.
    #[arg(long)]
    witness: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GenArgs {
    /// figure1, figure2, outerplanar, cactus, planar, tree, cycle or path.
    #[arg(long, value_parser = parse_family)]
    family: Family,
    #[arg(long, default_value_t = 20)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse()
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Dot,
}

#[derive(Args)]
struct ExportArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    coloring: PathBuf,
    #[arg(long, value_enum, default_value = "dot")]
    format: FormatArg,
    #[arg(long)]
    out: Option<PathBuf>,
}

struct Fail {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Into<String>) -> Fail {
    Fail {
        code,
        message: message.into(),
    }
}

type Outcome = Result<(), Fail>;

fn read(path: &Path) -> Result<String, Fail> {
    fs::read_to_string(path).map_err(|e| fail(2, format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, Fail> {
    parse_edge_list(&read(path)?).map_err(|e| fail(2, format!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, text: &str) -> Outcome {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| fail(2, format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Color(a) => cmd_color(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Oracle(a) => cmd_oracle(a),
        Command::Kneser(a) => cmd_kneser(a),
        Command::Gen(a) => cmd_gen(a),
        Command::Export(a) => cmd_export(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Class {
    Cactus,
    Outerplanar,
    Planar,
}

fn probe(g: &Graph) -> Option<Class> {
    if is_cactus(g) {
        Some(Class::Cactus)
    } else if is_outerplanar(g) {
        Some(Class::Outerplanar)
    } else if euler_bound_ok(g) && is_planar(g) {
        Some(Class::Planar)
    } else {
        None
    }
}

fn outerplanar_fail(e: OuterplanarError) -> Fail {
    match e {
        OuterplanarError::NotOuterplanar | OuterplanarError::NotCactus | OuterplanarError::IsolatedVertex(_) => {
            fail(3, e.to_string())
        }
        other => fail(4, other.to_string()),
    }
}

fn planar_fail(e: PlanarError) -> Fail {
    match e {
        PlanarError::IsolatedVertex(_) => fail(3, e.to_string()),
        other => fail(4, other.to_string()),
    }
}

/// Runs `f` on each connected component and stitches the results.
fn per_component(
    g: &Graph,
    f: impl Fn(&Graph) -> Result<CfColoring, Fail>,
) -> Result<CfColoring, Fail> {
    let comps = connected_components(g);
    if comps.len() == 1 {
        return f(g);
    }
    let mut colors = vec![0; g.n()];
    let mut witness = vec![0; g.n()];
    let mut template: Option<CfColoring> = None;
    for comp in comps {
        let (sub, map): (Graph, Vec<Vertex>) = g.induced(&comp);
        let c = f(&sub)?;
        for (i, &v) in map.iter().enumerate() {
            colors[v] = c.colors[i];
            witness[v] = c.witness.as_ref().map_or(0, |w| w[i]);
        }
        template.get_or_insert(c);
    }
    let t = template.expect("at least one component");
    Ok(CfColoring::new(colors, t.mode, t.kind).with_witness(witness))
}

fn cmd_color(a: ColorArgs) -> Outcome {
    let g = read_graph(&a.input)?;
    if let Some(v) = g.vertices().find(|&v| g.degree(v) == 0) {
        return Err(fail(3, format!("vertex {v} is isolated; no open-neighborhood coloring exists")));
    }
    let class = match a.class {
        ClassArg::Auto => probe(&g).ok_or_else(|| fail(3, "graph is not planar"))?,
        ClassArg::Cactus => Class::Cactus,
        ClassArg::Outerplanar => Class::Outerplanar,
        ClassArg::Planar => {
            if !(euler_bound_ok(&g) && is_planar(&g)) {
                return Err(fail(3, "graph is not planar"));
            }
            Class::Planar
        }
    };
    let kind = Kind::from(a.variant);
    let mut c = match class {
        Class::Cactus => complete_cf_cactus(&g).map_err(outerplanar_fail)?,
        Class::Outerplanar => complete_cf_outerplanar(&g).map_err(outerplanar_fail)?,
        Class::Planar => per_component(&g, |h| {
            let p = partial_cf_planar(h, a.strategy).map_err(planar_fail)?;
            match kind {
                Kind::Partial => Ok(p),
                Kind::Complete => complete_from_partial(h, &p).map_err(planar_fail),
            }
        })?,
    };
    c.kind = kind;
    c.palette = c.palette_size();
    let report = verify_cf(&g, &c).map_err(|e| fail(4, e.to_string()))?;
    if !report.valid {
        return Err(fail(4, format!("{class:?} output failed verification at {:?}", report.failures)));
    }
    eprintln!(
        "class {} | {} {} | palette {} | valid",
        format!("{class:?}").to_lowercase(),
        c.mode,
        c.kind,
        c.palette_size()
    );
    emit(a.out.as_deref(), &write_coloring(&c))
}

fn cmd_verify(a: VerifyArgs) -> Outcome {
    let g = read_graph(&a.input)?;
    let file = parse_coloring(&read(&a.coloring)?).map_err(|e| fail(2, format!("{}: {e}", a.coloring.display())))?;
    if file.colors.len() != g.n() {
        return Err(fail(2, format!("coloring has {} vertices, graph has {}", file.colors.len(), g.n())));
    }
    let kind = Kind::from(a.variant);
    if kind == Kind::Complete {
        if let Some(v) = file.colors.iter().position(|&c| c == 0) {
            return Err(fail(2, format!("vertex {v} is uncolored but --variant complete was given")));
        }
    }
    let mut c = CfColoring::new(file.colors, a.neighborhood.into(), kind);
    c.witness = file.unique;
    let mut report = verify_cf(&g, &c).map_err(|e| fail(1, e.to_string()))?;
    report.failures.extend(witness_failures(&g, &c));
    report.failures.sort_by_key(|(v, _)| *v);
    if report.failures.is_empty() {
        println!("valid: {} {} coloring with palette {}", c.mode, c.kind, c.palette_size());
        return Ok(());
    }
    for (v, f) in &report.failures {
        println!("vertex {v}: {f}");
    }
    Err(fail(1, format!("{} failure(s)", report.failures.len())))
}

fn cmd_oracle(a: OracleArgs) -> Outcome {
    let g = read_graph(&a.input)?;
    let q = OracleQuery::new(&g, a.neighborhood.into(), a.variant.into())
        .max_colors(a.max_colors)
        .limit(a.limit);
    match exact_cf_number(&q) {
        Ok((c, _)) => {
            println!("{c}");
            Ok(())
        }
        Err(e @ OracleError::TooLarge { .. }) => Err(fail(2, e.to_string())),
        Err(e @ OracleError::ExceedsCeiling(_)) => Err(fail(1, e.to_string())),
    }
}

fn kneser_fail(e: KneserError) -> Fail {
    match e {
        KneserError::WitnessNotFound { .. } => fail(1, e.to_string()),
        _ => fail(2, e.to_string()),
    }
}

fn cmd_kneser(a: KneserArgs) -> Outcome {
    let (n, k) = (a.n, a.k);
    let mode = Neighborhood::from(a.neighborhood);
    if let Some(path) = &a.witness {
        let idx = KneserIndex::new(n, k).map_err(kneser_fail)?;
        let file = parse_coloring(&read(path)?).map_err(|e| fail(2, format!("{}: {e}", path.display())))?;
        let w = find_uncovered_vertex(&idx, &file.colors).map_err(kneser_fail)?;
        let set: Vec<String> = w.x.iter().map(|e| e.to_string()).collect();
        println!("{{{}}}", set.join(", "));
        eprintln!("vertex id {} | neighbors per color {:?}", w.id, &w.counts[1..]);
        return Ok(());
    }
    if a.emit_coloring {
        let c = match mode {
            Neighborhood::Open if a.variant == VariantArg::Partial => cf_open_partial_coloring(n, k),
            Neighborhood::Open => cf_open_coloring(n, k),
            Neighborhood::Closed => cfcn_best_coloring(n, k),
        }
        .map_err(kneser_fail)?;
        let (g, _) = kneser_graph(n, k).map_err(kneser_fail)?;
        let report = verify_cf(&g, &c).map_err(|e| fail(4, e.to_string()))?;
        if !report.valid {
            return Err(fail(4, format!("constructed coloring fails at {:?}", report.failures)));
        }
        eprintln!("K({n},{k}) {mode} {} | palette {} | valid", c.kind, c.palette_size());
        return emit(a.out.as_deref(), &write_coloring(&c));
    }
    let bound = match mode {
        Neighborhood::Open => {
            if k == 0 || n < 3 * k - 1 {
                return Err(fail(2, format!("open bound needs n ≥ 3k - 1, got n = {n}, k = {k}")));
            }
            k + 2
        }
        Neighborhood::Closed => cfcn_best_bound(n, k).map_err(kneser_fail)?.0,
    };
    println!("{bound}");
    Ok(())
}

fn cmd_gen(a: GenArgs) -> Outcome {
    let needs = match a.family {
        Family::Figure1 | Family::Figure2 => 0,
        Family::Cycle => 3,
        Family::Tree | Family::Path => 1,
        _ => 2,
    };
    if a.n < needs {
        return Err(fail(2, format!("family needs n ≥ {needs}")));
    }
    let g = generate(a.family, a.n, a.seed);
    let ok = match a.family {
        Family::Cactus => is_cactus(&g),
        Family::Outerplanar => is_outerplanar(&g),
        Family::Planar => is_planar(&g),
        _ => true,
    };
    if !ok {
        return Err(fail(4, "generated graph left its family"));
    }
    emit(a.out.as_deref(), &write_edge_list(&g))
}

fn cmd_export(a: ExportArgs) -> Outcome {
    let g = read_graph(&a.input)?;
    let file = parse_coloring(&read(&a.coloring)?).map_err(|e| fail(2, format!("{}: {e}", a.coloring.display())))?;
    if file.colors.len() != g.n() {
        return Err(fail(2, format!("coloring has {} vertices, graph has {}", file.colors.len(), g.n())));
    }
    let text = match a.format {
        FormatArg::Dot => to_dot(&g, &file.colors),
    };
    emit(a.out.as_deref(), &text)
}
