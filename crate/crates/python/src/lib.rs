//! Python bindings. Graphs cross the boundary as `(n, [(u, v), ...])`,
//! colorings as lists of ints with 0 meaning uncolored.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use cfcolor::generators::{generate, Family};
use cfcolor::graph::Graph;
use cfcolor::kneser::{self, KneserIndex};
use cfcolor::oracle::{exact_cf_number, OracleQuery};
use cfcolor::outerplanar::{complete_cf_cactus, complete_cf_outerplanar};
use cfcolor::planar::{complete_from_partial, partial_cf_planar};
use cfcolor::proper::Strategy;
use cfcolor::verify::{verify_cf, CfColoring, Color, Kind, Neighborhood};

type Edges = Vec<(usize, usize)>;

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn graph(n: usize, edges: Edges) -> PyResult<Graph> {
    Graph::new(n, &edges).map_err(err)
}

fn mode(s: &str) -> PyResult<Neighborhood> {
    match s {
        "open" => Ok(Neighborhood::Open),
        "closed" => Ok(Neighborhood::Closed),
        _ => Err(err(format!("neighborhood must be 'open' or 'closed', got '{s}'"))),
    }
}

fn parse_kind(s: &str) -> PyResult<Kind> {
    match s {
        "partial" => Ok(Kind::Partial),
        "complete" => Ok(Kind::Complete),
        _ => Err(err(format!("kind must be 'partial' or 'complete', got '{s}'"))),
    }
}

/// Returns `(valid, [(vertex, reason), ...])`.
#[pyfunction]
#[pyo3(signature = (n, edges, colors, neighborhood = "open", kind = "partial"))]
fn verify(
    n: usize,
    edges: Edges,
    colors: Vec<Color>,
    neighborhood: &str,
    kind: &str,
) -> PyResult<(bool, Vec<(usize, String)>)> {
    let g = graph(n, edges)?;
    let c = CfColoring::new(colors, mode(neighborhood)?, parse_kind(kind)?);
    let r = verify_cf(&g, &c).map_err(err)?;
    Ok((r.valid, r.failures.into_iter().map(|(v, f)| (v, f.to_string())).collect()))
}

#[pyfunction]
fn color_outerplanar(n: usize, edges: Edges) -> PyResult<Vec<Color>> {
    Ok(complete_cf_outerplanar(&graph(n, edges)?).map_err(err)?.colors)
}

#[pyfunction]
fn color_cactus(n: usize, edges: Edges) -> PyResult<Vec<Color>> {
    Ok(complete_cf_cactus(&graph(n, edges)?).map_err(err)?.colors)
}

/// Open-neighborhood coloring of a connected planar graph.
#[pyfunction]
#[pyo3(signature = (n, edges, kind = "partial", strategy = "exact4"))]
fn color_planar(n: usize, edges: Edges, kind: &str, strategy: &str) -> PyResult<Vec<Color>> {
    let g = graph(n, edges)?;
    let s: Strategy = strategy.parse().map_err(err)?;
    let partial = partial_cf_planar(&g, s).map_err(err)?;
    Ok(match parse_kind(kind)? {
        Kind::Partial => partial.colors,
        Kind::Complete => complete_from_partial(&g, &partial).map_err(err)?.colors,
    })
}

/// Exact conflict-free chromatic number and an optimal coloring.
#[pyfunction]
#[pyo3(signature = (n, edges, neighborhood = "open", kind = "partial", max_colors = 8))]
fn oracle(
    n: usize,
    edges: Edges,
    neighborhood: &str,
    kind: &str,
    max_colors: Color,
) -> PyResult<(Color, Vec<Color>)> {
    let g = graph(n, edges)?;
    let q = OracleQuery::new(&g, mode(neighborhood)?, parse_kind(kind)?).max_colors(max_colors);
    let (best, cert) = exact_cf_number(&q).map_err(err)?;
    Ok((best, cert.colors))
}

#[pyfunction]
#[pyo3(signature = (family, n = 20, seed = 0))]
fn generate_graph(family: &str, n: usize, seed: u64) -> PyResult<(usize, Edges)> {
    let f: Family = family.parse().map_err(err)?;
    let g = generate(f, n, seed);
    Ok((g.n(), g.edges().collect()))
}

/// Vertices of `K(n, k)` in colex order, as sorted 1-based subsets.
#[pyfunction]
fn kneser_subsets(n: u32, k: u32) -> PyResult<Vec<Vec<u32>>> {
    KneserIndex::new(n, k).and_then(|i| i.subsets()).map_err(err)
}

/// Constructive coloring of `K(n, k)`, indexed like `kneser_subsets`.
#[pyfunction]
#[pyo3(signature = (n, k, neighborhood = "open", kind = "complete"))]
fn kneser_coloring(n: u32, k: u32, neighborhood: &str, kind: &str) -> PyResult<Vec<Color>> {
    let c = match (mode(neighborhood)?, parse_kind(kind)?) {
        (Neighborhood::Open, Kind::Complete) => kneser::cf_open_coloring(n, k),
        (Neighborhood::Open, Kind::Partial) => kneser::cf_open_partial_coloring(n, k),
        (Neighborhood::Closed, _) => kneser::cfcn_best_coloring(n, k),
    };
    Ok(c.map_err(err)?.colors)
}

/// Indices of vertices with no uniquely colored neighbor.
#[pyfunction]
#[pyo3(signature = (n, k, colors, neighborhood = "open", kind = "partial"))]
fn kneser_failures(n: u32, k: u32, colors: Vec<Color>, neighborhood: &str, kind: &str) -> PyResult<Vec<usize>> {
    let idx = KneserIndex::new(n, k).map_err(err)?;
    let c = CfColoring::new(colors, mode(neighborhood)?, parse_kind(kind)?);
    kneser::kneser_failures(&idx, &c).map_err(err)
}

/// A vertex of `K(n, k)` that a coloring with at most `k + 1` colors leaves
/// without a unique neighbor color: `(subset, index)`.
#[pyfunction]
fn kneser_witness(n: u32, k: u32, colors: Vec<Color>) -> PyResult<(Vec<u32>, usize)> {
    let idx = KneserIndex::new(n, k).map_err(err)?;
    let w = kneser::find_uncovered_vertex(&idx, &colors).map_err(err)?;
    Ok((w.x, w.id))
}

#[pymodule]
fn pycfcolor(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(color_outerplanar, m)?)?;
    m.add_function(wrap_pyfunction!(color_cactus, m)?)?;
    m.add_function(wrap_pyfunction!(color_planar, m)?)?;
    m.add_function(wrap_pyfunction!(oracle, m)?)?;
    m.add_function(wrap_pyfunction!(generate_graph, m)?)?;
    m.add_function(wrap_pyfunction!(kneser_subsets, m)?)?;
    m.add_function(wrap_pyfunction!(kneser_coloring, m)?)?;
    m.add_function(wrap_pyfunction!(kneser_failures, m)?)?;
    m.add_function(wrap_pyfunction!(kneser_witness, m)?)?;
    Ok(())
}
