//! Partial conflict-free coloring through a maximal distance-3 set.
//!
//! `V0` is a maximal set of vertices pairwise at distance at least 3, `V1`
//! its neighborhood and `V2` the rest. Every `V1` vertex sees exactly one
//! `V0` vertex, which gets color 1. Contracting each vertex of
//! `A = V0 ∪ V2` into a chosen `V1` neighbor `f(v)` gives a minor `G′` on
//! `V1`; a proper coloring of `G′` shifted by one colors `V1`, and `V2`
//! stays uncolored. `f(v)` is then the unique neighbor of `v` with its color.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{bfs_distances, contract_into, Graph, Vertex};
use crate::proper::{proper_color, ProperError, Strategy};
use crate::verify::{verify_cf, CfColoring, Color, Kind, Neighborhood, VerifyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlanarError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("vertex {0} is isolated")]
    IsolatedVertex(Vertex),
    #[error("the given set is not a maximal distance-3 set: {0}")]
    PropertyViolation(String),
    #[error(transparent)]
    Proper(#[from] ProperError),
    #[error("proper coloring used {used} colors, more than the bound {bound}")]
    PaletteExceeded { used: Color, bound: Color },
    #[error("input coloring is not a valid partial coloring")]
    InvalidInput,
    #[error(transparent)]
    Verify(#[from] VerifyError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Distance3Partition {
    pub v0: Vec<Vertex>,
    pub v1: Vec<Vertex>,
    pub v2: Vec<Vertex>,
    /// `f[v]` for `v` in `V0 ∪ V2`; `None` on `V1`.
    pub f: Vec<Option<Vertex>>,
}

impl Distance3Partition {
    /// Vertices of `V0 ∪ V2`, ascending.
    pub fn a(&self) -> Vec<Vertex> {
        let mut a: Vec<Vertex> = self.v0.iter().chain(&self.v2).copied().collect();
        a.sort_unstable();
        a
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuxiliaryGraph {
    pub gprime: Graph,
    /// `origin[i]` is the `V1` vertex of the source graph behind vertex `i`.
    pub origin: Vec<Vertex>,
}

/// Greedy scan from `seed` upward (wrapping) adding each vertex at
/// distance at least 3 from everything chosen so far. Disconnected pieces
/// are treated as infinitely far apart.
fn greedy_distance3(g: &Graph, seed: Vertex) -> Vec<Vertex> {
    let n = g.n();
    let mut blocked = vec![false; n];
    let mut set = Vec::new();
    for v in (seed..n).chain(0..seed) {
        if blocked[v] {
            continue;
        }
        set.push(v);
        for (w, d) in bfs_distances(g, v).into_iter().enumerate() {
            if d.is_some_and(|d| d < 3) {
                blocked[w] = true;
            }
        }
    }
    set.sort_unstable();
    set
}

pub fn maximal_distance3_set(g: &Graph, seed: Vertex) -> Result<Vec<Vertex>, PlanarError> {
    if g.n() < 2 || !g.is_connected() {
        return Err(PlanarError::Disconnected);
    }
    g.check_vertex(seed).map_err(|e| PlanarError::PropertyViolation(e.to_string()))?;
    Ok(greedy_distance3(g, seed))
}

pub fn partition(g: &Graph, v0: &[Vertex]) -> Result<Distance3Partition, PlanarError> {
    let n = g.n();
    let mut dist_to_set = vec![usize::MAX; n];
    let mut in_v0 = vec![false; n];
    for &s in v0 {
        if s >= n || in_v0[s] {
            return Err(PlanarError::PropertyViolation(format!("bad member {s}")));
        }
        in_v0[s] = true;
        for (w, d) in bfs_distances(g, s).into_iter().enumerate() {
            if let Some(d) = d {
                if w != s && d < 3 && v0.contains(&w) {
                    return Err(PlanarError::PropertyViolation(format!("{s} and {w} are at distance {d}")));
                }
                dist_to_set[w] = dist_to_set[w].min(d);
            }
        }
    }
    if let Some(x) = (0..n).find(|&x| dist_to_set[x] >= 3) {
        return Err(PlanarError::PropertyViolation(format!("{x} could still be added")));
    }
    let mut p = Distance3Partition {
        v0: Vec::new(),
        v1: Vec::new(),
        v2: Vec::new(),
        f: vec![None; n],
    };
    for (v, &d) in dist_to_set.iter().enumerate() {
        match d {
            0 => p.v0.push(v),
            1 => p.v1.push(v),
            _ => p.v2.push(v),
        }
    }
    for v in p.a() {
        let f = g.neighbors(v).iter().copied().find(|&w| dist_to_set[w] == 1);
        if f.is_none() {
            return Err(PlanarError::PropertyViolation(format!("{v} has no neighbor next to the set")));
        }
        p.f[v] = f;
    }
    Ok(p)
}

/// Deletes the edges inside `V2`, then contracts each vertex of `A` into
/// `f(v)` in ascending order.
pub fn build_auxiliary(g: &Graph, p: &Distance3Partition) -> AuxiliaryGraph {
    let in_v2: BTreeSet<Vertex> = p.v2.iter().copied().collect();
    let inner: Vec<(Vertex, Vertex)> = g.edges().filter(|(u, v)| in_v2.contains(u) && in_v2.contains(v)).collect();
    let mut cur = g.without_edges(&inner);
    // ids[i] = source vertex currently at position i
    let mut ids: Vec<Vertex> = (0..g.n()).collect();
    for v in p.a() {
        let target = p.f[v].expect("f defined on A");
        let at = |x: Vertex, ids: &[Vertex]| ids.iter().position(|&y| y == x).unwrap();
        let (cv, ct) = (at(v, &ids), at(target, &ids));
        let (next, _) = contract_into(&cur, cv, ct).expect("v is adjacent to f(v)");
        cur = next;
        ids.remove(cv);
    }
    AuxiliaryGraph {
        gprime: cur,
        origin: ids,
    }
}

/// Runs the pipeline with `strategy` for `G′` and reports the partition
/// and auxiliary graph along with the coloring.
pub fn partial_cf_pipeline(
    g: &Graph,
    strategy: Strategy,
) -> Result<(CfColoring, Distance3Partition, AuxiliaryGraph), PlanarError> {
    if let Some(v) = g.vertices().find(|&v| g.degree(v) == 0) {
        return Err(PlanarError::IsolatedVertex(v));
    }
    let v0 = greedy_distance3(g, 0);
    let p = partition(g, &v0)?;
    let aux = build_auxiliary(g, &p);
    let proper = proper_color(&aux.gprime, strategy)?;
    let mut colors = vec![0; g.n()];
    for &v in &p.v0 {
        colors[v] = 1;
    }
    for (i, &w) in aux.origin.iter().enumerate() {
        colors[w] = proper[i] + 1;
    }
    let mut unique = vec![1; g.n()];
    for v in p.a() {
        unique[v] = colors[p.f[v].unwrap()];
    }
    let c = CfColoring::new(colors, Neighborhood::Open, Kind::Partial).with_witness(unique);
    Ok((c, p, aux))
}

/// Partial coloring on open neighborhoods; with `Strategy::Exact(4)` on a
/// planar graph it uses at most five colors.
pub fn partial_cf_planar(g: &Graph, strategy: Strategy) -> Result<CfColoring, PlanarError> {
    partial_cf_pipeline(g, strategy).map(|(c, _, _)| c)
}

/// The same reduction for any graph whose minors are `k`-colorable by
/// `strategy`; fails if the strategy needs more than `k` colors.
pub fn partial_cf_from_proper(g: &Graph, k: Color, strategy: Strategy) -> Result<CfColoring, PlanarError> {
    let c = partial_cf_planar(g, strategy)?;
    let used = c.palette_size().saturating_sub(1);
    if used > k {
        return Err(PlanarError::PaletteExceeded { used, bound: k });
    }
    Ok(c)
}

/// Gives every uncolored vertex the color `palette + 1`.
pub fn complete_from_partial(g: &Graph, c: &CfColoring) -> Result<CfColoring, PlanarError> {
    if !verify_cf(g, c)?.valid {
        return Err(PlanarError::InvalidInput);
    }
    if c.colors.iter().all(|&x| x != 0) {
        let mut out = c.clone();
        out.kind = Kind::Complete;
        return Ok(out);
    }
    let fill = c.palette_size() + 1;
    let colors = c.colors.iter().map(|&x| if x == 0 { fill } else { x }).collect();
    let mut out = CfColoring::new(colors, c.mode, Kind::Complete);
    out.witness = c.witness.clone();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges_lossy(n, (1..n).map(|i| (i - 1, i)))
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges_lossy(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    fn star() -> Graph {
        // center 0, leaves 1, 2, 3
        Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    #[test]
    fn distance3_sets() {
        assert_eq!(maximal_distance3_set(&path(4), 0).unwrap(), vec![0, 3]);
        assert_eq!(maximal_distance3_set(&star(), 0).unwrap(), vec![0]);
        assert_eq!(maximal_distance3_set(&cycle(6), 0).unwrap(), vec![0, 3]);
        let two = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(maximal_distance3_set(&two, 0), Err(PlanarError::Disconnected));
    }

    #[test]
    fn partitions() {
        let p = partition(&cycle(6), &[0, 3]).unwrap();
        assert_eq!(p.v1, vec![1, 2, 4, 5]);
        assert!(p.v2.is_empty());
        let p = partition(&path(7), &[0, 3, 6]).unwrap();
        assert_eq!(p.v1, vec![1, 2, 4, 5]);
        assert!(partition(&path(7), &[0, 6]).is_err());
        assert!(partition(&path(7), &[0, 2]).is_err());
    }

    #[test]
    fn auxiliary_of_star_is_a_path() {
        let g = star();
        let p = partition(&g, &[0]).unwrap();
        let aux = build_auxiliary(&g, &p);
        assert_eq!(aux.origin, vec![1, 2, 3]);
        // leaf 1 in the middle
        let e: Vec<_> = aux.gprime.edges().collect();
        assert_eq!(e, vec![(0, 1), (0, 2)]);
    }

    #[test]
    fn auxiliary_of_six_cycle_is_a_square() {
        let g = cycle(6);
        let p = partition(&g, &[0, 3]).unwrap();
        let aux = build_auxiliary(&g, &p);
        assert_eq!(aux.origin, vec![1, 2, 4, 5]);
        assert_eq!(aux.gprime.edge_count(), 4);
        assert!(aux.gprime.vertices().all(|v| aux.gprime.degree(v) == 2));
    }

    #[test]
    fn star_coloring() {
        let g = star();
        let c = partial_cf_planar(&g, Strategy::Exact(4)).unwrap();
        assert_eq!(c.colors[0], 1);
        assert!(verify_cf(&g, &c).unwrap().valid);
        assert_eq!(complete_from_partial(&g, &c).unwrap().colors, c.colors);
    }

    #[test]
    fn isolated_vertex_rejected() {
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        assert_eq!(partial_cf_planar(&g, Strategy::Exact(4)), Err(PlanarError::IsolatedVertex(2)));
    }

    #[test]
    fn zeros_filled() {
        let g = path(5);
        let partial = CfColoring::new(vec![1, 2, 0, 3, 1], Neighborhood::Open, Kind::Partial);
        assert!(verify_cf(&g, &partial).unwrap().valid);
        let full = complete_from_partial(&g, &partial).unwrap();
        assert_eq!(full.colors, vec![1, 2, 4, 3, 1]);
        assert!(verify_cf(&g, &full).unwrap().valid);
    }
}
