//! Ground-truth checks for conflict-free colorings.
//!
//! A coloring is conflict-free when every vertex sees some color exactly
//! once in its neighborhood. Color `0` marks an uncolored vertex (partial
//! colorings only) and never counts as the unique color.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, Vertex};

pub type Color = u32;

/// Set of undirected edges, each stored as `(min, max)`.
pub type EdgeSet = BTreeSet<(Vertex, Vertex)>;

pub fn edge_key(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    (u.min(v), u.max(v))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Neighborhood {
    /// `N(v)`, excluding `v`.
    Open,
    /// `N[v] = N(v) ∪ {v}`.
    Closed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    /// Color 0 allowed.
    Partial,
    /// Every vertex carries a color ≥ 1.
    Complete,
}

impl fmt::Display for Neighborhood {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Neighborhood::Open => "open",
            Neighborhood::Closed => "closed",
        })
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Partial => "partial",
            Kind::Complete => "complete",
        })
    }
}

/// A vertex coloring together with the neighborhood/kind it claims to
/// satisfy and, optionally, the recorded unique color `U(v)` of each vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CfColoring {
    pub colors: Vec<Color>,
    pub witness: Option<Vec<Color>>,
    pub mode: Neighborhood,
    pub kind: Kind,
    /// Declared palette bound; colors above it are rejected.
    pub palette: Color,
}

impl CfColoring {
    pub fn new(colors: Vec<Color>, mode: Neighborhood, kind: Kind) -> Self {
        let palette = colors.iter().copied().max().unwrap_or(0);
        CfColoring {
            colors,
            witness: None,
            mode,
            kind,
            palette,
        }
    }

    pub fn with_witness(mut self, witness: Vec<Color>) -> Self {
        self.witness = Some(witness);
        self
    }

    /// Largest color in use.
    pub fn palette_size(&self) -> Color {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    /// Number of distinct nonzero colors.
    pub fn distinct_colors(&self) -> usize {
        self.colors.iter().filter(|&&c| c != 0).collect::<BTreeSet<_>>().len()
    }

    pub fn uncolored(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.colors.iter().enumerate().filter(|(_, &c)| c == 0).map(|(v, _)| v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("vertex {0} is isolated and has no conflict-free coloring on open neighborhoods")]
    IsolatedVertex(Vertex),
    #[error("coloring covers {got} vertices but the graph has {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("coloring carries no unique-color record")]
    MissingWitness,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Failure {
    /// No color appears exactly once in the neighborhood.
    NoUniqueColor,
    /// Color 0 in a complete coloring.
    Uncolored,
    /// Color larger than the declared palette.
    ColorOutOfPalette(Color),
    /// The recorded `U(v)` is not carried by exactly one colored neighbor.
    WitnessNotUnique(Color),
    /// `U(v) = C(v)`.
    WitnessEqualsColor,
    /// The edge `{v, other}` breaks `C(v) ≠ C(w)` and
    /// `|{C(v), U(v), C(w), U(w)}| = 3`.
    StarViolation(Vertex),
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::NoUniqueColor => write!(f, "no uniquely colored neighbor"),
            Failure::Uncolored => write!(f, "uncolored vertex in a complete coloring"),
            Failure::ColorOutOfPalette(c) => write!(f, "color {c} exceeds the palette"),
            Failure::WitnessNotUnique(c) => write!(f, "recorded unique color {c} is not unique"),
            Failure::WitnessEqualsColor => write!(f, "recorded unique color equals own color"),
            Failure::StarViolation(w) => write!(f, "edge to {w} violates the edge invariant"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub valid: bool,
    /// All failing vertices, ascending.
    pub failures: Vec<(Vertex, Failure)>,
    /// Per vertex: the smallest uniquely occurring color and the vertex
    /// carrying it.
    pub witnesses: Vec<Option<(Color, Vertex)>>,
}

impl VerifyReport {
    fn from_parts(mut failures: Vec<(Vertex, Failure)>, witnesses: Vec<Option<(Color, Vertex)>>) -> Self {
        failures.sort_by_key(|&(v, _)| v);
        VerifyReport {
            valid: failures.is_empty(),
            failures,
            witnesses,
        }
    }
}

fn unique_color<'a>(
    colors: &[Color],
    members: impl Iterator<Item = &'a Vertex> + Clone,
) -> Option<(Color, Vertex)> {
    let mut best: Option<(Color, Vertex)> = None;
    for &w in members.clone() {
        let c = colors[w];
        if c == 0 || best.is_some_and(|(b, _)| b <= c) {
            continue;
        }
        if members.clone().filter(|&&x| colors[x] == c).count() == 1 {
            best = Some((c, w));
        }
    }
    best
}

/// Checks `c` against `g`, reporting every failing vertex.
pub fn verify_cf(g: &Graph, c: &CfColoring) -> Result<VerifyReport, VerifyError> {
    if c.colors.len() != g.n() {
        return Err(VerifyError::LengthMismatch {
            expected: g.n(),
            got: c.colors.len(),
        });
    }
    if c.mode == Neighborhood::Open {
        if let Some(v) = g.vertices().find(|&v| g.degree(v) == 0) {
            return Err(VerifyError::IsolatedVertex(v));
        }
    }
    let mut failures = Vec::new();
    let mut witnesses = Vec::with_capacity(g.n());
    for v in g.vertices() {
        let col = c.colors[v];
        if c.kind == Kind::Complete && col == 0 {
            failures.push((v, Failure::Uncolored));
        }
        if col > c.palette {
            failures.push((v, Failure::ColorOutOfPalette(col)));
        }
        let found = match c.mode {
            Neighborhood::Open => unique_color(&c.colors, g.neighbors(v).iter()),
            Neighborhood::Closed => {
                let own = [v];
                unique_color(&c.colors, g.neighbors(v).iter().chain(own.iter()))
            }
        };
        if found.is_none() {
            failures.push((v, Failure::NoUniqueColor));
        }
        witnesses.push(found);
    }
    Ok(VerifyReport::from_parts(failures, witnesses))
}

/// Vertices whose recorded `U(v)` is nonzero but not carried by exactly one
/// member of the neighborhood. Empty when no record is attached.
pub fn witness_failures(g: &Graph, c: &CfColoring) -> Vec<(Vertex, Failure)> {
    let Some(witness) = &c.witness else {
        return Vec::new();
    };
    g.vertices()
        .filter(|&v| v < witness.len() && witness[v] != 0)
        .filter(|&v| {
            let own = (c.mode == Neighborhood::Closed).then_some(v);
            let carriers = g
                .neighbors(v)
                .iter()
                .copied()
                .chain(own)
                .filter(|&w| c.colors.get(w) == Some(&witness[v]))
                .count();
            carriers != 1
        })
        .map(|v| (v, Failure::WitnessNotUnique(witness[v])))
        .collect()
}

/// Audits the unique-color bookkeeping used by the outerplanar induction.
///
/// Over colored vertices: `U(v)` is carried by exactly one colored neighbor,
/// `U(v) ≠ C(v)`, and every edge outside `star_exempt` with both ends
/// colored has `C(v) ≠ C(w)` and `|{C(v), U(v), C(w), U(w)}| = 3`.
pub fn audit_invariants(g: &Graph, c: &CfColoring, star_exempt: &EdgeSet) -> Result<VerifyReport, VerifyError> {
    let witness = c.witness.as_ref().ok_or(VerifyError::MissingWitness)?;
    if c.colors.len() != g.n() || witness.len() != g.n() {
        return Err(VerifyError::LengthMismatch {
            expected: g.n(),
            got: c.colors.len().min(witness.len()),
        });
    }
    let colors = &c.colors;
    let mut failures = Vec::new();
    let mut witnesses = vec![None; g.n()];
    for v in g.vertices() {
        if colors[v] == 0 {
            continue;
        }
        let u = witness[v];
        let carriers: Vec<Vertex> = g.neighbors(v).iter().copied().filter(|&w| u != 0 && colors[w] == u).collect();
        if carriers.len() == 1 {
            witnesses[v] = Some((u, carriers[0]));
        } else {
            failures.push((v, Failure::WitnessNotUnique(u)));
        }
        if u == colors[v] {
            failures.push((v, Failure::WitnessEqualsColor));
        }
        for &w in g.neighbors(v) {
            if w < v || colors[w] == 0 || star_exempt.contains(&(v, w)) {
                continue;
            }
            let distinct: BTreeSet<Color> = [colors[v], witness[v], colors[w], witness[w]].into_iter().collect();
            if colors[v] == colors[w] || distinct.len() != 3 {
                failures.push((v, Failure::StarViolation(w)));
            }
        }
    }
    Ok(VerifyReport::from_parts(failures, witnesses))
}

/// Closed-neighborhood check that accepts any proper coloring; exposed for
/// property tests.
pub fn is_proper(g: &Graph, colors: &[Color]) -> bool {
    g.edges().all(|(u, v)| colors[u] != colors[v])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn single_edge_valid() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let c = CfColoring::new(vec![1, 2], Neighborhood::Open, Kind::Complete);
        let r = verify_cf(&g, &c).unwrap();
        assert!(r.valid);
        assert_eq!(r.witnesses, vec![Some((2, 1)), Some((1, 0))]);
    }

    #[test]
    fn five_cycle_pattern_valid() {
        let c = CfColoring::new(vec![1, 1, 2, 2, 3], Neighborhood::Open, Kind::Complete);
        assert!(verify_cf(&cycle(5), &c).unwrap().valid);
    }

    #[test]
    fn monochromatic_four_cycle_fails_everywhere() {
        let c = CfColoring::new(vec![1; 4], Neighborhood::Open, Kind::Complete);
        let r = verify_cf(&cycle(4), &c).unwrap();
        assert!(!r.valid);
        assert_eq!(r.failures.len(), 4);
        assert!(r.failures.iter().all(|&(_, f)| f == Failure::NoUniqueColor));
    }

    #[test]
    fn zero_never_witnesses_and_complete_rejects_it() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let c = CfColoring::new(vec![0, 1], Neighborhood::Open, Kind::Partial);
        let r = verify_cf(&g, &c).unwrap();
        assert_eq!(r.failures, vec![(1, Failure::NoUniqueColor)]);
        let c = CfColoring::new(vec![1, 1], Neighborhood::Open, Kind::Partial);
        assert!(verify_cf(&g, &c).unwrap().valid);
        let c = CfColoring::new(vec![0, 1], Neighborhood::Open, Kind::Complete);
        let r = verify_cf(&g, &c).unwrap();
        assert!(r.failures.contains(&(0, Failure::Uncolored)));
    }

    #[test]
    fn palette_bound_checked() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let mut c = CfColoring::new(vec![1, 3], Neighborhood::Open, Kind::Complete);
        c.palette = 2;
        let r = verify_cf(&g, &c).unwrap();
        assert_eq!(r.failures, vec![(1, Failure::ColorOutOfPalette(3))]);
    }

    #[test]
    fn isolated_vertex_is_an_error_in_open_mode_only() {
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        let c = CfColoring::new(vec![1, 2, 1], Neighborhood::Open, Kind::Complete);
        assert_eq!(verify_cf(&g, &c), Err(VerifyError::IsolatedVertex(2)));
        let c = CfColoring::new(vec![1, 2, 1], Neighborhood::Closed, Kind::Complete);
        assert!(verify_cf(&g, &c).unwrap().valid);
    }

    #[test]
    fn audit_bridge_with_and_without_exemption() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let c = CfColoring::new(vec![1, 2], Neighborhood::Open, Kind::Complete).with_witness(vec![2, 1]);
        let exempt: EdgeSet = [(0, 1)].into_iter().collect();
        assert!(audit_invariants(&g, &c, &exempt).unwrap().valid);
        let r = audit_invariants(&g, &c, &EdgeSet::new()).unwrap();
        assert_eq!(r.failures, vec![(0, Failure::StarViolation(1))]);
    }

    #[test]
    fn audit_five_cycle_pattern_breaks_only_the_edge_condition() {
        let c = CfColoring::new(vec![1, 1, 2, 2, 3], Neighborhood::Open, Kind::Complete)
            .with_witness(vec![3, 2, 1, 3, 1]);
        let r = audit_invariants(&cycle(5), &c, &EdgeSet::new()).unwrap();
        assert!(!r.valid);
        assert!(r
            .failures
            .iter()
            .all(|(_, f)| matches!(f, Failure::StarViolation(_))));
        // edges {0,1} and {2,3} repeat a color, {1,2} and {4,0} have only two values
        let bad: Vec<Vertex> = r.failures.iter().map(|&(v, _)| v).collect();
        assert_eq!(bad, vec![0, 0, 1, 2]);
    }

    #[test]
    fn audit_requires_witness() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let c = CfColoring::new(vec![1, 2], Neighborhood::Open, Kind::Complete);
        assert_eq!(audit_invariants(&g, &c, &EdgeSet::new()), Err(VerifyError::MissingWitness));
    }
}
