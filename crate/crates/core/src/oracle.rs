//! Exact conflict-free chromatic numbers for small graphs by exhaustive
//! backtracking.

use thiserror::Error;

use crate::graph::{smallest_last_order, Graph, Vertex};
use crate::verify::{CfColoring, Color, Kind, Neighborhood};

pub const DEFAULT_LIMIT: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {n} vertices, above the oracle limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("no coloring with at most {0} colors")]
    ExceedsCeiling(Color),
}

#[derive(Debug, Clone)]
pub struct OracleQuery<'a> {
    pub g: &'a Graph,
    pub mode: Neighborhood,
    pub kind: Kind,
    pub max_colors: Color,
    pub limit: usize,
}

impl<'a> OracleQuery<'a> {
    pub fn new(g: &'a Graph, mode: Neighborhood, kind: Kind) -> Self {
        OracleQuery {
            g,
            mode,
            kind,
            max_colors: 8,
            limit: DEFAULT_LIMIT,
        }
    }

    pub fn max_colors(mut self, c: Color) -> Self {
        self.max_colors = c.max(1);
        self
    }

    pub fn limit(mut self, limit: usize) -> Self {
        self.limit = limit;
        self
    }

    fn check(&self) -> Result<(), OracleError> {
        let n = self.g.n();
        if n > self.limit {
            return Err(OracleError::TooLarge { n, limit: self.limit });
        }
        Ok(())
    }
}

/// A coloring with palette `{1..c}` (plus 0 when partial), if one exists.
pub fn exact_cf_certificate(q: &OracleQuery, c: Color) -> Result<Option<CfColoring>, OracleError> {
    q.check()?;
    if c == 0 {
        return Ok(None);
    }
    let mut s = Search::new(q, c);
    Ok(s.run(0, 0).then(|| {
        let mut colors = vec![0; q.g.n()];
        for (i, &v) in s.order.iter().enumerate() {
            colors[v] = s.assigned[i];
        }
        CfColoring::new(colors, q.mode, q.kind)
    }))
}

pub fn exact_cf_decision(q: &OracleQuery, c: Color) -> Result<bool, OracleError> {
    exact_cf_certificate(q, c).map(|x| x.is_some())
}

/// Least `c ≤ max_colors` admitting a coloring, with a certificate.
pub fn exact_cf_number(q: &OracleQuery) -> Result<(Color, CfColoring), OracleError> {
    for c in 1..=q.max_colors {
        if let Some(cert) = exact_cf_certificate(q, c)? {
            return Ok((c, cert));
        }
    }
    Err(OracleError::ExceedsCeiling(q.max_colors))
}

struct Search<'a> {
    g: &'a Graph,
    c: Color,
    partial: bool,
    order: Vec<Vertex>,
    /// Position of each vertex in `order`.
    pos: Vec<usize>,
    /// Colors by position.
    assigned: Vec<Color>,
    /// `due[i]`: vertices whose neighborhood is fully assigned once
    /// position `i` is.
    due: Vec<Vec<Vertex>>,
    closed: bool,
}

impl<'a> Search<'a> {
    fn new(q: &OracleQuery<'a>, c: Color) -> Self {
        let g = q.g;
        let (removal, _) = smallest_last_order(g);
        let order: Vec<Vertex> = removal.into_iter().rev().collect();
        let mut pos = vec![0; g.n()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let closed = q.mode == Neighborhood::Closed;
        let mut due = vec![Vec::new(); g.n()];
        for v in g.vertices() {
            let last = g
                .neighbors(v)
                .iter()
                .map(|&w| pos[w])
                .chain(closed.then_some(pos[v]))
                .max()
                .unwrap_or(pos[v]);
            due[last].push(v);
        }
        Search {
            g,
            c,
            partial: q.kind == Kind::Partial,
            order,
            pos,
            assigned: vec![0; g.n()],
            due,
            closed,
        }
    }

    fn has_unique(&self, v: Vertex) -> bool {
        let mut counts = [0u8; 64];
        let own = self.closed.then_some(v);
        for w in self.g.neighbors(v).iter().copied().chain(own) {
            let col = self.assigned[self.pos[w]] as usize;
            if col != 0 {
                counts[col] = counts[col].saturating_add(1);
            }
        }
        counts.contains(&1)
    }

    fn run(&mut self, i: usize, used: Color) -> bool {
        if i == self.order.len() {
            return true;
        }
        let top = (used + 1).min(self.c);
        let zero = self.partial.then_some(0);
        for col in (1..=top).chain(zero) {
            self.assigned[i] = col;
            if self.due[i].iter().all(|&v| self.has_unique(v)) && self.run(i + 1, used.max(col)) {
                return true;
            }
        }
        self.assigned[i] = 0;
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, figure1_gadget, figure2_gadget};
    use crate::verify::verify_cf;

    #[test]
    fn five_cycle() {
        let g = cycle(5);
        let q = OracleQuery::new(&g, Neighborhood::Open, Kind::Complete);
        assert!(!exact_cf_decision(&q, 2).unwrap());
        let cert = exact_cf_certificate(&q, 3).unwrap().unwrap();
        assert!(verify_cf(&g, &cert).unwrap().valid);
    }

    #[test]
    fn single_edge_needs_one_color() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let q = OracleQuery::new(&g, Neighborhood::Open, Kind::Complete);
        assert!(exact_cf_decision(&q, 1).unwrap());
    }

    #[test]
    fn figure2_partial_is_three() {
        let g = figure2_gadget();
        let q = OracleQuery::new(&g, Neighborhood::Open, Kind::Partial);
        assert_eq!(exact_cf_number(&q).unwrap().0, 3);
    }

    #[test]
    fn figure1_partial_is_four() {
        let g = figure1_gadget();
        let q = OracleQuery::new(&g, Neighborhood::Open, Kind::Partial);
        let (c, cert) = exact_cf_number(&q).unwrap();
        assert_eq!(c, 4);
        assert!(verify_cf(&g, &cert).unwrap().valid);
    }

    #[test]
    fn petersen_closed_is_two() {
        let outer: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        let spokes: Vec<_> = (0..5).map(|i| (i, i + 5)).collect();
        let inner: Vec<_> = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5)).collect();
        let e: Vec<_> = outer.into_iter().chain(spokes).chain(inner).collect();
        let g = Graph::new(10, &e).unwrap();
        let q = OracleQuery::new(&g, Neighborhood::Closed, Kind::Complete);
        assert_eq!(exact_cf_number(&q).unwrap().0, 2);
    }

    #[test]
    fn guards() {
        let g = cycle(15);
        let q = OracleQuery::new(&g, Neighborhood::Open, Kind::Partial);
        assert_eq!(exact_cf_number(&q), Err(OracleError::TooLarge { n: 15, limit: 14 }));
        let iso = Graph::new(2, &[]).unwrap();
        let q = OracleQuery::new(&iso, Neighborhood::Open, Kind::Partial);
        assert_eq!(exact_cf_decision(&q, 3), Ok(false));
        let q = OracleQuery::new(&iso, Neighborhood::Closed, Kind::Complete);
        assert_eq!(exact_cf_number(&q).unwrap().0, 1);
    }
}
