//! Proper vertex colorings: exact backtracking, Kempe-chain five coloring
//! for planar graphs, and greedy by degeneracy. Colors start at 1.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::graph::{smallest_last_order, Graph, Vertex};
use crate::verify::Color;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Complete search for a proper coloring with at most `k` colors.
    Exact(Color),
    Kempe5,
    GreedyDegeneracy,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Strategy::Exact(k) => write!(f, "exact{k}"),
            Strategy::Kempe5 => f.write_str("kempe5"),
            Strategy::GreedyDegeneracy => f.write_str("greedy"),
        }
    }
}

impl std::str::FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "kempe5" => Ok(Strategy::Kempe5),
            "greedy" | "greedy_degeneracy" => Ok(Strategy::GreedyDegeneracy),
            _ => s
                .strip_prefix("exact")
                .and_then(|k| k.parse().ok())
                .filter(|&k: &Color| k >= 1)
                .map(Strategy::Exact)
                .ok_or_else(|| format!("unknown strategy '{s}'")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProperError {
    #[error("no proper coloring with {0} colors exists")]
    Unsatisfiable(Color),
}

pub fn proper_color(g: &Graph, strategy: Strategy) -> Result<Vec<Color>, ProperError> {
    match strategy {
        Strategy::Exact(k) => exact_coloring(g, k).ok_or(ProperError::Unsatisfiable(k)),
        Strategy::Kempe5 => Ok(kempe5(g)),
        Strategy::GreedyDegeneracy => Ok(greedy_degeneracy(g)),
    }
}

/// Backtracking with forward checking. The next vertex is the one with the
/// fewest remaining colors (ties: more uncolored neighbors, then smaller
/// id), and a fresh color is only tried once, as the next unused one.
pub fn exact_coloring(g: &Graph, k: Color) -> Option<Vec<Color>> {
    let n = g.n();
    if n == 0 {
        return Some(Vec::new());
    }
    if k == 0 {
        return None;
    }
    let full: u64 = if k >= 64 { u64::MAX } else { (1u64 << k) - 1 };
    let mut search = ExactSearch {
        g,
        k,
        colors: vec![0; n],
        domain: vec![full; n],
        trail: Vec::new(),
    };
    search.run(0).then_some(search.colors)
}

struct ExactSearch<'a> {
    g: &'a Graph,
    k: Color,
    colors: Vec<Color>,
    /// Bit `c - 1` set when color `c` is still allowed.
    domain: Vec<u64>,
    trail: Vec<(Vertex, u64)>,
}

impl ExactSearch<'_> {
    fn pick(&self) -> Option<Vertex> {
        self.g
            .vertices()
            .filter(|&v| self.colors[v] == 0)
            .min_by_key(|&v| {
                let free = self.g.neighbors(v).iter().filter(|&&w| self.colors[w] == 0).count();
                (self.domain[v].count_ones(), usize::MAX - free, v)
            })
    }

    fn run(&mut self, used: Color) -> bool {
        let Some(v) = self.pick() else {
            return true;
        };
        let limit = (used + 1).min(self.k);
        for c in 1..=limit {
            let bit = 1u64 << (c - 1);
            if self.domain[v] & bit == 0 {
                continue;
            }
            let mark = self.trail.len();
            self.colors[v] = c;
            let mut wiped = false;
            for &w in self.g.neighbors(v) {
                if self.colors[w] == 0 && self.domain[w] & bit != 0 {
                    self.trail.push((w, self.domain[w]));
                    self.domain[w] &= !bit;
                    if self.domain[w] == 0 {
                        wiped = true;
                        break;
                    }
                }
            }
            if !wiped && self.run(used.max(c)) {
                return true;
            }
            while self.trail.len() > mark {
                let (w, d) = self.trail.pop().unwrap();
                self.domain[w] = d;
            }
            self.colors[v] = 0;
        }
        false
    }
}

/// Colors vertices in reverse smallest-last order with the smallest free
/// color; uses at most degeneracy + 1 colors.
pub fn greedy_degeneracy(g: &Graph) -> Vec<Color> {
    let (order, _) = smallest_last_order(g);
    let mut colors = vec![0; g.n()];
    for &v in order.iter().rev() {
        colors[v] = smallest_free(g, &colors, v);
    }
    colors
}

fn smallest_free(g: &Graph, colors: &[Color], v: Vertex) -> Color {
    let mut taken: Vec<Color> = g.neighbors(v).iter().map(|&w| colors[w]).filter(|&c| c != 0).collect();
    taken.sort_unstable();
    taken.dedup();
    let mut c = 1;
    for t in taken {
        if t == c {
            c += 1;
        } else if t > c {
            break;
        }
    }
    c
}

/// Five coloring by smallest-last removal and Kempe-chain repair on
/// reinsertion. On planar input every vertex has at most five colored
/// neighbors at reinsertion time and a swap always frees a color; on other
/// inputs a sixth or later color is used rather than failing.
pub fn kempe5(g: &Graph) -> Vec<Color> {
    let (order, _) = smallest_last_order(g);
    let mut colors = vec![0; g.n()];
    for &v in order.iter().rev() {
        let c = smallest_free(g, &colors, v);
        colors[v] = if c <= 5 {
            c
        } else {
            kempe_free(g, &mut colors, v).unwrap_or(c)
        };
    }
    colors
}

fn kempe_free(g: &Graph, colors: &mut [Color], v: Vertex) -> Option<Color> {
    for a in 1..=5 {
        for b in 1..=5 {
            if a == b {
                continue;
            }
            let starts: Vec<Vertex> = g.neighbors(v).iter().copied().filter(|&w| colors[w] == a).collect();
            let before = colors.to_vec();
            for s in starts {
                if colors[s] == a {
                    swap_chain(g, colors, s, a, b);
                }
            }
            if g.neighbors(v).iter().all(|&w| colors[w] != a) {
                return Some(a);
            }
            colors.copy_from_slice(&before);
        }
    }
    None
}

/// Exchanges colors `a` and `b` on the `{a, b}`-component containing `s`.
fn swap_chain(g: &Graph, colors: &mut [Color], s: Vertex, a: Color, b: Color) {
    let mut seen = vec![false; g.n()];
    seen[s] = true;
    let mut queue = VecDeque::from([s]);
    let mut chain = Vec::new();
    while let Some(x) = queue.pop_front() {
        chain.push(x);
        for &y in g.neighbors(x) {
            if !seen[y] && (colors[y] == a || colors[y] == b) {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    for x in chain {
        colors[x] = if colors[x] == a { b } else { a };
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::is_proper;

    #[test]
    fn triangle() {
        let g = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let c = exact_coloring(&g, 3).unwrap();
        assert!(is_proper(&g, &c));
        assert_eq!(proper_color(&g, Strategy::Exact(2)), Err(ProperError::Unsatisfiable(2)));
    }

    #[test]
    fn square_is_bipartite() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(exact_coloring(&g, 2).unwrap(), vec![1, 2, 1, 2]);
    }

    #[test]
    fn wheel_needs_four() {
        // hub 0 on a five-cycle
        let mut e: Vec<_> = (1..=5).map(|i| (0, i)).collect();
        e.extend((1..=5).map(|i| (i, i % 5 + 1)));
        let g = Graph::new(6, &e).unwrap();
        assert!(exact_coloring(&g, 3).is_none());
        assert!(is_proper(&g, &exact_coloring(&g, 4).unwrap()));
    }

    #[test]
    fn icosahedron_kempe() {
        let e = [
            (0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (2, 3), (3, 4), (4, 5), (5, 1),
            (1, 6), (2, 6), (2, 7), (3, 7), (3, 8), (4, 8), (4, 9), (5, 9), (5, 10), (1, 10),
            (6, 7), (7, 8), (8, 9), (9, 10), (10, 6), (11, 6), (11, 7), (11, 8), (11, 9), (11, 10),
        ];
        let g = Graph::new(12, &e).unwrap();
        let c = kempe5(&g);
        assert!(is_proper(&g, &c));
        assert!(c.iter().all(|&x| (1..=5).contains(&x)));
        let d = greedy_degeneracy(&g);
        assert!(is_proper(&g, &d) && d.iter().all(|&x| x <= 6));
    }

    #[test]
    fn strategy_names() {
        assert_eq!("exact4".parse::<Strategy>(), Ok(Strategy::Exact(4)));
        assert_eq!("kempe5".parse::<Strategy>(), Ok(Strategy::Kempe5));
        assert!("exact0".parse::<Strategy>().is_err());
    }
}
