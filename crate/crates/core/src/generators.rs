//! Seeded graph families. All randomness goes through `ChaCha8Rng`, so a
//! `(n, seed)` pair gives the same graph on every platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, Vertex};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// K4 with every edge subdivided and a pendant on each original vertex.
/// Originals are `0..4`, subdivision vertices `4..10`, pendants `10..14`.
pub fn figure1_gadget() -> Graph {
    let mut edges = Vec::new();
    let mut mid = 4;
    for a in 0..4 {
        for b in a + 1..4 {
            edges.push((a, mid));
            edges.push((mid, b));
            mid += 1;
        }
    }
    for a in 0..4 {
        edges.push((a, 10 + a));
    }
    Graph::new(14, &edges).expect("static gadget")
}

/// Six-cycle `0-3-1-5-2-4-0` on hubs `0, 1, 2` with pendants `6, 7, 8`.
pub fn figure2_gadget() -> Graph {
    // v1..v9 of the drawing are 0..8
    let edges = [(6, 0), (0, 3), (0, 4), (1, 3), (1, 5), (1, 7), (5, 2), (4, 2), (8, 2)];
    Graph::new(9, &edges).expect("static gadget")
}

pub fn cycle(n: usize) -> Graph {
    Graph::from_edges_lossy(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges_lossy(n, (1..n).map(|i| (i - 1, i)))
}

pub fn random_tree(n: usize, seed: u64) -> Graph {
    let mut r = rng(seed);
    let edges: Vec<_> = (1..n).map(|v| (r.gen_range(0..v), v)).collect();
    relabel(n, edges, &mut r)
}

fn relabel(n: usize, edges: Vec<(Vertex, Vertex)>, r: &mut ChaCha8Rng) -> Graph {
    let mut perm: Vec<Vertex> = (0..n).collect();
    perm.shuffle(r);
    Graph::from_edges_lossy(n, edges.into_iter().map(|(u, v)| (perm[u], perm[v])))
}

/// Triangulates the polygon `poly` (in cyclic order) by random
/// parenthesization, pushing polygon sides and chords.
fn triangulate(poly: &[Vertex], r: &mut ChaCha8Rng, edges: &mut Vec<(Vertex, Vertex)>) {
    let k = poly.len();
    for i in 0..k {
        edges.push((poly[i], poly[(i + 1) % k]));
    }
    let mut stack = vec![(0usize, k - 1)];
    while let Some((i, j)) = stack.pop() {
        if j - i < 2 {
            continue;
        }
        let m = r.gen_range(i + 1..j);
        if m - i > 1 {
            edges.push((poly[i], poly[m]));
        }
        if j - m > 1 {
            edges.push((poly[m], poly[j]));
        }
        stack.push((i, m));
        stack.push((m, j));
    }
}

/// Removes up to `attempts` random edges, skipping any whose removal would
/// disconnect the graph.
fn thin(n: usize, edges: &mut Vec<(Vertex, Vertex)>, attempts: usize, r: &mut ChaCha8Rng) {
    for _ in 0..attempts {
        if edges.is_empty() {
            break;
        }
        let i = r.gen_range(0..edges.len());
        let e = edges.swap_remove(i);
        if !Graph::from_edges_lossy(n, edges.iter().copied()).is_connected() {
            edges.push(e);
            let last = edges.len() - 1;
            edges.swap(i, last);
        }
    }
}

/// Connected outerplanar graph: triangulated polygons and bridges hung off
/// existing vertices, then connectivity-preserving edge deletions. `density`
/// in `[0, 1]`; 1 keeps every triangulation edge.
pub fn random_outerplanar(n: usize, seed: u64, density: f64) -> Graph {
    assert!(n >= 2, "need at least two vertices");
    let mut r = rng(seed);
    let mut edges = Vec::new();
    let mut count = 1;
    while count < n {
        let anchor = r.gen_range(0..count);
        let room = n - count;
        if room >= 2 && r.gen_bool(0.8) {
            let size = r.gen_range(2..=room.min(11));
            let mut poly = vec![anchor];
            poly.extend(count..count + size);
            count += size;
            triangulate(&poly, &mut r, &mut edges);
        } else {
            edges.push((anchor, count));
            count += 1;
        }
    }
    let density = density.clamp(0.0, 1.0);
    let attempts = ((1.0 - density) * edges.len() as f64).round() as usize;
    thin(n, &mut edges, attempts, &mut r);
    relabel(n, edges, &mut r)
}

/// Connected cactus: cycles and bridges hung off existing vertices.
pub fn random_cactus(n: usize, seed: u64) -> Graph {
    assert!(n >= 2, "need at least two vertices");
    let mut r = rng(seed);
    let mut edges = Vec::new();
    let mut count = 1;
    while count < n {
        let anchor = r.gen_range(0..count);
        let room = n - count;
        if room >= 2 && r.gen_bool(0.6) {
            let len = r.gen_range(3..=(room + 1).min(9));
            let mut prev = anchor;
            for v in count..count + len - 1 {
                edges.push((prev, v));
                prev = v;
            }
            edges.push((prev, anchor));
            count += len - 1;
        } else {
            edges.push((anchor, count));
            count += 1;
        }
    }
    relabel(n, edges, &mut r)
}

/// Connected planar graph: a stacked triangulation grown by inserting each
/// vertex into a random face, then connectivity-preserving deletions.
pub fn random_planar(n: usize, seed: u64) -> Graph {
    assert!(n >= 2, "need at least two vertices");
    let mut r = rng(seed);
    if n == 2 {
        return Graph::from_edges_lossy(2, [(0, 1)]);
    }
    let mut edges = vec![(0, 1), (1, 2), (0, 2)];
    // both sides of the starting triangle are faces
    let mut faces = vec![[0, 1, 2], [0, 1, 2]];
    for v in 3..n {
        let i = r.gen_range(0..faces.len());
        let [a, b, c] = faces.swap_remove(i);
        edges.extend([(a, v), (b, v), (c, v)]);
        faces.extend([[a, b, v], [b, c, v], [a, c, v]]);
    }
    let frac: f64 = r.gen_range(0.0..0.6);
    let attempts = (frac * edges.len() as f64).round() as usize;
    thin(n, &mut edges, attempts, &mut r);
    relabel(n, edges, &mut r)
}

/// 2-connected outerplanar graph: a triangulated `n`-gon keeping each
/// chord with probability `keep`.
pub fn random_polygon_dissection(n: usize, seed: u64, keep: f64) -> Graph {
    assert!(n >= 3, "need a polygon");
    let mut r = rng(seed);
    let poly: Vec<Vertex> = (0..n).collect();
    let mut edges = Vec::new();
    triangulate(&poly, &mut r, &mut edges);
    let keep = keep.clamp(0.0, 1.0);
    let (sides, chords) = edges.split_at(n);
    let mut kept = sides.to_vec();
    kept.extend(chords.iter().copied().filter(|_| r.gen_bool(keep)));
    relabel(n, kept, &mut r)
}

/// 2-connected outerplanar graph whose `faces` inner faces are all
/// pentagons, each glued on a random outer edge of the previous ones.
pub fn random_pentagon_block(faces: usize, seed: u64) -> Graph {
    assert!(faces >= 1);
    let mut r = rng(seed);
    let mut outer: Vec<Vertex> = (0..5).collect();
    let mut edges: Vec<(Vertex, Vertex)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    let mut count = 5;
    for _ in 1..faces {
        let i = r.gen_range(0..outer.len());
        let (a, b) = (outer[i], outer[(i + 1) % outer.len()]);
        let new = [count, count + 1, count + 2];
        count += 3;
        edges.extend([(a, new[0]), (new[0], new[1]), (new[1], new[2]), (new[2], b)]);
        for (j, &v) in new.iter().enumerate() {
            outer.insert(i + 1 + j, v);
        }
    }
    relabel(count, edges, &mut r)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Figure1,
    Figure2,
    Outerplanar,
    Cactus,
    Planar,
    Tree,
    Cycle,
    Path,
}

impl std::str::FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "figure1" => Family::Figure1,
            "figure2" => Family::Figure2,
            "outerplanar" => Family::Outerplanar,
            "cactus" => Family::Cactus,
            "planar" => Family::Planar,
            "tree" => Family::Tree,
            "cycle" => Family::Cycle,
            "path" => Family::Path,
            other => return Err(format!("unknown family '{other}'")),
        })
    }
}

/// Builds a member of `family`; `n` and `seed` are ignored by the fixed
/// gadgets.
pub fn generate(family: Family, n: usize, seed: u64) -> Graph {
    match family {
        Family::Figure1 => figure1_gadget(),
        Family::Figure2 => figure2_gadget(),
        Family::Outerplanar => random_outerplanar(n, seed, rng(seed ^ 0x5eed).gen_range(0.3..1.0)),
        Family::Cactus => random_cactus(n, seed),
        Family::Planar => random_planar(n, seed),
        Family::Tree => random_tree(n, seed),
        Family::Cycle => cycle(n),
        Family::Path => path(n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::is_outerplanar;
    use crate::graph::is_cactus;

    fn degree_histogram(g: &Graph) -> Vec<usize> {
        let mut h = vec![0; 5];
        for v in g.vertices() {
            h[g.degree(v)] += 1;
        }
        h
    }

    #[test]
    fn figure1_shape() {
        let g = figure1_gadget();
        assert_eq!((g.n(), g.edge_count()), (14, 16));
        assert_eq!(degree_histogram(&g), vec![0, 4, 6, 0, 4]);
    }

    #[test]
    fn figure2_shape() {
        let g = figure2_gadget();
        assert_eq!((g.n(), g.edge_count()), (9, 9));
        assert!(is_cactus(&g));
        assert!(is_outerplanar(&g));
        let cyc: Vec<_> = (0..9).filter(|&v| g.degree(v) >= 2).collect();
        assert_eq!(cyc.len(), 6);
    }

    #[test]
    fn small_members() {
        let t = random_outerplanar(3, 1, 1.0);
        assert_eq!(t.edge_count(), 3);
        assert_eq!(random_cactus(2, 9).edge_count(), 1);
        assert!(random_planar(4, 3).edge_count() <= 6);
    }

    #[test]
    fn class_membership_and_determinism() {
        for seed in 0..200 {
            let n = 2 + (seed as usize % 30);
            let o = random_outerplanar(n, seed, 0.7);
            assert!(o.is_connected() && is_outerplanar(&o), "seed {seed}");
            assert_eq!(o, random_outerplanar(n, seed, 0.7));
            let c = random_cactus(n, seed);
            assert!(c.is_connected() && is_cactus(&c), "seed {seed}");
            let p = random_planar(n, seed);
            assert!(p.is_connected() && p.edge_count() <= (3 * n).saturating_sub(6).max(1), "seed {seed}");
        }
    }
}
