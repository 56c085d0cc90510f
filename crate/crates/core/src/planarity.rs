//! Planarity testing by path addition (Demoucron, Malgrange and Pertuiset),
//! run on each 2-connected block. Quadratic-ish, fine for the sizes the
//! CLI and the generators check.

use std::collections::{BTreeSet, VecDeque};

use crate::graph::{block_decomposition, Graph, Vertex};
use crate::verify::edge_key;

/// True iff `g` has a planar embedding.
pub fn is_planar(g: &Graph) -> bool {
    let bt = block_decomposition(g);
    bt.blocks.iter().filter(|b| !b.is_bridge).all(|b| {
        let (sub, _) = g.induced(&b.vertices);
        block_is_planar(&sub)
    })
}

/// Cheap necessary condition: `m ≤ 3n - 6` for `n ≥ 3`.
pub fn euler_bound_ok(g: &Graph) -> bool {
    g.n() < 3 || g.edge_count() <= 3 * g.n() - 6
}

fn block_is_planar(g: &Graph) -> bool {
    let n = g.n();
    if !euler_bound_ok(g) {
        return false;
    }
    if g.edge_count() <= n {
        // a 2-connected graph with m = n is a cycle
        return true;
    }
    let cycle = find_cycle(g);
    let mut in_h = vec![false; n];
    let mut h_edges: BTreeSet<(Vertex, Vertex)> = BTreeSet::new();
    for i in 0..cycle.len() {
        in_h[cycle[i]] = true;
        h_edges.insert(edge_key(cycle[i], cycle[(i + 1) % cycle.len()]));
    }
    let mut faces: Vec<Vec<Vertex>> = vec![cycle.clone(), cycle];
    while h_edges.len() < g.edge_count() {
        let fragments = fragments(g, &in_h, &h_edges);
        let mut choice: Option<(usize, usize)> = None;
        for (i, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&f| frag.attachments.iter().all(|a| faces[f].contains(a)))
                .collect();
            match admissible.len() {
                0 => return false,
                1 => {
                    choice = Some((i, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((i, admissible[0]));
                    }
                }
            }
        }
        let (fi, face) = choice.expect("an unembedded edge leaves a fragment");
        let path = fragment_path(g, &in_h, &fragments[fi]);
        for w in path.windows(2) {
            h_edges.insert(edge_key(w[0], w[1]));
        }
        for &v in &path {
            in_h[v] = true;
        }
        let (a, b) = split_face(&faces[face], &path);
        faces[face] = a;
        faces.push(b);
    }
    true
}

struct Fragment {
    /// Vertices off the embedded part; empty for a single chord.
    inner: Vec<Vertex>,
    attachments: BTreeSet<Vertex>,
    chord: Option<(Vertex, Vertex)>,
}

fn fragments(g: &Graph, in_h: &[bool], h_edges: &BTreeSet<(Vertex, Vertex)>) -> Vec<Fragment> {
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        if in_h[u] && in_h[v] && !h_edges.contains(&(u, v)) {
            out.push(Fragment {
                inner: Vec::new(),
                attachments: [u, v].into_iter().collect(),
                chord: Some((u, v)),
            });
        }
    }
    let mut seen = vec![false; g.n()];
    for s in g.vertices() {
        if in_h[s] || seen[s] {
            continue;
        }
        seen[s] = true;
        let mut inner = Vec::new();
        let mut attachments = BTreeSet::new();
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            inner.push(x);
            for &y in g.neighbors(x) {
                if in_h[y] {
                    attachments.insert(y);
                } else if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        out.push(Fragment {
            inner,
            attachments,
            chord: None,
        });
    }
    out
}

/// A path through the fragment joining two distinct attachment vertices.
fn fragment_path(g: &Graph, in_h: &[bool], frag: &Fragment) -> Vec<Vertex> {
    if let Some((u, v)) = frag.chord {
        return vec![u, v];
    }
    let inside: BTreeSet<Vertex> = frag.inner.iter().copied().collect();
    let a = *frag.attachments.iter().next().unwrap();
    let start = *g.neighbors(a).iter().find(|w| inside.contains(w)).unwrap();
    let mut parent = vec![usize::MAX; g.n()];
    parent[start] = start;
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        if let Some(&b) = g.neighbors(x).iter().find(|&&b| in_h[b] && b != a) {
            let mut path = vec![b];
            let mut cur = x;
            loop {
                path.push(cur);
                if cur == start {
                    break;
                }
                cur = parent[cur];
            }
            path.push(a);
            path.reverse();
            return path;
        }
        for &y in g.neighbors(x) {
            if inside.contains(&y) && parent[y] == usize::MAX {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    unreachable!("2-connected blocks give every fragment two attachments")
}

/// Splits the cyclic face by a path whose ends lie on it.
fn split_face(face: &[Vertex], path: &[Vertex]) -> (Vec<Vertex>, Vec<Vertex>) {
    let k = face.len();
    let (a, b) = (path[0], path[path.len() - 1]);
    let i = face.iter().position(|&x| x == a).unwrap();
    let j = face.iter().position(|&x| x == b).unwrap();
    let interior = &path[1..path.len() - 1];
    let walk = |from: usize, to: usize| {
        let mut out = Vec::new();
        let mut p = from;
        loop {
            out.push(face[p]);
            if p == to {
                break;
            }
            p = (p + 1) % k;
        }
        out
    };
    // a .. b along the face, then back to a through the path
    let mut first = walk(i, j);
    first.extend(interior.iter().rev());
    // b .. a along the face, then back to b through the path
    let mut second = walk(j, i);
    second.extend(interior.iter());
    (first, second)
}

fn find_cycle(g: &Graph) -> Vec<Vertex> {
    // DFS from 0 until a back edge closes a cycle
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    let mut stack = vec![(0usize, 0usize)];
    depth[0] = 0;
    parent[0] = 0;
    while let Some(top) = stack.last_mut() {
        let v = top.0;
        if top.1 < g.degree(v) {
            let w = g.neighbors(v)[top.1];
            top.1 += 1;
            if depth[w] == usize::MAX {
                depth[w] = depth[v] + 1;
                parent[w] = v;
                stack.push((w, 0));
            } else if w != parent[v] && depth[w] < depth[v] {
                let mut cycle = vec![v];
                let mut cur = v;
                while cur != w {
                    cur = parent[cur];
                    cycle.push(cur);
                }
                return cycle;
            }
        } else {
            stack.pop();
        }
    }
    unreachable!("2-connected blocks contain a cycle")
}
