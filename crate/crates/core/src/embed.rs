//! Outerplanar recognition, block embeddings and ear decompositions.
//!
//! A 2-connected outerplanar block has exactly one Hamiltonian cycle (its
//! outer face); every other edge is a chord, and the chords cut the polygon
//! into the inner faces. The cycle is recovered by repeatedly removing a
//! degree-2 vertex and bridging its two neighbors, then re-inserting the
//! removed vertices in reverse order.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use thiserror::Error;

use crate::graph::{block_decomposition, Graph, Vertex};
use crate::verify::edge_key;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbedError {
    #[error("graph is not outerplanar")]
    NotOuterplanar,
    #[error("vertex set does not induce a 2-connected block")]
    NotTwoConnected,
    #[error("face {0} does not exist")]
    InvalidFace(usize),
    #[error("no remaining ear has base edge {{{0}, {1}}}")]
    NoSuchEar(Vertex, Vertex),
    #[error("base edge {{{0}, {1}}} is not yet part of the decomposition")]
    BaseNotPresent(Vertex, Vertex),
}

/// Combinatorial embedding of one 2-connected outerplanar block, in the
/// ids of the host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OuterplanarEmbedding {
    /// Hamiltonian outer cycle, starting at the smallest id and heading to
    /// its smaller cycle neighbor.
    pub outer_cycle: Vec<Vertex>,
    /// Inner faces in canonical cyclic form, sorted by vertex set.
    pub inner_faces: Vec<Vec<Vertex>>,
    /// Weak dual: faces adjacent when they share a chord.
    pub dual_tree: Vec<Vec<usize>>,
    /// Every block edge mapped to the one or two inner faces containing it.
    pub face_of_edge: BTreeMap<(Vertex, Vertex), Vec<usize>>,
}

impl OuterplanarEmbedding {
    pub fn vertices(&self) -> &[Vertex] {
        &self.outer_cycle
    }

    pub fn faces_of(&self, u: Vertex, v: Vertex) -> &[usize] {
        self.face_of_edge.get(&edge_key(u, v)).map(Vec::as_slice).unwrap_or(&[])
    }

    /// The face across edge `{u, v}` from `face`, if any.
    pub fn other_face(&self, face: usize, u: Vertex, v: Vertex) -> Option<usize> {
        self.faces_of(u, v).iter().copied().find(|&f| f != face)
    }

    pub fn face_len(&self, face: usize) -> usize {
        self.inner_faces[face].len()
    }

    pub fn face_contains(&self, face: usize, v: Vertex) -> bool {
        self.inner_faces[face].contains(&v)
    }

    pub fn edge_count(&self) -> usize {
        self.face_of_edge.len()
    }

    /// Walk of `face` from `from` to `to` that avoids the edge `{from, to}`
    /// (both ends included). The two must be adjacent on the face.
    pub fn face_path(&self, face: usize, from: Vertex, to: Vertex) -> Vec<Vertex> {
        let f = &self.inner_faces[face];
        let k = f.len();
        let i = f.iter().position(|&x| x == from).expect("vertex on face");
        let forward = f[(i + 1) % k] != to;
        (0..k)
            .map(|s| if forward { f[(i + s) % k] } else { f[(i + k - s) % k] })
            .collect()
    }
}

/// Rotates a cycle to start at its smallest vertex and continue toward the
/// smaller of that vertex's two cycle neighbors.
pub fn canonical_cycle(cycle: &[Vertex]) -> Vec<Vertex> {
    let k = cycle.len();
    let (i, _) = cycle.iter().enumerate().min_by_key(|(_, &v)| v).unwrap();
    let next = cycle[(i + 1) % k];
    let prev = cycle[(i + k - 1) % k];
    if k < 3 || next <= prev {
        (0..k).map(|s| cycle[(i + s) % k]).collect()
    } else {
        (0..k).map(|s| cycle[(i + k - s) % k]).collect()
    }
}

/// True iff every 2-connected block of `g` admits an outerplanar embedding.
pub fn is_outerplanar(g: &Graph) -> bool {
    let bt = block_decomposition(g);
    bt.blocks
        .iter()
        .filter(|b| !b.is_bridge)
        .all(|b| embed_block(g, &b.vertices).is_ok())
}

fn hamiltonian_by_reduction(local: &Graph) -> Option<Vec<Vertex>> {
    let n = local.n();
    let mut adj: Vec<BTreeSet<Vertex>> = local.vertices().map(|v| local.neighbors(v).iter().copied().collect()).collect();
    let mut alive: BTreeSet<Vertex> = local.vertices().collect();
    let mut removed: Vec<(Vertex, Vertex, Vertex)> = Vec::with_capacity(n);
    while alive.len() > 3 {
        let v = *alive.iter().find(|&&v| adj[v].len() == 2)?;
        let mut it = adj[v].iter().copied();
        let (u, w) = (it.next()?, it.next()?);
        alive.remove(&v);
        adj[u].remove(&v);
        adj[w].remove(&v);
        adj[v].clear();
        adj[u].insert(w);
        adj[w].insert(u);
        removed.push((v, u, w));
    }
    let base: Vec<Vertex> = alive.iter().copied().collect();
    if base.len() != 3 || base.iter().any(|&v| adj[v].len() != 2) {
        return None;
    }
    let mut cycle = base;
    while let Some((v, u, w)) = removed.pop() {
        let k = cycle.len();
        let i = (0..k).find(|&i| {
            let (a, b) = (cycle[i], cycle[(i + 1) % k]);
            (a == u && b == w) || (a == w && b == u)
        })?;
        cycle.insert(i + 1, v);
    }
    Some(cycle)
}

/// Embeds the block induced by `block`; fails unless the block is
/// 2-connected (at least three vertices) and outerplanar.
pub fn embed_block(g: &Graph, block: &[Vertex]) -> Result<OuterplanarEmbedding, EmbedError> {
    let mut verts = block.to_vec();
    verts.sort_unstable();
    verts.dedup();
    if verts.len() < 3 {
        return Err(EmbedError::NotTwoConnected);
    }
    let (local, ids) = g.induced(&verts);
    let bt = block_decomposition(&local);
    if bt.blocks.len() != 1 || bt.blocks[0].vertices.len() != local.n() {
        return Err(EmbedError::NotTwoConnected);
    }
    let cycle = hamiltonian_by_reduction(&local).ok_or(EmbedError::NotOuterplanar)?;
    let k = cycle.len();
    if k != local.n() || (0..k).any(|i| !local.has_edge(cycle[i], cycle[(i + 1) % k])) {
        return Err(EmbedError::NotOuterplanar);
    }
    let mut pos = vec![0; k];
    for (i, &v) in cycle.iter().enumerate() {
        pos[v] = i;
    }
    let mut chords: Vec<(usize, usize)> = local
        .edges()
        .map(|(a, b)| (pos[a].min(pos[b]), pos[a].max(pos[b])))
        .filter(|&(a, b)| b - a != 1 && !(a == 0 && b == k - 1))
        .collect();
    chords.sort_unstable();
    for (i, &(a, b)) in chords.iter().enumerate() {
        for &(c, d) in &chords[i + 1..] {
            if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                return Err(EmbedError::NotOuterplanar);
            }
        }
    }

    // split the polygon (in cycle positions) along each chord
    let mut faces: Vec<Vec<usize>> = vec![(0..k).collect()];
    for &(a, b) in &chords {
        let fi = faces
            .iter()
            .position(|f| f.contains(&a) && f.contains(&b))
            .expect("non-crossing chord lies in one face");
        let f = faces.swap_remove(fi);
        let i = f.iter().position(|&x| x == a).unwrap();
        let j = f.iter().position(|&x| x == b).unwrap();
        let (i, j) = (i.min(j), i.max(j));
        let first: Vec<usize> = f[i..=j].to_vec();
        let second: Vec<usize> = f[j..].iter().chain(f[..=i].iter()).copied().collect();
        faces.push(first);
        faces.push(second);
    }

    let to_global = |p: usize| ids[cycle[p]];
    let mut inner_faces: Vec<Vec<Vertex>> = faces
        .iter()
        .map(|f| canonical_cycle(&f.iter().map(|&p| to_global(p)).collect::<Vec<_>>()))
        .collect();
    inner_faces.sort_by_key(|f| {
        let mut s = f.clone();
        s.sort_unstable();
        s
    });
    let outer_cycle = canonical_cycle(&(0..k).map(to_global).collect::<Vec<_>>());

    let mut face_of_edge: BTreeMap<(Vertex, Vertex), Vec<usize>> = BTreeMap::new();
    for (fi, f) in inner_faces.iter().enumerate() {
        for i in 0..f.len() {
            face_of_edge
                .entry(edge_key(f[i], f[(i + 1) % f.len()]))
                .or_default()
                .push(fi);
        }
    }
    let mut dual_tree = vec![Vec::new(); inner_faces.len()];
    for fs in face_of_edge.values() {
        if let [a, b] = fs[..] {
            dual_tree[a].push(b);
            dual_tree[b].push(a);
        }
    }
    for list in dual_tree.iter_mut() {
        list.sort_unstable();
    }
    Ok(OuterplanarEmbedding {
        outer_cycle,
        inner_faces,
        dual_tree,
        face_of_edge,
    })
}

/// One ear: the face it closes, the pre-existing edge it is glued on, and
/// the walk around the face between the base edge's endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ear {
    pub face: usize,
    pub base_edge: (Vertex, Vertex),
    /// Starts at `base_edge.0`, ends at `base_edge.1`.
    pub path: Vec<Vertex>,
}

impl Ear {
    pub fn interior(&self) -> &[Vertex] {
        &self.path[1..self.path.len() - 1]
    }
}

/// A root face followed by ears, plus a cursor marking how many ears have
/// been handed out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EarDecomposition {
    pub root_face: usize,
    pub ears: Vec<Ear>,
    pub emitted: usize,
}

impl EarDecomposition {
    pub fn remaining(&self) -> &[Ear] {
        &self.ears[self.emitted..]
    }

    pub fn next_ear(&mut self) -> Option<Ear> {
        let ear = self.ears.get(self.emitted).cloned();
        if ear.is_some() {
            self.emitted += 1;
        }
        ear
    }

    /// True when `{u, v}` is an edge of the root face or of an emitted ear.
    pub fn has_edge(&self, emb: &OuterplanarEmbedding, u: Vertex, v: Vertex) -> bool {
        let faces = emb.faces_of(u, v);
        faces.contains(&self.root_face)
            || self.ears[..self.emitted].iter().any(|e| faces.contains(&e.face))
    }
}

/// Breadth-first ear order over the weak dual, starting at `root`.
pub fn ear_decomposition(emb: &OuterplanarEmbedding, root: usize) -> Result<EarDecomposition, EmbedError> {
    if root >= emb.inner_faces.len() {
        return Err(EmbedError::InvalidFace(root));
    }
    let mut seen = vec![false; emb.inner_faces.len()];
    seen[root] = true;
    let mut queue = VecDeque::from([root]);
    let mut ears = Vec::new();
    while let Some(f) = queue.pop_front() {
        for &g in &emb.dual_tree[f] {
            if seen[g] {
                continue;
            }
            seen[g] = true;
            let shared = shared_chord(emb, f, g);
            let base = edge_key(shared.0, shared.1);
            ears.push(Ear {
                face: g,
                base_edge: base,
                path: emb.face_path(g, base.0, base.1),
            });
            queue.push_back(g);
        }
    }
    Ok(EarDecomposition {
        root_face: root,
        ears,
        emitted: 0,
    })
}

fn shared_chord(emb: &OuterplanarEmbedding, f: usize, g: usize) -> (Vertex, Vertex) {
    *emb.face_of_edge
        .iter()
        .find(|(_, fs)| fs.contains(&f) && fs.contains(&g))
        .map(|(e, _)| e)
        .expect("dual neighbors share a chord")
}

/// Moves the not-yet-emitted ear glued on `must_process` to the front of
/// the remaining order, keeping everything else in place.
pub fn reorder_next_ear(
    emb: &OuterplanarEmbedding,
    ed: &EarDecomposition,
    must_process: (Vertex, Vertex),
) -> Result<EarDecomposition, EmbedError> {
    let key = edge_key(must_process.0, must_process.1);
    let offset = ed
        .remaining()
        .iter()
        .position(|e| e.base_edge == key)
        .ok_or(EmbedError::NoSuchEar(key.0, key.1))?;
    if !ed.has_edge(emb, key.0, key.1) {
        return Err(EmbedError::BaseNotPresent(key.0, key.1));
    }
    let mut out = ed.clone();
    let ear = out.ears.remove(ed.emitted + offset);
    out.ears.insert(ed.emitted, ear);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new(n, edges).unwrap()
    }

    fn cycle_edges(n: usize) -> Vec<(usize, usize)> {
        (0..n).map(|i| (i, (i + 1) % n)).collect()
    }

    fn fan() -> Graph {
        // path 1-2-3-4, all joined to 0
        graph(5, &[(1, 2), (2, 3), (3, 4), (0, 1), (0, 2), (0, 3), (0, 4)])
    }

    #[test]
    fn recognition() {
        let mut e = cycle_edges(6);
        e.push((0, 3));
        assert!(is_outerplanar(&graph(6, &e)));
        let k4 = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert!(!is_outerplanar(&k4));
        let k23 = graph(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]);
        assert!(!is_outerplanar(&k23));
    }

    #[test]
    fn five_cycle_embedding() {
        let g = graph(5, &cycle_edges(5));
        let emb = embed_block(&g, &[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(emb.outer_cycle, vec![0, 1, 2, 3, 4]);
        assert_eq!(emb.inner_faces, vec![vec![0, 1, 2, 3, 4]]);
        assert!(emb.dual_tree[0].is_empty());
    }

    #[test]
    fn square_with_chord() {
        let mut e = cycle_edges(4);
        e.push((0, 2));
        let emb = embed_block(&graph(4, &e), &[0, 1, 2, 3]).unwrap();
        assert_eq!(emb.inner_faces, vec![vec![0, 1, 2], vec![0, 2, 3]]);
        assert_eq!(emb.dual_tree, vec![vec![1], vec![0]]);
        assert_eq!(emb.faces_of(0, 2), &[0, 1]);

        let ed = ear_decomposition(&emb, 0).unwrap();
        assert_eq!(ed.ears.len(), 1);
        assert_eq!(ed.ears[0].base_edge, (0, 2));
        assert_eq!(ed.ears[0].interior(), &[3]);
    }

    #[test]
    fn fan_faces_form_a_path() {
        let emb = embed_block(&fan(), &[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(emb.outer_cycle, vec![0, 1, 2, 3, 4]);
        assert_eq!(emb.inner_faces, vec![vec![0, 1, 2], vec![0, 2, 3], vec![0, 3, 4]]);
        assert_eq!(emb.dual_tree, vec![vec![1], vec![0, 2], vec![1]]);

        let ed = ear_decomposition(&emb, 1).unwrap();
        let faces: Vec<usize> = ed.ears.iter().map(|e| e.face).collect();
        assert_eq!(faces, vec![0, 2]);
        assert_eq!(ed.ears[0].base_edge, (0, 2));
        assert_eq!(ed.ears[1].base_edge, (0, 3));
    }

    #[test]
    fn single_face_has_no_ears() {
        let emb = embed_block(&graph(5, &cycle_edges(5)), &[0, 1, 2, 3, 4]).unwrap();
        assert!(ear_decomposition(&emb, 0).unwrap().ears.is_empty());
        assert_eq!(ear_decomposition(&emb, 1), Err(EmbedError::InvalidFace(1)));
    }

    #[test]
    fn reorder_examples() {
        let emb = embed_block(&fan(), &[0, 1, 2, 3, 4]).unwrap();
        let ed = ear_decomposition(&emb, 0).unwrap();
        // rooted at the end face: ears over (0,2) then (0,3)
        assert_eq!(ed.ears[0].base_edge, (0, 2));
        // far face not promotable yet: its base edge belongs to an unemitted ear
        assert_eq!(
            reorder_next_ear(&emb, &ed, (0, 3)),
            Err(EmbedError::BaseNotPresent(0, 3))
        );
        // identity when the flagged ear is already first
        assert_eq!(reorder_next_ear(&emb, &ed, (2, 0)).unwrap(), ed);
        // outer edge bordering no further face
        assert_eq!(
            reorder_next_ear(&emb, &ed, (1, 2)),
            Err(EmbedError::NoSuchEar(1, 2))
        );

        let emb = embed_block(&fan(), &[0, 1, 2, 3, 4]).unwrap();
        let mut ed = ear_decomposition(&emb, 1).unwrap();
        let first = ed.next_ear().unwrap();
        assert_eq!(first.face, 0);
        // promote the far face ahead of nothing: only one ear remains
        let re = reorder_next_ear(&emb, &ed, (0, 3)).unwrap();
        assert_eq!(re.remaining()[0].face, 2);
    }

    #[test]
    fn not_two_connected() {
        let g = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(embed_block(&g, &[0, 1, 2, 3]), Err(EmbedError::NotTwoConnected));
        assert_eq!(embed_block(&g, &[0, 1]), Err(EmbedError::NotTwoConnected));
    }

    #[test]
    fn wheel_is_rejected() {
        // hub 0 with rim 1..5: 2-connected, planar, not outerplanar
        let mut e: Vec<_> = (1..=5).map(|i| (0, i)).collect();
        e.extend((1..=5).map(|i| (i, i % 5 + 1)));
        let g = graph(6, &e);
        assert_eq!(embed_block(&g, &[0, 1, 2, 3, 4, 5]), Err(EmbedError::NotOuterplanar));
    }
}
