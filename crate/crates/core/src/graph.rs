//! Simple undirected graphs over dense vertex ids, plus the traversals and
//! decompositions the coloring pipelines are built on.

use std::collections::VecDeque;

use thiserror::Error;

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(Vertex, Vertex),
}

/// A simple undirected graph. Neighbor lists are kept sorted ascending, so
/// two graphs with the same edge set compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<Vertex>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph on `n` vertices, rejecting self-loops, repeated pairs
    /// and out-of-range ids.
    pub fn new(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (u.min(w[0]), u.max(w[0]));
                return Err(GraphError::DuplicateEdge(a, b));
            }
        }
        Ok(Graph {
            adjacency,
            edge_count: edges.len(),
        })
    }

    /// Builds a graph, silently merging repeated pairs and dropping loops.
    pub fn from_edges_lossy(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            if u != v {
                adjacency[u].push(v);
                adjacency[v].push(u);
            }
        }
        let mut edge_count = 0;
        for list in adjacency.iter_mut() {
            list.sort_unstable();
            list.dedup();
            edge_count += list.len();
        }
        Graph {
            adjacency,
            edge_count: edge_count / 2,
        }
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && v < self.n() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    /// The subgraph induced by `vertices`, relabelled to `0..vertices.len()`
    /// in the given order. Returns the graph and the new→old id map.
    pub fn induced(&self, vertices: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let edges = vertices.iter().enumerate().flat_map(|(i, &v)| {
            let local = &local;
            self.neighbors(v)
                .iter()
                .filter_map(move |&w| (local[w] != usize::MAX && local[w] > i).then_some((i, local[w])))
        });
        (Graph::from_edges_lossy(vertices.len(), edges), vertices.to_vec())
    }

    /// Copy of the graph without the listed edges.
    pub fn without_edges(&self, removed: &[(Vertex, Vertex)]) -> Graph {
        let mut drop: Vec<(Vertex, Vertex)> = removed.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        drop.sort_unstable();
        let kept = self.edges().filter(|e| drop.binary_search(e).is_err());
        Graph::from_edges_lossy(self.n(), kept)
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || connected_components(self).len() == 1
    }

    /// Smallest `d` such that every subgraph has a vertex of degree at most `d`.
    pub fn degeneracy(&self) -> usize {
        let (_, d) = smallest_last_order(self);
        d
    }
}

/// Shortest-path length between `u` and `v`; `None` when they lie in
/// different components.
pub fn bfs_distance(g: &Graph, u: Vertex, v: Vertex) -> Result<Option<usize>, GraphError> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    Ok(bfs_distances(g, u)[v])
}

/// Distances from `source` to every vertex.
pub fn bfs_distances(g: &Graph, source: Vertex) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.n()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(x) = queue.pop_front() {
        let d = dist[x].unwrap();
        for &y in g.neighbors(x) {
            if dist[y].is_none() {
                dist[y] = Some(d + 1);
                queue.push_back(y);
            }
        }
    }
    dist
}

/// Vertex sets of the connected components, each sorted, ordered by their
/// smallest member.
pub fn connected_components(g: &Graph) -> Vec<Vec<Vertex>> {
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for s in g.vertices() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for &y in g.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    comp.push(y);
                    stack.push(y);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Identifies `v` with its neighbor `target`: every other neighbor of `v`
/// becomes a neighbor of `target`, parallel edges merge, and `v` disappears.
///
/// Returns the contracted graph and a map `old id -> Some(new id)` (`None`
/// for `v`). Surviving vertices keep their relative order.
pub fn contract_into(
    g: &Graph,
    v: Vertex,
    target: Vertex,
) -> Result<(Graph, Vec<Option<Vertex>>), GraphError> {
    g.check_vertex(v)?;
    g.check_vertex(target)?;
    if !g.has_edge(v, target) {
        return Err(GraphError::NotAdjacent(v, target));
    }
    let remap: Vec<Option<Vertex>> = g
        .vertices()
        .map(|x| match x.cmp(&v) {
            std::cmp::Ordering::Less => Some(x),
            std::cmp::Ordering::Equal => None,
            std::cmp::Ordering::Greater => Some(x - 1),
        })
        .collect();
    let image = |x: Vertex| if x == v { remap[target].unwrap() } else { remap[x].unwrap() };
    let edges = g.edges().map(|(a, b)| (image(a), image(b)));
    Ok((Graph::from_edges_lossy(g.n() - 1, edges), remap))
}

/// Smallest-last vertex order (repeatedly remove a minimum-degree vertex,
/// ties by id) and the degeneracy it witnesses. The returned order lists
/// vertices in removal order.
pub fn smallest_last_order(g: &Graph) -> (Vec<Vertex>, usize) {
    let n = g.n();
    let mut degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut degeneracy = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (degree[v], v))
            .unwrap();
        degeneracy = degeneracy.max(degree[v]);
        removed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                degree[w] -= 1;
            }
        }
    }
    (order, degeneracy)
}

/// One block of a block decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    /// Sorted vertex ids.
    pub vertices: Vec<Vertex>,
    /// Edges `(u, v)` with `u < v`, sorted.
    pub edges: Vec<(Vertex, Vertex)>,
    pub is_bridge: bool,
}

impl Block {
    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }
}

/// Blocks (maximal 2-connected subgraphs and bridges) and the block-cut
/// incidence between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockTree {
    pub blocks: Vec<Block>,
    /// Sorted cut vertices.
    pub cut_vertices: Vec<Vertex>,
    /// For every vertex, the ids of the blocks that contain it.
    pub blocks_of_vertex: Vec<Vec<usize>>,
}

impl BlockTree {
    pub fn is_cut_vertex(&self, v: Vertex) -> bool {
        self.cut_vertices.binary_search(&v).is_ok()
    }

    /// Blocks sharing a cut vertex with `block`, with the shared vertex.
    pub fn neighbors(&self, block: usize) -> Vec<(usize, Vertex)> {
        let mut out = Vec::new();
        for &v in &self.blocks[block].vertices {
            if self.blocks_of_vertex[v].len() > 1 {
                for &b in &self.blocks_of_vertex[v] {
                    if b != block {
                        out.push((b, v));
                    }
                }
            }
        }
        out
    }
}

/// Biconnected components by the classical low-point DFS (iterative).
/// Blocks are ordered by their sorted vertex lists.
pub fn block_decomposition(g: &Graph) -> BlockTree {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0;
    let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
    let mut raw_blocks: Vec<Vec<(Vertex, Vertex)>> = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        // (vertex, parent, next neighbor index)
        let mut stack: Vec<(Vertex, Option<Vertex>, usize)> = vec![(root, None, 0)];
        while let Some(top) = stack.last_mut() {
            let (v, parent) = (top.0, top.1);
            if top.2 < g.degree(v) {
                let w = g.neighbors(v)[top.2];
                top.2 += 1;
                if Some(w) == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, Some(v), 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(p) = parent {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == (p, v) {
                                break;
                            }
                        }
                        raw_blocks.push(block);
                    }
                }
            }
        }
    }

    let mut blocks: Vec<Block> = raw_blocks
        .into_iter()
        .map(|raw| {
            let mut edges: Vec<(Vertex, Vertex)> = raw.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
            edges.sort_unstable();
            let mut vertices: Vec<Vertex> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
            vertices.sort_unstable();
            vertices.dedup();
            Block {
                is_bridge: edges.len() == 1,
                vertices,
                edges,
            }
        })
        .collect();
    blocks.sort_by(|a, b| a.vertices.cmp(&b.vertices));

    let mut blocks_of_vertex = vec![Vec::new(); n];
    for (i, b) in blocks.iter().enumerate() {
        for &v in &b.vertices {
            blocks_of_vertex[v].push(i);
        }
    }
    let cut_vertices = (0..n).filter(|&v| blocks_of_vertex[v].len() > 1).collect();
    BlockTree {
        blocks,
        cut_vertices,
        blocks_of_vertex,
    }
}

/// True when `g` is connected and every block is a bridge or a cycle.
pub fn is_cactus(g: &Graph) -> bool {
    g.n() > 0
        && g.is_connected()
        && block_decomposition(g)
            .blocks
            .iter()
            .all(|b| b.is_bridge || b.edges.len() == b.vertices.len())
}
