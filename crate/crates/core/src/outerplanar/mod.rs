//! Complete open-neighborhood conflict-free coloring of outerplanar graphs
//! with at most four colors, and of cacti with at most three.
//!
//! The block tree is walked from a root block. Inside a 2-connected block
//! the inner faces are colored along an ear decomposition; each step picks
//! a canonical case from the `(C, U)` states of the already colored vertices
//! it touches. `U(v)` is the color `v` expects to see exactly once among its
//! neighbors and is carried along, never recomputed.

mod cactus;
pub mod ear;
pub mod palette;
pub mod patterns;

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use thiserror::Error;

use crate::embed::{ear_decomposition, embed_block, reorder_next_ear, EarDecomposition, EmbedError, OuterplanarEmbedding};
use crate::graph::{block_decomposition, connected_components, Block, BlockTree, Graph, Vertex};
use crate::verify::{audit_invariants, edge_key, CfColoring, Color, EdgeSet, Failure, Kind, Neighborhood};

pub use cactus::{cactus_state, complete_cf_cactus};
pub use ear::{
    color_ear_path, color_face_equal_colors, color_face_fresh, color_face_one_precolored, EarContext, EarOutcome,
    ExemptReason, Side, Slot,
};
pub use palette::{normalize_palette, Normalized, PaletteError, Permutation, Shape};
pub use patterns::CaseId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OuterplanarError {
    #[error("graph is not outerplanar")]
    NotOuterplanar,
    #[error("graph is not a cactus")]
    NotCactus,
    #[error("vertex {0} is isolated")]
    IsolatedVertex(Vertex),
    #[error("no case applies: {0}")]
    ShapeMismatch(String),
    #[error("precolored vertex has C = U = {0}")]
    InvalidPrecolor(Color),
    #[error("five-face ear over edge state {0:?} matches none of the four subcases")]
    Case5Unreachable([(Color, Color); 2]),
    #[error("after {case} the invariants fail at {failures:?}")]
    InvariantBreach { case: CaseId, failures: Vec<(Vertex, Failure)> },
    #[error(transparent)]
    Palette(#[from] PaletteError),
    #[error(transparent)]
    Embed(#[from] EmbedError),
}

/// A face the next step must color with the equal-colors rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PendingFace {
    pub edge: (Vertex, Vertex),
    pub raised_by: CaseId,
}

/// One applied rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub case: CaseId,
    pub colored: Vec<Vertex>,
    pub exempted: Vec<(Vertex, Vertex)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringState {
    /// 0 means uncolored.
    pub colors: Vec<Color>,
    /// 0 means unset.
    pub u_values: Vec<Color>,
    pub star_exempt: EdgeSet,
    pub exempt_reasons: BTreeMap<(Vertex, Vertex), ExemptReason>,
    pub pending_face: Option<PendingFace>,
    pub steps: Vec<Step>,
}

impl ColoringState {
    pub fn new(n: usize) -> Self {
        ColoringState {
            colors: vec![0; n],
            u_values: vec![0; n],
            star_exempt: EdgeSet::new(),
            exempt_reasons: BTreeMap::new(),
            pending_face: None,
            steps: Vec::new(),
        }
    }

    pub fn is_colored(&self, v: Vertex) -> bool {
        self.colors[v] != 0
    }

    pub fn pair(&self, v: Vertex) -> (Color, Color) {
        (self.colors[v], self.u_values[v])
    }

    fn set(&mut self, v: Vertex, c: Color, u: Color) {
        self.colors[v] = c;
        self.u_values[v] = u;
    }

    fn exempt(&mut self, u: Vertex, v: Vertex, why: ExemptReason) {
        let e = edge_key(u, v);
        self.star_exempt.insert(e);
        self.exempt_reasons.entry(e).or_insert(why);
    }

    /// Snapshot as a partial coloring carrying `U` as its witness.
    pub fn to_partial(&self) -> CfColoring {
        CfColoring::new(self.colors.clone(), Neighborhood::Open, Kind::Partial).with_witness(self.u_values.clone())
    }

    pub fn to_complete(&self) -> CfColoring {
        CfColoring::new(self.colors.clone(), Neighborhood::Open, Kind::Complete).with_witness(self.u_values.clone())
    }

    /// Distinct case ids applied so far.
    pub fn cases(&self) -> BTreeSet<CaseId> {
        self.steps.iter().map(|s| s.case).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct InductionOptions {
    /// Run `audit_invariants` after every step.
    pub audit_each_step: bool,
}

/// Full record of one run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InductionRun {
    pub coloring: CfColoring,
    pub state: ColoringState,
}

fn record(
    g: &Graph,
    state: &mut ColoringState,
    opts: InductionOptions,
    case: CaseId,
    colored: Vec<Vertex>,
    exempted: Vec<(Vertex, Vertex)>,
) -> Result<(), OuterplanarError> {
    state.steps.push(Step { case, colored, exempted });
    if opts.audit_each_step {
        let report = audit_invariants(g, &state.to_partial(), &state.star_exempt).expect("state sized to the graph");
        if !report.valid {
            return Err(OuterplanarError::InvariantBreach {
                case,
                failures: report.failures,
            });
        }
    }
    Ok(())
}

/// Colors one block. With `precolored`, that vertex keeps its `(C, U)`.
pub fn color_block(
    g: &Graph,
    block: &Block,
    emb: Option<&OuterplanarEmbedding>,
    precolored: Option<Vertex>,
    state: &mut ColoringState,
    opts: InductionOptions,
) -> Result<(), OuterplanarError> {
    if block.is_bridge {
        let (a, b) = (block.vertices[0], block.vertices[1]);
        let (case, colored) = match precolored {
            None => {
                let p = patterns::BRIDGE_FRESH;
                state.set(a, p.colors[0], p.unique[0]);
                state.set(b, p.colors[1], p.unique[1]);
                (p.case, vec![a, b])
            }
            Some(v) => {
                let w = if v == a { b } else { a };
                let norm = normalize_palette(&[state.pair(v)])?;
                let p = patterns::BRIDGE_PRECOLORED;
                state.set(w, norm.perm.invert(p.colors[0]), norm.perm.invert(p.unique[0]));
                (p.case, vec![w])
            }
        };
        state.exempt(a, b, ExemptReason::Bridge);
        return record(g, state, opts, case, colored, vec![(a, b)]);
    }
    let owned;
    let emb = match emb {
        Some(e) => e,
        None => {
            owned = embed_block(g, &block.vertices)?;
            &owned
        }
    };
    BlockRun::new(g, emb, state, opts).run(precolored)
}

struct BlockRun<'a> {
    g: &'a Graph,
    emb: &'a OuterplanarEmbedding,
    state: &'a mut ColoringState,
    opts: InductionOptions,
    colored_face: Vec<bool>,
    ed: EarDecomposition,
}

impl<'a> BlockRun<'a> {
    fn new(g: &'a Graph, emb: &'a OuterplanarEmbedding, state: &'a mut ColoringState, opts: InductionOptions) -> Self {
        let faces = emb.inner_faces.len();
        BlockRun {
            g,
            emb,
            state,
            opts,
            colored_face: vec![false; faces],
            ed: EarDecomposition {
                root_face: 0,
                ears: Vec::new(),
                emitted: 0,
            },
        }
    }

    fn run(mut self, precolored: Option<Vertex>) -> Result<(), OuterplanarError> {
        let emb = self.emb;
        let all_five = emb.inner_faces.iter().all(|f| f.len() == 5);
        let root = match precolored {
            Some(p) => (0..emb.inner_faces.len())
                .find(|&f| emb.face_contains(f, p))
                .ok_or_else(|| OuterplanarError::ShapeMismatch(format!("vertex {p} is not in the block")))?,
            None => (0..emb.inner_faces.len()).find(|&f| emb.face_len(f) != 5).unwrap_or(0),
        };
        self.ed = ear_decomposition(emb, root)?;
        let five_mode = precolored.is_none() && all_five;
        if five_mode {
            for &(u, v) in emb.face_of_edge.keys() {
                self.state.exempt(u, v, ExemptReason::WholeBlock);
            }
        }
        self.color_root(root, precolored, five_mode)?;
        while let Some(ear) = self.ed.next_ear() {
            if self.colored_face[ear.face] {
                continue;
            }
            let promoted = match self.state.pending_face.take() {
                Some(p) => p.edge == ear.base_edge,
                None => false,
            };
            self.colored_face[ear.face] = true;
            // v1 = far end of the base, v2 = the end the walk starts from
            let mut seq = vec![ear.path[ear.path.len() - 1], ear.path[0]];
            seq.extend_from_slice(ear.interior());
            if five_mode {
                let out = ear::five_ear([self.state.pair(seq[0]), self.state.pair(seq[1])])?;
                self.apply(&seq, out)?;
            } else {
                let ctx = self.context(&seq);
                let k = seq.len();
                let out = color_ear_path(k, [self.state.pair(seq[0]), self.state.pair(seq[1])], &ctx, promoted)?;
                self.apply(&seq, out)?;
            }
        }
        Ok(())
    }

    fn color_root(&mut self, root: usize, precolored: Option<Vertex>, five_mode: bool) -> Result<(), OuterplanarError> {
        let emb = self.emb;
        let face = &emb.inner_faces[root];
        self.colored_face[root] = true;
        let k = face.len();
        if five_mode {
            let out = ear::five_root();
            return self.apply(face, out);
        }
        let (case, seq, c, u) = match precolored {
            None => {
                let (c, u) = color_face_fresh(k)?;
                (patterns::FRESH_FACE.case(k), face.clone(), c, u)
            }
            Some(p) => {
                let i = face.iter().position(|&x| x == p).expect("root face holds the vertex");
                let seq: Vec<Vertex> = (0..k).map(|s| face[(i + s) % k]).collect();
                let (cp, up) = self.state.pair(p);
                let (case, c, u) = color_face_one_precolored(k, cp, up)?;
                (case, seq, c, u)
            }
        };
        let start = usize::from(precolored.is_some());
        for i in start..k {
            self.state.set(seq[i], c[i], u[i]);
        }
        record(self.g, self.state, self.opts, case, seq[start..].to_vec(), Vec::new())
    }

    /// Uncolored face across `{a, b}`, if any.
    fn across(&self, a: Vertex, b: Vertex) -> Option<usize> {
        self.emb.faces_of(a, b).iter().copied().find(|&f| !self.colored_face[f])
    }

    fn side(&self, face: Option<usize>) -> Side {
        face.map_or(Side::Nothing, |f| Side::Face(self.emb.face_len(f)))
    }

    fn apex(&self, face: usize, a: Vertex, b: Vertex) -> Option<Vertex> {
        let f = &self.emb.inner_faces[face];
        (f.len() == 3).then(|| f.iter().copied().find(|&x| x != a && x != b)).flatten()
    }

    fn context(&self, seq: &[Vertex]) -> EarContext {
        let mut ctx = EarContext::default();
        if seq.len() == 3 {
            let (v1, v2, v3) = (seq[0], seq[1], seq[2]);
            let f13 = self.across(v1, v3);
            let f23 = self.across(v2, v3);
            ctx.across13 = self.side(f13);
            ctx.across23 = self.side(f23);
            if let Some(x) = f13.and_then(|f| self.apex(f, v1, v3)) {
                let f = f13.unwrap();
                ctx.across_x3 = self.side(self.emb.faces_of(x, v3).iter().copied().find(|&h| h != f && !self.colored_face[h]));
            }
            if let Some(y) = f23.and_then(|f| self.apex(f, v2, v3)) {
                let f = f23.unwrap();
                ctx.across_y3 = self.side(self.emb.faces_of(y, v3).iter().copied().find(|&h| h != f && !self.colored_face[h]));
            }
        } else if seq.len() == 4 {
            ctx.across34 = self.side(self.across(seq[2], seq[3]));
        }
        ctx
    }

    /// Maps the rule's slots to vertices, writes the colors, marks the
    /// faces it colored and consumes their ears.
    fn apply(&mut self, seq: &[Vertex], out: EarOutcome) -> Result<(), OuterplanarError> {
        let seq: Vec<Vertex> = if out.reversed {
            let mut s = vec![seq[1], seq[0]];
            s.extend(seq[2..].iter().rev());
            s
        } else {
            seq.to_vec()
        };
        let mut named: BTreeMap<Slot, Vertex> = seq.iter().enumerate().map(|(i, &v)| (Slot::Path(i + 1), v)).collect();
        let mut face_ids = Vec::new();
        // Faces are listed so that each one's near edge is already named.
        for &(a, b) in &out.faces {
            let (va, vb) = (named[&a], named[&b]);
            let f = self
                .across(va, vb)
                .ok_or_else(|| OuterplanarError::ShapeMismatch(format!("no uncolored face over {{{va}, {vb}}}")))?;
            self.colored_face[f] = true;
            face_ids.push((f, edge_key(va, vb)));
            if let Some(apex) = self.apex(f, va, vb) {
                let slot = match (a, b, seq.len()) {
                    (Slot::Path(1), Slot::Path(3), 3) => Some(Slot::X),
                    (Slot::Path(2), Slot::Path(3), 3) => Some(Slot::Y),
                    (Slot::X, Slot::Path(3), _) => Some(Slot::Z),
                    (Slot::Path(3), Slot::Path(4), 4) => Some(Slot::X),
                    _ => None,
                };
                if let Some(s) = slot {
                    named.insert(s, apex);
                }
            }
            if out.assign.iter().any(|a| matches!(a.0, Slot::Beyond(_))) {
                let walk = self.emb.face_path(f, named[&Slot::Path(3)], if a == Slot::Path(3) { vb } else { va });
                for (i, &w) in walk.iter().enumerate().take(walk.len() - 1).skip(1) {
                    named.insert(Slot::Beyond(i), w);
                }
            }
        }
        let mut colored = Vec::new();
        for &(slot, c, u) in &out.assign {
            let v = *named
                .get(&slot)
                .ok_or_else(|| OuterplanarError::ShapeMismatch(format!("{slot:?} has no vertex in {}", out.case)))?;
            if self.state.is_colored(v) {
                return Err(OuterplanarError::ShapeMismatch(format!("{} recolors vertex {v}", out.case)));
            }
            self.state.set(v, c, u);
            colored.push(v);
        }
        let mut exempted = Vec::new();
        for &(a, b, why) in &out.exempt {
            let (va, vb) = (named[&a], named[&b]);
            self.state.exempt(va, vb, why);
            exempted.push(edge_key(va, vb));
        }
        if let Some((a, b)) = out.pending {
            self.state.pending_face = Some(PendingFace {
                edge: edge_key(named[&a], named[&b]),
                raised_by: out.case,
            });
        }
        for (_, base) in face_ids {
            self.ed = reorder_next_ear(self.emb, &self.ed, base)?;
            self.ed.next_ear();
        }
        if let Some(p) = self.state.pending_face {
            match reorder_next_ear(self.emb, &self.ed, p.edge) {
                Ok(ed) => self.ed = ed,
                Err(EmbedError::NoSuchEar(..)) => self.state.pending_face = None,
                Err(e) => return Err(e.into()),
            }
        }
        record(self.g, self.state, self.opts, out.case, colored, exempted)
    }
}

fn check_input(g: &Graph) -> Result<(), OuterplanarError> {
    if let Some(v) = g.vertices().find(|&v| g.degree(v) == 0) {
        return Err(OuterplanarError::IsolatedVertex(v));
    }
    Ok(())
}

/// Order in which blocks of one component are colored, each with the cut
/// vertex it shares with an earlier block.
pub(crate) fn block_order(bt: &BlockTree, root: usize) -> Vec<(usize, Option<Vertex>)> {
    let mut seen = vec![false; bt.blocks.len()];
    seen[root] = true;
    let mut order = vec![(root, None)];
    let mut queue = VecDeque::from([root]);
    while let Some(b) = queue.pop_front() {
        for (nb, cut) in bt.neighbors(b) {
            if !seen[nb] {
                seen[nb] = true;
                order.push((nb, Some(cut)));
                queue.push_back(nb);
            }
        }
    }
    order
}

pub(crate) fn blocks_of_component(bt: &BlockTree, comp: &[Vertex]) -> Vec<usize> {
    let set: BTreeSet<usize> = comp.iter().flat_map(|&v| bt.blocks_of_vertex[v].iter().copied()).collect();
    set.into_iter().collect()
}

/// Complete 4-coloring of an outerplanar graph, with the full run record.
pub fn complete_cf_outerplanar_with(g: &Graph, opts: InductionOptions) -> Result<InductionRun, OuterplanarError> {
    check_input(g)?;
    let bt = block_decomposition(g);
    let mut embeddings: Vec<Option<OuterplanarEmbedding>> = Vec::with_capacity(bt.blocks.len());
    for b in &bt.blocks {
        embeddings.push(if b.is_bridge {
            None
        } else {
            Some(embed_block(g, &b.vertices).map_err(|_| OuterplanarError::NotOuterplanar)?)
        });
    }
    let mut state = ColoringState::new(g.n());
    for comp in connected_components(g) {
        let in_comp = blocks_of_component(&bt, &comp);
        let root = in_comp
            .iter()
            .copied()
            .find(|&b| match &embeddings[b] {
                None => true,
                Some(e) => e.inner_faces.iter().any(|f| f.len() != 5),
            })
            .unwrap_or(in_comp[0]);
        for (b, cut) in block_order(&bt, root) {
            color_block(g, &bt.blocks[b], embeddings[b].as_ref(), cut, &mut state, opts)?;
        }
    }
    Ok(InductionRun {
        coloring: state.to_complete(),
        state,
    })
}

/// Complete conflict-free coloring on open neighborhoods with at most four
/// colors.
pub fn complete_cf_outerplanar(g: &Graph) -> Result<CfColoring, OuterplanarError> {
    complete_cf_outerplanar_with(g, InductionOptions::default()).map(|r| r.coloring)
}

/// Colors a block whose inner faces all have five vertices with colors
/// `{1, 2, 3}`.
pub fn color_five_cycle_block(g: &Graph, emb: &OuterplanarEmbedding) -> Result<ColoringState, OuterplanarError> {
    if let Some(f) = emb.inner_faces.iter().find(|f| f.len() != 5) {
        return Err(OuterplanarError::ShapeMismatch(format!("face of length {} in a five-face block", f.len())));
    }
    let mut state = ColoringState::new(g.n());
    BlockRun::new(g, emb, &mut state, InductionOptions::default()).run(None)?;
    Ok(state)
}
