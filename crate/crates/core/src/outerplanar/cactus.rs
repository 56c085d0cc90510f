//! Three colors for cacti: every block is a bridge or a cycle, colored
//! fresh for the root block and through the shared cut vertex afterwards.

use super::palette::normalize_palette;
use super::patterns::{CACTUS_BRIDGE_FRESH, CACTUS_BRIDGE_PRECOLORED, CACTUS_CYCLE_FRESH, CACTUS_CYCLE_PRECOLORED};
use super::{block_order, blocks_of_component, check_input, ColoringState, OuterplanarError, Step};
use crate::embed::embed_block;
use crate::graph::{block_decomposition, connected_components, is_cactus, Graph, Vertex};
use crate::verify::{CfColoring, Color};

fn write(state: &mut ColoringState, vs: &[Vertex], c: &[Color], u: &[Color], skip: usize, unmap: impl Fn(Color) -> Color) {
    for i in skip..vs.len() {
        state.colors[vs[i]] = unmap(c[i]);
        state.u_values[vs[i]] = unmap(u[i]);
    }
}

/// Runs the cactus rules and returns the full state, steps included.
pub fn cactus_state(g: &Graph) -> Result<ColoringState, OuterplanarError> {
    check_input(g)?;
    if !connected_components(g).iter().all(|comp| {
        let (sub, _) = g.induced(comp);
        is_cactus(&sub)
    }) {
        return Err(OuterplanarError::NotCactus);
    }
    let bt = block_decomposition(g);
    let mut state = ColoringState::new(g.n());
    for comp in connected_components(g) {
        let root = blocks_of_component(&bt, &comp)[0];
        for (b, cut) in block_order(&bt, root) {
            let block = &bt.blocks[b];
            let (seq, skip) = if block.is_bridge {
                let (a, w) = (block.vertices[0], block.vertices[1]);
                match cut {
                    Some(v) if v == w => (vec![w, a], 1),
                    Some(_) => (vec![a, w], 1),
                    None => (vec![a, w], 0),
                }
            } else {
                let face = embed_block(g, &block.vertices)?.outer_cycle;
                let k = face.len();
                let i = cut.map_or(0, |v| face.iter().position(|&x| x == v).expect("cut vertex on cycle"));
                ((0..k).map(|s| face[(i + s) % k]).collect(), usize::from(cut.is_some()))
            };
            let k = seq.len();
            let case = match (block.is_bridge, cut) {
                (true, None) => {
                    write(&mut state, &seq, CACTUS_BRIDGE_FRESH.colors, CACTUS_BRIDGE_FRESH.unique, 0, |c| c);
                    CACTUS_BRIDGE_FRESH.case
                }
                (false, None) => {
                    let c = CACTUS_CYCLE_FRESH.colors(k, &[]);
                    let u = CACTUS_CYCLE_FRESH.unique(&c);
                    write(&mut state, &seq, &c, &u, 0, |c| c);
                    CACTUS_CYCLE_FRESH.case(k)
                }
                (bridge, Some(v)) => {
                    let norm = normalize_palette(&[state.pair(v)])?;
                    let unmap = |c| norm.perm.invert(c);
                    if bridge {
                        let p = CACTUS_BRIDGE_PRECOLORED;
                        write(&mut state, &seq, &[1, p.colors[0]], &[2, p.unique[0]], 1, unmap);
                        p.case
                    } else {
                        let c = CACTUS_CYCLE_PRECOLORED.colors(k, &[1]);
                        let u = CACTUS_CYCLE_PRECOLORED.unique(&c);
                        write(&mut state, &seq, &c, &u, 1, unmap);
                        CACTUS_CYCLE_PRECOLORED.case(k)
                    }
                }
            };
            state.steps.push(Step {
                case,
                colored: seq[skip..].to_vec(),
                exempted: Vec::new(),
            });
        }
    }
    Ok(state)
}

/// Complete conflict-free coloring of a cactus on open neighborhoods with
/// at most three colors.
pub fn complete_cf_cactus(g: &Graph) -> Result<CfColoring, OuterplanarError> {
    cactus_state(g).map(|s| s.to_complete())
}
