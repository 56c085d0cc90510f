//! Palette relabelling. The case patterns are written for one canonical
//! choice of colors; a live `(C, U)` state is matched onto that choice by a
//! permutation of `{1, 2, 3, 4}`, and pattern output is mapped back.

use thiserror::Error;

use crate::verify::Color;

pub const PALETTE: Color = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PaletteError {
    #[error("precolored state {0:?} matches no canonical case shape")]
    NoCanonicalForm(Vec<(Color, Color)>),
}

/// A bijection on `{1, ..., 4}`; `forward[c]` is the canonical image of
/// the live color `c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Permutation {
    forward: [Color; PALETTE as usize + 1],
}

impl Permutation {
    pub fn identity() -> Self {
        Permutation {
            forward: [0, 1, 2, 3, 4],
        }
    }

    pub fn apply(&self, c: Color) -> Color {
        self.forward[c as usize]
    }

    pub fn invert(&self, canonical: Color) -> Color {
        (1..=PALETTE)
            .find(|&c| self.forward[c as usize] == canonical)
            .unwrap_or(0)
    }

    pub fn is_identity(&self) -> bool {
        *self == Permutation::identity()
    }
}

/// Builds the permutation that sends `pairs` onto `form` entrywise, if one
/// exists. Colors not mentioned are paired up in ascending order.
pub fn match_form(pairs: &[(Color, Color)], form: &[(Color, Color)]) -> Option<Permutation> {
    if pairs.len() != form.len() {
        return None;
    }
    let mut forward = [0 as Color; PALETTE as usize + 1];
    let mut backward = [0 as Color; PALETTE as usize + 1];
    for (&(c, u), &(fc, fu)) in pairs.iter().zip(form) {
        for (live, canon) in [(c, fc), (u, fu)] {
            if !(1..=PALETTE).contains(&live) {
                return None;
            }
            let (f, b) = (&mut forward[live as usize], &mut backward[canon as usize]);
            if (*f != 0 && *f != canon) || (*b != 0 && *b != live) {
                return None;
            }
            *f = canon;
            *b = live;
        }
    }
    let mut free = (1..=PALETTE).filter(|&c| backward[c as usize] == 0);
    for live in 1..=PALETTE {
        if forward[live as usize] == 0 {
            forward[live as usize] = free.next()?;
        }
    }
    Some(Permutation { forward })
}

/// Which canonical shape a precolored state was matched to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    /// One vertex, normalized to `C = 1, U = 2`.
    OneVertex,
    /// Edge with distinct colors and distinct unique colors, normalized to
    /// `(1, 2), (2, 3)`.
    DistinctUnique,
    /// Edge whose endpoints share their unique color, normalized to
    /// `(1, 3), (2, 3)`.
    SharedUnique,
    /// Edge whose endpoints share their color, normalized to `(4, 1), (4, 2)`.
    EqualColors,
}

pub const ONE_VERTEX: [(Color, Color); 1] = [(1, 2)];
pub const DISTINCT_UNIQUE: [(Color, Color); 2] = [(1, 2), (2, 3)];
pub const SHARED_UNIQUE: [(Color, Color); 2] = [(1, 3), (2, 3)];
pub const EQUAL_COLORS: [(Color, Color); 2] = [(4, 1), (4, 2)];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Normalized {
    pub perm: Permutation,
    pub pairs: Vec<(Color, Color)>,
    pub shape: Shape,
    /// The two pairs had to be swapped to reach the canonical form.
    pub reversed: bool,
}

/// Finds the canonical shape for one precolored vertex or one precolored
/// edge `(v1, v2)`. Two-vertex inputs may come back `reversed`, meaning the
/// canonical form describes `(v2, v1)`.
pub fn normalize_palette(pairs: &[(Color, Color)]) -> Result<Normalized, PaletteError> {
    let candidates: &[(Shape, &[(Color, Color)])] = match pairs.len() {
        1 => &[(Shape::OneVertex, &ONE_VERTEX)],
        2 => &[
            (Shape::DistinctUnique, &DISTINCT_UNIQUE),
            (Shape::SharedUnique, &SHARED_UNIQUE),
            (Shape::EqualColors, &EQUAL_COLORS),
        ],
        _ => &[],
    };
    let swapped: Vec<(Color, Color)> = pairs.iter().rev().copied().collect();
    for &(shape, form) in candidates {
        for (input, reversed) in [(pairs, false), (&swapped[..], true)] {
            if reversed && pairs.len() < 2 {
                continue;
            }
            if let Some(perm) = match_form(input, form) {
                return Ok(Normalized {
                    perm,
                    pairs: form.to_vec(),
                    shape,
                    reversed,
                });
            }
        }
    }
    Err(PaletteError::NoCanonicalForm(pairs.to_vec()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabel_single_vertex() {
        let n = normalize_palette(&[(3, 1)]).unwrap();
        assert_eq!(n.perm.apply(3), 1);
        assert_eq!(n.perm.apply(1), 2);
        assert_eq!(n.pairs, vec![(1, 2)]);
        assert!(normalize_palette(&[(1, 2)]).unwrap().perm.is_identity());
    }

    #[test]
    fn shared_unique_edge() {
        let n = normalize_palette(&[(2, 4), (3, 4)]).unwrap();
        assert_eq!(n.shape, Shape::SharedUnique);
        assert!(!n.reversed);
        assert_eq!((n.perm.apply(2), n.perm.apply(3), n.perm.apply(4)), (1, 2, 3));
        assert_eq!(n.perm.apply(1), 4);
    }

    #[test]
    fn distinct_unique_needs_reflection_when_the_second_vertex_points_back() {
        // U(v2) = C(v1): reading the edge backwards gives the canonical form
        let n = normalize_palette(&[(3, 1), (4, 3)]).unwrap();
        assert_eq!(n.shape, Shape::DistinctUnique);
        assert!(n.reversed);
        assert_eq!((n.perm.apply(4), n.perm.apply(3), n.perm.apply(1)), (1, 2, 3));
    }

    #[test]
    fn equal_colors_edge() {
        let n = normalize_palette(&[(2, 1), (2, 3)]).unwrap();
        assert_eq!(n.shape, Shape::EqualColors);
        assert_eq!((n.perm.apply(2), n.perm.apply(1), n.perm.apply(3)), (4, 1, 2));
    }

    #[test]
    fn unmatched_shapes() {
        // C and U swapped across the edge: only two distinct values
        assert!(normalize_palette(&[(1, 2), (2, 1)]).is_err());
        // same color, same unique color
        assert!(normalize_palette(&[(1, 2), (1, 2)]).is_err());
        assert!(normalize_palette(&[(1, 1)]).is_err());
    }

    #[test]
    fn inverse_round_trips() {
        let perm = match_form(&[(4, 2), (1, 3)], &[(1, 2), (3, 4)]).unwrap();
        for c in 1..=4 {
            assert_eq!(perm.invert(perm.apply(c)), c);
        }
        assert_eq!(perm.apply(2), 2);
    }
}
