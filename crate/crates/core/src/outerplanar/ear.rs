//! Pure case rules: given the canonical shape of a precolored edge and what
//! the embedding looks like around the new face, say which vertices get
//! which `(C, U)` and which edges lose the ★ guarantee.

use super::palette::{match_form, normalize_palette, Permutation, Shape};
use super::patterns::*;
use super::OuterplanarError;
use crate::verify::Color;

/// Local names for the vertices a rule touches. Positions follow the
/// face `v1, v2, v3, ..., vk` (1-based), with `v3` adjacent to `v2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Slot {
    Path(usize),
    /// Apex of the triangle on `{v1, v3}` (three-vertex ears) or on
    /// `{v3, v4}` (four-vertex ears).
    X,
    /// Apex of the triangle on `{v2, v3}`.
    Y,
    /// Apex of the triangle on `{x, v3}` away from `x, v1, v3`.
    Z,
    /// `w_i` on the face `v3, w1, ..., w_{k-2}, v2` beyond `{v2, v3}`.
    Beyond(usize),
}

/// What lies across an edge, away from the face being colored.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Side {
    #[default]
    Nothing,
    /// An uncolored face with this many vertices.
    Face(usize),
}

impl Side {
    fn is_triangle(self) -> bool {
        self == Side::Face(3)
    }

    fn len(self) -> Option<usize> {
        match self {
            Side::Nothing => None,
            Side::Face(k) => Some(k),
        }
    }
}

/// Embedding facts consulted by the shared-unique rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EarContext {
    pub across13: Side,
    pub across23: Side,
    /// Across `{x, v3}` from the `{v1, v3}` triangle.
    pub across_x3: Side,
    /// Across `{y, v3}` from the `{v2, v3}` triangle.
    pub across_y3: Side,
    pub across34: Side,
}

impl EarContext {
    /// The same context read with `v1` and `v2` exchanged.
    pub fn mirrored(self) -> Self {
        EarContext {
            across13: self.across23,
            across23: self.across13,
            across_x3: self.across_y3,
            across_y3: self.across_x3,
            across34: self.across34,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExemptReason {
    Bridge,
    /// Block colored by the all-five-faces rule; ★ is not tracked there.
    WholeBlock,
    /// The edge borders no face that is still uncolored.
    NoFurtherFace,
    /// Both faces on the edge are colored by this step.
    TwoFacesColored,
    /// The face over the edge is colored next by the equal-colors rule.
    Pending,
}

/// Result of one rule, in the canonical frame.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EarOutcome {
    pub case: CaseId,
    pub assign: Vec<(Slot, Color, Color)>,
    pub exempt: Vec<(Slot, Slot, ExemptReason)>,
    pub pending: Option<(Slot, Slot)>,
    /// Further faces colored by this step, named by an edge on their near
    /// side, in the order they were reached.
    pub faces: Vec<(Slot, Slot)>,
    /// `v1` and `v2` of the caller were exchanged (and the interior read
    /// backwards) to reach the canonical frame.
    pub reversed: bool,
}

impl EarOutcome {
    fn new(case: CaseId) -> Self {
        EarOutcome {
            case,
            assign: Vec::new(),
            exempt: Vec::new(),
            pending: None,
            faces: Vec::new(),
            reversed: false,
        }
    }

    fn fixed(p: &FixedPattern, slots: &[Slot]) -> Self {
        let mut out = EarOutcome::new(p.case);
        out.assign = slots
            .iter()
            .zip(p.colors.iter().zip(p.unique))
            .map(|(&s, (&c, &u))| (s, c, u))
            .collect();
        out
    }

    fn cyclic(rule: &CyclicRule, k: usize, pre: &[Color], slot: impl Fn(usize) -> Slot) -> Self {
        let colors = rule.colors(k, pre);
        let unique = rule.unique(&colors);
        let mut out = EarOutcome::new(rule.case(k));
        out.assign = (rule.precolored..k).map(|i| (slot(i + 1), colors[i], unique[i])).collect();
        out
    }

    fn exempt(mut self, a: Slot, b: Slot, why: ExemptReason) -> Self {
        self.exempt.push((a, b, why));
        self
    }

    /// Swaps `v1` and `v2` together with colors 1 and 2, so a rule written
    /// for one side can serve the other.
    fn mirror_shared(mut self) -> Self {
        let slot = |s: Slot| match s {
            Slot::Path(1) => Slot::Path(2),
            Slot::Path(2) => Slot::Path(1),
            other => other,
        };
        let col = |c: Color| match c {
            1 => 2,
            2 => 1,
            other => other,
        };
        for a in &mut self.assign {
            *a = (slot(a.0), col(a.1), col(a.2));
        }
        for e in &mut self.exempt {
            *e = (slot(e.0), slot(e.1), e.2);
        }
        self.pending = self.pending.map(|(a, b)| (slot(a), slot(b)));
        for f in &mut self.faces {
            *f = (slot(f.0), slot(f.1));
        }
        self
    }

    fn map_colors(&mut self, perm: &Permutation) {
        for a in &mut self.assign {
            a.1 = perm.invert(a.1);
            a.2 = perm.invert(a.2);
        }
    }
}

fn mismatch(what: String) -> OuterplanarError {
    OuterplanarError::ShapeMismatch(what)
}

use Slot::Path as P;

/// Fresh face of length `k` (not 5). Returns colors and unique colors.
pub fn color_face_fresh(k: usize) -> Result<(Vec<Color>, Vec<Color>), OuterplanarError> {
    if k < 3 || k == 5 {
        return Err(mismatch(format!("fresh face of length {k}")));
    }
    let c = FRESH_FACE.colors(k, &[]);
    let u = FRESH_FACE.unique(&c);
    Ok((c, u))
}

/// Face of length `k` whose first vertex is colored `(c1, u1)`. The first
/// entries of the returned sequences repeat the given state.
pub fn color_face_one_precolored(
    k: usize,
    c1: Color,
    u1: Color,
) -> Result<(CaseId, Vec<Color>, Vec<Color>), OuterplanarError> {
    if c1 == u1 {
        return Err(OuterplanarError::InvalidPrecolor(c1));
    }
    if k < 3 {
        return Err(mismatch(format!("face of length {k}")));
    }
    let norm = normalize_palette(&[(c1, u1)])?;
    let (case, mut c, mut u) = if k == 3 {
        let p = ONE_VERTEX_TRIANGLE;
        let mut c = vec![1];
        c.extend_from_slice(p.colors);
        let mut u = vec![2];
        u.extend_from_slice(p.unique);
        (p.case, c, u)
    } else {
        let c = ONE_VERTEX.colors(k, &[1]);
        let mut u = ONE_VERTEX.unique(&c);
        u[0] = 2;
        (ONE_VERTEX.case(k), c, u)
    };
    for x in c.iter_mut().chain(u.iter_mut()) {
        *x = norm.perm.invert(*x);
    }
    Ok((case, c, u))
}

/// Face of length `k` over an edge `{v1, v2}` normalized to `C = 4, 4` and
/// `U = 1, 2`, in the canonical palette.
pub fn color_face_equal_colors(k: usize) -> Result<EarOutcome, OuterplanarError> {
    match k {
        4 => Ok(EarOutcome::fixed(&EQUAL_SQUARE, &[P(3), P(4)])),
        5 => Ok(EarOutcome::fixed(&EQUAL_PENTAGON, &[P(3), P(4), P(5)])),
        k if k >= 6 => Ok(EarOutcome::cyclic(&EQUAL_LONG, k, &[4, 4], P)),
        _ => Err(mismatch(format!("equal-colors face of length {k}"))),
    }
}

fn distinct_rule(k: usize) -> EarOutcome {
    match k {
        3 => EarOutcome::fixed(&DISTINCT_TRIANGLE, &[P(3)]),
        4 => EarOutcome::fixed(&DISTINCT_SQUARE, &[P(3), P(4)]),
        _ => EarOutcome::cyclic(&DISTINCT_LONG, k, &[1, 2], P),
    }
}

fn shared_triangle(ctx: &EarContext) -> Result<EarOutcome, OuterplanarError> {
    use ExemptReason::*;
    let (a, b) = (ctx.across13, ctx.across23);
    if a == Side::Nothing && b == Side::Nothing {
        return Ok(EarOutcome::fixed(&SHARED_TRIANGLE_LONE, &[P(3)]).exempt(P(3), P(1), NoFurtherFace));
    }
    if b == Side::Nothing || a == Side::Nothing {
        let lone_on_23 = b == Side::Nothing;
        let out = EarOutcome::fixed(&SHARED_TRIANGLE_ONE_SIDE, &[P(3)]).exempt(P(2), P(3), NoFurtherFace);
        return Ok(if lone_on_23 { out } else { out.mirror_shared() });
    }
    let long = |s: Side| s.len().filter(|&k| k != 3);
    if let Some(k) = long(b).or(long(a)) {
        let on_23 = long(b).is_some();
        let mut out = EarOutcome::fixed(&SHARED_TRIANGLE_LONG_FACE, &[P(3)]).exempt(P(2), P(3), TwoFacesColored);
        let beyond = EarOutcome::cyclic(&SHARED_TRIANGLE_BEYOND, k, &[2, 4], |i| Slot::Beyond(i - 2));
        out.assign.extend(beyond.assign);
        out.faces.push((P(2), P(3)));
        return Ok(if on_23 { out } else { out.mirror_shared() });
    }
    // triangles on both sides
    if ctx.across_x3.is_triangle() {
        let mut out = EarOutcome::fixed(&SHARED_TRIANGLE_FAN, &[P(3), Slot::X, Slot::Y, Slot::Z])
            .exempt(P(1), P(3), TwoFacesColored)
            .exempt(P(2), P(3), TwoFacesColored)
            .exempt(Slot::X, P(3), TwoFacesColored);
        out.faces = vec![(P(1), P(3)), (P(2), P(3)), (Slot::X, P(3))];
        return Ok(out);
    }
    let mut out = EarOutcome::fixed(&SHARED_TRIANGLE_FAN_PENDING, &[P(3), Slot::X, Slot::Y])
        .exempt(P(1), P(3), TwoFacesColored);
    out.faces = vec![(P(1), P(3)), (P(2), P(3))];
    Ok(match ctx.across_x3 {
        Side::Nothing => out.exempt(Slot::X, P(3), NoFurtherFace),
        Side::Face(_) => {
            out.pending = Some((Slot::X, P(3)));
            out.exempt(Slot::X, P(3), Pending)
        }
    })
}

fn shared_rule(k: usize, ctx: &EarContext) -> Result<EarOutcome, OuterplanarError> {
    use ExemptReason::*;
    match k {
        3 => shared_triangle(ctx),
        4 => Ok(match ctx.across34 {
            Side::Face(3) => {
                let mut out = EarOutcome::fixed(&SHARED_SQUARE_TRIANGLE, &[P(3), P(4), Slot::X])
                    .exempt(P(3), P(4), TwoFacesColored);
                out.faces.push((P(3), P(4)));
                out
            }
            Side::Face(_) => {
                let mut out = EarOutcome::fixed(&SHARED_SQUARE_PENDING, &[P(3), P(4)]).exempt(P(3), P(4), Pending);
                out.pending = Some((P(3), P(4)));
                out
            }
            Side::Nothing => EarOutcome::fixed(&SHARED_SQUARE_PENDING, &[P(3), P(4)]).exempt(P(3), P(4), NoFurtherFace),
        }),
        5 => Ok(EarOutcome::fixed(&SHARED_PENTAGON, &[P(3), P(4), P(5)])),
        _ => Ok(EarOutcome::cyclic(&SHARED_LONG, k, &[1, 2], P)),
    }
}

/// Colors the new vertices of a face of length `k` glued on the edge
/// `{v1, v2}` whose states are `endpoints`. `ctx` is read in the caller's
/// frame. `equal_colors_allowed` admits the equal-colors shape, which only
/// arises on a flagged pending edge.
pub fn color_ear_path(
    k: usize,
    endpoints: [(Color, Color); 2],
    ctx: &EarContext,
    equal_colors_allowed: bool,
) -> Result<EarOutcome, OuterplanarError> {
    if k < 3 {
        return Err(mismatch(format!("ear of length {k}")));
    }
    let norm = normalize_palette(&endpoints)?;
    let ctx = if norm.reversed { ctx.mirrored() } else { *ctx };
    let mut out = match norm.shape {
        Shape::DistinctUnique => distinct_rule(k),
        Shape::SharedUnique => shared_rule(k, &ctx)?,
        Shape::EqualColors if equal_colors_allowed => color_face_equal_colors(k)?,
        shape => return Err(mismatch(format!("edge state {endpoints:?} ({shape:?}) on a face of length {k}"))),
    };
    out.reversed = norm.reversed;
    out.map_colors(&norm.perm);
    Ok(out)
}

/// Root face of a block whose faces all have five vertices.
pub fn five_root() -> EarOutcome {
    EarOutcome::fixed(&FIVE_ROOT, &[P(1), P(2), P(3), P(4), P(5)])
}

/// Ear of an all-five block over an edge in state `endpoints`.
pub fn five_ear(endpoints: [(Color, Color); 2]) -> Result<EarOutcome, OuterplanarError> {
    let swapped = [endpoints[1], endpoints[0]];
    for (form, pattern) in &FIVE_EARS {
        for (input, reversed) in [(&endpoints, false), (&swapped, true)] {
            if let Some(perm) = match_form(input, form) {
                let mut out = EarOutcome::fixed(pattern, &[P(3), P(4), P(5)]);
                out.reversed = reversed;
                out.map_colors(&perm);
                return Ok(out);
            }
        }
    }
    Err(OuterplanarError::Case5Unreachable(endpoints))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn colors_of(out: &EarOutcome) -> Vec<(Slot, Color, Color)> {
        out.assign.clone()
    }

    #[test]
    fn distinct_triangle() {
        let out = color_ear_path(3, [(1, 2), (2, 3)], &EarContext::default(), false).unwrap();
        assert_eq!(out.case, CaseId::DistinctTriangle);
        assert_eq!(colors_of(&out), vec![(P(3), 4, 2)]);
    }

    #[test]
    fn shared_pentagon() {
        let out = color_ear_path(5, [(1, 3), (2, 3)], &EarContext::default(), false).unwrap();
        assert_eq!(out.case, CaseId::SharedPentagon);
        let c: Vec<_> = out.assign.iter().map(|a| a.1).collect();
        assert_eq!(c, vec![1, 3, 2]);
    }

    #[test]
    fn double_triangle_with_z() {
        let ctx = EarContext {
            across13: Side::Face(3),
            across23: Side::Face(3),
            across_x3: Side::Face(3),
            ..Default::default()
        };
        let out = color_ear_path(3, [(1, 3), (2, 3)], &ctx, false).unwrap();
        assert_eq!(out.case, CaseId::SharedTriangleFan);
        assert_eq!(
            out.assign,
            vec![(P(3), 1, 4), (Slot::X, 2, 3), (Slot::Y, 4, 2), (Slot::Z, 3, 1)]
        );
        assert_eq!(out.exempt.len(), 3);
    }

    #[test]
    fn one_sided_triangle_mirrors() {
        let ctx = EarContext {
            across23: Side::Face(4),
            ..Default::default()
        };
        let out = color_ear_path(3, [(1, 3), (2, 3)], &ctx, false).unwrap();
        assert_eq!(out.case, CaseId::SharedTriangleOneSide);
        // lone edge is {v1, v3}, so v3 points at v2
        assert_eq!(out.assign, vec![(P(3), 4, 2)]);
        assert_eq!(out.exempt[0].0, P(1));
    }

    #[test]
    fn equal_colors_only_when_pending() {
        let ctx = EarContext::default();
        assert!(color_ear_path(4, [(4, 1), (4, 2)], &ctx, false).is_err());
        let out = color_ear_path(4, [(4, 1), (4, 2)], &ctx, true).unwrap();
        assert_eq!(out.assign, vec![(P(3), 1, 4), (P(4), 3, 4)]);
        assert!(color_face_equal_colors(3).is_err());
    }

    #[test]
    fn fresh_face_rejects_five() {
        assert!(color_face_fresh(5).is_err());
        assert_eq!(color_face_fresh(3).unwrap(), (vec![1, 2, 3], vec![2, 3, 1]));
    }

    #[test]
    fn one_precolored_triangle() {
        let (_, c, u) = color_face_one_precolored(3, 1, 2).unwrap();
        assert_eq!(c, vec![1, 3, 4]);
        assert_eq!(u, vec![2, 1, 1]);
        assert!(color_face_one_precolored(4, 2, 2).is_err());
    }

    #[test]
    fn five_ear_subcase_one() {
        let out = five_ear([(1, 2), (1, 3)]).unwrap();
        assert_eq!(out.case, CaseId::FiveEarSameColor);
        let c: Vec<_> = out.assign.iter().map(|a| a.1).collect();
        assert_eq!(c, vec![2, 2, 3]);
    }
}
