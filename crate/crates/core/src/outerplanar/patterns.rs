//! Case patterns for the outerplanar induction, all in the canonical
//! palette. Positions are 1-based along a face `v1, v2, ..., vk`; when two
//! vertices are precolored they are `v1, v2` and `v3` is adjacent to `v2`.

use std::fmt;

use crate::verify::Color;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaseId {
    BridgeFresh,
    BridgePrecolored,
    FiveRoot,
    FiveEarSameColor,
    FiveEarChained,
    FiveEarSwapped,
    FiveEarEqualStates,
    FreshFaceRes0,
    FreshFaceRes1,
    FreshFaceRes2,
    OneVertexTriangle,
    OneVertexRes0,
    OneVertexRes1,
    OneVertexRes2,
    DistinctTriangle,
    DistinctSquare,
    DistinctLongRes0,
    DistinctLongRes1,
    DistinctLongRes2,
    SharedTriangleLone,
    SharedTriangleOneSide,
    SharedTriangleLongFace,
    SharedTriangleFan,
    SharedTriangleFanPending,
    SharedSquareTriangle,
    SharedSquarePending,
    SharedPentagon,
    SharedLong,
    SharedLongRes1,
    EqualSquare,
    EqualPentagon,
    EqualLongRes0,
    EqualLongRes1,
    EqualLongRes2,
    CactusBridgeFresh,
    CactusCycleFreshRes0,
    CactusCycleFreshRes1,
    CactusCycleFreshRes2,
    CactusBridgePrecolored,
    CactusCyclePrecoloredRes0,
    CactusCyclePrecoloredRes1,
    CactusCyclePrecoloredRes2,
}

impl CaseId {
    pub const ALL: [CaseId; 42] = [
        CaseId::BridgeFresh,
        CaseId::BridgePrecolored,
        CaseId::FiveRoot,
        CaseId::FiveEarSameColor,
        CaseId::FiveEarChained,
        CaseId::FiveEarSwapped,
        CaseId::FiveEarEqualStates,
        CaseId::FreshFaceRes0,
        CaseId::FreshFaceRes1,
        CaseId::FreshFaceRes2,
        CaseId::OneVertexTriangle,
        CaseId::OneVertexRes0,
        CaseId::OneVertexRes1,
        CaseId::OneVertexRes2,
        CaseId::DistinctTriangle,
        CaseId::DistinctSquare,
        CaseId::DistinctLongRes0,
        CaseId::DistinctLongRes1,
        CaseId::DistinctLongRes2,
        CaseId::SharedTriangleLone,
        CaseId::SharedTriangleOneSide,
        CaseId::SharedTriangleLongFace,
        CaseId::SharedTriangleFan,
        CaseId::SharedTriangleFanPending,
        CaseId::SharedSquareTriangle,
        CaseId::SharedSquarePending,
        CaseId::SharedPentagon,
        CaseId::SharedLong,
        CaseId::SharedLongRes1,
        CaseId::EqualSquare,
        CaseId::EqualPentagon,
        CaseId::EqualLongRes0,
        CaseId::EqualLongRes1,
        CaseId::EqualLongRes2,
        CaseId::CactusBridgeFresh,
        CaseId::CactusCycleFreshRes0,
        CaseId::CactusCycleFreshRes1,
        CaseId::CactusCycleFreshRes2,
        CaseId::CactusBridgePrecolored,
        CaseId::CactusCyclePrecoloredRes0,
        CaseId::CactusCyclePrecoloredRes1,
        CaseId::CactusCyclePrecoloredRes2,
    ];

    /// Stable kebab-case id.
    pub fn label(self) -> &'static str {
        use CaseId::*;
        match self {
            BridgeFresh => "bridge-fresh",
            BridgePrecolored => "bridge-precolored",
            FiveRoot => "five-root",
            FiveEarSameColor => "five-ear-same-color",
            FiveEarChained => "five-ear-chained",
            FiveEarSwapped => "five-ear-swapped",
            FiveEarEqualStates => "five-ear-equal-states",
            FreshFaceRes0 => "fresh-face-k0",
            FreshFaceRes1 => "fresh-face-k1",
            FreshFaceRes2 => "fresh-face-k2",
            OneVertexTriangle => "one-vertex-triangle",
            OneVertexRes0 => "one-vertex-k0",
            OneVertexRes1 => "one-vertex-k1",
            OneVertexRes2 => "one-vertex-k2",
            DistinctTriangle => "distinct-triangle",
            DistinctSquare => "distinct-square",
            DistinctLongRes0 => "distinct-long-k0",
            DistinctLongRes1 => "distinct-long-k1",
            DistinctLongRes2 => "distinct-long-k2",
            SharedTriangleLone => "shared-triangle-lone",
            SharedTriangleOneSide => "shared-triangle-one-side",
            SharedTriangleLongFace => "shared-triangle-long-face",
            SharedTriangleFan => "shared-triangle-fan",
            SharedTriangleFanPending => "shared-triangle-fan-pending",
            SharedSquareTriangle => "shared-square-triangle",
            SharedSquarePending => "shared-square-pending",
            SharedPentagon => "shared-pentagon",
            SharedLong => "shared-long",
            SharedLongRes1 => "shared-long-k1",
            EqualSquare => "equal-square",
            EqualPentagon => "equal-pentagon",
            EqualLongRes0 => "equal-long-k0",
            EqualLongRes1 => "equal-long-k1",
            EqualLongRes2 => "equal-long-k2",
            CactusBridgeFresh => "cactus-bridge-fresh",
            CactusCycleFreshRes0 => "cactus-cycle-fresh-k0",
            CactusCycleFreshRes1 => "cactus-cycle-fresh-k1",
            CactusCycleFreshRes2 => "cactus-cycle-fresh-k2",
            CactusBridgePrecolored => "cactus-bridge-precolored",
            CactusCyclePrecoloredRes0 => "cactus-cycle-precolored-k0",
            CactusCyclePrecoloredRes1 => "cactus-cycle-precolored-k1",
            CactusCyclePrecoloredRes2 => "cactus-cycle-precolored-k2",
        }
    }

    pub fn is_cactus(self) -> bool {
        self.label().starts_with("cactus-")
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Explicit colors for a short list of new vertices.
#[derive(Debug, Clone, Copy)]
pub struct FixedPattern {
    pub case: CaseId,
    pub colors: &'static [Color],
    pub unique: &'static [Color],
}

#[derive(Debug, Clone, Copy)]
pub enum UniqueRule {
    /// `U(v_i) = C(v_{i+1})`, wrapping around.
    Successor,
    /// Successor, except for the listed face lengths.
    SuccessorExcept(&'static [(usize, &'static [Color])]),
    /// Any neighbor on the face whose color differs from `C(v_i)`, trying
    /// the successor first.
    DistinctNeighbor,
}

/// A face rule: `precolored` leading positions are given, then `seeds`,
/// then `C(v_i) = C(v_{i-3})`, then corrections chosen by `k mod 3`.
/// A correction `(d, c)` sets `C(v_{k-d}) = c`.
#[derive(Debug, Clone, Copy)]
pub struct CyclicRule {
    pub precolored: usize,
    pub seeds: &'static [Color],
    pub fixes: [&'static [(usize, Color)]; 3],
    pub cases: [CaseId; 3],
    pub min_len: usize,
    pub unique: UniqueRule,
}

impl CyclicRule {
    pub fn case(&self, k: usize) -> CaseId {
        self.cases[k % 3]
    }

    /// Full color sequence of length `k`; `pre` fills the leading positions.
    pub fn colors(&self, k: usize, pre: &[Color]) -> Vec<Color> {
        assert_eq!(pre.len(), self.precolored);
        assert!(k >= self.min_len, "face too short for this rule");
        let mut c: Vec<Color> = pre.to_vec();
        for &s in self.seeds {
            if c.len() == k {
                break;
            }
            c.push(s);
        }
        while c.len() < k {
            c.push(c[c.len() - 3]);
        }
        for &(d, col) in self.fixes[k % 3] {
            c[k - 1 - d] = col;
        }
        c
    }

    /// Unique colors for every position of `colors` (precolored ones too,
    /// though callers keep their stored values).
    pub fn unique(&self, colors: &[Color]) -> Vec<Color> {
        let k = colors.len();
        if let UniqueRule::SuccessorExcept(table) = self.unique {
            if let Some((_, u)) = table.iter().find(|(len, _)| *len == k) {
                let mut out = vec![0; self.precolored];
                out.extend_from_slice(u);
                return out;
            }
        }
        (0..k)
            .map(|i| {
                let next = colors[(i + 1) % k];
                let prev = colors[(i + k - 1) % k];
                match self.unique {
                    UniqueRule::DistinctNeighbor if next == colors[i] => prev,
                    _ => next,
                }
            })
            .collect()
    }
}

// ---- bridges -----------------------------------------------------------

pub const BRIDGE_FRESH: FixedPattern = FixedPattern {
    case: CaseId::BridgeFresh,
    colors: &[1, 2],
    unique: &[2, 1],
};

/// Far endpoint of a bridge whose near endpoint is `C = 1, U = 2`.
pub const BRIDGE_PRECOLORED: FixedPattern = FixedPattern {
    case: CaseId::BridgePrecolored,
    colors: &[3],
    unique: &[1],
};

// ---- all-five blocks ---------------------------------------------------

pub const FIVE_ROOT: FixedPattern = FixedPattern {
    case: CaseId::FiveRoot,
    colors: &[1, 1, 2, 2, 3],
    unique: &[3, 2, 1, 3, 1],
};

/// Base-edge state (as `(C, U)` of `w1`, `w2`) and the colors of
/// `w3, w4, w5`, with `w3` adjacent to `w2`.
pub const FIVE_EARS: [([(Color, Color); 2], FixedPattern); 4] = [
    (
        [(1, 2), (1, 3)],
        FixedPattern {
            case: CaseId::FiveEarSameColor,
            colors: &[2, 2, 3],
            unique: &[1, 3, 1],
        },
    ),
    (
        [(1, 2), (2, 3)],
        FixedPattern {
            case: CaseId::FiveEarChained,
            colors: &[1, 3, 3],
            unique: &[2, 1, 1],
        },
    ),
    (
        [(1, 2), (2, 1)],
        FixedPattern {
            case: CaseId::FiveEarSwapped,
            colors: &[2, 3, 1],
            unique: &[3, 2, 3],
        },
    ),
    (
        [(1, 2), (1, 2)],
        FixedPattern {
            case: CaseId::FiveEarEqualStates,
            colors: &[1, 2, 3],
            unique: &[2, 3, 1],
        },
    ),
];

// ---- fresh face --------------------------------------------------------

pub const FRESH_FACE: CyclicRule = CyclicRule {
    precolored: 0,
    seeds: &[1, 2, 3],
    fixes: [&[], &[(0, 4)], &[(3, 4), (2, 2), (1, 3), (0, 4)]],
    cases: [
        CaseId::FreshFaceRes0,
        CaseId::FreshFaceRes1,
        CaseId::FreshFaceRes2,
    ],
    min_len: 3,
    unique: UniqueRule::Successor,
};

// ---- face with one precolored vertex (C = 1, U = 2) --------------------

pub const ONE_VERTEX_TRIANGLE: FixedPattern = FixedPattern {
    case: CaseId::OneVertexTriangle,
    colors: &[3, 4],
    unique: &[1, 1],
};

pub const ONE_VERTEX: CyclicRule = CyclicRule {
    precolored: 1,
    seeds: &[3, 2],
    fixes: [&[(0, 4)], &[(0, 4)], &[(1, 4)]],
    cases: [
        CaseId::OneVertexRes0,
        CaseId::OneVertexRes1,
        CaseId::OneVertexRes2,
    ],
    min_len: 4,
    unique: UniqueRule::Successor,
};

// ---- ears on a (1,2)/(2,3) edge ----------------------------------------

pub const DISTINCT_TRIANGLE: FixedPattern = FixedPattern {
    case: CaseId::DistinctTriangle,
    colors: &[4],
    unique: &[2],
};

pub const DISTINCT_SQUARE: FixedPattern = FixedPattern {
    case: CaseId::DistinctSquare,
    colors: &[4, 3],
    unique: &[3, 1],
};

pub const DISTINCT_LONG: CyclicRule = CyclicRule {
    precolored: 2,
    seeds: &[1, 3, 4],
    fixes: [&[(1, 2), (0, 4)], &[(1, 2)], &[]],
    cases: [
        CaseId::DistinctLongRes0,
        CaseId::DistinctLongRes1,
        CaseId::DistinctLongRes2,
    ],
    min_len: 5,
    unique: UniqueRule::Successor,
};

// ---- ears on a (1,3)/(2,3) edge ----------------------------------------

/// Triangle whose other two edges border no further face.
pub const SHARED_TRIANGLE_LONE: FixedPattern = FixedPattern {
    case: CaseId::SharedTriangleLone,
    colors: &[4],
    unique: &[2],
};

/// Triangle where `{v2, v3}` borders no further face.
pub const SHARED_TRIANGLE_ONE_SIDE: FixedPattern = FixedPattern {
    case: CaseId::SharedTriangleOneSide,
    colors: &[4],
    unique: &[1],
};

/// Triangle plus the non-triangular face `v2, v3, w1, ..., w_{k-2}` beyond
/// `{v2, v3}`; this rule colors that face with `v2 = 2, v3 = 4` fixed.
pub const SHARED_TRIANGLE_LONG_FACE: FixedPattern = FixedPattern {
    case: CaseId::SharedTriangleLongFace,
    colors: &[4],
    unique: &[1],
};

pub const SHARED_TRIANGLE_BEYOND: CyclicRule = CyclicRule {
    precolored: 2,
    seeds: &[3, 1, 4],
    fixes: [&[(2, 2), (1, 1), (0, 4)], &[], &[]],
    cases: [
        CaseId::SharedTriangleLongFace,
        CaseId::SharedTriangleLongFace,
        CaseId::SharedTriangleLongFace,
    ],
    min_len: 4,
    unique: UniqueRule::SuccessorExcept(&[(6, &[4, 3, 2, 2])]),
};

/// Triangles on both sides and a triangle `{x, v3, z}`; colors of
/// `v3, x, y, z`.
pub const SHARED_TRIANGLE_FAN: FixedPattern = FixedPattern {
    case: CaseId::SharedTriangleFan,
    colors: &[1, 2, 4, 3],
    unique: &[4, 3, 2, 1],
};

/// Triangles on both sides, `{x, v3}` not in a further triangle; colors of
/// `v3, x, y`. Leaves `{x, v3}` for the equal-colors rule.
pub const SHARED_TRIANGLE_FAN_PENDING: FixedPattern = FixedPattern {
    case: CaseId::SharedTriangleFanPending,
    colors: &[4, 4, 1],
    unique: &[2, 1, 2],
};

/// Four-vertex face with a triangle `{v3, v4, x}` beyond; colors of
/// `v3, v4, x`.
pub const SHARED_SQUARE_TRIANGLE: FixedPattern = FixedPattern {
    case: CaseId::SharedSquareTriangle,
    colors: &[1, 4, 3],
    unique: &[2, 3, 1],
};

pub const SHARED_SQUARE_PENDING: FixedPattern = FixedPattern {
    case: CaseId::SharedSquarePending,
    colors: &[4, 4],
    unique: &[2, 1],
};

pub const SHARED_PENTAGON: FixedPattern = FixedPattern {
    case: CaseId::SharedPentagon,
    colors: &[1, 3, 2],
    unique: &[3, 2, 1],
};

pub const SHARED_LONG: CyclicRule = CyclicRule {
    precolored: 2,
    seeds: &[4, 3],
    fixes: [&[], &[(2, 1), (0, 2)], &[]],
    cases: [CaseId::SharedLong, CaseId::SharedLongRes1, CaseId::SharedLong],
    min_len: 6,
    unique: UniqueRule::Successor,
};

// ---- faces over an edge with equal colors (4,1)/(4,2) -------------------

pub const EQUAL_SQUARE: FixedPattern = FixedPattern {
    case: CaseId::EqualSquare,
    colors: &[1, 3],
    unique: &[4, 4],
};

pub const EQUAL_PENTAGON: FixedPattern = FixedPattern {
    case: CaseId::EqualPentagon,
    colors: &[1, 2, 3],
    unique: &[2, 3, 4],
};

pub const EQUAL_LONG: CyclicRule = CyclicRule {
    precolored: 2,
    seeds: &[3, 2],
    fixes: [&[(1, 1)], &[], &[(1, 1), (0, 2)]],
    cases: [
        CaseId::EqualLongRes0,
        CaseId::EqualLongRes1,
        CaseId::EqualLongRes2,
    ],
    min_len: 6,
    unique: UniqueRule::Successor,
};

// ---- cactus ------------------------------------------------------------

pub const CACTUS_BRIDGE_FRESH: FixedPattern = FixedPattern {
    case: CaseId::CactusBridgeFresh,
    colors: &[1, 2],
    unique: &[2, 1],
};

pub const CACTUS_BRIDGE_PRECOLORED: FixedPattern = FixedPattern {
    case: CaseId::CactusBridgePrecolored,
    colors: &[3],
    unique: &[1],
};

pub const CACTUS_CYCLE_FRESH: CyclicRule = CyclicRule {
    precolored: 0,
    seeds: &[1, 2, 3],
    fixes: [&[], &[], &[(1, 3), (0, 1)]],
    cases: [
        CaseId::CactusCycleFreshRes0,
        CaseId::CactusCycleFreshRes1,
        CaseId::CactusCycleFreshRes2,
    ],
    min_len: 3,
    unique: UniqueRule::DistinctNeighbor,
};

pub const CACTUS_CYCLE_PRECOLORED: CyclicRule = CyclicRule {
    precolored: 1,
    seeds: &[3, 2],
    fixes: [&[(0, 3)], &[], &[(1, 2)]],
    cases: [
        CaseId::CactusCyclePrecoloredRes0,
        CaseId::CactusCyclePrecoloredRes1,
        CaseId::CactusCyclePrecoloredRes2,
    ],
    min_len: 3,
    unique: UniqueRule::DistinctNeighbor,
};

/// Every fixed pattern, for enumeration in tests.
pub fn fixed_patterns() -> Vec<FixedPattern> {
    let mut out = vec![
        BRIDGE_FRESH,
        BRIDGE_PRECOLORED,
        FIVE_ROOT,
        ONE_VERTEX_TRIANGLE,
        DISTINCT_TRIANGLE,
        DISTINCT_SQUARE,
        SHARED_TRIANGLE_LONE,
        SHARED_TRIANGLE_ONE_SIDE,
        SHARED_TRIANGLE_LONG_FACE,
        SHARED_TRIANGLE_FAN,
        SHARED_TRIANGLE_FAN_PENDING,
        SHARED_SQUARE_TRIANGLE,
        SHARED_SQUARE_PENDING,
        SHARED_PENTAGON,
        EQUAL_SQUARE,
        EQUAL_PENTAGON,
        CACTUS_BRIDGE_FRESH,
        CACTUS_BRIDGE_PRECOLORED,
    ];
    out.extend(FIVE_EARS.iter().map(|(_, p)| *p));
    out
}

pub fn cyclic_rules() -> Vec<CyclicRule> {
    vec![
        FRESH_FACE,
        ONE_VERTEX,
        DISTINCT_LONG,
        SHARED_TRIANGLE_BEYOND,
        SHARED_LONG,
        EQUAL_LONG,
        CACTUS_CYCLE_FRESH,
        CACTUS_CYCLE_PRECOLORED,
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fresh_face_sequences() {
        assert_eq!(FRESH_FACE.colors(3, &[]), vec![1, 2, 3]);
        assert_eq!(FRESH_FACE.unique(&[1, 2, 3]), vec![2, 3, 1]);
        assert_eq!(FRESH_FACE.colors(4, &[]), vec![1, 2, 3, 4]);
        assert_eq!(FRESH_FACE.colors(8, &[]), vec![1, 2, 3, 1, 4, 2, 3, 4]);
    }

    #[test]
    fn one_vertex_sequences() {
        assert_eq!(ONE_VERTEX.colors(4, &[1]), vec![1, 3, 2, 4]);
        assert_eq!(ONE_VERTEX.colors(6, &[1]), vec![1, 3, 2, 1, 3, 4]);
        assert_eq!(ONE_VERTEX.colors(5, &[1]), vec![1, 3, 2, 4, 3]);
    }

    #[test]
    fn equal_color_sequences() {
        assert_eq!(EQUAL_LONG.colors(6, &[4, 4]), vec![4, 4, 3, 2, 1, 3]);
        assert_eq!(EQUAL_LONG.colors(8, &[4, 4]), vec![4, 4, 3, 2, 4, 3, 1, 2]);
    }

    #[test]
    fn beyond_face_small_cases() {
        assert_eq!(SHARED_TRIANGLE_BEYOND.colors(6, &[2, 4]), vec![2, 4, 3, 2, 1, 4]);
        let u = SHARED_TRIANGLE_BEYOND.unique(&[2, 4, 3, 2, 1, 4]);
        assert_eq!(&u[2..], &[4, 3, 2, 2]);
        assert_eq!(SHARED_TRIANGLE_BEYOND.colors(4, &[2, 4]), vec![2, 4, 3, 1]);
    }

    #[test]
    fn cactus_sequences() {
        assert_eq!(CACTUS_CYCLE_FRESH.colors(3, &[]), vec![1, 2, 3]);
        assert_eq!(CACTUS_CYCLE_FRESH.colors(5, &[]), vec![1, 2, 3, 3, 1]);
        assert_eq!(CACTUS_CYCLE_PRECOLORED.colors(3, &[1]), vec![1, 3, 3]);
        assert_eq!(CACTUS_CYCLE_PRECOLORED.colors(5, &[1]), vec![1, 3, 2, 2, 3]);
    }

    #[test]
    fn case_ids_are_distinct_and_complete() {
        let labels: std::collections::BTreeSet<_> = CaseId::ALL.iter().map(|c| c.label()).collect();
        assert_eq!(labels.len(), CaseId::ALL.len());
        for p in fixed_patterns() {
            assert_eq!(p.colors.len(), p.unique.len(), "{}", p.case);
            assert!(p.colors.iter().zip(p.unique).all(|(c, u)| c != u), "{}", p.case);
        }
    }
}
