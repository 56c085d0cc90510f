//! Kneser graphs `K(n, k)`: k-subsets of `{1..n}`, adjacent when disjoint.
//! Vertex ids are colexicographic ranks; a subset is a sorted `Vec<u32>` of
//! 1-based elements.

use thiserror::Error;

use crate::graph::Graph;
use crate::verify::{CfColoring, Color, Kind, Neighborhood};

pub const VERTEX_BUDGET: u128 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KneserError {
    #[error("parameters n = {n}, k = {k} out of range: {reason}")]
    ParameterRange { n: u32, k: u32, reason: String },
    #[error("K({n},{k}) has {vertices} vertices, above the budget of {budget}")]
    Overflow { n: u32, k: u32, vertices: u128, budget: u128 },
    #[error("t is undefined for a subset of {{1..2k-1}}")]
    Inapplicable,
    #[error("{0:?} is not a k-subset of the ground set")]
    InvalidSubset(Vec<u32>),
    #[error("coloring has {got} entries, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("coloring uses color {color}, above k + 1 = {max}")]
    TooManyColors { color: Color, max: Color },
    #[error("no uncovered vertex found (class {class:?}): {reason}")]
    WitnessNotFound { class: Option<Color>, reason: String },
}

/// `C(n, k)`, saturating at `u128::MAX`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc·(n-i) is divisible by i+1 at every step
        match acc.checked_mul((n - i) as u128) {
            Some(x) => acc = x / (i + 1) as u128,
            None => return u128::MAX,
        }
    }
    acc
}

/// Colex rank of a sorted subset among subsets of its own size.
fn colex_rank(s: &[u32]) -> usize {
    s.iter()
        .enumerate()
        .map(|(i, &e)| binomial(e as u64 - 1, i as u64 + 1))
        .sum::<u128>() as usize
}

/// True iff two sorted subsets share no element.
pub fn disjoint(a: &[u32], b: &[u32]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return false,
        }
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KneserIndex {
    pub n: u32,
    pub k: u32,
}

impl KneserIndex {
    pub fn new(n: u32, k: u32) -> Result<Self, KneserError> {
        if k == 0 || n < k {
            return Err(range(n, k, "need 1 ≤ k ≤ n"));
        }
        Ok(KneserIndex { n, k })
    }

    pub fn len(&self) -> u128 {
        binomial(self.n as u64, self.k as u64)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Rank of a 1-based k-subset in any order.
    pub fn rank(&self, subset: &[u32]) -> Result<usize, KneserError> {
        Ok(colex_rank(&self.normalize(subset)?))
    }

    pub fn unrank(&self, id: usize) -> Vec<u32> {
        let mut r = id as u128;
        let mut out = vec![0; self.k as usize];
        let mut top = self.n as u64;
        for i in (1..=self.k as u64).rev() {
            let mut m = top - 1;
            while binomial(m, i) > r {
                m -= 1;
            }
            r -= binomial(m, i);
            out[i as usize - 1] = m as u32 + 1;
            top = m;
        }
        out
    }

    /// Sorted copy of `subset`, checked to be a k-subset of `{1..n}`.
    pub fn normalize(&self, subset: &[u32]) -> Result<Vec<u32>, KneserError> {
        let mut s = subset.to_vec();
        s.sort_unstable();
        let ok = s.len() == self.k as usize
            && s.windows(2).all(|w| w[0] < w[1])
            && s.first().is_some_and(|&e| e >= 1)
            && s.last().is_some_and(|&e| e <= self.n);
        if ok {
            Ok(s)
        } else {
            Err(KneserError::InvalidSubset(subset.to_vec()))
        }
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        disjoint(&self.unrank(u), &self.unrank(v))
    }

    /// Every vertex in id order.
    pub fn subsets(&self) -> Result<Vec<Vec<u32>>, KneserError> {
        let size = self.check_budget()?;
        let mut out = Vec::with_capacity(size);
        let mut cur: Vec<u32> = (1..=self.k).collect();
        loop {
            out.push(cur.clone());
            // colex successor: bump the first element that has room
            let mut i = 0;
            while i < cur.len() {
                let limit = if i + 1 < cur.len() { cur[i + 1] } else { self.n + 1 };
                if cur[i] + 1 < limit {
                    break;
                }
                i += 1;
            }
            if i == cur.len() {
                return Ok(out);
            }
            cur[i] += 1;
            for (j, e) in cur.iter_mut().enumerate().take(i) {
                *e = j as u32 + 1;
            }
        }
    }

    fn check_budget(&self) -> Result<usize, KneserError> {
        let vertices = self.len();
        if vertices > VERTEX_BUDGET {
            return Err(KneserError::Overflow {
                n: self.n,
                k: self.k,
                vertices,
                budget: VERTEX_BUDGET,
            });
        }
        Ok(vertices as usize)
    }
}

fn range(n: u32, k: u32, reason: &str) -> KneserError {
    KneserError::ParameterRange {
        n,
        k,
        reason: reason.to_string(),
    }
}

/// All `k`-subsets of the sorted `pool`.
fn choose(pool: &[u32], k: usize, out: &mut Vec<Vec<u32>>) {
    fn go(pool: &[u32], k: usize, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if acc.len() == k {
            out.push(acc.clone());
            return;
        }
        let need = k - acc.len();
        for i in 0..pool.len() {
            if pool.len() - i < need {
                break;
            }
            acc.push(pool[i]);
            go(&pool[i + 1..], k, acc, out);
            acc.pop();
        }
    }
    go(pool, k, &mut Vec::with_capacity(k), out);
}

pub fn kneser_graph(n: u32, k: u32) -> Result<(Graph, KneserIndex), KneserError> {
    let idx = KneserIndex::new(n, k)?;
    let subsets = idx.subsets()?;
    let mut edges = Vec::new();
    let mut buf = Vec::new();
    for (u, s) in subsets.iter().enumerate() {
        let rest: Vec<u32> = (1..=n).filter(|e| s.binary_search(e).is_err()).collect();
        buf.clear();
        choose(&rest, k as usize, &mut buf);
        for w in &buf {
            let v = colex_rank(w);
            if v > u {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::new(subsets.len(), &edges).expect("ranks are in range and distinct");
    Ok((g, idx))
}

fn max_element(s: &[u32]) -> u32 {
    *s.last().expect("k ≥ 1")
}

fn open_color(s: &[u32], k: u32) -> Color {
    let big = max_element(s);
    if big < 2 * k {
        big - (k - 1)
    } else if s.iter().copied().eq(2 * k..3 * k) {
        k + 1
    } else {
        k + 2
    }
}

fn color_all(idx: &KneserIndex, f: impl Fn(&[u32]) -> Color) -> Result<Vec<Color>, KneserError> {
    Ok(idx.subsets()?.iter().map(|s| f(s)).collect())
}

/// Open-neighborhood complete coloring with `k + 2` colors, `n ≥ 3k - 1`.
pub fn cf_open_coloring(n: u32, k: u32) -> Result<CfColoring, KneserError> {
    let idx = KneserIndex::new(n, k)?;
    if n < 3 * k - 1 {
        return Err(range(n, k, "need n ≥ 3k - 1"));
    }
    let colors = color_all(&idx, |s| open_color(s, k))?;
    Ok(CfColoring::new(colors, Neighborhood::Open, Kind::Complete))
}

/// The same coloring with class `k + 2` uncolored.
pub fn cf_open_partial_coloring(n: u32, k: u32) -> Result<CfColoring, KneserError> {
    let mut c = cf_open_coloring(n, k)?;
    for x in c.colors.iter_mut() {
        if *x == k + 2 {
            *x = 0;
        }
    }
    c.kind = Kind::Partial;
    Ok(c)
}

/// Smallest `t ≥ 0` with `|{1..k+t} \ v| = k`.
pub fn t_value(v: &[u32], k: u32) -> Result<u32, KneserError> {
    if v.len() != k as usize || v.contains(&0) {
        return Err(KneserError::InvalidSubset(v.to_vec()));
    }
    if v.iter().all(|&e| e < 2 * k) {
        return Err(KneserError::Inapplicable);
    }
    (0..k)
        .find(|&t| (1..=k + t).filter(|e| !v.contains(e)).count() == k as usize)
        .ok_or(KneserError::Inapplicable)
}

/// `{1..k+t} \ v`, the neighbor of `v` that carries color `t + 1` alone.
pub fn t_neighbor(v: &[u32], k: u32) -> Result<Vec<u32>, KneserError> {
    let t = t_value(v, k)?;
    Ok((1..=k + t).filter(|e| !v.contains(e)).collect())
}

/// Closed-neighborhood coloring with `k + 1` colors, `n ≥ 2k + 1`.
pub fn cfcn_coloring(n: u32, k: u32) -> Result<CfColoring, KneserError> {
    let idx = KneserIndex::new(n, k)?;
    if n < 2 * k + 1 {
        return Err(range(n, k, "need n ≥ 2k + 1"));
    }
    let colors = color_all(&idx, |s| {
        let big = max_element(s);
        if big < 2 * k {
            big - (k - 1)
        } else {
            k + 1
        }
    })?;
    Ok(CfColoring::new(colors, Neighborhood::Closed, Kind::Complete))
}

fn two_color(s: &[u32]) -> Color {
    if s[0] <= 2 {
        1
    } else {
        2
    }
}

/// Closed-neighborhood two coloring of `K(2k + 1, k)`.
pub fn cfcn_two_coloring(k: u32) -> Result<CfColoring, KneserError> {
    let idx = KneserIndex::new(2 * k + 1, k)?;
    let colors = color_all(&idx, two_color)?;
    Ok(CfColoring::new(colors, Neighborhood::Closed, Kind::Complete))
}

/// Closed-neighborhood coloring of `K(2k + d, k)` with `d + 1` colors:
/// subsets of `{1..2k+1}` keep the two coloring, and a subset whose largest
/// element is `2k + j` with `j ≥ 2` gets color `j + 1`.
pub fn cfcn_inductive_coloring(k: u32, d: u32) -> Result<CfColoring, KneserError> {
    if d == 0 {
        return Err(range(2 * k, k, "need d ≥ 1"));
    }
    let idx = KneserIndex::new(2 * k + d, k)?;
    let colors = color_all(&idx, |s| {
        let big = max_element(s);
        if big <= 2 * k + 1 {
            two_color(s)
        } else {
            big - 2 * k + 1
        }
    })?;
    Ok(CfColoring::new(colors, Neighborhood::Closed, Kind::Complete))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundSource {
    /// `n ≤ 3k`: the inductive coloring with `d = n - 2k`.
    Inductive,
    /// `n ≥ 3k + 1`: the `k + 1` coloring.
    MaxElement,
}

/// Best closed-neighborhood upper bound: `n - 2k + 1` up to `n = 3k`,
/// then `k + 1`.
pub fn cfcn_best_bound(n: u32, k: u32) -> Result<(Color, BoundSource), KneserError> {
    if k == 0 || n < 2 * k + 1 {
        return Err(range(n, k, "need n ≥ 2k + 1"));
    }
    Ok(if n <= 3 * k {
        (n - 2 * k + 1, BoundSource::Inductive)
    } else {
        (k + 1, BoundSource::MaxElement)
    })
}

pub fn cfcn_best_coloring(n: u32, k: u32) -> Result<CfColoring, KneserError> {
    match cfcn_best_bound(n, k)?.1 {
        BoundSource::Inductive => cfcn_inductive_coloring(k, n - 2 * k),
        BoundSource::MaxElement => cfcn_coloring(n, k),
    }
}

/// `q = C(n,k) / (k+1)` as an exact fraction `(numerator, denominator)`.
pub fn class_threshold(n: u32, k: u32) -> (u128, u128) {
    (binomial(n as u64, k as u64), k as u128 + 1)
}

/// `(k+1)·C(n-1,k-1) < q - 2` in exact integers.
pub fn claim_holds(n: u32, k: u32) -> bool {
    let (num, den) = class_threshold(n, k);
    let hit = den * binomial(n as u64 - 1, k as u64 - 1);
    // hit < num/den - 2  ⟺  hit·den + 2·den < num
    hit * den + 2 * den < num
}

pub fn lower_bound_regime(n: u32, k: u32) -> bool {
    n > k * (k + 1) * (k + 1)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessSearchState {
    /// Elements chosen so far, ascending.
    pub x: Vec<u32>,
    /// `classes[i]`: ids colored `i`; index 0 holds the uncolored ones.
    pub classes: Vec<Vec<usize>>,
    /// Classes with exactly one member disjoint from `x`.
    pub singleton_flags: Vec<bool>,
    /// Element used to hit each class, if any.
    pub hit: Vec<Option<u32>>,
    /// Threshold `q` as `(numerator, denominator)`.
    pub q: (u128, u128),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub x: Vec<u32>,
    pub id: usize,
    /// `d_i(x)` for each color `i`; entry 0 counts uncolored neighbors.
    pub counts: Vec<usize>,
    /// Pairs `(y, y')` kept disjoint from `x` for the classes never hit.
    pub representatives: Vec<(Color, usize, usize)>,
    pub state: WitnessSearchState,
}

/// Number of vertices of each color disjoint from the sorted set `x`.
pub fn neighbor_counts(idx: &KneserIndex, colors: &[Color], x: &[u32]) -> Vec<usize> {
    let top = colors.iter().copied().max().unwrap_or(0) as usize;
    let mut counts = vec![0; top + 1];
    for (id, &c) in colors.iter().enumerate() {
        if disjoint(&idx.unrank(id), x) {
            counts[c as usize] += 1;
        }
    }
    counts
}

/// A vertex with no uniquely colored neighbor under `colors`, built by
/// hitting every class that has a single member disjoint from the partial
/// set, then padding while keeping two disjoint members of every other class.
pub fn find_uncovered_vertex(idx: &KneserIndex, colors: &[Color]) -> Result<Witness, KneserError> {
    let subsets = idx.subsets()?;
    if colors.len() != subsets.len() {
        return Err(KneserError::LengthMismatch {
            expected: subsets.len(),
            got: colors.len(),
        });
    }
    let k = idx.k;
    if let Some(&c) = colors.iter().find(|&&c| c > k + 1) {
        return Err(KneserError::TooManyColors { color: c, max: k + 1 });
    }
    let palette = k as usize + 1;
    let mut classes = vec![Vec::new(); palette + 1];
    for (id, &c) in colors.iter().enumerate() {
        classes[c as usize].push(id);
    }
    let (q_num, q_den) = class_threshold(idx.n, k);
    let guaranteed = lower_bound_regime(idx.n, k);
    if guaranteed {
        assert!(claim_holds(idx.n, k), "counting claim fails at n = {}, k = {k}", idx.n);
    }
    let mut state = WitnessSearchState {
        x: Vec::new(),
        classes,
        singleton_flags: vec![false; palette + 1],
        hit: vec![None; palette + 1],
        q: (q_num, q_den),
    };
    let free = |class: &[usize], x: &[u32]| -> Vec<usize> {
        class.iter().copied().filter(|&id| disjoint(&subsets[id], x)).collect()
    };

    loop {
        for i in 1..=palette {
            state.singleton_flags[i] = free(&state.classes[i], &state.x).len() == 1;
        }
        let Some(i) = (1..=palette).find(|&i| state.singleton_flags[i]) else {
            break;
        };
        if guaranteed && state.classes[i].len() as u128 * q_den >= q_num {
            return Err(KneserError::WitnessNotFound {
                class: Some(i as Color),
                reason: "a class of size at least q became effectively singleton".into(),
            });
        }
        if state.x.len() == k as usize {
            return Err(KneserError::WitnessNotFound {
                class: Some(i as Color),
                reason: format!("more than {k} classes needed hitting"),
            });
        }
        let y = free(&state.classes[i], &state.x)[0];
        let e = subsets[y][0];
        state.x.push(e);
        state.x.sort_unstable();
        state.hit[i] = Some(e);
    }

    let mut representatives = Vec::new();
    let mut forbidden = vec![false; idx.n as usize + 1];
    for i in 1..=palette {
        let f = free(&state.classes[i], &state.x);
        if f.len() >= 2 {
            representatives.push((i as Color, f[0], f[1]));
            for &e in subsets[f[0]].iter().chain(&subsets[f[1]]) {
                forbidden[e as usize] = true;
            }
        }
    }
    for e in 1..=idx.n {
        if state.x.len() == k as usize {
            break;
        }
        if !forbidden[e as usize] && state.x.binary_search(&e).is_err() {
            state.x.push(e);
            state.x.sort_unstable();
        }
    }
    if state.x.len() < k as usize {
        return Err(KneserError::WitnessNotFound {
            class: None,
            reason: format!("only {} free elements left for x", state.x.len()),
        });
    }

    let counts = neighbor_counts(idx, colors, &state.x);
    if let Some(i) = (1..counts.len()).find(|&i| counts[i] == 1) {
        return Err(KneserError::WitnessNotFound {
            class: Some(i as Color),
            reason: "validation found a uniquely colored neighbor".into(),
        });
    }
    Ok(Witness {
        x: state.x.clone(),
        id: colex_rank(&state.x),
        counts,
        representatives,
        state,
    })
}

/// Vertices of `K(n, k)` without a uniquely colored member of their
/// neighborhood, found without building the graph: the number of vertices of
/// color `c` disjoint from `v` is an inclusion-exclusion sum, over `S ⊆ v`,
/// of the number of color-`c` vertices containing `S`.
///
/// Rows for non-empty `S` are kept sparse. A color that no non-empty `S ⊆ v`
/// touches keeps its global count, so only the colors used exactly once
/// overall need to be consulted for those.
pub fn kneser_failures(idx: &KneserIndex, c: &CfColoring) -> Result<Vec<usize>, KneserError> {
    let subsets = idx.subsets()?;
    if c.colors.len() != subsets.len() {
        return Err(KneserError::LengthMismatch {
            expected: subsets.len(),
            got: c.colors.len(),
        });
    }
    let width = c.palette_size() as usize + 1;
    let (n, k) = (idx.n as u64, idx.k as usize);
    // (size, rank) of every non-empty sub-subset, by position mask over a vertex
    let parts = |s: &[u32]| -> Vec<(usize, usize)> {
        (1u32..1 << k)
            .map(|m| {
                let sub: Vec<u32> = (0..k).filter(|i| m & (1 << i) != 0).map(|i| s[i]).collect();
                (sub.len(), colex_rank(&sub))
            })
            .collect()
    };
    let mut total = vec![0i64; width];
    let mut raw: Vec<Vec<Vec<Color>>> = (0..=k).map(|s| vec![Vec::new(); binomial(n, s as u64) as usize]).collect();
    for (id, s) in subsets.iter().enumerate() {
        let col = c.colors[id];
        if col == 0 {
            continue;
        }
        total[col as usize] += 1;
        for (size, rank) in parts(s) {
            raw[size][rank].push(col);
        }
    }
    let containing: Vec<Vec<Vec<(Color, i64)>>> = raw
        .into_iter()
        .map(|rows| {
            rows.into_iter()
                .map(|mut r| {
                    r.sort_unstable();
                    let mut out: Vec<(Color, i64)> = Vec::new();
                    for x in r {
                        match out.last_mut() {
                            Some((y, cnt)) if *y == x => *cnt += 1,
                            _ => out.push((x, 1)),
                        }
                    }
                    out
                })
                .collect()
        })
        .collect();
    let singletons = total[1..].iter().filter(|&&t| t == 1).count();
    let closed = c.mode == Neighborhood::Closed;
    let mut failing = Vec::new();
    let mut d = total.clone();
    let mut touched: Vec<usize> = Vec::new();
    let mut marked = vec![false; width];
    for (id, s) in subsets.iter().enumerate() {
        for (size, rank) in parts(s) {
            let sign = if size % 2 == 0 { 1 } else { -1 };
            for &(col, cnt) in &containing[size][rank] {
                let col = col as usize;
                if !marked[col] {
                    marked[col] = true;
                    touched.push(col);
                }
                d[col] += sign * cnt;
            }
        }
        let own = c.colors[id] as usize;
        if closed && own != 0 {
            if !marked[own] {
                marked[own] = true;
                touched.push(own);
            }
            d[own] += 1;
        }
        let touched_singletons = touched.iter().filter(|&&x| total[x] == 1).count();
        let unique = singletons > touched_singletons || touched.iter().any(|&x| d[x] == 1);
        let bad_color = c.kind == Kind::Complete && own == 0;
        if bad_color || !unique {
            failing.push(id);
        }
        for &x in &touched {
            d[x] = total[x];
            marked[x] = false;
        }
        touched.clear();
    }
    Ok(failing)
}

/// The open `k + 2` coloring with class `k + 2` folded into `k + 1`.
pub fn compacted_partial(n: u32, k: u32) -> Result<Vec<Color>, KneserError> {
    let c = cf_open_partial_coloring(n, k)?;
    Ok(c.colors.into_iter().map(|x| if x == 0 { k + 1 } else { x }).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::verify_cf;

    fn color_of(c: &CfColoring, idx: &KneserIndex, s: &[u32]) -> Color {
        c.colors[idx.rank(s).unwrap()]
    }

    #[test]
    fn colex_round_trip() {
        let idx = KneserIndex::new(9, 4).unwrap();
        assert_eq!(idx.unrank(0), vec![1, 2, 3, 4]);
        assert_eq!(idx.unrank(1), vec![1, 2, 3, 5]);
        assert_eq!(idx.unrank(2), vec![1, 2, 4, 5]);
        for id in 0..idx.len() as usize {
            assert_eq!(idx.rank(&idx.unrank(id)).unwrap(), id);
        }
        assert!(idx.rank(&[1, 2, 3]).is_err());
        assert!(idx.rank(&[1, 2, 3, 10]).is_err());
        assert_eq!(idx.rank(&[5, 1, 3, 2]).unwrap(), 1);
        let all = idx.subsets().unwrap();
        assert_eq!(all.len(), 126);
        for (id, s) in all.iter().enumerate() {
            assert_eq!(&idx.unrank(id), s);
        }
    }

    #[test]
    fn small_graphs() {
        let (p, _) = kneser_graph(5, 2).unwrap();
        assert_eq!((p.n(), p.edge_count()), (10, 15));
        assert!(p.vertices().all(|v| p.degree(v) == 3));
        let (m, idx) = kneser_graph(6, 3).unwrap();
        assert_eq!((m.n(), m.edge_count()), (20, 10));
        for (u, v) in m.edges() {
            let mut both = idx.unrank(u);
            both.extend(idx.unrank(v));
            both.sort_unstable();
            assert_eq!(both, (1..=6).collect::<Vec<_>>());
        }
        assert_eq!(kneser_graph(4, 2).unwrap().0.edge_count(), 3);
        assert!(matches!(kneser_graph(60, 30), Err(KneserError::Overflow { .. })));
        let (big, _) = kneser_graph(70, 1).unwrap();
        assert_eq!(big.edge_count(), 70 * 69 / 2);
    }

    #[test]
    fn open_coloring_worked_example() {
        let c = cf_open_coloring(8, 3).unwrap();
        let idx = KneserIndex::new(8, 3).unwrap();
        assert_eq!(color_of(&c, &idx, &[1, 2, 3]), 1);
        for s in [[1, 2, 4], [1, 3, 4], [2, 3, 4]] {
            assert_eq!(color_of(&c, &idx, &s), 2);
        }
        assert_eq!(color_of(&c, &idx, &[6, 7, 8]), 4);
        assert_eq!(color_of(&c, &idx, &[1, 7, 8]), 5);
        assert_eq!(c.palette_size(), 5);
        let (g, _) = kneser_graph(8, 3).unwrap();
        assert!(verify_cf(&g, &c).unwrap().valid);
        let p = cf_open_partial_coloring(8, 3).unwrap();
        assert_eq!(color_of(&p, &idx, &[1, 7, 8]), 0);
        assert!(verify_cf(&g, &p).unwrap().valid);
    }

    #[test]
    fn open_coloring_k2() {
        let c = cf_open_coloring(5, 2).unwrap();
        let idx = KneserIndex::new(5, 2).unwrap();
        let expect = [([1, 2], 1), ([1, 3], 2), ([2, 3], 2), ([4, 5], 3), ([1, 4], 4), ([3, 5], 4)];
        for (s, col) in expect {
            assert_eq!(color_of(&c, &idx, &s), col, "{s:?}");
        }
        assert!(cf_open_coloring(4, 2).is_err());
    }

    #[test]
    fn t_values() {
        assert_eq!(t_value(&[6, 7, 8], 3), Ok(0));
        assert_eq!(t_neighbor(&[6, 7, 8], 3).unwrap(), vec![1, 2, 3]);
        assert_eq!(t_value(&[1, 6, 7], 3), Ok(1));
        assert_eq!(t_neighbor(&[1, 6, 7], 3).unwrap(), vec![2, 3, 4]);
        assert_eq!(t_neighbor(&[2, 9], 2).unwrap(), vec![1, 3]);
        assert_eq!(t_value(&[1, 3], 2), Err(KneserError::Inapplicable));
    }

    #[test]
    fn closed_colorings() {
        let idx = KneserIndex::new(5, 2).unwrap();
        let c = cfcn_coloring(5, 2).unwrap();
        assert_eq!(color_of(&c, &idx, &[1, 2]), 1);
        assert_eq!(color_of(&c, &idx, &[2, 3]), 2);
        assert_eq!(color_of(&c, &idx, &[1, 5]), 3);
        let two = cfcn_two_coloring(2).unwrap();
        let ones = [[1, 2], [1, 3], [1, 4], [1, 5], [2, 3], [2, 4], [2, 5]];
        for s in ones {
            assert_eq!(color_of(&two, &idx, &s), 1);
        }
        for s in [[3, 4], [3, 5], [4, 5]] {
            assert_eq!(color_of(&two, &idx, &s), 2);
        }
        let (g, _) = kneser_graph(5, 2).unwrap();
        assert!(verify_cf(&g, &two).unwrap().valid);
        let (c3, _) = kneser_graph(3, 1).unwrap();
        let t = cfcn_two_coloring(1).unwrap();
        assert_eq!(t.colors, vec![1, 1, 2]);
        assert!(verify_cf(&c3, &t).unwrap().valid);
    }

    #[test]
    fn inductive_matches_unrolled_induction() {
        for k in 1..=3 {
            let mut literal = cfcn_two_coloring(k).unwrap().colors;
            assert_eq!(cfcn_inductive_coloring(k, 1).unwrap().colors, literal);
            for d in 2..=4 {
                // colex ranks of K(m-1,k) are a prefix of those of K(m,k)
                let size = binomial((2 * k + d) as u64, k as u64) as usize;
                literal.resize(size, d + 1);
                let closed = cfcn_inductive_coloring(k, d).unwrap();
                assert_eq!(closed.colors, literal, "k={k} d={d}");
                assert_eq!(closed.palette_size(), d + 1);
            }
        }
        let idx = KneserIndex::new(6, 2).unwrap();
        let c = cfcn_inductive_coloring(2, 2).unwrap();
        assert_eq!(color_of(&c, &idx, &[1, 6]), 3);
        assert_eq!(color_of(&c, &idx, &[3, 4]), 2);
    }

    #[test]
    fn best_bound() {
        assert_eq!(cfcn_best_bound(5, 2), Ok((2, BoundSource::Inductive)));
        assert_eq!(cfcn_best_bound(6, 2), Ok((3, BoundSource::Inductive)));
        assert_eq!(cfcn_best_bound(7, 2), Ok((3, BoundSource::MaxElement)));
        assert!(cfcn_best_bound(4, 2).is_err());
    }

    #[test]
    fn claim_arithmetic() {
        assert!(claim_holds(19, 2));
        assert!(lower_bound_regime(19, 2));
        assert!(!lower_bound_regime(18, 2));
        assert!(claim_holds(49, 3));
    }

    #[test]
    fn subset_verifier_agrees_with_graph_verifier() {
        for (n, k) in [(5, 2), (7, 2), (8, 3), (9, 3), (6, 1)] {
            let (g, idx) = kneser_graph(n, k).unwrap();
            let mut colorings = vec![cf_open_coloring(n, k).unwrap(), cf_open_partial_coloring(n, k).unwrap()];
            colorings.push(cfcn_coloring(n, k).unwrap());
            let mut wrong = cfcn_coloring(n, k).unwrap();
            wrong.mode = Neighborhood::Open;
            colorings.push(wrong);
            for c in colorings {
                let report = verify_cf(&g, &c).unwrap();
                let failing: Vec<usize> = report.failures.iter().map(|f| f.0).collect();
                let mut dedup = failing.clone();
                dedup.dedup();
                assert_eq!(kneser_failures(&idx, &c).unwrap(), dedup, "K({n},{k}) {:?}", c.mode);
            }
        }
    }

    #[test]
    fn witness_monochromatic() {
        let idx = KneserIndex::new(19, 2).unwrap();
        let colors = vec![1; idx.len() as usize];
        let w = find_uncovered_vertex(&idx, &colors).unwrap();
        assert!(w.counts[1] >= 2);
        assert_eq!(w.x.len(), 2);
    }

    #[test]
    fn witness_against_partial_open_coloring() {
        let idx = KneserIndex::new(19, 2).unwrap();
        let colors = compacted_partial(19, 2).unwrap();
        let w = find_uncovered_vertex(&idx, &colors).unwrap();
        let counts = neighbor_counts(&idx, &colors, &idx.unrank(w.id));
        assert!(counts.iter().all(|&d| d != 1));
    }

    #[test]
    fn witness_rejects_wide_palettes() {
        let idx = KneserIndex::new(8, 2).unwrap();
        let c = cf_open_coloring(8, 2).unwrap();
        assert!(matches!(
            find_uncovered_vertex(&idx, &c.colors),
            Err(KneserError::TooManyColors { .. })
        ));
    }
}
