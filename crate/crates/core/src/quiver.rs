//! Bipartite type-A quivers, their block layouts and Zelevinsky permutations.
//!
//! The quiver is drawn left to right as `y_n, x_n, y_{n-1}, …, y_1, x_1, y_0`
//! with sources `y_k` and sinks `x_k`. Vertices are addressed by their
//! position in this drawing, `pos(y_k) = 2(n-k)` and `pos(x_k) = 2(n-k)+1`.
//! Gap `g` lies between positions `g` and `g+1`: even gaps are the right
//! arrows `β_k: y_k → x_k`, odd gaps the left arrows `α_k: y_{k-1} → x_k`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::pipes::PipeDream;
use crate::poly::VarId;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Vertex {
    Y(usize),
    X(usize),
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Y(k) => write!(f, "y{k}"),
            Vertex::X(k) => write!(f, "x{k}"),
        }
    }
}

impl FromStr for Vertex {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad vertex {s:?}"));
        let k: usize = s.get(1..).ok_or_else(bad)?.parse().map_err(|_| bad())?;
        match s.chars().next() {
            Some('y') => Ok(Vertex::Y(k)),
            Some('x') => Ok(Vertex::X(k)),
            _ => Err(bad()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gap {
    /// `β_k`, matrix `w_k` of shape `d(y_k) × d(x_k)`.
    Beta(usize),
    /// `α_k`, matrix `w^k` of shape `d(y_{k-1}) × d(x_k)`.
    Alpha(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BipartiteQuiver {
    n: usize,
    dy: Vec<usize>,
    dx: Vec<usize>,
}

impl BipartiteQuiver {
    /// `dy[k] = d(y_k)` for `k = 0..=n`, `dx[k-1] = d(x_k)` for `k = 1..=n`.
    pub fn new(dy: Vec<usize>, dx: Vec<usize>) -> Result<Self> {
        let n = dx.len();
        if n == 0 {
            return Err(Error::InvalidQuiver("need at least one sink (n >= 1)".into()));
        }
        if dy.len() != n + 1 {
            return Err(Error::InvalidQuiver(format!("expected {} source dimensions, got {}", n + 1, dy.len())));
        }
        if dy.iter().chain(&dx).any(|&d| d > 255) {
            return Err(Error::InvalidQuiver("dimensions above 255 are not supported".into()));
        }
        Ok(Self { n, dy, dx })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dy(&self) -> &[usize] {
        &self.dy
    }

    pub fn dx(&self) -> &[usize] {
        &self.dx
    }

    pub fn dim(&self, v: Vertex) -> usize {
        match v {
            Vertex::Y(k) => self.dy[k],
            Vertex::X(k) => self.dx[k - 1],
        }
    }

    pub fn d_y(&self) -> usize {
        self.dy.iter().sum()
    }

    pub fn d_x(&self) -> usize {
        self.dx.iter().sum()
    }

    pub fn d(&self) -> usize {
        self.d_x() + self.d_y()
    }

    pub fn num_positions(&self) -> usize {
        2 * self.n + 1
    }

    pub fn pos(&self, v: Vertex) -> usize {
        match v {
            Vertex::Y(k) => 2 * (self.n - k),
            Vertex::X(k) => 2 * (self.n - k) + 1,
        }
    }

    pub fn vertex_at(&self, pos: usize) -> Vertex {
        if pos % 2 == 0 {
            Vertex::Y(self.n - pos / 2)
        } else {
            Vertex::X(self.n - pos / 2)
        }
    }

    pub fn dim_at(&self, pos: usize) -> usize {
        self.dim(self.vertex_at(pos))
    }

    pub fn num_gaps(&self) -> usize {
        2 * self.n
    }

    pub fn gap(&self, g: usize) -> Gap {
        let k = self.n - g / 2;
        if g % 2 == 0 {
            Gap::Beta(k)
        } else {
            Gap::Alpha(k)
        }
    }

    pub fn gap_index(&self, gap: Gap) -> usize {
        match gap {
            Gap::Beta(k) => 2 * (self.n - k),
            Gap::Alpha(k) => 2 * (self.n - k) + 1,
        }
    }

    /// The `y` and `x` endpoints of a gap.
    pub fn gap_vertices(&self, g: usize) -> (Vertex, Vertex) {
        match self.gap(g) {
            Gap::Beta(k) => (Vertex::Y(k), Vertex::X(k)),
            Gap::Alpha(k) => (Vertex::Y(k - 1), Vertex::X(k)),
        }
    }

    /// Matrix shape `(d(y), d(x))` of the gap.
    pub fn gap_shape(&self, g: usize) -> (usize, usize) {
        let (y, x) = self.gap_vertices(g);
        (self.dim(y), self.dim(x))
    }

    pub fn layout(&self) -> BlockLayout {
        BlockLayout::new(self)
    }

    /// Row-block order: `y_0..y_n` then `x_n..x_1`.
    pub fn row_block_order(&self) -> Vec<Vertex> {
        (0..=self.n).map(Vertex::Y).chain((1..=self.n).rev().map(Vertex::X)).collect()
    }

    /// Column-block order: `x_n..x_1` then `y_0..y_n`.
    pub fn col_block_order(&self) -> Vec<Vertex> {
        (1..=self.n).rev().map(Vertex::X).chain((0..=self.n).map(Vertex::Y)).collect()
    }

    /// Every quiver with `1 <= n <= max_n` and all dimensions in `0..=max_dim`.
    pub fn enumerate(max_n: usize, max_dim: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for n in 1..=max_n {
            let count = 2 * n + 1;
            let mut dims = vec![0usize; count];
            loop {
                let dy = dims[..=n].to_vec();
                let dx = dims[n + 1..].to_vec();
                out.push(Self::new(dy, dx).expect("valid shape"));
                let mut p = 0;
                while p < count && dims[p] == max_dim {
                    dims[p] = 0;
                    p += 1;
                }
                if p == count {
                    break;
                }
                dims[p] += 1;
            }
        }
        out
    }

    /// The dense snake complement `P_*` on the `d_y × d_x` grid.
    pub fn p_star(&self) -> PipeDream {
        let layout = self.layout();
        PipeDream::new(self.d_y(), self.d_x(), layout.p_star_cells()).expect("P_* lies in the grid")
    }

    /// `v_* = δ(P_*)`.
    pub fn v_star(&self) -> Permutation {
        self.p_star().demazure()
    }
}

impl fmt::Display for BipartiteQuiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} dy={:?} dx={:?}", self.n, self.dy, self.dx)
    }
}

/// A contiguous range of rows or columns (1-based `start`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Block {
    pub vertex: Vertex,
    pub start: usize,
    pub len: usize,
}

impl Block {
    /// Last index before the block.
    pub fn offset(&self) -> usize {
        self.start - 1
    }

    pub fn range(&self) -> std::ops::RangeInclusive<usize> {
        self.start..=self.start + self.len - 1
    }
}

/// A sub-rectangle of the grid: `rows` rows after `row0`, `cols` columns after `col0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rect {
    pub row0: usize,
    pub col0: usize,
    pub rows: usize,
    pub cols: usize,
}

impl Rect {
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..=self.rows).flat_map(move |i| (1..=self.cols).map(move |j| (self.row0 + i, self.col0 + j)))
    }

    pub fn contains(&self, (i, j): (usize, usize)) -> bool {
        i > self.row0 && i <= self.row0 + self.rows && j > self.col0 && j <= self.col0 + self.cols
    }
}

#[derive(Clone, Debug)]
pub struct BlockLayout {
    n: usize,
    d_y: usize,
    d_x: usize,
    pub row_blocks: Vec<Block>,
    pub col_blocks: Vec<Block>,
}

impl BlockLayout {
    fn new(q: &BipartiteQuiver) -> Self {
        let alloc = |order: Vec<Vertex>| {
            let mut start = 1;
            order
                .into_iter()
                .map(|v| {
                    let b = Block { vertex: v, start, len: q.dim(v) };
                    start += b.len;
                    b
                })
                .collect::<Vec<_>>()
        };
        Self {
            n: q.n,
            d_y: q.d_y(),
            d_x: q.d_x(),
            row_blocks: alloc(q.row_block_order()),
            col_blocks: alloc(q.col_block_order()),
        }
    }

    pub fn d(&self) -> usize {
        self.d_x + self.d_y
    }

    pub fn row_block(&self, v: Vertex) -> Block {
        *self.row_blocks.iter().find(|b| b.vertex == v).expect("vertex exists")
    }

    pub fn col_block(&self, v: Vertex) -> Block {
        *self.col_blocks.iter().find(|b| b.vertex == v).expect("vertex exists")
    }

    /// `α_k`: rows of `y_{k-1}`, columns of `x_k`.
    pub fn alpha(&self, k: usize) -> Rect {
        let r = self.row_block(Vertex::Y(k - 1));
        let c = self.col_block(Vertex::X(k));
        Rect { row0: r.offset(), col0: c.offset(), rows: r.len, cols: c.len }
    }

    /// `β_k`: rows of `y_k`, columns of `x_k`.
    pub fn beta(&self, k: usize) -> Rect {
        let r = self.row_block(Vertex::Y(k));
        let c = self.col_block(Vertex::X(k));
        Rect { row0: r.offset(), col0: c.offset(), rows: r.len, cols: c.len }
    }

    pub fn snake_blocks(&self) -> Vec<Rect> {
        (1..=self.n).flat_map(|k| [self.alpha(k), self.beta(k)]).collect()
    }

    pub fn snake_cells(&self) -> Vec<(usize, usize)> {
        let mut cells: Vec<_> = self.snake_blocks().iter().flat_map(|r| r.cells().collect::<Vec<_>>()).collect();
        cells.sort();
        cells
    }

    pub fn in_snake(&self, cell: (usize, usize)) -> bool {
        self.snake_blocks().iter().any(|r| r.contains(cell))
    }

    /// Cells of the `d_y × d_x` grid outside the snake region.
    pub fn p_star_cells(&self) -> Vec<(usize, usize)> {
        let blocks = self.snake_blocks();
        (1..=self.d_y)
            .flat_map(|i| (1..=self.d_x).map(move |j| (i, j)))
            .filter(|&c| !blocks.iter().any(|r| r.contains(c)))
            .collect()
    }

    /// Variable attached to row `i` of the full `d × d` grid.
    pub fn row_label(&self, i: usize) -> VarId {
        let b = self.row_blocks.iter().find(|b| b.range().contains(&i)).expect("row inside grid");
        label(b.vertex, i - b.offset())
    }

    /// Variable attached to column `j` of the full `d × d` grid.
    pub fn col_label(&self, j: usize) -> VarId {
        let b = self.col_blocks.iter().find(|b| b.range().contains(&j)).expect("column inside grid");
        label(b.vertex, j - b.offset())
    }
}

fn label(v: Vertex, slot: usize) -> VarId {
    match v {
        Vertex::Y(k) => VarId::t(k, slot),
        Vertex::X(k) => VarId::s(k, slot),
    }
}

/// Lace multiplicities, keyed by `(left, right)` drawing positions with
/// `left <= right`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct OrbitData {
    mult: BTreeMap<(usize, usize), usize>,
}

impl OrbitData {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, left: usize, right: usize) -> usize {
        self.mult.get(&(left, right)).copied().unwrap_or(0)
    }

    pub fn set(&mut self, left: usize, right: usize, m: usize) {
        let key = (left.min(right), left.max(right));
        if m == 0 {
            self.mult.remove(&key);
        } else {
            self.mult.insert(key, m);
        }
    }

    pub fn add(&mut self, left: usize, right: usize, m: usize) {
        let cur = self.get(left.min(right), left.max(right));
        self.set(left, right, cur + m);
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.mult.iter().map(|(&k, &v)| (k, v))
    }

    /// Number of arrows in gap `g`: laces covering positions `g` and `g+1`.
    pub fn rank(&self, g: usize) -> usize {
        self.mult.iter().filter(|(&(l, r), _)| l <= g && r > g).map(|(_, &m)| m).sum()
    }

    /// Laces passing through position `p`.
    pub fn incident(&self, p: usize) -> usize {
        self.mult.iter().filter(|(&(l, r), _)| l <= p && p <= r).map(|(_, &m)| m).sum()
    }

    pub fn validate(&self, q: &BipartiteQuiver) -> Result<()> {
        for &(l, r) in self.mult.keys() {
            if r >= q.num_positions() {
                return Err(Error::InvalidOrbit(format!("lace endpoint position {r} outside the quiver")));
            }
            debug_assert!(l <= r);
        }
        for p in 0..q.num_positions() {
            let have = self.incident(p);
            let want = q.dim_at(p);
            if have != want {
                return Err(Error::InvalidOrbit(format!(
                    "vertex {} meets {have} laces but has dimension {want}",
                    q.vertex_at(p)
                )));
            }
        }
        Ok(())
    }

    /// Parses `{"y2,y0": 1, ...}`; either endpoint order is accepted.
    pub fn from_named(q: &BipartiteQuiver, named: &BTreeMap<String, usize>) -> Result<Self> {
        let mut out = Self::new();
        for (key, &m) in named {
            let (a, b) = key
                .split_once(',')
                .ok_or_else(|| Error::InvalidOrbit(format!("lace key {key:?} is not of the form \"z,z'\"")))?;
            let a: Vertex = a.parse().map_err(|_| Error::InvalidOrbit(format!("bad vertex in {key:?}")))?;
            let b: Vertex = b.parse().map_err(|_| Error::InvalidOrbit(format!("bad vertex in {key:?}")))?;
            for v in [a, b] {
                let ok = match v {
                    Vertex::Y(k) => k <= q.n,
                    Vertex::X(k) => k >= 1 && k <= q.n,
                };
                if !ok {
                    return Err(Error::InvalidOrbit(format!("vertex {v} does not exist")));
                }
            }
            out.add(q.pos(a), q.pos(b), m);
        }
        out.validate(q)?;
        Ok(out)
    }

    pub fn to_named(&self, q: &BipartiteQuiver) -> BTreeMap<String, usize> {
        self.mult
            .iter()
            .map(|(&(l, r), &m)| (format!("{},{}", q.vertex_at(l), q.vertex_at(r)), m))
            .collect()
    }

    pub fn describe(&self, q: &BipartiteQuiver) -> String {
        let parts: Vec<String> = self
            .mult
            .iter()
            .map(|(&(l, r), &m)| format!("({},{}):{m}", q.vertex_at(l), q.vertex_at(r)))
            .collect();
        format!("{{{}}}", parts.join(", "))
    }

    /// Every saturating multiplicity table of `q`.
    pub fn enumerate(q: &BipartiteQuiver) -> Vec<Self> {
        let np = q.num_positions();
        let intervals: Vec<(usize, usize)> = (0..np).flat_map(|l| (l..np).map(move |r| (l, r))).collect();
        let mut residual: Vec<usize> = (0..np).map(|p| q.dim_at(p)).collect();
        let mut cur = Self::new();
        let mut out = Vec::new();
        fn rec(
            idx: usize,
            intervals: &[(usize, usize)],
            residual: &mut [usize],
            cur: &mut OrbitData,
            out: &mut Vec<OrbitData>,
        ) {
            if idx == intervals.len() {
                if residual.iter().all(|&r| r == 0) {
                    out.push(cur.clone());
                }
                return;
            }
            let (l, r) = intervals[idx];
            // every interval through position l-1 has been decided
            if l > 0 && (idx == 0 || intervals[idx - 1].0 != l) && residual[l - 1] != 0 {
                return;
            }
            let cap = residual[l..=r].iter().copied().min().unwrap_or(0);
            for m in (0..=cap).rev() {
                for x in &mut residual[l..=r] {
                    *x -= m;
                }
                cur.set(l, r, m);
                rec(idx + 1, intervals, residual, cur, out);
                for x in &mut residual[l..=r] {
                    *x += m;
                }
            }
            cur.set(l, r, 0);
        }
        rec(0, &intervals, &mut residual, &mut cur, &mut out);
        out.sort();
        out
    }
}

/// Block counts of the Zelevinsky permutation, indexed
/// `[row block][column block]` in layout order.
pub fn zelevinsky_block_counts(q: &BipartiteQuiver, o: &OrbitData) -> Vec<Vec<usize>> {
    let rows = q.row_block_order();
    let cols = q.col_block_order();
    rows.iter()
        .map(|&zi| {
            cols.iter()
                .map(|&zj| {
                    let (pi, pj) = (q.pos(zi), q.pos(zj));
                    if pi <= pj {
                        o.get(pi, pj)
                    } else if pi == pj + 1 {
                        o.rank(pj)
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect()
}

/// The Zelevinsky permutation `v(Ω)` in `S_d`.
pub fn zelevinsky(q: &BipartiteQuiver, o: &OrbitData) -> Result<Permutation> {
    o.validate(q)?;
    let layout = q.layout();
    let counts = zelevinsky_block_counts(q, o);
    for (bi, rb) in layout.row_blocks.iter().enumerate() {
        let s: usize = counts[bi].iter().sum();
        if s != rb.len {
            return Err(Error::InvalidOrbit(format!("block row {} holds {s} ones, expected {}", rb.vertex, rb.len)));
        }
    }
    for (bj, cb) in layout.col_blocks.iter().enumerate() {
        let s: usize = counts.iter().map(|r| r[bj]).sum();
        if s != cb.len {
            return Err(Error::InvalidOrbit(format!("block column {} holds {s} ones, expected {}", cb.vertex, cb.len)));
        }
    }
    let d = layout.d();
    let mut one_line = vec![0usize; d];
    let mut col_fill: Vec<usize> = vec![0; layout.col_blocks.len()];
    for (bi, rb) in layout.row_blocks.iter().enumerate() {
        let mut row = rb.start;
        for (bj, cb) in layout.col_blocks.iter().enumerate() {
            let c = counts[bi][bj];
            let col = cb.start + col_fill[bj];
            for t in 0..c {
                one_line[row + t - 1] = col + t;
            }
            row += c;
            col_fill[bj] += c;
        }
    }
    Permutation::new(one_line).map_err(|e| Error::InvalidOrbit(format!("block placement failed: {e}")))
}

/// `ℓ(v(Ω)) - ℓ(v_*)`.
pub fn codim(q: &BipartiteQuiver, o: &OrbitData) -> Result<usize> {
    let v = zelevinsky(q, o)?;
    let vs = q.v_star();
    v.length()
        .checked_sub(vs.length())
        .ok_or_else(|| Error::InvalidOrbit("Zelevinsky permutation shorter than v_*".into()))
}

/// Renders a permutation as a block matrix with `|` and `-` separators.
pub fn render_block_matrix(q: &BipartiteQuiver, v: &Permutation) -> String {
    let layout = q.layout();
    let d = layout.d();
    let col_breaks: Vec<usize> = layout.col_blocks.iter().map(|b| b.start + b.len - 1).collect();
    let row_breaks: Vec<usize> = layout.row_blocks.iter().map(|b| b.start + b.len - 1).collect();
    let mut out = String::new();
    let width = d + layout.col_blocks.iter().filter(|b| b.len > 0).count() - 1;
    for i in 1..=d {
        for j in 1..=d {
            out.push(if v.apply(i) == j { '1' } else { '.' });
            if j < d && col_breaks.contains(&j) {
                out.push('|');
            }
        }
        out.push('\n');
        if i < d && row_breaks.contains(&i) {
            out.push_str(&"-".repeat(width));
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn running() -> (BipartiteQuiver, OrbitData) {
        let q = BipartiteQuiver::new(vec![1, 3, 2], vec![2, 3]).unwrap();
        let named: BTreeMap<String, usize> =
            [("y2,y0", 1), ("y2,y1", 1), ("x2,x1", 1)].into_iter().map(|(k, v)| (k.to_string(), v)).collect();
        let o = OrbitData::from_named(&q, &named).unwrap();
        (q, o)
    }

    #[test]
    fn running_layout() {
        let q = BipartiteQuiver::new(vec![1, 3, 2], vec![2, 3]).unwrap();
        assert_eq!(q.d(), 11);
        let l = q.layout();
        let rows: Vec<(String, usize, usize)> =
            l.row_blocks.iter().map(|b| (b.vertex.to_string(), b.start, b.len)).collect();
        assert_eq!(
            rows,
            vec![
                ("y0".into(), 1, 1),
                ("y1".into(), 2, 3),
                ("y2".into(), 5, 2),
                ("x2".into(), 7, 3),
                ("x1".into(), 10, 2)
            ]
        );
        assert_eq!(l.p_star_cells(), vec![(1, 1), (1, 2), (1, 3), (5, 4), (5, 5), (6, 4), (6, 5)]);
        assert_eq!(l.snake_cells().len(), 23);
        assert_eq!(l.row_label(1), VarId::t(0, 1));
        assert_eq!(l.row_label(7), VarId::s(2, 1));
        assert_eq!(l.col_label(4), VarId::s(1, 1));
        assert_eq!(l.col_label(6), VarId::t(0, 1));
        assert_eq!(l.col_label(11), VarId::t(2, 2));
    }

    #[test]
    fn small_layout() {
        let q = BipartiteQuiver::new(vec![1, 1], vec![1]).unwrap();
        let l = q.layout();
        assert_eq!(l.snake_cells(), vec![(1, 1), (2, 1)]);
        assert!(l.p_star_cells().is_empty());
        assert_eq!(q.v_star(), Permutation::identity());
        let q0 = BipartiteQuiver::new(vec![0, 2], vec![0]).unwrap();
        assert_eq!(q0.v_star(), Permutation::identity());
        assert_eq!(q0.layout().d(), 2);
    }

    #[test]
    fn running_zelevinsky_matrix() {
        let (q, o) = running();
        o.validate(&q).unwrap();
        let v = zelevinsky(&q, &o).unwrap();
        assert_eq!(v.one_line(11), vec![4, 1, 2, 3, 6, 7, 5, 10, 11, 8, 9]);
        assert_eq!(v.length(), 9);
        assert_eq!(q.v_star().length(), 7);
        assert_eq!(codim(&q, &o).unwrap(), 2);
    }

    #[test]
    fn named_multiplicities() {
        let (q, o) = running();
        let named = o.to_named(&q);
        assert_eq!(named.get("y2,y0"), Some(&1));
        assert_eq!(OrbitData::from_named(&q, &named).unwrap(), o);
        let mut bad = named.clone();
        bad.insert("y0,y0".into(), 1);
        assert!(OrbitData::from_named(&q, &bad).is_err());
    }

    #[test]
    fn smallest_quiver_orbits() {
        let q = BipartiteQuiver::new(vec![1, 1], vec![1]).unwrap();
        let orbits = OrbitData::enumerate(&q);
        // positions y1 x1 y0: laces {y1-y0}, {y1-x1, y0}, {y1, x1-y0}, {y1, x1, y0}
        assert_eq!(orbits.len(), 4);
        let zero = orbits.iter().find(|o| o.rank(0) == 0 && o.rank(1) == 0).unwrap();
        let v = zelevinsky(&q, zero).unwrap();
        // the zero orbit is a point in a 2-dimensional representation space
        assert_eq!(v, Permutation::new(vec![2, 3, 1]).unwrap());
        assert_eq!(codim(&q, zero).unwrap(), 2);
        let dense = orbits.iter().find(|o| o.get(0, 2) == 1).unwrap();
        assert_eq!(zelevinsky(&q, dense).unwrap(), q.v_star());
    }

    #[test]
    fn every_small_orbit_gives_a_permutation() {
        for q in BipartiteQuiver::enumerate(2, 2) {
            for o in OrbitData::enumerate(&q) {
                let v = zelevinsky(&q, &o).unwrap();
                assert!(v.length() >= q.v_star().length(), "{q} {}", o.describe(&q));
            }
        }
    }

    #[test]
    fn quiver_enumeration_counts() {
        assert_eq!(BipartiteQuiver::enumerate(2, 2).len(), 27 + 243);
        assert!(BipartiteQuiver::new(vec![1], vec![]).is_err());
        assert!(BipartiteQuiver::new(vec![1], vec![1]).is_err());
    }
}
