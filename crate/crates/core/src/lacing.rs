//! Lacing diagrams, their completions, and the moves between them.
//!
//! A [`LacingDiagram`] stores one partial permutation per gap of the quiver
//! in drawing order `(w_n, w^n, …, w_1, w^1)`. Rows always index the dots
//! of the `y` vertex and columns the dots of the `x` vertex of that gap.
//! Its completion is a [`SeqPerm`] `(c(w_n), c(rot w^n), …)`.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{PartialPermutation, Permutation};
use crate::pipes::{CellSpace, PipeDream};
use crate::quiver::{zelevinsky, BipartiteQuiver, Gap, OrbitData, Vertex};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LacingDiagram {
    mats: Vec<PartialPermutation>,
}

impl LacingDiagram {
    pub fn new(q: &BipartiteQuiver, mats: Vec<PartialPermutation>) -> Result<Self> {
        if mats.len() != q.num_gaps() {
            return Err(Error::ShapeMismatch(format!("expected {} matrices, got {}", q.num_gaps(), mats.len())));
        }
        for (g, m) in mats.iter().enumerate() {
            let shape = q.gap_shape(g);
            if (m.rows(), m.cols()) != shape {
                return Err(Error::ShapeMismatch(format!(
                    "matrix {} has shape {}x{}, expected {}x{}",
                    g + 1,
                    m.rows(),
                    m.cols(),
                    shape.0,
                    shape.1
                )));
            }
        }
        Ok(Self { mats })
    }

    /// Builds a diagram from 0/1 matrices in gap order.
    pub fn from_matrices(q: &BipartiteQuiver, mats: &[Vec<Vec<u8>>]) -> Result<Self> {
        if mats.len() != q.num_gaps() {
            return Err(Error::ShapeMismatch(format!("expected {} matrices, got {}", q.num_gaps(), mats.len())));
        }
        let parsed = mats
            .iter()
            .enumerate()
            .map(|(g, m)| {
                let (rows, cols) = q.gap_shape(g);
                if m.len() != rows {
                    return Err(Error::ShapeMismatch(format!(
                        "matrix {} has {} rows, expected {rows}",
                        g + 1,
                        m.len()
                    )));
                }
                PartialPermutation::from_matrix(m, cols)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(q, parsed)
    }

    pub fn zero(q: &BipartiteQuiver) -> Self {
        Self {
            mats: (0..q.num_gaps())
                .map(|g| {
                    let (r, c) = q.gap_shape(g);
                    PartialPermutation::zero(r, c)
                })
                .collect(),
        }
    }

    pub fn gap(&self, g: usize) -> &PartialPermutation {
        &self.mats[g]
    }

    pub fn matrices(&self) -> &[PartialPermutation] {
        &self.mats
    }

    /// `𝔠(w)`.
    pub fn extend(&self) -> SeqPerm {
        SeqPerm {
            perms: self
                .mats
                .iter()
                .enumerate()
                .map(|(g, m)| if g % 2 == 0 { m.complete() } else { m.rot().complete() })
                .collect(),
        }
    }

    /// `|w|`, the number of crossings of the extended diagram.
    pub fn crossings(&self) -> usize {
        self.extend().length()
    }

    pub fn num_arrows(&self) -> usize {
        self.mats.iter().map(|m| m.rank()).sum()
    }

    /// Connected components, each listed left to right as `(position, dot)`.
    pub fn laces(&self, q: &BipartiteQuiver) -> Vec<Vec<(usize, usize)>> {
        let np = q.num_positions();
        // right[(p, a)] = dot at p+1 joined to dot a at p
        let mut right: HashMap<(usize, usize), usize> = HashMap::new();
        let mut has_left: HashSet<(usize, usize)> = HashSet::new();
        for (g, m) in self.mats.iter().enumerate() {
            for y in 1..=m.rows() {
                if let Some(x) = m.row_entry(y) {
                    let (l, r) = if g % 2 == 0 { (y, x) } else { (x, y) };
                    right.insert((g, l), r);
                    has_left.insert((g + 1, r));
                }
            }
        }
        let mut out = Vec::new();
        for p in 0..np {
            for a in 1..=q.dim_at(p) {
                if has_left.contains(&(p, a)) {
                    continue;
                }
                let mut lace = vec![(p, a)];
                let mut cur = (p, a);
                while let Some(&b) = right.get(&cur) {
                    cur = (cur.0 + 1, b);
                    lace.push(cur);
                }
                out.push(lace);
            }
        }
        out
    }

    /// Lace multiplicities by endpoint positions.
    pub fn orbit(&self, q: &BipartiteQuiver) -> OrbitData {
        let mut o = OrbitData::new();
        for lace in self.laces(q) {
            o.add(lace[0].0, lace[lace.len() - 1].0, 1);
        }
        o
    }

    /// Strands of the extended diagram and the number of times each pair
    /// crosses, keyed by lace indices as returned from [`Self::laces`].
    pub fn strand_crossings(&self, q: &BipartiteQuiver) -> HashMap<(usize, usize), usize> {
        let laces = self.laces(q);
        let mut owner: HashMap<(usize, usize), usize> = HashMap::new();
        for (idx, lace) in laces.iter().enumerate() {
            for &dot in lace {
                owner.insert(dot, idx);
            }
        }
        let ext = self.extend();
        let mut counts: HashMap<(usize, usize), usize> = HashMap::new();
        for g in 0..q.num_gaps() {
            let (dy, dx) = q.gap_shape(g);
            let m = dy + dx - self.mats[g].rank();
            let v = &ext.perms[g];
            // each arrow of the completed gap belongs to the strand of its real end
            let strand_of = |row: usize, col: usize| -> usize {
                let (y_dot, x_dot) = if g % 2 == 0 {
                    (row, col)
                } else {
                    // c(rot w): row r is y dot dy+1-r, column c is x dot dx+1-c
                    (if row <= dy { dy + 1 - row } else { 0 }, if col <= dx { dx + 1 - col } else { 0 })
                };
                let (py, px) = if g % 2 == 0 { (g, g + 1) } else { (g + 1, g) };
                if row <= dy && y_dot >= 1 {
                    owner[&(py, y_dot)]
                } else {
                    owner[&(px, x_dot)]
                }
            };
            for r1 in 1..=m {
                for r2 in r1 + 1..=m {
                    if v.apply(r1) > v.apply(r2) {
                        let a = strand_of(r1, v.apply(r1));
                        let b = strand_of(r2, v.apply(r2));
                        *counts.entry((a.min(b), a.max(b))).or_default() += 1;
                    }
                }
            }
        }
        counts
    }

    /// Minimality in its own orbit: no two extended strands cross twice, and
    /// strands of laces with a common left or a common right end column
    /// never cross.
    pub fn is_minimal(&self, q: &BipartiteQuiver) -> bool {
        let laces = self.laces(q);
        let counts = self.strand_crossings(q);
        counts.iter().all(|(&(a, b), &c)| {
            if c > 1 || a == b {
                return false;
            }
            let (la, lb) = (&laces[a], &laces[b]);
            la[0].0 != lb[0].0 && la[la.len() - 1].0 != lb[lb.len() - 1].0
        })
    }

    /// Every lacing diagram of the quiver.
    pub fn all(q: &BipartiteQuiver) -> Vec<Self> {
        let options: Vec<Vec<PartialPermutation>> = (0..q.num_gaps())
            .map(|g| {
                let (r, c) = q.gap_shape(g);
                PartialPermutation::all(r, c)
            })
            .collect();
        let mut out = vec![Vec::new()];
        for opts in &options {
            let mut next = Vec::with_capacity(out.len() * opts.len());
            for prefix in &out {
                for m in opts {
                    let mut p: Vec<PartialPermutation> = prefix.clone();
                    p.push(m.clone());
                    next.push(p);
                }
            }
            out = next;
        }
        out.into_iter().map(|mats| Self { mats }).collect()
    }

    /// Number of diagrams [`Self::all`] would produce.
    pub fn count_all(q: &BipartiteQuiver) -> usize {
        (0..q.num_gaps())
            .map(|g| {
                let (r, c) = q.gap_shape(g);
                count_partial_permutations(r, c)
            })
            .product()
    }

    pub fn to_matrices(&self) -> Vec<Vec<Vec<u8>>> {
        self.mats.iter().map(|m| m.to_matrix()).collect()
    }

    /// Text rendering: one line per gap.
    pub fn describe(&self, q: &BipartiteQuiver) -> String {
        let mut out = String::new();
        for (g, m) in self.mats.iter().enumerate() {
            let name = match q.gap(g) {
                Gap::Beta(k) => format!("w_{k}"),
                Gap::Alpha(k) => format!("w^{k}"),
            };
            out += &format!("{name} = {m}\n");
        }
        out
    }

    /// Dots and arrows; virtual dots and arrows of the extended diagram in red.
    pub fn to_svg(&self, q: &BipartiteQuiver) -> String {
        let np = q.num_positions();
        let ext = self.extend();
        let dx_step = 80.0;
        let dy_step = 30.0;
        // heights of real dots: gaps are drawn with the alignment of their arrow
        let max_dim = (0..np).map(|p| q.dim_at(p)).max().unwrap_or(0);
        let tallest = (0..q.num_gaps())
            .map(|g| {
                let (a, b) = q.gap_shape(g);
                a + b
            })
            .max()
            .unwrap_or(0)
            .max(max_dim);
        let width = (np as f64 - 1.0) * dx_step + 60.0;
        let height = (2 * tallest + 2) as f64 * dy_step;
        let top = tallest as f64 * dy_step;
        let y_of = |slot: i64| top + slot as f64 * dy_step;
        let x_of = |p: usize| 30.0 + p as f64 * dx_step;
        let mut out = format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">\n"
        );
        for p in 0..np {
            out += &format!(
                "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\" font-size=\"12\">{}</text>\n",
                x_of(p),
                14.0,
                q.vertex_at(p)
            );
            for a in 1..=q.dim_at(p) {
                out += &format!("<circle cx=\"{}\" cy=\"{}\" r=\"4\" fill=\"black\"/>\n", x_of(p), y_of(a as i64));
            }
        }
        for g in 0..q.num_gaps() {
            let (dy, dx) = q.gap_shape(g);
            let m = dy + dx - self.mats[g].rank();
            let v = &ext.perms[g];
            for r in 1..=m {
                let c = v.apply(r);
                // slots: β top-aligned (virtual below), α bottom-aligned (virtual above)
                let (ys, xs, yv, xv) = if g % 2 == 0 {
                    (r as i64, c as i64, r > dy, c > dx)
                } else {
                    let ys = if r <= dy { (dy + 1 - r) as i64 } else { dy as i64 - r as i64 + 1 };
                    let xs = if c <= dx { (dx + 1 - c) as i64 } else { dx as i64 - c as i64 + 1 };
                    (ys, xs, r > dy, c > dx)
                };
                let (py, px) = if g % 2 == 0 { (g, g + 1) } else { (g + 1, g) };
                let colour = if yv || xv { "red" } else { "black" };
                out += &format!(
                    "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{colour}\"/>\n",
                    x_of(py),
                    y_of(ys),
                    x_of(px),
                    y_of(xs)
                );
                for (virt, p, s) in [(yv, py, ys), (xv, px, xs)] {
                    if virt {
                        out += &format!("<circle cx=\"{}\" cy=\"{}\" r=\"3\" fill=\"red\"/>\n", x_of(p), y_of(s));
                    }
                }
            }
        }
        out += "</svg>\n";
        out
    }
}

fn count_partial_permutations(r: usize, c: usize) -> usize {
    // Σ_k C(r,k) C(c,k) k!
    let mut total = 0usize;
    for k in 0..=r.min(c) {
        let mut term = 1usize;
        for t in 0..k {
            term = term * (r - t) * (c - t) / (t + 1);
        }
        total += term;
    }
    total
}

impl fmt::Display for LacingDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.mats.iter().map(|m| m.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl fmt::Debug for LacingDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A tuple of permutations `(v_n, v^n, …, v_1, v^1)` in `S_𝐝`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SeqPerm {
    perms: Vec<Permutation>,
}

impl SeqPerm {
    pub fn new(q: &BipartiteQuiver, perms: Vec<Permutation>) -> Result<Self> {
        if perms.len() != q.num_gaps() {
            return Err(Error::ShapeMismatch(format!("expected {} permutations, got {}", q.num_gaps(), perms.len())));
        }
        for (g, p) in perms.iter().enumerate() {
            let (a, b) = q.gap_shape(g);
            if p.size() > a + b {
                return Err(Error::ShapeMismatch(format!("component {} lies outside S_{}", g + 1, a + b)));
            }
        }
        Ok(Self { perms })
    }

    pub fn identity(q: &BipartiteQuiver) -> Self {
        Self { perms: vec![Permutation::identity(); q.num_gaps()] }
    }

    pub fn component(&self, g: usize) -> &Permutation {
        &self.perms[g]
    }

    pub fn components(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn with_component(&self, g: usize, p: Permutation) -> Self {
        let mut perms = self.perms.clone();
        perms[g] = p;
        Self { perms }
    }

    /// `ℓ(𝐯)`.
    pub fn length(&self) -> usize {
        self.perms.iter().map(|p| p.length()).sum()
    }

    /// `LD(𝐯)`: northwest truncation, rotated back on the `α` gaps.
    pub fn truncate(&self, q: &BipartiteQuiver) -> LacingDiagram {
        LacingDiagram {
            mats: self
                .perms
                .iter()
                .enumerate()
                .map(|(g, p)| {
                    let (r, c) = q.gap_shape(g);
                    let t = p.truncate(r, c);
                    if g % 2 == 0 {
                        t
                    } else {
                        t.rot()
                    }
                })
                .collect(),
        }
    }

    /// Is every component the minimal completion of its truncation?
    pub fn is_completion(&self, q: &BipartiteQuiver) -> bool {
        self.truncate(q).extend() == *self
    }

    /// Every element of `S_𝐝`.
    pub fn all(q: &BipartiteQuiver) -> Vec<Self> {
        let mut out = vec![Vec::new()];
        for g in 0..q.num_gaps() {
            let (a, b) = q.gap_shape(g);
            let perms = crate::perm::all_permutations(a + b);
            let mut next = Vec::with_capacity(out.len() * perms.len());
            for prefix in &out {
                for p in &perms {
                    let mut v: Vec<Permutation> = prefix.clone();
                    v.push(p.clone());
                    next.push(v);
                }
            }
            out = next;
        }
        out.into_iter().map(|perms| Self { perms }).collect()
    }

    /// `|S_𝐝|`, saturating.
    pub fn count_all(q: &BipartiteQuiver) -> usize {
        (0..q.num_gaps())
            .map(|g| {
                let (a, b) = q.gap_shape(g);
                (1..=a + b).fold(1usize, |acc, x| acc.saturating_mul(x))
            })
            .fold(1usize, |acc, x| acc.saturating_mul(x))
    }
}

impl fmt::Display for SeqPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.perms.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl fmt::Debug for SeqPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Mini pipe dreams `(P_n, P^n, …, P_1, P^1)` cut from the snake blocks.
pub fn mini_dreams(q: &BipartiteQuiver, p: &PipeDream) -> Vec<PipeDream> {
    let layout = q.layout();
    (0..q.num_gaps())
        .map(|g| {
            let r = match q.gap(g) {
                Gap::Beta(k) => layout.beta(k),
                Gap::Alpha(k) => layout.alpha(k),
            };
            p.sub_block(r.row0, r.col0, r.rows, r.cols)
        })
        .collect()
}

fn check_contains_p_star(q: &BipartiteQuiver, p: &PipeDream) -> Result<()> {
    if p.rows() < q.d_y() || p.cols() < q.d_x() {
        return Err(Error::ShapeMismatch(format!(
            "pipe dream is {}x{}, need at least {}x{}",
            p.rows(),
            p.cols(),
            q.d_y(),
            q.d_x()
        )));
    }
    let layout = q.layout();
    if layout.p_star_cells().iter().any(|&c| !p.contains(c)) {
        return Err(Error::MissingBaseCrosses);
    }
    if let Some((i, j)) = p.crosses().find(|&(i, j)| i > q.d_y() || j > q.d_x()) {
        return Err(Error::CellOutsideGrid(i, j));
    }
    Ok(())
}

/// Pipes to laces `𝔴(P)`.
pub fn pipes_to_laces(q: &BipartiteQuiver, p: &PipeDream) -> Result<LacingDiagram> {
    check_contains_p_star(q, p)?;
    let mats = mini_dreams(q, p)
        .into_iter()
        .enumerate()
        .map(|(g, m)| if g % 2 == 0 { m.trace() } else { m.rot().trace().rot() })
        .collect();
    Ok(LacingDiagram { mats })
}

/// `π(P) = (δ(P_n), δ(rot P^n), …)`.
pub fn pi(q: &BipartiteQuiver, p: &PipeDream) -> Result<SeqPerm> {
    check_contains_p_star(q, p)?;
    let perms = mini_dreams(q, p)
        .into_iter()
        .enumerate()
        .map(|(g, m)| if g % 2 == 0 { m.demazure() } else { m.rot().demazure() })
        .collect();
    Ok(SeqPerm { perms })
}

/// The dense orbit: laces of `𝔴(P_*)`.
pub fn dense_orbit(q: &BipartiteQuiver) -> OrbitData {
    pipes_to_laces(q, &q.p_star()).expect("P_* contains itself").orbit(q)
}

/// Where a move acts: a pair of adjacent dots `k, k+1` in the middle column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MoveSite {
    /// Middle column `x_i`, `1 <= k < d(x_i)`; touches `v_i` and `v^i`.
    Sink { i: usize, k: usize },
    /// Middle column `y_i`, `1 <= i < n`, `1 <= l < d(y_i)`; touches `v_i` and `v^{i+1}`.
    Source { i: usize, l: usize },
}

impl MoveSite {
    pub fn all(q: &BipartiteQuiver) -> Vec<Self> {
        let mut out = Vec::new();
        for i in 1..=q.n() {
            for k in 1..q.dim(Vertex::X(i)) {
                out.push(MoveSite::Sink { i, k });
            }
        }
        for i in 1..q.n() {
            for l in 1..q.dim(Vertex::Y(i)) {
                out.push(MoveSite::Source { i, l });
            }
        }
        out
    }
}

#[derive(Clone, Copy)]
enum Side {
    Left,
    Right,
}

/// The two components a move touches and the generator applied to each.
struct SiteAction {
    a_gap: usize,
    a_gen: usize,
    c_gap: usize,
    c_gen: usize,
    side: Side,
}

fn site_action(q: &BipartiteQuiver, site: MoveSite) -> SiteAction {
    match site {
        MoveSite::Sink { i, k } => SiteAction {
            a_gap: q.gap_index(Gap::Beta(i)),
            a_gen: k,
            c_gap: q.gap_index(Gap::Alpha(i)),
            c_gen: q.dim(Vertex::X(i)) - k,
            side: Side::Left,
        },
        MoveSite::Source { i, l } => SiteAction {
            a_gap: q.gap_index(Gap::Beta(i)),
            a_gen: l,
            c_gap: q.gap_index(Gap::Alpha(i + 1)),
            c_gen: q.dim(Vertex::Y(i)) - l,
            side: Side::Right,
        },
    }
}

impl SiteAction {
    fn flag(&self, p: &Permutation, j: usize) -> bool {
        match self.side {
            Side::Left => !p.has_left_ascent(j),
            Side::Right => !p.has_right_ascent(j),
        }
    }

    fn toggle(&self, p: &Permutation, j: usize) -> Permutation {
        match self.side {
            Side::Left => p.mul_simple_left(j),
            Side::Right => p.mul_simple_right(j),
        }
    }

    fn flags(&self, v: &SeqPerm) -> (bool, bool) {
        (self.flag(&v.perms[self.a_gap], self.a_gen), self.flag(&v.perms[self.c_gap], self.c_gen))
    }

    /// Element with the requested flags in the same three-element family.
    fn with_flags(&self, v: &SeqPerm, target: (bool, bool)) -> SeqPerm {
        let cur = self.flags(v);
        let mut out = v.clone();
        if cur.0 != target.0 {
            out.perms[self.a_gap] = self.toggle(&v.perms[self.a_gap], self.a_gen);
        }
        if cur.1 != target.1 {
            out.perms[self.c_gap] = self.toggle(&v.perms[self.c_gap], self.c_gen);
        }
        out
    }
}

/// The other members of the three-element family at `site`, if `v`
/// belongs to one.
pub fn site_neighbors(q: &BipartiteQuiver, v: &SeqPerm, site: MoveSite) -> Vec<SeqPerm> {
    let act = site_action(q, site);
    let cur = act.flags(v);
    if cur == (false, false) {
        return Vec::new();
    }
    [(true, false), (false, true), (true, true)]
        .into_iter()
        .filter(|&f| f != cur)
        .map(|f| act.with_flags(v, f))
        .collect()
}

/// Does at least one outer dot on each side of the move carry a real dot?
pub fn outer_dots_real(q: &BipartiteQuiver, v: &SeqPerm, site: MoveSite) -> bool {
    let act = site_action(q, site);
    let a = &v.perms[act.a_gap];
    let c = &v.perms[act.c_gap];
    match site {
        MoveSite::Sink { i, k } => {
            let dyi = q.dim(Vertex::Y(i));
            let dyp = q.dim(Vertex::Y(i - 1));
            let left = [a.inverse_apply(k), a.inverse_apply(k + 1)].iter().any(|&r| r <= dyi);
            let right = [c.inverse_apply(act.c_gen), c.inverse_apply(act.c_gen + 1)].iter().any(|&r| r <= dyp);
            left && right
        }
        MoveSite::Source { i, l } => {
            let dxi = q.dim(Vertex::X(i));
            let dxn = q.dim(Vertex::X(i + 1));
            let right = [a.apply(l), a.apply(l + 1)].iter().any(|&c| c <= dxi);
            let left = [c.apply(act.c_gen), c.apply(act.c_gen + 1)].iter().any(|&x| x <= dxn);
            left && right
        }
    }
}

/// Moves on `S_𝐝` exactly as three-way interchanges, with no side conditions.
pub fn seqperm_moves(q: &BipartiteQuiver, v: &SeqPerm) -> Vec<SeqPerm> {
    let mut out: BTreeSet<SeqPerm> = BTreeSet::new();
    for site in MoveSite::all(q) {
        out.extend(site_neighbors(q, v, site));
    }
    out.into_iter().collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MoveKind {
    /// Moves a single crossing across the middle column.
    Reduced,
    /// All interchanges, including doubling a crossing.
    KTheoretic,
}

/// Moves refused by the side conditions.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct MoveLog {
    pub applied: usize,
    pub all_virtual_outer: usize,
    pub not_a_completion: usize,
}

/// Moves on completed lacing diagrams, subject to the real-dot conditions.
pub fn lacing_moves(q: &BipartiteQuiver, v: &SeqPerm, kind: MoveKind, log: &mut MoveLog) -> Vec<SeqPerm> {
    let mut out = BTreeSet::new();
    for site in MoveSite::all(q) {
        let act = site_action(q, site);
        let cur = act.flags(v);
        let candidates: Vec<SeqPerm> = match kind {
            MoveKind::Reduced => match cur {
                (true, false) => vec![act.with_flags(v, (false, true))],
                (false, true) => vec![act.with_flags(v, (true, false))],
                _ => Vec::new(),
            },
            MoveKind::KTheoretic => site_neighbors(q, v, site),
        };
        if candidates.is_empty() {
            continue;
        }
        if !outer_dots_real(q, v, site) {
            log.all_virtual_outer += candidates.len();
            continue;
        }
        for c in candidates {
            if c.is_completion(q) {
                log.applied += 1;
                out.insert(c);
            } else {
                log.not_a_completion += 1;
            }
        }
    }
    out.into_iter().collect()
}

/// Closure of `seeds` under `step`, as a sorted set.
pub fn closure<T, F>(seeds: Vec<T>, mut step: F) -> Vec<T>
where
    T: Clone + Ord + std::hash::Hash,
    F: FnMut(&T) -> Vec<T>,
{
    let mut seen: HashSet<T> = seeds.iter().cloned().collect();
    let mut queue: VecDeque<T> = seeds.into_iter().collect();
    while let Some(x) = queue.pop_front() {
        for y in step(&x) {
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    let mut out: Vec<T> = seen.into_iter().collect();
    out.sort();
    out
}

/// `W(Ω)` by filtering every diagram of the quiver by orbit and crossing number.
pub fn enum_w_oracle(q: &BipartiteQuiver, o: &OrbitData) -> Vec<LacingDiagram> {
    let in_orbit: Vec<LacingDiagram> = LacingDiagram::all(q).into_iter().filter(|w| w.orbit(q) == *o).collect();
    let best = in_orbit.iter().map(|w| w.crossings()).min();
    let mut out: Vec<LacingDiagram> = in_orbit.into_iter().filter(|w| Some(w.crossings()) == best).collect();
    out.sort();
    out
}

/// One minimal diagram: pipes to laces of a reduced pipe dream for `v(Ω)`.
pub fn minimal_seed(q: &BipartiteQuiver, o: &OrbitData) -> Result<LacingDiagram> {
    let v = zelevinsky(q, o)?;
    let space = snake_space(q)?;
    let reduced = space.reduced_target(&v);
    let first = reduced
        .first()
        .ok_or_else(|| Error::InvalidOrbit("no reduced pipe dream for the Zelevinsky permutation".into()))?;
    pipes_to_laces(q, &space.to_dream(*first))
}

/// `P_*` forced, snake cells free, on the `d_y × d_x` grid.
pub fn snake_space(q: &BipartiteQuiver) -> Result<CellSpace> {
    let layout = q.layout();
    CellSpace::new(q.d_y(), q.d_x(), &layout.p_star_cells(), &layout.snake_cells())
}

/// `W(Ω)` as the reduced-move closure of one minimal diagram.
pub fn enum_w(q: &BipartiteQuiver, o: &OrbitData) -> Result<(Vec<LacingDiagram>, MoveLog)> {
    let seed = minimal_seed(q, o)?;
    let mut log = MoveLog::default();
    let closed = closure(vec![seed.extend()], |v| lacing_moves(q, v, MoveKind::Reduced, &mut log));
    let mut out: Vec<LacingDiagram> = closed.iter().map(|v| v.truncate(q)).collect();
    out.sort();
    Ok((out, log))
}

/// `KW(Ω)`: closure of `W(Ω)` under K-theoretic moves.
pub fn enum_kw(q: &BipartiteQuiver, o: &OrbitData) -> Result<(Vec<LacingDiagram>, MoveLog)> {
    let (w, mut log) = enum_w(q, o)?;
    let seeds: Vec<SeqPerm> = w.iter().map(|d| d.extend()).collect();
    let closed = closure(seeds, |v| lacing_moves(q, v, MoveKind::KTheoretic, &mut log));
    let mut out: Vec<LacingDiagram> = closed.iter().map(|v| v.truncate(q)).collect();
    out.sort();
    Ok((out, log))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::*;

    #[test]
    fn running_minimal_diagram() {
        let q = running_quiver();
        let w = running_minimal();
        assert_eq!(w.orbit(&q), running_orbit());
        assert_eq!(w.crossings(), 2);
        assert!(w.is_minimal(&q));
        let ext = w.extend();
        assert_eq!(ext.component(0), &Permutation::identity());
        assert_eq!(ext.component(2), &Permutation::identity());
        assert_eq!(ext.truncate(&q), w);
    }

    #[test]
    fn k_theoretic_examples() {
        let q = running_quiver();
        assert_eq!(running_k_first().crossings(), 3);
        assert_eq!(running_k_second().crossings(), 5);
        assert!(!running_k_first().is_minimal(&q));
        assert!(!running_k_second().is_minimal(&q));
        let [a, b] = running_k_intermediates();
        assert_eq!(a.crossings(), 3);
        assert_eq!(b.crossings(), 4);
    }

    #[test]
    fn zero_and_identity_diagrams() {
        let q = BipartiteQuiver::new(vec![1, 1], vec![1]).unwrap();
        let zero = LacingDiagram::zero(&q);
        let ext = zero.extend();
        assert!(ext.components().iter().all(|p| *p == Permutation::simple(1)));
        assert_eq!(zero.crossings(), 2);
        assert!(zero.is_minimal(&q));
        let q = running_quiver();
        let id = SeqPerm::identity(&q);
        let diag = id.truncate(&q);
        assert_eq!(diag.crossings(), 0);
        assert!(diag.is_minimal(&q));
    }

    #[test]
    fn pipes_to_laces_on_running_dreams() {
        let q = running_quiver();
        let p1 = running_reduced_dream();
        let p2 = running_nonreduced_dream();
        assert_eq!(pipes_to_laces(&q, &p1).unwrap(), running_minimal());
        assert_eq!(pipes_to_laces(&q, &p2).unwrap(), running_k_second());
        assert_eq!(pi(&q, &p1).unwrap(), running_minimal().extend());
        assert_eq!(pi(&q, &p2).unwrap(), running_k_second().extend());
        let dense = pipes_to_laces(&q, &q.p_star()).unwrap();
        assert_eq!(dense.crossings(), 0);
        assert!(pipes_to_laces(&q, &PipeDream::empty(6, 5)).is_err());
    }

    #[test]
    fn worked_move_example() {
        let q = running_quiver();
        let v1 = running_minimal().extend();
        let [mid, _] = running_k_intermediates();
        let neighbors = site_neighbors(&q, &v1, MoveSite::Sink { i: 2, k: 2 });
        assert!(neighbors.contains(&mid.extend()));
        // the α₂ component is τ₁ applied on the left to the identity
        assert_eq!(v1.component(1), &Permutation::simple(1));
        assert_eq!(mid.extend().component(0), &Permutation::new(vec![1, 3, 2]).unwrap());
    }

    #[test]
    fn extension_truncation_round_trip() {
        for q in BipartiteQuiver::enumerate(2, 1) {
            for w in LacingDiagram::all(&q) {
                assert_eq!(w.extend().truncate(&q), w);
            }
        }
    }

    #[test]
    fn running_w_contains_minimal_diagram() {
        let q = running_quiver();
        let o = running_orbit();
        let (w, _) = enum_w(&q, &o).unwrap();
        assert!(w.contains(&running_minimal()));
        assert_eq!(w, enum_w_oracle(&q, &o));
        let (kw, _) = enum_kw(&q, &o).unwrap();
        for d in [running_k_first(), running_k_second()] {
            assert!(kw.contains(&d), "{d}");
        }
        for d in running_k_intermediates() {
            assert!(kw.contains(&d), "{d}");
        }
    }

    #[test]
    fn dense_orbit_has_single_minimal_diagram() {
        let q = running_quiver();
        let o = dense_orbit(&q);
        let (w, _) = enum_w(&q, &o).unwrap();
        assert_eq!(w, vec![pipes_to_laces(&q, &q.p_star()).unwrap()]);
    }

    #[test]
    fn partial_permutation_counts() {
        assert_eq!(count_partial_permutations(2, 3), 13);
        assert_eq!(count_partial_permutations(3, 3), 34);
        assert_eq!(count_partial_permutations(0, 4), 1);
        let q = running_quiver();
        assert_eq!(LacingDiagram::count_all(&q), 13 * 34 * 13 * 3);
    }
}
