//! Pipe dreams on rectangular grids.
//!
//! Cells are 1-based `(row, col)`. A cross at `(i, j)` contributes the
//! generator `τ_{i+j-1}`; the reading order is row by row from the top,
//! right to left within each row.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{hecke_right, PartialPermutation, Permutation};

/// Default bound on free cells for exhaustive subset enumeration.
pub const DEFAULT_MAX_FREE_CELLS: usize = 26;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PipeDream {
    rows: usize,
    cols: usize,
    crosses: BTreeSet<(usize, usize)>,
}

impl PipeDream {
    pub fn empty(rows: usize, cols: usize) -> Self {
        Self { rows, cols, crosses: BTreeSet::new() }
    }

    pub fn new<I: IntoIterator<Item = (usize, usize)>>(rows: usize, cols: usize, crosses: I) -> Result<Self> {
        let crosses: BTreeSet<_> = crosses.into_iter().collect();
        for &(i, j) in &crosses {
            if i == 0 || j == 0 || i > rows || j > cols {
                return Err(Error::CellOutsideGrid(i, j));
            }
        }
        Ok(Self { rows, cols, crosses })
    }

    /// Every cell of the grid is a cross.
    pub fn full(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            crosses: (1..=rows).flat_map(|i| (1..=cols).map(move |j| (i, j))).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn len(&self) -> usize {
        self.crosses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crosses.is_empty()
    }

    pub fn crosses(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.crosses.iter().copied()
    }

    pub fn contains(&self, cell: (usize, usize)) -> bool {
        self.crosses.contains(&cell)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.crosses.is_subset(&other.crosses)
    }

    pub fn difference_len(&self, other: &Self) -> usize {
        self.crosses.difference(&other.crosses).count()
    }

    /// Crosses in reading order.
    pub fn reading_cells(&self) -> Vec<(usize, usize)> {
        let mut cells: Vec<_> = self.crosses.iter().copied().collect();
        cells.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        cells
    }

    pub fn reading_word(&self) -> Vec<usize> {
        self.reading_cells().into_iter().map(|(i, j)| i + j - 1).collect()
    }

    /// Column reading: rightmost column first, top to bottom in each column.
    pub fn column_word(&self) -> Vec<usize> {
        let mut cells: Vec<_> = self.crosses.iter().copied().collect();
        cells.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        cells.into_iter().map(|(i, j)| i + j - 1).collect()
    }

    /// Demazure product `δ(P)` of the reading word.
    pub fn demazure(&self) -> Permutation {
        evaluate(self.rows + self.cols, self.reading_word())
    }

    pub fn demazure_by_columns(&self) -> Permutation {
        evaluate(self.rows + self.cols, self.column_word())
    }

    /// No two pipes cross twice.
    pub fn is_reduced(&self) -> bool {
        self.len() == self.demazure().length()
    }

    /// 180° rotation inside the grid.
    pub fn rot(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            crosses: self.crosses.iter().map(|&(i, j)| (self.rows + 1 - i, self.cols + 1 - j)).collect(),
        }
    }

    /// The same crosses on a larger grid.
    pub fn embed(&self, rows: usize, cols: usize) -> Result<Self> {
        Self::new(rows, cols, self.crosses.iter().copied())
    }

    /// The same crosses on a smaller grid; fails if a cross falls outside.
    pub fn restrict(&self, rows: usize, cols: usize) -> Result<Self> {
        Self::new(rows, cols, self.crosses.iter().copied())
    }

    /// Crosses inside a sub-rectangle, re-indexed to start at `(1, 1)`.
    pub fn sub_block(&self, row0: usize, col0: usize, rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            crosses: self
                .crosses
                .iter()
                .filter(|&&(i, j)| i > row0 && i <= row0 + rows && j > col0 && j <= col0 + cols)
                .map(|&(i, j)| (i - row0, j - col0))
                .collect(),
        }
    }

    /// Follows every pipe through the tiles.
    pub fn route(&self) -> Routing {
        route(self.rows, self.cols, |i, j| self.crosses.contains(&(i, j)))
    }

    /// Drops redundant crosses: scanning in reading order (northeast to
    /// southwest), a cross is deleted when its two pipes already cross
    /// further northeast. The result is reduced with the same `δ`.
    pub fn reduce(&self) -> Self {
        let mut buf: Vec<u8> = (0..(self.rows + self.cols) as u8).collect();
        let mut kept = BTreeSet::new();
        for (i, j) in self.reading_cells() {
            let a = i + j - 1;
            if buf[a - 1] < buf[a] {
                buf.swap(a - 1, a);
                kept.insert((i, j));
            }
        }
        Self { rows: self.rows, cols: self.cols, crosses: kept }
    }

    /// Follow-the-pipes: entry `(i, j)` is 1 iff the pipe entering row `i`
    /// on the west wall leaves through column `j` on the north wall, after
    /// removing surplus crossings with [`PipeDream::reduce`].
    pub fn trace(&self) -> PartialPermutation {
        let routing = self.reduce().route();
        let entries = (0..self.rows)
            .map(|p| match routing.exit[p] {
                Exit::North(j) => Some(j),
                Exit::East(_) => None,
            })
            .collect();
        PartialPermutation::from_entries(self.rows, self.cols, entries).expect("pipe exits are distinct")
    }

    pub fn to_ascii(&self) -> String {
        let mut out = String::new();
        for i in 1..=self.rows {
            for j in 1..=self.cols {
                out.push(if self.crosses.contains(&(i, j)) { '+' } else { '.' });
            }
            out.push('\n');
        }
        out
    }

    /// Draws tiles of side 20 with optional highlighted cells.
    pub fn to_svg(&self, highlight: &BTreeSet<(usize, usize)>) -> String {
        let s = 20.0;
        let h = s / 2.0;
        let w = self.cols as f64 * s;
        let ht = self.rows as f64 * s;
        let mut out = format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"-2 -2 {} {}\">\n",
            w + 4.0,
            ht + 4.0,
            w + 4.0,
            ht + 4.0
        );
        for i in 1..=self.rows {
            for j in 1..=self.cols {
                let x = (j - 1) as f64 * s;
                let y = (i - 1) as f64 * s;
                let fill = if highlight.contains(&(i, j)) { "#fde2e2" } else { "none" };
                out += &format!(
                    "<rect x=\"{x}\" y=\"{y}\" width=\"{s}\" height=\"{s}\" fill=\"{fill}\" stroke=\"#bbb\"/>\n"
                );
                if self.crosses.contains(&(i, j)) {
                    out += &format!(
                        "<path d=\"M{x} {} H{} M{} {y} V{}\" stroke=\"black\" fill=\"none\"/>\n",
                        y + h,
                        x + s,
                        x + h,
                        y + s
                    );
                } else {
                    out += &format!(
                        "<path d=\"M{x} {} A{h} {h} 0 0 0 {} {y} M{} {} A{h} {h} 0 0 1 {} {}\" stroke=\"black\" fill=\"none\"/>\n",
                        y + h,
                        x + h,
                        x + h,
                        y + s,
                        x + s,
                        y + h
                    );
                }
            }
        }
        out += "</svg>\n";
        out
    }
}

impl fmt::Display for PipeDream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (i, j)) in self.crosses.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "({i},{j})")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for PipeDream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{} {}", self.rows, self.cols, self)
    }
}

fn evaluate(m: usize, word: Vec<usize>) -> Permutation {
    let mut buf: Vec<u8> = (0..m as u8).collect();
    for i in word {
        hecke_right(&mut buf, i);
    }
    Permutation::from_zero_based(&buf)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    North(usize),
    East(usize),
}

/// Pipe `p < rows` enters the west wall in row `p+1`; pipe `rows + q`
/// enters the south wall in column `q+1`.
#[derive(Clone, Debug)]
pub struct Routing {
    pub exit: Vec<Exit>,
    /// For each cross tile, the (sorted) pair of pipes meeting there.
    pub cross_pairs: HashMap<(usize, usize), (usize, usize)>,
}

fn route(rows: usize, cols: usize, is_cross: impl Fn(usize, usize) -> bool) -> Routing {
    let mut exit = vec![Exit::North(0); rows + cols];
    let mut cross_pairs = HashMap::new();
    // from_south[j]: pipe travelling north into the current row at column j
    let mut from_south: Vec<usize> = (0..cols).map(|q| rows + q).collect();
    for i in (1..=rows).rev() {
        let mut from_west = i - 1;
        for j in 1..=cols {
            let south = from_south[j - 1];
            if is_cross(i, j) {
                cross_pairs.insert((i, j), (from_west.min(south), from_west.max(south)));
                // west continues east, south continues north
            } else {
                from_south[j - 1] = from_west;
                from_west = south;
            }
        }
        exit[from_west] = Exit::East(i);
    }
    for (j, &p) in from_south.iter().enumerate() {
        exit[p] = Exit::North(j + 1);
    }
    Routing { exit, cross_pairs }
}

/// A set of allowed cells, some of them forced to be crosses, in reading
/// order; subsets are `u64` masks over [`CellSpace::cells`].
#[derive(Clone, Debug)]
pub struct CellSpace {
    rows: usize,
    cols: usize,
    cells: Vec<(usize, usize)>,
    forced: u64,
}

impl CellSpace {
    pub fn grid(rows: usize, cols: usize) -> Result<Self> {
        let all: Vec<_> = (1..=rows).flat_map(|i| (1..=cols).map(move |j| (i, j))).collect();
        Self::new(rows, cols, &[], &all)
    }

    /// `forced` cells are always crosses, `free` cells may be either.
    pub fn new(rows: usize, cols: usize, forced: &[(usize, usize)], free: &[(usize, usize)]) -> Result<Self> {
        let mut cells: Vec<(usize, usize)> = forced.iter().chain(free).copied().collect();
        for &(i, j) in &cells {
            if i == 0 || j == 0 || i > rows || j > cols {
                return Err(Error::CellOutsideGrid(i, j));
            }
        }
        cells.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        cells.dedup();
        if cells.len() > 64 {
            return Err(Error::Capacity { what: "cell space".into(), needed: cells.len(), limit: 64 });
        }
        let forced_set: HashSet<_> = forced.iter().copied().collect();
        let forced = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| forced_set.contains(c))
            .fold(0u64, |m, (k, _)| m | (1 << k));
        Ok(Self { rows, cols, cells, forced })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn cells(&self) -> &[(usize, usize)] {
        &self.cells
    }

    pub fn num_free(&self) -> usize {
        self.cells.len() - self.forced.count_ones() as usize
    }

    fn letters(&self) -> Vec<usize> {
        self.cells.iter().map(|&(i, j)| i + j - 1).collect()
    }

    pub fn to_dream(&self, mask: u64) -> PipeDream {
        PipeDream {
            rows: self.rows,
            cols: self.cols,
            crosses: (0..self.cells.len()).filter(|k| mask >> k & 1 == 1).map(|k| self.cells[k]).collect(),
        }
    }

    pub fn to_mask(&self, p: &PipeDream) -> Option<u64> {
        let mut mask = 0;
        for c in p.crosses() {
            mask |= 1 << self.cells.iter().position(|&d| d == c)?;
        }
        Some(mask)
    }

    /// Fails when more than `limit` cells are free.
    pub fn ensure_capacity(&self, limit: usize) -> Result<()> {
        if self.num_free() > limit {
            return Err(Error::Capacity {
                what: "exhaustive pipe dream enumeration (free cells)".into(),
                needed: self.num_free(),
                limit,
            });
        }
        Ok(())
    }

    /// Every subset containing the forced cells, grouped by Demazure product.
    pub fn brute_force_all(&self, limit: usize) -> Result<HashMap<Permutation, Vec<u64>>> {
        self.ensure_capacity(limit)?;
        let letters = self.letters();
        let m = self.rows + self.cols;
        let mut out: HashMap<Permutation, Vec<u64>> = HashMap::new();
        let mut buf: Vec<u8> = (0..m as u8).collect();
        fn rec(
            k: usize,
            mask: u64,
            buf: &mut Vec<u8>,
            space: &CellSpace,
            letters: &[usize],
            out: &mut HashMap<Permutation, Vec<u64>>,
        ) {
            if k == letters.len() {
                out.entry(Permutation::from_zero_based(buf)).or_default().push(mask);
                return;
            }
            if space.forced >> k & 1 == 0 {
                rec(k + 1, mask, buf, space, letters, out);
            }
            let saved = buf.clone();
            hecke_right(buf, letters[k]);
            rec(k + 1, mask | 1 << k, buf, space, letters, out);
            *buf = saved;
        }
        rec(0, 0, &mut buf, self, &letters, &mut out);
        for v in out.values_mut() {
            v.sort_unstable();
        }
        Ok(out)
    }

    /// Every subset containing the forced cells whose Demazure product is
    /// `target`, by exhaustive search with Bruhat pruning of prefixes.
    pub fn brute_force_target(&self, target: &Permutation, limit: usize) -> Result<Vec<u64>> {
        self.ensure_capacity(limit)?;
        let m = self.rows + self.cols;
        if target.size() > m {
            return Ok(Vec::new());
        }
        let letters = self.letters();
        let tgt = target.zero_based(m);
        let buf: Vec<u8> = (0..m as u8).collect();
        let mut out = brute_rec(self, &letters, &tgt, 0, 0, buf);
        out.sort_unstable();
        Ok(out)
    }

    /// Reduced subsets with Demazure product `target`: a depth-first search
    /// through prefixes of reduced words in right weak order.
    pub fn reduced_target(&self, target: &Permutation) -> Vec<u64> {
        let m = self.rows + self.cols;
        if target.size() > m {
            return Vec::new();
        }
        let letters = self.letters();
        let len = target.length();
        let tgt = target.zero_based(m);
        let mut pos = vec![0usize; m];
        for (p, &x) in tgt.iter().enumerate() {
            pos[x as usize] = p;
        }
        let mut out = Vec::new();
        let mut buf: Vec<u8> = (0..m as u8).collect();
        #[allow(clippy::too_many_arguments)]
        fn rec(
            k: usize,
            mask: u64,
            have: usize,
            buf: &mut Vec<u8>,
            space: &CellSpace,
            letters: &[usize],
            pos: &[usize],
            len: usize,
            out: &mut Vec<u64>,
        ) {
            let remaining = letters.len() - k;
            if have + remaining < len {
                return;
            }
            if k == letters.len() {
                out.push(mask);
                return;
            }
            let forced = space.forced >> k & 1 == 1;
            if !forced {
                rec(k + 1, mask, have, buf, space, letters, pos, len, out);
            }
            if have < len {
                let i = letters[k];
                let (a, b) = (buf[i - 1] as usize, buf[i] as usize);
                if a < b && pos[a] > pos[b] {
                    buf.swap(i - 1, i);
                    rec(k + 1, mask | 1 << k, have + 1, buf, space, letters, pos, len, out);
                    buf.swap(i - 1, i);
                }
            }
        }
        rec(0, 0, 0, &mut buf, self, &letters, &pos, len, &mut out);
        out.sort_unstable();
        out
    }

    /// Upward closure of `seeds` by single cells that leave the Demazure
    /// product unchanged.
    pub fn absorb_closure(&self, seeds: &[u64]) -> Vec<u64> {
        let mut seen: HashSet<u64> = seeds.iter().copied().collect();
        let mut frontier: Vec<u64> = seeds.to_vec();
        let letters = self.letters();
        let m = self.rows + self.cols;
        while !frontier.is_empty() {
            let next: Vec<u64> = frontier
                .par_iter()
                .flat_map_iter(|&mask| {
                    let base = self.eval_mask(mask, &letters, m);
                    (0..letters.len())
                        .filter(move |k| mask >> k & 1 == 0)
                        .filter(|&k| self.eval_mask(mask | 1 << k, &letters, m) == base)
                        .map(move |k| mask | 1 << k)
                        .collect::<Vec<_>>()
                })
                .collect();
            frontier = next.into_iter().filter(|x| seen.insert(*x)).collect();
        }
        let mut out: Vec<u64> = seen.into_iter().collect();
        out.sort_unstable();
        out
    }

    fn eval_mask(&self, mask: u64, letters: &[usize], m: usize) -> Vec<u8> {
        let mut buf: Vec<u8> = (0..m as u8).collect();
        for (k, &i) in letters.iter().enumerate() {
            if mask >> k & 1 == 1 {
                hecke_right(&mut buf, i);
            }
        }
        buf
    }

    pub fn demazure(&self, mask: u64) -> Permutation {
        Permutation::from_zero_based(&self.eval_mask(mask, &self.letters(), self.rows + self.cols))
    }

    /// All subsets with product `target`, seeded by reduced ones.
    pub fn generate_target(&self, target: &Permutation) -> Vec<u64> {
        self.absorb_closure(&self.reduced_target(target))
    }

    /// Sorts masks by the canonical order of their pipe dreams.
    pub fn dreams(&self, masks: &[u64]) -> Vec<PipeDream> {
        let mut out: Vec<PipeDream> = masks.iter().map(|&m| self.to_dream(m)).collect();
        out.sort();
        out
    }
}

fn brute_rec(space: &CellSpace, letters: &[usize], tgt: &[u8], k: usize, mask: u64, buf: Vec<u8>) -> Vec<u64> {
    if !bruhat_le(&buf, tgt) {
        return Vec::new();
    }
    if k == letters.len() {
        return if buf == tgt { vec![mask] } else { Vec::new() };
    }
    let mut crossed = buf.clone();
    hecke_right(&mut crossed, letters[k]);
    let skip = space.forced >> k & 1 == 0;
    if k < 8 && letters.len() - k > 12 {
        let (mut a, b) = rayon::join(
            || if skip { brute_rec(space, letters, tgt, k + 1, mask, buf) } else { Vec::new() },
            || brute_rec(space, letters, tgt, k + 1, mask | 1 << k, crossed),
        );
        a.extend(b);
        a
    } else {
        let mut a = if skip { brute_rec(space, letters, tgt, k + 1, mask, buf) } else { Vec::new() };
        a.extend(brute_rec(space, letters, tgt, k + 1, mask | 1 << k, crossed));
        a
    }
}

/// Bruhat order on 0-based one-line buffers of equal length.
pub(crate) fn bruhat_le(u: &[u8], v: &[u8]) -> bool {
    let m = u.len();
    let mut cu = vec![0i32; m + 1];
    let mut cv = vec![0i32; m + 1];
    for i in 0..m {
        // c[j] = #{a <= i : w(a) >= j}
        for j in 0..=u[i] as usize {
            cu[j] += 1;
        }
        for j in 0..=v[i] as usize {
            cv[j] += 1;
        }
        if (0..=m).any(|j| cu[j] > cv[j]) {
            return false;
        }
    }
    true
}

/// Bruhat order on permutations.
pub fn bruhat_leq(u: &Permutation, v: &Permutation) -> bool {
    let m = u.size().max(v.size());
    bruhat_le(&u.zero_based(m), &v.zero_based(m))
}

/// `RPipes(v)` on a `rows × cols` grid.
pub fn enum_rpipes(v: &Permutation, rows: usize, cols: usize) -> Result<Vec<PipeDream>> {
    let space = CellSpace::grid(rows, cols)?;
    Ok(space.dreams(&space.reduced_target(v)))
}

/// `Pipes(v)` on a `rows × cols` grid, by exhaustive search.
pub fn enum_pipes(v: &Permutation, rows: usize, cols: usize, limit: usize) -> Result<Vec<PipeDream>> {
    let space = CellSpace::grid(rows, cols)?;
    Ok(space.dreams(&space.brute_force_target(v, limit)?))
}

/// `RPipes(w)` for a partial permutation, on its own `k × ℓ` grid.
pub fn enum_rpipes_partial(w: &PartialPermutation) -> Result<Vec<PipeDream>> {
    enum_rpipes(&w.complete(), w.rows(), w.cols())
}

/// `Pipes(w)` for a partial permutation, on its own `k × ℓ` grid.
pub fn enum_pipes_partial(w: &PartialPermutation, limit: usize) -> Result<Vec<PipeDream>> {
    enum_pipes(&w.complete(), w.rows(), w.cols(), limit)
}
