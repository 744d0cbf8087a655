//! Permutations and partial permutation matrices.
//!
//! A [`Permutation`] is stored in one-line notation with trailing fixed
//! points removed, so `(2,1)` and `(2,1,3,4)` are the same value. This is
//! the usual embedding `S_m ⊂ S_{m+1} ⊂ …`; operations that depend on an
//! explicit ambient size (rotation, the longest element) take it as an
//! argument.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "Vec<usize>")]
pub struct Permutation {
    // one-line notation, 1-based values, trailing fixed points trimmed
    one_line: Vec<usize>,
}

impl Permutation {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let m = one_line.len();
        let mut seen = vec![false; m + 1];
        for &x in &one_line {
            if x == 0 || x > m || seen[x] {
                return Err(Error::NotAPermutation(one_line));
            }
            seen[x] = true;
        }
        Ok(Self::from_one_line_unchecked(one_line))
    }

    pub(crate) fn from_one_line_unchecked(mut one_line: Vec<usize>) -> Self {
        while let Some(&last) = one_line.last() {
            if last == one_line.len() {
                one_line.pop();
            } else {
                break;
            }
        }
        Self { one_line }
    }

    /// Builds a permutation from a 0-based image buffer (`buf[i] = v(i+1) - 1`).
    pub(crate) fn from_zero_based(buf: &[u8]) -> Self {
        Self::from_one_line_unchecked(buf.iter().map(|&x| x as usize + 1).collect())
    }

    /// Simple transposition `τ_i`, swapping `i` and `i+1`.
    pub fn simple(i: usize) -> Self {
        assert!(i >= 1, "generator index starts at 1");
        let mut one_line: Vec<usize> = (1..=i + 1).collect();
        one_line.swap(i - 1, i);
        Self { one_line }
    }

    /// `(n, n-1, …, 1)`.
    pub fn longest(n: usize) -> Self {
        Self::from_one_line_unchecked((1..=n).rev().collect())
    }

    /// Smallest `m` with `self ∈ S_m`.
    pub fn size(&self) -> usize {
        self.one_line.len()
    }

    pub fn is_identity(&self) -> bool {
        self.one_line.is_empty()
    }

    /// `v(i)` for 1-based `i`; fixed beyond the stored support.
    pub fn apply(&self, i: usize) -> usize {
        if i >= 1 && i <= self.one_line.len() {
            self.one_line[i - 1]
        } else {
            i
        }
    }

    /// One-line notation padded with fixed points to length `m`.
    pub fn one_line(&self, m: usize) -> Vec<usize> {
        let mut out = self.one_line.clone();
        out.extend(out.len() + 1..=m.max(out.len()));
        out
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.one_line
    }

    /// 0-based image buffer of length `m` (`m >= self.size()`).
    pub(crate) fn zero_based(&self, m: usize) -> Vec<u8> {
        debug_assert!(m >= self.size());
        (1..=m).map(|i| (self.apply(i) - 1) as u8).collect()
    }

    pub fn inverse(&self) -> Self {
        let m = self.size();
        let mut inv = vec![0; m];
        for (i, &x) in self.one_line.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        Self::from_one_line_unchecked(inv)
    }

    /// Composition `(self · other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Self) -> Self {
        let m = self.size().max(other.size());
        Self::from_one_line_unchecked((1..=m).map(|i| self.apply(other.apply(i))).collect())
    }

    /// Inversion count.
    pub fn length(&self) -> usize {
        let v = &self.one_line;
        let mut count = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// `self · τ_i`: swaps positions `i` and `i+1`.
    pub fn mul_simple_right(&self, i: usize) -> Self {
        let mut one_line = self.one_line(i + 1);
        one_line.swap(i - 1, i);
        Self::from_one_line_unchecked(one_line)
    }

    /// `τ_i · self`: swaps values `i` and `i+1`.
    pub fn mul_simple_left(&self, i: usize) -> Self {
        let m = self.size().max(i + 1);
        let one_line = (1..=m)
            .map(|p| match self.apply(p) {
                x if x == i => i + 1,
                x if x == i + 1 => i,
                x => x,
            })
            .collect();
        Self::from_one_line_unchecked(one_line)
    }

    /// Does `self · τ_i` have larger length than `self`?
    pub fn has_right_ascent(&self, i: usize) -> bool {
        self.apply(i) < self.apply(i + 1)
    }

    /// Does `τ_i · self` have larger length than `self`?
    pub fn has_left_ascent(&self, i: usize) -> bool {
        self.inverse_apply(i) < self.inverse_apply(i + 1)
    }

    /// `v^{-1}(x)` without materialising the inverse.
    pub fn inverse_apply(&self, x: usize) -> usize {
        self.one_line
            .iter()
            .position(|&y| y == x)
            .map(|p| p + 1)
            .unwrap_or(x)
    }

    /// 0-Hecke product `self ⋆ τ_i`.
    pub fn demazure_mul(&self, i: usize) -> Self {
        if self.has_right_ascent(i) {
            self.mul_simple_right(i)
        } else {
            self.clone()
        }
    }

    /// A reduced word `i_1 … i_l` with `self = τ_{i_1} ⋯ τ_{i_l}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut v = self.one_line.clone();
        let mut word = Vec::with_capacity(self.length());
        // peel right descents: v = (v τ_i) τ_i
        loop {
            match (0..v.len().saturating_sub(1)).find(|&p| v[p] > v[p + 1]) {
                Some(p) => {
                    v.swap(p, p + 1);
                    word.push(p + 1);
                }
                None => break,
            }
        }
        word.reverse();
        word
    }

    /// 0-Hecke product `self ⋆ other`.
    pub fn demazure_product(&self, other: &Self) -> Self {
        let m = self.size().max(other.size());
        let mut buf = self.zero_based(m);
        for i in other.reduced_word() {
            hecke_right(&mut buf, i);
        }
        Self::from_zero_based(&buf)
    }

    /// `1^m × v`: fixes `1..m` and sends `m+i` to `v(i)+m`.
    pub fn embed_shift(&self, m: usize) -> Self {
        let mut one_line: Vec<usize> = (1..=m).collect();
        one_line.extend(self.one_line.iter().map(|&x| x + m));
        Self::from_one_line_unchecked(one_line)
    }

    /// 180° rotation of the permutation matrix inside `S_m`, i.e. `w₀ v w₀`.
    pub fn rotate(&self, m: usize) -> Self {
        assert!(m >= self.size(), "rotation size {m} smaller than support {}", self.size());
        Self::from_one_line_unchecked((1..=m).map(|i| m + 1 - self.apply(m + 1 - i)).collect())
    }

    /// Northwest `rows × cols` corner of the permutation matrix.
    pub fn truncate(&self, rows: usize, cols: usize) -> PartialPermutation {
        let entries = (1..=rows)
            .map(|i| {
                let j = self.apply(i);
                (j <= cols).then_some(j)
            })
            .collect();
        PartialPermutation { rows, cols, entries }
    }

    /// Evaluates a word of simple transpositions in the 0-Hecke monoid.
    pub fn demazure_word<I: IntoIterator<Item = usize>>(word: I) -> Self {
        let mut buf: Vec<u8> = Vec::new();
        for i in word {
            if buf.len() < i + 1 {
                let start = buf.len();
                buf.extend((start..=i).map(|x| x as u8));
            }
            hecke_right(&mut buf, i);
        }
        Self::from_zero_based(&buf)
    }
}

/// In-place `u ← u ⋆ τ_i` on a 0-based buffer.
#[inline]
pub(crate) fn hecke_right(buf: &mut [u8], i: usize) {
    if buf[i - 1] < buf[i] {
        buf.swap(i - 1, i);
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        let shown = if self.one_line.is_empty() { vec![1] } else { self.one_line.clone() };
        for (k, x) in shown.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.one_line
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::new(v)
    }
}

/// A `rows × cols` 0/1 matrix with at most one 1 in every row and column.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PartialPermutation {
    rows: usize,
    cols: usize,
    // entries[i] = Some(j) iff entry (i+1, j) is 1 (j is 1-based)
    entries: Vec<Option<usize>>,
}

impl PartialPermutation {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![None; rows] }
    }

    pub fn from_matrix(matrix: &[Vec<u8>], cols: usize) -> Result<Self> {
        let rows = matrix.len();
        let mut entries = Vec::with_capacity(rows);
        let mut col_used = vec![false; cols];
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::NotAPartialPermutation(format!(
                    "row {} has {} entries, expected {cols}",
                    i + 1,
                    row.len()
                )));
            }
            let mut found = None;
            for (j, &x) in row.iter().enumerate() {
                match x {
                    0 => {}
                    1 => {
                        if found.is_some() || col_used[j] {
                            return Err(Error::NotAPartialPermutation(format!(
                                "two 1s share row {} or column {}",
                                i + 1,
                                j + 1
                            )));
                        }
                        col_used[j] = true;
                        found = Some(j + 1);
                    }
                    other => {
                        return Err(Error::NotAPartialPermutation(format!("entry {other} is not 0/1")))
                    }
                }
            }
            entries.push(found);
        }
        Ok(Self { rows, cols, entries })
    }

    /// `entries[i] = Some(j)` marks a 1 at `(i+1, j)`.
    pub fn from_entries(rows: usize, cols: usize, entries: Vec<Option<usize>>) -> Result<Self> {
        if entries.len() != rows {
            return Err(Error::NotAPartialPermutation(format!(
                "{} row entries for {rows} rows",
                entries.len()
            )));
        }
        let mut col_used = vec![false; cols];
        for e in entries.iter().flatten() {
            if *e == 0 || *e > cols || col_used[*e - 1] {
                return Err(Error::NotAPartialPermutation(format!("bad column {e}")));
            }
            col_used[*e - 1] = true;
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.entries.iter().flatten().count()
    }

    /// Column of the 1 in row `i` (1-based).
    pub fn row_entry(&self, i: usize) -> Option<usize> {
        self.entries[i - 1]
    }

    /// Row of the 1 in column `j` (1-based).
    pub fn col_entry(&self, j: usize) -> Option<usize> {
        self.entries.iter().position(|&e| e == Some(j)).map(|p| p + 1)
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.entries[i - 1] == Some(j)
    }

    pub fn to_matrix(&self) -> Vec<Vec<u8>> {
        self.entries
            .iter()
            .map(|e| (1..=self.cols).map(|j| u8::from(*e == Some(j))).collect())
            .collect()
    }

    /// 180° rotation: `(i,j) ↦ (rows+1-i, cols+1-j)`.
    pub fn rot(&self) -> Self {
        let entries = self
            .entries
            .iter()
            .rev()
            .map(|e| e.map(|j| self.cols + 1 - j))
            .collect();
        Self { rows: self.rows, cols: self.cols, entries }
    }

    /// Minimal-length completion `c(w) ∈ S_{rows+cols-rank}`.
    ///
    /// Rows without a 1 take columns `cols+1, cols+2, …` top to bottom;
    /// the new rows below take the unused columns among `1..=cols` in
    /// increasing order.
    pub fn complete(&self) -> Permutation {
        let mut next_virtual = self.cols;
        let mut one_line: Vec<usize> = self
            .entries
            .iter()
            .map(|e| {
                e.unwrap_or_else(|| {
                    next_virtual += 1;
                    next_virtual
                })
            })
            .collect();
        let mut used = vec![false; self.cols + 1];
        for e in self.entries.iter().flatten() {
            used[*e] = true;
        }
        one_line.extend((1..=self.cols).filter(|&j| !used[j]));
        Permutation::from_one_line_unchecked(one_line)
    }

    /// Sum over all partial permutations of the given shape.
    pub fn all(rows: usize, cols: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut entries = Vec::with_capacity(rows);
        let mut used = vec![false; cols + 1];
        fn rec(
            rows: usize,
            cols: usize,
            entries: &mut Vec<Option<usize>>,
            used: &mut [bool],
            out: &mut Vec<PartialPermutation>,
        ) {
            if entries.len() == rows {
                out.push(PartialPermutation { rows, cols, entries: entries.clone() });
                return;
            }
            entries.push(None);
            rec(rows, cols, entries, used, out);
            entries.pop();
            for j in 1..=cols {
                if !used[j] {
                    used[j] = true;
                    entries.push(Some(j));
                    rec(rows, cols, entries, used, out);
                    entries.pop();
                    used[j] = false;
                }
            }
        }
        rec(rows, cols, &mut entries, &mut used, &mut out);
        out
    }
}

impl fmt::Display for PartialPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .to_matrix()
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

/// All permutations of `S_m`, lexicographic.
pub fn all_permutations(m: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=m).collect();
    loop {
        out.push(Permutation::from_one_line_unchecked(cur.clone()));
        // next lexicographic permutation
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}
