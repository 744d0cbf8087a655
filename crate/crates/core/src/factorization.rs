//! `X_Ω ⊂ S_𝐝`, its Demazure factorizations, moves, and the pipe network map.

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lacing::{closure, pi, seqperm_moves, snake_space, SeqPerm};
use crate::perm::Permutation;
use crate::pipes::{CellSpace, PipeDream};
use crate::quiver::{zelevinsky, BipartiteQuiver, Gap, OrbitData, Rect, Vertex};

/// Largest `|S_𝐝|` that [`x_omega_by_factorization`] will scan.
pub const DEFAULT_MAX_SEQPERMS: usize = 1_000_000;

/// Block-constant factors of the snake region, indexed by `k - 1`.
#[derive(Clone, Debug, Serialize)]
pub struct SnakeConstants {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    /// `ε^k`: crosses strictly north of `α_k` in block column `x_k`.
    pub eps_north: Vec<Permutation>,
    /// `ε_k`: crosses strictly south of `β_k` in block column `x_k`.
    pub eps_south: Vec<Permutation>,
    /// `θ^k`: crosses strictly west of `α_k` in block row `y_{k-1}`.
    pub theta_west: Vec<Permutation>,
    /// `θ_k`: crosses strictly east of `β_k` in block row `y_k`.
    pub theta_east: Vec<Permutation>,
}

impl SnakeConstants {
    pub fn new(q: &BipartiteQuiver) -> Self {
        let layout = q.layout();
        let (dy, dx) = (q.d_y(), q.d_x());
        let strip = |cells: Vec<(usize, usize)>| PipeDream::new(dy, dx, cells).expect("inside grid").demazure();
        let n = q.n();
        let mut out = SnakeConstants {
            a: Vec::with_capacity(n),
            b: Vec::with_capacity(n),
            eps_north: Vec::with_capacity(n),
            eps_south: Vec::with_capacity(n),
            theta_west: Vec::with_capacity(n),
            theta_east: Vec::with_capacity(n),
        };
        for k in 1..=n {
            let sum_x: usize = (k + 1..=n).map(|i| q.dim(Vertex::X(i))).sum();
            out.a.push(sum_x + (0..k.saturating_sub(1)).map(|i| q.dim(Vertex::Y(i))).sum::<usize>());
            out.b.push(sum_x + (0..k).map(|i| q.dim(Vertex::Y(i))).sum::<usize>());
            let al = layout.alpha(k);
            let be = layout.beta(k);
            let cols = (al.col0 + 1)..=(al.col0 + al.cols);
            out.eps_north.push(strip((1..=al.row0).flat_map(|i| cols.clone().map(move |j| (i, j))).collect()));
            out.eps_south
                .push(strip((be.row0 + be.rows + 1..=dy).flat_map(|i| cols.clone().map(move |j| (i, j))).collect()));
            out.theta_west.push(strip(
                (al.row0 + 1..=al.row0 + al.rows).flat_map(|i| (1..=al.col0).map(move |j| (i, j))).collect(),
            ));
            out.theta_east.push(strip(
                (be.row0 + 1..=be.row0 + be.rows).flat_map(|i| (be.col0 + be.cols + 1..=dx).map(move |j| (i, j))).collect(),
            ));
        }
        out
    }

    /// `w_k = 1^{b_k} × v_k` and `w^k = 1^{a_k} × rot((v^k)^{-1})`.
    fn shifted(&self, q: &BipartiteQuiver, v: &SeqPerm, k: usize) -> (Permutation, Permutation) {
        let wk = v.component(q.gap_index(Gap::Beta(k))).embed_shift(self.b[k - 1]);
        let (r, c) = q.gap_shape(q.gap_index(Gap::Alpha(k)));
        let wu = v.component(q.gap_index(Gap::Alpha(k))).inverse().rotate(r + c).embed_shift(self.a[k - 1]);
        (wk, wu)
    }
}

fn demazure_fold<'a, I: IntoIterator<Item = &'a Permutation>>(factors: I) -> Permutation {
    factors.into_iter().fold(Permutation::identity(), |acc, f| acc.demazure_product(f))
}

/// Column-block factorization `(w^1 w_1 ε_1)(ε^2 w^2 w_2 ε_2)⋯(ε^n w^n w_n)`.
pub fn factorization_row(q: &BipartiteQuiver, c: &SnakeConstants, v: &SeqPerm) -> Permutation {
    let mut factors = Vec::with_capacity(4 * q.n());
    for k in 1..=q.n() {
        let (wk, wu) = c.shifted(q, v, k);
        factors.push(c.eps_north[k - 1].clone());
        factors.push(wu);
        factors.push(wk);
        factors.push(c.eps_south[k - 1].clone());
    }
    demazure_fold(&factors)
}

/// Row-block factorization `(w^1 θ^1)(w_1 w^2 θ^2)(θ_2 w_2 w^3 θ^3)⋯(θ_n w_n)`.
pub fn factorization_col(q: &BipartiteQuiver, c: &SnakeConstants, v: &SeqPerm) -> Permutation {
    let n = q.n();
    let parts: Vec<(Permutation, Permutation)> = (1..=n).map(|k| c.shifted(q, v, k)).collect();
    let mut factors = vec![parts[0].1.clone(), c.theta_west[0].clone()];
    for k in 1..n {
        factors.push(c.theta_east[k - 1].clone());
        factors.push(parts[k - 1].0.clone());
        factors.push(parts[k].1.clone());
        factors.push(c.theta_west[k].clone());
    }
    factors.push(c.theta_east[n - 1].clone());
    factors.push(parts[n - 1].0.clone());
    demazure_fold(&factors)
}

/// Masks of `Pipes(v₀, v(Ω))` over the snake cells.
fn snake_masks(q: &BipartiteQuiver, o: &OrbitData, reduced_only: bool) -> Result<(CellSpace, Vec<u64>)> {
    let v = zelevinsky(q, o)?;
    let space = snake_space(q)?;
    let masks = if reduced_only { space.reduced_target(&v) } else { space.generate_target(&v) };
    Ok((space, masks))
}

fn pi_set(q: &BipartiteQuiver, space: &CellSpace, masks: &[u64]) -> Vec<SeqPerm> {
    let set: BTreeSet<SeqPerm> =
        masks.iter().map(|&m| pi(q, &space.to_dream(m)).expect("contains P_*")).collect();
    set.into_iter().collect()
}

/// `X_Ω = {π(P) : P ∈ Pipes(v₀, v(Ω))}`, sorted.
pub fn x_omega(q: &BipartiteQuiver, o: &OrbitData) -> Result<Vec<SeqPerm>> {
    let (space, masks) = snake_masks(q, o, false)?;
    Ok(pi_set(q, &space, &masks))
}

/// `X_Ω^red`: images of reduced pipe dreams only.
pub fn x_omega_red(q: &BipartiteQuiver, o: &OrbitData) -> Result<Vec<SeqPerm>> {
    let (space, masks) = snake_masks(q, o, true)?;
    Ok(pi_set(q, &space, &masks))
}

/// Closure of `X_Ω^red` under the three-way interchanges.
pub fn x_omega_by_moves(q: &BipartiteQuiver, o: &OrbitData) -> Result<Vec<SeqPerm>> {
    Ok(closure(x_omega_red(q, o)?, |v| seqperm_moves(q, v)))
}

/// Every element of `S_𝐝` grouped by the value of each factorization.
#[derive(Clone, Debug, Default)]
pub struct FactorizationClasses {
    pub row: HashMap<Permutation, Vec<SeqPerm>>,
    pub col: HashMap<Permutation, Vec<SeqPerm>>,
}

impl FactorizationClasses {
    pub fn new(q: &BipartiteQuiver, limit: usize) -> Result<Self> {
        let total = SeqPerm::count_all(q);
        if total > limit {
            return Err(Error::Capacity { what: "scan of S_d".into(), needed: total, limit });
        }
        let c = SnakeConstants::new(q);
        let triples: Vec<(Permutation, Permutation, SeqPerm)> = SeqPerm::all(q)
            .into_par_iter()
            .map(|v| (factorization_row(q, &c, &v), factorization_col(q, &c, &v), v))
            .collect();
        let mut out = Self::default();
        for (r, c, v) in triples {
            out.row.entry(r).or_default().push(v.clone());
            out.col.entry(c).or_default().push(v);
        }
        for vs in out.row.values_mut().chain(out.col.values_mut()) {
            vs.sort();
        }
        Ok(out)
    }

    pub fn row_class(&self, v: &Permutation) -> Vec<SeqPerm> {
        self.row.get(v).cloned().unwrap_or_default()
    }

    pub fn col_class(&self, v: &Permutation) -> Vec<SeqPerm> {
        self.col.get(v).cloned().unwrap_or_default()
    }
}

/// `{𝐯 ∈ S_𝐝 : factorization_row(𝐯) = v(Ω)}` by scanning `S_𝐝`.
pub fn x_omega_by_factorization(q: &BipartiteQuiver, o: &OrbitData, limit: usize) -> Result<Vec<SeqPerm>> {
    let v = zelevinsky(q, o)?;
    let total = SeqPerm::count_all(q);
    if total > limit {
        return Err(Error::Capacity { what: "scan of S_d".into(), needed: total, limit });
    }
    let c = SnakeConstants::new(q);
    let mut out: Vec<SeqPerm> =
        SeqPerm::all(q).into_par_iter().filter(|s| factorization_row(q, &c, s) == v).collect();
    out.sort();
    Ok(out)
}

fn block_of(q: &BipartiteQuiver, g: usize) -> Rect {
    let layout = q.layout();
    match q.gap(g) {
        Gap::Beta(k) => layout.beta(k),
        Gap::Alpha(k) => layout.alpha(k),
    }
}

/// The pipe network map: `P_k` into `β_k`, `rot(P^k)` into `α_k`, on top of `P_*`.
pub fn pipe_network(q: &BipartiteQuiver, parts: &[PipeDream]) -> Result<PipeDream> {
    if parts.len() != q.num_gaps() {
        return Err(Error::ShapeMismatch(format!("expected {} mini pipe dreams, got {}", q.num_gaps(), parts.len())));
    }
    let mut cells = q.layout().p_star_cells();
    for (g, p) in parts.iter().enumerate() {
        let r = block_of(q, g);
        if (p.rows(), p.cols()) != (r.rows, r.cols) {
            return Err(Error::ShapeMismatch(format!(
                "mini pipe dream {} is {}x{}, block is {}x{}",
                g + 1,
                p.rows(),
                p.cols(),
                r.rows,
                r.cols
            )));
        }
        let placed = if g % 2 == 0 { p.clone() } else { p.rot() };
        cells.extend(placed.crosses().map(|(i, j)| (r.row0 + i, r.col0 + j)));
    }
    PipeDream::new(q.d_y(), q.d_x(), cells)
}

/// `Pipes(v)` (or `RPipes(v)`) on a mini grid, as pipe dreams.
fn mini_pipes(v: &Permutation, rows: usize, cols: usize, reduced_only: bool) -> Result<Vec<PipeDream>> {
    let space = CellSpace::grid(rows, cols)?;
    let masks = if reduced_only { space.reduced_target(v) } else { space.generate_target(v) };
    Ok(space.dreams(&masks))
}

/// Per-gap pipe dream sets for the components of `v`.
pub fn mini_pipe_sets(q: &BipartiteQuiver, v: &SeqPerm, reduced_only: bool) -> Result<Vec<Vec<PipeDream>>> {
    (0..q.num_gaps())
        .map(|g| {
            let (r, c) = q.gap_shape(g);
            mini_pipes(v.component(g), r, c, reduced_only)
        })
        .collect()
}

/// Every pipe network built from the per-gap sets.
pub fn pipe_networks(q: &BipartiteQuiver, sets: &[Vec<PipeDream>]) -> Result<Vec<PipeDream>> {
    let mut partial: Vec<Vec<PipeDream>> = vec![Vec::new()];
    for s in sets {
        let mut next = Vec::with_capacity(partial.len() * s.len());
        for prefix in &partial {
            for p in s {
                let mut t = prefix.clone();
                t.push(p.clone());
                next.push(t);
            }
        }
        partial = next;
    }
    partial.iter().map(|parts| pipe_network(q, parts)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::*;
    use crate::lacing::{enum_kw, site_neighbors, MoveSite};

    #[test]
    fn running_offsets_and_constants() {
        let q = running_quiver();
        let c = SnakeConstants::new(&q);
        // a_1 = d(x_2), b_1 = d(x_2) + d(y_0); a_2 = d(y_0), b_2 = d(y_0) + d(y_1)
        assert_eq!(c.a, vec![3, 1]);
        assert_eq!(c.b, vec![4, 4]);
        assert!(c.eps_north[0].is_identity());
        assert!(c.eps_south[1].is_identity());
        assert!(c.theta_east[0].is_identity());
        assert!(c.theta_west[1].is_identity());
        // block α_k starts on diagonal a_k + 1, β_k on b_k + 1
        let layout = q.layout();
        for k in 1..=2 {
            let al = layout.alpha(k);
            let be = layout.beta(k);
            assert_eq!(al.row0 + al.col0, c.a[k - 1]);
            assert_eq!(be.row0 + be.col0, c.b[k - 1]);
        }
    }

    #[test]
    fn running_factorizations() {
        let q = running_quiver();
        let o = running_orbit();
        let c = SnakeConstants::new(&q);
        let v = zelevinsky(&q, &o).unwrap();
        for d in [running_minimal(), running_k_first(), running_k_second()] {
            let s = d.extend();
            assert_eq!(factorization_row(&q, &c, &s), v, "{d}");
            assert_eq!(factorization_col(&q, &c, &s), v, "{d}");
        }
        let dense = crate::lacing::pipes_to_laces(&q, &q.p_star()).unwrap().extend();
        assert_eq!(factorization_row(&q, &c, &dense), q.v_star());
        assert_eq!(factorization_col(&q, &c, &dense), q.v_star());
    }

    #[test]
    fn running_x_omega() {
        let q = running_quiver();
        let o = running_orbit();
        let x = x_omega(&q, &o).unwrap();
        for d in [running_minimal(), running_k_first(), running_k_second()] {
            assert!(x.binary_search(&d.extend()).is_ok(), "{d}");
        }
        assert_eq!(x_omega_by_moves(&q, &o).unwrap(), x);
        let (kw, _) = enum_kw(&q, &o).unwrap();
        let ld: Vec<_> = {
            let mut t: Vec<_> = x.iter().map(|v| v.truncate(&q)).collect();
            t.sort();
            t
        };
        assert_eq!(ld, kw);
        assert!(matches!(
            x_omega_by_factorization(&q, &o, DEFAULT_MAX_SEQPERMS),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn boundary_ascents() {
        let q = running_quiver();
        let x = x_omega(&q, &running_orbit()).unwrap();
        let dyn_ = q.dim(Vertex::Y(2));
        let (dx1, dy0) = (q.dim(Vertex::X(1)), q.dim(Vertex::Y(0)));
        for v in &x {
            let vn = v.component(q.gap_index(Gap::Beta(2)));
            assert!((1..dyn_).all(|j| vn.has_right_ascent(j)));
            let r = v.component(q.gap_index(Gap::Alpha(1))).rotate(dx1 + dy0);
            assert!((dx1 + 1..dx1 + dy0).all(|k| r.has_right_ascent(k)));
        }
    }

    #[test]
    fn worked_move_on_seqperms() {
        let q = running_quiver();
        let [mid, _] = running_k_intermediates();
        let v1 = running_minimal().extend();
        let n = site_neighbors(&q, &v1, MoveSite::Sink { i: 2, k: 2 });
        assert_eq!(n.len(), 2);
        assert!(n.contains(&mid.extend()));
        assert!(seqperm_moves(&q, &SeqPerm::identity(&q)).is_empty());
    }

    #[test]
    fn pipe_network_inverts_mini_dreams() {
        let q = running_quiver();
        for p in [running_reduced_dream(), running_nonreduced_dream(), q.p_star()] {
            let parts: Vec<PipeDream> = crate::lacing::mini_dreams(&q, &p)
                .into_iter()
                .enumerate()
                .map(|(g, m)| if g % 2 == 0 { m } else { m.rot() })
                .collect();
            assert_eq!(pipe_network(&q, &parts).unwrap(), p);
        }
    }

    #[test]
    fn small_factorization_scan() {
        let q = BipartiteQuiver::new(vec![1, 1], vec![1]).unwrap();
        let classes = FactorizationClasses::new(&q, DEFAULT_MAX_SEQPERMS).unwrap();
        for o in OrbitData::enumerate(&q) {
            let v = zelevinsky(&q, &o).unwrap();
            let x = x_omega(&q, &o).unwrap();
            assert_eq!(x_omega_by_factorization(&q, &o, DEFAULT_MAX_SEQPERMS).unwrap(), x);
            assert_eq!(classes.row_class(&v), x);
            assert_eq!(classes.col_class(&v), x);
        }
    }
}
