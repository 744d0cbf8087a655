//! Double Schubert and Grothendieck polynomials from pipe dreams, and the
//! pipe and component formulas for quiver loci.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lacing::{enum_kw, enum_w, snake_space, LacingDiagram};
use crate::perm::{PartialPermutation, Permutation};
use crate::pipes::{CellSpace, PipeDream};
use crate::poly::{LaurentPoly, VarId, WeightMode};
use crate::quiver::{codim, zelevinsky, BipartiteQuiver, Gap, OrbitData, Vertex};

/// Largest `d` for which [`ratio_check`] enumerates the full grid.
pub const DEFAULT_RATIO_MAX_D: usize = 5;

/// Variables attached to the rows and columns of a grid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabets {
    pub rows: Vec<VarId>,
    pub cols: Vec<VarId>,
}

impl Alphabets {
    pub fn new(rows: Vec<VarId>, cols: Vec<VarId>) -> Self {
        Self { rows, cols }
    }

    /// Alphabets of the mini grid of gap `g`: `(𝐭^k; 𝐬^k)` on `β_k`,
    /// reversed `(𝐭̃^{k-1}; 𝐬̃^k)` on the rotated `α_k`.
    pub fn gap(q: &BipartiteQuiver, g: usize) -> Self {
        let seq = |v: Vertex| -> Vec<VarId> {
            (1..=q.dim(v))
                .map(|i| match v {
                    Vertex::Y(k) => VarId::t(k, i),
                    Vertex::X(k) => VarId::s(k, i),
                })
                .collect()
        };
        match q.gap(g) {
            Gap::Beta(k) => Self::new(seq(Vertex::Y(k)), seq(Vertex::X(k))),
            Gap::Alpha(k) => {
                let mut rows = seq(Vertex::Y(k - 1));
                let mut cols = seq(Vertex::X(k));
                rows.reverse();
                cols.reverse();
                Self::new(rows, cols)
            }
        }
    }

    /// Block labels of the full `d × d` grid: `(𝐭, 𝐬)` down the rows and
    /// `(𝐬, 𝐭)` across the columns.
    pub fn full_grid(q: &BipartiteQuiver) -> Self {
        let layout = q.layout();
        let d = q.d();
        Self::new((1..=d).map(|i| layout.row_label(i)).collect(), (1..=d).map(|j| layout.col_label(j)).collect())
    }

    fn weight(&self, (i, j): (usize, usize), mode: WeightMode) -> LaurentPoly {
        LaurentPoly::cross_weight(self.rows[i - 1], self.cols[j - 1], mode)
    }
}

/// `Π (a_i - b_j)` or `Π (1 - a_i/b_j)` over the given cells.
pub fn cell_product<I: IntoIterator<Item = (usize, usize)>>(cells: I, alph: &Alphabets, mode: WeightMode) -> LaurentPoly {
    cells.into_iter().fold(LaurentPoly::one(), |acc, c| &acc * &alph.weight(c, mode))
}

fn signed(p: LaurentPoly, exponent: usize) -> LaurentPoly {
    if exponent % 2 == 0 {
        p
    } else {
        -p
    }
}

/// Rows up to the last descent of `v`, columns up to the last descent of `v⁻¹`.
pub fn minimal_rectangle(v: &Permutation) -> (usize, usize) {
    let last = |p: &Permutation| (1..p.size()).rev().find(|&i| !p.has_right_ascent(i)).unwrap_or(0);
    (last(v), last(&v.inverse()))
}

fn rectangle_space(v: &Permutation, alph: &Alphabets) -> Result<CellSpace> {
    let (r, c) = minimal_rectangle(v);
    if r > alph.rows.len() || c > alph.cols.len() {
        return Err(Error::ShapeMismatch(format!(
            "pipe dreams of {v} need a {r}x{c} grid, alphabets cover {}x{}",
            alph.rows.len(),
            alph.cols.len()
        )));
    }
    CellSpace::grid(r, c)
}

fn sum_dreams(dreams: &[PipeDream], f: impl Fn(&PipeDream) -> LaurentPoly + Sync + Send) -> LaurentPoly {
    dreams.par_iter().map(f).reduce(LaurentPoly::zero, |a, b| &a + &b)
}

/// `𝔖_v(𝐚; 𝐛) = Σ_{P ∈ RPipes(v)} (𝐚 - 𝐛)^P`.
pub fn schubert(v: &Permutation, alph: &Alphabets) -> Result<LaurentPoly> {
    let space = rectangle_space(v, alph)?;
    let dreams = space.dreams(&space.reduced_target(v));
    Ok(sum_dreams(&dreams, |p| cell_product(p.crosses(), alph, WeightMode::Cohomology)))
}

/// `𝔊_v(𝐚; 𝐛) = Σ_{P ∈ Pipes(v)} (-1)^{|P| - ℓ(v)} (1 - 𝐚/𝐛)^P`.
pub fn grothendieck(v: &Permutation, alph: &Alphabets, limit: usize) -> Result<LaurentPoly> {
    let space = rectangle_space(v, alph)?;
    space.ensure_capacity(limit)?;
    let dreams = space.dreams(&space.generate_target(v));
    let len = v.length();
    Ok(sum_dreams(&dreams, |p| signed(cell_product(p.crosses(), alph, WeightMode::KTheory), p.len() - len)))
}

/// `𝔖_w := 𝔖_{c(w)}`, on the `k × ℓ` grid of `w`.
pub fn schubert_partial(w: &PartialPermutation, alph: &Alphabets) -> Result<LaurentPoly> {
    schubert(&w.complete(), alph)
}

pub fn grothendieck_partial(w: &PartialPermutation, alph: &Alphabets, limit: usize) -> Result<LaurentPoly> {
    grothendieck(&w.complete(), alph, limit)
}

/// Component `g` of a diagram as it enters the product: `w_k` or `rot(w^k)`.
fn oriented(w: &LacingDiagram, g: usize) -> PartialPermutation {
    if g % 2 == 0 {
        w.gap(g).clone()
    } else {
        w.gap(g).rot()
    }
}

/// `𝔖_𝐰(𝐭; 𝐬) = Π 𝔖_{w_k}(𝐭^k; 𝐬^k) · Π 𝔖_{rot(w^k)}(𝐭̃^{k-1}; 𝐬̃^k)`.
pub fn schubert_lacing(q: &BipartiteQuiver, w: &LacingDiagram) -> Result<LaurentPoly> {
    let mut acc = LaurentPoly::one();
    for g in 0..q.num_gaps() {
        acc = &acc * &schubert_partial(&oriented(w, g), &Alphabets::gap(q, g))?;
    }
    Ok(acc)
}

/// `𝔊_𝐰(𝐭; 𝐬)`, the same product of Grothendieck polynomials.
pub fn grothendieck_lacing(q: &BipartiteQuiver, w: &LacingDiagram, limit: usize) -> Result<LaurentPoly> {
    let mut acc = LaurentPoly::one();
    for g in 0..q.num_gaps() {
        acc = &acc * &grothendieck_partial(&oriented(w, g), &Alphabets::gap(q, g), limit)?;
    }
    Ok(acc)
}

/// Weight `(𝐭 - 𝐬)^{P ∖ P_*}` or `(1 - 𝐭/𝐬)^{P ∖ P_*}` with block labels.
pub fn snake_weight(q: &BipartiteQuiver, p: &PipeDream, mode: WeightMode) -> LaurentPoly {
    let layout = q.layout();
    let alph = Alphabets::full_grid(q);
    cell_product(p.crosses().filter(|&c| layout.in_snake(c)), &alph, mode)
}

/// `RPipes(v₀, v(Ω))` (or `Pipes`) as pipe dreams on the `d_y × d_x` grid.
pub fn snake_dreams(q: &BipartiteQuiver, o: &OrbitData, reduced_only: bool, limit: usize) -> Result<Vec<PipeDream>> {
    let v = zelevinsky(q, o)?;
    let space = snake_space(q)?;
    space.ensure_capacity(limit)?;
    let masks = if reduced_only { space.reduced_target(&v) } else { space.generate_target(&v) };
    Ok(space.dreams(&masks))
}

/// `𝒬_Ω = Σ_{P ∈ RPipes(v₀, v(Ω))} (𝐭 - 𝐬)^{P ∖ P_*}`.
pub fn multidegree_pipe(q: &BipartiteQuiver, o: &OrbitData, limit: usize) -> Result<LaurentPoly> {
    let dreams = snake_dreams(q, o, true, limit)?;
    Ok(sum_dreams(&dreams, |p| snake_weight(q, p, WeightMode::Cohomology)))
}

/// `K𝒬_Ω = Σ_{P ∈ Pipes(v₀, v(Ω))} (-1)^{|P ∖ P_*| - codim Ω} (1 - 𝐭/𝐬)^{P ∖ P_*}`.
pub fn kpoly_pipe(q: &BipartiteQuiver, o: &OrbitData, limit: usize) -> Result<LaurentPoly> {
    let c = codim(q, o)?;
    let base = q.p_star().len();
    let dreams = snake_dreams(q, o, false, limit)?;
    Ok(sum_dreams(&dreams, |p| signed(snake_weight(q, p, WeightMode::KTheory), p.len() - base - c)))
}

/// `Σ_{𝐰 ∈ W(Ω)} 𝔖_𝐰(𝐭; 𝐬)`.
pub fn multidegree_component(q: &BipartiteQuiver, o: &OrbitData) -> Result<LaurentPoly> {
    let (w, _) = enum_w(q, o)?;
    let parts = w.par_iter().map(|d| schubert_lacing(q, d)).collect::<Result<Vec<_>>>()?;
    Ok(parts.into_iter().sum())
}

/// `Σ_{𝐰 ∈ KW(Ω)} (-1)^{|𝐰| - codim Ω} 𝔊_𝐰(𝐭; 𝐬)`.
pub fn kpoly_component(q: &BipartiteQuiver, o: &OrbitData, limit: usize) -> Result<LaurentPoly> {
    let c = codim(q, o)?;
    let (kw, _) = enum_kw(q, o)?;
    let parts = kw
        .par_iter()
        .map(|d| Ok(signed(grothendieck_lacing(q, d, limit)?, d.crossings() - c)))
        .collect::<Result<Vec<_>>>()?;
    Ok(parts.into_iter().sum())
}

/// Outcome of cross-multiplying the ratio formulas.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RatioCheck {
    pub cohomology: bool,
    pub k_theory: bool,
}

impl RatioCheck {
    pub fn passed(&self) -> bool {
        self.cohomology && self.k_theory
    }
}

/// `𝔖_{v_*}·𝒬_Ω = 𝔖_{v(Ω)}` and `𝔊_{v_*}·K𝒬_Ω = 𝔊_{v(Ω)}` with the
/// `(𝐭, 𝐬; 𝐬, 𝐭)` specialization, by exhaustive search over the `d × d` grid.
pub fn ratio_check(q: &BipartiteQuiver, o: &OrbitData, max_d: usize, limit: usize) -> Result<RatioCheck> {
    let d = q.d();
    if d > max_d {
        return Err(Error::Capacity { what: "ratio check grid size d".into(), needed: d, limit: max_d });
    }
    let alph = Alphabets::full_grid(q);
    // a cross on antidiagonal i + j - 1 >= d would move d + 1, so no element of S_d uses one
    let cells: Vec<(usize, usize)> = (1..d).flat_map(|i| (1..=d - i).map(move |j| (i, j))).collect();
    let space = CellSpace::new(d, d, &[], &cells)?;
    let grid_polys = |v: &Permutation| -> Result<(LaurentPoly, LaurentPoly)> {
        let dreams = space.dreams(&space.brute_force_target(v, limit)?);
        let len = v.length();
        let s = sum_dreams(&dreams, |p| {
            if p.len() == len {
                cell_product(p.crosses(), &alph, WeightMode::Cohomology)
            } else {
                LaurentPoly::zero()
            }
        });
        let g = sum_dreams(&dreams, |p| signed(cell_product(p.crosses(), &alph, WeightMode::KTheory), p.len() - len));
        Ok((s, g))
    };
    let (s_star, g_star) = grid_polys(&q.v_star())?;
    let (s_omega, g_omega) = grid_polys(&zelevinsky(q, o)?)?;
    let qd = multidegree_pipe(q, o, limit)?;
    let kq = kpoly_pipe(q, o, limit)?;
    Ok(RatioCheck { cohomology: &s_star * &qd == s_omega, k_theory: &g_star * &kq == g_omega })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::*;
    use crate::pipes::DEFAULT_MAX_FREE_CELLS;

    fn ab(n: usize) -> Alphabets {
        Alphabets::new((1..=n).map(|i| VarId::t(0, i)).collect(), (1..=n).map(|i| VarId::s(0, i)).collect())
    }

    fn p(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_schubert_and_grothendieck() {
        let a = ab(3);
        assert!(schubert(&Permutation::identity(), &a).unwrap().is_one());
        assert!(grothendieck(&Permutation::identity(), &a, DEFAULT_MAX_FREE_CELLS).unwrap().is_one());
        let t1 = LaurentPoly::var(VarId::t(0, 1));
        let s1 = LaurentPoly::var(VarId::s(0, 1));
        assert_eq!(schubert(&Permutation::simple(1), &a).unwrap(), &t1 - &s1);
        assert_eq!(
            grothendieck(&Permutation::simple(1), &a, DEFAULT_MAX_FREE_CELLS).unwrap(),
            LaurentPoly::cross_weight(VarId::t(0, 1), VarId::s(0, 1), WeightMode::KTheory)
        );
        let w = PartialPermutation::from_matrix(&[vec![0, 1]], 2).unwrap();
        assert_eq!(w.complete(), p(&[2, 1]));
        assert_eq!(schubert_partial(&w, &a).unwrap(), &t1 - &s1);
    }

    #[test]
    fn rectangle_matches_larger_grid() {
        let a = ab(4);
        for v in crate::perm::all_permutations(4) {
            let dreams = crate::pipes::enum_pipes(&v, 4, 4, DEFAULT_MAX_FREE_CELLS).unwrap();
            let len = v.length();
            let g: LaurentPoly = dreams
                .iter()
                .map(|p| signed(cell_product(p.crosses(), &a, WeightMode::KTheory), p.len() - len))
                .sum();
            let s: LaurentPoly = dreams
                .iter()
                .filter(|p| p.len() == len)
                .map(|p| cell_product(p.crosses(), &a, WeightMode::Cohomology))
                .sum();
            assert_eq!(grothendieck(&v, &a, DEFAULT_MAX_FREE_CELLS).unwrap(), g, "{v}");
            assert_eq!(schubert(&v, &a).unwrap(), s, "{v}");
        }
    }

    #[test]
    fn grothendieck_lowest_part_is_schubert() {
        let a = ab(3);
        for v in crate::perm::all_permutations(3) {
            let g = grothendieck(&v, &a, DEFAULT_MAX_FREE_CELLS).unwrap();
            let s = schubert(&v, &a).unwrap();
            assert_eq!(g.k_to_cohomology(4), Some((v.length(), s)), "{v}");
        }
    }

    #[test]
    fn running_lacing_products() {
        let q = running_quiver();
        let id = crate::lacing::SeqPerm::identity(&q).truncate(&q);
        assert!(schubert_lacing(&q, &id).unwrap().is_one());
        let w = running_minimal();
        let s = schubert_lacing(&q, &w).unwrap();
        assert!(s.is_homogeneous_of_degree(2));
        // two crossings, one on each α gap, each a single linear factor
        assert_eq!(s.num_terms(), 4);
    }

    #[test]
    fn running_component_formulas() {
        let q = running_quiver();
        let o = running_orbit();
        let m = multidegree_pipe(&q, &o, DEFAULT_MAX_FREE_CELLS).unwrap();
        assert!(m.is_homogeneous_of_degree(2));
        assert_eq!(m, multidegree_component(&q, &o).unwrap());
        let k = kpoly_pipe(&q, &o, DEFAULT_MAX_FREE_CELLS).unwrap();
        assert_eq!(k, kpoly_component(&q, &o, DEFAULT_MAX_FREE_CELLS).unwrap());
        assert_eq!(k.k_to_cohomology(4), Some((2, m)));
    }

    #[test]
    fn dense_orbit_is_one() {
        let q = running_quiver();
        let o = crate::lacing::dense_orbit(&q);
        assert!(multidegree_pipe(&q, &o, DEFAULT_MAX_FREE_CELLS).unwrap().is_one());
        assert!(kpoly_pipe(&q, &o, DEFAULT_MAX_FREE_CELLS).unwrap().is_one());
        assert!(multidegree_component(&q, &o).unwrap().is_one());
        assert!(kpoly_component(&q, &o, DEFAULT_MAX_FREE_CELLS).unwrap().is_one());
    }

    #[test]
    fn ratio_on_smallest_quiver() {
        let q = BipartiteQuiver::new(vec![1, 1], vec![1]).unwrap();
        for o in OrbitData::enumerate(&q) {
            let r = ratio_check(&q, &o, DEFAULT_RATIO_MAX_D, DEFAULT_MAX_FREE_CELLS).unwrap();
            assert!(r.passed(), "{}", o.describe(&q));
        }
        let q = running_quiver();
        assert!(matches!(
            ratio_check(&q, &running_orbit(), DEFAULT_RATIO_MAX_D, DEFAULT_MAX_FREE_CELLS),
            Err(Error::Capacity { .. })
        ));
    }
}
