//! Verification sweeps: every orbit of every small quiver, checked against
//! independent computations. Reports serialize to JSON.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::factorization::{
    mini_pipe_sets, pipe_networks, x_omega, x_omega_by_moves, FactorizationClasses, DEFAULT_MAX_SEQPERMS,
};
use crate::formulas::{
    grothendieck_lacing, kpoly_component, kpoly_pipe, multidegree_component, multidegree_pipe, ratio_check,
    schubert_lacing, snake_dreams, snake_weight, DEFAULT_RATIO_MAX_D,
};
use crate::lacing::{dense_orbit, enum_kw, enum_w, enum_w_oracle, pi, pipes_to_laces, LacingDiagram};
use crate::perm::Permutation;
use crate::pipes::{CellSpace, PipeDream, DEFAULT_MAX_FREE_CELLS};
use crate::poly::{LaurentPoly, VarId, WeightMode};
use crate::quiver::{codim, zelevinsky, BipartiteQuiver, OrbitData};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Codim,
    Pipe,
    Component,
    Bijections,
    Ratio,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Codim, Suite::Pipe, Suite::Component, Suite::Bijections, Suite::Ratio];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Suite::Codim => "codim",
            Suite::Pipe => "pipe",
            Suite::Component => "component",
            Suite::Bijections => "bijections",
            Suite::Ratio => "ratio",
        };
        f.write_str(s)
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.to_string() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Enumeration limits shared by every check.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Limits {
    pub max_free_cells: usize,
    pub max_seqperms: usize,
    pub ratio_max_d: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self { max_free_cells: DEFAULT_MAX_FREE_CELLS, max_seqperms: DEFAULT_MAX_SEQPERMS, ratio_max_d: DEFAULT_RATIO_MAX_D }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    /// Not attempted because a limit was exceeded.
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    fn new(name: &str, ok: bool) -> Self {
        Self { name: name.into(), outcome: if ok { Outcome::Pass } else { Outcome::Fail }, detail: None }
    }

    fn detailed(name: &str, ok: bool, detail: String) -> Self {
        Self { detail: Some(detail), ..Self::new(name, ok) }
    }

    fn from_result(name: &str, r: Result<bool>) -> Self {
        match r {
            Ok(ok) => Self::new(name, ok),
            Err(e @ Error::Capacity { .. }) => {
                Self { name: name.into(), outcome: Outcome::Skipped, detail: Some(e.to_string()) }
            }
            Err(e) => Self::detailed(name, false, e.to_string()),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct InstanceReport {
    pub dy: Vec<usize>,
    pub dx: Vec<usize>,
    /// Absent for checks that concern the quiver as a whole.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orbit: Option<BTreeMap<String, usize>>,
    pub checks: Vec<Check>,
}

impl InstanceReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.outcome != Outcome::Fail)
    }

    pub fn label(&self) -> String {
        let orbit = match &self.orbit {
            Some(o) => format!(" {o:?}"),
            None => String::new(),
        };
        format!("dy={:?} dx={:?}{orbit}", self.dy, self.dx)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub instances: Vec<InstanceReport>,
    pub checks: usize,
    pub failed: usize,
    pub skipped: usize,
    pub seconds: f64,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = (&InstanceReport, &Check)> {
        self.instances.iter().flat_map(|i| i.checks.iter().filter(|c| c.outcome == Outcome::Fail).map(move |c| (i, c)))
    }
}

/// A quiver together with the orbits to check on it.
#[derive(Clone, Debug)]
pub struct Target {
    pub quiver: BipartiteQuiver,
    pub orbits: Vec<OrbitData>,
}

/// Every orbit of every quiver with `n <= max_n` and dimensions `<= max_dim`.
pub fn sweep_targets(max_n: usize, max_dim: usize) -> Vec<Target> {
    BipartiteQuiver::enumerate(max_n, max_dim)
        .into_iter()
        .map(|q| {
            let orbits = OrbitData::enumerate(&q);
            Target { quiver: q, orbits }
        })
        .collect()
}

/// Runs `suite` over the targets; instances appear in input order.
pub fn run_suite(suite: Suite, targets: &[Target], limits: &Limits) -> SuiteReport {
    let start = Instant::now();
    let instances: Vec<InstanceReport> = targets
        .par_iter()
        .flat_map_iter(|t| check_target(suite, t, limits))
        .collect();
    let all = instances.iter().flat_map(|i| &i.checks);
    let (mut checks, mut failed, mut skipped) = (0, 0, 0);
    for c in all {
        checks += 1;
        match c.outcome {
            Outcome::Fail => failed += 1,
            Outcome::Skipped => skipped += 1,
            Outcome::Pass => {}
        }
    }
    SuiteReport { suite, instances, checks, failed, skipped, seconds: start.elapsed().as_secs_f64() }
}

fn check_target(suite: Suite, t: &Target, limits: &Limits) -> Vec<InstanceReport> {
    let q = &t.quiver;
    let report = |orbit: Option<&OrbitData>, checks: Vec<Check>| InstanceReport {
        dy: q.dy().to_vec(),
        dx: q.dx().to_vec(),
        orbit: orbit.map(|o| o.to_named(q)),
        checks,
    };
    let mut out = Vec::new();
    match suite {
        Suite::Codim => out.push(report(None, quiver_minimality_checks(q, limits))),
        Suite::Bijections => {
            let classes = FactorizationClasses::new(q, limits.max_seqperms);
            let per: Vec<InstanceReport> = t
                .orbits
                .par_iter()
                .map(|o| report(Some(o), bijection_checks(q, o, classes.as_ref().map_err(Clone::clone), limits)))
                .collect();
            out.extend(per);
            return out;
        }
        _ => {}
    }
    let per: Vec<InstanceReport> = t
        .orbits
        .par_iter()
        .map(|o| {
            let checks = match suite {
                Suite::Codim => codim_checks(q, o),
                Suite::Pipe => pipe_checks(q, o, limits),
                Suite::Component => component_checks(q, o, limits),
                Suite::Ratio => vec![Check::from_result(
                    "ratio formulas",
                    ratio_check(q, o, limits.ratio_max_d, limits.max_free_cells).map(|r| r.passed()),
                )],
                Suite::Bijections => unreachable!(),
            };
            report(Some(o), checks)
        })
        .collect();
    out.extend(per);
    out
}

/// `is_minimal` agrees with minimality of the crossing number in each orbit.
fn quiver_minimality_checks(q: &BipartiteQuiver, limits: &Limits) -> Vec<Check> {
    let total = LacingDiagram::count_all(q);
    if total > limits.max_seqperms {
        return vec![Check {
            name: "is_minimal matches orbit minimum".into(),
            outcome: Outcome::Skipped,
            detail: Some(format!("{total} diagrams")),
        }];
    }
    let all = LacingDiagram::all(q);
    let data: Vec<(OrbitData, usize, bool)> =
        all.par_iter().map(|w| (w.orbit(q), w.crossings(), w.is_minimal(q))).collect();
    let mut best: HashMap<&OrbitData, usize> = HashMap::new();
    for (o, c, _) in &data {
        let e = best.entry(o).or_insert(*c);
        *e = (*e).min(*c);
    }
    let bad = data.iter().zip(&all).find(|((o, c, m), _)| *m != (*c == best[o]));
    let round_trip = all.par_iter().all(|w| w.extend().truncate(q) == *w);
    vec![
        match bad {
            None => Check::new("is_minimal matches orbit minimum", true),
            Some((_, w)) => Check::detailed("is_minimal matches orbit minimum", false, w.to_string()),
        },
        Check::new("truncation inverts completion", round_trip),
    ]
}

fn codim_checks(q: &BipartiteQuiver, o: &OrbitData) -> Vec<Check> {
    let run = || -> Result<Vec<Check>> {
        let c = codim(q, o)?;
        let (w, log) = enum_w(q, o)?;
        let oracle = enum_w_oracle(q, o);
        let bad: Vec<String> = w.iter().filter(|d| d.crossings() != c).map(|d| d.to_string()).collect();
        Ok(vec![
            Check::detailed("|w| = codim on W", bad.is_empty() && !w.is_empty(), format!("codim {c}, |W| = {}", w.len())),
            Check::new("move closure = orbit filter", w == oracle),
            Check::new("no all-virtual reduced moves", log.all_virtual_outer == 0),
        ])
    };
    run().unwrap_or_else(|e| vec![Check::detailed("codim", false, e.to_string())])
}

fn pipe_checks(q: &BipartiteQuiver, o: &OrbitData, limits: &Limits) -> Vec<Check> {
    let run = || -> Result<Vec<Check>> {
        let v = zelevinsky(q, o)?;
        let c = codim(q, o)?;
        let mut checks = Vec::new();
        // unconstrained enumeration on the northwest grid
        let grid = CellSpace::grid(q.d_y(), q.d_x())?;
        let free: BTreeSet<PipeDream> = grid.dreams(&grid.generate_target(&v)).into_iter().collect();
        let snake: Vec<PipeDream> = snake_dreams(q, o, false, limits.max_free_cells)?;
        let p_star = q.p_star();
        checks.push(Check::new("every P contains P_*", free.iter().all(|p| p_star.is_subset(p))));
        checks.push(Check::new("snake enumeration is complete", free == snake.iter().cloned().collect()));
        if *o == dense_orbit(q) {
            checks.push(Check::new("dense orbit has only P_*", snake == vec![p_star.clone()]));
        }
        let qd = multidegree_pipe(q, o, limits.max_free_cells)?;
        checks.push(Check::new("multidegree homogeneous of degree codim", qd.is_homogeneous_of_degree(c as i64)));
        let kq = kpoly_pipe(q, o, limits.max_free_cells)?;
        checks.push(Check::new("lowest part of K-polynomial is multidegree", lowest_part_matches(&kq, &qd, c)?));
        // grouping by pipes to laces factors block by block
        let reduced = snake_dreams(q, o, true, limits.max_free_cells)?;
        let mut groups: BTreeMap<LacingDiagram, LaurentPoly> = BTreeMap::new();
        for p in &reduced {
            let w = pipes_to_laces(q, p)?;
            let e = groups.entry(w).or_insert_with(LaurentPoly::zero);
            *e = &*e + &snake_weight(q, p, WeightMode::Cohomology);
        }
        let mut grouped = true;
        for (w, sum) in &groups {
            grouped &= *sum == schubert_lacing(q, w)?;
        }
        checks.push(Check::new("reduced dreams grouped by laces give Schubert products", grouped));
        // signed sums over pipe networks of each K-theoretic diagram
        let mut by_pi: BTreeMap<LacingDiagram, LaurentPoly> = BTreeMap::new();
        let base = p_star.len();
        for p in &snake {
            let w = pi(q, p)?.truncate(q);
            let sign = if (p.len() - base - c) % 2 == 0 { 1 } else { -1 };
            let wt = snake_weight(q, p, WeightMode::KTheory);
            let e = by_pi.entry(w).or_insert_with(LaurentPoly::zero);
            *e = if sign == 1 { &*e + &wt } else { &*e - &wt };
        }
        let mut signed_ok = true;
        for (w, sum) in &by_pi {
            let g = grothendieck_lacing(q, w, limits.max_free_cells)?;
            let expect = if (w.crossings() - c) % 2 == 0 { g } else { -g };
            signed_ok &= *sum == expect;
        }
        checks.push(Check::new("signed pipe network sums give Grothendieck products", signed_ok));
        Ok(checks)
    };
    run().unwrap_or_else(|e| vec![Check::from_result("pipe", Err(e))])
}

// Compares the lowest part of `k` under `x ↦ 1 + x` with `(-1)^c q` at a few
// random integer points; the exact expansion is too large at high codimension.
fn lowest_part_matches(k: &LaurentPoly, q: &LaurentPoly, c: usize) -> Result<bool> {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let vars: BTreeSet<VarId> = k.variables().into_iter().chain(q.variables()).collect();
    for _ in 0..3 {
        let point: HashMap<VarId, BigInt> = vars.iter().map(|&v| (v, BigInt::from(rng.gen_range(-1000i64..=1000)))).collect();
        let series = k.series_at(&point, c)?;
        let rational = point.iter().map(|(&v, a)| (v, BigRational::from_integer(a.clone()))).collect();
        let mut expect = q.eval(&rational)?;
        if c % 2 == 1 {
            expect = -expect;
        }
        if series[..c].iter().any(|x| !x.is_zero()) || BigRational::from_integer(series[c].clone()) != expect {
            return Ok(false);
        }
    }
    Ok(true)
}

fn component_checks(q: &BipartiteQuiver, o: &OrbitData, limits: &Limits) -> Vec<Check> {
    let cohom = (|| -> Result<bool> {
        Ok(multidegree_pipe(q, o, limits.max_free_cells)? == multidegree_component(q, o)?)
    })();
    let k = (|| -> Result<bool> {
        Ok(kpoly_pipe(q, o, limits.max_free_cells)? == kpoly_component(q, o, limits.max_free_cells)?)
    })();
    vec![Check::from_result("cohomological component formula", cohom), Check::from_result("K-theoretic component formula", k)]
}

fn bijection_checks(q: &BipartiteQuiver, o: &OrbitData, classes: Result<&FactorizationClasses>, limits: &Limits) -> Vec<Check> {
    let run = || -> Result<Vec<Check>> {
        let mut checks = Vec::new();
        let v = zelevinsky(q, o)?;
        let reduced: BTreeSet<PipeDream> = snake_dreams(q, o, true, limits.max_free_cells)?.into_iter().collect();
        let all: Vec<PipeDream> = snake_dreams(q, o, false, limits.max_free_cells)?;
        let all_set: BTreeSet<PipeDream> = all.iter().cloned().collect();
        let (w, _) = enum_w(q, o)?;

        // reduced dreams split by their minimal diagram
        let mut union = BTreeSet::new();
        let mut total = 0;
        for d in &w {
            let nets = pipe_networks(q, &mini_pipe_sets(q, &d.extend(), true)?)?;
            total += nets.len();
            union.extend(nets);
        }
        checks.push(Check::detailed(
            "RPipes is the disjoint union of RPipeNet(w)",
            union == reduced && total == reduced.len(),
            format!("{} reduced dreams, {} diagrams", reduced.len(), w.len()),
        ));

        // pipe network map
        let x = x_omega(q, o)?;
        let mut count = 0;
        let mut images = BTreeSet::new();
        for s in &x {
            let nets = pipe_networks(q, &mini_pipe_sets(q, s, false)?)?;
            count += nets.len();
            images.extend(nets);
        }
        checks.push(Check::detailed(
            "pipe network map is a bijection",
            count == all.len() && images == all_set,
            format!("|Pipes| = {}, Σ products = {count}", all.len()),
        ));

        // LD restricted to X_Ω
        let (kw, _) = enum_kw(q, o)?;
        let ld: BTreeSet<LacingDiagram> = x.iter().map(|s| s.truncate(q)).collect();
        checks.push(Check::detailed(
            "LD: X_Ω → KW(Ω) is a bijection",
            ld.len() == x.len() && ld.iter().cloned().collect::<Vec<_>>() == kw,
            format!("|X_Ω| = {}, |KW| = {}", x.len(), kw.len()),
        ));

        checks.push(match classes {
            Ok(cl) => Check::new(
                "factorizations characterize X_Ω",
                cl.row_class(&v) == x && cl.col_class(&v) == x,
            ),
            Err(e) => Check::from_result("factorizations characterize X_Ω", Err(e)),
        });
        checks.push(Check::new("move closure of X_Ω^red is X_Ω", x_omega_by_moves(q, o)? == x));

        // pipes to laces against π
        let mut follow = true;
        for p in &all {
            follow &= pipes_to_laces(q, p)?.extend() == pi(q, p)?;
        }
        checks.push(Check::new("c(w(P)) = π(P)", follow));
        let hit: BTreeSet<LacingDiagram> = reduced.iter().map(|p| pipes_to_laces(q, p)).collect::<Result<_>>()?;
        checks.push(Check::new("pipes to laces maps RPipes onto W(Ω)", hit.into_iter().collect::<Vec<_>>() == w));
        Ok(checks)
    };
    run().unwrap_or_else(|e| vec![Check::from_result("bijections", Err(e))])
}

/// Engine self-checks on small grids: Demazure product by rows and by
/// columns, pipe tracing, and the generator against exhaustive search.
pub fn engine_checks(max_trace: usize, max_generator: usize) -> Vec<Check> {
    let mut checks = Vec::new();
    let mut reading_ok = true;
    let mut trace_ok = true;
    for rows in 1..=max_trace {
        for cols in 1..=max_trace {
            let space = CellSpace::grid(rows, cols).expect("small grid");
            let n = space.num_free();
            let (r, t) = (0..1u64 << n)
                .into_par_iter()
                .map(|mask| {
                    let p = space.to_dream(mask);
                    let d = p.demazure();
                    (d == p.demazure_by_columns(), p.trace() == d.truncate(rows, cols))
                })
                .reduce(|| (true, true), |a, b| (a.0 && b.0, a.1 && b.1));
            reading_ok &= r;
            trace_ok &= t;
        }
    }
    checks.push(Check::detailed("row and column readings agree", reading_ok, format!("grids up to {max_trace}x{max_trace}")));
    checks.push(Check::detailed("pipe trace recovers the truncated product", trace_ok, format!("grids up to {max_trace}x{max_trace}")));
    let mut gen_ok = true;
    for rows in 1..=max_generator {
        for cols in 1..=max_generator {
            let space = CellSpace::grid(rows, cols).expect("small grid");
            let brute = space.brute_force_all(DEFAULT_MAX_FREE_CELLS).expect("small grid");
            for (v, masks) in brute {
                let mut expect = masks.clone();
                expect.sort_unstable();
                let len = v.length();
                let mut red: Vec<u64> = expect.iter().copied().filter(|m| m.count_ones() as usize == len).collect();
                red.sort_unstable();
                gen_ok &= space.generate_target(&v) == expect && space.reduced_target(&v) == red;
            }
            // targets with no pipe dreams on this grid
            for v in crate::perm::all_permutations(rows + cols) {
                if space.generate_target(&v).is_empty() {
                    gen_ok &= space.brute_force_target(&v, DEFAULT_MAX_FREE_CELLS).map(|m| m.is_empty()).unwrap_or(false);
                }
            }
        }
    }
    checks.push(Check::detailed("generator matches exhaustive search", gen_ok, format!("grids up to {max_generator}x{max_generator}")));
    checks
}

/// `v(Ω)`, `v_*` and the codimension for one orbit.
#[derive(Clone, Debug, Serialize)]
pub struct ZelevinskySummary {
    pub permutation: Vec<usize>,
    pub length: usize,
    pub v_star: Vec<usize>,
    pub v_star_length: usize,
    pub codim: usize,
}

pub fn zelevinsky_summary(q: &BipartiteQuiver, o: &OrbitData) -> Result<ZelevinskySummary> {
    let v: Permutation = zelevinsky(q, o)?;
    let vs = q.v_star();
    Ok(ZelevinskySummary {
        permutation: v.one_line(q.d()),
        length: v.length(),
        v_star: vs.one_line(q.d()),
        v_star_length: vs.length(),
        codim: codim(q, o)?,
    })
}
