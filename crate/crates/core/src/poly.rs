//! Sparse Laurent polynomials with big-integer coefficients in the
//! variables `s^k_i` (vertex `x_k`) and `t^k_j` (vertex `y_k`).

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    S,
    T,
}

/// A variable `s^k_i` or `t^k_i`.
///
/// Ordered s before t, the s-variables by decreasing `k`, the t-variables
/// by increasing `k`, slots ascending within a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VarId {
    pub family: Family,
    pub vertex: usize,
    pub slot: usize,
}

impl VarId {
    pub fn s(vertex: usize, slot: usize) -> Self {
        Self { family: Family::S, vertex, slot }
    }

    pub fn t(vertex: usize, slot: usize) -> Self {
        Self { family: Family::T, vertex, slot }
    }

    fn sort_key(&self) -> (u8, i64, usize) {
        match self.family {
            Family::S => (0, -(self.vertex as i64), self.slot),
            Family::T => (1, self.vertex as i64, self.slot),
        }
    }
}

impl Ord for VarId {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for VarId {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.family {
            Family::S => 's',
            Family::T => 't',
        };
        write!(f, "{c}{}_{}", self.vertex, self.slot)
    }
}

impl FromStr for VarId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad variable {s:?}"));
        let mut chars = s.chars();
        let family = match chars.next() {
            Some('s') => Family::S,
            Some('t') => Family::T,
            _ => return Err(bad()),
        };
        let (k, i) = chars.as_str().split_once('_').ok_or_else(bad)?;
        Ok(Self {
            family,
            vertex: k.parse().map_err(|_| bad())?,
            slot: i.parse().map_err(|_| bad())?,
        })
    }
}

/// Product of variable powers, sorted by variable, no zero exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(VarId, i32)>);

impl Monomial {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    pub fn var(v: VarId) -> Self {
        Self(vec![(v, 1)])
    }

    pub fn from_powers(mut powers: Vec<(VarId, i32)>) -> Self {
        powers.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(VarId, i32)> = Vec::with_capacity(powers.len());
        for (v, e) in powers {
            match out.last_mut() {
                Some((w, f)) if *w == v => *f += e,
                _ => out.push((v, e)),
            }
        }
        out.retain(|&(_, e)| e != 0);
        Self(out)
    }

    pub fn powers(&self) -> &[(VarId, i32)] {
        &self.0
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&(_, e)| e as i64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if e != 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Self(out)
    }

    fn lex_cmp(&self, other: &Self) -> Ordering {
        // compare exponent vectors in variable order, missing exponents are 0
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(x), None) => return x.1.cmp(&0),
                (None, Some(y)) => return 0.cmp(&y.1),
                (Some(x), Some(y)) => match x.0.cmp(&y.0) {
                    Ordering::Less => return x.1.cmp(&0),
                    Ordering::Greater => return 0.cmp(&y.1),
                    Ordering::Equal => {
                        if x.1 != y.1 {
                            return x.1.cmp(&y.1);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

/// Graded lexicographic: higher total degree first, then larger exponent
/// of the earliest differing variable first.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .degree()
            .cmp(&self.degree())
            .then_with(|| other.lex_cmp(self))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WeightMode {
    /// `a - b`
    Cohomology,
    /// `1 - a/b`
    KTheory,
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(Monomial::one(), c)
    }

    pub fn var(v: VarId) -> Self {
        Self::monomial(Monomial::var(v), BigInt::one())
    }

    pub fn monomial(m: Monomial, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::one()).is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Multiplies by a single monomial times a coefficient.
    pub fn scale(&self, m: &Monomial, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let terms = self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect();
        Self { terms }
    }

    /// `(a - b)` or `(1 - a/b)`.
    pub fn cross_weight(a: VarId, b: VarId, mode: WeightMode) -> Self {
        match mode {
            WeightMode::Cohomology => Self::var(a) - Self::var(b),
            WeightMode::KTheory => {
                Self::one() - Self::monomial(Monomial::from_powers(vec![(a, 1), (b, -1)]), BigInt::one())
            }
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Is every term of total degree `deg`?
    pub fn is_homogeneous_of_degree(&self, deg: i64) -> bool {
        self.terms.keys().all(|m| m.degree() == deg)
    }

    pub fn max_abs_coefficient(&self) -> BigInt {
        self.terms.values().map(|c| c.abs()).max().unwrap_or_default()
    }

    pub fn variables(&self) -> Vec<VarId> {
        let mut vs: Vec<VarId> = self.terms.keys().flat_map(|m| m.0.iter().map(|&(v, _)| v)).collect();
        vs.sort();
        vs.dedup();
        vs
    }

    /// Exact value at a point; every variable must be assigned a nonzero value.
    pub fn eval(&self, assignment: &HashMap<VarId, BigRational>) -> Result<BigRational> {
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut value = BigRational::from_integer(c.clone());
            for (v, e) in m.powers() {
                let x = assignment.get(v).ok_or_else(|| Error::MissingAssignment(v.to_string()))?;
                if x.is_zero() {
                    if *e < 0 {
                        return Err(Error::ZeroDenominator(v.to_string()));
                    }
                    value = BigRational::zero();
                    continue;
                }
                value *= num_traits::pow::Pow::pow(x, *e);
            }
            total += value;
        }
        Ok(total)
    }

    /// Substitutes `x ↦ 1 + x` for every variable and returns the
    /// homogeneous part of degree `deg` of the resulting power series.
    ///
    /// With `deg` the codimension and a sign `(-1)^deg`, this sends a
    /// K-polynomial in `1 - t/s` factors to its multidegree in `t - s`.
    pub fn series_part(&self, deg: usize) -> Self {
        self.shifted_series(deg).into_iter().nth(deg).unwrap_or_default()
    }

    /// Lowest homogeneous part of `self` after `x ↦ 1 + x`, scanning degrees
    /// `0..=max_deg`; returns the degree and the part times `(-1)^degree`.
    pub fn k_to_cohomology(&self, max_deg: usize) -> Option<(usize, Self)> {
        let parts = self.shifted_series(max_deg);
        let (d, part) = parts.into_iter().enumerate().find(|(_, p)| !p.is_zero())?;
        Some((d, if d % 2 == 0 { part } else { -part }))
    }

    /// Coefficients of `ε^0..=ε^max_deg` in `self` with `x ↦ 1 + ε·a_x`,
    /// for integer values `a_x`; a pointwise shadow of [`Self::series_part`].
    pub fn series_at(&self, point: &HashMap<VarId, BigInt>, max_deg: usize) -> Result<Vec<BigInt>> {
        let mut total = vec![BigInt::zero(); max_deg + 1];
        for (m, c) in &self.terms {
            let mut series = vec![BigInt::zero(); max_deg + 1];
            series[0] = c.clone();
            for &(v, e) in m.powers() {
                let a = point.get(&v).ok_or_else(|| Error::MissingAssignment(v.to_string()))?;
                // (1 + εa)^e = Σ binom(e, j) a^j ε^j
                let mut factor = vec![BigInt::one()];
                for j in 1..=max_deg {
                    let prev = &factor[j - 1];
                    factor.push(prev * (BigInt::from(e) - BigInt::from(j - 1)) * a / BigInt::from(j));
                }
                let mut next = vec![BigInt::zero(); max_deg + 1];
                for (i, x) in series.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                    for (j, y) in factor.iter().enumerate().take(max_deg + 1 - i) {
                        next[i + j] += x * y;
                    }
                }
                series = next;
            }
            for (t, x) in total.iter_mut().zip(series) {
                *t += x;
            }
        }
        Ok(total)
    }

    // Graded pieces `0..=max_deg` of the series. Variables are shifted one
    // at a time over the whole polynomial so that cancellation happens early.
    fn shifted_series(&self, max_deg: usize) -> Vec<Self> {
        let mut terms: HashMap<Monomial, BigInt> = self.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect();
        let mut done: Vec<VarId> = Vec::new();
        let shifted_degree = |m: &Monomial, done: &[VarId]| -> usize {
            m.powers().iter().filter(|(v, _)| done.contains(v)).map(|&(_, e)| e as usize).sum()
        };
        for v in self.variables() {
            let mut next: HashMap<Monomial, BigInt> = HashMap::new();
            for (m, c) in terms {
                let room = max_deg - shifted_degree(&m, &done);
                let e = m.powers().iter().find(|(w, _)| *w == v).map_or(0, |&(_, e)| e);
                let rest: Vec<(VarId, i32)> = m.powers().iter().copied().filter(|(w, _)| *w != v).collect();
                let mut coef = BigInt::one();
                for j in 0..=room {
                    if j > 0 {
                        coef = coef * (BigInt::from(e) - BigInt::from(j - 1)) / BigInt::from(j);
                        if coef.is_zero() {
                            break;
                        }
                    }
                    let mut powers = rest.clone();
                    if j > 0 {
                        powers.push((v, j as i32));
                    }
                    let entry = next.entry(Monomial::from_powers(powers)).or_insert_with(BigInt::zero);
                    *entry += &coef * &c;
                }
            }
            next.retain(|_, c| !c.is_zero());
            terms = next;
            done.push(v);
        }
        let mut parts = vec![Self::zero(); max_deg + 1];
        for (m, c) in terms {
            let d = m.degree() as usize;
            parts[d].terms.insert(m, c);
        }
        parts
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(m, c)| {
                    serde_json::json!({
                        "coef": c.to_string(),
                        "monomial": m.0.iter().map(|(v, e)| serde_json::json!([v.to_string(), e])).collect::<Vec<_>>(),
                    })
                })
                .collect(),
        )
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut out = Self::zero();
        if s == "0" {
            return Ok(out);
        }
        for term in s.split(" + ") {
            let mut factors = term.trim().split('*').peekable();
            let first = factors.peek().copied().ok_or_else(|| Error::Parse(format!("empty term in {s:?}")))?;
            let coef = match first.parse::<BigInt>() {
                Ok(c) => {
                    factors.next();
                    c
                }
                Err(_) => BigInt::one(),
            };
            let mut powers = Vec::new();
            for fac in factors {
                let (v, e) = match fac.split_once('^') {
                    Some((v, e)) => (v, e.parse::<i32>().map_err(|_| Error::Parse(format!("bad exponent in {fac:?}")))?),
                    None => (fac, 1),
                };
                powers.push((v.parse::<VarId>()?, e));
            }
            out.add_term(Monomial::from_powers(powers), coef);
        }
        Ok(out)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        let mut out = Self::zero();
        for p in iter {
            out += &p;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn poly(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn random_point(rng: &mut impl Rng, vars: &[VarId]) -> HashMap<VarId, BigRational> {
        vars.iter()
            .map(|&v| {
                let mut x = 0;
                while x == 0 {
                    x = rng.gen_range(-9i64..=9);
                }
                (v, BigRational::from_integer(x.into()))
            })
            .collect()
    }

    fn random_poly(rng: &mut impl Rng, vars: &[VarId]) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for _ in 0..rng.gen_range(0..5) {
            let powers = vars.iter().map(|&v| (v, rng.gen_range(-2..=2))).collect();
            p.add_term(Monomial::from_powers(powers), BigInt::from(rng.gen_range(-5..=5)));
        }
        p
    }

    #[test]
    fn variable_order() {
        let mut vs = vec![VarId::t(2, 1), VarId::s(1, 1), VarId::t(0, 2), VarId::s(2, 3), VarId::t(0, 1), VarId::s(2, 1)];
        vs.sort();
        assert_eq!(
            vs,
            vec![VarId::s(2, 1), VarId::s(2, 3), VarId::s(1, 1), VarId::t(0, 1), VarId::t(0, 2), VarId::t(2, 1)]
        );
    }

    #[test]
    fn ring_identities() {
        let p = poly("3*s1_1^2*t0_1 + -2*t0_1^-1 + 7");
        assert_eq!(&p + &LaurentPoly::zero(), p);
        assert_eq!(&p * &LaurentPoly::one(), p);
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn worked_product() {
        let t = VarId::t(0, 1);
        let s = VarId::s(1, 1);
        let lhs = LaurentPoly::cross_weight(t, s, WeightMode::Cohomology)
            * LaurentPoly::cross_weight(t, s, WeightMode::KTheory);
        // t - s - t^2/s + t
        let expected = poly("2*t0_1 + -1*s1_1 + -1*s1_1^-1*t0_1^2");
        assert_eq!(lhs, expected);
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..20 {
            let pt = random_point(&mut rng, &[s, t]);
            let (tv, sv) = (pt[&t].clone(), pt[&s].clone());
            let direct = (&tv - &sv) * (BigRational::one() - &tv / &sv);
            assert_eq!(lhs.eval(&pt).unwrap(), direct);
        }
    }

    #[test]
    fn cross_weights() {
        let t = VarId::t(0, 1);
        let s = VarId::s(1, 1);
        assert_eq!(LaurentPoly::cross_weight(t, s, WeightMode::Cohomology).to_string(), "-1*s1_1 + 1*t0_1");
        assert!(LaurentPoly::cross_weight(t, t, WeightMode::KTheory).is_zero());
        let w = LaurentPoly::cross_weight(VarId::t(1, 2), VarId::s(2, 3), WeightMode::KTheory);
        assert_eq!(w.to_string(), "1 + -1*s2_3^-1*t1_2");
    }

    #[test]
    fn evaluation() {
        let x = VarId::t(0, 1);
        let y = VarId::t(0, 2);
        let pt: HashMap<_, _> = [(x, BigRational::from_integer(3.into())), (y, BigRational::from_integer(1.into()))].into();
        assert!(LaurentPoly::zero().eval(&pt).unwrap().is_zero());
        assert_eq!(poly("1*t0_1 + -1*t0_2").eval(&pt).unwrap(), BigRational::from_integer(2.into()));
        let pt: HashMap<_, _> = [(x, BigRational::from_integer(2.into())), (y, BigRational::from_integer(4.into()))].into();
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(LaurentPoly::cross_weight(x, y, WeightMode::KTheory).eval(&pt).unwrap(), half);
        assert!(matches!(poly("1*s1_1").eval(&pt), Err(Error::MissingAssignment(_))));
    }

    #[test]
    fn display_round_trip() {
        for s in ["0", "1", "-4", "1*s2_1 + -1*t0_1", "5*s1_1^-2*t3_4^3 + 2"] {
            let p = poly(s);
            assert_eq!(poly(&p.to_string()), p);
        }
    }

    #[test]
    fn pointwise_series_matches_exact_parts() {
        let k = poly("3*s1_1^-2*t0_1 + -1*t0_1^2*s1_2 + 2*s1_1*s1_2^-1 + -4");
        let mut rng = rand::rngs::StdRng::seed_from_u64(3);
        let point: HashMap<VarId, BigInt> = k.variables().into_iter().map(|v| (v, BigInt::from(rng.gen_range(-9..=9)))).collect();
        let rational = point.iter().map(|(&v, a)| (v, BigRational::from_integer(a.clone()))).collect();
        let series = k.series_at(&point, 4).unwrap();
        for (d, x) in series.iter().enumerate() {
            assert_eq!(BigRational::from_integer(x.clone()), k.series_part(d).eval(&rational).unwrap(), "degree {d}");
        }
    }

    #[test]
    fn truncation_of_single_cross() {
        let t = VarId::t(0, 1);
        let s = VarId::s(1, 1);
        let k = LaurentPoly::cross_weight(t, s, WeightMode::KTheory);
        let (d, h) = k.k_to_cohomology(3).unwrap();
        assert_eq!(d, 1);
        assert_eq!(h, LaurentPoly::cross_weight(t, s, WeightMode::Cohomology));
        let k2 = &k * &LaurentPoly::cross_weight(VarId::t(0, 2), s, WeightMode::KTheory);
        let (d, h) = k2.k_to_cohomology(3).unwrap();
        assert_eq!(d, 2);
        assert_eq!(
            h,
            LaurentPoly::cross_weight(t, s, WeightMode::Cohomology)
                * LaurentPoly::cross_weight(VarId::t(0, 2), s, WeightMode::Cohomology)
        );
    }

    #[test]
    fn randomized_ring_laws_agree_with_evaluation() {
        let vars = [VarId::s(1, 1), VarId::s(2, 1), VarId::t(0, 1)];
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        for _ in 0..50 {
            let p = random_poly(&mut rng, &vars);
            let q = random_poly(&mut rng, &vars);
            let r = random_poly(&mut rng, &vars);
            assert_eq!(&p * &q, &q * &p);
            assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            let prod = &p * &q;
            for _ in 0..20 {
                let pt = random_point(&mut rng, &vars);
                assert_eq!(prod.eval(&pt).unwrap(), p.eval(&pt).unwrap() * q.eval(&pt).unwrap());
                let equal_by_eval = prod.eval(&pt).unwrap() == (&q * &p).eval(&pt).unwrap();
                assert!(equal_by_eval);
            }
        }
    }

    #[test]
    fn canonical_order_is_graded() {
        let p = poly("1 + 1*t0_1 + 1*s1_1*t0_1 + 1*s1_1^-1");
        let degrees: Vec<i64> = p.terms().map(|(m, _)| m.degree()).collect();
        assert_eq!(degrees, vec![2, 1, 0, -1]);
    }
}
