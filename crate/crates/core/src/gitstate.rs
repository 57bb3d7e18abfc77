//! Torus states of points of `Gr(7, 16)`: weights of the nonzero Plücker
//! coordinates on `Lambda^7 S+`, convex-hull position of the origin, vertex
//! counts, and the minimum-norm point of the state polytope.
//!
//! Everything is exact: an exact two-phase simplex with Bland's rule and
//! Wolfe's minimum-norm-point algorithm over rationals.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactmath::{dot, fmt_rat, primitive_integer, rat, BigRational, MathError, RatMatrix};
use crate::spinor::{spinor_basis, RANK, SPINOR_DIM};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GitError {
    #[error("matrix has rank {0}, expected 7")]
    RankDeficient(usize),
    #[error("the origin lies in the convex hull; there is no destabilizing direction")]
    OriginInHull,
    #[error("state is empty")]
    EmptyState,
    #[error("minimum-norm iteration hit an affinely dependent corral")]
    DegenerateCorral,
    #[error(transparent)]
    Math(#[from] MathError),
}

/// A torus weight in the basis `eps_1..eps_5`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct WeightVec(#[serde(with = "crate::exactmath::rat_vec_string")] pub Vec<BigRational>);

impl fmt::Debug for WeightVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().map(fmt_rat).join(","))
    }
}

impl WeightVec {
    pub fn zero() -> Self {
        WeightVec(vec![BigRational::zero(); RANK])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        WeightVec(v.iter().map(|&x| BigRational::from_integer(x.into())).collect())
    }

    pub fn add(&self, o: &WeightVec) -> WeightVec {
        WeightVec(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &WeightVec) -> WeightVec {
        WeightVec(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn dot(&self, o: &WeightVec) -> BigRational {
        dot(&self.0, &o.0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }
}

/// `weight(e_I) = sum_{i in I} eps_i - 1/2 sum_j eps_j`, in the canonical `S+` order.
pub fn spinor_weights() -> Vec<WeightVec> {
    let half = rat(1, 2);
    spinor_basis()
        .into_iter()
        .map(|s| {
            WeightVec(
                (0..RANK)
                    .map(|i| if s >> i & 1 == 1 { &half + BigRational::zero() } else { -half.clone() })
                    .collect(),
            )
        })
        .collect()
}

/// Distinct weights of the nonzero Plücker coordinates, with the number of
/// 7-subsets contributing to each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatePolytope {
    pub multiplicities: BTreeMap<WeightVec, usize>,
}

impl StatePolytope {
    pub fn from_points(points: impl IntoIterator<Item = WeightVec>) -> Self {
        let mut multiplicities = BTreeMap::new();
        for p in points {
            *multiplicities.entry(p).or_insert(0) += 1;
        }
        StatePolytope { multiplicities }
    }

    pub fn points(&self) -> Vec<WeightVec> {
        self.multiplicities.keys().cloned().collect()
    }

    pub fn len(&self) -> usize {
        self.multiplicities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.multiplicities.is_empty()
    }
}

/// `k`-subsets of `0..n` in colexicographic order.
pub fn colex_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut v: Vec<Vec<usize>> = (0..n).combinations(k).collect();
    v.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
    v
}

/// State of the row space of a 7 x 16 matrix.
pub fn pluecker_state(m: &RatMatrix) -> Result<StatePolytope, GitError> {
    let basis = m.row_space_basis();
    if basis.nrows() != 7 || basis.ncols() != SPINOR_DIM {
        return Err(GitError::RankDeficient(basis.nrows()));
    }
    let weights = spinor_weights();
    let rows: Vec<usize> = (0..7).collect();
    let subsets = colex_subsets(SPINOR_DIM, 7);
    let points: Vec<WeightVec> = subsets
        .par_iter()
        .filter_map(|cols| {
            let minor = basis.submatrix(&rows, cols).det().expect("square minor");
            (!minor.is_zero()).then(|| cols.iter().fold(WeightVec::zero(), |acc, &c| acc.add(&weights[c])))
        })
        .collect();
    Ok(StatePolytope::from_points(points))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cmp {
    Le,
    Eq,
    Ge,
}

/// `maximize c.x` subject to the rows and `x >= 0`.
#[derive(Clone, Debug)]
pub struct LinearProgram {
    pub objective: Vec<BigRational>,
    pub rows: Vec<(Vec<BigRational>, Cmp, BigRational)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { value: BigRational, x: Vec<BigRational> },
    Infeasible,
    Unbounded,
}

struct Tableau {
    t: Vec<Vec<BigRational>>,
    basis: Vec<usize>,
}

impl Tableau {
    fn rhs(&self, i: usize) -> &BigRational {
        self.t[i].last().expect("rhs column")
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.t[r][c].recip();
        for v in self.t[r].iter_mut() {
            *v *= &inv;
        }
        let prow = self.t[r].clone();
        for (i, row) in self.t.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, p) in row.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Maximizes `cost` over the columns in `allowed` with Bland's rule.
    /// Returns `false` when unbounded.
    fn optimize(&mut self, cost: &[BigRational], allowed: &[bool]) -> bool {
        loop {
            let ncols = allowed.len();
            let reduced = |j: usize| -> BigRational {
                let mut r = cost[j].clone();
                for (i, &b) in self.basis.iter().enumerate() {
                    if !cost[b].is_zero() && !self.t[i][j].is_zero() {
                        r -= &cost[b] * &self.t[i][j];
                    }
                }
                r
            };
            let Some(enter) = (0..ncols).find(|&j| allowed[j] && !self.basis.contains(&j) && reduced(j).is_positive())
            else {
                return true;
            };
            let mut leave: Option<(usize, BigRational)> = None;
            for i in 0..self.t.len() {
                let a = &self.t[i][enter];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / a;
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let Some((r, _)) = leave else {
                return false;
            };
            self.pivot(r, enter);
        }
    }

    fn value_of(&self, j: usize) -> BigRational {
        self.basis.iter().position(|&b| b == j).map_or_else(BigRational::zero, |i| self.rhs(i).clone())
    }
}

impl LinearProgram {
    /// Two-phase exact simplex with Bland's anti-cycling rule.
    pub fn solve(&self) -> LpOutcome {
        let n = self.objective.len();
        let m = self.rows.len();
        let mut rows: Vec<(Vec<BigRational>, Cmp, BigRational)> = self.rows.clone();
        for (a, cmp, b) in rows.iter_mut() {
            if b.is_negative() {
                for v in a.iter_mut() {
                    *v = -v.clone();
                }
                *b = -b.clone();
                *cmp = match cmp {
                    Cmp::Le => Cmp::Ge,
                    Cmp::Ge => Cmp::Le,
                    Cmp::Eq => Cmp::Eq,
                };
            }
        }
        let n_slack = rows.iter().filter(|r| r.1 != Cmp::Eq).count();
        let n_art = rows.iter().filter(|r| r.1 != Cmp::Le).count();
        let width = n + n_slack + n_art;
        let mut t = vec![vec![BigRational::zero(); width + 1]; m];
        let mut basis = vec![0; m];
        let (mut s, mut a) = (n, n + n_slack);
        for (i, (coeffs, cmp, b)) in rows.iter().enumerate() {
            t[i][..n].clone_from_slice(coeffs);
            t[i][width] = b.clone();
            match cmp {
                Cmp::Le => {
                    t[i][s] = BigRational::one();
                    basis[i] = s;
                    s += 1;
                }
                Cmp::Ge => {
                    t[i][s] = -BigRational::one();
                    s += 1;
                    t[i][a] = BigRational::one();
                    basis[i] = a;
                    a += 1;
                }
                Cmp::Eq => {
                    t[i][a] = BigRational::one();
                    basis[i] = a;
                    a += 1;
                }
            }
        }
        let mut tab = Tableau { t, basis };
        let all = vec![true; width];
        if n_art > 0 {
            let mut phase1 = vec![BigRational::zero(); width];
            for c in phase1.iter_mut().skip(n + n_slack) {
                *c = -BigRational::one();
            }
            tab.optimize(&phase1, &all);
            let infeasibility: BigRational = (n + n_slack..width).map(|j| tab.value_of(j)).sum();
            if !infeasibility.is_zero() {
                return LpOutcome::Infeasible;
            }
            // drive remaining artificials (at level zero) out of the basis
            let mut i = 0;
            while i < tab.t.len() {
                if tab.basis[i] >= n + n_slack {
                    match (0..n + n_slack).find(|&j| !tab.t[i][j].is_zero()) {
                        Some(j) => tab.pivot(i, j),
                        None => {
                            tab.t.remove(i);
                            tab.basis.remove(i);
                            continue;
                        }
                    }
                }
                i += 1;
            }
        }
        let mut cost = vec![BigRational::zero(); width];
        cost[..n].clone_from_slice(&self.objective);
        let allowed: Vec<bool> = (0..width).map(|j| j < n + n_slack).collect();
        if !tab.optimize(&cost, &allowed) {
            return LpOutcome::Unbounded;
        }
        let x: Vec<BigRational> = (0..n).map(|j| tab.value_of(j)).collect();
        let value = dot(&x, &self.objective);
        LpOutcome::Optimal { value, x }
    }
}

/// Whether `target` is a convex combination of `points`.
pub fn in_convex_hull(points: &[WeightVec], target: &WeightVec) -> bool {
    if points.is_empty() {
        return false;
    }
    let mut rows = Vec::new();
    for k in 0..RANK {
        rows.push((points.iter().map(|p| p.0[k].clone()).collect(), Cmp::Eq, target.0[k].clone()));
    }
    rows.push((vec![BigRational::one(); points.len()], Cmp::Eq, BigRational::one()));
    let lp = LinearProgram { objective: vec![BigRational::zero(); points.len()], rows };
    matches!(lp.solve(), LpOutcome::Optimal { .. })
}

/// Number of state points not in the hull of the others.
pub fn vertex_count(s: &StatePolytope) -> usize {
    let pts = s.points();
    (0..pts.len())
        .into_par_iter()
        .filter(|&k| {
            let others: Vec<WeightVec> = pts.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, p)| p.clone()).collect();
            !in_convex_hull(&others, &pts[k])
        })
        .count()
}

/// Minimum-norm point of a hull together with the convex weights of its
/// support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinNormPoint {
    pub point: WeightVec,
    pub support: Vec<(WeightVec, BigRational)>,
}

/// Affine minimum-norm point of the corral: weights `alpha` with
/// `sum alpha = 1` minimizing `|sum alpha_i p_i|`.
fn affine_min_norm(pts: &[&WeightVec]) -> Result<Vec<BigRational>, GitError> {
    let k = pts.len();
    let mut m = RatMatrix::zeros(k + 1, k + 1);
    for i in 0..k {
        for j in 0..k {
            m.set(i, j, pts[i].dot(pts[j]));
        }
        m.set(i, k, BigRational::one());
        m.set(k, i, BigRational::one());
    }
    let inv = m.inverse().map_err(|_| GitError::DegenerateCorral)?;
    let mut rhs = vec![BigRational::zero(); k + 1];
    rhs[k] = BigRational::one();
    let sol = inv.mul_vec(&rhs)?;
    Ok(sol[..k].to_vec())
}

fn combine(pts: &[&WeightVec], w: &[BigRational]) -> WeightVec {
    let mut out = WeightVec::zero();
    for (p, c) in pts.iter().zip(w) {
        for (o, x) in out.0.iter_mut().zip(&p.0) {
            *o += c * x;
        }
    }
    out
}

/// Wolfe's algorithm in exact arithmetic.
pub fn min_norm_point(points: &[WeightVec]) -> Result<MinNormPoint, GitError> {
    let start = points.iter().min_by(|a, b| a.dot(a).cmp(&b.dot(b))).ok_or(GitError::EmptyState)?;
    let mut corral: Vec<WeightVec> = vec![start.clone()];
    let mut lambda: Vec<BigRational> = vec![BigRational::one()];
    let mut x = start.clone();
    loop {
        let xx = x.dot(&x);
        let best = points.iter().min_by(|a, b| x.dot(a).cmp(&x.dot(b))).expect("nonempty");
        if x.dot(best) >= xx || corral.contains(best) {
            break;
        }
        corral.push(best.clone());
        lambda.push(BigRational::zero());
        loop {
            let refs: Vec<&WeightVec> = corral.iter().collect();
            let alpha = affine_min_norm(&refs)?;
            if alpha.iter().all(|a| a.is_positive()) {
                x = combine(&refs, &alpha);
                lambda = alpha;
                break;
            }
            let theta = lambda
                .iter()
                .zip(&alpha)
                .filter(|(_, a)| !a.is_positive())
                .map(|(l, a)| l / (l - a))
                .min()
                .expect("some nonpositive weight");
            lambda = lambda
                .iter()
                .zip(&alpha)
                .map(|(l, a)| (BigRational::one() - &theta) * l + &theta * a)
                .collect();
            let keep: Vec<bool> = lambda.iter().map(|l| !l.is_zero()).collect();
            corral = corral.into_iter().zip(&keep).filter(|(_, k)| **k).map(|(p, _)| p).collect();
            lambda.retain(|l| !l.is_zero());
        }
    }
    Ok(MinNormPoint { support: corral.into_iter().zip(lambda).collect(), point: x })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HullPosition {
    Interior,
    Boundary,
    Outside,
}

/// Position of the origin relative to the convex hull of the state.
pub fn hull_classify(s: &StatePolytope) -> Result<HullPosition, GitError> {
    let pts = s.points();
    let mn = min_norm_point(&pts)?;
    if !mn.point.is_zero() {
        return Ok(HullPosition::Outside);
    }
    // The origin is in the hull; it is interior iff no nonzero lambda has
    // <lambda, s> >= 0 for all s. Substitute lambda = mu - 1, mu in [0, 2].
    let two = BigRational::from_integer(2.into());
    let mut rows = Vec::new();
    for p in &pts {
        let shift: BigRational = p.0.iter().sum();
        rows.push((p.0.clone(), Cmp::Ge, shift));
    }
    for k in 0..RANK {
        let mut e = vec![BigRational::zero(); RANK];
        e[k] = BigRational::one();
        rows.push((e, Cmp::Le, two.clone()));
    }
    for k in 0..RANK {
        for sign in [1i64, -1] {
            let mut c = vec![BigRational::zero(); RANK];
            c[k] = BigRational::from_integer(sign.into());
            let lp = LinearProgram { objective: c, rows: rows.clone() };
            match lp.solve() {
                LpOutcome::Optimal { value, .. } => {
                    // objective is sign * mu_k; lambda_k = mu_k - 1
                    let lambda_k = if sign == 1 { value - BigRational::one() } else { -value - BigRational::one() };
                    if !lambda_k.is_zero() {
                        return Ok(HullPosition::Boundary);
                    }
                }
                _ => return Ok(HullPosition::Boundary),
            }
        }
    }
    Ok(HullPosition::Interior)
}

/// Primitive integer vector that is a positive multiple of `v`.
fn signed_primitive(v: &[BigRational]) -> Vec<BigInt> {
    let p = primitive_integer(v);
    if v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        p.into_iter().map(|x| -x).collect()
    } else {
        p
    }
}

/// Primitive integer direction proportional to `-q` for the minimum-norm
/// point `q`, together with `q`.
pub fn worst_one_ps(s: &StatePolytope) -> Result<(Vec<BigInt>, MinNormPoint), GitError> {
    let mn = min_norm_point(&s.points())?;
    if mn.point.is_zero() {
        return Err(GitError::OriginInHull);
    }
    let neg: Vec<BigRational> = mn.point.0.iter().map(|x| -x.clone()).collect();
    Ok((signed_primitive(&neg), mn))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GitCertificate {
    pub source: String,
    pub state_points: Vec<WeightVec>,
    pub multiplicities: Vec<usize>,
    pub vertex_count: usize,
    pub classification: HullPosition,
    #[serde(with = "crate::exactmath::rat_vec_string")]
    pub proximum: Vec<BigRational>,
    /// Primitive integer vector along `-proximum`; meaningful up to overall sign.
    pub direction: Option<Vec<String>>,
}

pub fn git_certificate(source: &str, m: &RatMatrix) -> Result<GitCertificate, GitError> {
    let state = pluecker_state(m)?;
    let vertex_count = vertex_count(&state);
    let classification = hull_classify(&state)?;
    let mn = min_norm_point(&state.points())?;
    let direction = match worst_one_ps(&state) {
        Ok((d, _)) => Some(d.iter().map(|x| x.to_string()).collect()),
        Err(GitError::OriginInHull) => None,
        Err(e) => return Err(e),
    };
    Ok(GitCertificate {
        source: source.to_string(),
        state_points: state.points(),
        multiplicities: state.multiplicities.values().copied().collect(),
        vertex_count,
        classification,
        proximum: mn.point.0,
        direction,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i64]) -> WeightVec {
        WeightVec::from_ints(v)
    }

    #[test]
    fn empty_subset_weight() {
        let ws = spinor_weights();
        assert_eq!(ws[0], WeightVec(vec![rat(-1, 2); 5]));
        let total = ws.iter().fold(WeightVec::zero(), |a, b| a.add(b));
        assert!(total.is_zero());
    }

    #[test]
    fn one_parameter_subgroup_pairing() {
        let mu = w(&[4, 3, 2, 1, 0]);
        let exps: Vec<BigRational> = spinor_weights().iter().map(|x| x.dot(&mu)).collect();
        let expected = [-5, 2, 1, 0, -1, 0, -1, -2, -2, -3, -4, 5, 4, 3, 2, 1];
        assert_eq!(exps, expected.iter().map(|&e| BigRational::from_integer(e.into())).collect::<Vec<_>>());
    }

    #[test]
    fn segment_min_norm() {
        let s = StatePolytope::from_points([w(&[1, 0, 0, 0, 0]), w(&[1, 1, 0, 0, 0])]);
        let (d, mn) = worst_one_ps(&s).unwrap();
        assert_eq!(mn.point, w(&[1, 0, 0, 0, 0]));
        assert_eq!(d, vec![BigInt::from(-1), 0.into(), 0.into(), 0.into(), 0.into()]);
    }

    #[test]
    fn origin_alone_is_boundary() {
        let s = StatePolytope::from_points([WeightVec::zero()]);
        assert_eq!(hull_classify(&s).unwrap(), HullPosition::Boundary);
        assert_eq!(worst_one_ps(&s), Err(GitError::OriginInHull));
    }

    #[test]
    fn cross_polytope_interior() {
        let mut pts = Vec::new();
        for k in 0..5 {
            for s in [1, -1] {
                let mut v = [0i64; 5];
                v[k] = s;
                pts.push(w(&v));
            }
        }
        let s = StatePolytope::from_points(pts);
        assert_eq!(hull_classify(&s).unwrap(), HullPosition::Interior);
        assert_eq!(vertex_count(&s), 10);
    }

    #[test]
    fn simplex_lp() {
        // max x + y, x + 2y <= 4, 3x + y <= 6
        let lp = LinearProgram {
            objective: vec![rat(1, 1), rat(1, 1)],
            rows: vec![
                (vec![rat(1, 1), rat(2, 1)], Cmp::Le, rat(4, 1)),
                (vec![rat(3, 1), rat(1, 1)], Cmp::Le, rat(6, 1)),
            ],
        };
        assert_eq!(lp.solve(), LpOutcome::Optimal { value: rat(14, 5), x: vec![rat(8, 5), rat(6, 5)] });
        let infeasible = LinearProgram {
            objective: vec![rat(1, 1)],
            rows: vec![(vec![rat(1, 1)], Cmp::Ge, rat(2, 1)), (vec![rat(1, 1)], Cmp::Le, rat(1, 1))],
        };
        assert_eq!(infeasible.solve(), LpOutcome::Infeasible);
        let unbounded = LinearProgram { objective: vec![rat(1, 1)], rows: vec![(vec![rat(1, 1)], Cmp::Ge, rat(1, 1))] };
        assert_eq!(unbounded.solve(), LpOutcome::Unbounded);
    }
}
