//! Explicit weight modules: sparse integer matrices for the root vectors of
//! `so(2n)`, extended from the standard and half-spin modules to exterior
//! powers, symmetric powers and tensor products.

use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{big_to_i64, half_spin_weights, is_zero_vec, std_weights, Character, RepError, RootSystemD, Weight};
use crate::exactmath::{BigRational, RatMatrix};
use crate::spinor::{clifford_on_ext, ordered_subsets, CliffordElt, ExtVec};

/// Column-sparse integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMat {
    pub nrows: usize,
    pub cols: Vec<Vec<(u32, i64)>>,
}

fn merge_terms(mut terms: Vec<(u32, i64)>) -> Vec<(u32, i64)> {
    terms.sort_unstable_by_key(|t| t.0);
    let mut out: Vec<(u32, i64)> = Vec::with_capacity(terms.len());
    for (r, c) in terms {
        match out.last_mut() {
            Some((lr, lc)) if *lr == r => *lc += c,
            _ => out.push((r, c)),
        }
    }
    out.retain(|t| t.1 != 0);
    out
}

impl SparseMat {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseMat { nrows, cols: vec![Vec::new(); ncols] }
    }

    pub fn from_columns(nrows: usize, cols: Vec<Vec<(u32, i64)>>) -> Self {
        SparseMat { nrows, cols: cols.into_iter().map(merge_terms).collect() }
    }

    pub fn diagonal(d: &[i64]) -> Self {
        Self::from_columns(d.len(), d.iter().enumerate().map(|(i, &x)| vec![(i as u32, x)]).collect())
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    /// `self * other`.
    pub fn mul(&self, other: &SparseMat) -> SparseMat {
        let cols = other
            .cols
            .par_iter()
            .map(|col| {
                let mut terms = Vec::new();
                for &(k, c) in col {
                    for &(r, d) in &self.cols[k as usize] {
                        terms.push((r, c * d));
                    }
                }
                merge_terms(terms)
            })
            .collect();
        SparseMat { nrows: self.nrows, cols }
    }

    pub fn add_scaled(&self, other: &SparseMat, s: i64) -> SparseMat {
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| merge_terms(a.iter().copied().chain(b.iter().map(|&(r, c)| (r, s * c))).collect()))
            .collect();
        SparseMat { nrows: self.nrows, cols }
    }

    pub fn commutator(&self, other: &SparseMat) -> SparseMat {
        self.mul(other).add_scaled(&other.mul(self), -1)
    }

    pub fn apply(&self, v: &[BigRational]) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.nrows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for &(r, c) in &self.cols[j] {
                out[r as usize] += x * BigRational::from_integer(c.into());
            }
        }
        out
    }

    pub fn to_rat_matrix(&self, rows: &[usize], cols: &[usize]) -> RatMatrix {
        let row_pos: HashMap<usize, usize> = rows.iter().enumerate().map(|(i, &r)| (r, i)).collect();
        let mut m = RatMatrix::zeros(rows.len(), cols.len());
        for (j, &c) in cols.iter().enumerate() {
            for &(r, x) in &self.cols[c] {
                if let Some(&i) = row_pos.get(&(r as usize)) {
                    m.set(i, j, BigRational::from_integer(x.into()));
                }
            }
        }
        m
    }
}

/// Recipe for a module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ModuleSpec {
    Std,
    HalfSpin { even: bool },
    Lambda { base: Box<ModuleSpec>, k: usize },
    Sym { base: Box<ModuleSpec>, k: usize },
    Tensor { left: Box<ModuleSpec>, right: Box<ModuleSpec> },
}

impl fmt::Display for ModuleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleSpec::Std => write!(f, "Std"),
            ModuleSpec::HalfSpin { even: true } => write!(f, "S+"),
            ModuleSpec::HalfSpin { even: false } => write!(f, "S-"),
            ModuleSpec::Lambda { base, k } => write!(f, "Lambda^{k}({base})"),
            ModuleSpec::Sym { base, k } => write!(f, "Sym^{k}({base})"),
            ModuleSpec::Tensor { left, right } => write!(f, "{left} (x) {right}"),
        }
    }
}

impl ModuleSpec {
    pub fn lambda(base: ModuleSpec, k: usize) -> Self {
        ModuleSpec::Lambda { base: Box::new(base), k }
    }

    pub fn sym(base: ModuleSpec, k: usize) -> Self {
        ModuleSpec::Sym { base: Box::new(base), k }
    }

    pub fn tensor(left: ModuleSpec, right: ModuleSpec) -> Self {
        ModuleSpec::Tensor { left: Box::new(left), right: Box::new(right) }
    }

    pub fn half_spin() -> Self {
        ModuleSpec::HalfSpin { even: true }
    }
}

/// `A(x, y) u = B(y, u) x - B(x, u) y` for basis labels of `V`
/// (`0..n` are `e_{-1}..e_{-n}`, `n..2n` are `e_1..e_n`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RootVector {
    pub x: usize,
    pub y: usize,
    pub sign: i64,
}

fn pairing(n: usize, a: usize, b: usize) -> i64 {
    i64::from(a.abs_diff(b) == n)
}

impl RootVector {
    fn std_matrix(&self, n: usize) -> SparseMat {
        let cols = (0..2 * n)
            .map(|u| {
                let mut t = Vec::new();
                let by = pairing(n, self.y, u);
                let bx = pairing(n, self.x, u);
                if by != 0 {
                    t.push((self.x as u32, self.sign * by));
                }
                if bx != 0 {
                    t.push((self.y as u32, -self.sign * bx));
                }
                t
            })
            .collect();
        SparseMat::from_columns(2 * n, cols)
    }

    /// The same element as a quadratic Clifford element; its commutator with
    /// vectors reproduces `A(x, y)` because `B(x, y) = 0`.
    pub fn clifford(&self, n: usize) -> CliffordElt {
        let gen = |l: usize| if l < n { CliffordElt::e_neg(n, l + 1) } else { CliffordElt::e_pos(n, l - n + 1) };
        gen(self.x).mul(&gen(self.y)).scale(&BigRational::from_integer(self.sign.into()))
    }
}

/// Chevalley pairs `(E_alpha, F_alpha)` for the positive roots, normalized
/// so that `[E_alpha, F_alpha]` acts on weight `mu` by `(mu, alpha)`.
pub fn chevalley_pairs(rs: &RootSystemD) -> Vec<(RootVector, RootVector)> {
    let n = rs.n;
    let pos = |i: usize| n + i;
    let neg = |i: usize| i;
    let weights = std_weights(n);
    rs.positive
        .iter()
        .map(|root| {
            let idx: Vec<usize> = (0..n).filter(|&i| root[i] != 0).collect();
            let (i, j) = (idx[0], idx[1]);
            let (e, mut f) = if root[j] < 0 {
                (RootVector { x: pos(i), y: neg(j), sign: 1 }, RootVector { x: pos(j), y: neg(i), sign: 1 })
            } else {
                (RootVector { x: pos(i), y: pos(j), sign: 1 }, RootVector { x: neg(j), y: neg(i), sign: 1 })
            };
            let h = e.std_matrix(n).commutator(&f.std_matrix(n));
            let expected = SparseMat::diagonal(&weights.iter().map(|w| w.pair2(root) / 2).collect::<Vec<_>>());
            if h != expected {
                f.sign = -1;
                let h = e.std_matrix(n).commutator(&f.std_matrix(n));
                assert_eq!(h, expected, "root vectors must close on the coroot");
            }
            (e, f)
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct WeightedModule {
    pub rank: usize,
    pub spec: ModuleSpec,
    pub labels: Vec<String>,
    pub weights: Vec<Weight>,
    /// `E_alpha` in the order of `RootSystemD::positive`.
    pub raising: Vec<SparseMat>,
    pub lowering: Vec<SparseMat>,
}

impl WeightedModule {
    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn character(&self) -> Character {
        let mut chi = Character::new();
        for w in &self.weights {
            *chi.entry(w.clone()).or_insert(0) += 1;
        }
        chi
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<BigRational> {
        let mut v = vec![BigRational::zero(); self.dim()];
        v[i] = BigRational::one();
        v
    }

    /// Indices of the basis vectors of weight `mu`.
    pub fn weight_space(&self, mu: &Weight) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.weights[i] == *mu).collect()
    }

    /// `h_i` as a diagonal matrix: `(mu, alpha_i)`.
    pub fn cartan_matrix(&self, rs: &RootSystemD, i: usize) -> SparseMat {
        SparseMat::diagonal(&self.weights.iter().map(|w| w.pair2(&rs.simple[i]) / 2).collect::<Vec<_>>())
    }

    pub fn simple_raising(&self, rs: &RootSystemD, i: usize) -> &SparseMat {
        &self.raising[rs.simple_index(i)]
    }

    pub fn simple_lowering(&self, rs: &RootSystemD, i: usize) -> &SparseMat {
        &self.lowering[rs.simple_index(i)]
    }

    /// `4c`, integral: `|mu|^2` on the diagonal plus `4 sum (E F + F E)`.
    pub fn casimir4(&self) -> SparseMat {
        let diag = SparseMat::diagonal(&self.weights.iter().map(|w| w.dot4(w)).collect::<Vec<_>>());
        self.raising.iter().zip(&self.lowering).fold(diag, |acc, (e, f)| {
            let ef = e.mul(f).add_scaled(&f.mul(e), 1);
            acc.add_scaled(&ef, 4)
        })
    }

    /// Whether every simple `e_i` and `f_i` kills `v`.
    pub fn is_annihilated(&self, rs: &RootSystemD, v: &[BigRational]) -> bool {
        (0..rs.n).all(|i| is_zero_vec(&self.simple_raising(rs, i).apply(v)) && is_zero_vec(&self.simple_lowering(rs, i).apply(v)))
    }

    pub fn is_highest_weight_vector(&self, rs: &RootSystemD, v: &[BigRational]) -> bool {
        (0..rs.n).all(|i| is_zero_vec(&self.simple_raising(rs, i).apply(v)))
    }
}

fn std_module(rs: &RootSystemD, pairs: &[(RootVector, RootVector)]) -> WeightedModule {
    let n = rs.n;
    let labels = (1..=n).map(|i| format!("e-{i}")).chain((1..=n).map(|i| format!("e{i}"))).collect();
    WeightedModule {
        rank: n,
        spec: ModuleSpec::Std,
        labels,
        weights: std_weights(n),
        raising: pairs.iter().map(|(e, _)| e.std_matrix(n)).collect(),
        lowering: pairs.iter().map(|(_, f)| f.std_matrix(n)).collect(),
    }
}

fn half_spin_module(rs: &RootSystemD, pairs: &[(RootVector, RootVector)], even: bool) -> Result<WeightedModule, RepError> {
    let n = rs.n;
    let masks = ordered_subsets(n, even);
    let index: HashMap<u32, u32> = masks.iter().enumerate().map(|(i, &m)| (m, i as u32)).collect();
    let act = |rv: &RootVector| -> Result<SparseMat, RepError> {
        let c = rv.clifford(n);
        let mut cols = Vec::new();
        for &m in &masks {
            let img = clifford_on_ext(&c, &ExtVec::basis(n, m));
            let mut col = Vec::new();
            for (mask, x) in img.coeffs.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let r = index.get(&(mask as u32)).ok_or_else(|| RepError::NonIntegral("parity not preserved".into()))?;
                col.push((*r, big_to_i64(x).ok_or_else(|| RepError::NonIntegral(x.to_string()))?));
            }
            cols.push(col);
        }
        Ok(SparseMat::from_columns(masks.len(), cols))
    };
    Ok(WeightedModule {
        rank: n,
        spec: ModuleSpec::HalfSpin { even },
        labels: masks.iter().map(|&m| crate::spinor::subset_label(m)).collect(),
        weights: half_spin_weights(n, even),
        raising: pairs.iter().map(|(e, _)| act(e)).collect::<Result<_, _>>()?,
        lowering: pairs.iter().map(|(_, f)| act(f)).collect::<Result<_, _>>()?,
    })
}

/// Extends a base action to `k`-fold products. `tuples` lists the basis in
/// order; `normalize` sorts a tuple and returns its sign (or `None` if zero).
fn power_action(
    base: &SparseMat,
    tuples: &[Vec<u32>],
    index: &HashMap<Vec<u32>, u32>,
    normalize: impl Fn(&mut Vec<u32>) -> Option<i64> + Sync,
) -> SparseMat {
    let cols = tuples
        .par_iter()
        .map(|t| {
            let mut terms = Vec::new();
            for pos in 0..t.len() {
                for &(r, c) in &base.cols[t[pos] as usize] {
                    let mut u = t.clone();
                    u[pos] = r;
                    if let Some(s) = normalize(&mut u) {
                        terms.push((index[&u], s * c));
                    }
                }
            }
            terms
        })
        .collect();
    SparseMat::from_columns(tuples.len(), cols)
}

fn sort_with_sign(u: &mut [u32]) -> Option<i64> {
    let mut sign = 1;
    for i in 1..u.len() {
        let mut j = i;
        while j > 0 && u[j - 1] > u[j] {
            u.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if u.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(sign)
    }
}

fn power_module(base: &WeightedModule, k: usize, wedge: bool, spec: ModuleSpec) -> WeightedModule {
    let d = base.dim() as u32;
    let tuples: Vec<Vec<u32>> = if wedge {
        (0..d).combinations(k).collect()
    } else {
        (0..d).combinations_with_replacement(k).collect()
    };
    let index: HashMap<Vec<u32>, u32> = tuples.iter().enumerate().map(|(i, t)| (t.clone(), i as u32)).collect();
    let weights = tuples
        .iter()
        .map(|t| t.iter().fold(Weight::zero(base.rank), |acc, &i| acc.add(&base.weights[i as usize])))
        .collect();
    let sep = if wedge { "^" } else { "*" };
    let labels = tuples.iter().map(|t| t.iter().map(|&i| base.labels[i as usize].as_str()).join(sep)).collect();
    let extend = |m: &SparseMat| {
        if wedge {
            power_action(m, &tuples, &index, |u| sort_with_sign(u))
        } else {
            power_action(m, &tuples, &index, |u| {
                u.sort_unstable();
                Some(1)
            })
        }
    };
    WeightedModule {
        rank: base.rank,
        spec,
        labels,
        weights,
        raising: base.raising.iter().map(extend).collect(),
        lowering: base.lowering.iter().map(extend).collect(),
    }
}

/// `A (x) B` with basis `a_i (x) b_j` at index `i * dim B + j`.
pub fn tensor_module(a: &WeightedModule, b: &WeightedModule) -> Result<WeightedModule, RepError> {
    if a.rank != b.rank {
        return Err(RepError::InconsistentRank(a.rank, b.rank));
    }
    let db = b.dim();
    let mut weights = Vec::with_capacity(a.dim() * db);
    let mut labels = Vec::with_capacity(a.dim() * db);
    for i in 0..a.dim() {
        for j in 0..db {
            weights.push(a.weights[i].add(&b.weights[j]));
            labels.push(format!("{}|{}", a.labels[i], b.labels[j]));
        }
    }
    let extend = |ma: &SparseMat, mb: &SparseMat| {
        let mut cols = Vec::with_capacity(a.dim() * db);
        for i in 0..a.dim() {
            for j in 0..db {
                let mut t: Vec<(u32, i64)> = ma.cols[i].iter().map(|&(r, c)| ((r as usize * db + j) as u32, c)).collect();
                t.extend(mb.cols[j].iter().map(|&(r, c)| ((i * db + r as usize) as u32, c)));
                cols.push(t);
            }
        }
        SparseMat::from_columns(a.dim() * db, cols)
    };
    Ok(WeightedModule {
        rank: a.rank,
        spec: ModuleSpec::tensor(a.spec.clone(), b.spec.clone()),
        labels,
        weights,
        raising: a.raising.iter().zip(&b.raising).map(|(x, y)| extend(x, y)).collect(),
        lowering: a.lowering.iter().zip(&b.lowering).map(|(x, y)| extend(x, y)).collect(),
    })
}

pub fn build_module(rs: &RootSystemD, spec: &ModuleSpec) -> Result<WeightedModule, RepError> {
    let pairs = chevalley_pairs(rs);
    build_with(rs, &pairs, spec)
}

fn build_with(rs: &RootSystemD, pairs: &[(RootVector, RootVector)], spec: &ModuleSpec) -> Result<WeightedModule, RepError> {
    Ok(match spec {
        ModuleSpec::Std => std_module(rs, pairs),
        ModuleSpec::HalfSpin { even } => half_spin_module(rs, pairs, *even)?,
        ModuleSpec::Lambda { base, k } => power_module(&build_with(rs, pairs, base)?, *k, true, spec.clone()),
        ModuleSpec::Sym { base, k } => power_module(&build_with(rs, pairs, base)?, *k, false, spec.clone()),
        ModuleSpec::Tensor { left, right } => tensor_module(&build_with(rs, pairs, left)?, &build_with(rs, pairs, right)?)?,
    })
}

/// Checks `[e_i, f_j] = delta_ij h_i`, `[h_i, e_j] = a_ij e_j`,
/// `[h_i, f_j] = -a_ij f_j` and the Serre relations, as matrix identities.
pub fn check_relations(rs: &RootSystemD, m: &WeightedModule) -> Result<(), String> {
    let n = rs.n;
    let zero = SparseMat::zeros(m.dim(), m.dim());
    for i in 0..n {
        let h = m.cartan_matrix(rs, i);
        for j in 0..n {
            let (e, f) = (m.simple_raising(rs, j), m.simple_lowering(rs, j));
            let ef = m.simple_raising(rs, i).commutator(f);
            let want = if i == j { h.clone() } else { zero.clone() };
            if ef != want {
                return Err(format!("[e{}, f{}] wrong", i + 1, j + 1));
            }
            let a = rs.cartan(i, j);
            if h.commutator(e) != zero.add_scaled(e, a) || h.commutator(f) != zero.add_scaled(f, -a) {
                return Err(format!("[h{}, e{}/f{}] wrong", i + 1, j + 1, j + 1));
            }
            if i != j {
                let (ei, fi) = (m.simple_raising(rs, i), m.simple_lowering(rs, i));
                let (mut se, mut sf) = (e.clone(), f.clone());
                for _ in 0..(1 - a) {
                    se = ei.commutator(&se);
                    sf = fi.commutator(&sf);
                }
                if !se.is_zero() || !sf.is_zero() {
                    return Err(format!("Serre relation for ({}, {}) fails", i + 1, j + 1));
                }
            }
        }
    }
    Ok(())
}

/// Checks that the Casimir commutes with every simple generator.
pub fn casimir_commutes(rs: &RootSystemD, m: &WeightedModule) -> bool {
    let c = m.casimir4();
    (0..rs.n).all(|i| c.commutator(m.simple_raising(rs, i)).is_zero() && c.commutator(m.simple_lowering(rs, i)).is_zero())
}

/// `c v`.
pub fn casimir_apply(m: &WeightedModule, v: &[BigRational]) -> Vec<BigRational> {
    let quarter = BigRational::new(1.into(), 4.into());
    m.casimir4().apply(v).into_iter().map(|x| x * &quarter).collect()
}

/// Distinct nonzero Casimir eigenvalues on a module, from its decomposition.
pub fn module_spectrum(rs: &RootSystemD, m: &WeightedModule) -> Result<Vec<BigRational>, RepError> {
    let mut out: Vec<BigRational> = Vec::new();
    for (lambda, _) in rs.decompose(&m.character())? {
        let c = rs.casimir_scalar(&lambda)?;
        if !c.is_zero() && !out.contains(&c) {
            out.push(c);
        }
    }
    out.sort();
    Ok(out)
}

/// `prod_k (c - k) / (0 - k)` applied to `v`, certified by annihilation.
pub fn invariant_project(
    rs: &RootSystemD,
    m: &WeightedModule,
    v: &[BigRational],
    spectrum: &[BigRational],
) -> Result<Vec<BigRational>, RepError> {
    let c4 = m.casimir4();
    let mut cur = v.to_vec();
    for k in spectrum.iter().filter(|k| !k.is_zero()) {
        let k4 = k * BigRational::from_integer(4.into());
        let inv = -(k4.recip());
        let cv = c4.apply(&cur);
        cur = cv.iter().zip(&cur).map(|(a, b)| (a - &k4 * b) * &inv).collect();
    }
    if m.is_annihilated(rs, &cur) {
        Ok(cur)
    } else {
        Err(RepError::SpectrumIncomplete)
    }
}

/// Vector of weight `mu` with Casimir eigenvalue `target` killed by every
/// `e_i`, computed on the weight space; normalized by its first nonzero entry.
pub fn highest_weight_in_weightspace(
    rs: &RootSystemD,
    m: &WeightedModule,
    mu: &Weight,
    target: &BigRational,
) -> Result<Vec<BigRational>, RepError> {
    let cols = m.weight_space(mu);
    if cols.is_empty() {
        return Err(RepError::EigenvalueAbsent(crate::exactmath::fmt_rat(target)));
    }
    let mut stacked = m.casimir4().to_rat_matrix(&cols, &cols);
    let t4 = target * BigRational::from_integer(4.into());
    for i in 0..cols.len() {
        let d = stacked.get(i, i) - &t4;
        stacked.set(i, i, d);
    }
    for i in 0..rs.n {
        let e = m.simple_raising(rs, i);
        let up = mu.add_root(&rs.simple[i], 1);
        let rows = m.weight_space(&up);
        if !rows.is_empty() {
            stacked = stacked.vstack(&e.to_rat_matrix(&rows, &cols)).expect("same width");
        }
    }
    let ker = stacked.kernel_basis();
    if ker.nrows() == 0 {
        return Err(RepError::EigenvalueAbsent(crate::exactmath::fmt_rat(target)));
    }
    let local = crate::exactmath::normalize_projective(ker.row(0));
    let mut v = vec![BigRational::zero(); m.dim()];
    for (k, &c) in cols.iter().enumerate() {
        v[c] = local[k].clone();
    }
    Ok(v)
}

/// Brute-force invariants: the common kernel of all generator matrices,
/// as rows of full-length vectors.
pub fn generator_kernel(m: &WeightedModule) -> RatMatrix {
    let cols: Vec<usize> = (0..m.dim()).filter(|&i| m.weights[i].0.iter().all(|&x| x == 0)).collect();
    let rows: Vec<usize> = (0..m.dim()).collect();
    let mut stacked = RatMatrix::zeros(0, cols.len());
    for g in m.raising.iter().chain(&m.lowering) {
        let block = g.to_rat_matrix(&rows, &cols).row_space_basis();
        stacked = stacked.vstack(&block).expect("same width").row_space_basis();
    }
    let ker = stacked.kernel_basis();
    let mut out = RatMatrix::zeros(ker.nrows(), m.dim());
    for r in 0..ker.nrows() {
        for (k, &c) in cols.iter().enumerate() {
            out.set(r, c, ker.get(r, k).clone());
        }
    }
    out
}

/// Span of `invariant_project` applied to every weight-zero basis vector.
pub fn projected_invariants(rs: &RootSystemD, m: &WeightedModule) -> Result<RatMatrix, RepError> {
    let spectrum = module_spectrum(rs, m)?;
    let zero = Weight::zero(rs.n);
    let images: Vec<Vec<BigRational>> = m
        .weight_space(&zero)
        .into_par_iter()
        .map(|i| invariant_project(rs, m, &m.basis_vector(i), &spectrum))
        .collect::<Result<_, _>>()?;
    let mut out = RatMatrix::zeros(0, m.dim());
    for v in images {
        if !is_zero_vec(&v) {
            out = out.vstack(&RatMatrix::from_rows(m.dim(), vec![v]).expect("width")).expect("width");
        }
    }
    Ok(out.row_space_basis())
}

/// Certificate for an invariant vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantCertificate {
    pub module_spec: String,
    pub basis_words: Vec<Vec<usize>>,
    pub coefficients: Vec<String>,
    pub annihilation_residual: String,
}
