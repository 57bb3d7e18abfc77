//! Long-running constructions around `V(5 omega_1)` in rank five, plus the
//! small-rank oracle suite. Stages write versioned JSON checkpoints so an
//! interrupted run resumes where it stopped.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fs;
use std::path::{Path, PathBuf};

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use num_bigint::BigInt;

use super::quad::{
    self, apply_sparse, integral_part, quad_casimir4, quad_eigenproject, quad_is_highest, quad_primitive, quad_product,
    IntQuad, Quad, SparseVec,
};
use super::{
    build_module, casimir_apply, generator_kernel, highest_weight_in_weightspace, projected_invariants, ModuleSpec,
    RepError, RootSystemD, SparseMat, Weight, WeightedModule, sym2_character,
};
use crate::curves::{cusp_span_matrix, nodal_span_matrix, ribbon_span_matrix, TParam};
use crate::exactmath::{fmt_rat, parse_rat, BigRational, RatMatrix};

pub const CHECKPOINT_VERSION: u32 = 1;

const PRIME: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

fn to_mod(x: &BigRational) -> u64 {
    let p = num_bigint::BigInt::from(PRIME);
    let reduce = |v: &num_bigint::BigInt| -> u64 {
        let r = ((v % &p) + &p) % &p;
        r.try_into().expect("reduced below the prime")
    };
    mulmod(reduce(x.numer()), powmod(reduce(x.denom()), PRIME - 2))
}

/// Incremental row echelon form modulo a large prime. Independence modulo
/// the prime implies independence over the rationals, so accepted vectors
/// are always independent; callers check the final count.
#[derive(Default, Clone, Debug)]
struct Echelon {
    rows: Vec<(usize, HashMap<usize, u64>)>,
}

impl Echelon {
    /// Reduces `v`; if something survives it is stored and `true` returned.
    fn insert(&mut self, v: &SparseVec) -> bool {
        let mut cur: HashMap<usize, u64> = v.iter().map(|(k, x)| (*k, to_mod(x))).filter(|(_, x)| *x != 0).collect();
        for (p, row) in &self.rows {
            if let Some(&c) = cur.get(p) {
                for (k, x) in row {
                    let e = cur.entry(*k).or_insert(0);
                    *e = (*e + PRIME - mulmod(c, *x)) % PRIME;
                }
                cur.retain(|_, x| *x != 0);
            }
        }
        let Some(&p) = cur.keys().min() else {
            return false;
        };
        let inv = powmod(cur[&p], PRIME - 2);
        let row = cur.iter().map(|(k, x)| (*k, mulmod(*x, inv))).collect();
        self.rows.push((p, row));
        true
    }
}

/// Basis of the submodule generated by a highest-weight vector: lowering
/// words (application order, simple indices from 1) enumerated breadth
/// first, keeping a word only when it raises the rank of its weight space.
#[derive(Clone, Debug)]
pub struct LoweringBasis {
    pub words: Vec<Vec<usize>>,
    pub vectors: Vec<SparseVec>,
    pub weights: Vec<Weight>,
}

pub fn lowering_basis(rs: &RootSystemD, m: &WeightedModule, top: usize) -> LoweringBasis {
    let mut echelons: HashMap<Weight, Echelon> = HashMap::new();
    let start: SparseVec = BTreeMap::from([(top, BigRational::one())]);
    echelons.entry(m.weights[top].clone()).or_default().insert(&start);
    let mut out = LoweringBasis { words: vec![vec![]], vectors: vec![start.clone()], weights: vec![m.weights[top].clone()] };
    let mut queue = VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        for i in 0..rs.n {
            let v = apply_sparse(m.simple_lowering(rs, i), &out.vectors[k]);
            if v.is_empty() {
                continue;
            }
            let w = out.weights[k].add_root(&rs.simple[i], -1);
            if echelons.entry(w.clone()).or_default().insert(&v) {
                let mut word = out.words[k].clone();
                word.push(i + 1);
                out.words.push(word);
                out.vectors.push(v);
                out.weights.push(w);
                queue.push_back(out.words.len() - 1);
            }
        }
    }
    out
}

/// Rebuilds basis vectors from stored words.
pub fn vectors_from_words(rs: &RootSystemD, m: &WeightedModule, top: usize, words: &[Vec<usize>]) -> LoweringBasis {
    let mut vectors = Vec::with_capacity(words.len());
    let mut weights = Vec::with_capacity(words.len());
    for word in words {
        let mut v: SparseVec = BTreeMap::from([(top, BigRational::one())]);
        let mut w = m.weights[top].clone();
        for &i in word {
            v = apply_sparse(m.simple_lowering(rs, i - 1), &v);
            w = w.add_root(&rs.simple[i - 1], -1);
        }
        vectors.push(v);
        weights.push(w);
    }
    LoweringBasis { words: words.to_vec(), vectors, weights }
}

/// Pairs `(I, J)` of basis elements with opposite weights.
pub fn pairing_basis(b: &LoweringBasis) -> Vec<(usize, usize)> {
    let mut by_weight: HashMap<&Weight, Vec<usize>> = HashMap::new();
    for (i, w) in b.weights.iter().enumerate() {
        by_weight.entry(w).or_default().push(i);
    }
    let mut out = Vec::new();
    for (i, w) in b.weights.iter().enumerate() {
        if let Some(js) = by_weight.get(&w.neg()) {
            out.extend(js.iter().map(|&j| (i, j)));
        }
    }
    out
}

/// Element of `M (x) M` as a sparse map on index pairs.
pub type TensorVec = BTreeMap<(usize, usize), BigRational>;

/// `(sum_i x_{-i} y_i + x_i y_{-i})^k` in `Sym^k Std (x) Sym^k Std`.
pub fn polar_power(m: &WeightedModule, n: usize, k: usize) -> TensorVec {
    let index: HashMap<&str, usize> = m.labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
    // monomials as sorted label-index tuples over Std (0..2n)
    let mut cur: BTreeMap<(Vec<usize>, Vec<usize>), BigRational> = BTreeMap::from([((vec![], vec![]), BigRational::one())]);
    for _ in 0..k {
        let mut next: BTreeMap<(Vec<usize>, Vec<usize>), BigRational> = BTreeMap::new();
        for ((xs, ys), c) in &cur {
            for i in 0..n {
                for (a, b) in [(i, n + i), (n + i, i)] {
                    let mut x2 = xs.clone();
                    let mut y2 = ys.clone();
                    x2.push(a);
                    y2.push(b);
                    x2.sort_unstable();
                    y2.sort_unstable();
                    *next.entry((x2, y2)).or_insert_with(BigRational::zero) += c;
                }
            }
        }
        cur = next;
    }
    let std_labels: Vec<String> = (1..=n).map(|i| format!("e-{i}")).chain((1..=n).map(|i| format!("e{i}"))).collect();
    let label = |t: &[usize]| t.iter().map(|&i| std_labels[i].as_str()).collect::<Vec<_>>().join("*");
    cur.into_iter().map(|((xs, ys), c)| ((index[label(&xs).as_str()], index[label(&ys).as_str()]), c)).collect()
}

/// Applies a sparse operator on the left factor.
fn apply_left(t: &TensorVec, f: impl Fn(&SparseVec) -> SparseVec + Sync) -> TensorVec {
    let mut by_right: BTreeMap<usize, SparseVec> = BTreeMap::new();
    for ((i, j), c) in t {
        by_right.entry(*j).or_default().insert(*i, c.clone());
    }
    let images: Vec<(usize, SparseVec)> = by_right.into_par_iter().map(|(j, v)| (j, f(&v))).collect();
    let mut out = TensorVec::new();
    for (j, v) in images {
        for (i, c) in v {
            out.insert((i, j), c);
        }
    }
    out
}

fn transpose(t: &TensorVec) -> TensorVec {
    t.iter().map(|((i, j), c)| ((*j, *i), c.clone())).collect()
}

/// `prod (c - k) / (target - k)` on the left factor.
pub fn eigenproject_left(m: &WeightedModule, t: &TensorVec, target: &BigRational, others: &[BigRational]) -> TensorVec {
    let c4 = m.casimir4();
    let quarter = BigRational::new(1.into(), 4.into());
    let mut cur = t.clone();
    for k in others {
        let denom = (target - k).recip();
        cur = apply_left(&cur, |v| {
            let mut out = apply_sparse(&c4, v);
            for (i, x) in out.iter_mut() {
                *x = &*x * &quarter;
                if let Some(y) = v.get(i) {
                    *x -= k * y;
                }
            }
            for (i, y) in v {
                if !out.contains_key(i) {
                    out.insert(*i, -(k * y));
                }
            }
            out.retain(|_, x| !x.is_zero());
            out.values_mut().for_each(|x| *x = &*x * &denom);
            out
        });
    }
    cur
}

/// Image of a tensor under `X (x) 1 + 1 (x) X`.
pub fn tensor_act(m: &SparseMat, t: &TensorVec) -> TensorVec {
    let mut out = TensorVec::new();
    for ((i, j), c) in t {
        for &(r, x) in &m.cols[*i] {
            *out.entry((r as usize, *j)).or_insert_with(BigRational::zero) += c * BigRational::from_integer(x.into());
        }
        for &(r, x) in &m.cols[*j] {
            *out.entry((*i, r as usize)).or_insert_with(BigRational::zero) += c * BigRational::from_integer(x.into());
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Scales so that the first term in index order has coefficient one.
pub fn normalize_first(t: &TensorVec) -> TensorVec {
    let Some(lead) = t.values().next().cloned() else {
        return t.clone();
    };
    let inv = lead.recip();
    t.iter().map(|(k, c)| (*k, c * &inv)).collect()
}

/// Coefficients `c_IJ` with `t = sum c_IJ b_I (x) b_J`, solved one weight
/// block at a time. Returns `None` if `t` is not in the span.
pub fn pairing_coefficients(b: &LoweringBasis, t: &TensorVec, dim: usize) -> Option<BTreeMap<(usize, usize), BigRational>> {
    let mut by_weight: BTreeMap<&Weight, Vec<usize>> = BTreeMap::new();
    for (i, w) in b.weights.iter().enumerate() {
        by_weight.entry(w).or_default().push(i);
    }
    // left inverse of each weight block through a pivot-row square submatrix
    struct Block {
        idx: Vec<usize>,
        pivots: Vec<usize>,
        inverse: RatMatrix,
    }
    let blocks: BTreeMap<&Weight, Block> = by_weight
        .iter()
        .map(|(w, idx)| {
            let rows: Vec<Vec<BigRational>> = idx
                .iter()
                .map(|&i| {
                    let mut r = vec![BigRational::zero(); dim];
                    for (k, x) in &b.vectors[i] {
                        r[*k] = x.clone();
                    }
                    r
                })
                .collect();
            let a = RatMatrix::from_rows(dim, rows).expect("width");
            let (_, pivots) = a.rref();
            let square = a.select_columns(&pivots);
            let inverse = square.inverse().expect("independent basis vectors");
            (*w, Block { idx: idx.clone(), pivots, inverse })
        })
        .collect();
    let mut out = BTreeMap::new();
    for (w, left) in &blocks {
        let Some(right) = blocks.get(&w.neg()) else { continue };
        // H block restricted to pivot coordinates
        let mut h = RatMatrix::zeros(left.pivots.len(), right.pivots.len());
        for (a, &p) in left.pivots.iter().enumerate() {
            for (c, &q) in right.pivots.iter().enumerate() {
                if let Some(x) = t.get(&(p, q)) {
                    h.set(a, c, x.clone());
                }
            }
        }
        let c = solve_block(&left.inverse, &h, &right.inverse)?;
        for (a, &i) in left.idx.iter().enumerate() {
            for (d, &j) in right.idx.iter().enumerate() {
                let x = c.get(a, d);
                if !x.is_zero() {
                    out.insert((i, j), x.clone());
                }
            }
        }
    }
    // verify reconstruction
    let mut rebuilt = TensorVec::new();
    for ((i, j), c) in &out {
        for (p, x) in &b.vectors[*i] {
            for (q, y) in &b.vectors[*j] {
                *rebuilt.entry((*p, *q)).or_insert_with(BigRational::zero) += c * x * y;
            }
        }
    }
    rebuilt.retain(|_, x| !x.is_zero());
    (rebuilt == *t).then_some(out)
}

/// With `A_l[:, P] = S_l` square (rows = basis vectors), `t[P, Q] = S_l^T C S_r`,
/// so `C = (S_l^T)^{-1} t[P, Q] S_r^{-1}`.
fn solve_block(inv_l: &RatMatrix, h: &RatMatrix, inv_r: &RatMatrix) -> Option<RatMatrix> {
    inv_l.transpose().mul(h).ok()?.mul(inv_r).ok()
}

/// One line of the optional-tier report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TierItem {
    pub name: String,
    pub expected: String,
    pub observed: Option<String>,
    pub status: String,
}

impl TierItem {
    fn checked(name: &str, expected: impl ToString, observed: impl ToString) -> Self {
        let (e, o) = (expected.to_string(), observed.to_string());
        let status = if e == o { "pass" } else { "fail" }.to_string();
        TierItem { name: name.into(), expected: e, observed: Some(o), status }
    }

    pub fn passed(&self) -> bool {
        self.status == "pass"
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TierReport {
    pub tier: String,
    pub items: Vec<TierItem>,
}

impl TierReport {
    pub fn all_pass(&self) -> bool {
        self.items.iter().all(TierItem::passed)
    }
}

/// Versioned checkpoint directory; writes go through a temporary file and
/// a rename so a partial file is never observed.
#[derive(Clone, Debug)]
pub struct Checkpoint {
    pub dir: PathBuf,
}

#[derive(Serialize, Deserialize)]
struct Envelope<T> {
    version: u32,
    stage: String,
    data: T,
}

impl Checkpoint {
    pub fn new(dir: impl AsRef<Path>) -> Result<Self, RepError> {
        fs::create_dir_all(dir.as_ref()).map_err(|e| RepError::Checkpoint(e.to_string()))?;
        Ok(Checkpoint { dir: dir.as_ref().to_path_buf() })
    }

    fn path(&self, stage: &str) -> PathBuf {
        self.dir.join(format!("{stage}.json"))
    }

    pub fn load<T: DeserializeOwned>(&self, stage: &str) -> Result<Option<T>, RepError> {
        let p = self.path(stage);
        if !p.exists() {
            return Ok(None);
        }
        let text = fs::read_to_string(&p).map_err(|e| RepError::Checkpoint(e.to_string()))?;
        let env: Envelope<T> =
            serde_json::from_str(&text).map_err(|e| RepError::Checkpoint(format!("{}: corrupt: {e}", p.display())))?;
        if env.version != CHECKPOINT_VERSION || env.stage != stage {
            return Err(RepError::Checkpoint(format!("{}: version or stage mismatch", p.display())));
        }
        Ok(Some(env.data))
    }

    pub fn store<T: Serialize>(&self, stage: &str, data: &T) -> Result<(), RepError> {
        let env = Envelope { version: CHECKPOINT_VERSION, stage: stage.to_string(), data };
        let text = serde_json::to_string(&env).map_err(|e| RepError::Checkpoint(e.to_string()))?;
        let tmp = self.dir.join(format!(".{stage}.json.tmp"));
        fs::write(&tmp, text).map_err(|e| RepError::Checkpoint(e.to_string()))?;
        fs::rename(&tmp, self.path(stage)).map_err(|e| RepError::Checkpoint(e.to_string()))
    }

    fn cached<T: Serialize + DeserializeOwned>(
        &self,
        stage: &str,
        compute: impl FnOnce() -> Result<T, RepError>,
    ) -> Result<T, RepError> {
        if let Some(v) = self.load(stage)? {
            return Ok(v);
        }
        let v = compute()?;
        self.store(stage, &v)?;
        Ok(v)
    }
}

/// Stored form of the `V(5 omega_1)` invariant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairingInvariant {
    pub basis_words: Vec<Vec<usize>>,
    /// `(I, J, c_IJ)` with `c_IJ` as `"p/q"`.
    pub coefficients: Vec<(usize, usize, String)>,
    /// Flattened bidegree-(5,5) form: `(x-monomial, y-monomial, coefficient)`.
    pub flattened: Vec<(String, String, String)>,
    pub annihilation_residual: String,
}

/// Builds the invariant of `V(5 omega_1) (x) V(5 omega_1)` inside
/// `Sym^5 Std (x) Sym^5 Std` by Casimir projection of the polar form,
/// expresses it in the lowering-word pairing basis and certifies it.
pub fn build_pairing_invariant(rs: &RootSystemD, m: &WeightedModule, basis: &LoweringBasis) -> Result<PairingInvariant, RepError> {
    let polar = polar_power(m, rs.n, 5);
    let top = rs.casimir_scalar(&rs.from_dynkin(&[5, 0, 0, 0, 0]))?;
    let lower = [rs.casimir_scalar(&rs.from_dynkin(&[3, 0, 0, 0, 0]))?, rs.casimir_scalar(&rs.from_dynkin(&[1, 0, 0, 0, 0]))?];
    let h = eigenproject_left(m, &polar, &top, &lower);
    let h = normalize_first(&h);
    let mut residual = BigRational::zero();
    for g in m.raising.iter().chain(&m.lowering) {
        for c in tensor_act(g, &h).values() {
            residual += c.abs();
        }
    }
    // both factors lie in V(5 omega_1)
    let other_side = eigenproject_left(m, &transpose(&h), &top, &lower);
    if transpose(&other_side) != h {
        return Err(RepError::SpectrumIncomplete);
    }
    let coeffs = pairing_coefficients(basis, &h, m.dim()).ok_or(RepError::SpectrumIncomplete)?;
    Ok(PairingInvariant {
        basis_words: basis.words.clone(),
        coefficients: coeffs.iter().map(|((i, j), c)| (*i, *j, fmt_rat(c))).collect(),
        flattened: h.iter().map(|((i, j), c)| (m.labels[*i].clone(), m.labels[*j].clone(), fmt_rat(c))).collect(),
        annihilation_residual: fmt_rat(&residual),
    })
}

/// Highest-weight vector of weight `mu` in `Sym^2` of the submodule
/// generated by an ambient basis vector, as a primitive integer quadratic
/// form in the ambient coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadraticGenerator {
    pub submodule_highest_weight: Vec<i64>,
    pub submodule_dim: usize,
    pub eigenvalue: String,
    pub projected_away: Vec<String>,
    /// `(a, b, coefficient)` for the monomial `x_a x_b`, `a <= b`, sorted.
    pub terms: Vec<(u32, u32, String)>,
}

impl QuadraticGenerator {
    pub fn int_quad(&self) -> Result<IntQuad, RepError> {
        let mut terms = HashMap::new();
        for (a, b, c) in &self.terms {
            let v: i128 = c.parse().map_err(|_| RepError::Checkpoint(format!("bad coefficient {c}")))?;
            terms.insert((*a, *b), v);
        }
        Ok(IntQuad { scale: BigInt::one(), terms })
    }
}

/// Builds the submodule generated by `top`, checks its dimension, and
/// isolates the highest-weight vector of weight `mu` in its symmetric square
/// by projecting away every other Casimir eigenvalue met at weight `mu`.
pub fn quadratic_generator(rs: &RootSystemD, w: &WeightedModule, top: usize, mu: &Weight) -> Result<QuadraticGenerator, RepError> {
    let lambda = w.weights[top].clone();
    let basis = lowering_basis(rs, w, top);
    let expected = rs.weyl_dim(&lambda)?;
    if BigInt::from(basis.words.len()) != expected {
        return Err(RepError::BasisSize(basis.words.len(), expected.to_string()));
    }
    let target = rs.casimir_scalar(mu)?;
    let constituents = rs.constituents_through(&sym2_character(&rs.weight_multiplicities(&lambda)?), mu)?;
    let mut others = Vec::new();
    for (nu, m) in &constituents {
        let k = rs.casimir_scalar(nu)?;
        if nu == mu {
            if *m != 1 {
                return Err(RepError::EigenvalueAbsent(fmt_rat(&target)));
            }
        } else if k == target {
            return Err(RepError::EigenvalueAbsent(fmt_rat(&target)));
        } else if !others.contains(&k) {
            others.push(k);
        }
    }
    others.sort();
    let mut by_weight: HashMap<&Weight, Vec<usize>> = HashMap::new();
    for (i, wt) in basis.weights.iter().enumerate() {
        by_weight.entry(wt).or_default().push(i);
    }
    let c4 = w.casimir4();
    let four_target = &target * BigRational::from_integer(4.into());
    for (k, wt) in basis.weights.iter().enumerate() {
        let need = mu.sub(wt);
        for &l in by_weight.get(&need).map(Vec::as_slice).unwrap_or(&[]) {
            if l < k {
                continue;
            }
            let q = quad_product(&basis.vectors[k], &basis.vectors[l]);
            let proj = quad_eigenproject(w, &q, &target, &others);
            if proj.is_empty() {
                continue;
            }
            let scaled: Quad = proj.iter().map(|(key, x)| (*key, x * &four_target)).collect();
            if !quad_is_highest(w, &proj) || quad_casimir4(w, &c4, &proj) != scaled {
                return Err(RepError::SpectrumIncomplete);
            }
            let prim = quad_primitive(&proj)?;
            let mut terms: Vec<(u32, u32, String)> = prim.terms.iter().map(|((a, b), c)| (*a, *b, c.to_string())).collect();
            terms.sort();
            return Ok(QuadraticGenerator {
                submodule_highest_weight: rs.to_dynkin(&lambda),
                submodule_dim: basis.words.len(),
                eigenvalue: fmt_rat(&target),
                projected_away: others.iter().map(fmt_rat).collect(),
                terms,
            });
        }
    }
    Err(RepError::EigenvalueAbsent(fmt_rat(&target)))
}

/// Values of `f_I . q` at each point for every lowering word `I` (words
/// must be prefix closed and sorted by length).
pub fn evaluate_along_words(
    rs: &RootSystemD,
    w: &WeightedModule,
    q: &IntQuad,
    words: &[Vec<usize>],
    points: &[Vec<BigInt>],
) -> Result<Vec<Vec<BigInt>>, RepError> {
    let mut prev: HashMap<Vec<usize>, IntQuad> = HashMap::new();
    let mut cur: HashMap<Vec<usize>, IntQuad> = HashMap::new();
    let mut level = 0;
    let mut out = Vec::with_capacity(words.len());
    for word in words {
        if word.len() > level {
            prev = std::mem::take(&mut cur);
            level = word.len();
        }
        let v = match word.split_last() {
            None => q.clone(),
            Some((&i, parent)) => {
                let p = prev.get(parent).ok_or_else(|| RepError::Checkpoint("word list is not prefix closed".into()))?;
                p.act(w.simple_lowering(rs, i - 1))?
            }
        };
        out.push(points.iter().map(|p| v.eval(p)).collect());
        cur.insert(word.clone(), v);
    }
    Ok(out)
}

/// Ambient labels of the two highest-weight vectors of `Lambda^7 S+`.
pub const LAMBDA7_V1: &str = "e12^e13^e1234^e1235^e1245^e1345^e2345";
pub const LAMBDA7_V2: &str = "e12^e13^e14^e1234^e1235^e1245^e1345";

/// Named `7 x 16` matrices at which the invariant is evaluated.
pub fn evaluation_points() -> Result<Vec<(String, RatMatrix)>, RepError> {
    let nodal = |a, b| {
        TParam::from_ints(a, b)
            .and_then(|t| nodal_span_matrix(&t))
            .map_err(|e| RepError::Checkpoint(e.to_string()))
    };
    Ok(vec![
        ("M_cusp".into(), cusp_span_matrix()),
        ("M_rib".into(), ribbon_span_matrix()),
        ("M_nod([2:1])".into(), nodal(2, 1)?),
        ("M_nod([3:1])".into(), nodal(3, 1)?),
    ])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct StoredValues {
    values: Vec<Vec<String>>,
}

/// Values of the degree-four invariant at the evaluation points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuarticValues {
    pub w1_terms: usize,
    pub w2_terms: usize,
    pub v1_dim: usize,
    pub v2_dim: usize,
    pub values: Vec<(String, String)>,
}

fn stored(v: &[Vec<BigInt>]) -> StoredValues {
    StoredValues { values: v.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect() }
}

fn unstored(s: &StoredValues) -> Result<Vec<Vec<BigInt>>, RepError> {
    s.values
        .iter()
        .map(|r| r.iter().map(|x| x.parse().map_err(|_| RepError::Checkpoint(format!("bad integer {x}")))).collect())
        .collect()
}

/// Evaluates `F = sum c_IJ (f_I . w1)(P) (f_J . w2)(P)` at the evaluation
/// points, building `w1`, `w2` and the per-word values as checkpointed stages.
pub fn quartic_values(checkpoint: &Checkpoint, words: &[Vec<usize>], inv: &PairingInvariant) -> Result<QuarticValues, RepError> {
    let rs = RootSystemD::new(5)?;
    let w = build_module(&rs, &ModuleSpec::lambda(ModuleSpec::half_spin(), 7))?;
    let spin = build_module(&rs, &ModuleSpec::half_spin())?;
    let mu = rs.from_dynkin(&[5, 0, 0, 0, 0]);
    let named = evaluation_points()?;
    let mut scales = Vec::new();
    let mut points = Vec::new();
    for (_, m) in &named {
        let (s, q) = integral_part(&quad::pluecker_vector(&w, &spin.labels, m)?);
        scales.push(s);
        points.push(q);
    }
    let mut gens = Vec::new();
    let mut per_word = Vec::new();
    for (tag, label) in [("V1", LAMBDA7_V1), ("V2", LAMBDA7_V2)] {
        let top = w.index_of_label(label).ok_or_else(|| RepError::Checkpoint(format!("missing basis label {label}")))?;
        let g: QuadraticGenerator = checkpoint.cached(&format!("generator-{tag}"), || quadratic_generator(&rs, &w, top, &mu))?;
        let q = g.int_quad()?;
        let vals: StoredValues =
            checkpoint.cached(&format!("values-{tag}"), || Ok(stored(&evaluate_along_words(&rs, &w, &q, words, &points)?)))?;
        per_word.push(unstored(&vals)?);
        gens.push(g);
    }
    let coeffs = parse_coefficients(inv)?;
    let mut values = Vec::new();
    for (k, (name, _)) in named.iter().enumerate() {
        let mut raw = BigRational::zero();
        for (i, j, c) in &coeffs {
            raw += c * BigRational::from_integer(&per_word[0][*i][k] * &per_word[1][*j][k]);
        }
        let s = &scales[k];
        values.push((name.clone(), fmt_rat(&(raw * s * s * s * s))));
    }
    Ok(QuarticValues {
        w1_terms: gens[0].terms.len(),
        w2_terms: gens[1].terms.len(),
        v1_dim: gens[0].submodule_dim,
        v2_dim: gens[1].submodule_dim,
        values,
    })
}

/// Every stage of the `V(5 omega_1)` construction, checkpointed.
pub fn run_full_tier(checkpoint: &Checkpoint) -> Result<TierReport, RepError> {
    let rs = RootSystemD::new(5)?;
    let m = build_module(&rs, &ModuleSpec::sym(ModuleSpec::Std, 5))?;
    let top = m.index_of_label("e1*e1*e1*e1*e1").expect("highest monomial");
    let words: Vec<Vec<usize>> = checkpoint.cached("v5w1-basis", || Ok(lowering_basis(&rs, &m, top).words))?;
    let basis = vectors_from_words(&rs, &m, top, &words);
    let pairs = pairing_basis(&basis);
    let inv: PairingInvariant = checkpoint.cached("v5w1-invariant", || build_pairing_invariant(&rs, &m, &basis))?;
    let nonzero_pairs = inv.coefficients.len();
    let mut items = vec![
        TierItem::checked("V(5w1) lowering-word basis size", 1782, words.len()),
        TierItem::checked("torus-invariant pairing basis size", 4722, pairs.len()),
        TierItem::checked("invariant annihilated by all root vectors (residual)", "0", &inv.annihilation_residual),
        TierItem {
            name: "nonzero pairing coefficients c_IJ".into(),
            expected: "<= 4722".into(),
            observed: Some(nonzero_pairs.to_string()),
            status: if nonzero_pairs <= pairs.len() && nonzero_pairs > 0 { "pass" } else { "fail" }.into(),
        },
        TierItem::checked("flattened bidegree-(5,5) invariant term count", 7502, inv.flattened.len()),
    ];
    let q = quartic_values(checkpoint, &words, &inv)?;
    items.push(TierItem::checked("V1 lowering-word basis size", 8800, q.v1_dim));
    items.push(TierItem::checked("V2 lowering-word basis size", 2640, q.v2_dim));
    items.push(TierItem::checked("w1 term count", 569, q.w1_terms));
    items.push(TierItem::checked("w2 term count", 785, q.w2_terms));
    let expected = [("M_cusp", "-63984375"), ("M_rib", "92664000/343"), ("M_nod([2:1])", "234000/343"), ("M_nod([3:1])", "1872000/343")];
    let mut factors = Vec::new();
    let mut observed = Vec::new();
    for ((name, value), (ename, evalue)) in q.values.iter().zip(expected) {
        if name != ename {
            return Err(RepError::Checkpoint(format!("evaluation point {name} out of order")));
        }
        items.push(TierItem::checked(&format!("F({name}) in the stated normalization"), evalue, value));
        let (o, e) = (parse_rat(value).map_err(|e| RepError::Checkpoint(e.to_string()))?, parse_rat(evalue).expect("literal"));
        if !o.is_zero() {
            factors.push(&e / &o);
        }
        observed.push((name.clone(), o, e));
    }
    for (name, o, e) in &observed[1..] {
        let (cusp_o, cusp_e) = (&observed[0].1, &observed[0].2);
        let ratio = |a: &BigRational, b: &BigRational| if b.is_zero() { "undefined".to_string() } else { fmt_rat(&(a / b)) };
        items.push(TierItem::checked(&format!("F({name}) / F(M_cusp)"), ratio(e, cusp_e), ratio(o, cusp_o)));
    }
    items.push(TierItem::checked("F nonzero at every evaluation point", true, observed.iter().all(|(_, o, _)| !o.is_zero())));
    let common = factors.len() == observed.len() && factors.windows(2).all(|w| w[0] == w[1]);
    items.push(TierItem {
        name: "printed values are one common multiple of the computed values".into(),
        expected: "common factor".into(),
        observed: Some(if common { format!("common factor {}", fmt_rat(&factors[0])) } else { "no common factor".into() }),
        status: if common { "pass" } else { "fail" }.into(),
    });
    Ok(TierReport { tier: "full".into(), items })
}

/// Modules of rank `n` checked by the oracle suite.
pub fn oracle_cases(n: usize) -> Vec<ModuleSpec> {
    match n {
        2 => vec![
            ModuleSpec::sym(ModuleSpec::Std, 2),
            ModuleSpec::sym(ModuleSpec::half_spin(), 2),
            ModuleSpec::tensor(ModuleSpec::half_spin(), ModuleSpec::half_spin()),
            ModuleSpec::sym(ModuleSpec::Std, 4),
        ],
        3 => vec![
            ModuleSpec::sym(ModuleSpec::lambda(ModuleSpec::half_spin(), 2), 2),
            ModuleSpec::sym(ModuleSpec::Std, 4),
            ModuleSpec::tensor(ModuleSpec::half_spin(), ModuleSpec::lambda(ModuleSpec::half_spin(), 3)),
        ],
        _ => vec![],
    }
}

/// Casimir projection against the brute-force generator kernel on every
/// oracle module of rank `n`.
pub fn oracle_items(n: usize) -> Result<Vec<TierItem>, RepError> {
    let cases = oracle_cases(n);
    if cases.is_empty() {
        return Err(RepError::BadRank(n));
    }
    let rs = RootSystemD::new(n)?;
    let mut items = Vec::new();
    for spec in cases {
        let m = build_module(&rs, &spec)?;
        let projected = projected_invariants(&rs, &m)?;
        let kernel = generator_kernel(&m);
        let same = projected.nrows() == kernel.nrows()
            && kernel.row_space_contains(&projected)
            && projected.row_space_contains(&kernel);
        items.push(TierItem {
            name: format!("n={n} {spec}: projected invariants = generator kernel"),
            expected: kernel.nrows().to_string(),
            observed: Some(projected.nrows().to_string()),
            status: if same { "pass" } else { "fail" }.into(),
        });
    }
    Ok(items)
}

/// Small-rank oracle suite plus a highest-weight eigenvector check.
pub fn run_toy_tier() -> Result<TierReport, RepError> {
    let mut items = oracle_items(2)?;
    items.extend(oracle_items(3)?);
    let rs = RootSystemD::new(3)?;
    let m = build_module(&rs, &ModuleSpec::sym(ModuleSpec::lambda(ModuleSpec::half_spin(), 2), 2))?;
    let mu = Weight::from_eps(&[2, 0, 0]);
    let k = rs.casimir_scalar(&mu)?;
    let v = highest_weight_in_weightspace(&rs, &m, &mu, &k)?;
    let ok = m.is_highest_weight_vector(&rs, &v) && casimir_apply(&m, &v) == v.iter().map(|x| x * &k).collect::<Vec<_>>();
    items.push(TierItem {
        name: "n=3 Sym^2(Lambda^2 S+) highest-weight vector of weight 2w1".into(),
        expected: fmt_rat(&k),
        observed: Some(if ok { fmt_rat(&k) } else { "not an eigenvector".into() }),
        status: if ok { "pass" } else { "fail" }.into(),
    });
    Ok(TierReport { tier: "toy".into(), items })
}

/// Parses stored coefficients back into rationals.
pub fn parse_coefficients(inv: &PairingInvariant) -> Result<Vec<(usize, usize, BigRational)>, RepError> {
    inv.coefficients
        .iter()
        .map(|(i, j, c)| parse_rat(c).map(|x| (*i, *j, x)).map_err(|e| RepError::Checkpoint(e.to_string())))
        .collect()
}

