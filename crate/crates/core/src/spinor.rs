//! The hyperbolic quadratic space `V = U_0 + U_inf`, its Clifford algebra,
//! half spinors of Lagrangians, the ten quadrics cutting out OG(5,10), and
//! spin lifts of the balanced ribbon's symmetries.
//!
//! Vectors of `V` use the ordered basis `e_{-1}..e_{-n}, e_1..e_n`, with
//! `B(e_i, e_{-i}) = 1` and every other pairing of basis vectors zero, so
//! `Q(v) = sum_i v_i v_{-i}`. Spinors live in `Lambda U_inf`, where `e_{-i}`
//! acts by contraction with `e_i` and `e_i` by left wedging.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactmath::{int, rat, rat_vec_string, BigRational, MathError, RatMatrix};
use crate::polyring::{parse_poly, MPoly, PolyError, Symbols};

/// Rank of the quadratic space used throughout the geometric modules.
pub const RANK: usize = 5;
/// Dimension of `S+` for rank five.
pub const SPINOR_DIM: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpinorError {
    #[error("U meets U_inf: the block on e_-i coordinates is singular")]
    BadTransversality,
    #[error("subspace is not a 5-dimensional isotropic subspace")]
    NotIsotropic,
    #[error("Clifford element has odd-degree terms")]
    OddElement,
    #[error("annihilator of the Lagrangian has dimension {0}, expected 1")]
    KernelDimension(usize),
    #[error(transparent)]
    Math(#[from] MathError),
}

/// Subsets of `{1..n}` as bitmasks (bit `i-1` for element `i`).
pub type Subset = u32;

pub fn subset_elements(s: Subset) -> Vec<usize> {
    (0..32).filter(|b| s >> b & 1 == 1).map(|b| b + 1).collect()
}

pub fn subset_from(elements: &[usize]) -> Subset {
    elements.iter().fold(0, |acc, &i| acc | 1 << (i - 1))
}

/// Subsets of `{1..n}` of the given parity, ordered by size then
/// lexicographically. For `n = 5` and even parity this is
/// `1, e12, e13, e14, e15, e23, e24, e25, e34, e35, e45, e1234, e1235, e1245, e1345, e2345`.
pub fn ordered_subsets(n: usize, even: bool) -> Vec<Subset> {
    let mut v: Vec<Subset> = (0..1u32 << n).filter(|s| (s.count_ones() % 2 == 0) == even).collect();
    v.sort_by_key(|&s| (s.count_ones(), subset_elements(s)));
    v
}

/// Canonical `S+` basis for rank five.
pub fn spinor_basis() -> Vec<Subset> {
    ordered_subsets(RANK, true)
}

/// Label such as `"1"`, `"e13"` or `"e2345"`.
pub fn subset_label(s: Subset) -> String {
    if s == 0 {
        "1".to_string()
    } else {
        format!("e{}", subset_elements(s).iter().map(|i| i.to_string()).collect::<String>())
    }
}

/// Coordinate name `x0`, `x13`, `x2345`, ... as used for the OG equations.
pub fn coordinate_name(s: Subset) -> String {
    if s == 0 {
        "x0".to_string()
    } else {
        format!("x{}", subset_elements(s).iter().map(|i| i.to_string()).collect::<String>())
    }
}

/// Index of a coordinate name in the canonical `S+` order.
pub fn coordinate_index(name: &str) -> Option<usize> {
    let digits = name.strip_prefix('x')?;
    let s = if digits == "0" {
        0
    } else {
        let elems: Option<Vec<usize>> = digits.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect();
        let elems = elems?;
        if elems.iter().any(|&e| e == 0 || e > RANK) || elems.windows(2).any(|w| w[0] >= w[1]) {
            return None;
        }
        subset_from(&elems)
    };
    spinor_basis().iter().position(|&b| b == s)
}

fn sign_before(s: Subset, i: usize) -> bool {
    // parity of the number of elements of s smaller than i
    (s & ((1u32 << (i - 1)) - 1)).count_ones() % 2 == 1
}

/// `e_i ^ e_S` as (sign-negative?, subset); `None` when `i` is in `S`.
pub fn wedge_basis(i: usize, s: Subset) -> Option<(bool, Subset)> {
    let bit = 1u32 << (i - 1);
    if s & bit != 0 {
        None
    } else {
        Some((sign_before(s, i), s | bit))
    }
}

/// Contraction of `e_S` by `e_i`; `None` when `i` is not in `S`.
pub fn contract_basis(i: usize, s: Subset) -> Option<(bool, Subset)> {
    let bit = 1u32 << (i - 1);
    if s & bit == 0 {
        None
    } else {
        Some((sign_before(s, i), s & !bit))
    }
}

/// Element of the full exterior algebra `Lambda U_inf`, indexed by subset mask.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExtVec {
    pub n: usize,
    pub coeffs: Vec<BigRational>,
}

impl ExtVec {
    pub fn zero(n: usize) -> Self {
        ExtVec { n, coeffs: vec![BigRational::zero(); 1 << n] }
    }

    pub fn basis(n: usize, s: Subset) -> Self {
        let mut v = Self::zero(n);
        v.coeffs[s as usize] = BigRational::one();
        v
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        ExtVec { n: self.n, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn add(&self, o: &ExtVec) -> Self {
        ExtVec { n: self.n, coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect() }
    }
}

/// Action of the basis vector with label `label` (0..n-1 are `e_{-1}..e_{-n}`,
/// n..2n-1 are `e_1..e_n`) on `Lambda U_inf`.
pub fn phi_generator(n: usize, label: usize, s: &ExtVec) -> ExtVec {
    let mut out = ExtVec::zero(n);
    for (mask, c) in s.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mask = mask as Subset;
        let img = if label < n { contract_basis(label + 1, mask) } else { wedge_basis(label - n + 1, mask) };
        if let Some((neg, t)) = img {
            if neg {
                out.coeffs[t as usize] -= c;
            } else {
                out.coeffs[t as usize] += c;
            }
        }
    }
    out
}

/// `phi_v(s)` for `v` in coordinates `e_{-1}..e_{-n}, e_1..e_n`.
pub fn phi_action(v: &[BigRational], s: &ExtVec) -> ExtVec {
    let n = s.n;
    assert_eq!(v.len(), 2 * n, "vector length must be 2n");
    let mut out = ExtVec::zero(n);
    for (label, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        out = out.add(&phi_generator(n, label, s).scale(c));
    }
    out
}

/// Matrix of `phi_v` on `Lambda U_inf` in mask order.
pub fn phi_matrix(v: &[BigRational], n: usize) -> RatMatrix {
    let dim = 1usize << n;
    let mut m = RatMatrix::zeros(dim, dim);
    for col in 0..dim {
        let img = phi_action(v, &ExtVec::basis(n, col as Subset));
        for (row, c) in img.coeffs.into_iter().enumerate() {
            if !c.is_zero() {
                m.set(row, col, c);
            }
        }
    }
    m
}

/// Gram matrix of `B` on the ordered basis.
pub fn gram(n: usize) -> RatMatrix {
    let mut g = RatMatrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        g.set(i, i + n, BigRational::one());
        g.set(i + n, i, BigRational::one());
    }
    g
}

pub fn bilinear(v: &[BigRational], w: &[BigRational]) -> BigRational {
    let n = v.len() / 2;
    (0..n).map(|i| &v[i] * &w[i + n] + &v[i + n] * &w[i]).sum()
}

pub fn quadratic(v: &[BigRational]) -> BigRational {
    let n = v.len() / 2;
    (0..n).map(|i| &v[i] * &v[i + n]).sum()
}

/// A subspace of `V` given by spanning rows (5 x 10 for rank five).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lagrangian(pub RatMatrix);

impl Lagrangian {
    pub fn rank(&self) -> usize {
        self.0.rank()
    }

    /// True when `B` vanishes on every pair of rows.
    pub fn is_isotropic(&self) -> bool {
        let m = &self.0;
        (0..m.nrows()).all(|i| (i..m.nrows()).all(|j| bilinear(m.row(i), m.row(j)).is_zero()))
    }

    /// The rank is half the ambient dimension and the rows are isotropic.
    pub fn is_lagrangian(&self) -> bool {
        self.0.ncols() % 2 == 0 && self.rank() == self.0.ncols() / 2 && self.is_isotropic()
    }

    pub fn u0(n: usize) -> Self {
        let mut m = RatMatrix::zeros(n, 2 * n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        Lagrangian(m)
    }

    pub fn u_inf(n: usize) -> Self {
        let mut m = RatMatrix::zeros(n, 2 * n);
        for i in 0..n {
            m.set(i, i + n, BigRational::one());
        }
        Lagrangian(m)
    }

    /// The Lagrangian spanned by `e_{-i} - sum_j a_ij e_j` for a skew `a`.
    pub fn from_skew(a: &RatMatrix) -> Self {
        let n = a.nrows();
        let mut m = RatMatrix::zeros(n, 2 * n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
            for j in 0..n {
                m.set(i, n + j, -a.get(i, j).clone());
            }
        }
        Lagrangian(m)
    }
}

/// Half-spinor coordinates `x_I` in the canonical `S+` order.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SpinorPlus(#[serde(with = "rat_vec_string")] pub Vec<BigRational>);

impl fmt::Debug for SpinorPlus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(crate::exactmath::fmt_rat).collect();
        write!(f, "[{}]", parts.join(" : "))
    }
}

impl SpinorPlus {
    pub fn unit() -> Self {
        let mut v = vec![BigRational::zero(); SPINOR_DIM];
        v[0] = BigRational::one();
        SpinorPlus(v)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale_by(&self, c: &BigRational) -> SpinorPlus {
        SpinorPlus(self.0.iter().map(|x| x * c).collect())
    }

    /// First nonzero coordinate scaled to one.
    pub fn normalized(&self) -> SpinorPlus {
        SpinorPlus(crate::exactmath::normalize_projective(&self.0))
    }

    pub fn projectively_eq(&self, other: &SpinorPlus) -> bool {
        !self.is_zero() && self.normalized() == other.normalized()
    }

    pub fn to_ext(&self) -> ExtVec {
        let mut e = ExtVec::zero(RANK);
        for (c, s) in self.0.iter().zip(spinor_basis()) {
            e.coeffs[s as usize] = c.clone();
        }
        e
    }

    /// Even part of an exterior-algebra vector in canonical order.
    pub fn from_ext(e: &ExtVec) -> SpinorPlus {
        SpinorPlus(spinor_basis().into_iter().map(|s| e.coeffs[s as usize].clone()).collect())
    }
}

/// Half spinor via Pfaffians: normalises `U` to rows `e_{-i} - sum_j a_ij e_j`
/// and returns `x_I = Pf(A_I)` (with `x_0 = 1`).
pub fn half_spinor_pfaffian(u: &Lagrangian) -> Result<SpinorPlus, SpinorError> {
    let m = &u.0;
    let n = m.nrows();
    if m.ncols() != 2 * n {
        return Err(SpinorError::NotIsotropic);
    }
    let left: Vec<usize> = (0..n).collect();
    let right: Vec<usize> = (n..2 * n).collect();
    let l = m.select_columns(&left);
    let r = m.select_columns(&right);
    let linv = l.inverse().map_err(|_| SpinorError::BadTransversality)?;
    let a = linv.mul(&r)?.scale(&int(-1));
    if !a.is_skew() {
        return Err(SpinorError::NotIsotropic);
    }
    let coords = ordered_subsets(n, true)
        .into_iter()
        .map(|s| {
            let idx: Vec<usize> = subset_elements(s).into_iter().map(|i| i - 1).collect();
            a.submatrix(&idx, &idx).pfaffian()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SpinorPlus(coords))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

/// Output of the kernel method: parity plus coordinates over the subsets of
/// that parity (canonical order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfSpinor {
    pub parity: Parity,
    pub coords: Vec<BigRational>,
}

impl HalfSpinor {
    pub fn as_plus(&self) -> Option<SpinorPlus> {
        (self.parity == Parity::Even && self.coords.len() == SPINOR_DIM).then(|| SpinorPlus(self.coords.clone()))
    }
}

/// Half spinor as the common kernel of `phi_u` over the rows `u` of `U`.
pub fn half_spinor_kernel(u: &Lagrangian) -> Result<HalfSpinor, SpinorError> {
    if !u.is_lagrangian() {
        return Err(SpinorError::NotIsotropic);
    }
    let n = u.0.ncols() / 2;
    let mut stacked = RatMatrix::zeros(0, 1 << n);
    for r in 0..u.0.nrows() {
        stacked = stacked.vstack(&phi_matrix(u.0.row(r), n))?;
    }
    let ker = stacked.kernel_basis();
    if ker.nrows() != 1 {
        return Err(SpinorError::KernelDimension(ker.nrows()));
    }
    let v = ker.row(0);
    let even_nonzero = (0..1usize << n).any(|s| (s as u32).count_ones() % 2 == 0 && !v[s].is_zero());
    let parity = if even_nonzero { Parity::Even } else { Parity::Odd };
    let coords: Vec<BigRational> = ordered_subsets(n, parity == Parity::Even)
        .into_iter()
        .map(|s| v[s as usize].clone())
        .collect();
    Ok(HalfSpinor { parity, coords: crate::exactmath::normalize_projective(&coords) })
}

/// Half spinor by whichever method applies: Pfaffians when `U` is transverse
/// to `U_inf`, otherwise the kernel method.
pub fn half_spinor(u: &Lagrangian) -> Result<HalfSpinor, SpinorError> {
    match half_spinor_pfaffian(u) {
        Ok(s) => Ok(HalfSpinor { parity: Parity::Even, coords: s.0 }),
        Err(SpinorError::BadTransversality) => half_spinor_kernel(u),
        Err(e) => Err(e),
    }
}

const OG_QUADRICS: [&str; 10] = [
    "x0*x2345 - x23*x45 + x24*x35 - x25*x34",
    "x12*x1345 - x13*x1245 + x14*x1235 - x15*x1234",
    "x0*x1345 - x13*x45 + x14*x35 - x15*x34",
    "x12*x2345 - x23*x1245 + x24*x1235 - x25*x1234",
    "x0*x1245 - x12*x45 + x14*x25 - x15*x24",
    "x13*x2345 - x23*x1345 + x34*x1235 - x35*x1234",
    "x0*x1235 - x12*x35 + x13*x25 - x15*x23",
    "x14*x2345 - x24*x1345 + x34*x1245 - x45*x1234",
    "x0*x1234 - x12*x34 + x13*x24 - x14*x23",
    "x15*x2345 - x25*x1345 + x35*x1245 - x45*x1235",
];

/// Parses a polynomial in the spinor coordinates `x0, x12, ..., x2345`,
/// with named scalar constants (e.g. `t0`, `t1`).
pub fn parse_x_poly(src: &str, constants: &[(&str, BigRational)]) -> Result<MPoly, PolyError> {
    let syms = Symbols {
        vars: &coordinate_index,
        nvars: SPINOR_DIM,
        constants: constants.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
    };
    parse_poly(src, &syms)
}

/// The ten quadrics defining OG(5,10) in `P(S+)`.
pub fn og_quadrics() -> Vec<MPoly> {
    OG_QUADRICS.iter().map(|s| parse_x_poly(s, &[]).expect("OG quadric table parses")).collect()
}

pub fn on_og(s: &SpinorPlus) -> bool {
    og_quadrics().iter().all(|q| q.eval(&s.0).map(|v| v.is_zero()).unwrap_or(false))
}

/// Element of the Clifford algebra `C(Q)` on `2n` generators, keyed by the
/// bitmask of generator labels (ordered `e_{-1} < .. < e_{-n} < e_1 < .. < e_n`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CliffordElt {
    pub n: usize,
    pub terms: BTreeMap<u32, BigRational>,
}

impl CliffordElt {
    pub fn zero(n: usize) -> Self {
        CliffordElt { n, terms: BTreeMap::new() }
    }

    pub fn scalar(n: usize, c: BigRational) -> Self {
        let mut e = Self::zero(n);
        e.add_term(0, c);
        e
    }

    /// Vector `v` of `V` embedded in degree one.
    pub fn vector(v: &[BigRational]) -> Self {
        let n = v.len() / 2;
        let mut e = Self::zero(n);
        for (label, c) in v.iter().enumerate() {
            e.add_term(1 << label, c.clone());
        }
        e
    }

    /// `e_{-i}` for `i` in `1..=n`.
    pub fn e_neg(n: usize, i: usize) -> Self {
        let mut e = Self::zero(n);
        e.add_term(1 << (i - 1), BigRational::one());
        e
    }

    /// `e_i` for `i` in `1..=n`.
    pub fn e_pos(n: usize, i: usize) -> Self {
        let mut e = Self::zero(n);
        e.add_term(1 << (n + i - 1), BigRational::one());
        e
    }

    pub fn add_term(&mut self, word: u32, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(word).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&word);
        }
    }

    pub fn add(&self, other: &CliffordElt) -> CliffordElt {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(*w, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> CliffordElt {
        let mut out = CliffordElt::zero(self.n);
        for (w, x) in &self.terms {
            out.add_term(*w, x * c);
        }
        out
    }

    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|w| w.count_ones() % 2 == 0)
    }

    /// Clifford product with straightening by `vw + wv = B(v,w)`.
    pub fn mul(&self, other: &CliffordElt) -> CliffordElt {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = CliffordElt::zero(n);
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                let mut acc: BTreeMap<u32, BigRational> = BTreeMap::new();
                acc.insert(*wa, ca * cb);
                for g in (0..2 * n).filter(|g| wb >> g & 1 == 1) {
                    let mut next: BTreeMap<u32, BigRational> = BTreeMap::new();
                    for (w, c) in acc {
                        for (w2, c2) in word_times_generator(n, w, g) {
                            let e = next.entry(w2).or_insert_with(BigRational::zero);
                            *e += &c * &c2;
                        }
                    }
                    next.retain(|_, c| !c.is_zero());
                    acc = next;
                }
                for (w, c) in acc {
                    out.add_term(w, c);
                }
            }
        }
        out
    }

    /// Product of a list of elements, left to right.
    pub fn product(factors: &[CliffordElt]) -> CliffordElt {
        let n = factors.first().map_or(RANK, |f| f.n);
        factors.iter().fold(CliffordElt::scalar(n, BigRational::one()), |acc, f| acc.mul(f))
    }
}

fn pairing_of_labels(n: usize, a: usize, b: usize) -> i64 {
    if a.abs_diff(b) == n {
        1
    } else {
        0
    }
}

/// The sorted word `w` times generator `g` on the right, straightened.
fn word_times_generator(n: usize, w: u32, g: usize) -> Vec<(u32, BigRational)> {
    let Some(last) = (0..2 * n).rev().find(|b| w >> b & 1 == 1) else {
        return vec![(1 << g, BigRational::one())];
    };
    if g > last {
        return vec![(w | 1 << g, BigRational::one())];
    }
    if g == last {
        // every basis vector is isotropic
        return Vec::new();
    }
    // w = w' * e_last, and e_last * e_g = -e_g * e_last + B(e_last, e_g)
    let prefix = w & !(1 << last);
    let mut out = Vec::new();
    for (w2, c) in word_times_generator(n, prefix, g) {
        // w2 only contains labels below `last`
        out.push((w2 | 1 << last, -c));
    }
    let b = pairing_of_labels(n, last, g);
    if b != 0 {
        out.push((prefix, int(b)));
    }
    out
}

/// Action of an even Clifford element on `S+`.
pub fn spin_action(a: &CliffordElt, s: &SpinorPlus) -> Result<SpinorPlus, SpinorError> {
    if !a.is_even() {
        return Err(SpinorError::OddElement);
    }
    let ext = s.to_ext();
    Ok(SpinorPlus::from_ext(&clifford_on_ext(a, &ext)))
}

/// Action of any Clifford element on `Lambda U_inf` through `phi`.
pub fn clifford_on_ext(a: &CliffordElt, s: &ExtVec) -> ExtVec {
    let n = a.n;
    let mut out = ExtVec::zero(n);
    for (w, c) in &a.terms {
        let mut v = s.clone();
        for g in (0..2 * n).rev().filter(|g| w >> g & 1 == 1) {
            v = phi_generator(n, g, &v);
        }
        out = out.add(&v.scale(c));
    }
    out
}

/// Lift of the ribbon's `G_m` action at parameter `t`:
/// `sign * t^5 * prod_{j=1..4} (e_{-j} + e_j)(e_{-j} + t^{j-5} e_j)`.
pub fn gm_lift(t: &BigRational, sign: i64) -> CliffordElt {
    let n = RANK;
    let mut factors = Vec::new();
    for j in 1..=4 {
        factors.push(CliffordElt::e_neg(n, j).add(&CliffordElt::e_pos(n, j)));
        let s = num_traits::pow(t.recip(), 5 - j);
        factors.push(CliffordElt::e_neg(n, j).add(&CliffordElt::e_pos(n, j).scale(&s)));
    }
    CliffordElt::product(&factors).scale(&(num_traits::pow(t.clone(), 5) * int(sign)))
}

/// Lift of the ribbon's involution:
/// `sign * 2 (e_{-4}+e_4)(e_{-3}-1/2 e_3)(e_{-2}+e_2)(e_{-1}-1/2 e_1)`.
pub fn involution_lift(sign: i64) -> CliffordElt {
    let n = RANK;
    let f = |j: usize, c: BigRational| CliffordElt::e_neg(n, j).add(&CliffordElt::e_pos(n, j).scale(&c));
    let factors = [f(4, int(1)), f(3, rat(-1, 2)), f(2, int(1)), f(1, rat(-1, 2))];
    CliffordElt::product(&factors).scale(&int(2 * sign))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<BigRational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn canonical_order_matches_labels() {
        let labels: Vec<String> = spinor_basis().into_iter().map(subset_label).collect();
        assert_eq!(
            labels,
            [
                "1", "e12", "e13", "e14", "e15", "e23", "e24", "e25", "e34", "e35", "e45", "e1234", "e1235",
                "e1245", "e1345", "e2345"
            ]
        );
        assert_eq!(coordinate_index("x0"), Some(0));
        assert_eq!(coordinate_index("x2345"), Some(15));
        assert_eq!(coordinate_index("x21"), None);
    }

    #[test]
    fn phi_wedge_and_contraction() {
        let one = ExtVec::basis(5, 0);
        let e1 = phi_action(&v(&[0, 0, 0, 0, 0, 1, 0, 0, 0, 0]), &one);
        assert_eq!(e1, ExtVec::basis(5, subset_from(&[1])));
        let e12 = ExtVec::basis(5, subset_from(&[1, 2]));
        let c = phi_action(&v(&[1, 0, 0, 0, 0, 0, 0, 0, 0, 0]), &e12);
        assert_eq!(c, ExtVec::basis(5, subset_from(&[2])));
    }

    #[test]
    fn clifford_relations() {
        let e1 = CliffordElt::e_pos(5, 1);
        let em1 = CliffordElt::e_neg(5, 1);
        assert_eq!(e1.mul(&e1), CliffordElt::zero(5));
        let anti = e1.mul(&em1).add(&em1.mul(&e1));
        assert_eq!(anti, CliffordElt::scalar(5, int(1)));
        let s = em1.add(&e1);
        assert_eq!(s.mul(&s), CliffordElt::scalar(5, int(1)));
    }

    #[test]
    fn trivial_lagrangians() {
        let s = half_spinor_pfaffian(&Lagrangian::u0(5)).unwrap();
        assert_eq!(s, SpinorPlus::unit());
        let k = half_spinor_kernel(&Lagrangian::u0(5)).unwrap();
        assert_eq!(k.as_plus().unwrap(), SpinorPlus::unit());
        let inf = half_spinor_kernel(&Lagrangian::u_inf(5)).unwrap();
        assert_eq!(inf.parity, Parity::Odd);
        assert_eq!(
            half_spinor_pfaffian(&Lagrangian::u_inf(5)),
            Err(SpinorError::BadTransversality)
        );
    }

    #[test]
    fn non_isotropic_rejected() {
        let mut a = RatMatrix::zeros(5, 5);
        a.set(0, 1, int(1));
        a.set(1, 0, int(1));
        assert_eq!(half_spinor_pfaffian(&Lagrangian::from_skew(&a)), Err(SpinorError::NotIsotropic));
        assert_eq!(half_spinor_kernel(&Lagrangian::from_skew(&a)), Err(SpinorError::NotIsotropic));
    }

    #[test]
    fn og_quadrics_at_unit_and_all_ones() {
        let qs = og_quadrics();
        assert_eq!(qs.len(), 10);
        assert!(on_og(&SpinorPlus::unit()));
        let mut off = vec![int(0); 16];
        off[0] = int(1);
        off[15] = int(1);
        assert!(!qs[0].eval(&off).unwrap().is_zero());
    }

    #[test]
    fn odd_elements_rejected_by_spin_action() {
        let e1 = CliffordElt::e_pos(5, 1);
        assert_eq!(spin_action(&e1, &SpinorPlus::unit()), Err(SpinorError::OddElement));
        let id = CliffordElt::scalar(5, int(1));
        let s = SpinorPlus((0..16).map(int).collect());
        assert_eq!(spin_action(&id, &s).unwrap(), s);
    }
}
