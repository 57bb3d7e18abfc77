//! Type `D_n` root systems and representation machinery: Weyl dimensions,
//! Freudenthal multiplicities, character decomposition, invariant counting
//! by lattice convolution, and explicit modules with Chevalley generators
//! and the Casimir operator.
//!
//! Weights are stored as twice their `eps`-coordinates so that half-spin
//! weights are integral. The invariant form is `(eps_i, eps_j) = delta_ij`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactmath::{fmt_rat, BigRational};

pub mod module;
pub mod quad;
pub mod tier;

pub use module::*;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("weight {0} is not dominant")]
    NotDominant(Weight),
    #[error("character is not Weyl symmetric at {0}")]
    NotWeylSymmetric(Weight),
    #[error("negative multiplicity at {0} during decomposition")]
    NegativeMultiplicity(Weight),
    #[error("modules have ranks {0} and {1}")]
    InconsistentRank(usize, usize),
    #[error("projection is not annihilated by the generators; the spectrum is incomplete")]
    SpectrumIncomplete,
    #[error("eigenvalue {0} does not occur on the highest-weight vectors of this weight space")]
    EigenvalueAbsent(String),
    #[error("rank must be at least 2, got {0}")]
    BadRank(usize),
    #[error("module is not integral: {0}")]
    NonIntegral(String),
    #[error("lowering basis has {0} vectors, expected {1}")]
    BasisSize(usize, String),
    #[error("integer coefficient overflow")]
    Overflow,
    #[error("checkpoint error: {0}")]
    Checkpoint(String),
}

/// A weight as twice its `eps`-coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Weight(pub Vec<i32>);

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = self.0.iter().map(|&x| fmt_rat(&BigRational::new(x.into(), 2.into())));
        write!(f, "({})", parts.format(","))
    }
}

impl Weight {
    pub fn zero(n: usize) -> Self {
        Weight(vec![0; n])
    }

    /// From integral `eps`-coordinates.
    pub fn from_eps(v: &[i32]) -> Self {
        Weight(v.iter().map(|x| 2 * x).collect())
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn add(&self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }

    /// Adds `k` times a root given in `eps`-coordinates.
    pub fn add_root(&self, root: &[i32], k: i32) -> Weight {
        Weight(self.0.iter().zip(root).map(|(a, r)| a + 2 * k * r).collect())
    }

    /// `4 (self, o)`.
    pub fn dot4(&self, o: &Weight) -> i64 {
        self.0.iter().zip(&o.0).map(|(&a, &b)| a as i64 * b as i64).sum()
    }

    /// `2 (self, root)` for a root in `eps`-coordinates.
    pub fn pair2(&self, root: &[i32]) -> i64 {
        self.0.iter().zip(root).map(|(&a, &r)| a as i64 * r as i64).sum()
    }

    /// `eps`-coordinates as exact rationals.
    pub fn eps(&self) -> Vec<BigRational> {
        self.0.iter().map(|&x| BigRational::new(x.into(), 2.into())).collect()
    }

    /// Divides by `k` when the result is again a weight vector of integers.
    fn div_exact(&self, k: i32) -> Option<Weight> {
        self.0.iter().all(|x| x % k == 0).then(|| Weight(self.0.iter().map(|x| x / k).collect()))
    }
}

/// Element of the Weyl group: `(w x)_i = sign_i * x_{perm_i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    pub perm: Vec<usize>,
    pub negate: Vec<bool>,
    pub sign: i64,
}

impl WeylElement {
    pub fn act(&self, w: &Weight) -> Weight {
        Weight(self.perm.iter().zip(&self.negate).map(|(&p, &neg)| if neg { -w.0[p] } else { w.0[p] }).collect())
    }
}

fn permutation_sign(p: &[usize]) -> i64 {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Root system of type `D_n` in `eps`-coordinates.
#[derive(Clone, Debug)]
pub struct RootSystemD {
    pub n: usize,
    /// `alpha_i = eps_i - eps_{i+1}` for `i < n`, `alpha_n = eps_{n-1} + eps_n`.
    pub simple: Vec<Vec<i32>>,
    /// `eps_i - eps_j` and `eps_i + eps_j` for `i < j`.
    pub positive: Vec<Vec<i32>>,
    pub rho: Weight,
}

impl RootSystemD {
    pub fn new(n: usize) -> Result<Self, RepError> {
        if n < 2 {
            return Err(RepError::BadRank(n));
        }
        let unit = |i: usize, s: i32, j: usize, t: i32| {
            let mut v = vec![0; n];
            v[i] += s;
            v[j] += t;
            v
        };
        let mut simple: Vec<Vec<i32>> = (0..n - 1).map(|i| unit(i, 1, i + 1, -1)).collect();
        simple.push(unit(n - 2, 1, n - 1, 1));
        let mut positive = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                positive.push(unit(i, 1, j, -1));
                positive.push(unit(i, 1, j, 1));
            }
        }
        let rho = Weight((0..n).map(|i| 2 * (n - 1 - i) as i32).collect());
        Ok(RootSystemD { n, simple, positive, rho })
    }

    pub fn weyl_order(&self) -> u64 {
        (1u64 << (self.n - 1)) * (1..=self.n as u64).product::<u64>()
    }

    /// Index of simple root `i` in `positive`.
    pub fn simple_index(&self, i: usize) -> usize {
        self.positive.iter().position(|r| *r == self.simple[i]).expect("simple roots are positive")
    }

    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        self.simple[i].iter().zip(&self.simple[j]).map(|(a, b)| (a * b) as i64).sum()
    }

    pub fn weyl_group(&self) -> Vec<WeylElement> {
        let n = self.n;
        let mut out = Vec::new();
        for perm in (0..n).permutations(n) {
            let sign = permutation_sign(&perm);
            for bits in 0u32..(1 << n) {
                if bits.count_ones() % 2 == 1 {
                    continue;
                }
                let negate = (0..n).map(|i| bits >> i & 1 == 1).collect();
                out.push(WeylElement { perm: perm.clone(), negate, sign });
            }
        }
        out
    }

    pub fn is_dominant(&self, w: &Weight) -> bool {
        let x = &w.0;
        (0..self.n - 1).all(|i| x[i] >= x[i + 1]) && x[self.n - 2] >= x[self.n - 1].abs()
    }

    /// The dominant element of the Weyl orbit.
    pub fn dominant_rep(&self, w: &Weight) -> Weight {
        let negatives = w.0.iter().filter(|&&x| x < 0).count();
        let mut v: Vec<i32> = w.0.iter().map(|x| x.abs()).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        if negatives % 2 == 1 {
            let last = v.len() - 1;
            v[last] = -v[last];
        }
        Weight(v)
    }

    /// `sum a_k omega_k` with `omega_k = eps_1 + .. + eps_k` for `k <= n-2`,
    /// `omega_{n-1} = (eps_1 + .. + eps_{n-1} - eps_n)/2`, `omega_n = (eps_1 + .. + eps_n)/2`.
    pub fn from_dynkin(&self, labels: &[i32]) -> Weight {
        let n = self.n;
        let mut w = vec![0; n];
        for (k, &a) in labels.iter().enumerate() {
            for (i, wi) in w.iter_mut().enumerate() {
                *wi += a * if k + 2 <= n - 1 {
                    if i <= k {
                        2
                    } else {
                        0
                    }
                } else if k == n - 2 {
                    if i == n - 1 {
                        -1
                    } else {
                        1
                    }
                } else {
                    1
                };
            }
        }
        Weight(w)
    }

    /// Dynkin labels `(lambda, alpha_i)`.
    pub fn to_dynkin(&self, w: &Weight) -> Vec<i64> {
        self.simple.iter().map(|a| w.pair2(a) / 2).collect()
    }

    pub fn height(&self, w: &Weight) -> i64 {
        w.dot4(&self.rho)
    }

    /// Weyl dimension formula.
    pub fn weyl_dim(&self, lambda: &Weight) -> Result<BigInt, RepError> {
        self.require_dominant(lambda)?;
        let lr = lambda.add(&self.rho);
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for a in &self.positive {
            num *= lr.pair2(a);
            den *= self.rho.pair2(a);
        }
        Ok(num / den)
    }

    /// `(lambda, lambda + 2 rho)`.
    pub fn casimir_scalar(&self, lambda: &Weight) -> Result<BigRational, RepError> {
        self.require_dominant(lambda)?;
        let two_rho = self.rho.add(&self.rho);
        Ok(BigRational::new(lambda.dot4(&lambda.add(&two_rho)).into(), 4.into()))
    }

    fn require_dominant(&self, w: &Weight) -> Result<(), RepError> {
        if self.is_dominant(w) {
            Ok(())
        } else {
            Err(RepError::NotDominant(w.clone()))
        }
    }

    /// Dominant weights of `V(lambda)`, by subtracting positive roots from
    /// dominant weights (every dominant `mu < lambda` is reached this way).
    pub fn dominant_weights(&self, lambda: &Weight) -> Result<Vec<Weight>, RepError> {
        self.require_dominant(lambda)?;
        let mut seen: BTreeSet<Weight> = BTreeSet::from([lambda.clone()]);
        let mut stack = vec![lambda.clone()];
        while let Some(mu) = stack.pop() {
            for a in &self.positive {
                let nu = mu.add_root(a, -1);
                if self.is_dominant(&nu) && seen.insert(nu.clone()) {
                    stack.push(nu);
                }
            }
        }
        let mut out: Vec<Weight> = seen.into_iter().collect();
        out.sort_by_key(|w| std::cmp::Reverse(self.height(w)));
        Ok(out)
    }

    /// Freudenthal multiplicities of the dominant weights of `V(lambda)`.
    pub fn dominant_multiplicities(&self, lambda: &Weight) -> Result<BTreeMap<Weight, u64>, RepError> {
        let dominant = self.dominant_weights(lambda)?;
        let lr = lambda.add(&self.rho);
        let top = lr.dot4(&lr);
        let bound = lambda.dot4(lambda);
        let mut mult: BTreeMap<Weight, u64> = BTreeMap::new();
        mult.insert(lambda.clone(), 1);
        for mu in dominant.iter().skip(1) {
            let mut num: i128 = 0;
            for a in &self.positive {
                let mut k = 1;
                loop {
                    let nu = mu.add_root(a, k);
                    if nu.dot4(&nu) > bound {
                        break;
                    }
                    if let Some(&m) = mult.get(&self.dominant_rep(&nu)) {
                        num += m as i128 * nu.pair2(a) as i128;
                    }
                    k += 1;
                }
            }
            let mr = mu.add(&self.rho);
            let den = (top - mr.dot4(&mr)) as i128;
            let num = 4 * num;
            assert!(den > 0 && num % den == 0, "Freudenthal recursion must divide exactly");
            let m = (num / den) as u64;
            if m > 0 {
                mult.insert(mu.clone(), m);
            }
        }
        Ok(mult)
    }

    /// Weyl orbit of a weight.
    pub fn orbit(&self, w: &Weight) -> Vec<Weight> {
        let mut seen = BTreeSet::new();
        let n = self.n;
        let abs: Vec<i32> = w.0.iter().map(|x| x.abs()).collect();
        let parity = w.0.iter().filter(|&&x| x < 0).count() % 2;
        let has_zero = abs.contains(&0);
        for perm in (0..n).permutations(n).unique_by(|p| p.iter().map(|&i| abs[i]).collect::<Vec<_>>()) {
            for bits in 0u32..(1 << n) {
                if !has_zero && bits.count_ones() as usize % 2 != parity {
                    continue;
                }
                let v: Vec<i32> = (0..n).map(|i| if bits >> i & 1 == 1 { -abs[perm[i]] } else { abs[perm[i]] }).collect();
                seen.insert(Weight(v));
            }
        }
        seen.into_iter().collect()
    }

    /// Full character of `V(lambda)`.
    pub fn weight_multiplicities(&self, lambda: &Weight) -> Result<Character, RepError> {
        let dom = self.dominant_multiplicities(lambda)?;
        let mut out = Character::new();
        for (mu, m) in dom {
            for w in self.orbit(&mu) {
                out.insert(w, m as i128);
            }
        }
        Ok(out)
    }

    /// Decomposes a Weyl-symmetric character into irreducibles by repeated
    /// extraction of a highest weight.
    pub fn decompose(&self, chi: &Character) -> Result<Vec<(Weight, u64)>, RepError> {
        let at = |w: &Weight| chi.get(w).copied().unwrap_or(0);
        for (w, m) in chi {
            if *m == 0 {
                continue;
            }
            if at(&self.dominant_rep(w)) != *m {
                return Err(RepError::NotWeylSymmetric(w.clone()));
            }
            if self.is_dominant(w) {
                if let Some(o) = self.orbit(w).into_iter().find(|o| at(o) != *m) {
                    return Err(RepError::NotWeylSymmetric(o));
                }
            }
        }
        let mut rest: Character = chi.iter().filter(|(_, m)| **m != 0).map(|(w, m)| (w.clone(), *m)).collect();
        let mut out: Vec<(Weight, u64)> = Vec::new();
        let mut rebuilt = Character::new();
        loop {
            let top = rest
                .iter()
                .filter(|(w, _)| self.is_dominant(w))
                .max_by(|(a, _), (b, _)| self.height(a).cmp(&self.height(b)).then_with(|| a.cmp(b)));
            let Some((lambda, &m)) = top else { break };
            if m < 0 {
                return Err(RepError::NegativeMultiplicity(lambda.clone()));
            }
            let lambda = lambda.clone();
            let irr = self.weight_multiplicities(&lambda)?;
            for (w, k) in &irr {
                let e = rest.entry(w.clone()).or_insert(0);
                *e -= m * k;
                if *e == 0 {
                    rest.remove(w);
                }
                *rebuilt.entry(w.clone()).or_insert(0) += m * k;
            }
            out.push((lambda, m as u64));
        }
        if let Some((w, _)) = rest.iter().next() {
            return Err(RepError::NegativeMultiplicity(w.clone()));
        }
        debug_assert_eq!(&rebuilt, &chi.iter().filter(|(_, m)| **m != 0).map(|(w, m)| (w.clone(), *m)).collect());
        out.sort_by(|a, b| b.0.cmp(&a.0));
        Ok(out)
    }

    /// Multiplicity of the trivial representation:
    /// `sum_w sign(w) chi(rho - w rho)`.
    pub fn trivial_multiplicity(&self, chi: impl Fn(&Weight) -> i128 + Sync) -> i128 {
        self.weyl_group()
            .par_iter()
            .map(|w| w.sign as i128 * chi(&self.rho.sub(&w.act(&self.rho))))
            .sum()
    }
}

/// Weight multiplicity function.
pub type Character = BTreeMap<Weight, i128>;

pub fn character_dim(chi: &Character) -> i128 {
    chi.values().sum()
}

/// Character of the `k`-th exterior power of a list of weights (with repetition).
pub fn wedge_character(weights: &[Weight], k: usize) -> Character {
    let mut out = Character::new();
    for c in (0..weights.len()).combinations(k) {
        let w = c.iter().fold(Weight::zero(weights[0].rank()), |acc, &i| acc.add(&weights[i]));
        *out.entry(w).or_insert(0) += 1;
    }
    out
}

/// Character of the `k`-th symmetric power of a list of weights.
pub fn sym_character(weights: &[Weight], k: usize) -> Character {
    let mut out = Character::new();
    for c in (0..weights.len()).combinations_with_replacement(k) {
        let w = c.iter().fold(Weight::zero(weights[0].rank()), |acc, &i| acc.add(&weights[i]));
        *out.entry(w).or_insert(0) += 1;
    }
    out
}

pub fn tensor_character(a: &Character, b: &Character) -> Character {
    let mut out = Character::new();
    for (wa, ma) in a {
        for (wb, mb) in b {
            *out.entry(wa.add(wb)).or_insert(0) += ma * mb;
        }
    }
    out
}

/// Character of `Sym^2` from a weight-multiplicity map.
pub fn sym2_character(chi: &Character) -> Character {
    let items: Vec<(&Weight, &i128)> = chi.iter().collect();
    let mut out = Character::new();
    for (i, (a, ma)) in items.iter().enumerate() {
        *out.entry(a.add(a)).or_insert(0) += **ma * (**ma + 1) / 2;
        for (b, mb) in &items[i + 1..] {
            *out.entry(a.add(b)).or_insert(0) += **ma * **mb;
        }
    }
    out
}

impl RootSystemD {
    /// Constituents `V(lambda)` of `chi` (with multiplicity) whose weights
    /// include the dominant weight `mu`. Only dominant multiplicities are
    /// used; constituents not above `mu` never reach it.
    pub fn constituents_through(&self, chi: &Character, mu: &Weight) -> Result<Vec<(Weight, u64)>, RepError> {
        self.require_dominant(mu)?;
        let mut rest: BTreeMap<Weight, i128> =
            chi.iter().filter(|(w, m)| **m != 0 && self.is_dominant(w)).map(|(w, m)| (w.clone(), *m)).collect();
        let mut out = Vec::new();
        while rest.get(mu).copied().unwrap_or(0) != 0 {
            let (lambda, m) = rest
                .iter()
                .filter(|(_, m)| **m != 0)
                .max_by(|(a, _), (b, _)| self.height(a).cmp(&self.height(b)).then_with(|| a.cmp(b)))
                .map(|(w, m)| (w.clone(), *m))
                .expect("mu has nonzero multiplicity");
            if m < 0 {
                return Err(RepError::NegativeMultiplicity(lambda));
            }
            let dm = self.dominant_multiplicities(&lambda)?;
            let reaches = dm.contains_key(mu);
            for (w, k) in dm {
                let e = rest.entry(w).or_insert(0);
                *e -= m * k as i128;
            }
            rest.retain(|_, m| *m != 0);
            if reaches {
                out.push((lambda, m as u64));
            }
        }
        Ok(out)
    }
}

/// Dense table of a character on a box of weights sharing one parity.
#[derive(Clone, Debug)]
pub struct DenseCharacter {
    n: usize,
    lo: i32,
    side: usize,
    data: Vec<i128>,
    support: Vec<(Weight, i128)>,
}

impl DenseCharacter {
    pub fn from_character(chi: &Character) -> Self {
        let support: Vec<(Weight, i128)> = chi.iter().filter(|(_, m)| **m != 0).map(|(w, m)| (w.clone(), *m)).collect();
        let n = support.first().map_or(1, |(w, _)| w.rank());
        let lo = support.iter().flat_map(|(w, _)| w.0.iter().copied()).min().unwrap_or(0);
        let hi = support.iter().flat_map(|(w, _)| w.0.iter().copied()).max().unwrap_or(0);
        assert!(
            support.iter().all(|(w, _)| w.0.iter().all(|x| (x - lo) % 2 == 0)),
            "all coordinates of a dense character must share one parity"
        );
        let side = ((hi - lo) / 2 + 1) as usize;
        let mut data = vec![0i128; side.pow(n as u32)];
        let mut out = DenseCharacter { n, lo, side, data: Vec::new(), support };
        for (w, m) in &out.support {
            data[out.index(w).expect("in range")] = *m;
        }
        out.data = data;
        out
    }

    fn index(&self, w: &Weight) -> Option<usize> {
        let mut idx = 0usize;
        for &x in w.0.iter().rev() {
            let d = x - self.lo;
            if d < 0 || d % 2 != 0 {
                return None;
            }
            let d = (d / 2) as usize;
            if d >= self.side {
                return None;
            }
            idx = idx * self.side + d;
        }
        Some(idx)
    }

    pub fn get(&self, w: &Weight) -> i128 {
        self.index(w).map_or(0, |i| self.data[i])
    }

    pub fn support(&self) -> &[(Weight, i128)] {
        &self.support
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// Self-convolution `chi * chi`.
    pub fn square(&self) -> DenseCharacter {
        let partial: Vec<Character> = self
            .support
            .par_chunks(256)
            .map(|chunk| {
                let mut acc: HashMap<Weight, i128> = HashMap::new();
                for (a, ma) in chunk {
                    for (b, mb) in &self.support {
                        *acc.entry(a.add(b)).or_insert(0) += ma * mb;
                    }
                }
                acc.into_iter().collect()
            })
            .collect();
        let mut total = Character::new();
        for p in partial {
            for (w, m) in p {
                *total.entry(w).or_insert(0) += m;
            }
        }
        DenseCharacter::from_character(&total)
    }

    /// `sum_nu self(nu) other(mu - nu)`.
    pub fn convolve_at(&self, other: &DenseCharacter, mu: &Weight) -> i128 {
        self.support.iter().map(|(nu, m)| m * other.get(&mu.sub(nu))).sum()
    }

    /// Adams operation: `psi^k chi (mu) = chi(mu / k)`.
    pub fn adams_at(&self, k: i32, mu: &Weight) -> i128 {
        mu.div_exact(k).map_or(0, |w| self.get(&w))
    }
}

/// Degree-two symmetric power character `(p1^2 + p2) / 2`.
pub fn sym2_dense(chi: &DenseCharacter) -> DenseCharacter {
    let sq = chi.square();
    let mut out = Character::new();
    for (w, m) in sq.support() {
        let v = m + chi.adams_at(2, w);
        assert!(v % 2 == 0);
        out.insert(w.clone(), v / 2);
    }
    DenseCharacter::from_character(&out)
}

/// Evaluates `Sym^4 chi` at `mu` through the cycle index
/// `(p1^4 + 6 p1^2 p2 + 3 p2^2 + 8 p1 p3 + 6 p4) / 24`; `sq` is `chi * chi`.
pub fn sym4_at(chi: &DenseCharacter, sq: &DenseCharacter, mu: &Weight) -> i128 {
    let p1_4 = sq.convolve_at(sq, mu);
    let p1_2_p2: i128 = chi.support().iter().map(|(w, m)| m * sq.get(&mu.sub(&w.add(w)))).sum();
    let p2_2 = sq.adams_at(2, mu);
    let p1_p3: i128 = chi.support().iter().map(|(w, m)| m * chi.get(&mu.sub(&w.add(w).add(w)))).sum();
    let p4 = chi.adams_at(4, mu);
    let total = p1_4 + 6 * p1_2_p2 + 3 * p2_2 + 8 * p1_p3 + 6 * p4;
    assert!(total % 24 == 0, "cycle index must divide exactly");
    total / 24
}

/// `C(d + 3, 4)`, the dimension of `Sym^4` of a `d`-dimensional space.
pub fn sym4_dimension(d: u64) -> BigInt {
    binomial(BigInt::from(d + 3), BigInt::from(4))
}

/// Torus and full invariant counts of a degree-four symmetric power.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sym4Counts {
    pub dimension: String,
    pub torus_invariants: String,
    pub invariants: String,
}

/// Weights of the rank-`n` half-spin module of the given parity
/// (`e_I` has weight `sum_{i in I} eps_i - (1/2) sum eps`).
pub fn half_spin_weights(n: usize, even: bool) -> Vec<Weight> {
    crate::spinor::ordered_subsets(n, even)
        .into_iter()
        .map(|s| Weight((0..n).map(|i| if s >> i & 1 == 1 { 1 } else { -1 }).collect()))
        .collect()
}

/// Weights of the standard module in the order `e_{-1}..e_{-n}, e_1..e_n`.
pub fn std_weights(n: usize) -> Vec<Weight> {
    let mut out = Vec::new();
    for s in [-2, 2] {
        for i in 0..n {
            let mut v = vec![0; n];
            v[i] = s;
            out.push(Weight(v));
        }
    }
    out
}

/// Counts for `Sym^4 (Lambda^7 S+)` in rank five.
pub fn invariant_count_sym4(rs: &RootSystemD) -> Sym4Counts {
    let base = half_spin_weights(rs.n, true);
    let chi = DenseCharacter::from_character(&wedge_character(&base, 7));
    let d = chi.support().iter().map(|(_, m)| *m).sum::<i128>().to_u64().expect("dimension fits");
    let sq = chi.square();
    let torus = sym4_at(&chi, &sq, &Weight::zero(rs.n));
    let inv = rs.trivial_multiplicity(|mu| sym4_at(&chi, &sq, mu));
    Sym4Counts { dimension: sym4_dimension(d).to_string(), torus_invariants: torus.to_string(), invariants: inv.to_string() }
}

/// Invariants in `Sym^2 V(a) (x) Sym^2 V(b)`.
pub fn sym2_tensor_invariants(rs: &RootSystemD, a: &Weight, b: &Weight) -> Result<i128, RepError> {
    let sa = sym2_dense(&DenseCharacter::from_character(&rs.weight_multiplicities(a)?));
    let sb = sym2_dense(&DenseCharacter::from_character(&rs.weight_multiplicities(b)?));
    Ok(rs.trivial_multiplicity(|mu| sa.convolve_at(&sb, mu)))
}

/// `dim (V (x) V)^T = sum_mu m(mu) m(-mu)`.
pub fn torus_pairing_dim(chi: &Character) -> i128 {
    chi.iter().map(|(w, m)| m * chi.get(&w.neg()).copied().unwrap_or(0)).sum()
}

pub fn rat_to_string(x: &BigRational) -> String {
    fmt_rat(x)
}

pub(crate) fn big_to_i64(x: &BigRational) -> Option<i64> {
    x.is_integer().then(|| x.to_integer().to_i64()).flatten()
}

pub(crate) fn is_zero_vec(v: &[BigRational]) -> bool {
    v.iter().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d5_basics() {
        let rs = RootSystemD::new(5).unwrap();
        assert_eq!(rs.positive.len(), 20);
        assert_eq!(rs.weyl_group().len() as u64, rs.weyl_order());
        assert_eq!(rs.weyl_order(), 1920);
        assert_eq!(rs.rho, Weight::from_eps(&[4, 3, 2, 1, 0]));
        assert_eq!(rs.cartan(2, 3), -1);
        assert_eq!(rs.cartan(2, 4), -1);
        assert_eq!(rs.cartan(3, 4), 0);
    }

    #[test]
    fn dynkin_round_trip() {
        let rs = RootSystemD::new(5).unwrap();
        let v1 = rs.from_dynkin(&[1, 0, 1, 0, 1]);
        assert_eq!(v1, Weight(vec![5, 3, 3, 1, 1]));
        assert_eq!(rs.from_dynkin(&[3, 0, 0, 1, 0]), Weight(vec![7, 1, 1, 1, -1]));
        assert_eq!(rs.to_dynkin(&v1), vec![1, 0, 1, 0, 1]);
    }

    #[test]
    fn small_dimensions() {
        let rs = RootSystemD::new(5).unwrap();
        assert_eq!(rs.weyl_dim(&Weight::zero(5)).unwrap(), BigInt::from(1));
        assert_eq!(rs.weyl_dim(&Weight(vec![1; 5])).unwrap(), BigInt::from(16));
        assert_eq!(rs.weyl_dim(&Weight::from_eps(&[1, 0, 0, 0, 0])).unwrap(), BigInt::from(10));
        assert!(matches!(rs.weyl_dim(&Weight::from_eps(&[0, 1, 0, 0, 0])), Err(RepError::NotDominant(_))));
    }

    #[test]
    fn std_squared_decomposes() {
        let rs = RootSystemD::new(5).unwrap();
        let d = rs.decompose(&sym_character(&std_weights(5), 2)).unwrap();
        assert_eq!(d, vec![(Weight::from_eps(&[2, 0, 0, 0, 0]), 1), (Weight::zero(5), 1)]);
    }
}
