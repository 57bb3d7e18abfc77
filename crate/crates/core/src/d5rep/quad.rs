//! Quadratic polynomials on a module: sparse elements of `Sym^2 M` in the
//! monomial basis `x_a x_b` (`a <= b`), the induced Lie algebra action, the
//! Casimir operator, and evaluation at a coordinate vector.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{RepError, SparseMat, WeightedModule};
use crate::exactmath::{BigRational, RatMatrix};

/// Sparse exact vector.
pub type SparseVec = BTreeMap<usize, BigRational>;

/// Quadratic form with rational monomial coefficients.
pub type Quad = BTreeMap<(u32, u32), BigRational>;

fn key(a: u32, b: u32) -> (u32, u32) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

pub fn apply_sparse(m: &SparseMat, v: &SparseVec) -> SparseVec {
    let mut out = SparseVec::new();
    for (&j, x) in v {
        for &(r, c) in &m.cols[j] {
            *out.entry(r as usize).or_insert_with(BigRational::zero) += x * BigRational::from_integer(c.into());
        }
    }
    out.retain(|_, x| !x.is_zero());
    out
}

/// Product of two linear forms.
pub fn quad_product(u: &SparseVec, v: &SparseVec) -> Quad {
    let mut out = Quad::new();
    for (a, x) in u {
        for (b, y) in v {
            *out.entry(key(*a as u32, *b as u32)).or_insert_with(BigRational::zero) += x * y;
        }
    }
    out.retain(|_, x| !x.is_zero());
    out
}

fn add_term(out: &mut Quad, k: (u32, u32), x: BigRational) {
    let e = out.entry(k).or_insert_with(BigRational::zero);
    *e += x;
}

/// Derivation action of `x` on a quadratic form.
pub fn quad_act(x: &SparseMat, q: &Quad) -> Quad {
    let mut out = Quad::new();
    for ((a, b), c) in q {
        for &(r, m) in &x.cols[*a as usize] {
            add_term(&mut out, key(r, *b), c * BigRational::from_integer(m.into()));
        }
        for &(r, m) in &x.cols[*b as usize] {
            add_term(&mut out, key(*a, r), c * BigRational::from_integer(m.into()));
        }
    }
    out.retain(|_, x| !x.is_zero());
    out
}

/// Four times the Casimir on `Sym^2 M`:
/// `4c(x_a x_b) = (4c x_a) x_b + x_a (4c x_b) + 2 (2mu_a, 2mu_b) x_a x_b
///  + 8 sum_alpha (E x_a F x_b + F x_a E x_b)`.
pub fn quad_casimir4(m: &WeightedModule, c4: &SparseMat, q: &Quad) -> Quad {
    let mut out = Quad::new();
    for ((a, b), c) in q {
        let (a, b) = (*a as usize, *b as usize);
        for &(r, x) in &c4.cols[a] {
            add_term(&mut out, key(r, b as u32), c * BigRational::from_integer(x.into()));
        }
        for &(r, x) in &c4.cols[b] {
            add_term(&mut out, key(a as u32, r), c * BigRational::from_integer(x.into()));
        }
        let cross = 2 * m.weights[a].dot4(&m.weights[b]);
        add_term(&mut out, key(a as u32, b as u32), c * BigRational::from_integer(cross.into()));
        for (e, f) in m.raising.iter().zip(&m.lowering) {
            for (g, h) in [(e, f), (f, e)] {
                for &(r, x) in &g.cols[a] {
                    for &(s, y) in &h.cols[b] {
                        add_term(&mut out, key(r, s), c * BigRational::from_integer((8 * x * y).into()));
                    }
                }
            }
        }
    }
    out.retain(|_, x| !x.is_zero());
    out
}

/// `prod_k (c - k) / (target - k)` applied to `q`.
pub fn quad_eigenproject(m: &WeightedModule, q: &Quad, target: &BigRational, others: &[BigRational]) -> Quad {
    let c4 = m.casimir4();
    let four = BigRational::from_integer(4.into());
    let mut cur = q.clone();
    for k in others {
        let k4 = k * &four;
        let denom = ((target - k) * &four).recip();
        let mut next = quad_casimir4(m, &c4, &cur);
        for (key, x) in &cur {
            add_term(&mut next, *key, -(x * &k4));
        }
        next.retain(|_, x| !x.is_zero());
        cur = next.into_iter().map(|(k, x)| (k, x * &denom)).collect();
    }
    cur
}

/// Whether every raising operator kills `q`.
pub fn quad_is_highest(m: &WeightedModule, q: &Quad) -> bool {
    m.raising.iter().all(|e| quad_act(e, q).is_empty())
}

/// Scales to coprime integers with a positive first coefficient.
pub fn quad_primitive(q: &Quad) -> Result<IntQuad, RepError> {
    let lcm = q.values().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<((u32, u32), BigInt)> = q.iter().map(|(k, x)| (*k, (x * BigRational::from_integer(lcm.clone())).to_integer())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, (_, x)| acc.gcd(x));
    let sign = if ints.first().is_some_and(|(_, x)| x.is_negative()) { -BigInt::one() } else { BigInt::one() };
    let mut out = IntQuad { scale: BigInt::one(), terms: HashMap::new() };
    for (k, x) in ints {
        let v: i128 = (x / &g * &sign).try_into().map_err(|_| RepError::Overflow)?;
        out.terms.insert(k, v);
    }
    Ok(out)
}

/// Evaluates a quadratic form at a coordinate vector.
pub fn quad_eval(q: &Quad, p: &[BigRational]) -> BigRational {
    q.iter().map(|((a, b), c)| c * &p[*a as usize] * &p[*b as usize]).sum()
}

/// Integer quadratic form, reduced to coprime coefficients; the dropped
/// content is tracked in `scale`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntQuad {
    pub scale: BigInt,
    pub terms: HashMap<(u32, u32), i128>,
}

impl IntQuad {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_quad(&self) -> Quad {
        let s = BigRational::from_integer(self.scale.clone());
        self.terms.iter().map(|(k, c)| (*k, BigRational::from_integer((*c).into()) * &s)).collect()
    }

    /// Derivation action, then content removal.
    pub fn act(&self, x: &SparseMat) -> Result<IntQuad, RepError> {
        let mut out: HashMap<(u32, u32), i128> = HashMap::with_capacity(self.terms.len() * 2);
        let mut push = |k: (u32, u32), v: i128| -> Result<(), RepError> {
            let e = out.entry(k).or_insert(0);
            *e = e.checked_add(v).ok_or(RepError::Overflow)?;
            Ok(())
        };
        for (&(a, b), &c) in &self.terms {
            for &(r, m) in &x.cols[a as usize] {
                push(key(r, b), c.checked_mul(m as i128).ok_or(RepError::Overflow)?)?;
            }
            for &(r, m) in &x.cols[b as usize] {
                push(key(a, r), c.checked_mul(m as i128).ok_or(RepError::Overflow)?)?;
            }
        }
        out.retain(|_, v| *v != 0);
        let g = out.values().fold(0i128, |acc, v| acc.gcd(v));
        if g > 1 {
            out.values_mut().for_each(|v| *v /= g);
        }
        let scale = if out.is_empty() { BigInt::zero() } else { &self.scale * BigInt::from(g.max(1)) };
        Ok(IntQuad { scale, terms: out })
    }

    /// Value at an integer coordinate vector, including `scale`.
    pub fn eval(&self, p: &[BigInt]) -> BigInt {
        let mut acc = BigInt::zero();
        for (&(a, b), &c) in &self.terms {
            let (x, y) = (&p[a as usize], &p[b as usize]);
            if !x.is_zero() && !y.is_zero() {
                acc += x * y * BigInt::from(c);
            }
        }
        acc * &self.scale
    }
}

/// Coordinates of the span of the rows of `m` in `Lambda^k` of the column
/// space, indexed like `module` (labels are `^`-joined base labels).
pub fn pluecker_vector(module: &WeightedModule, base_labels: &[String], m: &RatMatrix) -> Result<Vec<BigRational>, RepError> {
    let index: HashMap<&str, usize> = base_labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
    module
        .labels
        .iter()
        .map(|label| {
            let cols: Vec<usize> = label
                .split('^')
                .map(|l| index.get(l).copied().ok_or_else(|| RepError::NonIntegral(format!("unknown label {l}"))))
                .collect::<Result<_, _>>()?;
            let rows: Vec<usize> = (0..m.nrows()).collect();
            m.submatrix(&rows, &cols).det().map_err(|e| RepError::NonIntegral(e.to_string()))
        })
        .collect()
}

/// Splits `p = s * q` with `q` a coprime integer vector.
pub fn integral_part(p: &[BigRational]) -> (BigRational, Vec<BigInt>) {
    let lcm = p.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = p.iter().map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return (BigRational::one(), ints);
    }
    let q = ints.iter().map(|x| x / &g).collect();
    (BigRational::new(g, lcm), q)
}
