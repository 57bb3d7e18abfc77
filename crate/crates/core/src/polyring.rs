//! Multivariate polynomials over the rationals and linear algebra on spaces
//! of forms of a fixed degree.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use itertools::Itertools;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactmath::{fmt_rat, int, BigRational, MathError, RatMatrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("variable count mismatch: {0} vs {1}")]
    VariableMismatch(usize, usize),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("point has length {got}, expected {expected}")]
    DimensionMismatch { got: usize, expected: usize },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error(transparent)]
    Math(#[from] MathError),
}

/// Exponent vector ordered graded-lexicographically: total degree first,
/// then lexicographic with `y_0 < y_1 < ... < y_{n-1}` (the exponent of the
/// last variable is compared first).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u16>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// All monomials of degree `d` in `n` variables, ascending.
    pub fn all_of_degree(n: usize, d: u32) -> Vec<Monomial> {
        let mut out: Vec<Monomial> = (0..n)
            .combinations_with_replacement(d as usize)
            .map(|idx| {
                let mut e = vec![0u16; n];
                for i in idx {
                    e[i] += 1;
                }
                Monomial(e)
            })
            .collect();
        out.sort();
        out
    }

    pub fn display_with(&self, names: &dyn Fn(usize) -> String) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { names(i) } else { format!("{}^{}", names(i), e) })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in a fixed number of variables with rational coefficients.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with(&|i| format!("y{i}")))
    }
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::var(nvars, i), BigRational::one());
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, BigRational)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        debug_assert_eq!(m.0.len(), self.nvars);
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

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous_of_degree(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    pub fn scale(&self, s: &BigRational) -> MPoly {
        if s.is_zero() {
            return MPoly::zero(self.nvars);
        }
        MPoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect() }
    }

    pub fn try_add(&self, other: &MPoly) -> Result<MPoly, PolyError> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &MPoly) -> Result<MPoly, PolyError> {
        self.check_vars(other)?;
        let mut out = MPoly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> MPoly {
        let mut out = MPoly::constant(self.nvars, BigRational::one());
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    fn check_vars(&self, other: &MPoly) -> Result<(), PolyError> {
        if self.nvars != other.nvars {
            Err(PolyError::VariableMismatch(self.nvars, other.nvars))
        } else {
            Ok(())
        }
    }

    pub fn eval(&self, point: &[BigRational]) -> Result<BigRational, PolyError> {
        if point.len() != self.nvars {
            return Err(PolyError::DimensionMismatch { got: point.len(), expected: self.nvars });
        }
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    if x.is_zero() {
                        t = BigRational::zero();
                        break;
                    }
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Replaces variable `i` by `images[i]`; all images share one ring.
    pub fn substitute(&self, images: &[MPoly]) -> Result<MPoly, PolyError> {
        if images.len() != self.nvars {
            return Err(PolyError::DimensionMismatch { got: images.len(), expected: self.nvars });
        }
        let target = images.first().map_or(0, |p| p.nvars);
        if let Some(bad) = images.iter().find(|p| p.nvars != target) {
            return Err(PolyError::VariableMismatch(target, bad.nvars));
        }
        // Cache powers of each image.
        let mut powers: Vec<Vec<MPoly>> = images.iter().map(|p| vec![MPoly::constant(target, BigRational::one()), p.clone()]).collect();
        let mut out = MPoly::zero(target);
        for (m, c) in &self.terms {
            let mut t = MPoly::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                let e = e as usize;
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e];
                if t.is_zero() {
                    break;
                }
            }
            for (mm, cc) in t.terms {
                out.add_term(mm, cc);
            }
        }
        Ok(out)
    }

    /// Replaces each old variable `y_j` by the linear form
    /// `sum_i change[i][j] * z_i`; `change` is new-vars x old-vars.
    pub fn substitute_linear(&self, change: &RatMatrix) -> Result<MPoly, PolyError> {
        if change.ncols() != self.nvars {
            return Err(PolyError::ShapeMismatch(format!(
                "change of variables has {} columns, polynomial has {} variables",
                change.ncols(),
                self.nvars
            )));
        }
        let n_new = change.nrows();
        let images: Vec<MPoly> = (0..self.nvars)
            .map(|j| {
                MPoly::from_terms(n_new, (0..n_new).map(|i| (Monomial::var(n_new, i), change.get(i, j).clone())))
            })
            .collect();
        if images.is_empty() {
            return Ok(MPoly::constant(n_new, self.coeff(&Monomial::one(0))));
        }
        self.substitute(&images)
    }

    pub fn derivative(&self, var: usize) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut mm = m.clone();
            mm.0[var] -= 1;
            out.add_term(mm, c * int(e as i64));
        }
        out
    }

    pub fn to_string_with(&self, names: &dyn Fn(usize) -> String) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .rev()
            .map(|(m, c)| format!("{} * {}", fmt_rat(c), m.display_with(names)))
            .join(" + ")
    }

    /// Ordered term list `"coeff * monomial"`, leading term first.
    pub fn term_strings(&self, names: &dyn Fn(usize) -> String) -> Vec<String> {
        self.terms
            .iter()
            .rev()
            .map(|(m, c)| format!("{} * {}", fmt_rat(c), m.display_with(names)))
            .collect()
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        self.try_add(rhs).expect("variable count mismatch in +")
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        self.try_add(&-rhs).expect("variable count mismatch in -")
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        self.try_mul(rhs).expect("variable count mismatch in *")
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.scale(&int(-1))
    }
}

/// Jacobian `[d f_j / d x_i (p)]` with variables indexing rows and
/// polynomials indexing columns.
pub fn jacobian(polys: &[MPoly], point: &[BigRational]) -> Result<RatMatrix, PolyError> {
    let n = point.len();
    let mut m = RatMatrix::zeros(n, polys.len());
    for (j, f) in polys.iter().enumerate() {
        if f.nvars() != n {
            return Err(PolyError::DimensionMismatch { got: n, expected: f.nvars() });
        }
        for i in 0..n {
            m.set(i, j, f.derivative(i).eval(point)?);
        }
    }
    Ok(m)
}

/// A finite set of forms of one degree, stored as the coefficient matrix
/// against the ascending list of all monomials of that degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPiece {
    pub nvars: usize,
    pub degree: u32,
    pub monomials: Vec<Monomial>,
    pub coeffs: RatMatrix,
}

impl GradedPiece {
    pub fn from_polys(nvars: usize, degree: u32, polys: &[MPoly]) -> Result<Self, PolyError> {
        let monomials = Monomial::all_of_degree(nvars, degree);
        let index: HashMap<&Monomial, usize> = monomials.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut coeffs = RatMatrix::zeros(polys.len(), monomials.len());
        for (r, p) in polys.iter().enumerate() {
            if p.nvars() != nvars {
                return Err(PolyError::VariableMismatch(nvars, p.nvars()));
            }
            for (m, c) in p.terms() {
                let Some(&col) = index.get(m) else {
                    return Err(PolyError::ShapeMismatch(format!("term of degree {} in degree-{degree} piece", m.degree())));
                };
                coeffs.set(r, col, c.clone());
            }
        }
        Ok(GradedPiece { nvars, degree, monomials, coeffs })
    }

    pub fn from_coeffs(nvars: usize, degree: u32, coeffs: RatMatrix) -> Self {
        let monomials = Monomial::all_of_degree(nvars, degree);
        assert_eq!(coeffs.ncols(), monomials.len());
        GradedPiece { nvars, degree, monomials, coeffs }
    }

    pub fn len(&self) -> usize {
        self.coeffs.nrows()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.nrows() == 0
    }

    pub fn polys(&self) -> Vec<MPoly> {
        (0..self.coeffs.nrows())
            .map(|r| {
                MPoly::from_terms(
                    self.nvars,
                    self.monomials.iter().cloned().zip(self.coeffs.row(r).iter().cloned()),
                )
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.coeffs.rank()
    }

    /// Dimension of the union of two spans.
    pub fn union_rank(&self, other: &GradedPiece) -> usize {
        self.coeffs.vstack(&other.coeffs).map(|m| m.rank()).unwrap_or(0)
    }

    pub fn same_span(&self, other: &GradedPiece) -> bool {
        let r = self.rank();
        r == other.rank() && self.union_rank(other) == r
    }

    pub fn contains(&self, p: &MPoly) -> bool {
        match GradedPiece::from_polys(self.nvars, self.degree, std::slice::from_ref(p)) {
            Ok(single) => self.coeffs.row_space_contains(&single.coeffs),
            Err(_) => false,
        }
    }

    /// Canonical basis (RREF rows) of the span.
    pub fn canonical(&self) -> GradedPiece {
        GradedPiece::from_coeffs(self.nvars, self.degree, self.coeffs.row_space_basis())
    }
}

/// Forms of degree `degree` in `ambient` variables vanishing identically on
/// every parametrization. A parametrization lists one polynomial (in its own
/// parameter ring) per ambient variable.
pub fn forms_vanishing_on(
    parametrizations: &[Vec<MPoly>],
    ambient: usize,
    degree: u32,
) -> Result<GradedPiece, PolyError> {
    let monomials = Monomial::all_of_degree(ambient, degree);
    let mut eq_rows: Vec<Vec<BigRational>> = Vec::new();
    for param in parametrizations {
        if param.len() != ambient {
            return Err(PolyError::DimensionMismatch { got: param.len(), expected: ambient });
        }
        let images: Vec<MPoly> = monomials
            .iter()
            .map(|m| MPoly::from_terms(ambient, [(m.clone(), BigRational::one())]).substitute(param))
            .collect::<Result<_, _>>()?;
        let mut param_monos: Vec<Monomial> = images.iter().flat_map(|p| p.terms().map(|(m, _)| m.clone())).collect();
        param_monos.sort();
        param_monos.dedup();
        for pm in &param_monos {
            eq_rows.push(images.iter().map(|p| p.coeff(pm)).collect());
        }
    }
    let system = RatMatrix::from_rows(monomials.len(), eq_rows)?;
    let kernel = system.kernel_basis();
    Ok(GradedPiece::from_coeffs(ambient, degree, kernel.row_space_basis()))
}

/// Degree-2 case of [`forms_vanishing_on`].
pub fn quadrics_vanishing_on(parametrizations: &[Vec<MPoly>], ambient: usize) -> Result<GradedPiece, PolyError> {
    forms_vanishing_on(parametrizations, ambient, 2)
}

/// Kernel of the multiplication map `Sym^2(span f) -> forms of degree 2d`.
/// Each kernel element is returned as a symmetric matrix `Q` over the given
/// basis `f_0..f_{m-1}` so that `sum_ij Q_ij f_i f_j = 0`.
pub fn sym2_kernel(forms: &GradedPiece) -> Result<Vec<RatMatrix>, PolyError> {
    let polys = forms.polys();
    let m = polys.len();
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|i| (i..m).map(move |j| (i, j))).collect();
    let products: Vec<MPoly> = pairs.iter().map(|&(i, j)| &polys[i] * &polys[j]).collect();
    let piece = GradedPiece::from_polys(forms.nvars, forms.degree * 2, &products)?;
    let relations = piece.coeffs.transpose().kernel_basis();
    let half = crate::exactmath::rat(1, 2);
    let mut out = Vec::new();
    for r in 0..relations.nrows() {
        let mut q = RatMatrix::zeros(m, m);
        for (k, &(i, j)) in pairs.iter().enumerate() {
            let c = relations.get(r, k).clone();
            if i == j {
                q.set(i, i, c);
            } else {
                let h = &c * &half;
                q.set(i, j, h.clone());
                q.set(j, i, h);
            }
        }
        out.push(q);
    }
    Ok(out)
}

/// Evaluates `sum_ij Q_ij f_i f_j` as a polynomial.
pub fn quadratic_form_in(q: &RatMatrix, polys: &[MPoly]) -> MPoly {
    let n = polys.first().map_or(0, |p| p.nvars());
    let mut out = MPoly::zero(n);
    for i in 0..q.nrows() {
        for j in 0..q.ncols() {
            let c = q.get(i, j);
            if !c.is_zero() {
                out = &out + &(&polys[i] * &polys[j]).scale(c);
            }
        }
    }
    out
}

/// Symbol table for [`parse_poly`]: ring variables and named constants.
pub struct Symbols<'a> {
    pub vars: &'a dyn Fn(&str) -> Option<usize>,
    pub nvars: usize,
    pub constants: HashMap<String, BigRational>,
}

/// Parses sums of products such as `"3*y5^2 - 4*y4*y6 + y3*y0"` or
/// `"t0*x25 - (t0-t1)*x45 + 1/2*x13"`. Juxtaposition multiplies.
pub fn parse_poly(src: &str, syms: &Symbols<'_>) -> Result<MPoly, PolyError> {
    let mut p = Parser { src: src.as_bytes(), pos: 0, syms };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(out)
}

struct Parser<'s, 'a> {
    src: &'s [u8],
    pos: usize,
    syms: &'s Symbols<'a>,
}

impl Parser<'_, '_> {
    fn error(&self, msg: &str) -> PolyError {
        PolyError::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<MPoly, PolyError> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -&self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    // tolerate "+-" as printed in some sources
                    if self.peek() == Some(b'-') {
                        self.pos += 1;
                        acc = &acc - &self.term()?;
                    } else {
                        acc = &acc + &self.term()?;
                    }
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MPoly, PolyError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.factor()?;
                    let c = d
                        .terms()
                        .next()
                        .filter(|(m, _)| m.degree() == 0 && d.num_terms() == 1)
                        .map(|(_, c)| c.clone())
                        .ok_or_else(|| self.error("division by a non-constant"))?;
                    acc = acc.scale(&c.recip());
                }
                Some(c) if c.is_ascii_alphanumeric() || c == b'(' || c == b'_' => {
                    acc = &acc * &self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<MPoly, PolyError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let e: u32 = std::str::from_utf8(&self.src[start..self.pos])
                .ok()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| self.error("bad exponent"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MPoly, PolyError> {
        let n = self.syms.nvars;
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let v = crate::exactmath::parse_rat(s)?;
                Ok(MPoly::constant(n, v))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                if let Some(v) = self.syms.constants.get(name) {
                    return Ok(MPoly::constant(n, v.clone()));
                }
                match (self.syms.vars)(name) {
                    Some(i) if i < n => Ok(MPoly::var(n, i)),
                    _ => Err(PolyError::Parse { pos: start, msg: format!("unknown symbol {name:?}") }),
                }
            }
            _ => Err(self.error("expected a number, symbol or '('")),
        }
    }
}

/// Symbol lookup for `y0..y{n-1}`.
pub fn y_vars(name: &str) -> Option<usize> {
    name.strip_prefix('y')?.parse().ok()
}

/// Parses a list of polynomials in `y0..y{nvars-1}` with optional constants.
pub fn parse_y_polys(srcs: &[&str], nvars: usize, constants: &[(&str, BigRational)]) -> Result<Vec<MPoly>, PolyError> {
    let syms = Symbols {
        vars: &y_vars,
        nvars,
        constants: constants.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
    };
    srcs.iter().map(|s| parse_poly(s, &syms)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    fn y(n: usize, i: usize) -> MPoly {
        MPoly::var(n, i)
    }

    #[test]
    fn product_of_variables() {
        assert_eq!(&y(2, 0) * &y(2, 1), MPoly::from_terms(2, [(Monomial(vec![1, 1]), int(1))]));
        let s = &y(2, 0) + &y(2, 1);
        let sq = &s * &s;
        assert_eq!(sq.coeff(&Monomial(vec![1, 1])), int(2));
        assert_eq!(sq.coeff(&Monomial(vec![2, 0])), int(1));
        assert_eq!(sq.num_terms(), 3);
        assert!(matches!(y(2, 0).try_mul(&y(3, 0)), Err(PolyError::VariableMismatch(2, 3))));
    }

    #[test]
    fn monomial_order_is_graded() {
        let a = Monomial(vec![2, 0, 0]);
        let b = Monomial(vec![0, 0, 1]);
        assert!(b < a);
        assert!(Monomial(vec![1, 1, 0]) < Monomial(vec![1, 0, 1]));
    }

    #[test]
    fn jacobian_of_square() {
        let p = &y(1, 0) * &y(1, 0);
        let j = jacobian(&[p.clone()], &[int(3)]).unwrap();
        assert_eq!(j, RatMatrix::from_i64(&[&[6]]));
        let q = parse_y_polys(&["y0*y1 - y2^2"], 3, &[]).unwrap();
        let j0 = jacobian(&q, &[int(0), int(0), int(0)]).unwrap();
        assert!(j0.is_zero());
        assert!(matches!(jacobian(&[p], &[int(1), int(2)]), Err(PolyError::DimensionMismatch { .. })));
    }

    #[test]
    fn line_in_plane_quadrics() {
        // (s:t) -> (s, t, 0)
        let s = MPoly::var(2, 0);
        let t = MPoly::var(2, 1);
        let piece = quadrics_vanishing_on(&[vec![s, t, MPoly::zero(2)]], 3).unwrap();
        let expected = parse_y_polys(&["y2*y0", "y2*y1", "y2^2"], 3, &[]).unwrap();
        let expected = GradedPiece::from_polys(3, 2, &expected).unwrap();
        assert!(piece.same_span(&expected));
        assert_eq!(piece.len(), 3);
    }

    #[test]
    fn parser_handles_printed_forms() {
        let p = parse_y_polys(&["3 y5^2-4 y4 y6+y3 y0"], 7, &[]).unwrap().remove(0);
        assert_eq!(p.num_terms(), 3);
        let t = parse_y_polys(&["t0*y2*y3 + (-t0+t1)*y3*y4 + 1/2 y1^2 +-y0*y1"], 7, &[("t0", int(2)), ("t1", int(1))])
            .unwrap()
            .remove(0);
        assert_eq!(t.coeff(&Monomial(vec![0, 0, 1, 1, 0, 0, 0])), int(2));
        assert_eq!(t.coeff(&Monomial(vec![0, 0, 0, 1, 1, 0, 0])), int(-1));
        assert_eq!(t.coeff(&Monomial(vec![0, 2, 0, 0, 0, 0, 0])), rat(1, 2));
        assert_eq!(t.coeff(&Monomial(vec![1, 1, 0, 0, 0, 0, 0])), int(-1));
        assert!(parse_y_polys(&["y0 + z"], 7, &[]).is_err());
    }

    #[test]
    fn substitute_linear_identity_and_shape() {
        let p = parse_y_polys(&["y0^2 - 3 y1 y2 + 5"], 3, &[]).unwrap().remove(0);
        assert_eq!(p.substitute_linear(&RatMatrix::identity(3)).unwrap(), p);
        assert!(matches!(p.substitute_linear(&RatMatrix::identity(2)), Err(PolyError::ShapeMismatch(_))));
    }

    #[test]
    fn sym2_kernel_of_rational_normal_quartic() {
        // The six quadrics of the rational normal curve in P^4 against a
        // brute-force kernel of the product coefficient matrix.
        let params: Vec<MPoly> = (0..5)
            .map(|i| MPoly::from_terms(2, [(Monomial(vec![4 - i as u16, i as u16]), int(1))]))
            .collect();
        let quadrics = quadrics_vanishing_on(&[params], 5).unwrap();
        assert_eq!(quadrics.len(), 6);
        let kernel = sym2_kernel(&quadrics).unwrap();
        let polys = quadrics.polys();
        for q in &kernel {
            assert!(quadratic_form_in(q, &polys).is_zero());
            assert_eq!(q, &q.transpose());
        }
        // Brute force: products f_i f_j, count linear relations by rank.
        let mut prods = Vec::new();
        for i in 0..6 {
            for j in i..6 {
                prods.push(&polys[i] * &polys[j]);
            }
        }
        let piece = GradedPiece::from_polys(5, 4, &prods).unwrap();
        assert_eq!(kernel.len(), 21 - piece.rank());
    }
}
