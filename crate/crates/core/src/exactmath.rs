//! Exact rational scalars and dense rational matrices.
//!
//! Every routine here is exact: entries are `BigRational` values kept in
//! lowest terms, and no operation ever rounds. Elimination-based routines
//! copy their input, so a `RatMatrix` behaves as an immutable value.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

pub use num_rational::BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MathError {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NonSquare { rows: usize, cols: usize },
    #[error("matrix is not skew-symmetric")]
    NotSkew,
    #[error("skew matrix has odd size {0}")]
    OddSize(usize),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("cannot parse rational {0:?}")]
    Parse(String),
}

/// Integer as a rational.
pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `p/q` as a reduced rational. Panics when `q == 0`.
pub fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Formats a rational as `"p/q"`, or `"p"` when the denominator is one.
pub fn fmt_rat(x: &BigRational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `"p"`, `"p/q"` or `"-p/q"`.
pub fn parse_rat(s: &str) -> Result<BigRational, MathError> {
    let s = s.trim();
    let err = || MathError::Parse(s.to_string());
    match s.split_once('/') {
        None => BigInt::from_str(s).map(BigRational::from_integer).map_err(|_| err()),
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| err())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| err())?;
            if q.is_zero() {
                return Err(err());
            }
            Ok(BigRational::new(p, q))
        }
    }
}

/// Serde adapter writing rationals as `"p/q"` strings.
pub mod rat_string {
    use super::*;

    pub fn serialize<S: Serializer>(x: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_rat(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rat(&s).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for `Vec<BigRational>` as a list of `"p/q"` strings.
pub mod rat_vec_string {
    use super::*;

    pub fn serialize<S: Serializer>(xs: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<String> = xs.iter().map(fmt_rat).collect();
        v.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigRational>, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        v.iter()
            .map(|s| parse_rat(s).map_err(serde::de::Error::custom))
            .collect()
    }
}

/// Dense row-major matrix of rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(fmt_rat).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, data: vec![BigRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigRational::one();
        }
        m
    }

    /// Builds a matrix from rows; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<BigRational>>) -> Result<Self, MathError> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(MathError::ShapeMismatch(format!(
                    "row {i} has length {}, expected {cols}",
                    r.len()
                )));
            }
            data.extend(r);
        }
        Ok(RatMatrix { rows: nrows, cols, data })
    }

    /// Convenience constructor from integer rows. Panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
        Self::from_rows(cols, rows).expect("ragged integer matrix")
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigRational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigRational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<BigRational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix, MathError> {
        if self.cols != other.rows {
            return Err(MathError::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix times column vector.
    pub fn mul_vec(&self, v: &[BigRational]) -> Result<Vec<BigRational>, MathError> {
        if v.len() != self.cols {
            return Err(MathError::ShapeMismatch(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    pub fn scale(&self, s: &BigRational) -> RatMatrix {
        RatMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    /// Rows `rs` and columns `cs`, in the given order.
    pub fn submatrix(&self, rs: &[usize], cs: &[usize]) -> RatMatrix {
        let mut data = Vec::with_capacity(rs.len() * cs.len());
        for &r in rs {
            for &c in cs {
                data.push(self.get(r, c).clone());
            }
        }
        RatMatrix { rows: rs.len(), cols: cs.len(), data }
    }

    pub fn select_columns(&self, cs: &[usize]) -> RatMatrix {
        let rs: Vec<usize> = (0..self.rows).collect();
        self.submatrix(&rs, cs)
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &RatMatrix) -> Result<RatMatrix, MathError> {
        if self.cols != other.cols && self.rows > 0 && other.rows > 0 {
            return Err(MathError::ShapeMismatch(format!(
                "vstack of widths {} and {}",
                self.cols, other.cols
            )));
        }
        let cols = if self.rows > 0 { self.cols } else { other.cols };
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(RatMatrix { rows: self.rows + other.rows, cols, data })
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    self.data.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = self.get(r, c).recip();
            for j in c..cols {
                let v = &self.data[r * cols + j] * &inv;
                self.data[r * cols + j] = v;
            }
            for i in 0..rows {
                if i == r || self.get(i, c).is_zero() {
                    continue;
                }
                let f = self.get(i, c).clone();
                for j in c..cols {
                    let sub = &f * &self.data[r * cols + j];
                    if !sub.is_zero() {
                        self.data[i * cols + j] -= sub;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// RREF with the zero rows removed: a canonical basis of the row space.
    pub fn row_space_basis(&self) -> RatMatrix {
        let (m, piv) = self.rref();
        let rs: Vec<usize> = (0..piv.len()).collect();
        let cs: Vec<usize> = (0..self.cols).collect();
        m.submatrix(&rs, &cs)
    }

    /// Basis of the right null space `{x : m x = 0}`, one basis vector per row.
    pub fn kernel_basis(&self) -> RatMatrix {
        let (m, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = RatMatrix::zeros(free.len(), self.cols);
        for (k, &f) in free.iter().enumerate() {
            out.set(k, f, BigRational::one());
            for (i, &p) in pivots.iter().enumerate() {
                let v = m.get(i, f);
                if !v.is_zero() {
                    out.set(k, p, -v.clone());
                }
            }
        }
        out
    }

    /// Some `x` with `x * self = b` (a combination of the rows equal to `b`),
    /// or `None` when `b` is outside the row space.
    pub fn solve_left(&self, b: &[BigRational]) -> Option<Vec<BigRational>> {
        if b.len() != self.cols {
            return None;
        }
        let mut aug = RatMatrix::zeros(self.cols, self.rows + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(j, i, self.get(i, j).clone());
            }
        }
        for (j, v) in b.iter().enumerate() {
            aug.set(j, self.rows, v.clone());
        }
        let (m, pivots) = aug.rref();
        if pivots.last() == Some(&self.rows) {
            return None;
        }
        let mut x = vec![BigRational::zero(); self.rows];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = m.get(i, self.rows).clone();
        }
        Some(x)
    }

    /// True when every row of `other` lies in the row space of `self`.
    pub fn row_space_contains(&self, other: &RatMatrix) -> bool {
        if other.rows == 0 {
            return true;
        }
        let r = self.rank();
        self.vstack(other).map(|s| s.rank() == r).unwrap_or(false)
    }

    /// Determinant by fraction-free (Bareiss) elimination on the integer
    /// matrix obtained by clearing row denominators.
    pub fn det(&self) -> Result<BigRational, MathError> {
        if !self.is_square() {
            return Err(MathError::NonSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigRational::one());
        }
        let mut scale = BigInt::one();
        let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for r in 0..n {
            let l = self
                .row(r)
                .iter()
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            scale *= &l;
            a.push(self.row(r).iter().map(|x| (x * BigRational::from_integer(l.clone())).to_integer()).collect());
        }
        let d = bareiss_det(a);
        Ok(BigRational::new(d, scale))
    }

    pub fn is_skew(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        (0..self.rows).all(|i| {
            self.get(i, i).is_zero() && (i + 1..self.rows).all(|j| self.get(i, j) == &-self.get(j, i).clone())
        })
    }

    /// Pfaffian of a skew-symmetric matrix of even size. The empty matrix has
    /// Pfaffian one.
    ///
    /// Uses the Schur-complement recursion `Pf(A) = a01 * Pf(D')` with
    /// `D'_ij = a_ij + (a_1i a_0j - a_0i a_1j) / a_01`, swapping a nonzero
    /// entry of the first row into position 1 (each swap negates the result).
    pub fn pfaffian(&self) -> Result<BigRational, MathError> {
        if !self.is_square() {
            return Err(MathError::NonSquare { rows: self.rows, cols: self.cols });
        }
        if self.rows % 2 == 1 {
            return Err(MathError::OddSize(self.rows));
        }
        if !self.is_skew() {
            return Err(MathError::NotSkew);
        }
        let mut a: Vec<Vec<BigRational>> = self.row_vecs();
        let mut result = BigRational::one();
        while !a.is_empty() {
            let n = a.len();
            let Some(j) = (1..n).find(|&j| !a[0][j].is_zero()) else {
                return Ok(BigRational::zero());
            };
            if j != 1 {
                a.swap(1, j);
                for row in a.iter_mut() {
                    row.swap(1, j);
                }
                result = -result;
            }
            let piv = a[0][1].clone();
            result *= &piv;
            let inv = piv.recip();
            let mut next = vec![vec![BigRational::zero(); n - 2]; n - 2];
            for i in 2..n {
                for k in (i + 1)..n {
                    let corr = (&a[1][i] * &a[0][k] - &a[0][i] * &a[1][k]) * &inv;
                    let v = &a[i][k] + corr;
                    next[k - 2][i - 2] = -v.clone();
                    next[i - 2][k - 2] = v;
                }
            }
            a = next;
        }
        Ok(result)
    }

    /// Inverse of a square matrix.
    pub fn inverse(&self) -> Result<RatMatrix, MathError> {
        if !self.is_square() {
            return Err(MathError::NonSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut aug = RatMatrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, BigRational::one());
        }
        let (red, piv) = aug.rref();
        if piv.len() < n || piv[n - 1] != n - 1 {
            return Err(MathError::Singular);
        }
        let rs: Vec<usize> = (0..n).collect();
        let cs: Vec<usize> = (n..2 * n).collect();
        Ok(red.submatrix(&rs, &cs))
    }
}

fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Smallest positive rational multiple of `v` with coprime integer entries;
/// the sign is chosen so that the first nonzero entry is positive.
pub fn primitive_integer(v: &[BigRational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * BigRational::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    let neg = ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    ints.into_iter().map(|x| if neg { -x / &g } else { x / &g }).collect()
}

/// Scales a vector so its first nonzero entry is one. Zero vectors are
/// returned unchanged.
pub fn normalize_projective(v: &[BigRational]) -> Vec<BigRational> {
    match v.iter().find(|x| !x.is_zero()) {
        None => v.to_vec(),
        Some(lead) => {
            let inv = lead.recip();
            v.iter().map(|x| x * &inv).collect()
        }
    }
}

/// Dot product of two rational vectors.
pub fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .map(|(x, y)| x * y)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_identity_and_zero() {
        let id = RatMatrix::identity(3);
        let (r, p) = id.rref();
        assert_eq!(r, id);
        assert_eq!(p, vec![0, 1, 2]);
        let z = RatMatrix::zeros(2, 4);
        let (r, p) = z.rref();
        assert_eq!(r, z);
        assert!(p.is_empty());
    }

    #[test]
    fn rref_rank_one() {
        let m = RatMatrix::from_i64(&[&[1, 2], &[2, 4]]);
        let (r, p) = m.rref();
        assert_eq!(r, RatMatrix::from_i64(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn kernel_small_cases() {
        assert_eq!(RatMatrix::identity(4).kernel_basis().nrows(), 0);
        let k = RatMatrix::from_i64(&[&[1, 1]]).kernel_basis();
        assert_eq!(k.nrows(), 1);
        assert_eq!(k.get(0, 0), &-k.get(0, 1).clone());
        assert!(!k.get(0, 0).is_zero());
    }

    #[test]
    fn solve_left_small_cases() {
        let m = RatMatrix::from_i64(&[&[1, 0, 1], &[0, 2, 2]]);
        let x = m.solve_left(&[int(3), int(4), int(7)]).unwrap();
        assert_eq!(x, vec![int(3), int(2)]);
        assert_eq!(m.solve_left(&[int(1), int(0), int(0)]), None);
        assert_eq!(m.solve_left(&[int(1)]), None);
    }

    #[test]
    fn det_small_cases() {
        assert_eq!(RatMatrix::identity(5).det().unwrap(), int(1));
        assert_eq!(RatMatrix::from_i64(&[&[0, 1], &[1, 0]]).det().unwrap(), int(-1));
        assert!(matches!(RatMatrix::zeros(2, 3).det(), Err(MathError::NonSquare { .. })));
        let m = RatMatrix::from_rows(2, vec![vec![rat(1, 2), rat(1, 3)], vec![rat(2, 5), int(7)]]).unwrap();
        assert_eq!(m.det().unwrap(), rat(7, 2) - rat(2, 15));
    }

    #[test]
    fn pfaffian_small_cases() {
        assert_eq!(RatMatrix::zeros(0, 0).pfaffian().unwrap(), int(1));
        let a = RatMatrix::from_i64(&[&[0, 7], &[-7, 0]]);
        assert_eq!(a.pfaffian().unwrap(), int(7));
        assert_eq!(RatMatrix::zeros(3, 3).pfaffian(), Err(MathError::OddSize(3)));
        assert_eq!(RatMatrix::identity(2).pfaffian(), Err(MathError::NotSkew));
    }

    #[test]
    fn pfaffian_generic_four_by_four() {
        // a12 a34 - a13 a24 + a14 a23 with distinct primes.
        let (a12, a13, a14, a23, a24, a34) = (2, 3, 5, 7, 11, 13);
        let m = RatMatrix::from_i64(&[
            &[0, a12, a13, a14],
            &[-a12, 0, a23, a24],
            &[-a13, -a23, 0, a34],
            &[-a14, -a24, -a34, 0],
        ]);
        assert_eq!(m.pfaffian().unwrap(), int(a12 * a34 - a13 * a24 + a14 * a23));
    }

    #[test]
    fn pfaffian_needs_pivot_swap() {
        let m = RatMatrix::from_i64(&[&[0, 0, 1, 0], &[0, 0, 0, 1], &[-1, 0, 0, 0], &[0, -1, 0, 0]]);
        // a12 a34 - a13 a24 + a14 a23 = 0 - 1 + 0
        assert_eq!(m.pfaffian().unwrap(), int(-1));
    }

    #[test]
    fn rational_string_round_trip() {
        for s in ["0", "-3", "7/2", "-15/4"] {
            assert_eq!(fmt_rat(&parse_rat(s).unwrap()), s);
        }
        assert_eq!(fmt_rat(&parse_rat("6/4").unwrap()), "3/2");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn inverse_round_trip() {
        let m = RatMatrix::from_i64(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), RatMatrix::identity(3));
        assert_eq!(RatMatrix::from_i64(&[&[1, 2], &[2, 4]]).inverse(), Err(MathError::Singular));
    }

    #[test]
    fn primitive_vector_sign_and_gcd() {
        let v = vec![rat(-1, 2), int(1), rat(3, 2)];
        let p = primitive_integer(&v);
        assert_eq!(p, vec![BigInt::from(1), BigInt::from(-2), BigInt::from(-3)]);
    }
}
