//! Canonical genus-7 curves (cuspidal, balanced ribbon, nodal family), their
//! Mukai quadrics and hyperbolic bases, the spinor map `p -> [W_p^perp]`, and
//! certificates that a 7-dimensional linear section of OG(5,10) reproduces
//! each curve.
//!
//! Equality of the section with the curve is certified on degree-2 graded
//! pieces: all three canonical ideals are generated by quadrics, so equal
//! quadric spaces plus agreement on sample points is the check performed.

pub mod nodal_data;

use std::collections::BTreeMap;

use itertools::Itertools;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactmath::{fmt_rat, int, normalize_projective, rat, BigRational, MathError, RatMatrix};
use crate::polyring::{
    jacobian, parse_poly, parse_y_polys, quadrics_vanishing_on, sym2_kernel,
    GradedPiece, MPoly, PolyError, Symbols,
};
use crate::spinor::{self, half_spinor, og_quadrics, on_og, parse_x_poly, Lagrangian, Parity, SpinorPlus};

/// Number of homogeneous coordinates on the canonical `P^6`.
pub const AMBIENT: usize = 7;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CurveError {
    #[error("interpolated quadric space has dimension {0}, expected 10")]
    InterpolationRankMismatch(usize),
    #[error("parameter t = [0:0] is not a point of P^1")]
    DegenerateParameter,
    #[error("Mukai quadric kernel has dimension {0}, expected 1")]
    KernelNotOneDimensional(usize),
    #[error("g-basis change matrix is singular or does not express the printed quadrics")]
    BadChangeOfBasis,
    #[error("hyperbolic identity sum g_i g_(i+5) = 0 fails")]
    HyperbolicIdentityFails,
    #[error("Jacobian row space at {0} is not a Lagrangian with even half spinor")]
    NotLagrangian(String),
    #[error("spinors span a space of dimension {0}, expected 7")]
    SpanRankNotSeven(usize),
    #[error("no eight marked points form a projective frame on both sides")]
    FrameDegenerate,
    #[error("restricted OG quadrics and transformed canonical quadrics span different spaces")]
    QuadricSpaceMismatch,
    #[error("section quadrics do not span the ribbon quadric space")]
    SpanMismatch,
    #[error("generator {generator} of component {component} does not vanish at {point}")]
    EvaluationFailure { component: String, generator: String, point: String },
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Spinor(#[from] spinor::SpinorError),
    #[error(transparent)]
    Math(#[from] MathError),
}

/// A point `[t0:t1]` of `P^1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TParam {
    pub t0: BigRational,
    pub t1: BigRational,
}

impl TParam {
    pub fn new(t0: BigRational, t1: BigRational) -> Result<Self, CurveError> {
        if t0.is_zero() && t1.is_zero() {
            return Err(CurveError::DegenerateParameter);
        }
        Ok(TParam { t0, t1 })
    }

    pub fn from_ints(t0: i64, t1: i64) -> Result<Self, CurveError> {
        Self::new(int(t0), int(t1))
    }

    pub fn constants(&self) -> [(&'static str, BigRational); 2] {
        [("t0", self.t0.clone()), ("t1", self.t1.clone())]
    }

    pub fn is_one(&self) -> bool {
        self.t0 == self.t1
    }

    pub fn is_infinity(&self) -> bool {
        self.t1.is_zero()
    }

    pub fn is_zero_point(&self) -> bool {
        self.t0.is_zero()
    }

    pub fn label(&self) -> String {
        format!("[{}:{}]", fmt_rat(&self.t0), fmt_rat(&self.t1))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Cuspidal,
    Ribbon,
    Nodal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedPoint {
    pub label: String,
    pub coords: Vec<BigRational>,
}

/// An irreducible rational component with a parametrization by binary forms
/// in `(a, b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub label: String,
    pub param: Vec<MPoly>,
}

impl Component {
    pub fn point(&self, a: &BigRational, b: &BigRational) -> Vec<BigRational> {
        let ab = [a.clone(), b.clone()];
        self.param.iter().map(|p| p.eval(&ab).expect("binary form")).collect()
    }

    /// Line cut out by five linear forms in `y0..y6`.
    pub fn line(label: &str, forms: &[MPoly]) -> Result<Self, CurveError> {
        let piece = GradedPiece::from_polys(AMBIENT, 1, forms)?;
        // monomials of degree one are ordered y0 < y1 < ... in grlex
        let kernel = linear_coeffs(&piece).kernel_basis();
        if kernel.nrows() != 2 {
            return Err(CurveError::Math(MathError::ShapeMismatch(format!(
                "component {label} is not a line"
            ))));
        }
        let param = (0..AMBIENT)
            .map(|j| {
                let mut p = MPoly::var(2, 0).scale(kernel.get(0, j));
                p = &p + &MPoly::var(2, 1).scale(kernel.get(1, j));
                p
            })
            .collect();
        Ok(Component { label: label.to_string(), param })
    }
}

/// Coefficients of linear forms with columns in variable order.
fn linear_coeffs(piece: &GradedPiece) -> RatMatrix {
    let order: Vec<usize> = (0..piece.nvars)
        .map(|v| piece.monomials.iter().position(|m| m.0[v] == 1).expect("linear monomial"))
        .collect();
    piece.coeffs.select_columns(&order)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalCurve {
    pub family: Family,
    pub quadrics: Vec<MPoly>,
    pub marked_points: Vec<MarkedPoint>,
    pub components: Vec<Component>,
    pub parameter: Option<TParam>,
}

impl CanonicalCurve {
    pub fn quadric_piece(&self) -> GradedPiece {
        GradedPiece::from_polys(AMBIENT, 2, &self.quadrics).expect("curve quadrics are quadrics in 7 variables")
    }

    pub fn contains_point(&self, p: &[BigRational]) -> bool {
        self.quadrics.iter().all(|q| q.eval(p).map(|v| v.is_zero()).unwrap_or(false))
    }
}

const CUSP_QUADRICS: [&str; 10] = [
    "3*y5^2 - 4*y4*y6 + y3*y0",
    "2*y4*y5 - 3*y3*y6 + y2*y0",
    "5*y3*y5 - 8*y2*y6 + 3*y1*y0",
    "3*y2*y5 - 5*y1*y6 + 2*y0*y0",
    "5*y4^2 - 9*y2*y6 + 4*y1*y0",
    "y3*y4 - 2*y1*y6 + y0*y0",
    "5*y2*y4 - 8*y1*y5 + 3*y0*y6",
    "5*y3^2 - 9*y1*y5 + 4*y0*y6",
    "2*y2*y3 - 3*y1*y4 + y0*y5",
    "3*y2^2 - 4*y1*y3 + y0*y4",
];

const CUSP_GBASIS: [&str; 10] = ["-10*f0", "15*f1", "3*f2", "-2*f4", "-10*f3 + 25*f5", "f9", "f8", "f6", "f7", "-f3 + 2*f5"];

const CUSP_MUKAI_FORM: &str = "-f3^2 + 9/2*f3*f5 - 5*f5^2 - 3/10*f2*f6 + 1/5*f4*f7 - 3/2*f1*f8 + f0*f9";

const CUSP_POINTS: [[i64; 4]; 8] = [
    [-1, 1, 1, 1],
    [1, 2, 64, 1],
    [2, 1, 1, 64],
    [1, 3, 729, 1],
    [3, 1, 1, 729],
    [1, -2, 64, 1],
    [-2, 1, 1, 64],
    [1, -3, 729, 1],
];

pub const CUSP_SPAN_MATRIX: [[(usize, i64, i64); 2]; 7] = [
    [(4, -3, 5), (5, 1, 1)],
    [(7, 1, 5), (8, 1, 1)],
    [(9, 3, 4), (10, 1, 1)],
    [(0, 30, 1), (11, 1, 1)],
    [(12, 8, 9), (13, 1, 1)],
    [(1, -2, 1), (14, 1, 1)],
    [(3, -15, 2), (15, 1, 1)],
];

const RIBBON_QUADRICS: [&str; 10] = [
    "y2*y3 - 2*y1*y4 + y0*y5",
    "y2*y4 - 2*y1*y5 + y0*y6",
    "y3^2 - 2*y2*y4 + y1*y5",
    "y3*y4 - 2*y2*y5 + y1*y6",
    "-y1^2 + y0*y2",
    "-y1*y2 + y0*y3",
    "-y2^2 + y1*y3",
    "-y4^2 + y3*y5",
    "-y4*y5 + y3*y6",
    "-y5^2 + y4*y6",
];

const RIBBON_GBASIS: [&str; 10] = ["2*f4", "-f5", "2*f6", "-f0", "f1", "f9", "f8", "f7", "f3", "f2"];

const RIBBON_MUKAI_FORM: &str = "1/2*f1*f2 - 1/2*f0*f3 + f6*f7 - 1/2*f5*f8 + f4*f9";

pub const RIBBON_SPAN_MATRIX: [[(usize, i64, i64); 2]; 7] = [
    [(3, 1, 1), (5, 1, 1)],
    [(4, 1, 2), (6, 1, 1)],
    [(7, 2, 1), (8, 1, 1)],
    [(9, 1, 1), (9, 0, 1)],
    [(13, 1, 1), (13, 0, 1)],
    [(1, 1, 1), (14, 1, 1)],
    [(2, 1, 1), (15, 1, 1)],
];

/// Section quadrics as printed alongside the ribbon analysis, in `y`, `c2`, `c4`.
pub const PRINTED_SECTION_QUADRICS: [&str; 10] = [
    "2*c4*y1^2 - 2*c2*y0*y2",
    "-c4*y5^2 + c2*y4*y6",
    "c4*y1*y2 + y0*y3",
    "-c4*y4*y5 - y3*y6",
    "2*c2*y2^2 + 2*y1*y3",
    "-c2*y4^2 - y3*y5",
    "-y2*y3 - 2*c2*y1*y4 + c4*y0*y5",
    "y3*y4 + 2*c2*y2*y5 - c4*y1*y6",
    "-y3^2 + 2*c2^2*y2*y4 - c4^2*y1*y5",
    "y2*y4 - 2*y1*y5 + y0*y6",
];

fn sparse_matrix(rows: &[[(usize, i64, i64); 2]; 7]) -> RatMatrix {
    let mut m = RatMatrix::zeros(7, spinor::SPINOR_DIM);
    for (r, entries) in rows.iter().enumerate() {
        for &(c, p, q) in entries {
            if p != 0 {
                m.set(r, c, rat(p, q));
            }
        }
    }
    m
}

/// The printed 7 x 16 matrix spanning `P_cusp`.
pub fn cusp_span_matrix() -> RatMatrix {
    sparse_matrix(&CUSP_SPAN_MATRIX)
}

/// The printed 7 x 16 matrix spanning `P_rib`.
pub fn ribbon_span_matrix() -> RatMatrix {
    sparse_matrix(&RIBBON_SPAN_MATRIX)
}

/// The printed 7 x 16 matrix spanning `P_nod(t)`, instantiated.
pub fn nodal_span_matrix(t: &TParam) -> Result<RatMatrix, CurveError> {
    let rows = nodal_data::SPAN_MATRIX
        .iter()
        .map(|row| row.iter().map(|e| eval_constant(e, t)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RatMatrix::from_rows(spinor::SPINOR_DIM, rows)?)
}

fn eval_constant(src: &str, t: &TParam) -> Result<BigRational, CurveError> {
    let p = parse_x_poly(src, &t.constants())?;
    Ok(p.eval(&vec![BigRational::zero(); spinor::SPINOR_DIM])?)
}

/// Tangent-developable parametrization in `(s, t, u, v)`, eight coordinates.
fn tangent_developable() -> Vec<MPoly> {
    let syms = Symbols {
        vars: &|name: &str| ["s", "t", "u", "v"].iter().position(|v| *v == name),
        nvars: 4,
        constants: Default::default(),
    };
    [
        "7*s^6*u",
        "6*s^5*t*u + s^6*v",
        "5*s^4*t^2*u + 2*s^5*t*v",
        "4*s^3*t^3*u + 3*s^4*t^2*v",
        "3*s^2*t^4*u + 4*s^3*t^3*v",
        "2*s*t^5*u + 5*s^2*t^4*v",
        "t^6*u + 6*s*t^5*v",
        "7*t^6*v",
    ]
    .iter()
    .map(|src| parse_poly(src, &syms).expect("parametrization parses"))
    .collect()
}

/// The 7-cuspidal curve: interpolates the quadrics through the tangent
/// developable in `P^7`, then identifies `y7 = y0`.
pub fn build_cuspidal() -> Result<CanonicalCurve, CurveError> {
    let param = tangent_developable();
    let upstairs = quadrics_vanishing_on(&[param.clone()], 8)?;
    if upstairs.len() != 10 {
        return Err(CurveError::InterpolationRankMismatch(upstairs.len()));
    }
    let mut images: Vec<MPoly> = (0..AMBIENT).map(|i| MPoly::var(AMBIENT, i)).collect();
    images.push(MPoly::var(AMBIENT, 0));
    let down: Vec<MPoly> = upstairs.polys().iter().map(|q| q.substitute(&images)).collect::<Result<_, _>>()?;
    let piece = GradedPiece::from_polys(AMBIENT, 2, &down)?.canonical();
    if piece.len() != 10 {
        return Err(CurveError::InterpolationRankMismatch(piece.len()));
    }
    let marked_points = CUSP_POINTS
        .iter()
        .map(|stuv| {
            let vals: Vec<BigRational> = stuv.iter().map(|&x| int(x)).collect();
            let coords = param[..AMBIENT].iter().map(|p| p.eval(&vals)).collect::<Result<Vec<_>, _>>()?;
            Ok(MarkedPoint { label: format!("(s,t,u,v)={stuv:?}"), coords })
        })
        .collect::<Result<Vec<_>, PolyError>>()?;
    Ok(CanonicalCurve {
        family: Family::Cuspidal,
        quadrics: piece.polys(),
        marked_points,
        components: Vec::new(),
        parameter: None,
    })
}

/// The printed list of cuspidal quadrics `f0..f9`.
pub fn cusp_printed_quadrics() -> Vec<MPoly> {
    parse_y_polys(&CUSP_QUADRICS, AMBIENT, &[]).expect("printed quadrics parse")
}

/// The balanced ribbon, quadrics as printed.
pub fn build_ribbon() -> CanonicalCurve {
    CanonicalCurve {
        family: Family::Ribbon,
        quadrics: parse_y_polys(&RIBBON_QUADRICS, AMBIENT, &[]).expect("printed quadrics parse"),
        marked_points: Vec::new(),
        components: Vec::new(),
        parameter: None,
    }
}

fn parse_lines(t: &TParam, table: &[(&str, [&str; 5])]) -> Result<Vec<Component>, CurveError> {
    table
        .iter()
        .map(|(label, forms)| {
            let polys = parse_y_polys(forms, AMBIENT, &t.constants())?;
            Component::line(label, &polys)
        })
        .collect()
}

/// Component `34` for `t` away from `0, 1, infinity`: the conic in its plane,
/// parametrized by the Cremona transform of a line through the three
/// coordinate points `(y2, y3, y4)`.
fn conic_component(t: &TParam) -> Result<Component, CurveError> {
    let line = RatMatrix::from_rows(3, vec![vec![&t.t1 - &t.t0, -t.t1.clone(), t.t0.clone()]])?;
    let k = line.kernel_basis();
    let ab = |j: usize| &MPoly::var(2, 0).scale(k.get(0, j)) + &MPoly::var(2, 1).scale(k.get(1, j));
    let (yy2, yy3, yy4) = (ab(0), ab(1), ab(2));
    let y2 = &yy3 * &yy4;
    let y3 = &yy2 * &yy4;
    let y4 = &yy2 * &yy3;
    let y1 = &y2 - &y4;
    let y0 = &y2 - &y3;
    let zero = MPoly::zero(2);
    Ok(Component { label: "34".to_string(), param: vec![y0, y1, y2, y3, y4, zero.clone(), zero] })
}

/// A member of the nodal family `C_t`.
pub fn build_nodal(t: &TParam) -> Result<CanonicalCurve, CurveError> {
    let quadrics = parse_y_polys(&nodal_data::NODAL_QUADRICS, AMBIENT, &t.constants())?;
    let lines: Vec<(&str, [&str; 5])> = nodal_data::GRAPH_CURVE_LINES
        .iter()
        .filter(|(v, _)| *v != "3" && *v != "4")
        .cloned()
        .collect();
    let mut components = parse_lines(t, &lines)?;
    let merged = if t.is_zero_point() {
        let split: Vec<(&str, [&str; 5])> =
            nodal_data::GRAPH_CURVE_LINES.iter().filter(|(v, _)| *v == "3" || *v == "4").cloned().collect();
        parse_lines(t, &split)?
    } else if t.is_one() {
        parse_lines(t, &nodal_data::LINES_34_AT_ONE)?
    } else if t.is_infinity() {
        parse_lines(t, &nodal_data::LINES_34_AT_INFINITY)?
    } else {
        vec![conic_component(t)?]
    };
    // keep the vertex order 0, 1, 2, 34 (or 3, 4), 5, ..., 11
    let tail = components.split_off(3);
    components.extend(merged);
    components.extend(tail);
    let marked_points = general_points(&components);
    Ok(CanonicalCurve { family: Family::Nodal, quadrics, marked_points, components, parameter: Some(t.clone()) })
}

/// Parameter values tried for general points on each component.
const GENERAL_PARAMS: [(i64, i64); 14] = [
    (1, 2),
    (1, 3),
    (2, 5),
    (1, -2),
    (3, 7),
    (1, 5),
    (-3, 4),
    (5, 11),
    (2, -7),
    (4, 9),
    (-5, 6),
    (7, 3),
    (1, 13),
    (-8, 5),
];

fn general_points(components: &[Component]) -> Vec<MarkedPoint> {
    components
        .iter()
        .map(|c| {
            let (a, b) = GENERAL_PARAMS[0];
            MarkedPoint { label: format!("{}@({a}:{b})", c.label), coords: c.point(&int(a), &int(b)) }
        })
        .collect()
}

/// Hyperbolic basis `g0..g9` of the quadric space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GBasis {
    /// Row `i` expresses `g_i` in the basis `f_0..f_9`.
    pub change: RatMatrix,
    pub quadrics: Vec<MPoly>,
    /// The Mukai quadric over `f`, as a symmetric matrix spanning the kernel.
    pub mukai_form: RatMatrix,
}

impl GBasis {
    pub fn hyperbolic_sum(&self) -> MPoly {
        let n = self.quadrics[0].nvars();
        (0..5).fold(MPoly::zero(n), |acc, i| &acc + &(&self.quadrics[i] * &self.quadrics[i + 5]))
    }
}

fn f_vars(name: &str) -> Option<usize> {
    let i: usize = name.strip_prefix('f')?.parse().ok()?;
    (i < 10).then_some(i)
}

fn parse_f_forms(srcs: &[&str]) -> Result<Vec<MPoly>, PolyError> {
    let syms = Symbols { vars: &f_vars, nvars: 10, constants: Default::default() };
    srcs.iter().map(|s| parse_poly(s, &syms)).collect()
}

/// Coefficient row of a linear form in `f0..f9`.
fn linear_row(p: &MPoly) -> Vec<BigRational> {
    (0..10).map(|i| p.coeff(&crate::polyring::Monomial::var(10, i))).collect()
}

/// Symmetric matrix of a quadratic form in `f0..f9`, matching the
/// convention of `sym2_kernel` (`sum_ij Q_ij f_i f_j`).
pub fn symmetric_matrix_of(form: &MPoly) -> RatMatrix {
    let n = form.nvars();
    let mut q = RatMatrix::zeros(n, n);
    let half = rat(1, 2);
    for (m, c) in form.terms() {
        let idx: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat(v).take(m.0[v] as usize)).collect();
        if idx.len() != 2 {
            continue;
        }
        if idx[0] == idx[1] {
            q.set(idx[0], idx[0], c.clone());
        } else {
            q.set(idx[0], idx[1], c * &half);
            q.set(idx[1], idx[0], c * &half);
        }
    }
    q
}

/// The printed Mukai form for the cuspidal and ribbon cases, as a matrix over `f`.
pub fn printed_mukai_form(family: Family) -> Option<RatMatrix> {
    let src = match family {
        Family::Cuspidal => CUSP_MUKAI_FORM,
        Family::Ribbon => RIBBON_MUKAI_FORM,
        Family::Nodal => return None,
    };
    let forms = parse_f_forms(&[src]).expect("printed form parses");
    Some(symmetric_matrix_of(&forms[0]))
}

/// True when two matrices are nonzero scalar multiples of each other.
pub fn proportional(a: &RatMatrix, b: &RatMatrix) -> bool {
    if a.nrows() != b.nrows() || a.ncols() != b.ncols() || a.is_zero() || b.is_zero() {
        return false;
    }
    let flat = |m: &RatMatrix| -> Vec<BigRational> { m.row_vecs().into_iter().flatten().collect() };
    normalize_projective(&flat(a)) == normalize_projective(&flat(b))
}

/// Computes the one-dimensional Mukai kernel and applies the printed change of
/// basis for the curve's family, certifying the hyperbolic identity.
pub fn mukai_gbasis(c: &CanonicalCurve) -> Result<GBasis, CurveError> {
    let f_polys = match c.family {
        Family::Cuspidal => cusp_printed_quadrics(),
        _ => c.quadrics.clone(),
    };
    let f_piece = GradedPiece::from_polys(AMBIENT, 2, &f_polys)?;
    if c.family == Family::Cuspidal && !f_piece.same_span(&c.quadric_piece()) {
        return Err(CurveError::InterpolationRankMismatch(f_piece.union_rank(&c.quadric_piece())));
    }
    let kernel = sym2_kernel(&f_piece)?;
    if kernel.len() != 1 {
        return Err(CurveError::KernelNotOneDimensional(kernel.len()));
    }
    let (change, quadrics) = match c.family {
        Family::Cuspidal | Family::Ribbon => {
            let srcs = if c.family == Family::Cuspidal { CUSP_GBASIS } else { RIBBON_GBASIS };
            let rows: Vec<Vec<BigRational>> = parse_f_forms(&srcs)?.iter().map(linear_row).collect();
            let change = RatMatrix::from_rows(10, rows)?;
            let quadrics = (0..10)
                .map(|i| {
                    (0..10).fold(MPoly::zero(AMBIENT), |acc, j| &acc + &f_polys[j].scale(change.get(i, j)))
                })
                .collect();
            (change, quadrics)
        }
        Family::Nodal => {
            let t = c.parameter.as_ref().ok_or(CurveError::DegenerateParameter)?;
            let g = parse_y_polys(&nodal_data::NODAL_GBASIS, AMBIENT, &t.constants())?;
            let g_piece = GradedPiece::from_polys(AMBIENT, 2, &g)?;
            let rows = (0..10)
                .map(|i| f_piece.coeffs.solve_left(g_piece.coeffs.row(i)).ok_or(CurveError::BadChangeOfBasis))
                .collect::<Result<Vec<_>, _>>()?;
            (RatMatrix::from_rows(10, rows)?, g)
        }
    };
    if change.det()?.is_zero() {
        return Err(CurveError::BadChangeOfBasis);
    }
    let gb = GBasis { change, quadrics, mukai_form: kernel[0].clone() };
    if !gb.hyperbolic_sum().is_zero() {
        return Err(CurveError::HyperbolicIdentityFails);
    }
    Ok(gb)
}

/// The hyperbolic form `sum g_i g_(i+5)` pulled back to the `f` basis.
pub fn hyperbolic_form_over_f(gb: &GBasis) -> RatMatrix {
    let mut h = RatMatrix::zeros(10, 10);
    for i in 0..5 {
        h.set(i, i + 5, rat(1, 2));
        h.set(i + 5, i, rat(1, 2));
    }
    let ct = gb.change.transpose();
    ct.mul(&h).and_then(|m| m.mul(&gb.change)).expect("10 x 10 products")
}

/// The spinor of `[W_p^perp]`: the Jacobian row space of the g-basis at `p`,
/// in coordinates `g0..g4 -> e_-1..e_-5`, `g5..g9 -> e_1..e_5`.
pub fn rho(gb: &GBasis, p: &[BigRational]) -> Result<SpinorPlus, CurveError> {
    let label = || format!("{:?}", p.iter().map(fmt_rat).collect::<Vec<_>>());
    if !gb.quadrics.iter().all(|q| q.eval(p).map(|v| v.is_zero()).unwrap_or(false)) {
        return Err(CurveError::NotLagrangian(label()));
    }
    let j = jacobian(&gb.quadrics, p)?;
    let lag = Lagrangian(j.row_space_basis());
    if !lag.is_lagrangian() {
        return Err(CurveError::NotLagrangian(label()));
    }
    let hs = half_spinor(&lag).map_err(|_| CurveError::NotLagrangian(label()))?;
    if hs.parity != Parity::Even {
        return Err(CurveError::NotLagrangian(label()));
    }
    Ok(SpinorPlus(normalize_projective(&hs.coords)))
}

/// Coordinates of `s` in the RREF basis `r` (entries at pivot columns), or
/// `None` when `s` is outside the row space.
pub fn span_coordinates(r: &RatMatrix, pivots: &[usize], s: &[BigRational]) -> Option<Vec<BigRational>> {
    let z: Vec<BigRational> = pivots.iter().map(|&p| s[p].clone()).collect();
    let back = r.transpose().mul_vec(&z).ok()?;
    (back == s).then_some(z)
}

fn matrix_strings(m: &RatMatrix) -> Vec<Vec<String>> {
    m.row_vecs().iter().map(|r| r.iter().map(fmt_rat).collect()).collect()
}

fn vec_strings(v: &[BigRational]) -> Vec<String> {
    v.iter().map(fmt_rat).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointMembership {
    pub label: String,
    pub spinor: Vec<String>,
    pub on_og: bool,
    pub in_span: bool,
    /// Whether the frame transformation sends the curve point to this spinor.
    pub frame_consistent: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpanCertificate {
    pub family: Family,
    pub parameter: Option<String>,
    pub matrix_rref: Vec<Vec<String>>,
    pub rref_matches_printed: Option<bool>,
    pub frame_points: Vec<String>,
    pub transformation: Vec<Vec<String>>,
    pub restricted_og_rank: usize,
    pub canonical_rank: usize,
    pub union_rank: usize,
    pub quadric_space_equality: bool,
    pub point_memberships: Vec<PointMembership>,
    pub method: String,
}

impl SpanCertificate {
    pub fn require_equality(&self) -> Result<(), CurveError> {
        if self.quadric_space_equality {
            Ok(())
        } else {
            Err(CurveError::QuadricSpaceMismatch)
        }
    }
}

/// A point of `Gr(7, 16)`, stored as the RREF basis of the subspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrassPoint(pub RatMatrix);

/// Columns are the given vectors.
fn columns(vs: &[&Vec<BigRational>]) -> RatMatrix {
    let rows: Vec<Vec<BigRational>> = vs.iter().map(|v| (*v).clone()).collect();
    RatMatrix::from_rows(vs[0].len(), rows).expect("equal lengths").transpose()
}

fn in_general_position(points: &[&Vec<BigRational>]) -> bool {
    let dim = points[0].len();
    (0..points.len()).all(|skip| {
        let rest: Vec<&Vec<BigRational>> =
            points.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, p)| *p).collect();
        columns(&rest).rank() == dim
    })
}

/// Projective transformation `T` with `T src_i ~ dst_i` for eight points in
/// general position in `P^6`: `T = D diag(b/a) S^-1`.
pub fn frame_transformation(src: &[&Vec<BigRational>], dst: &[&Vec<BigRational>]) -> Result<RatMatrix, CurveError> {
    let n = src[0].len();
    if src.len() != n + 1 || dst.len() != n + 1 {
        return Err(CurveError::FrameDegenerate);
    }
    let s = columns(&src[..n]);
    let d = columns(&dst[..n]);
    let sinv = s.inverse().map_err(|_| CurveError::FrameDegenerate)?;
    let dinv = d.inverse().map_err(|_| CurveError::FrameDegenerate)?;
    let a = sinv.mul_vec(src[n])?;
    let b = dinv.mul_vec(dst[n])?;
    if a.iter().chain(&b).any(Zero::is_zero) {
        return Err(CurveError::FrameDegenerate);
    }
    let mut diag = RatMatrix::zeros(n, n);
    for i in 0..n {
        diag.set(i, i, &b[i] / &a[i]);
    }
    Ok(d.mul(&diag)?.mul(&sinv)?)
}

/// Spinors of the marked points (plus any extra known spinors) span a
/// 7-dimensional space; the OG quadrics restricted to it agree with the
/// canonical quadrics moved by the frame transformation.
pub fn span_and_verify(
    curve: &CanonicalCurve,
    gb: &GBasis,
    extra: &[(String, SpinorPlus)],
    printed: Option<&RatMatrix>,
) -> Result<(GrassPoint, SpanCertificate), CurveError> {
    let spinors: Vec<SpinorPlus> = curve
        .marked_points
        .par_iter()
        .map(|p| rho(gb, &p.coords))
        .collect::<Result<Vec<_>, _>>()?;
    let mut all_rows: Vec<Vec<BigRational>> = spinors.iter().map(|s| s.0.clone()).collect();
    all_rows.extend(extra.iter().map(|(_, s)| s.0.clone()));
    let stacked = RatMatrix::from_rows(spinor::SPINOR_DIM, all_rows)?;
    let (_, pivots) = stacked.rref();
    if pivots.len() != 7 {
        return Err(CurveError::SpanRankNotSeven(pivots.len()));
    }
    let basis = stacked.row_space_basis();
    let rref_matches_printed = printed.map(|m| m.row_space_basis() == basis);

    let z: Vec<Vec<BigRational>> = spinors
        .iter()
        .map(|s| span_coordinates(&basis, &pivots, &s.0).expect("spinor lies in its own span"))
        .collect();
    let src: Vec<&Vec<BigRational>> = curve.marked_points.iter().map(|p| &p.coords).collect();
    let dst: Vec<&Vec<BigRational>> = z.iter().collect();
    let frame = (0..src.len())
        .combinations(8)
        .find(|idx| {
            let s: Vec<_> = idx.iter().map(|&i| src[i]).collect();
            let d: Vec<_> = idx.iter().map(|&i| dst[i]).collect();
            in_general_position(&s) && in_general_position(&d)
        })
        .ok_or(CurveError::FrameDegenerate)?;
    let fs: Vec<_> = frame.iter().map(|&i| src[i]).collect();
    let fd: Vec<_> = frame.iter().map(|&i| dst[i]).collect();
    let t = frame_transformation(&fs, &fd)?;
    let tinv = t.inverse()?;

    let restricted: Vec<MPoly> =
        og_quadrics().iter().map(|q| q.substitute_linear(&basis)).collect::<Result<_, _>>()?;
    let moved: Vec<MPoly> =
        curve.quadrics.iter().map(|q| q.substitute_linear(&tinv.transpose())).collect::<Result<_, _>>()?;
    let rp = GradedPiece::from_polys(AMBIENT, 2, &restricted)?;
    let mp = GradedPiece::from_polys(AMBIENT, 2, &moved)?;
    let (restricted_og_rank, canonical_rank, union_rank) = (rp.rank(), mp.rank(), rp.union_rank(&mp));
    let quadric_space_equality = restricted_og_rank == 10 && canonical_rank == 10 && union_rank == 10;

    let mut point_memberships: Vec<PointMembership> = curve
        .marked_points
        .iter()
        .zip(&spinors)
        .zip(&z)
        .map(|((p, s), zc)| {
            let image = t.mul_vec(&p.coords).expect("7 x 7 times 7");
            PointMembership {
                label: p.label.clone(),
                spinor: vec_strings(&s.0),
                on_og: on_og(s),
                in_span: true,
                frame_consistent: Some(normalize_projective(&image) == normalize_projective(zc)),
            }
        })
        .collect();
    point_memberships.extend(extra.iter().map(|(label, s)| PointMembership {
        label: label.clone(),
        spinor: vec_strings(&s.0),
        on_og: on_og(s),
        in_span: span_coordinates(&basis, &pivots, &s.0).is_some(),
        frame_consistent: None,
    }));

    let cert = SpanCertificate {
        family: curve.family,
        parameter: curve.parameter.as_ref().map(TParam::label),
        matrix_rref: matrix_strings(&basis),
        rref_matches_printed,
        frame_points: frame.iter().map(|&i| curve.marked_points[i].label.clone()).collect(),
        transformation: matrix_strings(&t),
        restricted_og_rank,
        canonical_rank,
        union_rank,
        quadric_space_equality,
        point_memberships,
        method: "equality of degree-2 graded pieces plus point samples".to_string(),
    };
    Ok((GrassPoint(basis), cert))
}

/// Nine hyperplanes cutting out `P_{c2,c4}`, as linear forms in the spinor coordinates.
pub fn ribbon_hyperplanes(c2: &BigRational, c4: &BigRational) -> Vec<MPoly> {
    let consts = [("c2", c2.clone()), ("c4", c4.clone())];
    [
        "x45",
        "x1235",
        "x0",
        "x1234",
        "x14 - x23",
        "x13 + c2*x2345",
        "1/2*x24 + c2*x15",
        "x12 + c4*x1345",
        "x34 + 1/2*c4*x25",
    ]
    .iter()
    .map(|s| parse_x_poly(s, &consts).expect("hyperplane parses"))
    .collect()
}

/// Linear map `y -> x` parametrizing `P_{c2,c4}`, as a 7 x 16 matrix
/// (row `i` is the image of `y_i`).
pub fn ribbon_section_embedding(c2: &BigRational, c4: &BigRational) -> RatMatrix {
    let mut e = RatMatrix::zeros(AMBIENT, spinor::SPINOR_DIM);
    let ix = |n: &str| spinor::coordinate_index(n).expect("coordinate");
    let entries: [(usize, &str, BigRational); 12] = [
        (0, "x1245", int(1)),
        (1, "x1345", int(1)),
        (1, "x12", -c4.clone()),
        (2, "x2345", int(1)),
        (2, "x13", -c2.clone()),
        (3, "x14", int(1)),
        (3, "x23", int(1)),
        (4, "x15", int(1)),
        (4, "x24", int(-2) * c2),
        (5, "x25", int(2)),
        (5, "x34", -c4.clone()),
        (6, "x35", int(1)),
    ];
    for (i, name, c) in entries {
        e.set(i, ix(name), c);
    }
    e
}

/// The OG quadrics restricted to `P_{c2,c4}` in the coordinates `y0..y6`.
pub fn ribbon_section_quadrics(c2: &BigRational, c4: &BigRational) -> Result<Vec<MPoly>, CurveError> {
    let e = ribbon_section_embedding(c2, c4);
    Ok(og_quadrics().iter().map(|q| q.substitute_linear(&e)).collect::<Result<_, _>>()?)
}

pub fn printed_section_quadrics(c2: &BigRational, c4: &BigRational) -> Vec<MPoly> {
    parse_y_polys(&PRINTED_SECTION_QUADRICS, AMBIENT, &[("c2", c2.clone()), ("c4", c4.clone())])
        .expect("printed section quadrics parse")
}

/// `y_i -> y_(6-i)`.
pub fn reverse_variables(p: &MPoly) -> MPoly {
    let images: Vec<MPoly> = (0..AMBIENT).map(|i| MPoly::var(AMBIENT, AMBIENT - 1 - i)).collect();
    p.substitute(&images).expect("seven variables")
}

/// `y_0 fixed, y_i -> y_(7-i)` for `i >= 1`: the reflection in the dihedral
/// symmetry of the cuspidal curve.
pub fn reflect_cyclic(p: &MPoly) -> MPoly {
    let images: Vec<MPoly> = (0..AMBIENT).map(|i| MPoly::var(AMBIENT, (AMBIENT - i) % AMBIENT)).collect();
    p.substitute(&images).expect("seven variables")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectionMatch {
    pub section_index: usize,
    pub ribbon_index: usize,
    pub scalar: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RibbonSectionCertificate {
    pub c2: String,
    pub c4: String,
    pub section_quadrics: Vec<String>,
    /// For each section quadric, the ribbon quadric it is a multiple of.
    pub matches: Vec<Option<SectionMatch>>,
    pub every_quadric_is_a_multiple: bool,
    pub span_equal: bool,
    pub union_rank: usize,
    pub hyperplane_space_rref: Vec<Vec<String>>,
    pub rref_matches_printed: bool,
    pub printed_list_same_span: bool,
    pub printed_list_same_span_after_reversal: bool,
}

impl RibbonSectionCertificate {
    pub fn require_match(&self) -> Result<(), CurveError> {
        if self.every_quadric_is_a_multiple && self.span_equal {
            Ok(())
        } else {
            Err(CurveError::SpanMismatch)
        }
    }
}

fn multiple_of(p: &MPoly, q: &MPoly) -> Option<BigRational> {
    let (m, c) = q.terms().next()?;
    let lambda = p.coeff(m) / c;
    (!lambda.is_zero() && *p == q.scale(&lambda)).then_some(lambda)
}

pub fn verify_ribbon_section(c2: &BigRational, c4: &BigRational) -> Result<RibbonSectionCertificate, CurveError> {
    let names = |i: usize| format!("y{i}");
    let section = ribbon_section_quadrics(c2, c4)?;
    let ribbon = build_ribbon().quadrics;
    let matches: Vec<Option<SectionMatch>> = section
        .iter()
        .enumerate()
        .map(|(i, s)| {
            ribbon.iter().enumerate().find_map(|(j, f)| {
                multiple_of(s, f).map(|l| SectionMatch { section_index: i, ribbon_index: j, scalar: fmt_rat(&l) })
            })
        })
        .collect();
    let sp = GradedPiece::from_polys(AMBIENT, 2, &section)?;
    let rp = GradedPiece::from_polys(AMBIENT, 2, &ribbon)?;
    let union_rank = sp.union_rank(&rp);
    let span_equal = sp.rank() == 10 && rp.rank() == 10 && union_rank == 10;

    let hyper = GradedPiece::from_polys(spinor::SPINOR_DIM, 1, &ribbon_hyperplanes(c2, c4))?;
    let solution = linear_coeffs(&hyper).kernel_basis().row_space_basis();
    let printed = printed_section_quadrics(c2, c4);
    let pp = GradedPiece::from_polys(AMBIENT, 2, &printed)?;
    let reversed: Vec<MPoly> = printed.iter().map(reverse_variables).collect();
    let rev = GradedPiece::from_polys(AMBIENT, 2, &reversed)?;
    Ok(RibbonSectionCertificate {
        c2: fmt_rat(c2),
        c4: fmt_rat(c4),
        section_quadrics: section.iter().map(|q| q.to_string_with(&names)).collect(),
        every_quadric_is_a_multiple: matches.iter().all(Option::is_some),
        matches,
        span_equal,
        union_rank,
        rref_matches_printed: solution == ribbon_span_matrix().row_space_basis(),
        hyperplane_space_rref: matrix_strings(&solution),
        printed_list_same_span: pp.same_span(&sp),
        printed_list_same_span_after_reversal: rev.same_span(&sp),
    })
}

/// Spinors of the Table 3 nodes at `t`, labelled `"a-b"`.
pub fn node_spinors(t: &TParam) -> Result<Vec<(String, SpinorPlus)>, CurveError> {
    nodal_data::NODES
        .iter()
        .map(|(a, b, coords)| {
            let v = coords.iter().map(|e| eval_constant(e, t)).collect::<Result<Vec<_>, _>>()?;
            Ok((format!("{a}-{b}"), SpinorPlus(v)))
        })
        .collect()
}

/// Generators of the component ideals at `t`, keyed by component label.
pub fn component_ideals(t: &TParam) -> Result<BTreeMap<String, Vec<(String, MPoly)>>, CurveError> {
    nodal_data::COMPONENT_IDEALS
        .iter()
        .map(|(label, gens)| {
            let polys = gens
                .iter()
                .map(|g| Ok((g.to_string(), parse_x_poly(g, &t.constants())?)))
                .collect::<Result<Vec<_>, CurveError>>()?;
            Ok((label.to_string(), polys))
        })
        .collect()
}

pub fn image_ideal(t: &TParam) -> Result<Vec<(String, MPoly)>, CurveError> {
    nodal_data::IMAGE_IDEAL.iter().map(|g| Ok((g.to_string(), parse_x_poly(g, &t.constants())?))).collect()
}

/// Spinor images of sample points on a component, skipping parameter values
/// where the Jacobian degenerates (nodes).
pub fn component_samples(
    gb: &GBasis,
    comp: &Component,
    count: usize,
) -> Result<Vec<(String, SpinorPlus)>, CurveError> {
    let mut out = Vec::new();
    for &(a, b) in GENERAL_PARAMS.iter() {
        if out.len() == count {
            break;
        }
        let p = comp.point(&int(a), &int(b));
        match rho(gb, &p) {
            Ok(s) => out.push((format!("{}@({a}:{b})", comp.label), s)),
            Err(CurveError::NotLagrangian(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    if out.len() < count {
        return Err(CurveError::NotLagrangian(format!("too few smooth samples on component {}", comp.label)));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentCheck {
    pub component: String,
    pub samples: usize,
    /// Dimension of the span of the sampled spinors (2 for a line, 3 for a conic).
    pub sample_span_rank: usize,
    pub generators_vanish: bool,
    pub image_ideal_vanishes: bool,
    pub on_og: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeCheck {
    pub node: String,
    pub on_first: bool,
    pub on_second: bool,
    pub on_og: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableCertificate {
    pub parameter: String,
    pub components: Vec<ComponentCheck>,
    pub nodes: Vec<NodeCheck>,
    pub failures: Vec<EvaluationIssue>,
}

/// One failed evaluation: `generator` of `component` is nonzero at `point`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvaluationIssue {
    pub component: String,
    pub generator: String,
    pub point: String,
}

fn issue(component: &str, generator: &str, point: &str) -> EvaluationIssue {
    EvaluationIssue { component: component.to_string(), generator: generator.to_string(), point: point.to_string() }
}

impl TableCertificate {
    pub fn all_pass(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn require_pass(&self) -> Result<(), CurveError> {
        match self.failures.first() {
            None => Ok(()),
            Some(i) => Err(CurveError::EvaluationFailure {
                component: i.component.clone(),
                generator: i.generator.clone(),
                point: i.point.clone(),
            }),
        }
    }
}

fn vanishes(p: &MPoly, s: &SpinorPlus) -> bool {
    p.eval(&s.0).map(|v| v.is_zero()).unwrap_or(false)
}

/// Sample points per component. Generators have degree at most four and the
/// images are lines or conics, so ten points leave no room for a nonzero
/// restriction of degree at most eight.
const SAMPLES_PER_COMPONENT: usize = 10;

/// Evaluates the component ideals, nodes, and the image ideal at `t`.
pub fn verify_tables(t: &TParam) -> Result<TableCertificate, CurveError> {
    let curve = build_nodal(t)?;
    let gb = mukai_gbasis(&curve)?;
    let ideals = component_ideals(t)?;
    let image = image_ideal(t)?;
    let mut failures = Vec::new();
    let checks: Vec<Result<(ComponentCheck, Vec<EvaluationIssue>), CurveError>> = curve
        .components
        .par_iter()
        .map(|comp| {
            let samples = component_samples(&gb, comp, SAMPLES_PER_COMPONENT)?;
            let mut fails = Vec::new();
            let gens = ideals.get(&comp.label);
            let mut gens_ok = gens.is_some();
            if gens.is_none() {
                fails.push(issue(&comp.label, "(no printed ideal)", ""));
            }
            let mut image_ok = true;
            for (label, s) in &samples {
                for (name, g) in gens.into_iter().flatten() {
                    if !vanishes(g, s) {
                        gens_ok = false;
                        fails.push(issue(&comp.label, name, label));
                    }
                }
                for (name, g) in &image {
                    if !vanishes(g, s) {
                        image_ok = false;
                        fails.push(issue("image", name, label));
                    }
                }
            }
            let rows: Vec<Vec<BigRational>> = samples.iter().map(|(_, s)| s.0.clone()).collect();
            let rank = RatMatrix::from_rows(spinor::SPINOR_DIM, rows)?.rank();
            if rank > 3 {
                fails.push(issue(&comp.label, &format!("(samples span rank {rank})"), ""));
            }
            let check = ComponentCheck {
                component: comp.label.clone(),
                samples: samples.len(),
                sample_span_rank: rank,
                generators_vanish: gens_ok,
                image_ideal_vanishes: image_ok,
                on_og: samples.iter().all(|(_, s)| on_og(s)),
            };
            Ok((check, fails))
        })
        .collect();
    let mut components = Vec::new();
    for c in checks {
        let (check, fails) = c?;
        if !check.on_og {
            failures.push(issue(&check.component, "(OG quadrics)", "samples"));
        }
        failures.extend(fails);
        components.push(check);
    }
    let mut nodes = Vec::new();
    for ((a, b, _), (label, s)) in nodal_data::NODES.iter().zip(node_spinors(t)?) {
        let on = |c: &str| ideals.get(c).is_some_and(|g| g.iter().all(|(_, p)| vanishes(p, &s)));
        let check = NodeCheck { node: label.clone(), on_first: on(a), on_second: on(b), on_og: on_og(&s) };
        if !(check.on_first && check.on_second && check.on_og) {
            failures.push(issue(&format!("{a}, {b}"), "(incident ideals and OG)", &label));
        }
        nodes.push(check);
    }
    Ok(TableCertificate { parameter: t.label(), components, nodes, failures })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialFiberCertificate {
    pub parameter: String,
    /// Whether the printed g-basis is still a basis of the quadric space at `t`.
    pub gbasis_valid: bool,
    pub restricted_og_rank: usize,
    /// Three node spinors spanning a plane inside `P_nod(t)` and OG(5,10).
    pub plane_witness: Option<Vec<String>>,
    /// The section `P_nod(t) ∩ OG(5,10)` is not the spinor image of a curve.
    pub section_is_not_a_curve: bool,
}

/// At `t` in `{1, infinity}` the section of OG by `P_nod(t)` is no longer a
/// curve: it either loses quadrics or contains a plane spanned by limits of nodes.
pub fn special_fiber_check(t: &TParam) -> Result<SpecialFiberCertificate, CurveError> {
    let curve = build_nodal(t)?;
    let gbasis_valid = mukai_gbasis(&curve).is_ok();
    let p = nodal_span_matrix(t)?.row_space_basis();
    let restricted: Vec<MPoly> = og_quadrics().iter().map(|q| q.substitute_linear(&p)).collect::<Result<_, _>>()?;
    let restricted_og_rank = GradedPiece::from_polys(AMBIENT, 2, &restricted)?.rank();
    let nodes = node_spinors(t)?;
    let ogq = og_quadrics();
    let plane_witness = (0..nodes.len()).combinations(3).find_map(|idx| {
        let rows: Vec<Vec<BigRational>> = idx.iter().map(|&i| nodes[i].1 .0.clone()).collect();
        let m = RatMatrix::from_rows(spinor::SPINOR_DIM, rows).ok()?;
        if m.rank() != 3 || !p.row_space_contains(&m) {
            return None;
        }
        let all_vanish = ogq.iter().all(|q| q.substitute_linear(&m).map(|r| r.is_zero()).unwrap_or(false));
        all_vanish.then(|| idx.iter().map(|&i| nodes[i].0.clone()).collect())
    });
    let section_is_not_a_curve = restricted_og_rank != 10 || plane_witness.is_some();
    Ok(SpecialFiberCertificate {
        parameter: t.label(),
        gbasis_valid,
        restricted_og_rank,
        plane_witness,
        section_is_not_a_curve,
    })
}

/// Full nodal pipeline at `t`: spans the component spinors together with the
/// node spinors (nodes only for `t` away from `0, 1, infinity`).
pub fn nodal_span(t: &TParam) -> Result<(GrassPoint, SpanCertificate), CurveError> {
    let curve = build_nodal(t)?;
    let gb = mukai_gbasis(&curve)?;
    let generic = !(t.is_zero_point() || t.is_one() || t.is_infinity());
    let extra = if generic { node_spinors(t)? } else { Vec::new() };
    let printed = nodal_span_matrix(t)?;
    span_and_verify(&curve, &gb, &extra, Some(&printed))
}

/// Weight of a monomial under `y_i -> zeta^i y_i`, modulo 7.
pub fn cyclic_weight(m: &crate::polyring::Monomial) -> usize {
    m.0.iter().enumerate().map(|(i, &e)| i * e as usize).sum::<usize>() % AMBIENT
}

/// True when every polynomial is homogeneous for the cyclic weight.
pub fn cyclically_homogeneous(polys: &[MPoly]) -> bool {
    polys.iter().all(|p| p.terms().map(|(m, _)| cyclic_weight(m)).all_equal())
}

pub fn cusp_span() -> Result<(GrassPoint, SpanCertificate), CurveError> {
    let curve = build_cuspidal()?;
    let gb = mukai_gbasis(&curve)?;
    span_and_verify(&curve, &gb, &[], Some(&cusp_span_matrix()))
}
