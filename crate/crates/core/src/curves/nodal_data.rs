//! Printed data for the nodal family `C_t`: quadrics, g-basis, the lines of
//! the graph curve `C_0`, spinor-side component ideals, nodes, and the ideal
//! of the spinor image. Polynomials are written over `y0..y6` or over the
//! spinor coordinates `x0, x12, ..., x2345`, with parameters `t0, t1`.

pub const NODAL_QUADRICS: [&str; 10] = [
    "y2*y6",
    "y1*y6",
    "y3*y5 - y4*y5 + y4*y6",
    "y1*y5",
    "y0*y5",
    "y0*y4 - y2*y4 + y3*y4 - y4*y5 + y4*y6",
    "t0*y2*y3 - t1*y2*y4 + (-t0+t1)*y3*y4 + (t0-t1)*y4*y5 + (-t0+t1)*y4*y6",
    "y1*y3 - y2*y3 + y3*y4 - y4*y5 + y4*y6",
    "y0*y3 - y2*y3 + y3^2 - y4*y5 + y3*y6 + y4*y6",
    "y0*y2 - y1*y2 + y2*y3 - y2*y4",
];

pub const NODAL_GBASIS: [&str; 10] = [
    "-t0*y1*y3 + t1*y0*y4",
    "-(t0-t1)*y0*y3 - t1*y2*y3 - (t0-t1)*y3^2 + t1*y2*y4 + (t0-t1)*y3*y4 - (t0-t1)*y3*y6",
    "(t0-t1)*y1*y3 + t1*y2*y3 - t1*y2*y4",
    "t0*y2*y3 - t1*y2*y4 - (t0-t1)*y3*y4 + (t0-t1)*y3*y5",
    "-t1*y0*y2 + t1*y1*y2 - t1*y2*y3 + t1*y2*y4",
    "y2*y6",
    "y1*y5",
    "y0*y5 + y3*y5 - y4*y5 + y4*y6",
    "y1*y6",
    "y3*y5 - y4*y5 + y4*y6",
];

/// Canonical ideal of the graph curve `C_0`.
pub const GRAPH_CURVE_QUADRICS: [&str; 10] = [
    "y0*y4",
    "y0*y5",
    "y1*y5",
    "y1*y6",
    "y2*y6",
    "y0*y2 - y1*y2 + y2*y3 - y3*y4 + y4*y5 - y4*y6",
    "y0*y3 - y2*y3 + y3^2 - y4*y5 + y3*y6 + y4*y6",
    "y1*y3 - y2*y3 + y3*y4 - y4*y5 + y4*y6",
    "y2*y4 - y3*y4 + y4*y5 - y4*y6",
    "y3*y5 - y4*y5 + y4*y6",
];

/// Linear ideals of the twelve line components of `C_0`, by vertex.
pub const GRAPH_CURVE_LINES: [(&str, [&str; 5]); 12] = [
    ("0", ["y5", "y4", "y3", "y2", "y1"]),
    ("1", ["y6", "y5", "y4", "y3", "y2"]),
    ("2", ["y6", "y5", "y4", "y3", "y0-y1"]),
    ("3", ["y6", "y5", "y4", "y1-y2", "y0-y2+y3"]),
    ("4", ["y6", "y5", "y2-y3", "y1-y3+y4", "y0"]),
    ("5", ["y6", "y3-y4", "y2-y4+y5", "y1", "y0"]),
    ("6", ["y4-y5", "y3-y5+y6", "y2", "y1", "y0"]),
    ("7", ["y5-y6", "y3", "y2", "y1", "y0"]),
    ("8", ["y4", "y3", "y2", "y1", "y0"]),
    ("9", ["y5", "y4", "y2", "y1", "y0+y3+y6"]),
    ("10", ["y6", "y5", "y3", "y2", "y0"]),
    ("11", ["y6", "y4", "y3", "y1", "y0"]),
];

/// Plane containing the merged component `34`.
pub const PLANE_34: [&str; 4] = ["y6", "y5", "y1-y2+y4", "y0-y2+y3"];

/// Conic of component `34` inside its plane.
pub const CONIC_34: &str = "t0*y2*y3 - t1*y2*y4 + (-t0+t1)*y3*y4";

/// Nodes of `C_t` lying on component `34`, with the incident vertex.
pub const NODES_ON_34: [(&str, [i64; 7]); 4] = [
    ("2", [1, 1, 1, 0, 0, 0, 0]),
    ("9", [-1, 0, 0, 1, 0, 0, 0]),
    ("5", [0, 0, 1, 1, 1, 0, 0]),
    ("10", [0, -1, 0, 0, 1, 0, 0]),
];

/// Lines replacing the conic when `t` is `[1:1]` or `[1:0]`.
pub const LINES_34_AT_ONE: [(&str, [&str; 5]); 2] = [
    ("34a", ["y6", "y5", "y2", "y1+y4", "y0+y3"]),
    ("34b", ["y6", "y5", "y3-y4", "y1-y2+y4", "y0-y2+y4"]),
];
pub const LINES_34_AT_INFINITY: [(&str, [&str; 5]); 2] = [
    ("34a", ["y6", "y5", "y3", "y1-y2+y4", "y0-y2"]),
    ("34b", ["y6", "y5", "y2-y4", "y1", "y0-y2+y3"]),
];

/// Vertices and edges of the dual graph `G`; edges are nodes of `C_t`.
pub const VERTICES: [&str; 11] = ["0", "1", "2", "34", "5", "6", "7", "8", "9", "10", "11"];

/// Ideals of the spinor images `X_t^v` of the components.
pub const COMPONENT_IDEALS: [(&str, &[&str]); 11] = [
    (
        "0",
        &["x1234", "x1235", "x1245", "x2345", "x45", "x35", "x25", "x24", "x23", "x15", "x14", "x13", "x12", "x0"],
    ),
    (
        "1",
        &["x1234", "x1235", "x1245", "x1345", "x2345", "x45", "x35", "x25", "x23", "x15", "x14", "x13", "x12", "x0"],
    ),
    (
        "2",
        &[
            "x1234", "x1235", "x1245", "x1345", "x2345", "x45", "x35", "x25", "x24-x34", "x23", "x15", "x14",
            "x12-x13", "x0",
        ],
    ),
    (
        "34",
        &[
            "x1234",
            "x1235",
            "x1245",
            "x1345",
            "x2345",
            "x24-x34",
            "x23-x25",
            "x15+x25-x35-x45",
            "x14",
            "x13+x25+x34",
            "x12+x25+x34",
            "x25*x34-x34*x35+x25*x45",
            "t1*x25-t1*x35-t1*x45+x0",
            "t0*x25-t1*x35-t0*x45",
            "t1*x34*x45+t1*x35*x45+t1*x45^2-x0*x34-x0*x45",
            "t0*x34*x35-t1*x34*x35-t0*x34*x45-t1*x35*x45-t0*x45^2",
            "t0*t1*x35-t1^2*x35-t0*x0",
        ],
    ),
    (
        "5",
        &[
            "x1234",
            "x1245",
            "x1345",
            "x2345",
            "x45",
            "x34",
            "x24",
            "x23-x25",
            "x15+x25-x35",
            "x14",
            "x12-x13",
            "t1*x1235-x13-x25",
            "t1*x25-t1*x35+x0",
            "t0*x25-t1*x35",
            "t0*x13*x35-t1*x13*x35-t0*x0*x1235+x0*x35",
            "t0*t1*x35-t1^2*x35-t0*x0",
        ],
    ),
    (
        "6",
        &[
            "x1234",
            "x1245",
            "x2345",
            "x34+x45",
            "x24",
            "x23-x25",
            "x15+x25-x35-x45",
            "x14",
            "x13",
            "x12",
            "t1*x1235-x25",
            "t1*x1345+x45",
            "t0*x1345+t0*x1235-x35",
            "t1*x25-t1*x35-t1*x45+x0",
            "t0*x25-t1*x35-t0*x45",
            "t0*t1*x35-t1^2*x35-t0*x0",
        ],
    ),
    (
        "7",
        &[
            "x1234", "x1245", "x1345+x1235", "x2345", "x35", "x34+x45", "x25-x45", "x24", "x23-x45", "x15", "x14",
            "x13", "x12", "x0",
        ],
    ),
    (
        "8",
        &["x1234", "x1245", "x2345", "x45", "x35", "x34", "x25", "x24", "x23", "x15", "x14", "x13", "x12", "x0"],
    ),
    (
        "9",
        &[
            "x1234",
            "x1235",
            "x1245",
            "x2345",
            "x25",
            "x24",
            "x23",
            "x15-x35-x45",
            "x14",
            "x13",
            "x12",
            "t1*x1345-x34",
            "t0*x45-t1*x45+x0",
            "x34*x35+x34*x45-x0*x1345",
            "t1*x35+t1*x45-x0",
        ],
    ),
    (
        "10",
        &[
            "x1234", "x1235", "x1245", "x1345", "x2345", "x35", "x34+x45", "x25-x45", "x23-x45", "x15", "x14", "x13",
            "x12", "x0",
        ],
    ),
    (
        "11",
        &["x1234", "x1245", "x1345", "x2345", "x45", "x35", "x34", "x25", "x24", "x23", "x15", "x14", "x12-x13", "x0"],
    ),
];

/// Nodes of `X_t` for generic `t`: incident components and coordinates in
/// the canonical `S+` order.
pub const NODES: [(&str, &str, [&str; 16]); 17] = [
    ("0", "1", ["0", "0", "0", "0", "0", "0", "0", "0", "1", "0", "0", "0", "0", "0", "0", "0"]),
    ("1", "2", ["0", "0", "0", "0", "0", "0", "1", "0", "1", "0", "0", "0", "0", "0", "0", "0"]),
    ("2", "34", ["0", "-1", "-1", "0", "0", "0", "1", "0", "1", "0", "0", "0", "0", "0", "0", "0"]),
    (
        "34",
        "5",
        ["t0*t1-t1^2", "-t1", "-t1", "0", "t0-t1", "t1", "0", "t1", "0", "t0", "0", "0", "0", "0", "0", "0"],
    ),
    (
        "5",
        "6",
        ["t0*t1-t1^2", "0", "0", "0", "t0-t1", "t1", "0", "t1", "0", "t0", "0", "0", "1", "0", "0", "0"],
    ),
    ("6", "7", ["0", "0", "0", "0", "0", "t1", "0", "t1", "-t1", "0", "t1", "0", "1", "0", "-1", "0"]),
    ("0", "8", ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "0"]),
    ("7", "8", ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "0", "-1", "0"]),
    ("0", "9", ["0", "0", "0", "0", "0", "0", "0", "0", "t1", "0", "0", "0", "0", "0", "1", "0"]),
    (
        "34",
        "9",
        ["-t0*t1+t1^2", "0", "0", "0", "-t0+t1", "0", "0", "0", "0", "-t0", "t1", "0", "0", "0", "0", "0"],
    ),
    (
        "6",
        "9",
        ["t0*t1-t1^2", "0", "0", "0", "t0-t1", "0", "0", "0", "t1", "t0", "-t1", "0", "0", "0", "1", "0"],
    ),
    ("1", "10", ["0", "0", "0", "0", "0", "0", "1", "0", "0", "0", "0", "0", "0", "0", "0", "0"]),
    ("34", "10", ["0", "0", "0", "0", "0", "1", "-1", "1", "-1", "0", "1", "0", "0", "0", "0", "0"]),
    ("7", "10", ["0", "0", "0", "0", "0", "1", "0", "1", "-1", "0", "1", "0", "0", "0", "0", "0"]),
    ("2", "11", ["0", "1", "1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"]),
    ("5", "11", ["0", "t1", "t1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "0", "0", "0"]),
    ("8", "11", ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "0", "0", "0"]),
];

/// Minimal generators of the ideal of `X_t`.
pub const IMAGE_IDEAL: [&str; 22] = [
    "x2345",
    "x1245",
    "x1234",
    "t0*x25 - t1*x35 - t0*x45",
    "x23 - x25",
    "x15 + x25 - x35 - x45",
    "x14",
    "x12 - x13",
    "x0 + t1*x25 - t1*x35 - t1*x45",
    "x24*x1345",
    "x13*x1345",
    "x45*x1235 + x25*x1345",
    "x34*x1235 - x25*x1345",
    "x24*x1345",
    "x13*x45 + x25*x45 + x34*x45 + t1*x25*x1345 - t1*x45*x1345",
    "x24*x35 - x34*x35 + t1*x35*x1345",
    "x13*x35 + x25*x35 + x34*x35 - t1*x35*x1235 - t1*x35*x1345",
    "x25*x34 - x34*x35 + x25*x45 + t1*x35*x1345",
    "x24*x25 - x34*x35 - x24*x45 + x25*x45 + x34*x45 + t1*x25*x1345 + t1*x35*x1345 - t1*x45*x1345",
    "x13*x25 + x25^2 + x34*x35 - x25*x45 - t1*x25*x1235 - t1*x25*x1345 - t1*x35*x1345",
    "x13*x24 - x13*x34",
    "x35^2*x1235*x1345 - t0*x35*x1235^2*x1345 - t0*x35*x1235*x1345^2",
];

/// Number of linear generators at the head of [`IMAGE_IDEAL`] that cut out `P_nod(t)`.
pub const IMAGE_LINEAR_COUNT: usize = 9;

/// Rows of the matrix whose row space is `P_nod(t)`.
pub const SPAN_MATRIX: [[&str; 16]; 7] = [
    ["0", "1", "1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "1", "0", "0", "0", "0", "0", "0", "0", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "0", "1", "0", "0", "0", "0", "0", "0", "0"],
    ["t0*t1-t1^2", "0", "0", "0", "t0-t1", "t1", "0", "t1", "0", "t0", "0", "0", "0", "0", "0", "0"],
    ["0", "0", "0", "0", "0", "1", "0", "1", "0", "0", "1", "0", "0", "0", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "0", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "0"],
];
