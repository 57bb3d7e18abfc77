//! Exact-arithmetic toolkit for spinor embeddings of singular genus-7
//! curves in the orthogonal Grassmannian OG(5,10), torus stability of the
//! corresponding points of Gr(7,16), and Casimir-operator constructions of
//! Spin(10)-invariants.

pub mod exactmath;
pub mod polyring;
pub mod spinor;
pub mod curves;
pub mod gitstate;
pub mod d5rep;
