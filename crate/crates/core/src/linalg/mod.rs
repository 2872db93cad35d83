//! Exact rational linear algebra: scalars, matrices, canonical subspaces,
//! inertia by congruence, and low-degree polynomials for symbolic minors.

pub mod mat;
pub mod poly;
pub mod rational;
pub mod span;
pub mod subspace;

pub use mat::Mat;
pub use poly::{HomPoly3, PolyMat};
pub use rational::{add_scaled, dot, frac, is_zero_vec, parse_rational, rat, unit_vec, zero_vec, Rational, Vector};
pub use span::MatrixSpan;
pub use subspace::Subspace;
