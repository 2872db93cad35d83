//! Structure-constant Lie algebras and invariant scalar products.

pub mod algebra;
pub mod metric;

pub use algebra::{LieAlgebra, Nilpotency};
pub use metric::{MetricLieAlgebra, WittDecomposition};

use num_traits::{One, Zero};

use crate::linalg::Rational;

/// Renders a coordinate vector as a combination of basis labels, e.g.
/// `-1/2 w1 + z2`.
pub fn format_vector(labels: &[String], v: &[Rational]) -> String {
    let mut out = String::new();
    for (c, l) in v.iter().zip(labels) {
        if c.is_zero() {
            continue;
        }
        let neg = c < &Rational::zero();
        let mag = if neg { -c.clone() } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !mag.is_one() {
            out.push_str(&format!("{mag} "));
        }
        out.push_str(l);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
