pub mod catalog;
pub mod error;
pub mod format;
pub mod g2;
pub mod geometry;
pub mod lie;
pub mod linalg;
pub mod rank;
pub mod report;
pub mod suite;

pub use error::{Error, Result};
pub use lie::{LieAlgebra, MetricLieAlgebra, Nilpotency, WittDecomposition};
pub use linalg::{Mat, Rational, Subspace, Vector};
