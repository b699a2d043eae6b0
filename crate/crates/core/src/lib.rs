//! Exact computations with axial algebras, fusion laws and axets.

pub mod algebra;
pub mod axes;
pub mod axets;
pub mod catalog;
pub mod expr;
pub mod fusion;
pub mod linalg;
pub mod scalars;
pub mod skewverify;
pub mod suite;

pub use algebra::{AlgebraError, Element, LinearMap, StructureAlgebra};
pub use scalars::{Field, Scalar, ScalarError};
