//! Real Lie algebras with exact structure constants.

pub mod algebra;
pub mod families;
pub mod roots;

pub use algebra::LieAlgebraQ;
pub use families::{build_algebra, Family};
pub use roots::{decompose, RootDecomposition};
