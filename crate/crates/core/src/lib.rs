//! Exact computations with the rank-one real simple Lie algebras
//! `so(1,k)`, `su(1,k)`, `sp(1,k)` and `f4(-20)`.

pub mod albert;
pub mod catalog;
pub mod composition;
pub mod einstein;
pub mod error;
pub mod lemmas;
pub mod lie;
pub mod linear;
pub mod rep;
pub mod report;
pub mod sampling;

pub use error::{Error, Result};
