//! Frobenius dimension of cluster-tilted algebras of Dynkin type A, D and E6.

pub mod algebra;
pub mod classify;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod format;
pub mod frobenius;
pub mod linalg;
pub mod quiver;
pub mod relations;

pub use error::{Error, Result};
