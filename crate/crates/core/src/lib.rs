//! Truncated computer algebra for connected graded Hopf algebras over prime
//! fields and the rationals.
//!
//! Every infinite object is represented up to a truncation degree `N`;
//! operations that would need data above `N` fail with
//! [`HopfError::Truncation`] instead of returning partial answers.

pub mod cli;
pub mod document;
pub mod error;
pub mod free_cofree;
pub mod fv;
pub mod gallery;
pub mod hopf;
pub mod linear;
pub mod poincare;
pub mod theorems;

pub use error::{HopfError, Result};
