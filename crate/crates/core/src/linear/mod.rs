//! Exact linear algebra: scalars, sparse combinations, dense matrices,
//! affine solvers, graded spaces and truncated series.

pub mod combo;
pub mod graded;
pub mod matrix;
pub mod scalar;
pub mod series;
pub mod system;

pub use combo::{Combo, Tensor2, Tensor3, Vector};
pub use graded::{braiding, DegreeRule, GradedMap, GradedSpace};
pub use matrix::Matrix;
pub use scalar::{Field, Scalar};
pub use series::TruncatedSeries;
pub use system::{rank_of, AffineSystem, Echelon, Insert, Solution};
