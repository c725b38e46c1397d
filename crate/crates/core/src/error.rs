use thiserror::Error;

/// Errors raised across the crate. Every variant names the module that
/// produced it and, where it applies, the degree at which things failed.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HopfError {
    #[error("structural error: {0}")]
    Structural(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("truncation error in {module}: degree {degree} exceeds bound {bound}")]
    Truncation {
        module: &'static str,
        degree: usize,
        bound: usize,
    },

    #[error("validation error: {0}")]
    Validation(String),

    #[error("{module}: infeasible at degree {degree}: {detail}")]
    Infeasible {
        module: &'static str,
        degree: usize,
        detail: String,
    },

    #[error("invariant violation in {module}: {detail}")]
    Invariant { module: &'static str, detail: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("search budget of {0} candidate evaluations exhausted")]
    Budget(u64),
}

impl HopfError {
    pub fn truncation(module: &'static str, degree: usize, bound: usize) -> Self {
        HopfError::Truncation { module, degree, bound }
    }

    pub fn infeasible(module: &'static str, degree: usize, detail: impl Into<String>) -> Self {
        HopfError::Infeasible {
            module,
            degree,
            detail: detail.into(),
        }
    }

    pub fn invariant(module: &'static str, detail: impl Into<String>) -> Self {
        HopfError::Invariant {
            module,
            detail: detail.into(),
        }
    }

    /// Process exit code used by the CLI: 2 for usage/validation problems,
    /// 3 for internal invariant violations.
    pub fn exit_code(&self) -> i32 {
        match self {
            HopfError::Invariant { .. } => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, HopfError>;
