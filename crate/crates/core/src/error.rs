//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolytopeError {
    #[error("polytope is not full-dimensional (dim {dim} < ambient {ambient})")]
    NotFullDimensional { dim: usize, ambient: usize },
    #[error("origin is not an interior point")]
    OriginNotInterior,
    #[error("dual polytope is not a lattice polytope")]
    NonLatticeDual,
    #[error("empty point set")]
    EmptyInput,
    #[error("points have mixed dimensions: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConeError {
    #[error("cone is not pointed (contains a line)")]
    NotPointed,
    #[error("point does not lie in the requested dilation")]
    PointNotInDilation,
}

/// Stages that can run out of budget, mirrored in reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgebraStage {
    GroebnerBasis,
    Saturation,
    Syzygies,
    Minimalization,
}

impl std::fmt::Display for AlgebraStage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            AlgebraStage::GroebnerBasis => "groebner basis",
            AlgebraStage::Saturation => "saturation",
            AlgebraStage::Syzygies => "syzygies",
            AlgebraStage::Minimalization => "minimalization",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("budget exceeded during {stage}")]
    BudgetExceeded { stage: AlgebraStage },
    #[error("depth cross-check mismatch: exact {exact} vs shortcut {shortcut}")]
    CrossCheckMismatch { exact: usize, shortcut: usize },
    #[error("resolution invariant violated: {0}")]
    InvariantViolation(String),
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
    #[error(transparent)]
    Cone(#[from] ConeError),
}
