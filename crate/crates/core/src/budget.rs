//! Work limits for the algebra engine.
//!
//! Gröbner and resolution computations can blow up on innocent-looking
//! input, so every potentially unbounded loop checks a [`Budget`] and
//! aborts with a structured error instead of running away.

use std::time::{Duration, Instant};

use crate::error::{AlgebraError, AlgebraStage};

#[derive(Debug, Clone)]
pub struct Budget {
    deadline: Option<Instant>,
    /// Cap on the number of polynomials in any one basis.
    pub max_basis: usize,
    /// Cap on the total number of terms held by one boundary matrix.
    pub max_terms: usize,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget {
            deadline: None,
            max_basis: usize::MAX,
            max_terms: usize::MAX,
        }
    }

    pub fn with_seconds(secs: u64) -> Self {
        Budget {
            deadline: Some(Instant::now() + Duration::from_secs(secs)),
            ..Budget::unlimited()
        }
    }

    pub fn with_deadline(deadline: Instant) -> Self {
        Budget {
            deadline: Some(deadline),
            ..Budget::unlimited()
        }
    }

    pub fn check(&self, stage: AlgebraStage) -> Result<(), AlgebraError> {
        if let Some(deadline) = self.deadline {
            if Instant::now() > deadline {
                return Err(AlgebraError::BudgetExceeded { stage });
            }
        }
        Ok(())
    }

    pub fn check_size(&self, stage: AlgebraStage, basis: usize, terms: usize) -> Result<(), AlgebraError> {
        if basis > self.max_basis || terms > self.max_terms {
            return Err(AlgebraError::BudgetExceeded { stage });
        }
        self.check(stage)
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::unlimited()
    }
}
