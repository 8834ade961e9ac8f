//! Mora's tangent-cone algorithm: weak normal forms and standard bases of
//! submodules of `R^q` over the localization of `K[x]` at the origin.

mod basis;
mod monomial_module;
mod normal_form;
mod oracle;

use thiserror::Error;

pub use basis::{
    ideal_membership_local, krull_dimension, leading_module, standard_basis, standard_basis_with,
    vector_space_dimension, StandardBasis,
};
pub use monomial_module::{MonomialModule, MAX_COVER_VARS};
pub use normal_form::{
    mora_normal_form, mora_normal_form_certified, mora_normal_form_with, Certificate, NormalFormResult,
};
pub use oracle::{truncated_dimension_oracle, truncated_quotient_dimension, OracleOutcome};

/// Default cap on reduction steps for one computation.
pub const DEFAULT_STEP_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoraError {
    #[error("generators live in different rings")]
    RingMismatch,
    #[error("generators have different ranks")]
    RankMismatch,
    #[error("no generators given")]
    EmptyGenerators,
    #[error("reduction budget of {0} steps exhausted")]
    ResourceExhausted(u64),
    #[error("the quotient is zero")]
    ZeroModule,
    #[error("too many variables ({0}) for an exact dimension search")]
    TooManyVariables(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MoraOptions {
    /// Maximum number of single reduction steps.
    pub step_budget: u64,
}

impl Default for MoraOptions {
    fn default() -> Self {
        MoraOptions { step_budget: DEFAULT_STEP_BUDGET }
    }
}

/// Shared countdown of reduction steps.
#[derive(Debug)]
pub(crate) struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub(crate) fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    pub(crate) fn tick(&mut self) -> Result<(), MoraError> {
        if self.used >= self.limit {
            return Err(MoraError::ResourceExhausted(self.limit));
        }
        self.used += 1;
        Ok(())
    }
}
