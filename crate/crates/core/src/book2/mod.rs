//! Book II of the Elements as polynomial algebra.
//!
//! Each proposition is registered as an identity `lhs = rhs` between integer
//! polynomials and verified by expanding `lhs - rhs` to zero, or, for the
//! corollaries that assume `a^2 = 2b^2`, by reducing it modulo that relation.
//! The constructive propositions are exact solvers whose outputs are checked
//! against their defining equation before they are returned.

mod poly;
mod registry;
mod solvers;

use thiserror::Error;

use crate::anth::AnthError;
use crate::exact::ExactError;

pub use poly::{poly, poly_build, Expr, Poly, Var, NVARS};
pub use registry::{verify, verify_conditional, verify_identity, Hypothesis, Proposition, PropositionId};
pub use solvers::{
    apply_areas_defect, apply_areas_excess, form_preservation_cross, gnomon_chain, mean_extreme, mean_proportional,
    square_gnomon_growth, Form, GnomonStep,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Book2Error {
    #[error("unknown proposition {0:?}")]
    UnknownProposition(String),
    #[error("lengths must be positive")]
    NonPositiveInput,
    #[error("area must be positive")]
    NonPositiveArea,
    #[error("no solution: the area exceeds the square on half the line")]
    NoSolution,
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("solver output failed its own check: {0}")]
    VerificationFailed(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Anth(#[from] AnthError),
}
