use incomm_core::angles::AnglesError;
use incomm_core::anth::{AnthError, AnthExpansion};
use incomm_core::book2::Book2Error;
use incomm_core::harmonics::HarmonicsError;
use incomm_core::pell::PellError;
use incomm_core::ExactError;

use crate::{EXIT_DOMAIN, EXIT_STEP_CAP, EXIT_USAGE};

#[derive(Debug)]
pub enum Failure {
    /// Bad arguments: nothing was computed.
    Usage(String),
    /// A precondition of the requested operation failed.
    Domain(String),
    /// The step cap was reached before the expansion closed.
    StepCap { message: String, partial: Box<AnthExpansion> },
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Domain(_) => EXIT_DOMAIN,
            Failure::StepCap { .. } => EXIT_STEP_CAP,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Failure::Usage(_) => "usage",
            Failure::Domain(_) => "domain",
            Failure::StepCap { .. } => "step_cap",
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Domain(m) | Failure::StepCap { message: m, .. } => m,
        }
    }
}

impl From<ExactError> for Failure {
    fn from(e: ExactError) -> Self {
        match e {
            ExactError::Parse { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

impl From<AnthError> for Failure {
    fn from(e: AnthError) -> Self {
        match e {
            AnthError::StepCapExceeded(partial) => {
                let message = AnthError::StepCapExceeded(partial.clone()).to_string();
                Failure::StepCap { message, partial }
            }
            AnthError::Exact(e) => e.into(),
            e => Failure::Domain(e.to_string()),
        }
    }
}

impl From<PellError> for Failure {
    fn from(e: PellError) -> Self {
        match e {
            PellError::Anth(e) => e.into(),
            PellError::Exact(e) => e.into(),
            e => Failure::Domain(e.to_string()),
        }
    }
}

impl From<Book2Error> for Failure {
    fn from(e: Book2Error) -> Self {
        match e {
            Book2Error::UnknownProposition(_) => Failure::Usage(e.to_string()),
            Book2Error::Anth(e) => e.into(),
            Book2Error::Exact(e) => e.into(),
            e => Failure::Domain(e.to_string()),
        }
    }
}

impl From<AnglesError> for Failure {
    fn from(e: AnglesError) -> Self {
        match e {
            AnglesError::Anth(e) => e.into(),
            AnglesError::Pell(e) => e.into(),
            AnglesError::Exact(e) => e.into(),
            e => Failure::Domain(e.to_string()),
        }
    }
}

impl From<HarmonicsError> for Failure {
    fn from(e: HarmonicsError) -> Self {
        Failure::Domain(e.to_string())
    }
}
