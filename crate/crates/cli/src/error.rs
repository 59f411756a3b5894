use thiserror::Error;

/// Every failure maps to one of the documented exit codes.
#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags, parameters, config or grid: exit 2.
    #[error("{0}")]
    Invalid(String),
    /// The requested level or spectrum does not exist: exit 3.
    #[error("{0}")]
    NoBoundState(String),
    /// Analytic and oracle spectra disagree, or the grid is too coarse: exit 4.
    #[error("{0}")]
    VerificationFailed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::NoBoundState(_) => 3,
            CliError::VerificationFailed(_) => 4,
        }
    }
}

impl From<specbound_core::potentials::PotentialError> for CliError {
    fn from(e: specbound_core::potentials::PotentialError) -> Self {
        use specbound_core::parametric::ParametricError;
        use specbound_core::potentials::PotentialError as P;
        match e {
            P::NoBoundState { .. } | P::Parametric(ParametricError::NoBoundState { .. }) => {
                CliError::NoBoundState(e.to_string())
            }
            P::Parametric(ParametricError::ConsistencyViolation { .. }) | P::Normalization(_) => {
                CliError::VerificationFailed(e.to_string())
            }
            _ => CliError::Invalid(e.to_string()),
        }
    }
}
