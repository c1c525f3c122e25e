use std::fmt;

use spectral_hist::{Graph6Error, GraphError, SearchError, SpectralError, VerifyError};

/// A failed run, carrying its exit code.
#[derive(Debug)]
pub enum Failure {
    /// Exit 1: a counterexample, violation or broken invariant.
    Check(String),
    /// Exit 2: bad arguments or input outside an operation's domain.
    Usage(String),
    /// Exit 3: malformed graph6 or corpus data.
    Format(String),
    /// Exit 4: an iteration or search that did not finish.
    Numeric(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Check(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Format(_) => 3,
            Failure::Numeric(_) => 4,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Check(m) | Failure::Usage(m) | Failure::Format(m) | Failure::Numeric(m) => f.write_str(m),
        }
    }
}

impl From<Graph6Error> for Failure {
    fn from(e: Graph6Error) -> Self {
        Failure::Format(e.to_string())
    }
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<SpectralError> for Failure {
    fn from(e: SpectralError) -> Self {
        let msg = e.to_string();
        match e {
            SpectralError::NotConverged { .. } | SpectralError::NoSignChange { .. } => Failure::Numeric(msg),
            SpectralError::SlackViolation(_) => Failure::Check(msg),
            SpectralError::Disconnected
            | SpectralError::InvalidTolerance(_)
            | SpectralError::OrderOutOfRange { .. } => Failure::Usage(msg),
        }
    }
}

impl From<SearchError> for Failure {
    fn from(e: SearchError) -> Self {
        let msg = e.to_string();
        match e {
            SearchError::BudgetExceeded(_) | SearchError::TreeCapExceeded(_) => Failure::Numeric(msg),
            SearchError::Invariant(_) => Failure::Check(msg),
            SearchError::Disconnected | SearchError::TooLarge(_) | SearchError::Precondition(_) => {
                Failure::Usage(msg)
            }
        }
    }
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        let msg = e.to_string();
        match e {
            VerifyError::Format(e) => e.into(),
            VerifyError::Spectral(e) => e.into(),
            VerifyError::Search(e) => e.into(),
            VerifyError::CorpusOrder { .. } => Failure::Format(msg),
            VerifyError::ThresholdMismatch { .. } => Failure::Check(msg),
            VerifyError::OrderOutOfRange { .. }
            | VerifyError::Unsupported(_)
            | VerifyError::Io { .. }
            | VerifyError::InvalidOptions(_) => Failure::Usage(msg),
        }
    }
}
