use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced by model evaluation, fitting, and data handling.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// An argument fell outside an operation's valid domain. The message
    /// names the violated bound so callers can print something actionable.
    #[error("domain error: {what} = {value} violates {requirement}")]
    Domain {
        what: &'static str,
        value: f64,
        requirement: String,
    },

    /// A stress query below the curve's horizontal asymptote: no cycle
    /// count on the curve attains it.
    #[error("stress {stress} is at or below the horizontal asymptote {limit} (fatigue limit); \
             the curve never reaches it")]
    BelowAsymptote { stress: f64, limit: f64 },

    /// A stress query above the supremum of the curve over its domain.
    #[error("stress {stress} is at or above the curve supremum {supremum}")]
    AboveSupremum { stress: f64, supremum: f64 },

    #[error("invalid parameter {name} = {value}: requires {requirement}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        requirement: String,
    },

    #[error("probability {p} outside (0, 1)")]
    Probability { p: f64 },

    /// Requested quantile is unattainable: the cdf tops out below p
    /// because of an atom of probability at infinity.
    #[error("quantile p = {p} unattainable: cdf supremum is {supremum}")]
    UnattainableQuantile { p: f64, supremum: f64 },

    #[error("quadrature did not reach requested tolerance {requested:e}; achieved {achieved:e}")]
    Quadrature { requested: f64, achieved: f64 },

    #[error("root bracketing failed: {0}")]
    Bracket(String),

    #[error("observation {index}: {source}")]
    Observation {
        index: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("dataset has no failures: likelihood is unbounded/uninformative")]
    NoFailures,

    #[error("insufficient design: {0}")]
    InsufficientDesign(String),

    #[error("optimization did not converge after {evaluations} evaluations \
             (best log-likelihood {best_loglik})")]
    NotConverged {
        evaluations: usize,
        best_loglik: f64,
    },

    #[error("{count} failure(s) lie at or below the fitted threshold; \
             the model family conflicts with the data")]
    ThresholdConflict { count: usize },

    #[error("Hessian is singular or not negative-definite; \
             use the profile-likelihood method instead")]
    SingularHessian,

    #[error("parse error at data row {row}: {message}")]
    Parse { row: usize, message: String },

    #[error("dataset digest mismatch: fit record was produced from different data")]
    ProvenanceMismatch,

    #[error("{0}")]
    Usage(String),

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl Error {
    pub(crate) fn domain(what: &'static str, value: f64, requirement: impl Into<String>) -> Self {
        Error::Domain {
            what,
            value,
            requirement: requirement.into(),
        }
    }

    pub(crate) fn at_observation(self, index: usize) -> Self {
        Error::Observation {
            index,
            source: Box::new(self),
        }
    }
}
