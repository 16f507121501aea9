use thiserror::Error;

use crate::hyperplane::HyperplaneClass;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the zero vector cannot be normalized")]
    ZeroVector,
    #[error("functional has l1 norm {0}, expected 1")]
    NotNormalized(String),
    #[error("f(z) = {0}, a projection needs f(z) = 1")]
    NotAProjection(String),
    #[error("no index j >= 2 has |f_j| >= 1/2")]
    NotOneComplemented,
    #[error("hyperplane is 1-complemented (index {0}); use the norm-one projection")]
    OneComplemented(usize),
    #[error("N = {got} is below the threshold {threshold}")]
    NBelowThreshold { got: usize, threshold: usize },
    #[error("sequence is not in ker f (f(x) = {0})")]
    NotInHyperplane(String),
    #[error("operation requires class {expected}, functional has class {got}")]
    WrongClass {
        expected: &'static str,
        got: HyperplaneClass,
    },
    #[error("sequence has limit {0}, expected 0")]
    NotInC0(String),
    #[error("leading coefficient f_1 is zero")]
    ZeroLeadCoefficient,
    #[error("vector has l1 norm {0} > 1")]
    NotInUnitBall(String),
    #[error("witness equation is degenerate: {0}")]
    DegenerateWitness(String),
    #[error("domain mismatch: {0}")]
    DomainMismatch(String),
    #[error("malformed input: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable error code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::ZeroVector => "zero_vector",
            Error::NotNormalized(_) => "not_normalized",
            Error::NotAProjection(_) => "not_a_projection",
            Error::NotOneComplemented => "not_one_complemented",
            Error::OneComplemented(_) => "one_complemented",
            Error::NBelowThreshold { .. } => "n_below_threshold",
            Error::NotInHyperplane(_) => "not_in_hyperplane",
            Error::WrongClass { .. } => "wrong_class",
            Error::NotInC0(_) => "not_in_c0",
            Error::ZeroLeadCoefficient => "zero_lead_coefficient",
            Error::NotInUnitBall(_) => "not_in_unit_ball",
            Error::DegenerateWitness(_) => "degenerate_witness",
            Error::DomainMismatch(_) => "domain_mismatch",
            Error::Parse(_) => "parse",
        }
    }

    /// Parse failures are malformed input; everything else is a domain error.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}
