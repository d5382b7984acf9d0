use thiserror::Error;

use crate::motivic::MotivicClass;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Log, pow and inversion need a series of the form `1 + a_1 T + ...`.
    #[error("series has constant term {0}, expected 1")]
    NonUnitConstantTerm(MotivicClass),

    /// A Log table had a nonzero term at an exponent outside the expected lattice.
    #[error("Log of the M={m} series has a nonzero term at T^{power}, not divisible by {m}")]
    MalformedLog { m: usize, power: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
