use alloc::string::String;
use alloc::vec::Vec;

use crate::C64;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Cohn's rule needs `|a_0| < |a_n|` strictly.
    #[error("Cohn reduction not applicable: |a0| = {constant} is not below |an| = {leading}")]
    ReductionNotApplicable { constant: f64, leading: f64 },

    #[error("root iteration did not converge after {iterations} iterations (max residual {residual:e})")]
    NoConvergence {
        iterations: usize,
        residual: f64,
        best: Vec<C64>,
    },

    /// Zeros on (or numerically on) the unit circle: no strict-inequality verdict.
    #[error("indeterminate: {on_circle} zero(s) on the unit circle")]
    Indeterminate { on_circle: usize },

    #[error("sense preservation indeterminate: |h'| vanishes near {point}")]
    DegenerateDerivative { point: C64 },

    #[error("unknown case id `{0}`")]
    UnknownCase(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
