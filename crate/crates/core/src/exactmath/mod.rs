//! Exact roots of unity and cyclotomic numbers.

mod cyclotomic;
mod root;

pub use cyclotomic::{cyclotomic_polynomial, Cyclotomic, Rational};
pub use root::{nth_root_solutions, RootOfUnity};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("root of unity order must be positive")]
    ZeroOrder,
    #[error("root degree must be positive")]
    ZeroDegree,
    #[error("{root} does not lie in Q(zeta_{order})")]
    NotInField { root: RootOfUnity, order: u64 },
    #[error("Q(zeta_{from}) is not a subfield of Q(zeta_{to})")]
    NotASubfield { from: u64, to: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse {0:?}")]
    Parse(String),
}
