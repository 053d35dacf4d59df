//! Finite groups: abelian groups in invariant-factor form, Cayley tables, `D_8`,
//! central extensions, isomorphism testing.

mod abelian;
mod finite;

pub use abelian::FiniteAbelianGroup;
pub use finite::{find_isomorphism, invariant_factors_of, is_isomorphic, ConjugacyData, FiniteGroup};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("invariant factors must divide each other: m_{index} = {left} does not divide m_{} = {right}", index + 1)]
    ChainViolation { index: usize, left: u64, right: u64 },
    #[error("invalid cyclic factor {0}; factors must be at least 2")]
    BadFactor(u64),
    #[error("F^ fails the 2-cocycle identity at ({k1}, {k2}, {k3})")]
    NotACocycle { k1: usize, k2: usize, k3: usize },
    #[error("F^ is not normalized")]
    NotNormalized,
    #[error("group is not abelian")]
    NotAbelian,
    #[error("group of order {0} exceeds the isomorphism search limit of 64")]
    TooLarge(usize),
    #[error("invalid Cayley table: {0}")]
    InvalidTable(String),
    #[error("unknown group element {0:?}")]
    UnknownElement(String),
}
