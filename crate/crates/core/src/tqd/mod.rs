//! The twisted quantum double `D^ω(G)`: products, coproduct, associator and antipode,
//! quasi-Hopf axiom checks, and the group of group-like elements for cyclic `G`.

mod algebra;
mod axioms;
mod grouplike;

pub use algebra::{Basis, Tensor, TqdAlgebra, TqdElement};
pub use axioms::{
    commutativity_witness, is_commutative, verify_quasi_hopf, verify_quasi_hopf_with, AxiomCheck, AxiomStatus,
    Coverage, QuasiHopfReport,
};
pub use grouplike::{
    beta_direct, beta_extension_cocycle, grouplike, grouplike_group, is_grouplike, GrouplikeGroup, Relations,
};

use thiserror::Error;

use crate::cocycles::CocycleCheck;
use crate::groups::GroupError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TqdError {
    #[error("omega is not a normalized 3-cocycle: {0:?}")]
    NotACocycle(CocycleCheck),
    #[error("group-likes are only enumerated for omega_a on a cyclic group")]
    NotCyclic,
    #[error("cyclic order {0} exceeds the limit of 12")]
    TooLarge(u64),
    #[error("group-like elements are not closed under multiplication at ({0}, {1})")]
    NotClosed(usize, usize),
    #[error(transparent)]
    Group(#[from] GroupError),
}
