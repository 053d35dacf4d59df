//! The 3-cocycles `ω_ā` on finite abelian groups, the 2-cochains `θ_g`, `γ_g`, `ω_g`
//! derived from a 3-cocycle, inflation, and the coboundary test through the chain map `F_3`.

mod cochain;
mod params;
mod pullback;

pub use cochain::{
    coboundary_of_2cochain, coboundary_value, gamma, inflate, omega_g, theta, verify_3cocycle, CocycleCheck, Cochain3,
};
pub use params::{eval_omega, is_abelian, CocycleParams};
pub use pullback::{f3_pullback, is_coboundary, solves_pair, CoboundaryDecision, PsiValues};

use thiserror::Error;

use crate::groups::GroupError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CocycleError {
    #[error("{key} = {value} is out of range; must be below {bound}")]
    OutOfRange { key: String, value: u64, bound: u64 },
    #[error("expected {expected} entries, got {got}")]
    WrongArity { expected: usize, got: usize },
    #[error("invalid index key {0}")]
    BadKey(String),
    #[error("map is not a group homomorphism")]
    NotHomomorphism,
    #[error("map is not surjective")]
    NotSurjective,
    #[error("generators do not present the group: {0}")]
    NotGenerating(String),
    #[error("group is not abelian")]
    NotAbelian,
    #[error(transparent)]
    Group(#[from] GroupError),
}
