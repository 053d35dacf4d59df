//! Yetter-Drinfeld modules over finite groups, their braidings, and the
//! Nichols-algebra invariants used to rule out finite dimension: diagonal
//! braiding matrices, generalized Cartan matrices, and skeletons.

mod braided;
pub mod d8;
mod diagonal;
mod skeleton;
mod symmetrizer;
mod triples;
mod yd;

pub use braided::{is_braid_indecomposable, pair_witness, BraidedSpace, Indecomposability, MonomialTensor, PairWitness};
pub use diagonal::{
    cartan_is_finite_type, diagonal_cartan, diagonalize_braiding, DiagonalBraiding, DynkinDiagram, DynkinEdge, Eigenvector,
};
pub use skeleton::{skeleton, EdgeStyle, Skeleton, SkeletonEdge, SkeletonVertex};
pub use symmetrizer::{
    ad, adjoint_power, adjoint_rank, adjoint_spanning_set, rank, symmetrize, symmetrizer_rank, TensorElement, MAX_DEGREE,
};
pub use triples::{analyze_triple, Route, TripleAnalysis};
pub use yd::{yd_module, ModuleSpec, Monomial, MonomialRep, YDModule};

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::exactmath::ExactError;
use crate::groups::GroupError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NicholsError {
    #[error("not a character: {0}")]
    NotACharacter(String),
    #[error("not a representation: {0}")]
    NotARepresentation(String),
    #[error("bad module: {0}")]
    BadModule(String),
    #[error("modules live over different groups")]
    MixedGroups,
    #[error("no modules given")]
    Empty,
    #[error("braiding is not invertible")]
    NotInvertible,
    #[error("braid equation fails on {0} ⊗ {1} ⊗ {2}")]
    BraidEquation(String, String, String),
    #[error("symmetrizer is limited to degree {MAX_DEGREE}, asked for {0}")]
    DegreeTooHigh(usize),
    #[error("the supports generate a non-abelian subgroup")]
    NotAbelianSupport,
    #[error("no skeleton: a_{}{} = {a_ij} and a_{}{} = {a_ji}, neither is -1", i + 1, j + 1, j + 1, i + 1)]
    NotASkeleton { i: usize, j: usize, a_ij: CartanEntry, a_ji: CartanEntry },
    #[error("unknown module {0:?}")]
    UnknownModule(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// An entry of a generalized Cartan matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CartanEntry {
    Value(i64),
    /// `ad^cap ≠ 0`, so the entry is at most `-cap`.
    AtMost(i64),
    /// No finite bound exists (diagonal type with `q_ii = 1`, `q_ij q_ji ≠ 1`).
    Unbounded,
}

impl CartanEntry {
    pub fn value(&self) -> Option<i64> {
        match self {
            CartanEntry::Value(v) => Some(*v),
            _ => None,
        }
    }
}

impl std::fmt::Display for CartanEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CartanEntry::Value(v) => write!(f, "{v}"),
            CartanEntry::AtMost(c) => write!(f, "≤-{c}"),
            CartanEntry::Unbounded => write!(f, "-inf"),
        }
    }
}

impl Serialize for CartanEntry {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            CartanEntry::Value(v) => s.serialize_i64(*v),
            other => s.serialize_str(&other.to_string()),
        }
    }
}

/// Default cap on adjoint powers.
pub const DEFAULT_CAP: usize = 3;

/// `a_ij = -max{m : ad^m_{M_i}(M_j) ≠ 0}` for the summands of `space`, searched up to `cap`.
pub fn cartan_matrix(space: &BraidedSpace, cap: usize) -> Result<Vec<Vec<CartanEntry>>, NicholsError> {
    if cap + 1 > MAX_DEGREE {
        return Err(NicholsError::DegreeTooHigh(cap + 1));
    }
    let k = space.block_count();
    let mut a = vec![vec![CartanEntry::Value(2); k]; k];
    for i in 0..k {
        for j in 0..k {
            if i == j {
                continue;
            }
            let mut entry = CartanEntry::AtMost(cap as i64);
            for m in 1..=cap {
                if !adjoint_power(space, i, j, m)? {
                    entry = CartanEntry::Value(1 - m as i64);
                    break;
                }
            }
            a[i][j] = entry;
        }
    }
    Ok(a)
}

/// [`cartan_matrix`] for a list of modules.
pub fn cartan_matrix_of(modules: &[YDModule], cap: usize) -> Result<Vec<Vec<CartanEntry>>, NicholsError> {
    cartan_matrix(&BraidedSpace::from_modules(modules)?, cap)
}

/// The braiding on the direct sum of `modules`.
pub fn braiding(modules: &[YDModule]) -> Result<BraidedSpace, NicholsError> {
    BraidedSpace::from_modules(modules)
}
