//! Exact computations with twisted quantum doubles `D^ω(G)` of finite groups.
//!
//! All scalars are exact: roots of unity are rational exponents, and sums of
//! roots live in a cyclotomic field `Q(ζ_N)`. Nothing here touches floating point.

pub mod cli;
pub mod cocycles;
pub mod exactmath;
pub mod fixtures;
pub mod genuine;
pub mod groups;
pub mod morita;
pub mod nichols;
pub mod tqd;

pub use exactmath::{Cyclotomic, RootOfUnity};
pub use groups::{FiniteAbelianGroup, FiniteGroup};
