//! The group of group-like elements of `D^{ω_a}(Z_m)` and its invariant factors.

use twisted_doubles::cocycles::CocycleParams;
use twisted_doubles::groups::invariant_factors_of;
use twisted_doubles::tqd::{grouplike_group, TqdAlgebra};

fn main() {
    for (m, a) in [(2, 1), (4, 1), (4, 2), (6, 3), (8, 2), (9, 3)] {
        let alg = TqdAlgebra::from_params(&CocycleParams::cyclic(m, a).unwrap());
        let gl = grouplike_group(&alg).unwrap();
        let factors = invariant_factors_of(&gl.group).unwrap();
        println!("m = {m}, a = {a}: {} group-likes, invariant factors {factors:?}, relations hold: {}", gl.elements.len(), gl.relations.all());
    }
}
