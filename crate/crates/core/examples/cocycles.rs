//! Enumerates the parameter vectors on Z2 x Z4, verifies the cocycle identity
//! for each, and tests a few classes for triviality.

use std::sync::Arc;

use twisted_doubles::cocycles::{coboundary_of_2cochain, f3_pullback, is_coboundary, verify_3cocycle, CocycleParams, Cochain3};
use twisted_doubles::{FiniteAbelianGroup, RootOfUnity};

fn main() {
    let g = FiniteAbelianGroup::new(vec![2, 4]).unwrap();
    let all = CocycleParams::enumerate(&g);
    let abelian = all.iter().filter(|p| p.is_abelian()).count();
    for p in &all {
        let check = verify_3cocycle(&Cochain3::omega(p));
        assert!(check.is_valid(), "{check:?}");
    }
    println!("Z2 x Z4: {} parameter vectors, all cocycles, {abelian} abelian (commutative double)", all.len());

    // ω_a on Z_6 is never a coboundary for a ≠ 0.
    for a in 0..6 {
        let omega = Cochain3::omega(&CocycleParams::cyclic(6, a).unwrap());
        let decision = is_coboundary(&f3_pullback(&omega, &[(1, 6)]).unwrap());
        println!("Z6, a = {a}: coboundary = {}", decision.coboundary);
    }

    // A coboundary δf is recognised as one.
    let z33 = Arc::new(FiniteAbelianGroup::new(vec![3, 3]).unwrap().to_finite_group());
    let df = coboundary_of_2cochain(z33.clone(), |x, y| RootOfUnity::zeta(3, (x * y + x) as i64));
    let decision = is_coboundary(&f3_pullback(&df, &[(3, 3), (1, 3)]).unwrap());
    let w: Vec<String> = decision.witnesses.iter().map(|((i, j), g)| format!("g_{},{} = {g}", i + 1, j + 1)).collect();
    println!("Z3 x Z3, delta f: coboundary = {}, {}", decision.coboundary, w.join(", "));
}
