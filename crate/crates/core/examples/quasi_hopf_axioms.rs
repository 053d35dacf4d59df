//! Checks the quasi-Hopf axioms of a few twisted doubles by exhaustive enumeration,
//! then shows a corrupted multiplication being caught.

use std::sync::Arc;

use twisted_doubles::cocycles::CocycleParams;
use twisted_doubles::fixtures::z2cubed_a123;
use twisted_doubles::tqd::{is_commutative, verify_quasi_hopf, TqdAlgebra};
use twisted_doubles::{FiniteGroup, RootOfUnity};

fn report(name: &str, a: &TqdAlgebra) {
    let r = verify_quasi_hopf(a);
    println!("{name}: dim {}, coverage {}, all axioms hold: {}, commutative: {}", a.dim(), r.coverage, r.all_pass(), is_commutative(a));
}

fn main() {
    report("D^w(Z2), a = 1", &TqdAlgebra::from_params(&CocycleParams::cyclic(2, 1).unwrap()));
    report("D^w(Z4), a = 3", &TqdAlgebra::from_params(&CocycleParams::cyclic(4, 3).unwrap()));
    report("D^w(Z2^3), a_123 = 1", &TqdAlgebra::from_params(&z2cubed_a123()));
    report("D(D8)", &TqdAlgebra::drinfeld_double(Arc::new(FiniteGroup::dihedral8())));

    let broken = TqdAlgebra::from_params(&CocycleParams::cyclic(4, 1).unwrap()).with_theta_value(1, 1, 1, RootOfUnity::MINUS_ONE);
    let r = verify_quasi_hopf(&broken);
    let fail = r.first_failure().expect("the mutation is detected");
    println!("mutated theta: {} fails at {}", fail.axiom, fail.witness.as_deref().unwrap_or("?"));
}
