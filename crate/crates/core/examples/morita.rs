//! Builds the dual group for `(-1)^{k_1 j_2 i_3}` on Z2^3, identifies it as D8,
//! and verifies a witness that the sufficient condition does not cover.

use twisted_doubles::cocycles::Cochain3;
use twisted_doubles::fixtures::z2cubed_a123;
use twisted_doubles::morita::{check_theorem12, construct_dual, describe_group, example_3_7_params, example_3_7_witness, verify_witness};

fn main() {
    let params = z2cubed_a123();
    let (witness, dual) = construct_dual(&params).unwrap();
    println!("dual group: {:?}", describe_group(&dual));
    let report = verify_witness(params.group(), &Cochain3::omega(&params), &witness).unwrap();
    for c in &report.checks {
        println!("  {}: {}", c.equation, c.holds);
    }

    let params = example_3_7_params();
    let report = verify_witness(params.group(), &Cochain3::omega(&params), &example_3_7_witness()).unwrap();
    println!("sufficient condition: {}, stored witness verifies: {}", check_theorem12(&params), report.all_hold());
}
