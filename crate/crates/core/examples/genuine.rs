//! Decides genuineness of `D^{ω_a}(Z_m)` three ways and prints the explicit trace for one case.

use twisted_doubles::genuine::{decide_explicit, genuineness_report};

fn main() {
    for m in 2..=8 {
        let row: Vec<String> = (1..m)
            .map(|a| {
                let r = genuineness_report(m, a, true).unwrap();
                assert!(r.consistent());
                format!("{a}:{}", if r.genuine() { "G" } else { "-" })
            })
            .collect();
        println!("m = {m}: {}", row.join(" "));
    }
    let trace = decide_explicit(4, 1).unwrap();
    println!("{}", serde_json::to_string_pretty(&trace).unwrap());
}
