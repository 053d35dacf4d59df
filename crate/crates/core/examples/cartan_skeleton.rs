//! Generalized Cartan matrices and skeletons for a few collections of D8 modules.

use twisted_doubles::nichols::{cartan_matrix_of, d8, skeleton, DEFAULT_CAP};

fn main() {
    for list in ["M1,M3,M5", "M2,M3,M5", "M3,M4,M6"] {
        let modules = d8::parse_list(list).unwrap();
        let a = cartan_matrix_of(&modules, DEFAULT_CAP).unwrap();
        let rows: Vec<String> = a.iter().map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ")).collect();
        println!("{list}: [{}]", rows.join("; "));
        match skeleton(&modules, &a) {
            Ok(s) => println!("  skeleton: {} solid, {} dashed", s.solid_edges(), s.dashed_edges()),
            Err(e) => println!("  {e}"),
        }
    }
}
