//! Diagonalizes the braiding of M1 + M2 over D8 and prints its matrix and Dynkin diagram.

use twisted_doubles::nichols::{d8, diagonalize_braiding};

fn main() {
    let modules = d8::parse_list("M1,M2").unwrap();
    let b = diagonalize_braiding(&modules).unwrap();
    let labels: Vec<&str> = b.eigenvectors.iter().map(|e| e.label.as_str()).collect();
    println!("basis: {labels:?}");
    for row in &b.matrix {
        let cells: Vec<String> = row.iter().map(|q| q.to_string()).collect();
        println!("  {}", cells.join("  "));
    }
    println!("diagram: {}", serde_json::to_string(&b.diagram).unwrap());
}
