//! Lists the fixture catalog and prints one fixture as JSON.

use twisted_doubles::fixtures::{catalog, fixture};

fn main() {
    for f in catalog() {
        println!("{:14} v{}  {}", f.name, f.version, f.description);
    }
    println!("{}", serde_json::to_string_pretty(&fixture("M1").unwrap()).unwrap());
}
