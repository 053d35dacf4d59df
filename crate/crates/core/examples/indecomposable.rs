//! Finds, for each pair of D8 modules, a tensor that the squared braiding does not fix.

use twisted_doubles::nichols::{braiding, d8, is_braid_indecomposable};

fn main() {
    let all = d8::all_modules();
    for i in 0..6 {
        for j in i + 1..6 {
            let space = braiding(&[all[i].clone(), all[j].clone()]).unwrap();
            let r = is_braid_indecomposable(&space);
            match r.witness() {
                Some((x, y)) => println!("{} {}: (id - c^2)({x} ⊗ {y}) ≠ 0", all[i].name, all[j].name),
                None => println!("{} {}: c^2 = id", all[i].name, all[j].name),
            }
        }
    }
}
