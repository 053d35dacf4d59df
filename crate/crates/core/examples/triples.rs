//! Runs the infinite-dimensionality pipeline over all 20 triples of D8 modules.

use twisted_doubles::nichols::{analyze_triple, d8, Route};

fn main() {
    let all = d8::all_modules();
    for (i, j, k) in d8::triples() {
        let t = [all[i - 1].clone(), all[j - 1].clone(), all[k - 1].clone()];
        let r = analyze_triple(&t).unwrap();
        let how = match &r.route {
            Route::Diagonal { modules, .. } => format!("diagonal on {}", modules.join("+")),
            Route::Cartan { skeleton: Some(s), .. } => format!("cartan, skeleton {} solid {} dashed", s.solid_edges(), s.dashed_edges()),
            Route::Cartan { .. } => "cartan, no skeleton".to_string(),
        };
        println!("M{i} M{j} M{k}: infinite = {}, {how}", r.infinite_dimensional);
    }
}
