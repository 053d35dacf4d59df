//! The six simple Yetter-Drinfeld modules `M1..M6` over `D_8 = ⟨x, y | x^4, y^2, yxy = x^{-1}⟩`
//! used throughout, with their customary basis names.

use std::sync::Arc;

use super::yd::{ModuleSpec, MonomialRep, YDModule};
use super::NicholsError;
use crate::exactmath::RootOfUnity;
use crate::groups::FiniteGroup;

pub const X: usize = 1;
pub const X2: usize = 2;
pub const X3: usize = 3;
pub const Y: usize = 4;
pub const XY: usize = 5;

pub const MODULE_NAMES: [&str; 6] = ["M1", "M2", "M3", "M4", "M5", "M6"];

pub fn group() -> Arc<FiniteGroup> {
    Arc::new(FiniteGroup::dihedral8())
}

fn m1(g: &Arc<FiniteGroup>) -> Result<YDModule, NicholsError> {
    let one = RootOfUnity::ONE;
    let neg = RootOfUnity::MINUS_ONE;
    // x: u1 ↦ u2, u2 ↦ -u1;  y: u1 ↦ -u2, u2 ↦ -u1.
    let rho = MonomialRep::from_generators(g, X2, &[(X, vec![(1, one), (0, neg)]), (Y, vec![(1, neg), (0, neg)])])?;
    Ok(YDModule::new(g.clone(), X2, rho, vec!["u1".into(), "u2".into()])?.named("M1"))
}

fn character_module(
    g: &Arc<FiniteGroup>,
    name: &str,
    s: usize,
    values: &[(usize, RootOfUnity)],
    vector: &str,
) -> Result<YDModule, NicholsError> {
    let rho = MonomialRep::character(g, s, values)?;
    Ok(YDModule::new(g.clone(), s, rho, vec![vector.into()])?.named(name))
}

/// `M_k` for `k = 1..=6`.
pub fn module_on(g: &Arc<FiniteGroup>, k: usize) -> Result<YDModule, NicholsError> {
    let neg = RootOfUnity::MINUS_ONE;
    let one = RootOfUnity::ONE;
    match k {
        1 => m1(g),
        2 => character_module(g, "M2", X, &[(X, neg)], "v"),
        3 => character_module(g, "M3", Y, &[(Y, neg), (X2, neg)], "w1"),
        4 => character_module(g, "M4", Y, &[(Y, neg), (X2, one)], "w2"),
        5 => character_module(g, "M5", XY, &[(XY, neg), (X2, neg)], "w3"),
        6 => character_module(g, "M6", XY, &[(XY, neg), (X2, one)], "w4"),
        _ => Err(NicholsError::UnknownModule(format!("M{k}"))),
    }
}

pub fn module(k: usize) -> Result<YDModule, NicholsError> {
    module_on(&group(), k)
}

/// All six modules over one shared group.
pub fn all_modules() -> Vec<YDModule> {
    let g = group();
    (1..=6).map(|k| module_on(&g, k).expect("fixed modules are valid")).collect()
}

/// Looks up `M1..M6` by name.
pub fn by_name(name: &str) -> Result<YDModule, NicholsError> {
    let k = MODULE_NAMES.iter().position(|&n| n == name).ok_or_else(|| NicholsError::UnknownModule(name.into()))?;
    module(k + 1)
}

/// Parses a comma-separated list like `M1,M3,M5` over one shared group.
pub fn parse_list(list: &str) -> Result<Vec<YDModule>, NicholsError> {
    let g = group();
    list.split(',')
        .map(|s| {
            let s = s.trim();
            let k = MODULE_NAMES.iter().position(|&n| n == s).ok_or_else(|| NicholsError::UnknownModule(s.into()))?;
            module_on(&g, k + 1)
        })
        .collect()
}

/// The JSON spec of `M_k`.
pub fn spec(k: usize) -> Result<ModuleSpec, NicholsError> {
    Ok(module(k)?.spec())
}

/// The 20 triples `(i, j, k)`, `1 ≤ i < j < k ≤ 6`.
pub fn triples() -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 1..=6 {
        for j in i + 1..=6 {
            for k in j + 1..=6 {
                out.push((i, j, k));
            }
        }
    }
    out
}
