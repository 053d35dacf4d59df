use serde::Serialize;

use super::{CocycleError, Cochain3};
use crate::exactmath::{nth_root_solutions, RootOfUnity};

/// Images of the degree-3 generators `Ψ_{r,r,r}`, `Ψ_{i,i,j}`, `Ψ_{i,j,j}`, `Ψ_{r,s,t}`
/// of the standard resolution of `Z_{n_1} × ... × Z_{n_k}` under a 3-cocycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PsiValues {
    pub orders: Vec<u64>,
    pub lll: Vec<RootOfUnity>,
    pub iij: Vec<((usize, usize), RootOfUnity)>,
    pub ijj: Vec<((usize, usize), RootOfUnity)>,
    pub rst: Vec<((usize, usize, usize), RootOfUnity)>,
}

/// Result of [`is_coboundary`]. `witnesses` holds one `g_{i,j}` per pair when the answer is yes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoboundaryDecision {
    pub coboundary: bool,
    pub witnesses: Vec<((usize, usize), RootOfUnity)>,
    pub reason: Option<String>,
}

/// Evaluates the chain map `F_3` against `c` on the generators `gens = [(g_1, n_1), ...]` of the abelian group.
pub fn f3_pullback(c: &Cochain3, gens: &[(usize, u64)]) -> Result<PsiValues, CocycleError> {
    let g = c.group();
    if !g.is_abelian() {
        return Err(CocycleError::NotAbelian);
    }
    for &(x, n) in gens {
        if x >= g.order() || g.element_order(x) as u64 != n {
            return Err(CocycleError::NotGenerating(format!("element {x} does not have order {n}")));
        }
    }
    let total: u64 = gens.iter().map(|&(_, n)| n).product();
    if total != g.order() as u64 {
        return Err(CocycleError::NotGenerating(format!(
            "orders multiply to {total}, group has order {}",
            g.order()
        )));
    }
    // The product map ∏ Z_{n_i} → E must be onto (hence bijective).
    let mut hit = vec![false; g.order()];
    let mut idx = vec![0u64; gens.len()];
    for _ in 0..total {
        let e = gens
            .iter()
            .zip(&idx)
            .fold(g.identity(), |acc, (&(x, _), &p)| g.mul(acc, g.pow(x, p as i64)));
        hit[e] = true;
        for (slot, &(_, n)) in idx.iter_mut().zip(gens).rev() {
            *slot += 1;
            if *slot < n {
                break;
            }
            *slot = 0;
        }
    }
    if hit.iter().any(|h| !h) {
        return Err(CocycleError::NotGenerating("generators do not span the group".into()));
    }

    let k = gens.len();
    let pw = |r: usize, l: u64| g.pow(gens[r].0, l as i64);
    let lll = (0..k)
        .map(|r| {
            let gr = gens[r].0;
            (0..gens[r].1).map(|l| c.eval(gr, pw(r, l), gr)).product()
        })
        .collect();
    let mut iij = Vec::new();
    let mut ijj = Vec::new();
    for r in 0..k {
        for s in r + 1..k {
            let (gr, gs) = (gens[r].0, gens[s].0);
            let v_rrs = (0..gens[r].1)
                .map(|l| {
                    let x = pw(r, l);
                    c.eval(x, gr, gs) / c.eval(x, gs, gr) * c.eval(gs, x, gr)
                })
                .product();
            let v_rss = (0..gens[s].1)
                .map(|l| {
                    let x = pw(s, l);
                    c.eval(gr, x, gs) / c.eval(x, gr, gs) * c.eval(x, gs, gr)
                })
                .product();
            iij.push(((r, s), v_rrs));
            ijj.push(((r, s), v_rss));
        }
    }
    let mut rst = Vec::new();
    for r in 0..k {
        for s in r + 1..k {
            for t in s + 1..k {
                let (a, b, d) = (gens[r].0, gens[s].0, gens[t].0);
                let v = c.eval(a, b, d) / c.eval(b, a, d) / c.eval(a, d, b)
                    * c.eval(d, a, b)
                    * c.eval(b, d, a)
                    / c.eval(d, b, a);
                rst.push(((r, s, t), v));
            }
        }
    }
    Ok(PsiValues { orders: gens.iter().map(|&(_, n)| n).collect(), lll, iij, ijj, rst })
}

/// Does `g` solve both pair equations `g^{n_i} = v_iij` and `g^{-n_j} = v_ijj`?
pub fn solves_pair(psi: &PsiValues, i: usize, j: usize, g: RootOfUnity) -> bool {
    let find = |v: &[((usize, usize), RootOfUnity)]| v.iter().find(|(k, _)| *k == (i, j)).map(|(_, r)| *r);
    match (find(&psi.iij), find(&psi.ijj)) {
        (Some(a), Some(b)) => g.pow(psi.orders[i] as i64) == a && g.pow(-(psi.orders[j] as i64)) == b,
        _ => false,
    }
}

/// Decides whether the cocycle behind `psi` is a coboundary.
pub fn is_coboundary(psi: &PsiValues) -> CoboundaryDecision {
    let no = |reason: String| CoboundaryDecision { coboundary: false, witnesses: Vec::new(), reason: Some(reason) };
    if let Some((r, v)) = psi.lll.iter().enumerate().find(|(_, v)| !v.is_one()) {
        return no(format!("Psi_{{{0},{0},{0}}} maps to {v}", r + 1));
    }
    if let Some(((r, s, t), v)) = psi.rst.iter().find(|(_, v)| !v.is_one()) {
        return no(format!("Psi_{{{},{},{}}} maps to {v}", r + 1, s + 1, t + 1));
    }
    let mut witnesses = Vec::new();
    for &((i, j), v_iij) in &psi.iij {
        let sols = nth_root_solutions(psi.orders[i], v_iij).expect("generator orders are positive");
        match sols.into_iter().find(|&g| solves_pair(psi, i, j, g)) {
            Some(g) => witnesses.push(((i, j), g)),
            None => return no(format!("no g_{{{},{}}} solves both power equations", i + 1, j + 1)),
        }
    }
    CoboundaryDecision { coboundary: true, witnesses, reason: None }
}
