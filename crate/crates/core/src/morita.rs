//! Categorical Morita equivalence between `Vec_G^ω` and `Vec_{G'}` for abelian `G`:
//! the index sets `A_1, A_2, B_1, B_2`, the sufficient condition, the dual group
//! `G' = H^ ⋊_{F^} K`, and an exact checker for the data `(H, K, F^, ε)`.

use std::collections::BTreeSet;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cocycles::{Cochain3, CocycleParams};
use crate::exactmath::RootOfUnity;
use crate::groups::{invariant_factors_of, is_isomorphic, FiniteAbelianGroup, FiniteGroup, GroupError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MoritaError {
    #[error("the sufficient condition fails: {0}")]
    ConditionFailed(String),
    #[error("malformed witness: {0}")]
    Malformed(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// The index sets, 1-based.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionSets {
    pub a1: BTreeSet<usize>,
    pub a2: BTreeSet<usize>,
    pub b1: BTreeSet<usize>,
    pub b2: BTreeSet<usize>,
    pub a: BTreeSet<usize>,
    pub b: BTreeSet<usize>,
}

pub fn condition_sets(params: &CocycleParams) -> ConditionSets {
    let mut s = ConditionSets::default();
    for ((i, j), _) in params.pairs() {
        s.a1.insert(i + 1);
        s.b1.insert(j + 1);
    }
    for ((i, j, k), _) in params.triples() {
        s.a2.insert(i + 1);
        s.b2.insert(j + 1);
        s.b2.insert(k + 1);
    }
    s.a = s.a1.union(&s.a2).copied().collect();
    s.b = s.b1.union(&s.b2).copied().collect();
    s
}

/// All `a_l = 0` and `A ∩ B = ∅`.
pub fn check_theorem12(params: &CocycleParams) -> bool {
    let s = condition_sets(params);
    params.a1().iter().all(|&a| a == 0) && s.a.is_disjoint(&s.b)
}

/// All `a_l = 0`, all `a_rst = 0`, and `A_1 ∩ B_1 = ∅`.
pub fn is_dual_abelian(params: &CocycleParams) -> bool {
    let s = condition_sets(params);
    params.a1().iter().all(|&a| a == 0) && params.is_abelian() && s.a1.is_disjoint(&s.b1)
}

/// Data `(H, K, F^, ε)` with `F = 1`, realizing `G ≅ H × K`.
///
/// `split[e] = (h, k)` gives the `H` and `K` indices of the element of `G` at index `e`.
/// `fhat[k1·|K| + k2]` is the index of `F^(k1, k2)` in `H^`, whose characters are indexed
/// like the elements of `H`. `epsilon` is indexed by `(k1·|K| + k2)·|K| + k3`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoritaWitness {
    pub h: FiniteAbelianGroup,
    pub k: FiniteAbelianGroup,
    pub split: Vec<(usize, usize)>,
    pub fhat: Vec<usize>,
    pub epsilon: Vec<RootOfUnity>,
}

impl MoritaWitness {
    /// `H^ ⋊_{F^} K`.
    pub fn dual_group(&self) -> Result<FiniteGroup, MoritaError> {
        let nk = self.k.order();
        Ok(FiniteGroup::central_extension(&self.k, &self.h, |a, b| self.fhat[a * nk + b])?)
    }

    /// `F^(k1, k2)(h)`.
    pub fn fhat_at(&self, k1: usize, k2: usize, h: usize) -> RootOfUnity {
        let chi = self.h.element(self.fhat[k1 * self.k.order() + k2]);
        self.h.character(&chi, &self.h.element(h))
    }

    fn epsilon_at(&self, k1: usize, k2: usize, k3: usize) -> RootOfUnity {
        let nk = self.k.order();
        self.epsilon[(k1 * nk + k2) * nk + k3]
    }

    /// Copy with one `F^` value replaced, for mutation tests.
    pub fn with_fhat_value(&self, k1: usize, k2: usize, chi: usize) -> Self {
        let mut w = self.clone();
        w.fhat[k1 * self.k.order() + k2] = chi;
        w
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquationCheck {
    pub equation: &'static str,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
}

fn equation(name: &'static str, witness: Option<Vec<usize>>) -> EquationCheck {
    EquationCheck { equation: name, holds: witness.is_none(), witness }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub checks: Vec<EquationCheck>,
    /// Read off from the checks: the categorical equivalence, and with it gauge
    /// equivalence of `D^ω(G)` and `D(G')`, is not computed independently.
    pub gauge_equivalent: bool,
}

impl WitnessReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn check(&self, name: &str) -> Option<&EquationCheck> {
        self.checks.iter().find(|c| c.equation == name)
    }
}

fn structural(g: &FiniteAbelianGroup, w: &MoritaWitness) -> Result<(), MoritaError> {
    let (nh, nk) = (w.h.order(), w.k.order());
    if w.split.len() != g.order() {
        return Err(MoritaError::Malformed(format!("split has {} entries for a group of order {}", w.split.len(), g.order())));
    }
    if w.split.iter().any(|&(h, k)| h >= nh || k >= nk) {
        return Err(MoritaError::Malformed("split index out of range".into()));
    }
    if w.fhat.len() != nk * nk || w.fhat.iter().any(|&c| c >= nh) {
        return Err(MoritaError::Malformed("F^ table has the wrong shape".into()));
    }
    if w.epsilon.len() != nk * nk * nk {
        return Err(MoritaError::Malformed("epsilon table has the wrong shape".into()));
    }
    Ok(())
}

/// Checks each defining equation of the witness exactly, over all tuples.
pub fn verify_witness(g: &FiniteAbelianGroup, omega: &Cochain3, w: &MoritaWitness) -> Result<WitnessReport, MoritaError> {
    structural(g, w)?;
    if **omega.group() != g.to_finite_group() {
        return Err(MoritaError::Malformed("omega lives on a different group".into()));
    }
    let (nh, nk, n) = (w.h.order(), w.k.order(), g.order());
    let helems: Vec<Vec<u64>> = w.h.elements().collect();
    let kelems: Vec<Vec<u64>> = w.k.elements().collect();
    let gelems: Vec<Vec<u64>> = g.elements().collect();
    let hmul = |a: usize, b: usize| w.h.index_of(&w.h.mul(&helems[a], &helems[b]));
    let kmul = |a: usize, b: usize| w.k.index_of(&w.k.mul(&kelems[a], &kelems[b]));
    let mut checks = Vec::new();

    // the split is a bijective homomorphism G → H × K
    let mut seen = vec![false; nh * nk];
    let mut bad = None;
    for (e, &(h, k)) in w.split.iter().enumerate() {
        if std::mem::replace(&mut seen[h * nk + k], true) {
            bad = Some(vec![e]);
            break;
        }
    }
    if bad.is_none() && nh * nk != n {
        bad = Some(vec![]);
    }
    if bad.is_none() {
        'outer: for x in 0..n {
            for y in 0..n {
                let xy = g.index_of(&g.mul(&gelems[x], &gelems[y]));
                let (hx, kx) = w.split[x];
                let (hy, ky) = w.split[y];
                if w.split[xy] != (hmul(hx, hy), kmul(kx, ky)) {
                    bad = Some(vec![x, y]);
                    break 'outer;
                }
            }
        }
    }
    checks.push(equation("split_isomorphism", bad));

    // F^ is a normalized 2-cocycle K × K → H^
    let f = |a: usize, b: usize| w.fhat[a * nk + b];
    let mut bad = (0..nk).find(|&a| f(a, 0) != 0 || f(0, a) != 0).map(|a| vec![a]);
    if bad.is_none() {
        'outer: for a in 0..nk {
            for b in 0..nk {
                for c in 0..nk {
                    if hmul(f(a, b), f(kmul(a, b), c)) != hmul(f(b, c), f(a, kmul(b, c))) {
                        bad = Some(vec![a, b, c]);
                        break 'outer;
                    }
                }
            }
        }
    }
    checks.push(equation("fhat_2_cocycle", bad));

    // F^ ∧ F = δ_K ε with F = 1, i.e. δε = 1
    let eps = |a, b, c| w.epsilon_at(a, b, c);
    let mut bad = None;
    'outer: for a in 0..nk {
        for b in 0..nk {
            for c in 0..nk {
                for d in 0..nk {
                    let v = eps(b, c, d) * eps(a, kmul(b, c), d) * eps(a, b, c)
                        / (eps(kmul(a, b), c, d) * eps(a, b, kmul(c, d)));
                    if !v.is_one() {
                        bad = Some(vec![a, b, c, d]);
                        break 'outer;
                    }
                }
            }
        }
    }
    checks.push(equation("wedge_equals_delta_epsilon", bad));

    // ω(u, v, w) = F^(k_u, k_v)(h_w) ε(k_u, k_v, k_w)
    let mut bad = None;
    'outer: for u in 0..n {
        for v in 0..n {
            for x in 0..n {
                let (_, ku) = w.split[u];
                let (_, kv) = w.split[v];
                let (hx, kx) = w.split[x];
                if omega.eval(u, v, x) != w.fhat_at(ku, kv, hx) * eps(ku, kv, kx) {
                    bad = Some(vec![u, v, x]);
                    break 'outer;
                }
            }
        }
    }
    checks.push(equation("omega_matches", bad));

    // ω^((ρ1,k1),(ρ2,k2),(ρ3,k3)) = ε(k1,k2,k3) ρ1(F(k2,k3)) = ε(k1,k2,k3) must be trivial
    let bad = (0..nk * nk * nk).find(|&i| !w.epsilon[i].is_one()).map(|i| vec![i / (nk * nk), (i / nk) % nk, i % nk]);
    checks.push(equation("dual_cocycle_trivial", bad));

    let gauge_equivalent = checks.iter().all(|c| c.holds);
    Ok(WitnessReport { checks, gauge_equivalent })
}

fn sub_group(g: &FiniteAbelianGroup, idx: &[usize]) -> FiniteAbelianGroup {
    FiniteAbelianGroup::new(idx.iter().map(|&i| g.factors()[i]).collect()).expect("a sub-chain of a divisor chain")
}

/// The witness `H = ∏_{i∈A} Z_{m_i}`, `K` the remaining factors, `F^` from the parameters, `ε = 1`.
pub fn construct_witness(params: &CocycleParams) -> Result<MoritaWitness, MoritaError> {
    if params.a1().iter().any(|&a| a != 0) {
        return Err(MoritaError::ConditionFailed("some a_l is nonzero".into()));
    }
    let sets = condition_sets(params);
    if let Some(i) = sets.a.intersection(&sets.b).next() {
        return Err(MoritaError::ConditionFailed(format!("index {i} lies in both A and B")));
    }
    let g = params.group();
    let m = g.factors();
    let a_idx: Vec<usize> = (0..m.len()).filter(|i| sets.a.contains(&(i + 1))).collect();
    let k_idx: Vec<usize> = (0..m.len()).filter(|i| !sets.a.contains(&(i + 1))).collect();
    let h = sub_group(g, &a_idx);
    let k = sub_group(g, &k_idx);
    let pos_h = |i: usize| a_idx.iter().position(|&x| x == i).expect("index in A");
    let pos_k = |i: usize| k_idx.iter().position(|&x| x == i).expect("index outside A");

    let split = g
        .elements()
        .map(|e| {
            let he: Vec<u64> = a_idx.iter().map(|&i| e[i]).collect();
            let ke: Vec<u64> = k_idx.iter().map(|&i| e[i]).collect();
            (h.index_of(&he), k.index_of(&ke))
        })
        .collect();

    let kelems: Vec<Vec<u64>> = k.elements().collect();
    let mut fhat = Vec::with_capacity(kelems.len() * kelems.len());
    for x in &kelems {
        for y in &kelems {
            let mut chi = vec![0u64; a_idx.len()];
            for ((p, q), a) in params.pairs() {
                let (i, j) = (x[pos_k(q)], y[pos_k(q)]);
                let slot = pos_h(p);
                chi[slot] = (chi[slot] + a * ((i + j) / m[q])) % m[p];
            }
            for ((r, s, t), a) in params.triples() {
                let gcd = m[r].gcd(&m[s]).gcd(&m[t]);
                let (js, it) = (y[pos_k(s)], x[pos_k(t)]);
                let slot = pos_h(r);
                chi[slot] = (chi[slot] + a * (m[r] / gcd) * js * it) % m[r];
            }
            fhat.push(h.index_of(&chi));
        }
    }
    let nk = k.order();
    Ok(MoritaWitness { h, k, split, fhat, epsilon: vec![RootOfUnity::ONE; nk * nk * nk] })
}

/// Summary of `G'`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualGroupReport {
    pub order: usize,
    pub abelian: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invariant_factors: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub iso_class: Option<String>,
}

pub fn describe_group(g: &FiniteGroup) -> DualGroupReport {
    if g.is_abelian() {
        return DualGroupReport {
            order: g.order(),
            abelian: true,
            invariant_factors: invariant_factors_of(g).ok(),
            iso_class: None,
        };
    }
    let iso_class = if is_isomorphic(g, &FiniteGroup::dihedral8()).unwrap_or(false) {
        Some("D8".to_string())
    } else if is_isomorphic(g, &FiniteGroup::quaternion8()).unwrap_or(false) {
        Some("Q8".to_string())
    } else {
        None
    };
    DualGroupReport { order: g.order(), abelian: false, invariant_factors: None, iso_class }
}

/// Builds the witness and `G' = H^ ⋊_{F^} K`; fails unless the sufficient condition holds.
pub fn construct_dual(params: &CocycleParams) -> Result<(MoritaWitness, FiniteGroup), MoritaError> {
    let w = construct_witness(params)?;
    let g = w.dual_group()?;
    Ok((w, g))
}

/// Everything `morita check`/`construct` report for one parameter vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MoritaReport {
    pub condition_sets: ConditionSets,
    pub theorem12: bool,
    pub dual_abelian: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dual_group: Option<DualGroupReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_report: Option<WitnessReport>,
}

pub fn morita_report(params: &CocycleParams) -> Result<MoritaReport, MoritaError> {
    let condition_sets = condition_sets(params);
    let theorem12 = check_theorem12(params);
    let (dual_group, witness_report) = if theorem12 {
        let (w, gp) = construct_dual(params)?;
        let omega = Cochain3::omega(params);
        (Some(describe_group(&gp)), Some(verify_witness(params.group(), &omega, &w)?))
    } else {
        (None, None)
    };
    Ok(MoritaReport { condition_sets, theorem12, dual_abelian: is_dual_abelian(params), dual_group, witness_report })
}

/// The parameters `ā = (0,1,0,1,1,1,0)` on `Z_2^3`.
pub fn example_3_7_params() -> CocycleParams {
    let g = FiniteAbelianGroup::new(vec![2, 2, 2]).expect("valid group");
    let a2 = [((0, 1), 1), ((0, 2), 1), ((1, 2), 1)].into_iter().collect();
    CocycleParams::new(g, vec![0, 1, 0], a2, Default::default()).expect("valid parameters")
}

/// `H = <g1>`, `K = <g1 g2> × <g3>`, `F^ = χ1^{⌊(i2+j2)/2⌋ + ⌊(i3+j3)/2⌋}`, `ε = 1`.
pub fn example_3_7_witness() -> MoritaWitness {
    let g = FiniteAbelianGroup::new(vec![2, 2, 2]).expect("valid group");
    let h = FiniteAbelianGroup::new(vec![2]).expect("valid group");
    let k = FiniteAbelianGroup::new(vec![2, 2]).expect("valid group");
    // g1^{i1} g2^{i2} g3^{i3} = g1^{i1-i2} (g1 g2)^{i2} g3^{i3}
    let split = g
        .elements()
        .map(|e| (h.index_of(&[(e[0] + 2 - e[1]) % 2]), k.index_of(&[e[1], e[2]])))
        .collect();
    let kelems: Vec<Vec<u64>> = k.elements().collect();
    let fhat = kelems
        .iter()
        .flat_map(|x| kelems.iter().map(move |y| (((x[0] + y[0]) / 2 + (x[1] + y[1]) / 2) % 2) as usize))
        .collect();
    MoritaWitness { h, k, split, fhat, epsilon: vec![RootOfUnity::ONE; 64] }
}
