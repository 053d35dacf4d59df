use num_integer::Integer;
use serde::Serialize;

use super::{TqdAlgebra, TqdElement, TqdError};
use crate::cocycles::omega_g;
use crate::exactmath::{Cyclotomic, RootOfUnity};
use crate::groups::FiniteGroup;

fn cyclic(a: &TqdAlgebra) -> Result<(u64, u64), TqdError> {
    a.cyclic_data().ok_or(TqdError::NotCyclic)
}

/// `τ_{g^k}(g^i) = ζ_{m²}^{aki}`.
fn tau(m: u64, a: u64, k: u64, i: u64) -> RootOfUnity {
    RootOfUnity::zeta(m * m, (a * k * i) as i64)
}

/// `σ_τ(χ^j, g^k) = Σ_i χ^j(g^i) τ_{g^k}(g^i) e(g^i) ⊗ g^k`.
pub fn grouplike(a: &TqdAlgebra, j: u64, k: u64) -> Result<TqdElement, TqdError> {
    let (m, w) = cyclic(a)?;
    let k = k % m;
    Ok(TqdElement::from_terms((0..m).map(|i| {
        let c = RootOfUnity::zeta(m, (i * j) as i64) * tau(m, w, k, i);
        ((i as usize, k as usize), Cyclotomic::root(c))
    })))
}

/// Checks `Δ(u) = u ⊗ u` and `ε(u) = 1`.
pub fn is_grouplike(a: &TqdAlgebra, u: &TqdElement) -> bool {
    let t = a.tensor1(u);
    let square = a.insert_at(&t, 1, u);
    a.comul(u).difference(&square).is_none() && a.counit(u) == Cyclotomic::one(1)
}

/// Which defining relations of `⟨s, t | t^{m²/(m,2a)} = s^m = 1, s^{2a} = t^m, st = ts⟩` hold.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Relations {
    pub t_order: bool,
    pub s_order: bool,
    pub s_2a_is_t_m: bool,
    pub commute: bool,
}

impl Relations {
    pub fn all(&self) -> bool {
        self.t_order && self.s_order && self.s_2a_is_t_m && self.commute
    }
}

/// `Γ^ω` for `ω_a` on `Z_m`: element `c·m + b` is `σ_τ(χ^c, g^b)`.
#[derive(Clone, Debug)]
pub struct GrouplikeGroup {
    pub m: u64,
    pub a: u64,
    pub elements: Vec<TqdElement>,
    pub group: FiniteGroup,
    /// `π(σ_τ(α, g^b)) = b`.
    pub projection: Vec<usize>,
    /// Indices of `σ_τ(χ^c, 1) = χ^c ⊗ 1`.
    pub characters: Vec<usize>,
    pub s: usize,
    pub t: usize,
    pub relations: Relations,
}

/// Enumerates the `m²` group-likes and computes their multiplication table with `tqd_mul`.
pub fn grouplike_group(a: &TqdAlgebra) -> Result<GrouplikeGroup, TqdError> {
    let (m, w) = cyclic(a)?;
    if m > 12 {
        return Err(TqdError::TooLarge(m));
    }
    let n = (m * m) as usize;
    let mu = m as usize;
    let elements: Vec<TqdElement> =
        (0..n).map(|i| grouplike(a, (i / mu) as u64, (i % mu) as u64)).collect::<Result<_, _>>()?;
    let mut table = vec![0; n * n];
    for p in 0..n {
        for q in 0..n {
            let prod = a.mul(&elements[p], &elements[q]);
            let b = (p % mu + q % mu) % mu;
            table[p * n + q] = (0..mu)
                .map(|c| c * mu + b)
                .find(|&r| elements[r] == prod)
                .ok_or(TqdError::NotClosed(p, q))?;
        }
    }
    let names = (0..n).map(|i| format!("sigma(chi^{}, g^{})", i / mu, i % mu)).collect();
    let group = FiniteGroup::from_table(table, names)?;
    let (s, t) = (mu, 1);
    let d = (2 * w).gcd(&m);
    let relations = Relations {
        t_order: group.pow(t, (m * m / d) as i64) == group.identity(),
        s_order: group.pow(s, m as i64) == group.identity(),
        s_2a_is_t_m: group.pow(s, (2 * w) as i64) == group.pow(t, m as i64),
        commute: group.commute(s, t),
    };
    Ok(GrouplikeGroup {
        m,
        a: w,
        elements,
        group,
        projection: (0..n).map(|i| i % mu).collect(),
        characters: (0..mu).map(|c| c * mu).collect(),
        s,
        t,
        relations,
    })
}

/// Closed form `β(g^i, g^j) = χ^{2a⌊(i+j)/m⌋}`, returned as the exponent of `χ` mod `m`.
pub fn beta_extension_cocycle(a: &TqdAlgebra, i: u64, j: u64) -> Result<u64, TqdError> {
    let (m, w) = cyclic(a)?;
    let (i, j) = (i % m, j % m);
    Ok((2 * w * ((i + j) / m)) % m)
}

/// `β(x,y)(g) = τ_x(g) τ_y(g) / τ_{xy}(g) · ω_g(x,y)` evaluated pointwise, then read off as a power of `χ`.
pub fn beta_direct(a: &TqdAlgebra, i: u64, j: u64) -> Result<Option<u64>, TqdError> {
    let (m, w) = cyclic(a)?;
    let (i, j) = (i % m, j % m);
    let values: Vec<RootOfUnity> = (0..m)
        .map(|l| {
            tau(m, w, i, l) * tau(m, w, j, l) / tau(m, w, (i + j) % m, l)
                * omega_g(a.omega(), l as usize, i as usize, j as usize)
        })
        .collect();
    let Some(e) = values[(1 % m) as usize].exponent_over(m) else { return Ok(None) };
    let is_char = values.iter().enumerate().all(|(l, v)| *v == RootOfUnity::zeta(m, (e * l as u64) as i64));
    Ok(is_char.then_some(e))
}
