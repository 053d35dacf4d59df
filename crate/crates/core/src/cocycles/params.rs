use std::collections::BTreeMap;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::CocycleError;
use crate::exactmath::RootOfUnity;
use crate::groups::FiniteAbelianGroup;

/// Parameters `ā = (a_l; a_st; a_rst)` of the normalized 3-cocycle `ω_ā` on `Z_{m_1} × ... × Z_{m_n}`.
///
/// Indices are 0-based in the API and 1-based in JSON, where pair and triple keys
/// read `"(s,t)"` and `"(r,s,t)"`. Zero entries are not stored in the maps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ParamsRepr", into = "ParamsRepr")]
pub struct CocycleParams {
    group: FiniteAbelianGroup,
    a1: Vec<u64>,
    a2: BTreeMap<(usize, usize), u64>,
    a3: BTreeMap<(usize, usize, usize), u64>,
}

fn gcd3(a: u64, b: u64, c: u64) -> u64 {
    a.gcd(&b).gcd(&c)
}

impl CocycleParams {
    pub fn new(
        group: FiniteAbelianGroup,
        a1: Vec<u64>,
        a2: BTreeMap<(usize, usize), u64>,
        a3: BTreeMap<(usize, usize, usize), u64>,
    ) -> Result<Self, CocycleError> {
        let m = group.factors();
        let n = m.len();
        if a1.len() != n {
            return Err(CocycleError::WrongArity { expected: n, got: a1.len() });
        }
        for (l, &a) in a1.iter().enumerate() {
            if a >= m[l] {
                return Err(CocycleError::OutOfRange { key: format!("a_{}", l + 1), value: a, bound: m[l] });
            }
        }
        for (&(s, t), &a) in &a2 {
            if !(s < t && t < n) {
                return Err(CocycleError::BadKey(format!("({},{})", s + 1, t + 1)));
            }
            let bound = m[s].gcd(&m[t]);
            if a >= bound {
                return Err(CocycleError::OutOfRange { key: format!("a_{}{}", s + 1, t + 1), value: a, bound });
            }
        }
        for (&(r, s, t), &a) in &a3 {
            if !(r < s && s < t && t < n) {
                return Err(CocycleError::BadKey(format!("({},{},{})", r + 1, s + 1, t + 1)));
            }
            let bound = gcd3(m[r], m[s], m[t]);
            if a >= bound {
                return Err(CocycleError::OutOfRange {
                    key: format!("a_{}{}{}", r + 1, s + 1, t + 1),
                    value: a,
                    bound,
                });
            }
        }
        let a2 = a2.into_iter().filter(|(_, v)| *v != 0).collect();
        let a3 = a3.into_iter().filter(|(_, v)| *v != 0).collect();
        Ok(CocycleParams { group, a1, a2, a3 })
    }

    /// `ā = 0`.
    pub fn zero(group: FiniteAbelianGroup) -> Self {
        let n = group.rank();
        CocycleParams { group, a1: vec![0; n], a2: BTreeMap::new(), a3: BTreeMap::new() }
    }

    /// `ω_a` on `Z_m`.
    pub fn cyclic(m: u64, a: u64) -> Result<Self, CocycleError> {
        Self::new(FiniteAbelianGroup::cyclic(m)?, vec![a], BTreeMap::new(), BTreeMap::new())
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn a1(&self) -> &[u64] {
        &self.a1
    }

    pub fn a2(&self, s: usize, t: usize) -> u64 {
        self.a2.get(&(s, t)).copied().unwrap_or(0)
    }

    pub fn a3(&self, r: usize, s: usize, t: usize) -> u64 {
        self.a3.get(&(r, s, t)).copied().unwrap_or(0)
    }

    /// Nonzero pair parameters.
    pub fn pairs(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.a2.iter().map(|(&k, &v)| (k, v))
    }

    /// Nonzero triple parameters.
    pub fn triples(&self) -> impl Iterator<Item = ((usize, usize, usize), u64)> + '_ {
        self.a3.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_zero(&self) -> bool {
        self.a1.iter().all(|&a| a == 0) && self.a2.is_empty() && self.a3.is_empty()
    }

    /// Every admissible parameter vector on `group`.
    pub fn enumerate(group: &FiniteAbelianGroup) -> Vec<CocycleParams> {
        let m = group.factors();
        let n = m.len();
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|s| (s + 1..n).map(move |t| (s, t))).collect();
        let triples: Vec<(usize, usize, usize)> = (0..n)
            .flat_map(|r| (r + 1..n).flat_map(move |s| (s + 1..n).map(move |t| (r, s, t))))
            .collect();
        let mut bounds: Vec<u64> = m.to_vec();
        bounds.extend(pairs.iter().map(|&(s, t)| m[s].gcd(&m[t])));
        bounds.extend(triples.iter().map(|&(r, s, t)| gcd3(m[r], m[s], m[t])));
        let total: u64 = bounds.iter().product();
        (0..total)
            .map(|mut code| {
                let mut digits = vec![0u64; bounds.len()];
                for (d, &b) in digits.iter_mut().zip(&bounds).rev() {
                    *d = code % b;
                    code /= b;
                }
                let a1 = digits[..n].to_vec();
                let a2 = pairs.iter().copied().zip(digits[n..n + pairs.len()].iter().copied()).collect();
                let a3 = triples.iter().copied().zip(digits[n + pairs.len()..].iter().copied()).collect();
                CocycleParams::new(group.clone(), a1, a2, a3).expect("enumerated within bounds")
            })
            .collect()
    }

    /// `ω_ā(u, v, w)` on exponent vectors.
    pub fn eval(&self, i: &[u64], j: &[u64], k: &[u64]) -> RootOfUnity {
        let m = self.group.factors();
        let carry = |x: u64, y: u64, modulus: u64| ((x % modulus + y % modulus) / modulus) as i64;
        let mut r = RootOfUnity::ONE;
        for (l, &a) in self.a1.iter().enumerate() {
            if a != 0 {
                r = r * RootOfUnity::zeta(m[l], a as i64 * i[l] as i64 * carry(j[l], k[l], m[l]));
            }
        }
        for (&(s, t), &a) in &self.a2 {
            r = r * RootOfUnity::zeta(m[s], a as i64 * k[s] as i64 * carry(i[t], j[t], m[t]));
        }
        for (&(rr, s, t), &a) in &self.a3 {
            let g = gcd3(m[rr], m[s], m[t]);
            r = r * RootOfUnity::zeta(g, (a * k[rr] * j[s] * i[t] % g) as i64);
        }
        r
    }

    /// `ω_ā` is abelian, i.e. `D^ω(G)` is commutative, exactly when every `a_rst` vanishes.
    pub fn is_abelian(&self) -> bool {
        self.a3.is_empty()
    }
}

/// `ω_ā(u, v, w)` on exponent vectors.
pub fn eval_omega(params: &CocycleParams, u: &[u64], v: &[u64], w: &[u64]) -> RootOfUnity {
    params.eval(u, v, w)
}

pub fn is_abelian(params: &CocycleParams) -> bool {
    params.is_abelian()
}

#[derive(Serialize, Deserialize)]
struct ParamsRepr {
    group: Vec<u64>,
    a: Vec<u64>,
    #[serde(default)]
    a2: BTreeMap<String, u64>,
    #[serde(default)]
    a3: BTreeMap<String, u64>,
}

fn parse_key(key: &str) -> Result<Vec<usize>, CocycleError> {
    let bad = || CocycleError::BadKey(key.to_string());
    let inner = key.trim().strip_prefix('(').and_then(|s| s.strip_suffix(')')).ok_or_else(bad)?;
    inner
        .split(',')
        .map(|p| match p.trim().parse::<usize>() {
            Ok(v) if v >= 1 => Ok(v - 1),
            _ => Err(bad()),
        })
        .collect()
}

impl TryFrom<ParamsRepr> for CocycleParams {
    type Error = CocycleError;
    fn try_from(r: ParamsRepr) -> Result<Self, CocycleError> {
        let group = FiniteAbelianGroup::new(r.group)?;
        let mut a2 = BTreeMap::new();
        for (k, v) in r.a2 {
            match parse_key(&k)?.as_slice() {
                &[s, t] => {
                    a2.insert((s, t), v);
                }
                _ => return Err(CocycleError::BadKey(k)),
            }
        }
        let mut a3 = BTreeMap::new();
        for (k, v) in r.a3 {
            match parse_key(&k)?.as_slice() {
                &[x, s, t] => {
                    a3.insert((x, s, t), v);
                }
                _ => return Err(CocycleError::BadKey(k)),
            }
        }
        CocycleParams::new(group, r.a, a2, a3)
    }
}

impl From<CocycleParams> for ParamsRepr {
    fn from(p: CocycleParams) -> Self {
        ParamsRepr {
            group: p.group.factors().to_vec(),
            a: p.a1,
            a2: p.a2.iter().map(|(&(s, t), &v)| (format!("({},{})", s + 1, t + 1), v)).collect(),
            a3: p
                .a3
                .iter()
                .map(|(&(r, s, t), &v)| (format!("({},{},{})", r + 1, s + 1, t + 1), v))
                .collect(),
        }
    }
}
