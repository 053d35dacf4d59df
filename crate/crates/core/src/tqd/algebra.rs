use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::TqdError;
use crate::cocycles::{gamma, theta, verify_3cocycle, Cochain3, CocycleParams};
use crate::exactmath::{Cyclotomic, RootOfUnity};
use crate::groups::FiniteGroup;

/// Basis vector `e(g) ⊗ x` as the pair `(g, x)` of group indices.
pub type Basis = (usize, usize);

/// A sparse linear combination of basis vectors `e(g) ⊗ x`. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TqdElement {
    terms: BTreeMap<Basis, Cyclotomic>,
}

impl TqdElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(g: usize, x: usize) -> Self {
        Self::from_terms([((g, x), Cyclotomic::one(1))])
    }

    pub fn from_terms<I: IntoIterator<Item = (Basis, Cyclotomic)>>(terms: I) -> Self {
        let mut e = Self::zero();
        for (b, c) in terms {
            e.add_term(b, &c);
        }
        e
    }

    pub fn add_term(&mut self, b: Basis, c: &Cyclotomic) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&b) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&b);
                }
            }
            None => {
                self.terms.insert(b, c.clone());
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Basis, &Cyclotomic)> {
        self.terms.iter()
    }

    pub fn coeff(&self, g: usize, x: usize) -> Option<&Cyclotomic> {
        self.terms.get(&(g, x))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        Self::from_terms(self.terms.iter().map(|(&b, v)| (b, v * c)))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&b, c) in &other.terms {
            out.add_term(b, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&Cyclotomic::from_int(-1, 1)))
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    g: usize,
    x: usize,
    coeff: Cyclotomic,
}

impl Serialize for TqdElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<TermRepr> = self
            .terms
            .iter()
            .map(|(&(g, x), c)| TermRepr { g, x, coeff: c.clone() })
            .collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for TqdElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<TermRepr>::deserialize(d)?;
        Ok(Self::from_terms(v.into_iter().map(|t| ((t.g, t.x), t.coeff))))
    }
}

/// An element of a tensor power of the algebra: keys list one basis index `g·n + x` per factor.
#[derive(Clone, Debug, Default)]
pub struct Tensor {
    pub(crate) rank: usize,
    pub(crate) terms: HashMap<Vec<usize>, Cyclotomic>,
}

impl Tensor {
    pub fn new(rank: usize) -> Self {
        Tensor { rank, terms: HashMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn add_term(&mut self, key: Vec<usize>, c: Cyclotomic) {
        if c.is_zero() {
            return;
        }
        use std::collections::hash_map::Entry;
        match self.terms.entry(key) {
            Entry::Occupied(mut o) => {
                let v = o.get() + &c;
                if v.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = v;
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    /// A key where the two tensors differ, if any.
    pub fn difference(&self, other: &Tensor) -> Option<Vec<usize>> {
        for (k, v) in &self.terms {
            if other.terms.get(k) != Some(v) {
                return Some(k.clone());
            }
        }
        other.terms.keys().find(|k| !self.terms.contains_key(*k)).cloned()
    }
}

/// The twisted quantum double `D^ω(G)` with its quasi-Hopf structure.
#[derive(Clone, Debug)]
pub struct TqdAlgebra {
    group: Arc<FiniteGroup>,
    omega: Cochain3,
    n: usize,
    theta: Vec<RootOfUnity>,
    gamma: Vec<RootOfUnity>,
    field: u64,
    cyclic: Option<(u64, u64)>,
}

impl TqdAlgebra {
    /// Builds `D^ω(G)`; `omega` must be a normalized 3-cocycle.
    pub fn new(omega: Cochain3) -> Result<Self, TqdError> {
        let check = verify_3cocycle(&omega);
        if !check.is_valid() {
            return Err(TqdError::NotACocycle(check));
        }
        Ok(Self::build(omega.tabulate(), None))
    }

    /// `D^{ω_ā}(G)` for the abelian group of `params`.
    pub fn from_params(params: &CocycleParams) -> Self {
        let cyclic = (params.group().rank() == 1).then(|| (params.group().factors()[0], params.a1()[0]));
        Self::build(Cochain3::omega(params), cyclic)
    }

    /// The untwisted double `D(G)`.
    pub fn drinfeld_double(group: Arc<FiniteGroup>) -> Self {
        Self::build(Cochain3::trivial(group), None)
    }

    fn build(omega: Cochain3, cyclic: Option<(u64, u64)>) -> Self {
        let group = omega.group().clone();
        let n = group.order();
        let mut th = Vec::with_capacity(n * n * n);
        let mut ga = Vec::with_capacity(n * n * n);
        for g in 0..n {
            for x in 0..n {
                for y in 0..n {
                    th.push(theta(&omega, g, x, y));
                    ga.push(gamma(&omega, g, x, y));
                }
            }
        }
        let mut field = 1u64;
        for r in th.iter().chain(&ga) {
            field = field.lcm(&r.order());
        }
        for r in omega.table() {
            field = field.lcm(&r.order());
        }
        TqdAlgebra { group, omega, n, theta: th, gamma: ga, field, cyclic }
    }

    /// Copy with one `θ_g(x, y)` value replaced, for mutation tests.
    pub fn with_theta_value(&self, g: usize, x: usize, y: usize, value: RootOfUnity) -> Self {
        let mut a = self.clone();
        a.theta[(g * self.n + x) * self.n + y] = value;
        a.field = a.field.lcm(&value.order());
        a
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn omega(&self) -> &Cochain3 {
        &self.omega
    }

    /// `(m, a)` when built from `ω_a` on `Z_m`.
    pub fn cyclic_data(&self) -> Option<(u64, u64)> {
        self.cyclic
    }

    /// Ambient cyclotomic order of the structure constants.
    pub fn field_order(&self) -> u64 {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.n * self.n
    }

    #[inline]
    pub fn theta(&self, g: usize, x: usize, y: usize) -> RootOfUnity {
        self.theta[(g * self.n + x) * self.n + y]
    }

    #[inline]
    pub fn gamma(&self, g: usize, x: usize, y: usize) -> RootOfUnity {
        self.gamma[(g * self.n + x) * self.n + y]
    }

    #[inline]
    pub(crate) fn key(&self, b: Basis) -> usize {
        b.0 * self.n + b.1
    }

    #[inline]
    pub(crate) fn unkey(&self, k: usize) -> Basis {
        (k / self.n, k % self.n)
    }

    /// `(e(g)⊗x)(e(h)⊗y) = θ_g(x,y) δ_{x^{-1}gx, h} e(g)⊗xy`.
    #[inline]
    pub fn mul_basis(&self, (g, x): Basis, (h, y): Basis) -> Option<(RootOfUnity, Basis)> {
        let gr = &self.group;
        if gr.conj(gr.inv(x), g) != h {
            return None;
        }
        Some((self.theta(g, x, y), (g, gr.mul(x, y))))
    }

    pub fn mul(&self, u: &TqdElement, v: &TqdElement) -> TqdElement {
        let mut out = TqdElement::zero();
        for (&bu, cu) in u.terms() {
            let (g, x) = bu;
            let h = self.group.conj(self.group.inv(x), g);
            for (&bv, cv) in v.terms.range((h, 0)..(h + 1, 0)) {
                if let Some((r, b)) = self.mul_basis(bu, bv) {
                    out.add_term(b, &(cu * cv).mul_root(r));
                }
            }
        }
        out
    }

    /// The unit `Σ_g e(g) ⊗ 1`.
    pub fn unit(&self) -> TqdElement {
        let e = self.group.identity();
        TqdElement::from_terms((0..self.n).map(|g| ((g, e), Cyclotomic::one(1))))
    }

    /// `Δ(e(g)⊗x) = Σ_{hk=g} γ_x(h,k) e(h)⊗x ⊗ e(k)⊗x`.
    pub fn comul_basis(&self, (g, x): Basis) -> Vec<(RootOfUnity, Basis, Basis)> {
        (0..self.n)
            .map(|h| {
                let k = self.group.mul(self.group.inv(h), g);
                (self.gamma(x, h, k), (h, x), (k, x))
            })
            .collect()
    }

    pub fn comul(&self, u: &TqdElement) -> Tensor {
        self.comul_at(&self.tensor1(u), 0)
    }

    /// `ε(e(g)⊗x) = δ_{g,1}`.
    pub fn counit_basis(&self, (g, _): Basis) -> bool {
        g == self.group.identity()
    }

    pub fn counit(&self, u: &TqdElement) -> Cyclotomic {
        let mut s = Cyclotomic::zero(1);
        for (&b, c) in u.terms() {
            if self.counit_basis(b) {
                s += c;
            }
        }
        s
    }

    /// `S(e(g)⊗x) = θ_{g^{-1}}(x,x^{-1})^{-1} γ_x(g,g^{-1})^{-1} e(x^{-1}g^{-1}x) ⊗ x^{-1}`.
    pub fn antipode_basis(&self, (g, x): Basis) -> (RootOfUnity, Basis) {
        let gr = &self.group;
        let (gi, xi) = (gr.inv(g), gr.inv(x));
        let c = (self.theta(gi, x, xi) * self.gamma(x, g, gi)).inv();
        (c, (gr.conj(xi, gi), xi))
    }

    pub fn antipode(&self, u: &TqdElement) -> TqdElement {
        TqdElement::from_terms(u.terms().map(|(&b, c)| {
            let (r, s) = self.antipode_basis(b);
            (s, c.mul_root(r))
        }))
    }

    /// `α = 1`.
    pub fn alpha(&self) -> TqdElement {
        self.unit()
    }

    /// `β = Σ_g ω(g, g^{-1}, g) e(g) ⊗ 1`.
    pub fn beta(&self) -> TqdElement {
        let e = self.group.identity();
        TqdElement::from_terms(
            (0..self.n).map(|g| ((g, e), Cyclotomic::root(self.omega.eval(g, self.group.inv(g), g)))),
        )
    }

    /// `Φ = Σ ω(g,h,k)^{-1} e(g)⊗1 ⊗ e(h)⊗1 ⊗ e(k)⊗1`, or its inverse.
    pub fn associator(&self, inverse: bool) -> Tensor {
        let e = self.group.identity();
        let mut t = Tensor::new(3);
        for g in 0..self.n {
            for h in 0..self.n {
                for k in 0..self.n {
                    let w = self.omega.eval(g, h, k);
                    let w = if inverse { w } else { w.inv() };
                    t.add_term(vec![self.key((g, e)), self.key((h, e)), self.key((k, e))], Cyclotomic::root(w));
                }
            }
        }
        t
    }

    pub fn tensor1(&self, u: &TqdElement) -> Tensor {
        let mut t = Tensor::new(1);
        for (&b, c) in u.terms() {
            t.add_term(vec![self.key(b)], c.clone());
        }
        t
    }

    pub fn untensor1(&self, t: &Tensor) -> TqdElement {
        assert_eq!(t.rank, 1);
        TqdElement::from_terms(t.terms.iter().map(|(k, c)| (self.unkey(k[0]), c.clone())))
    }

    /// Factorwise product in `A^{⊗r}`.
    pub fn tensor_mul(&self, a: &Tensor, b: &Tensor) -> Tensor {
        assert_eq!(a.rank, b.rank, "tensor ranks differ");
        let n = self.n;
        let mut index: HashMap<Vec<usize>, Vec<(&Vec<usize>, &Cyclotomic)>> = HashMap::new();
        for (k, c) in &b.terms {
            index.entry(k.iter().map(|&i| i / n).collect()).or_default().push((k, c));
        }
        let mut out = Tensor::new(a.rank);
        for (ka, ca) in &a.terms {
            let need: Vec<usize> = ka
                .iter()
                .map(|&i| {
                    let (g, x) = self.unkey(i);
                    self.group.conj(self.group.inv(x), g)
                })
                .collect();
            let Some(matches) = index.get(&need) else { continue };
            for (kb, cb) in matches {
                let mut r = RootOfUnity::ONE;
                let mut key = Vec::with_capacity(a.rank);
                for (&i, &j) in ka.iter().zip(kb.iter()) {
                    let (s, b) = self.mul_basis(self.unkey(i), self.unkey(j)).expect("matched by index");
                    r = r * s;
                    key.push(self.key(b));
                }
                out.add_term(key, (ca * *cb).mul_root(r));
            }
        }
        out
    }

    /// Applies `Δ` to tensor factor `pos`.
    pub fn comul_at(&self, t: &Tensor, pos: usize) -> Tensor {
        let mut out = Tensor::new(t.rank + 1);
        for (k, c) in &t.terms {
            for (r, b1, b2) in self.comul_basis(self.unkey(k[pos])) {
                let mut key = Vec::with_capacity(k.len() + 1);
                key.extend_from_slice(&k[..pos]);
                key.push(self.key(b1));
                key.push(self.key(b2));
                key.extend_from_slice(&k[pos + 1..]);
                out.add_term(key, c.mul_root(r));
            }
        }
        out
    }

    /// Applies `ε` to tensor factor `pos`.
    pub fn counit_at(&self, t: &Tensor, pos: usize) -> Tensor {
        let mut out = Tensor::new(t.rank - 1);
        for (k, c) in &t.terms {
            if self.counit_basis(self.unkey(k[pos])) {
                let mut key = k.clone();
                key.remove(pos);
                out.add_term(key, c.clone());
            }
        }
        out
    }

    /// Applies `S` to tensor factor `pos`.
    pub fn antipode_at(&self, t: &Tensor, pos: usize) -> Tensor {
        let mut out = Tensor::new(t.rank);
        for (k, c) in &t.terms {
            let (r, b) = self.antipode_basis(self.unkey(k[pos]));
            let mut key = k.clone();
            key[pos] = self.key(b);
            out.add_term(key, c.mul_root(r));
        }
        out
    }

    /// Inserts the element `u` as a new tensor factor at `pos`.
    pub fn insert_at(&self, t: &Tensor, pos: usize, u: &TqdElement) -> Tensor {
        let mut out = Tensor::new(t.rank + 1);
        for (k, c) in &t.terms {
            for (&b, cu) in u.terms() {
                let mut key = k.clone();
                key.insert(pos, self.key(b));
                out.add_term(key, c * cu);
            }
        }
        out
    }

    /// Multiplies the factors of every term together, left to right.
    pub fn multiply_out(&self, t: &Tensor) -> TqdElement {
        let mut out = TqdElement::zero();
        for (k, c) in &t.terms {
            let mut cur = Some((RootOfUnity::ONE, self.unkey(k[0])));
            for &i in &k[1..] {
                cur = cur.and_then(|(r, b)| self.mul_basis(b, self.unkey(i)).map(|(s, b2)| (r * s, b2)));
            }
            if let Some((r, b)) = cur {
                out.add_term(b, &c.mul_root(r));
            }
        }
        out
    }

    /// `1 ⊗ ... ⊗ 1` of the given rank.
    pub fn tensor_unit(&self, rank: usize) -> Tensor {
        let mut t = Tensor::new(0);
        t.add_term(Vec::new(), Cyclotomic::one(1));
        let unit = self.unit();
        for _ in 0..rank {
            let r = t.rank;
            t = self.insert_at(&t, r, &unit);
        }
        t
    }
}
