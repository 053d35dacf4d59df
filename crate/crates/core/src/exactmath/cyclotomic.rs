use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{ExactError, RootOfUnity};

pub type Rational = Ratio<i64>;

/// Integer coefficients of the cyclotomic polynomial `Φ_n`, lowest degree first.
pub fn cyclotomic_polynomial(n: u64) -> Result<Vec<i64>, ExactError> {
    if n == 0 {
        return Err(ExactError::ZeroOrder);
    }
    Ok(reducer(n).phi.clone())
}

/// Per-order data: `Φ_N` and the reduction of every `x^e`, `0 <= e < N`, modulo `Φ_N`.
struct Reducer {
    phi: Vec<i64>,
    powers: Vec<Vec<(u32, i64)>>,
}

impl Reducer {
    fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    fn build(n: u64) -> Reducer {
        // x^n - 1 divided by Φ_d for every proper divisor d.
        let mut num = vec![0i64; n as usize + 1];
        num[0] = -1;
        num[n as usize] = 1;
        for d in 1..n {
            if n.is_multiple_of(d) {
                num = divide_monic(&num, &reducer(d).phi);
            }
        }
        let phi = num;
        let deg = phi.len() - 1;
        let mut powers = Vec::with_capacity(n as usize);
        let mut cur = vec![0i64; deg.max(1)];
        cur[0] = 1;
        for _ in 0..n {
            powers.push(
                cur.iter()
                    .enumerate()
                    .filter(|(_, c)| **c != 0)
                    .map(|(i, c)| (i as u32, *c))
                    .collect(),
            );
            // multiply by x, then subtract the overflow times Φ.
            let top = if deg == 0 { 0 } else { cur[deg - 1] };
            let mut next = vec![0i64; deg.max(1)];
            for i in (1..deg).rev() {
                next[i] = cur[i - 1];
            }
            if deg == 0 {
                next[0] = cur[0];
            } else {
                for (i, slot) in next.iter_mut().enumerate() {
                    *slot -= top * phi[i];
                }
            }
            cur = next;
        }
        Reducer { phi, powers }
    }
}

fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let qlen = rem.len() - dn;
    let mut q = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn];
        q[i] = c;
        for (j, d) in den.iter().enumerate() {
            rem[i + j] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

fn reducer(n: u64) -> Arc<Reducer> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Reducer>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(r) = cache.lock().unwrap().get(&n) {
        return r.clone();
    }
    // Built outside the lock: construction recurses into smaller orders.
    let built = Arc::new(Reducer::build(n));
    cache.lock().unwrap().entry(n).or_insert(built).clone()
}

/// An element of `Q(ζ_N)`, stored canonically as a polynomial in `ζ_N` of degree `< φ(N)`.
///
/// Arithmetic between elements of different ambient orders lifts both to the lcm.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    order: u64,
    terms: Vec<(u32, Rational)>,
}

impl Cyclotomic {
    pub fn zero(order: u64) -> Self {
        assert!(order > 0, "ambient order must be positive");
        Cyclotomic { order, terms: Vec::new() }
    }

    pub fn one(order: u64) -> Self {
        Self::from_rational(Rational::one(), order)
    }

    pub fn from_rational(q: Rational, order: u64) -> Self {
        let mut c = Self::zero(order);
        if !q.is_zero() {
            c.terms.push((0, q));
        }
        c
    }

    pub fn from_int(k: i64, order: u64) -> Self {
        Self::from_rational(Rational::from_integer(k), order)
    }

    /// Embeds a root of unity; its order must divide `order`.
    pub fn from_root(r: RootOfUnity, order: u64) -> Result<Self, ExactError> {
        let e = r.exponent_over(order).ok_or(ExactError::NotInField { root: r, order })?;
        let red = reducer(order);
        Ok(Cyclotomic {
            order,
            terms: red.powers[e as usize]
                .iter()
                .map(|&(i, c)| (i, Rational::from_integer(c)))
                .collect(),
        })
    }

    /// Embeds a root of unity in its own field `Q(ζ_ord(r))`.
    pub fn root(r: RootOfUnity) -> Self {
        Self::from_root(r, r.order()).expect("a root lies in its own field")
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Dense coefficient vector of length `φ(N)` in the power basis `1, ζ_N, ζ_N^2, ...`.
    pub fn coefficients(&self) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); reducer(self.order).degree()];
        for &(i, c) in &self.terms {
            v[i as usize] = c;
        }
        v
    }

    pub fn from_coefficients(coeffs: &[Rational], order: u64) -> Result<Self, ExactError> {
        let deg = reducer(order).degree();
        if coeffs.len() > deg {
            return Err(ExactError::Parse(format!(
                "{} coefficients exceed degree {deg} of the order-{order} field",
                coeffs.len()
            )));
        }
        Ok(Cyclotomic {
            order,
            terms: coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i as u32, *c))
                .collect(),
        })
    }

    /// Re-expresses `self` in `Q(ζ_M)`; requires `N | M`.
    pub fn lift(&self, to: u64) -> Result<Self, ExactError> {
        if !to.is_multiple_of(self.order) {
            return Err(ExactError::NotASubfield { from: self.order, to });
        }
        if to == self.order {
            return Ok(self.clone());
        }
        let step = (to / self.order) as usize;
        let red = reducer(to);
        let mut acc = vec![Rational::zero(); red.degree().max(1)];
        for &(i, c) in &self.terms {
            for &(j, k) in &red.powers[(i as usize * step) % to as usize] {
                acc[j as usize] += c * k;
            }
        }
        Ok(Self::from_dense(acc, to))
    }

    fn from_dense(acc: Vec<Rational>, order: u64) -> Self {
        Cyclotomic {
            order,
            terms: acc
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i as u32, c))
                .collect(),
        }
    }

    fn common(a: &Self, b: &Self) -> (Self, Self) {
        if a.order == b.order {
            return (a.clone(), b.clone());
        }
        let l = a.order.lcm(&b.order);
        (a.lift(l).unwrap(), b.lift(l).unwrap())
    }

    pub fn scale(&self, q: Rational) -> Self {
        if q.is_zero() {
            return Self::zero(self.order);
        }
        Cyclotomic {
            order: self.order,
            terms: self.terms.iter().map(|&(i, c)| (i, c * q)).collect(),
        }
    }

    /// Multiplication by a root of unity, lifting the ambient order if needed.
    pub fn mul_root(&self, r: RootOfUnity) -> Self {
        if r.is_one() {
            return self.clone();
        }
        let order = self.order.lcm(&r.order());
        let base = self.lift(order).unwrap();
        let e = r.exponent_over(order).unwrap() as usize;
        let red = reducer(order);
        let mut acc = vec![Rational::zero(); red.degree().max(1)];
        for &(i, c) in &base.terms {
            for &(j, k) in &red.powers[(i as usize + e) % order as usize] {
                acc[j as usize] += c * k;
            }
        }
        Self::from_dense(acc, order)
    }

    /// `Some(r)` when `self` equals a single root of unity.
    pub fn as_root(&self) -> Option<RootOfUnity> {
        if self.terms.is_empty() {
            return None;
        }
        (0..self.order as i64)
            .map(|k| RootOfUnity::zeta(self.order, k))
            .find(|r| Cyclotomic::from_root(*r, self.order).unwrap().terms == self.terms)
    }

    /// `Some(q)` when `self` is rational.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(0, c)] => Some(*c),
            _ => None,
        }
    }

    /// Multiplicative inverse, found by solving `self · y = 1` over `Q`.
    pub fn inverse(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let n = reducer(self.order).degree();
        // Column j of the multiplication matrix is self · ζ^j.
        let mut m = vec![vec![Rational::zero(); n + 1]; n];
        for j in 0..n {
            let col = self.mul_root(RootOfUnity::zeta(self.order, j as i64)).coefficients();
            for i in 0..n {
                m[i][j] = col[i];
            }
        }
        m[0][n] = Rational::one();
        let sol = solve(m).ok_or(ExactError::DivisionByZero)?;
        Ok(Self::from_dense(sol, self.order))
    }
}

/// Gauss-Jordan on an augmented `n × (n+1)` system with a unique solution.
fn solve(mut m: Vec<Vec<Rational>>) -> Option<Vec<Rational>> {
    let n = m.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let p = m[col][col];
        for v in m[col].iter_mut() {
            *v /= p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col];
                for c in col..=n {
                    let d = m[col][c] * f;
                    m[r][c] -= d;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n]).collect())
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.terms == other.terms;
        }
        let (a, b) = Self::common(self, other);
        a.terms == b.terms
    }
}

impl Eq for Cyclotomic {}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (a, b) = if self.order == rhs.order {
            (std::borrow::Cow::Borrowed(self), std::borrow::Cow::Borrowed(rhs))
        } else {
            let (a, b) = Cyclotomic::common(self, rhs);
            (std::borrow::Cow::Owned(a), std::borrow::Cow::Owned(b))
        };
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < a.terms.len() || j < b.terms.len() {
            let take_a = j >= b.terms.len() || (i < a.terms.len() && a.terms[i].0 < b.terms[j].0);
            let take_b = i >= a.terms.len() || (j < b.terms.len() && b.terms[j].0 < a.terms[i].0);
            if take_a {
                out.push(a.terms[i]);
                i += 1;
            } else if take_b {
                out.push(b.terms[j]);
                j += 1;
            } else {
                let s = a.terms[i].1 + b.terms[j].1;
                if !s.is_zero() {
                    out.push((a.terms[i].0, s));
                }
                i += 1;
                j += 1;
            }
        }
        Cyclotomic { order: a.order, terms: out }
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Cyclotomic) -> Cyclotomic {
        &self + &rhs
    }
}

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        *self = &*self + rhs;
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        self.scale(-Rational::one())
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: Cyclotomic) -> Cyclotomic {
        &self - &rhs
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (a, b) = Cyclotomic::common(self, rhs);
        let red = reducer(a.order);
        let mut acc = vec![Rational::zero(); red.degree().max(1)];
        let n = a.order as usize;
        for &(i, x) in &a.terms {
            for &(j, y) in &b.terms {
                let xy = x * y;
                for &(k, c) in &red.powers[(i as usize + j as usize) % n] {
                    acc[k as usize] += xy * c;
                }
            }
        }
        Cyclotomic::from_dense(acc, a.order)
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Cyclotomic) -> Cyclotomic {
        &self * &rhs
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, &(i, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{c}")?,
                _ => write!(f, "({c})*zeta({})^{i}", self.order)?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct CyclotomicRepr {
    order: u64,
    coeffs: Vec<String>,
}

impl Serialize for Cyclotomic {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CyclotomicRepr {
            order: self.order,
            coeffs: self.coefficients().iter().map(|c| c.to_string()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = CyclotomicRepr::deserialize(d)?;
        if r.order == 0 {
            return Err(serde::de::Error::custom("ambient order must be positive"));
        }
        let coeffs = r
            .coeffs
            .iter()
            .map(|s| s.parse::<Rational>().map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Cyclotomic::from_coefficients(&coeffs, r.order).map_err(serde::de::Error::custom)
    }
}
