use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::braided::BraidedSpace;
use super::NicholsError;
use crate::exactmath::{Cyclotomic, RootOfUnity};

/// Highest tensor degree the symmetrizer is run at.
pub const MAX_DEGREE: usize = 4;

/// A homogeneous element of `T^n(V)` with coefficients in a cyclotomic field.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorElement {
    degree: usize,
    terms: BTreeMap<Vec<usize>, Cyclotomic>,
}

impl TensorElement {
    pub fn zero(degree: usize) -> Self {
        TensorElement { degree, terms: BTreeMap::new() }
    }

    pub fn basis(word: Vec<usize>) -> Self {
        Self::monomial(RootOfUnity::ONE, word)
    }

    pub fn monomial(q: RootOfUnity, word: Vec<usize>) -> Self {
        let mut t = Self::zero(word.len());
        t.terms.insert(word, Cyclotomic::root(q));
        t
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Cyclotomic)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, word: &[usize]) -> Option<&Cyclotomic> {
        self.terms.get(word)
    }

    pub fn add_term(&mut self, word: Vec<usize>, c: Cyclotomic) {
        assert_eq!(word.len(), self.degree, "degree mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&word) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(word, s);
                }
            }
            None => {
                self.terms.insert(word, c);
            }
        }
    }

    pub fn add(&mut self, other: &TensorElement) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &Cyclotomic) -> TensorElement {
        let mut out = Self::zero(self.degree);
        for (w, x) in &self.terms {
            out.add_term(w.clone(), x * c);
        }
        out
    }

    pub fn neg(&self) -> TensorElement {
        let mut out = Self::zero(self.degree);
        for (w, x) in &self.terms {
            out.terms.insert(w.clone(), -x);
        }
        out
    }

    /// `x ⊗ self`.
    pub fn prepend(&self, x: usize) -> TensorElement {
        let mut out = Self::zero(self.degree + 1);
        for (w, c) in &self.terms {
            let mut w2 = Vec::with_capacity(w.len() + 1);
            w2.push(x);
            w2.extend_from_slice(w);
            out.terms.insert(w2, c.clone());
        }
        out
    }

    /// Applies `c` at slots `p, p+1`.
    pub fn apply_c(&self, space: &BraidedSpace, p: usize) -> TensorElement {
        let mut out = Self::zero(self.degree);
        for (w, c) in &self.terms {
            let (q, w2) = space.apply_c(p, &(RootOfUnity::ONE, w.clone()));
            out.add_term(w2, c.mul_root(q));
        }
        out
    }

    pub fn render(&self, space: &BraidedSpace) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(w, c)| {
                let word: Vec<&str> = w.iter().map(|&b| space.label(b)).collect();
                format!("({c})·{}", word.join("⊗"))
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl Serialize for TensorElement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<(&Vec<usize>, &Cyclotomic)> = self.terms.iter().collect();
        v.serialize(s)
    }
}

/// Applies `S_len` to the first `len` slots.
///
/// `S_n = (S_{n-1} ⊗ id) ∘ Σ_k c_{n-1} ⋯ c_{n-k}`, the sum running over minimal
/// coset representatives of `S_{n-1}` in `S_n`.
fn symmetrize_prefix(space: &BraidedSpace, x: &TensorElement, len: usize) -> TensorElement {
    if len <= 1 || x.is_zero() {
        return x.clone();
    }
    let mut y = x.clone();
    for k in 1..len {
        let mut t = x.clone();
        for p in len - 1 - k..len - 1 {
            t = t.apply_c(space, p);
        }
        y.add(&t);
    }
    symmetrize_prefix(space, &y, len - 1)
}

/// The quantum symmetrizer `S_n = Σ_{w ∈ S_n} T_w` applied to `x`.
pub fn symmetrize(space: &BraidedSpace, x: &TensorElement) -> Result<TensorElement, NicholsError> {
    if x.degree() > MAX_DEGREE {
        return Err(NicholsError::DegreeTooHigh(x.degree()));
    }
    Ok(symmetrize_prefix(space, x, x.degree()))
}

/// True iff `x` vanishes in the Nichols algebra, i.e. `S_n(x) = 0`.
pub fn symmetrizer_rank(space: &BraidedSpace, x: &TensorElement) -> Result<bool, NicholsError> {
    Ok(symmetrize(space, x)?.is_zero())
}

/// `ad_x(y) = x ⊗ y - c_{V, V^{⊗k}}(x ⊗ y)`, moving `x` to the end one slot at a time.
pub fn ad(space: &BraidedSpace, x: usize, y: &TensorElement) -> TensorElement {
    let xy = y.prepend(x);
    let mut moved = xy.clone();
    for p in 0..y.degree() {
        moved = moved.apply_c(space, p);
    }
    let mut out = xy;
    out.add(&moved.neg());
    out
}

/// Spanning elements `ad_{x_1} ⋯ ad_{x_m}(y)` of `ad^m_{M_i}(M_j)` in `T^{m+1}(V)`.
pub fn adjoint_spanning_set(space: &BraidedSpace, i: usize, j: usize, m: usize) -> Result<Vec<TensorElement>, NicholsError> {
    if m + 1 > MAX_DEGREE {
        return Err(NicholsError::DegreeTooHigh(m + 1));
    }
    let mut current: Vec<TensorElement> = space.block(j).map(|y| TensorElement::basis(vec![y])).collect();
    for _ in 0..m {
        current = space
            .block(i)
            .flat_map(|x| current.iter().map(move |z| (x, z)))
            .map(|(x, z)| ad(space, x, z))
            .filter(|t| !t.is_zero())
            .collect();
    }
    Ok(current)
}

/// Whether `ad^m_{M_i}(M_j) ≠ 0` in the Nichols algebra.
pub fn adjoint_power(space: &BraidedSpace, i: usize, j: usize, m: usize) -> Result<bool, NicholsError> {
    let span = adjoint_spanning_set(space, i, j, m)?;
    Ok(span.par_iter().any(|t| !symmetrize_prefix(space, t, t.degree()).is_zero()))
}

/// `dim ad^m_{M_i}(M_j)` in the Nichols algebra, as the rank of the symmetrized spanning set.
pub fn adjoint_rank(space: &BraidedSpace, i: usize, j: usize, m: usize) -> Result<usize, NicholsError> {
    let span = adjoint_spanning_set(space, i, j, m)?;
    let images: Vec<TensorElement> = span.par_iter().map(|t| symmetrize_prefix(space, t, t.degree())).collect();
    Ok(rank(&images))
}

/// Rank over `Q(ζ)` by Gaussian elimination on sparse rows.
pub fn rank(rows: &[TensorElement]) -> usize {
    let mut basis: Vec<(Vec<usize>, TensorElement)> = Vec::new();
    for r in rows {
        let mut v = r.clone();
        for (pivot, b) in &basis {
            if let Some(c) = v.coefficient(pivot).cloned() {
                v.add(&b.scale(&c).neg());
            }
        }
        let lead = v.terms().next().map(|(w, c)| (w.clone(), c.clone()));
        if let Some((w, c)) = lead {
            let inv = c.inverse().expect("nonzero pivot");
            let v = v.scale(&inv);
            for (_, b) in basis.iter_mut() {
                if let Some(d) = b.coefficient(&w).cloned() {
                    b.add(&v.scale(&d).neg());
                }
            }
            basis.push((w, v));
        }
    }
    basis.len()
}
