use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use super::{CocycleError, CocycleParams};
use crate::exactmath::RootOfUnity;
use crate::groups::FiniteGroup;

type Eval3 = dyn Fn(usize, usize, usize) -> RootOfUnity + Send + Sync;

/// A `C^×`-valued 3-cochain on a finite group, given by a table or an evaluator.
#[derive(Clone)]
pub struct Cochain3 {
    group: Arc<FiniteGroup>,
    eval: Arc<Eval3>,
}

impl fmt::Debug for Cochain3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Cochain3").field("order", &self.group.order()).finish_non_exhaustive()
    }
}

/// Outcome of [`verify_3cocycle`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CocycleCheck {
    Valid,
    NotNormalized { at: [usize; 3] },
    Fails { at: [usize; 4], value: RootOfUnity },
}

impl CocycleCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, CocycleCheck::Valid)
    }
}

impl Cochain3 {
    pub fn from_fn<F>(group: Arc<FiniteGroup>, f: F) -> Self
    where
        F: Fn(usize, usize, usize) -> RootOfUnity + Send + Sync + 'static,
    {
        Cochain3 { group, eval: Arc::new(f) }
    }

    /// Table indexed by `u·n² + v·n + w`.
    pub fn from_table(group: Arc<FiniteGroup>, table: Vec<RootOfUnity>) -> Result<Self, CocycleError> {
        let n = group.order();
        if table.len() != n * n * n {
            return Err(CocycleError::WrongArity { expected: n * n * n, got: table.len() });
        }
        Ok(Self::from_fn(group, move |u, v, w| table[(u * n + v) * n + w]))
    }

    pub fn trivial(group: Arc<FiniteGroup>) -> Self {
        Self::from_fn(group, |_, _, _| RootOfUnity::ONE)
    }

    /// `ω_ā` on the Cayley-table form of its group, with the abelian element indexing.
    pub fn omega(params: &CocycleParams) -> Self {
        let group = Arc::new(params.group().to_finite_group());
        let elems: Vec<Vec<u64>> = params.group().elements().collect();
        let n = elems.len();
        let mut table = Vec::with_capacity(n * n * n);
        for u in &elems {
            for v in &elems {
                for w in &elems {
                    table.push(params.eval(u, v, w));
                }
            }
        }
        Self::from_table(group, table).expect("table sized from the group")
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    #[inline]
    pub fn eval(&self, u: usize, v: usize, w: usize) -> RootOfUnity {
        (self.eval)(u, v, w)
    }

    /// Pointwise inverse, by exponent negation.
    pub fn inverse(&self) -> Self {
        let inner = self.eval.clone();
        Self::from_fn(self.group.clone(), move |u, v, w| inner(u, v, w).inv())
    }

    /// Materializes the evaluator into a table.
    pub fn tabulate(&self) -> Self {
        Self::from_table(self.group.clone(), self.table()).expect("table sized from the group")
    }

    pub fn table(&self) -> Vec<RootOfUnity> {
        let n = self.group.order();
        (0..n * n * n).map(|i| self.eval(i / (n * n), (i / n) % n, i % n)).collect()
    }

    /// Copy with one value replaced.
    pub fn with_value(&self, at: [usize; 3], value: RootOfUnity) -> Self {
        let inner = self.eval.clone();
        Self::from_fn(self.group.clone(), move |u, v, w| if [u, v, w] == at { value } else { inner(u, v, w) })
    }

    /// First triple with an identity argument and a nontrivial value.
    pub fn normalization_defect(&self) -> Option<[usize; 3]> {
        let n = self.group.order();
        let e = self.group.identity();
        for a in 0..n {
            for b in 0..n {
                for t in [[e, a, b], [a, e, b], [a, b, e]] {
                    if !self.eval(t[0], t[1], t[2]).is_one() {
                        return Some(t);
                    }
                }
            }
        }
        None
    }

    /// Table as nested arrays of exponent fractions.
    pub fn to_nested(&self) -> Vec<Vec<Vec<RootOfUnity>>> {
        let n = self.group.order();
        (0..n).map(|u| (0..n).map(|v| (0..n).map(|w| self.eval(u, v, w)).collect()).collect()).collect()
    }
}

/// `δc(a,b,c,d) = c(b,c,d) c(a,bc,d) c(a,b,c) / (c(ab,c,d) c(a,b,cd))`.
pub fn coboundary_value(c: &Cochain3, a: usize, b: usize, x: usize, d: usize) -> RootOfUnity {
    let g = c.group();
    let num = c.eval(b, x, d) * c.eval(a, g.mul(b, x), d) * c.eval(a, b, x);
    let den = c.eval(g.mul(a, b), x, d) * c.eval(a, b, g.mul(x, d));
    num / den
}

/// Checks normalization and `δc ≡ 1` over every quadruple; reports the first failure.
pub fn verify_3cocycle(c: &Cochain3) -> CocycleCheck {
    if let Some(at) = c.normalization_defect() {
        return CocycleCheck::NotNormalized { at };
    }
    let n = c.group().order();
    let bad = (0..n * n)
        .into_par_iter()
        .filter_map(|ab| {
            let (a, b) = (ab / n, ab % n);
            for x in 0..n {
                for d in 0..n {
                    let v = coboundary_value(c, a, b, x, d);
                    if !v.is_one() {
                        return Some(([a, b, x, d], v));
                    }
                }
            }
            None
        })
        .min_by_key(|(at, _)| *at);
    match bad {
        None => CocycleCheck::Valid,
        Some((at, value)) => CocycleCheck::Fails { at, value },
    }
}

/// The coboundary `δf(a,b,c) = f(b,c) f(a,bc) / (f(ab,c) f(a,b))` of a 2-cochain.
pub fn coboundary_of_2cochain<F>(group: Arc<FiniteGroup>, f: F) -> Cochain3
where
    F: Fn(usize, usize) -> RootOfUnity + Send + Sync + 'static,
{
    let g = group.clone();
    Cochain3::from_fn(group, move |a, b, c| {
        f(b, c) * f(a, g.mul(b, c)) / (f(g.mul(a, b), c) * f(a, b))
    })
}

/// `θ_g(x,y) = ω(g,x,y) ω(x,y,(xy)^{-1}gxy) / ω(x,x^{-1}gx,y)`.
pub fn theta(c: &Cochain3, g: usize, x: usize, y: usize) -> RootOfUnity {
    let gr = c.group();
    let xy = gr.mul(x, y);
    let g_xy = gr.conj(gr.inv(xy), g);
    let g_x = gr.conj(gr.inv(x), g);
    c.eval(g, x, y) * c.eval(x, y, g_xy) / c.eval(x, g_x, y)
}

/// `γ_g(x,y) = ω(x,y,g) ω(g,g^{-1}xg,g^{-1}yg) / ω(x,g,g^{-1}yg)`.
pub fn gamma(c: &Cochain3, g: usize, x: usize, y: usize) -> RootOfUnity {
    let gr = c.group();
    let gi = gr.inv(g);
    let x_g = gr.conj(gi, x);
    let y_g = gr.conj(gi, y);
    c.eval(x, y, g) * c.eval(g, x_g, y_g) / c.eval(x, g, y_g)
}

/// `ω_g(x,y) = ω(g,x,y) ω(x,y,g) / ω(x,g,y)`, meant for abelian groups.
pub fn omega_g(c: &Cochain3, g: usize, x: usize, y: usize) -> RootOfUnity {
    c.eval(g, x, y) * c.eval(x, y, g) / c.eval(x, g, y)
}

/// Pulls `c` back along a surjective homomorphism `pi: E → G` given as a table over `E`.
pub fn inflate(c: &Cochain3, e: Arc<FiniteGroup>, pi: Vec<usize>) -> Result<Cochain3, CocycleError> {
    if !e.is_homomorphism(&pi, c.group()) {
        return Err(CocycleError::NotHomomorphism);
    }
    let mut hit = vec![false; c.group().order()];
    for &p in &pi {
        hit[p] = true;
    }
    if hit.iter().any(|h| !h) {
        return Err(CocycleError::NotSurjective);
    }
    let inner = c.clone();
    Ok(Cochain3::from_fn(e, move |u, v, w| inner.eval(pi[u], pi[v], pi[w])))
}
