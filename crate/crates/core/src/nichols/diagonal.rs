use std::collections::VecDeque;

use num_rational::Ratio;
use serde::Serialize;

use super::braided::BraidedSpace;
use super::yd::YDModule;
use super::{CartanEntry, NicholsError};
use crate::exactmath::{Cyclotomic, Rational, RootOfUnity};
use crate::groups::FiniteGroup;

/// One simultaneous eigenvector, `Σ coeff · b` over the basis of one summand.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Eigenvector {
    pub label: String,
    pub module: usize,
    /// `(local basis index, coefficient)`, normalized so the first coefficient is 1.
    pub coefficients: Vec<(usize, Cyclotomic)>,
    pub degree: usize,
    /// Eigenvalue of `g ▷` for each element `g` of the acting subgroup, in `acting_group` order.
    pub eigenvalues: Vec<RootOfUnity>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DynkinEdge {
    pub i: usize,
    pub j: usize,
    /// `q_ij q_ji`.
    pub label: RootOfUnity,
}

/// Vertices labelled `q_ii`, edges `q_ij q_ji ≠ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DynkinDiagram {
    pub labels: Vec<String>,
    pub vertices: Vec<RootOfUnity>,
    pub edges: Vec<DynkinEdge>,
}

impl DynkinDiagram {
    pub fn from_matrix(q: &[Vec<RootOfUnity>], labels: Vec<String>) -> Self {
        let n = q.len();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let label = q[i][j] * q[j][i];
                if !label.is_one() {
                    edges.push(DynkinEdge { i, j, label });
                }
            }
        }
        DynkinDiagram { labels, vertices: (0..n).map(|i| q[i][i]).collect(), edges }
    }

    pub fn edge(&self, i: usize, j: usize) -> Option<RootOfUnity> {
        let (i, j) = (i.min(j), i.max(j));
        self.edges.iter().find(|e| e.i == i && e.j == j).map(|e| e.label)
    }

    /// Sizes of the connected components, in order of their least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![];
            let mut queue = VecDeque::from([start]);
            seen[start] = true;
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for e in &self.edges {
                    let w = if e.i == v { e.j } else if e.j == v { e.i } else { continue };
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DiagonalBraiding {
    /// Elements of the abelian group generated by the supports.
    pub acting_group: Vec<String>,
    pub eigenvectors: Vec<Eigenvector>,
    /// `c(e_i ⊗ e_j) = q_ij e_j ⊗ e_i`.
    pub matrix: Vec<Vec<RootOfUnity>>,
    pub diagram: DynkinDiagram,
    /// `c` transported through the basis change agrees with `q` on every pair.
    pub transport_verified: bool,
}

impl DiagonalBraiding {
    pub fn labels(&self) -> Vec<String> {
        self.eigenvectors.iter().map(|e| e.label.clone()).collect()
    }

    pub fn braided_space(&self) -> Result<BraidedSpace, NicholsError> {
        BraidedSpace::diagonal(&self.matrix, self.labels())
    }
}

/// All homomorphisms from the abelian subgroup `sub` to the roots of unity.
fn characters(group: &FiniteGroup, sub: &[usize]) -> Vec<Vec<Option<RootOfUnity>>> {
    let mut gens = Vec::new();
    let mut span = vec![group.identity()];
    for &a in sub {
        if !span.contains(&a) {
            gens.push(a);
            span = group.generated(&gens);
        }
    }
    let orders: Vec<u64> = gens.iter().map(|&g| group.element_order(g) as u64).collect();
    let mut out = Vec::new();
    let total: u64 = orders.iter().product();
    for code in 0..total {
        let mut c = code;
        let vals: Vec<RootOfUnity> = orders
            .iter()
            .map(|&o| {
                let k = c % o;
                c /= o;
                RootOfUnity::zeta(o, k as i64)
            })
            .collect();
        let mut chi: Vec<Option<RootOfUnity>> = vec![None; group.order()];
        chi[group.identity()] = Some(RootOfUnity::ONE);
        let mut queue = VecDeque::from([group.identity()]);
        let mut ok = true;
        while let Some(a) = queue.pop_front() {
            for (g, v) in gens.iter().zip(&vals) {
                let b = group.mul(a, *g);
                let val = chi[a].unwrap() * *v;
                match chi[b] {
                    None => {
                        chi[b] = Some(val);
                        queue.push_back(b);
                    }
                    Some(old) if old != val => ok = false,
                    Some(_) => {}
                }
            }
        }
        if ok {
            out.push(chi);
        }
    }
    out
}

fn exponent_key(c: &Cyclotomic) -> Ratio<u64> {
    match c.as_root() {
        Some(r) => Ratio::new(r.num(), r.den()),
        None => Ratio::from_integer(u64::MAX),
    }
}

/// A simultaneous eigenbasis of the action of the (abelian) group generated by
/// all supports, built from character sums over orbits, and the braiding matrix in it.
pub fn diagonalize_braiding(modules: &[YDModule]) -> Result<DiagonalBraiding, NicholsError> {
    let space = BraidedSpace::from_modules(modules)?;
    let group = modules.first().ok_or(NicholsError::Empty)?.group().clone();
    let support: Vec<usize> = modules.iter().flat_map(|m| m.support().iter().copied()).collect();
    let sub = group.generated(&support);
    if sub.iter().any(|&a| sub.iter().any(|&b| !group.commute(a, b))) {
        return Err(NicholsError::NotAbelianSupport);
    }
    let chars = characters(&group, &sub);
    let order = chars
        .iter()
        .flat_map(|chi| sub.iter().map(move |&g| chi[g].unwrap().order()))
        .chain(std::iter::once(space.field_order()))
        .fold(1u64, num_integer::lcm);

    let mut eigenvectors = Vec::new();
    let mut counter = 0;
    for (k, m) in modules.iter().enumerate() {
        let mut seen = vec![false; m.dim()];
        for b0 in 0..m.dim() {
            if seen[b0] {
                continue;
            }
            let orbit: Vec<usize> = {
                let mut o: Vec<usize> = sub.iter().map(|&g| m.act(g, b0).1).collect();
                o.sort_unstable();
                o.dedup();
                o
            };
            for &b in &orbit {
                seen[b] = true;
            }
            let mut found: Vec<(Vec<(usize, Cyclotomic)>, Vec<RootOfUnity>)> = Vec::new();
            for chi in &chars {
                let mut coeff = vec![Cyclotomic::zero(order); m.dim()];
                for &g in &sub {
                    let (q, b) = m.act(g, b0);
                    coeff[b] += &Cyclotomic::from_root(q / chi[g].unwrap(), order)?;
                }
                let Some(first) = coeff.iter().position(|c| !c.is_zero()) else { continue };
                let norm = coeff[first].inverse()?;
                let vec: Vec<(usize, Cyclotomic)> = coeff
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(b, c)| (b, c * &norm))
                    .collect();
                found.push((vec, sub.iter().map(|&g| chi[g].unwrap()).collect()));
            }
            found.sort_by_key(|(v, _)| v.iter().map(|(b, c)| (*b, exponent_key(c))).collect::<Vec<_>>());
            for (coefficients, eigenvalues) in found {
                let label = if orbit.len() == 1 {
                    m.label(b0)
                } else {
                    counter += 1;
                    format!("t{counter}")
                };
                eigenvectors.push(Eigenvector { label, module: k, coefficients, degree: m.degree(b0), eigenvalues });
            }
        }
    }

    let pos = |g: usize| sub.iter().position(|&h| h == g).unwrap();
    let n = eigenvectors.len();
    let matrix: Vec<Vec<RootOfUnity>> = (0..n)
        .map(|i| (0..n).map(|j| eigenvectors[j].eigenvalues[pos(eigenvectors[i].degree)]).collect())
        .collect();
    let transport_verified = verify_transport(&space, &eigenvectors, &matrix);
    let labels: Vec<String> = eigenvectors.iter().map(|e| e.label.clone()).collect();
    Ok(DiagonalBraiding {
        acting_group: sub.iter().map(|&g| group.name(g).to_string()).collect(),
        diagram: DynkinDiagram::from_matrix(&matrix, labels),
        eigenvectors,
        matrix,
        transport_verified,
    })
}

/// Expands `c(e_i ⊗ e_j)` in the original basis and compares with `q_ij e_j ⊗ e_i`.
fn verify_transport(space: &BraidedSpace, vecs: &[Eigenvector], q: &[Vec<RootOfUnity>]) -> bool {
    use super::symmetrizer::TensorElement;
    let global = |e: &Eigenvector| -> Vec<(usize, Cyclotomic)> {
        let start = space.block(e.module).start;
        e.coefficients.iter().map(|(b, c)| (start + b, c.clone())).collect()
    };
    let tensor = |a: &Eigenvector, b: &Eigenvector| {
        let mut t = TensorElement::zero(2);
        for (x, cx) in global(a) {
            for (y, cy) in global(b) {
                t.add_term(vec![x, y], &cx * &cy);
            }
        }
        t
    };
    (0..vecs.len()).all(|i| {
        (0..vecs.len()).all(|j| {
            let lhs = tensor(&vecs[i], &vecs[j]).apply_c(space, 0);
            let rhs = tensor(&vecs[j], &vecs[i]).scale(&Cyclotomic::root(q[i][j]));
            lhs == rhs
        })
    })
}

/// `(k)_q = 1 + q + ... + q^{k-1}`.
fn quantum_integer(k: u64, q: RootOfUnity) -> Cyclotomic {
    let mut s = Cyclotomic::zero(q.order());
    for e in 0..k {
        s += &Cyclotomic::root(q.pow(e as i64));
    }
    s
}

/// Cartan matrix of a diagonal braiding:
/// `a_ij = -min{m : (m+1)_{q_ii} (q_ii^m q_ij q_ji - 1) = 0}`.
pub fn diagonal_cartan(q: &[Vec<RootOfUnity>]) -> Vec<Vec<CartanEntry>> {
    let n = q.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        return CartanEntry::Value(2);
                    }
                    let qii = q[i][i];
                    let bound = if qii.is_one() { 1 } else { qii.order() };
                    (0..bound)
                        .find(|&m| {
                            quantum_integer(m + 1, qii).is_zero() || (qii.pow(m as i64) * q[i][j] * q[j][i]).is_one()
                        })
                        .map(|m| CartanEntry::Value(-(m as i64)))
                        .unwrap_or(CartanEntry::Unbounded)
                })
                .collect()
        })
        .collect()
}

/// Whether every principal minor of `a` is positive.
pub fn cartan_is_finite_type(a: &[Vec<CartanEntry>]) -> bool {
    let n = a.len();
    let Some(m): Option<Vec<Vec<i64>>> = a.iter().map(|row| row.iter().map(|e| e.value()).collect()).collect() else {
        return false;
    };
    (1u32..(1 << n)).all(|mask| {
        let idx: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        let sub: Vec<Vec<Rational>> =
            idx.iter().map(|&i| idx.iter().map(|&j| Rational::from_integer(m[i][j])).collect()).collect();
        determinant(sub) > Rational::from_integer(0)
    })
}

fn determinant(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::from_integer(1);
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| m[r][col] != Rational::from_integer(0)) else {
            return Rational::from_integer(0);
        };
        if piv != col {
            m.swap(piv, col);
            det = -det;
        }
        let p = m[col][col];
        det *= p;
        for r in col + 1..n {
            let f = m[r][col] / p;
            for c in col..n {
                let d = m[col][c];
                m[r][c] -= f * d;
            }
        }
    }
    det
}
