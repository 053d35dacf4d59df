use std::ops::Range;

use num_integer::Integer;
use serde::Serialize;

use super::yd::YDModule;
use super::NicholsError;
use crate::exactmath::RootOfUnity;

/// A vector space with a monomial braiding `c(b_i ⊗ b_j) = q · b_{j'} ⊗ b_i`.
///
/// The basis is split into blocks, one per simple summand.
#[derive(Clone, Debug)]
pub struct BraidedSpace {
    labels: Vec<String>,
    block_of: Vec<usize>,
    blocks: Vec<Range<usize>>,
    block_names: Vec<String>,
    table: Vec<(RootOfUnity, usize)>,
}

/// A basis tensor with a scalar in front.
pub type MonomialTensor = (RootOfUnity, Vec<usize>);

impl BraidedSpace {
    /// The braiding `c(g_i v ⊗ g_j w) = t_i ▷ (g_j w) ⊗ g_i v` on the direct sum.
    pub fn from_modules(modules: &[YDModule]) -> Result<Self, NicholsError> {
        if let Some(first) = modules.first() {
            if modules.iter().any(|m| **m.group() != **first.group()) {
                return Err(NicholsError::MixedGroups);
            }
        }
        let mut labels = Vec::new();
        let mut block_of = Vec::new();
        let mut blocks = Vec::new();
        let mut owner = Vec::new();
        for (k, m) in modules.iter().enumerate() {
            let start = labels.len();
            for b in 0..m.dim() {
                labels.push(m.label(b));
                block_of.push(k);
                owner.push((k, b));
            }
            blocks.push(start..labels.len());
        }
        let n = labels.len();
        let mut table = Vec::with_capacity(n * n);
        for &(ki, bi) in &owner {
            let deg = modules[ki].degree(bi);
            for &(kj, bj) in &owner {
                let (q, b2) = modules[kj].act(deg, bj);
                table.push((q, blocks[kj].start + b2));
            }
        }
        let names = modules
            .iter()
            .enumerate()
            .map(|(k, m)| if m.name.is_empty() { format!("M{}", k + 1) } else { m.name.clone() })
            .collect();
        let space = BraidedSpace { labels, block_of, blocks, block_names: names, table };
        space.check()?;
        Ok(space)
    }

    /// A diagonal braiding `c(e_i ⊗ e_j) = q_ij e_j ⊗ e_i`, each basis vector its own block.
    pub fn diagonal(q: &[Vec<RootOfUnity>], labels: Vec<String>) -> Result<Self, NicholsError> {
        let n = q.len();
        if labels.len() != n || q.iter().any(|row| row.len() != n) {
            return Err(NicholsError::BadModule("braiding matrix must be square and labelled".into()));
        }
        let table = (0..n).flat_map(|i| (0..n).map(move |j| (q[i][j], j))).collect();
        let space = BraidedSpace {
            block_names: labels.clone(),
            labels,
            block_of: (0..n).collect(),
            blocks: (0..n).map(|i| i..i + 1).collect(),
            table,
        };
        space.check()?;
        Ok(space)
    }

    fn check(&self) -> Result<(), NicholsError> {
        let n = self.dim();
        for i in 0..n {
            let mut hit = vec![false; n];
            for j in 0..n {
                hit[self.table[i * n + j].1] = true;
            }
            if hit.iter().any(|h| !h) {
                return Err(NicholsError::NotInvertible);
            }
        }
        if let Some((i, j, k)) = self.braid_equation_failure() {
            return Err(NicholsError::BraidEquation(self.labels[i].clone(), self.labels[j].clone(), self.labels[k].clone()));
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, b: usize) -> &str {
        &self.labels[b]
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn block(&self, k: usize) -> Range<usize> {
        self.blocks[k].clone()
    }

    pub fn block_of(&self, b: usize) -> usize {
        self.block_of[b]
    }

    pub fn block_name(&self, k: usize) -> &str {
        &self.block_names[k]
    }

    pub fn basis_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// `c(b_i ⊗ b_j) = q · b_{j'} ⊗ b_i`, returned as `(q, j')`.
    #[inline]
    pub fn braid(&self, i: usize, j: usize) -> (RootOfUnity, usize) {
        self.table[i * self.dim() + j]
    }

    /// Lcm of the orders of all braiding scalars.
    pub fn field_order(&self) -> u64 {
        self.table.iter().fold(1, |acc, (q, _)| acc.lcm(&q.order()))
    }

    /// Applies `c` to slots `p, p+1` of a basis tensor.
    pub fn apply_c(&self, p: usize, t: &MonomialTensor) -> MonomialTensor {
        let (s, mut v) = t.clone();
        let (q, j2) = self.braid(v[p], v[p + 1]);
        let i = v[p];
        v[p] = j2;
        v[p + 1] = i;
        (s * q, v)
    }

    /// `c²(b_i ⊗ b_j)` as a scalar times a basis tensor.
    pub fn c_squared(&self, i: usize, j: usize) -> MonomialTensor {
        let t = self.apply_c(0, &(RootOfUnity::ONE, vec![i, j]));
        self.apply_c(0, &t)
    }

    /// Whether `(id - c²)(b_i ⊗ b_j) ≠ 0`.
    pub fn c_squared_moves(&self, i: usize, j: usize) -> bool {
        self.c_squared(i, j) != (RootOfUnity::ONE, vec![i, j])
    }

    /// The first basis triple on which `(c⊗id)(id⊗c)(c⊗id) ≠ (id⊗c)(c⊗id)(id⊗c)`.
    pub fn braid_equation_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let t = (RootOfUnity::ONE, vec![i, j, k]);
                    let lhs = self.apply_c(0, &self.apply_c(1, &self.apply_c(0, &t)));
                    let rhs = self.apply_c(1, &self.apply_c(0, &self.apply_c(1, &t)));
                    if lhs != rhs {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairWitness {
    pub i: usize,
    pub j: usize,
    /// A basis tensor `x ⊗ y` with `(id - c²)(x ⊗ y) ≠ 0`.
    pub witness: Option<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Indecomposability {
    pub indecomposable: bool,
    pub pairs: Vec<PairWitness>,
}

impl Indecomposability {
    /// The first witness found, if any.
    pub fn witness(&self) -> Option<&(String, String)> {
        self.pairs.iter().find_map(|p| p.witness.as_ref())
    }
}

/// The first basis tensor of `block_i ⊗ block_j` not fixed by `c²`.
pub fn pair_witness(space: &BraidedSpace, bi: usize, bj: usize) -> Option<(usize, usize)> {
    space.block(bi).flat_map(|x| space.block(bj).map(move |y| (x, y))).find(|&(x, y)| space.c_squared_moves(x, y))
}

/// True iff `(id - c²)(M_i ⊗ M_j) ≠ 0` for every pair of summands.
///
/// With a single summand `M`, reports whether `c²` moves anything in `M ⊗ M`.
pub fn is_braid_indecomposable(space: &BraidedSpace) -> Indecomposability {
    let k = space.block_count();
    let pairs: Vec<(usize, usize)> =
        if k == 1 { vec![(0, 0)] } else { (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect() };
    let pairs: Vec<PairWitness> = pairs
        .into_iter()
        .map(|(i, j)| PairWitness {
            i,
            j,
            witness: pair_witness(space, i, j).map(|(x, y)| (space.label(x).to_string(), space.label(y).to_string())),
        })
        .collect();
    Indecomposability { indecomposable: pairs.iter().all(|p| p.witness.is_some()), pairs }
}
