use serde::{Deserialize, Serialize};

use super::{FiniteGroup, GroupError};
use crate::exactmath::RootOfUnity;

/// `Z_{m_1} × ... × Z_{m_n}` with `m_i | m_{i+1}`.
///
/// Elements are exponent vectors `(i_1, ..., i_n)` with `0 <= i_l < m_l`; their
/// index is the mixed-radix number with `i_1` most significant, so index 0 is the identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct FiniteAbelianGroup {
    factors: Vec<u64>,
}

impl TryFrom<Vec<u64>> for FiniteAbelianGroup {
    type Error = GroupError;
    fn try_from(v: Vec<u64>) -> Result<Self, GroupError> {
        FiniteAbelianGroup::new(v)
    }
}

impl From<FiniteAbelianGroup> for Vec<u64> {
    fn from(g: FiniteAbelianGroup) -> Vec<u64> {
        g.factors
    }
}

impl FiniteAbelianGroup {
    /// The empty factor list gives the trivial group.
    pub fn new(factors: Vec<u64>) -> Result<Self, GroupError> {
        if let Some(&m) = factors.iter().find(|&&m| m < 2) {
            return Err(GroupError::BadFactor(m));
        }
        if let Some(i) = factors.windows(2).position(|w| w[1] % w[0] != 0) {
            return Err(GroupError::ChainViolation {
                index: i + 1,
                left: factors[i],
                right: factors[i + 1],
            });
        }
        Ok(FiniteAbelianGroup { factors })
    }

    pub fn cyclic(m: u64) -> Result<Self, GroupError> {
        Self::new(vec![m])
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> usize {
        self.factors.iter().product::<u64>() as usize
    }

    pub fn index_of(&self, e: &[u64]) -> usize {
        e.iter()
            .zip(&self.factors)
            .fold(0usize, |acc, (&x, &m)| acc * m as usize + (x % m) as usize)
    }

    pub fn element(&self, mut idx: usize) -> Vec<u64> {
        let mut e = vec![0; self.factors.len()];
        for (slot, &m) in e.iter_mut().zip(&self.factors).rev() {
            *slot = (idx % m as usize) as u64;
            idx /= m as usize;
        }
        e
    }

    pub fn elements(&self) -> impl Iterator<Item = Vec<u64>> + '_ {
        (0..self.order()).map(|i| self.element(i))
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter().zip(b).zip(&self.factors).map(|((x, y), m)| (x + y) % m).collect()
    }

    pub fn inv(&self, a: &[u64]) -> Vec<u64> {
        a.iter().zip(&self.factors).map(|(x, m)| (m - x % m) % m).collect()
    }

    /// Value of the character with exponent vector `chi` at `e`: `∏ ζ_{m_l}^{chi_l e_l}`.
    ///
    /// Characters of this group are indexed by the same exponent vectors as its elements.
    pub fn character(&self, chi: &[u64], e: &[u64]) -> RootOfUnity {
        chi.iter()
            .zip(e)
            .zip(&self.factors)
            .map(|((c, x), &m)| RootOfUnity::zeta(m, ((c * x) % m) as i64))
            .product()
    }

    fn element_name(&self, e: &[u64]) -> String {
        let parts: Vec<String> = e
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(l, &x)| if x == 1 { format!("g{}", l + 1) } else { format!("g{}^{x}", l + 1) })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" ")
        }
    }

    /// Cayley-table form with the same element indexing.
    pub fn to_finite_group(&self) -> FiniteGroup {
        let n = self.order();
        let elems: Vec<Vec<u64>> = self.elements().collect();
        let mut table = vec![0usize; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = self.index_of(&self.mul(&elems[a], &elems[b]));
            }
        }
        let names = elems.iter().map(|e| self.element_name(e)).collect();
        FiniteGroup::from_construction(table, names)
    }
}
