use serde::Serialize;

use super::yd::YDModule;
use super::{CartanEntry, NicholsError};
use crate::exactmath::RootOfUnity;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeStyle {
    Solid,
    Dashed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SkeletonVertex {
    pub module: String,
    pub points: usize,
    /// `σ_i(s_i)`, present only for one-dimensional summands.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<RootOfUnity>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SkeletonEdge {
    pub i: usize,
    pub j: usize,
    /// `a_ij a_ji`.
    pub count: i64,
    pub style: EdgeStyle,
    /// Set to the target vertex when `a_ij = -1` and `a_ji < -1` (or the reverse).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oriented_towards: Option<usize>,
    /// `σ_i(s_j) σ_j(s_i)` when one of the two summands is one-dimensional.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<RootOfUnity>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Skeleton {
    pub vertices: Vec<SkeletonVertex>,
    pub edges: Vec<SkeletonEdge>,
    /// Every summand is `M(O_s, σ)` with `σ` a character; false when some `ρ` has degree > 1.
    pub characters_only: bool,
}

impl Skeleton {
    pub fn edge(&self, i: usize, j: usize) -> Option<&SkeletonEdge> {
        let (i, j) = (i.min(j), i.max(j));
        self.edges.iter().find(|e| e.i == i && e.j == j)
    }

    pub fn solid_edges(&self) -> usize {
        self.edges.iter().filter(|e| e.style == EdgeStyle::Solid).count()
    }

    pub fn dashed_edges(&self) -> usize {
        self.edges.iter().filter(|e| e.style == EdgeStyle::Dashed).count()
    }
}

fn supports_commute(a: &YDModule, b: &YDModule) -> bool {
    let g = a.group();
    a.support().iter().all(|&s| b.support().iter().all(|&t| g.commute(s, t)))
}

/// `σ_i(t)` for a one-dimensional `M_i` and `t` in the centralizer of `s_i`.
fn sigma(m: &YDModule, t: usize) -> Option<RootOfUnity> {
    if m.dim() != 1 || !m.group().commute(m.class_rep(), t) {
        return None;
    }
    m.rho().value(t)
}

/// The skeleton graph of `modules` with Cartan matrix `cartan`.
///
/// Fails with `NotASkeleton` when some `a_ij ≠ 0` has neither `a_ij` nor `a_ji` equal to `-1`.
pub fn skeleton(modules: &[YDModule], cartan: &[Vec<CartanEntry>]) -> Result<Skeleton, NicholsError> {
    let n = modules.len();
    let val = |i: usize, j: usize| cartan[i][j].value().unwrap_or(i64::MIN);
    for i in 0..n {
        for j in i + 1..n {
            if cartan[i][j] != CartanEntry::Value(0) && cartan[i][j] != CartanEntry::Value(-1) && cartan[j][i] != CartanEntry::Value(-1) {
                return Err(NicholsError::NotASkeleton { i, j, a_ij: cartan[i][j], a_ji: cartan[j][i] });
            }
        }
    }
    let vertices = modules
        .iter()
        .enumerate()
        .map(|(k, m)| SkeletonVertex {
            module: if m.name.is_empty() { format!("M{}", k + 1) } else { m.name.clone() },
            points: m.dim(),
            label: if m.dim() == 1 { m.rho().value(m.class_rep()) } else { None },
        })
        .collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let (aij, aji) = (val(i, j), val(j, i));
            if aij >= 0 {
                continue;
            }
            let oriented_towards = if aij == -1 && aji < -1 {
                Some(j)
            } else if aji == -1 && aij < -1 {
                Some(i)
            } else {
                None
            };
            let label = match (sigma(&modules[i], modules[j].class_rep()), sigma(&modules[j], modules[i].class_rep())) {
                (Some(a), Some(b)) => Some(a * b),
                _ => None,
            };
            edges.push(SkeletonEdge {
                i,
                j,
                count: aij * aji,
                style: if supports_commute(&modules[i], &modules[j]) { EdgeStyle::Solid } else { EdgeStyle::Dashed },
                oriented_towards,
                label,
            });
        }
    }
    Ok(Skeleton { vertices, edges, characters_only: modules.iter().all(|m| m.rho().dim() == 1) })
}
