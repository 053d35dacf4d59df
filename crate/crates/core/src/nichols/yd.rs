use std::collections::{BTreeMap, VecDeque};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::NicholsError;
use crate::exactmath::RootOfUnity;
use crate::groups::FiniteGroup;

/// A monomial matrix: column `v` is sent to `scalar · e_row`, stored as `(row, scalar)`.
pub type Monomial = Vec<(usize, RootOfUnity)>;

fn compose(a: &Monomial, b: &Monomial) -> Monomial {
    b.iter().map(|&(r, s)| (a[r].0, a[r].1 * s)).collect()
}

fn identity(dim: usize) -> Monomial {
    (0..dim).map(|v| (v, RootOfUnity::ONE)).collect()
}

fn is_monomial(m: &Monomial) -> bool {
    let mut rows: Vec<usize> = m.iter().map(|&(r, _)| r).collect();
    rows.sort_unstable();
    rows.iter().enumerate().all(|(i, &r)| i == r)
}

/// A monomial representation of the centralizer `G^s`, stored on every centralizer element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialRep {
    dim: usize,
    images: Vec<Option<Monomial>>,
}

impl MonomialRep {
    /// Extends images of generators of `G^s` to the whole centralizer.
    ///
    /// Fails with `NotARepresentation` if the generators do not generate `G^s`,
    /// or if two words for the same element give different matrices.
    pub fn from_generators(group: &FiniteGroup, s: usize, gens: &[(usize, Monomial)]) -> Result<Self, NicholsError> {
        let dim = gens.first().map(|(_, m)| m.len()).unwrap_or(1);
        for (g, m) in gens {
            if m.len() != dim || !is_monomial(m) {
                return Err(NicholsError::NotARepresentation(format!("image of {} is not a {dim}×{dim} monomial matrix", group.name(*g))));
            }
            if !group.commute(*g, s) {
                return Err(NicholsError::NotARepresentation(format!("{} is not in the centralizer", group.name(*g))));
            }
        }
        let mut images: Vec<Option<Monomial>> = vec![None; group.order()];
        images[group.identity()] = Some(identity(dim));
        let mut queue = VecDeque::from([group.identity()]);
        while let Some(a) = queue.pop_front() {
            let ma = images[a].clone().unwrap();
            for (g, mg) in gens {
                let b = group.mul(a, *g);
                let mb = compose(&ma, mg);
                match &images[b] {
                    None => {
                        images[b] = Some(mb);
                        queue.push_back(b);
                    }
                    Some(old) if *old != mb => {
                        return Err(NicholsError::NotARepresentation(format!(
                            "two words for {} give different matrices",
                            group.name(b)
                        )))
                    }
                    Some(_) => {}
                }
            }
        }
        let centralizer = group.centralizer(s);
        if centralizer.iter().any(|&c| images[c].is_none()) {
            return Err(NicholsError::NotARepresentation("generators do not generate the centralizer".into()));
        }
        Ok(MonomialRep { dim, images })
    }

    /// A degree-1 character given by its values on generators of `G^s`.
    pub fn character(group: &FiniteGroup, s: usize, values: &[(usize, RootOfUnity)]) -> Result<Self, NicholsError> {
        let gens: Vec<(usize, Monomial)> = values.iter().map(|&(g, r)| (g, vec![(0, r)])).collect();
        Self::from_generators(group, s, &gens).map_err(|e| match e {
            NicholsError::NotARepresentation(msg) => NicholsError::NotACharacter(msg),
            e => e,
        })
    }

    /// A character given on every centralizer element; checked for multiplicativity.
    pub fn character_from_fn(group: &FiniteGroup, s: usize, chi: impl Fn(usize) -> RootOfUnity) -> Result<Self, NicholsError> {
        let cent = group.centralizer(s);
        for &a in &cent {
            for &b in &cent {
                if chi(group.mul(a, b)) != chi(a) * chi(b) {
                    return Err(NicholsError::NotACharacter(format!(
                        "rho({}·{}) != rho({})·rho({})",
                        group.name(a),
                        group.name(b),
                        group.name(a),
                        group.name(b)
                    )));
                }
            }
        }
        let mut images = vec![None; group.order()];
        for &a in &cent {
            images[a] = Some(vec![(0, chi(a))]);
        }
        Ok(MonomialRep { dim: 1, images })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `ρ(h)` for `h` in the centralizer.
    pub fn image(&self, h: usize) -> &Monomial {
        self.images[h].as_ref().expect("element outside the centralizer")
    }

    /// `ρ(h)(0)` for a degree-1 character.
    pub fn value(&self, h: usize) -> Option<RootOfUnity> {
        if self.dim != 1 {
            return None;
        }
        self.images[h].as_ref().map(|m| m[0].1)
    }
}

/// The irreducible Yetter-Drinfeld module `M(O_s, ρ)`.
///
/// The basis vector `i·dim ρ + v` is `g_i ⊗ e_v` of degree `t_i = g_i s g_i^{-1}`.
#[derive(Clone, Debug)]
pub struct YDModule {
    pub name: String,
    group: Arc<FiniteGroup>,
    s: usize,
    rho: MonomialRep,
    class: Vec<usize>,
    reps: Vec<usize>,
    vector_names: Vec<String>,
}

impl YDModule {
    pub fn new(group: Arc<FiniteGroup>, s: usize, rho: MonomialRep, vector_names: Vec<String>) -> Result<Self, NicholsError> {
        if vector_names.len() != rho.dim() {
            return Err(NicholsError::BadModule(format!("{} vector names for a {}-dim ρ", vector_names.len(), rho.dim())));
        }
        let data = group.conjugacy_data(s);
        let m = YDModule { name: String::new(), group, s, rho, class: data.class, reps: data.reps, vector_names };
        m.check_compatibility()?;
        Ok(m)
    }

    pub fn named(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn class_rep(&self) -> usize {
        self.s
    }

    pub fn rho(&self) -> &MonomialRep {
        &self.rho
    }

    pub fn class(&self) -> &[usize] {
        &self.class
    }

    pub fn coset_reps(&self) -> &[usize] {
        &self.reps
    }

    pub fn dim(&self) -> usize {
        self.class.len() * self.rho.dim()
    }

    pub fn degree(&self, b: usize) -> usize {
        self.class[b / self.rho.dim()]
    }

    /// Names like `1u1` or `xw3`: coset representative followed by the vector name.
    pub fn label(&self, b: usize) -> String {
        let d = self.rho.dim();
        format!("{}{}", self.group.name(self.reps[b / d]), self.vector_names[b % d])
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.dim()).map(|b| self.label(b)).collect()
    }

    pub fn basis_by_label(&self, label: &str) -> Option<usize> {
        (0..self.dim()).find(|&b| self.label(b) == label)
    }

    /// `g ▷ b = scalar · b'`: with `g g_i = g_j γ`, `g ▷ (g_i v) = g_j (ρ(γ) v)`.
    pub fn act(&self, g: usize, b: usize) -> (RootOfUnity, usize) {
        let d = self.rho.dim();
        let (i, v) = (b / d, b % d);
        let target = self.group.conj(self.group.mul(g, self.reps[i]), self.s);
        let j = self.class.iter().position(|&t| t == target).expect("class is closed under conjugation");
        let gamma = self.group.mul(self.group.inv(self.reps[j]), self.group.mul(g, self.reps[i]));
        let (row, scalar) = self.rho.image(gamma)[v];
        (scalar, j * d + row)
    }

    /// The support: the conjugacy class of `s`.
    pub fn support(&self) -> &[usize] {
        &self.class
    }

    /// Checks `deg(g ▷ b) = g deg(b) g^{-1}` and that `▷` is an action.
    pub fn check_compatibility(&self) -> Result<(), NicholsError> {
        let n = self.group.order();
        for b in 0..self.dim() {
            for g in 0..n {
                let (_, b2) = self.act(g, b);
                if self.degree(b2) != self.group.conj(g, self.degree(b)) {
                    return Err(NicholsError::BadModule(format!("degree of {} ▷ {} is wrong", self.group.name(g), self.label(b))));
                }
                for h in 0..n {
                    let (s1, b1) = self.act(h, b);
                    let (s2, b12) = self.act(g, b1);
                    let (s3, b3) = self.act(self.group.mul(g, h), b);
                    if b12 != b3 || s1 * s2 != s3 {
                        return Err(NicholsError::BadModule("the induced action is not an action".into()));
                    }
                }
            }
        }
        Ok(())
    }

    /// The module's JSON description.
    pub fn spec(&self) -> ModuleSpec {
        let cent = self.group.centralizer(self.s);
        let gens = minimal_generators(&self.group, &cent);
        let name = |g: usize| self.group.name(g).to_string();
        let (character, representation) = if self.rho.dim() == 1 {
            (Some(gens.iter().map(|&g| (name(g), self.rho.value(g).unwrap())).collect()), None)
        } else {
            (None, Some(gens.iter().map(|&g| (name(g), self.rho.image(g).clone())).collect()))
        };
        ModuleSpec {
            group: group_name(&self.group),
            class_rep: name(self.s),
            character,
            representation,
            vectors: Some(self.vector_names.clone()),
        }
    }
}

fn group_name(g: &FiniteGroup) -> String {
    if g.order() == 8 && crate::groups::is_isomorphic(g, &FiniteGroup::dihedral8()).unwrap_or(false) {
        "D8".into()
    } else {
        format!("order-{}", g.order())
    }
}

/// A small generating set of `subgroup`, taken greedily in index order.
fn minimal_generators(group: &FiniteGroup, subgroup: &[usize]) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut span = vec![group.identity()];
    for &a in subgroup {
        if !span.contains(&a) {
            gens.push(a);
            span = group.generated(&gens);
        }
    }
    gens
}

/// JSON form `{"group": "D8", "class_rep": "x", "character": {"x": "1/2"}}`.
///
/// A higher-dimensional monomial ρ is given under `representation` instead, each
/// generator mapped to its columns `[row, scalar]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleSpec {
    pub group: String,
    pub class_rep: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub character: Option<BTreeMap<String, RootOfUnity>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub representation: Option<BTreeMap<String, Monomial>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vectors: Option<Vec<String>>,
}

impl ModuleSpec {
    pub fn build(&self) -> Result<YDModule, NicholsError> {
        let group = match self.group.as_str() {
            "D8" => Arc::new(FiniteGroup::dihedral8()),
            other => return Err(NicholsError::BadModule(format!("unknown group {other:?}"))),
        };
        let s = group.element_by_name(&self.class_rep)?;
        let rho = match (&self.character, &self.representation) {
            (Some(chi), None) => {
                let vals = chi
                    .iter()
                    .map(|(g, r)| Ok((group.element_by_name(g)?, *r)))
                    .collect::<Result<Vec<_>, NicholsError>>()?;
                MonomialRep::character(&group, s, &vals)?
            }
            (None, Some(rep)) => {
                let gens = rep
                    .iter()
                    .map(|(g, m)| Ok((group.element_by_name(g)?, m.clone())))
                    .collect::<Result<Vec<_>, NicholsError>>()?;
                MonomialRep::from_generators(&group, s, &gens)?
            }
            _ => return Err(NicholsError::BadModule("give exactly one of character or representation".into())),
        };
        let names = match &self.vectors {
            Some(v) => v.clone(),
            None if rho.dim() == 1 => vec!["v".into()],
            None => (1..=rho.dim()).map(|k| format!("v{k}")).collect(),
        };
        YDModule::new(group, s, rho, names)
    }
}

/// `M(O_s, ρ)` for a degree-1 character `ρ` of `G^s`.
pub fn yd_module(group: Arc<FiniteGroup>, s: usize, rho: impl Fn(usize) -> RootOfUnity) -> Result<YDModule, NicholsError> {
    let rep = MonomialRep::character_from_fn(&group, s, rho)?;
    YDModule::new(group, s, rep, vec!["v".into()])
}
